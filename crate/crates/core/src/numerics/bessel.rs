//! Bessel functions of the first kind `J_ν(w)` for real `ν > −1` and complex `w`.
//!
//! Three routes: the Maclaurin series (accepted when its cancellation is
//! mild), the large-argument Hankel form, and Miller's backward recurrence
//! normalized either by a directly computed low order or by the Neumann sum
//! `(w/2)^ν / Γ(ν+1) = Σ_k v_k J_{ν+2k}(w)`.

use num_complex::Complex64;

use super::gamma::ln_gamma;
use super::NumericsError;

const EPS: f64 = f64::EPSILON;
/// Relative error at which a direct route is trusted.
const ACCEPT: f64 = 1e-13;
const RESCALE: f64 = 1e100;
const NEUMANN_MAX_TOP: usize = 400;

/// `mantissa · e^{log_scale}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

impl Scaled {
    pub fn value(self) -> Complex64 {
        self.mantissa * self.log_scale.exp()
    }

    pub fn ln_abs(self) -> f64 {
        self.mantissa.norm().ln() + self.log_scale
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BesselMethod {
    Series,
    Hankel,
    Miller,
}

/// One value with its estimated relative error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselValue {
    pub value: Scaled,
    pub rel_err: f64,
    pub method: BesselMethod,
}

/// `J_{ν0+k}(w)` for `k = 0..=count`, sharing one scale factor.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselSequence {
    pub nu0: f64,
    pub mantissas: Vec<Complex64>,
    pub log_scale: f64,
    pub rel_err: f64,
    pub method: BesselMethod,
}

impl BesselSequence {
    pub fn get(&self, k: usize) -> Complex64 {
        self.mantissas[k] * self.log_scale.exp()
    }
}

#[derive(Default)]
struct Kahan {
    sum: Complex64,
    comp: Complex64,
}

impl Kahan {
    fn add(&mut self, x: Complex64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

fn check_order(nu: f64) -> Result<(), NumericsError> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(NumericsError::Domain(format!("Bessel order must exceed -1, got {nu}")));
    }
    Ok(())
}

fn at_origin(nu: f64) -> Result<BesselValue, NumericsError> {
    let v = if nu == 0.0 {
        1.0
    } else if nu > 0.0 {
        0.0
    } else {
        return Err(NumericsError::Domain(format!("J_{nu}(0) is infinite")));
    };
    Ok(BesselValue {
        value: Scaled {
            mantissa: Complex64::new(v, 0.0),
            log_scale: 0.0,
        },
        rel_err: 0.0,
        method: BesselMethod::Series,
    })
}

/// Maclaurin series `(w/2)^ν Σ (−w²/4)^k / (k! Γ(ν+k+1))`.
pub fn series(nu: f64, w: Complex64) -> Result<BesselValue, NumericsError> {
    check_order(nu)?;
    if w.norm() == 0.0 {
        return at_origin(nu);
    }
    let scale = w.im.abs();
    let mut t = ((w / 2.0).ln() * nu - ln_gamma(nu + 1.0)? - scale).exp();
    let q = -(w * w) / 4.0;
    let mut sum = Kahan::default();
    let mut abs_sum = 0.0;
    let turning = q.norm();
    for k in 1..10_000u32 {
        sum.add(t);
        abs_sum += t.norm();
        let kf = k as f64;
        t *= q / (kf * (nu + kf));
        if kf * (nu + kf) > turning && t.norm() <= EPS * 1e-2 * sum.sum.norm() {
            break;
        }
    }
    let s = sum.sum;
    let rel_err = if s.norm() > 0.0 {
        4.0 * EPS * abs_sum / s.norm()
    } else {
        f64::INFINITY
    };
    Ok(BesselValue {
        value: Scaled {
            mantissa: s,
            log_scale: scale,
        },
        rel_err,
        method: BesselMethod::Series,
    })
}

/// Hankel's large-argument form `√(2/(πw)) (P cos χ − Q sin χ)`,
/// `χ = w − νπ/2 − π/4`.
pub fn hankel(nu: f64, w: Complex64) -> Result<BesselValue, NumericsError> {
    check_order(nu)?;
    if w.norm() == 0.0 {
        return Ok(BesselValue {
            value: Scaled {
                mantissa: Complex64::new(f64::NAN, 0.0),
                log_scale: 0.0,
            },
            rel_err: f64::INFINITY,
            method: BesselMethod::Hankel,
        });
    }
    if w.re < 0.0 {
        // J_ν(w) = e^{±iνπ} J_ν(−w) for ±Im w ≥ 0
        let inner = hankel(nu, -w)?;
        let sign = if w.im >= 0.0 { 1.0 } else { -1.0 };
        let phase = Complex64::from_polar(1.0, sign * nu * std::f64::consts::PI);
        return Ok(BesselValue {
            value: Scaled {
                mantissa: inner.value.mantissa * phase,
                log_scale: inner.value.log_scale,
            },
            ..inner
        });
    }
    let four_nu2 = 4.0 * nu * nu;
    let inv = 1.0 / w;
    let mut p = Complex64::new(0.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    let mut k = 0u32;
    loop {
        let size = term.norm();
        if size > last || k > 500 {
            break;
        }
        // (−1)^{⌊k/2⌋} a_k(ν) w^{-k} into P for even k, into Q for odd k
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        last = size;
        if size == 0.0 || size < EPS * 1e-3 {
            last = size;
            break;
        }
        k += 1;
        let odd = (2 * k - 1) as f64;
        term *= inv * ((four_nu2 - odd * odd) / (8.0 * k as f64));
    }
    let scale = w.im.abs();
    let chi = w - Complex64::new(nu * std::f64::consts::FRAC_PI_2 + std::f64::consts::FRAC_PI_4, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let e_plus = (i * chi - scale).exp();
    let e_minus = (-i * chi - scale).exp();
    let cos = (e_plus + e_minus) / 2.0;
    let sin = (e_plus - e_minus) / (2.0 * i);
    let pref = (2.0 / (std::f64::consts::PI * w)).sqrt();
    let mant = pref * (p * cos - q * sin);
    let rel_err = if mant.norm() > 0.0 {
        (last.min(1.0) + 8.0 * EPS) * pref.norm() * (cos.norm() + sin.norm()) / mant.norm()
    } else {
        f64::INFINITY
    };
    Ok(BesselValue {
        value: Scaled {
            mantissa: mant,
            log_scale: scale,
        },
        rel_err,
        method: BesselMethod::Hankel,
    })
}

fn best_direct(nu: f64, w: Complex64) -> Result<BesselValue, NumericsError> {
    let s = series(nu, w)?;
    if s.rel_err <= ACCEPT {
        return Ok(s);
    }
    let h = hankel(nu, w)?;
    Ok(if h.rel_err < s.rel_err { h } else { s })
}

/// Top order for the backward recurrence such that `J_{ν0+N}` is negligible
/// against every requested order.
fn miller_top(count: usize, w: Complex64) -> usize {
    let x = w.norm() / 2.0;
    let m = count.max(w.norm().ceil() as usize) + 1;
    let mut log_drop = 0.0;
    let mut n = m;
    while log_drop > -60.0 {
        n += 1;
        log_drop += (x / n as f64).ln();
    }
    n + 10
}

struct MillerRun {
    f: Vec<Complex64>,
    neumann: Option<(Complex64, f64)>,
}

fn miller_run(nu0: f64, count: usize, w: Complex64, with_neumann: bool) -> MillerRun {
    let top = miller_top(count, w);
    let two_over_w = 2.0 / w;
    let mut f = vec![Complex64::new(0.0, 0.0); count + 1];
    let mut f_hi = Complex64::new(0.0, 0.0);
    let mut f_cur = Complex64::new(1e-300, 0.0);
    // ln v_k for the Neumann weights, k = index/2
    let ln_v = |k: usize| -> f64 {
        if k == 0 {
            return 0.0;
        }
        let kf = k as f64;
        (nu0 + 2.0 * kf).ln() + ln_gamma(nu0 + kf).unwrap_or(0.0) - ln_gamma(nu0 + 1.0).unwrap_or(0.0)
            - ln_gamma(kf + 1.0).unwrap_or(0.0)
    };
    let mut neu = Kahan::default();
    let mut neu_abs = 0.0;
    let mut idx = top;
    loop {
        if idx <= count {
            f[idx] = f_cur;
        }
        if with_neumann && idx % 2 == 0 {
            let contrib = f_cur * ln_v(idx / 2).exp();
            neu.add(contrib);
            neu_abs += contrib.norm();
        }
        if idx == 0 {
            break;
        }
        let mu = nu0 + idx as f64;
        let f_lo = two_over_w * mu * f_cur - f_hi;
        f_hi = f_cur;
        f_cur = f_lo;
        idx -= 1;
        if f_cur.norm() > RESCALE {
            let s = 1.0 / RESCALE;
            f_cur *= s;
            f_hi *= s;
            for v in f.iter_mut().skip(idx + 1) {
                *v *= s;
            }
            neu.sum *= s;
            neu.comp *= s;
            neu_abs *= s;
        }
    }
    MillerRun {
        f,
        neumann: with_neumann.then_some((neu.sum, neu_abs)),
    }
}

fn neumann_sequence(nu0: f64, count: usize, w: Complex64) -> Result<Option<BesselSequence>, NumericsError> {
    if miller_top(count, w) > NEUMANN_MAX_TOP {
        return Ok(None);
    }
    let run = miller_run(nu0, count, w, true);
    let (sum, abs) = run.neumann.expect("requested");
    if sum.norm() == 0.0 {
        return Ok(None);
    }
    let scale = w.im.abs();
    let target = ((w / 2.0).ln() * nu0 - ln_gamma(nu0 + 1.0)? - scale).exp();
    let factor = target.fdiv(sum);
    Ok(Some(BesselSequence {
        nu0,
        mantissas: run.f.iter().map(|v| v * factor).collect(),
        log_scale: scale,
        rel_err: 8.0 * EPS * abs / sum.norm() + 4.0 * EPS * count as f64,
        method: BesselMethod::Miller,
    }))
}

/// `J_{ν0+k}(w)`, `k = 0..=count`.
pub fn bessel_j_sequence(nu0: f64, count: usize, w: Complex64) -> Result<BesselSequence, NumericsError> {
    check_order(nu0)?;
    if w.norm() == 0.0 {
        let mantissas = (0..=count)
            .map(|k| Ok(at_origin(nu0 + k as f64)?.value.mantissa))
            .collect::<Result<Vec<_>, NumericsError>>()?;
        return Ok(BesselSequence {
            nu0,
            mantissas,
            log_scale: 0.0,
            rel_err: 0.0,
            method: BesselMethod::Series,
        });
    }
    if count == 0 {
        let d = best_direct(nu0, w)?;
        if d.rel_err <= ACCEPT {
            return Ok(BesselSequence {
                nu0,
                mantissas: vec![d.value.mantissa],
                log_scale: d.value.log_scale,
                rel_err: d.rel_err,
                method: d.method,
            });
        }
    }
    let run = miller_run(nu0, count.max(1), w, false);
    // anchor on whichever of the two lowest orders is computed best directly
    let anchors = [best_direct(nu0, w)?, best_direct(nu0 + 1.0, w)?];
    let (k, anchor) = anchors
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.rel_err.total_cmp(&b.1.rel_err))
        .map(|(k, a)| (k, *a))
        .expect("two anchors");
    if anchor.rel_err > ACCEPT {
        if let Some(seq) = neumann_sequence(nu0, count.max(1), w)? {
            if seq.rel_err < anchor.rel_err {
                return Ok(truncate(seq, count));
            }
        }
    }
    let f_anchor = run.f[k];
    if f_anchor.norm() == 0.0 || !anchor.value.mantissa.is_finite() {
        return Err(NumericsError::Overflow(format!("Bessel normalization failed at w = {w}")));
    }
    let factor = anchor.value.mantissa.fdiv(f_anchor);
    let seq = BesselSequence {
        nu0,
        mantissas: run.f.iter().map(|v| v * factor).collect(),
        log_scale: anchor.value.log_scale,
        rel_err: anchor.rel_err + 4.0 * EPS * count as f64,
        method: BesselMethod::Miller,
    };
    Ok(truncate(seq, count))
}

fn truncate(mut seq: BesselSequence, count: usize) -> BesselSequence {
    seq.mantissas.truncate(count + 1);
    seq
}

/// `J_ν(w)` with its error estimate.
pub fn bessel_j_detailed(nu: f64, w: Complex64) -> Result<BesselValue, NumericsError> {
    let seq = bessel_j_sequence(nu, 0, w)?;
    Ok(BesselValue {
        value: Scaled {
            mantissa: seq.mantissas[0],
            log_scale: seq.log_scale,
        },
        rel_err: seq.rel_err,
        method: seq.method,
    })
}

/// `J_ν(w)`.
pub fn bessel_j(nu: f64, w: Complex64) -> Result<Complex64, NumericsError> {
    let v = bessel_j_detailed(nu, w)?.value.value();
    if !v.is_finite() {
        return Err(NumericsError::Overflow(format!("J_{nu}({w}) overflows")));
    }
    Ok(v)
}

/// A single route, for cross-checking.
pub fn bessel_j_by(method: BesselMethod, nu: f64, w: Complex64) -> Result<BesselValue, NumericsError> {
    match method {
        BesselMethod::Series => series(nu, w),
        BesselMethod::Hankel => hankel(nu, w),
        BesselMethod::Miller => {
            let seq = neumann_sequence(nu, 1, w)?.ok_or_else(|| {
                NumericsError::Domain(format!("Neumann normalization not available at w = {w}"))
            })?;
            Ok(BesselValue {
                value: Scaled {
                    mantissa: seq.mantissas[0],
                    log_scale: seq.log_scale,
                },
                rel_err: seq.rel_err,
                method: BesselMethod::Miller,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn origin_and_half_order() {
        assert_eq!(bessel_j(0.0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let x = 2.0f64;
        let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
        assert!(rel(bessel_j(0.5, c(x, 0.0)).unwrap(), c(exact, 0.0)) < 1e-12);
        // terminating Hankel series for ν = 1/2
        assert!(rel(hankel(0.5, c(x, 0.0)).unwrap().value.value(), c(exact, 0.0)) < 1e-14);
    }

    #[test]
    fn real_on_real_axis() {
        let v = bessel_j(1.3, c(7.5, 0.0)).unwrap();
        assert!(v.im.abs() < 1e-15 * v.re.abs().max(1.0));
    }

    #[test]
    fn reference_values() {
        // references from a 40-digit evaluation
        let cases = [
            (0.0, c(1.0, 0.0), c(0.765_197_686_557_966_6, 0.0)),
            (0.3, c(30.0, 0.0), c(-0.130_110_791_424_175_47, 0.0)),
            (2.5, c(3.0, 4.0), c(3.967_307_975_128_096_4, 4.355_646_112_647_406)),
            (-0.5, c(10.0, 10.0), c(-1324.922_622_301_866_8, 1924.735_520_100_133)),
            (40.5, c(12.0, -3.0), c(-9.447_305_448_601_057e-18, 5.156_903_222_642_57e-19)),
        ];
        for (nu, w, want) in cases {
            let got = bessel_j(nu, w).unwrap();
            assert!(rel(got, want) < 1e-11, "nu = {nu}, w = {w}: {got} vs {want}");
        }
    }

    #[test]
    fn routes_agree_where_valid() {
        for &(nu, w) in &[(0.3, c(25.0, 0.5)), (1.0, c(18.0, -2.0)), (0.0, c(40.0, 0.0))] {
            let h = hankel(nu, w).unwrap();
            let m = bessel_j_by(BesselMethod::Miller, nu, w).unwrap();
            assert!(h.rel_err < 1e-12 && m.rel_err < 1e-12);
            assert!(rel(h.value.value(), m.value.value()) < 1e-11, "nu = {nu}, w = {w}");
        }
    }

    #[test]
    fn series_near_real_axis_is_flagged() {
        // cancellation in the Maclaurin series at |w| = 30 on the real axis
        let s = series(0.3, c(30.0, 0.0)).unwrap();
        assert!(s.rel_err > 1e-6);
        let good = bessel_j_detailed(0.3, c(30.0, 0.0)).unwrap();
        assert!(good.rel_err < 1e-12);
        // no jump when crossing |w| = 30
        let a = bessel_j(0.3, c(30.0 - 1e-9, 0.0)).unwrap();
        let b = bessel_j(0.3, c(30.0 + 1e-9, 0.0)).unwrap();
        assert!((a - b).norm() < 1e-9);
    }

    #[test]
    fn sequence_matches_single_values() {
        let w = c(9.0, 4.0);
        let seq = bessel_j_sequence(0.5, 30, w).unwrap();
        for k in [0usize, 1, 7, 15, 30] {
            let single = bessel_j(0.5 + k as f64, w).unwrap();
            assert!(rel(seq.get(k), single) < 1e-11, "k = {k}");
        }
    }

    #[test]
    fn large_imaginary_argument_is_scaled() {
        let w = c(0.0, 900.0);
        let v = bessel_j_detailed(0.0, w).unwrap();
        assert!(v.value.log_scale >= 900.0);
        // I_0(900) ~ e^900 / √(2π·900)
        let expect = -0.5 * (2.0 * std::f64::consts::PI * 900.0).ln();
        assert!((v.value.ln_abs() - 900.0 - expect).abs() < 1e-3);
        assert!(bessel_j(0.0, w).is_err());
    }
}
