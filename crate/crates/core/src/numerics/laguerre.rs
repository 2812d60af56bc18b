use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{rational_from_f64, rational_to_f64, Rational};

use super::bessel::Scaled;
use super::{CutComplex, NumericsError};

/// Degrees up to which the recurrence is cross-checked against the exact sum.
pub const CROSS_CHECK_MAX_N: u64 = 60;
pub const CROSS_CHECK_TOL: f64 = 1e-9;
const RESCALE: f64 = 1e100;

fn check_alpha(alpha: f64) -> Result<(), NumericsError> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(NumericsError::Domain(format!("parameter must exceed -1, got {alpha}")));
    }
    Ok(())
}

/// `L_n^{(α)}(z)` and its derivative from the forward recurrence
/// `(k+1)L_{k+1} = (2k+α+1−z)L_k − (k+α)L_{k−1}` and its `z`-derivative,
/// sharing one scale factor.
pub fn laguerre_recurrence(n: u64, alpha: f64, z: CutComplex) -> Result<(Scaled, Scaled), NumericsError> {
    check_alpha(alpha)?;
    let z = z.c();
    let one = Complex64::new(1.0, 0.0);
    let (mut l_prev, mut l) = (Complex64::zero(), one);
    let (mut d_prev, mut d) = (Complex64::zero(), Complex64::zero());
    let mut log_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let a = Complex64::new(2.0 * kf + alpha + 1.0, 0.0) - z;
        let b = kf + alpha;
        let next = (a * l - b * l_prev) / (kf + 1.0);
        let d_next = (a * d - l - b * d_prev) / (kf + 1.0);
        l_prev = l;
        l = next;
        d_prev = d;
        d = d_next;
        let big = l.norm().max(d.norm());
        if big > RESCALE {
            let s = 1.0 / RESCALE;
            l *= s;
            l_prev *= s;
            d *= s;
            d_prev *= s;
            log_scale += RESCALE.ln();
        }
    }
    if !l.is_finite() || !d.is_finite() {
        return Err(NumericsError::NonFinite("Laguerre recurrence"));
    }
    Ok((
        Scaled {
            mantissa: l,
            log_scale,
        },
        Scaled {
            mantissa: d,
            log_scale,
        },
    ))
}

/// All `L_0^{(α)}(z), …, L_nmax^{(α)}(z)`; fails on overflow.
pub fn laguerre_table(nmax: u64, alpha: f64, z: CutComplex) -> Result<Vec<Complex64>, NumericsError> {
    check_alpha(alpha)?;
    let zc = z.c();
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(Complex64::new(1.0, 0.0));
    if nmax >= 1 {
        out.push(Complex64::new(alpha + 1.0, 0.0) - zc);
    }
    for k in 1..nmax {
        let kf = k as f64;
        let k_us = k as usize;
        let next = ((Complex64::new(2.0 * kf + alpha + 1.0, 0.0) - zc) * out[k_us] - (kf + alpha) * out[k_us - 1])
            / (kf + 1.0);
        if !next.is_finite() {
            return Err(NumericsError::Overflow(format!("L_{} at z = {z}", k + 1)));
        }
        out.push(next);
    }
    Ok(out)
}

/// Terminating sum `Σ_k (−1)^k binom(n+α, n−k) z^k / k!` in exact rational
/// arithmetic on the exact binary values of `α` and `z`.
pub fn laguerre_exact_sum(n: u64, alpha: f64, z: CutComplex) -> Result<Complex64, NumericsError> {
    check_alpha(alpha)?;
    let a = rational_from_f64(alpha)?;
    let zr = rational_from_f64(z.re)?;
    let zi = rational_from_f64(z.im)?;
    // c_0 = binom(n+α, n) = Π_{i=1}^{n} (α+i)/i
    let mut c0 = Rational::one();
    for i in 1..=n {
        let i = Rational::from_integer((i as i64).into());
        c0 = c0 * (&a + &i) / i;
    }
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    coeffs.push(c0);
    for k in 0..n {
        let kk = Rational::from_integer((k as i64).into());
        let num = -Rational::from_integer(((n - k) as i64).into());
        let den = (&a + &kk + Rational::one()) * (&kk + Rational::one());
        let next = &coeffs[k as usize] * num / den;
        coeffs.push(next);
    }
    let (mut sr, mut si) = (coeffs[n as usize].clone(), Rational::zero());
    for c in coeffs.iter().rev().skip(1) {
        let nr = &sr * &zr - &si * &zi + c;
        let ni = &sr * &zi + &si * &zr;
        sr = nr;
        si = ni;
    }
    Ok(Complex64::new(rational_to_f64(&sr), rational_to_f64(&si)))
}

fn relative_difference(a: Complex64, b: Complex64) -> f64 {
    let d = (a - b).norm();
    let s = b.norm();
    if s == 0.0 {
        d
    } else {
        d / s
    }
}

/// Relative difference between the recurrence and the exact sum.
pub fn oracle_consistency(n: u64, alpha: f64, z: CutComplex) -> Result<f64, NumericsError> {
    let (l, _) = laguerre_recurrence(n, alpha, z)?;
    Ok(relative_difference(l.value(), laguerre_exact_sum(n, alpha, z)?))
}

/// `L_n^{(α)}(z)` in scaled form, cross-checked for `n ≤ 60`.
pub fn laguerre_oracle_scaled(n: u64, alpha: f64, z: CutComplex) -> Result<Scaled, NumericsError> {
    let (l, _) = laguerre_recurrence(n, alpha, z)?;
    if n <= CROSS_CHECK_MAX_N {
        let exact = laguerre_exact_sum(n, alpha, z)?;
        let rel_diff = relative_difference(l.value(), exact);
        if rel_diff > CROSS_CHECK_TOL {
            return Err(NumericsError::OracleInconsistency { n, alpha, z, rel_diff });
        }
    }
    Ok(l)
}

/// `L_n^{(α)}(z)`.
pub fn laguerre_oracle(n: u64, alpha: f64, z: CutComplex) -> Result<Complex64, NumericsError> {
    let v = laguerre_oracle_scaled(n, alpha, z)?.value();
    if !v.is_finite() {
        return Err(NumericsError::Overflow(format!("L_{n}^({alpha})({z})")));
    }
    Ok(v)
}

/// `d/dz L_n^{(α)}(z)` from the differentiated recurrence.
pub fn laguerre_derivative(n: u64, alpha: f64, z: CutComplex) -> Result<Complex64, NumericsError> {
    let (_, d) = laguerre_recurrence(n, alpha, z)?;
    let v = d.value();
    if !v.is_finite() {
        return Err(NumericsError::Overflow(format!("derivative of L_{n}^({alpha})({z})")));
    }
    Ok(v)
}

/// `Γ(n+α+1) / (n! Γ(α+1))`, the value at the origin.
pub fn laguerre_at_origin(n: u64, alpha: f64) -> Result<f64, NumericsError> {
    Ok((super::log_gamma_ratio(n, alpha, 0.0)? - super::ln_gamma(alpha + 1.0)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> CutComplex {
        CutComplex::new(re, im)
    }

    #[test]
    fn low_degrees() {
        let p = z(0.7, -1.2);
        assert_eq!(laguerre_oracle(0, 0.3, p).unwrap(), Complex64::new(1.0, 0.0));
        let l1 = laguerre_oracle(1, 0.3, p).unwrap();
        assert!((l1 - (Complex64::new(1.3, 0.0) - p.c())).norm() < 1e-15);
    }

    #[test]
    fn value_at_origin() {
        // binom(7.5, 7) = Γ(8.5)/(7! Γ(1.5))
        let got = laguerre_oracle(7, 0.5, z(0.0, 0.0)).unwrap();
        let want = laguerre_at_origin(7, 0.5).unwrap();
        let exact: f64 = (1..=7).map(|i| (0.5 + i as f64) / i as f64).product();
        assert!((got.re - exact).abs() < 1e-13 * exact);
        assert!((want - exact).abs() < 1e-13 * exact);
    }

    #[test]
    fn exact_sum_matches_recurrence_on_a_grid() {
        for &alpha in &[-0.5, 0.0, 0.5, 3.0] {
            for &(re, im) in &[(-5.0, 0.0), (5.0, 0.0), (2.5, -2.5), (0.0, 5.0)] {
                for n in [1u64, 13, 60] {
                    let d = oracle_consistency(n, alpha, z(re, im)).unwrap();
                    assert!(d < 1e-9, "n = {n}, alpha = {alpha}, z = {re}+{im}i: {d:e}");
                }
            }
        }
    }

    #[test]
    fn derivative_is_hahn_shift() {
        let p = z(-1.5, 0.8);
        for n in [1u64, 5, 40] {
            let d = laguerre_derivative(n, 0.5, p).unwrap();
            let h = laguerre_oracle(n - 1, 1.5, p).unwrap();
            assert!((d + h).norm() <= 1e-10 * h.norm(), "n = {n}");
        }
    }

    #[test]
    fn large_degree_is_scaled() {
        let s = laguerre_oracle_scaled(100_000, 0.0, z(-5.0, 0.0)).unwrap();
        assert!(s.log_scale > 700.0);
        // leading behaviour e^{z/2} e^{2√(−nz)} (−nz)^{-1/4} / (2√π)
        let lead = -2.5 + 2.0 * (5e5f64).sqrt() - 0.25 * (5e5f64).ln() - (2.0 * std::f64::consts::PI.sqrt()).ln();
        assert!((s.ln_abs() - lead).abs() < 1e-2);
        assert!(matches!(laguerre_oracle(100_000, 0.0, z(-5.0, 0.0)), Err(NumericsError::Overflow(_))));
    }

    #[test]
    fn table_matches_oracle() {
        let t = laguerre_table(30, 1.5, z(2.0, 1.0)).unwrap();
        let o = laguerre_oracle(30, 1.5, z(2.0, 1.0)).unwrap();
        assert!((t[30] - o).norm() < 1e-12 * o.norm());
    }
}
