use num_complex::Complex64;

use crate::ratio::{ExpVariant, RatioSpec};

use super::eval::RatioTable;
use super::gamma::log_gamma_ratio;
use super::laguerre::laguerre_table;
use super::{CutComplex, NumericsError};

/// Kernel `K_{n−1}^{(0,d)}(x, c)` by several routes, `d = 0..=dmax`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelReport {
    pub n: u64,
    pub alpha: f64,
    /// Termwise differentiated sum `Σ_{k<n} L_k(x) ∂^d L_k(c) / h_k`.
    pub direct: Vec<CutComplex>,
    /// `L_{n−1}(x) L_{n−1−d}^{(α+d)}(c) · [bracket]`, no normalization.
    pub structure: Vec<CutComplex>,
    /// `direct / structure`.
    pub fitted_constant: Vec<CutComplex>,
    /// `d! · n / h_{n−1}`.
    pub reference_constant: Vec<f64>,
    /// Alternating ratio sums for `d = 1..=dmax`.
    pub ratio_sums: Vec<RatioSum>,
}

impl KernelReport {
    pub fn closed_form(&self, d: usize) -> Complex64 {
        self.structure[d].c() * self.reference_constant[d]
    }

    pub fn closed_form_rel_err(&self, d: usize) -> f64 {
        let direct = self.direct[d].c();
        (self.closed_form(d) - direct).norm() / direct.norm()
    }
}

/// `Σ_{j=0}^d binom(d,j)(−1)^{j+1} L_{N+j}^{(α+d)}(c) / L_N^{(α+d)}(c)` with `N = n−1−d`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioSum {
    pub d: usize,
    pub value: CutComplex,
    /// Largest `|L_{N+j}/L_N|` among the terms.
    pub largest_term: f64,
    /// Same sum with each ratio replaced by its `U_m` expansion; only off `[0, ∞)`.
    pub estimate: Option<CutComplex>,
}

/// `1/h_k = k!/Γ(k+α+1)`.
fn inv_norm(k: u64, alpha: f64) -> Result<f64, NumericsError> {
    Ok((-log_gamma_ratio(k, alpha, 0.0)?).exp())
}

fn binomial(d: usize, j: usize) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (d - i) as f64 / (i + 1) as f64)
}

pub fn kernel_and_derivatives(
    n: u64,
    alpha: f64,
    x: CutComplex,
    c: CutComplex,
    dmax: usize,
) -> Result<KernelReport, NumericsError> {
    if dmax > 2 {
        return Err(NumericsError::Domain(format!("derivative order at most 2, got {dmax}")));
    }
    if n < dmax as u64 + 2 {
        return Err(NumericsError::Domain(format!("need n ≥ {}, got {n}", dmax + 2)));
    }
    if x == c {
        return Err(NumericsError::Domain("confluent kernel x = c is not implemented".into()));
    }
    let nu = n as usize;
    let lx = laguerre_table(n, alpha, x)?;
    let lc: Vec<Vec<Complex64>> = (0..=dmax)
        .map(|s| laguerre_table(n, alpha + s as f64, c))
        .collect::<Result<_, _>>()?;
    let inv_h: Vec<f64> = (0..n).map(|k| inv_norm(k, alpha)).collect::<Result<_, _>>()?;

    let direct: Vec<Complex64> = (0..=dmax)
        .map(|d| {
            let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
            (d..nu).map(|k| lx[k] * lc[d][k - d] * inv_h[k] * sign).sum()
        })
        .collect();

    let h = x.c() - c.c();
    let rx = lx[nu] / lx[nu - 1];
    let r0 = lc[0][nu] / lc[0][nu - 1];
    let mut structure = vec![(lx[nu - 1] * lc[0][nu] - lx[nu] * lc[0][nu - 1]) / h];
    if dmax >= 1 {
        let r1 = lc[1][nu - 1] / lc[1][nu - 2];
        let bracket = (r1 - 1.0) * (r0 - rx) / (h * h) + (rx - r1) / h;
        structure.push(lx[nu - 1] * lc[1][nu - 2] * bracket);
    }
    if dmax >= 2 {
        let r1 = lc[1][nu - 1] / lc[1][nu - 2];
        let base = lc[2][nu - 3];
        let q1 = lc[2][nu - 2] / base;
        let q2 = lc[2][nu - 1] / base;
        let bracket = (q2 - 2.0 * q1 + 1.0) * (r0 - rx) / (h * h * h) - (q1 - 1.0) * (r1 - rx) / (h * h)
            + (q1 - rx) / (2.0 * h);
        structure.push(lx[nu - 1] * base * bracket);
    }

    let a = n as f64 * inv_h[nu - 1];
    let reference_constant: Vec<f64> = (0..=dmax).map(|d| a * [1.0, 1.0, 2.0][d]).collect();
    let fitted_constant = direct.iter().zip(&structure).map(|(d, s)| (d / s).into()).collect();

    let ratio_sums = (1..=dmax)
        .map(|d| ratio_sum(n, alpha, d, c))
        .collect::<Result<_, _>>()?;

    Ok(KernelReport {
        n,
        alpha,
        direct: direct.into_iter().map(Into::into).collect(),
        structure: structure.into_iter().map(Into::into).collect(),
        fitted_constant,
        reference_constant,
        ratio_sums,
    })
}

/// The alternating sum for one `d`, with its expansion estimate when `c ∉ [0, ∞)`.
pub fn ratio_sum(n: u64, alpha: f64, d: usize, c: CutComplex) -> Result<RatioSum, NumericsError> {
    if n < d as u64 + 2 {
        return Err(NumericsError::Domain(format!("need n ≥ {}, got {n}", d + 2)));
    }
    let base_n = n - 1 - d as u64;
    let shifted = alpha + d as f64;
    let table = laguerre_table(n - 1, shifted, c)?;
    let base = table[base_n as usize];
    let mut value = Complex64::new(0.0, 0.0);
    let mut largest_term = 0.0f64;
    for j in 0..=d {
        let r = table[base_n as usize + j] / base;
        largest_term = largest_term.max(r.norm());
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        value += binomial(d, j) * sign * r;
    }
    let estimate = if c.on_positive_axis() || base_n == 0 {
        None
    } else {
        // the n^{-d/2} coefficient is the first that survives, keep one more
        let order = d + 2;
        let ratios = RatioTable::new(order, ExpVariant::Kappa)?;
        let mut est = Complex64::new(0.0, 0.0);
        for j in 0..=d {
            let spec = RatioSpec {
                alpha: shifted,
                beta: shifted,
                j: j as f64,
                d: order,
            };
            let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
            est += binomial(d, j) * sign * ratios.eval(base_n, &spec, c)?.result.value.c();
        }
        Some(est.into())
    };
    Ok(RatioSum {
        d,
        value: value.into(),
        largest_term,
        estimate,
    })
}

/// Structure relation residual `|L_n^{(α)} − L_n^{(α+1)} + L_{n−1}^{(α+1)}| / |L_n^{(α)}|`.
pub fn structure_relation_residual(n: u64, alpha: f64, z: CutComplex) -> Result<f64, NumericsError> {
    if n == 0 {
        return Err(NumericsError::Domain("structure relation needs n ≥ 1".into()));
    }
    let a = laguerre_table(n, alpha, z)?;
    let b = laguerre_table(n, alpha + 1.0, z)?;
    let nu = n as usize;
    let scale = a[nu].norm().max(b[nu].norm());
    Ok((a[nu] - b[nu] + b[nu - 1]).norm() / scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zc(re: f64, im: f64) -> CutComplex {
        CutComplex::new(re, im)
    }

    #[test]
    fn cd_form_matches_direct_sum() {
        let r = kernel_and_derivatives(20, 0.5, zc(-1.0, 0.0), zc(-2.0, 0.0), 0).unwrap();
        assert!(r.closed_form_rel_err(0) < 1e-10, "{}", r.closed_form_rel_err(0));
    }

    #[test]
    fn brackets_match_up_to_one_constant() {
        let c = zc(-1.5, 0.0);
        let first = kernel_and_derivatives(50, 0.5, zc(-0.4, 0.0), c, 2).unwrap();
        for x in [zc(2.0, 0.0), zc(-3.0, 1.0), zc(0.5, -0.25)] {
            let r = kernel_and_derivatives(50, 0.5, x, c, 2).unwrap();
            for d in 0..=2 {
                let k0 = first.fitted_constant[d].c();
                let diff = (r.fitted_constant[d].c() - k0).norm() / k0.norm();
                assert!(diff < 1e-8, "d={d} x={x}: {diff}");
            }
        }
    }

    #[test]
    fn fitted_constant_is_the_norm_ratio() {
        let r = kernel_and_derivatives(50, 0.5, zc(1.0, 0.5), zc(-1.0, 0.0), 2).unwrap();
        for d in 0..=2 {
            assert!(r.closed_form_rel_err(d) < 1e-9, "d={d}: {}", r.closed_form_rel_err(d));
        }
    }

    #[test]
    fn second_ratio_sum_cancels() {
        let c = zc(-1.0, 0.0);
        let a = ratio_sum(100, 0.0, 2, c).unwrap();
        let b = ratio_sum(400, 0.0, 2, c).unwrap();
        assert!(a.largest_term > 1.0);
        let drop = a.value.norm() / b.value.norm();
        assert!((drop - 4.0).abs() < 0.5, "{drop}");
    }

    #[test]
    fn ratio_sum_estimate() {
        let s = ratio_sum(100, 0.0, 1, zc(-1.0, 0.0)).unwrap();
        let est = s.estimate.unwrap();
        let diff = (s.value.c() - est.c()).norm();
        assert!(diff < 0.1 / 100f64.sqrt(), "{} vs {}", s.value, est);
    }

    #[test]
    fn structure_relation() {
        for z in [zc(0.3, 0.0), zc(-4.0, 2.0), zc(7.0, -1.0)] {
            assert!(structure_relation_residual(40, 0.7, z).unwrap() < 1e-12);
        }
    }

    #[test]
    fn rejects_confluent_point() {
        assert!(kernel_and_derivatives(10, 0.0, zc(1.0, 0.0), zc(1.0, 0.0), 1).is_err());
    }
}
