//! Ratio asymptotics `L_{n+j}^{(α)}(z) / L_n^{(β)}(z)` away from `[0, ∞)`.
//!
//! The ratio is `(−z/n)^{(β−α)/2} Σ U_m n^{-m/2}`, where the `U_m` come from
//! convolving four series in `n^{-1/2}`:
//!
//! 1. the two Gamma quotients (via generalized Bernoulli polynomials),
//! 2. the quotient of κ-powers `κ(n,β)^{β/2+1/4} / κ(n+j,α)^{α/2+1/4}`,
//! 3. the exponential `exp(2√(−κ(n+j,α) z) − 2√(−κ(n,β) z))`,
//! 4. the quotient `D` of the two common-factor sums `Σ B̂_k`.

use crate::algebra::{
    gen_binomial, int, rat, rational_from_f64, Branch, NSeries, Rational, SeriesVar, SymCoeff, Var,
};
use crate::buchholz::{hat_b_neg_z, ExpansionError};

const B: Branch = Branch::SqrtZ;
const N: Branch = Branch::SqrtNegZ;

fn sym(v: Var, branch: Branch) -> SymCoeff {
    SymCoeff::var(v, branch)
}

/// Generalized Bernoulli polynomials `B_n^{(ℓ)}(x)`, `n = 0..=max`, as
/// polynomials in `(ℓ, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBernoulliTable {
    pub b: Vec<SymCoeff>,
}

/// Coefficients of `(t/(e^t − 1))^ℓ e^{xt} = Σ B_n^{(ℓ)}(x) tⁿ/n!`.
pub fn gen_bernoulli(max_n: usize) -> GenBernoulliTable {
    // (e^t − 1)/t = Σ t^k/(k+1)!
    let mut fact = Rational::from_integer(1.into());
    let mut q = Vec::with_capacity(max_n + 1);
    for k in 0..=max_n {
        fact *= int(k as i64 + 1);
        q.push(SymCoeff::constant(fact.recip(), B));
    }
    let q = NSeries::from_coeffs(SeriesVar::T, max_n, B, q).expect("branch is uniform");
    let ell = sym(Var::Ell, B);
    let power = q
        .log()
        .and_then(|l| l.scale_by(&-ell))
        .and_then(|l| l.exp())
        .expect("(e^t−1)/t has constant term 1");
    let x_shift = NSeries::from_coeffs(SeriesVar::T, max_n, B, vec![SymCoeff::zero(B), sym(Var::X, B)])
        .and_then(|s| s.exp())
        .expect("x t has zero constant term");
    let prod = power.mul(&x_shift).expect("same series variable");
    let mut fact = Rational::from_integer(1.into());
    let b = prod
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact *= int(n as i64);
            }
            c.scale(&fact)
        })
        .collect();
    GenBernoulliTable { b }
}

/// `G_m(α, β, j)` with `Γ(n+j+α+1)/Γ(n+β+1) ~ n^{j+α−β} Σ G_m n^{-m}`.
///
/// `G_m = binom(j+α−β, m) · B_m^{(j+α−β+1)}(j+α+1)`.
pub fn gamma_ratio_g(max_m: usize) -> Vec<SymCoeff> {
    let table = gen_bernoulli(max_m);
    let alpha = sym(Var::Alpha, B);
    let beta = sym(Var::Beta, B);
    let j = sym(Var::J, B);
    let top = &(&j + &alpha) - &beta;
    let ell = &top + &SymCoeff::one(B);
    let x = &(&j + &alpha) + &SymCoeff::one(B);
    table
        .b
        .iter()
        .enumerate()
        .map(|(m, bm)| {
            let poly = bm
                .substitute(Var::Ell, &ell)
                .and_then(|p| p.substitute(Var::X, &x))
                .expect("Bernoulli polynomials are polynomials");
            &gen_binomial(&top, m as u32) * &poly
        })
        .collect()
}

/// Closed form of the κ-power ratio coefficients `A_m(j, α, β)`:
///
/// `((2j+α+1)/2)^m Σ_k (−1)^{m−k} binom(β/2+1/4, k) binom(m−k+α/2−3/4, m−k) ((β+1)/(2j+α+1))^k`.
///
/// Symbolically the `(2j+α+1)^{-k}` cancels against the leading power, so
/// every coefficient is a polynomial.
pub fn kappa_power_ratio_a(max_m: usize) -> Vec<SymCoeff> {
    let alpha = sym(Var::Alpha, B);
    let beta = sym(Var::Beta, B);
    let j = sym(Var::J, B);
    let p = &(&j.scale(&int(2)) + &alpha) + &SymCoeff::one(B);
    let q = &beta + &SymCoeff::one(B);
    let top_beta = &beta.scale(&rat(1, 2)) + &SymCoeff::constant(rat(1, 4), B);
    (0..=max_m)
        .map(|m| {
            let mut sum = SymCoeff::zero(B);
            for k in 0..=m {
                let r = m - k;
                let top_alpha = &alpha.scale(&rat(1, 2)) + &SymCoeff::constant(rat(4 * r as i64 - 3, 4), B);
                let term = &(&gen_binomial(&top_beta, k as u32) * &gen_binomial(&top_alpha, r as u32))
                    * &(&p.pow(r as u32) * &q.pow(k as u32));
                sum = if r % 2 == 0 { sum + term } else { sum - term };
            }
            sum.scale(&Rational::new(1.into(), num_bigint::BigInt::from(2).pow(m as u32)))
        })
        .collect()
}

/// The same coefficients from the product of the two binomial series
/// `(1 + (β+1)/(2n))^{β/2+1/4} (1 + (2j+α+1)/(2n))^{-α/2-1/4}`.
pub fn kappa_power_ratio_a_product(max_m: usize) -> Vec<SymCoeff> {
    let alpha = sym(Var::Alpha, B);
    let beta = sym(Var::Beta, B);
    let j = sym(Var::J, B);
    let half = rat(1, 2);
    let p = (&(&j.scale(&int(2)) + &alpha) + &SymCoeff::one(B)).scale(&half);
    let q = (&beta + &SymCoeff::one(B)).scale(&half);
    let quarter = SymCoeff::constant(rat(1, 4), B);
    let num = NSeries::one_plus_monomial(SeriesVar::T, max_m, q, 1)
        .pow(&(&beta.scale(&half) + &quarter))
        .expect("constant term 1");
    let den = NSeries::one_plus_monomial(SeriesVar::T, max_m, p, 1)
        .pow(&(-(&alpha.scale(&half) + &quarter)))
        .expect("constant term 1");
    num.mul(&den).expect("same series variable").into_coeffs()
}

/// Numerical `A_m(j, α, β)` from the closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KappaCoefficient {
    pub value: f64,
    /// The closed form was singular (`2j+α+1 = 0`) and the product route
    /// was used instead.
    pub fallback: bool,
}

pub fn kappa_power_ratio_a_numeric(m: usize, j: f64, alpha: f64, beta: f64) -> KappaCoefficient {
    let p = 2.0 * j + alpha + 1.0;
    if p == 0.0 {
        let coeffs = kappa_power_ratio_a_product(m);
        let point = crate::algebra::Point::new()
            .with(Var::Alpha, alpha)
            .with(Var::Beta, beta)
            .with(Var::J, j);
        return KappaCoefficient {
            value: coeffs[m].eval(&point).re,
            fallback: true,
        };
    }
    let binom = |x: f64, k: usize| -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i as f64 + 1.0))
    };
    let ratio = (beta + 1.0) / p;
    let mut sum = 0.0;
    for k in 0..=m {
        let r = m - k;
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign
            * binom(beta / 2.0 + 0.25, k)
            * binom(r as f64 + alpha / 2.0 - 0.75, r)
            * ratio.powi(k as i32);
    }
    KappaCoefficient {
        value: (p / 2.0).powi(m as i32) * sum,
        fallback: false,
    }
}

/// Which exponential accompanies the `B̂` quotient in the prefactor ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ExpVariant {
    /// `exp(2√(−(n+j)z) − 2√(−nz))`.
    N,
    /// `exp(2√(−κ(n+j,α)z) − 2√(−κ(n,β)z))`, the exponential that belongs
    /// to the common-factor form of both polynomials.
    #[default]
    Kappa,
}

/// The exponential part of the prefactor ratio in powers of `n^{-1/2}`,
/// coefficients `0..d` in `(α, β, j, w = √(−z))`.
pub fn exp_prefactor_series(d: usize, variant: ExpVariant) -> Result<NSeries, ExpansionError> {
    if d == 0 {
        return Err(ExpansionError::Invalid("truncation order must be at least 1".into()));
    }
    let order = d - 1;
    let j = sym(Var::J, N);
    match variant {
        ExpVariant::N => crate::buchholz::sqrt_difference_exponential(&j, None, order),
        ExpVariant::Kappa => {
            let half = rat(1, 2);
            let p = &j + &(&sym(Var::Alpha, N) + &SymCoeff::one(N)).scale(&half);
            let q = (&sym(Var::Beta, N) + &SymCoeff::one(N)).scale(&half);
            crate::buchholz::sqrt_difference_exponential(&p, Some(&q), order)
        }
    }
}

/// `D_0..D_{count−1}`: the quotient `Σ B̂_k(α; degree n+j) / Σ B̂_k(β; degree n)`
/// in powers of `n^{-1/2}`, in `√(−z)` form.
pub fn ratio_d(count: usize) -> Result<Vec<SymCoeff>, ExpansionError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let order = count - 1;
    let half = rat(1, 2);
    let shifted = &sym(Var::J, B) + &(&sym(Var::Alpha, B) + &SymCoeff::one(B)).scale(&half);
    let standard = (&sym(Var::Alpha, B) + &SymCoeff::one(B)).scale(&half);
    let num = hat_b_neg_z(count, &shifted)?;
    let den: Vec<SymCoeff> = hat_b_neg_z(count, &standard)?
        .into_iter()
        .map(|c| c.rename(Var::Alpha, Var::Beta))
        .collect();
    let num = NSeries::from_coeffs(SeriesVar::InvSqrtN, order, N, num)?;
    let den = NSeries::from_coeffs(SeriesVar::InvSqrtN, order, N, den)?;
    Ok(num.div(&den)?.into_coeffs())
}

/// Symbolic ratio coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCoeffs {
    /// `U_0..U_{d−1}` in `(α, β, j, w = √(−z))`.
    pub u: Vec<SymCoeff>,
    /// Exponent `(β−α)/2` of the separate prefactor `(−z/n)^{(β−α)/2}`.
    pub prefactor_exponent: SymCoeff,
    pub variant: ExpVariant,
}

fn gamma_series(order: usize) -> Result<NSeries, ExpansionError> {
    let half_order = order / 2;
    let g = gamma_ratio_g(half_order);
    let to_series = |coeffs: Vec<SymCoeff>| -> Result<NSeries, ExpansionError> {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.with_branch(N))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(NSeries::from_coeffs(SeriesVar::InvSqrtN, half_order, N, coeffs)?.spread(2, order))
    };
    // Γ(n+j+α+1)/Γ(n+β+1) divided by Γ(n+j+1)/Γ(n+1)
    let zero = rat(0, 1);
    let corollary = g
        .iter()
        .map(|c| {
            c.substitute_rational(Var::Alpha, &zero)
                .and_then(|c| c.substitute_rational(Var::Beta, &zero))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(to_series(g)?.div(&to_series(corollary)?)?)
}

fn kappa_series(order: usize) -> Result<NSeries, ExpansionError> {
    let a = kappa_power_ratio_a(order / 2)
        .into_iter()
        .map(|c| c.with_branch(N))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NSeries::from_coeffs(SeriesVar::InvSqrtN, order / 2, N, a)?.spread(2, order))
}

/// `U_0..U_{d−1}` with symbolic `(α, β, j)`.
pub fn ratio_u(d: usize, variant: ExpVariant) -> Result<RatioCoeffs, ExpansionError> {
    if d == 0 {
        return Err(ExpansionError::Invalid("truncation order must be at least 1".into()));
    }
    let order = d - 1;
    let d_series = NSeries::from_coeffs(SeriesVar::InvSqrtN, order, N, ratio_d(d)?)?;
    let u = gamma_series(order)?
        .mul(&kappa_series(order)?)?
        .mul(&exp_prefactor_series(d, variant)?)?
        .mul(&d_series)?;
    let prefactor_exponent = (&sym(Var::Beta, N) - &sym(Var::Alpha, N)).scale(&rat(1, 2));
    Ok(RatioCoeffs {
        u: u.into_coeffs(),
        prefactor_exponent,
        variant,
    })
}

/// Numerical parameters of a ratio `L_{n+j}^{(α)} / L_n^{(β)}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioSpec {
    pub alpha: f64,
    pub beta: f64,
    pub j: f64,
    pub d: usize,
}

impl RatioSpec {
    pub fn validate(&self) -> Result<(), ExpansionError> {
        if !(self.alpha > -1.0 && self.beta > -1.0) {
            return Err(ExpansionError::Invalid(format!(
                "parameters must exceed -1, got alpha = {}, beta = {}",
                self.alpha, self.beta
            )));
        }
        if !self.j.is_finite() {
            return Err(ExpansionError::Invalid("degree shift must be finite".into()));
        }
        if self.d == 0 {
            return Err(ExpansionError::Invalid("truncation order must be at least 1".into()));
        }
        Ok(())
    }

    /// `j` as an integer, when it is one.
    pub fn integer_shift(&self) -> Option<i64> {
        (self.j.fract() == 0.0 && self.j.abs() < 1e15).then(|| self.j as i64)
    }

    /// Substitute the exact values of `(α, β, j)` into symbolic coefficients,
    /// leaving only `w`.
    pub fn specialize(&self, coeffs: &[SymCoeff]) -> Result<Vec<SymCoeff>, ExpansionError> {
        let a = rational_from_f64(self.alpha)?;
        let b = rational_from_f64(self.beta)?;
        let j = rational_from_f64(self.j)?;
        coeffs
            .iter()
            .map(|c| {
                Ok(c.substitute_rational(Var::Alpha, &a)?
                    .substitute_rational(Var::Beta, &b)?
                    .substitute_rational(Var::J, &j)?)
            })
            .collect()
    }
}

/// `B_n^{(1)}(0)`, the classical Bernoulli numbers with `B_1 = −1/2`.
pub fn classical_bernoulli(max_n: usize) -> Vec<Rational> {
    gen_bernoulli(max_n)
        .b
        .iter()
        .map(|p| {
            p.substitute_rational(Var::Ell, &int(1))
                .and_then(|p| p.substitute_rational(Var::X, &int(0)))
                .ok()
                .and_then(|p| p.as_constant())
                .expect("specializes to a number")
        })
        .collect()
}
