//! Exact arithmetic substrate.
//!
//! [`SymCoeff`] is a sparse Laurent polynomial with rational coefficients in a
//! fixed set of symbols ([`Var`]). The symbol [`Var::W`] stands for a square
//! root of the complex variable; which root is recorded by the [`Branch`] tag.
//! [`NSeries`] is a truncated formal power series whose coefficients are
//! [`SymCoeff`] values.

mod json;
mod series;
mod symcoeff;

pub use json::{SymCoeffJson, TermRecord};
pub use series::{NSeries, SeriesVar};
pub use symcoeff::{gen_binomial, Branch, Monomial, Point, SymCoeff, Var, NVARS};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive};

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("branch tag mismatch: {left:?} vs {right:?}")]
    BranchMismatch { left: Branch, right: Branch },
    #[error("series variable mismatch: {left:?} vs {right:?}")]
    SeriesVarMismatch { left: SeriesVar, right: SeriesVar },
    #[error("negative power of {var:?} where a polynomial was required")]
    NegativePower { var: Var },
    #[error("odd power of w cannot be evaluated from z alone")]
    OddRootPower,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("order underflow: coefficient {requested} requested, series truncated at {available}")]
    OrderUnderflow { requested: usize, available: usize },
    #[error("malformed coefficient record: {0}")]
    Parse(String),
}

/// `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Result<Rational, AlgebraError> {
    Rational::from_f64(x).ok_or_else(|| AlgebraError::Domain(format!("non-finite value {x}")))
}

/// Nearest double to an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Very large numerator/denominator: scale both down to keep the ratio.
    let n_bits = r.numer().bits() as i64;
    let d_bits = r.denom().bits() as i64;
    let shift_n = (n_bits - 900).max(0) as usize;
    let shift_d = (d_bits - 900).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi(shift_n as i32 - shift_d as i32)
}

/// `z^{-m/2} ∫₀^z p(u) u^{m/2-1} du` for `p` a polynomial in `u = w²`.
///
/// Term by term `u^k ↦ z^k / (k + m/2)`, so the result is again a polynomial
/// in `z`. Negative or odd powers of `w` make the integral ill-defined.
pub fn poly_integrate_buchholz(p: &SymCoeff, m: u32) -> Result<SymCoeff, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::Domain("integration index must be positive".into()));
    }
    let mut terms = Vec::with_capacity(p.len());
    for (mono, r) in p.terms() {
        let e = mono.exp(Var::W);
        if e < 0 {
            return Err(AlgebraError::Domain(format!(
                "integrand has u^{} which diverges at 0",
                e as f64 / 2.0
            )));
        }
        if e % 2 != 0 {
            return Err(AlgebraError::OddRootPower);
        }
        // 1/(k + m/2) = 2/(2k + m), with 2k = e
        let factor = Rational::new(BigInt::from(2), BigInt::from(e as i64 + m as i64));
        terms.push((*mono, r * factor));
    }
    Ok(SymCoeff::from_terms(terms, p.branch()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Branch = Branch::SqrtZ;

    #[test]
    fn integrate_constant() {
        let r = poly_integrate_buchholz(&SymCoeff::one(B), 2).unwrap();
        assert_eq!(r, SymCoeff::one(B));
    }

    #[test]
    fn integrate_linear_half_weight() {
        let r = poly_integrate_buchholz(&SymCoeff::z(B), 1).unwrap();
        assert_eq!(r, SymCoeff::z(B).scale(&rat(2, 3)));
    }

    #[test]
    fn integrate_rejects_divergent_and_odd_powers() {
        assert!(matches!(
            poly_integrate_buchholz(&SymCoeff::w_pow(-2, B), 1),
            Err(AlgebraError::Domain(_))
        ));
        assert_eq!(
            poly_integrate_buchholz(&SymCoeff::w_pow(1, B), 1),
            Err(AlgebraError::OddRootPower)
        );
    }

    #[test]
    fn rational_round_trip_through_f64() {
        let r = rational_from_f64(0.3).unwrap();
        assert_eq!(rational_to_f64(&r), 0.3);
        assert!(rational_from_f64(f64::NAN).is_err());
    }
}
