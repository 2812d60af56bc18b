use crate::algebra::{rat, Branch, NSeries, Rational, SeriesVar, SymCoeff, Var};

use super::polys::{bessel_asym_coeff, buchholz_p, BesselCoeffTable};
use super::{ExpansionCoeffSet, ExpansionError, ExpansionKind, PhasedCoeff};

const B: Branch = Branch::SqrtZ;

/// The order-`N` group of the re-expanded Bessel sum, written as
/// `S_N = κ^{-N/2} · coeff`, where `coeff` depends on `(α, w = √z)` only.
///
/// For even `N` it multiplies `cos ω`, for odd `N` it multiplies `sin ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssembledS {
    pub order: usize,
    pub coeff: SymCoeff,
}

fn alternating_sum(order: usize, p: &[SymCoeff], a: &BesselCoeffTable) -> SymCoeff {
    let z = SymCoeff::z(B);
    let alpha_plus_one = &SymCoeff::var(Var::Alpha, B) + &SymCoeff::one(B);
    let mut sum = SymCoeff::zero(B);
    for m in 0..=order {
        let pm = p[m]
            .substitute(Var::C, &alpha_plus_one)
            .expect("P_m is a polynomial in c");
        let term = &(&z.pow(m as u32) * &pm) * &a.at_alpha_plus(order - m, m as i64);
        sum = if m % 2 == 0 { sum + term } else { sum - term };
    }
    sum
}

/// `S_d` from the Buchholz polynomials and the Bessel coefficients.
///
/// Even `d = 2M`: `(−4κz)^{-M} Σ_{m=0}^{2M} (−1)^m z^m P_m(α+1,z) a_{2M−m}(α+m)`.
/// Odd `d = 2M+1`: `(−1)^{M+1} (4κz)^{-M-1/2} Σ_{m=0}^{2M+1} (−1)^m z^m P_m(α+1,z) a_{2M+1−m}(α+m)`.
pub fn assemble_s(d: usize) -> AssembledS {
    let p = buchholz_p(d);
    let a = bessel_asym_coeff(d);
    assemble_s_from(d, &p, &a)
}

fn assemble_s_from(d: usize, p: &[SymCoeff], a: &BesselCoeffTable) -> AssembledS {
    let sum = alternating_sum(d, p, a);
    let big_m = (d / 2) as i32;
    let prefactor = if d % 2 == 0 {
        // (−1/4)^M w^{−2M}
        let sign = if big_m % 2 == 0 { 1 } else { -1 };
        SymCoeff::w_pow(-2 * big_m, B).scale(&Rational::new(
            sign.into(),
            num_bigint::BigInt::from(4).pow(big_m as u32),
        ))
    } else {
        // (−1)^{M+1} 2^{−(2M+1)} w^{−(2M+1)}
        let sign = if (big_m + 1) % 2 == 0 { 1 } else { -1 };
        SymCoeff::w_pow(-(2 * big_m + 1), B).scale(&Rational::new(
            sign.into(),
            num_bigint::BigInt::from(2).pow((2 * big_m + 1) as u32),
        ))
    };
    AssembledS {
        order: d,
        coeff: &prefactor * &sum,
    }
}

fn combine(groups: &[AssembledS], count: usize, offset: &SymCoeff) -> Result<Vec<SymCoeff>, ExpansionError> {
    let max_order = count.saturating_sub(1);
    // κ = n(1 + offset·n^{-1}), so κ^{-N/2} = x^N (1 + offset x²)^{-N/2} with x = n^{-1/2}
    let base = NSeries::one_plus_monomial(SeriesVar::InvSqrtN, max_order, offset.clone(), 2);
    let mut out = vec![SymCoeff::zero(B); count];
    for g in groups.iter().filter(|g| g.order < count) {
        let expo = Rational::new((-(g.order as i64)).into(), 2.into());
        let factor = base.pow_rational(&expo)?;
        for (p, slot) in out.iter_mut().enumerate().skip(g.order) {
            let c = factor.coeff(p - g.order)?;
            if !c.is_zero() {
                *slot = &*slot + &(&g.coeff * c);
            }
        }
    }
    Ok(out)
}

/// `B_0..B_{count−1}` for large parameter `κ = n + offset`.
///
/// The usual choice is `offset = (α+1)/2`; a degree shift `n → n + j` is
/// `offset = j + (α+1)/2`.
pub fn expand_b_with_offset(count: usize, offset: &SymCoeff) -> Result<Vec<SymCoeff>, ExpansionError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let extra = count + 2;
    let p = buchholz_p(extra);
    let a = bessel_asym_coeff(extra);
    let groups: Vec<AssembledS> = (0..=extra).map(|d| assemble_s_from(d, &p, &a)).collect();
    let full = combine(&groups, count, offset)?;
    // Raising the κ-order by one must not change anything up to `count`.
    let reduced = combine(&groups[..groups.len() - 1], count, offset)?;
    if let Some(index) = full.iter().zip(&reduced).position(|(x, y)| x != y) {
        return Err(ExpansionError::UnstableTruncation { index });
    }
    Ok(full)
}

/// The default large parameter offset `(α+1)/2`.
pub(crate) fn standard_offset(branch: Branch) -> SymCoeff {
    (&SymCoeff::var(Var::Alpha, branch) + &SymCoeff::one(branch)).scale(&rat(1, 2))
}

/// `B_0..B_{2d+1}`: cosine coefficients `B_{2m}` and sine coefficients
/// `B_{2m+1}` for `m = 0..=d`.
pub fn expand_b(d: usize) -> Result<ExpansionCoeffSet, ExpansionError> {
    let coeffs = expand_b_with_offset(2 * d + 2, &standard_offset(B))?;
    Ok(ExpansionCoeffSet {
        kind: ExpansionKind::B,
        coeffs: coeffs.into_iter().map(PhasedCoeff::real).collect(),
        alpha_symbolic: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn alpha() -> SymCoeff {
        SymCoeff::var(Var::Alpha, B)
    }
    fn z() -> SymCoeff {
        SymCoeff::z(B)
    }
    fn k(n: i64) -> SymCoeff {
        SymCoeff::integer(n, B)
    }

    #[test]
    fn s0_is_one() {
        assert_eq!(assemble_s(0).coeff, SymCoeff::one(B));
    }

    #[test]
    fn s1_hand_substitution() {
        // −(4z)^{-1/2} [(4α²−1)/8 − z²/6]
        let inner = (alpha().pow(2).scale(&int(4)) - k(1)).scale(&rat(1, 8)) - z().pow(2).scale(&rat(1, 6));
        let expected = (&SymCoeff::w_pow(-1, B) * &inner).scale(&rat(-1, 2));
        assert_eq!(assemble_s(1).coeff, expected);
    }

    #[test]
    fn s2_contains_cubic_term_of_b2() {
        let s2 = assemble_s(2).coeff;
        assert_eq!(
            s2.coeff(&crate::algebra::Monomial::var(Var::W, 6)),
            rat(-1, 288)
        );
    }

    #[test]
    fn b0_b1_b2() {
        let b = expand_b(1).unwrap().real_coeffs().unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b[0], SymCoeff::one(B));
        let b1 = (&(z().pow(2).scale(&int(4)) - alpha().pow(2).scale(&int(12)) + k(3))
            * &SymCoeff::w_pow(-1, B))
            .scale(&rat(1, 48));
        assert_eq!(b[1], b1);
        let four_a2 = alpha().pow(2).scale(&int(4));
        let b2 = z().pow(3).scale(&rat(-1, 288))
            + (&(&four_a2 + &k(11)) * &z()).scale(&rat(1, 192))
            - (&(&(&four_a2 - &k(1)) * &(&four_a2 - &k(9))) * &SymCoeff::w_pow(-2, B))
                .scale(&rat(1, 512));
        assert_eq!(b[2], b2);
    }

    #[test]
    fn missing_index_is_an_order_underflow() {
        let set = expand_b(0).unwrap();
        assert!(matches!(
            set.get(2),
            Err(ExpansionError::OrderUnderflow { requested: 2, .. })
        ));
    }
}
