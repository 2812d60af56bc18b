use crate::algebra::{Branch, Monomial, Rational, SymCoeff, Var};

use super::expansion::expand_b_with_offset;
use super::{ExpansionCoeffSet, ExpansionError, ExpansionKind, HalfPlane, PhasedCoeff};

/// Common-factor coefficients: `B̂_{2m} = B_{2m}`, `B̂_{2m+1} = ±i B_{2m+1}`
/// for `±Im z > 0`. The `±i` is stored as a quarter-turn phase.
pub fn to_hat_b(b: &ExpansionCoeffSet, half_plane: HalfPlane) -> Result<ExpansionCoeffSet, ExpansionError> {
    if b.kind != ExpansionKind::B {
        return Err(ExpansionError::WrongKind {
            expected: ExpansionKind::B,
            found: b.kind,
        });
    }
    let odd_phase = match half_plane {
        HalfPlane::Upper => 1,
        HalfPlane::Lower => 3,
    };
    let coeffs = b
        .coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| PhasedCoeff {
            quarter_turns: if m % 2 == 1 {
                (c.quarter_turns + odd_phase) % 4
            } else {
                c.quarter_turns
            },
            coeff: c.coeff.clone(),
        })
        .collect();
    Ok(ExpansionCoeffSet {
        kind: match half_plane {
            HalfPlane::Upper => ExpansionKind::BHatUpper,
            HalfPlane::Lower => ExpansionKind::BHatLower,
        },
        coeffs,
        alpha_symbolic: b.alpha_symbolic,
    })
}

/// Rewrite one phased coefficient from `w = √z` to `w = √(−z)`, using
/// `√z = ±i √(−z)` for `±Im z > 0`, and absorb the resulting powers of `i`.
fn rewrite_one(c: &PhasedCoeff, half_plane: HalfPlane, index: usize) -> Result<PhasedCoeff, ExpansionError> {
    if c.coeff.branch() == Branch::SqrtNegZ {
        return Ok(c.clone());
    }
    let s = half_plane.sign();
    let mut parity: Option<i32> = None;
    let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(c.coeff.len());
    for (m, r) in c.coeff.terms() {
        let q = (c.quarter_turns as i32 + s * m.exp(Var::W)).rem_euclid(4);
        match parity {
            None => parity = Some(q % 2),
            Some(p) if p != q % 2 => return Err(ExpansionError::MixedPhase { index }),
            _ => {}
        }
        // i^q = ±1 (q even) or ±i (q odd); the ±i part is kept as one common phase
        let sign = if q >= 2 { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
        terms.push((*m, r * sign));
    }
    let quarter_turns = if parity == Some(1) { 1 } else { 0 };
    let coeff = SymCoeff::from_terms(terms, Branch::SqrtZ).retag_unchecked(Branch::SqrtNegZ);
    Ok(PhasedCoeff { quarter_turns, coeff })
}

/// Half-plane free form of a `B̂` set: every coefficient in `√(−z)` with the
/// explicit `±i` eliminated.
pub fn rewrite_neg_z(set: &ExpansionCoeffSet) -> Result<ExpansionCoeffSet, ExpansionError> {
    let half_plane = match set.kind {
        ExpansionKind::BHatUpper => HalfPlane::Upper,
        ExpansionKind::BHatLower => HalfPlane::Lower,
        other => {
            return Err(ExpansionError::WrongKind {
                expected: ExpansionKind::BHatUpper,
                found: other,
            })
        }
    };
    let coeffs = set
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| rewrite_one(c, half_plane, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExpansionCoeffSet {
        kind: set.kind,
        coeffs,
        alpha_symbolic: set.alpha_symbolic,
    })
}

/// `B̂_0..B̂_{count−1}` in `√(−z)` form for `κ = n + offset`, where `offset`
/// is given with branch `√z` (it must not involve `w`).
pub fn hat_b_neg_z(count: usize, offset: &SymCoeff) -> Result<Vec<SymCoeff>, ExpansionError> {
    let offset = offset.with_branch(Branch::SqrtZ)?;
    let b = ExpansionCoeffSet {
        kind: ExpansionKind::B,
        coeffs: expand_b_with_offset(count, &offset)?
            .into_iter()
            .map(PhasedCoeff::real)
            .collect(),
        alpha_symbolic: true,
    };
    let hat = rewrite_neg_z(&to_hat_b(&b, HalfPlane::Upper)?)?;
    let out = hat.real_coeffs()?;
    debug_assert!(out.iter().all(|c| c.branch() == Branch::SqrtNegZ));
    Ok(out)
}
