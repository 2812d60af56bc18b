use crate::algebra::{rat, Branch, NSeries, SeriesVar, SymCoeff, Var};
use crate::ratio::gamma_ratio_g;

use super::expansion::standard_offset;
use super::hat::hat_b_neg_z;
use super::{ExpansionCoeffSet, ExpansionError, ExpansionKind, PhasedCoeff};

const N: Branch = Branch::SqrtNegZ;

/// Perron coefficients `C_0..C_{d−1}` in `√(−z)` form.
///
/// The common-factor prefactor `Γ(n+α+1)/n! · (−κz)^{-α/2-1/4} e^{2√(−κz)}`
/// divided by `(−z)^{-α/2-1/4} n^{α/2-1/4} e^{2√(−nz)}` equals
///
/// ```text
/// [Γ(n+α+1)/Γ(n+1) n^{-α}] · (1 + (α+1)/(2n))^{-α/2-1/4} · exp(2√(−z)√n (√(1+(α+1)/(2n)) − 1)),
/// ```
///
/// which is expanded in `n^{-1/2}` and multiplied into `Σ B̂_m n^{-m/2}`.
pub fn perron_c(d: usize) -> Result<ExpansionCoeffSet, ExpansionError> {
    if d == 0 {
        return Err(ExpansionError::Invalid("Perron truncation order must be at least 1".into()));
    }
    let order = d - 1;
    let prefactor = prefactor_ratio(order)?;
    let hat = hat_b_neg_z(d, &standard_offset(Branch::SqrtZ))?;
    let hat = NSeries::from_coeffs(SeriesVar::InvSqrtN, order, N, hat)?;
    let c = prefactor.mul(&hat)?;
    Ok(ExpansionCoeffSet {
        kind: ExpansionKind::CPerron,
        coeffs: c.into_coeffs().into_iter().map(PhasedCoeff::real).collect(),
        alpha_symbolic: true,
    })
}

fn prefactor_ratio(order: usize) -> Result<NSeries, ExpansionError> {
    let offset = standard_offset(N);
    let alpha = SymCoeff::var(Var::Alpha, N);

    // Γ(n+α+1)/Γ(n+1) = n^α Σ G_m(α, 0, 0) n^{-m}
    let g = gamma_ratio_g(order / 2)
        .into_iter()
        .map(|c| {
            c.with_branch(N)?
                .substitute_rational(Var::Beta, &rat(0, 1))?
                .substitute_rational(Var::J, &rat(0, 1))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let gamma = NSeries::from_coeffs(SeriesVar::InvSqrtN, order / 2, N, g)?.spread(2, order);

    let base = NSeries::one_plus_monomial(SeriesVar::InvSqrtN, order, offset.clone(), 2);
    let kappa_power = base.pow(&(alpha.scale(&rat(-1, 2)) - SymCoeff::constant(rat(1, 4), N)))?;

    let exp = sqrt_difference_exponential(&offset, None, order)?;

    Ok(gamma.mul(&kappa_power)?.mul(&exp)?)
}

/// `exp(2 √(−z) √n [√(1 + p/n) − √(1 + q/n)])` in powers of `n^{-1/2}`;
/// `q = None` means `q = 0`.
pub(crate) fn sqrt_difference_exponential(
    p: &SymCoeff,
    q: Option<&SymCoeff>,
    order: usize,
) -> Result<NSeries, ExpansionError> {
    let branch = p.branch();
    let root = |c: &SymCoeff| {
        NSeries::one_plus_monomial(SeriesVar::InvSqrtN, order + 1, c.clone(), 2).pow_rational(&rat(1, 2))
    };
    let diff = match q {
        Some(q) => root(p)?.sub(&root(q)?)?,
        None => root(p)?.sub(&NSeries::one(SeriesVar::InvSqrtN, order + 1, branch))?,
    };
    let two_w = SymCoeff::w_pow(1, branch).scale(&rat(2, 1));
    Ok(diff.shift_down()?.scale_by(&two_w)?.exp()?)
}
