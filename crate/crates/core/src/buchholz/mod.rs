//! Bessel-type expansion of `L_n^{(α)}(z)` and the coefficients derived from it.
//!
//! The convergent expansion
//!
//! ```text
//! L_n^{(α)}(z) = Γ(n+α+1)/n! · e^{z/2} (κz)^{-α/2} Σ_m (z/4κ)^{m/2} P_m(α+1, z) J_{m+α}(2√(κz)),
//! κ = n + (α+1)/2,
//! ```
//!
//! is re-expanded in powers of `n^{-1/2}` by replacing every Bessel function
//! by its large-argument form. The cosine/sine form gives the `B_m`
//! coefficients, the common-factor form away from `[0, ∞)` gives `B̂_m`, and
//! a further re-expansion of the prefactor gives the Perron coefficients
//! `C_m`.

mod expansion;
mod hat;
mod perron;
mod polys;

pub use expansion::{assemble_s, expand_b, expand_b_with_offset, AssembledS};
pub use hat::{hat_b_neg_z, rewrite_neg_z, to_hat_b};
pub use perron::perron_c;
pub(crate) use expansion::standard_offset as expansion_offset;
pub(crate) use perron::sqrt_difference_exponential;
pub use polys::{bessel_asym_coeff, buchholz_p, tricomi_a, BesselCoeffTable};

use crate::algebra::{AlgebraError, SymCoeff};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("order underflow: coefficient {requested} requested, only {available} available")]
    OrderUnderflow { requested: usize, available: usize },
    #[error("coefficient {index} changed when the κ-expansion order was raised")]
    UnstableTruncation { index: usize },
    #[error("coefficient {index} mixes real and imaginary phases after the √(−z) rewrite")]
    MixedPhase { index: usize },
    #[error("expected a coefficient set of kind {expected:?}, got {found:?}")]
    WrongKind {
        expected: ExpansionKind,
        found: ExpansionKind,
    },
    #[error("invalid request: {0}")]
    Invalid(String),
}

/// Which family a coefficient set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ExpansionKind {
    /// Cosine/sine form.
    #[serde(rename = "B")]
    B,
    /// Common-factor form for `Im z > 0`.
    #[serde(rename = "B_HAT_UPPER")]
    BHatUpper,
    /// Common-factor form for `Im z < 0`.
    #[serde(rename = "B_HAT_LOWER")]
    BHatLower,
    /// Perron form.
    #[serde(rename = "C_PERRON")]
    CPerron,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfPlane {
    Upper,
    Lower,
}

impl HalfPlane {
    /// `+1` for the upper half-plane, `-1` for the lower.
    pub fn sign(self) -> i32 {
        match self {
            HalfPlane::Upper => 1,
            HalfPlane::Lower => -1,
        }
    }
}

/// A coefficient multiplied by `i^quarter_turns`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PhasedCoeff {
    pub quarter_turns: u8,
    pub coeff: SymCoeff,
}

impl PhasedCoeff {
    pub fn real(coeff: SymCoeff) -> Self {
        PhasedCoeff {
            quarter_turns: 0,
            coeff,
        }
    }

    /// `i^quarter_turns` as a complex number.
    pub fn phase(&self) -> num_complex::Complex64 {
        use num_complex::Complex64;
        match self.quarter_turns % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

/// An indexed family of expansion coefficients, `coeffs[m]` for `m = 0..len`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ExpansionCoeffSet {
    pub kind: ExpansionKind,
    pub coeffs: Vec<PhasedCoeff>,
    pub alpha_symbolic: bool,
}

impl ExpansionCoeffSet {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, m: usize) -> Result<&PhasedCoeff, ExpansionError> {
        self.coeffs.get(m).ok_or(ExpansionError::OrderUnderflow {
            requested: m,
            available: self.coeffs.len(),
        })
    }

    /// The plain coefficients, requiring every phase to be trivial.
    pub fn real_coeffs(&self) -> Result<Vec<SymCoeff>, ExpansionError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.quarter_turns % 4 == 0 {
                    Ok(c.coeff.clone())
                } else {
                    Err(ExpansionError::MixedPhase { index: i })
                }
            })
            .collect()
    }
}
