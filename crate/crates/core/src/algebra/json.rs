use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Branch, Monomial, Rational, SymCoeff, Var};

fn is_zero_exp(p: &i32) -> bool {
    *p == 0
}

/// One term of a serialized [`SymCoeff`]. `p_alpha` and `p_w` are always
/// written; other exponents only when nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub p_alpha: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_beta: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_j: i32,
    pub p_w: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_nu: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_c: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_a: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_ell: i32,
    #[serde(default, skip_serializing_if = "is_zero_exp")]
    pub p_x: i32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymCoeffJson {
    pub branch_tag: Branch,
    pub terms: Vec<TermRecord>,
}

impl From<&SymCoeff> for SymCoeffJson {
    fn from(c: &SymCoeff) -> Self {
        let terms = c
            .terms()
            .map(|(m, r)| TermRecord {
                p_alpha: m.exp(Var::Alpha),
                p_beta: m.exp(Var::Beta),
                p_j: m.exp(Var::J),
                p_w: m.exp(Var::W),
                p_nu: m.exp(Var::Nu),
                p_c: m.exp(Var::C),
                p_a: m.exp(Var::A),
                p_ell: m.exp(Var::Ell),
                p_x: m.exp(Var::X),
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            })
            .collect();
        SymCoeffJson {
            branch_tag: c.branch(),
            terms,
        }
    }
}

impl TryFrom<SymCoeffJson> for SymCoeff {
    type Error = AlgebraError;

    fn try_from(j: SymCoeffJson) -> Result<Self, AlgebraError> {
        let mut out = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("denominator {:?}", t.den)))?;
            if den <= BigInt::from(0) {
                return Err(AlgebraError::Parse(format!("denominator {den} must be positive")));
            }
            let r = Rational::new(num, den);
            if r.numer().to_string() != t.num || r.denom().to_string() != t.den {
                return Err(AlgebraError::Parse(format!(
                    "fraction {}/{} not in lowest terms",
                    t.num, t.den
                )));
            }
            if r == Rational::from_integer(0.into()) {
                return Err(AlgebraError::Parse("zero coefficient stored".into()));
            }
            let m = Monomial::one()
                .with(Var::Alpha, t.p_alpha)
                .with(Var::Beta, t.p_beta)
                .with(Var::J, t.p_j)
                .with(Var::W, t.p_w)
                .with(Var::Nu, t.p_nu)
                .with(Var::C, t.p_c)
                .with(Var::A, t.p_a)
                .with(Var::Ell, t.p_ell)
                .with(Var::X, t.p_x);
            out.push((m, r));
        }
        let n = out.len();
        let c = SymCoeff::from_terms(out, j.branch_tag);
        if c.len() != n {
            return Err(AlgebraError::Parse("duplicate monomial".into()));
        }
        Ok(c)
    }
}

impl Serialize for SymCoeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymCoeffJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymCoeff {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SymCoeffJson::deserialize(d)?;
        SymCoeff::try_from(j).map_err(serde::de::Error::custom)
    }
}
