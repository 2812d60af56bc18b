use num_traits::{One, Zero};

use super::{int, AlgebraError, Branch, Rational, SymCoeff};

/// The small parameter of an [`NSeries`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    /// `n^{-1/2}`: coefficient `k` multiplies `n^{-k/2}`.
    InvSqrtN,
    /// A generic formal variable `t`.
    T,
}

/// Truncated formal power series `Σ_{k=0}^{max_order} c_k x^k` with
/// [`SymCoeff`] coefficients.
///
/// Binary operations truncate at the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSeries {
    var: SeriesVar,
    branch: Branch,
    coeffs: Vec<SymCoeff>,
}

impl NSeries {
    pub fn zero(var: SeriesVar, max_order: usize, branch: Branch) -> Self {
        NSeries {
            var,
            branch,
            coeffs: vec![SymCoeff::zero(branch); max_order + 1],
        }
    }

    pub fn one(var: SeriesVar, max_order: usize, branch: Branch) -> Self {
        let mut s = Self::zero(var, max_order, branch);
        s.coeffs[0] = SymCoeff::one(branch);
        s
    }

    /// From explicit coefficients; missing ones up to `max_order` are zero,
    /// extra ones are dropped.
    pub fn from_coeffs(
        var: SeriesVar,
        max_order: usize,
        branch: Branch,
        coeffs: Vec<SymCoeff>,
    ) -> Result<Self, AlgebraError> {
        let mut s = Self::zero(var, max_order, branch);
        for (k, c) in coeffs.into_iter().enumerate().take(max_order + 1) {
            if c.branch() != branch {
                return Err(AlgebraError::BranchMismatch {
                    left: branch,
                    right: c.branch(),
                });
            }
            s.coeffs[k] = c;
        }
        Ok(s)
    }

    /// `1 + c·x^k`.
    pub fn one_plus_monomial(
        var: SeriesVar,
        max_order: usize,
        c: SymCoeff,
        k: usize,
    ) -> Self {
        let branch = c.branch();
        let mut s = Self::one(var, max_order, branch);
        if k <= max_order {
            s.coeffs[k] = &s.coeffs[k] + &c;
        }
        s
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn max_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SymCoeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<SymCoeff> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&SymCoeff, AlgebraError> {
        self.coeffs.get(k).ok_or(AlgebraError::OrderUnderflow {
            requested: k,
            available: self.max_order(),
        })
    }

    pub fn truncate(&self, max_order: usize) -> Result<Self, AlgebraError> {
        if max_order > self.max_order() {
            return Err(AlgebraError::OrderUnderflow {
                requested: max_order,
                available: self.max_order(),
            });
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: self.coeffs[..=max_order].to_vec(),
        })
    }

    fn check(&self, other: &NSeries) -> Result<(), AlgebraError> {
        if self.var != other.var {
            return Err(AlgebraError::SeriesVarMismatch {
                left: self.var,
                right: other.var,
            });
        }
        if self.branch != other.branch {
            return Err(AlgebraError::BranchMismatch {
                left: self.branch,
                right: other.branch,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &NSeries) -> Result<NSeries, AlgebraError> {
        self.check(other)?;
        let order = self.max_order().min(other.max_order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs,
        })
    }

    pub fn sub(&self, other: &NSeries) -> Result<NSeries, AlgebraError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &NSeries) -> Result<NSeries, AlgebraError> {
        self.check(other)?;
        let order = self.max_order().min(other.max_order());
        let mut coeffs = vec![SymCoeff::zero(self.branch); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs,
        })
    }

    pub fn scale(&self, r: &Rational) -> NSeries {
        NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale_by(&self, c: &SymCoeff) -> Result<NSeries, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.try_mul(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs,
        })
    }

    /// Divide by `x`. The constant term must vanish; the order drops by one.
    pub fn shift_down(&self) -> Result<NSeries, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::Domain(
                "cannot divide a series with nonzero constant term by its variable".into(),
            ));
        }
        if self.max_order() == 0 {
            return Err(AlgebraError::OrderUnderflow {
                requested: 1,
                available: 0,
            });
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Substitute `x → x^k` (spreading coefficients), keeping `max_order`.
    pub fn spread(&self, k: usize, max_order: usize) -> NSeries {
        let mut out = NSeries::zero(self.var, max_order, self.branch);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k <= max_order {
                out.coeffs[i * k] = c.clone();
            }
        }
        out
    }

    fn require_unit_constant(&self, what: &str) -> Result<(), AlgebraError> {
        if self.coeffs[0] != SymCoeff::one(self.branch) {
            return Err(AlgebraError::Domain(format!(
                "{what} requires constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        Ok(())
    }

    /// Multiplicative inverse. The constant term must be a nonzero rational.
    pub fn inv(&self) -> Result<NSeries, AlgebraError> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| {
                AlgebraError::Domain("inverse requires a nonzero rational constant term".into())
            })?;
        let inv0 = c0.recip();
        let order = self.max_order();
        let mut out = vec![SymCoeff::zero(self.branch); order + 1];
        out[0] = SymCoeff::constant(inv0.clone(), self.branch);
        for k in 1..=order {
            let mut acc = SymCoeff::zero(self.branch);
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out[k - i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[k - i]);
                }
            }
            out[k] = acc.scale(&-inv0.clone());
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: out,
        })
    }

    pub fn div(&self, other: &NSeries) -> Result<NSeries, AlgebraError> {
        self.mul(&other.inv()?)
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<NSeries, AlgebraError> {
        self.require_unit_constant("log")?;
        let order = self.max_order();
        let mut out = vec![SymCoeff::zero(self.branch); order + 1];
        // k L_k = k S_k − Σ_{i=1}^{k−1} i L_i S_{k−i}
        for k in 1..=order {
            let mut acc = self.coeffs[k].scale(&int(k as i64));
            for i in 1..k {
                if !out[i].is_zero() && !self.coeffs[k - i].is_zero() {
                    acc = &acc - &(&out[i] * &self.coeffs[k - i]).scale(&int(i as i64));
                }
            }
            out[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: out,
        })
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<NSeries, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::Domain(
                "exp requires a vanishing constant term".into(),
            ));
        }
        let order = self.max_order();
        let mut out = vec![SymCoeff::zero(self.branch); order + 1];
        out[0] = SymCoeff::one(self.branch);
        // k E_k = Σ_{i=1}^{k} i F_i E_{k−i}
        for k in 1..=order {
            let mut acc = SymCoeff::zero(self.branch);
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out[k - i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[k - i]).scale(&int(i as i64));
                }
            }
            out[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(NSeries {
            var: self.var,
            branch: self.branch,
            coeffs: out,
        })
    }

    /// `s^e = exp(e · log s)` for a series with constant term 1 and a
    /// possibly symbolic exponent.
    pub fn pow(&self, exponent: &SymCoeff) -> Result<NSeries, AlgebraError> {
        self.require_unit_constant("pow")?;
        self.log()?.scale_by(exponent)?.exp()
    }

    pub fn pow_rational(&self, exponent: &Rational) -> Result<NSeries, AlgebraError> {
        self.pow(&SymCoeff::constant(exponent.clone(), self.branch))
    }
}

/// `(1 − x)^{-1}`-style helpers used in tests.
#[cfg(test)]
pub(crate) fn geometric(var: SeriesVar, order: usize, branch: Branch) -> NSeries {
    let coeffs = vec![SymCoeff::one(branch); order + 1];
    NSeries::from_coeffs(var, order, branch, coeffs).unwrap()
}
