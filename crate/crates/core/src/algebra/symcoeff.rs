use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{int, rational_to_f64, AlgebraError, Rational};

/// Symbols a coefficient may depend on.
///
/// `W` is the square-root variable (√z or √(−z), see [`Branch`]); the others
/// are parameters: `Alpha`, `Beta`, `J` for Laguerre parameters and degree
/// shift, `Nu` for a generic Bessel order, `C` and `A` for the confluent
/// hypergeometric parameters, `Ell` and `X` for generalized Bernoulli
/// polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Alpha,
    Beta,
    J,
    W,
    Nu,
    C,
    A,
    Ell,
    X,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Alpha,
        Var::Beta,
        Var::J,
        Var::W,
        Var::Nu,
        Var::C,
        Var::A,
        Var::Ell,
        Var::X,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::J => "j",
            Var::W => "w",
            Var::Nu => "nu",
            Var::C => "c",
            Var::A => "a",
            Var::Ell => "ell",
            Var::X => "x",
        }
    }
}

/// Meaning of the symbol [`Var::W`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// `w = √z`, principal branch.
    #[serde(rename = "W_SQRT_Z")]
    SqrtZ,
    /// `w = √(−z)`, principal branch of `−z`.
    #[serde(rename = "W_SQRT_NEG_Z")]
    SqrtNegZ,
}

/// Exponent vector, indexed by [`Var::index`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, p: i32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = p;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, p: i32) -> Self {
        self.0[v.index()] = p;
        self
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }
}

/// Exact Laurent polynomial in the [`Var`] symbols with rational coefficients.
///
/// Stored canonically: sorted term map, no zero coefficients. Only `W` may
/// carry negative exponents in coefficients produced by this crate, but the
/// representation does not forbid it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymCoeff {
    terms: BTreeMap<Monomial, Rational>,
    branch: Branch,
}

/// Numeric values for each symbol, used by [`SymCoeff::eval`].
#[derive(Clone, Copy, Debug)]
pub struct Point {
    values: [Complex64; NVARS],
}

impl Default for Point {
    fn default() -> Self {
        Point {
            values: [Complex64::new(0.0, 0.0); NVARS],
        }
    }
}

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, x: f64) -> Self {
        self.values[v.index()] = Complex64::new(x, 0.0);
        self
    }

    pub fn with_complex(mut self, v: Var, x: Complex64) -> Self {
        self.values[v.index()] = x;
        self
    }

    pub fn get(&self, v: Var) -> Complex64 {
        self.values[v.index()]
    }
}

impl SymCoeff {
    pub fn zero(branch: Branch) -> Self {
        SymCoeff {
            terms: BTreeMap::new(),
            branch,
        }
    }

    pub fn one(branch: Branch) -> Self {
        Self::constant(Rational::one(), branch)
    }

    pub fn constant(r: Rational, branch: Branch) -> Self {
        let mut s = Self::zero(branch);
        s.add_term(Monomial::one(), r);
        s
    }

    pub fn integer(n: i64, branch: Branch) -> Self {
        Self::constant(int(n), branch)
    }

    /// The single symbol `v`.
    pub fn var(v: Var, branch: Branch) -> Self {
        Self::monomial(Monomial::var(v, 1), Rational::one(), branch)
    }

    pub fn monomial(m: Monomial, r: Rational, branch: Branch) -> Self {
        let mut s = Self::zero(branch);
        s.add_term(m, r);
        s
    }

    /// `z` itself: `w²` when `w = √z`, `−w²` when `w = √(−z)`.
    pub fn z(branch: Branch) -> Self {
        let sign = match branch {
            Branch::SqrtZ => 1,
            Branch::SqrtNegZ => -1,
        };
        Self::monomial(Monomial::var(Var::W, 2), int(sign), branch)
    }

    /// `w^p`.
    pub fn w_pow(p: i32, branch: Branch) -> Self {
        Self::monomial(Monomial::var(Var::W, p), Rational::one(), branch)
    }

    /// Build from `(monomial, coefficient)` pairs; like terms are combined.
    pub fn from_terms<I>(terms: I, branch: Branch) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Self::zero(branch);
        for (m, r) in terms {
            s.add_term(m, r);
        }
        s
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if this is a constant (possibly zero), `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    /// Largest exponent of `v` (0 for the zero polynomial).
    pub fn degree(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Smallest exponent of `v` (0 for the zero polynomial).
    pub fn min_degree(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, r: Rational) {
        if r.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(r);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += r;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_branch(&self, other: &SymCoeff) -> Result<(), AlgebraError> {
        if self.branch == other.branch {
            Ok(())
        } else {
            Err(AlgebraError::BranchMismatch {
                left: self.branch,
                right: other.branch,
            })
        }
    }

    pub fn try_add(&self, other: &SymCoeff) -> Result<SymCoeff, AlgebraError> {
        self.check_branch(other)?;
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.add_term(*m, r.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymCoeff) -> Result<SymCoeff, AlgebraError> {
        self.check_branch(other)?;
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.add_term(*m, -r.clone());
        }
        Ok(out)
    }

    /// Exact product. Fails when the branch tags differ.
    pub fn try_mul(&self, other: &SymCoeff) -> Result<SymCoeff, AlgebraError> {
        self.check_branch(other)?;
        let mut out = SymCoeff::zero(self.branch);
        for (ma, ra) in &self.terms {
            for (mb, rb) in &other.terms {
                out.add_term(ma.mul(mb), ra * rb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> SymCoeff {
        if r.is_zero() {
            return SymCoeff::zero(self.branch);
        }
        SymCoeff {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
            branch: self.branch,
        }
    }

    /// Multiply by a monomial.
    pub fn shift_monomial(&self, m: &Monomial) -> SymCoeff {
        SymCoeff {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
            branch: self.branch,
        }
    }

    pub fn pow(&self, e: u32) -> SymCoeff {
        let mut acc = SymCoeff::one(self.branch);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace the branch tag. Allowed only when `w` does not occur, since the
    /// meaning of the polynomial is then independent of the tag.
    pub fn with_branch(&self, branch: Branch) -> Result<SymCoeff, AlgebraError> {
        if branch != self.branch && self.depends_on(Var::W) {
            return Err(AlgebraError::BranchMismatch {
                left: self.branch,
                right: branch,
            });
        }
        Ok(SymCoeff {
            terms: self.terms.clone(),
            branch,
        })
    }

    /// Relabel the tag without touching terms. Used by the half-plane
    /// rewrite, which has already converted every power of `w`.
    pub(crate) fn retag_unchecked(mut self, branch: Branch) -> SymCoeff {
        self.branch = branch;
        self
    }

    /// Rename one symbol to another. The target must not already occur.
    pub fn rename(&self, from: Var, to: Var) -> SymCoeff {
        debug_assert!(from == to || !self.depends_on(to));
        let mut out = SymCoeff::zero(self.branch);
        for (m, r) in &self.terms {
            let mut e = m.0;
            let p = e[from.index()];
            e[from.index()] = 0;
            e[to.index()] += p;
            out.add_term(Monomial(e), r.clone());
        }
        out
    }

    /// Substitute `v := value`. Requires nonnegative exponents of `v`.
    pub fn substitute(&self, v: Var, value: &SymCoeff) -> Result<SymCoeff, AlgebraError> {
        self.check_branch(value)?;
        if self.min_degree(v) < 0 {
            return Err(AlgebraError::NegativePower { var: v });
        }
        let max = self.degree(v).max(0) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(SymCoeff::one(self.branch));
        for k in 1..=max {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = SymCoeff::zero(self.branch);
        for (m, r) in &self.terms {
            let p = m.exp(v) as usize;
            let rest = Monomial(m.0).with(v, 0);
            let piece = powers[p].shift_monomial(&rest).scale(r);
            for (km, kr) in piece.terms {
                out.add_term(km, kr);
            }
        }
        Ok(out)
    }

    /// Substitute an exact rational for `v`.
    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Result<SymCoeff, AlgebraError> {
        self.substitute(v, &SymCoeff::constant(value.clone(), self.branch))
    }

    /// `v := v + by`.
    pub fn shift_var(&self, v: Var, by: &Rational) -> Result<SymCoeff, AlgebraError> {
        let shifted = &SymCoeff::var(v, self.branch) + &SymCoeff::constant(by.clone(), self.branch);
        self.substitute(v, &shifted)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> SymCoeff {
        let mut out = SymCoeff::zero(self.branch);
        for (m, r) in &self.terms {
            let p = m.exp(v);
            if p != 0 {
                out.add_term(m.with(v, p - 1), r * int(p as i64));
            }
        }
        out
    }

    /// Derivative with respect to `u = w²`, for polynomials in even powers
    /// of `w` only.
    pub fn derivative_in_w_squared(&self) -> Result<SymCoeff, AlgebraError> {
        let mut out = SymCoeff::zero(self.branch);
        for (m, r) in &self.terms {
            let p = m.exp(Var::W);
            if p % 2 != 0 {
                return Err(AlgebraError::OddRootPower);
            }
            if p != 0 {
                out.add_term(m.with(Var::W, p - 2), r * int((p / 2) as i64));
            }
        }
        Ok(out)
    }

    /// Split by the exponent of `v`: map from exponent to the cofactor.
    pub fn collect(&self, v: Var) -> BTreeMap<i32, SymCoeff> {
        let mut map: BTreeMap<i32, SymCoeff> = BTreeMap::new();
        for (m, r) in &self.terms {
            let p = m.exp(v);
            map.entry(p)
                .or_insert_with(|| SymCoeff::zero(self.branch))
                .add_term(m.with(v, 0), r.clone());
        }
        map
    }

    /// Floating-point value at a point; `W` is taken verbatim from `point`.
    pub fn eval(&self, point: &Point) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, r) in &self.terms {
            let mut t = Complex64::new(rational_to_f64(r), 0.0);
            for v in Var::ALL {
                let p = m.exp(v);
                if p != 0 {
                    t *= point.get(v).powi(p);
                }
            }
            sum += t;
        }
        sum
    }

    /// Exact value with every symbol assigned a rational, where the value of
    /// `W` is supplied as `w²` (i.e. `z` or `−z`). Odd powers of `w` have no
    /// rational value and are rejected.
    pub fn eval_exact(
        &self,
        values: &[(Var, Rational)],
        w_squared: &Rational,
    ) -> Result<Rational, AlgebraError> {
        let lookup = |v: Var| -> Result<&Rational, AlgebraError> {
            values
                .iter()
                .find(|(k, _)| *k == v)
                .map(|(_, r)| r)
                .ok_or_else(|| AlgebraError::Domain(format!("no value for {}", v.name())))
        };
        let mut sum = Rational::zero();
        for (m, r) in &self.terms {
            let mut t = r.clone();
            for v in Var::ALL {
                let p = m.exp(v);
                if p == 0 {
                    continue;
                }
                let (base, e) = if v == Var::W {
                    if p % 2 != 0 {
                        return Err(AlgebraError::OddRootPower);
                    }
                    (w_squared.clone(), p / 2)
                } else {
                    (lookup(v)?.clone(), p)
                };
                if e < 0 && base.is_zero() {
                    return Err(AlgebraError::Domain("division by zero".into()));
                }
                t *= if e >= 0 {
                    num_traits::pow(base, e as usize)
                } else {
                    num_traits::pow(base.recip(), (-e) as usize)
                };
            }
            sum += t;
        }
        Ok(sum)
    }
}

/// Generalized binomial coefficient `x(x−1)…(x−k+1)/k!`, expanded exactly.
pub fn gen_binomial(x: &SymCoeff, k: u32) -> SymCoeff {
    let b = x.branch();
    let mut acc = SymCoeff::one(b);
    for i in 0..k {
        let factor = x - &SymCoeff::integer(i as i64, b);
        acc = (&acc * &factor).scale(&Rational::new(1.into(), ((i + 1) as i64).into()));
    }
    acc
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a SymCoeff> for &'a SymCoeff {
            type Output = SymCoeff;
            fn $method(self, rhs: &'a SymCoeff) -> SymCoeff {
                self.$try(rhs).expect("branch tags of operands must agree")
            }
        }
        impl $tr<SymCoeff> for SymCoeff {
            type Output = SymCoeff;
            fn $method(self, rhs: SymCoeff) -> SymCoeff {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a SymCoeff> for SymCoeff {
            type Output = SymCoeff;
            fn $method(self, rhs: &'a SymCoeff) -> SymCoeff {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &SymCoeff {
    type Output = SymCoeff;
    fn neg(self) -> SymCoeff {
        self.scale(&-Rational::one())
    }
}

impl Neg for SymCoeff {
    type Output = SymCoeff;
    fn neg(self) -> SymCoeff {
        -&self
    }
}

impl fmt::Display for SymCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Reverse canonical order.
        let mut first = true;
        for (m, r) in self.terms.iter().rev() {
            let neg = r.is_negative();
            let mag = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for v in Var::ALL {
                let p = m.exp(v);
                match p {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    _ => factors.push(format!("{}^{}", v.name(), p)),
                }
            }
            if factors.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
                if !factors.is_empty() {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
