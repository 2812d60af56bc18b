use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Branch, Point, SymCoeff, Var};
use crate::buchholz::expansion_offset as standard_offset;
use crate::buchholz::{
    expand_b_with_offset, hat_b_neg_z, perron_c, to_hat_b, ExpansionCoeffSet, ExpansionKind, HalfPlane,
    PhasedCoeff,
};
use crate::ratio::{ratio_u, ExpVariant, RatioSpec};

use super::bessel::{bessel_j_sequence, Scaled};
use super::gamma::{ln_gamma, log_gamma_ratio};
use super::laguerre::{laguerre_at_origin, laguerre_oracle_scaled};
use super::{CutComplex, NumericsError};

const PI: f64 = std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "ORACLE_RECURRENCE")]
    OracleRecurrence,
    #[serde(rename = "ORACLE_1F1")]
    Oracle1F1,
    #[serde(rename = "BESSEL_SERIES")]
    BesselSeries,
    #[serde(rename = "GOAL_COS_SIN")]
    GoalCosSin,
    #[serde(rename = "OUTER_COMMON_FACTOR")]
    OuterCommonFactor,
    #[serde(rename = "PERRON")]
    Perron,
    #[serde(rename = "RATIO_U")]
    RatioU,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::OracleRecurrence => "ORACLE_RECURRENCE",
            Method::Oracle1F1 => "ORACLE_1F1",
            Method::BesselSeries => "BESSEL_SERIES",
            Method::GoalCosSin => "GOAL_COS_SIN",
            Method::OuterCommonFactor => "OUTER_COMMON_FACTOR",
            Method::Perron => "PERRON",
            Method::RatioU => "RATIO_U",
        }
    }
}

/// A value with the size of the first neglected term.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: CutComplex,
    pub est_error: f64,
    pub method: Method,
}

impl EvalResult {
    fn new(value: Complex64, est_error: f64, method: Method) -> Result<Self, NumericsError> {
        if !value.is_finite() {
            return Err(if value.re.is_nan() || value.im.is_nan() {
                NumericsError::NonFinite(method.name())
            } else {
                NumericsError::Overflow(method.name().to_string())
            });
        }
        if est_error.is_nan() {
            return Err(NumericsError::NonFinite(method.name()));
        }
        Ok(EvalResult {
            value: value.into(),
            est_error: est_error.abs(),
            method,
        })
    }

    pub fn rel_err(&self, reference: Complex64) -> f64 {
        (self.value.c() - reference).norm() / reference.norm()
    }
}

fn check_alpha(alpha: f64) -> Result<(), NumericsError> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(NumericsError::Domain(format!("parameter must exceed -1, got {alpha}")));
    }
    Ok(())
}

fn check_cut_plane(z: CutComplex) -> Result<(), NumericsError> {
    if z.on_positive_axis() {
        return Err(NumericsError::Domain(format!(
            "the common-factor forms need z off [0, ∞), got {z}"
        )));
    }
    Ok(())
}

fn kappa(n: u64, alpha: f64) -> f64 {
    n as f64 + (alpha + 1.0) / 2.0
}

/// `ln(Γ(n+α+1)/n!)`.
fn ln_gamma_prefactor(n: u64, alpha: f64) -> Result<f64, NumericsError> {
    log_gamma_ratio(n, alpha, 0.0)
}

fn eval_all(coeffs: &[SymCoeff], point: &Point) -> Vec<Complex64> {
    coeffs.iter().map(|c| c.eval(point)).collect()
}

/// Numerical Buchholz polynomials `P_m(c, u)` for fixed `c`: coefficient
/// vectors in `u`.
fn buchholz_numeric(c: f64, max_m: usize) -> Vec<Vec<f64>> {
    let mut out = vec![vec![1.0]];
    for m in 1..=max_m {
        let p = &out[m - 1];
        let deg = p.len();
        let coeff = |k: usize| -> f64 { p.get(k).copied().unwrap_or(0.0) };
        let mut next = vec![0.0; deg + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            // u/4 P + (c−2) P' − u P'' at u^k
            let lower = if k >= 1 { coeff(k - 1) / 4.0 } else { 0.0 };
            let kf = k as f64;
            let g = lower + (kf + 1.0) * coeff(k + 1) * ((c - 2.0) - kf);
            *slot = g * 2.0 / (2.0 * kf + m as f64);
        }
        out.push(next);
    }
    out
}

fn horner(p: &[f64], u: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c)
}

/// Partial sums of the convergent Bessel form. `terms = None` sums until the
/// terms stop contributing.
pub fn eval_bessel_series(
    n: u64,
    alpha: f64,
    z: CutComplex,
    terms: Option<usize>,
) -> Result<EvalResult, NumericsError> {
    check_alpha(alpha)?;
    if z.is_zero() {
        return EvalResult::new(Complex64::new(laguerre_at_origin(n, alpha)?, 0.0), 0.0, Method::BesselSeries);
    }
    let k = kappa(n, alpha);
    let s = CutComplex::new(k * z.re, k * z.im).sqrt();
    let w = 2.0 * s;
    let ratio = s / (2.0 * k);
    let ln_pref = ln_gamma_prefactor(n, alpha)?;
    let log_front = Complex64::new(ln_pref, 0.0) + z.c() / 2.0 - alpha * s.ln();
    let mut count = terms.unwrap_or(32).max(1);
    loop {
        let max_m = count - 1;
        let jseq = bessel_j_sequence(alpha, max_m, w)?;
        let p = buchholz_numeric(alpha + 1.0, max_m);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        let mut last = 0.0;
        let mut tail = 0.0f64;
        for m in 0..=max_m {
            let t = power * horner(&p[m], z.c()) * jseq.mantissas[m];
            sum += t;
            last = t.norm();
            if m + 4 > max_m {
                tail = tail.max(last);
            }
            power *= ratio;
        }
        let converged = tail <= 1e-17 * sum.norm();
        if terms.is_some() || converged || count >= 1024 {
            let scale = (log_front + jseq.log_scale).exp();
            let value = sum * scale;
            let est = if terms.is_some() { last } else { tail.max(jseq.rel_err * sum.norm()) };
            return EvalResult::new(value, est * scale.norm(), Method::BesselSeries);
        }
        count *= 2;
    }
}

/// How many sine terms the cosine/sine form keeps for truncation index `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GoalTruncation {
    /// Both families up to `m = d`; predicted error `O(n^{-d-1})`.
    Equal,
    /// Sine family up to `m = d − 1`; predicted error `O(n^{-d-1/2})`.
    Staggered,
}

impl GoalTruncation {
    pub fn predicted_slope(self, d: usize) -> f64 {
        match self {
            GoalTruncation::Equal => -(d as f64 + 1.0),
            GoalTruncation::Staggered => -(d as f64 + 0.5),
        }
    }
}

fn scaled_cos_sin(omega: Complex64) -> (Complex64, Complex64, f64) {
    let scale = omega.im.abs();
    let i = Complex64::new(0.0, 1.0);
    let ep = (i * omega - scale).exp();
    let em = (-i * omega - scale).exp();
    ((ep + em) / 2.0, (ep - em) / (2.0 * i), scale)
}

/// Cosine/sine form with `B_m` substituted numerically.
#[derive(Clone, Debug)]
pub struct GoalTable {
    d: usize,
    truncation: GoalTruncation,
    b: Vec<SymCoeff>,
}

impl GoalTable {
    pub fn new(d: usize, truncation: GoalTruncation) -> Result<Self, NumericsError> {
        let b = expand_b_with_offset(2 * d + 3, &standard_offset(Branch::SqrtZ))?;
        Ok(GoalTable { d, truncation, b })
    }

    pub fn eval(&self, n: u64, alpha: f64, z: CutComplex) -> Result<EvalResult, NumericsError> {
        check_alpha(alpha)?;
        if z.is_zero() {
            return Err(NumericsError::Domain("the cosine/sine form needs z ≠ 0".into()));
        }
        let k = kappa(n, alpha);
        let kz = CutComplex::new(k * z.re, k * z.im);
        let omega = 2.0 * kz.sqrt() - alpha * PI / 2.0 - PI / 4.0;
        let (cos, sin, scale) = scaled_cos_sin(omega);
        let point = Point::new().with(Var::Alpha, alpha).with_complex(Var::W, z.sqrt());
        let b = eval_all(&self.b, &point);
        let nf = n as f64;
        let sine_max = match self.truncation {
            GoalTruncation::Equal => Some(self.d),
            GoalTruncation::Staggered => self.d.checked_sub(1),
        };
        let mut sum = Complex64::new(0.0, 0.0);
        for m in 0..=self.d {
            sum += b[2 * m] * cos * nf.powi(-(m as i32));
        }
        if let Some(top) = sine_max {
            for m in 0..=top {
                sum += b[2 * m + 1] * sin * nf.powf(-(m as f64) - 0.5);
            }
        }
        let next = match sine_max {
            Some(top) if top == self.d => b[2 * self.d + 2] * cos * nf.powi(-(self.d as i32) - 1),
            _ => b[2 * self.d + 1] * sin * nf.powf(-(self.d as f64) - 0.5),
        };
        let log_front = Complex64::new(ln_gamma_prefactor(n, alpha)? - 0.5 * PI.ln() + scale, 0.0)
            + z.c() / 2.0
            - (alpha / 2.0 + 0.25) * kz.c().ln();
        let front = log_front.exp();
        EvalResult::new(sum * front, (next * front).norm(), Method::GoalCosSin)
    }
}

pub fn eval_goal(
    n: u64,
    alpha: f64,
    z: CutComplex,
    d: usize,
    truncation: GoalTruncation,
) -> Result<EvalResult, NumericsError> {
    GoalTable::new(d, truncation)?.eval(n, alpha, z)
}

/// Which phase convention the common-factor form uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OuterForm {
    /// Odd coefficients rewritten in `√(−z)`; no half-plane choice.
    NegZ,
    /// `B̂_{2m+1} = ±iB_{2m+1}` with `√z`; `None` picks the half-plane of `z`.
    Raw(Option<HalfPlane>),
}

/// Common-factor form `Σ B̂_m n^{-m/2}`.
#[derive(Clone, Debug)]
pub struct OuterTable {
    d: usize,
    neg: Vec<SymCoeff>,
    upper: ExpansionCoeffSet,
    lower: ExpansionCoeffSet,
}

impl OuterTable {
    pub fn new(d: usize) -> Result<Self, NumericsError> {
        if d == 0 {
            return Err(NumericsError::Domain("truncation order must be at least 1".into()));
        }
        let offset = standard_offset(Branch::SqrtZ);
        let neg = hat_b_neg_z(d + 1, &offset)?;
        let b = ExpansionCoeffSet {
            kind: ExpansionKind::B,
            coeffs: expand_b_with_offset(d + 1, &offset)?
                .into_iter()
                .map(PhasedCoeff::real)
                .collect(),
            alpha_symbolic: true,
        };
        Ok(OuterTable {
            d,
            neg,
            upper: to_hat_b(&b, HalfPlane::Upper)?,
            lower: to_hat_b(&b, HalfPlane::Lower)?,
        })
    }

    fn coefficients(&self, alpha: f64, z: CutComplex, form: OuterForm) -> Vec<Complex64> {
        match form {
            OuterForm::NegZ => {
                let point = Point::new().with(Var::Alpha, alpha).with_complex(Var::W, z.neg().sqrt());
                eval_all(&self.neg, &point)
            }
            OuterForm::Raw(hp) => {
                let hp = hp.unwrap_or_else(|| z.half_plane());
                // on the negative axis the lower choice reads arg z = −π
                let root = if hp == HalfPlane::Lower && z.im == 0.0 && z.re < 0.0 {
                    Complex64::new(0.0, -(-z.re).sqrt())
                } else {
                    z.sqrt()
                };
                let point = Point::new().with(Var::Alpha, alpha).with_complex(Var::W, root);
                let set = if hp == HalfPlane::Upper { &self.upper } else { &self.lower };
                set.coeffs.iter().map(|c| c.phase() * c.coeff.eval(&point)).collect()
            }
        }
    }

    pub fn eval(&self, n: u64, alpha: f64, z: CutComplex, form: OuterForm) -> Result<EvalResult, NumericsError> {
        check_alpha(alpha)?;
        check_cut_plane(z)?;
        let k = kappa(n, alpha);
        let mkz = CutComplex::new(-k * z.re, -k * z.im);
        let log_front = Complex64::new(ln_gamma_prefactor(n, alpha)? - (2.0 * PI.sqrt()).ln(), 0.0)
            + z.c() / 2.0
            - (alpha / 2.0 + 0.25) * mkz.c().ln()
            + 2.0 * mkz.sqrt();
        let b = self.coefficients(alpha, z, form);
        let x = (n as f64).powf(-0.5);
        let sum: Complex64 = (0..self.d).map(|m| b[m] * x.powi(m as i32)).sum();
        let front = log_front.exp();
        let next = b[self.d] * x.powi(self.d as i32);
        EvalResult::new(sum * front, (next * front).norm(), Method::OuterCommonFactor)
    }
}

pub fn eval_outer(n: u64, alpha: f64, z: CutComplex, d: usize) -> Result<EvalResult, NumericsError> {
    OuterTable::new(d)?.eval(n, alpha, z, OuterForm::NegZ)
}

/// Perron form `Σ C_m n^{-m/2}`.
#[derive(Clone, Debug)]
pub struct PerronTable {
    d: usize,
    c: Vec<SymCoeff>,
}

impl PerronTable {
    pub fn new(d: usize) -> Result<Self, NumericsError> {
        if d == 0 {
            return Err(NumericsError::Domain("truncation order must be at least 1".into()));
        }
        Ok(PerronTable {
            d,
            c: perron_c(d + 1)?.real_coeffs()?,
        })
    }

    pub fn eval(&self, n: u64, alpha: f64, z: CutComplex) -> Result<EvalResult, NumericsError> {
        check_alpha(alpha)?;
        check_cut_plane(z)?;
        if n == 0 {
            return Err(NumericsError::Domain("the Perron form needs n ≥ 1".into()));
        }
        let nf = n as f64;
        let mz = z.neg();
        let nz = CutComplex::new(-nf * z.re, -nf * z.im);
        let log_front = Complex64::new(-(2.0 * PI.sqrt()).ln() + (alpha / 2.0 - 0.25) * nf.ln(), 0.0)
            + z.c() / 2.0
            - (alpha / 2.0 + 0.25) * mz.c().ln()
            + 2.0 * nz.sqrt();
        let point = Point::new().with(Var::Alpha, alpha).with_complex(Var::W, mz.sqrt());
        let c = eval_all(&self.c, &point);
        let x = nf.powf(-0.5);
        let sum: Complex64 = (0..self.d).map(|m| c[m] * x.powi(m as i32)).sum();
        let front = log_front.exp();
        EvalResult::new(sum * front, (c[self.d] * x.powi(self.d as i32) * front).norm(), Method::Perron)
    }
}

pub fn eval_perron(n: u64, alpha: f64, z: CutComplex, d: usize) -> Result<EvalResult, NumericsError> {
    PerronTable::new(d)?.eval(n, alpha, z)
}

/// Expansion value of a ratio and, for integer shifts, the oracle ratio.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioEval {
    pub result: EvalResult,
    pub oracle: Option<CutComplex>,
}

impl RatioEval {
    pub fn rel_err(&self) -> Option<f64> {
        self.oracle.map(|o| self.result.rel_err(o.c()))
    }
}

/// `(−z/n)^{(β−α)/2} Σ U_m n^{-m/2}` with symbolic `U_m` evaluated numerically.
#[derive(Clone, Debug)]
pub struct RatioTable {
    d: usize,
    variant: ExpVariant,
    u: Vec<SymCoeff>,
}

impl RatioTable {
    pub fn new(d: usize, variant: ExpVariant) -> Result<Self, NumericsError> {
        if d == 0 {
            return Err(NumericsError::Domain("truncation order must be at least 1".into()));
        }
        Ok(RatioTable {
            d,
            variant,
            u: ratio_u(d + 1, variant)?.u,
        })
    }

    pub fn variant(&self) -> ExpVariant {
        self.variant
    }

    pub fn eval(&self, n: u64, spec: &RatioSpec, z: CutComplex) -> Result<RatioEval, NumericsError> {
        spec.validate()?;
        check_cut_plane(z)?;
        if n == 0 {
            return Err(NumericsError::Domain("the ratio form needs n ≥ 1".into()));
        }
        let d = spec.d.min(self.d);
        let nf = n as f64;
        let mz = z.neg();
        let point = Point::new()
            .with(Var::Alpha, spec.alpha)
            .with(Var::Beta, spec.beta)
            .with(Var::J, spec.j)
            .with_complex(Var::W, mz.sqrt());
        let u = eval_all(&self.u, &point);
        let x = nf.powf(-0.5);
        let sum: Complex64 = (0..d).map(|m| u[m] * x.powi(m as i32)).sum();
        let front = ((spec.beta - spec.alpha) / 2.0 * (mz.c() / nf).ln()).exp();
        let result = EvalResult::new(sum * front, (u[d] * x.powi(d as i32) * front).norm(), Method::RatioU)?;
        let oracle = match spec.integer_shift() {
            Some(j) if n as i64 + j >= 0 => Some(oracle_ratio((n as i64 + j) as u64, spec.alpha, n, spec.beta, z)?),
            _ => None,
        };
        Ok(RatioEval { result, oracle })
    }
}

/// `L_{top}^{(α)}(z) / L_{bottom}^{(β)}(z)` from the oracle.
pub fn oracle_ratio(top: u64, alpha: f64, bottom: u64, beta: f64, z: CutComplex) -> Result<CutComplex, NumericsError> {
    let a: Scaled = laguerre_oracle_scaled(top, alpha, z)?;
    let b: Scaled = laguerre_oracle_scaled(bottom, beta, z)?;
    let v = a.mantissa.fdiv(b.mantissa) * (a.log_scale - b.log_scale).exp();
    if !v.is_finite() {
        return Err(NumericsError::Overflow("oracle ratio".into()));
    }
    Ok(v.into())
}

pub fn eval_ratio(
    n: u64,
    spec: &RatioSpec,
    z: CutComplex,
    variant: ExpVariant,
) -> Result<RatioEval, NumericsError> {
    RatioTable::new(spec.d, variant)?.eval(n, spec, z)
}

/// `|L_n^{(α)}(z/(n+j)) / n^α − z^{-α/2} J_α(2√z)|`.
pub fn mehler_heine_difference(n: u64, alpha: f64, j: f64, z: CutComplex) -> Result<f64, NumericsError> {
    check_alpha(alpha)?;
    let scale = n as f64 + j;
    if !(scale > 0.0) {
        return Err(NumericsError::Domain(format!("n + j must be positive, got {scale}")));
    }
    let arg = CutComplex::new(z.re / scale, z.im / scale);
    let l = laguerre_oracle_scaled(n, alpha, arg)?;
    let lhs = l.mantissa * (l.log_scale - alpha * (n as f64).ln()).exp();
    Ok((lhs - mehler_heine_limit(alpha, z)?).norm())
}

/// `z^{-α/2} J_α(2√z)`, finite at the origin.
pub fn mehler_heine_limit(alpha: f64, z: CutComplex) -> Result<Complex64, NumericsError> {
    check_alpha(alpha)?;
    if z.is_zero() {
        return Ok(Complex64::new((-ln_gamma(alpha + 1.0)?).exp(), 0.0));
    }
    let root = z.sqrt();
    let j = super::bessel::bessel_j_detailed(alpha, 2.0 * root)?;
    Ok(j.value.mantissa * (j.value.log_scale - alpha * root.ln()).exp())
}
