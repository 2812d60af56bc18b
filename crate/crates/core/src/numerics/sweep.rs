use std::cmp::Ordering;
use std::io::Write;

use serde::Serialize;

use crate::ratio::{ExpVariant, RatioSpec};

use super::eval::{
    eval_bessel_series, EvalResult, GoalTable, GoalTruncation, Method, OuterForm, OuterTable, PerronTable, RatioTable,
};
use super::laguerre::{laguerre_exact_sum, laguerre_oracle, CROSS_CHECK_MAX_N};
use super::{CutComplex, NumericsError};

/// Least-squares line through `(ln n, ln err)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
}

pub fn fit_loglog_slope(ns: &[u64], errors: &[f64]) -> Result<SlopeFit, NumericsError> {
    if ns.len() != errors.len() || ns.len() < 2 {
        return Err(NumericsError::Domain("slope fit needs at least two matched points".into()));
    }
    if errors.iter().any(|e| !(*e > 0.0) || !e.is_finite()) {
        return Err(NumericsError::Domain("slope fit needs positive finite errors".into()));
    }
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(NumericsError::Domain("slope fit needs distinct n".into()));
    }
    let slope = sxy / sxx;
    Ok(SlopeFit {
        slope,
        intercept: my - slope * mx,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Evaluator {
    #[serde(rename = "OUTER")]
    Outer,
    #[serde(rename = "RATIO")]
    Ratio,
    #[serde(rename = "GOAL_EQUAL")]
    GoalEqual,
    #[serde(rename = "GOAL_STAGGERED")]
    GoalStaggered,
    #[serde(rename = "PERRON")]
    Perron,
}

/// Fitted and predicted error order for one evaluator and truncation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeReport {
    pub evaluator: Evaluator,
    pub d: usize,
    pub fitted_slope: f64,
    pub predicted_slope: f64,
    pub ns: Vec<u64>,
    pub errors: Vec<f64>,
}

impl SlopeReport {
    pub fn deviation(&self) -> f64 {
        (self.fitted_slope - self.predicted_slope).abs()
    }
}

fn report(evaluator: Evaluator, d: usize, predicted: f64, ns: &[u64], errors: Vec<f64>) -> Result<SlopeReport, NumericsError> {
    let fit = fit_loglog_slope(ns, &errors)?;
    Ok(SlopeReport {
        evaluator,
        d,
        fitted_slope: fit.slope,
        predicted_slope: predicted,
        ns: ns.to_vec(),
        errors,
    })
}

fn oracles(ns: &[u64], alpha: f64, z: CutComplex) -> Result<Vec<num_complex::Complex64>, NumericsError> {
    ns.iter().map(|&n| laguerre_oracle(n, alpha, z)).collect()
}

/// Common-factor form truncated after `m = d − 1`; predicted `−d/2`.
pub fn outer_slope(alpha: f64, z: CutComplex, d: usize, ns: &[u64]) -> Result<SlopeReport, NumericsError> {
    let table = OuterTable::new(d)?;
    let reference = oracles(ns, alpha, z)?;
    let errors = ns
        .iter()
        .zip(&reference)
        .map(|(&n, &o)| Ok(table.eval(n, alpha, z, OuterForm::NegZ)?.rel_err(o)))
        .collect::<Result<_, NumericsError>>()?;
    report(Evaluator::Outer, d, -(d as f64) / 2.0, ns, errors)
}

pub fn perron_slope(alpha: f64, z: CutComplex, d: usize, ns: &[u64]) -> Result<SlopeReport, NumericsError> {
    let table = PerronTable::new(d)?;
    let reference = oracles(ns, alpha, z)?;
    let errors = ns
        .iter()
        .zip(&reference)
        .map(|(&n, &o)| Ok(table.eval(n, alpha, z)?.rel_err(o)))
        .collect::<Result<_, NumericsError>>()?;
    report(Evaluator::Perron, d, -(d as f64) / 2.0, ns, errors)
}

/// Ratio form truncated after `m = spec.d − 1`; needs an integer shift.
pub fn ratio_slope(spec: &RatioSpec, z: CutComplex, ns: &[u64], variant: ExpVariant) -> Result<SlopeReport, NumericsError> {
    let table = RatioTable::new(spec.d, variant)?;
    let errors = ns
        .iter()
        .map(|&n| {
            table
                .eval(n, spec, z)?
                .rel_err()
                .ok_or_else(|| NumericsError::Domain("ratio slope needs an integer shift".into()))
        })
        .collect::<Result<_, NumericsError>>()?;
    report(Evaluator::Ratio, spec.d, -(spec.d as f64) / 2.0, ns, errors)
}

pub fn goal_slope(
    alpha: f64,
    z: CutComplex,
    d: usize,
    truncation: GoalTruncation,
    ns: &[u64],
) -> Result<SlopeReport, NumericsError> {
    let table = GoalTable::new(d, truncation)?;
    let reference = oracles(ns, alpha, z)?;
    let errors = ns
        .iter()
        .zip(&reference)
        .map(|(&n, &o)| Ok(table.eval(n, alpha, z)?.rel_err(o)))
        .collect::<Result<_, NumericsError>>()?;
    let evaluator = match truncation {
        GoalTruncation::Equal => Evaluator::GoalEqual,
        GoalTruncation::Staggered => Evaluator::GoalStaggered,
    };
    report(evaluator, d, truncation.predicted_slope(d), ns, errors)
}

/// Both cosine/sine truncations; the first entry matches its prediction better.
pub fn goal_slopes_ranked(alpha: f64, z: CutComplex, d: usize, ns: &[u64]) -> Result<[SlopeReport; 2], NumericsError> {
    let a = goal_slope(alpha, z, d, GoalTruncation::Equal, ns)?;
    let b = goal_slope(alpha, z, d, GoalTruncation::Staggered, ns)?;
    Ok(if b.deviation() < a.deviation() { [b, a] } else { [a, b] })
}

/// One line of the comparison CSV.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub method: &'static str,
    pub n: u64,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub j: Option<f64>,
    pub re_z: f64,
    pub im_z: f64,
    pub d: Option<usize>,
    pub re_value: f64,
    pub im_value: f64,
    pub rel_err_vs_oracle: Option<f64>,
    pub est_error: f64,
}

impl ComparisonRow {
    fn from_result(
        r: &EvalResult,
        n: u64,
        alpha: f64,
        z: CutComplex,
        d: Option<usize>,
        oracle: Option<num_complex::Complex64>,
    ) -> Self {
        ComparisonRow {
            method: r.method.name(),
            n,
            alpha,
            beta: None,
            j: None,
            re_z: z.re,
            im_z: z.im,
            d,
            re_value: r.value.re,
            im_value: r.value.im,
            rel_err_vs_oracle: oracle.map(|o| r.rel_err(o)),
            est_error: r.est_error,
        }
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        fn opt(a: Option<f64>, b: Option<f64>) -> Ordering {
            match (a, b) {
                (Some(x), Some(y)) => x.total_cmp(&y),
                (a, b) => a.is_some().cmp(&b.is_some()),
            }
        }
        self.method
            .cmp(other.method)
            .then(self.n.cmp(&other.n))
            .then(self.alpha.total_cmp(&other.alpha))
            .then(opt(self.beta, other.beta))
            .then(opt(self.j, other.j))
            .then(self.re_z.total_cmp(&other.re_z))
            .then(self.im_z.total_cmp(&other.im_z))
            .then(self.d.cmp(&other.d))
    }
}

/// Oracle, convergent series and the three expansion forms at every grid point.
///
/// Cut-plane forms are skipped for `z ∈ [0, ∞)`; `z = 0` only gets the
/// series and the oracle.
pub fn compare_grid(alpha: f64, zs: &[CutComplex], ns: &[u64], d: usize) -> Result<Vec<ComparisonRow>, NumericsError> {
    let goal = GoalTable::new(d, GoalTruncation::Equal)?;
    let outer = OuterTable::new(d.max(1))?;
    let perron = PerronTable::new(d.max(1))?;
    let mut rows = Vec::new();
    for &z in zs {
        for &n in ns {
            let o = laguerre_oracle(n, alpha, z)?;
            rows.push(ComparisonRow::from_result(
                &EvalResult {
                    value: o.into(),
                    est_error: 0.0,
                    method: Method::OracleRecurrence,
                },
                n,
                alpha,
                z,
                None,
                Some(o),
            ));
            if n <= CROSS_CHECK_MAX_N {
                let exact = laguerre_exact_sum(n, alpha, z)?;
                let r = EvalResult {
                    value: exact.into(),
                    est_error: 0.0,
                    method: Method::Oracle1F1,
                };
                rows.push(ComparisonRow::from_result(&r, n, alpha, z, None, Some(o)));
            }
            let series = eval_bessel_series(n, alpha, z, None)?;
            rows.push(ComparisonRow::from_result(&series, n, alpha, z, None, Some(o)));
            if z.is_zero() {
                continue;
            }
            rows.push(ComparisonRow::from_result(&goal.eval(n, alpha, z)?, n, alpha, z, Some(d), Some(o)));
            if !z.on_positive_axis() && n > 0 {
                let e = outer.eval(n, alpha, z, OuterForm::NegZ)?;
                rows.push(ComparisonRow::from_result(&e, n, alpha, z, Some(d.max(1)), Some(o)));
                let e = perron.eval(n, alpha, z)?;
                rows.push(ComparisonRow::from_result(&e, n, alpha, z, Some(d.max(1)), Some(o)));
            }
        }
    }
    rows.sort_by(ComparisonRow::key_cmp);
    Ok(rows)
}

/// Ratio rows; the oracle column is filled for integer shifts.
pub fn ratio_rows(
    spec: &RatioSpec,
    zs: &[CutComplex],
    ns: &[u64],
    variant: ExpVariant,
) -> Result<Vec<ComparisonRow>, NumericsError> {
    let table = RatioTable::new(spec.d, variant)?;
    let mut rows = Vec::new();
    for &z in zs {
        for &n in ns {
            let r = table.eval(n, spec, z)?;
            let mut row = ComparisonRow::from_result(&r.result, n, spec.alpha, z, Some(spec.d), None);
            row.beta = Some(spec.beta);
            row.j = Some(spec.j);
            row.rel_err_vs_oracle = r.rel_err();
            rows.push(row);
        }
    }
    rows.sort_by(ComparisonRow::key_cmp);
    Ok(rows)
}

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn write_comparison_csv<W: Write>(rows: &[ComparisonRow], out: W) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let ns = [10u64, 100, 1000];
        let errs: Vec<f64> = ns.iter().map(|&n| 3.0 * (n as f64).powf(-1.5)).collect();
        let fit = fit_loglog_slope(&ns, &errs).unwrap();
        assert!((fit.slope + 1.5).abs() < 1e-12);
        assert!((fit.intercept - 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn zero_error_rejected() {
        assert!(fit_loglog_slope(&[1, 2], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn rows_are_sorted_and_complete() {
        let zs = [CutComplex::new(-1.0, 0.0), CutComplex::new(3.0, 0.0)];
        let rows = compare_grid(0.5, &zs, &[100, 50], 2).unwrap();
        // oracle, series and goal everywhere; 1F1 at n = 50; outer and perron at z = −1
        assert_eq!(rows.len(), 2 * 2 * 3 + 2 + 2 * 2);
        for pair in rows.windows(2) {
            assert_ne!(pair[0].key_cmp(&pair[1]), Ordering::Greater);
        }
        let mut buf = Vec::new();
        write_comparison_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(
            "method,n,alpha,beta,j,re_z,im_z,d,re_value,im_value,rel_err_vs_oracle,est_error\n"
        ));
    }

    #[test]
    fn goal_ranking_picks_the_closer_prediction() {
        let ns = [50, 100, 200, 400, 800];
        let [best, other] = goal_slopes_ranked(0.3, CutComplex::new(-2.0, 0.0), 1, &ns).unwrap();
        assert!(best.deviation() <= other.deviation());
    }
}
