//! Floating-point evaluation on the cut plane: Bessel functions, log-Gamma,
//! the Laguerre oracle, and the three expansion forms.

mod bessel;
mod cut;
mod eval;
mod gamma;
mod kernel;
mod laguerre;
mod sweep;

pub use bessel::{
    bessel_j, bessel_j_by, bessel_j_detailed, bessel_j_sequence, BesselMethod, BesselSequence, BesselValue,
    Scaled,
};
pub use cut::CutComplex;
pub use sweep::{
    compare_grid, fit_loglog_slope, goal_slope, goal_slopes_ranked, outer_slope, perron_slope, ratio_rows,
    ratio_slope, write_comparison_csv, ComparisonRow, CsvError, Evaluator, SlopeFit, SlopeReport,
};
pub use kernel::{kernel_and_derivatives, ratio_sum, structure_relation_residual, KernelReport, RatioSum};
pub use eval::{
    eval_bessel_series, eval_goal, eval_outer, eval_perron, eval_ratio, mehler_heine_difference,
    mehler_heine_limit, oracle_ratio, EvalResult, GoalTable, GoalTruncation, Method, OuterForm, OuterTable,
    PerronTable, RatioEval, RatioTable,
};
pub use gamma::{ln_gamma, ln_gamma_quotient, log_gamma_ratio};
pub use laguerre::{
    laguerre_at_origin, laguerre_derivative, laguerre_exact_sum, laguerre_oracle, laguerre_oracle_scaled,
    laguerre_recurrence, laguerre_table, oracle_consistency, CROSS_CHECK_MAX_N, CROSS_CHECK_TOL,
};

use crate::algebra::AlgebraError;
use crate::buchholz::ExpansionError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("non-finite result in {0}")]
    NonFinite(&'static str),
    #[error("oracle routes disagree at n = {n}, alpha = {alpha}, z = {z}: relative difference {rel_diff:e}")]
    OracleInconsistency {
        n: u64,
        alpha: f64,
        z: CutComplex,
        rel_diff: f64,
    },
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
