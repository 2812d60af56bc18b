//! Exact generation and numerical evaluation of large-degree expansions of
//! Laguerre polynomials `L_n^{(α)}(z)` and of their ratios.
//!
//! * [`algebra`]: rationals, Laurent polynomials in `(α, β, j, √z, …)`,
//!   truncated formal series.
//! * [`buchholz`]: Bessel-type expansion coefficients (`P_m`, Tricomi `A_m`,
//!   `B_m`, `B̂_m`) and the Perron coefficients `C_m`.
//! * [`ratio`]: generalized Bernoulli polynomials, Gamma and κ-power ratio
//!   expansions, and the ratio coefficients `D_k`, `U_m`.
//! * [`numerics`]: complex-plane evaluation, Bessel functions, the Laguerre
//!   oracle, kernels, and convergence-slope fitting.
//! * [`cli`]: the `lagasym` command-line front end.

pub mod algebra;
pub mod buchholz;
pub mod cli;
pub mod numerics;
pub mod ratio;
