//! Quantify and minimize the expected error of finite-time, discrete
//! simulations of ergodic chaotic ODEs.
//!
//! The crate measures the expected output error of a simulation empirically
//! via seeded Monte Carlo ensembles, fits the combined
//! discretization/sampling error model
//! `e_model = C_q Δt^q + A_0 T_s^(-r)`, identifies the spin-up transient
//! decay from output traces, and computes simulation plans `(Δt, t_0, T_s)`
//! that minimize the modelled error under a fixed budget of right-hand-side
//! evaluations.
//!
//! Pipeline, end to end:
//!
//! 1. [`ensemble::compute_reference`] — high-accuracy reference mean.
//! 2. [`ensemble::expected_abs_error_sweep`] — measured `E|J - J_ref|` over a
//!    `(Δt, T_s)` grid.
//! 3. [`error_model::fit_error_model`] — nonlinear least squares fit of the
//!    four model coefficients.
//! 4. [`transient::fit_map`] / [`transient::ensemble_transient_bounds`] —
//!    spin-up decay identification.
//! 5. [`planner::optimize_total`] — budget-constrained optimal plan.
//!
//! Ensembles are embarrassingly parallel; with the `parallel` feature
//! (default) instances are distributed with rayon. Results are bit-identical
//! regardless of worker count because every instance derives its RNG stream
//! from the base seed and its own index only.

pub mod diagnostics;
pub mod ensemble;
pub mod error;
pub mod error_model;
pub mod exec;
pub mod integrators;
pub mod optim;
pub mod planner;
pub mod systems;
pub mod transient;

pub use error::{Error, Result};
