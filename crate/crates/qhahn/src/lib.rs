//! Toolkit for q-hypergeometric difference equations on geometric lattices:
//! given the coefficients (sigma1, tau, q) of
//!
//! ```text
//! sigma1(x) D_{1/q} D_q y + tau(x) D_q y + lambda_n y = 0,
//! ```
//!
//! classify the equation into the ten-class q-Hahn taxonomy, decide where
//! (and whether) orthogonal polynomial solutions exist, construct the
//! q-weight function and its discrete support, generate the monic solutions,
//! and verify orthogonality and norm ratios numerically.
//!
//! Module map:
//! - [`qcore`]: q-brackets, q-Pochhammer symbols, Jackson derivatives and
//!   q-integrals with controlled truncation.
//! - [`eht`]: the equation model — coefficient bookkeeping, eigenvalues,
//!   Pearson ratios, and the monic polynomial solver.
//! - [`classify`]: the ten-way class tag, per-class invariants, and the rule
//!   table that produces (or rejects) orthogonality scenarios.
//! - [`weight`]: closed-form q-weight construction and the Pearson-recursion
//!   evaluator that serves as its independent oracle.
//! - [`orth`]: support enumeration, Gram matrices, Gram-Schmidt generation,
//!   and norm-ratio verification.
//! - [`families`]: the registry of named families (big q-Jacobi, q-Hahn,
//!   ..., Stieltjes-Wigert) with coefficient recipes, parameter regions and
//!   printed-norm hooks.
//! - [`fixtures`]: ready-made positive and rejected parameter fixtures used
//!   by the verification suites.
//! - [`json`]: a small canonical JSON document model (ordered fields,
//!   17-significant-digit floats) for machine-readable reports.

pub mod classify;
pub mod eht;
pub mod families;
pub mod fixtures;
pub mod json;
pub mod orth;
pub mod qcore;
pub mod weight;

pub use classify::{classify, HahnClass, OrthScenario};
pub use eht::EHTSpec;
pub use qcore::{QParam, RealPolynomial};
