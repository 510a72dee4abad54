//! Exact construction of degenerate special-function families as truncated
//! power series over `Q[lambda, x, y]`, and checkers for the identities
//! relating them.
//!
//! The degenerate multi-poly-Genocchi polynomials are the egf coefficients of
//!
//! ```text
//! 2^r Ei_{k_1..k_r,lambda}(log_lambda(1 + t)) / (e_lambda(t) + 1)^r * e_lambda^x(t)
//! ```
//!
//! see [`families::multi_poly_genocchi_deg`]. Everything is formal and exact;
//! nothing is evaluated in floating point.

pub mod arith;
pub mod degen_fn;
mod error;
pub mod exec;
pub mod families;
pub mod series;
pub mod verify;

pub use arith::{Monomial, MultiPoly, Rational, Symbol};
pub use degen_fn::{Argument, KIndexList, StirlingTable};
pub use error::{Error, Result};
pub use exec::Execution;
pub use families::{FamilyId, PolyFamily};
pub use series::TruncatedSeries;
pub use verify::{IdentityId, VerifyReport};
