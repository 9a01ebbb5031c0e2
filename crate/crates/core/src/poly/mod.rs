//! Exact polynomial arithmetic: dense univariate polynomials over the
//! rationals, sparse bivariate polynomials in `x` and `m`, and
//! Sturm-sequence root isolation.

mod bi;
mod sturm;
mod uni;

pub use bi::BiPoly;
pub use sturm::{largest_root, IsolatedRoot, RootInterval};
pub use uni::UniPoly;
