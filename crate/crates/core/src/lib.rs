//! Exact verification and exhaustive search for spectral extremal bounds on
//! H(4,3)-free graphs of even size.
//!
//! The crate is organized around three layers:
//!
//! * an exact arithmetic kernel (`rational`, `poly`, `quad`): arbitrary
//!   precision rationals, polynomials in one and two indeterminates,
//!   Sturm-sequence root isolation, and arithmetic in the quadratic
//!   extension generated by `s` with `s^2 = 4m - 5`;
//! * graph machinery (`graph`, `detect`, `spectral`): bitset graphs,
//!   constructors for the named comparison families, equitable partitions
//!   and their quotient matrices, H(4,3) subgraph detection, and Perron
//!   root computation;
//! * the verification and search drivers (`verify`, `search`): exact
//!   certificate checks for every polynomial identity, closed form, sign
//!   claim and threshold inequality, plus the exhaustive residual
//!   configuration search with its report formats.
//!
//! With the default `parallel` feature the sweeps and the residual search
//! fan out over rayon; without it everything runs on one thread with
//! identical results.

#![forbid(unsafe_code)]

pub mod defs;
pub mod detect;
pub mod error;
pub mod graph;
pub mod par;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod search;
pub mod spectral;
pub mod verify;

pub use error::Error;
pub use rational::Rational;
