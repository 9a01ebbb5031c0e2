use thiserror::Error;

/// Errors surfaced by the exact kernel, the graph constructors and the
/// numeric routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Bivariate division requires the divisor to be monic in `x`.
    #[error("divisor is not monic in x: leading x-coefficient is {leading}")]
    NonMonicDivisor { leading: String },

    /// Root isolation was asked for the largest real root of a polynomial
    /// without real roots.
    #[error("polynomial has no real root")]
    NoRealRoot,

    /// Root isolation of the zero polynomial is meaningless.
    #[error("cannot isolate roots of the zero polynomial")]
    ZeroPolynomial,

    /// A family constructor was called outside its admissible range.
    #[error("invalid m = {m} for {what}: {requirement}")]
    InvalidM {
        what: &'static str,
        m: u64,
        requirement: String,
    },

    /// The given partition is not equitable; the offending block pair is
    /// reported.
    #[error("partition is not equitable: vertices {u} and {v} of block {block} see {count_u} vs {count_v} neighbors in block {other}")]
    NotEquitable {
        block: usize,
        other: usize,
        u: usize,
        v: usize,
        count_u: usize,
        count_v: usize,
    },

    /// Blocks must be nonempty, disjoint and cover the vertex set.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Power iteration did not converge and no exact fallback applies.
    #[error("Perron iteration did not converge after {iterations} steps on {n} vertices")]
    PerronNoConvergence { n: usize, iterations: usize },

    /// The spectral radius of an edgeless graph is not of interest here.
    #[error("graph has no edges")]
    EmptyGraph,

    /// Malformed graph6 input.
    #[error("graph6: {0}")]
    Graph6(String),
}
