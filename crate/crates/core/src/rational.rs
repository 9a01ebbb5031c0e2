//! Exact rational scalars.
//!
//! Everything symbolic in this crate is built over arbitrary-precision
//! fractions, kept in lowest terms with a positive denominator. The heavy
//! lifting is delegated to `num-rational`; this module pins the concrete
//! type and adds the few constructors used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. `d` must be nonzero.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `1 / 10^k`, the tolerance shape used by the root isolators.
pub fn rat_pow10_inv(k: u32) -> Rational {
    BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(k))
}

/// Exact sign as -1, 0, +1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Nearest double; precise enough for reporting (the exact value stays
/// rational everywhere else).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}
