//! Sturm-sequence isolation of the largest real root.
//!
//! Intervals stay rational end to end; floating point appears only when a
//! caller asks for an approximation of the midpoint. The input polynomial
//! is silently replaced by its squarefree part, which has the same real
//! roots, so the sign-variation count of the Sturm chain is exact.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::UniPoly;
use crate::rational::{rat, rat_int, sign, to_f64, Rational};

/// Closed rational interval `[lo, hi]` known to contain exactly one real
/// root of the polynomial it was produced from.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * rat(1, 2)
    }

    pub fn approx_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    /// Strict separation test.
    pub fn entirely_below(&self, other: &RootInterval) -> bool {
        self.hi < other.lo
    }
}

/// A squarefree polynomial together with its Sturm chain and an interval
/// isolating its largest real root. `bisect` keeps shrinking the interval
/// without re-running variation counts: with a single simple root inside,
/// sign agreement with the left endpoint decides the half.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    poly: UniPoly,
    chain: Vec<UniPoly>,
    pub interval: RootInterval,
}

fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[k - 2].divmod(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let s = sign(&p.eval(x));
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Number of distinct real roots in `(lo, hi]`, assuming `f(lo) != 0`.
fn count_roots(chain: &[UniPoly], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// `1 + max |a_k / a_n|`; every real root lies strictly inside `(-B, B)`.
fn cauchy_bound(f: &UniPoly) -> Rational {
    let lead = f.leading().expect("nonzero polynomial").abs();
    let mut best = Rational::zero();
    for c in f.coeffs() {
        let q = c.abs() / &lead;
        if q > best {
            best = q;
        }
    }
    best + rat_int(1)
}

/// A point close to the midpoint of `(lo, hi)` where `f` does not vanish.
/// `f` has finitely many roots, so nudging the midpoint toward `hi` by
/// successive halvings terminates.
fn nonvanishing_midpoint(f: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
    let mut mid = (lo + hi) * rat(1, 2);
    let mut step = (hi - lo) * rat(1, 4);
    while f.eval(&mid).is_zero() {
        mid += &step;
        step *= rat(1, 2);
    }
    mid
}

impl IsolatedRoot {
    /// Isolates the largest real root of `f` into an interval of width at
    /// most `tol` containing exactly that root.
    pub fn largest(f: &UniPoly, tol: &Rational) -> Result<Self, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() == Some(0) {
            return Err(Error::NoRealRoot);
        }
        let poly = f.squarefree_part();
        let chain = sturm_chain(&poly);
        let bound = cauchy_bound(&poly);
        let mut lo = -&bound;
        let mut hi = bound;
        let mut inside = count_roots(&chain, &lo, &hi);
        if inside == 0 {
            return Err(Error::NoRealRoot);
        }
        // Keep the rightmost root; stop once it is alone and the interval
        // is narrow enough.
        while inside > 1 || &hi - &lo > *tol {
            let mid = nonvanishing_midpoint(&poly, &lo, &hi);
            let right = count_roots(&chain, &mid, &hi);
            if right >= 1 {
                lo = mid;
                inside = right;
            } else {
                hi = mid;
            }
        }
        Ok(IsolatedRoot {
            poly,
            chain,
            interval: RootInterval { lo, hi },
        })
    }

    /// Halves the isolating interval once.
    pub fn bisect(&mut self) {
        let mid = nonvanishing_midpoint(&self.poly, &self.interval.lo, &self.interval.hi);
        // One simple root inside and f(lo) != 0, so a sign agreement at the
        // midpoint puts the root strictly to the right.
        if sign(&self.poly.eval(&mid)) == sign(&self.poly.eval(&self.interval.lo)) {
            self.interval.lo = mid;
        } else {
            self.interval.hi = mid;
        }
    }

    /// Shrinks until the width drops below `tol`.
    pub fn refine_to(&mut self, tol: &Rational) {
        while self.interval.width() > *tol {
            self.bisect();
        }
    }

    /// Sturm count over the current interval; used by the self-checks.
    pub fn roots_inside(&self) -> usize {
        count_roots(&self.chain, &self.interval.lo, &self.interval.hi)
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }
}

/// Convenience wrapper returning just the isolating interval of the
/// largest real root.
pub fn largest_root(f: &UniPoly, tol: &Rational) -> Result<RootInterval, Error> {
    Ok(IsolatedRoot::largest(f, tol)?.interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_pow10_inv;

    /// Independent float oracle: scan for the rightmost sign change and
    /// bisect in doubles.
    fn float_largest_root(f: &UniPoly, lo: f64, hi: f64) -> f64 {
        let steps = 4000;
        let h = (hi - lo) / steps as f64;
        let mut bracket = None;
        for k in 0..steps {
            let a = lo + k as f64 * h;
            let b = a + h;
            if f.eval_f64(a) * f.eval_f64(b) <= 0.0 {
                bracket = Some((a, b));
            }
        }
        let (mut a, mut b) = bracket.expect("oracle found no sign change");
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if f.eval_f64(a) * f.eval_f64(mid) <= 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn quartic_known_root() {
        // x^4 - 18x^2 - 16x + 8; largest real root 4.593888315670...
        let f = UniPoly::from_ints(&[8, -16, -18, 0, 1]);
        let iv = largest_root(&f, &rat_pow10_inv(12)).unwrap();
        assert!((iv.approx_f64() - 4.593888315670).abs() < 1e-9);
    }

    #[test]
    fn rational_root_exact() {
        let f = UniPoly::from_ints(&[-1, 0, 1]);
        let iv = largest_root(&f, &rat_pow10_inv(12)).unwrap();
        assert!((iv.approx_f64() - 1.0).abs() < 1e-12);
        assert!(iv.lo <= rat_int(1) && rat_int(1) <= iv.hi);
    }

    #[test]
    fn no_real_root() {
        let f = UniPoly::from_ints(&[1, 0, 1]);
        assert!(matches!(
            largest_root(&f, &rat_pow10_inv(6)),
            Err(Error::NoRealRoot)
        ));
    }

    #[test]
    fn cubic_against_float_oracle() {
        // x^3 - 3x^2 - 12x + 24, the m = 18 obstruction cubic; expected in
        // (4.4, 4.6) per the float bisection oracle.
        let f = UniPoly::from_ints(&[24, -12, -3, 1]);
        let oracle = float_largest_root(&f, -10.0, 10.0);
        assert!(oracle > 4.4 && oracle < 4.6);
        let iv = largest_root(&f, &rat_pow10_inv(12)).unwrap();
        assert!((iv.approx_f64() - oracle).abs() < 1e-9);
    }

    #[test]
    fn interval_certificate_properties() {
        let f = UniPoly::from_ints(&[8, -16, -18, 0, 1]);
        let isolated = IsolatedRoot::largest(&f, &rat_pow10_inv(9)).unwrap();
        assert_eq!(isolated.roots_inside(), 1);
        let at_lo = isolated.poly().eval(&isolated.interval.lo);
        let at_hi = isolated.poly().eval(&isolated.interval.hi);
        assert!(sign(&at_lo) as i16 * sign(&at_hi) as i16 <= 0);
    }

    #[test]
    fn multiple_roots_handled() {
        // (x-2)^3: squarefree reduction must make the chain usable.
        let f = UniPoly::from_ints(&[-2, 1]).pow(3);
        let iv = largest_root(&f, &rat_pow10_inv(10)).unwrap();
        assert!((iv.approx_f64() - 2.0).abs() < 1e-9);
    }
}
