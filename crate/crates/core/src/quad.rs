//! Exact arithmetic in the quadratic extension generated by `s` with
//! `s^2 = 4m - 5`.
//!
//! Elements are `a(m) + b(m) * s` where `a`, `b` are rational functions of
//! `m`. All the closed forms evaluated at `L_m = (1 + s)/2` live here,
//! as do their derivatives with respect to `m` (using `ds/dm = 2/s`) and
//! the exact sign determination at fixed rational `m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::defs::radicand_poly;
use crate::poly::{BiPoly, UniPoly};
use crate::rational::{rat, sign, to_f64, Rational};

/// Reduced fraction of polynomials in `m`: numerator and monic denominator
/// with no common factor. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        // Canonical form: monic denominator.
        let lead = den.leading().unwrap().clone();
        den = den.scale(&lead.recip());
        num = num.scale(&lead.recip());
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of the zero function");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Quotient-rule derivative with respect to `m`.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den)
    }

    /// `None` when the denominator vanishes at `m`.
    pub fn eval(&self, m: &Rational) -> Option<Rational> {
        let d = self.den.eval(m);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(m) / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add(&-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monic() && self.den.degree() == Some(0) {
            write!(f, "{}", self.num.display("m"))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.num.display("m"),
                self.den.display("m")
            )
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Element `a(m) + b(m) * s` of the extension, reduced so no power of `s`
/// above one appears.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadElem {
    a: RatFunc,
    b: RatFunc,
}

impl QuadElem {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        QuadElem { a, b }
    }

    pub fn zero() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::rational(RatFunc::one())
    }

    pub fn rational(a: RatFunc) -> Self {
        Self::new(a, RatFunc::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self::rational(RatFunc::constant(c))
    }

    /// The generator `s = sqrt(4m - 5)`.
    pub fn s() -> Self {
        Self::new(RatFunc::zero(), RatFunc::one())
    }

    /// `L_m = (1 + s) / 2`.
    pub fn l_m() -> Self {
        Self::new(RatFunc::constant(rat(1, 2)), RatFunc::constant(rat(1, 2)))
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let f = RatFunc::constant(c.clone());
        Self::new(&self.a * &f, &self.b * &f)
    }

    /// Exact derivative with respect to `m`, folding `ds/dm = 2/s` back
    /// into the module basis via `2/s = 2s/(4m-5)`.
    pub fn m_derivative(&self) -> Self {
        let radicand = RatFunc::from_poly(radicand_poly());
        let extra = &(&self.b + &self.b) * &radicand.recip();
        Self::new(self.a.derivative(), &self.b.derivative() + &extra)
    }

    /// Substitutes a fixed rational `m >= 3/2`; `None` if a denominator
    /// vanishes there (cannot happen for the admissible range, where the
    /// only denominators are powers of `4m - 5`).
    pub fn eval_at(&self, m: &Rational) -> Option<QuadValue> {
        Some(QuadValue {
            a: self.a.eval(m)?,
            b: self.b.eval(m)?,
            d: crate::defs::radicand(m),
        })
    }
}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.a, -&self.b)
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 (4m-5) + (a1 b2 + b1 a2) s.
        let radicand = RatFunc::from_poly(radicand_poly());
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &radicand);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadElem::new(a, b)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*s", self.a, self.b)
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({self})")
    }
}

/// Value `a + b * sqrt(d)` at a fixed rational `m`, with `d = 4m - 5 > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadValue {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl QuadValue {
    /// Exact sign, decided by comparing `a^2` against `b^2 d` together
    /// with the signs of `a` and `b`; no floating point involved.
    pub fn sign(&self) -> i8 {
        assert!(
            self.d.is_positive(),
            "sign of a + b*sqrt(d) needs d > 0, got d = {}",
            self.d
        );
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        match (sa, sb) {
            (0, _) => sb,
            (_, 0) => sa,
            _ if sa == sb => sa,
            _ => {
                // Opposite signs: |a| vs |b| sqrt(d) decides.
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * &self.d;
                match a2.cmp(&b2d) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * to_f64(&self.d).sqrt()
    }
}

/// Evaluates a bivariate polynomial at `x = at` (a quadratic element),
/// leaving `m` symbolic: Horner in the extension ring.
pub fn quad_eval(f: &BiPoly, at: &QuadElem) -> QuadElem {
    let Some(deg) = f.x_degree() else {
        return QuadElem::zero();
    };
    let mut acc = QuadElem::zero();
    for k in (0..=deg).rev() {
        acc = &(&acc * at) + &QuadElem::rational(RatFunc::from_poly(f.coeff_x(k)));
    }
    acc
}

/// Exact sign of a quadratic element at a fixed rational `m >= 3/2`.
pub fn quad_sign(e: &QuadElem, m: &Rational) -> i8 {
    e.eval_at(m)
        .expect("denominator vanished in admissible range")
        .sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defs::p_m_bipoly;
    use crate::rational::rat_int;

    fn mf(coeffs: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_ints(coeffs))
    }

    #[test]
    fn ratfunc_reduces() {
        // (m^2 - 1) / (m - 1) = m + 1.
        let f = RatFunc::new(
            UniPoly::from_ints(&[-1, 0, 1]),
            UniPoly::from_ints(&[-1, 1]),
        );
        assert_eq!(f, mf(&[1, 1]));
    }

    #[test]
    fn s_squared_is_radicand() {
        let s = QuadElem::s();
        let sq = &s * &s;
        assert_eq!(sq, QuadElem::rational(mf(&[-5, 4])));
    }

    #[test]
    fn derivative_of_s() {
        // d/dm s = 2s / (4m - 5).
        let ds = QuadElem::s().m_derivative();
        assert!(ds.a().is_zero());
        assert_eq!(
            ds.b(),
            &RatFunc::new(UniPoly::from_ints(&[2]), UniPoly::from_ints(&[-5, 4]))
        );
    }

    #[test]
    fn p_m_at_l_m_is_minus_quarter() {
        // The certified lower bound: p_m(L_m) = -1/4 identically.
        let v = quad_eval(&p_m_bipoly(), &QuadElem::l_m());
        assert_eq!(v, QuadElem::constant(rat(-1, 4)));
    }

    #[test]
    fn p_m_at_zero_is_constant_term() {
        let v = quad_eval(&p_m_bipoly(), &QuadElem::zero());
        assert!(v.b().is_zero());
        assert_eq!(
            v.a(),
            &RatFunc::new(
                UniPoly::from_coeffs(vec![rat_int(-2), rat_int(1)]),
                UniPoly::from_ints(&[2]),
            )
        );
    }

    #[test]
    fn sign_cases() {
        // (-31 + 5s)/4 at m = 18: 25*67 = 1675 > 961 = 31^2, so positive.
        let e = QuadElem::new(RatFunc::constant(rat(-31, 4)), RatFunc::constant(rat(5, 4)));
        assert_eq!(quad_sign(&e, &rat_int(18)), 1);
        assert_eq!(quad_sign(&QuadElem::zero(), &rat_int(18)), 0);
        // -217 + 39s at m = 18 is positive (39^2 * 67 > 217^2).
        let e = QuadElem::new(
            RatFunc::constant(rat_int(-217)),
            RatFunc::constant(rat_int(39)),
        );
        assert_eq!(quad_sign(&e, &rat_int(18)), 1);
        // s - 9 at m = 18 is negative (67 < 81).
        let e = QuadElem::new(
            RatFunc::constant(rat_int(-9)),
            RatFunc::constant(rat_int(1)),
        );
        assert_eq!(quad_sign(&e, &rat_int(18)), -1);
    }

    #[test]
    fn eval_matches_f64() {
        let e = QuadElem::new(mf(&[-147, 4]), mf(&[-42, 11]));
        let m = rat_int(50);
        let v = e.eval_at(&m).unwrap();
        let expected = (-147.0 + 4.0 * 50.0) + (-42.0 + 11.0 * 50.0) * (4.0 * 50.0 - 5.0f64).sqrt();
        assert!((v.to_f64() - expected).abs() < 1e-9);
    }
}
