//! Sparse polynomials in two indeterminates `x` and `m` over the
//! rationals. `x` is the spectral variable, `m` the (even) edge count kept
//! symbolic. Division treats `x` as the main variable with coefficients in
//! the polynomial ring in `m`; the divisors of interest are monic in `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::UniPoly;
use crate::rational::{rat_int, Rational};

/// Map from `(x_degree, m_degree)` to a nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    /// The indeterminate `m`.
    pub fn m() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(x_deg: u32, m_deg: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_deg, m_deg), c);
        }
        BiPoly { terms }
    }

    /// Builds `sum coeffs[k](m) * x^k` from polynomials in `m`.
    pub fn from_x_coeffs(coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (j, a) in c.coeffs().iter().enumerate() {
                out.insert((k as u32, j as u32), a.clone());
            }
        }
        out
    }

    /// Lifts a polynomial in `m` to a bivariate constant in `x`.
    pub fn from_m_poly(p: &UniPoly) -> Self {
        Self::from_x_coeffs(std::slice::from_ref(p))
    }

    fn insert(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(xd, _)| xd).max()
    }

    pub fn m_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, md)| md).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `x^k` as a polynomial in `m`.
    pub fn coeff_x(&self, k: u32) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(xd, md), c) in &self.terms {
            if xd == k {
                if coeffs.len() <= md as usize {
                    coeffs.resize(md as usize + 1, Rational::zero());
                }
                coeffs[md as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitutes a rational value for `m`, leaving a polynomial in `x`.
    pub fn subst_m(&self, m: &Rational) -> UniPoly {
        let deg = self.x_degree().map_or(0, |d| d as usize);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(xd, md), c) in &self.terms {
            coeffs[xd as usize] += c * m.pow(md as i32);
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rational, m: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(xd, md), c) in &self.terms {
            acc += c * x.pow(xd as i32) * m.pow(md as i32);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, m: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(xd, md), c)| {
                crate::rational::to_f64(c) * x.powi(xd as i32) * m.powi(md as i32)
            })
            .sum()
    }

    pub fn derivative_x(&self) -> BiPoly {
        let mut out = Self::zero();
        for (&(xd, md), c) in &self.terms {
            if xd > 0 {
                out.insert((xd - 1, md), c * rat_int(xd as i64));
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> BiPoly {
        let mut out = Self::zero();
        if s.is_zero() {
            return out;
        }
        for (&k, c) in &self.terms {
            out.terms.insert(k, c * s);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with remainder in the main variable `x`: requires `g`
    /// monic in `x` so the coefficient arithmetic stays polynomial in `m`.
    /// Returns `(q, r)` with `self = q*g + r` and `x_deg(r) < x_deg(g)`.
    pub fn divmod_x(&self, g: &BiPoly) -> Result<(BiPoly, BiPoly), Error> {
        let dg = g.x_degree().ok_or_else(|| Error::NonMonicDivisor {
            leading: "0 (zero divisor)".to_string(),
        })?;
        let lead = g.coeff_x(dg);
        if !(lead.degree() == Some(0) && lead.is_monic()) {
            return Err(Error::NonMonicDivisor {
                leading: lead.display("m"),
            });
        }
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(dr) = rem.x_degree() {
            if dr < dg {
                break;
            }
            let c = rem.coeff_x(dr); // in m
            let shift = dr - dg;
            let term = BiPoly::from_x_coeffs(
                &std::iter::repeat_with(UniPoly::zero)
                    .take(shift as usize)
                    .chain(std::iter::once(c))
                    .collect::<Vec<_>>(),
            );
            rem = &rem - &(&term * g);
            quot = &quot + &term;
        }
        Ok((quot, rem))
    }

    /// Exact division over the integral domain Q[m][x]; `None` when the
    /// division leaves a remainder anywhere. Used by the fraction-free
    /// determinant, whose intermediate divisions are exact by construction.
    pub fn exact_div(&self, g: &BiPoly) -> Option<BiPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dg = g.x_degree()?;
        let glead = g.coeff_x(dg);
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(dr) = rem.x_degree() {
            if dr < dg && !rem.is_zero() {
                return None;
            }
            let c = rem.coeff_x(dr).exact_div(&glead)?;
            let shift = dr - dg;
            let mut term = BiPoly::from_m_poly(&c);
            term = &term * &BiPoly::monomial(shift, 0, Rational::one());
            rem = &rem - &(&term * g);
            quot = &quot + &term;
            if rem.is_zero() {
                return Some(quot);
            }
        }
        rem.is_zero().then_some(quot)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, -c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(xa, ma), a) in &self.terms {
            for (&(xb, mb), b) in &rhs.terms {
                out.insert((xa + xb, ma + mb), a * b);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let top = self.x_degree().unwrap();
        let mut parts = Vec::new();
        for k in (0..=top).rev() {
            let c = self.coeff_x(k);
            if c.is_zero() {
                continue;
            }
            let coeff = c.display("m");
            let part = match k {
                0 => coeff,
                1 if coeff == "1" => "x".to_string(),
                1 => format!("({coeff})*x"),
                _ if coeff == "1" => format!("x^{k}"),
                _ => format!("({coeff})*x^{k}"),
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defs::p_m_bipoly;
    use crate::rational::rat;

    fn m() -> BiPoly {
        BiPoly::m()
    }
    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn c(n: i64) -> BiPoly {
        BiPoly::from_int(n)
    }

    #[test]
    fn substitution_consistent_with_coefficients() {
        let f = &(&x().pow(2) * &m()) - &(&m().pow(3) + &c(7));
        let at = f.subst_m(&rat_int(3));
        assert_eq!(at, UniPoly::from_ints(&[-34, 0, 3]));
        assert_eq!(f.eval(&rat_int(2), &rat_int(3)), rat_int(-22));
    }

    #[test]
    fn self_division_is_trivial() {
        let p = p_m_bipoly();
        let (q, r) = p.divmod_x(&p).unwrap();
        assert_eq!(q, BiPoly::one());
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_recombines_and_bounds_degree() {
        let p = p_m_bipoly();
        // A made-up dividend: (x^3 - m x + 2) * p + (m x^2 - 1).
        let q_true = &(&x().pow(3) - &(&m() * &x())) + &c(2);
        let r_true = &(&m() * &x().pow(2)) - &c(1);
        let f = &(&q_true * &p) + &r_true;
        let (q, r) = f.divmod_x(&p).unwrap();
        assert_eq!(q, q_true);
        assert_eq!(r, r_true);
        assert!(r.x_degree().unwrap() < p.x_degree().unwrap());
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let g = &m() * &x(); // leading x-coefficient m
        let err = x().pow(2).divmod_x(&g).unwrap_err();
        assert!(err.to_string().contains("not monic"));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&x() + &m()) * &(&x().pow(2) - &c(3));
        assert_eq!(a.exact_div(&(&x() + &m())).unwrap(), &x().pow(2) - &c(3));
        assert!(a.exact_div(&(&x() + &c(1))).is_none());
    }

    #[test]
    fn fractional_coefficients_survive() {
        let f = BiPoly::monomial(1, 1, rat(11, 2));
        assert_eq!(f.subst_m(&rat_int(2)), UniPoly::from_ints(&[0, 11]));
    }
}
