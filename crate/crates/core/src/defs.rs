//! The two objects everything compares against: the extremal quartic
//! `p_m(x) = x^4 - m x^2 - (m-2) x + m/2 - 1`, whose largest real root is
//! the extremal spectral radius for even size `m`, and the closed-form
//! lower bound `L_m = (1 + sqrt(4m-5)) / 2` for that root.

use crate::poly::{BiPoly, UniPoly};
use crate::rational::{rat, rat_int, rat_pow10_inv, Rational};

/// `p_m` with `m` symbolic.
pub fn p_m_bipoly() -> BiPoly {
    let x = BiPoly::x();
    let m = BiPoly::m();
    let mut p = x.pow(4);
    p = &p - &(&m * &x.pow(2));
    p = &p - &(&(&m - &BiPoly::from_int(2)) * &x);
    p = &p + &(&m.scale(&rat(1, 2)) - &BiPoly::one());
    p
}

/// `p_m` at a fixed edge count.
pub fn p_m_poly(m: u64) -> UniPoly {
    p_m_bipoly().subst_m(&rat_int(m as i64))
}

/// `4m - 5`, the radicand of `L_m`, as a polynomial in `m`.
pub fn radicand_poly() -> UniPoly {
    UniPoly::from_ints(&[-5, 4])
}

/// `4m - 5` at a fixed edge count.
pub fn radicand(m: &Rational) -> Rational {
    radicand_poly().eval(m)
}

/// Default width for rational root isolation: 1e-12.
pub fn default_root_tol() -> Rational {
    rat_pow10_inv(12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_m_matches_known_coefficients() {
        // p_18 = x^4 - 18x^2 - 16x + 8.
        assert_eq!(p_m_poly(18), UniPoly::from_ints(&[8, -16, -18, 0, 1]));
        // p_6 = x^4 - 6x^2 - 4x + 2.
        assert_eq!(p_m_poly(6), UniPoly::from_ints(&[2, -4, -6, 0, 1]));
    }

    #[test]
    fn constant_term_is_half_m_minus_one() {
        let p = p_m_bipoly();
        assert_eq!(
            p.coeff_x(0),
            UniPoly::from_coeffs(vec![rat_int(-1), rat(1, 2)])
        );
    }
}
