//! Property tests tying the exact kernel together: division recombines,
//! evaluation in the quadratic extension is a ring homomorphism, exact
//! signs agree with floating point away from zero, the fraction-free
//! determinant matches cofactor expansion, and the codecs round-trip.

use proptest::prelude::*;

use h43_core::defs::p_m_bipoly;
use h43_core::graph::{
    char_poly_symbolic, family_partition, from_graph6, quotient, symbolic_quotient, to_graph6,
    FamilyKind, Graph, QuotientMatrix,
};
use h43_core::poly::{BiPoly, UniPoly};
use h43_core::quad::{quad_eval, QuadElem};
use h43_core::rational::{rat, rat_int, to_f64, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(UniPoly::from_coeffs)
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..=3), (0u32..=2), small_rational()), 0..=6).prop_map(|terms| {
        let mut out = BiPoly::zero();
        for (xd, md, c) in terms {
            out = &out + &BiPoly::monomial(xd, md, c);
        }
        out
    })
}

/// Monic-in-x divisor of x-degree 2 with polynomial-in-m lower terms.
fn monic_divisor() -> impl Strategy<Value = BiPoly> {
    (bipoly(), bipoly()).prop_map(|(a, b)| {
        let low = |p: BiPoly, xd: u32| {
            let m_part = p.coeff_x(0);
            &BiPoly::from_m_poly(&m_part) * &BiPoly::monomial(xd, 0, rat_int(1))
        };
        let mut g = BiPoly::monomial(2, 0, rat_int(1));
        g = &g + &low(a, 1);
        g = &g + &low(b, 0);
        g
    })
}

proptest! {
    #[test]
    fn unipoly_divmod_recombines(f in unipoly(6), g in unipoly(3)) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divmod(&g);
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn bipoly_divmod_recombines(f in bipoly(), g in monic_divisor()) {
        let (q, r) = f.divmod_x(&g).unwrap();
        let back = &(&q * &g) + &r;
        prop_assert_eq!(&back, &f, "quotient {} remainder {}", q, r);
        prop_assert!(r.is_zero() || r.x_degree().unwrap() < g.x_degree().unwrap());
    }

    #[test]
    fn bipoly_division_by_p_m_recombines(f in bipoly()) {
        let p = p_m_bipoly();
        let (q, r) = f.divmod_x(&p).unwrap();
        prop_assert_eq!(&(&q * &p) + &r, f);
    }

    #[test]
    fn quad_eval_is_ring_homomorphism(f in bipoly(), g in bipoly()) {
        let l = QuadElem::l_m();
        let lhs = quad_eval(&(&f * &g), &l);
        let rhs = &quad_eval(&f, &l) * &quad_eval(&g, &l);
        prop_assert_eq!(lhs, rhs);
        let sum_lhs = quad_eval(&(&f + &g), &l);
        let sum_rhs = &quad_eval(&f, &l) + &quad_eval(&g, &l);
        prop_assert_eq!(sum_lhs, sum_rhs);
    }

    #[test]
    fn graph6_roundtrip(n in 1usize..40, edges in prop::collection::vec((0usize..40, 0usize..40), 0..80)) {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            let (u, v) = (u % n, v % n);
            if u != v {
                g.add_edge(u, v);
            }
        }
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn bareiss_matches_cofactor(size in 1usize..=5, entries in prop::collection::vec(-9i64..=9, 25)) {
        let rows: Vec<Vec<Rational>> = (0..size)
            .map(|i| (0..size).map(|j| rat_int(entries[i * 5 + j])).collect())
            .collect();
        let q = QuotientMatrix::from_rows(rows.clone());
        let via_bareiss = q.char_poly();
        let via_cofactor = char_poly_cofactor(&rows);
        prop_assert_eq!(via_bareiss, via_cofactor);
    }
}

/// Independent characteristic polynomial: cofactor expansion of
/// `det(xI - Q)` along the first row.
fn char_poly_cofactor(rows: &[Vec<Rational>]) -> UniPoly {
    let n = rows.len();
    let mat: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(-rows[i][j].clone());
                    if i == j {
                        &UniPoly::var() + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det(&mat)
}

fn cofactor_det(mat: &[Vec<UniPoly>]) -> UniPoly {
    let n = mat.len();
    if n == 0 {
        return UniPoly::one();
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = UniPoly::zero();
    for j in 0..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&k| k != j)
                    .map(|k| mat[i][k].clone())
                    .collect()
            })
            .collect();
        let term = &mat[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The symbolic characteristic polynomials specialize to the numeric ones
/// computed from concrete graphs, across twenty even sizes per family.
#[test]
fn symbolic_charpoly_specializes_to_numeric() {
    for kind in FamilyKind::ALL {
        let sym = char_poly_symbolic(&symbolic_quotient(kind));
        for k in 0..20u64 {
            let m = kind.min_m() + 2 + 4 * k;
            let g = kind.build(m).unwrap();
            let p = family_partition(kind, m).unwrap();
            let q = quotient(&g, &p).unwrap();
            assert_eq!(
                q.char_poly(),
                sym.subst_m(&rat_int(m as i64)),
                "{kind:?} at m = {m}"
            );
        }
    }
}

/// Exact sign determination agrees with 53-bit floating evaluation on a
/// thousand random elements bounded away from zero.
#[test]
fn quad_sign_agrees_with_floating_point() {
    use h43_core::quad::RatFunc;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    while checked < 1000 {
        let a = rat(rng.gen_range(-400..=400), rng.gen_range(1..=40));
        let b = rat(rng.gen_range(-400..=400), rng.gen_range(1..=40));
        let m = rat_int(rng.gen_range(2..=300));
        let e = QuadElem::new(RatFunc::constant(a.clone()), RatFunc::constant(b.clone()));
        let v = e.eval_at(&m).unwrap();
        let float = to_f64(&a) + to_f64(&b) * to_f64(&v.d).sqrt();
        if float.abs() <= 1e-6 {
            continue;
        }
        assert_eq!(
            v.sign(),
            if float > 0.0 { 1 } else { -1 },
            "a = {a}, b = {b}, m = {m}"
        );
        checked += 1;
    }
}
