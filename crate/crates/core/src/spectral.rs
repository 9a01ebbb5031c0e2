//! Perron root computation and comparison against the extremal value.
//!
//! Floating point is used for the power iteration only; every verdict
//! that matters is backed by the exact Sturm machinery, and any
//! comparison landing inside the margin is reported as such rather than
//! decided numerically.

use crate::defs::{default_root_tol, p_m_poly};
use crate::error::Error;
use crate::graph::{quotient, Graph, Partition, QuotientMatrix};
use crate::poly::{IsolatedRoot, RootInterval};

const MAX_ITERATIONS: usize = 100_000;
const EXACT_FALLBACK_MAX_N: usize = 14;

/// Largest adjacency eigenvalue of `g` to within `tol`, by shifted power
/// iteration on `A + I` with the all-ones start vector (deterministic) and
/// a Rayleigh-quotient stopping rule. On non-convergence the exact
/// characteristic-polynomial route takes over for graphs small enough.
pub fn perron_root(g: &Graph, tol: f64) -> Result<f64, Error> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    let mut last = f64::NAN;
    for _ in 0..MAX_ITERATIONS {
        // w = (A + I) v; the shift keeps bipartite ±rho pairs from
        // stalling the iteration.
        for (i, wi) in w.iter_mut().enumerate() {
            let mut acc = v[i];
            for j in g.neighbors(i) {
                acc += v[j];
            }
            *wi = acc;
        }
        let dot: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let norm_sq: f64 = v.iter().map(|a| a * a).sum();
        let rayleigh = dot / norm_sq - 1.0;
        let scale = 1.0 / w.iter().map(|a| a * a).sum::<f64>().sqrt();
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi * scale;
        }
        if (rayleigh - last).abs() < tol / 10.0 {
            return Ok(rayleigh);
        }
        last = rayleigh;
    }
    if n <= EXACT_FALLBACK_MAX_N {
        return Ok(exact_perron(g).approx_f64());
    }
    Err(Error::PerronNoConvergence {
        n,
        iterations: MAX_ITERATIONS,
    })
}

/// Exact route: characteristic polynomial of the adjacency matrix (as a
/// trivial quotient over singleton blocks), then Sturm isolation.
fn exact_perron(g: &Graph) -> RootInterval {
    let q = quotient(g, &Partition::singletons(g.n())).expect("singletons are equitable");
    largest_quotient_root(&q).interval
}

/// Isolated largest real root of a quotient matrix's characteristic
/// polynomial. Quotients of connected graphs are irreducible nonnegative
/// matrices, so the root exists.
pub fn largest_quotient_root(q: &QuotientMatrix) -> IsolatedRoot {
    IsolatedRoot::largest(&q.char_poly(), &default_root_tol())
        .expect("quotient matrix has a real eigenvalue")
}

/// The extremal value: largest real root of `p_m`, isolated exactly and
/// reported with its rational interval.
#[derive(Clone, Debug)]
pub struct RhoPrime {
    pub m: u64,
    pub interval: RootInterval,
    pub value: f64,
}

pub fn rho_prime(m: u64) -> Result<RhoPrime, Error> {
    if !m.is_multiple_of(2) || m < 6 {
        return Err(Error::InvalidM {
            what: "extremal value",
            m,
            requirement: "m must be even and at least 6".into(),
        });
    }
    let root = IsolatedRoot::largest(&p_m_poly(m), &default_root_tol())?;
    let value = root.interval.approx_f64();
    Ok(RhoPrime {
        m,
        interval: root.interval,
        value,
    })
}

/// Three-way comparison of a graph's spectral radius against the
/// extremal value; within `margin` the verdict is deliberately
/// non-committal so callers escalate to exact treatment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Below,
    Above,
    EqualWithinMargin,
}

pub fn compare_rho(g: &Graph, m: u64, margin: f64) -> Result<Verdict, Error> {
    let rho = perron_root(g, 1e-9)?;
    let target = rho_prime(m)?.value;
    Ok(if (rho - target).abs() <= margin {
        Verdict::EqualWithinMargin
    } else if rho > target {
        Verdict::Above
    } else {
        Verdict::Below
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        build_ew1_family, build_s_minus, build_t, family_partition, Ew1Kind, FamilyKind,
    };
    use crate::poly::UniPoly;
    use crate::rational::rat_pow10_inv;

    #[test]
    fn complete_graph_and_cycle() {
        let k5 = build_t(10).unwrap();
        assert!((perron_root(&k5, 1e-9).unwrap() - 4.0).abs() < 1e-8);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!((perron_root(&c4, 1e-9).unwrap() - 2.0).abs() < 1e-8);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(matches!(
            perron_root(&Graph::new(3), 1e-9),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn obstruction_root_matches_cubic() {
        // rho(T_18) is the largest root of x^3 - 3x^2 - 12x + 24.
        let g = build_t(18).unwrap();
        let rho = perron_root(&g, 1e-9).unwrap();
        let cubic = UniPoly::from_ints(&[24, -12, -3, 1]);
        let root = IsolatedRoot::largest(&cubic, &rat_pow10_inv(12)).unwrap();
        assert!((rho - root.interval.approx_f64()).abs() < 1e-9);
    }

    #[test]
    fn rho_prime_reference_values() {
        for (m, expected) in [
            (18, 4.593888315670),
            (20, 4.831170119854),
            (22, 5.056127739620),
        ] {
            let r = rho_prime(m).unwrap();
            assert!((r.value - expected).abs() < 1e-9, "m = {m}");
        }
        assert!(rho_prime(7).is_err());
    }

    #[test]
    fn perron_agrees_with_quotient_root_for_families() {
        for kind in FamilyKind::ALL {
            let m = kind.min_m() + 6;
            let g = kind.build(m).unwrap();
            let p = family_partition(kind, m).unwrap();
            let q = quotient(&g, &p).unwrap();
            let exact = largest_quotient_root(&q).interval.approx_f64();
            let numeric = perron_root(&g, 1e-10).unwrap();
            assert!(
                (exact - numeric).abs() < 1e-9,
                "{kind:?}: exact {exact} vs numeric {numeric}"
            );
        }
    }

    #[test]
    fn perron_bounds() {
        for (kind, m) in [
            (FamilyKind::SMinus, 40),
            (FamilyKind::T, 30),
            (FamilyKind::Same, 26),
        ] {
            let g = kind.build(m).unwrap();
            let rho = perron_root(&g, 1e-9).unwrap();
            let max_deg = g.max_degree() as f64;
            let avg_deg = 2.0 * g.edge_count() as f64 / g.n() as f64;
            assert!(rho >= avg_deg.max(max_deg.sqrt()) - 1e-6);
            assert!(rho <= max_deg + 1e-6);
        }
    }

    #[test]
    fn verdicts() {
        let m = 16;
        let t = build_t(m).unwrap();
        assert_eq!(compare_rho(&t, m, 1e-6).unwrap(), Verdict::Above);
        let t18 = build_t(18).unwrap();
        assert_eq!(compare_rho(&t18, 18, 1e-6).unwrap(), Verdict::Below);
        let s = build_s_minus(18).unwrap();
        assert_eq!(
            compare_rho(&s, 18, 1e-6).unwrap(),
            Verdict::EqualWithinMargin
        );
        let same = build_ew1_family(Ew1Kind::Same, 18).unwrap();
        assert_eq!(compare_rho(&same, 18, 1e-6).unwrap(), Verdict::Below);
    }

    #[test]
    fn rho_prime_exceeds_l_m_numerically() {
        for m in (6..=500u64).step_by(2) {
            let l = (1.0 + (4.0 * m as f64 - 5.0).sqrt()) / 2.0;
            assert!(rho_prime(m).unwrap().value > l, "m = {m}");
        }
    }
}
