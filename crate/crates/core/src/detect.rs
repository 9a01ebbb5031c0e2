//! Detection of H(4,3): a triangle and a 4-cycle sharing exactly one
//! vertex, both as subgraphs (not necessarily induced).
//!
//! Fast path: enumerate triangles via common-neighbor bitsets, then for
//! each triangle vertex `w` look for an opposite corner `v` outside the
//! triangle with two common neighbors of `w` avoiding the triangle; that
//! yields the 4-cycle `w-a-v-b-w` meeting the triangle exactly in `w`.
//! The independent oracle re-finds the fixed 6-vertex pattern by
//! exhaustive vertex-map backtracking.

use crate::graph::Graph;

/// Witness of containment: the triangle, the 4-cycle in traversal order,
/// and their unique shared vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H43Witness {
    pub triangle: [usize; 3],
    pub cycle: [usize; 4],
    pub shared: usize,
}

/// The pattern itself: triangle 0-1-2 and 4-cycle 2-3-4-5 glued at 2.
pub fn h43_pattern() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2)])
}

pub fn contains_h43(g: &Graph) -> bool {
    find_h43(g).is_some()
}

/// Returns a witness if the graph contains H(4,3).
pub fn find_h43(g: &Graph) -> Option<H43Witness> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    let words = g.row(0).len();
    let mut tri_mask = vec![0u64; words];
    // Triangles as (u < v adjacent, t > v common neighbor).
    for u in 0..n {
        for v in g.neighbors(u).filter(|&v| v > u) {
            let commons: Vec<usize> = BitAnd::new(g.row(u), g.row(v)).filter(|&t| t > v).collect();
            for t in commons {
                for w in tri_mask.iter_mut() {
                    *w = 0;
                }
                for x in [u, v, t] {
                    tri_mask[x / 64] |= 1 << (x % 64);
                }
                // Shared vertex w, opposite corner q outside the triangle.
                for shared in [u, v, t] {
                    for q in 0..n {
                        if q == u || q == v || q == t || q == shared {
                            continue;
                        }
                        if g.common_neighbors_masked(shared, q, &tri_mask) >= 2 {
                            let mut corners = BitAnd::new(g.row(shared), g.row(q))
                                .filter(|&c| c != u && c != v && c != t);
                            let a = corners.next().unwrap();
                            let b = corners.next().unwrap();
                            return Some(H43Witness {
                                triangle: [u, v, t],
                                cycle: [shared, a, q, b],
                                shared,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive subgraph-isomorphism oracle for the fixed pattern, by
/// backtracking over injective vertex maps. Semantically identical to
/// `contains_h43`; kept independent of it for cross-checking. Intended for
/// small graphs.
pub fn brute_force_h43_oracle(g: &Graph) -> bool {
    let pattern = h43_pattern();
    if g.n() < pattern.n() {
        return false;
    }
    // Assignment order keeps edge checks early: glue vertex first.
    let order = [2usize, 0, 1, 3, 5, 4];
    let mut assignment = [usize::MAX; 6];
    let mut used = vec![false; g.n()];
    embed(g, &pattern, &order, 0, &mut assignment, &mut used)
}

fn embed(
    g: &Graph,
    pattern: &Graph,
    order: &[usize; 6],
    depth: usize,
    assignment: &mut [usize; 6],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'candidates: for cand in 0..g.n() {
        if used[cand] {
            continue;
        }
        for &earlier in &order[..depth] {
            if pattern.has_edge(p, earlier) && !g.has_edge(cand, assignment[earlier]) {
                continue 'candidates;
            }
        }
        assignment[p] = cand;
        used[cand] = true;
        if embed(g, pattern, order, depth + 1, assignment, used) {
            return true;
        }
        used[cand] = false;
        assignment[p] = usize::MAX;
    }
    false
}

struct BitAnd<'a> {
    a: &'a [u64],
    b: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitAnd<'a> {
    fn new(a: &'a [u64], b: &'a [u64]) -> Self {
        let current = if a.is_empty() { 0 } else { a[0] & b[0] };
        BitAnd {
            a,
            b,
            word_idx: 0,
            current,
        }
    }
}

impl Iterator for BitAnd<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.a.len() {
                return None;
            }
            self.current = self.a[self.word_idx] & self.b[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_s_minus, build_t};

    fn k(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn pattern_detects_itself() {
        let h = h43_pattern();
        let w = find_h43(&h).expect("pattern contains itself");
        assert_eq!(w.shared, 2);
        assert!(brute_force_h43_oracle(&h));
    }

    #[test]
    fn small_negatives() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!contains_h43(&c4));
        assert!(!brute_force_h43_oracle(&c4));
        assert!(!contains_h43(&k(4)));
        assert!(!brute_force_h43_oracle(&k(4)));
        // In K5 any triangle and 4-cycle overlap in at least two vertices.
        assert!(!contains_h43(&k(5)));
        assert!(!brute_force_h43_oracle(&k(5)));
    }

    #[test]
    fn k6_contains_it() {
        assert!(contains_h43(&k(6)));
        assert!(brute_force_h43_oracle(&k(6)));
    }

    #[test]
    fn families_are_free() {
        let t = build_t(18).unwrap();
        let s = build_s_minus(18).unwrap();
        assert!(!contains_h43(&t));
        assert!(!contains_h43(&s));
        // Cross-checked against the exhaustive oracle at this size.
        assert!(!brute_force_h43_oracle(&t));
        assert!(!brute_force_h43_oracle(&s));
    }

    #[test]
    fn witness_is_valid() {
        let h = h43_pattern();
        let w = find_h43(&h).unwrap();
        // Triangle edges, cycle edges, and the single overlap.
        for i in 0..3 {
            assert!(h.has_edge(w.triangle[i], w.triangle[(i + 1) % 3]));
        }
        for i in 0..4 {
            assert!(h.has_edge(w.cycle[i], w.cycle[(i + 1) % 4]));
        }
        let overlap: Vec<usize> = w
            .triangle
            .iter()
            .filter(|v| w.cycle.contains(v))
            .copied()
            .collect();
        assert_eq!(overlap, vec![w.shared]);
    }

    #[test]
    fn agrees_on_all_graphs_up_to_six_vertices() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges);
                assert_eq!(
                    contains_h43(&g),
                    brute_force_h43_oracle(&g),
                    "disagreement at n={n} mask={mask:b}"
                );
            }
        }
    }

    #[test]
    fn monotone_under_edge_addition() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(6..=9);
            let mut g = Graph::new(n);
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            pairs.shuffle(&mut rng);
            let mut seen_true = false;
            for (u, v) in pairs {
                g.add_edge(u, v);
                let now = contains_h43(&g);
                assert!(now || !seen_true, "containment lost after adding an edge");
                seen_true = now;
            }
        }
    }
}
