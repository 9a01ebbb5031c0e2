//! Bitset graphs, equitable partitions, quotient matrices and exact
//! characteristic polynomials.

mod families;
mod graph6;

pub use families::{
    build_ew1_family, build_s_minus, build_t, family_partition, symbolic_quotient, Ew1Kind,
    FamilyKind,
};
pub use graph6::{from_graph6, to_graph6};

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::poly::{BiPoly, UniPoly};
use crate::rational::{rat_int, Rational};

/// Structural role tags used by the family constructors and the residual
/// search. Purely annotations; adjacency is authoritative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// The dominant vertex `u*`.
    Apex,
    /// The four vertices inducing the K4 in the apex neighborhood.
    Core,
    /// Neighborhood vertex with neighbors outside the closed neighborhood.
    Special,
    /// Neighborhood vertex of degree one.
    Leaf,
    /// Vertex outside the closed neighborhood of the apex.
    Outer,
    Unlabeled,
}

/// Undirected simple graph on `0..n` with bitset rows.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
    roles: Vec<Role>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![vec![0u64; words_for(n)]; n],
            roles: vec![Role::Unlabeled; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(&self.rows[v])
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    /// Number of common neighbors of `u` and `v` outside the `excluded`
    /// bitmask.
    pub(crate) fn common_neighbors_masked(&self, u: usize, v: usize, excluded: &[u64]) -> usize {
        self.rows[u]
            .iter()
            .zip(&self.rows[v])
            .zip(excluded)
            .map(|((a, b), e)| (a & b & !e).count_ones() as usize)
            .sum()
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn set_role(&mut self, v: usize, role: Role) {
        self.roles[v] = role;
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut found = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    found += 1;
                    stack.push(u);
                }
            }
        }
        found == self.n
    }

    /// Row-major upper-triangle adjacency bits; total order used for
    /// deterministic tie-breaking.
    pub fn adjacency_bits(&self) -> Vec<u8> {
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                bits.push(u8::from(self.has_edge(u, v)));
            }
        }
        bits
    }

    /// Least adjacency bit string over all vertex relabelings. Brute force
    /// over permutations; intended for the small classifying graphs only.
    pub fn canonical_bits(&self) -> Vec<u8> {
        assert!(self.n <= 8, "canonical_bits is factorial in n");
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Vec<u8>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
            for u in 0..self.n {
                for v in (u + 1)..self.n {
                    bits.push(u8::from(self.has_edge(p[u], p[v])));
                }
            }
            if best.as_ref().is_none_or(|b| bits < *b) {
                best = Some(bits);
            }
        });
        best.unwrap_or_default()
    }

    /// JSON adjacency-list form for reports and external cross-checks.
    pub fn to_json(&self) -> serde_json::Value {
        let adj: Vec<Vec<usize>> = (0..self.n).map(|v| self.neighbors(v).collect()).collect();
        serde_json::json!({
            "n": self.n,
            "edges": self.edge_count(),
            "adjacency": adj,
            "roles": self.roles,
        })
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect();
        write!(f, "Graph(n={}, edges={edges:?})", self.n)
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// Ordered list of disjoint nonempty vertex sets covering the graph.
#[derive(Clone, Debug)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range in block {i}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in two blocks"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }
}

/// Block-level neighbor-count matrix of an equitable partition.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<Rational>>,
}

impl QuotientMatrix {
    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Self {
        QuotientMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Exact characteristic polynomial `det(xI - Q)` by fraction-free
    /// elimination over Q[x].
    pub fn char_poly(&self) -> UniPoly {
        let n = self.size();
        let x = UniPoly::var();
        let mat: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = UniPoly::constant(-self.entries[i][j].clone());
                        if i == j {
                            &x + &e
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(mat)
    }
}

/// Computes the quotient matrix of `p` on `g`, verifying equitability:
/// every vertex of block `i` must see the same number of neighbors in
/// block `j`. The offending pair is reported otherwise.
pub fn quotient(g: &Graph, p: &Partition) -> Result<QuotientMatrix, Error> {
    let blocks = p.blocks();
    let mut entries = vec![vec![Rational::default(); blocks.len()]; blocks.len()];
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            let count_into = |v: usize| bj.iter().filter(|&&u| g.has_edge(v, u)).count();
            let first = count_into(bi[0]);
            for &v in &bi[1..] {
                let c = count_into(v);
                if c != first {
                    return Err(Error::NotEquitable {
                        block: i,
                        other: j,
                        u: bi[0],
                        v,
                        count_u: first,
                        count_v: c,
                    });
                }
            }
            entries[i][j] = rat_int(first as i64);
        }
    }
    Ok(QuotientMatrix::from_rows(entries))
}

/// Characteristic polynomial of a symbolic quotient matrix whose entries
/// are polynomials in `m`, as an exact bivariate polynomial.
pub fn char_poly_symbolic(entries: &[Vec<UniPoly>]) -> BiPoly {
    let n = entries.len();
    let x = BiPoly::x();
    let mat: Vec<Vec<BiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = -&BiPoly::from_m_poly(&entries[i][j]);
                    if i == j {
                        &x + &e
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(mat)
}

/// Minimal ring surface needed by the fraction-free determinant.
trait DetRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl DetRing for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        UniPoly::exact_div(self, other)
    }
}

impl DetRing for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        BiPoly::exact_div(self, other)
    }
}

/// Fraction-free (Bareiss) determinant over an integral domain. Each
/// elimination step divides by the previous pivot; those divisions are
/// exact by the Sylvester identity. Row swaps flip the sign.
fn bareiss_det<T: DetRing>(mut mat: Vec<Vec<T>>) -> T {
    let n = mat.len();
    if n == 0 {
        return T::one();
    }
    let mut flipped = false;
    let mut prev_pivot = T::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    flipped = !flipped;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num
                    .exact_div(&prev_pivot)
                    .expect("Bareiss division must be exact over an integral domain");
            }
        }
        prev_pivot = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if flipped {
        det.neg()
    } else {
        det
    }
}
