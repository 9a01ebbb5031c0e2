//! Constructors for the named comparison families at even size `m`, their
//! equitable partitions, and the corresponding quotient matrices with `m`
//! symbolic.
//!
//! Vertex ordering is fixed so that reports are reproducible byte for
//! byte: apex first, then the K4 core, then special neighborhood
//! vertices, then outer vertices, then leaves.

use crate::error::Error;
use crate::graph::{Graph, Partition, Role};
use crate::poly::UniPoly;
use crate::rational::rat;

/// The five explicit families handled by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// The extremal graph: two dominating vertices over an independent
    /// set, minus one cross edge. `(m+4)/2` vertices, `m` edges.
    SMinus,
    /// The obstruction family `T`: an apex joined to a K4 plus `m - 10`
    /// pendant vertices.
    T,
    /// Single outer edge, both endpoints tied to one shared special
    /// neighborhood vertex.
    Same,
    /// Single outer edge, endpoints tied to two distinct special
    /// neighborhood vertices.
    Dist,
    /// Single outer edge, one endpoint tied to the K4 core, the other to
    /// a special neighborhood vertex.
    Mixed,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::SMinus,
        FamilyKind::T,
        FamilyKind::Same,
        FamilyKind::Dist,
        FamilyKind::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::SMinus => "s-minus",
            FamilyKind::T => "t",
            FamilyKind::Same => "same",
            FamilyKind::Dist => "dist",
            FamilyKind::Mixed => "mixed",
        }
    }

    /// Smallest admissible even `m`.
    pub fn min_m(self) -> u64 {
        match self {
            FamilyKind::SMinus => 6,
            FamilyKind::T => 10,
            FamilyKind::Same | FamilyKind::Mixed => 14,
            FamilyKind::Dist => 16,
        }
    }

    pub fn build(self, m: u64) -> Result<Graph, Error> {
        match self {
            FamilyKind::SMinus => build_s_minus(m),
            FamilyKind::T => build_t(m),
            FamilyKind::Same => build_ew1_family(Ew1Kind::Same, m),
            FamilyKind::Dist => build_ew1_family(Ew1Kind::Distinct, m),
            FamilyKind::Mixed => build_ew1_family(Ew1Kind::Mixed, m),
        }
    }
}

/// The three single-outer-edge families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ew1Kind {
    Same,
    Distinct,
    Mixed,
}

fn check_m(what: &'static str, m: u64, min: u64) -> Result<(), Error> {
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidM {
            what,
            m,
            requirement: "m must be even".into(),
        });
    }
    if m < min {
        return Err(Error::InvalidM {
            what,
            m,
            requirement: format!("m must be at least {min}"),
        });
    }
    Ok(())
}

/// The extremal graph on `(m+4)/2` vertices: vertices 0 and 1 adjacent to
/// each other, 0 adjacent to the whole independent set, 1 adjacent to all
/// of it except vertex 2. Exactly `m = 2n - 4` edges.
pub fn build_s_minus(m: u64) -> Result<Graph, Error> {
    check_m("s-minus family", m, 6)?;
    let n = (m as usize + 4) / 2;
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    for v in 2..n {
        g.add_edge(0, v);
    }
    for v in 3..n {
        g.add_edge(1, v);
    }
    Ok(g)
}

/// The obstruction family on `m - 5` vertices: apex 0 joined to the K4 on
/// 1..=4 and to `m - 10` pendant vertices.
pub fn build_t(m: u64) -> Result<Graph, Error> {
    check_m("obstruction family", m, 10)?;
    let n = (m - 5) as usize;
    let mut g = Graph::new(n);
    g.set_role(0, Role::Apex);
    for v in 1..=4 {
        g.add_edge(0, v);
        g.set_role(v, Role::Core);
    }
    for u in 1..=4 {
        for v in (u + 1)..=4 {
            g.add_edge(u, v);
        }
    }
    for v in 5..n {
        g.add_edge(0, v);
        g.set_role(v, Role::Leaf);
    }
    Ok(g)
}

/// The three families with a single outer edge; all remaining
/// neighborhood vertices are leaves on the apex.
pub fn build_ew1_family(kind: Ew1Kind, m: u64) -> Result<Graph, Error> {
    let (what, min): (&'static str, u64) = match kind {
        Ew1Kind::Same => ("same-slot family", 14),
        Ew1Kind::Distinct => ("distinct-slot family", 16),
        Ew1Kind::Mixed => ("mixed family", 14),
    };
    check_m(what, m, min)?;
    let mut g;
    let leaves_from;
    match kind {
        Ew1Kind::Same => {
            // 0 apex, 1-4 core, 5 special, 6-7 outer edge, then leaves.
            let n = (m - 6) as usize;
            g = Graph::new(n);
            g.add_edge(0, 5);
            g.set_role(5, Role::Special);
            for (u, v) in [(5, 6), (5, 7), (6, 7)] {
                g.add_edge(u, v);
            }
            g.set_role(6, Role::Outer);
            g.set_role(7, Role::Outer);
            leaves_from = 8;
        }
        Ew1Kind::Distinct => {
            // 0 apex, 1-4 core, 5-6 specials, 7-8 outer edge, then leaves.
            let n = (m - 6) as usize;
            g = Graph::new(n);
            for (u, v) in [(0, 5), (0, 6), (5, 7), (6, 8), (7, 8)] {
                g.add_edge(u, v);
            }
            g.set_role(5, Role::Special);
            g.set_role(6, Role::Special);
            g.set_role(7, Role::Outer);
            g.set_role(8, Role::Outer);
            leaves_from = 9;
        }
        Ew1Kind::Mixed => {
            // 0 apex, 1-4 core (1 carries the outer attachment), 5
            // special, 6 core-attached outer vertex, 7 special-attached
            // outer vertex, then leaves.
            let n = (m - 6) as usize;
            g = Graph::new(n);
            for (u, v) in [(0, 5), (1, 6), (5, 7), (6, 7)] {
                g.add_edge(u, v);
            }
            g.set_role(5, Role::Special);
            g.set_role(6, Role::Outer);
            g.set_role(7, Role::Outer);
            leaves_from = 8;
        }
    }
    g.set_role(0, Role::Apex);
    for v in 1..=4 {
        g.add_edge(0, v);
        g.set_role(v, Role::Core);
    }
    for u in 1..=4 {
        for v in (u + 1)..=4 {
            g.add_edge(u, v);
        }
    }
    for v in leaves_from..g.n() {
        g.add_edge(0, v);
        g.set_role(v, Role::Leaf);
    }
    Ok(g)
}

/// The equitable partition matching `symbolic_quotient`, with empty leaf
/// blocks omitted (they occur only at the minimal `m`).
pub fn family_partition(kind: FamilyKind, m: u64) -> Result<Partition, Error> {
    let g = kind.build(m)?;
    let n = g.n();
    let mut blocks: Vec<Vec<usize>> = match kind {
        FamilyKind::SMinus => vec![vec![0], vec![1], vec![2], (3..n).collect()],
        FamilyKind::T => vec![vec![0], vec![1, 2, 3, 4], (5..n).collect()],
        FamilyKind::Same => vec![
            vec![0],
            vec![1, 2, 3, 4],
            vec![5],
            vec![6, 7],
            (8..n).collect(),
        ],
        FamilyKind::Dist => vec![
            vec![0],
            vec![1, 2, 3, 4],
            vec![5, 6],
            vec![7, 8],
            (9..n).collect(),
        ],
        FamilyKind::Mixed => vec![
            vec![0],
            vec![1],
            vec![2, 3, 4],
            vec![5],
            vec![6],
            vec![7],
            (8..n).collect(),
        ],
    };
    blocks.retain(|b| !b.is_empty());
    Partition::new(n, blocks)
}

/// Quotient matrices with `m` symbolic, rows and columns in the block
/// order of `family_partition` (including the leaf block).
pub fn symbolic_quotient(kind: FamilyKind) -> Vec<Vec<UniPoly>> {
    let c = |v: i64| UniPoly::from_int(v);
    let m_plus = |offset: i64| {
        UniPoly::from_coeffs(vec![
            crate::rational::rat_int(offset),
            crate::rational::rat_int(1),
        ])
    };
    match kind {
        // Blocks: {0}, {1}, {2}, rest; the rest block has (m-2)/2 vertices.
        FamilyKind::SMinus => {
            let half = UniPoly::from_coeffs(vec![rat(-1, 1), rat(1, 2)]);
            vec![
                vec![c(0), c(1), c(1), half.clone()],
                vec![c(1), c(0), c(0), half],
                vec![c(1), c(0), c(0), c(0)],
                vec![c(1), c(1), c(0), c(0)],
            ]
        }
        FamilyKind::T => vec![
            vec![c(0), c(4), m_plus(-10)],
            vec![c(1), c(3), c(0)],
            vec![c(1), c(0), c(0)],
        ],
        FamilyKind::Same => vec![
            vec![c(0), c(4), c(1), c(0), m_plus(-14)],
            vec![c(1), c(3), c(0), c(0), c(0)],
            vec![c(1), c(0), c(0), c(2), c(0)],
            vec![c(0), c(0), c(1), c(1), c(0)],
            vec![c(1), c(0), c(0), c(0), c(0)],
        ],
        FamilyKind::Dist => vec![
            vec![c(0), c(4), c(2), c(0), m_plus(-15)],
            vec![c(1), c(3), c(0), c(0), c(0)],
            vec![c(1), c(0), c(0), c(1), c(0)],
            vec![c(0), c(0), c(1), c(1), c(0)],
            vec![c(1), c(0), c(0), c(0), c(0)],
        ],
        FamilyKind::Mixed => vec![
            vec![c(0), c(1), c(3), c(1), c(0), c(0), m_plus(-14)],
            vec![c(1), c(0), c(3), c(0), c(1), c(0), c(0)],
            vec![c(1), c(1), c(2), c(0), c(0), c(0), c(0)],
            vec![c(1), c(0), c(0), c(0), c(0), c(1), c(0)],
            vec![c(0), c(1), c(0), c(0), c(0), c(1), c(0)],
            vec![c(0), c(0), c(0), c(1), c(1), c(0), c(0)],
            vec![c(1), c(0), c(0), c(0), c(0), c(0), c(0)],
        ],
    }
}
