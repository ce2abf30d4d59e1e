//! Constructors for the named graph families.
//!
//! Labelling convention: cycle vertices first in cyclic order, then for each
//! attached broom its path vertices from root to tip followed by its leaves.
//! A broom with path length `j` and `a` leaves is a path of `j` edges hanging
//! from a cycle vertex whose far end carries `a` pendant vertices; `j = 0`
//! puts the leaves directly on the cycle vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;

/// Triangle with three brooms: `A(j, a)`, `B(k, b)`, `C(l, c)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct G3Params {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Four-cycle with brooms `A(j, a)`, `B(k, b)`, `C(l, c)`, `D(h, d)` in
/// cyclic order; `A`/`C` and `B`/`D` are opposite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct G4Params {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub h: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnmParams {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DuZhouKind {
    TreeMin,
    UnicyclicMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DuZhouParams {
    pub n: usize,
    pub m: usize,
    pub kind: DuZhouKind,
}

impl G3Params {
    pub fn new(a: usize, b: usize, c: usize, j: usize, k: usize, l: usize) -> Self {
        G3Params { a, b, c, j, k, l }
    }

    /// `G³_{a,j}`: only the `A` broom is present.
    pub fn reduced(a: usize, j: usize) -> Self {
        G3Params {
            a,
            j,
            ..Default::default()
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.b == 0 && self.c == 0 && self.k == 0 && self.l == 0
    }

    pub fn order(&self) -> usize {
        3 + self.a + self.b + self.c + self.j + self.k + self.l
    }
}

impl G4Params {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        h: usize,
        j: usize,
        k: usize,
        l: usize,
    ) -> Self {
        G4Params {
            a,
            b,
            c,
            d,
            h,
            j,
            k,
            l,
        }
    }

    /// `G⁴_{a,c,j}`: broom `A(j, a)` and `c` pendants on the opposite vertex.
    pub fn reduced(a: usize, c: usize, j: usize) -> Self {
        G4Params {
            a,
            c,
            j,
            ..Default::default()
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.b == 0 && self.d == 0 && self.h == 0 && self.k == 0 && self.l == 0
    }

    pub fn order(&self) -> usize {
        4 + self.a + self.b + self.c + self.d + self.h + self.j + self.k + self.l
    }
}

impl AnmParams {
    /// `1 <= m` and `n >= 2m`. `m = 1` yields the star.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n < 2 * m {
            return Err(Error::Domain(format!(
                "A(n,m) needs 1 <= m <= n/2, got n={n}, m={m}"
            )));
        }
        Ok(AnmParams { n, m })
    }
}

impl DuZhouParams {
    pub fn new(n: usize, m: usize, kind: DuZhouKind) -> Result<Self> {
        if m < 2 || n < 2 * m {
            return Err(Error::Domain(format!(
                "minimizer needs 2 <= m <= n/2, got n={n}, m={m}"
            )));
        }
        Ok(DuZhouParams { n, m, kind })
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn with_cycle(k: usize) -> Self {
        let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Builder { n: k, edges }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn pendant(&mut self, at: usize) -> usize {
        let v = self.vertex();
        self.edges.push((at, v));
        v
    }

    fn broom(&mut self, root: usize, path: usize, leaves: usize) {
        let mut tip = root;
        for _ in 0..path {
            tip = self.pendant(tip);
        }
        for _ in 0..leaves {
            self.pendant(tip);
        }
    }

    fn build(self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("family edges are valid")
    }
}

pub fn build_g3(p: &G3Params) -> Graph {
    let mut b = Builder::with_cycle(3);
    b.broom(0, p.j, p.a);
    b.broom(1, p.k, p.b);
    b.broom(2, p.l, p.c);
    b.build()
}

pub fn build_g4(p: &G4Params) -> Graph {
    let mut b = Builder::with_cycle(4);
    b.broom(0, p.j, p.a);
    b.broom(1, p.k, p.b);
    b.broom(2, p.l, p.c);
    b.broom(3, p.h, p.d);
    b.build()
}

/// Path on `2m - 1` vertices with the remaining `n - 2m + 1` vertices split
/// as pendants between its two ends, the first end taking the larger half.
pub fn build_anm(p: &AnmParams) -> Graph {
    let spine = 2 * p.m - 1;
    let extra = p.n - spine;
    let (first, second) = (extra.div_ceil(2), extra / 2);
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (end, count) in [(0, first), (spine - 1, second)] {
        for _ in 0..count {
            edges.push((end, next));
            next += 1;
        }
    }
    Graph::from_edges(p.n, &edges).expect("A(n,m) edges are valid")
}

/// Star with `n - m` leaves, `m - 1` of which are extended by one vertex.
pub fn build_duzhou_min_tree(p: &DuZhouParams) -> Graph {
    let mut b = Builder {
        n: 1,
        edges: Vec::new(),
    };
    for i in 0..p.n - p.m {
        let leaf = b.pendant(0);
        if i < p.m - 1 {
            b.pendant(leaf);
        }
    }
    b.build()
}

/// Triangle whose vertex 0 is the centre of a star with `n - m - 1` leaves,
/// `m - 2` of them extended by one vertex. For `(n, m) = (6, 3)` the unique
/// minimizer is `C₅` with one pendant instead.
pub fn build_duzhou_min_unicyclic(p: &DuZhouParams) -> Graph {
    if (p.n, p.m) == (6, 3) {
        return c5_with_pendants(&[0]);
    }
    let mut b = Builder::with_cycle(3);
    for i in 0..p.n - p.m - 1 {
        let leaf = b.pendant(0);
        if i < p.m - 2 {
            b.pendant(leaf);
        }
    }
    b.build()
}

pub fn build_duzhou(p: &DuZhouParams) -> Graph {
    match p.kind {
        DuZhouKind::TreeMin => build_duzhou_min_tree(p),
        DuZhouKind::UnicyclicMin => build_duzhou_min_unicyclic(p),
    }
}

/// `C₅` with one pendant vertex on each listed cycle position (repeats allowed).
pub fn c5_with_pendants(at: &[usize]) -> Graph {
    let mut b = Builder::with_cycle(5);
    for &r in at {
        b.pendant(r);
    }
    b.build()
}

/// Every graph named as attaining the unicyclic minimum at `(n, m)`.
pub fn duzhou_unicyclic_equality_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    let p = DuZhouParams::new(n, m, DuZhouKind::UnicyclicMin)?;
    let mut out = vec![build_duzhou_min_unicyclic(&p)];
    match (n, m) {
        (4, 2) => out.push(Graph::cycle(4)),
        (5, 2) => out.push(Graph::cycle(5)),
        (7, 3) => out.push(c5_with_pendants(&[0, 0])),
        (8, 4) => out.push(c5_with_pendants(&[0, 1, 2])),
        _ => {}
    }
    Ok(out)
}

/// `K_n` when `m = ⌊n/2⌋`, otherwise the join `K_m + (n - m)K_1`.
pub fn dankelmann_min_graph(n: usize, m: usize) -> Result<Graph> {
    if m == 0 || n < 2 * m {
        return Err(Error::Domain(format!(
            "need 1 <= m <= n/2, got n={n}, m={m}"
        )));
    }
    Ok(if m == n / 2 {
        Graph::complete(n)
    } else {
        Graph::complete(m).join(&Graph::empty(n - m))
    })
}

/// Matching number of reduced `G³_{a,j}` where the closed form `2 + ⌊j/2⌋`
/// holds (`a >= 1` or `j` odd).
pub fn g3_matching_formula(a: usize, j: usize) -> Option<usize> {
    (a >= 1 || j % 2 == 1).then_some(2 + j / 2)
}

/// Matching number of reduced `G⁴_{a,c,j}` where the closed form
/// `2 + ⌊(j+1)/2⌋` holds (`a >= 1` or `j` even).
pub fn g4_matching_formula(a: usize, j: usize) -> Option<usize> {
    (a >= 1 || j.is_multiple_of(2)).then_some(2 + j.div_ceil(2))
}

/// `(n, m)` of a `G³` configuration: closed form for reduced parameters in
/// its validity range, the matching module otherwise.
pub fn g3_params_to_nm(p: &G3Params) -> (usize, usize) {
    let formula = p
        .is_reduced()
        .then(|| g3_matching_formula(p.a, p.j))
        .flatten();
    let m = formula.unwrap_or_else(|| measured_matching(&build_g3(p)));
    (p.order(), m)
}

pub fn g4_params_to_nm(p: &G4Params) -> (usize, usize) {
    let formula = p
        .is_reduced()
        .then(|| g4_matching_formula(p.a, p.j))
        .flatten();
    let m = formula.unwrap_or_else(|| measured_matching(&build_g4(p)));
    (p.order(), m)
}

fn measured_matching(g: &Graph) -> usize {
    matching_number(g)
        .expect("family graphs are unicyclic")
        .size
}
