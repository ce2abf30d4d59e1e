//! Matching numbers for trees and unicyclic graphs, plus an exhaustive oracle.
//!
//! No general blossom algorithm: on a tree, greedily matching leaves to their
//! parents is optimal, and a maximum matching of a unicyclic graph misses at
//! least one cycle edge, so `m(G) = max_e m(G - e)` over the cycle edges.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge budget of [`matching_number_bruteforce`].
pub const BRUTEFORCE_EDGE_BUDGET: usize = 24;

/// A set of pairwise disjoint edges witnessing a matching number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingCertificate {
    pub edges: Vec<(usize, usize)>,
    pub size: usize,
}

impl MatchingCertificate {
    fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        let size = edges.len();
        MatchingCertificate { edges, size }
    }

    /// Edges exist in `g`, are pairwise disjoint, and number `size`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        self.size == self.edges.len()
            && self.edges.iter().all(|&(u, v)| {
                let ok = g.has_edge(u, v) && !used[u] && !used[v];
                if ok {
                    used[u] = true;
                    used[v] = true;
                }
                ok
            })
    }
}

/// Greedy leaf matching on a forest, processing vertices deepest first.
fn forest_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            edges.push((v, p));
        }
    }
    edges
}

pub fn matching_number_tree(g: &Graph) -> Result<MatchingCertificate> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(MatchingCertificate::new(forest_matching(g)))
}

pub fn matching_number_unicyclic(g: &Graph) -> Result<MatchingCertificate> {
    let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
    let k = info.len();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for i in 0..k {
        let (u, v) = (info.cycle[i], info.cycle[(i + 1) % k]);
        let tree = g.edit(&[(u, v)], &[])?;
        let m = forest_matching(&tree);
        if best.as_ref().is_none_or(|b| m.len() > b.len()) {
            best = Some(m);
        }
    }
    Ok(MatchingCertificate::new(best.unwrap_or_default()))
}

/// Exhaustive branch on each edge (in or out) with a simple size bound.
pub fn matching_number_bruteforce(g: &Graph) -> Result<MatchingCertificate> {
    let edges = g.edges();
    if edges.len() > BRUTEFORCE_EDGE_BUDGET {
        return Err(Error::EdgeBudget {
            edges: edges.len(),
            budget: BRUTEFORCE_EDGE_BUDGET,
        });
    }
    let mut state = Brute {
        edges,
        used: vec![false; g.order()],
        current: Vec::new(),
        best: Vec::new(),
    };
    state.branch(0, g.order());
    Ok(MatchingCertificate::new(state.best))
}

struct Brute {
    edges: Vec<(usize, usize)>,
    used: Vec<bool>,
    current: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl Brute {
    fn branch(&mut self, i: usize, free: usize) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if i == self.edges.len() || self.current.len() + free / 2 <= self.best.len() {
            return;
        }
        let (u, v) = self.edges[i];
        if !self.used[u] && !self.used[v] {
            self.used[u] = true;
            self.used[v] = true;
            self.current.push((u, v));
            self.branch(i + 1, free - 2);
            self.current.pop();
            self.used[u] = false;
            self.used[v] = false;
        }
        self.branch(i + 1, free);
    }
}

/// Dispatches to the tree or unicyclic algorithm, falling back to brute force.
pub fn matching_number(g: &Graph) -> Result<MatchingCertificate> {
    if g.is_tree() {
        matching_number_tree(g)
    } else if g.is_unicyclic() {
        matching_number_unicyclic(g)
    } else {
        matching_number_bruteforce(g)
    }
}
