//! Immutable simple undirected graphs over dense labels `0..n`.
//!
//! Distances are computed by breadth-first layering from every source, which
//! is all that is needed at the orders this crate works with.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// The unique cycle of a unicyclic graph together with the trees hanging off it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    /// Cycle vertices in cyclic order.
    pub cycle: Vec<usize>,
    /// `attachment[i]` holds the non-cycle vertices whose path to the cycle
    /// enters at `cycle[i]`, sorted.
    pub attachment: Vec<Vec<usize>>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Vertex count of the tree rooted at `cycle[i]`, root included.
    pub fn tree_size(&self, i: usize) -> usize {
        self.attachment[i].len() + 1
    }
}

/// Serialized edge-list form `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Returns a new graph with `remove` deleted and `add` inserted.
    pub fn edit(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges();
        for &(u, v) in remove {
            let key = (u.min(v), u.max(v));
            match edges.iter().position(|&e| e == key) {
                Some(i) => {
                    edges.swap_remove(i);
                }
                None => {
                    return Err(Error::Precondition(format!(
                        "edge ({u}, {v}) is not present"
                    )))
                }
            }
        }
        edges.extend_from_slice(add);
        Self::from_edges(self.order(), &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.order(), &edges).expect("permutation keeps edges valid")
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order();
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        Self::from_edges(shift + other.order(), &edges).expect("union edges are valid")
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Self {
        let shift = self.order();
        let mut edges = self.disjoint_union(other).edges();
        for u in 0..shift {
            for v in 0..other.order() {
                edges.push((u, v + shift));
            }
        }
        Self::from_edges(shift + other.order(), &edges).expect("join edges are valid")
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.order() >= 3 && self.size() == self.order() && self.is_connected()
    }

    /// All-pairs hop distances. Fails on disconnected input rather than
    /// encoding an infinite distance.
    pub fn all_pairs_distances(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.order())
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    /// Sum of distances over unordered vertex pairs.
    pub fn wiener_index(&self) -> Result<u64> {
        let dist = self.all_pairs_distances()?;
        let mut total = 0u64;
        for (u, row) in dist.iter().enumerate() {
            total += row[u + 1..].iter().map(|&d| d as u64).sum::<u64>();
        }
        Ok(total)
    }

    /// Cycle structure of a unicyclic graph, `None` for anything else.
    ///
    /// The cycle is the 2-core left after repeatedly deleting degree-1
    /// vertices; it is listed starting from its smallest label and walking
    /// towards the smaller of that vertex's two cycle neighbours.
    pub fn unicyclic_info(&self) -> Option<CycleInfo> {
        if !self.is_unicyclic() {
            return None;
        }
        let n = self.order();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut on_cycle = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = stack.pop() {
            on_cycle[v] = false;
            for &w in &self.adj[v] {
                if on_cycle[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }

        let start = (0..n).find(|&v| on_cycle[v])?;
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *self.adj[start].iter().find(|&&w| on_cycle[w])?;
        while cur != start {
            cycle.push(cur);
            let next = *self.adj[cur].iter().find(|&&w| on_cycle[w] && w != prev)?;
            prev = cur;
            cur = next;
        }

        // Multi-source BFS through tree vertices assigns each to its root.
        let mut owner = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for (i, &r) in cycle.iter().enumerate() {
            owner[r] = i;
            queue.push_back(r);
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if owner[w] == usize::MAX {
                    owner[w] = owner[u];
                    queue.push_back(w);
                }
            }
        }
        let mut attachment = vec![Vec::new(); cycle.len()];
        for v in 0..n {
            if !on_cycle[v] {
                attachment[owner[v]].push(v);
            }
        }
        Some(CycleInfo { cycle, attachment })
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.order(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Self> {
        let edges: Vec<_> = list.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::from_edges(list.n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_edge_list(&list)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
