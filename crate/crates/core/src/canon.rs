//! Canonical forms for small graphs.
//!
//! Vertices are first partitioned by an iterated distance profile (each
//! vertex's colour together with the multiset of `(distance, colour)` pairs
//! to every other vertex) until the ordered partition is stable. Remaining
//! ties are broken by individualizing each vertex of the first non-singleton
//! cell in turn and recursing; the canonical form is the lexicographically
//! smallest upper-triangular adjacency bitstring over all discrete leaves of
//! that search. Vertices with identical open neighbourhoods (twins) are
//! interchangeable by an automorphism, so only one of them is tried per cell.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for [`canonical_form`].
pub const DEFAULT_CAP: usize = 14;

/// Largest order the bitstring representation can hold.
pub const MAX_CAP: usize = 16;

const UNREACHABLE: u8 = u8::MAX;

/// A vertex's colour, its sorted `(distance, colour)` profile and its label.
type Profile = (u32, Vec<(u8, u32)>, usize);

/// Label-invariant encoding; equal bytes iff the graphs are isomorphic.
///
/// Layout: one byte holding `n`, then the minimal adjacency bitstring
/// (pairs `(0,1), (0,2), .., (n-2,n-1)` in row order, most significant
/// first) packed into `ceil(n(n-1)/16)` bytes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = pair_count(n);
        let mut buf = [0u8; 16];
        buf[..self.0.len() - 1].copy_from_slice(&self.0[1..]);
        let bits = if total == 0 {
            0
        } else {
            u128::from_be_bytes(buf) >> (128 - total)
        };
        let mut edges = Vec::new();
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> (total - 1 - p) & 1 == 1 {
                    edges.push((i, j));
                }
                p += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical bytes decode to a valid graph")
    }

    fn from_bits(n: usize, bits: u128) -> Self {
        let total = pair_count(n);
        let mut out = vec![n as u8];
        if total > 0 {
            let aligned = bits << (128 - total);
            out.extend_from_slice(&aligned.to_be_bytes()[..total.div_ceil(8)]);
        }
        CanonicalForm(out)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical form under the default cap.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_cap(g, DEFAULT_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    let (bits, _) = canonical_search(g, cap)?;
    Ok(CanonicalForm::from_bits(g.order(), bits))
}

/// A permutation `lab` such that `g.permute(&lab)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    canonical_search(g, DEFAULT_CAP).map(|(_, lab)| lab)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.order() == b.order() && a.size() == b.size() && canonical_form(a)? == canonical_form(b)?)
}

fn canonical_search(g: &Graph, cap: usize) -> Result<(u128, Vec<usize>)> {
    let n = g.order();
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::CanonicalCap { n, cap });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut search = Search::new(g);
    let mut colors = vec![0u32; n];
    search.refine(&mut colors);
    search.descend(colors);
    let (bits, lab) = search.best.expect("search visits at least one leaf");
    Ok((bits, lab))
}

struct Search {
    n: usize,
    mask: Vec<u32>,
    dist: Vec<Vec<u8>>,
    edges: Vec<(usize, usize)>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mask = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let dist = (0..n)
            .map(|s| {
                g.bfs(s)
                    .into_iter()
                    .map(|d| d.map_or(UNREACHABLE, |d| d as u8))
                    .collect()
            })
            .collect();
        Search {
            n,
            mask,
            dist,
            edges: g.edges(),
            best: None,
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.mask[u] & !(1 << v) == self.mask[v] & !(1 << u)
    }

    /// Refines `colors` in place to the coarsest stable ordered partition,
    /// leaving colours as dense ranks `0..cells`.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut cells = distinct(colors);
        loop {
            let mut keyed: Vec<Profile> = (0..n)
                .map(|v| {
                    let mut profile: Vec<(u8, u32)> = (0..n)
                        .filter(|&w| w != v)
                        .map(|w| (self.dist[v][w], colors[w]))
                        .collect();
                    profile.sort_unstable();
                    (colors[v], profile, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                    rank += 1;
                }
                colors[keyed[i].2] = rank;
            }
            let now = rank as usize + 1;
            if now == cells {
                return;
            }
            cells = now;
        }
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.n;
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = counts.iter().position(|&k| k > 1) else {
            self.leaf(&colors);
            return;
        };
        let target = target as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
                .collect();
            self.refine(&mut next);
            self.descend(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.n;
        let total = pair_count(n);
        let mut bits = 0u128;
        for &(u, v) in &self.edges {
            let (a, b) = {
                let (x, y) = (colors[u] as usize, colors[v] as usize);
                (x.min(y), x.max(y))
            };
            let p = a * (2 * n - a - 1) / 2 + (b - a - 1);
            bits |= 1u128 << (total - 1 - p);
        }
        if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
            let lab = colors.iter().map(|&c| c as usize).collect();
            self.best = Some((bits, lab));
        }
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycle_is_equal() {
        let c4 = Graph::cycle(4);
        let swapped = c4.permute(&[2, 1, 0, 3]);
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&swapped).unwrap()
        );
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_form(&Graph::path(4)).unwrap(),
            canonical_form(&Graph::star(3)).unwrap()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(15);
        assert_eq!(
            canonical_form(&g),
            Err(Error::CanonicalCap { n: 15, cap: 14 })
        );
        assert!(canonical_form_with_cap(&g, 16).is_ok());
    }

    #[test]
    fn decode_gives_isomorphic_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let rep = cf.to_graph();
        assert_eq!(rep.order(), 6);
        assert_eq!(rep.size(), 6);
        assert_eq!(canonical_form(&rep).unwrap(), cf);
        let lab = canonical_labeling(&g).unwrap();
        assert_eq!(g.permute(&lab), rep);
    }

    #[test]
    fn tiny_orders() {
        for n in 0..3 {
            let g = Graph::path(n);
            let cf = canonical_form(&g).unwrap();
            assert_eq!(cf.to_graph(), g);
        }
    }

    #[test]
    fn highly_symmetric_graphs_are_fast_and_consistent() {
        let k = Graph::complete(14);
        let s = Graph::star(13);
        let ks = Graph::complete(3).join(&Graph::empty(11));
        for g in [k, s, ks] {
            let cf = canonical_form(&g).unwrap();
            let p: Vec<usize> = (0..g.order()).rev().collect();
            assert_eq!(cf, canonical_form(&g.permute(&p)).unwrap());
        }
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 versus two disjoint triangles: same degree sequence
        let c6 = Graph::cycle(6);
        let two_c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_ne!(
            canonical_form(&c6).unwrap(),
            canonical_form(&two_c3).unwrap()
        );
    }
}
