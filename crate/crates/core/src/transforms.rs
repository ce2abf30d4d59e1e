//! Graph rewrites that move towards the extremal structure.
//!
//! Each rewrite returns a [`TransformReport`] carrying both graphs, the change
//! in Wiener index and the matching numbers before and after, all computed by
//! full recomputation.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{CycleInfo, Graph};
use crate::graph6::to_graph6;
use crate::matching::matching_number;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformReport {
    pub before: Graph,
    pub after: Graph,
    pub delta_wiener: i64,
    pub matching_before: usize,
    pub matching_after: usize,
}

impl TransformReport {
    pub fn new(before: Graph, after: Graph) -> Result<Self> {
        let w0 = before.wiener_index()? as i64;
        let w1 = after.wiener_index()? as i64;
        let matching_before = matching_number(&before)?.size;
        let matching_after = matching_number(&after)?.size;
        Ok(TransformReport {
            before,
            after,
            delta_wiener: w1 - w0,
            matching_before,
            matching_after,
        })
    }
}

impl Serialize for TransformReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g6 = |g: &Graph| to_graph6(g).map_err(serde::ser::Error::custom);
        let mut st = s.serialize_struct("TransformReport", 5)?;
        st.serialize_field("before", &g6(&self.before)?)?;
        st.serialize_field("after", &g6(&self.after)?)?;
        st.serialize_field("delta_wiener", &self.delta_wiener)?;
        st.serialize_field("matching_before", &self.matching_before)?;
        st.serialize_field("matching_after", &self.matching_after)?;
        st.end()
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Subtree pruning and regrafting
// ---------------------------------------------------------------------------

/// Vertices of the component of `g - d` containing `branch`.
fn branch_component(g: &Graph, d: usize, branch: usize) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[branch] = true;
    let mut stack = vec![branch];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if w != d && !inside[w] {
                inside[w] = true;
                stack.push(w);
            }
        }
    }
    inside
}

/// Prunes the subtree hanging from `d` through its neighbour `branch` and
/// regrafts it at `v`: the edge `d-branch` becomes `v-branch`.
///
/// The pruned part must be a tree attached to the rest of the graph only
/// through `d` (so it contains no cycle vertex), and `v` must lie outside it.
pub fn spr(g: &Graph, d: usize, branch: usize, v: usize) -> Result<TransformReport> {
    for x in [d, branch, v] {
        check_vertex(g, x)?;
    }
    if !g.has_edge(d, branch) {
        return Err(Error::Precondition(format!(
            "{branch} is not a neighbour of {d}"
        )));
    }
    let inside = branch_component(g, d, branch);
    let size = inside.iter().filter(|&&x| x).count();
    let internal_edges = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| inside[a] && inside[b])
        .count();
    let links = g.neighbors(d).iter().filter(|&&w| inside[w]).count();
    if internal_edges + 1 != size || links != 1 {
        return Err(Error::Precondition(format!(
            "the branch at {d} through {branch} is not a pendant tree (it meets the cycle)"
        )));
    }
    if inside[v] {
        return Err(Error::Precondition(format!(
            "regraft vertex {v} lies inside the pruned subtree"
        )));
    }
    let after = if v == d {
        g.clone()
    } else {
        g.edit(&[(d, branch)], &[(v, branch)])?
    };
    TransformReport::new(g.clone(), after)
}

// ---------------------------------------------------------------------------
// Cycle shortening
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SwapVariant {
    /// Delete `r₂r₃`, add `r₂r_k`: the cycle becomes a triangle.
    G1,
    /// Delete `r₂r₃`, add `r₂r_{k-1}`: the cycle becomes a quadrangle.
    G2,
}

/// Cycle `r₁..r_k` (0-indexed here) rotated so that `r₃` roots a largest
/// attached tree. Ties go to the first largest tree in cycle order.
pub fn oriented_cycle_for_swap(info: &CycleInfo) -> Vec<usize> {
    let k = info.len();
    let best = (0..k).map(|i| info.tree_size(i)).max().unwrap_or(0);
    let at = (0..k).find(|&i| info.tree_size(i) == best).unwrap_or(0);
    (0..k).map(|t| info.cycle[(at + k + t - 2) % k]).collect()
}

pub fn cycle_swap(g: &Graph, variant: SwapVariant) -> Result<TransformReport> {
    let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
    let k = info.len();
    if k < 5 {
        return Err(Error::Precondition(format!(
            "cycle swap needs a cycle of length at least 5, found {k}"
        )));
    }
    let r = oriented_cycle_for_swap(&info);
    let target = match variant {
        SwapVariant::G1 => r[k - 1],
        SwapVariant::G2 => r[k - 2],
    };
    let after = g.edit(&[(r[1], r[2])], &[(r[1], target)])?;
    TransformReport::new(g.clone(), after)
}

// ---------------------------------------------------------------------------
// Path regrafting on path-legged unicyclic graphs
// ---------------------------------------------------------------------------

/// The path legs of a unicyclic graph: for each cycle index, the leg's
/// vertices ordered from the root outwards.
pub fn path_legs(g: &Graph, info: &CycleInfo) -> Result<Vec<Vec<usize>>> {
    let on_cycle = |v: usize| info.cycle.contains(&v);
    info.cycle
        .iter()
        .enumerate()
        .map(|(i, &root)| {
            let mut leg = Vec::new();
            let mut prev = root;
            let mut cur = g
                .neighbors(root)
                .iter()
                .copied()
                .filter(|&w| !on_cycle(w))
                .collect::<Vec<_>>();
            while let Some(&next) = cur.first() {
                if cur.len() > 1 {
                    return Err(Error::Precondition(format!(
                        "attached tree at cycle index {i} is not a path"
                    )));
                }
                leg.push(next);
                let step: Vec<usize> = g
                    .neighbors(next)
                    .iter()
                    .copied()
                    .filter(|&w| w != prev)
                    .collect();
                prev = next;
                cur = step;
            }
            if leg.len() != info.attachment[i].len() {
                return Err(Error::Precondition(format!(
                    "attached tree at cycle index {i} is not a path"
                )));
            }
            Ok(leg)
        })
        .collect()
}

fn cycle_distance(k: usize, a: usize, b: usize) -> usize {
    let diff = a.abs_diff(b);
    diff.min(k - diff)
}

/// Resolves which leg receives the other: `(i1, i2)` such that
/// `Σ d(r_i1, r_t)|P_t| >= Σ d(r_i2, r_t)|P_t|` over the other non-empty legs.
/// On equality the lower index becomes `i1`.
pub fn path_regraft_orientation(g: &Graph, i1: usize, i2: usize) -> Result<(usize, usize)> {
    let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
    let legs = path_legs(g, &info)?;
    orientation(&info, &legs, i1, i2)
}

fn orientation(
    info: &CycleInfo,
    legs: &[Vec<usize>],
    i1: usize,
    i2: usize,
) -> Result<(usize, usize)> {
    let k = info.len();
    if i1 >= k || i2 >= k || i1 == i2 {
        return Err(Error::Precondition(format!(
            "need two distinct cycle indices below {k}, got {i1} and {i2}"
        )));
    }
    if legs[i1].is_empty() || legs[i2].is_empty() {
        return Err(Error::Precondition("both legs must be non-empty".into()));
    }
    let weight = |from: usize| -> usize {
        (0..k)
            .filter(|&t| t != i1 && t != i2)
            .map(|t| cycle_distance(k, from, t) * legs[t].len())
            .sum()
    };
    let (w1, w2) = (weight(i1), weight(i2));
    Ok(match w1.cmp(&w2) {
        std::cmp::Ordering::Greater => (i1, i2),
        std::cmp::Ordering::Less => (i2, i1),
        std::cmp::Ordering::Equal => (i1.min(i2), i1.max(i2)),
    })
}

/// Moves leg `P_i2` to hang from the tip of leg `P_i1` (after orientation).
pub fn path_regraft(g: &Graph, i1: usize, i2: usize) -> Result<TransformReport> {
    let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
    let legs = path_legs(g, &info)?;
    let (i1, i2) = orientation(&info, &legs, i1, i2)?;
    let tip = *legs[i1].last().expect("non-empty leg");
    let first = legs[i2][0];
    let after = g.edit(&[(info.cycle[i2], first)], &[(tip, first)])?;
    TransformReport::new(g.clone(), after)
}

/// `(k - d(r_i1, r_i2) - 1)·|P_i1|·|P_i2|`, the guaranteed Wiener gain of
/// [`path_regraft`].
pub fn path_regraft_lower_bound(g: &Graph, i1: usize, i2: usize) -> Result<i64> {
    let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
    let legs = path_legs(g, &info)?;
    let k = info.len();
    let d = cycle_distance(k, i1, i2);
    Ok((k as i64 - d as i64 - 1) * (legs[i1].len() * legs[i2].len()) as i64)
}
