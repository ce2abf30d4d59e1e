//! Isomorphism-free enumeration and per-class extrema.
//!
//! Unicyclic graphs are assembled from a cycle and one rooted tree per cycle
//! vertex. Rooted trees come from a catalogue built size by size (a tree is
//! a root over a multiset of smaller trees), so two assemblies give the same
//! graph exactly when their tree sequences agree up to rotation and
//! reflection. Only dihedrally minimal sequences are assembled, and every
//! result is still keyed by its [`CanonicalForm`].
//!
//! Free trees come from Prüfer sequences, deduplicated by a centre-rooted
//! tree code before canonical forms are taken. Connected graphs (order at
//! most 7) grow one vertex at a time from the previous order.

pub mod verify;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;

pub const UNICYCLIC_MAX_ORDER: usize = 12;
pub const TREE_DEFAULT_CAP: usize = 9;
pub const TREE_MAX_CAP: usize = 10;
pub const CONNECTED_MAX_ORDER: usize = 7;
/// Largest order accepted by the labelled-subset unicyclic pipeline.
pub const FILTER_MAX_ORDER: usize = 8;

fn check_range(what: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::Domain(format!(
            "{what} enumeration needs {lo} <= n <= {hi}, got {n}"
        )));
    }
    Ok(())
}

fn keyed(graphs: impl IntoIterator<Item = Graph>) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let mut out = BTreeMap::new();
    for g in graphs {
        let form = canonical_form(&g)?;
        out.entry(form).or_insert(g);
    }
    Ok(out)
}

fn merge(parts: Vec<BTreeMap<CanonicalForm, Graph>>) -> BTreeMap<CanonicalForm, Graph> {
    let mut out = BTreeMap::new();
    for part in parts {
        for (form, g) in part {
            out.entry(form).or_insert(g);
        }
    }
    out
}

/// Canonical representatives in canonical-byte order.
fn representatives(map: BTreeMap<CanonicalForm, Graph>) -> Vec<(CanonicalForm, Graph)> {
    map.into_keys()
        .map(|form| {
            let g = form.to_graph();
            (form, g)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Rooted trees
// ---------------------------------------------------------------------------

struct RootedTree {
    size: usize,
    children: Vec<usize>,
}

/// All rooted trees up to a given size; ids increase with size.
struct Catalogue {
    trees: Vec<RootedTree>,
    by_size: Vec<Vec<usize>>,
}

impl Catalogue {
    fn new(max_size: usize) -> Self {
        let mut cat = Catalogue {
            trees: Vec::new(),
            by_size: vec![Vec::new(); max_size + 1],
        };
        for size in 1..=max_size {
            let top = cat.trees.len();
            for children in cat.forests(size - 1, top) {
                cat.by_size[size].push(cat.trees.len());
                cat.trees.push(RootedTree { size, children });
            }
        }
        cat
    }

    /// Non-increasing id sequences below `bound` whose sizes sum to `total`.
    fn forests(&self, total: usize, bound: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for id in (0..bound).rev() {
            let size = self.trees[id].size;
            if size > total {
                continue;
            }
            for mut rest in self.forests(total - size, id + 1) {
                rest.insert(0, id);
                out.push(rest);
            }
        }
        out
    }

    /// Adds tree `id` rooted at the existing vertex `root`.
    fn graft(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &child in &self.trees[id].children {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.graft(child, v, next, edges);
        }
    }
}

// ---------------------------------------------------------------------------
// Unicyclic graphs
// ---------------------------------------------------------------------------

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn dihedral_minimal(seq: &[usize]) -> bool {
    let k = seq.len();
    for shift in 0..k {
        for reflect in [false, true] {
            let image = (0..k).map(|i| {
                let j = if reflect {
                    (shift + k - i) % k
                } else {
                    (shift + i) % k
                };
                seq[j]
            });
            if image.lt(seq.iter().copied()) {
                return false;
            }
        }
    }
    true
}

fn assemble(cat: &Catalogue, seq: &[usize]) -> Graph {
    let k = seq.len();
    let n: usize = seq.iter().map(|&id| cat.trees[id].size).sum();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (root, &id) in seq.iter().enumerate() {
        cat.graft(id, root, &mut next, &mut edges);
    }
    Graph::from_edges(n, &edges).expect("assembled edges are valid")
}

/// Every dihedrally minimal tree sequence with the given size pattern.
fn sequences_for(cat: &Catalogue, sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(sizes.len());
    fn rec(cat: &Catalogue, sizes: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == sizes.len() {
            if dihedral_minimal(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &id in &cat.by_size[sizes[cur.len()]] {
            // a rotation starting at a smaller id would be lexicographically smaller
            if !cur.is_empty() && id < cur[0] {
                continue;
            }
            cur.push(id);
            rec(cat, sizes, cur, out);
            cur.pop();
        }
    }
    rec(cat, sizes, &mut current, &mut out);
    out
}

/// All unicyclic graphs of order `n` with their canonical forms, in
/// canonical-byte order. Work is sharded by (cycle length, tree sizes).
pub fn unicyclic_forms(n: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    check_range("unicyclic", n, 3, UNICYCLIC_MAX_ORDER)?;
    let cat = Catalogue::new(n - 2);
    let shards: Vec<Vec<usize>> = (3..=n).flat_map(|k| compositions(n, k)).collect();
    let parts = shards
        .par_iter()
        .map(|sizes| keyed(sequences_for(&cat, sizes).iter().map(|s| assemble(&cat, s))))
        .collect::<Result<Vec<_>>>()?;
    Ok(representatives(merge(parts)))
}

pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(unicyclic_forms(n)?.into_iter().map(|(_, g)| g).collect())
}

/// Independent pipeline: every labelled `n`-edge graph on `n` vertices,
/// kept when connected, deduplicated by canonical form.
pub fn unicyclic_forms_by_filtering(n: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    check_range("labelled unicyclic", n, 3, FILTER_MAX_ORDER)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let parts = (0..pairs.len())
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut chosen = vec![first];
            subsets(&pairs, n, &mut chosen, &mut found);
            keyed(found)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(representatives(merge(parts)))
}

fn subsets(pairs: &[(usize, usize)], n: usize, chosen: &mut Vec<usize>, found: &mut Vec<Graph>) {
    if chosen.len() == n {
        let edges: Vec<_> = chosen.iter().map(|&i| pairs[i]).collect();
        let g = Graph::from_edges(n, &edges).expect("valid pairs");
        if g.is_connected() {
            found.push(g);
        }
        return;
    }
    let last = *chosen.last().expect("non-empty");
    let need = n - chosen.len();
    for i in last + 1..=pairs.len().saturating_sub(need) {
        chosen.push(i);
        subsets(pairs, n, chosen, found);
        chosen.pop();
    }
}

// ---------------------------------------------------------------------------
// Free trees
// ---------------------------------------------------------------------------

/// Decodes a Prüfer sequence over `0..len+2` into tree edges.
pub fn prufer_to_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Isomorphism code of a free tree: nested-parenthesis code rooted at the
/// centre, minimised over both centres when there are two.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v))
            .collect();
        parts.sort_unstable();
        let mut code = vec![0u8];
        for p in parts {
            code.extend(p);
        }
        code.push(1);
        code
    }
    layer
        .iter()
        .map(|&c| encode(&adj, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// Tree code to one labelled representative.
type TreeCodes = HashMap<Vec<u8>, Vec<(usize, usize)>>;

fn tree_cap_check(n: usize, cap: usize) -> Result<()> {
    if cap > TREE_MAX_CAP {
        return Err(Error::Domain(format!(
            "tree cap {cap} exceeds the maximum {TREE_MAX_CAP}"
        )));
    }
    check_range("tree", n, 1, cap)
}

/// All free trees of order `n` from Prüfer sequences, in canonical-byte order.
pub fn tree_forms(n: usize, cap: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    tree_cap_check(n, cap)?;
    if n <= 2 {
        let g = if n == 1 {
            Graph::empty(1)
        } else {
            Graph::path(2)
        };
        return Ok(representatives(keyed([g])?));
    }
    let len = n - 2;
    let parts: Vec<TreeCodes> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut seen = HashMap::new();
            let mut seq = vec![0usize; len];
            seq[0] = first;
            loop {
                let edges = prufer_to_edges(&seq);
                seen.entry(tree_code(n, &edges)).or_insert(edges);
                // odometer over positions 1..len
                let mut i = len;
                loop {
                    if i == 1 {
                        return seen;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                }
            }
        })
        .collect();
    let mut unique = TreeCodes::new();
    for part in parts {
        for (code, edges) in part {
            unique.entry(code).or_insert(edges);
        }
    }
    let graphs = unique
        .into_values()
        .map(|edges| Graph::from_edges(n, &edges).expect("decoded tree is valid"));
    Ok(representatives(keyed(graphs)?))
}

pub fn trees(n: usize, cap: usize) -> Result<Vec<Graph>> {
    Ok(tree_forms(n, cap)?.into_iter().map(|(_, g)| g).collect())
}

/// Independent pipeline: trees of order `n` by adding a leaf anywhere on
/// every tree of order `n - 1`.
pub fn tree_forms_by_extension(n: usize, cap: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    tree_cap_check(n, cap)?;
    let mut level = representatives(keyed([Graph::empty(1)])?);
    for order in 2..=n {
        let grown = level.iter().flat_map(|(_, g)| {
            (0..order - 1).map(move |v| {
                let mut edges = g.edges();
                edges.push((v, order - 1));
                Graph::from_edges(order, &edges).expect("valid extension")
            })
        });
        level = representatives(keyed(grown)?);
    }
    Ok(level)
}

// ---------------------------------------------------------------------------
// Connected graphs
// ---------------------------------------------------------------------------

/// All connected graphs of order `n`, grown by attaching a new vertex to a
/// non-empty neighbour set of each connected graph of order `n - 1`. Every
/// connected graph has a vertex whose removal keeps it connected, so the
/// growth is exhaustive.
pub fn connected_forms(n: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    check_range("connected", n, 1, CONNECTED_MAX_ORDER)?;
    let mut level = representatives(keyed([Graph::empty(1)])?);
    for order in 2..=n {
        let parts = level
            .par_iter()
            .map(|(_, g)| {
                let old = order - 1;
                keyed((1u32..1 << old).map(|mask| {
                    let mut edges = g.edges();
                    edges.extend((0..old).filter(|&v| mask >> v & 1 == 1).map(|v| (v, old)));
                    Graph::from_edges(order, &edges).expect("valid extension")
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        level = representatives(merge(parts));
    }
    Ok(level)
}

// ---------------------------------------------------------------------------
// Per-class statistics
// ---------------------------------------------------------------------------

/// One enumerated graph with its invariants.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub wiener: u64,
    pub matching: usize,
}

pub fn census(forms: Vec<(CanonicalForm, Graph)>) -> Result<Vec<CensusEntry>> {
    forms
        .into_par_iter()
        .map(|(form, graph)| {
            let wiener = graph.wiener_index()?;
            let matching = matching_number(&graph)?.size;
            Ok(CensusEntry {
                form,
                graph,
                wiener,
                matching,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

/// Extreme Wiener value of one matching class and every graph attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassExtreme {
    pub value: u64,
    pub attained_by: Vec<CanonicalForm>,
    pub searched: usize,
}

/// Per matching number, the extreme Wiener index and its attainers (sorted).
pub fn class_extremes(entries: &[CensusEntry], which: Extreme) -> BTreeMap<usize, ClassExtreme> {
    let mut out: BTreeMap<usize, ClassExtreme> = BTreeMap::new();
    for e in entries {
        let slot = out.entry(e.matching).or_insert_with(|| ClassExtreme {
            value: e.wiener,
            attained_by: Vec::new(),
            searched: 0,
        });
        slot.searched += 1;
        let better = match which {
            Extreme::Max => e.wiener > slot.value,
            Extreme::Min => e.wiener < slot.value,
        };
        if better {
            slot.value = e.wiener;
            slot.attained_by.clear();
        }
        if e.wiener == slot.value {
            slot.attained_by.push(e.form.clone());
        }
    }
    for slot in out.values_mut() {
        slot.attained_by.sort();
    }
    out
}

/// Maximum Wiener index over the unicyclic graphs of one order and
/// matching number, with all maximizers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub m: usize,
    pub w_max: u64,
    #[serde(serialize_with = "serialize_forms")]
    pub extremal: Vec<CanonicalForm>,
    pub count_searched: usize,
}

fn serialize_forms<S: serde::Serializer>(
    forms: &[CanonicalForm],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::{Error as _, SerializeSeq};
    let mut seq = s.serialize_seq(Some(forms.len()))?;
    for f in forms {
        let g6 = crate::graph6::to_graph6(&f.to_graph()).map_err(S::Error::custom)?;
        seq.serialize_element(&g6)?;
    }
    seq.end()
}

pub fn extremal_table(n: usize) -> Result<Vec<ExtremalRecord>> {
    let entries = census(unicyclic_forms(n)?)?;
    Ok(class_extremes(&entries, Extreme::Max)
        .into_iter()
        .map(|(m, c)| ExtremalRecord {
            n,
            m,
            w_max: c.value,
            extremal: c.attained_by,
            count_searched: c.searched,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts() {
        let cat = Catalogue::new(9);
        let counts: Vec<usize> = (1..=9).map(|s| cat.by_size[s].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
    }

    #[test]
    fn unicyclic_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| unicyclic_forms(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn unicyclic_pipelines_agree() {
        for n in 3..=7 {
            let a: Vec<_> = unicyclic_forms(n)
                .unwrap()
                .into_iter()
                .map(|x| x.0)
                .collect();
            let b: Vec<_> = unicyclic_forms_by_filtering(n)
                .unwrap()
                .into_iter()
                .map(|x| x.0)
                .collect();
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn tree_counts_and_pipelines() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let a: Vec<_> = tree_forms(n, TREE_DEFAULT_CAP)
                .unwrap()
                .into_iter()
                .map(|x| x.0)
                .collect();
            let b: Vec<_> = tree_forms_by_extension(n, TREE_DEFAULT_CAP)
                .unwrap()
                .into_iter()
                .map(|x| x.0)
                .collect();
            assert_eq!(a.len(), count, "n={n}");
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn prufer_decoding() {
        assert_eq!(prufer_to_edges(&[]), vec![(0, 1)]);
        let edges = prufer_to_edges(&[3, 3, 3]);
        let g = Graph::from_edges(5, &edges).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree(3), 4);
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_forms(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn ranges() {
        assert!(matches!(unicyclic_forms(2), Err(Error::Domain(_))));
        assert!(matches!(unicyclic_forms(13), Err(Error::Domain(_))));
        assert!(matches!(tree_forms(10, 9), Err(Error::Domain(_))));
        assert!(matches!(tree_forms(5, 11), Err(Error::Domain(_))));
        assert!(matches!(connected_forms(8), Err(Error::Domain(_))));
    }

    #[test]
    fn small_tables() {
        let t4 = extremal_table(4).unwrap();
        assert_eq!(t4.len(), 1);
        assert_eq!((t4[0].m, t4[0].w_max, t4[0].extremal.len()), (2, 8, 2));
        let t6 = extremal_table(6).unwrap();
        let w: Vec<(usize, u64, usize)> = t6
            .iter()
            .map(|r| (r.m, r.w_max, r.extremal.len()))
            .collect();
        assert_eq!(w, vec![(2, 28, 2), (3, 31, 1)]);
        assert_eq!(t6.iter().map(|r| r.count_searched).sum::<usize>(), 13);
    }
}
