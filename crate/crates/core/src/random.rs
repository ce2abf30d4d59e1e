//! Seeded generators of random unicyclic graphs.
//!
//! A random unicyclic graph is a cycle of the requested length plus a random
//! tree on the remaining vertices and one extra node standing for the whole
//! cycle, drawn from a uniform Prüfer sequence; every tree edge that touches
//! the cycle node is then attached to a uniformly chosen cycle vertex. Labels
//! are shuffled at the end so callers cannot rely on the construction order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::prufer_to_edges;
use crate::graph::Graph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffle_labels<R: Rng>(rng: &mut R, n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

/// Random unicyclic graph of order `n` whose cycle has length `k`.
pub fn random_unicyclic<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    assert!(3 <= k && k <= n, "need 3 <= k <= n, got k={k}, n={n}");
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let extra = n - k;
    // node 0 of the auxiliary tree is the contracted cycle
    let tree_edges = match extra {
        0 => Vec::new(),
        1 => vec![(0, 1)],
        _ => {
            let seq: Vec<usize> = (0..extra - 1).map(|_| rng.gen_range(0..=extra)).collect();
            prufer_to_edges(&seq)
        }
    };
    let place = |x: usize, rng: &mut R| {
        if x == 0 {
            rng.gen_range(0..k)
        } else {
            k + x - 1
        }
    };
    for (x, y) in tree_edges {
        let u = place(x, rng);
        let v = place(y, rng);
        edges.push((u, v));
    }
    shuffle_labels(rng, n, &edges)
}

/// Random unicyclic graph whose attached trees are all paths, with at least
/// two non-empty legs. Requires `n >= k + 2`.
pub fn random_path_legged<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    assert!(
        k >= 3 && n >= k + 2,
        "need k >= 3 and n >= k + 2, got k={k}, n={n}"
    );
    let legs = loop {
        let mut legs = vec![0usize; k];
        for _ in 0..n - k {
            legs[rng.gen_range(0..k)] += 1;
        }
        if legs.iter().filter(|&&x| x > 0).count() >= 2 {
            break legs;
        }
    };
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (root, &len) in legs.iter().enumerate() {
        let mut tip = root;
        for _ in 0..len {
            edges.push((tip, next));
            tip = next;
            next += 1;
        }
    }
    shuffle_labels(rng, n, &edges)
}

/// `count` random unicyclic graphs with cycle length in `k_min..=k_max` and
/// order in `k..=n_max`.
pub fn unicyclic_corpus(
    seed: u64,
    count: usize,
    k_min: usize,
    k_max: usize,
    n_max: usize,
) -> Vec<Graph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(k_min..=k_max.min(n_max));
            let n = rng.gen_range(k..=n_max);
            random_unicyclic(&mut rng, n, k)
        })
        .collect()
}

/// `count` random path-legged unicyclic graphs; order in `k+2..=n_max`.
pub fn path_legged_corpus(
    seed: u64,
    count: usize,
    k_min: usize,
    k_max: usize,
    n_max: usize,
) -> Vec<Graph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(k_min..=k_max.min(n_max - 2));
            let n = rng.gen_range(k + 2..=n_max);
            random_path_legged(&mut rng, n, k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_graphs_have_requested_shape() {
        let mut rng = seeded(7);
        for _ in 0..200 {
            let k = rng.gen_range(3..=8);
            let n = rng.gen_range(k..=12);
            let g = random_unicyclic(&mut rng, n, k);
            let info = g.unicyclic_info().expect("unicyclic");
            assert_eq!((g.order(), info.len()), (n, k));
        }
    }

    #[test]
    fn path_legged_graphs() {
        let mut rng = seeded(11);
        for _ in 0..200 {
            let k = rng.gen_range(3..=6);
            let n = rng.gen_range(k + 2..=12);
            let g = random_path_legged(&mut rng, n, k);
            let info = g.unicyclic_info().unwrap();
            assert_eq!(info.len(), k);
            assert!(info.attachment.iter().filter(|a| !a.is_empty()).count() >= 2);
            assert!((0..n).all(|v| info.cycle.contains(&v) || g.degree(v) <= 2));
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(
            unicyclic_corpus(3, 20, 5, 8, 12),
            unicyclic_corpus(3, 20, 5, 8, 12)
        );
        assert_ne!(
            unicyclic_corpus(3, 20, 5, 8, 12),
            unicyclic_corpus(4, 20, 5, 8, 12)
        );
    }
}
