use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wiener_extremal::canon::{canonical_form, canonical_labeling, is_isomorphic};
use wiener_extremal::enumerate::unicyclic_forms;
use wiener_extremal::families::{
    build_anm, build_duzhou, build_g3, build_g4, g3_matching_formula, g4_matching_formula,
    AnmParams, DuZhouKind, DuZhouParams, G3Params, G4Params,
};
use wiener_extremal::formulas::{
    bound_dankelmann_max, bound_duzhou_tree_min, bound_duzhou_unicyclic_min,
};
use wiener_extremal::graph6::{from_graph6, to_graph6};
use wiener_extremal::matching::{matching_number, matching_number_bruteforce};
use wiener_extremal::random::{random_path_legged, random_unicyclic};
use wiener_extremal::transforms::{
    cycle_swap, path_legs, path_regraft, path_regraft_lower_bound, SwapVariant,
};
use wiener_extremal::Graph;

fn unicyclic_strategy() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 3usize..=12).prop_flat_map(|(seed, n)| {
        (Just(seed), Just(n), 3..=n)
            .prop_map(|(seed, n, k)| random_unicyclic(&mut ChaCha8Rng::seed_from_u64(seed), n, k))
    })
}

fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

#[test]
fn canonical_form_ignores_labels_on_small_unicyclic_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 3..=7 {
        for (form, g) in unicyclic_forms(n).unwrap() {
            for _ in 0..100 {
                assert_eq!(canonical_form(&shuffled(&g, &mut rng)).unwrap(), form);
            }
        }
    }
}

#[test]
fn cycle_wiener_identity() {
    for n in 3..=30u64 {
        let expected = if n % 2 == 0 {
            n * n * n / 8
        } else {
            (n * n * n - n) / 8
        };
        assert_eq!(
            Graph::cycle(n as usize).wiener_index().unwrap(),
            expected,
            "n={n}"
        );
    }
}

#[test]
fn matching_formulas_hold_in_their_ranges() {
    for a in 0..=6 {
        for j in 0..=10 {
            let g3 = matching_number(&build_g3(&G3Params::reduced(a, j)))
                .unwrap()
                .size;
            match g3_matching_formula(a, j) {
                Some(m) => assert_eq!(m, g3, "G3 a={a} j={j}"),
                None => assert_ne!(2 + j / 2, g3, "G3 a={a} j={j}"),
            }
            for c in 0..=3 {
                let g4 = matching_number(&build_g4(&G4Params::reduced(a, c, j)))
                    .unwrap()
                    .size;
                match g4_matching_formula(a, j) {
                    Some(m) => assert_eq!(m, g4, "G4 a={a} c={c} j={j}"),
                    None => assert_ne!(2 + j.div_ceil(2), g4, "G4 a={a} c={c} j={j}"),
                }
            }
        }
    }
}

#[test]
fn named_families_meet_their_bounds() {
    for n in 2..=30 {
        for m in 1..=n / 2 {
            let g = build_anm(&AnmParams::new(n, m).unwrap());
            assert!(g.is_tree());
            assert_eq!(matching_number(&g).unwrap().size, m);
            assert_eq!(
                g.wiener_index().unwrap(),
                bound_dankelmann_max(n, m).unwrap()
            );
        }
    }
    for n in 4..=30 {
        for m in 2..=n / 2 {
            let t = build_duzhou(&DuZhouParams::new(n, m, DuZhouKind::TreeMin).unwrap());
            assert!(t.is_tree() && t.order() == n);
            assert_eq!(matching_number(&t).unwrap().size, m);
            assert_eq!(
                t.wiener_index().unwrap(),
                bound_duzhou_tree_min(n, m).unwrap()
            );
            let u = build_duzhou(&DuZhouParams::new(n, m, DuZhouKind::UnicyclicMin).unwrap());
            assert!(u.is_unicyclic() && u.order() == n);
            assert_eq!(matching_number(&u).unwrap().size, m);
            assert_eq!(
                u.wiener_index().unwrap(),
                bound_duzhou_unicyclic_min(n, m).unwrap()
            );
        }
    }
}

#[test]
fn path_regraft_meets_its_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let k = rng.gen_range(3..=8);
        let n = rng.gen_range(k + 2..=12);
        let g = random_path_legged(&mut rng, n, k);
        let info = g.unicyclic_info().unwrap();
        let legs = path_legs(&g, &info).unwrap();
        let nonempty: Vec<usize> = (0..k).filter(|&i| !legs[i].is_empty()).collect();
        let (x, y) = (nonempty[0], nonempty[1]);
        let rep = path_regraft(&g, x, y).unwrap();
        assert!(rep.delta_wiener >= path_regraft_lower_bound(&g, x, y).unwrap());
        assert!(rep.after.is_unicyclic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_labeling_reaches_the_canonical_graph(g in unicyclic_strategy(), seed in any::<u64>()) {
        let h = shuffled(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        let lab = canonical_labeling(&h).unwrap();
        prop_assert_eq!(h.permute(&lab), canonical_form(&g).unwrap().to_graph());
    }

    #[test]
    fn deleting_a_cycle_edge_increases_wiener(g in unicyclic_strategy()) {
        let info = g.unicyclic_info().unwrap();
        let before = g.wiener_index().unwrap();
        for i in 0..info.len() {
            let e = (info.cycle[i], info.cycle[(i + 1) % info.len()]);
            let t = g.edit(&[e], &[]).unwrap();
            prop_assert!(t.is_tree());
            prop_assert!(t.wiener_index().unwrap() > before);
        }
    }

    #[test]
    fn graph6_round_trips(g in unicyclic_strategy()) {
        prop_assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn matching_dispatch_equals_bruteforce(g in unicyclic_strategy()) {
        let fast = matching_number(&g).unwrap();
        prop_assert!(fast.verify(&g));
        prop_assert_eq!(fast.size, matching_number_bruteforce(&g).unwrap().size);
    }

    #[test]
    fn swaps_preserve_shape(seed in any::<u64>(), k in 5usize..=8, extra in 0usize..=4) {
        let g = random_unicyclic(&mut ChaCha8Rng::seed_from_u64(seed), k + extra, k);
        for (variant, len) in [(SwapVariant::G1, 3), (SwapVariant::G2, 4)] {
            let rep = cycle_swap(&g, variant).unwrap();
            prop_assert_eq!(rep.after.order(), g.order());
            prop_assert_eq!(rep.after.size(), g.size());
            prop_assert_eq!(rep.after.unicyclic_info().unwrap().len(), len);
            let direct = rep.after.wiener_index().unwrap() as i64 - g.wiener_index().unwrap() as i64;
            prop_assert_eq!(rep.delta_wiener, direct);
        }
    }
}
