use std::collections::BTreeSet;

use proptest::prelude::*;
use treecount::counting::{brute_count, proper_count, sr_count_product, sr_count_product_ordered};
use treecount::extremal::{census, has_exposed_subtree};
use treecount::schemes::is_valid;
use treecount::treelib::{canonical_code, degree_profile, enumerate_free_trees, for_each_pruefer_sequence};
use treecount::{Coloring, CountValue, Scheme, Tree};

fn schemes() -> Vec<Scheme> {
    let mut all = Scheme::ALL.to_vec();
    all.extend([Scheme::KStrongConflictFree(1), Scheme::KStrongConflictFree(3)]);
    all
}

/// A labeled tree on `lo..=hi` vertices from a random Pruefer sequence.
fn tree(lo: usize, hi: usize) -> impl Strategy<Value = Tree> {
    (lo.max(3)..=hi)
        .prop_flat_map(|n| prop::collection::vec(0..n, n - 2))
        .prop_map(|seq| Tree::from_pruefer(&seq).unwrap())
}

fn tree_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Tree, Vec<usize>)> {
    tree(lo, hi).prop_flat_map(|t| {
        let perm = Just((0..t.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(t), perm)
    })
}

fn tree_and_coloring(lo: usize, hi: usize, q: u32) -> impl Strategy<Value = (Tree, Vec<u32>)> {
    tree(lo, hi).prop_flat_map(move |t| {
        let colors = prop::collection::vec(1..=q, t.n());
        (Just(t), colors)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_code_ignores_labels((t, perms) in tree(3, 16).prop_flat_map(|t| {
        let ids: Vec<usize> = (0..t.n()).collect();
        (Just(t), prop::collection::vec(Just(ids).prop_shuffle(), 100))
    })) {
        let code = canonical_code(&t);
        for perm in &perms {
            prop_assert_eq!(&canonical_code(&t.relabel(perm).unwrap()), &code);
        }
        prop_assert_eq!(canonical_code(&Tree::from_canonical_code(&code).unwrap()), code);
    }

    #[test]
    fn exposed_subtree_ignores_labels((t, perm) in tree_and_perm(3, 14)) {
        prop_assert_eq!(has_exposed_subtree(&t), has_exposed_subtree(&t.relabel(&perm).unwrap()));
    }

    #[test]
    fn validity_ignores_color_names(
        (t, colors) in tree_and_coloring(3, 12, 4),
        names in Just(vec![1u32, 2, 3, 4]).prop_shuffle(),
    ) {
        let renamed: Vec<u32> = colors.iter().map(|&c| names[c as usize - 1]).collect();
        let a = Coloring::for_tree(&t, colors, 4).unwrap();
        let b = Coloring::for_tree(&t, renamed, 4).unwrap();
        for scheme in schemes() {
            prop_assert_eq!(is_valid(&t, &a, scheme), is_valid(&t, &b, scheme), "{}", scheme);
        }
    }

    #[test]
    fn validity_ignores_vertex_labels(((t, perm), colors) in tree_and_perm(3, 12)
        .prop_flat_map(|(t, perm)| {
            let n = t.n();
            (Just((t, perm)), prop::collection::vec(1..=3u32, n))
        }))
    {
        let moved = t.relabel(&perm).unwrap();
        let mut moved_colors = vec![0; t.n()];
        for (v, &c) in colors.iter().enumerate() {
            moved_colors[perm[v]] = c;
        }
        let a = Coloring::for_tree(&t, colors, 3).unwrap();
        let b = Coloring::for_tree(&moved, moved_colors, 3).unwrap();
        for scheme in schemes() {
            prop_assert_eq!(is_valid(&t, &a, scheme), is_valid(&moved, &b, scheme), "{}", scheme);
        }
    }

    #[test]
    fn counts_grow_with_q_and_stay_below_q_to_the_n(t in tree(3, 7)) {
        for scheme in schemes() {
            let mut previous: CountValue = 0;
            for q in 1..=4u32 {
                let c: CountValue = brute_count(&t, q, scheme).unwrap();
                prop_assert!(c >= previous, "{} q={}", scheme, q);
                prop_assert!(c <= (q as CountValue).pow(t.n() as u32));
                previous = c;
            }
        }
    }

    #[test]
    fn star_rainbow_product_ignores_the_ordering(t in tree(3, 12), q in 2..6u32) {
        let leaf = (0..t.n()).rev().find(|&v| t.is_leaf(v)).unwrap();
        let order = t.bfs_order(leaf);
        let by_bfs: CountValue = sr_count_product(&t, q).unwrap();
        let by_other: CountValue = sr_count_product_ordered(&t, q, &order).unwrap();
        prop_assert_eq!(by_bfs, by_other);
    }
}

#[test]
fn odd_count_respects_the_leaf_bound() {
    // On two vertices both ends are leaves of each other and the bound fails.
    for n in 3..=8 {
        for t in enumerate_free_trees(n).unwrap() {
            let k = degree_profile(&t).leaf_count as u32;
            for q in 2..=3u32 {
                let odd: CountValue = brute_count(&t, q, Scheme::Odd).unwrap();
                let bound = (q as CountValue).pow(n as u32 - k) * ((q - 1) as CountValue).pow(k);
                assert!(odd <= bound, "{t} q={q}: {odd} > {bound}");
            }
        }
    }
}

#[test]
fn two_color_excess_matches_structure() {
    for n in 2..=9 {
        let proper: CountValue = proper_count(n, 2).unwrap();
        let cf = census(n, 2, Scheme::ConflictFree).unwrap();
        let odd = census(n, 2, Scheme::Odd).unwrap();
        for (cf, odd) in cf.iter().zip(&odd) {
            assert_eq!(cf.canonical_code, odd.canonical_code);
            let t = Tree::from_canonical_code(&cf.canonical_code).unwrap();
            assert_eq!(cf.count > proper, has_exposed_subtree(&t), "cf {t}");
            assert_eq!(odd.count > proper, degree_profile(&t).even_degree_count >= 2, "odd {t}");
        }
    }
}

#[test]
fn conflict_free_star_is_below_path() {
    for n in 4..=10 {
        for q in 2..=4 {
            let star: CountValue = brute_count(&Tree::star(n).unwrap(), q, Scheme::ConflictFree).unwrap();
            let path: CountValue = brute_count(&Tree::path(n).unwrap(), q, Scheme::ConflictFree).unwrap();
            assert!(star < path, "n={n} q={q}");
        }
    }
}

#[test]
fn pruefer_sequences_give_distinct_labeled_trees() {
    for n in 3..=7 {
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for_each_pruefer_sequence(n, |seq| {
            let t = Tree::from_pruefer(seq).unwrap();
            t.check_invariants().unwrap();
            let mut edges = t.edges().to_vec();
            edges.sort();
            seen.insert(edges);
            total += 1;
        });
        assert_eq!(total, n.pow(n as u32 - 2));
        assert_eq!(seen.len(), total);
    }
}
