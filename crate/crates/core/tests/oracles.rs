mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use hereditary::canon::{canonical_key, dedup};
use hereditary::classes::{is_chordal, is_cograph, is_split, is_split_by_forbidden, is_threshold};
use hereditary::gen::{enumerate_graphs, enumerate_levels, GenSpec};

#[test]
fn burnside_counts_match_generation_through_eight() {
    let levels = enumerate_levels(8).unwrap();
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(level.len() as u64, burnside_count(n), "order {n}");
    }
}

#[test]
fn orbit_sizes_cover_every_labelled_graph() {
    // each class of G contributes n!/|Aut(G)| labelled graphs
    for n in 0..=7 {
        let perms = permutations(n);
        let total: usize = enumerate_graphs(&GenSpec::order(n))
            .unwrap()
            .iter()
            .map(|g| perms.len() / automorphism_count(g, &perms))
            .sum();
        assert_eq!(total as u64, 1u64 << (n * n.saturating_sub(1) / 2), "order {n}");
    }
}

#[test]
fn canonical_key_agrees_with_brute_force_through_five() {
    for n in 0..=5 {
        let perms = permutations(n);
        let mut forward: HashMap<u64, hereditary::CanonicalKey> = HashMap::new();
        let mut backward = HashMap::new();
        for g in all_labelled(n) {
            let brute = brute_force_key(&g, &perms);
            let fast = canonical_key(&g);
            assert_eq!(forward.entry(brute).or_insert_with(|| fast.clone()), &fast);
            assert_eq!(backward.entry(fast).or_insert(brute), &brute);
        }
    }
}

#[test]
fn labelled_dedup_matches_generator_through_six() {
    for n in 0..=6 {
        let classes = dedup(all_labelled(n));
        let generated: BTreeSet<_> = enumerate_graphs(&GenSpec::order(n))
            .unwrap()
            .iter()
            .map(canonical_key)
            .collect();
        assert_eq!(classes.keys().cloned().collect::<BTreeSet<_>>(), generated, "order {n}");
    }
}

#[test]
fn recognizers_match_naive_definitions() {
    for level in enumerate_levels(7).unwrap() {
        for g in &level {
            assert_eq!(is_split(g), naive_split(g), "split {g}");
            assert_eq!(is_split_by_forbidden(g), is_split(g), "split forbidden {g}");
            assert_eq!(is_cograph(g), naive_cograph(g), "cograph {g}");
            assert_eq!(is_threshold(g), naive_threshold(g), "threshold {g}");
            assert_eq!(is_chordal(g), naive_chordal(g), "chordal {g}");
        }
    }
}

#[test]
fn recognizers_agree_on_labelled_graphs() {
    for g in all_labelled(5) {
        assert_eq!(is_split(&g), naive_split(&g));
        assert_eq!(is_chordal(&g), naive_chordal(&g));
    }
}
