mod common;

use common::{naive_iso_class_count, naive_semigroup_tables};
use semilab::catalog::{canonical_form, dump_line, enumerate_semigroups, parse_dump_line};

#[test]
fn enumeration_matches_generate_then_filter() {
    for n in 1..=3 {
        let fast: Vec<Vec<usize>> = enumerate_semigroups(n, false)
            .unwrap()
            .map(|s| s.flat_table().to_vec())
            .collect();
        let naive = naive_semigroup_tables(n);
        assert_eq!(fast, naive, "order {n}");
    }
}

#[test]
fn labelled_counts_are_stable() {
    let counts: Vec<usize> = (1..=4)
        .map(|n| enumerate_semigroups(n, false).unwrap().count())
        .collect();
    assert_eq!(counts, vec![1, 8, 113, 3492]);
    let again: Vec<usize> = (1..=4)
        .map(|n| enumerate_semigroups(n, false).unwrap().count())
        .collect();
    assert_eq!(counts, again);
}

#[test]
fn iso_counts_match_orbit_closure() {
    for n in 1..=3 {
        let naive = naive_iso_class_count(n, &naive_semigroup_tables(n));
        assert_eq!(
            enumerate_semigroups(n, true).unwrap().count(),
            naive,
            "order {n}"
        );
    }
    assert_eq!(enumerate_semigroups(2, true).unwrap().count(), 5);
}

#[test]
fn iso_representatives_are_canonical_and_distinct() {
    let reps: Vec<_> = enumerate_semigroups(4, true).unwrap().collect();
    assert_eq!(reps.len(), 188);
    let mut forms: Vec<_> = reps.iter().map(canonical_form).collect();
    assert!(reps.iter().zip(&forms).all(|(s, f)| s.rows() == *f));
    forms.dedup();
    assert_eq!(forms.len(), 188);
}

#[test]
fn dump_lines_replay() {
    for s in enumerate_semigroups(3, false).unwrap() {
        let back = parse_dump_line(&dump_line(&s)).unwrap();
        assert_eq!(back, s);
    }
}
