//! Shared test fixtures and brute-force oracles. Nothing here calls into the
//! library code paths it is used to check.
#![allow(dead_code)]

use std::sync::OnceLock;

use semilab::catalog::enumerate_semigroups;
use semilab::{Congruence, ElementSet, FiniteSemigroup};

/// Every labelled semigroup of order 1..=4, in enumeration order.
pub fn catalog() -> &'static [FiniteSemigroup] {
    static CATALOG: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_semigroups(n, false).unwrap())
            .collect()
    })
}

pub fn catalog_of_order(n: usize) -> Vec<&'static FiniteSemigroup> {
    catalog().iter().filter(|s| s.order() == n).collect()
}

/// Generate every `n x n` table and keep the associative ones.
pub fn naive_semigroup_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![0; cells];
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]))
        });
        if assoc {
            out.push(t);
        }
    }
    out
}

/// Number of isomorphism classes among `tables`, found by closing each table
/// under every relabelling.
pub fn naive_iso_class_count(n: usize, tables: &[Vec<usize>]) -> usize {
    use std::collections::HashSet;
    let perms = permutations(n);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = 0;
    for t in tables {
        if seen.contains(t) {
            continue;
        }
        classes += 1;
        for p in &perms {
            let mut r = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    r[p[a] * n + p[b]] = p[t[a * n + b]];
                }
            }
            seen.insert(r);
        }
    }
    classes
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `P` of a family by testing each pair of elements against the definition.
pub fn p_congruence_pairwise(s: &FiniteSemigroup, family: &[ElementSet]) -> Congruence {
    let n = s.order();
    let related = |a: usize, b: usize| {
        family.iter().all(|set| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    set.contains(s.mul(s.mul(x, a), y)) == set.contains(s.mul(s.mul(x, b), y))
                })
            })
        })
    };
    let mut labels: Vec<usize> = Vec::with_capacity(n);
    for a in 0..n {
        let label = (0..a).find(|&b| related(b, a)).map_or(a, |b| labels[b]);
        labels.push(label);
    }
    Congruence::from_labels(&labels)
}

/// `S^k` by multiplying out all `k`-tuples.
pub fn power_by_brute_force(s: &FiniteSemigroup, k: usize) -> ElementSet {
    let n = s.order();
    let mut reached = vec![false; n];
    let total = n.pow(k as u32);
    for code in 0..total {
        let mut c = code;
        let mut word = Vec::with_capacity(k);
        for _ in 0..k {
            word.push(c % n);
            c /= n;
        }
        reached[s.word_product(&word).unwrap()] = true;
    }
    ElementSet::from_indices(n, (0..n).filter(|&e| reached[e])).unwrap()
}

/// Whether `uxyv = uyxv` for all `u, v` in `S^k` and `x, y` in `S`.
pub fn lemma4_holds_at(s: &FiniteSemigroup, k: usize) -> bool {
    let pk = power_by_brute_force(s, k);
    let n = s.order();
    let members: Vec<usize> = pk.iter().collect();
    members.iter().all(|&u| {
        members.iter().all(|&v| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    s.word_product(&[u, x, y, v]).unwrap() == s.word_product(&[u, y, x, v]).unwrap()
                })
            })
        })
    })
}

pub fn report_line(id: usize, name: &str, passed: bool, detail: &str) {
    println!(
        "[{}] criterion {id}: {name}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
}
