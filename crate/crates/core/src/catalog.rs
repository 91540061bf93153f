//! Exhaustive enumeration of small semigroups as labelled Cayley tables.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Default upper bound on the order accepted by [`enumerate_semigroups`].
pub const DEFAULT_MAX_ORDER: usize = 4;

const UNSET: usize = usize::MAX;

/// Backtracking search over row-major tables.
///
/// After each cell assignment, every associativity triple whose four
/// referenced cells are now all assigned and include the new cell is checked;
/// a violation prunes the subtree.
pub struct Semigroups {
    order: usize,
    table: Vec<usize>,
    /// Number of assigned cells; `table[..pos]` is filled.
    pos: usize,
    up_to_iso: bool,
    done: bool,
}

/// All semigroups of order `n`, as labelled tables in lexicographic order.
/// With `up_to_iso`, only tables equal to their own canonical form are kept,
/// one per isomorphism class.
pub fn enumerate_semigroups(n: usize, up_to_iso: bool) -> Result<Semigroups> {
    enumerate_semigroups_bounded(n, up_to_iso, DEFAULT_MAX_ORDER)
}

pub fn enumerate_semigroups_bounded(n: usize, up_to_iso: bool, bound: usize) -> Result<Semigroups> {
    if n == 0 {
        return Err(Error::InvalidConfig("order must be positive".into()));
    }
    if n > bound {
        return Err(Error::OrderTooLarge { order: n, bound });
    }
    Ok(Semigroups {
        order: n,
        table: vec![UNSET; n * n],
        pos: 0,
        up_to_iso,
        done: false,
    })
}

impl Semigroups {
    #[inline]
    fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let ab = self.get(a, b);
        let bc = self.get(b, c);
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let left = self.get(ab, c);
        let right = self.get(a, bc);
        left == UNSET || right == UNSET || left == right
    }

    /// Checks the triples that reference cell `(i, j)`.
    fn consistent_at(&self, i: usize, j: usize) -> bool {
        let n = self.order;
        for k in 0..n {
            // (i, j) as the inner left product, or as the inner right product
            if !self.triple_ok(i, j, k) || !self.triple_ok(k, i, j) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                // (i, j) as the outer left product: (ab)c with ab = i, c = j
                if self.get(a, b) == i && !self.triple_ok(a, b, j) {
                    return false;
                }
            }
        }
        // a(bc) with a = i, bc = j for any (b, c)
        for b in 0..n {
            for c in 0..n {
                if self.get(b, c) == j && !self.triple_ok(i, b, c) {
                    return false;
                }
            }
        }
        true
    }

    /// Advances to the next complete associative table.
    fn advance(&mut self) -> Option<FiniteSemigroup> {
        let n = self.order;
        let cells = n * n;
        if self.done {
            return None;
        }
        // After a complete table, resume by bumping its last cell.
        let mut descending = self.pos < cells;
        if !descending {
            self.pos -= 1;
        }
        loop {
            let cell = self.pos;
            if descending {
                self.table[cell] = 0;
            } else {
                let next = self.table[cell] + 1;
                if next == n {
                    self.table[cell] = UNSET;
                    if cell == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                    continue;
                }
                self.table[cell] = next;
            }
            descending = self.consistent_at(cell / n, cell % n);
            if descending {
                self.pos += 1;
                if self.pos == cells {
                    return Some(
                        FiniteSemigroup::from_flat(n, self.table.clone(), None)
                            .expect("enumerated table is associative"),
                    );
                }
            }
        }
    }
}

impl Iterator for Semigroups {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        loop {
            let s = self.advance()?;
            if !self.up_to_iso || canonical_form(&s) == s.rows() {
                return Some(s);
            }
        }
    }
}

/// The lexicographically least table (rows concatenated) among all
/// relabellings of `s`. Isomorphic semigroups share it.
pub fn canonical_form(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut candidate = vec![0; n * n];
    loop {
        for a in 0..n {
            for b in 0..n {
                candidate[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
            }
        }
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate.clone());
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    best.unwrap().chunks(n).map(<[usize]>::to_vec).collect()
}

fn next_perm(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One catalog line: the order followed by the `n²` row-major entries.
pub fn dump_line(s: &FiniteSemigroup) -> String {
    std::iter::once(s.order())
        .chain(s.flat_table().iter().copied())
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a line produced by [`dump_line`].
pub fn parse_dump_line(line: &str) -> Result<FiniteSemigroup> {
    let err = |message: String| Error::Parse { line: 1, message };
    let nums = line
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| err(format!("not an integer: {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let (&n, entries) = nums.split_first().ok_or_else(|| err("empty line".into()))?;
    if n == 0 || entries.len() != n * n {
        return Err(err(format!(
            "expected {} entries for order {n}, found {}",
            n * n,
            entries.len()
        )));
    }
    FiniteSemigroup::from_flat(n, entries.to_vec(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_semigroups(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_semigroups(2, false).unwrap().count(), 8);
        assert_eq!(enumerate_semigroups(2, true).unwrap().count(), 5);
        assert_eq!(enumerate_semigroups(3, false).unwrap().count(), 113);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_semigroups(5, false),
            Err(Error::OrderTooLarge { order: 5, bound: 4 })
        ));
        assert!(enumerate_semigroups(0, false).is_err());
    }

    #[test]
    fn output_is_lexicographic() {
        let tables: Vec<_> = enumerate_semigroups(3, false)
            .unwrap()
            .map(|s| s.flat_table().to_vec())
            .collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_form_examples() {
        let max2 = min2().relabel(&[1, 0]);
        assert_eq!(canonical_form(&min2()), canonical_form(&max2));
        assert_ne!(canonical_form(&lz2()), canonical_form(&rz2()));
        assert_eq!(canonical_form(&trivial()), vec![vec![0]]);
    }

    #[test]
    fn dump_round_trip() {
        let s = lz2_monoid();
        let line = dump_line(&s);
        assert_eq!(line, "3 0 1 2 1 1 1 2 2 2");
        assert_eq!(parse_dump_line(&line).unwrap(), s);
        assert!(parse_dump_line("2 0 0 0").is_err());
        assert!(parse_dump_line("2 1 1 0 0").is_err());
    }
}
