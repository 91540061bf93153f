//! Finite semigroups given by Cayley tables, and subsets of their elements.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite semigroup on the elements `0..order`.
///
/// `mul(a, b)` reads row `a`, column `b` of the Cayley table. Associativity is
/// checked once at construction and assumed by every other operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates a square table (and optional display labels).
    ///
    /// Errors carry the first offending cell or the lexicographically first
    /// non-associative triple.
    pub fn new(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(Error::NotSquare);
        }
        let table = rows.into_iter().flatten().collect();
        Self::from_flat(order, table, labels)
    }

    /// Same as [`FiniteSemigroup::new`] for a row-major table of `order * order` entries.
    pub fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::NotSquare);
        }
        if let Some(pos) = table.iter().position(|&e| e >= order) {
            return Err(Error::OutOfRangeEntry {
                a: pos / order,
                b: pos % order,
            });
        }
        let s = FiniteSemigroup {
            order,
            table,
            labels: None,
        };
        if let Some((a, b, c)) = s.associativity_witness() {
            return Err(Error::NotAssociative { a, b, c });
        }
        s.with_labels(labels)
    }

    fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(labels) = &labels {
            if labels.len() != self.order {
                return Err(Error::LabelCount {
                    expected: self.order,
                    found: labels.len(),
                });
            }
            let mut seen = HashMap::new();
            for l in labels {
                if seen.insert(l.as_str(), ()).is_some() {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        self.labels = labels;
        Ok(self)
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Row-major entries, `order * order` long.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub(crate) fn check_ambient(&self, set: &ElementSet) -> Result<()> {
        if set.ambient() == self.order {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.order,
                found: set.ambient(),
            })
        }
    }

    /// Product of a nonempty word, folded left to right.
    pub fn word_product(&self, word: &[usize]) -> Result<usize> {
        let (&first, rest) = word.split_first().ok_or(Error::EmptyWord)?;
        self.check_index(first)?;
        rest.iter().try_fold(first, |acc, &x| {
            self.check_index(x)?;
            Ok(self.mul(acc, x))
        })
    }

    /// Unchecked fold for hot loops; callers guarantee a nonempty in-range word.
    #[inline]
    pub(crate) fn fold(&self, word: &[usize]) -> usize {
        word[1..].iter().fold(word[0], |acc, &x| self.mul(acc, x))
    }

    /// `{ a * b : a in left, b in right }`.
    pub fn set_product(&self, left: &ElementSet, right: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for a in left.iter() {
            for b in right.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// The sequence S, S^2, S^3, ... up to the first repetition.
    pub fn power_set_chain(&self) -> PowerChain {
        let mut sets = vec![self.full_set()];
        loop {
            let next = self.set_product(&self.full_set(), sets.last().unwrap());
            if let Some(pos) = sets.iter().position(|s| *s == next) {
                return PowerChain {
                    sets,
                    cycle_start: pos,
                };
            }
            sets.push(next);
        }
    }

    /// First pair `(a, b)` in lexicographic order with `ab != ba`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// The two-sided identity, if there is one.
    pub fn identity_element(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn is_monoid(&self) -> bool {
        self.identity_element().is_some()
    }

    /// The isomorphic copy obtained by renaming element `a` to `perm[a]`.
    ///
    /// Panics if `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n, "relabeling must cover every element");
        let mut table = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        assert!(
            table.iter().all(|&e| e < n),
            "relabeling is not a bijection"
        );
        FiniteSemigroup {
            order: n,
            table,
            labels: self.labels.as_ref().map(|l| {
                let mut out = l.clone();
                for (a, &p) in perm.iter().enumerate() {
                    out[p] = l[a].clone();
                }
                out
            }),
        }
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

/// The chain of power sets `S^k` (products of exactly `k` elements).
///
/// `sets[k - 1]` is `S^k`; multiplying the last set by `S` yields
/// `sets[cycle_start]`, after which the sequence repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerChain {
    pub sets: Vec<ElementSet>,
    pub cycle_start: usize,
}

impl PowerChain {
    /// `S^k` for any `k >= 1`.
    pub fn power(&self, k: usize) -> &ElementSet {
        assert!(k >= 1, "powers start at S^1");
        let idx = k - 1;
        if idx < self.sets.len() {
            return &self.sets[idx];
        }
        let period = self.sets.len() - self.cycle_start;
        &self.sets[self.cycle_start + (idx - self.cycle_start) % period]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// A subset of the elements `0..ambient` of some semigroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<bool>,
}

impl ElementSet {
    pub fn empty(ambient: usize) -> Self {
        ElementSet {
            members: vec![false; ambient],
        }
    }

    pub fn full(ambient: usize) -> Self {
        ElementSet {
            members: vec![true; ambient],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ambient: usize, indices: I) -> Result<Self> {
        let mut set = Self::empty(ambient);
        for i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    order: ambient,
                });
            }
            set.members[i] = true;
        }
        Ok(set)
    }

    /// Bit `i` of `mask` selects element `i`. Requires `ambient <= 64`.
    pub fn from_mask(ambient: usize, mask: u64) -> Self {
        assert!(ambient <= 64);
        ElementSet {
            members: (0..ambient).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    /// All `2^ambient` subsets, ordered by bit mask.
    pub fn all_subsets(ambient: usize) -> impl Iterator<Item = ElementSet> {
        assert!(ambient < 64);
        (0..1u64 << ambient).map(move |m| ElementSet::from_mask(ambient, m))
    }

    pub fn ambient(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.members[e]
    }

    pub fn insert(&mut self, e: usize) {
        self.members[e] = true;
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.contains(&true)
    }

    pub fn is_full(&self) -> bool {
        !self.members.contains(&false)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn complement(&self) -> Self {
        ElementSet {
            members: self.members.iter().map(|m| !m).collect(),
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> Self {
        debug_assert_eq!(self.ambient(), other.ambient());
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(a, b)| *a && *b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElementSet) -> Self {
        debug_assert_eq!(self.ambient(), other.ambient());
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(a, b)| !a || *b)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        f.pad(&format!("{{{}}}", items.join(",")))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.ambient())
    }
}
