//! Congruences, quotients, and the congruence `P` induced by a family of subsets.

mod verify;

pub(crate) use verify::{
    check_induced_monoid, check_separator_structure, converse_setup, converse_stages,
};
pub use verify::{verify_corollary1, verify_theorem1_converse, verify_theorem1_forward};

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, FiniteSemigroup};

/// Default order bound for [`enumerate_congruences`] (Bell(6) = 203 partitions).
pub const DEFAULT_CONGRUENCE_ORDER_BOUND: usize = 6;

/// A partition of `0..n` in canonical form.
///
/// Class ids are contiguous and numbered by first appearance in ascending
/// element order, so two partitions are equal exactly when their `class_of`
/// vectors are. The `verified` flag records that compatibility with some
/// semigroup's multiplication was checked; it does not take part in equality.
#[derive(Clone)]
pub struct Congruence {
    class_of: Vec<usize>,
    num_classes: usize,
    verified: bool,
}

impl Congruence {
    /// Canonicalizes arbitrary class labels (any `usize` values).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Congruence {
            num_classes: renumber.len(),
            class_of,
            verified: false,
        }
    }

    /// Builds a partition from explicit blocks, which must be nonempty,
    /// pairwise disjoint and cover `0..ambient`.
    pub fn from_blocks(ambient: usize, blocks: &[ElementSet]) -> Result<Self> {
        let mut labels = vec![usize::MAX; ambient];
        for (i, block) in blocks.iter().enumerate() {
            if block.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    found: block.ambient(),
                });
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "block {i} of the partition is empty"
                )));
            }
            for e in block.iter() {
                if labels[e] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} appears in two blocks"
                    )));
                }
                labels[e] = i;
            }
        }
        if let Some(e) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {e} is not covered by the partition"
            )));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The equality relation.
    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    /// The relation with a single class.
    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Checks compatibility with `s` and marks the partition verified.
    pub fn verify(mut self, s: &FiniteSemigroup) -> Result<Self> {
        if let Some((a, b, c)) = congruence_witness(s, &self)? {
            return Err(Error::NotACongruence { a, b, c });
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn ambient(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    #[inline]
    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// The classes as subsets, indexed by class id.
    pub fn classes(&self) -> Vec<ElementSet> {
        let n = self.ambient();
        let mut out = vec![ElementSet::empty(n); self.num_classes];
        for (e, &c) in self.class_of.iter().enumerate() {
            out[c].insert(e);
        }
        out
    }

    pub fn class(&self, id: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.ambient());
        for (e, _) in self.class_of.iter().enumerate().filter(|(_, &c)| c == id) {
            out.insert(e);
        }
        out
    }

    /// Smallest element of each class, indexed by class id.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_classes];
        for (e, &c) in self.class_of.iter().enumerate().rev() {
            reps[c] = e;
        }
        reps
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.ambient();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// Whether the set is a union of classes.
    pub fn saturates(&self, set: &ElementSet) -> bool {
        self.saturation_witness(set).is_none()
    }

    /// First related pair `(a, b)` with `a` in the set and `b` outside it.
    pub fn saturation_witness(&self, set: &ElementSet) -> Option<(usize, usize)> {
        let n = self.ambient();
        (0..n)
            .filter(|&a| set.contains(a))
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.related(a, b) && !set.contains(b))
    }
}

impl PartialEq for Congruence {
    fn eq(&self, other: &Self) -> bool {
        self.class_of == other.class_of
    }
}

impl Eq for Congruence {}

impl Hash for Congruence {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.class_of.hash(state);
    }
}

impl fmt::Display for Congruence {
    /// Family-literal form, e.g. `{0,2};{1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self.classes().iter().map(ToString::to_string).collect();
        f.pad(&classes.join(";"))
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence({self})")
    }
}

fn check_family(s: &FiniteSemigroup, family: &[ElementSet]) -> Result<()> {
    family.iter().try_for_each(|a| s.check_ambient(a))
}

/// The partition behind `P`, before any compatibility check.
///
/// Each element `a` gets the fingerprint `{(i, x, y) : x·a·y ∈ A_i}`; two
/// elements share a class exactly when their fingerprints agree.
pub(crate) fn p_partition(s: &FiniteSemigroup, family: &[ElementSet]) -> Result<Congruence> {
    check_family(s, family)?;
    let n = s.order();
    let mut by_fingerprint: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut labels = Vec::with_capacity(n);
    for a in 0..n {
        let mut fp = Vec::with_capacity(family.len() * n * n);
        for set in family {
            for x in 0..n {
                let xa = s.mul(x, a);
                fp.extend((0..n).map(|y| set.contains(s.mul(xa, y))));
            }
        }
        let next = by_fingerprint.len();
        labels.push(*by_fingerprint.entry(fp).or_insert(next));
    }
    Ok(Congruence::from_labels(&labels))
}

/// `P` of a family: `a ≡ b` iff for every `A_i` and all `x, y ∈ S`,
/// `xay ∈ A_i ⟺ xby ∈ A_i`.
///
/// Contexts `x, y` range over `S` itself; no identity is adjoined. Empty
/// families, and families containing only `∅` or `S`, give the universal
/// relation. The result is checked for compatibility before it is returned.
pub fn p_congruence(s: &FiniteSemigroup, family: &[ElementSet]) -> Result<Congruence> {
    p_partition(s, family)?.verify(s)
}

/// First `(a, b, c)` with `a ≡ b` but `ac ≢ bc` or `ca ≢ cb`.
pub fn congruence_witness(
    s: &FiniteSemigroup,
    partition: &Congruence,
) -> Result<Option<(usize, usize, usize)>> {
    if partition.ambient() != s.order() {
        return Err(Error::AmbientMismatch {
            expected: s.order(),
            found: partition.ambient(),
        });
    }
    let n = s.order();
    for a in 0..n {
        for b in 0..n {
            if a == b || !partition.related(a, b) {
                continue;
            }
            for c in 0..n {
                if !partition.related(s.mul(a, c), s.mul(b, c))
                    || !partition.related(s.mul(c, a), s.mul(c, b))
                {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_congruence(s: &FiniteSemigroup, partition: &Congruence) -> Result<bool> {
    Ok(congruence_witness(s, partition)?.is_none())
}

/// `S/σ` together with the projection `S → S/σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSemigroup {
    quotient: FiniteSemigroup,
    projection: Congruence,
}

impl QuotientSemigroup {
    /// The factor semigroup on class ids.
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.quotient
    }

    pub fn projection(&self) -> &Congruence {
        &self.projection
    }

    pub fn project(&self, e: usize) -> usize {
        self.projection.class_of(e)
    }

    pub fn source_order(&self) -> usize {
        self.projection.ambient()
    }
}

/// Builds the factor semigroup from class representatives and sweeps every
/// product to confirm the table does not depend on the choice.
pub fn quotient(s: &FiniteSemigroup, c: &Congruence) -> Result<QuotientSemigroup> {
    if c.ambient() != s.order() {
        return Err(Error::AmbientMismatch {
            expected: s.order(),
            found: c.ambient(),
        });
    }
    let reps = c.representatives();
    let k = c.num_classes();
    let table: Vec<usize> = (0..k * k)
        .map(|i| c.class_of(s.mul(reps[i / k], reps[i % k])))
        .collect();
    let n = s.order();
    let well_defined = (0..n).all(|a| {
        (0..n).all(|b| c.class_of(s.mul(a, b)) == table[c.class_of(a) * k + c.class_of(b)])
    });
    if !well_defined {
        let (a, b, w) = congruence_witness(s, c)?.expect("ill-defined quotient has a witness");
        return Err(Error::NotACongruence { a, b, c: w });
    }
    let quotient = FiniteSemigroup::from_flat(k, table, None)?;
    let mut projection = c.clone();
    projection.verified = true;
    Ok(QuotientSemigroup {
        quotient,
        projection,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientClass {
    pub is_monoid: bool,
    pub is_commutative: bool,
    pub identity_class: Option<usize>,
}

impl QuotientClass {
    pub fn is_commutative_monoid(&self) -> bool {
        self.is_monoid && self.is_commutative
    }
}

pub fn classify_quotient(q: &QuotientSemigroup) -> QuotientClass {
    let identity_class = q.quotient.identity_element();
    QuotientClass {
        is_monoid: identity_class.is_some(),
        is_commutative: q.quotient.is_commutative(),
        identity_class,
    }
}

/// Restricted growth strings of length `n` in lexicographic order; each one
/// is the canonical labelling of a set partition of `0..n`.
pub fn set_partitions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut rgs = current.clone();
        // prefix_max[i] = max(rgs[0..i])
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(rgs[i - 1]);
        }
        for i in (1..n).rev() {
            if rgs[i] <= prefix_max[i] {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                next = Some(rgs);
                break;
            }
        }
        Some(current)
    })
}

/// All congruences of `s`, in restricted-growth-string order. Orders above
/// [`DEFAULT_CONGRUENCE_ORDER_BOUND`] are refused.
pub fn enumerate_congruences(s: &FiniteSemigroup) -> Result<Vec<Congruence>> {
    enumerate_congruences_bounded(s, DEFAULT_CONGRUENCE_ORDER_BOUND)
}

pub fn enumerate_congruences_bounded(s: &FiniteSemigroup, bound: usize) -> Result<Vec<Congruence>> {
    if s.order() > bound {
        return Err(Error::OrderTooLarge {
            order: s.order(),
            bound,
        });
    }
    set_partitions(s.order())
        .map(|rgs| Congruence::from_labels(&rgs))
        .filter_map(|p| match congruence_witness(s, &p) {
            Ok(None) => Some(Ok(Congruence {
                verified: true,
                ..p
            })),
            Ok(Some(_)) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    fn blocks(n: usize, bs: &[&[usize]]) -> Congruence {
        let sets: Vec<_> = bs.iter().map(|b| set(n, b)).collect();
        Congruence::from_blocks(n, &sets).unwrap()
    }

    #[test]
    fn canonical_labels() {
        let c = Congruence::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.class_ids(), &[0, 1, 0, 2]);
        assert_eq!(c.num_classes(), 3);
        assert_eq!(c.to_string(), "{0,2};{1};{3}");
        assert_eq!(c.representatives(), vec![0, 1, 3]);
    }

    #[test]
    fn from_blocks_rejects_overlaps_and_gaps() {
        assert!(Congruence::from_blocks(3, &[set(3, &[0, 1]), set(3, &[1, 2])]).is_err());
        assert!(Congruence::from_blocks(3, &[set(3, &[0, 1])]).is_err());
        assert!(Congruence::from_blocks(3, &[set(3, &[0, 1, 2]), set(3, &[])]).is_err());
    }

    #[test]
    fn p_congruence_examples() {
        assert_eq!(
            p_congruence(&z2(), &[set(2, &[0])]).unwrap(),
            Congruence::identity(2)
        );
        assert_eq!(
            p_congruence(&lz2(), &[set(2, &[0])]).unwrap(),
            Congruence::universal(2)
        );
        assert_eq!(
            p_congruence(&min2(), &[set(2, &[0])]).unwrap(),
            Congruence::identity(2)
        );
        assert!(p_congruence(&z2(), &[set(2, &[0])]).unwrap().is_verified());
    }

    #[test]
    fn degenerate_families_are_universal() {
        for s in [min2(), z2(), chain(3), lz2_monoid(), null(3)] {
            let n = s.order();
            let u = Congruence::universal(n);
            assert_eq!(p_congruence(&s, &[]).unwrap(), u);
            assert_eq!(p_congruence(&s, &[ElementSet::empty(n)]).unwrap(), u);
            assert_eq!(p_congruence(&s, &[s.full_set()]).unwrap(), u);
        }
    }

    #[test]
    fn p_congruence_ambient_mismatch() {
        assert_eq!(
            p_congruence(&z2(), &[set(3, &[0])]),
            Err(Error::AmbientMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn is_congruence_examples() {
        assert!(is_congruence(&z2(), &Congruence::universal(2)).unwrap());
        let bad = blocks(3, &[&[0, 2], &[1]]);
        assert_eq!(
            congruence_witness(&chain(3), &bad).unwrap(),
            Some((0, 2, 1))
        );
        assert_eq!(
            bad.clone().verify(&chain(3)).unwrap_err(),
            Error::NotACongruence { a: 0, b: 2, c: 1 }
        );
        assert!(is_congruence(&lz2(), &Congruence::identity(2)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(&z2(), &Congruence::identity(2)).unwrap();
        assert_eq!(q.semigroup().rows(), z2().rows());

        let q = quotient(&min2(), &Congruence::universal(2)).unwrap();
        assert_eq!(q.semigroup().rows(), trivial().rows());

        let q = quotient(&chain(3), &blocks(3, &[&[0, 1], &[2]])).unwrap();
        assert_eq!(q.semigroup().rows(), min2().rows());
        assert_eq!(q.project(1), 0);
        assert_eq!(q.project(2), 1);

        let err = quotient(&chain(3), &blocks(3, &[&[0, 2], &[1]])).unwrap_err();
        assert_eq!(err, Error::NotACongruence { a: 0, b: 2, c: 1 });
    }

    #[test]
    fn classify_examples() {
        let c = classify_quotient(&quotient(&z2(), &Congruence::identity(2)).unwrap());
        assert!(c.is_monoid && c.is_commutative);
        assert_eq!(c.identity_class, Some(Congruence::identity(2).class_of(0)));

        let c = classify_quotient(&quotient(&lz2(), &Congruence::identity(2)).unwrap());
        assert!(!c.is_monoid);

        for s in [lz2(), rz2(), chain(3), lz2_monoid()] {
            let q = quotient(&s, &Congruence::universal(s.order())).unwrap();
            let c = classify_quotient(&q);
            assert!(c.is_commutative_monoid());
            assert_eq!(c.identity_class, Some(0));
        }
    }

    #[test]
    fn partitions_follow_bell_numbers() {
        let counts: Vec<_> = (0..=6).map(|n| set_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        let three: Vec<_> = set_partitions(3).collect();
        assert_eq!(
            three,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn enumerate_congruence_examples() {
        assert_eq!(enumerate_congruences(&z2()).unwrap().len(), 2);
        let got = enumerate_congruences(&chain(3)).unwrap();
        let want = vec![
            Congruence::universal(3),
            blocks(3, &[&[0, 1], &[2]]),
            blocks(3, &[&[0], &[1, 2]]),
            Congruence::identity(3),
        ];
        assert_eq!(got, want);
        assert!(got.iter().all(Congruence::is_verified));
        assert_eq!(enumerate_congruences(&trivial()).unwrap().len(), 1);
        assert_eq!(
            enumerate_congruences(&null(7)).unwrap_err(),
            Error::OrderTooLarge { order: 7, bound: 6 }
        );
    }

    #[test]
    fn refinement_and_saturation() {
        let fine = blocks(3, &[&[0], &[1, 2]]);
        assert!(Congruence::identity(3).refines(&fine));
        assert!(fine.refines(&Congruence::universal(3)));
        assert!(!Congruence::universal(3).refines(&fine));
        assert!(fine.saturates(&set(3, &[1, 2])));
        assert_eq!(fine.saturation_witness(&set(3, &[0, 1])), Some((1, 2)));
    }
}
