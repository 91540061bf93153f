//! Idealizers, separators and the subset predicates built on them.
//!
//! Every predicate comes in two flavours: a `*_witness` function returning
//! the lexicographically first violating tuple (or `None`), and an `is_*`
//! shorthand. Tuples are compared in ascending element order, so witnesses
//! are reproducible.

use crate::error::Result;
use crate::semigroup::{ElementSet, FiniteSemigroup};

/// Which side(s) of the unitary condition to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `a, ab in U` implies `b in U`.
    Left,
    /// `a, ba in U` implies `b in U`.
    Right,
    Both,
}

fn stabilizes(s: &FiniteSemigroup, x: usize, set: &ElementSet) -> bool {
    set.iter()
        .all(|a| set.contains(s.mul(x, a)) && set.contains(s.mul(a, x)))
}

/// `Id(A) = { x : xA ⊆ A and Ax ⊆ A }`. The idealizer of the empty set is `S`.
pub fn idealizer(s: &FiniteSemigroup, a: &ElementSet) -> Result<ElementSet> {
    s.check_ambient(a)?;
    ElementSet::from_indices(s.order(), s.elements().filter(|&x| stabilizes(s, x, a)))
}

/// `Sep(A) = Id(A) ∩ Id(complement of A)`: elements that stabilize both `A`
/// and its complement from either side.
pub fn separator(s: &FiniteSemigroup, a: &ElementSet) -> Result<ElementSet> {
    s.check_ambient(a)?;
    let abar = a.complement();
    ElementSet::from_indices(
        s.order(),
        s.elements()
            .filter(|&x| stabilizes(s, x, a) && stabilizes(s, x, &abar)),
    )
}

/// Intersection of the separators of a family; the empty family gives `S`.
pub fn separator_intersection(s: &FiniteSemigroup, family: &[ElementSet]) -> Result<ElementSet> {
    family.iter().try_fold(s.full_set(), |acc, a| {
        Ok(acc.intersection(&separator(s, a)?))
    })
}

/// First `(x, a, b, y)` where exactly one of `xaby`, `xbay` lies in `A`.
///
/// Mediality is stated as a biconditional; the one-way form
/// "`xaby ∈ A` implies `xbay ∈ A`" is equivalent since `a` and `b` range
/// over the same set.
pub fn medial_witness(
    s: &FiniteSemigroup,
    a_set: &ElementSet,
) -> Result<Option<(usize, usize, usize, usize)>> {
    s.check_ambient(a_set)?;
    let n = s.order();
    for x in 0..n {
        for a in 0..n {
            let xa = s.mul(x, a);
            for b in 0..n {
                let xab = s.mul(xa, b);
                let xba = s.mul(s.mul(x, b), a);
                for y in 0..n {
                    if a_set.contains(s.mul(xab, y)) != a_set.contains(s.mul(xba, y)) {
                        return Ok(Some((x, a, b, y)));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_medial(s: &FiniteSemigroup, a: &ElementSet) -> Result<bool> {
    Ok(medial_witness(s, a)?.is_none())
}

/// First `(a, b)` with `ab ∈ A` but `ba ∉ A`.
pub fn reflexive_witness(s: &FiniteSemigroup, set: &ElementSet) -> Result<Option<(usize, usize)>> {
    s.check_ambient(set)?;
    Ok(pairs(s.order()).find(|&(a, b)| set.contains(s.mul(a, b)) && !set.contains(s.mul(b, a))))
}

pub fn is_reflexive(s: &FiniteSemigroup, set: &ElementSet) -> Result<bool> {
    Ok(reflexive_witness(s, set)?.is_none())
}

/// First `(a, b)` breaking the unitary condition on the requested side.
///
/// For [`Side::Both`] the left condition is scanned first.
pub fn unitary_witness(
    s: &FiniteSemigroup,
    u: &ElementSet,
    side: Side,
) -> Result<Option<(Side, usize, usize)>> {
    s.check_ambient(u)?;
    let scan = |side: Side| {
        pairs(s.order())
            .find(|&(a, b)| {
                let prod = match side {
                    Side::Left => s.mul(a, b),
                    _ => s.mul(b, a),
                };
                u.contains(a) && u.contains(prod) && !u.contains(b)
            })
            .map(|(a, b)| (side, a, b))
    };
    Ok(match side {
        Side::Both => scan(Side::Left).or_else(|| scan(Side::Right)),
        one => scan(one),
    })
}

pub fn is_unitary(s: &FiniteSemigroup, u: &ElementSet, side: Side) -> Result<bool> {
    Ok(unitary_witness(s, u, side)?.is_none())
}

/// First `(a, b)` in `A × A` with `ab ∉ A`. The empty set has no witness but
/// is not a subsemigroup; see [`is_subsemigroup`].
pub fn closure_witness(s: &FiniteSemigroup, set: &ElementSet) -> Result<Option<(usize, usize)>> {
    s.check_ambient(set)?;
    Ok(pairs(s.order())
        .find(|&(a, b)| set.contains(a) && set.contains(b) && !set.contains(s.mul(a, b))))
}

/// Nonempty and closed under multiplication.
pub fn is_subsemigroup(s: &FiniteSemigroup, set: &ElementSet) -> Result<bool> {
    Ok(!set.is_empty() && closure_witness(s, set)?.is_none())
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}
