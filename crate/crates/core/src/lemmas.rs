//! Instance checks for the three separator lemmas.

use crate::check::{CheckReport, Witness};
use crate::error::Result;
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::subset::{closure_witness, is_subsemigroup, separator, unitary_witness, Side};

/// `Sep(A)` is empty or a subsemigroup.
pub fn verify_lemma1(s: &FiniteSemigroup, a: &ElementSet) -> Result<CheckReport> {
    let mut r = CheckReport::new("lemma1");
    let sep = separator(s, a)?;
    if sep.is_empty() {
        return Ok(r.with_detail("separator is empty"));
    }
    let w = closure_witness(s, &sep)?;
    r.stage(
        "subsemigroup",
        w.is_none(),
        || w.map(|(x, y)| Witness::new([("a", x), ("b", y)])),
        || format!("Sep = {sep} is not closed"),
    );
    Ok(r.with_detail(format!("Sep = {sep}")))
}

/// A nonempty `Sep(A)` lies inside `A` or inside its complement.
pub fn verify_lemma2(s: &FiniteSemigroup, a: &ElementSet) -> Result<CheckReport> {
    let mut r = CheckReport::new("lemma2");
    let sep = separator(s, a)?;
    if sep.is_empty() {
        return Ok(r.unmet(None, "separator is empty"));
    }
    let inside = sep.intersection(a);
    let outside = sep.intersection(&a.complement());
    r.stage(
        "one-side",
        inside.is_empty() || outside.is_empty(),
        || {
            let x = inside.iter().next()?;
            let y = outside.iter().next()?;
            Some(Witness::new([("in", x), ("out", y)]))
        },
        || format!("Sep = {sep} meets both {a} and its complement"),
    );
    Ok(r.with_detail(format!("Sep = {sep}")))
}

/// A subsemigroup `A` is unitary exactly when `A = Sep(A)`.
pub fn verify_lemma3(s: &FiniteSemigroup, a: &ElementSet) -> Result<CheckReport> {
    let mut r = CheckReport::new("lemma3");
    if !is_subsemigroup(s, a)? {
        return Ok(r.unmet(None, format!("{a} is not a subsemigroup")));
    }
    let sep = separator(s, a)?;
    let unitary = unitary_witness(s, a, Side::Both)?;
    r.stage(
        "unitary-iff-fixed",
        unitary.is_none() == (sep == *a),
        || unitary.map(|(_, x, y)| Witness::new([("a", x), ("b", y)])),
        || format!("unitary = {}, Sep = {sep}", unitary.is_none()),
    );
    Ok(r.with_detail(format!("unitary = {}", unitary.is_none())))
}
