//! Instance checks for the commutative monoid congruence theorem and its
//! corollary on separators of medial subsets.

use crate::check::{CheckReport, Witness};
use crate::error::Result;
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::subset::{
    closure_witness, medial_witness, reflexive_witness, separator, separator_intersection,
    unitary_witness, Side,
};

use super::{classify_quotient, congruence_witness, p_partition, quotient, Congruence};

fn pair(a: usize, b: usize) -> Witness {
    Witness::new([("a", a), ("b", b)])
}

fn medial(x: usize, a: usize, b: usize, y: usize) -> Witness {
    Witness::new([("x", x), ("a", a), ("b", b), ("y", y)])
}

fn first_difference(left: &ElementSet, right: &ElementSet) -> Option<usize> {
    (0..left.ambient()).find(|&e| left.contains(e) != right.contains(e))
}

/// Stages shared by both forward checks: `P` of the family is a congruence,
/// its quotient is a monoid (and commutative), and `identity` is exactly the
/// identity class. Returns `P` when it is a congruence.
pub(crate) fn check_induced_monoid(
    r: &mut CheckReport,
    s: &FiniteSemigroup,
    family: &[ElementSet],
    identity: &ElementSet,
) -> Result<Option<Congruence>> {
    let p = p_partition(s, family)?;
    let incompatible = congruence_witness(s, &p)?;
    if !r.stage(
        "p-congruence",
        incompatible.is_none(),
        || incompatible.map(|(a, b, c)| Witness::new([("a", a), ("b", b), ("c", c)])),
        || "P is not compatible with multiplication".into(),
    ) {
        return Ok(None);
    }
    let q = quotient(s, &p)?;
    let class = classify_quotient(&q);
    r.stage(
        "quotient-monoid",
        class.is_monoid,
        || None,
        || "the quotient has no identity".into(),
    );
    let reps = p.representatives();
    r.stage(
        "quotient-commutative",
        class.is_commutative,
        || {
            q.semigroup()
                .commutativity_witness()
                .map(|(x, y)| pair(reps[x], reps[y]))
        },
        || "the quotient is not commutative".into(),
    );
    let anchor = identity.iter().next().expect("identity set is nonempty");
    let anchor_class = p.class_of(anchor);
    let class_set = p.class(anchor_class);
    r.stage(
        "identity-class",
        class_set == *identity && class.identity_class == Some(anchor_class),
        || first_difference(&class_set, identity).map(|e| pair(anchor, e)),
        || {
            format!(
                "separator intersection {identity} vs P-class {class_set} (quotient identity {:?})",
                class.identity_class
            )
        },
    );
    Ok(Some(p))
}

/// Checks a family of medial subsets with nonempty separator intersection
/// `A`: `P` must be a commutative monoid congruence whose identity class is
/// `A`, and every member of the family must be a union of `P`-classes.
pub fn verify_theorem1_forward(s: &FiniteSemigroup, family: &[ElementSet]) -> Result<CheckReport> {
    let mut r = CheckReport::new("theorem1-forward");
    for set in family {
        s.check_ambient(set)?;
    }
    for (i, set) in family.iter().enumerate() {
        if let Some((x, a, b, y)) = medial_witness(s, set)? {
            return Ok(r.unmet(
                Some(medial(x, a, b, y)),
                format!("A_{i} = {set} is not medial"),
            ));
        }
    }
    let identity = separator_intersection(s, family)?;
    if identity.is_empty() {
        return Ok(r.unmet(None, "the separators have empty intersection"));
    }
    let Some(p) = check_induced_monoid(&mut r, s, family, &identity)? else {
        return Ok(r);
    };
    for (i, set) in family.iter().enumerate() {
        let split = p.saturation_witness(set);
        let ok = r.stage(
            "union-of-classes",
            split.is_none(),
            || split.map(|(a, b)| Witness::new([("set", i), ("a", a), ("b", b)])),
            || format!("A_{i} = {set} splits a P-class"),
        );
        if !ok {
            break;
        }
    }
    Ok(r.with_detail(format!("identity class {identity}, P = {p}")))
}

/// Checks `σ` qualifies for a converse check and returns its identity class.
/// Non-congruences, non-monoid quotients, and (when `commutative`) non-commutative
/// quotients produce a precondition-unmet report instead.
pub(crate) fn converse_setup(
    check: &str,
    s: &FiniteSemigroup,
    sigma: &Congruence,
    commutative: bool,
) -> Result<std::result::Result<ElementSet, CheckReport>> {
    let r = CheckReport::new(check);
    if let Some((a, b, c)) = congruence_witness(s, sigma)? {
        return Ok(Err(r.unmet(
            Some(Witness::new([("a", a), ("b", b), ("c", c)])),
            format!("{sigma} is not a congruence"),
        )));
    }
    let class = classify_quotient(&quotient(s, sigma)?);
    let Some(identity_class) = class.identity_class else {
        return Ok(Err(r.unmet(None, "the quotient is not a monoid")));
    };
    if commutative && !class.is_commutative {
        return Ok(Err(r.unmet(None, "the quotient is not commutative")));
    }
    Ok(Ok(sigma.class(identity_class)))
}

/// With the family of all `σ`-classes: the separator intersection is the
/// identity class and `P` reproduces `σ`.
pub(crate) fn converse_stages(
    r: &mut CheckReport,
    s: &FiniteSemigroup,
    sigma: &Congruence,
    identity: &ElementSet,
) -> Result<()> {
    let classes = sigma.classes();
    let meet = separator_intersection(s, &classes)?;
    r.stage(
        "separator-intersection",
        meet == *identity,
        || first_difference(&meet, identity).map(|e| Witness::new([("e", e)])),
        || format!("intersection {meet} vs identity class {identity}"),
    );
    let p = p_partition(s, &classes)?;
    let n = s.order();
    r.stage(
        "p-equals-sigma",
        p == *sigma,
        || {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| p.related(a, b) != sigma.related(a, b))
                .map(|(a, b)| pair(a, b))
        },
        || format!("P = {p} but sigma = {sigma}"),
    );
    Ok(())
}

/// Checks that a commutative monoid congruence `σ` arises as `P` of its own
/// classes, whose separators meet in the identity class.
pub fn verify_theorem1_converse(s: &FiniteSemigroup, sigma: &Congruence) -> Result<CheckReport> {
    let identity = match converse_setup("theorem1-converse", s, sigma, true)? {
        Ok(identity) => identity,
        Err(unmet) => return Ok(unmet),
    };
    let mut r = CheckReport::new("theorem1-converse");
    for (i, class) in sigma.classes().iter().enumerate() {
        let w = medial_witness(s, class)?;
        if !r.stage(
            "classes-medial",
            w.is_none(),
            || w.map(|(x, a, b, y)| medial(x, a, b, y)),
            || format!("class {i} = {class} is not medial"),
        ) {
            break;
        }
    }
    converse_stages(&mut r, s, sigma, &identity)?;
    Ok(r.with_detail(format!("sigma = {sigma}, identity class {identity}")))
}

/// Stages for a nonempty separator: subsemigroup, reflexive, unitary on both
/// sides, and optionally `Sep(Sep(A)) = Sep(A)`.
pub(crate) fn check_separator_structure(
    r: &mut CheckReport,
    s: &FiniteSemigroup,
    sep: &ElementSet,
    idempotent: bool,
) -> Result<()> {
    let w = closure_witness(s, sep)?;
    r.stage(
        "subsemigroup",
        w.is_none(),
        || w.map(|(a, b)| pair(a, b)),
        || format!("{sep} is not closed"),
    );
    let w = reflexive_witness(s, sep)?;
    r.stage(
        "reflexive",
        w.is_none(),
        || w.map(|(a, b)| pair(a, b)),
        || format!("{sep} is not reflexive"),
    );
    let w = unitary_witness(s, sep, Side::Both)?;
    r.stage(
        "unitary",
        w.is_none(),
        || w.map(|(_, a, b)| pair(a, b)),
        || {
            format!(
                "{sep} is not {:?}-unitary",
                w.map(|(side, _, _)| side).unwrap()
            )
        },
    );
    if idempotent {
        let again = separator(s, sep)?;
        r.stage(
            "separator-idempotent",
            again == *sep,
            || first_difference(&again, sep).map(|e| Witness::new([("e", e)])),
            || format!("Sep(Sep(A)) = {again} but Sep(A) = {sep}"),
        );
    }
    Ok(())
}

/// For medial `A`: `Sep(A)` is empty or a reflexive unitary subsemigroup
/// with `Sep(Sep(A)) = Sep(A)`.
pub fn verify_corollary1(s: &FiniteSemigroup, a: &ElementSet) -> Result<CheckReport> {
    let mut r = CheckReport::new("corollary1");
    if let Some((x, aa, b, y)) = medial_witness(s, a)? {
        return Ok(r.unmet(Some(medial(x, aa, b, y)), format!("{a} is not medial")));
    }
    let sep = separator(s, a)?;
    if sep.is_empty() {
        return Ok(r.with_detail("separator is empty"));
    }
    check_separator_structure(&mut r, s, &sep, true)?;
    Ok(r.with_detail(format!("Sep = {sep}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;
    use crate::named::*;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn theorem1_forward_examples() {
        let r = verify_theorem1_forward(&z2(), &[set(2, &[0])]).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        assert!(r.detail.contains("identity class {0}"));

        let r = verify_theorem1_forward(&min2(), &[set(2, &[0])]).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        assert!(r.detail.contains("identity class {1}"));

        let r = verify_theorem1_forward(&lz2_monoid(), &[set(3, &[1])]).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
        assert_eq!(r.witness.unwrap().values(), vec![0, 1, 2, 0]);
    }

    #[test]
    fn theorem1_forward_empty_separator_is_unmet() {
        let r = verify_theorem1_forward(&lz2(), &[set(2, &[0])]).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
    }

    #[test]
    fn theorem1_converse_examples() {
        let r = verify_theorem1_converse(&z2(), &Congruence::identity(2)).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_theorem1_converse(&min2(), &Congruence::universal(2)).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_theorem1_converse(&lz2(), &Congruence::identity(2)).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
    }

    #[test]
    fn theorem1_converse_rejects_non_congruence() {
        let bad = Congruence::from_labels(&[0, 1, 0]);
        let r = verify_theorem1_converse(&chain(3), &bad).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
        assert_eq!(r.witness.unwrap().values(), vec![0, 2, 1]);
    }

    #[test]
    fn corollary1_examples() {
        let r = verify_corollary1(&z2(), &set(2, &[0])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_corollary1(&min2(), &set(2, &[0])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.detail, "Sep = {1}");
        let r = verify_corollary1(&lz2(), &set(2, &[0])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.detail, "separator is empty");
        let r = verify_corollary1(&lz2_monoid(), &set(3, &[1])).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
    }

    #[test]
    fn separator_structure_reports_failures() {
        // {0} in Z2 is fine, but the structure stages on {1} must all flag it.
        let mut r = CheckReport::new("probe");
        check_separator_structure(&mut r, &z2(), &set(2, &[1]), true).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.stages[0].name, "subsemigroup");
        assert!(!r.stages[0].passed);
    }
}
