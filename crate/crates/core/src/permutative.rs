//! Permutation identities, the stabilizing power `S^k` on which adjacent
//! factors commute, and the monoid congruence checks for permutative
//! semigroups.

use std::fmt;

use crate::check::{CheckReport, Witness};
use crate::congruence::{
    check_induced_monoid, check_separator_structure, converse_setup, converse_stages, Congruence,
};
use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, FiniteSemigroup, PowerChain};
use crate::subset::{medial_witness, separator, separator_intersection};

/// A non-trivial identity `x_1 x_2 .. x_n = x_p(1) x_p(2) .. x_p(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationIdentity {
    // zero-based images
    images: Vec<usize>,
}

impl PermutationIdentity {
    /// From one-based images, so `[1, 3, 2]` is `x1 x2 x3 = x1 x3 x2`.
    pub fn new(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        if n < 2 {
            return Err(Error::InvalidPermutation(format!("length {n} is below 2")));
        }
        let mut seen = vec![false; n];
        for &p in one_based {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_based:?} is not a bijection of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        let images: Vec<usize> = one_based.iter().map(|p| p - 1).collect();
        if images.iter().enumerate().all(|(i, &p)| i == p) {
            return Err(Error::InvalidPermutation("identity permutation".into()));
        }
        Ok(PermutationIdentity { images })
    }

    pub fn length(&self) -> usize {
        self.images.len()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for PermutationIdentity {
    /// `n=3 perm 1 3 2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} perm", self.length())?;
        for p in self.one_based() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// First tuple, in lexicographic order, on which the two sides of the
/// identity differ.
pub fn identity_witness(s: &FiniteSemigroup, id: &PermutationIdentity) -> Option<Vec<usize>> {
    let n = id.length();
    let order = s.order();
    let mut tuple = vec![0; n];
    let mut permuted = vec![0; n];
    loop {
        for (slot, &p) in permuted.iter_mut().zip(&id.images) {
            *slot = tuple[p];
        }
        if s.fold(&tuple) != s.fold(&permuted) {
            return Some(tuple);
        }
        // odometer step, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < order {
                break;
            }
            tuple[i] = 0;
        }
    }
}

pub fn satisfies_identity(s: &FiniteSemigroup, id: &PermutationIdentity) -> bool {
    identity_witness(s, id).is_none()
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Searches `n = 2..=n_max`, and for each `n` the non-identity permutations
/// in lexicographic order. `None` only means no identity exists up to the bound.
pub fn find_permutation_identity(s: &FiniteSemigroup, n_max: usize) -> Option<PermutationIdentity> {
    for n in 2..=n_max {
        let mut perm: Vec<usize> = (0..n).collect();
        while next_permutation(&mut perm) {
            let id = PermutationIdentity {
                images: perm.clone(),
            };
            if satisfies_identity(s, &id) {
                return Some(id);
            }
        }
    }
    None
}

/// A quadruple `(u, x, y, v)` with `u, v ∈ S^k` and `uxyv ≠ uyxv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma4Counterexample {
    pub k: usize,
    pub u: usize,
    pub x: usize,
    pub y: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma4Outcome {
    /// Least `k` with `uxyv = uyxv` for all `u, v ∈ S^k`, `x, y ∈ S`.
    pub minimal_k: Option<usize>,
    pub chain: PowerChain,
    /// First counterexample for every `k` tested without success.
    pub counterexamples: Vec<Lemma4Counterexample>,
}

fn swap_witness(s: &FiniteSemigroup, power: &ElementSet) -> Option<(usize, usize, usize, usize)> {
    for u in power.iter() {
        for x in s.elements() {
            for y in s.elements() {
                let uxy = s.mul(s.mul(u, x), y);
                let uyx = s.mul(s.mul(u, y), x);
                if uxy == uyx {
                    continue;
                }
                if let Some(v) = power.iter().find(|&v| s.mul(uxy, v) != s.mul(uyx, v)) {
                    return Some((u, x, y, v));
                }
            }
        }
    }
    None
}

/// Walks `k` along the power chain. `S^k` only shrinks as `k` grows and the
/// condition depends on `S^k` alone, so once the chain repeats no larger `k`
/// can succeed.
pub fn lemma4_minimal_k(s: &FiniteSemigroup) -> Lemma4Outcome {
    let chain = s.power_set_chain();
    let mut counterexamples = Vec::new();
    let mut minimal_k = None;
    for (idx, power) in chain.sets.iter().enumerate() {
        let k = idx + 1;
        match swap_witness(s, power) {
            None => {
                minimal_k = Some(k);
                break;
            }
            Some((u, x, y, v)) => counterexamples.push(Lemma4Counterexample { k, u, x, y, v }),
        }
    }
    Lemma4Outcome {
        minimal_k,
        chain,
        counterexamples,
    }
}

/// `S^k` computed by multiplying out every `k`-tuple.
fn power_by_tuples(s: &FiniteSemigroup, k: usize) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    let mut tuple = vec![0; k];
    loop {
        out.insert(s.fold(&tuple));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < s.order() {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn scan_quadruples(s: &FiniteSemigroup, k: usize) -> Option<Witness> {
    let power = power_by_tuples(s, k);
    let n = s.order();
    for u in power.iter() {
        for v in power.iter() {
            for x in 0..n {
                for y in 0..n {
                    if s.fold(&[u, x, y, v]) != s.fold(&[u, y, x, v]) {
                        return Some(Witness::new([("u", u), ("x", x), ("y", y), ("v", v)]));
                    }
                }
            }
        }
    }
    None
}

fn identity_unmet(
    r: CheckReport,
    s: &FiniteSemigroup,
    id: &PermutationIdentity,
) -> Option<CheckReport> {
    identity_witness(s, id).map(|t| {
        let names: Vec<String> = (1..=t.len()).map(|i| format!("x{i}")).collect();
        let w = Witness(names.into_iter().zip(t).collect());
        r.unmet(Some(w), format!("identity {id} does not hold"))
    })
}

/// For a witnessed permutative semigroup: the least `k` exists, holds when
/// `S^k` is rebuilt from `k`-tuples and scanned directly, and fails at `k - 1`.
pub fn verify_lemma4(s: &FiniteSemigroup, witness: &PermutationIdentity) -> CheckReport {
    let mut r = CheckReport::new("lemma4");
    if let Some(unmet) = identity_unmet(r.clone(), s, witness) {
        return unmet;
    }
    let outcome = lemma4_minimal_k(s);
    let Some(k) = outcome.minimal_k else {
        let c = outcome.counterexamples.last().copied();
        r.stage(
            "k-exists",
            false,
            || {
                c.map(|c| {
                    Witness::new([("k", c.k), ("u", c.u), ("x", c.x), ("y", c.y), ("v", c.v)])
                })
            },
            || "no k along the power chain".into(),
        );
        return r;
    };
    let w = scan_quadruples(s, k);
    r.stage(
        "direct-scan",
        w.is_none(),
        || w,
        || format!("k={k} fails a direct scan"),
    );
    if k > 1 {
        let below = scan_quadruples(s, k - 1);
        r.stage(
            "minimal",
            below.is_some(),
            || None,
            || format!("k={} already works", k - 1),
        );
    }
    r.with_detail(format!("k={k}"))
}

/// For a permutative semigroup and a family with nonempty separator
/// intersection `A`: every member is medial, and `P` is a (commutative) monoid
/// congruence with identity class `A`.
pub fn verify_theorem2_forward(
    s: &FiniteSemigroup,
    family: &[ElementSet],
    witness: &PermutationIdentity,
) -> Result<CheckReport> {
    let mut r = CheckReport::new("theorem2-forward");
    for set in family {
        s.check_ambient(set)?;
    }
    if let Some(unmet) = identity_unmet(r.clone(), s, witness) {
        return Ok(unmet);
    }
    let identity = separator_intersection(s, family)?;
    if identity.is_empty() {
        return Ok(r.unmet(None, "the separators have empty intersection"));
    }
    for (i, set) in family.iter().enumerate() {
        let w = medial_witness(s, set)?;
        let ok = r.stage(
            "medial",
            w.is_none(),
            || {
                w.map(|(x, a, b, y)| {
                    Witness::new([("set", i), ("x", x), ("a", a), ("b", b), ("y", y)])
                })
            },
            || format!("A_{i} = {set} has a nonempty separator but is not medial"),
        );
        if !ok {
            break;
        }
    }
    let p = check_induced_monoid(&mut r, s, family, &identity)?;
    let p = p.map(|p| p.to_string()).unwrap_or_default();
    Ok(r.with_detail(format!("identity class {identity}, P = {p}")))
}

/// Every monoid congruence `σ` of a permutative semigroup is `P` of its own
/// classes. The quotient, a permutative monoid, is also checked to be commutative.
pub fn verify_theorem2_converse(
    s: &FiniteSemigroup,
    sigma: &Congruence,
    witness: &PermutationIdentity,
) -> Result<CheckReport> {
    let mut r = CheckReport::new("theorem2-converse");
    if let Some(unmet) = identity_unmet(r.clone(), s, witness) {
        return Ok(unmet);
    }
    let identity = match converse_setup("theorem2-converse", s, sigma, false)? {
        Ok(identity) => identity,
        Err(unmet) => return Ok(unmet),
    };
    let q = crate::congruence::quotient(s, sigma)?;
    let reps = sigma.representatives();
    let w = q.semigroup().commutativity_witness();
    r.stage(
        "quotient-commutative",
        w.is_none(),
        || w.map(|(a, b)| Witness::new([("a", reps[a]), ("b", reps[b])])),
        || "permutative monoid quotient is not commutative".into(),
    );
    converse_stages(&mut r, s, sigma, &identity)?;
    Ok(r.with_detail(format!("sigma = {sigma}, identity class {identity}")))
}

/// In a permutative semigroup `Sep(A)` is empty or a reflexive unitary
/// subsemigroup, with no mediality assumption on `A`.
pub fn verify_corollary2(
    s: &FiniteSemigroup,
    a: &ElementSet,
    witness: &PermutationIdentity,
) -> Result<CheckReport> {
    let mut r = CheckReport::new("corollary2");
    s.check_ambient(a)?;
    if let Some(unmet) = identity_unmet(r.clone(), s, witness) {
        return Ok(unmet);
    }
    let sep = separator(s, a)?;
    if sep.is_empty() {
        return Ok(r.with_detail("separator is empty"));
    }
    check_separator_structure(&mut r, s, &sep, false)?;
    Ok(r.with_detail(format!("Sep = {sep}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;
    use crate::named::*;

    fn perm(p: &[usize]) -> PermutationIdentity {
        PermutationIdentity::new(p).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(PermutationIdentity::new(&[1]).is_err());
        assert!(PermutationIdentity::new(&[1, 2, 3]).is_err());
        assert!(PermutationIdentity::new(&[1, 1, 2]).is_err());
        assert!(PermutationIdentity::new(&[0, 1]).is_err());
        assert_eq!(perm(&[1, 3, 2]).to_string(), "n=3 perm 1 3 2");
    }

    #[test]
    fn next_permutation_is_lexicographic() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }

    #[test]
    fn satisfies_identity_examples() {
        assert!(satisfies_identity(&lz2(), &perm(&[1, 3, 2])));
        assert_eq!(identity_witness(&lz2(), &perm(&[2, 1])), Some(vec![0, 1]));
        assert!(satisfies_identity(&min2(), &perm(&[2, 1])));
    }

    #[test]
    fn find_permutation_identity_examples() {
        assert_eq!(find_permutation_identity(&z2(), 2), Some(perm(&[2, 1])));
        assert_eq!(find_permutation_identity(&lz2(), 3), Some(perm(&[1, 3, 2])));
        assert_eq!(find_permutation_identity(&lz2(), 2), None);
        assert_eq!(find_permutation_identity(&lz2_monoid(), 4), None);
        assert_eq!(find_permutation_identity(&rz2(), 3), Some(perm(&[2, 1, 3])));
    }

    #[test]
    fn lemma4_examples() {
        assert_eq!(lemma4_minimal_k(&lz2()).minimal_k, Some(1));
        assert_eq!(lemma4_minimal_k(&z2()).minimal_k, Some(1));
        let out = lemma4_minimal_k(&lz2_monoid());
        assert_eq!(out.minimal_k, None);
        assert_eq!(
            out.counterexamples,
            vec![Lemma4Counterexample {
                k: 1,
                u: 0,
                x: 1,
                y: 2,
                v: 0
            }]
        );
    }

    #[test]
    fn power_by_tuples_matches_chain() {
        for s in [null(3), lz2_monoid(), chain(3)] {
            let chain = s.power_set_chain();
            for k in 1..=4 {
                assert_eq!(&power_by_tuples(&s, k), chain.power(k));
            }
        }
    }

    #[test]
    fn lemma4_report() {
        let r = verify_lemma4(&lz2(), &perm(&[1, 3, 2]));
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.detail, "k=1");
        let r = verify_lemma4(&lz2_monoid(), &perm(&[2, 1]));
        assert_eq!(r.status, Status::PreconditionUnmet);
    }

    #[test]
    fn theorem2_forward_examples() {
        let r = verify_theorem2_forward(&lz2(), &[lz2().full_set()], &perm(&[1, 3, 2])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r =
            verify_theorem2_forward(&rz2(), &[ElementSet::empty(2)], &perm(&[2, 1, 3])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        for claimed in [perm(&[2, 1]), perm(&[1, 3, 2]), perm(&[2, 1, 3])] {
            let r = verify_theorem2_forward(&lz2_monoid(), &[set(3, &[0])], &claimed).unwrap();
            assert_eq!(r.status, Status::PreconditionUnmet);
        }
    }

    #[test]
    fn theorem2_converse_examples() {
        let r =
            verify_theorem2_converse(&lz2(), &Congruence::universal(2), &perm(&[1, 3, 2])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_theorem2_converse(&z2(), &Congruence::identity(2), &perm(&[2, 1])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r =
            verify_theorem2_converse(&lz2(), &Congruence::identity(2), &perm(&[1, 3, 2])).unwrap();
        assert_eq!(r.status, Status::PreconditionUnmet);
    }

    #[test]
    fn corollary2_examples() {
        let r = verify_corollary2(&lz2(), &set(2, &[0]), &perm(&[1, 3, 2])).unwrap();
        assert_eq!(
            (r.status, r.detail.as_str()),
            (Status::Pass, "separator is empty")
        );
        let r = verify_corollary2(&rz2(), &rz2().full_set(), &perm(&[2, 1, 3])).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_corollary2(&z2(), &set(2, &[1]), &perm(&[2, 1])).unwrap();
        assert_eq!((r.status, r.detail.as_str()), (Status::Pass, "Sep = {0}"));
    }
}
