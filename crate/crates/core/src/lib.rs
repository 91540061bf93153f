//! Separators, medial subsets and commutative monoid congruences of finite
//! semigroups.
//!
//! A finite semigroup is a validated Cayley table ([`FiniteSemigroup`]).
//! For a subset `A`, the separator `Sep(A)` collects the elements that map
//! both `A` and its complement into themselves under left and right
//! multiplication. A family of subsets induces the congruence `P`
//! ([`p_congruence`]) relating `a` and `b` when `xay` and `xby` agree on
//! membership in every set of the family, for all `x, y` in the semigroup.
//!
//! The crate computes these objects, builds and classifies quotients, and
//! checks the structure theory around them instance by instance:
//!
//! * for medial families with nonempty separator intersection `A`, `P` is a
//!   commutative monoid congruence with identity class `A`, and every
//!   commutative monoid congruence arises this way
//!   ([`verify_theorem1_forward`], [`verify_theorem1_converse`]);
//! * in permutative semigroups the mediality assumption can be dropped and
//!   the same holds for all monoid congruences ([`verify_theorem2_forward`],
//!   [`verify_theorem2_converse`]);
//! * separators of medial subsets are empty or reflexive unitary
//!   subsemigroups ([`verify_corollary1`], [`verify_corollary2`]).
//!
//! [`sweep::run_sweep`] runs all of these over every labelled semigroup of
//! small order produced by [`catalog::enumerate_semigroups`].
//!
//! ```
//! use semilab::{named, p_congruence, quotient, separator, ElementSet};
//!
//! let s = named::min2();
//! let a = ElementSet::from_indices(2, [0]).unwrap();
//! assert_eq!(separator(&s, &a).unwrap().to_string(), "{1}");
//!
//! let p = p_congruence(&s, &[a]).unwrap();
//! let q = quotient(&s, &p).unwrap();
//! assert_eq!(q.semigroup().identity_element(), Some(p.class_of(1)));
//! ```

pub mod catalog;
pub mod check;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod lemmas;
pub mod named;
pub mod permutative;
pub mod semigroup;
pub mod subset;
pub mod sweep;
pub mod text;

pub use check::{CheckReport, Status, Witness};
pub use congruence::{
    classify_quotient, congruence_witness, enumerate_congruences, is_congruence, p_congruence,
    quotient, verify_corollary1, verify_theorem1_converse, verify_theorem1_forward, Congruence,
    QuotientClass, QuotientSemigroup,
};
pub use error::{Error, Result};
pub use permutative::{
    find_permutation_identity, lemma4_minimal_k, satisfies_identity, verify_corollary2,
    verify_lemma4, verify_theorem2_converse, verify_theorem2_forward, PermutationIdentity,
};
pub use semigroup::{ElementSet, FiniteSemigroup, PowerChain};
pub use subset::{
    idealizer, is_medial, is_reflexive, is_subsemigroup, is_unitary, separator, Side,
};
