//! Small named semigroups used throughout the docs, examples and tests.

use crate::semigroup::FiniteSemigroup;

fn build(order: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let table = (0..order * order)
        .map(|i| f(i / order, i % order))
        .collect();
    FiniteSemigroup::from_flat(order, table, None).expect("named table is a semigroup")
}

/// The one-element semigroup.
pub fn trivial() -> FiniteSemigroup {
    build(1, |_, _| 0)
}

/// `{0, 1}` under `min`; 1 is the identity.
pub fn min2() -> FiniteSemigroup {
    chain(2)
}

/// `{0, .., n-1}` under `min`.
pub fn chain(n: usize) -> FiniteSemigroup {
    build(n, usize::min)
}

/// The integers modulo 2 under addition.
pub fn z2() -> FiniteSemigroup {
    cyclic_group(2)
}

pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    build(n, |a, b| (a + b) % n)
}

/// Left-zero semigroup of order 2: `xy = x`.
pub fn lz2() -> FiniteSemigroup {
    build(2, |a, _| a)
}

/// Right-zero semigroup of order 2: `xy = y`.
pub fn rz2() -> FiniteSemigroup {
    build(2, |_, b| b)
}

/// The left-zero semigroup `{1, 2}` with an identity 0 adjoined.
pub fn lz2_monoid() -> FiniteSemigroup {
    build(3, |a, b| if a == 0 { b } else { a })
}

/// Null semigroup of order `n`: every product is 0.
pub fn null(n: usize) -> FiniteSemigroup {
    build(n, |_, _| 0)
}
