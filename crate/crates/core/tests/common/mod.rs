//! Strategies shared by the property tests and the acceptance harness.

#![allow(dead_code)]

use proptest::prelude::*;

use symquot::{CohomClass, GenusContext, Letter, Permutation};

pub fn letter(genus: u32) -> impl Strategy<Value = Letter> {
    let h1 = 2 * genus as u16;
    if h1 == 0 {
        prop_oneof![Just(Letter::Unit), Just(Letter::Omega)].boxed()
    } else {
        prop_oneof![
            Just(Letter::Unit),
            (1..=h1).prop_map(Letter::Alpha),
            Just(Letter::Omega)
        ]
        .boxed()
    }
}

pub fn monomial(genus: u32, n: usize) -> impl Strategy<Value = CohomClass> {
    (prop::collection::vec(letter(genus), n), -3i64..=3)
        .prop_map(move |(letters, c)| CohomClass::monomial(GenusContext::new(genus), letters, c).unwrap())
}

pub fn class(genus: u32, n: usize) -> impl Strategy<Value = CohomClass> {
    prop::collection::vec(monomial(genus, n), 0..4)
        .prop_map(move |ms| CohomClass::sum(GenusContext::new(genus), n, &ms).unwrap())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

pub fn shape() -> impl Strategy<Value = (u32, usize)> {
    (0u32..=3, 1usize..=4)
}

/// `[q^d] (1 − q)^m` for any integer `m`.
pub fn coefficient_of_power(m: i64, d: usize) -> i128 {
    // (−1)^d · C(m, d) with the generalised binomial coefficient.
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..d as i128 {
        num *= m as i128 - i;
        den *= i + 1;
    }
    let c = num / den;
    if d.is_multiple_of(2) {
        c
    } else {
        -c
    }
}
