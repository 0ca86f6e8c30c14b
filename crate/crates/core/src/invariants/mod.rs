//! π-parts and the exact scalar invariants built from conjugacy classes.
//!
//! Nothing here uses floating point: every invariant is an [`ExactRatio`]
//! and every comparison is exact.

mod primes;
mod ratio;

pub use primes::{
    factorize, is_prime, next_prime, pi_part, pi_part_single, prime_divisors,
    smallest_prime_divisor, PrimeListError, PrimeSet,
};
pub use ratio::{ExactRatio, RatioParseError};

use crate::error::{GroupError, Result};
use crate::perm::PermGroup;
use crate::structure::{conjugacy_classes, ConjClass};

/// Number of classes whose elements have π-number order. The identity class
/// always counts.
pub fn k_pi_from_classes(classes: &[ConjClass], pi: &PrimeSet) -> u64 {
    classes
        .iter()
        .filter(|c| pi.is_pi_number(c.order_of_rep))
        .count() as u64
}

/// `k_π(G) / |G|_π`.
pub fn d_pi_from_classes(classes: &[ConjClass], group_order: u64, pi: &PrimeSet) -> ExactRatio {
    ExactRatio::new(k_pi_from_classes(classes, pi), pi_part(group_order, pi))
}

/// `k(G) / |G|`.
pub fn commuting_probability_from_classes(classes: &[ConjClass], group_order: u64) -> ExactRatio {
    ExactRatio::new(classes.len() as u64, group_order)
}

/// Number of conjugacy classes of π-elements.
pub fn k_pi(group: &PermGroup, pi: &PrimeSet) -> Result<u64> {
    Ok(k_pi_from_classes(&conjugacy_classes(group)?, pi))
}

pub fn d_pi(group: &PermGroup, pi: &PrimeSet) -> Result<ExactRatio> {
    Ok(d_pi_from_classes(
        &conjugacy_classes(group)?,
        group.order(),
        pi,
    ))
}

/// Probability that two uniformly chosen elements commute.
pub fn commuting_probability(group: &PermGroup) -> Result<ExactRatio> {
    Ok(commuting_probability_from_classes(
        &conjugacy_classes(group)?,
        group.order(),
    ))
}

/// `(1 + (p² − 1)/x) / p²`, decreasing in `x`.
pub fn g_p(p: u64, x: u64) -> ExactRatio {
    assert!(x >= 1, "g_p is defined for x >= 1");
    let p2 = ExactRatio::integer(p * p);
    let inner = ExactRatio::one() + ExactRatio::new(p * p - 1, x);
    inner / p2
}

/// `(n + p² − 1) / (p² n)` with `n` the next prime after `p`; equals `g_p(n)`.
pub fn f_p(p: u64) -> ExactRatio {
    let n = next_prime(p);
    ExactRatio::new(n + p * p - 1, p * p * n)
}

/// The main-theorem thresholds for smallest prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// `1/p`; above it a nilpotent Hall π-subgroup exists.
    pub nilpotent: ExactRatio,
    /// `(p² + p − 1)/p³`; above it an abelian Hall π-subgroup exists.
    pub abelian: ExactRatio,
}

pub fn thresholds(p: u64) -> Thresholds {
    Thresholds {
        nilpotent: ExactRatio::new(1, p),
        abelian: ExactRatio::new(p * p + p - 1, p * p * p),
    }
}

/// Number of classes of π-elements of `SL(2, q)` from its two maximal tori:
/// `((q − 1)_π + (q + 1)_π) / 2`, for odd π not containing `q`.
pub fn k_pi_sl2_torus(q: u64, pi: &PrimeSet) -> Result<ExactRatio> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    if pi.contains(q) {
        return Err(GroupError::DefiningCharacteristicInPi(q));
    }
    if pi.contains(2) {
        return Err(GroupError::EvenPrimeInPi);
    }
    Ok(ExactRatio::new(pi_part(q - 1, pi) + pi_part(q + 1, pi), 2))
}
