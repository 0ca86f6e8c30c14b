use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Smallest prime dividing `n`, if `n > 1`.
pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

/// Smallest prime strictly larger than `p`.
pub fn next_prime(p: u64) -> u64 {
    let mut n = p + 1;
    while !is_prime(n) {
        n += 1;
    }
    n
}

/// Largest power of `p` dividing `n`.
pub fn pi_part_single(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if p < 2 || n == 0 {
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// A finite set of primes, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(GroupError::NotPrime(bad));
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(Self { primes })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The smallest member, written `p` throughout.
    pub fn min(&self) -> Option<u64> {
        self.primes.first().copied()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// Whether every prime factor of `n` lies in the set.
    pub fn is_pi_number(&self, n: u64) -> bool {
        pi_part(n, self) == n
    }

    /// Members not dividing `n`.
    pub fn not_dividing(&self, n: u64) -> Vec<u64> {
        self.primes
            .iter()
            .copied()
            .filter(|&p| !n.is_multiple_of(p))
            .collect()
    }

    /// The members dividing `n`.
    pub fn restricted_to_divisors_of(&self, n: u64) -> PrimeSet {
        Self {
            primes: self
                .primes
                .iter()
                .copied()
                .filter(|&p| n.is_multiple_of(p))
                .collect(),
        }
    }

    /// All subsets, ordered by size and then lexicographically.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        self.subsets_up_to(self.len())
    }

    /// Subsets of size at most `max` (the empty set included), ordered by
    /// size and then lexicographically.
    pub fn subsets_up_to(&self, max: usize) -> Vec<PrimeSet> {
        let n = self.primes.len();
        let mut out: Vec<PrimeSet> = (0u32..1 << n)
            .map(|mask| PrimeSet {
                primes: (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.primes[i])
                    .collect(),
            })
            .filter(|s| s.len() <= max)
            .collect();
        out.sort_by(|a, b| (a.len(), &a.primes).cmp(&(b.len(), &b.primes)));
        out
    }

    /// Two-element subsets in lexicographic order.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, &p) in self.primes.iter().enumerate() {
            for &q in &self.primes[i + 1..] {
                out.push((p, q));
            }
        }
        out
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = GroupError;

    fn try_from(primes: Vec<u64>) -> Result<Self> {
        Self::new(primes)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(set: PrimeSet) -> Self {
        set.primes
    }
}

/// `{3,5}` style; the empty set prints as `{}`.
impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Parses a comma-separated list such as `3,5,7`.
impl FromStr for PrimeSet {
    type Err = PrimeListError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut primes = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p: u64 = token
                .parse()
                .map_err(|_| PrimeListError(token.to_string()))?;
            if !is_prime(p) {
                return Err(PrimeListError(token.to_string()));
            }
            if primes.contains(&p) {
                return Err(PrimeListError(format!("{token} (repeated)")));
            }
            primes.push(p);
        }
        Ok(Self::new(primes).expect("checked above"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a prime: {0}")]
pub struct PrimeListError(pub String);

/// `n_π`: the largest π-number dividing `n`.
pub fn pi_part(n: u64, pi: &PrimeSet) -> u64 {
    pi.primes().iter().map(|&p| pi_part_single(n, p)).product()
}
