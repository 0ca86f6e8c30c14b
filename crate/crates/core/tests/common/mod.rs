//! Brute-force reference computations, independent of the stabilizer chain
//! and the class machinery.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use hallgroup::constructions::parse_group_expr;
use hallgroup::invariants::{ExactRatio, PrimeSet};
use hallgroup::{PermGroup, Permutation};

pub fn group(text: &str) -> PermGroup {
    parse_group_expr(text)
        .unwrap_or_else(|e| panic!("{text}: {e}"))
        .build()
        .unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn pi(primes: &[u64]) -> PrimeSet {
    PrimeSet::new(primes.iter().copied()).unwrap()
}

fn is_pi_number(mut n: u64, pi: &[u64]) -> bool {
    for &p in pi {
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    n == 1
}

fn pi_part(n: u64, pi: &[u64]) -> u64 {
    let mut part = 1;
    for &p in pi {
        let mut m = n;
        while m.is_multiple_of(p) {
            part *= p;
            m /= p;
        }
    }
    part
}

/// All elements, by breadth-first closure under right multiplication.
pub fn closure(group: &PermGroup) -> Vec<Permutation> {
    let id = Permutation::identity(group.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in group.generators() {
            let y = &x * s;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Classes as (size, element order), by conjugating with every element.
pub fn classes(elements: &[Permutation]) -> Vec<(u64, u64)> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        let class: HashSet<Permutation> = elements.iter().map(|g| x.conjugate_by(g)).collect();
        out.push((class.len() as u64, x.order()));
        seen.extend(class);
    }
    out
}

pub fn k_pi_of(classes: &[(u64, u64)], pi: &[u64]) -> u64 {
    classes.iter().filter(|(_, o)| is_pi_number(*o, pi)).count() as u64
}

pub fn d_pi_of(classes: &[(u64, u64)], order: u64, pi: &[u64]) -> ExactRatio {
    ExactRatio::new(k_pi_of(classes, pi), pi_part(order, pi))
}

/// `Pr(G)` as commuting pairs over `|G|²`.
pub fn commuting_pairs(elements: &[Permutation]) -> ExactRatio {
    let n = elements.len() as u64;
    let mut count = 0u64;
    for a in elements {
        for b in elements {
            if a.commutes_with(b) {
                count += 1;
            }
        }
    }
    ExactRatio::new(count, n * n)
}

/// `SL(2, q)` as 2×2 matrices `[a, b, c, d]` over `F_q`.
pub struct MatrixSl2 {
    q: u64,
    elements: Vec<[u64; 4]>,
}

impl MatrixSl2 {
    pub fn new(q: u64) -> Self {
        let mut elements = Vec::new();
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        if (a * d + q * q - b * c) % q == 1 {
                            elements.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        Self { q, elements }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    fn mul(&self, x: [u64; 4], y: [u64; 4]) -> [u64; 4] {
        let q = self.q;
        [
            (x[0] * y[0] + x[1] * y[2]) % q,
            (x[0] * y[1] + x[1] * y[3]) % q,
            (x[2] * y[0] + x[3] * y[2]) % q,
            (x[2] * y[1] + x[3] * y[3]) % q,
        ]
    }

    fn inverse(&self, x: [u64; 4]) -> [u64; 4] {
        let q = self.q;
        [x[3], (q - x[1]) % q, (q - x[2]) % q, x[0]]
    }

    fn element_order(&self, x: [u64; 4]) -> u64 {
        let id = [1, 0, 0, 1];
        let mut y = x;
        let mut n = 1;
        while y != id {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// Orders of class representatives.
    pub fn class_orders(&self) -> Vec<u64> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &x in &self.elements {
            if seen.contains(&x) {
                continue;
            }
            for &g in &self.elements {
                seen.insert(self.mul(self.mul(self.inverse(g), x), g));
            }
            out.push(self.element_order(x));
        }
        out
    }

    pub fn k_pi(&self, pi: &[u64]) -> u64 {
        self.class_orders()
            .into_iter()
            .filter(|&o| is_pi_number(o, pi))
            .count() as u64
    }
}
