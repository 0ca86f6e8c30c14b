//! Exhaustive subgroup search over a multiplication table, for small groups.
//!
//! Independent of the Sylow and conjugate machinery: it enumerates every
//! π-subgroup by joining cyclic π-subgroups and tests nilpotency by counting
//! elements of prime-power order.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::invariants::{pi_part, pi_part_single, prime_divisors, PrimeSet};
use crate::perm::{PermGroup, Permutation};

/// Largest order the oracle accepts.
pub const ORACLE_MAX_ORDER: u64 = 2000;

pub struct SubgroupOracle {
    elements: Vec<Permutation>,
    table: Vec<u16>,
    orders: Vec<u64>,
    identity: usize,
}

impl SubgroupOracle {
    pub fn new(group: &PermGroup) -> Result<Self> {
        if group.order() > ORACLE_MAX_ORDER {
            return Err(GroupError::OrderExceedsCap(group.order()));
        }
        let elements = group.elements(ORACLE_MAX_ORDER)?;
        let index: HashMap<&Permutation, u16> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i as u16))
            .collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&(a * b)]);
            }
        }
        let orders = elements.iter().map(Permutation::order).collect();
        // The identity has the smallest image array.
        Ok(Self {
            identity: 0,
            elements,
            table,
            orders,
        })
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b] as usize
    }

    /// Subgroup generated by `gens`: the closure of the identity under right
    /// multiplication, which is a subgroup because the group is finite.
    fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        let identity = self.identity;
        set.insert(identity);
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
            head += 1;
        }
        set
    }

    /// Every subgroup whose order is a π-number, except the trivial one.
    ///
    /// Each such subgroup is reached by adding cyclic π-subgroups one at a
    /// time, and every intermediate join is itself a π-subgroup.
    pub fn pi_subgroups(&self, pi: &PrimeSet) -> Vec<FixedBitSet> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut cyclics: Vec<(FixedBitSet, usize)> = Vec::new();
        for g in 0..self.len() {
            if g != self.identity && pi.is_pi_number(self.orders[g]) {
                let c = self.closure(&[g]);
                if seen.insert(c.clone()) {
                    cyclics.push((c, g));
                }
            }
        }

        let mut found: Vec<(FixedBitSet, Vec<usize>)> =
            cyclics.iter().map(|(c, g)| (c.clone(), vec![*g])).collect();
        let mut head = 0;
        while head < found.len() {
            let (current, gens) = found[head].clone();
            for (c, g) in &cyclics {
                if c.is_subset(&current) {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(*g);
                let join = self.closure(&joined);
                if pi.is_pi_number(join.count_ones(..) as u64) && seen.insert(join.clone()) {
                    found.push((join, joined));
                }
            }
            head += 1;
        }
        found.into_iter().map(|(h, _)| h).collect()
    }

    /// All subgroups of order `|G|_π`.
    pub fn hall_subgroups(&self, pi: &PrimeSet) -> Vec<Vec<Permutation>> {
        let target = pi_part(self.len() as u64, pi) as usize;
        if target == 1 {
            return vec![vec![self.elements[self.identity].clone()]];
        }
        self.pi_subgroups(pi)
            .into_iter()
            .filter(|h| h.count_ones(..) == target)
            .map(|h| h.ones().map(|i| self.elements[i].clone()).collect())
            .collect()
    }

    /// Nilpotent iff for each prime `p` the `p`-elements number exactly `|H|_p`.
    fn is_nilpotent(&self, subgroup: &FixedBitSet) -> bool {
        let order = subgroup.count_ones(..) as u64;
        prime_divisors(order).into_iter().all(|p| {
            let p_elements = subgroup
                .ones()
                .filter(|&i| pi_part_single(self.orders[i], p) == self.orders[i])
                .count() as u64;
            p_elements == pi_part_single(order, p)
        })
    }

    pub fn has_nilpotent_hall(&self, pi: &PrimeSet) -> bool {
        let target = pi_part(self.len() as u64, pi) as usize;
        if target == 1 {
            return true;
        }
        self.pi_subgroups(pi)
            .iter()
            .any(|h| h.count_ones(..) == target && self.is_nilpotent(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(n, &[cycle]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn counts_subgroups_of_sym3() {
        let oracle = SubgroupOracle::new(&sym(3)).unwrap();
        let all = PrimeSet::new([2, 3]).unwrap();
        // three of order 2, one of order 3, the whole group
        assert_eq!(oracle.pi_subgroups(&all).len(), 5);
        assert_eq!(oracle.hall_subgroups(&PrimeSet::new([2]).unwrap()).len(), 3);
        assert!(!oracle.has_nilpotent_hall(&all));
        assert!(oracle.has_nilpotent_hall(&PrimeSet::new([3]).unwrap()));
    }

    #[test]
    fn counts_subgroups_of_sym4() {
        let oracle = SubgroupOracle::new(&sym(4)).unwrap();
        let all = PrimeSet::new([2, 3]).unwrap();
        assert_eq!(oracle.pi_subgroups(&all).len(), 29);
        assert_eq!(oracle.hall_subgroups(&PrimeSet::new([2]).unwrap()).len(), 3);
        assert_eq!(oracle.hall_subgroups(&PrimeSet::new([3]).unwrap()).len(), 4);
    }

    #[test]
    fn rejects_large_groups() {
        assert!(matches!(
            SubgroupOracle::new(&sym(7)),
            Err(GroupError::OrderExceedsCap(5040))
        ));
    }
}
