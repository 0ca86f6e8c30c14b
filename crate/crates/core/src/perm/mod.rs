//! Permutations and permutation groups given by generators.

mod chain;
mod permutation;

use std::fmt;
use std::sync::Arc;

use crate::error::{GroupError, Result};
use chain::StabChain;

pub use permutation::Permutation;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 10_000;

/// Default bound on the number of elements any enumeration may produce.
pub const DEFAULT_CAP: u64 = 2_000_000;

/// A permutation group with its stabilizer chain.
///
/// The chain is built once at construction; afterwards the group is
/// immutable and cheap to clone.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl PermGroup {
    /// The group generated by `generators` on `degree` points. An empty
    /// generator list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidParameters(
                "degree must be positive".into(),
            ));
        }
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut generators = generators;
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        let chain = StabChain::build(degree, &generators)?;
        Ok(Self {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                chain,
            }),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.inner.generators.iter().filter(|g| !g.is_identity())
    }

    /// Exact order: the product of the fundamental orbit lengths.
    pub fn order(&self) -> u64 {
        self.inner.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.inner
            .chain
            .levels
            .iter()
            .map(|l| l.orbit.len())
            .collect()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(self.inner.chain.contains(g))
    }

    /// Membership for an element already known to have the right degree.
    pub(crate) fn has(&self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree());
        self.inner.chain.contains(g)
    }

    /// All elements, each exactly once, sorted lexicographically by image array.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::OrderExceedsCap(order));
        }
        let chain = &self.inner.chain;
        let mut elements = vec![Permutation::identity(chain.degree())];
        for level in chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.transversal.len());
            for x in &elements {
                for t in &level.transversal {
                    next.push(x.then(t));
                }
            }
            elements = next;
        }
        elements.sort_unstable();
        Ok(elements)
    }

    /// The element selected by one transversal index per level; used to draw
    /// uniformly random elements from an external index source.
    pub fn element_from_indices(&self, mut pick: impl FnMut(usize) -> usize) -> Permutation {
        let mut g = Permutation::identity(self.degree());
        for level in self.inner.chain.levels.iter().rev() {
            let k = pick(level.transversal.len()) % level.transversal.len();
            g = g.then(&level.transversal[k]);
        }
        g
    }

    /// Whether every generator commutes with every other.
    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Whether `self ≤ other` (both on the same points).
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.has(g))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    /// Breadth-first closure of the generators; independent of the chain.
    fn closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let id = Permutation::identity(degree);
        let mut seen = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    fn sym(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&c])]).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(sym(4).order(), 24);
        assert_eq!(sym(6).order(), 720);
        assert_eq!(sym(9).order(), 362_880);
    }

    #[test]
    fn alternating_five_has_order_sixty() {
        let g =
            PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn base_is_ascending() {
        let g = PermGroup::new(6, vec![cyc(6, &[&[5, 2]]), cyc(6, &[&[1, 3, 5]])]).unwrap();
        let base = g.base();
        assert!(base.windows(2).all(|w| w[0] < w[1]));
        let product: u64 = g.orbit_lengths().iter().map(|&l| l as u64).product();
        assert_eq!(product, g.order());
    }

    #[test]
    fn membership_in_alternating_four() {
        let a4 = PermGroup::new(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.contains(&cyc(4, &[&[0, 1, 2]])).unwrap());
        assert!(!a4.contains(&cyc(4, &[&[0, 1]])).unwrap());
        assert!(a4.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn elements_are_distinct_and_members() {
        let s4 = sym(4);
        let elements = s4.elements(DEFAULT_CAP).unwrap();
        assert_eq!(elements.len(), 24);
        let set: HashSet<_> = elements.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        assert!(elements.iter().all(|g| s4.contains(g).unwrap()));
        assert!(elements.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s4.elements(10), Err(GroupError::OrderExceedsCap(24)));
    }

    #[test]
    fn cyclic_six_elements() {
        let c6 = PermGroup::new(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(c6.elements(DEFAULT_CAP).unwrap().len(), 6);
    }

    #[test]
    fn chain_order_matches_closure() {
        let cases: Vec<(usize, Vec<Permutation>)> = vec![
            (5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[2, 3, 4]])]),
            (
                6,
                vec![cyc(6, &[&[0, 1], &[2, 3]]), cyc(6, &[&[1, 2, 4, 5]])],
            ),
            (
                7,
                vec![
                    cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]]),
                    cyc(7, &[&[1, 2, 4], &[3, 6, 5]]),
                ],
            ),
            (
                8,
                vec![
                    cyc(8, &[&[0, 1, 2, 3]]),
                    cyc(8, &[&[4, 5]]),
                    cyc(8, &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]),
                ],
            ),
        ];
        for (n, gens) in cases {
            let g = PermGroup::new(n, gens.clone()).unwrap();
            let closed = closure(n, &gens);
            assert_eq!(g.order(), closed.len() as u64);
            assert!(closed.iter().all(|x| g.contains(x).unwrap()));
        }
    }

    #[test]
    fn trivial_group() {
        let t = PermGroup::trivial(3).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.elements(1).unwrap(), vec![Permutation::identity(3)]);
        assert!(t.base().is_empty());
    }
}
