use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use crate::error::Result;
use crate::invariants::{
    commuting_probability_from_classes, d_pi_from_classes, k_pi_from_classes, prime_divisors,
    ExactRatio, PrimeSet,
};
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP, MAX_DEGREE};
use crate::structure::hall::assemble_nilpotent_hall;
use crate::structure::{
    center, centralizer_of_subgroup, conjugacy_classes, derived_subgroup,
    find_commuting_sylow_pair, is_normal, normalizer, quotient, sylow, ConjClass, HallConstruction,
    SubgroupHandle, DEFAULT_CONJUGATE_BUDGET,
};

fn cached<T>(cell: &OnceCell<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    Ok(cell.get_or_init(|| v))
}

fn cached_in<K: Ord + Clone, V: Clone>(
    map: &RefCell<BTreeMap<K, V>>,
    key: &K,
    init: impl FnOnce() -> Result<V>,
) -> Result<V> {
    if let Some(v) = map.borrow().get(key) {
        return Ok(v.clone());
    }
    let v = init()?;
    map.borrow_mut().insert(key.clone(), v.clone());
    Ok(v)
}

/// A normal subgroup `N` with the class data of `N` and `G/N`.
pub struct NormalPiece {
    pub label: String,
    pub order: u64,
    pub classes: Vec<ConjClass>,
    pub quotient_order: u64,
    pub quotient_classes: Vec<ConjClass>,
}

/// Lazily computed facts about one group, shared by all checks on it.
pub struct Analysis {
    pub name: String,
    pub group: PermGroup,
    factors: Vec<PermGroup>,
    classes: OnceCell<Vec<ConjClass>>,
    center: OnceCell<SubgroupHandle>,
    derived: OnceCell<SubgroupHandle>,
    nilpotent: OnceCell<bool>,
    normals: OnceCell<(Vec<NormalPiece>, Vec<String>)>,
    sylows: RefCell<BTreeMap<u64, SubgroupHandle>>,
    sylow_facts: RefCell<BTreeMap<u64, SylowFacts>>,
    pairs: RefCell<BTreeMap<(u64, u64), bool>>,
    halls: RefCell<BTreeMap<PrimeSet, HallConstruction>>,
}

/// Facts about a Sylow subgroup `P` of `G`.
#[derive(Clone, Debug)]
pub struct SylowFacts {
    pub order: u64,
    pub is_abelian: bool,
    pub derived_order: u64,
    pub derived_is_central: bool,
    pub num_sylow: u64,
    pub normalizer_order: u64,
    pub centralizer_order: u64,
}

impl Analysis {
    /// `factors` are declared direct factors, used as extra normal subgroups.
    pub fn new(name: impl Into<String>, group: PermGroup, factors: Vec<PermGroup>) -> Self {
        Self {
            name: name.into(),
            group,
            factors,
            classes: OnceCell::new(),
            center: OnceCell::new(),
            derived: OnceCell::new(),
            nilpotent: OnceCell::new(),
            normals: OnceCell::new(),
            sylows: RefCell::default(),
            sylow_facts: RefCell::default(),
            pairs: RefCell::default(),
            halls: RefCell::default(),
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order())
    }

    pub fn classes(&self) -> Result<&[ConjClass]> {
        cached(&self.classes, || conjugacy_classes(&self.group)).map(Vec::as_slice)
    }

    pub fn k_pi(&self, pi: &PrimeSet) -> Result<u64> {
        Ok(k_pi_from_classes(self.classes()?, pi))
    }

    pub fn d_pi(&self, pi: &PrimeSet) -> Result<ExactRatio> {
        Ok(d_pi_from_classes(self.classes()?, self.order(), pi))
    }

    pub fn pr(&self) -> Result<ExactRatio> {
        Ok(commuting_probability_from_classes(
            self.classes()?,
            self.order(),
        ))
    }

    pub fn center(&self) -> Result<&SubgroupHandle> {
        cached(&self.center, || center(&self.group))
    }

    pub fn derived(&self) -> Result<&SubgroupHandle> {
        cached(&self.derived, || derived_subgroup(&self.group))
    }

    pub fn sylow(&self, p: u64) -> Result<SubgroupHandle> {
        cached_in(&self.sylows, &p, || sylow(&self.group, p))
    }

    /// Every Sylow subgroup normal.
    pub fn is_nilpotent(&self) -> Result<bool> {
        cached(&self.nilpotent, || {
            for p in self.primes() {
                if !is_normal(&self.group, &self.sylow(p)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .copied()
    }

    pub fn sylow_facts(&self, p: u64) -> Result<SylowFacts> {
        cached_in(&self.sylow_facts, &p, || {
            let handle = self.sylow(p)?;
            let sub = &handle.subgroup;
            let derived = derived_subgroup(sub)?;
            let z = center(sub)?;
            let normalizer = normalizer(&self.group, &handle)?;
            let centralizer = centralizer_of_subgroup(&self.group, sub)?;
            Ok(SylowFacts {
                order: sub.order(),
                is_abelian: sub.is_abelian(),
                derived_order: derived.order(),
                derived_is_central: derived.subgroup.is_subgroup_of(&z.subgroup),
                num_sylow: normalizer.index(),
                normalizer_order: normalizer.order(),
                centralizer_order: centralizer.order(),
            })
        })
    }

    pub fn nilpotent_pair(&self, p: u64, q: u64) -> Result<bool> {
        let key = (p.min(q), p.max(q));
        cached_in(&self.pairs, &key, || {
            Ok(find_commuting_sylow_pair(&self.group, key.0, key.1)?.is_some())
        })
    }

    pub fn has_nilpotent_hall(&self, pi: &PrimeSet) -> Result<bool> {
        let pi = pi.restricted_to_divisors_of(self.order());
        for (p, q) in pi.pairs() {
            if !self.nilpotent_pair(p, q)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn has_abelian_hall(&self, pi: &PrimeSet) -> Result<bool> {
        if !self.has_nilpotent_hall(pi)? {
            return Ok(false);
        }
        for &p in pi.restricted_to_divisors_of(self.order()).primes() {
            if !self.sylow(p)?.subgroup.is_abelian() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn hall(&self, pi: &PrimeSet) -> Result<HallConstruction> {
        let key = pi.restricted_to_divisors_of(self.order());
        cached_in(&self.halls, &key, || {
            if !self.has_nilpotent_hall(&key)? {
                return Ok(HallConstruction::Absent);
            }
            assemble_nilpotent_hall(&self.group, &key, DEFAULT_CONJUGATE_BUDGET)
        })
    }

    /// `Z(G)`, `G'`, normal Sylow subgroups and declared direct factors,
    /// without duplicates and excluding `1` and `G`, each with its quotient.
    /// The second list names candidates skipped because the quotient was too
    /// large to act on.
    pub fn normal_pieces(&self) -> Result<&(Vec<NormalPiece>, Vec<String>)> {
        cached(&self.normals, || {
            let mut candidates: Vec<(String, SubgroupHandle)> = vec![
                ("center".into(), self.center()?.clone()),
                ("derived".into(), self.derived()?.clone()),
            ];
            for p in self.primes() {
                let s = self.sylow(p)?;
                if is_normal(&self.group, &s) {
                    candidates.push((format!("sylow-{p}"), s));
                }
            }
            if self.factors.len() > 1 {
                for (i, f) in self.factors.iter().enumerate() {
                    candidates.push((
                        format!("factor-{}", i + 1),
                        SubgroupHandle::new(&self.group, f.clone())?,
                    ));
                }
            }

            let mut seen: Vec<Vec<Permutation>> = Vec::new();
            let mut pieces = Vec::new();
            let mut skipped = Vec::new();
            for (label, n) in candidates {
                if n.order() == 1 || n.order() == self.order() {
                    continue;
                }
                let key = n.subgroup.elements(DEFAULT_CAP)?;
                if seen.contains(&key) {
                    continue;
                }
                seen.push(key);
                if n.index() > MAX_DEGREE as u64 {
                    skipped.push(label);
                    continue;
                }
                let q = quotient(&self.group, &n)?;
                pieces.push(NormalPiece {
                    label,
                    order: n.order(),
                    classes: conjugacy_classes(&n.subgroup)?,
                    quotient_order: q.order(),
                    quotient_classes: conjugacy_classes(&q)?,
                });
            }
            Ok((pieces, skipped))
        })
    }
}
