use std::collections::HashSet;

use crate::error::{GroupError, Result};
use crate::invariants::{pi_part, PrimeSet};
use crate::perm::{PermGroup, Permutation};
use crate::structure::orbit::generate;
use crate::structure::subgroups::SubgroupHandle;
use crate::structure::sylow::{conjugate_key, subgroup_key, sylow, SubgroupKey};

/// Conjugates scanned per prime before witness assembly gives up.
pub const DEFAULT_CONJUGATE_BUDGET: usize = 500_000;

/// Outcome of a search over the conjugates of a subgroup.
#[derive(Debug)]
pub enum ConjugateSearch {
    Found(PermGroup),
    NotFound,
    BudgetExhausted,
}

/// Outcome of [`construct_nilpotent_hall`].
#[derive(Clone, Debug)]
pub enum HallConstruction {
    Witness(SubgroupHandle),
    /// Pairwise conditions hold, so a nilpotent Hall subgroup exists, but no
    /// witness was assembled within the budget.
    ExistsByLemmaOnly,
    Absent,
}

impl HallConstruction {
    pub fn witness(&self) -> Option<&SubgroupHandle> {
        match self {
            Self::Witness(h) => Some(h),
            _ => None,
        }
    }
}

fn commute(a: &[Permutation], b: &[Permutation]) -> bool {
    a.iter().all(|x| b.iter().all(|y| x.commutes_with(y)))
}

/// Scans the conjugates `target^g` breadth-first from `target` itself and
/// returns the first one commuting elementwise with `fixed`, giving up after
/// `budget` conjugates have been examined.
pub fn find_commuting_conjugate(
    group: &PermGroup,
    fixed: &PermGroup,
    target: &PermGroup,
    budget: usize,
) -> Result<ConjugateSearch> {
    let fixed_gens: Vec<Permutation> = fixed.nontrivial_generators().cloned().collect();
    let target_gens: Vec<Permutation> = target.nontrivial_generators().cloned().collect();
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();

    let start = subgroup_key(target)?;
    let mut seen: HashSet<SubgroupKey> = HashSet::from([start.clone()]);
    let mut queue: Vec<(Vec<Permutation>, SubgroupKey)> = vec![(target_gens, start)];
    let mut head = 0;
    while head < queue.len() {
        if head >= budget {
            return Ok(ConjugateSearch::BudgetExhausted);
        }
        let (current, key) = &queue[head];
        if commute(&fixed_gens, current) {
            let found = PermGroup::new(group.degree(), current.clone())?;
            return Ok(ConjugateSearch::Found(found));
        }
        let mut fresh = Vec::new();
        for s in &gens {
            let image_key = conjugate_key(key, s);
            if seen.insert(image_key.clone()) {
                let image: Vec<Permutation> = current.iter().map(|x| x.conjugate_by(s)).collect();
                fresh.push((image, image_key));
            }
        }
        queue.extend(fresh);
        head += 1;
    }
    Ok(ConjugateSearch::NotFound)
}

/// A Sylow `p`-subgroup `P` and a Sylow `q`-subgroup commuting with it.
///
/// Fixing `P` loses nothing: if `P^x` and `Q^y` commute then so do `P` and
/// `Q^(y x⁻¹)`.
pub fn find_commuting_sylow_pair(
    group: &PermGroup,
    p: u64,
    q: u64,
) -> Result<Option<(SubgroupHandle, SubgroupHandle)>> {
    if p == q {
        return Err(GroupError::InvalidParameters(format!(
            "commuting pair needs two distinct primes, got {p} twice"
        )));
    }
    let sylow_p = sylow(group, p)?;
    let sylow_q = sylow(group, q)?;
    match find_commuting_conjugate(group, &sylow_p.subgroup, &sylow_q.subgroup, usize::MAX)? {
        ConjugateSearch::Found(q2) => Ok(Some((sylow_p, SubgroupHandle::unchecked(group, q2)))),
        _ => Ok(None),
    }
}

/// Whether a nilpotent Hall π-subgroup exists, decided pairwise. Primes of
/// π not dividing `|G|` are ignored.
pub fn has_nilpotent_hall(group: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    let pi = pi.restricted_to_divisors_of(group.order());
    for (p, q) in pi.pairs() {
        if find_commuting_sylow_pair(group, p, q)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A nilpotent Hall subgroup is the product of Sylow subgroups of `G`, so it is
/// abelian exactly when those Sylow subgroups are.
pub fn has_abelian_hall(group: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    if !has_nilpotent_hall(group, pi)? {
        return Ok(false);
    }
    for &p in pi.restricted_to_divisors_of(group.order()).primes() {
        if !sylow(group, p)?.subgroup.is_abelian() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn construct_nilpotent_hall(group: &PermGroup, pi: &PrimeSet) -> Result<HallConstruction> {
    construct_nilpotent_hall_with_budget(group, pi, DEFAULT_CONJUGATE_BUDGET)
}

/// Builds `P₁ × P₂ × ...` one prime at a time, each time adding a conjugate
/// of the next Sylow subgroup that centralizes the product so far.
///
/// When a nilpotent Hall subgroup exists every π-subgroup lies in a conjugate
/// of it, so each step has a commuting conjugate to find.
pub fn construct_nilpotent_hall_with_budget(
    group: &PermGroup,
    pi: &PrimeSet,
    budget: usize,
) -> Result<HallConstruction> {
    if !has_nilpotent_hall(group, pi)? {
        return Ok(HallConstruction::Absent);
    }
    assemble_nilpotent_hall(group, pi, budget)
}

/// The assembly step of [`construct_nilpotent_hall_with_budget`], for callers
/// that have already established existence.
pub(crate) fn assemble_nilpotent_hall(
    group: &PermGroup,
    pi: &PrimeSet,
    budget: usize,
) -> Result<HallConstruction> {
    let pi = pi.restricted_to_divisors_of(group.order());
    let mut current = PermGroup::trivial(group.degree())?;
    for &p in pi.primes() {
        let target = sylow(group, p)?.subgroup;
        match find_commuting_conjugate(group, &current, &target, budget)? {
            ConjugateSearch::Found(factor) => {
                let gens = current
                    .nontrivial_generators()
                    .chain(factor.nontrivial_generators())
                    .cloned()
                    .collect::<Vec<_>>();
                current = generate(group.degree(), gens)?;
            }
            ConjugateSearch::NotFound | ConjugateSearch::BudgetExhausted => {
                return Ok(HallConstruction::ExistsByLemmaOnly);
            }
        }
    }
    debug_assert_eq!(current.order(), pi_part(group.order(), &pi));
    Ok(HallConstruction::Witness(SubgroupHandle::unchecked(
        group, current,
    )))
}
