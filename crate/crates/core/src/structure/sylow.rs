use crate::error::{GroupError, Result};
use crate::invariants::{is_prime, pi_part_single};
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP};
use crate::structure::orbit::{GroupBuilder, Orbit};
use crate::structure::subgroups::{is_normal, SubgroupHandle};

/// A subgroup identified by its sorted element list.
pub(crate) type SubgroupKey = Vec<Permutation>;

pub(crate) fn subgroup_key(subgroup: &PermGroup) -> Result<SubgroupKey> {
    subgroup.elements(DEFAULT_CAP)
}

pub(crate) fn conjugate_key(key: &SubgroupKey, g: &Permutation) -> SubgroupKey {
    let mut out: Vec<Permutation> = key.iter().map(|x| x.conjugate_by(g)).collect();
    out.sort_unstable();
    out
}

/// The orbit of `subgroup` under conjugation by `group`, as element-set keys.
/// `None` if there are more than `limit` conjugates.
pub(crate) fn conjugates(
    group: &PermGroup,
    subgroup: &PermGroup,
    limit: usize,
) -> Result<Option<Orbit<SubgroupKey>>> {
    let key = subgroup_key(subgroup)?;
    Ok(Orbit::compute(key, group, conjugate_key, limit))
}

/// `N_G(H)`, the stabilizer of `H` in the conjugation action on its conjugates.
pub fn normalizer(group: &PermGroup, subgroup: &SubgroupHandle) -> Result<SubgroupHandle> {
    if group.order() > DEFAULT_CAP {
        return Err(GroupError::OrderExceedsCap(group.order()));
    }
    if is_normal(group, subgroup) {
        return Ok(SubgroupHandle::whole(group));
    }
    let orbit = conjugates(group, &subgroup.subgroup, usize::MAX)?.expect("unbounded orbit");
    let stabilizer = orbit.stabilizer(group, conjugate_key)?;
    Ok(SubgroupHandle::unchecked(group, stabilizer))
}

/// Number of conjugates of `subgroup`, `|G : N_G(H)|`.
pub fn count_conjugates(group: &PermGroup, subgroup: &SubgroupHandle) -> Result<u64> {
    Ok(normalizer(group, subgroup)?.index())
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown from a cyclic `p`-subgroup inside successive
/// normalizers. Elements are scanned in lexicographic order, so the result
/// depends only on the group.
pub fn sylow(group: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let order = group.order();
    let target = pi_part_single(order, p);
    if target == 1 {
        return Err(GroupError::PrimeDoesNotDivideOrder { prime: p, order });
    }
    let is_p_element = |x: &Permutation| !x.is_identity() && is_power_of(x.order(), p);

    let first = group
        .elements(DEFAULT_CAP)?
        .into_iter()
        .find(is_p_element)
        .expect("Cauchy: a p-element exists");
    let mut builder = GroupBuilder::new(group.degree());
    builder.add(first)?;

    while builder.order() < target {
        let current = SubgroupHandle::unchecked(group, builder.snapshot()?);
        let n = normalizer(group, &current)?;
        let y = n
            .subgroup
            .elements(DEFAULT_CAP)?
            .into_iter()
            .find(|y| is_p_element(y) && !builder.contains(y))
            .expect("a p-subgroup that is not Sylow grows inside its normalizer");
        builder.add(y)?;
    }
    Ok(SubgroupHandle::unchecked(group, builder.finish()?))
}

/// `|Syl_p(G)| = |G : N_G(P)|`.
pub fn num_sylow(group: &PermGroup, p: u64) -> Result<u64> {
    let p_sylow = sylow(group, p)?;
    count_conjugates(group, &p_sylow)
}
