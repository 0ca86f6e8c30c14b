use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP, MAX_DEGREE};
use crate::structure::orbit::{generate, GroupBuilder, Orbit};

/// A subgroup together with the group it lives in.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    pub ambient: PermGroup,
    pub subgroup: PermGroup,
}

impl SubgroupHandle {
    /// Checks that every generator of `subgroup` lies in `ambient`.
    pub fn new(ambient: &PermGroup, subgroup: PermGroup) -> Result<Self> {
        if subgroup.degree() != ambient.degree() {
            return Err(GroupError::DegreeMismatch {
                left: ambient.degree(),
                right: subgroup.degree(),
            });
        }
        if !subgroup.is_subgroup_of(ambient) {
            return Err(GroupError::ElementNotInGroup);
        }
        Ok(Self::unchecked(ambient, subgroup))
    }

    pub(crate) fn unchecked(ambient: &PermGroup, subgroup: PermGroup) -> Self {
        debug_assert!(subgroup.is_subgroup_of(ambient));
        Self {
            ambient: ambient.clone(),
            subgroup,
        }
    }

    pub fn whole(group: &PermGroup) -> Self {
        Self::unchecked(group, group.clone())
    }

    pub fn order(&self) -> u64 {
        self.subgroup.order()
    }

    pub fn index(&self) -> u64 {
        self.ambient.order() / self.subgroup.order()
    }
}

/// `C_G(g)`, as the stabilizer of `g` in the conjugation action on its class.
pub fn centralizer(group: &PermGroup, g: &Permutation) -> Result<SubgroupHandle> {
    if !group.contains(g)? {
        return Err(GroupError::ElementNotInGroup);
    }
    Ok(SubgroupHandle::unchecked(group, commuting_with(group, g)?))
}

/// Elements of `group` commuting with `g`, which need not lie in `group`.
fn commuting_with(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    let act = |x: &Permutation, s: &Permutation| x.conjugate_by(s);
    let class = Orbit::compute(g.clone(), group, act, usize::MAX).expect("unbounded orbit");
    class.stabilizer(group, act)
}

/// Elements of `group` commuting with every generator of `subgroup`.
pub fn centralizer_of_subgroup(group: &PermGroup, subgroup: &PermGroup) -> Result<SubgroupHandle> {
    let mut result = group.clone();
    for h in subgroup.nontrivial_generators() {
        result = commuting_with(&result, h)?;
    }
    Ok(SubgroupHandle::unchecked(group, result))
}

/// `Z(G)`: elements commuting with every generator.
pub fn center(group: &PermGroup) -> Result<SubgroupHandle> {
    center_capped(group, DEFAULT_CAP)
}

pub fn center_capped(group: &PermGroup, cap: u64) -> Result<SubgroupHandle> {
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    let central = group
        .elements(cap)?
        .into_iter()
        .filter(|x| gens.iter().all(|s| x.commutes_with(s)));
    let z = generate(group.degree(), central)?;
    Ok(SubgroupHandle::unchecked(group, z))
}

/// Smallest normal subgroup of `group` containing `elements`.
pub fn normal_closure(
    group: &PermGroup,
    elements: impl IntoIterator<Item = Permutation>,
) -> Result<PermGroup> {
    let mut builder = GroupBuilder::new(group.degree());
    let mut pending: Vec<Permutation> = Vec::new();
    for x in elements {
        if builder.add(x.clone())? {
            pending.push(x);
        }
    }
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    while let Some(x) = pending.pop() {
        for s in &gens {
            let y = x.conjugate_by(s);
            if builder.add(y.clone())? {
                pending.push(y);
            }
        }
    }
    builder.finish()
}

/// `G'`, the normal closure of the commutators of the generators.
pub fn derived_subgroup(group: &PermGroup) -> Result<SubgroupHandle> {
    let gens = group.generators();
    let commutators = gens.iter().enumerate().flat_map(|(i, a)| {
        gens[i + 1..]
            .iter()
            .map(move |b| a.commutator(b))
            .filter(|c| !c.is_identity())
    });
    let derived = normal_closure(group, commutators.collect::<Vec<_>>())?;
    Ok(SubgroupHandle::unchecked(group, derived))
}

/// Whether every generator of `normal` stays inside it under conjugation by
/// every generator of `group`.
pub fn is_normal(group: &PermGroup, normal: &SubgroupHandle) -> bool {
    let n = &normal.subgroup;
    n.nontrivial_generators().all(|x| {
        group
            .nontrivial_generators()
            .all(|s| n.has(&x.conjugate_by(s)))
    })
}

/// `G/N` acting faithfully on the right cosets of `N`.
///
/// Cosets are numbered in breadth-first order from `N` itself; each coset is
/// identified by its lexicographically smallest element.
pub fn quotient(group: &PermGroup, normal: &SubgroupHandle) -> Result<PermGroup> {
    quotient_capped(group, normal, DEFAULT_CAP)
}

pub fn quotient_capped(group: &PermGroup, normal: &SubgroupHandle, cap: u64) -> Result<PermGroup> {
    if normal.subgroup.degree() != group.degree() {
        return Err(GroupError::DegreeMismatch {
            left: group.degree(),
            right: normal.subgroup.degree(),
        });
    }
    if !normal.subgroup.is_subgroup_of(group) || !is_normal(group, normal) {
        return Err(GroupError::NotNormal);
    }
    let index = group.order() / normal.order();
    if index > cap || index > MAX_DEGREE as u64 {
        return Err(GroupError::IndexExceedsCap(index));
    }
    let n_elements = normal.subgroup.elements(cap)?;
    let canonical = |x: &Permutation| -> Permutation {
        n_elements
            .iter()
            .map(|n| n.then(x))
            .min()
            .expect("subgroup is nonempty")
    };

    let gens: Vec<&Permutation> = group.generators().iter().collect();
    let identity = Permutation::identity(group.degree());
    let mut reps = vec![canonical(&identity)];
    let mut index_of: HashMap<Permutation, usize> = HashMap::from([(reps[0].clone(), 0)]);
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        for (k, s) in gens.iter().enumerate() {
            let key = canonical(&reps[head].then(s));
            let j = match index_of.get(&key) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    index_of.insert(key.clone(), j);
                    reps.push(key);
                    j
                }
            };
            images[k].push(j);
        }
        head += 1;
    }
    debug_assert_eq!(reps.len() as u64, index);
    let generators = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(reps.len(), generators)
}
