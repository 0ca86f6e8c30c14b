use std::collections::HashMap;
use std::hash::Hash;

use crate::error::Result;
use crate::perm::{PermGroup, Permutation};

/// An orbit under a group given by generators, with a transversal:
/// acting on `points[0]` by `transversal[k]` gives `points[k]`.
pub(crate) struct Orbit<T> {
    pub(crate) points: Vec<T>,
    pub(crate) index: HashMap<T, usize>,
    pub(crate) transversal: Vec<Permutation>,
}

impl<T: Clone + Eq + Hash> Orbit<T> {
    /// Breadth-first orbit of `start`; `None` if it grows beyond `limit`.
    pub(crate) fn compute(
        start: T,
        group: &PermGroup,
        act: impl Fn(&T, &Permutation) -> T,
        limit: usize,
    ) -> Option<Self> {
        let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
        let mut orbit = Self {
            points: vec![start.clone()],
            index: HashMap::from([(start, 0)]),
            transversal: vec![Permutation::identity(group.degree())],
        };
        let mut head = 0;
        while head < orbit.points.len() {
            for s in &gens {
                let image = act(&orbit.points[head], s);
                if !orbit.index.contains_key(&image) {
                    if orbit.points.len() >= limit {
                        return None;
                    }
                    orbit.index.insert(image.clone(), orbit.points.len());
                    orbit.points.push(image);
                    let t = orbit.transversal[head].then(s);
                    orbit.transversal.push(t);
                }
            }
            head += 1;
        }
        Some(orbit)
    }

    pub(crate) fn len(&self) -> usize {
        self.points.len()
    }

    /// Stabilizer of `points[0]`, generated by Schreier generators until its
    /// order reaches `|group| / |orbit|`.
    pub(crate) fn stabilizer(
        &self,
        group: &PermGroup,
        act: impl Fn(&T, &Permutation) -> T,
    ) -> Result<PermGroup> {
        let target = group.order() / self.len() as u64;
        let mut builder = GroupBuilder::new(group.degree());
        if target == 1 {
            return builder.finish();
        }
        let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
        'outer: for (k, point) in self.points.iter().enumerate() {
            for s in &gens {
                let j = self.index[&act(point, s)];
                let schreier = self.transversal[k]
                    .then(s)
                    .then(&self.transversal[j].inverse());
                builder.add(schreier)?;
                if builder.order() == target {
                    break 'outer;
                }
            }
        }
        debug_assert_eq!(builder.order(), target);
        builder.finish()
    }
}

/// Grows a group one generator at a time, skipping elements already inside.
pub(crate) struct GroupBuilder {
    degree: usize,
    gens: Vec<Permutation>,
    group: Option<PermGroup>,
}

impl GroupBuilder {
    pub(crate) fn new(degree: usize) -> Self {
        Self {
            degree,
            gens: Vec::new(),
            group: None,
        }
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        match &self.group {
            Some(group) => group.has(g),
            None => g.is_identity(),
        }
    }

    /// Adds `g` unless it already lies in the group; returns whether it grew.
    pub(crate) fn add(&mut self, g: Permutation) -> Result<bool> {
        if self.contains(&g) {
            return Ok(false);
        }
        self.gens.push(g);
        self.group = Some(PermGroup::new(self.degree, self.gens.clone())?);
        Ok(true)
    }

    pub(crate) fn order(&self) -> u64 {
        self.group.as_ref().map_or(1, PermGroup::order)
    }

    pub(crate) fn snapshot(&self) -> Result<PermGroup> {
        match &self.group {
            Some(group) => Ok(group.clone()),
            None => PermGroup::trivial(self.degree),
        }
    }

    pub(crate) fn finish(self) -> Result<PermGroup> {
        match self.group {
            Some(group) => Ok(group),
            None => PermGroup::trivial(self.degree),
        }
    }
}

/// The subgroup generated by `elements`, keeping only elements that enlarge it.
pub fn generate(
    degree: usize,
    elements: impl IntoIterator<Item = Permutation>,
) -> Result<PermGroup> {
    let mut builder = GroupBuilder::new(degree);
    for g in elements {
        builder.add(g)?;
    }
    builder.finish()
}
