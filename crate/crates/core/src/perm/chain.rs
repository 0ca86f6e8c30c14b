//! Deterministic Schreier–Sims.
//!
//! The base is the ascending list of points moved by the generators. Every
//! level therefore stabilises an initial segment of moved points, a residue
//! that survives sifting through all levels is the identity, and the base is
//! never extended during construction. Levels whose fundamental orbit is a
//! single point are dropped once the chain is complete.

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) point: usize,
    /// Indices into the strong generating set of generators fixing all earlier base points.
    gens: Vec<usize>,
    pub(crate) orbit: Vec<u32>,
    /// `position[b]` is the index of `b` in `orbit`, or `NOT_IN_ORBIT`.
    position: Vec<u32>,
    /// `transversal[k]` maps `point` to `orbit[k]`.
    pub(crate) transversal: Vec<Permutation>,
    inverse_transversal: Vec<Permutation>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Self {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            position: vec![NOT_IN_ORBIT; degree],
            transversal: Vec::new(),
            inverse_transversal: Vec::new(),
        };
        level.reset_orbit(degree);
        level
    }

    fn reset_orbit(&mut self, degree: usize) {
        for &b in &self.orbit {
            self.position[b as usize] = NOT_IN_ORBIT;
        }
        let id = Permutation::identity(degree);
        self.orbit = vec![self.point as u32];
        self.position[self.point] = 0;
        self.transversal = vec![id.clone()];
        self.inverse_transversal = vec![id];
    }

    fn recompute(&mut self, strong: &[Permutation], degree: usize) {
        self.reset_orbit(degree);
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head] as usize;
            for &gi in &self.gens {
                let s = &strong[gi];
                let c = s.image(b);
                if self.position[c] == NOT_IN_ORBIT {
                    self.position[c] = self.orbit.len() as u32;
                    self.orbit.push(c as u32);
                    let u = self.transversal[head].then(s);
                    self.inverse_transversal.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub(crate) fn index_of(&self, point: usize) -> Option<usize> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            k => Some(k as usize),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
    order: u64,
}

impl StabChain {
    pub(crate) fn build(degree: usize, generators: &[Permutation]) -> Result<Self> {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut moved = vec![false; degree];
        for g in &strong {
            for (i, &x) in g.images().iter().enumerate() {
                if i as u32 != x {
                    moved[i] = true;
                }
            }
        }
        let base: Vec<usize> = (0..degree).filter(|&i| moved[i]).collect();

        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (gi, g) in strong.iter().enumerate() {
            for level in levels.iter_mut() {
                level.gens.push(gi);
                if g.image(level.point) != level.point {
                    break;
                }
            }
        }
        for level in levels.iter_mut() {
            level.recompute(&strong, degree);
        }

        let k = levels.len();
        let mut i = k;
        while i > 0 {
            let li = i - 1;
            match Self::find_failing_schreier_generator(&levels, &strong, li) {
                None => i -= 1,
                Some((residue, drop_level)) => {
                    debug_assert!(drop_level > li && drop_level < k);
                    strong.push(residue);
                    let gi = strong.len() - 1;
                    for level in levels.iter_mut().take(drop_level + 1).skip(li + 1) {
                        level.gens.push(gi);
                        level.recompute(&strong, degree);
                    }
                    i = drop_level + 1;
                }
            }
        }

        levels.retain(|l| l.orbit.len() > 1);
        let mut order: u64 = 1;
        for level in &levels {
            order = order
                .checked_mul(level.orbit.len() as u64)
                .ok_or(GroupError::OrderOverflow)?;
        }
        Ok(Self {
            degree,
            levels,
            order,
        })
    }

    /// First Schreier generator of level `li` that does not sift through the
    /// levels below it, with the level at which sifting stopped.
    fn find_failing_schreier_generator(
        levels: &[Level],
        strong: &[Permutation],
        li: usize,
    ) -> Option<(Permutation, usize)> {
        let level = &levels[li];
        for (k, &b) in level.orbit.iter().enumerate() {
            let u = &level.transversal[k];
            for &gi in &level.gens {
                let s = &strong[gi];
                let c = s.image(b as usize);
                let kc = level.index_of(c).expect("orbit is closed");
                let h = u.then(s).then(&level.inverse_transversal[kc]);
                if h.is_identity() {
                    continue;
                }
                let (residue, stop) = strip(levels, h, li + 1);
                if !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    pub(crate) fn order(&self) -> u64 {
        self.order
    }

    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        strip(&self.levels, g.clone(), 0).0.is_identity()
    }
}

/// Sifts `h` through `levels[from..]`, returning the residue and the index of
/// the level where sifting stopped (`levels.len()` if it went all the way).
fn strip(levels: &[Level], mut h: Permutation, from: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let b = h.image(level.point);
        if b == level.point {
            continue;
        }
        match level.index_of(b) {
            Some(k) => h = h.then(&level.inverse_transversal[k]),
            None => return (h, j),
        }
    }
    (h, levels.len())
}
