use std::fmt;
use std::ops::Mul;

use crate::error::{GroupError, Result};
use crate::perm::MAX_DEGREE;

/// A bijection on `{0, …, n-1}` stored as its image array.
///
/// Products are read left to right: `a * b` first applies `a`, then `b`,
/// so `(a * b).image(i) == b.image(a.image(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, rejecting anything that is
    /// not a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::InvalidPermutation("empty image array".into()));
        }
        if n > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {x} repeated"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation(
                "degree must be positive".into(),
            ));
        }
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {x} appears in more than one place"
                    )));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right product: the result maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right product; degrees must agree.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()].into_boxed_slice();
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ x g)(g(i)) = g(x(i))
        let mut images = vec![0u32; self.degree()].into_boxed_slice();
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images }
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Least `m ≥ 1` with `self^m = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Places `self` on the points `offset..offset+degree` of a larger set.
    pub(crate) fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

/// Left-to-right product, see [`Permutation::compose`]. Panics on a degree mismatch.
impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.then(rhs)
    }
}

/// Disjoint-cycle notation over 0-based points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
