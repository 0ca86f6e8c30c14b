//! Builders for the group families used throughout, a small expression
//! language naming them, and a generator-file loader.

mod catalogue;
mod file;
mod parse;

use std::fmt;

use crate::error::{GroupError, Result};
use crate::invariants::is_prime;
use crate::perm::{PermGroup, Permutation, MAX_DEGREE};

pub use catalogue::{catalogue, CatalogueEntry, CATALOGUE_VERSION};
pub use file::{load_generators, parse_generators, LoadError};
pub use parse::{ParseError, ParseErrorKind};

/// One direct factor of a [`GroupExpr`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Sym(u64),
    Alt(u64),
    Cyclic(u64),
    /// Order `2m`, acting on the `m` vertices of a polygon.
    Dihedral(u64),
    /// `C_p^k`.
    ElemAbelian(u64, u64),
    /// Order `p³` and exponent `p`, in its regular representation.
    Extraspecial(u64),
    /// `C_p ≀ C_p` on `p²` points.
    Wreath(u64),
    /// `C_q ⋊ C_p` acting affinely on `q` points.
    Semidirect(u64, u64),
    /// `SL(2, q)` on the nonzero vectors of `F_q²`.
    Sl2(u64),
}

impl Atom {
    pub(crate) const NAMES: [(&'static str, usize); 9] = [
        ("Sym", 1),
        ("Alt", 1),
        ("Cyclic", 1),
        ("Dihedral", 1),
        ("ElemAbelian", 2),
        ("Extraspecial", 1),
        ("Wreath", 1),
        ("Semidirect", 2),
        ("SL2", 1),
    ];

    pub(crate) fn from_parts(name: &str, args: &[u64]) -> Option<Self> {
        Some(match (name, args) {
            ("Sym", &[n]) => Self::Sym(n),
            ("Alt", &[n]) => Self::Alt(n),
            ("Cyclic", &[n]) => Self::Cyclic(n),
            ("Dihedral", &[m]) => Self::Dihedral(m),
            ("ElemAbelian", &[p, k]) => Self::ElemAbelian(p, k),
            ("Extraspecial", &[p]) => Self::Extraspecial(p),
            ("Wreath", &[p]) => Self::Wreath(p),
            ("Semidirect", &[q, p]) => Self::Semidirect(q, p),
            ("SL2", &[q]) => Self::Sl2(q),
            _ => return None,
        })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> u64 {
        match *self {
            Self::Sym(n) | Self::Alt(n) | Self::Cyclic(n) | Self::Dihedral(n) => n,
            Self::ElemAbelian(p, k) => p.saturating_mul(k),
            Self::Extraspecial(p) => p.saturating_pow(3),
            Self::Wreath(p) => p.saturating_mul(p),
            Self::Semidirect(q, _) => q,
            Self::Sl2(q) => q.saturating_mul(q).saturating_sub(1),
        }
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(GroupError::InvalidParameters(format!("{self}: {msg}")));
        let need_prime = |p: u64| -> Result<()> {
            if is_prime(p) {
                Ok(())
            } else {
                fail(format!("{p} is not prime"))
            }
        };
        match *self {
            Self::Sym(n) | Self::Alt(n) | Self::Cyclic(n) if n == 0 => {
                return fail("needs at least one point".into())
            }
            Self::Dihedral(m) if m < 3 => return fail("needs m >= 3".into()),
            Self::ElemAbelian(p, k) => {
                need_prime(p)?;
                if k == 0 {
                    return fail("rank must be positive".into());
                }
            }
            Self::Extraspecial(p) => {
                need_prime(p)?;
                if p == 2 || p > 7 {
                    return fail("needs an odd prime at most 7".into());
                }
            }
            Self::Wreath(p) => need_prime(p)?,
            Self::Semidirect(q, p) => {
                need_prime(q)?;
                need_prime(p)?;
                if (q - 1) % p != 0 {
                    return fail(format!("{p} does not divide {}", q - 1));
                }
            }
            Self::Sl2(q) => {
                need_prime(q)?;
                if q == 2 || q > 31 {
                    return fail("needs an odd prime at most 31".into());
                }
            }
            _ => {}
        }
        if self.degree() > MAX_DEGREE as u64 {
            return fail(format!("degree {} exceeds {MAX_DEGREE}", self.degree()));
        }
        Ok(())
    }

    /// Degree and generators.
    fn generators(&self) -> Result<(usize, Vec<Permutation>)> {
        self.validate()?;
        let n = self.degree() as usize;
        let from_fn =
            |f: &dyn Fn(usize) -> usize| Permutation::from_images((0..n).map(f).collect());
        let gens = match *self {
            Self::Sym(_) if n == 1 => vec![],
            Self::Sym(_) => vec![
                Permutation::from_cycles(n, &[vec![0, 1]])?,
                from_fn(&|i| (i + 1) % n)?,
            ],
            Self::Alt(_) => (2..n)
                .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]))
                .collect::<Result<_>>()?,
            Self::Cyclic(_) => vec![from_fn(&|i| (i + 1) % n)?],
            Self::Dihedral(_) => vec![from_fn(&|i| (i + 1) % n)?, from_fn(&|i| (n - i) % n)?],
            Self::ElemAbelian(p, _) => {
                let p = p as usize;
                (0..n / p)
                    .map(|b| from_fn(&|i| if i / p == b { b * p + (i + 1) % p } else { i }))
                    .collect::<Result<_>>()?
            }
            Self::Extraspecial(p) => extraspecial_generators(p as usize)?,
            Self::Wreath(p) => {
                let p = p as usize;
                vec![
                    from_fn(&|i| if i < p { (i + 1) % p } else { i })?,
                    from_fn(&|i| ((i / p + 1) % p) * p + i % p)?,
                ]
            }
            Self::Semidirect(q, p) => {
                let r = smallest_root_of_order(q, p) as usize;
                vec![from_fn(&|i| (i + 1) % n)?, from_fn(&|i| (r * i) % n)?]
            }
            Self::Sl2(q) => sl2_generators(q as usize)?,
        };
        Ok((n, gens))
    }

    pub fn build(&self) -> Result<PermGroup> {
        let (degree, gens) = self.generators()?;
        PermGroup::new(degree, gens)
    }
}

/// Right multiplication on the Heisenberg group of triples `(a, b, c)` with
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`.
fn extraspecial_generators(p: usize) -> Result<Vec<Permutation>> {
    let index = |a: usize, b: usize, c: usize| (a % p) * p * p + (b % p) * p + c % p;
    let right_mul = |da: usize, db: usize| {
        let images = (0..p * p * p)
            .map(|i| {
                let (a, b, c) = (i / (p * p), (i / p) % p, i % p);
                index(a + da, b + db, c + a * db)
            })
            .collect();
        Permutation::from_images(images)
    };
    Ok(vec![right_mul(1, 0)?, right_mul(0, 1)?])
}

fn smallest_root_of_order(q: u64, p: u64) -> u64 {
    let order = |r: u64| {
        let mut x = r % q;
        let mut k = 1;
        while x != 1 {
            x = x * r % q;
            k += 1;
        }
        k
    };
    (2..q).find(|&r| order(r) == p).expect("p divides q - 1")
}

/// Row vectors `(x, y) ≠ 0` numbered `x q + y − 1`, acted on by `v ↦ v M`.
fn sl2_generators(q: usize) -> Result<Vec<Permutation>> {
    let matrix = |a: usize, b: usize, c: usize, d: usize| {
        let images = (1..q * q)
            .map(|v| {
                let (x, y) = (v / q, v % q);
                ((x * a + y * c) % q) * q + (x * b + y * d) % q - 1
            })
            .collect();
        Permutation::from_images(images)
    };
    Ok(vec![matrix(1, 1, 0, 1)?, matrix(0, 1, q - 1, 0)?])
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sym(n) => write!(f, "Sym({n})"),
            Self::Alt(n) => write!(f, "Alt({n})"),
            Self::Cyclic(n) => write!(f, "Cyclic({n})"),
            Self::Dihedral(m) => write!(f, "Dihedral({m})"),
            Self::ElemAbelian(p, k) => write!(f, "ElemAbelian({p},{k})"),
            Self::Extraspecial(p) => write!(f, "Extraspecial({p})"),
            Self::Wreath(p) => write!(f, "Wreath({p})"),
            Self::Semidirect(q, p) => write!(f, "Semidirect({q},{p})"),
            Self::Sl2(q) => write!(f, "SL2({q})"),
        }
    }
}

/// A direct product of one or more atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    factors: Vec<Atom>,
}

impl GroupExpr {
    /// `None` for an empty factor list.
    pub fn new(factors: Vec<Atom>) -> Option<Self> {
        (!factors.is_empty()).then_some(Self { factors })
    }

    pub fn atom(atom: Atom) -> Self {
        Self {
            factors: vec![atom],
        }
    }

    pub fn factors(&self) -> &[Atom] {
        &self.factors
    }

    pub fn times(mut self, other: GroupExpr) -> Self {
        self.factors.extend(other.factors);
        self
    }

    pub fn build(&self) -> Result<PermGroup> {
        Ok(self.build_factors()?.0)
    }

    /// The product on disjoint point blocks, together with each factor
    /// embedded as a normal subgroup.
    pub fn build_factors(&self) -> Result<(PermGroup, Vec<PermGroup>)> {
        let parts = self
            .factors
            .iter()
            .map(Atom::generators)
            .collect::<Result<Vec<_>>>()?;
        let total: usize = parts.iter().map(|(d, _)| d).sum();
        if total > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(total));
        }
        let mut offset = 0;
        let mut embedded = Vec::new();
        for (degree, gens) in &parts {
            let shifted = gens.iter().map(|g| g.shifted(offset, total)).collect();
            embedded.push(PermGroup::new(total, shifted)?);
            offset += degree;
        }
        let all = embedded
            .iter()
            .flat_map(|h| h.generators().iter().cloned())
            .collect();
        Ok((PermGroup::new(total, all)?, embedded))
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

pub fn build(expr: &GroupExpr) -> Result<PermGroup> {
    expr.build()
}

pub fn parse_group_expr(text: &str) -> std::result::Result<GroupExpr, ParseError> {
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(text: &str) -> u64 {
        parse_group_expr(text).unwrap().build().unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("Sym(1)"), 1);
        assert_eq!(order("Sym(5)"), 120);
        assert_eq!(order("Alt(3)"), 3);
        assert_eq!(order("Alt(6)"), 360);
        assert_eq!(order("Cyclic(12)"), 12);
        assert_eq!(order("Dihedral(7)"), 14);
        assert_eq!(order("ElemAbelian(3,2)"), 9);
        assert_eq!(order("Extraspecial(3)"), 27);
        assert_eq!(order("Extraspecial(7)"), 343);
        assert_eq!(order("Wreath(3)"), 81);
        assert_eq!(order("Semidirect(7,3)"), 21);
        assert_eq!(order("Semidirect(11,5)"), 55);
        assert_eq!(order("SL2(5)"), 120);
        assert_eq!(order("SL2(7)"), 336);
    }

    #[test]
    fn products_use_disjoint_blocks() {
        let e = parse_group_expr("Extraspecial(3) x Cyclic(5)").unwrap();
        let (g, factors) = e.build_factors().unwrap();
        assert_eq!(g.degree(), 32);
        assert_eq!(g.order(), 135);
        assert_eq!(factors[0].order(), 27);
        assert_eq!(factors[1].order(), 5);
    }

    #[test]
    fn extraspecial_has_exponent_p() {
        for p in [3u64, 5] {
            let g = Atom::Extraspecial(p).build().unwrap();
            assert!(!g.is_abelian());
            let elements = g.elements(1000).unwrap();
            assert!(elements.iter().all(|x| p % x.order() == 0));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        for bad in [
            Atom::Semidirect(7, 5),
            Atom::Semidirect(9, 2),
            Atom::Extraspecial(2),
            Atom::Extraspecial(11),
            Atom::Sl2(37),
            Atom::Sl2(9),
            Atom::Dihedral(2),
            Atom::Cyclic(0),
            Atom::ElemAbelian(4, 2),
            Atom::Sym(20_000),
        ] {
            assert!(
                matches!(bad.build(), Err(GroupError::InvalidParameters(_))),
                "{bad} should be rejected"
            );
        }
    }

    #[test]
    fn semidirect_multiplier_is_smallest() {
        assert_eq!(smallest_root_of_order(7, 3), 2);
        assert_eq!(smallest_root_of_order(11, 5), 3);
        assert_eq!(smallest_root_of_order(13, 3), 3);
    }
}
