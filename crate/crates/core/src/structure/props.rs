use crate::error::Result;
use crate::invariants::{pi_part_single, prime_divisors};
use crate::perm::PermGroup;
use crate::structure::subgroups::is_normal;
use crate::structure::sylow::sylow;

pub fn is_abelian(group: &PermGroup) -> bool {
    group.is_abelian()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(group: &PermGroup) -> Result<bool> {
    let order = group.order();
    let primes = prime_divisors(order);
    if primes.len() <= 1 || group.is_abelian() {
        return Ok(true);
    }
    for p in primes {
        let sylow_p = sylow(group, p)?;
        if !is_normal(group, &sylow_p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Abelian of exponent `p` (the trivial group counts).
pub fn is_elementary_abelian(group: &PermGroup, p: u64) -> bool {
    pi_part_single(group.order(), p) == group.order()
        && group.is_abelian()
        && group
            .generators()
            .iter()
            .all(|g| p.is_multiple_of(g.order()))
}

pub fn is_cp_x_cp(group: &PermGroup, p: u64) -> bool {
    group.order() == p * p && is_elementary_abelian(group, p)
}

/// Order 6 and nonabelian, which pins down `Sym(3)` up to isomorphism.
pub fn is_sigma3(group: &PermGroup) -> bool {
    group.order() == 6 && !group.is_abelian()
}
