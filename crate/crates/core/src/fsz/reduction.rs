//! Lifting a witness from a normal subgroup of coprime index.
//!
//! If `H` is normal in `G` and `gcd(m, [G:H]) = 1`, then `x^m` lies in `H`
//! exactly when `x` does, so `G_m(u, g) = H_m(u, g)` for `u, g` in `H`. A
//! witness found in `H` is therefore a witness in `G`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{FszError, GroupError};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::is_normal;

use super::count::gm_set;
use super::search::verify_witness;
use super::FszWitness;

/// Whether `G_m(u, g)` computed in `group` equals the one computed in `sub`.
pub fn gm_sets_agree(
    group: &PermGroup,
    sub: &PermGroup,
    u: &Perm,
    g: &Perm,
    m: u64,
) -> Result<bool, FszError> {
    if !sub.is_subgroup_of(group) {
        return Err(GroupError::NotSubgroup.into());
    }
    let big: BTreeSet<Perm> = gm_set(group, u, g, m).collect();
    let small: BTreeSet<Perm> = gm_set(sub, u, g, m).collect();
    Ok(big == small)
}

/// Checks the hypotheses (normality, coprime index, a witness that
/// re-verifies in `sub`) and then compares `G_m(u, g)` and `G_m(u, g^n)`
/// with their counterparts in `sub` element for element. `true` certifies
/// that `group` is not FSZ_m.
pub fn check_coprime_normal_reduction(
    group: &PermGroup,
    sub: &PermGroup,
    w: &FszWitness,
) -> Result<bool, FszError> {
    if !is_normal(group, sub) {
        return Err(FszError::NotNormal);
    }
    let index: BigUint = group.order() / sub.order();
    if !BigUint::from(w.m).gcd(&index).is_one() {
        return Err(FszError::IndexNotCoprime {
            m: w.m,
            index: index.to_u64().unwrap_or(u64::MAX),
        });
    }
    verify_witness(sub, w)?;
    let gn = w.g.pow_u64(w.n);
    Ok(gm_sets_agree(group, sub, &w.u, &w.g, w.m)? && gm_sets_agree(group, sub, &w.u, &gn, w.m)?)
}
