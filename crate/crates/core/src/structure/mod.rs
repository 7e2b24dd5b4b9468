//! Structural computations inside a permutation group.

mod classes;
mod search;
mod subgroups;
mod sylow;

pub use classes::{
    ClassMembers, ClassTable, ConjClass, PowerContext, RationalClass, CLASS_TABLE_LIMIT,
};
pub use subgroups::{
    center, center_with, centralizer, centralizer_with, normalizer, normalizer_with, Method,
    BRUTE_FORCE_ORDER_LIMIT,
};
pub use sylow::sylow_subgroup;

use crate::arith::factorize;
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Perm;

pub fn conjugacy_classes(group: &PermGroup) -> Result<Vec<ConjClass>, GroupError> {
    Ok(ClassTable::new(group)?.classes().to_vec())
}

pub fn class_members(class: &ConjClass) -> ClassMembers {
    class.members()
}

pub fn rational_classes(group: &PermGroup) -> Result<Vec<RationalClass>, GroupError> {
    Ok(ClassTable::new(group)?.rational_classes())
}

/// Lcm of the class representative orders.
pub fn exponent(group: &PermGroup) -> Result<u64, GroupError> {
    if group.is_abelian() {
        // the exponent of an abelian group is the lcm of its generator orders
        return Ok(group
            .generators()
            .iter()
            .fold(1, |acc, g| num_integer::lcm(acc, g.order())));
    }
    Ok(ClassTable::new(group)?.exponent())
}

/// Class of `rep^m` for every class in `table`.
pub fn power_class_map(table: &ClassTable, m: u64) -> Vec<usize> {
    table.power_map(m)
}

/// `Some((p, e))` when the order is `p^e` with `e >= 1`.
pub fn p_group_shape(group: &PermGroup) -> Option<(u64, u32)> {
    let f = factorize(group.order_u64()?);
    match f.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Whether every conjugate of `h`'s generators by `g`'s generators stays in `h`.
pub fn is_normal(group: &PermGroup, sub: &PermGroup) -> bool {
    sub.is_subgroup_of(group) && sub.is_normalized_by(group)
}

/// `[G : H]` for a subgroup `H`.
pub fn index(group: &PermGroup, sub: &PermGroup) -> Option<u64> {
    Some(group.order_u64()? / sub.order_u64()?)
}

pub(crate) fn sorted_by_order_then_size(classes: &mut [RationalClass]) {
    classes.sort_by_key(|c| (c.element_order, c.size));
}

#[allow(dead_code)]
pub(crate) fn is_central(group: &PermGroup, x: &Perm) -> bool {
    group.generators().iter().all(|s| s.commutes_with(x))
}
