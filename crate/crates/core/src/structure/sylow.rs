//! Sylow subgroups by normaliser growth.
//!
//! Starting from the trivial group, a `p`-subgroup `P` that is not yet
//! Sylow always has a `p`-element of `N_G(P)` outside `P`; adjoining one
//! gives a larger `p`-subgroup. Candidates are the `p`-parts of seeded
//! random elements of the normaliser, with an exhaustive scan of the
//! normaliser as the fallback, so the result is reproducible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime, p_part};
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Perm;

use super::subgroups::normalizer;

const RANDOM_TRIES: usize = 64;
const SEED: u64 = 0x5eed_5170;

/// A Sylow `p`-subgroup of `group`.
pub fn sylow_subgroup(group: &PermGroup, p: u64) -> Result<PermGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let order = group.order_within(u64::MAX)?;
    let target = p_part(order, p);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ p);
    let mut gens: Vec<Perm> = Vec::new();
    let mut sylow = PermGroup::trivial(group.degree());
    while sylow.order_u64() != Some(target) {
        let norm = if gens.is_empty() {
            group.clone()
        } else {
            normalizer(group, &sylow)?
        };
        let fresh = |x: &Perm| {
            let y = p_element(x, p);
            (!sylow.contains(&y)).then_some(y)
        };
        let y = (0..RANDOM_TRIES)
            .find_map(|_| fresh(&norm.random_element(&mut rng)))
            .or_else(|| norm.elements().find_map(|x| fresh(&x)))
            .expect("a p-subgroup below Sylow order has a p-element outside it in its normaliser");
        gens.push(y);
        sylow = PermGroup::from_parts(group.degree(), gens.clone());
    }
    Ok(sylow)
}

/// The `p`-part `x^(o / p^a)` of `x`, where `p^a` is the `p`-part of its order.
fn p_element(x: &Perm, p: u64) -> Perm {
    let o = x.order();
    x.pow_u64(o / p_part(o, p))
}
