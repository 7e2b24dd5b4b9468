//! Centralisers, the centre and normalisers.

use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Perm;

use super::search::{subgroup_search, CommutingProperty, NormalizingProperty};

/// Groups below this order are searched by filtering the element stream.
pub const BRUTE_FORCE_ORDER_LIMIT: u64 = 100_000;

/// How a subgroup is found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Brute force below [`BRUTE_FORCE_ORDER_LIMIT`], backtrack otherwise.
    #[default]
    Auto,
    BruteForce,
    Backtrack,
}

impl Method {
    fn brute_force(self, group: &PermGroup) -> bool {
        match self {
            Method::Auto => group
                .order_u64()
                .is_some_and(|n| n < BRUTE_FORCE_ORDER_LIMIT),
            Method::BruteForce => true,
            Method::Backtrack => false,
        }
    }
}

/// `C_G(g)`. Errors when `g` is not in `G`.
pub fn centralizer(group: &PermGroup, g: &Perm) -> Result<PermGroup, GroupError> {
    centralizer_with(group, g, Method::Auto)
}

pub fn centralizer_with(
    group: &PermGroup,
    g: &Perm,
    method: Method,
) -> Result<PermGroup, GroupError> {
    if !group.contains(g) {
        return Err(GroupError::NotMember {
            element: g.to_string(),
        });
    }
    if group.generators().iter().all(|s| s.commutes_with(g)) {
        return Ok(group.clone());
    }
    Ok(commuting_subgroup(
        group,
        std::slice::from_ref(g),
        method,
        vec![g.clone()],
    ))
}

/// `Z(G)`.
pub fn center(group: &PermGroup) -> PermGroup {
    center_with(group, Method::Auto)
}

pub fn center_with(group: &PermGroup, method: Method) -> PermGroup {
    commuting_subgroup(group, group.generators(), method, Vec::new())
}

/// Elements of `group` commuting with every perm in `with`; `known` must
/// already lie in that subgroup.
pub(crate) fn commuting_subgroup(
    group: &PermGroup,
    with: &[Perm],
    method: Method,
    known: Vec<Perm>,
) -> PermGroup {
    if method.brute_force(group) {
        return filter_subgroup(group, known, |x| with.iter().all(|s| s.commutes_with(x)));
    }
    let mut prop = CommutingProperty::new(group.degree(), with.to_vec());
    let gens = subgroup_search(group, &mut prop, known);
    PermGroup::from_parts(group.degree(), gens)
}

/// `N_G(H)`. Errors when `H` is not a subgroup of `G`.
pub fn normalizer(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup, GroupError> {
    normalizer_with(group, sub, Method::Auto)
}

pub fn normalizer_with(
    group: &PermGroup,
    sub: &PermGroup,
    method: Method,
) -> Result<PermGroup, GroupError> {
    if !sub.is_subgroup_of(group) {
        return Err(GroupError::NotSubgroup);
    }
    let known = sub.generators().to_vec();
    if method.brute_force(group) {
        return Ok(filter_subgroup(group, known, |x| {
            sub.generators()
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(x)))
        }));
    }
    let mut prop = NormalizingProperty::new(sub.clone());
    let gens = subgroup_search(group, &mut prop, known);
    Ok(PermGroup::from_parts(group.degree(), gens))
}

/// Generators for `{x in group : keep(x)}`, assuming that set is a subgroup.
fn filter_subgroup(group: &PermGroup, known: Vec<Perm>, keep: impl Fn(&Perm) -> bool) -> PermGroup {
    let degree = group.degree();
    let mut gens: Vec<Perm> = known.into_iter().filter(|k| !k.is_identity()).collect();
    let mut current = PermGroup::from_parts(degree, gens.clone());
    for x in group.elements() {
        if keep(&x) && !current.contains(&x) {
            gens.push(x);
            current = PermGroup::from_parts(degree, gens.clone());
        }
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, CatalogSpec};
    use std::collections::HashSet;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|x| x - 1).collect())
            .collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn group(spec: &str) -> PermGroup {
        make(&spec.parse::<CatalogSpec>().unwrap()).unwrap()
    }

    fn brute_centralizer(g: &PermGroup, x: &Perm) -> HashSet<Perm> {
        g.elements().filter(|y| y.commutes_with(x)).collect()
    }

    #[test]
    fn centralizer_of_transposition_in_s4() {
        let s4 = group("symmetric:4");
        let t = perm(4, &[&[1, 2]]);
        for method in [Method::BruteForce, Method::Backtrack] {
            let c = centralizer_with(&s4, &t, method).unwrap();
            assert_eq!(c.order_u64(), Some(4));
            let elems: HashSet<Perm> = c.elements().collect();
            assert_eq!(elems, brute_centralizer(&s4, &t));
            assert!(c.contains(&perm(4, &[&[3, 4]])));
        }
    }

    #[test]
    fn centralizer_in_abelian_group_is_everything() {
        let g = group("product:cyclic:4,cyclic:6");
        let x = g.generators()[0].clone();
        let c = centralizer_with(&g, &x, Method::Backtrack).unwrap();
        assert_eq!(c.order_u64(), g.order_u64());
    }

    #[test]
    fn centralizer_rejects_non_members() {
        let a4 = group("alternating:4");
        assert!(centralizer(&a4, &perm(4, &[&[1, 2]])).is_err());
    }

    #[test]
    fn backtrack_agrees_with_brute_force() {
        for spec in [
            "symmetric:5",
            "wreath:3",
            "dihedral:24",
            "quaternion:16",
            "alternating:6",
        ] {
            let g = group(spec);
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
            for _ in 0..6 {
                let x = g.random_element(&mut rng);
                let a = centralizer_with(&g, &x, Method::Backtrack).unwrap();
                let b: HashSet<Perm> = brute_centralizer(&g, &x);
                assert_eq!(a.order_u64(), Some(b.len() as u64), "{spec} {x}");
                assert!(a.generators().iter().all(|y| b.contains(y)));
            }
        }
    }

    #[test]
    fn centers() {
        for method in [Method::BruteForce, Method::Backtrack] {
            assert_eq!(
                center_with(&group("quaternion:8"), method).order_u64(),
                Some(2)
            );
            assert_eq!(
                center_with(&group("symmetric:4"), method).order_u64(),
                Some(1)
            );
            assert_eq!(center_with(&group("wreath:3"), method).order_u64(), Some(3));
            assert_eq!(
                center_with(&group("dihedral:12"), method).order_u64(),
                Some(2)
            );
        }
    }

    #[test]
    fn wreath_three_center_by_brute_force() {
        let g = group("wreath:3");
        let gens = g.generators().to_vec();
        let n = g
            .elements()
            .filter(|x| gens.iter().all(|s| s.commutes_with(x)))
            .count();
        assert_eq!(n, 3);
    }

    #[test]
    fn normalizers() {
        let s3 = group("symmetric:3");
        let t = s3.subgroup(vec![perm(3, &[&[1, 2]])]).unwrap();
        let c3 = s3.subgroup(vec![perm(3, &[&[1, 2, 3]])]).unwrap();
        for method in [Method::BruteForce, Method::Backtrack] {
            assert_eq!(
                normalizer_with(&s3, &t, method).unwrap().order_u64(),
                Some(2)
            );
            assert_eq!(
                normalizer_with(&s3, &c3, method).unwrap().order_u64(),
                Some(6)
            );
        }
        let s4 = group("symmetric:4");
        let v4 = s4
            .subgroup(vec![
                perm(4, &[&[1, 2], &[3, 4]]),
                perm(4, &[&[1, 3], &[2, 4]]),
            ])
            .unwrap();
        assert_eq!(normalizer(&s4, &v4).unwrap().order_u64(), Some(24));
        assert!(normalizer(&s3, &group("symmetric:3")).is_ok());
        assert!(normalizer(&c3, &t).is_err());
    }

    #[test]
    fn normalizer_backtrack_matches_brute_force() {
        let s5 = group("symmetric:5");
        let h = s5.subgroup(vec![perm(5, &[&[1, 2, 3, 4, 5]])]).unwrap();
        let a = normalizer_with(&s5, &h, Method::Backtrack).unwrap();
        let b = normalizer_with(&s5, &h, Method::BruteForce).unwrap();
        assert_eq!(a.order_u64(), Some(20));
        assert_eq!(b.order_u64(), Some(20));
    }
}
