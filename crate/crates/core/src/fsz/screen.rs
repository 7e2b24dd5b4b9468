//! Cheap sufficient conditions for FSZ.

use log::debug;

use crate::arith::factorize;
use crate::group::PermGroup;
use crate::structure::{exponent, p_group_shape, CLASS_TABLE_LIMIT};

use super::search::test_fsz_center_with;
use super::{FszStatus, FszVerdict, Provenance, TestOptions};

/// Groups below this order are FSZ, except possibly those of order 1024.
pub const SMALL_ORDER_BOUND: u64 = 2016;

/// Returns FSZ when a known criterion applies, INCONCLUSIVE otherwise.
///
/// For `p`-groups of order `2^10`, `3^8` and `p^(p+1)` (`p > 3`) that escape
/// the other criteria, every proper centraliser is FSZ, so a failure can
/// only happen at a central element; the centre-only count then decides the
/// group either way, and its witness is returned as NOT_FSZ.
pub fn screen_fsz(group: &PermGroup) -> FszVerdict {
    screen_fsz_with(group, &TestOptions::default())
}

/// [`screen_fsz`] with the worker count and budget of `opts` applied to the
/// centre-only count.
pub fn screen_fsz_with(group: &PermGroup, opts: &TestOptions) -> FszVerdict {
    let inconclusive =
        || FszVerdict::decided(FszStatus::Inconclusive, Provenance::ScreenInconclusive);
    let fsz = |p| FszVerdict::decided(FszStatus::Fsz, p);
    if group.is_abelian() {
        return fsz(Provenance::ScreenAbelian);
    }
    let Some(order) = group.order_u64() else {
        return inconclusive();
    };
    if order < SMALL_ORDER_BOUND && order != 1024 {
        return fsz(Provenance::ScreenSmallOrder);
    }
    if order > CLASS_TABLE_LIMIT {
        return inconclusive();
    }
    let Ok(exp) = exponent(group) else {
        return inconclusive();
    };
    match p_group_shape(group) {
        Some((p, e)) => {
            if p >= u64::from(e) || exp == p {
                return fsz(Provenance::ScreenRegularPGroup);
            }
            let central = match p {
                2 if e < 10 || exp < 64 => return fsz(Provenance::ScreenSmallPGroup),
                3 if e < 8 || exp < 27 => return fsz(Provenance::ScreenSmallPGroup),
                2 => e == 10,
                3 => e == 8,
                _ => u64::from(e) == p + 1,
            };
            if !central {
                return inconclusive();
            }
            debug!("screen: centre-only count on a group of order {p}^{e}");
            let opts = TestOptions {
                screen: false,
                m_filter: None,
                ..opts.clone()
            };
            match test_fsz_center_with(group, &opts, true) {
                Ok(mut v) => {
                    v.provenance = Provenance::ScreenCentralMinimal;
                    v
                }
                Err(_) => inconclusive(),
            }
        }
        None => {
            let (mut a, mut b, mut others_squarefree) = (0, 0, true);
            for (q, k) in factorize(exp) {
                match q {
                    2 => a = k,
                    3 => b = k,
                    _ => others_squarefree &= k < 2,
                }
            }
            if others_squarefree && ((a < 4 && b < 4) || (a < 6 && b < 2)) {
                fsz(Provenance::ScreenExponent)
            } else {
                inconclusive()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, CatalogSpec};

    fn screen(spec: &str) -> FszVerdict {
        screen_fsz(&make(&spec.parse::<CatalogSpec>().unwrap()).unwrap())
    }

    #[test]
    fn abelian_and_small() {
        assert_eq!(
            screen("product:cyclic:81,cyclic:81").provenance,
            Provenance::ScreenAbelian
        );
        assert_eq!(
            screen("dihedral:1000").provenance,
            Provenance::ScreenSmallOrder
        );
        assert_eq!(screen("wreath:3").provenance, Provenance::ScreenSmallOrder);
        assert!(screen("dihedral:1000").is_fsz());
    }

    #[test]
    fn order_1024_is_not_waved_through() {
        let v = screen("semidihedral:1024");
        // order 2^10 with exponent 512: the centre-only count decides it
        assert_eq!(v.provenance, Provenance::ScreenCentralMinimal);
        assert!(v.is_fsz());
    }

    #[test]
    fn exponent_criterion() {
        // S_7 has exponent 420 = 2^2 * 3 * 5 * 7
        let v = screen("symmetric:7");
        assert_eq!(v.provenance, Provenance::ScreenExponent);
        assert!(v.is_fsz());
        // dihedral of order 2^6 * 7^2 has exponent 2^5 * 7^2
        assert_eq!(screen("dihedral:3136").status, FszStatus::Inconclusive);
    }

    #[test]
    fn p_group_branches() {
        // Z_5 wr Z_5: order 5^6 = p^(p+1), exponent 25
        let v = screen("wreath:5");
        assert_eq!(v.provenance, Provenance::ScreenCentralMinimal);
        assert!(v.is_fsz());
        // Q_2048: order 2^11, beyond every 2-group criterion that applies
        assert_eq!(screen("quaternion:2048").status, FszStatus::Inconclusive);
        // semidihedral of order 2^11 is also beyond reach
        assert_eq!(screen("semidihedral:2048").status, FszStatus::Inconclusive);
        // order 2^12 but exponent 32
        assert_eq!(
            screen("product:quaternion:64,dihedral:64").provenance,
            Provenance::ScreenSmallPGroup
        );
    }
}
