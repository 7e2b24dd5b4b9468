//! Counting `G_m(u, g)` and deciding the FSZ_m properties.
//!
//! Everything is decided from the definition: a group fails FSZ_m exactly
//! when some commuting `u, g` and some `n` coprime to `o(g)` give
//! `|G_m(u, g)| != |G_m(u, g^n)|`. Since `G_m(u, g)` lies in `C = C_G(g)`
//! and `g` is central there, all counting happens inside centralisers.
//!
//! Test loops follow a fixed contract:
//! - `g` runs over rational class representatives whose order is not in
//!   `{1, 2, 3, 4, 6}`, by ascending order and then class size;
//! - `m` runs over [`divisor_candidates`]`(exp(C), o(g))`;
//! - `u` runs over rational class representatives of `C`;
//! - `n` runs over the coprime residues modulo `o(g)` other than 1.
//!
//! That this bounded search decides FSZ for every `m` is a result from the
//! literature on higher indicators, adopted here without proof.

mod count;
mod reduction;
mod screen;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

pub use count::{
    count_gm_class_filtered, count_gm_class_filtered_in, count_gm_naive, counts_for_query,
    counts_for_query_with, gm_set, GmSet, CLASS_FILTER_ORDER_LIMIT,
};
pub use reduction::{check_coprime_normal_reduction, gm_sets_agree};
pub use screen::{screen_fsz, screen_fsz_with, SMALL_ORDER_BOUND};
pub use search::{
    divisor_candidates, find_witness, find_witness_with, test_fsz, test_fsz_center,
    test_fsz_center_with, test_fsz_with, verify_witness, witness_scan, EXCLUDED_ORDERS,
};

use crate::error::FszError;
use crate::perm::Perm;

/// One comparison `|G_m(u, g)|` against `|G_m(u, g^n)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmQuery {
    pub u: Perm,
    pub g: Perm,
    pub m: u64,
    pub n: u64,
}

/// A violation of FSZ_m: `count_g = |G_m(u, g)|` differs from
/// `count_gn = |G_m(u, g^n)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FszWitness {
    pub g: Perm,
    pub u: Perm,
    pub m: u64,
    pub n: u64,
    pub count_g: u64,
    pub count_gn: u64,
}

impl FszWitness {
    pub fn query(&self) -> GmQuery {
        GmQuery {
            u: self.u.clone(),
            g: self.g.clone(),
            m: self.m,
            n: self.n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FszStatus {
    Fsz,
    NotFsz(FszWitness),
    Inconclusive,
}

impl FszStatus {
    pub fn label(&self) -> &'static str {
        match self {
            FszStatus::Fsz => "FSZ",
            FszStatus::NotFsz(_) => "NOT_FSZ",
            FszStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Which procedure settled the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ScreenAbelian,
    ScreenSmallOrder,
    /// `p`-group of order `p^e` with `p >= e` or exponent `p`.
    ScreenRegularPGroup,
    /// 2-groups below `2^10` or of exponent below 64, 3-groups below `3^8`
    /// or of exponent below 27.
    ScreenSmallPGroup,
    ScreenExponent,
    /// Centre-only counting on a `p`-group where every proper centraliser is
    /// already known to be FSZ.
    ScreenCentralMinimal,
    ScreenInconclusive,
    CenterTest,
    FullTest,
    WitnessScan,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ScreenAbelian => "screen: abelian",
            Provenance::ScreenSmallOrder => "screen: order below 2016 and not 1024",
            Provenance::ScreenRegularPGroup => "screen: p-group with p >= e or exponent p",
            Provenance::ScreenSmallPGroup => "screen: small 2-group or 3-group bound",
            Provenance::ScreenExponent => "screen: exponent criterion",
            Provenance::ScreenCentralMinimal => {
                "screen: centre-only count, conclusive by minimality"
            }
            Provenance::ScreenInconclusive => "screen: no criterion applies",
            Provenance::CenterTest => "centre-only counting test",
            Provenance::FullTest => "full rational-class counting test",
            Provenance::WitnessScan => "witness scan, central classes first",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FszVerdict {
    pub status: FszStatus,
    /// Every `m` for which at least one comparison was made.
    pub tested_m: BTreeSet<u64>,
    /// Number of `(g, m, u, n)` comparisons made.
    pub comparisons: u64,
    pub provenance: Provenance,
}

impl FszVerdict {
    pub(crate) fn decided(status: FszStatus, provenance: Provenance) -> Self {
        FszVerdict {
            status,
            tested_m: BTreeSet::new(),
            comparisons: 0,
            provenance,
        }
    }

    pub fn is_fsz(&self) -> bool {
        self.status == FszStatus::Fsz
    }

    pub fn witness(&self) -> Option<&FszWitness> {
        match &self.status {
            FszStatus::NotFsz(w) => Some(w),
            _ => None,
        }
    }
}

/// Knobs for the counting tests.
#[derive(Clone, Debug)]
pub struct TestOptions {
    /// Run [`screen_fsz`] on the group (and on each centraliser) first.
    pub screen: bool,
    /// Worker threads; the verdict does not depend on this.
    pub workers: usize,
    /// Restrict `m` to this set, intersected with the divisor candidates.
    pub m_filter: Option<Vec<u64>>,
    /// Cap on the number of group elements examined while counting.
    pub budget: Option<u64>,
}

impl Default for TestOptions {
    fn default() -> Self {
        TestOptions {
            screen: true,
            workers: 1,
            m_filter: None,
            budget: None,
        }
    }
}

/// Shared element-scan counter.
#[derive(Debug, Default)]
pub(crate) struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub(crate) fn unlimited() -> Self {
        Budget::new(None)
    }

    pub(crate) fn charge(&self, n: u64) -> Result<(), FszError> {
        let Some(limit) = self.limit else {
            return Ok(());
        };
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if used > limit {
            return Err(FszError::BudgetExceeded { budget: limit });
        }
        Ok(())
    }
}
