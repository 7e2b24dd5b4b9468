//! The counting tests: full, centre-only, witness search and scan.

use std::collections::BTreeSet;

use log::{debug, info};
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{divisors, prime_residues};
use crate::error::FszError;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::{
    center, centralizer, exponent, sorted_by_order_then_size, ClassTable, RationalClass,
};

use super::count::{count_naive_budgeted, Candidates};
use super::{screen_fsz_with, Budget, FszStatus, FszVerdict, FszWitness, Provenance, TestOptions};

/// Orders of `g`, and values of `gcd(m, o(g))`, that can never witness a
/// failure of FSZ_m.
pub const EXCLUDED_ORDERS: [u64; 5] = [1, 2, 3, 4, 6];

/// Divisors `m` of `c_exponent / g_order` with `gcd(m, g_order)` outside
/// [`EXCLUDED_ORDERS`]. An empty list means `g` cannot witness a failure.
pub fn divisor_candidates(c_exponent: u64, g_order: u64) -> Result<Vec<u64>, FszError> {
    if g_order == 0 || !c_exponent.is_multiple_of(g_order) {
        return Err(FszError::NotDivisor {
            g_order,
            exponent: c_exponent,
        });
    }
    Ok(divisors(c_exponent / g_order)
        .into_iter()
        .filter(|m| !EXCLUDED_ORDERS.contains(&m.gcd(&g_order)))
        .collect())
}

/// Runs the comparisons for central elements of one counting group.
struct Engine<'a> {
    opts: &'a TestOptions,
    budget: Budget,
    pool: Option<rayon::ThreadPool>,
    tested_m: BTreeSet<u64>,
    comparisons: u64,
}

impl<'a> Engine<'a> {
    fn new(opts: &'a TestOptions) -> Self {
        let pool = (opts.workers > 1)
            .then(|| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.workers)
                    .build()
                    .ok()
            })
            .flatten();
        Engine {
            opts,
            budget: Budget::new(opts.budget),
            pool,
            tested_m: BTreeSet::new(),
            comparisons: 0,
        }
    }

    fn m_values(&self, candidates: Vec<u64>) -> Vec<u64> {
        match &self.opts.m_filter {
            Some(filter) => candidates
                .into_iter()
                .filter(|m| filter.contains(m))
                .collect(),
            None => candidates,
        }
    }

    fn verdict(self, status: FszStatus, provenance: Provenance) -> FszVerdict {
        FszVerdict {
            status,
            tested_m: self.tested_m,
            comparisons: self.comparisons,
            provenance,
        }
    }

    /// First witness at `g`, which must be central in `table.group()`, over
    /// the given `m`, every rational class representative `u` and every
    /// coprime `n != 1`. Witnesses are re-counted before being returned.
    fn scan_central(
        &mut self,
        table: &ClassTable,
        g: &Perm,
        ms: &[u64],
    ) -> Result<Option<FszWitness>, FszError> {
        let residues = distinct_residues(table, g);
        if residues.is_empty() || ms.is_empty() {
            return Ok(None);
        }
        let mut targets = vec![g.clone()];
        targets.extend(residues.iter().map(|&n| g.pow_u64(n)));
        let mut u_classes = table.rational_classes();
        sorted_by_order_then_size(&mut u_classes);
        let us: Vec<Perm> = u_classes.into_iter().map(|c| c.representative).collect();

        for &m in ms {
            self.tested_m.insert(m);
            self.comparisons += (us.len() * residues.len()) as u64;
            debug!(
                "g of order {}, m = {m}: {} u, {} n",
                g.order(),
                us.len(),
                residues.len()
            );
            let cands = Candidates::new(table, &targets, m, true);
            let budget = &self.budget;
            let eval = |u: &Perm| -> Result<Option<FszWitness>, FszError> {
                let u_inv = u.inverse();
                let count_g = cands.count(table, 0, &u_inv, m, budget)?;
                for (t, &n) in residues.iter().enumerate() {
                    let count_gn = cands.count(table, t + 1, &u_inv, m, budget)?;
                    if count_gn != count_g {
                        return Ok(Some(FszWitness {
                            g: g.clone(),
                            u: u.clone(),
                            m,
                            n,
                            count_g,
                            count_gn,
                        }));
                    }
                }
                Ok(None)
            };
            let keep = |r: Result<Option<FszWitness>, FszError>| match r {
                Ok(None) => None,
                other => Some(other),
            };
            let found = match &self.pool {
                Some(pool) => pool.install(|| us.par_iter().map(eval).find_map_first(keep)),
                None => us.iter().map(eval).find_map(keep),
            };
            if let Some(result) = found {
                let w = result?.expect("only witnesses are kept");
                recount(table.group(), &w, &self.budget)?;
                info!(
                    "witness: g = {}, u = {}, m = {}, n = {}",
                    w.g, w.u, w.m, w.n
                );
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// Coprime residues `n != 1` modulo `o(g)`, one per class of `g^n` in the
/// table, smallest first. For central `g` every residue is its own class.
fn distinct_residues(table: &ClassTable, g: &Perm) -> Vec<u64> {
    let mut seen = vec![table.class_of(g)];
    let mut out = Vec::new();
    for n in prime_residues(g.order()) {
        let k = table.class_of(&g.pow_u64(n));
        if !seen.contains(&k) {
            seen.push(k);
            out.push(n);
        }
    }
    out
}

/// Re-counts a witness naively over `c` and checks it against the record.
fn recount(c: &PermGroup, w: &FszWitness, budget: &Budget) -> Result<(), FszError> {
    let (count_g, count_gn) = count_naive_budgeted(c.elements(), &w.u, &w.g, w.m, w.n, budget)?;
    if (count_g, count_gn) != (w.count_g, w.count_gn) || count_g == count_gn {
        return Err(FszError::WitnessMismatch {
            recorded_g: w.count_g,
            recorded_gn: w.count_gn,
            count_g,
            count_gn,
        });
    }
    Ok(())
}

/// Re-counts `w` from scratch inside `C_G(g)` of `group`.
pub fn verify_witness(group: &PermGroup, w: &FszWitness) -> Result<(), FszError> {
    let c = centralizer(group, &w.g)?;
    recount(&c, w, &Budget::unlimited())
}

/// Rational classes of `group` that can witness a failure, in search order.
fn candidate_classes(table: &ClassTable) -> Vec<RationalClass> {
    let mut classes: Vec<RationalClass> = table
        .rational_classes()
        .into_iter()
        .filter(|c| !EXCLUDED_ORDERS.contains(&c.element_order))
        .collect();
    sorted_by_order_then_size(&mut classes);
    classes
}

pub fn test_fsz(group: &PermGroup) -> Result<FszVerdict, FszError> {
    test_fsz_with(group, &TestOptions::default())
}

/// The full test: screen (optional), then every rational class.
pub fn test_fsz_with(group: &PermGroup, opts: &TestOptions) -> Result<FszVerdict, FszError> {
    if opts.screen {
        let v = screen_fsz_with(group, opts);
        if v.status != FszStatus::Inconclusive {
            return Ok(v);
        }
    }
    let mut engine = Engine::new(opts);
    let table = ClassTable::new(group)?;
    for rc in candidate_classes(&table) {
        let g = &rc.representative;
        let c = centralizer(group, g)?;
        let ms = engine.m_values(divisor_candidates(exponent(&c)?, rc.element_order)?);
        if ms.is_empty() {
            continue;
        }
        if opts.screen && screen_fsz_with(&c, opts).is_fsz() {
            continue;
        }
        let own_table;
        let c_table = if c.order() == group.order() {
            &table
        } else {
            own_table = ClassTable::new(&c)?;
            &own_table
        };
        if let Some(w) = engine.scan_central(c_table, g, &ms)? {
            return Ok(engine.verdict(FszStatus::NotFsz(w), Provenance::FullTest));
        }
    }
    Ok(engine.verdict(FszStatus::Fsz, Provenance::FullTest))
}

pub fn test_fsz_center(group: &PermGroup) -> Result<FszVerdict, FszError> {
    test_fsz_center_with(group, &TestOptions::default(), false)
}

/// Counts only at central `g`, with `C = G`. A witness is conclusive; a pass
/// is reported as FSZ only when `assume_minimal` asserts that every proper
/// centraliser is already known to be FSZ.
pub fn test_fsz_center_with(
    group: &PermGroup,
    opts: &TestOptions,
    assume_minimal: bool,
) -> Result<FszVerdict, FszError> {
    let mut engine = Engine::new(opts);
    let z = center(group);
    let z_classes = candidate_classes(&ClassTable::new(&z)?);
    let mut table: Option<ClassTable> = None;
    for rc in z_classes {
        if table.is_none() {
            table = Some(ClassTable::new(group)?);
        }
        let t = table.as_ref().expect("built above");
        let ms = engine.m_values(divisor_candidates(t.exponent(), rc.element_order)?);
        if let Some(w) = engine.scan_central(t, &rc.representative, &ms)? {
            return Ok(engine.verdict(FszStatus::NotFsz(w), Provenance::CenterTest));
        }
    }
    let status = if assume_minimal {
        FszStatus::Fsz
    } else {
        FszStatus::Inconclusive
    };
    Ok(engine.verdict(status, Provenance::CenterTest))
}

/// First `(u, n)` with `|C_m(u, g)| != |C_m(u, g^n)|` in `C = C_G(g)`, `u`
/// over rational class representatives of `C` and `n` over the coprime
/// residues modulo `o(g)`.
pub fn find_witness(group: &PermGroup, m: u64, g: &Perm) -> Result<Option<(Perm, u64)>, FszError> {
    Ok(find_witness_with(group, m, g, &TestOptions::default())?.map(|w| (w.u, w.n)))
}

pub fn find_witness_with(
    group: &PermGroup,
    m: u64,
    g: &Perm,
    opts: &TestOptions,
) -> Result<Option<FszWitness>, FszError> {
    if m == 0 {
        return Err(FszError::ZeroM);
    }
    let c = centralizer(group, g)?;
    let table = ClassTable::new(&c)?;
    Engine::new(opts).scan_central(&table, g, &[m])
}

/// Witness search over every rational class of `group`, central classes
/// first. Uses the `m` values of `opts.m_filter` as given, or the divisor
/// candidates when there is no filter, in which case a clean scan is the
/// full test and reports FSZ.
pub fn witness_scan(group: &PermGroup, opts: &TestOptions) -> Result<FszVerdict, FszError> {
    let mut engine = Engine::new(opts);
    let table = ClassTable::new(group)?;
    let (central, rest): (Vec<_>, Vec<_>) = candidate_classes(&table)
        .into_iter()
        .partition(|rc| rc.size == rc.classes.len() as u64);
    for rc in central.into_iter().chain(rest) {
        let g = &rc.representative;
        let c = centralizer(group, g)?;
        let ms = match &opts.m_filter {
            Some(list) => list.clone(),
            None => divisor_candidates(exponent(&c)?, rc.element_order)?,
        };
        if ms.contains(&0) {
            return Err(FszError::ZeroM);
        }
        if ms.is_empty() {
            continue;
        }
        let own_table;
        let c_table = if c.order() == group.order() {
            &table
        } else {
            own_table = ClassTable::new(&c)?;
            &own_table
        };
        if let Some(w) = engine.scan_central(c_table, g, &ms)? {
            return Ok(engine.verdict(FszStatus::NotFsz(w), Provenance::WitnessScan));
        }
    }
    let status = if opts.m_filter.is_some() {
        FszStatus::Inconclusive
    } else {
        FszStatus::Fsz
    };
    Ok(engine.verdict(status, Provenance::WitnessScan))
}
