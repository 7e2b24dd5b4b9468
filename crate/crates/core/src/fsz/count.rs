//! Counters for `|G_m(u, g)|`.

use crate::error::{FszError, GroupError};
use crate::group::{ElementStream, PermGroup};
use crate::perm::Perm;
use crate::structure::{centralizer, ClassTable};

use super::{Budget, GmQuery};

/// Largest centraliser order for which [`counts_for_query`] builds a class
/// table; above it the count streams the centraliser.
pub const CLASS_FILTER_ORDER_LIMIT: u64 = 1 << 22;

/// Candidate lists are kept in memory while they hold at most this many points.
const MATERIALIZE_LIMIT: u64 = 1 << 25;

/// Single pass over `source` returning `(|{a : a^m = (a u^-1)^m = g}|, the
/// same for g^n)`. Memory use is constant. Rejects `g^n = g`.
pub fn count_gm_naive<I>(
    source: I,
    u: &Perm,
    g: &Perm,
    m: u64,
    n: u64,
) -> Result<(u64, u64), FszError>
where
    I: IntoIterator<Item = Perm>,
{
    count_naive_budgeted(source, u, g, m, n, &Budget::unlimited())
}

pub(crate) fn count_naive_budgeted<I>(
    source: I,
    u: &Perm,
    g: &Perm,
    m: u64,
    n: u64,
    budget: &Budget,
) -> Result<(u64, u64), FszError>
where
    I: IntoIterator<Item = Perm>,
{
    if m == 0 {
        return Err(FszError::ZeroM);
    }
    check_degree(u, g)?;
    let gn = g.pow_u64(n);
    if gn == *g {
        return Err(FszError::DegenerateQuery { n });
    }
    let u_inv = u.inverse();
    let mut counts = (0, 0);
    for a in source {
        budget.charge(1)?;
        check_degree(&a, g)?;
        let am = a.pow_u64(m);
        let slot = if am == *g {
            &mut counts.0
        } else if am == gn {
            &mut counts.1
        } else {
            continue;
        };
        if a.compose_unchecked(&u_inv).pow_u64(m) == am {
            *slot += 1;
        }
    }
    Ok(counts)
}

fn check_degree(a: &Perm, b: &Perm) -> Result<(), FszError> {
    if a.degree() != b.degree() {
        return Err(GroupError::from(crate::error::PermError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        })
        .into());
    }
    Ok(())
}

fn is_central(group: &PermGroup, g: &Perm) -> bool {
    g.degree() == group.degree()
        && group.contains(g)
        && group.generators().iter().all(|s| s.commutes_with(g))
}

/// `|C_m(u, g)|` scanning only the classes of `c` whose representative's
/// `m`-th power is `g`. Requires `g` central in `c`, which holds for
/// `c = C_G(g)`.
pub fn count_gm_class_filtered(c: &PermGroup, u: &Perm, g: &Perm, m: u64) -> Result<u64, FszError> {
    if !is_central(c, g) {
        return Err(FszError::NotCentral);
    }
    let table = ClassTable::new(c)?;
    count_gm_class_filtered_in(&table, u, g, m)
}

/// [`count_gm_class_filtered`] with a prebuilt class table.
pub fn count_gm_class_filtered_in(
    table: &ClassTable,
    u: &Perm,
    g: &Perm,
    m: u64,
) -> Result<u64, FszError> {
    if m == 0 {
        return Err(FszError::ZeroM);
    }
    check_degree(u, g)?;
    if !is_central(table.group(), g) {
        return Err(FszError::NotCentral);
    }
    let cands = Candidates::new(table, std::slice::from_ref(g), m, false);
    cands.count(table, 0, &u.inverse(), m, &Budget::unlimited())
}

/// Members of the classes of a centraliser `C` whose `m`-th power is one of
/// a list of central targets. Because each target is central, a class
/// either lies entirely in `{a : a^m = target}` or misses it.
pub(crate) struct Candidates {
    targets: Vec<Perm>,
    classes: Vec<Vec<usize>>,
    members: Option<Vec<Vec<Perm>>>,
}

impl Candidates {
    pub(crate) fn new(table: &ClassTable, targets: &[Perm], m: u64, materialize: bool) -> Self {
        let mut classes = vec![Vec::new(); targets.len()];
        for (k, class) in table.classes().iter().enumerate() {
            let power = class.representative().pow_u64(m);
            if let Some(t) = targets.iter().position(|t| *t == power) {
                classes[t].push(k);
            }
        }
        let total: u64 = classes
            .iter()
            .flatten()
            .map(|&k| table.classes()[k].size())
            .sum();
        let degree = table.group().degree() as u64;
        let members =
            (materialize && total.saturating_mul(degree) <= MATERIALIZE_LIMIT).then(|| {
                classes
                    .iter()
                    .map(|ks| {
                        ks.iter()
                            .flat_map(|&k| table.classes()[k].members())
                            .collect()
                    })
                    .collect()
            });
        Candidates {
            targets: targets.to_vec(),
            classes,
            members,
        }
    }

    /// `#{a : a^m = target_t, (a u^-1)^m = target_t}`.
    pub(crate) fn count(
        &self,
        table: &ClassTable,
        t: usize,
        u_inv: &Perm,
        m: u64,
        budget: &Budget,
    ) -> Result<u64, FszError> {
        let target = &self.targets[t];
        let mut count = 0;
        let mut scratch = Perm::identity(u_inv.degree());
        let mut check = |a: &Perm| -> Result<(), FszError> {
            budget.charge(1)?;
            a.compose_into(u_inv, &mut scratch);
            if scratch.pow_u64(m) == *target {
                count += 1;
            }
            Ok(())
        };
        match &self.members {
            Some(lists) => lists[t].iter().try_for_each(&mut check)?,
            None => {
                for &k in &self.classes[t] {
                    table.classes()[k].members().try_for_each(|a| check(&a))?;
                }
            }
        }
        Ok(count)
    }
}

/// Validates a query against `group` and returns `g^n`.
fn validate(group: &PermGroup, q: &GmQuery) -> Result<Perm, FszError> {
    if q.m == 0 {
        return Err(FszError::ZeroM);
    }
    for x in [&q.u, &q.g] {
        if x.degree() != group.degree() || !group.contains(x) {
            return Err(GroupError::NotMember {
                element: x.to_string(),
            }
            .into());
        }
    }
    let order = q.g.order();
    if num_integer::gcd(q.n, order) != 1 {
        return Err(FszError::NotCoprime { n: q.n, order });
    }
    let gn = q.g.pow_u64(q.n);
    if gn == q.g {
        return Err(FszError::DegenerateQuery { n: q.n });
    }
    Ok(gn)
}

/// `(|G_m(u, g)|, |G_m(u, g^n)|)` counted inside `C_G(g)`: class-filtered
/// when the centraliser is small enough for a class table, streamed
/// otherwise.
pub fn counts_for_query(group: &PermGroup, q: &GmQuery) -> Result<(u64, u64), FszError> {
    counts_for_query_with(group, q, None)
}

/// [`counts_for_query`] with an optional cap on elements examined.
pub fn counts_for_query_with(
    group: &PermGroup,
    q: &GmQuery,
    budget: Option<u64>,
) -> Result<(u64, u64), FszError> {
    let gn = validate(group, q)?;
    if !q.u.commutes_with(&q.g) {
        return Ok((0, 0));
    }
    let budget = Budget::new(budget);
    let c = centralizer(group, &q.g)?;
    if c.order_u64().is_some_and(|o| o <= CLASS_FILTER_ORDER_LIMIT) {
        let table = ClassTable::new(&c)?;
        let cands = Candidates::new(&table, &[q.g.clone(), gn], q.m, false);
        let u_inv = q.u.inverse();
        return Ok((
            cands.count(&table, 0, &u_inv, q.m, &budget)?,
            cands.count(&table, 1, &u_inv, q.m, &budget)?,
        ));
    }
    count_naive_budgeted(c.elements(), &q.u, &q.g, q.m, q.n, &budget)
}

/// Stream of `G_m(u, g)`, drawn from `C_G(g)`.
pub struct GmSet {
    stream: Option<ElementStream>,
    u_inv: Perm,
    g: Perm,
    m: u64,
}

impl Iterator for GmSet {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let stream = self.stream.as_mut()?;
        for a in stream.by_ref() {
            let am = a.pow_u64(self.m);
            if am == self.g && a.compose_unchecked(&self.u_inv).pow_u64(self.m) == self.g {
                return Some(a);
            }
        }
        None
    }
}

/// All `a` in `group` with `a^m = (a u^-1)^m = g`. Empty when `g` is not in
/// the group, or when `u` is a member not commuting with `g`.
pub fn gm_set(group: &PermGroup, u: &Perm, g: &Perm, m: u64) -> GmSet {
    let same_degree = u.degree() == group.degree() && g.degree() == group.degree();
    let stream = (same_degree && !(group.contains(u) && !u.commutes_with(g)))
        .then(|| centralizer(group, g).ok())
        .flatten()
        .map(|c| c.elements());
    GmSet {
        stream,
        u_inv: u.inverse(),
        g: g.clone(),
        m,
    }
}
