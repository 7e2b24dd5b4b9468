//! Permutation groups given by generators, backed by a lazily built
//! stabiliser chain.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;

use crate::chain::StabChain;
use crate::error::GroupError;
use crate::perm::Perm;

/// Default cap on the number of points a group may act on.
pub const DEFAULT_MAX_DEGREE: usize = 20_000;

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

/// An immutable permutation group; clones share the same chain.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        Self::with_max_degree(degree, generators, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(
        degree: usize,
        generators: Vec<Perm>,
        max_degree: usize,
    ) -> Result<Self, GroupError> {
        if degree > max_degree {
            return Err(GroupError::DegreeCap {
                degree,
                cap: max_degree,
            });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(crate::error::PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        Ok(Self::from_parts(degree, generators))
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Perm>) -> Self {
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain: OnceLock::new(),
            }),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    /// The subgroup generated by `generators`, which must all be members.
    pub fn subgroup(&self, generators: Vec<Perm>) -> Result<PermGroup, GroupError> {
        for g in &generators {
            if !self.contains(g) {
                return Err(GroupError::NotMember {
                    element: g.to_string(),
                });
            }
        }
        Ok(Self::from_parts(self.degree(), generators))
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    /// The stabiliser chain, built on first use.
    pub fn chain(&self) -> &StabChain {
        self.inner
            .chain
            .get_or_init(|| StabChain::build(self.inner.degree, &self.inner.generators))
    }

    pub fn order(&self) -> &BigUint {
        self.chain().order()
    }

    /// The order, when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.chain().order_u64()
    }

    pub(crate) fn order_within(&self, limit: u64) -> Result<u64, GroupError> {
        match self.order_u64() {
            Some(n) if n <= limit => Ok(n),
            _ => Err(GroupError::TooLarge {
                order: self.order().to_string(),
                limit,
            }),
        }
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain().contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.chain().is_empty()
    }

    /// Every element exactly once, in chain (mixed-radix) order.
    pub fn elements(&self) -> ElementStream {
        ElementStream::new(self.clone())
    }

    /// Position of `p` in [`PermGroup::elements`] order, or `None` if not a member.
    pub fn rank(&self, p: &Perm) -> Option<u64> {
        self.chain().rank(p)
    }

    pub fn unrank(&self, rank: u64) -> Perm {
        self.chain().unrank(rank)
    }

    /// Uniform random member: independent uniform coset choices per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let idx: Vec<usize> = self
            .chain()
            .levels()
            .iter()
            .map(|l| rng.gen_range(0..l.orbit().len()))
            .collect();
        self.chain().element_from_indices(&idx)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// Whether `self` is normalised by every generator of `ambient`.
    pub fn is_normalized_by(&self, ambient: &PermGroup) -> bool {
        ambient.generators().iter().all(|x| {
            self.generators()
                .iter()
                .all(|h| self.contains(&h.conjugate_by(x)))
        })
    }

    /// Points moved by at least one generator.
    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&p| self.generators().iter().any(|g| g.image(p) != p))
            .collect()
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("generators", &self.generators())
            .finish()
    }
}

/// Odometer over the chain transversals.
///
/// Holds one partial product per level, so memory is `O(levels × degree)`
/// regardless of the group order.
pub struct ElementStream {
    group: PermGroup,
    idx: Vec<usize>,
    /// `partial[l] = t_{k-1} ⋯ t_l`; `partial[k]` is the identity.
    partial: Vec<Perm>,
    remaining: Option<u64>,
    state: StreamState,
}

#[derive(PartialEq, Eq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

impl ElementStream {
    fn new(group: PermGroup) -> Self {
        let k = group.chain().len();
        let degree = group.degree();
        ElementStream {
            idx: vec![0; k],
            partial: vec![Perm::identity(degree); k + 1],
            remaining: group.order_u64(),
            group,
            state: StreamState::Fresh,
        }
    }

    fn refresh_from(&mut self, top: usize) {
        let levels = self.group.chain().levels();
        for l in (0..=top).rev() {
            let (lower, upper) = self.partial.split_at_mut(l + 1);
            upper[0].compose_into(&levels[l].rep(self.idx[l]), &mut lower[l]);
        }
    }
}

impl Iterator for ElementStream {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let k = self.idx.len();
        match self.state {
            StreamState::Done => return None,
            StreamState::Fresh => {
                self.state = StreamState::Running;
                if k > 0 {
                    self.refresh_from(k - 1);
                }
            }
            StreamState::Running => {
                let levels = self.group.chain().levels();
                let mut j = 0;
                loop {
                    if j == k {
                        self.state = StreamState::Done;
                        return None;
                    }
                    self.idx[j] += 1;
                    if self.idx[j] < levels[j].orbit().len() {
                        break;
                    }
                    self.idx[j] = 0;
                    j += 1;
                }
                self.refresh_from(j);
            }
        }
        if let Some(r) = self.remaining.as_mut() {
            *r = r.saturating_sub(1);
        }
        Some(self.partial[0].clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match (&self.state, self.remaining) {
            (StreamState::Done, _) => (0, Some(0)),
            (_, Some(r)) => match usize::try_from(r) {
                Ok(r) => (r, Some(r)),
                Err(_) => (usize::MAX, None),
            },
            _ => (usize::MAX, None),
        }
    }
}
