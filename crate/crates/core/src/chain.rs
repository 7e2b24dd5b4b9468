//! Deterministic Schreier–Sims.
//!
//! Each level stores its basic orbit as a Schreier tree. When the orbit is
//! small relative to the degree the coset representatives (and their
//! inverses) are cached as explicit permutations; otherwise they are traced
//! through the tree on demand, which keeps memory at O(levels × degree) for
//! large degrees.

use std::borrow::Cow;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::perm::Perm;

const ABSENT: u32 = u32::MAX;

/// Upper bound on cached `u32` image entries per level (reps plus inverses).
const CACHE_ENTRIES_PER_LEVEL: usize = 1 << 23;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    base: usize,
    gens: Vec<Perm>,
    gens_inv: Vec<Perm>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    /// `(parent orbit index, generator index)`; `orbit[i] = orbit[parent]^gens[gen]`.
    tree: Vec<(u32, u32)>,
    reps: Option<Vec<Perm>>,
    inv_reps: Option<Vec<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            gens_inv: Vec::new(),
            orbit: Vec::new(),
            pos: vec![ABSENT; degree],
            tree: Vec::new(),
            reps: None,
            inv_reps: None,
        };
        level.rebuild(degree);
        level
    }

    fn add_gen(&mut self, g: Perm, degree: usize) {
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        self.rebuild(degree);
    }

    fn rebuild(&mut self, degree: usize) {
        self.pos.iter_mut().for_each(|p| *p = ABSENT);
        self.orbit.clear();
        self.tree.clear();
        self.orbit.push(self.base as u32);
        self.pos[self.base] = 0;
        self.tree.push((ABSENT, ABSENT));
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head] as usize;
            for (gi, g) in self.gens.iter().enumerate() {
                let y = g.image(x);
                if self.pos[y] == ABSENT {
                    self.pos[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    self.tree.push((head as u32, gi as u32));
                }
            }
            head += 1;
        }
        if self.orbit.len() * degree * 2 <= CACHE_ENTRIES_PER_LEVEL {
            let mut reps: Vec<Perm> = Vec::with_capacity(self.orbit.len());
            reps.push(Perm::identity(degree));
            for i in 1..self.orbit.len() {
                let (parent, gi) = self.tree[i];
                let r = reps[parent as usize].compose_unchecked(&self.gens[gi as usize]);
                reps.push(r);
            }
            self.inv_reps = Some(reps.iter().map(Perm::inverse).collect());
            self.reps = Some(reps);
        } else {
            self.reps = None;
            self.inv_reps = None;
        }
    }

    pub(crate) fn base(&self) -> usize {
        self.base
    }

    pub(crate) fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub(crate) fn gens(&self) -> &[Perm] {
        &self.gens
    }

    #[inline]
    pub(crate) fn orbit_index(&self, point: usize) -> Option<usize> {
        match self.pos[point] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    /// Coset representative mapping the base point to `orbit[idx]`.
    pub(crate) fn rep(&self, idx: usize) -> Cow<'_, Perm> {
        if let Some(reps) = &self.reps {
            return Cow::Borrowed(&reps[idx]);
        }
        let mut path = Vec::new();
        let mut i = idx;
        while i != 0 {
            let (parent, gi) = self.tree[i];
            path.push(gi as usize);
            i = parent as usize;
        }
        let degree = self.pos.len();
        let mut acc = Perm::identity(degree);
        for &gi in path.iter().rev() {
            acc = acc.compose_unchecked(&self.gens[gi]);
        }
        Cow::Owned(acc)
    }

    /// `h <- h * rep(idx)^-1`.
    pub(crate) fn strip(&self, h: &mut Perm, scratch: &mut Perm) {
        let point = h.image(self.base);
        let idx = self.pos[point] as usize;
        self.strip_index(h, idx, scratch);
    }

    fn strip_index(&self, h: &mut Perm, idx: usize, scratch: &mut Perm) {
        if let Some(inv) = &self.inv_reps {
            h.compose_into(&inv[idx], scratch);
            std::mem::swap(h, scratch);
            return;
        }
        let mut i = idx;
        while i != 0 {
            let (parent, gi) = self.tree[i];
            h.compose_into(&self.gens_inv[gi as usize], scratch);
            std::mem::swap(h, scratch);
            i = parent as usize;
        }
    }
}

/// A base and strong generating set with Schreier trees for each basic orbit.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
    order_u64: Option<u64>,
}

impl StabChain {
    /// Runs Schreier–Sims on `gens`. The base is grown from the first moved
    /// points of the generators, so the result depends only on the input order.
    pub(crate) fn build(degree: usize, gens: &[Perm]) -> Self {
        let gens: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
        let mut levels: Vec<Level> = Vec::new();
        for g in &gens {
            if levels.iter().all(|l| g.image(l.base) == l.base) {
                let b = g.first_moved_point().expect("non-identity generator");
                levels.push(Level::new(b, degree));
            }
        }
        // S_i: generators fixing the first i base points
        let bases: Vec<usize> = levels.iter().map(|l| l.base).collect();
        for (li, level) in levels.iter_mut().enumerate() {
            for g in &gens {
                if bases[..li].iter().all(|&b| g.image(b) == b) {
                    level.gens_inv.push(g.inverse());
                    level.gens.push((*g).clone());
                }
            }
            level.rebuild(degree);
        }

        let mut chain = StabChain {
            degree,
            levels,
            order: BigUint::one(),
            order_u64: Some(1),
        };
        chain.complete();
        chain.order = chain
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        chain.order_u64 = chain.order.to_u64();
        chain
    }

    fn complete(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.first_failing_schreier_generator(lvl) {
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let b = residue
                            .first_moved_point()
                            .expect("residue is not the identity");
                        self.levels.push(Level::new(b, degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_gen(residue.clone(), degree);
                    }
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    fn first_failing_schreier_generator(&self, lvl: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[lvl];
        let mut scratch = Perm::identity(self.degree);
        for bi in 0..level.orbit.len() {
            let beta = level.orbit[bi] as usize;
            let rep = level.rep(bi);
            for (gi, s) in level.gens.iter().enumerate() {
                let target = s.image(beta);
                let ti = level.pos[target] as usize;
                if ti != 0 && level.tree[ti] == (bi as u32, gi as u32) {
                    continue;
                }
                let mut h = rep.compose_unchecked(s);
                level.strip_index(&mut h, ti, &mut scratch);
                if h.is_identity() {
                    continue;
                }
                let (residue, j) = self.sift_from(h, lvl + 1);
                if j < self.levels.len() || !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Strips `h` through levels `from..`; returns the residue and the first
    /// level whose basic orbit does not contain the required image.
    pub(crate) fn sift_from(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        let mut scratch = Perm::identity(self.degree);
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(level.base);
            if level.pos[b] == ABSENT {
                return (h, j);
            }
            level.strip(&mut h, &mut scratch);
        }
        (h, self.levels.len())
    }

    pub(crate) fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.sift_from(p.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    /// Mixed-radix position of `p` in enumeration order, level 0 fastest.
    pub(crate) fn rank(&self, p: &Perm) -> Option<u64> {
        if p.degree() != self.degree {
            return None;
        }
        let mut h = p.clone();
        let mut scratch = Perm::identity(self.degree);
        let mut rank = 0u64;
        let mut radix = 1u64;
        for level in &self.levels {
            let idx = level.orbit_index(h.image(level.base))?;
            rank += idx as u64 * radix;
            radix = radix.saturating_mul(level.orbit.len() as u64);
            level.strip_index(&mut h, idx, &mut scratch);
        }
        h.is_identity().then_some(rank)
    }

    /// Element `t_{k-1} ⋯ t_1 t_0` for orbit indices `idx[l]` at each level `l`.
    pub(crate) fn element_from_indices(&self, idx: &[usize]) -> Perm {
        let mut acc = Perm::identity(self.degree);
        let mut scratch = Perm::identity(self.degree);
        for (level, &i) in self.levels.iter().zip(idx).rev() {
            acc.compose_into(&level.rep(i), &mut scratch);
            std::mem::swap(&mut acc, &mut scratch);
        }
        acc
    }

    pub(crate) fn unrank(&self, mut rank: u64) -> Perm {
        let idx: Vec<usize> = self
            .levels
            .iter()
            .map(|l| {
                let n = l.orbit.len() as u64;
                let i = rank % n;
                rank /= n;
                i as usize
            })
            .collect();
        self.element_from_indices(&idx)
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order_u64
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths; their product is the group order.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators for the stabiliser of the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> &[Perm] {
        self.levels[level].gens()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}
