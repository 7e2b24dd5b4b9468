//! Backtrack search for subgroups defined by a property.
//!
//! The search walks the stabiliser chain of the ambient group level by
//! level, bottom up. At level `i` it already holds generators of the
//! subgroup's stabiliser of `b_0..b_i`, and looks for one element per
//! orbit point `γ` of the basic orbit mapping `b_i` to `γ`, skipping points
//! already reached by the known part of the subgroup. Properties prune
//! branches from partial base images.

use std::collections::VecDeque;

use crate::group::PermGroup;
use crate::perm::Perm;

pub(crate) trait SearchProperty {
    /// Records that the candidate maps `b` to `c`; `false` prunes the branch
    /// and must leave the state unchanged.
    fn assign(&mut self, b: usize, c: usize) -> bool;
    /// Undoes the most recent successful `assign`.
    fn unassign(&mut self);
    fn accept(&self, x: &Perm) -> bool;
}

/// Generators of `{x in group : prop}`. `known` must already satisfy the
/// property; it seeds the subgroup found so far.
pub(crate) fn subgroup_search<P: SearchProperty>(
    group: &PermGroup,
    prop: &mut P,
    known: Vec<Perm>,
) -> Vec<Perm> {
    let chain = group.chain();
    let levels = chain.levels();
    let degree = group.degree();
    let bases: Vec<usize> = levels.iter().map(|l| l.base()).collect();
    let mut found: Vec<Perm> = known.into_iter().filter(|k| !k.is_identity()).collect();

    for i in (0..levels.len()).rev() {
        for &b in &bases[..i] {
            let ok = prop.assign(b, b);
            debug_assert!(ok, "identity must satisfy the property");
        }
        let orbit = levels[i].orbit();
        let mut failed = vec![false; degree];
        let mut reached = stab_orbit(&found, &bases[..i], bases[i], degree);
        for (idx, &point) in orbit.iter().enumerate().skip(1) {
            let gamma = point as usize;
            if reached[gamma] || failed[gamma] {
                continue;
            }
            let hit = if prop.assign(bases[i], gamma) {
                let rep = levels[i].rep(idx).into_owned();
                let hit = descend(group, prop, i + 1, rep);
                prop.unassign();
                hit
            } else {
                None
            };
            match hit {
                Some(y) => {
                    found.push(y);
                    reached = stab_orbit(&found, &bases[..i], bases[i], degree);
                }
                None => {
                    let lost = stab_orbit(&found, &bases[..i], gamma, degree);
                    for (f, l) in failed.iter_mut().zip(lost) {
                        *f |= l;
                    }
                }
            }
        }
        for _ in 0..i {
            prop.unassign();
        }
    }
    found
}

/// `q` is `t_{j-1} ⋯ t_i`; extends it with a choice at level `j`.
fn descend<P: SearchProperty>(group: &PermGroup, prop: &mut P, j: usize, q: Perm) -> Option<Perm> {
    let levels = group.chain().levels();
    if j == levels.len() {
        return prop.accept(&q).then_some(q);
    }
    let level = &levels[j];
    for (idx, &beta) in level.orbit().iter().enumerate() {
        let c = q.image(beta as usize);
        if !prop.assign(level.base(), c) {
            continue;
        }
        let next = level.rep(idx).compose_unchecked(&q);
        let hit = descend(group, prop, j + 1, next);
        prop.unassign();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Orbit of `start` under the generators in `gens` that fix every point of `fixed`.
fn stab_orbit(gens: &[Perm], fixed: &[usize], start: usize, degree: usize) -> Vec<bool> {
    let stab: Vec<&Perm> = gens
        .iter()
        .filter(|g| fixed.iter().all(|&b| g.image(b) == b))
        .collect();
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &stab {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

const UNSET: u32 = u32::MAX;

/// Elements commuting with every perm in `with`.
///
/// An element commuting with each `s` must send `x^s` to `y^s` whenever it
/// sends `x` to `y`, so each base image is propagated along the orbits of
/// `⟨with⟩`.
pub(crate) struct CommutingProperty {
    with: Vec<Perm>,
    image: Vec<u32>,
    used: Vec<bool>,
    frames: Vec<Vec<usize>>,
}

impl CommutingProperty {
    pub(crate) fn new(degree: usize, with: Vec<Perm>) -> Self {
        CommutingProperty {
            with,
            image: vec![UNSET; degree],
            used: vec![false; degree],
            frames: Vec::new(),
        }
    }

    fn rollback(&mut self, frame: &[usize]) {
        for &x in frame {
            self.used[self.image[x] as usize] = false;
            self.image[x] = UNSET;
        }
    }
}

impl SearchProperty for CommutingProperty {
    fn assign(&mut self, b: usize, c: usize) -> bool {
        let mut frame = Vec::new();
        let mut queue = VecDeque::from([(b, c)]);
        while let Some((x, y)) = queue.pop_front() {
            match self.image[x] {
                UNSET if !self.used[y] => {
                    self.image[x] = y as u32;
                    self.used[y] = true;
                    frame.push(x);
                    for s in &self.with {
                        queue.push_back((s.image(x), s.image(y)));
                    }
                }
                img if img == y as u32 => {}
                _ => {
                    self.rollback(&frame);
                    return false;
                }
            }
        }
        self.frames.push(frame);
        true
    }

    fn unassign(&mut self) {
        let frame = self.frames.pop().expect("unbalanced unassign");
        self.rollback(&frame);
    }

    fn accept(&self, x: &Perm) -> bool {
        self.with.iter().all(|s| s.commutes_with(x))
    }
}

/// Elements normalising the subgroup `target`. Such an element permutes the
/// orbits of `target`, which gives the pruning test.
pub(crate) struct NormalizingProperty {
    target: PermGroup,
    orbit_id: Vec<usize>,
    orbit_len: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl NormalizingProperty {
    pub(crate) fn new(target: PermGroup) -> Self {
        let degree = target.degree();
        let mut orbit_id = vec![usize::MAX; degree];
        let mut orbit_len = Vec::new();
        for start in 0..degree {
            if orbit_id[start] != usize::MAX {
                continue;
            }
            let id = orbit_len.len();
            orbit_id[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut len = 0;
            while let Some(x) = queue.pop_front() {
                len += 1;
                for g in target.generators() {
                    let y = g.image(x);
                    if orbit_id[y] == usize::MAX {
                        orbit_id[y] = id;
                        queue.push_back(y);
                    }
                }
            }
            orbit_len.push(len);
        }
        NormalizingProperty {
            target,
            orbit_id,
            orbit_len,
            pairs: Vec::new(),
        }
    }
}

impl SearchProperty for NormalizingProperty {
    fn assign(&mut self, b: usize, c: usize) -> bool {
        let (ob, oc) = (self.orbit_id[b], self.orbit_id[c]);
        if self.orbit_len[ob] != self.orbit_len[oc] {
            return false;
        }
        let consistent = self
            .pairs
            .iter()
            .all(|&(b2, c2)| (self.orbit_id[b2] == ob) == (self.orbit_id[c2] == oc));
        if consistent {
            self.pairs.push((b, c));
        }
        consistent
    }

    fn unassign(&mut self) {
        self.pairs.pop();
    }

    fn accept(&self, x: &Perm) -> bool {
        self.target
            .generators()
            .iter()
            .all(|h| self.target.contains(&h.conjugate_by(x)))
    }
}
