//! Conjugacy classes, rational classes and power maps.
//!
//! Classes are found by walking the element stream once: the first element
//! not yet covered becomes the representative of a new class, whose members
//! are reached by conjugating with the generators. Membership is tracked by
//! element rank, one `u32` per group element.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;

use crate::arith::prime_residues;
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Perm;

/// Largest group order for which a class table will be built.
pub const CLASS_TABLE_LIMIT: u64 = 1 << 28;

const UNSEEN: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct ConjClass {
    representative: Perm,
    size: u64,
    rep_order: u64,
    ambient: PermGroup,
}

impl ConjClass {
    pub fn representative(&self) -> &Perm {
        &self.representative
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Common element order of all members.
    pub fn element_order(&self) -> u64 {
        self.rep_order
    }

    /// Members in breadth-first order under conjugation by the ambient generators.
    pub fn members(&self) -> ClassMembers {
        ClassMembers {
            gens: self.ambient.generators().to_vec(),
            seen: HashSet::from([self.representative.clone()]),
            queue: VecDeque::from([self.representative.clone()]),
        }
    }
}

/// Breadth-first conjugation orbit. Holds the visited members, so memory
/// grows with the class size.
pub struct ClassMembers {
    gens: Vec<Perm>,
    seen: HashSet<Perm>,
    queue: VecDeque<Perm>,
}

impl Iterator for ClassMembers {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let x = self.queue.pop_front()?;
        for s in &self.gens {
            let y = x.conjugate_by(s);
            if !self.seen.contains(&y) {
                self.seen.insert(y.clone());
                self.queue.push_back(y);
            }
        }
        Some(x)
    }
}

/// A union of conjugacy classes closed under coprime powering.
#[derive(Clone, Debug)]
pub struct RationalClass {
    /// Indices into the class table, ascending; the first is the base class.
    pub classes: Vec<usize>,
    pub representative: Perm,
    pub element_order: u64,
    /// Total number of elements.
    pub size: u64,
    /// Residues `n` modulo the element order with `rep^n` conjugate to `rep`.
    pub stabilizing_residues: Vec<u64>,
}

impl RationalClass {
    pub fn base_class(&self) -> usize {
        self.classes[0]
    }
}

/// Exponent and the representative order of every class.
#[derive(Clone, Debug)]
pub struct PowerContext {
    pub exponent: u64,
    pub orders: Vec<u64>,
}

/// All conjugacy classes of a group plus an element-to-class lookup.
pub struct ClassTable {
    group: PermGroup,
    classes: Vec<ConjClass>,
    class_of_rank: Vec<u32>,
}

impl ClassTable {
    pub fn new(group: &PermGroup) -> Result<Self, GroupError> {
        let order = group.order_within(CLASS_TABLE_LIMIT)?;
        let mut class_of_rank = vec![UNSEEN; order as usize];
        let mut classes = Vec::new();
        let gens = group.generators();
        let mut queue = VecDeque::new();
        for (rank, x) in group.elements().enumerate() {
            if class_of_rank[rank] != UNSEEN {
                continue;
            }
            let id = classes.len() as u32;
            class_of_rank[rank] = id;
            let mut size = 1u64;
            queue.push_back(x.clone());
            while let Some(y) = queue.pop_front() {
                for s in gens {
                    let z = y.conjugate_by(s);
                    let r = group.rank(&z).expect("conjugate stays in the group") as usize;
                    if class_of_rank[r] == UNSEEN {
                        class_of_rank[r] = id;
                        size += 1;
                        queue.push_back(z);
                    }
                }
            }
            classes.push(ConjClass {
                rep_order: x.order(),
                representative: x,
                size,
                ambient: group.clone(),
            });
        }
        Ok(ClassTable {
            group: group.clone(),
            classes,
            class_of_rank,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `x`, or `None` if `x` is not a member.
    pub fn class_of(&self, x: &Perm) -> Option<usize> {
        let r = self.group.rank(x)?;
        Some(self.class_of_rank[r as usize] as usize)
    }

    pub fn are_conjugate(&self, x: &Perm, y: &Perm) -> bool {
        match (self.class_of(x), self.class_of(y)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Rational classes, ordered by their smallest class index.
    pub fn rational_classes(&self) -> Vec<RationalClass> {
        let mut assigned = vec![false; self.classes.len()];
        let mut out = Vec::new();
        for (ci, class) in self.classes.iter().enumerate() {
            if assigned[ci] {
                continue;
            }
            let rep = &class.representative;
            let o = class.rep_order;
            let mut members = Vec::new();
            let mut stabilizing = Vec::new();
            for n in prime_residues(o) {
                let k = self
                    .class_of(&rep.pow_u64(n))
                    .expect("power stays in the group");
                if k == ci {
                    stabilizing.push(n);
                }
                if !members.contains(&k) {
                    members.push(k);
                }
            }
            members.sort_unstable();
            for &k in &members {
                assigned[k] = true;
            }
            out.push(RationalClass {
                size: members.iter().map(|&k| self.classes[k].size).sum(),
                classes: members,
                representative: rep.clone(),
                element_order: o,
                stabilizing_residues: stabilizing,
            });
        }
        out
    }

    /// Class index of `rep^m` for each class.
    pub fn power_map(&self, m: u64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| {
                self.class_of(&c.representative.pow_u64(m))
                    .expect("power stays in the group")
            })
            .collect()
    }

    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&c.rep_order))
    }

    pub fn power_context(&self) -> PowerContext {
        PowerContext {
            exponent: self.exponent(),
            orders: self.classes.iter().map(|c| c.rep_order).collect(),
        }
    }
}
