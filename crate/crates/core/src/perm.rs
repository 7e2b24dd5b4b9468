//! Permutations of `{0, .., degree - 1}` stored as image arrays.
//!
//! Products act left to right: `p * q` first applies `p`, then `q`, so the
//! image of `x` under `p * q` is `q(p(x))`. Written exponentially this is
//! `x^(pq) = (x^p)^q`, the convention GAP uses. Points are 0-based inside
//! the crate; the cycle notation produced by [`Perm`]'s `Display` impl and
//! accepted by [`crate::notation`] is 1-based.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::PermError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(PermError::PointOutOfRange { point: x, degree });
            }
            if seen[x] {
                return Err(PermError::NotBijective { point: x });
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(PermError::NotBijective { point: x });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// Overwrites `out` with `self * other` without allocating.
    #[inline]
    pub(crate) fn compose_into(&self, other: &Perm, out: &mut Perm) {
        for (dst, &x) in out.images.iter_mut().zip(self.images.iter()) {
            *dst = other.images[x as usize];
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self^k` for any integer `k`; negative exponents power the inverse.
    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        base.pow_u64(k.unsigned_abs())
    }

    /// `self^k` computed cycle by cycle in O(degree).
    pub fn pow_u64(&self, k: u64) -> Perm {
        let degree = self.degree();
        let mut out = vec![0u32; degree];
        let mut done = vec![false; degree];
        let mut cycle = Vec::new();
        for start in 0..degree {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            let len = cycle.len();
            let shift = (k % len as u64) as usize;
            for (i, &p) in cycle.iter().enumerate() {
                out[p as usize] = cycle[(i + shift) % len];
            }
        }
        Perm {
            images: out.into_boxed_slice(),
        }
    }

    /// Conjugate `x^-1 * self * x`.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        // point-wise: (x^-1 self x)(x(p)) = x(self(p))
        let mut out = vec![0u32; self.degree()];
        for (p, &sp) in self.images.iter().enumerate() {
            out[x.images[p] as usize] = x.images[sp as usize];
        }
        Perm {
            images: out.into_boxed_slice(),
        }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let degree = self.degree();
        let mut done = vec![false; degree];
        let mut out = Vec::new();
        for start in 0..degree {
            if done[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Least `k >= 1` with `self^k = 1`, the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u64`, which needs degrees far
    /// beyond any group this crate can enumerate.
    pub fn order(&self) -> u64 {
        let degree = self.degree();
        let mut done = vec![false; degree];
        let mut acc: u64 = 1;
        for start in 0..degree {
            if done[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !done[x] {
                done[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            let g = acc.gcd(&len);
            acc = (acc / g)
                .checked_mul(len)
                .expect("element order overflows u64");
        }
        acc
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Panics on a degree mismatch; use [`Perm::compose`] for a checked product.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}
