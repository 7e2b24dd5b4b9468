//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use fsz_core::catalog::{make, CatalogSpec};
use fsz_core::{Perm, PermGroup};

pub fn group(spec: &str) -> PermGroup {
    make(&spec.parse::<CatalogSpec>().unwrap()).unwrap()
}

const Q: u32 = 5;
const DIM: usize = 7;

type Vector = [u32; DIM];
type Matrix = [[u32; DIM]; DIM];

fn apply(m: &Matrix, v: &Vector) -> Vector {
    let mut out = [0; DIM];
    for (i, row) in m.iter().enumerate() {
        out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % Q;
    }
    out
}

/// `exp(X)` for a nilpotent `X` with `X^3 = 0`, over GF(5).
fn exp3(x: &Matrix) -> Matrix {
    let mut x2 = [[0; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            x2[i][j] = (0..DIM).map(|k| x[i][k] * x[k][j]).sum::<u32>() % Q;
        }
    }
    let half = 3; // 1/2 mod 5
    let mut out = [[0; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            out[i][j] = (u32::from(i == j) + x[i][j] + half * x2[i][j]) % Q;
        }
    }
    out
}

/// Root vectors of G_2 on the 7-dimensional module, as `(X_a, X_b, X_-a, X_-b)`
/// with `a` short and `b` long.
///
/// Basis vectors are weight vectors ordered from highest to lowest. The
/// simple root vectors move along the path 1-2-3-4-5-6-7 of weight spaces
/// (short root on the edges 12, 34, 45, 67 and long root on 23, 56), so a
/// diagonal change of basis makes every nonzero entry 1. The lowering
/// operators are then fixed by `[X_c, X_-c] = H_c`: entry 2 on the middle of
/// the three-dimensional `a`-string and 1 elsewhere.
fn g2_root_vectors() -> [Matrix; 4] {
    let mut out = [[[0; DIM]; DIM]; 4];
    for (i, j) in [(0, 1), (2, 3), (3, 4), (5, 6)] {
        out[0][i][j] = 1;
    }
    for (i, j) in [(1, 2), (4, 5)] {
        out[1][i][j] = 1;
    }
    for (i, j, x) in [(1, 0, 1), (3, 2, 2), (4, 3, 2), (6, 5, 1)] {
        out[2][i][j] = x;
    }
    for (i, j) in [(2, 1), (5, 4)] {
        out[3][i][j] = 1;
    }
    out
}

/// First nonzero coordinate scaled to 1.
fn normalize(v: Vector) -> Vector {
    let Some(&lead) = v.iter().find(|&&x| x != 0) else {
        return v;
    };
    let inv = (1..Q).find(|x| x * lead % Q == 1).unwrap();
    v.map(|x| x * inv % Q)
}

/// Permutations induced by `mats` on the orbit of the lowest weight vector
/// under `orbit_mats`, on vectors or on projective points.
fn induced(orbit_mats: &[Matrix], mats: &[Matrix], projective: bool) -> (usize, Vec<Perm>) {
    let act = |m: &Matrix, v: &Vector| {
        let w = apply(m, v);
        if projective {
            normalize(w)
        } else {
            w
        }
    };
    let mut start = [0; DIM];
    start[DIM - 1] = 1;
    let mut index: HashMap<Vector, u32> = HashMap::from([(start, 0)]);
    let mut points = vec![start];
    let mut i = 0;
    while i < points.len() {
        for g in orbit_mats {
            let w = act(g, &points[i]);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(w) {
                e.insert(points.len() as u32);
                points.push(w);
            }
        }
        i += 1;
    }
    let perms = mats
        .iter()
        .map(|g| {
            let images = points.iter().map(|v| index[&act(g, v)]).collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    (points.len(), perms)
}

/// The maximal unipotent subgroup of G_2(5), of order 5^6, acting on the
/// orbit of a lowest weight vector of the 7-dimensional module.
pub fn g2_unipotent() -> PermGroup {
    let [xa, xb, _, _] = g2_root_vectors();
    let gens = [exp3(&xa), exp3(&xb)];
    let (degree, perms) = induced(&gens, &gens, false);
    PermGroup::new(degree, perms).unwrap()
}

/// G_2(5) on the 3906 singular points of its 7-dimensional module, with the
/// generators of its maximal unipotent subgroup first.
pub fn g2_five() -> PermGroup {
    let gens = g2_root_vectors().map(|x| exp3(&x));
    let (degree, perms) = induced(&gens, &gens, true);
    PermGroup::new(degree, perms).unwrap()
}

/// The centraliser in G_2(5) of a long root element, of order
/// `5^5 * |SL_2(5)| = 375000`: the unipotent radical of a maximal parabolic
/// together with the `SL_2` of the short simple root, on the same 3906
/// points as [`g2_five`]. Returns the group and its subgroup of order 5^6.
pub fn g2_root_centralizer() -> (PermGroup, PermGroup) {
    let all = g2_root_vectors().map(|x| exp3(&x));
    let (degree, perms) = induced(&all, &all, true);
    let c = PermGroup::new(degree, perms[..3].to_vec()).unwrap();
    let p = PermGroup::new(degree, perms[..2].to_vec()).unwrap();
    (c, p)
}

/// Every catalog group of order below 2016 in the small-order suite, by spec
/// string: dihedral and quaternion groups for all admissible parameters,
/// semidihedral groups, symmetric and alternating groups on at most six
/// points, cyclic groups, products of two cyclic groups and the two smallest
/// wreath groups.
pub fn small_order_suite() -> Vec<String> {
    const BOUND: u64 = 2016;
    let mut specs = Vec::new();
    specs.extend(
        (3..)
            .map(|n| 2 * n)
            .take_while(|&o| o < BOUND)
            .map(|o| format!("dihedral:{o}")),
    );
    specs.extend(
        (2..)
            .map(|n| 4 * n)
            .take_while(|&o| o < BOUND)
            .map(|o| format!("quaternion:{o}")),
    );
    specs.extend(
        (4..)
            .map(|k| 1u64 << k)
            .take_while(|&o| o < BOUND)
            .map(|o| format!("semidihedral:{o}")),
    );
    specs.extend((1..=6).map(|n| format!("symmetric:{n}")));
    specs.extend((1..=6).map(|n| format!("alternating:{n}")));
    specs.extend((1..BOUND).map(|n| format!("cyclic:{n}")));
    for a in 2..BOUND {
        for b in a..BOUND {
            if a * b >= BOUND {
                break;
            }
            specs.push(format!("product:cyclic:{a},cyclic:{b}"));
        }
    }
    specs.push("wreath:2".into());
    specs.push("wreath:3".into());
    specs
}

/// `|{a in elements : a^m = (a u^-1)^m = g}|` straight from the definition.
pub fn brute_count(elements: &[Perm], u: &Perm, g: &Perm, m: u64) -> u64 {
    let u_inv = u.inverse();
    elements
        .iter()
        .filter(|a| &a.pow_u64(m) == g && &(*a * &u_inv).pow_u64(m) == g)
        .count() as u64
}

/// `a` and `b` acting side by side on disjoint points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let left = a.generators().iter().map(|g| embed(g, 0, degree));
    let right = b.generators().iter().map(|g| embed(g, a.degree(), degree));
    PermGroup::new(degree, left.chain(right).collect()).unwrap()
}

/// `p` moved onto the points `offset..offset + p.degree()` of a larger set.
pub fn embed(p: &Perm, offset: usize, degree: usize) -> Perm {
    let images = (0..degree)
        .map(|x| {
            if x >= offset && x < offset + p.degree() {
                (offset + p.image(x - offset)) as u32
            } else {
                x as u32
            }
        })
        .collect();
    Perm::from_images(images).unwrap()
}

/// Restriction of `p` to the points `offset..offset + degree`, which it
/// must preserve.
pub fn restrict(p: &Perm, offset: usize, degree: usize) -> Perm {
    let images = (offset..offset + degree)
        .map(|x| (p.image(x) - offset) as u32)
        .collect();
    Perm::from_images(images).unwrap()
}

/// Multiplication table of a small group, for exhaustive checks.
pub struct Cayley {
    pub elements: Vec<Perm>,
    pub mul: Vec<Vec<u16>>,
    pub inv: Vec<u16>,
    pub order: Vec<u64>,
    pub exponent: u64,
}

impl Cayley {
    pub fn new(group: &PermGroup) -> Self {
        let elements: Vec<Perm> = group.elements().collect();
        assert!(elements.len() <= u16::MAX as usize);
        let index: HashMap<&Perm, u16> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u16))
            .collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&(a * b)]).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&a.inverse()]).collect();
        let order: Vec<u64> = elements.iter().map(Perm::order).collect();
        let exponent = order.iter().fold(1, |acc, &o| num_integer::lcm(acc, o));
        Cayley {
            elements,
            mul,
            inv,
            order,
            exponent,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// `a^k` for every element `a`, for `k = 1..=exponent`.
    pub fn power_tables(&self) -> Vec<Vec<u16>> {
        let mut out = Vec::with_capacity(self.exponent as usize);
        let mut cur: Vec<u16> = (0..self.len() as u16).collect();
        for _ in 0..self.exponent {
            out.push(cur.clone());
            cur = cur
                .iter()
                .enumerate()
                .map(|(a, &p)| self.mul[p as usize][a])
                .collect();
        }
        out
    }

    /// Every `(g, u, m, n)` with `|G_m(u, g)| != |G_m(u, g^n)|` and `o(g)` in
    /// `orders`, with `m` running over `1..=exponent`, which covers every
    /// `m` since `a^m` only depends on `m` modulo the exponent.
    pub fn violations(&self, orders: &[u64]) -> Vec<(usize, usize, u64, u64)> {
        let n = self.len();
        let powers = self.power_tables();
        let mut found = Vec::new();
        let mut counts = vec![0u32; n];
        for u in 0..n {
            let shifted: Vec<u16> = (0..n).map(|a| self.mul[a][self.inv[u] as usize]).collect();
            for (k, pw) in powers.iter().enumerate() {
                counts.iter_mut().for_each(|c| *c = 0);
                for a in 0..n {
                    let t = pw[a];
                    if pw[shifted[a] as usize] == t {
                        counts[t as usize] += 1;
                    }
                }
                for g in (0..n).filter(|&g| orders.contains(&self.order[g])) {
                    if self.mul[g][u] != self.mul[u][g] {
                        continue;
                    }
                    let o = self.order[g];
                    let mut gn = g;
                    for e in 2..o {
                        gn = self.mul[gn][g] as usize;
                        if num_integer::gcd(e, o) == 1 && counts[gn] != counts[g] {
                            found.push((g, u, k as u64 + 1, e));
                        }
                    }
                }
            }
        }
        found
    }
}

/// With probability one half, a `u` in `c` chosen so that `C_m(u, g)` is
/// nonempty: for `a, b` with `a^m = b^m = g`, `u = b^-1 a` puts `a` in the
/// set. Otherwise, or when `g` has no `m`-th root, a uniform `u` in `c`.
pub fn interesting_u<R: rand::Rng>(rng: &mut R, c: &PermGroup, g: &Perm, m: u64) -> Perm {
    if rng.gen_bool(0.5) {
        let roots: Vec<Perm> = c.elements().filter(|a| &a.pow_u64(m) == g).collect();
        if !roots.is_empty() {
            let a = &roots[rng.gen_range(0..roots.len())];
            let b = &roots[rng.gen_range(0..roots.len())];
            return &b.inverse() * a;
        }
    }
    c.random_element(rng)
}
