//! Named group families.
//!
//! Specs are written `family:param`, e.g. `wreath:5`, `dihedral:16`, and
//! direct products as `product:wreath:3,cyclic:7`. Parameters of
//! `dihedral`, `quaternion` and `semidihedral` are group orders.

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::error::CatalogError;
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSpec {
    /// Cyclic group of order n on n points.
    Cyclic(usize),
    /// Dihedral group of order 2n on n points (n >= 3).
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Generalised quaternion (dicyclic) group of order 4n, regular action.
    Quaternion(usize),
    /// Semidihedral group of order 2^k (k >= 4), regular action.
    Semidihedral(usize),
    /// Z_p wr Z_p on p^2 points.
    Wreath(usize),
    Product(Vec<CatalogSpec>),
}

/// One supported family, for listings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub syntax: &'static str,
    pub parameters: &'static str,
    pub smallest: &'static str,
}

pub fn list_families() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            name: "cyclic",
            syntax: "cyclic:N",
            parameters: "order N >= 1, acting on N points",
            smallest: "cyclic:1",
        },
        FamilyInfo {
            name: "dihedral",
            syntax: "dihedral:2N",
            parameters: "order 2N with N >= 3, acting on N points",
            smallest: "dihedral:6",
        },
        FamilyInfo {
            name: "symmetric",
            syntax: "symmetric:N",
            parameters: "N >= 1 points",
            smallest: "symmetric:1",
        },
        FamilyInfo {
            name: "alternating",
            syntax: "alternating:N",
            parameters: "N >= 1 points",
            smallest: "alternating:1",
        },
        FamilyInfo {
            name: "quaternion",
            syntax: "quaternion:4N",
            parameters: "order 4N with N >= 2, regular action",
            smallest: "quaternion:8",
        },
        FamilyInfo {
            name: "semidihedral",
            syntax: "semidihedral:2^K",
            parameters: "order 2^K with K >= 4, regular action",
            smallest: "semidihedral:16",
        },
        FamilyInfo {
            name: "wreath",
            syntax: "wreath:P",
            parameters: "prime P, Z_P wr Z_P on P^2 points",
            smallest: "wreath:2",
        },
        FamilyInfo {
            name: "direct_product",
            syntax: "product:SPEC,SPEC[,...]",
            parameters: "two or more non-product factors on disjoint points",
            smallest: "product:cyclic:1,cyclic:1",
        },
    ]
}

fn bad(family: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

impl CatalogSpec {
    fn validate(&self) -> Result<(), CatalogError> {
        match *self {
            CatalogSpec::Cyclic(n) if n < 1 => Err(bad("cyclic", "order must be at least 1")),
            CatalogSpec::Symmetric(n) | CatalogSpec::Alternating(n) if n < 1 => {
                Err(bad("symmetric/alternating", "need at least one point"))
            }
            CatalogSpec::Dihedral(n) if n < 6 || n % 2 != 0 => {
                Err(bad("dihedral", "order must be even and at least 6"))
            }
            CatalogSpec::Quaternion(n) if n < 8 || n % 4 != 0 => Err(bad(
                "quaternion",
                "order must be a multiple of 4, at least 8",
            )),
            CatalogSpec::Semidihedral(n) if n < 16 || !n.is_power_of_two() => Err(bad(
                "semidihedral",
                "order must be a power of two, at least 16",
            )),
            CatalogSpec::Wreath(p) if !is_prime(p as u64) => Err(bad("wreath", "p must be prime")),
            CatalogSpec::Product(ref factors) => {
                if factors.len() < 2 {
                    return Err(bad("product", "need at least two factors"));
                }
                factors.iter().try_for_each(|f| match f {
                    CatalogSpec::Product(_) => Err(bad("product", "nested products")),
                    f => f.validate(),
                })
            }
            _ => Ok(()),
        }
    }

    /// Closed-form group order.
    pub fn expected_order(&self) -> u128 {
        match *self {
            CatalogSpec::Cyclic(n)
            | CatalogSpec::Dihedral(n)
            | CatalogSpec::Quaternion(n)
            | CatalogSpec::Semidihedral(n) => n as u128,
            CatalogSpec::Symmetric(n) => (1..=n as u128).product(),
            CatalogSpec::Alternating(n) => ((1..=n as u128).product::<u128>() / 2).max(1),
            CatalogSpec::Wreath(p) => (p as u128).pow(p as u32 + 1),
            CatalogSpec::Product(ref fs) => fs.iter().map(|f| f.expected_order()).product(),
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let s = s.trim();
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))?;
        if family == "product" || family == "direct_product" {
            let factors = rest
                .split(',')
                .map(|f| f.parse())
                .collect::<Result<Vec<CatalogSpec>, _>>()?;
            let spec = CatalogSpec::Product(factors);
            spec.validate()?;
            return Ok(spec);
        }
        let n: usize = rest
            .trim()
            .parse()
            .map_err(|_| bad(family, format!("`{rest}` is not a positive integer")))?;
        let spec = match family {
            "cyclic" => CatalogSpec::Cyclic(n),
            "dihedral" => CatalogSpec::Dihedral(n),
            "symmetric" => CatalogSpec::Symmetric(n),
            "alternating" => CatalogSpec::Alternating(n),
            "quaternion" => CatalogSpec::Quaternion(n),
            "semidihedral" | "quasidihedral" => CatalogSpec::Semidihedral(n),
            "wreath" => CatalogSpec::Wreath(n),
            _ => return Err(CatalogError::UnknownFamily(family.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            CatalogSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            CatalogSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            CatalogSpec::Alternating(n) => write!(f, "alternating:{n}"),
            CatalogSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            CatalogSpec::Semidihedral(n) => write!(f, "semidihedral:{n}"),
            CatalogSpec::Wreath(p) => write!(f, "wreath:{p}"),
            CatalogSpec::Product(fs) => {
                f.write_str("product:")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn make(spec: &CatalogSpec) -> Result<PermGroup, CatalogError> {
    spec.validate()?;
    let (degree, gens) = generators(spec);
    Ok(PermGroup::new(degree, gens)?)
}

fn cycle_perm(degree: usize, cycle: Vec<usize>) -> Perm {
    Perm::from_cycles(degree, &[cycle]).expect("valid cycle")
}

fn generators(spec: &CatalogSpec) -> (usize, Vec<Perm>) {
    match *spec {
        CatalogSpec::Cyclic(n) => (n, vec![cycle_perm(n, (0..n).collect())]),
        CatalogSpec::Dihedral(order) => {
            let n = order / 2;
            let reflection = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            (
                n,
                vec![
                    cycle_perm(n, (0..n).collect()),
                    Perm::from_images(reflection).expect("reflection"),
                ],
            )
        }
        CatalogSpec::Symmetric(n) => {
            if n < 2 {
                return (n, vec![]);
            }
            (
                n,
                vec![cycle_perm(n, vec![0, 1]), cycle_perm(n, (0..n).collect())],
            )
        }
        CatalogSpec::Alternating(n) => {
            let gens = (2..n).map(|k| cycle_perm(n, vec![0, 1, k])).collect();
            (n, gens)
        }
        CatalogSpec::Quaternion(order) => {
            let half = order / 2;
            // a^(2k) = 1, b^2 = a^k, b^-1 a b = a^-1
            regular_metacyclic(half, half - 1, half / 2)
        }
        CatalogSpec::Semidihedral(order) => {
            let half = order / 2;
            // a^(2^(k-1)) = 1, b^2 = 1, b^-1 a b = a^(2^(k-2) - 1)
            regular_metacyclic(half, half / 2 - 1, 0)
        }
        CatalogSpec::Wreath(p) => {
            let degree = p * p;
            let base = cycle_perm(degree, (0..p).collect());
            let top = (0..degree as u32)
                .map(|x| (x + p as u32) % degree as u32)
                .collect();
            (
                degree,
                vec![base, Perm::from_images(top).expect("block shift")],
            )
        }
        CatalogSpec::Product(ref factors) => {
            let parts: Vec<(usize, Vec<Perm>)> = factors.iter().map(generators).collect();
            let degree: usize = parts.iter().map(|(d, _)| d).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (d, fgens) in parts {
                for g in fgens {
                    let images = (0..degree as u32)
                        .map(|x| {
                            let x = x as usize;
                            if x >= offset && x < offset + d {
                                (offset + g.image(x - offset)) as u32
                            } else {
                                x as u32
                            }
                        })
                        .collect();
                    gens.push(Perm::from_images(images).expect("shifted factor"));
                }
                offset += d;
            }
            (degree, gens)
        }
    }
}

/// Right-regular action of `<a, b | a^n, b^2 = a^c, b^-1 a b = a^r>` on its
/// `2n` elements `a^i b^j`, indexed `i + n j`. Needs `r^2 = 1 (mod n)`.
fn regular_metacyclic(n: usize, r: usize, c: usize) -> (usize, Vec<Perm>) {
    // (a^i b^j)(a^k b^l) = a^(i + r^j k) b^(j + l), reducing b^2 to a^c
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        let twist = if j == 1 { r * k } else { k };
        let mut e = i + twist;
        let mut t = j + l;
        if t == 2 {
            e += c;
            t = 0;
        }
        (e % n, t)
    };
    let index = |(i, j): (usize, usize)| i + n * j;
    let right_mult = |g: (usize, usize)| -> Perm {
        let images = (0..2 * n)
            .map(|x| index(mul((x % n, x / n), g)) as u32)
            .collect();
        Perm::from_images(images).expect("regular action")
    };
    (2 * n, vec![right_mult((1, 0)), right_mult((0, 1))])
}
