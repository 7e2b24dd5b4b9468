//! Small integer helpers: factoring, divisors, coprime residues.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, multiplicity)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Residues in `1..modulus` coprime to `modulus` (just `[1]` when `modulus` is 1).
pub fn prime_residues(modulus: u64) -> Vec<u64> {
    if modulus <= 1 {
        return vec![1];
    }
    (1..modulus).filter(|n| n.gcd(&modulus) == 1).collect()
}

/// Inverse of `n` modulo `modulus`, when it exists.
pub fn inverse_mod(n: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let e = (n as i128).extended_gcd(&(modulus as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(modulus as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(factorize(420), vec![(2, 2), (3, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(p_part(24, 2), 8);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }

    #[test]
    fn residues() {
        assert_eq!(prime_residues(10), vec![1, 3, 7, 9]);
        assert_eq!(prime_residues(1), vec![1]);
        assert_eq!(inverse_mod(3, 10), Some(7));
        assert_eq!(inverse_mod(2, 10), None);
    }
}
