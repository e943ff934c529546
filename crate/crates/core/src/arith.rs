//! Small-integer number theory used throughout: factorization, divisor
//! functions, modular inverses.

use alloc::vec::Vec;
use num_integer::Integer;

/// Prime factorization by trial division, as `(p, e)` pairs with `p` ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// p-adic valuation; `v_p(0)` is reported as `u32::MAX`.
pub fn valuation(p: u64, mut n: u64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// Number of divisors.
pub fn tau(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorted list of divisors.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = alloc::vec![1u64];
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

/// Inverse of `a` modulo `m`, if it exists. `m = 1` yields `Some(0)`.
pub fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    let m = m as i64;
    let g = a.extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m) as u64)
}

/// The part of `n` supported on primes dividing `d`.
pub fn part_supported_on(n: u64, d: u64) -> u64 {
    factorize(d)
        .iter()
        .map(|&(p, _)| p.pow(valuation(p, n)))
        .product()
}
