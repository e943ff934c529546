//! Canonical forms in ℤ[ζ_n].
//!
//! ℤ[ζ_n] is the tensor product of the ℤ[ζ_{p^e}] over the prime powers
//! exactly dividing n, and each factor has the power basis
//! `1, ζ, …, ζ^{φ(p^e)−1}`. A phase `k/n` splits by CRT into `Σ k_P/P`, each
//! `ζ_P^{k_P}` is rewritten in its factor's basis using
//! `Φ_{p^e}(x) = Σ_{j<p} x^{j·p^{e−1}}`, and the product of these expansions
//! is the coordinate vector in the tensor basis. Coordinates are unique, so
//! equality of values is equality of forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::phase::PhaseSum;
use crate::arith::{factorize, mod_inverse};

/// An element of ℤ[ζ_n] in the tensor power basis. Keys list one exponent
/// per prime power of `n`, in increasing prime order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicForm {
    pub n: u64,
    pub coeffs: BTreeMap<Vec<u32>, BigInt>,
}

/// `ζ_P^k` (`P = p^e`) in the basis `ζ^i`, `0 ≤ i < (p−1)p^{e−1}`.
fn expand_prime_power(p: u64, e: u32, k: u64) -> Vec<(u32, i64)> {
    let m = p.pow(e - 1);
    let top = (p - 1) * m;
    if k < top {
        vec![(k as u32, 1)]
    } else {
        let r = k - top;
        (0..p - 1).map(|j| ((r + j * m) as u32, -1)).collect()
    }
}

impl CyclotomicForm {
    /// Reduce `Σ c_r·e(r)` at level `n`, which must be a multiple of every
    /// denominator in the sum.
    pub fn reduce(sum: &PhaseSum, n: u64) -> Self {
        let parts: Vec<(u64, u32, u64, u64)> = factorize(n)
            .into_iter()
            .map(|(p, e)| {
                let pe = p.pow(e);
                let cof_inv = mod_inverse(((n / pe) % pe) as i64, pe).expect("coprime cofactor");
                (p, e, pe, cof_inv)
            })
            .collect();
        let mut coeffs: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ph, c) in sum.terms() {
            assert!(
                n.is_multiple_of(ph.denom()),
                "level {n} not a multiple of {}",
                ph.denom()
            );
            let k = u128::from(ph.numer()) * u128::from(n / ph.denom());
            let mut expansion: Vec<(Vec<u32>, i64)> = vec![(Vec::with_capacity(parts.len()), c)];
            for &(p, e, pe, cof_inv) in &parts {
                let kp = ((k % u128::from(pe)) * u128::from(cof_inv) % u128::from(pe)) as u64;
                let local = expand_prime_power(p, e, kp);
                let mut next = Vec::with_capacity(expansion.len() * local.len());
                for (key, coeff) in &expansion {
                    for &(i, s) in &local {
                        let mut key = key.clone();
                        key.push(i);
                        next.push((key, coeff * s));
                    }
                }
                expansion = next;
            }
            for (key, coeff) in expansion {
                let slot = coeffs.entry(key).or_insert_with(BigInt::zero);
                *slot += coeff;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        CyclotomicForm { n, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => {
                let (k, v) = self.coeffs.iter().next().unwrap();
                if k.iter().all(|&i| i == 0) {
                    v.to_i64()
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::PhasePoint;
    use super::*;
    use crate::arith::{divisors, mobius};
    use proptest::prelude::*;

    /// Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}, low degree first.
    fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
        let mut p: Vec<i128> = vec![1];
        let ds = divisors(n);
        for &d in &ds {
            if mobius(n / d) == 1 {
                let d = d as usize;
                let mut q = vec![0i128; p.len() + d];
                for (i, &c) in p.iter().enumerate() {
                    q[i + d] += c;
                    q[i] -= c;
                }
                p = q;
            }
        }
        for &d in &ds {
            if mobius(n / d) == -1 {
                let d = d as usize;
                let m = p.len() - 1;
                let mut q = vec![0i128; m - d + 1];
                for k in (0..=m - d).rev() {
                    q[k] = p[k + d] + if k + d <= m - d { q[k + d] } else { 0 };
                }
                p = q;
            }
        }
        p
    }

    /// Independent oracle: remainder of the sum's polynomial modulo Φ_n.
    fn remainder_mod_phi(sum: &PhaseSum, n: u64) -> Vec<i128> {
        let mut poly = vec![0i128; n as usize];
        for (p, c) in sum.terms() {
            poly[(p.numer() * (n / p.denom())) as usize] += i128::from(c);
        }
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        for top in (deg..poly.len()).rev() {
            let lead = poly[top];
            if lead != 0 {
                for (i, &c) in phi.iter().enumerate() {
                    poly[top - deg + i] -= lead * c;
                }
            }
        }
        poly.truncate(deg);
        while poly.last() == Some(&0) {
            poly.pop();
        }
        poly
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), [-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), [1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), [1, 0, -1, 0, 1]);
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn reduction_detects_relations() {
        let mut s = PhaseSum::zero();
        for k in 0..5 {
            s.add_term(PhasePoint::new(k, 5), 1);
        }
        assert!(CyclotomicForm::reduce(&s, 5).is_zero());
        assert!(CyclotomicForm::reduce(&s, 10).is_zero());
        let mut t = PhaseSum::zero();
        t.add_term(PhasePoint::new(1, 3), 1);
        t.add_term(PhasePoint::new(2, 3), 1);
        assert_eq!(CyclotomicForm::reduce(&t, 3).as_integer(), Some(-1));
        assert_eq!(CyclotomicForm::reduce(&t, 12).as_integer(), Some(-1));
    }

    proptest! {
        #[test]
        fn agrees_with_division_by_phi(
            terms in prop::collection::vec((0i64..200, prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 9, 10, 12, 15, 18, 20, 30, 36, 45, 60]), -2i64..3), 0..10)
        ) {
            let mut s = PhaseSum::zero();
            for (k, d, c) in terms {
                s.add_term(PhasePoint::new(k, d), c);
            }
            let n = s.order();
            let form = CyclotomicForm::reduce(&s, n);
            let rem = remainder_mod_phi(&s, n);
            prop_assert_eq!(form.is_zero(), rem.is_empty());
            let as_int = if rem.len() <= 1 { Some(rem.first().copied().unwrap_or(0) as i64) } else { None };
            prop_assert_eq!(form.as_integer(), as_int);
        }
    }
}
