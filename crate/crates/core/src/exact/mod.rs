//! Exact scalars and cyclotomic phase sums.

mod cyclotomic;
mod numeric;
mod phase;

pub use cyclotomic::CyclotomicForm;
pub use numeric::{NumericValue, PhaseEvaluator, PRECISION_BITS};
pub use phase::{phase_of, IntegerValue, PhasePoint, PhaseSum};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; `Ratio` keeps it in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn fract(x: &Scalar) -> Scalar {
    x - x.floor()
}

/// Representative of `x mod 1` in `[offset, offset + 1)`.
pub fn reduce_into(x: &Scalar, offset: &Scalar) -> Scalar {
    offset + fract(&(x - offset))
}

/// Whether `x` lies in the lattice `m·ℤ` (`m > 0`).
pub fn in_lattice(x: &Scalar, m: &Scalar) -> bool {
    (x / m).is_integer()
}

/// Generator of the fractional ideal `aℤ + bℤ`. Both inputs must be nonzero.
pub fn rational_gcd(a: &Scalar, b: &Scalar) -> Scalar {
    let n = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    Scalar::new(n, a.denom() * b.denom()).abs()
}

/// Solutions of `alpha·z + beta ∈ m·ℤ` (with `alpha ≠ 0`), reduced mod 1.
///
/// The solution set is `-beta/alpha + (m/alpha)·ℤ`. With `m/alpha = n/r` in
/// lowest terms its image mod 1 is the coset `offset + (1/r)ℤ`.
pub fn solve_linear_mod1(alpha: &Scalar, beta: &Scalar, m: &Scalar) -> ProgressionMod1 {
    let start = -beta / alpha;
    let r = (m / alpha).denom().clone();
    let offset = fract(&(&start * &r)) / &r;
    ProgressionMod1 { offset, r }
}

/// The residues `offset + j/r mod 1`, `0 ≤ j < r`, with `0 ≤ offset < 1/r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionMod1 {
    pub offset: Scalar,
    pub r: BigInt,
}

impl ProgressionMod1 {
    pub fn len(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.r.to_u64().expect("progression length exceeds u64")
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_zero()
    }

    pub fn residues(&self) -> alloc::vec::Vec<Scalar> {
        (0..self.len())
            .map(|j| &self.offset + Scalar::new(BigInt::from(j), self.r.clone()))
            .collect()
    }

    pub fn contains(&self, z: &Scalar) -> bool {
        ((z - &self.offset) * Scalar::from_integer(self.r.clone())).is_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fract_and_lattices() {
        assert_eq!(fract(&frac(7, 3)), frac(1, 3));
        assert_eq!(fract(&frac(-1, 4)), frac(3, 4));
        assert_eq!(reduce_into(&frac(1, 4), &frac(1, 2)), frac(5, 4));
        assert!(in_lattice(&int(6), &int(3)));
        assert!(in_lattice(&frac(2, 3), &frac(1, 3)));
        assert!(!in_lattice(&frac(1, 2), &int(1)));
        assert_eq!(rational_gcd(&frac(1, 2), &frac(1, 3)), frac(1, 6));
        assert_eq!(rational_gcd(&int(4), &int(6)), int(2));
    }

    #[test]
    fn linear_progressions() {
        // 3z ∈ ℤ
        let p = solve_linear_mod1(&int(3), &zero(), &one());
        assert_eq!(p.residues(), [int(0), frac(1, 3), frac(2, 3)]);
        // 2z + 1/3 ∈ ℤ  ->  z ∈ {1/3, 5/6}
        let p = solve_linear_mod1(&int(2), &frac(1, 3), &one());
        let mut r = p.residues();
        r.sort();
        assert_eq!(r, [frac(1, 3), frac(5, 6)]);
        for z in &r {
            assert!(in_lattice(&(int(2) * z + frac(1, 3)), &one()));
        }
        // z/2 ∈ ℤ  ->  z ≡ 0 mod 1
        let p = solve_linear_mod1(&frac(1, 2), &zero(), &one());
        assert_eq!(p.residues(), [int(0)]);
        // 6z ∈ 3ℤ  ->  z ∈ {0, 1/2}
        let p = solve_linear_mod1(&int(6), &zero(), &int(3));
        assert_eq!(p.len(), 2);
    }
}
