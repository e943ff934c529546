use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::cyclotomic::CyclotomicForm;
use super::numeric::{NumericValue, PhaseEvaluator};
use super::{fract, Scalar};
use crate::arith::{mobius, phi};

/// A point of ℚ/ℤ, stored as the reduced fraction `num/den` in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhasePoint {
    num: u64,
    den: u64,
}

impl PhasePoint {
    pub const ZERO: PhasePoint = PhasePoint { num: 0, den: 1 };

    /// `num/den mod 1`; `den` must be positive.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "phase denominator must be positive");
        let n = num.rem_euclid(den as i64) as u64;
        let g = n.gcd(&den);
        PhasePoint {
            num: n / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn to_scalar(&self) -> Scalar {
        super::frac(self.num as i64, self.den as i64)
    }
}

impl Ord for PhasePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl PartialOrd for PhasePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PhasePoint {
    type Output = PhasePoint;
    fn add(self, rhs: PhasePoint) -> PhasePoint {
        let den = self.den.lcm(&rhs.den);
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        PhasePoint::new((num % den) as i64, den)
    }
}

impl fmt::Debug for PhasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PhasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The argument of `e(x)`, reduced mod 1.
///
/// Panics if the reduced denominator does not fit in 64 bits; no quantity in
/// this crate comes anywhere near that.
pub fn phase_of(x: &Scalar) -> PhasePoint {
    let r = fract(x);
    let num = r.numer().to_u64().expect("phase numerator exceeds u64");
    let den = r.denom().to_u64().expect("phase denominator exceeds u64");
    PhasePoint { num, den }
}

/// Result of integer detection on a [`PhaseSum`].
#[derive(Clone, Debug, PartialEq)]
pub enum IntegerValue {
    Exact(i64),
    NotInteger(NumericValue),
}

/// A finite sum `Σ c_r·e(r)` with integer coefficients.
///
/// Equality compares values: two sums are equal iff their reductions in
/// ℤ[ζ_n] (n the lcm of all denominators) coincide.
#[derive(Clone, Default)]
pub struct PhaseSum {
    terms: BTreeMap<PhasePoint, i64>,
}

impl PhaseSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The integer `n` as the sum `n·e(0)`.
    pub fn integer(n: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(PhasePoint::ZERO, n);
        s
    }

    pub fn single(p: PhasePoint) -> Self {
        let mut s = Self::zero();
        s.add_term(p, 1);
        s
    }

    pub fn add_term(&mut self, p: PhasePoint, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(p).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (PhasePoint, i64)> + '_ {
        self.terms.iter().map(|(p, c)| (*p, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when no terms are stored (structurally empty, not merely zero-valued).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// lcm of the term denominators (1 for the empty sum).
    pub fn order(&self) -> u64 {
        self.terms.keys().fold(1, |acc, p| acc.lcm(&p.den))
    }

    /// Σ |c_r|, the trivial bound on the absolute value.
    pub fn weight(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut s = Self::zero();
        for (p, c) in self.terms() {
            s.add_term(p, c * k);
        }
        s
    }

    /// Galois conjugate `e(r) -> e(-r)`, i.e. complex conjugation.
    pub fn conj(&self) -> Self {
        let mut s = Self::zero();
        for (p, c) in self.terms() {
            s.add_term(PhasePoint::new(-(p.num as i64), p.den), c);
        }
        s
    }

    /// Canonical form in ℤ[x]/Φ_n(x) at the sum's own order.
    pub fn canonical(&self) -> CyclotomicForm {
        CyclotomicForm::reduce(self, self.order())
    }

    /// Value as an integer when it is one.
    ///
    /// Fast path: when every denominator's terms form complete orbits of
    /// primitive roots with a common coefficient, the value is Σ c·μ(d).
    /// Otherwise the exact cyclotomic reduction decides.
    pub fn is_integer_value(&self) -> IntegerValue {
        if let Some(n) = self.mobius_orbit_value() {
            return IntegerValue::Exact(n);
        }
        match self.canonical().as_integer() {
            Some(n) => IntegerValue::Exact(n),
            None => IntegerValue::NotInteger(self.numeric()),
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.is_integer_value() {
            IntegerValue::Exact(n) => Some(n),
            IntegerValue::NotInteger(_) => None,
        }
    }

    fn mobius_orbit_value(&self) -> Option<i64> {
        let mut by_den: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
        for (p, c) in self.terms() {
            by_den.entry(p.den).or_default().push(c);
        }
        let mut total = 0i64;
        for (d, coeffs) in by_den {
            if coeffs.len() as u64 != phi(d) || coeffs.iter().any(|&c| c != coeffs[0]) {
                return None;
            }
            total += coeffs[0] * mobius(d);
        }
        Some(total)
    }

    /// Value equality decided exactly.
    pub fn value_eq(&self, other: &PhaseSum) -> bool {
        (self - other).is_zero_value()
    }

    pub fn is_zero_value(&self) -> bool {
        self.is_empty() || self.canonical().is_zero()
    }

    /// High-precision numeric value (see [`PRECISION_BITS`](super::PRECISION_BITS)).
    pub fn numeric(&self) -> NumericValue {
        PhaseEvaluator::new().eval(self)
    }
}

impl PartialEq for PhaseSum {
    fn eq(&self, other: &Self) -> bool {
        self.value_eq(other)
    }
}

impl fmt::Debug for PhaseSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl AddAssign<&PhaseSum> for PhaseSum {
    fn add_assign(&mut self, rhs: &PhaseSum) {
        for (p, c) in rhs.terms() {
            self.add_term(p, c);
        }
    }
}

impl Add<&PhaseSum> for &PhaseSum {
    type Output = PhaseSum;
    fn add(self, rhs: &PhaseSum) -> PhaseSum {
        let mut s = self.clone();
        s += rhs;
        s
    }
}

impl Add for PhaseSum {
    type Output = PhaseSum;
    fn add(mut self, rhs: PhaseSum) -> PhaseSum {
        self += &rhs;
        self
    }
}

impl Neg for &PhaseSum {
    type Output = PhaseSum;
    fn neg(self) -> PhaseSum {
        self.scale(-1)
    }
}

impl Sub<&PhaseSum> for &PhaseSum {
    type Output = PhaseSum;
    fn sub(self, rhs: &PhaseSum) -> PhaseSum {
        self + &(-rhs)
    }
}

impl Mul<&PhaseSum> for &PhaseSum {
    type Output = PhaseSum;
    fn mul(self, rhs: &PhaseSum) -> PhaseSum {
        let mut s = PhaseSum::zero();
        for (p, c) in self.terms() {
            for (r, d) in rhs.terms() {
                s.add_term(p + r, c * d);
            }
        }
        s
    }
}

impl core::iter::Sum for PhaseSum {
    fn sum<I: Iterator<Item = PhaseSum>>(iter: I) -> Self {
        iter.fold(PhaseSum::zero(), |acc, s| acc + s)
    }
}

impl From<i64> for PhaseSum {
    fn from(n: i64) -> Self {
        PhaseSum::integer(n)
    }
}

impl Zero for PhaseSum {
    fn zero() -> Self {
        PhaseSum::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, int};
    use super::*;
    use proptest::prelude::*;

    fn sum_of(terms: &[(i64, u64, i64)]) -> PhaseSum {
        let mut s = PhaseSum::zero();
        for &(n, d, c) in terms {
            s.add_term(PhasePoint::new(n, d), c);
        }
        s
    }

    #[test]
    fn phase_of_reduces_mod_one() {
        assert_eq!(phase_of(&frac(7, 3)), PhasePoint::new(1, 3));
        assert_eq!(phase_of(&frac(-1, 4)), PhasePoint::new(3, 4));
        assert_eq!(phase_of(&int(5)), PhasePoint::ZERO);
    }

    #[test]
    fn addition_drops_zero_terms() {
        let s = sum_of(&[(0, 1, 1)]) + sum_of(&[(0, 1, 1)]);
        assert_eq!(s.terms().collect::<Vec<_>>(), [(PhasePoint::ZERO, 2)]);
        let s = sum_of(&[(1, 2, 1)]) + sum_of(&[(1, 2, -1)]);
        assert!(s.is_empty());
    }

    #[test]
    fn integer_detection() {
        assert_eq!(sum_of(&[(0, 1, 9)]).as_integer(), Some(9));
        // primitive cube roots: μ(3) = -1
        let s = sum_of(&[(1, 3, 1), (2, 3, 1)]);
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.as_integer(), Some(-1));
        match sum_of(&[(1, 4, 1)]).is_integer_value() {
            IntegerValue::NotInteger(v) => {
                assert!(v.re_f64().abs() < 1e-30);
                assert!((v.im_f64() - 1.0).abs() < 1e-30);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cancellation_across_orders() {
        // e(1/6) + e(2/3) = 0 although neither denominator carries a full orbit.
        let s = sum_of(&[(1, 6, 1), (2, 3, 1)]);
        assert_eq!(s.as_integer(), Some(0));
        assert!(s.is_zero_value());
        // e(1/5)+e(4/5) is 2cos(2π/5), irrational
        assert_eq!(sum_of(&[(1, 5, 1), (4, 5, 1)]).as_integer(), None);
    }

    #[test]
    fn orthogonality() {
        for c in 1..=50u64 {
            let mut full = PhaseSum::zero();
            for x in 0..c {
                full.add_term(PhasePoint::new(x as i64, c), 1);
            }
            let expected = if c == 1 { 1 } else { 0 };
            assert_eq!(full.as_integer(), Some(expected), "c = {c}");
            let mut only_zero = PhaseSum::zero();
            only_zero.add_term(PhasePoint::new(0, c), 1);
            assert_eq!(only_zero.as_integer(), Some(1));
        }
    }

    fn arb_sum() -> impl Strategy<Value = PhaseSum> {
        prop::collection::vec((0i64..60, 1u64..30, -3i64..4), 0..8).prop_map(|v| sum_of(&v))
    }

    proptest! {
        #[test]
        fn phase_of_is_additive(a in -500i64..500, b in 1i64..40, c in -500i64..500, d in 1i64..40) {
            let x = frac(a, b);
            let y = frac(c, d);
            prop_assert_eq!(phase_of(&(&x + &y)), phase_of(&x) + phase_of(&y));
        }

        #[test]
        fn addition_is_commutative_and_associative(a in arb_sum(), b in arb_sum(), c in arb_sum()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &PhaseSum::zero(), a.clone());
            // structural equality too, not only value equality
            let l = &(&a + &b) + &c;
            let r = &a + &(&b + &c);
            prop_assert_eq!(l.terms().collect::<Vec<_>>(), r.terms().collect::<Vec<_>>());
        }

        #[test]
        fn numeric_agrees_with_integer_detection(a in arb_sum()) {
            if let Some(n) = a.as_integer() {
                let v = a.numeric();
                prop_assert!(v.distance_to_integer_below(n, 20));
            }
        }
    }
}
