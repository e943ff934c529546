//! Fixed-point evaluation of phase sums.
//!
//! Values are bigints scaled by 2^WORKING_BITS. Unit phases are computed by
//! Taylor series with π from Machin's formula; every term is accurate to a
//! few units in the last place, so a sum of weight W loses about log2(W)
//! bits. [`PRECISION_BITS`] is the accuracy promised to callers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::phase::{PhasePoint, PhaseSum};
use super::Scalar;

pub const PRECISION_BITS: u32 = 192;
const WORKING_BITS: u32 = 256;

fn one() -> BigInt {
    BigInt::one() << WORKING_BITS
}

fn arctan_inv(x: u32) -> BigInt {
    let x2 = BigInt::from(u64::from(x) * u64::from(x));
    let mut p = one() / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !p.is_zero() {
        let term = &p / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        p /= &x2;
        k += 1;
    }
    sum
}

fn two_pi() -> BigInt {
    (arctan_inv(5) * 16 - arctan_inv(239) * 4) * 2
}

fn cos_sin(theta: &BigInt) -> (BigInt, BigInt) {
    let unit = one();
    let t2 = theta * theta / &unit;
    let mut c = BigInt::zero();
    let mut t = unit.clone();
    let mut k = 0u64;
    while !t.is_zero() {
        c += &t;
        t = -(&t * &t2 / &unit) / ((2 * k + 1) * (2 * k + 2));
        k += 1;
    }
    let mut s = BigInt::zero();
    let mut t = theta.clone();
    let mut k = 0u64;
    while !t.is_zero() {
        s += &t;
        t = -(&t * &t2 / &unit) / ((2 * k + 2) * (2 * k + 3));
        k += 1;
    }
    (c, s)
}

/// Evaluates phase sums, caching `e(r)` per phase point.
///
/// Reuse one evaluator across many sums with shared denominators.
pub struct PhaseEvaluator {
    two_pi: BigInt,
    cache: BTreeMap<PhasePoint, (BigInt, BigInt)>,
}

impl Default for PhaseEvaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl PhaseEvaluator {
    pub fn new() -> Self {
        PhaseEvaluator {
            two_pi: two_pi(),
            cache: BTreeMap::new(),
        }
    }

    fn unit(&mut self, p: PhasePoint) -> &(BigInt, BigInt) {
        let two_pi = &self.two_pi;
        self.cache.entry(p).or_insert_with(|| {
            let (n, d) = (p.numer() as i128, p.denom() as i128);
            // angle in (-π, π]
            let n = if 2 * n > d { n - d } else { n };
            let theta = two_pi * BigInt::from(n) / BigInt::from(d);
            cos_sin(&theta)
        })
    }

    pub fn eval(&mut self, sum: &PhaseSum) -> NumericValue {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (p, c) in sum.terms() {
            let (cr, ci) = self.unit(p);
            re += cr * c;
            im += ci * c;
        }
        NumericValue { re, im }
    }
}

/// A complex number in fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericValue {
    re: BigInt,
    im: BigInt,
}

fn fixed_to_f64(v: &BigInt) -> f64 {
    // 2^-256 as an exact f64
    let scale = f64::from_bits(u64::from(1023 - WORKING_BITS) << 52);
    v.to_f64().unwrap_or(f64::NAN) * scale
}

fn pow10(k: u32) -> BigInt {
    let mut p = BigInt::one();
    for _ in 0..k {
        p *= 10;
    }
    p
}

fn fixed_to_decimal(v: &BigInt, digits: u32) -> String {
    let a = v.abs();
    let ten = pow10(digits);
    let half = BigInt::one() << (WORKING_BITS - 1);
    let scaled = (&a * &ten + half) >> WORKING_BITS;
    let int = &scaled / &ten;
    let frac = &scaled % &ten;
    let sign = if v.sign() == Sign::Minus && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{int}.{:0>width$}",
        frac.to_str_radix(10),
        width = digits as usize
    )
}

impl NumericValue {
    pub fn re_f64(&self) -> f64 {
        fixed_to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        fixed_to_f64(&self.im)
    }

    fn abs_fixed(&self) -> BigInt {
        (&self.re * &self.re + &self.im * &self.im).sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        fixed_to_f64(&self.abs_fixed())
    }

    pub fn re_decimal(&self, digits: u32) -> String {
        fixed_to_decimal(&self.re, digits)
    }

    pub fn im_decimal(&self, digits: u32) -> String {
        fixed_to_decimal(&self.im, digits)
    }

    pub fn abs_decimal(&self, digits: u32) -> String {
        fixed_to_decimal(&self.abs_fixed(), digits)
    }

    /// `|v|² ≤ bound_sq`, decided exactly on the fixed-point value.
    pub fn abs_squared_le(&self, bound_sq: &Scalar) -> bool {
        let lhs = (&self.re * &self.re + &self.im * &self.im) * bound_sq.denom();
        lhs <= bound_sq.numer() << (2 * WORKING_BITS)
    }

    /// `|v| ≤ bound + tol`.
    pub fn abs_le(&self, bound: &Scalar, tol: &Scalar) -> bool {
        let b = bound + tol;
        !b.is_negative() && self.abs_squared_le(&(&b * &b))
    }

    /// Both `|Re v − n|` and `|Im v|` are below `10^-digits`.
    pub fn distance_to_integer_below(&self, n: i64, digits: u32) -> bool {
        let ten = pow10(digits);
        let dr = (&self.re - (BigInt::from(n) << WORKING_BITS)).abs() * &ten;
        let di = self.im.abs() * &ten;
        dr < one() && di < one()
    }
}

#[cfg(test)]
mod tests {
    use super::super::frac;
    use super::*;

    #[test]
    fn pi_digits() {
        // 2π/2 to 40 places
        let pi = two_pi() / 2;
        assert_eq!(
            fixed_to_decimal(&pi, 40),
            "3.1415926535897932384626433832795028841972"
        );
    }

    #[test]
    fn unit_values() {
        let mut ev = PhaseEvaluator::new();
        let v = ev.eval(&PhaseSum::single(PhasePoint::new(1, 4)));
        assert!(v.re_f64().abs() < 1e-60);
        assert_eq!(v.im_decimal(30), "1.000000000000000000000000000000");
        let v = ev.eval(&PhaseSum::single(PhasePoint::new(1, 3)));
        assert_eq!(v.re_decimal(30), "-0.500000000000000000000000000000");
        // cos(2π/5) = (√5 − 1)/4
        let v = ev.eval(&PhaseSum::single(PhasePoint::new(1, 5)));
        assert_eq!(v.re_decimal(30), "0.309016994374947424102293417183");
        assert!(v.abs_le(&frac(1, 1), &frac(1, 1_000_000_000_000_000)));
        assert!(!v.abs_le(&frac(99, 100), &frac(0, 1)));
    }

    #[test]
    fn negative_zero_prints_unsigned() {
        assert_eq!(fixed_to_decimal(&BigInt::from(-1), 5), "0.00000");
    }
}
