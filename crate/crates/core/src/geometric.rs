//! Truncated geometric-side sums and the density-exponent calculus.
//!
//! ```text
//! S_Γ(s1s2s1)   = Σ_{c1 ≤ Z}               Kl((c1, c1))  / c1²
//! S_Γ(s2s1s2)   = Σ_{c1 ≤ Z}               Kl((c1, c1²)) / c1³
//! S_Γ(s1s2s1s2) = Σ_{c1 ≤ Z, c2 ≤ Z²}      Kl((c1, c2))  / (c1·c2)
//! ```
//!
//! The truncations are taken literally with constant 1.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{part_supported_on, valuation};
use crate::exact::{frac, int, NumericValue, PhaseSum, Scalar};
use crate::gsp4::{CharacterPair, Modulus, WeylWord};
use crate::kloosterman::{evaluate, EnumerationConfig, KlError, KloostermanQuery};
use crate::lattice::LatticeDesc;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeometricError {
    #[error("{0} does not carry a geometric-side sum")]
    UnsupportedWeyl(WeylWord),
    #[error("truncation must be positive")]
    NonPositiveTruncation,
    #[error(transparent)]
    Kl(#[from] KlError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricSumSpec {
    pub lattice: LatticeDesc,
    pub w: WeylWord,
    pub z: Scalar,
}

/// `κ(w)`: the exponent of `Z` bounding `c2`.
pub fn kappa(w: WeylWord) -> Option<u32> {
    match w {
        WeylWord::S1S2S1 => Some(1),
        WeylWord::S2S1S2 | WeylWord::Long => Some(2),
        _ => None,
    }
}

impl GeometricSumSpec {
    pub fn new(lattice: LatticeDesc, w: WeylWord, z: Scalar) -> Result<Self, GeometricError> {
        kappa(w).ok_or(GeometricError::UnsupportedWeyl(w))?;
        if z <= Scalar::zero() {
            return Err(GeometricError::NonPositiveTruncation);
        }
        Ok(GeometricSumSpec { lattice, w, z })
    }

    fn floor_pow(&self, k: u32) -> u64 {
        let mut p = Scalar::from_integer(1.into());
        for _ in 0..k {
            p *= &self.z;
        }
        p.floor().to_integer().to_u64().unwrap_or(0)
    }

    /// The moduli in range, sorted by `(c1, c2)`.
    pub fn moduli(&self) -> Vec<Modulus> {
        let z1 = self.floor_pow(1);
        match self.w {
            WeylWord::S1S2S1 => (1..=z1).map(|c| Modulus::new(c, c)).collect(),
            WeylWord::S2S1S2 => (1..=z1).map(|c| Modulus::new(c, c * c)).collect(),
            _ => {
                let z2 = self.floor_pow(2);
                (1..=z1)
                    .flat_map(|c1| (1..=z2).map(move |c2| Modulus::new(c1, c2)))
                    .collect()
            }
        }
    }

    /// The denominator attached to a modulus: `c1²`, `c1³` or `c1·c2`.
    pub fn weight(&self, c: Modulus) -> u64 {
        match self.w {
            WeylWord::S1S2S1 => c.c1 * c.c1,
            WeylWord::S2S1S2 => c.c1 * c.c1 * c.c1,
            _ => c.c1 * c.c2,
        }
    }
}

/// One ledger line.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricTerm {
    pub c: Modulus,
    pub admissible: bool,
    pub set_size: usize,
    pub kl: PhaseSum,
    pub weight: u64,
}

/// `Σ kl/weight`, kept as a single phase sum over a common denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricTotal {
    pub spec: GeometricSumSpec,
    pub terms: Vec<GeometricTerm>,
    pub numerator: PhaseSum,
    pub denominator: u64,
}

impl GeometricTotal {
    pub fn from_terms(spec: GeometricSumSpec, mut terms: Vec<GeometricTerm>) -> Self {
        terms.sort_by_key(|t| (t.c.c1, t.c.c2));
        let denominator = terms
            .iter()
            .filter(|t| !t.kl.is_empty())
            .fold(1u64, |l, t| l.lcm(&t.weight));
        let mut numerator = PhaseSum::zero();
        for t in &terms {
            if !t.kl.is_empty() {
                numerator = numerator + t.kl.scale((denominator / t.weight) as i64);
            }
        }
        GeometricTotal {
            spec,
            terms,
            numerator,
            denominator,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero_value()
    }

    /// Numeric value of the numerator; divide by `denominator` for the sum.
    pub fn numeric_numerator(&self) -> NumericValue {
        self.numerator.numeric()
    }

    /// `|S| ≤ bound + tol`.
    pub fn abs_le(&self, bound: &Scalar, tol: &Scalar) -> bool {
        let d = int(self.denominator as i64);
        self.numeric_numerator().abs_le(&(bound * &d), &(tol * &d))
    }

    /// The sum if its value is rational.
    pub fn as_rational(&self) -> Option<Scalar> {
        Some(frac(self.numerator.as_integer()?, self.denominator as i64))
    }
}

/// One term of the geometric side.
pub fn geometric_term(
    spec: &GeometricSumSpec,
    chars: CharacterPair,
    c: Modulus,
    cfg: &EnumerationConfig,
) -> Result<GeometricTerm, KlError> {
    let e = evaluate(&KloostermanQuery::new(spec.lattice, spec.w, c, chars), cfg)?;
    Ok(GeometricTerm {
        c,
        admissible: e.admissible,
        set_size: e.set_size,
        kl: e.value,
        weight: spec.weight(c),
    })
}

/// `S_Γ(w)` at truncation `Z`, sequentially.
pub fn geometric_sum(
    spec: &GeometricSumSpec,
    chars: CharacterPair,
    cfg: &EnumerationConfig,
) -> Result<GeometricTotal, KlError> {
    let terms = spec
        .moduli()
        .into_iter()
        .map(|c| geometric_term(spec, chars, c, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeometricTotal::from_terms(spec.clone(), terms))
}

/// A nonzero long-element term split as `c = d·c'` with `d` the `q`-part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplitKey {
    /// `v_q(c2)` when `d = (q, q^i)`; `None` for any other shape of `d`.
    pub i: Option<u32>,
    pub d: Modulus,
    pub cofactor: Modulus,
}

/// Keys of the nonzero terms, grouped by local part then cofactor.
pub fn split_by_level(total: &GeometricTotal, q: u64) -> Vec<SplitKey> {
    let mut keys: Vec<SplitKey> = total
        .terms
        .iter()
        .filter(|t| !t.kl.is_zero_value())
        .map(|t| {
            let d = Modulus::new(part_supported_on(t.c.c1, q), part_supported_on(t.c.c2, q));
            let i = valuation(q, d.c2);
            SplitKey {
                i: (d.c1 == q && q.checked_pow(i) == Some(d.c2)).then_some(i),
                d,
                cofactor: Modulus::new(t.c.c1 / d.c1, t.c.c2 / d.c2),
            }
        })
        .collect();
    keys.sort();
    keys
}

/// `δ = 3α − 1` for `Z ≍ 𝒱^α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub alpha: Scalar,
    pub delta: Scalar,
    pub meets_density_hypothesis: bool,
}

pub fn density_exponent(alpha: Scalar) -> ExponentReport {
    assert!(alpha >= Scalar::zero(), "alpha must be nonnegative");
    let delta = int(3) * &alpha - int(1);
    ExponentReport {
        meets_density_hypothesis: alpha >= frac(1, 3),
        alpha,
        delta,
    }
}

/// `Z₀ = 𝒱^{1/3}`, together with its power of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovolumePower {
    pub covolume_exponent: Scalar,
    pub q_exponent: Scalar,
}

pub fn z0(lattice: LatticeDesc) -> CovolumePower {
    let e = frac(1, 3);
    CovolumePower {
        q_exponent: int(lattice.covolume_q_power().into()) * &e,
        covolume_exponent: e,
    }
}

/// `α` with `Z = q^{z_exponent}` and `𝒱 ≍ q^{covolume power}`.
pub fn alpha_for(lattice: LatticeDesc, z_exponent: Scalar) -> Option<Scalar> {
    let v = lattice.covolume_q_power();
    (v > 0).then(|| z_exponent / int(v.into()))
}
