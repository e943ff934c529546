//! Spectral parameters, Arthur types and the counting assembly for
//! paramodular lattices.

use core::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{divisors, factorize, phi, valuation};
use crate::exact::{frac, Scalar};
use crate::lattice::{LatticeDesc, LatticeKind};

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexRational {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        ComplexRational {
            re,
            im: Scalar::zero(),
        }
    }
}

impl core::ops::Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// `μ = (μ1, μ2) ∈ ℂ²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralParameter {
    pub mu1: ComplexRational,
    pub mu2: ComplexRational,
}

impl SpectralParameter {
    pub fn new(mu1: ComplexRational, mu2: ComplexRational) -> Self {
        SpectralParameter { mu1, mu2 }
    }

    pub fn is_tempered(&self) -> bool {
        self.mu1.re.is_zero() && self.mu2.re.is_zero()
    }
}

/// `μ = ((α1 + α2)/2, (α1 − α2)/2)`.
pub fn spectral_from_langlands(alpha1: Scalar, alpha2: Scalar) -> SpectralParameter {
    let half = frac(1, 2);
    SpectralParameter::new(
        ComplexRational::real((&alpha1 + &alpha2) * &half),
        ComplexRational::real((alpha1 - alpha2) * half),
    )
}

/// The self-dual parameter `(μ1, μ2, −μ2, −μ1)` on GL(4).
pub fn gl4_transfer(mu: &SpectralParameter) -> [ComplexRational; 4] {
    [mu.mu1.clone(), mu.mu2.clone(), -&mu.mu2, -&mu.mu1]
}

/// `σ = max |Re μi|`.
pub fn sigma_of(mu: &SpectralParameter) -> Scalar {
    let (a, b) = (mu.mu1.re.abs(), mu.mu2.re.abs());
    if a >= b {
        a
    } else {
        b
    }
}

/// Arthur parameter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArthurType {
    G,
    Y,
    Q,
    P,
    B,
    F,
}

impl ArthurType {
    pub const ALL: [ArthurType; 6] = [
        ArthurType::G,
        ArthurType::Y,
        ArthurType::Q,
        ArthurType::P,
        ArthurType::B,
        ArthurType::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArthurType::G => "general",
            ArthurType::Y => "Yoshida",
            ArthurType::Q => "Soudry",
            ArthurType::P => "Saito-Kurokawa",
            ArthurType::B => "Howe-Piatetski-Shapiro",
            ArthurType::F => "finite",
        }
    }

    /// Shape of the parameter `ψ`.
    pub fn shape(self) -> &'static str {
        match self {
            ArthurType::G => "μ⊠1, μ on GL(4)",
            ArthurType::Y => "(μ1⊠1)⊞(μ2⊠1), μi on GL(2)",
            ArthurType::Q => "μ⊠ν(2), μ on GL(2)",
            ArthurType::P => "(μ⊠1)⊞(ξ⊠ν(2)), μ on GL(2)",
            ArthurType::B => "(χ1⊠ν(2))⊞(χ2⊠ν(2))",
            ArthurType::F => "ξ⊠ν(4)",
        }
    }

    /// Order of the component group `𝒮_ψ`.
    pub fn component_group_order(self) -> u8 {
        match self {
            ArthurType::G | ArthurType::Q | ArthurType::F => 1,
            ArthurType::Y | ArthurType::P | ArthurType::B => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            ArthurType::G => 'G',
            ArthurType::Y => 'Y',
            ArthurType::Q => 'Q',
            ArthurType::P => 'P',
            ArthurType::B => 'B',
            ArthurType::F => 'F',
        }
    }
}

impl fmt::Display for ArthurType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("packet rules are only available for paramodular lattices of level > 1, got {0}")]
    UnsupportedLattice(LatticeDesc),
    #[error("sigma = {0} is outside [0, 3/2]")]
    SigmaOutOfRange(Scalar),
    #[error("type P needs the GL(2) datum")]
    MissingInput,
}

/// Data of the GL(2) form `μ` in a type-P parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaitoKurokawaDatum {
    /// Conductor `c(μ)`.
    pub conductor: u64,
    /// Whether `ε(1/2, μ) = 1`.
    pub root_number_plus: bool,
    /// Whether the Hecke character in `ψ` is trivial.
    pub character_trivial: bool,
}

/// What a packet of a given type contributes to `V_Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PacketRule {
    Zero,
    /// Same as the generic member of the packet.
    GenericCount,
    Dimension(u64),
    /// The constant function.
    ResidualPoint,
}

fn paramodular_level(lattice: LatticeDesc) -> Result<u64, SpectralError> {
    match lattice.kind {
        LatticeKind::Paramodular if lattice.q > 1 => Ok(lattice.q),
        _ => Err(SpectralError::UnsupportedLattice(lattice)),
    }
}

/// `Π_{p | q} ⌊(v_p(q) − v_p(c(μ)))/2⌋`, or 0 if the datum is excluded.
pub fn type_p_dimension(q: u64, datum: &SaitoKurokawaDatum) -> u64 {
    if !datum.root_number_plus
        || !datum.character_trivial
        || datum.conductor == 0
        || !q.is_multiple_of(datum.conductor)
    {
        return 0;
    }
    factorize(q)
        .into_iter()
        .map(|(p, e)| u64::from((e - valuation(p, datum.conductor)) / 2))
        .product()
}

pub fn paramodular_packet_contribution(
    t: ArthurType,
    lattice: LatticeDesc,
    datum: Option<&SaitoKurokawaDatum>,
) -> Result<PacketRule, SpectralError> {
    let q = paramodular_level(lattice)?;
    Ok(match t {
        ArthurType::B | ArthurType::Q => PacketRule::Zero,
        ArthurType::G | ArthurType::Y => PacketRule::GenericCount,
        ArthurType::P => PacketRule::Dimension(type_p_dimension(
            q,
            datum.ok_or(SpectralError::MissingInput)?,
        )),
        ArthurType::F => PacketRule::ResidualPoint,
    })
}

/// Sum of type-P dimensions over a list of GL(2) data.
pub fn type_p_count(q: u64, data: &[SaitoKurokawaDatum]) -> u64 {
    data.iter().map(|d| type_p_dimension(q, d)).sum()
}

/// Largest `σ` at which general-type forms can occur.
pub const GENERAL_CUTOFF: (i64, i64) = (9, 22);
/// Largest `σ` at which Yoshida-type forms can occur.
pub const YOSHIDA_CUTOFF: (i64, i64) = (7, 64);
/// Largest `σ` at which Saito-Kurokawa forms can occur.
pub const SAITO_KUROKAWA_CUTOFF: (i64, i64) = (1, 2);
/// `σ` of the constant function.
pub const SIGMA_TRIVIAL: (i64, i64) = (3, 2);

fn cutoff(c: (i64, i64)) -> Scalar {
    frac(c.0, c.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    ExactZero,
    Formula,
    ExternalInput,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeCount {
    pub tag: ArthurType,
    pub count: u64,
    pub provenance: Provenance,
}

/// External counts feeding the assembly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountingInputs {
    pub general: u64,
    pub yoshida: u64,
    /// Number (with multiplicity) of GL(2) forms contributing to type P.
    pub gl2: u64,
}

/// `N_Γ(σ; M)` split by Arthur type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingAssembly {
    pub lattice: LatticeDesc,
    pub sigma: Scalar,
    pub m: Scalar,
    pub columns: [TypeCount; 6],
    pub total: u64,
}

impl CountingAssembly {
    pub fn column(&self, t: ArthurType) -> u64 {
        self.columns
            .iter()
            .find(|c| c.tag == t)
            .map_or(0, |c| c.count)
    }
}

pub fn assemble_counting(
    lattice: LatticeDesc,
    sigma: Scalar,
    m: Scalar,
    inputs: CountingInputs,
) -> Result<CountingAssembly, SpectralError> {
    paramodular_level(lattice)?;
    if sigma.is_negative() || sigma > cutoff(SIGMA_TRIVIAL) {
        return Err(SpectralError::SigmaOutOfRange(sigma));
    }
    let gated = |tag, count, limit: (i64, i64)| {
        if sigma > cutoff(limit) {
            TypeCount {
                tag,
                count: 0,
                provenance: Provenance::ExactZero,
            }
        } else {
            TypeCount {
                tag,
                count,
                provenance: Provenance::ExternalInput,
            }
        }
    };
    let zero = |tag| TypeCount {
        tag,
        count: 0,
        provenance: Provenance::ExactZero,
    };
    let columns = [
        gated(ArthurType::G, inputs.general, GENERAL_CUTOFF),
        gated(ArthurType::Y, inputs.yoshida, YOSHIDA_CUTOFF),
        zero(ArthurType::Q),
        gated(ArthurType::P, inputs.gl2, SAITO_KUROKAWA_CUTOFF),
        zero(ArthurType::B),
        TypeCount {
            tag: ArthurType::F,
            count: 1,
            provenance: Provenance::Formula,
        },
    ];
    let total = columns.iter().map(|c| c.count).sum();
    Ok(CountingAssembly {
        lattice,
        sigma,
        m,
        columns,
        total,
    })
}

fn kronecker_minus_one(p: u64) -> i64 {
    match p % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

fn kronecker_minus_three(p: u64) -> i64 {
    if p == 3 {
        0
    } else if p % 3 == 1 {
        1
    } else {
        -1
    }
}

/// `dim S_k(Γ0(N))` for even `k ≥ 2`.
pub fn dim_cusp_forms(n: u64, k: u64) -> u64 {
    assert!(
        n >= 1 && k >= 2 && k.is_multiple_of(2),
        "need N ≥ 1 and even k ≥ 2"
    );
    let fs = factorize(n);
    let index: u64 = fs.iter().map(|&(p, e)| p.pow(e - 1) * (p + 1)).product();
    let nu2: i64 = if n.is_multiple_of(4) {
        0
    } else {
        fs.iter()
            .map(|&(p, _)| 1 + kronecker_minus_one(p))
            .product()
    };
    let nu3: i64 = if n.is_multiple_of(9) {
        0
    } else {
        fs.iter()
            .map(|&(p, _)| 1 + kronecker_minus_three(p))
            .product()
    };
    let cusps: u64 = divisors(n)
        .into_iter()
        .map(|d| phi(num_integer::gcd(d, n / d)))
        .sum();
    let k = k as i64;
    let dim = frac(k - 1, 12) * frac(index as i64, 1)
        + (frac(k / 4, 1) - frac(k - 1, 4)) * frac(nu2, 1)
        + (frac(k / 3, 1) - frac(k - 1, 3)) * frac(nu3, 1)
        - frac(cusps as i64, 2)
        + frac(i64::from(k == 2), 1);
    assert!(dim.is_integer() && !dim.is_negative());
    num_traits::ToPrimitive::to_u64(&dim.to_integer()).expect("dimension fits")
}

/// `dim S_k^new(Γ0(N))`, by inverting `dim S_k(Γ0(N)) = Σ_{M | N} τ(N/M)·dim S_k^new(Γ0(M))`.
pub fn dim_newforms(n: u64, k: u64) -> u64 {
    // Dirichlet inverse of τ: β(p) = −2, β(p²) = 1, β(p^e) = 0 for e ≥ 3
    let beta = |m: u64| -> i64 {
        factorize(m)
            .into_iter()
            .map(|(_, e)| match e {
                1 => -2,
                2 => 1,
                _ => 0,
            })
            .product()
    };
    let total: i64 = divisors(n)
        .into_iter()
        .map(|m| beta(n / m) * dim_cusp_forms(m, k) as i64)
        .sum();
    u64::try_from(total).expect("newform dimension is nonnegative")
}

/// Toy GL(2) input: newforms of weight `k` and level dividing `q`.
pub fn gl2_toy_count(q: u64, k: u64) -> u64 {
    divisors(q).into_iter().map(|d| dim_newforms(d, k)).sum()
}
