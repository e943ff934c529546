use core::fmt;

use num_traits::{Signed, Zero};

use super::unipotent::{Coord, UnipotentCoords};
use super::weyl::{u_w_coordinates, weyl_matrix, WeylWord};
use super::{torus, GSpElement};
use crate::exact::{frac, int, one, Scalar};

/// A modulus `c = (c1, c2)` of positive integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus {
    pub c1: u64,
    pub c2: u64,
}

impl Modulus {
    pub fn new(c1: u64, c2: u64) -> Self {
        assert!(c1 >= 1 && c2 >= 1, "modulus entries must be positive");
        Modulus { c1, c2 }
    }

    /// `c* = t(1/c1, c1/c2) = diag(1/c1, c1/c2, c1, c2/c1)`.
    pub fn c_star(&self) -> GSpElement {
        let (c1, c2) = (self.c1 as i64, self.c2 as i64);
        torus(&frac(1, c1), &frac(c1, c2))
    }

    /// `c*·w`, the monomial middle factor of the cell.
    pub fn cell_matrix(&self, w: WeylWord) -> GSpElement {
        self.c_star().mul(&weyl_matrix(w))
    }

    /// Recover `(c1, c2)` from the torus part `t(t1, t2)` of a Bruhat
    /// decomposition, splitting off the sign unit `t(ε1, ε2)` so that
    /// `t(t1, t2) = t(ε1, ε2)·c*`. `None` if the entries are not reciprocals of
    /// integers in the required pattern.
    pub fn from_torus(t1: &Scalar, t2: &Scalar) -> Option<NormalizedTorus> {
        if t1.is_zero() || t2.is_zero() {
            return None;
        }
        let c1 = one() / t1;
        let c2 = &c1 / t2;
        if !c1.is_integer() || !c2.is_integer() {
            return None;
        }
        let to_u64 = |v: &Scalar| num_traits::ToPrimitive::to_u64(&v.abs().to_integer());
        Some(NormalizedTorus {
            modulus: Modulus::new(to_u64(&c1)?, to_u64(&c2)?),
            sign: (sign(t1), sign(t2)),
        })
    }
}

fn sign(x: &Scalar) -> i8 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Torus data split as `t(ε1, ε2)·c*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizedTorus {
    pub modulus: Modulus,
    pub sign: (i8, i8),
}

impl NormalizedTorus {
    pub fn is_positive(&self) -> bool {
        self.sign == (1, 1)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.c1, self.c2)
    }
}

/// Character data `M = (M1, M2)` (left) and `N = (N1, N2)` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterPair {
    pub m: (i64, i64),
    pub n: (i64, i64),
}

impl CharacterPair {
    pub fn new(m: (i64, i64), n: (i64, i64)) -> Self {
        CharacterPair { m, n }
    }

    pub fn trivial_twist(n: (i64, i64)) -> Self {
        CharacterPair { m: (1, 1), n }
    }
}

/// What `ψ^{(M)}` conjugated into `Ū_w` demands of `N`.
///
/// `None` entries are unconstrained (the coordinate is not in `Ū_w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRequirement {
    pub n1: Option<Scalar>,
    pub n2: Option<Scalar>,
}

impl CharacterRequirement {
    pub fn satisfied_by(&self, n: (i64, i64)) -> bool {
        self.n1.as_ref().is_none_or(|v| *v == int(n.0))
            && self.n2.as_ref().is_none_or(|v| *v == int(n.1))
    }

    /// The unique integral `N` meeting the requirement, filling unconstrained
    /// coordinates from `fallback`; `None` if a required value is not an integer.
    pub fn resolve(&self, fallback: (i64, i64)) -> Option<(i64, i64)> {
        let pick = |req: &Option<Scalar>, fb: i64| match req {
            None => Some(fb),
            Some(v) if v.is_integer() => num_traits::ToPrimitive::to_i64(&v.to_integer()),
            Some(_) => None,
        };
        Some((pick(&self.n1, fallback.0)?, pick(&self.n2, fallback.1)?))
    }
}

/// The character `ū ↦ ψ^{(M)}(c*w·ū·(c*w)⁻¹)` on `Ū_w`, read off on each
/// root subgroup of `Ū_w`.
///
/// The conjugate of a root element `u_k(t)` is again a root element with
/// parameter proportional to `t`, so `ψ^{(M)}` of it is `e(λ_k·t)`. For the
/// `x` coordinate this forces `N1 = λ_x`, for `c` it forces `N2 = λ_c`, and
/// for `a`, `b` (which `ψ^{(N)}` does not see) it forces `λ = 0`; if that
/// fails no `N` works and the result is `None`.
pub fn conjugated_character(
    w: WeylWord,
    c: Modulus,
    m: (i64, i64),
) -> Option<CharacterRequirement> {
    let g = c.cell_matrix(w);
    let ginv = g.inverse();
    let (_, ubar) = u_w_coordinates(w);
    let mut req = CharacterRequirement { n1: None, n2: None };
    for k in ubar.iter() {
        let u = UnipotentCoords::basis(k, one()).to_matrix();
        let conj = &(g.matrix() * &u) * ginv.matrix();
        let cu = UnipotentCoords::from_matrix(&conj).expect("Ū_w conjugates into U");
        let lambda = cu.psi_argument(m.0, m.1);
        match k {
            Coord::X => req.n1 = Some(lambda),
            Coord::C => req.n2 = Some(lambda),
            Coord::A | Coord::B => {
                if !lambda.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(req)
}
