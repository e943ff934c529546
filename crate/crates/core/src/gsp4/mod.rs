//! Exact GSp(4) algebra.
//!
//! The symplectic form is `J = [[0, I], [-I, 0]]` in 2×2 blocks, and
//! `GSp(4) = {g : gᵀJg = μ(g)·J}`. Unipotent elements are written
//! `n(x)·s(T)`; note that `n(x)` carries `−x` in slot (4,3), so `U` is upper
//! triangular only after swapping the last two basis vectors.

mod bruhat;
mod character;
mod matrix;
mod unipotent;
mod weyl;

pub use bruhat::{assemble, bruhat_cell, BruhatData};
pub use character::{
    conjugated_character, CharacterPair, CharacterRequirement, Modulus, NormalizedTorus,
};
pub use matrix::Matrix4;
pub use unipotent::{Coord, CoordSet, LeftCoset, UnipotentCoords};
pub use weyl::{u_w_coordinates, weyl_matrix, Root, WeylWord};

use crate::exact::{one, zero, Scalar};
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("matrix is not in GSp(4)")]
    NotSymplectic,
    #[error("embedding i(·) needs an invertible 2×2 matrix")]
    SingularEmbedding,
    #[error("torus entries must be nonzero")]
    SingularTorus,
    #[error("cannot parse Weyl word {0:?}")]
    BadWord(alloc::string::String),
}

/// The fixed symplectic form.
pub fn j_matrix() -> Matrix4 {
    Matrix4::from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

/// The scalar μ with `gᵀJg = μJ`.
pub fn multiplier(g: &Matrix4) -> Result<Scalar, GroupError> {
    let form = &(&g.transpose() * &j_matrix()) * g;
    let mu = form.0[0][2].clone();
    if mu.is_zero() || form != j_matrix().scale(&mu) {
        return Err(GroupError::NotSymplectic);
    }
    Ok(mu)
}

/// An element of GSp(4, ℚ) with its multiplier cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSpElement {
    m: Matrix4,
    mu: Scalar,
}

impl GSpElement {
    pub fn new(m: Matrix4) -> Result<Self, GroupError> {
        let mu = multiplier(&m)?;
        Ok(GSpElement { m, mu })
    }

    /// Wrap a matrix known to lie in Sp(4) by construction; checked in debug
    /// builds only.
    pub(crate) fn new_unit_multiplier(m: Matrix4) -> Self {
        debug_assert_eq!(multiplier(&m), Ok(one()));
        GSpElement { m, mu: one() }
    }

    pub fn identity() -> Self {
        GSpElement {
            m: Matrix4::identity(),
            mu: one(),
        }
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix4 {
        self.m
    }

    pub fn multiplier(&self) -> &Scalar {
        &self.mu
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.m.0[i][j]
    }

    /// `g⁻¹ = μ⁻¹·J⁻¹gᵀJ`.
    pub fn inverse(&self) -> Self {
        let j = j_matrix();
        let inv = (&(&j.scale(&-one()) * &self.m.transpose()) * &j).scale(&(one() / &self.mu));
        GSpElement {
            m: inv,
            mu: one() / &self.mu,
        }
    }

    pub fn mul(&self, rhs: &GSpElement) -> GSpElement {
        GSpElement {
            m: &self.m * &rhs.m,
            mu: &self.mu * &rhs.mu,
        }
    }

    pub fn conjugate(&self, h: &GSpElement) -> GSpElement {
        self.mul(h).mul(&self.inverse())
    }
}

impl core::ops::Mul<&GSpElement> for &GSpElement {
    type Output = GSpElement;
    fn mul(self, rhs: &GSpElement) -> GSpElement {
        GSpElement::mul(self, rhs)
    }
}

/// Named generators with their parameters.
#[derive(Clone, Debug)]
pub enum Generator {
    /// `n(x)`
    N(Scalar),
    /// `s(T)` for `T = [[a, b], [b, c]]`
    S(Scalar, Scalar, Scalar),
    /// `i(g)` for `g = [[a, b], [c, d]]`
    I([[Scalar; 2]; 2]),
    /// `t(x, y) = diag(x, y, 1/x, 1/y)`
    T(Scalar, Scalar),
    /// `c* = t(1/c1, c1/c2)`
    CStar(Modulus),
}

pub fn make_generator(kind: Generator) -> Result<GSpElement, GroupError> {
    let m = match kind {
        Generator::N(x) => UnipotentCoords::new(x, zero(), zero(), zero()).to_matrix(),
        Generator::S(a, b, c) => UnipotentCoords::new(zero(), a, b, c).to_matrix(),
        Generator::I([[a, b], [c, d]]) => {
            let det = &a * &d - &b * &c;
            if det.is_zero() {
                return Err(GroupError::SingularEmbedding);
            }
            let z = zero;
            Matrix4([
                [det, z(), z(), z()],
                [z(), a, z(), b],
                [z(), z(), one(), z()],
                [z(), c, z(), d],
            ])
        }
        Generator::T(x, y) => {
            if x.is_zero() || y.is_zero() {
                return Err(GroupError::SingularTorus);
            }
            let (ix, iy) = (one() / &x, one() / &y);
            Matrix4::diagonal([x, y, ix, iy])
        }
        Generator::CStar(c) => return Ok(c.c_star()),
    };
    GSpElement::new(m)
}

/// `t(x, y)` for nonzero rationals.
pub fn torus(x: &Scalar, y: &Scalar) -> GSpElement {
    make_generator(Generator::T(x.clone(), y.clone())).expect("torus entries must be nonzero")
}

pub(crate) fn int_matrix(rows: [[i64; 4]; 4]) -> Matrix4 {
    Matrix4::from_i64(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn multipliers() {
        assert_eq!(multiplier(&Matrix4::identity()), Ok(one()));
        let d = int_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]);
        assert_eq!(multiplier(&d), Ok(int(-1)));
        let bad = int_matrix([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(multiplier(&bad), Err(GroupError::NotSymplectic));
    }

    #[test]
    fn generators_match_displays() {
        let t = make_generator(Generator::T(one(), one())).unwrap();
        assert_eq!(t, GSpElement::identity());
        let cs = make_generator(Generator::CStar(Modulus::new(3, 3))).unwrap();
        assert_eq!(
            cs.matrix(),
            &Matrix4::diagonal([frac(1, 3), one(), int(3), one()])
        );
        assert_eq!(cs.multiplier(), &one());
        let n1 = make_generator(Generator::N(one())).unwrap();
        let s0 = make_generator(Generator::S(zero(), zero(), zero())).unwrap();
        assert_eq!(
            n1.mul(&s0).matrix(),
            &int_matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]])
        );
        let g = make_generator(Generator::I([[int(2), int(1)], [int(3), int(2)]])).unwrap();
        assert_eq!(g.multiplier(), &one());
        let g = make_generator(Generator::I([[int(2), int(0)], [int(0), int(3)]])).unwrap();
        assert_eq!(g.multiplier(), &int(6));
        assert_eq!(
            make_generator(Generator::I([[int(1), int(2)], [int(2), int(4)]])),
            Err(GroupError::SingularEmbedding)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let g = make_generator(Generator::I([[int(2), int(0)], [int(0), int(3)]]))
            .unwrap()
            .mul(&make_generator(Generator::S(frac(1, 2), int(3), frac(-2, 5))).unwrap())
            .mul(&make_generator(Generator::N(frac(7, 3))).unwrap());
        assert_eq!(g.mul(&g.inverse()), GSpElement::identity());
        assert_eq!(g.inverse().mul(&g), GSpElement::identity());
    }
}
