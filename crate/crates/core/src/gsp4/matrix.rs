use core::fmt;
use core::ops::Mul;

use num_traits::{One, Zero};

use crate::exact::{int, Scalar};

/// A 4×4 matrix over ℚ, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix4(pub [[Scalar; 4]; 4]);

impl Matrix4 {
    pub fn zero() -> Self {
        Matrix4(core::array::from_fn(|_| {
            core::array::from_fn(|_| Scalar::zero())
        }))
    }

    pub fn identity() -> Self {
        Self::diagonal(core::array::from_fn(|_| Scalar::one()))
    }

    pub fn diagonal(d: [Scalar; 4]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        Matrix4(rows.map(|r| r.map(int)))
    }

    pub fn transpose(&self) -> Self {
        Matrix4(core::array::from_fn(|i| {
            core::array::from_fn(|j| self.0[j][i].clone())
        }))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Matrix4(core::array::from_fn(|i| {
            core::array::from_fn(|j| &self.0[i][j] * k)
        }))
    }

    pub fn row(&self, i: usize) -> &[Scalar; 4] {
        &self.0[i]
    }

    /// Conjugation by a permutation of the basis: `out[i][j] = self[p[i]][p[j]]`.
    pub fn permute(&self, p: [usize; 4]) -> Self {
        Matrix4(core::array::from_fn(|i| {
            core::array::from_fn(|j| self.0[p[i]][p[j]].clone())
        }))
    }

    /// Positions of nonzero entries, as a bitmask over `4*i + j`.
    pub fn support(&self) -> u16 {
        let mut s = 0u16;
        for i in 0..4 {
            for j in 0..4 {
                if !self.0[i][j].is_zero() {
                    s |= 1 << (4 * i + j);
                }
            }
        }
        s
    }

    pub fn is_diagonal(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| i == j || self.0[i][j].is_zero()))
    }
}

impl Mul<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let mut acc = Scalar::zero();
                for k in 0..4 {
                    if !self.0[i][k].is_zero() && !rhs.0[k][j].is_zero() {
                        acc += &self.0[i][k] * &rhs.0[k][j];
                    }
                }
                acc
            })
        }))
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.0 {
            write!(f, "  [")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
