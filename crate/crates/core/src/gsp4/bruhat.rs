//! Bruhat decomposition `g = x·(c*w)·x'` with `x ∈ U`, `x' ∈ U_w`.
//!
//! After reordering the basis as (e1, e2, e4, e3), `U` is upper unitriangular
//! and the Sp(4) decomposition is the restriction of the GL(4) one. The GL(4)
//! one comes from bottom-up elimination: each row's leftmost nonzero entry is
//! a pivot; entries right of a pivot are cleared with a lower row when that
//! column already carries a lower pivot (absorbed on the left), otherwise
//! with a column operation (absorbed on the right, and automatically an
//! inversion of `w`, so the right factor lands in `U_w`).

use num_traits::Zero;

use super::matrix::Matrix4;
use super::unipotent::UnipotentCoords;
use super::weyl::{weyl_matrix, WeylWord};
use super::{torus, GSpElement};
use crate::exact::Scalar;

const REORDER: [usize; 4] = [0, 1, 3, 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatData {
    pub w: WeylWord,
    /// `(t1, t2)` with `t(t1, t2)·w` the middle factor; for Kloosterman cells
    /// `t(t1, t2) = c*`.
    pub torus: (Scalar, Scalar),
    pub x: UnipotentCoords,
    pub xp: UnipotentCoords,
}

/// Decompose `g ∈ Sp(4, ℚ)`.
///
/// Panics if `μ(g) ≠ 1`.
pub fn bruhat_cell(g: &GSpElement) -> BruhatData {
    assert!(
        *g.multiplier() == crate::exact::one(),
        "Bruhat decomposition expects μ = 1"
    );
    let mut a = g.matrix().permute(REORDER);
    let mut left = Matrix4::identity();
    let mut right = Matrix4::identity();
    let mut pivot_col = [usize::MAX; 4];
    for i in (0..4).rev() {
        let j = (0..4)
            .find(|&j| !a.0[i][j].is_zero())
            .expect("invertible matrix has no zero row");
        pivot_col[i] = j;
        let piv = a.0[i][j].clone();
        for k in j + 1..4 {
            if a.0[i][k].is_zero() {
                continue;
            }
            if let Some(r) = (i + 1..4).find(|&r| pivot_col[r] == k) {
                // row_i -= beta·row_r; row r holds only its pivot
                let beta = &a.0[i][k] / &a.0[r][k];
                a.0[i][k] = Scalar::zero();
                for row in left.0.iter_mut() {
                    let v = &row[i] * &beta;
                    row[r] += v;
                }
            } else {
                // col_k -= alpha·col_j
                let alpha = &a.0[i][k] / &piv;
                for row in a.0.iter_mut() {
                    let v = &row[j] * &alpha;
                    row[k] -= v;
                }
                let rk = right.0[k].clone();
                for (dst, src) in right.0[j].iter_mut().zip(rk.iter()) {
                    *dst += src * &alpha;
                }
            }
        }
        for r in 0..i {
            if a.0[r][j].is_zero() {
                continue;
            }
            let beta = &a.0[r][j] / &piv;
            let ri = a.0[i].clone();
            for (dst, src) in a.0[r].iter_mut().zip(ri.iter()) {
                *dst -= src * &beta;
            }
            for row in left.0.iter_mut() {
                let v = &row[r] * &beta;
                row[i] += v;
            }
        }
    }
    let x_m = left.permute(REORDER);
    let xp_m = right.permute(REORDER);
    let mono = a.permute(REORDER);
    let w = WeylWord::from_monomial(&mono).expect("elimination leaves a Weyl pattern");
    let t = &mono * weyl_matrix(w).inverse().matrix();
    debug_assert!(t.is_diagonal());
    BruhatData {
        w,
        torus: (t.0[0][0].clone(), t.0[1][1].clone()),
        x: UnipotentCoords::from_matrix(&x_m).expect("left factor in U"),
        xp: UnipotentCoords::from_matrix(&xp_m).expect("right factor in U"),
    }
}

/// `x·t(t1, t2)·w·x'`.
pub fn assemble(d: &BruhatData) -> GSpElement {
    let mid = torus(&d.torus.0, &d.torus.1).mul(&weyl_matrix(d.w));
    let m = &(&d.x.to_matrix() * mid.matrix()) * &d.xp.to_matrix();
    GSpElement::new(m).expect("product of symplectic matrices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int, one, zero};
    use crate::gsp4::{u_w_coordinates, Coord, Modulus};
    use proptest::prelude::*;

    #[test]
    fn identity_is_trivial_cell() {
        let d = bruhat_cell(&GSpElement::identity());
        assert_eq!(d.w, WeylWord::Id);
        assert_eq!(d.torus, (one(), one()));
        assert_eq!(d.x, UnipotentCoords::identity());
        assert_eq!(d.xp, UnipotentCoords::identity());
    }

    #[test]
    fn klingen_cell_example() {
        // c*w for s1s2s1 at c = (q, q) with trivial unipotent parts
        let q = 5;
        let g = Modulus::new(q, q).cell_matrix(WeylWord::S1S2S1);
        assert_eq!(g.entry(2, 0), &int(q as i64));
        let d = bruhat_cell(&g);
        assert_eq!(d.w, WeylWord::S1S2S1);
        let n = Modulus::from_torus(&d.torus.0, &d.torus.1).unwrap();
        assert_eq!(n.modulus, Modulus::new(q, q));
        assert!(n.is_positive());
        assert_eq!(d.x, UnipotentCoords::identity());
        assert_eq!(d.xp, UnipotentCoords::identity());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-30i64..30, 1i64..=12).prop_map(|(n, d)| frac(n, d))
    }

    fn arb_nonzero() -> impl Strategy<Value = Scalar> {
        (1i64..20, 1i64..=12, any::<bool>()).prop_map(|(n, d, s)| frac(if s { n } else { -n }, d))
    }

    fn roundtrip(
        w: WeylWord,
        x: [Scalar; 4],
        y: [Scalar; 4],
        t: (Scalar, Scalar),
    ) -> Result<(), TestCaseError> {
        let (uw, _) = u_w_coordinates(w);
        let x = UnipotentCoords::new(x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone());
        let mut xp = UnipotentCoords::identity();
        for (k, v) in Coord::ALL.into_iter().zip(y) {
            if uw.contains(k) {
                *xp.get_mut(k) = v;
            }
        }
        // n(y)s(T') with T' restricted to U_w coordinates stays in U_w
        let data = BruhatData { w, torus: t, x, xp };
        let g = assemble(&data);
        prop_assert_eq!(bruhat_cell(&g), data);
        Ok(())
    }

    macro_rules! roundtrip_test {
        ($name:ident, $w:expr) => {
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(1000))]
                #[test]
                fn $name(
                    x in [arb_scalar(), arb_scalar(), arb_scalar(), arb_scalar()],
                    y in [arb_scalar(), arb_scalar(), arb_scalar(), arb_scalar()],
                    t in (arb_nonzero(), arb_nonzero()),
                ) {
                    roundtrip($w, x, y, t)?;
                }
            }
        };
    }

    roundtrip_test!(roundtrip_id, WeylWord::Id);
    roundtrip_test!(roundtrip_s1, WeylWord::S1);
    roundtrip_test!(roundtrip_s2, WeylWord::S2);
    roundtrip_test!(roundtrip_s1s2, WeylWord::S1S2);
    roundtrip_test!(roundtrip_s2s1, WeylWord::S2S1);
    roundtrip_test!(roundtrip_s1s2s1, WeylWord::S1S2S1);
    roundtrip_test!(roundtrip_s2s1s2, WeylWord::S2S1S2);
    roundtrip_test!(roundtrip_long, WeylWord::Long);

    #[test]
    fn zero_torus_rejected_by_generator() {
        assert!(crate::gsp4::make_generator(crate::gsp4::Generator::T(zero(), one())).is_err());
    }
}
