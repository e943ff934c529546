use core::fmt;

use num_traits::Zero;

use super::matrix::Matrix4;
use crate::exact::{one, reduce_into, zero, Scalar};

/// Coordinates of `n(x)·s(T)`, `T = [[a, b], [b, c]]`.
///
/// The assembled matrix is
/// `[[1, x, a+xb, b+xc], [0, 1, b, c], [0, 0, 1, 0], [0, 0, −x, 1]]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnipotentCoords {
    pub x: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

/// One of the four root coordinates of `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    X,
    A,
    B,
    C,
}

impl Coord {
    pub const ALL: [Coord; 4] = [Coord::X, Coord::A, Coord::B, Coord::C];

    pub fn name(self) -> &'static str {
        match self {
            Coord::X => "x",
            Coord::A => "a",
            Coord::B => "b",
            Coord::C => "c",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// A subset of the root coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CoordSet(u8);

impl CoordSet {
    pub const EMPTY: CoordSet = CoordSet(0);
    pub const ALL: CoordSet = CoordSet(0b1111);

    pub fn from_coords(cs: &[Coord]) -> Self {
        CoordSet(cs.iter().fold(0, |m, c| m | c.bit()))
    }

    pub fn contains(self, c: Coord) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn insert(&mut self, c: Coord) {
        self.0 |= c.bit();
    }

    pub fn complement(self) -> Self {
        CoordSet(!self.0 & 0b1111)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Coord> {
        Coord::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl fmt::Debug for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Coord::name)).finish()
    }
}

impl UnipotentCoords {
    pub fn new(x: Scalar, a: Scalar, b: Scalar, c: Scalar) -> Self {
        UnipotentCoords { x, a, b, c }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn get(&self, k: Coord) -> &Scalar {
        match k {
            Coord::X => &self.x,
            Coord::A => &self.a,
            Coord::B => &self.b,
            Coord::C => &self.c,
        }
    }

    pub fn get_mut(&mut self, k: Coord) -> &mut Scalar {
        match k {
            Coord::X => &mut self.x,
            Coord::A => &mut self.a,
            Coord::B => &mut self.b,
            Coord::C => &mut self.c,
        }
    }

    /// The root element with a single nonzero coordinate.
    pub fn basis(k: Coord, t: Scalar) -> Self {
        let mut u = Self::identity();
        *u.get_mut(k) = t;
        u
    }

    /// Coordinates outside `set` are zero.
    pub fn supported_in(&self, set: CoordSet) -> bool {
        Coord::ALL
            .iter()
            .all(|&k| set.contains(k) || self.get(k).is_zero())
    }

    pub fn to_matrix(&self) -> Matrix4 {
        let (x, a, b, c) = (&self.x, &self.a, &self.b, &self.c);
        let z = zero;
        Matrix4([
            [one(), x.clone(), a + x * b, b + x * c],
            [z(), one(), b.clone(), c.clone()],
            [z(), z(), one(), z()],
            [z(), z(), -x, one()],
        ])
    }

    /// Inverse of [`to_matrix`](Self::to_matrix); `None` if `m ∉ U`.
    pub fn from_matrix(m: &Matrix4) -> Option<Self> {
        let x = m.0[0][1].clone();
        let b = m.0[1][2].clone();
        let c = m.0[1][3].clone();
        let a = &m.0[0][2] - &x * &b;
        let u = UnipotentCoords { x, a, b, c };
        (u.to_matrix() == *m).then_some(u)
    }

    /// Group law in coordinates.
    pub fn compose(&self, rhs: &UnipotentCoords) -> UnipotentCoords {
        Self::from_matrix(&(&self.to_matrix() * &rhs.to_matrix())).expect("U is a group")
    }

    pub fn inverse(&self) -> UnipotentCoords {
        // n(x)s(T) inverse is s(-T)n(-x)
        let s = UnipotentCoords::new(zero(), -&self.a, -&self.b, -&self.c);
        let n = UnipotentCoords::new(-&self.x, zero(), zero(), zero());
        s.compose(&n)
    }

    /// Representative of the coset `U(ℤ)·u` with every left coordinate in
    /// `[offset, offset + 1)`.
    pub fn reduce_left(&self, offset: &Scalar) -> UnipotentCoords {
        LeftCoset::from_coords(self).reduce(offset).to_coords()
    }

    /// Representative of `u·U_w(ℤ)`, where `u ∈ U_w` has support in `set`:
    /// first `x` into `[offset, offset+1)`, then each `T` coordinate in `set`.
    pub fn reduce_right(&self, set: CoordSet, offset: &Scalar) -> UnipotentCoords {
        let mut u = self.clone();
        if set.contains(Coord::X) {
            let k = (&u.x - offset).floor();
            u = u.compose(&UnipotentCoords::basis(Coord::X, -k));
        }
        for k in [Coord::A, Coord::B, Coord::C] {
            if set.contains(k) {
                let v = u.get(k).clone();
                *u.get_mut(k) = reduce_into(&v, offset);
            }
        }
        u
    }

    /// `ψ^{(X)}` argument: `X1·x + X2·c`.
    pub fn psi_argument(&self, x1: i64, x2: i64) -> Scalar {
        &self.x * crate::exact::int(x1) + &self.c * crate::exact::int(x2)
    }
}

impl fmt::Debug for UnipotentCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(x={}, a={}, b={}, c={})",
            self.x, self.a, self.b, self.c
        )
    }
}

/// Left `U(ℤ)`-invariant coordinates of `u = n(x1)·s(T)`.
///
/// Writing `A = [[1, x1], [0, 1]]`, `u = [[A, P·A⁻ᵀ], [0, A⁻ᵀ]]` with
/// `P = A·T·Aᵀ` symmetric. Left multiplication by `s(S)` adds `S` to `P` and by
/// `n(k)` shifts `x1`, so `(x1, P) mod 1` classifies `U(ℤ)\U(ℚ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftCoset {
    pub x1: Scalar,
    pub p11: Scalar,
    pub p12: Scalar,
    pub p22: Scalar,
}

impl LeftCoset {
    pub fn from_coords(u: &UnipotentCoords) -> Self {
        let x = &u.x;
        // P = A T Aᵀ
        let p11 = &u.a + x * &u.b * crate::exact::int(2) + x * x * &u.c;
        let p12 = &u.b + x * &u.c;
        LeftCoset {
            x1: x.clone(),
            p11,
            p12,
            p22: u.c.clone(),
        }
    }

    pub fn to_coords(&self) -> UnipotentCoords {
        let x = &self.x1;
        let c = self.p22.clone();
        let b = &self.p12 - x * &c;
        let a = &self.p11 - x * &b * crate::exact::int(2) - x * x * &c;
        UnipotentCoords {
            x: x.clone(),
            a,
            b,
            c,
        }
    }

    /// Left `n(k)` first moves `x1`; it also transforms `P`, so shift `x1`
    /// through the group law before reducing `P`.
    pub fn reduce(&self, offset: &Scalar) -> LeftCoset {
        let u = self.to_coords();
        let k = (&u.x - offset).floor();
        let shifted = UnipotentCoords::basis(Coord::X, -k).compose(&u);
        let mut l = LeftCoset::from_coords(&shifted);
        l.p11 = reduce_into(&l.p11, offset);
        l.p12 = reduce_into(&l.p12, offset);
        l.p22 = reduce_into(&l.p22, offset);
        l
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-40i64..40, 1i64..13).prop_map(|(n, d)| frac(n, d))
    }

    fn arb_coords() -> impl Strategy<Value = UnipotentCoords> {
        (arb_scalar(), arb_scalar(), arb_scalar(), arb_scalar())
            .prop_map(|(x, a, b, c)| UnipotentCoords::new(x, a, b, c))
    }

    proptest! {
        #[test]
        fn matrix_roundtrip(u in arb_coords()) {
            prop_assert_eq!(UnipotentCoords::from_matrix(&u.to_matrix()), Some(u.clone()));
            prop_assert!(crate::gsp4::multiplier(&u.to_matrix()) == Ok(one()));
        }

        #[test]
        fn left_coset_invariant(u in arb_coords(), k in -3i64..4, s in (-3i64..4, -3i64..4, -3i64..4)) {
            let g = UnipotentCoords::basis(Coord::X, int(k))
                .compose(&UnipotentCoords::new(zero(), int(s.0), int(s.1), int(s.2)));
            let v = g.compose(&u);
            prop_assert_eq!(u.reduce_left(&zero()), v.reduce_left(&zero()));
            // the reduced representative lies in the same coset
            let r = u.reduce_left(&zero());
            let diff = r.compose(&u.inverse());
            prop_assert!(diff.x.is_integer() && diff.a.is_integer() && diff.b.is_integer() && diff.c.is_integer());
        }

        #[test]
        fn inverse_is_inverse(u in arb_coords()) {
            prop_assert_eq!(u.compose(&u.inverse()), UnipotentCoords::identity());
        }
    }

    #[test]
    fn left_coordinates_fix_p22() {
        let u = UnipotentCoords::new(frac(1, 2), int(1), int(2), int(3));
        let l = LeftCoset::from_coords(&u);
        assert_eq!(l.p22, int(3));
        assert_eq!(l.to_coords(), u);
    }
}
