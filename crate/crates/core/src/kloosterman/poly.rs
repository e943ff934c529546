//! Sparse polynomials over ℚ in the four unipotent coordinates, just enough
//! to propagate integrality constraints symbolically.

use alloc::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::Scalar;
use crate::gsp4::Coord;

type Monomial = [u8; 4];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn constant(s: Scalar) -> Self {
        let mut p = Poly::default();
        p.add_term([0; 4], s);
        p
    }

    pub fn var(v: Coord) -> Self {
        let mut e = [0; 4];
        e[v as usize] = 1;
        let mut p = Poly::default();
        p.add_term(e, crate::exact::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, -c);
        }
        p
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        let mut p = Poly::default();
        for (m, c) in &self.terms {
            p.add_term(*m, c * k);
        }
        p
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut p = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = core::array::from_fn(|i| m1[i] + m2[i]);
                p.add_term(m, c1 * c2);
            }
        }
        p
    }

    pub fn substitute(&self, v: Coord, value: &Scalar) -> Poly {
        let i = v as usize;
        if !self.mentions(v) {
            return self.clone();
        }
        let mut p = Poly::default();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m2[i];
            m2[i] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= value;
            }
            p.add_term(m2, coeff);
        }
        p
    }

    pub fn mentions(&self, v: Coord) -> bool {
        self.terms.keys().any(|m| m[v as usize] > 0)
    }

    /// The value when no variable occurs.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    /// `(alpha, beta)` when the polynomial is `alpha·v + beta` with `alpha ≠ 0`.
    pub fn linear_in(&self, v: Coord) -> Option<(Scalar, Scalar)> {
        let mut e = [0u8; 4];
        e[v as usize] = 1;
        let mut alpha = None;
        let mut beta = Scalar::zero();
        for (m, c) in &self.terms {
            if *m == e {
                alpha = Some(c.clone());
            } else if *m == [0; 4] {
                beta = c.clone();
            } else {
                return None;
            }
        }
        alpha.map(|a| (a, beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn substitution_and_linearity() {
        let y = Poly::var(Coord::X);
        let b = Poly::var(Coord::B);
        let p = y
            .mul(&b)
            .add(&Poly::constant(int(3)))
            .add(&b.scale(&int(2)));
        assert!(p.linear_in(Coord::B).is_none());
        let q = p.substitute(Coord::X, &frac(1, 2));
        assert_eq!(q.linear_in(Coord::B), Some((frac(5, 2), int(3))));
        let r = q.substitute(Coord::B, &int(2));
        assert_eq!(r.as_constant(), Some(int(8)));
        assert_eq!(p.sub(&p).as_constant(), Some(int(0)));
    }
}
