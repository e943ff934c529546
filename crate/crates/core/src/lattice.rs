//! The lattices `Γ₀ = Sp₄(ℤ)` and the paramodular groups `Γ_pa(q)`.
//!
//! `Γ_pa(q)` is the set of `g ∈ Sp₄(ℚ)` whose entries lie in
//!
//! ```text
//! [  ℤ   ℤ  q⁻¹ℤ  ℤ ]
//! [ qℤ   ℤ   ℤ    ℤ ]
//! [ qℤ  qℤ   ℤ   qℤ ]
//! [ qℤ   ℤ   ℤ    ℤ ]
//! ```
//!
//! For `q = 1` this is `Sp₄(ℤ)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::radical;
use crate::exact::{frac, in_lattice, int, one, zero, Scalar};
use crate::gsp4::{make_generator, GSpElement, Generator, LeftCoset, Matrix4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LatticeKind {
    Full,
    Paramodular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeDesc {
    pub kind: LatticeKind,
    pub q: u64,
}

impl LatticeDesc {
    pub fn full() -> Self {
        LatticeDesc {
            kind: LatticeKind::Full,
            q: 1,
        }
    }

    pub fn paramodular(q: u64) -> Self {
        assert!(q >= 1, "level must be positive");
        LatticeDesc {
            kind: LatticeKind::Paramodular,
            q,
        }
    }

    /// `D_Γ = rad(q)`.
    pub fn discriminant(&self) -> u64 {
        radical(self.q)
    }

    /// `𝒩(Γ) = [Γ ∩ U(ℚ) : U(ℤ)]`.
    pub fn unipotent_index(&self) -> u64 {
        self.q
    }

    /// Exponent `e` in the covolume proxy `q^e`.
    pub fn covolume_q_power(&self) -> u32 {
        match self.kind {
            LatticeKind::Full => 0,
            LatticeKind::Paramodular => 2,
        }
    }

    pub fn covolume_proxy(&self) -> u64 {
        self.q.pow(self.covolume_q_power())
    }

    /// Per-entry moduli `m_ij`: entry `(i, j)` must lie in `m_ij·ℤ`.
    pub fn entry_moduli(&self) -> [[Scalar; 4]; 4] {
        let q = self.q as i64;
        let (o, p, r) = (one(), int(q), frac(1, q));
        [
            [o.clone(), o.clone(), r, o.clone()],
            [p.clone(), o.clone(), o.clone(), o.clone()],
            [p.clone(), p.clone(), o.clone(), p.clone()],
            [p, o.clone(), o.clone(), o],
        ]
    }

    pub fn contains_matrix(&self, m: &Matrix4) -> bool {
        let pat = self.entry_moduli();
        (0..4).all(|i| (0..4).all(|j| in_lattice(&m.0[i][j], &pat[i][j])))
    }

    pub fn contains(&self, g: &GSpElement) -> bool {
        *g.multiplier() == one() && self.contains_matrix(g.matrix())
    }

    /// Elements of the lattice used to build random members: integral `n`,
    /// `s(T)` with the allowed `q⁻¹` in `T11`, `i(Γ₀(q))`, and lower
    /// unipotents with the `q`-divisibility pattern. Inverses included.
    pub fn sample_generators(&self) -> Vec<GSpElement> {
        let q = self.q as i64;
        let lower = |t11: i64, t12: i64, t22: i64| {
            let mut m = Matrix4::identity();
            m.0[2][0] = int(t11);
            m.0[2][1] = int(t12);
            m.0[3][0] = int(t12);
            m.0[3][1] = int(t22);
            GSpElement::new(m).expect("lower unipotent is symplectic")
        };
        let gens = vec![
            make_generator(Generator::N(one())),
            make_generator(Generator::S(frac(1, q), zero(), zero())),
            make_generator(Generator::S(zero(), one(), zero())),
            make_generator(Generator::S(zero(), zero(), one())),
            make_generator(Generator::I([[one(), zero()], [int(q), one()]])),
            make_generator(Generator::I([[int(q + 1), one()], [int(q), one()]])),
            Ok(lower(q, 0, 0)),
            Ok(lower(0, q, 0)),
            Ok(lower(0, 0, 1)),
        ];
        let gens: Vec<GSpElement> = gens
            .into_iter()
            .map(|g| g.expect("valid generator"))
            .collect();
        let mut out = gens.clone();
        out.extend(gens.iter().map(GSpElement::inverse));
        debug_assert!(out.iter().all(|g| self.contains(g)));
        out
    }

    /// Count of `(Γ ∩ U(ℚ))/U(ℤ)` by brute force over left-canonical
    /// coordinates with denominators dividing `q`.
    pub fn count_unipotent_classes(&self) -> u64 {
        let q = self.q as i64;
        let grid: Vec<Scalar> = (0..q).map(|k| frac(k, q)).collect();
        let mut count = 0;
        for x1 in &grid {
            for p11 in &grid {
                for p12 in &grid {
                    for p22 in &grid {
                        let l = LeftCoset {
                            x1: x1.clone(),
                            p11: p11.clone(),
                            p12: p12.clone(),
                            p22: p22.clone(),
                        };
                        if self.contains_matrix(&l.to_coords().to_matrix()) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }
}

impl core::fmt::Display for LatticeDesc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.kind {
            LatticeKind::Full => write!(f, "full"),
            LatticeKind::Paramodular => write!(f, "pa:{}", self.q),
        }
    }
}

impl core::str::FromStr for LatticeDesc {
    type Err = alloc::string::String;
    /// `full` or `pa:<q>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "full" || s == "sp4z" {
            return Ok(LatticeDesc::full());
        }
        if let Some(q) = s.strip_prefix("pa:") {
            if let Ok(q) = q.parse::<u64>() {
                if q >= 1 {
                    return Ok(LatticeDesc::paramodular(q));
                }
            }
        }
        Err(alloc::format!(
            "unknown lattice {s:?}; expected `full` or `pa:<q>`"
        ))
    }
}

/// Stored normalizations of measures.
pub struct ReferenceConstants;

impl ReferenceConstants {
    /// Covolume of `Sp₄(ℤ)`, as displayed.
    pub const SP4_COVOLUME: &'static str = "ζ(2)ζ(4)/(2π³)";

    /// The same constant as `r·π^k`: `ζ(2)ζ(4) = π⁶/540`, so it is `π³/1080`.
    pub fn sp4_covolume_pi_power() -> (Scalar, i32) {
        (frac(1, 1080), 3)
    }

    /// `Vol(K_{Γ_pa(q),p}) = q⁻²(1+q⁻²)⁻¹`, stored verbatim with `q` (not the
    /// local factor `p^{v_p(q)}`).
    pub fn local_paramodular_volume(q: u64) -> Scalar {
        let q2 = int(q as i64) * int(q as i64);
        let inv = one() / &q2;
        inv.clone() / (one() + inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsp4::UnipotentCoords;

    #[test]
    fn invariants() {
        let f = LatticeDesc::full();
        assert_eq!((f.q, f.discriminant(), f.unipotent_index()), (1, 1, 1));
        let p = LatticeDesc::paramodular(12);
        assert_eq!(
            (p.discriminant(), p.unipotent_index(), p.covolume_proxy()),
            (6, 12, 144)
        );
        assert_eq!(LatticeDesc::paramodular(5).unipotent_index(), 5);
        assert_eq!(LatticeDesc::paramodular(4).unipotent_index(), 4);
    }

    #[test]
    fn membership_examples() {
        for q in 1..8 {
            assert!(LatticeDesc::paramodular(q).contains(&GSpElement::identity()));
        }
        let s = make_generator(Generator::S(frac(1, 3), zero(), zero())).unwrap();
        assert!(LatticeDesc::paramodular(3).contains(&s));
        assert!(!LatticeDesc::full().contains(&s));
        let n = make_generator(Generator::N(frac(1, 2))).unwrap();
        assert!(!LatticeDesc::paramodular(3).contains(&n));
        let d = GSpElement::new(Matrix4::diagonal([one(), one(), int(-1), int(-1)])).unwrap();
        assert!(!LatticeDesc::full().contains(&d));
    }

    #[test]
    fn integral_unipotents_are_members() {
        for l in [LatticeDesc::full(), LatticeDesc::paramodular(6)] {
            for x in -2..3 {
                for b in -2..3 {
                    let u = UnipotentCoords::new(int(x), int(b - 1), int(b), int(x + b));
                    assert!(l.contains_matrix(&u.to_matrix()));
                }
            }
        }
    }

    #[test]
    fn unipotent_classes_match_index() {
        for q in 1..=12 {
            let l = LatticeDesc::paramodular(q);
            assert_eq!(l.count_unipotent_classes(), l.unipotent_index(), "q = {q}");
        }
    }

    #[test]
    fn group_closure() {
        // deterministic pseudo-random walks
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for q in [2u64, 3, 4, 5, 6] {
            let l = LatticeDesc::paramodular(q);
            let gens = l.sample_generators();
            let mut word = |len: usize| {
                (0..len).fold(GSpElement::identity(), |acc, _| {
                    acc.mul(&gens[(next() % gens.len() as u64) as usize])
                })
            };
            for _ in 0..40 {
                let g1 = word(6);
                let g2 = word(6);
                assert!(l.contains(&g1) && l.contains(&g2));
                assert!(l.contains(&g1.mul(&g2)));
                assert!(l.contains(&g1.inverse()));
            }
        }
    }

    #[test]
    fn reference_constants() {
        // ζ(2)ζ(4)/(2π³) against the stored rational multiple of π³
        let pi = core::f64::consts::PI;
        let zeta = |s: i32| (1..200_000).map(|n| (n as f64).powi(-s)).sum::<f64>();
        let direct = zeta(2) * zeta(4) / (2.0 * pi.powi(3));
        let (r, k) = ReferenceConstants::sp4_covolume_pi_power();
        let stored = num_traits::ToPrimitive::to_f64(&r).unwrap() * pi.powi(k);
        assert!((direct - stored).abs() < 1e-7);
        assert_eq!(ReferenceConstants::local_paramodular_volume(2), frac(1, 5));
        assert_eq!(ReferenceConstants::local_paramodular_volume(3), frac(1, 10));
    }

    #[test]
    fn parse_display() {
        for s in ["full", "pa:1", "pa:12"] {
            let l: LatticeDesc = s.parse().unwrap();
            assert_eq!(alloc::string::ToString::to_string(&l), s);
        }
        assert!("pa:0".parse::<LatticeDesc>().is_err());
        assert!("gamma".parse::<LatticeDesc>().is_err());
    }
}
