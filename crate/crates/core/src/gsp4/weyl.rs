use alloc::string::ToString;

use super::matrix::Matrix4;
use super::unipotent::{Coord, CoordSet, UnipotentCoords};
use super::{int_matrix, GSpElement, GroupError};

/// The eight Weyl group elements, by their canonical reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylWord {
    Id,
    S1,
    S2,
    S1S2,
    S2S1,
    S1S2S1,
    S2S1S2,
    /// `s1s2s1s2`, the long element
    Long,
}

impl WeylWord {
    pub const ALL: [WeylWord; 8] = [
        WeylWord::Id,
        WeylWord::S1,
        WeylWord::S2,
        WeylWord::S1S2,
        WeylWord::S2S1,
        WeylWord::S1S2S1,
        WeylWord::S2S1S2,
        WeylWord::Long,
    ];

    pub const RELEVANT: [WeylWord; 4] = [
        WeylWord::Id,
        WeylWord::S1S2S1,
        WeylWord::S2S1S2,
        WeylWord::Long,
    ];

    pub fn word(self) -> &'static str {
        match self {
            WeylWord::Id => "1",
            WeylWord::S1 => "s1",
            WeylWord::S2 => "s2",
            WeylWord::S1S2 => "s1s2",
            WeylWord::S2S1 => "s2s1",
            WeylWord::S1S2S1 => "s1s2s1",
            WeylWord::S2S1S2 => "s2s1s2",
            WeylWord::Long => "s1s2s1s2",
        }
    }

    pub fn letters(self) -> &'static [u8] {
        match self {
            WeylWord::Id => &[],
            WeylWord::S1 => &[1],
            WeylWord::S2 => &[2],
            WeylWord::S1S2 => &[1, 2],
            WeylWord::S2S1 => &[2, 1],
            WeylWord::S1S2S1 => &[1, 2, 1],
            WeylWord::S2S1S2 => &[2, 1, 2],
            WeylWord::Long => &[1, 2, 1, 2],
        }
    }

    pub fn length(self) -> usize {
        self.letters().len()
    }

    /// Parse any word over `s1`, `s2` (`"1"`, `"e"` or `""` for the identity)
    /// and reduce it to its canonical form.
    pub fn parse(s: &str) -> Result<WeylWord, GroupError> {
        let bad = || GroupError::BadWord(s.to_string());
        let t: alloc::string::String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '.')
            .collect();
        if t.is_empty() || t == "1" || t == "e" || t == "id" {
            return Ok(WeylWord::Id);
        }
        let mut letters = alloc::vec::Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix("s1") {
                letters.push(1u8);
                rest = r;
            } else if let Some(r) = rest.strip_prefix("s2") {
                letters.push(2u8);
                rest = r;
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_letters(&letters))
    }

    /// Weyl element of an arbitrary word, identified by the support of its
    /// matrix (two words agree in W iff their matrices differ by a torus
    /// element, i.e. share the monomial pattern).
    pub fn from_letters(letters: &[u8]) -> WeylWord {
        let m = letters
            .iter()
            .fold(Matrix4::identity(), |acc, &l| &acc * &generator(l));
        Self::from_monomial(&m).expect("words in s1, s2 are monomial")
    }

    pub fn from_monomial(m: &Matrix4) -> Option<WeylWord> {
        let s = m.support();
        WeylWord::ALL
            .into_iter()
            .find(|w| weyl_matrix(*w).matrix().support() == s)
    }

    /// Permutation `π` with `w·e_j = ±e_{π(j)}`.
    pub fn permutation(self) -> [usize; 4] {
        let m = weyl_matrix(self);
        core::array::from_fn(|j| {
            (0..4)
                .find(|&i| !num_traits::Zero::is_zero(&m.matrix().0[i][j]))
                .unwrap()
        })
    }

    /// Image of a root under `w`, as `(root, sign)`.
    pub fn act_on_root(self, r: Root) -> (Root, i8) {
        // (w·χ)(t) = χ(w⁻¹tw) and w⁻¹ t w = diag(d_{π(1)}, …, d_{π(4)}).
        // Torus coordinates d = (x, y, 1/x, 1/y) have exponent vectors:
        const V: [[i32; 2]; 4] = [[1, 0], [0, 1], [-1, 0], [0, -1]];
        let p = self.permutation();
        let (e1, e2) = r.exponents();
        let out = [
            e1 * V[p[0]][0] + e2 * V[p[1]][0],
            e1 * V[p[0]][1] + e2 * V[p[1]][1],
        ];
        Root::from_exponents(out[0], out[1]).expect("Weyl group permutes roots")
    }
}

impl core::fmt::Display for WeylWord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.word())
    }
}

impl core::str::FromStr for WeylWord {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WeylWord::parse(s)
    }
}

fn generator(l: u8) -> Matrix4 {
    match l {
        1 => int_matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
        2 => int_matrix([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0]]),
        _ => unreachable!(),
    }
}

/// Product of the `s1`, `s2` matrices along the canonical word.
pub fn weyl_matrix(w: WeylWord) -> GSpElement {
    let m = w
        .letters()
        .iter()
        .fold(Matrix4::identity(), |acc, &l| &acc * &generator(l));
    GSpElement::new(m).expect("Weyl representatives are symplectic")
}

/// Positive roots, as characters of `t(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    /// `x/y`
    Alpha,
    /// `y²`
    Beta,
    /// `xy`
    AlphaBeta,
    /// `x²`
    TwoAlphaBeta,
}

impl Root {
    pub const ALL: [Root; 4] = [Root::Alpha, Root::Beta, Root::AlphaBeta, Root::TwoAlphaBeta];

    pub fn exponents(self) -> (i32, i32) {
        match self {
            Root::Alpha => (1, -1),
            Root::Beta => (0, 2),
            Root::AlphaBeta => (1, 1),
            Root::TwoAlphaBeta => (2, 0),
        }
    }

    fn from_exponents(e1: i32, e2: i32) -> Option<(Root, i8)> {
        Root::ALL.into_iter().find_map(|r| {
            let (a, b) = r.exponents();
            if (a, b) == (e1, e2) {
                Some((r, 1))
            } else if (-a, -b) == (e1, e2) {
                Some((r, -1))
            } else {
                None
            }
        })
    }

    /// The unipotent coordinate carrying this root subgroup.
    pub fn coord(self) -> Coord {
        match self {
            Root::Alpha => Coord::X,
            Root::Beta => Coord::C,
            Root::AlphaBeta => Coord::B,
            Root::TwoAlphaBeta => Coord::A,
        }
    }
}

/// Free coordinates of `U_w = U ∩ w⁻¹Uᵀw` and of its complement
/// `Ū_w = U ∩ w⁻¹Uw`, found by conjugating each root subgroup.
pub fn u_w_coordinates(w: WeylWord) -> (CoordSet, CoordSet) {
    let wm = weyl_matrix(w);
    let winv = wm.inverse();
    let mut uw = CoordSet::EMPTY;
    for k in Coord::ALL {
        let u = UnipotentCoords::basis(k, crate::exact::one()).to_matrix();
        let conj = &(wm.matrix() * &u) * winv.matrix();
        if UnipotentCoords::from_matrix(&conj.transpose()).is_some() {
            uw.insert(k);
        } else {
            debug_assert!(UnipotentCoords::from_matrix(&conj).is_some());
        }
    }
    (uw, uw.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsp4::{multiplier, Matrix4};

    #[test]
    fn canonical_words_are_distinct() {
        for (i, a) in WeylWord::ALL.iter().enumerate() {
            for b in &WeylWord::ALL[i + 1..] {
                assert_ne!(
                    weyl_matrix(*a).matrix().support(),
                    weyl_matrix(*b).matrix().support()
                );
            }
            assert_eq!(WeylWord::parse(a.word()).unwrap(), *a);
            assert_eq!(
                multiplier(weyl_matrix(*a).matrix()),
                Ok(crate::exact::one())
            );
        }
        assert_eq!(weyl_matrix(WeylWord::Id).matrix(), &Matrix4::identity());
        assert_eq!(
            weyl_matrix(WeylWord::S1).matrix(),
            &int_matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        );
    }

    #[test]
    fn word_reduction() {
        assert_eq!(WeylWord::parse("s1s1").unwrap(), WeylWord::Id);
        assert_eq!(WeylWord::parse("s2s1s2s1").unwrap(), WeylWord::Long);
        assert_eq!(WeylWord::parse("s1 s2 s1 s2 s1").unwrap(), WeylWord::S2S1S2);
        assert_eq!(WeylWord::parse("s1s2s1s2s1s2s1s2").unwrap(), WeylWord::Id);
        assert!(WeylWord::parse("s3").is_err());
    }

    #[test]
    fn long_element_squares_to_minus_one() {
        let l = weyl_matrix(WeylWord::Long);
        let sq = l.mul(&l);
        assert_eq!(
            sq.matrix(),
            &Matrix4::identity().scale(&crate::exact::int(-1))
        );
        let s1 = weyl_matrix(WeylWord::S1);
        assert_eq!(s1.mul(&s1).matrix(), sq.matrix());
    }

    #[test]
    fn root_action_of_simple_reflections() {
        use Root::*;
        let s1 = WeylWord::S1;
        assert_eq!(s1.act_on_root(Alpha), (Alpha, -1));
        assert_eq!(s1.act_on_root(AlphaBeta), (AlphaBeta, 1));
        assert_eq!(s1.act_on_root(Beta), (TwoAlphaBeta, 1));
        assert_eq!(s1.act_on_root(TwoAlphaBeta), (Beta, 1));
        let s2 = WeylWord::S2;
        assert_eq!(s2.act_on_root(Beta), (Beta, -1));
        assert_eq!(s2.act_on_root(Alpha), (AlphaBeta, 1));
        assert_eq!(s2.act_on_root(AlphaBeta), (Alpha, 1));
        assert_eq!(s2.act_on_root(TwoAlphaBeta), (TwoAlphaBeta, 1));
    }

    #[test]
    fn root_action_is_a_homomorphism() {
        for a in WeylWord::ALL {
            for b in WeylWord::ALL {
                let mut letters = a.letters().to_vec();
                letters.extend_from_slice(b.letters());
                let ab = WeylWord::from_letters(&letters);
                for r in Root::ALL {
                    let (r1, e1) = b.act_on_root(r);
                    let (r2, e2) = a.act_on_root(r1);
                    assert_eq!(ab.act_on_root(r), (r2, e1 * e2), "{a} {b} {r:?}");
                }
            }
        }
    }

    #[test]
    fn u_w_matches_inversions() {
        for w in WeylWord::ALL {
            let (uw, ubar) = u_w_coordinates(w);
            assert_eq!(uw.len() + ubar.len(), 4);
            assert_eq!(uw.len(), w.length());
            // U_w consists of the roots sent to negative roots by w
            for r in Root::ALL {
                let negated = w.act_on_root(r).1 < 0;
                assert_eq!(uw.contains(r.coord()), negated, "{w} {r:?}");
            }
        }
        let c = |v: &[Coord]| CoordSet::from_coords(v);
        use Coord::*;
        assert_eq!(u_w_coordinates(WeylWord::Id).0, CoordSet::EMPTY);
        assert_eq!(u_w_coordinates(WeylWord::S1S2S1).0, c(&[X, A, B]));
        assert_eq!(u_w_coordinates(WeylWord::S2S1S2).0, c(&[A, B, C]));
        assert_eq!(u_w_coordinates(WeylWord::Long).0, CoordSet::ALL);
    }
}
