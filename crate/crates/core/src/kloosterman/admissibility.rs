use crate::exact::frac;
use crate::gsp4::{
    conjugated_character, u_w_coordinates, CharacterPair, Coord, Modulus, UnipotentCoords, WeylWord,
};

/// The admissibility table, one closed-form condition per Weyl element.
///
/// The rows for `s1s2s1` and `s2s1s2` carry the scalings `c1²/c2²` and
/// `c2/c1²`. For the identity the same two scalings appear together; at
/// `c = (1, 1)`, the only modulus with a nonempty trivial cell, the row is
/// `M = N`.
pub fn is_admissible(w: WeylWord, c: Modulus, chars: CharacterPair) -> bool {
    let (m1, m2) = (i128::from(chars.m.0), i128::from(chars.m.1));
    let (n1, n2) = (i128::from(chars.n.0), i128::from(chars.n.1));
    let (c1, c2) = (i128::from(c.c1), i128::from(c.c2));
    // N1 = M1·c2/c1²  and  N2 = M2·c1²/c2²
    let first = n1 * c1 * c1 == m1 * c2;
    let second = n2 * c2 * c2 == m2 * c1 * c1;
    match w {
        WeylWord::Id => first && second,
        WeylWord::S1 => n2 == 0 && m2 == 0,
        WeylWord::S2 => n1 == 0 && m1 == 0,
        WeylWord::S1S2 => n1 == 0 && m2 == 0,
        WeylWord::S2S1 => n2 == 0 && m1 == 0,
        WeylWord::S1S2S1 => second,
        WeylWord::S2S1S2 => first,
        WeylWord::Long => true,
    }
}

/// The table as printed, with `M = N` for the identity at every modulus.
pub fn tabulated_condition(w: WeylWord, c: Modulus, chars: CharacterPair) -> bool {
    match w {
        WeylWord::Id => chars.m == chars.n,
        _ => is_admissible(w, c, chars),
    }
}

/// Admissibility via [`conjugated_character`].
pub fn admissible_by_conjugation(w: WeylWord, c: Modulus, chars: CharacterPair) -> bool {
    conjugated_character(w, c, chars.m).is_some_and(|r| r.satisfied_by(chars.n))
}

/// Admissibility tested literally: `ψ^{(M)}(c*w·ū·(c*w)⁻¹) = ψ^{(N)}(ū)` for
/// all real `ū ∈ Ū_w`. The conjugate is formed as a matrix and both
/// arguments are compared exactly (as real numbers, not mod 1) at a fixed set
/// of points. `ψ` factors through `U/[U, U]`, so both arguments are linear in
/// the coordinates of `ū` and the coordinate vectors among the samples
/// already decide the identity.
pub fn admissible_by_direct_evaluation(w: WeylWord, c: Modulus, chars: CharacterPair) -> bool {
    let (_, ubar) = u_w_coordinates(w);
    let g = c.cell_matrix(w);
    let ginv = g.inverse();
    let samples: [[i64; 4]; 12] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [2, 0, 0, 0],
        [0, 0, 0, 2],
        [1, 1, 1, 1],
        [3, -2, 5, 7],
        [-4, 3, 1, -2],
        [5, 7, -3, 2],
        [2, -5, 4, 3],
        [-3, 1, -6, 5],
    ];
    samples.iter().all(|s| {
        let mut u = UnipotentCoords::identity();
        for (k, v) in Coord::ALL.into_iter().zip(s) {
            if ubar.contains(k) {
                *u.get_mut(k) = frac(8 * v, 7);
            }
        }
        let conj = &(g.matrix() * &u.to_matrix()) * ginv.matrix();
        let cu = UnipotentCoords::from_matrix(&conj).expect("Ū_w conjugates into U");
        cu.psi_argument(chars.m.0, chars.m.1) == u.psi_argument(chars.n.0, chars.n.1)
    })
}

/// `1, s1s2s1, s2s1s2, s1s2s1s2`: the elements whose admissibility can hold
/// with all of `M1, M2, N1, N2` nonzero.
pub fn relevant(w: WeylWord) -> bool {
    WeylWord::RELEVANT.contains(&w)
}

/// `N` forced by admissibility for `(w, c, M)`; coordinates left free by the
/// table default to the matching coordinate of `M`. `None` when the forced
/// value is not an integer or `M` itself violates the row.
pub fn resolve_n(w: WeylWord, c: Modulus, m: (i64, i64)) -> Option<(i64, i64)> {
    conjugated_character(w, c, m)?.resolve(m)
}
