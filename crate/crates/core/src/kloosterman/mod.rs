//! Kloosterman sets and sums.
//!
//! For a lattice Γ, a Weyl element w and a modulus c,
//!
//! ```text
//! X_Γ(c*w) = U(ℤ) \ [U(ℚ)·c*w·U_w(ℚ) ∩ Γ] / U_w(ℤ),
//! Kl_{Γ,w}(c; M, N) = Σ_{x·c*w·x' ∈ X} ψ^{(M)}(x)·ψ^{(N)}(x')
//! ```
//!
//! with `ψ^{(X)}(n(x)s(T)) = e(X1·x + X2·T22)`, and `Kl = 0` when `(w, c)` is
//! not admissible for `(M, N)`.

mod admissibility;
mod enumerate;
mod poly;
mod sums;

pub use admissibility::{
    admissible_by_conjugation, admissible_by_direct_evaluation, is_admissible, relevant, resolve_n,
    tabulated_condition,
};
pub use enumerate::{Branch, EnumerationConfig, Enumerator, DEFAULT_BUDGET};
pub use sums::{
    classical_kloosterman, closed_form_exponent, enumerate_kloosterman_set, evaluate,
    factorization_check, kloosterman_sum, paramodular_closed_form, sum_over,
    vanishing_divisibility_check, vanishing_divisibility_check_local, FactorizationReport,
    KlEvaluation, Twist,
};

use crate::gsp4::{CharacterPair, GSpElement, Modulus, UnipotentCoords, WeylWord};
use crate::lattice::LatticeDesc;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KlError {
    #[error("search space exceeded the budget of {budget} candidates")]
    BudgetExceeded { budget: u64 },
    #[error("closed form not tabulated for {0}")]
    OutOfTabulatedRange(alloc::string::String),
    #[error("coordinate {0} is not pinned by any linear constraint")]
    Unpinned(&'static str),
}

/// One Kloosterman sum to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KloostermanQuery {
    pub lattice: LatticeDesc,
    pub w: WeylWord,
    pub c: Modulus,
    pub chars: CharacterPair,
}

impl KloostermanQuery {
    pub fn new(lattice: LatticeDesc, w: WeylWord, c: Modulus, chars: CharacterPair) -> Self {
        KloostermanQuery {
            lattice,
            w,
            c,
            chars,
        }
    }
}

/// A double coset representative `gamma = x·c*w·x'`.
///
/// `x` is left-reduced mod `U(ℤ)`; `xp` is supported on `U_w` and
/// right-reduced mod `U_w(ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KloostermanSetElement {
    pub x: UnipotentCoords,
    pub xp: UnipotentCoords,
    pub gamma: GSpElement,
}

impl KloostermanSetElement {
    /// Argument of `ψ^{(M)}(x)·ψ^{(N)}(x')`.
    pub fn phase_argument(&self, chars: &CharacterPair) -> crate::exact::Scalar {
        self.x.psi_argument(chars.m.0, chars.m.1) + self.xp.psi_argument(chars.n.0, chars.n.1)
    }
}
