use alloc::format;
use alloc::vec::Vec;

use super::admissibility::is_admissible;
use super::enumerate::{EnumerationConfig, Enumerator};
use super::{KlError, KloostermanQuery, KloostermanSetElement};
use crate::arith::{mod_inverse, part_supported_on, radical};
use crate::exact::{phase_of, PhasePoint, PhaseSum};
use crate::gsp4::{CharacterPair, Modulus, WeylWord};
use crate::lattice::LatticeDesc;

/// The Kloosterman set `X_Γ(c*w)`.
pub fn enumerate_kloosterman_set(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    cfg: &EnumerationConfig,
) -> Result<Vec<KloostermanSetElement>, KlError> {
    Enumerator::new(lattice, w, c, cfg.clone()).run()
}

/// `Σ ψ^{(M)}(x)·ψ^{(N)}(x')` over the given elements, without any
/// admissibility check.
pub fn sum_over<'a>(
    elements: impl IntoIterator<Item = &'a KloostermanSetElement>,
    chars: &CharacterPair,
) -> PhaseSum {
    let mut s = PhaseSum::zero();
    for e in elements {
        s.add_term(phase_of(&e.phase_argument(chars)), 1);
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct KlEvaluation {
    pub query: KloostermanQuery,
    pub admissible: bool,
    pub set_size: usize,
    pub value: PhaseSum,
}

/// Enumerate the set and evaluate the sum; the value is 0 for
/// non-admissible queries, but the set is still enumerated.
pub fn evaluate(
    query: &KloostermanQuery,
    cfg: &EnumerationConfig,
) -> Result<KlEvaluation, KlError> {
    let set = enumerate_kloosterman_set(query.lattice, query.w, query.c, cfg)?;
    let admissible = is_admissible(query.w, query.c, query.chars);
    let value = if admissible {
        sum_over(&set, &query.chars)
    } else {
        PhaseSum::zero()
    };
    Ok(KlEvaluation {
        query: *query,
        admissible,
        set_size: set.len(),
        value,
    })
}

/// `Kl_{Γ,w}(c; M, N)`; non-admissible queries return 0 without enumerating.
pub fn kloosterman_sum(
    query: &KloostermanQuery,
    cfg: &EnumerationConfig,
) -> Result<PhaseSum, KlError> {
    if !is_admissible(query.w, query.c, query.chars) {
        return Ok(PhaseSum::zero());
    }
    let set = enumerate_kloosterman_set(query.lattice, query.w, query.c, cfg)?;
    Ok(sum_over(&set, &query.chars))
}

/// `S(a, b; c) = Σ_{x mod c, (x,c)=1} e((a·x + b·x̄)/c)`, with `S(a, b; 1) = 1`.
pub fn classical_kloosterman(a: i64, b: i64, c: u64) -> PhaseSum {
    assert!(c > 0, "modulus must be positive");
    let mut s = PhaseSum::zero();
    let ci = c as i64;
    for x in 0..c {
        if let Some(xinv) = mod_inverse(x as i64, c) {
            let num = (i128::from(a) * i128::from(x) + i128::from(b) * i128::from(xinv))
                .rem_euclid(i128::from(ci));
            s.add_term(PhasePoint::new(num as i64, c), 1);
        }
    }
    s
}

/// Closed forms for ramified paramodular sums at prime level `q`:
/// `q²` for s1s2s1 at `(q, q)`, `0` for s2s1s2 at `(q, q²)`, and
/// `q²·S(1, N2; q^{k−1})` for the long element at `(q, q^k)`, `k ≤ 3`.
pub fn paramodular_closed_form(
    w: WeylWord,
    q: u64,
    k: u32,
    n: (i64, i64),
) -> Result<PhaseSum, KlError> {
    let out = |why: &str| {
        Err(KlError::OutOfTabulatedRange(format!(
            "{w} q={q} k={k}: {why}"
        )))
    };
    if !crate::arith::is_prime(q) {
        return out("level is not prime");
    }
    if n.1.rem_euclid(q as i64) == 0 {
        return out("N2 not coprime to q");
    }
    let q2 = (q * q) as i64;
    match (w, k) {
        (WeylWord::S1S2S1, 1) => Ok(PhaseSum::integer(q2)),
        (WeylWord::S2S1S2, 2) => Ok(PhaseSum::zero()),
        (WeylWord::Long, 1..=3) => Ok(classical_kloosterman(1, n.1, q.pow(k - 1)).scale(q2)),
        _ => out("shape not covered"),
    }
}

/// The modulus shape `(q, q^k)` of a closed-form case, if any.
pub fn closed_form_exponent(w: WeylWord, q: u64, c: Modulus) -> Option<u32> {
    if c.c1 != q {
        return None;
    }
    let k = (1..=3).find(|&k| q.checked_pow(k) == Some(c.c2))?;
    match (w, k) {
        (WeylWord::S1S2S1, 1) | (WeylWord::S2S1S2, 2) | (WeylWord::Long, _) => Some(k),
        _ => None,
    }
}

fn divides(a: u64, b: u64) -> bool {
    a != 0 && b.is_multiple_of(a)
}

fn forced(w: WeylWord, c1: u64, c2: u64, q: u64) -> bool {
    match w {
        WeylWord::S1S2S1 | WeylWord::S2S1S2 => !divides(q, c1),
        WeylWord::Long => !(divides(q, c1) && divides(c1, c2)),
        _ => false,
    }
}

/// Whether `Kl_{Γ_pa(q),w}` at `c` is forced to vanish by the pattern
/// "unless q | c1 and c1 | c2", read literally on the full modulus.
pub fn vanishing_divisibility_check(w: WeylWord, c: Modulus, q: u64) -> bool {
    forced(w, c.c1, c.c2, q)
}

/// The same pattern applied to the parts of `c` supported on the primes of `q`.
pub fn vanishing_divisibility_check_local(w: WeylWord, c: Modulus, q: u64) -> bool {
    forced(w, part_supported_on(c.c1, q), part_supported_on(c.c2, q), q)
}

/// A twist pair `(N', N'')` for the local factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Twist {
    pub n_local: (i64, i64),
    pub n_unramified: (i64, i64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    pub lattice: LatticeDesc,
    pub w: WeylWord,
    pub c: Modulus,
    pub d: Modulus,
    pub c_prime: Modulus,
    /// `Kl_{Γ,w}(c; 1, 1)`.
    pub lhs: PhaseSum,
    /// Every admissible twist achieving exact equality, in lexicographic order.
    pub twists: Vec<Twist>,
    pub candidates_tried: usize,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        !self.twists.is_empty()
    }
}

fn coordinate_periods(set: &[KloostermanSetElement]) -> (u64, u64) {
    use num_integer::Integer;
    let den = |s: &crate::exact::Scalar| -> u64 {
        u64::try_from(s.denom()).expect("denominator fits in u64")
    };
    set.iter().fold((1, 1), |(p1, p2), e| {
        (p1.lcm(&den(&e.xp.x)), p2.lcm(&den(&e.xp.c)))
    })
}

/// A character `N` and the sum it gives.
type TwistValue = ((i64, i64), PhaseSum);

fn twist_values(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    coprime_to: u64,
    cfg: &EnumerationConfig,
) -> Result<Vec<TwistValue>, KlError> {
    use num_integer::Integer;
    let set = enumerate_kloosterman_set(lattice, w, c, cfg)?;
    let (p1, p2) = coordinate_periods(&set);
    let ok = |n: u64| n.gcd(&coprime_to) == 1;
    let mut out = Vec::new();
    for n1 in (1..=p1).filter(|&n| ok(n)) {
        for n2 in (1..=p2).filter(|&n| ok(n)) {
            let n = (n1 as i64, n2 as i64);
            let chars = CharacterPair::new((1, 1), n);
            if is_admissible(w, c, chars) {
                out.push((n, sum_over(&set, &chars)));
            }
        }
    }
    Ok(out)
}

/// Compare `Kl_{Γ,w}(c; 1, 1)` with `Kl_{Γ,w}(d; 1, N')·Kl_{Γ₀,w}(c'; 1, N'')`
/// over all admissible twists. Without an explicit split, `d` is the part of
/// `c` supported on the primes dividing the discriminant of `Γ`.
///
/// `N'` ranges over residues coprime to the discriminant (or to `d` for an
/// explicit split), `N''` over residues coprime to `c'1·c'2`, each up to the
/// period in which the corresponding sum depends on it.
pub fn factorization_check(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    split: Option<(Modulus, Modulus)>,
    cfg: &EnumerationConfig,
) -> Result<FactorizationReport, KlError> {
    let (d, cp, local_primes) = match split {
        Some((d, cp)) => {
            assert_eq!(
                (d.c1 * cp.c1, d.c2 * cp.c2),
                (c.c1, c.c2),
                "split must multiply to c"
            );
            (d, cp, radical(d.c1 * d.c2))
        }
        None => {
            let disc = lattice.discriminant();
            let d = Modulus::new(part_supported_on(c.c1, disc), part_supported_on(c.c2, disc));
            let cp = Modulus::new(c.c1 / d.c1, c.c2 / d.c2);
            (d, cp, radical(disc))
        }
    };
    let chars = CharacterPair::new((1, 1), (1, 1));
    let lhs = kloosterman_sum(&KloostermanQuery::new(lattice, w, c, chars), cfg)?;
    let left = twist_values(lattice, w, d, local_primes, cfg)?;
    let right = twist_values(LatticeDesc::full(), w, cp, cp.c1 * cp.c2, cfg)?;
    let mut twists = Vec::new();
    for (n1, v1) in &left {
        for (n2, v2) in &right {
            if (v1 * v2).value_eq(&lhs) {
                twists.push(Twist {
                    n_local: *n1,
                    n_unramified: *n2,
                });
            }
        }
    }
    Ok(FactorizationReport {
        lattice,
        w,
        c,
        d,
        c_prime: cp,
        lhs,
        twists,
        candidates_tried: left.len() * right.len(),
    })
}
