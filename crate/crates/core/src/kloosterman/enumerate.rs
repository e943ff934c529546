//! Exhaustive enumeration of Kloosterman sets.
//!
//! Write `γ = x·h` with `h = c*w·x'`. Since `x ∈ U` fixes the third row and
//! only adds a multiple of it to the fourth, the bottom two rows of `γ` are
//! `h3` and `h4 − x1·h3`. So:
//!
//! 1. `x'` is searched first, coordinate by coordinate in the order
//!    `x, b, c, a` (restricted to `U_w`). The constraints are the entries of
//!    `h3` and the 2×2 minors of the bottom rows, which do not involve `x`.
//!    Each coordinate is pinned to a progression mod 1 by whichever constraint
//!    has become linear in it alone.
//! 2. `x1 mod 1` comes from the fourth row.
//! 3. The top rows are `v1 + p11·γ3 + p12·γ4` and `v2 + p12·γ3 + p22·γ4`, with
//!    `P` the left-invariant coordinates of `x`. `p12` is pinned by
//!    eliminating `p11` (resp. `p22`) between two columns, then `p11` and
//!    `p22` from single columns.
//!
//! Every progression is a superset of the true solutions inside the
//! fundamental domain, and each candidate is checked against all constraints
//! that became fully determined, so the search is complete and sound.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::{KlError, KloostermanSetElement};
use crate::exact::{
    in_lattice, rational_gcd, reduce_into, solve_linear_mod1, zero, ProgressionMod1, Scalar,
};
use crate::gsp4::{
    u_w_coordinates, Coord, CoordSet, GSpElement, LeftCoset, Matrix4, Modulus, UnipotentCoords,
    WeylWord,
};
use crate::lattice::LatticeDesc;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Search limits and fundamental domains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Maximum number of candidate values tried across all stages.
    pub budget: u64,
    /// Left coordinates are reduced into `[left_offset, left_offset + 1)`.
    pub left_offset: Scalar,
    /// Right coordinates are reduced into `[right_offset, right_offset + 1)`.
    pub right_offset: Scalar,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            budget: DEFAULT_BUDGET,
            left_offset: zero(),
            right_offset: zero(),
        }
    }
}

impl EnumerationConfig {
    pub fn with_budget(budget: u64) -> Self {
        EnumerationConfig {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug)]
struct Constraint {
    poly: Poly,
    modulus: Scalar,
}

/// A partial assignment of the `x'` coordinates, with the constraints
/// already specialized to it.
#[derive(Clone, Debug)]
pub struct Branch {
    assigned: Vec<(Coord, Scalar)>,
    constraints: Vec<Constraint>,
}

impl Branch {
    pub fn depth(&self) -> usize {
        self.assigned.len()
    }
}

pub struct Enumerator {
    uw: CoordSet,
    order: Vec<Coord>,
    cell: Matrix4,
    moduli: [[Scalar; 4]; 4],
    root: Option<Branch>,
    cfg: EnumerationConfig,
    used: AtomicU64,
}

fn smallest(progs: impl Iterator<Item = ProgressionMod1>) -> Option<ProgressionMod1> {
    progs.min_by_key(|p| p.len())
}

impl Enumerator {
    pub fn new(lattice: LatticeDesc, w: WeylWord, c: Modulus, cfg: EnumerationConfig) -> Self {
        let (uw, _) = u_w_coordinates(w);
        let order: Vec<Coord> = [Coord::X, Coord::B, Coord::C, Coord::A]
            .into_iter()
            .filter(|k| uw.contains(*k))
            .collect();
        let cell = c.cell_matrix(w).into_matrix();
        let moduli = lattice.entry_moduli();

        // symbolic x' = n(y)s(T') on the U_w coordinates
        let v = |k: Coord| {
            if uw.contains(k) {
                Poly::var(k)
            } else {
                Poly::default()
            }
        };
        let (y, a, b, cc) = (v(Coord::X), v(Coord::A), v(Coord::B), v(Coord::C));
        let one = Poly::constant(crate::exact::one());
        let z = Poly::default;
        let xp = [
            [
                one.clone(),
                y.clone(),
                a.add(&y.mul(&b)),
                b.add(&y.mul(&cc)),
            ],
            [z(), one.clone(), b.clone(), cc.clone()],
            [z(), z(), one.clone(), z()],
            [z(), z(), y.scale(&-crate::exact::one()), one],
        ];
        let row = |i: usize| -> [Poly; 4] {
            core::array::from_fn(|j| {
                (0..4).fold(Poly::default(), |acc, k| {
                    if cell.0[i][k].is_zero() {
                        acc
                    } else {
                        acc.add(&xp[k][j].scale(&cell.0[i][k]))
                    }
                })
            })
        };
        let (h3, h4) = (row(2), row(3));
        let mut constraints = Vec::new();
        for j in 0..4 {
            constraints.push(Constraint {
                poly: h3[j].clone(),
                modulus: moduli[2][j].clone(),
            });
        }
        for i in 0..4 {
            for j in i + 1..4 {
                constraints.push(Constraint {
                    poly: h3[i].mul(&h4[j]).sub(&h3[j].mul(&h4[i])),
                    modulus: rational_gcd(
                        &(&moduli[2][i] * &moduli[3][j]),
                        &(&moduli[2][j] * &moduli[3][i]),
                    ),
                });
            }
        }
        let root = Self::settle(Branch {
            assigned: Vec::new(),
            constraints,
        });
        Enumerator {
            uw,
            order,
            cell,
            moduli,
            root,
            cfg,
            used: AtomicU64::new(0),
        }
    }

    /// Check and drop constraints that no longer involve any variable.
    fn settle(mut b: Branch) -> Option<Branch> {
        let mut ok = true;
        b.constraints.retain(|c| match c.poly.as_constant() {
            Some(v) => {
                ok &= in_lattice(&v, &c.modulus);
                false
            }
            None => true,
        });
        ok.then_some(b)
    }

    fn tick(&self) -> Result<(), KlError> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.cfg.budget {
            return Err(KlError::BudgetExceeded {
                budget: self.cfg.budget,
            });
        }
        Ok(())
    }

    /// Candidates tried so far.
    pub fn candidates_used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn uw(&self) -> CoordSet {
        self.uw
    }

    fn expand(&self, b: &Branch) -> Result<Vec<Branch>, KlError> {
        let var = self.order[b.depth()];
        let prog = smallest(b.constraints.iter().filter_map(|c| {
            c.poly
                .linear_in(var)
                .map(|(alpha, beta)| solve_linear_mod1(&alpha, &beta, &c.modulus))
        }))
        .ok_or(KlError::Unpinned(var.name()))?;
        let mut out = Vec::new();
        for r in prog.residues() {
            self.tick()?;
            let value = reduce_into(&r, &self.cfg.right_offset);
            let mut assigned = b.assigned.clone();
            assigned.push((var, value.clone()));
            let constraints = b
                .constraints
                .iter()
                .map(|c| Constraint {
                    poly: c.poly.substitute(var, &value),
                    modulus: c.modulus.clone(),
                })
                .collect();
            if let Some(child) = Self::settle(Branch {
                assigned,
                constraints,
            }) {
                out.push(child);
            }
        }
        Ok(out)
    }

    /// Breadth-first expansion until at least `target` branches exist or all
    /// coordinates are assigned. The order of the result matches the
    /// depth-first order, so concatenating per-branch results reproduces the
    /// sequential enumeration.
    pub fn branches(&self, target: usize) -> Result<Vec<Branch>, KlError> {
        let mut level: Vec<Branch> = self.root.iter().cloned().collect();
        while level.len() < target && level.iter().any(|b| b.depth() < self.order.len()) {
            let mut next = Vec::new();
            for b in &level {
                if b.depth() < self.order.len() {
                    next.extend(self.expand(b)?);
                } else {
                    next.push(b.clone());
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// All set elements below a branch, depth first.
    pub fn run_branch(&self, b: &Branch) -> Result<Vec<KloostermanSetElement>, KlError> {
        let mut out = Vec::new();
        self.descend(b, &mut out)?;
        Ok(out)
    }

    /// The whole set, sequentially.
    pub fn run(&self) -> Result<Vec<KloostermanSetElement>, KlError> {
        match &self.root {
            Some(root) => self.run_branch(root),
            None => Ok(Vec::new()),
        }
    }

    fn descend(&self, b: &Branch, out: &mut Vec<KloostermanSetElement>) -> Result<(), KlError> {
        if b.depth() == self.order.len() {
            return self.complete(b, out);
        }
        for child in self.expand(b)? {
            self.descend(&child, out)?;
        }
        Ok(())
    }

    fn complete(&self, b: &Branch, out: &mut Vec<KloostermanSetElement>) -> Result<(), KlError> {
        let mut xp = UnipotentCoords::identity();
        for (k, v) in &b.assigned {
            *xp.get_mut(*k) = v.clone();
        }
        let h = &self.cell * &xp.to_matrix();
        let m = &self.moduli;
        let h3 = &h.0[2];
        let h4 = &h.0[3];

        // x1 from row 4: h4j − x1·h3j ∈ m4j·ℤ
        let prog = smallest(
            (0..4)
                .filter(|&j| !h3[j].is_zero())
                .map(|j| solve_linear_mod1(&-&h3[j], &h4[j], &m[3][j])),
        )
        .expect("third row of an invertible matrix is nonzero");
        for r in prog.residues() {
            self.tick()?;
            let x1 = reduce_into(&r, &self.cfg.left_offset);
            let g4: [Scalar; 4] = core::array::from_fn(|j| &h4[j] - &x1 * &h3[j]);
            if !(0..4).all(|j| in_lattice(&g4[j], &m[3][j])) {
                continue;
            }
            let v1: [Scalar; 4] = core::array::from_fn(|j| &h.0[0][j] + &x1 * &h.0[1][j]);
            let v2 = &h.0[1];
            self.solve_top_rows(&x1, h3, &g4, &v1, v2, &xp, out)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn solve_top_rows(
        &self,
        x1: &Scalar,
        g3: &[Scalar; 4],
        g4: &[Scalar; 4],
        v1: &[Scalar; 4],
        v2: &[Scalar; 4],
        xp: &UnipotentCoords,
        out: &mut Vec<KloostermanSetElement>,
    ) -> Result<(), KlError> {
        let m = &self.moduli;
        let mut progs = Vec::new();
        for j in 0..4 {
            for k in j + 1..4 {
                let alpha = &g4[j] * &g3[k] - &g4[k] * &g3[j];
                if alpha.is_zero() {
                    continue;
                }
                // row 1, p11 eliminated
                let beta = &v1[j] * &g3[k] - &v1[k] * &g3[j];
                if let Some(md) = lattice_sum(&(g3[k].abs() * &m[0][j]), &(g3[j].abs() * &m[0][k]))
                {
                    progs.push(solve_linear_mod1(&alpha, &beta, &md));
                }
                // row 2, p22 eliminated
                let beta = &v2[j] * &g4[k] - &v2[k] * &g4[j];
                if let Some(md) = lattice_sum(&(g4[k].abs() * &m[1][j]), &(g4[j].abs() * &m[1][k]))
                {
                    progs.push(solve_linear_mod1(&-&alpha, &beta, &md));
                }
            }
        }
        let p12_prog = smallest(progs.into_iter()).expect("bottom rows are independent");
        let lo = &self.cfg.left_offset;
        for r in p12_prog.residues() {
            self.tick()?;
            let p12 = reduce_into(&r, lo);
            let p11_prog = smallest(
                (0..4)
                    .filter(|&j| !g3[j].is_zero())
                    .map(|j| solve_linear_mod1(&g3[j], &(&v1[j] + &p12 * &g4[j]), &m[0][j])),
            )
            .expect("third row is nonzero");
            let p22_prog = smallest(
                (0..4)
                    .filter(|&j| !g4[j].is_zero())
                    .map(|j| solve_linear_mod1(&g4[j], &(&v2[j] + &p12 * &g3[j]), &m[1][j])),
            )
            .expect("fourth row is nonzero");
            let mut rows1 = Vec::new();
            for r1 in p11_prog.residues() {
                self.tick()?;
                let p11 = reduce_into(&r1, lo);
                let g1: [Scalar; 4] =
                    core::array::from_fn(|j| &v1[j] + &p11 * &g3[j] + &p12 * &g4[j]);
                if (0..4).all(|j| in_lattice(&g1[j], &m[0][j])) {
                    rows1.push((p11, g1));
                }
            }
            if rows1.is_empty() {
                continue;
            }
            let mut rows2 = Vec::new();
            for r2 in p22_prog.residues() {
                self.tick()?;
                let p22 = reduce_into(&r2, lo);
                let g2: [Scalar; 4] =
                    core::array::from_fn(|j| &v2[j] + &p12 * &g3[j] + &p22 * &g4[j]);
                if (0..4).all(|j| in_lattice(&g2[j], &m[1][j])) {
                    rows2.push((p22, g2));
                }
            }
            for (p11, g1) in &rows1 {
                for (p22, g2) in &rows2 {
                    let x = LeftCoset {
                        x1: x1.clone(),
                        p11: p11.clone(),
                        p12: p12.clone(),
                        p22: p22.clone(),
                    }
                    .to_coords();
                    let gamma = Matrix4([g1.clone(), g2.clone(), g3.clone(), g4.clone()]);
                    out.push(KloostermanSetElement {
                        x,
                        xp: xp.clone(),
                        gamma: GSpElement::new_unit_multiplier(gamma),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Generator of `aℤ + bℤ`, ignoring zero generators; `None` if both vanish.
fn lattice_sum(a: &Scalar, b: &Scalar) -> Option<Scalar> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => None,
        (false, true) => Some(a.clone()),
        (true, false) => Some(b.clone()),
        (false, false) => Some(rational_gcd(a, b)),
    }
}
