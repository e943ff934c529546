//! Exact symplectic Kloosterman sums for Sp(4) lattices.
//!
//! Everything here is `no_std` with `alloc`: matrices carry arbitrary-precision
//! rationals, character sums are kept as exact integer combinations of roots
//! of unity, and numeric evaluation goes through a fixed-point bigint kernel.
//! The companion `sp4kl` crate adds threading, file formats and the CLI.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod exact;
pub mod geometric;
pub mod gsp4;
pub mod kloosterman;
pub mod lattice;
pub mod spectral;

pub use exact::{phase_of, PhasePoint, PhaseSum, Scalar};
pub use gsp4::{CharacterPair, GSpElement, Modulus, UnipotentCoords, WeylWord};
pub use kloosterman::{KloostermanQuery, KloostermanSetElement};
pub use lattice::LatticeDesc;
