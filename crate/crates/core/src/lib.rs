//! Exact-arithmetic workbench for automorphism-weighted curve counts over
//! finite fields, elliptic modular form q-expansions, symmetric group
//! representation bounds, and ψ/κ/λ intersection calculus.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is used anywhere. All public numbers serialize as `num/den` strings.

pub mod census;
pub mod corekit;
pub mod fitlab;
pub mod modforms;
pub mod symrep;
pub mod tautcalc;

pub use corekit::{Rat, RationalPolynomial};
