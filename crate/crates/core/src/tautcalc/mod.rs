//! Combinatorial tautological-ring calculator: stable-graph enumeration,
//! additive generators with psi/kappa decorations, psi-integrals via the
//! KdV (DVV) recursion, kappa removal, the lambda_{g-1}^3 Hodge integral,
//! the hyperelliptic-locus chain, and generator-level length accounting.

mod generators;
mod graph;
mod hyper;
mod kappa;
mod psi;

pub use generators::{
    count_generators, decorated_generators, generator_length, DecoratedGenerator, LengthReport,
};
pub use graph::{enumerate_stable_graphs, StableGraph};
pub use hyper::{hodge_lambda_cubed, hyperelliptic_delta, hyperelliptic_locus, ClassExpr};
pub use kappa::{kappa_psi_integral, IntegralKey};
pub use psi::{genus0_multinomial, psi_integral, TautError};
