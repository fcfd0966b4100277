//! Symmetric-group representation toolkit: partitions, irreducible
//! dimensions via hook lengths, Kostka numbers, Young's rule,
//! Littlewood-Richardson induction, the length statistic, the moduli-space
//! length-bound table, and the explicit Sigma_14 / Sigma_21 numerology.

mod audit;
mod bounds;
mod characters;
mod decomp;
mod kostka;
mod lr;
mod partition;

pub use audit::{hodge_class_audit, hodge_list, HodgeAudit, HODGE_LIST_SHA256};
pub use bounds::{theorem_bounds, BoundsError, ModuliSpace};
pub use characters::{
    character, class_size, induct_by_characters, verify_length_additivity, AdditivityReport,
};
pub use decomp::Decomposition;
pub use kostka::{dominates, kostka, young_rule};
pub use lr::{induct, induct_irreps, induced_tilde_v, lr_coefficient};
pub use partition::{dim_irrep, partitions_of, Partition};
