//! Audit of the Sigma_21-representation carrying the independent Hodge
//! classes of the compactified genus-2, 21-pointed moduli space.
//!
//! The irreducible-representation list is transcribed once into a data file
//! guarded by a checksum, since a transcription slip would silently corrupt
//! both totals.

use sha2::{Digest, Sha256};

use super::partition::{dim_irrep, Partition};

const HODGE_LIST_RAW: &str = include_str!("../../data/hodge_classes_m2_21.txt");

/// SHA-256 of the transcribed list file.
pub const HODGE_LIST_SHA256: &str =
    "8bae13456a2764357dc5bc8433fe71522f8b653099b79c2a1c0000ca81e9f8a1";

/// Representations of length >= this count cannot be tautological on the
/// 21-pointed genus-2 space (the stable length bound caps at 12 there).
const LONG_LENGTH: usize = 13;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeAudit {
    /// Sum of the irreducible dimensions over the whole list.
    pub total: u128,
    /// Same sum restricted to partitions with at least 13 parts.
    pub long_part: u128,
    pub num_partitions: usize,
}

fn parse_line(line: &str) -> Partition {
    let mut pairs = Vec::new();
    for token in line.split_whitespace() {
        let (part, mult) = match token.split_once('^') {
            Some((p, m)) => (
                p.parse::<u32>().expect("bad part"),
                m.parse::<u32>().expect("bad exponent"),
            ),
            None => (token.parse::<u32>().expect("bad part"), 1),
        };
        pairs.push((part, mult));
    }
    Partition::from_exponents(&pairs)
}

/// Parses the transcribed list after verifying its checksum.
pub fn hodge_list() -> Vec<Partition> {
    let digest = Sha256::digest(HODGE_LIST_RAW.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{:02x}", b)).collect();
    assert_eq!(hex, HODGE_LIST_SHA256, "hodge class list file was modified");
    HODGE_LIST_RAW
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_line)
        .collect()
}

/// Total dimension of the listed representations together with the part
/// carried by irreducibles of length at least 13.
pub fn hodge_class_audit() -> HodgeAudit {
    let list = hodge_list();
    let mut total = 0u128;
    let mut long_part = 0u128;
    for p in &list {
        let d = dim_irrep(p);
        total += d;
        if p.length() >= LONG_LENGTH {
            long_part += d;
        }
    }
    HodgeAudit {
        total,
        long_part,
        num_partitions: list.len(),
    }
}
