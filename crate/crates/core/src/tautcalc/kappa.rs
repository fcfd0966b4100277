//! Mixed kappa-psi integrals, reduced to pure psi integrals by the
//! set-partition expansion: each block B of a partition of the kappa
//! indices becomes one extra marking with psi exponent `sum_{j in B} b_j + 1`
//! and sign `(-1)^{|B|-1}`.
//!
//! The expansion follows from iterating the comparison
//! `kappa_b = pi^* kappa_b + psi_{n+1}^b` under the forgetful map; each
//! block is created by exactly one absorption event of that recursion. The
//! single-kappa case is the plain push-forward `kappa_b = pi_*(psi^{b+1})`.

use num_traits::Zero;

use crate::corekit::{rat, Rat};

use super::psi::{psi_integral, TautError};

/// Key of a mixed integral: genus, psi exponents at the markings, and the
/// kappa indices (with multiplicity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralKey {
    pub g: u32,
    pub psi_exps: Vec<u32>,
    pub kappa_indices: Vec<u32>,
}

impl IntegralKey {
    pub fn new(g: u32, psi_exps: Vec<u32>, kappa_indices: Vec<u32>) -> Self {
        IntegralKey { g, psi_exps, kappa_indices }
    }

    pub fn degree(&self) -> i64 {
        self.psi_exps.iter().map(|&a| a as i64).sum::<i64>()
            + self.kappa_indices.iter().map(|&b| b as i64).sum::<i64>()
    }
}

/// All set partitions of `{0, .., r-1}` as block lists.
fn set_partitions(r: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn go(i: usize, r: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == r {
            out.push(blocks.clone());
            return;
        }
        for bi in 0..blocks.len() {
            blocks[bi].push(i);
            go(i + 1, r, blocks, out);
            blocks[bi].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, r, blocks, out);
        blocks.pop();
    }
    go(0, r, &mut blocks, &mut out);
    out
}

/// Exact evaluation of `int psi^{a_1}..psi^{a_n} kappa_{b_1}..kappa_{b_r}`.
///
/// Requires `sum a_i + sum b_j = 3g - 3 + n`; with no kappa factors this is
/// exactly [`psi_integral`].
pub fn kappa_psi_integral(key: &IntegralKey) -> Result<Rat, TautError> {
    let n = key.psi_exps.len() as i64;
    let expected = 3 * key.g as i64 - 3 + n;
    let got = key.degree();
    if got != expected {
        return Err(TautError::GradingViolation { expected, got });
    }
    if key.kappa_indices.is_empty() {
        return psi_integral(key.g, &key.psi_exps);
    }
    let r = key.kappa_indices.len();
    let mut total = Rat::zero();
    for partition in set_partitions(r) {
        let mut weight = rat(1);
        let mut exps = key.psi_exps.clone();
        for block in &partition {
            if block.len() % 2 == 0 {
                weight = -weight;
            }
            let merged: u32 = block.iter().map(|&j| key.kappa_indices[j]).sum();
            exps.push(merged + 1);
        }
        let v = psi_integral(key.g, &exps)?;
        if !v.is_zero() {
            total += weight * v;
        }
    }
    Ok(total)
}
