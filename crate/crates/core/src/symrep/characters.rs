//! Murnaghan-Nakayama character values and the character-theoretic
//! induction oracle, independent of the Littlewood-Richardson path.

use std::collections::HashMap;

use super::decomp::Decomposition;
use super::lr::induct_irreps;
use super::partition::{partitions_of, Partition};

/// Beta-set (strictly decreasing bead positions) of a partition, padded to
/// `len` rows: `b_i = lambda_i + (len - 1 - i)`.
fn beta_set(lambda: &Partition, len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| lambda.part(i) + (len - 1 - i) as u32)
        .collect()
}

fn partition_from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i) as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

fn mn_rec(
    lambda: &Partition,
    cycles: &[u32],
    memo: &mut HashMap<(Partition, Vec<u32>), i64>,
) -> i64 {
    if cycles.is_empty() {
        return if lambda.size() == 0 { 1 } else { 0 };
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = cycles[0];
    let rest = &cycles[1..];
    let beta = beta_set(lambda, lambda.length());
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t {
            continue;
        }
        let target = b - t;
        if beta.contains(&target) {
            continue;
        }
        // Height of the removed border strip: beads strictly between
        // target and b.
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        let smaller = partition_from_beta(new_beta);
        total += sign * mn_rec(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Irreducible character value `chi_lambda` at the conjugacy class of cycle
/// type `mu`, by the Murnaghan-Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "cycle type must partition n");
    let mut memo = HashMap::new();
    mn_rec(lambda, mu.parts(), &mut memo)
}

/// Size of the conjugacy class of cycle type `mu` in `Sigma_n`:
/// `n! / z_mu` with `z_mu = prod_i i^{m_i} m_i!`.
pub fn class_size(mu: &Partition) -> u128 {
    let n = mu.size();
    let mut factorial = 1u128;
    for i in 2..=n as u128 {
        factorial *= i;
    }
    let mut z = 1u128;
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (&i, &m) in mult.iter() {
        z *= (i as u128).pow(m);
        for j in 2..=m as u128 {
            z *= j;
        }
    }
    factorial / z
}

/// Induction of `V_{lambda1} x V_{lambda2}` decomposed by characters:
/// the multiplicity of `V_nu` is
/// `(1/(n1! n2!)) sum |C_{mu1}| |C_{mu2}| chi_{l1}(mu1) chi_{l2}(mu2) chi_nu(mu1 u mu2)`.
pub fn induct_by_characters(lambda1: &Partition, lambda2: &Partition) -> Decomposition {
    let n1 = lambda1.size();
    let n2 = lambda2.size();
    let n = n1 + n2;
    let classes1 = partitions_of(n1);
    let classes2 = partitions_of(n2);
    let mut group_order = 1i128;
    for i in 2..=n1 as i128 {
        group_order *= i;
    }
    for i in 2..=n2 as i128 {
        group_order *= i;
    }

    // Precompute the pair data: class sizes, the two character values, and
    // the merged cycle type.
    let mut pairs: Vec<(i128, Partition)> = Vec::new();
    for mu1 in &classes1 {
        let c1 = class_size(mu1) as i128 * character(lambda1, mu1) as i128;
        if c1 == 0 {
            continue;
        }
        for mu2 in &classes2 {
            let c2 = class_size(mu2) as i128 * character(lambda2, mu2) as i128;
            if c2 == 0 {
                continue;
            }
            pairs.push((c1 * c2, mu1.union(mu2)));
        }
    }

    let mut d = Decomposition::new();
    for nu in partitions_of(n) {
        let mut acc = 0i128;
        for (w, merged) in &pairs {
            let chi = character(&nu, merged) as i128;
            if chi != 0 {
                acc += w * chi;
            }
        }
        assert!(acc % group_order == 0, "non-integral multiplicity");
        let mult = acc / group_order;
        assert!(mult >= 0, "negative multiplicity");
        if mult > 0 {
            d.add(nu, mult as u64);
        }
    }
    d
}

/// Outcome of checking length additivity of induction over all pairs of
/// irreducibles of `Sigma_{n1} x Sigma_{n2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityReport {
    pub n1: u32,
    pub n2: u32,
    pub pairs_checked: usize,
    /// Littlewood-Richardson decomposition equals the character oracle's.
    pub oracle_agrees: bool,
    /// `len(Ind(V_l1 x V_l2)) = len(l1) + len(l2)` for every pair.
    pub additive: bool,
}

impl AdditivityReport {
    pub fn passed(&self) -> bool {
        self.oracle_agrees && self.additive
    }
}

/// Checks `len(Ind) = len1 + len2` for all irreducible pairs, comparing the
/// LR implementation against the character-theoretic oracle throughout.
pub fn verify_length_additivity(n1: u32, n2: u32) -> AdditivityReport {
    let mut report = AdditivityReport {
        n1,
        n2,
        pairs_checked: 0,
        oracle_agrees: true,
        additive: true,
    };
    for l1 in partitions_of(n1) {
        for l2 in partitions_of(n2) {
            let via_lr = induct_irreps(&l1, &l2);
            let via_chars = induct_by_characters(&l1, &l2);
            if via_lr != via_chars {
                report.oracle_agrees = false;
            }
            if via_lr.length() != l1.length() + l2.length() {
                report.additive = false;
            }
            report.pairs_checked += 1;
        }
    }
    report
}
