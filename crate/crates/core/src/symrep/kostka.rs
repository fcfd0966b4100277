//! Kostka numbers by semistandard tableau counting, and Young's rule.

use std::collections::HashMap;

use super::decomp::Decomposition;
use super::partition::{partitions_of, Partition};

/// Dominance order: `mu` dominates `lambda` iff every prefix sum of `mu` is
/// at least the corresponding prefix sum of `lambda` (equal sizes assumed).
pub fn dominates(mu: &Partition, lambda: &Partition) -> bool {
    debug_assert_eq!(mu.size(), lambda.size());
    let rows = mu.length().max(lambda.length());
    let mut sum_mu = 0u32;
    let mut sum_la = 0u32;
    for i in 0..rows {
        sum_mu += mu.part(i);
        sum_la += lambda.part(i);
        if sum_mu < sum_la {
            return false;
        }
    }
    true
}

/// All `nu` inside `mu` with `mu/nu` a horizontal strip of the given size.
fn horizontal_strip_predecessors(mu: &Partition, strip: u32) -> Vec<Partition> {
    let rows = mu.length();
    let mut out = Vec::new();
    let mut parts = vec![0u32; rows];
    fn go(
        mu: &Partition,
        row: usize,
        remaining: u32,
        parts: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == mu.length() {
            if remaining == 0 {
                let trimmed: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
                out.push(Partition::new(trimmed));
            }
            return;
        }
        // nu_row ranges over [mu_{row+1} .. mu_row], weakly decreasing with
        // the previous row automatically since nu_{row-1} >= mu_row >= nu_row.
        let lo = mu.part(row + 1);
        let hi = mu.part(row);
        for v in lo..=hi {
            let removed = hi - v;
            if removed > remaining {
                continue;
            }
            parts[row] = v;
            go(mu, row + 1, remaining - removed, parts, out);
        }
        parts[row] = 0;
    }
    go(mu, 0, strip, &mut parts, &mut out);
    out
}

fn kostka_rec(mu: &Partition, content: &[u32], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
    if content.is_empty() {
        return if mu.size() == 0 { 1 } else { 0 };
    }
    if let Some(&v) = memo.get(&(mu.clone(), content.len())) {
        return v;
    }
    let last = content[content.len() - 1];
    let rest = &content[..content.len() - 1];
    let mut total = 0u64;
    for nu in horizontal_strip_predecessors(mu, last) {
        total += kostka_rec(&nu, rest, memo);
    }
    memo.insert((mu.clone(), content.len()), total);
    total
}

/// Kostka number `K_{mu lambda}`: the number of semistandard Young tableaux
/// of shape `mu` and content `lambda`. Panics on a size mismatch.
pub fn kostka(mu: &Partition, lambda: &Partition) -> u64 {
    assert_eq!(mu.size(), lambda.size(), "|mu| must equal |lambda|");
    let mut memo = HashMap::new();
    kostka_rec(mu, lambda.parts(), &mut memo)
}

/// Young's rule: the permutation module `U_lambda` decomposes as
/// `V_lambda + sum_{mu > lambda} K_{mu lambda} V_mu`.
pub fn young_rule(lambda: &Partition) -> Decomposition {
    let mut d = Decomposition::new();
    for mu in partitions_of(lambda.size()) {
        if dominates(&mu, lambda) {
            let k = kostka(&mu, lambda);
            if k > 0 {
                d.add(mu, k);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostka_diagonal_is_one() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                assert_eq!(kostka(&lambda, &lambda), 1, "lambda = {}", lambda);
            }
        }
    }

    #[test]
    fn kostka_examples() {
        let mu = Partition::new(vec![2, 1]);
        let ones = Partition::new(vec![1, 1, 1]);
        assert_eq!(kostka(&mu, &ones), 2);
        assert_eq!(kostka(&ones, &mu), 0);
    }

    #[test]
    fn kostka_positive_iff_dominates() {
        for n in 1..=8u32 {
            let parts = partitions_of(n);
            for mu in &parts {
                for lambda in &parts {
                    let k = kostka(mu, lambda);
                    assert_eq!(k > 0, dominates(mu, lambda), "mu={} lambda={}", mu, lambda);
                }
            }
        }
    }

    #[test]
    fn young_rule_examples() {
        let trivial = young_rule(&Partition::new(vec![4]));
        assert_eq!(trivial.num_constituents(), 1);
        assert_eq!(trivial.multiplicity(&Partition::new(vec![4])), 1);

        let regular2 = young_rule(&Partition::new(vec![1, 1]));
        assert_eq!(regular2.multiplicity(&Partition::new(vec![2])), 1);
        assert_eq!(regular2.multiplicity(&Partition::new(vec![1, 1])), 1);

        let u21 = young_rule(&Partition::new(vec![2, 1]));
        assert_eq!(u21.multiplicity(&Partition::new(vec![3])), 1);
        assert_eq!(u21.multiplicity(&Partition::new(vec![2, 1])), 1);
        assert_eq!(u21.multiplicity(&Partition::new(vec![1, 1, 1])), 0);
    }

    #[test]
    fn young_rule_length_matches_label() {
        for n in 1..=8u32 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    young_rule(&lambda).length(),
                    lambda.length(),
                    "lambda = {}",
                    lambda
                );
            }
        }
    }

    #[test]
    fn permutation_module_dimension() {
        // dim U_lambda = n! / prod(lambda_i!)
        for n in 1..=7u32 {
            for lambda in partitions_of(n) {
                let mut expected = 1u128;
                for i in 2..=n as u128 {
                    expected *= i;
                }
                for &part in lambda.parts() {
                    for i in 2..=part as u128 {
                        expected /= i;
                    }
                }
                assert_eq!(young_rule(&lambda).dimension(), expected, "lambda = {}", lambda);
            }
        }
    }
}
