//! Littlewood-Richardson coefficients by lattice-word skew tableau
//! enumeration, induction of decompositions, and the Sigma_21 module
//! induced from alternating squares.

use super::decomp::Decomposition;
use super::partition::{partitions_of, Partition};

/// Littlewood-Richardson coefficient `c^nu_{lambda mu}`: the number of
/// skew semistandard tableaux of shape `nu/lambda` and content `mu` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    if mu.size() == 0 {
        return 1;
    }
    let rows = nu.length();
    let content = mu.parts();
    let m = content.len();

    // Cells in reading order: top to bottom, right to left within a row.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for r in 0..rows {
        let lo = lambda.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }

    // fill[r][c - lambda_r] is the entry at that cell (1-based values).
    let mut fill: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; (nu.part(r) - lambda.part(r)) as usize])
        .collect();
    let mut used = vec![0u32; m];

    fn entry_at(
        fill: &[Vec<u32>],
        lambda: &Partition,
        nu: &Partition,
        r: usize,
        c: u32,
    ) -> Option<u32> {
        if c < lambda.part(r) || c >= nu.part(r) {
            return None;
        }
        let v = fill[r][(c - lambda.part(r)) as usize];
        if v == 0 {
            None
        } else {
            Some(v)
        }
    }

    fn go(
        idx: usize,
        cells: &[(usize, u32)],
        fill: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        content: &[u32],
        lambda: &Partition,
        nu: &Partition,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (r, c) = cells[idx];
        // Row constraint: weakly increasing left to right, i.e. this entry
        // must be <= the entry to its right (already filled).
        let right = entry_at(fill, lambda, nu, r, c + 1).unwrap_or(content.len() as u32);
        // Column constraint: strictly greater than the entry directly above.
        let above = if r > 0 {
            entry_at(fill, lambda, nu, r - 1, c).unwrap_or(0)
        } else {
            0
        };
        let lo = above + 1;
        let hi = right.min(content.len() as u32);
        for e in lo..=hi {
            let ei = (e - 1) as usize;
            if used[ei] >= content[ei] {
                continue;
            }
            // Lattice condition on the reverse reading word: after placing
            // `e`, the count of `e` must not exceed the count of `e - 1`.
            if e > 1 && used[ei] + 1 > used[ei - 1] {
                continue;
            }
            used[ei] += 1;
            fill[r][(c - lambda.part(r)) as usize] = e;
            go(idx + 1, cells, fill, used, content, lambda, nu, count);
            fill[r][(c - lambda.part(r)) as usize] = 0;
            used[ei] -= 1;
        }
    }

    let mut count = 0u64;
    go(0, &cells, &mut fill, &mut used, content, lambda, nu, &mut count);
    count
}

/// Induction of a pair of irreducibles from `Sigma_{n1} x Sigma_{n2}` to
/// `Sigma_{n1+n2}`: multiplicities are the LR coefficients.
pub fn induct_irreps(lambda1: &Partition, lambda2: &Partition) -> Decomposition {
    let n = lambda1.size() + lambda2.size();
    let mut d = Decomposition::new();
    for nu in partitions_of(n) {
        let c = lr_coefficient(&nu, lambda1, lambda2);
        if c > 0 {
            d.add(nu, c);
        }
    }
    d
}

/// Bilinear extension of [`induct_irreps`] to decompositions.
pub fn induct(d1: &Decomposition, d2: &Decomposition) -> Decomposition {
    let mut out = Decomposition::new();
    for (l1, m1) in d1.iter() {
        for (l2, m2) in d2.iter() {
            for (nu, c) in induct_irreps(l1, l2).iter() {
                out.add(nu.clone(), c * m1 * m2);
            }
        }
    }
    out
}

/// `Ind` from `Sigma_10 x Sigma_10 x Sigma_1` to `Sigma_21` of
/// (alternating x alternating x trivial), computed via two LR products.
pub fn induced_tilde_v() -> Decomposition {
    let alt10 = Partition::from_exponents(&[(1, 10)]);
    let step1 = induct_irreps(&alt10, &alt10);
    let point = Decomposition::irreducible(Partition::new(vec![1]));
    induct(&step1, &point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::kostka::young_rule;

    #[test]
    fn regular_representation_of_sigma2() {
        let v1 = Partition::new(vec![1]);
        let d = induct_irreps(&v1, &v1);
        assert_eq!(d.multiplicity(&Partition::new(vec![2])), 1);
        assert_eq!(d.multiplicity(&Partition::new(vec![1, 1])), 1);
        assert_eq!(d.num_constituents(), 2);
    }

    #[test]
    fn sign_times_sign_to_sigma4() {
        let sgn = Partition::new(vec![1, 1]);
        let d = induct_irreps(&sgn, &sgn);
        assert_eq!(d.multiplicity(&Partition::new(vec![2, 2])), 1);
        assert_eq!(d.multiplicity(&Partition::new(vec![2, 1, 1])), 1);
        assert_eq!(d.multiplicity(&Partition::from_exponents(&[(1, 4)])), 1);
        assert_eq!(d.num_constituents(), 3);
    }

    #[test]
    fn permutation_modules_multiply() {
        // U_{[2]} x U_{[1]} = U_{[2,1]}
        let lhs = induct(&young_rule(&Partition::new(vec![2])), &young_rule(&Partition::new(vec![1])));
        let rhs = young_rule(&Partition::new(vec![2, 1]));
        assert_eq!(lhs, rhs);

        // U_{[2,1]} x U_{[2]} = U_{[2,2,1]}
        let lhs = induct(
            &young_rule(&Partition::new(vec![2, 1])),
            &young_rule(&Partition::new(vec![2])),
        );
        let rhs = young_rule(&Partition::new(vec![2, 2, 1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_dimension_formula() {
        // dim Ind = C(n1+n2, n1) * dim1 * dim2
        let cases = [
            (Partition::new(vec![2, 1]), Partition::new(vec![1, 1])),
            (Partition::new(vec![3, 1]), Partition::new(vec![2, 2])),
            (Partition::new(vec![2, 2]), Partition::new(vec![3])),
        ];
        for (l1, l2) in cases {
            let d = induct_irreps(&l1, &l2);
            let n1 = l1.size() as u128;
            let n2 = l2.size() as u128;
            let mut binom = 1u128;
            for i in 0..n1 {
                binom = binom * (n1 + n2 - i) / (i + 1);
            }
            let expected = binom
                * crate::symrep::partition::dim_irrep(&l1)
                * crate::symrep::partition::dim_irrep(&l2);
            assert_eq!(d.dimension(), expected, "{} x {}", l1, l2);
        }
    }

    #[test]
    fn tilde_v_matches_published_decomposition() {
        let d = induced_tilde_v();
        // [1^21] once
        assert_eq!(d.multiplicity(&Partition::from_exponents(&[(1, 21)])), 1);
        // [3 2^i 1^{18-2i}] once each for i = 0..9
        for i in 0..=9u32 {
            let p = Partition::from_exponents(&[(3, 1), (2, i), (1, 18 - 2 * i)]);
            assert_eq!(d.multiplicity(&p), 1, "i = {}", i);
        }
        // [2^j 1^{21-2j}] twice each for j = 1..10
        for j in 1..=10u32 {
            let p = Partition::from_exponents(&[(2, j), (1, 21 - 2 * j)]);
            assert_eq!(d.multiplicity(&p), 2, "j = {}", j);
        }
        assert_eq!(d.num_constituents(), 21);
        assert_eq!(d.dimension(), 3_879_876);
    }
}
