//! Integer partitions and irreducible representation dimensions.

use std::fmt;

/// Partition of a nonnegative integer: weakly decreasing positive parts.
///
/// Doubles as the label of the irreducible Sigma_n representation `V_lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive: {:?}", parts);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds from exponent pairs, e.g. `[(3, 1), (2, 4), (1, 10)]` for
    /// `[3 2^4 1^10]`.
    pub fn from_exponents(pairs: &[(u32, u32)]) -> Self {
        let mut parts = Vec::new();
        for &(part, mult) in pairs {
            for _ in 0..mult {
                parts.push(part);
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts; the paper's "length" of the irreducible label.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Canonical key: parts descending, comma-joined (`"3,2,2,1"`).
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Concatenates the parts of two partitions and reorders, as in
    /// `U_{lambda_1} U_{lambda_2} = U_{lambda_1 + lambda_2}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.length()).all(|i| self.part(i) >= inner.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            go(remaining - next, next, current, out);
            current.pop();
        }
    }
    go(n, n, &mut current, &mut out);
    out
}

/// Dimension of the irreducible Sigma_n representation `V_lambda` by the
/// hook length formula `n! / prod(hooks)`.
pub fn dim_irrep(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let mut factorial = 1u128;
    for i in 2..=n {
        factorial *= i;
    }
    let mut hooks = 1u128;
    let parts = lambda.parts();
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let arm = (p - j - 1) as u128;
            let leg = parts[i + 1..].iter().filter(|&&q| q > j).count() as u128;
            hooks *= arm + leg + 1;
        }
    }
    factorial / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_examples_from_sigma14() {
        let two_seven = Partition::from_exponents(&[(2, 7)]);
        assert_eq!(dim_irrep(&two_seven), 429);
        let hook = Partition::from_exponents(&[(2, 1), (1, 12)]);
        assert_eq!(dim_irrep(&hook), 13);
    }

    #[test]
    fn trivial_and_alternating() {
        for n in 1..=12u32 {
            assert_eq!(dim_irrep(&Partition::new(vec![n])), 1);
            assert_eq!(dim_irrep(&Partition::from_exponents(&[(1, n)])), 1);
        }
    }

    #[test]
    fn dim_squares_sum_to_factorial() {
        let mut factorial = 1u128;
        for n in 1..=10u32 {
            factorial *= n as u128;
            let total: u128 = partitions_of(n).iter().map(|p| dim_irrep(p).pow(2)).sum();
            assert_eq!(total, factorial, "n = {}", n);
        }
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..10
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), e, "n = {}", n);
        }
    }

    #[test]
    fn union_reorders() {
        let a = Partition::new(vec![2]);
        let b = Partition::new(vec![3, 1]);
        assert_eq!(a.union(&b), Partition::new(vec![3, 2, 1]));
    }

    #[test]
    #[should_panic]
    fn increasing_parts_rejected() {
        Partition::new(vec![1, 2]);
    }
}
