//! Formal nonnegative-integer combinations of irreducible representations.

use std::collections::BTreeMap;
use std::fmt;

use super::partition::{dim_irrep, Partition};

/// Sparse decomposition `sum_lambda mult(lambda) * V_lambda` with all
/// partitions of a common `n`. Keys are stored canonically so the printed
/// form is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    terms: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition { terms: BTreeMap::new() }
    }

    pub fn irreducible(lambda: Partition) -> Self {
        let mut d = Decomposition::new();
        d.add(lambda, 1);
        d
    }

    pub fn add(&mut self, lambda: Partition, mult: u64) {
        if mult == 0 {
            return;
        }
        if let Some(n) = self.level() {
            assert_eq!(lambda.size(), n, "mixed symmetric-group sizes in decomposition");
        }
        *self.terms.entry(lambda).or_insert(0) += mult;
    }

    /// Common `n` of the support, if nonempty.
    pub fn level(&self) -> Option<u32> {
        self.terms.keys().next().map(|p| p.size())
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_constituents(&self) -> usize {
        self.terms.len()
    }

    /// Total dimension `sum mult * dim V_lambda`.
    pub fn dimension(&self) -> u128 {
        self.terms
            .iter()
            .map(|(p, &m)| dim_irrep(p) * m as u128)
            .sum()
    }

    /// Length: the maximum part-count over the support; 0 when empty.
    pub fn length(&self) -> usize {
        self.terms.keys().map(|p| p.length()).max().unwrap_or(0)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, m) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{}*", m)?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_of_decomposition() {
        let mut d = Decomposition::new();
        assert_eq!(d.length(), 0);
        d.add(Partition::new(vec![4]), 1);
        assert_eq!(d.length(), 1);
        d.add(Partition::new(vec![2, 1, 1]), 3);
        assert_eq!(d.length(), 3);
        assert_eq!(d.dimension(), 1 + 3 * 3);
    }

    #[test]
    fn alternating_has_length_n() {
        for n in 1..=8 {
            let d = Decomposition::irreducible(Partition::from_exponents(&[(1, n)]));
            assert_eq!(d.length(), n as usize);
        }
    }

    #[test]
    #[should_panic]
    fn mixed_levels_rejected() {
        let mut d = Decomposition::new();
        d.add(Partition::new(vec![2]), 1);
        d.add(Partition::new(vec![3]), 1);
    }
}
