//! Length bounds for the tautological rings of the three standard moduli
//! spaces, as functions of (g, n, k).

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuliSpace {
    /// Stable curves: `min(k+1, 3g-2+n-k, floor((2g-1+n)/2))`.
    Stable,
    /// Compact type: `min(k+1, 2g-2+n-k)`.
    CompactType,
    /// Rational tails: `min(k+1, g-1+n-k)`.
    RationalTails,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("(g, n) = ({0}, {1}) is unstable")]
    Unstable(u32, u32),
    #[error("codimension {k} exceeds the dimension {dim}")]
    CodimTooLarge { k: u32, dim: u32 },
}

/// Dimension `3g - 3 + n` of the moduli space of stable curves.
pub fn moduli_dim(g: u32, n: u32) -> u32 {
    3 * g + n - 3
}

/// Length bound for `R^k` of the chosen space. Values that would be
/// negative (degrees above the socle) clamp to zero.
pub fn theorem_bounds(g: u32, n: u32, k: u32, space: ModuliSpace) -> Result<u32, BoundsError> {
    if 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(BoundsError::Unstable(g, n));
    }
    let dim = moduli_dim(g, n);
    if k > dim {
        return Err(BoundsError::CodimTooLarge { k, dim });
    }
    let g = g as i64;
    let n = n as i64;
    let k = k as i64;
    let bound = match space {
        ModuliSpace::Stable => (k + 1)
            .min(3 * g - 2 + n - k)
            .min((2 * g - 1 + n).div_euclid(2)),
        ModuliSpace::CompactType => (k + 1).min(2 * g - 2 + n - k),
        ModuliSpace::RationalTails => (k + 1).min(g - 1 + n - k),
    };
    Ok(bound.max(0) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headline_values() {
        assert_eq!(theorem_bounds(2, 21, 12, ModuliSpace::Stable).unwrap(), 12);
        assert_eq!(theorem_bounds(0, 5, 1, ModuliSpace::Stable).unwrap(), 2);
        assert_eq!(theorem_bounds(1, 1, 0, ModuliSpace::RationalTails).unwrap(), 1);
    }

    #[test]
    fn unstable_rejected() {
        assert_eq!(
            theorem_bounds(0, 2, 0, ModuliSpace::Stable).unwrap_err(),
            BoundsError::Unstable(0, 2)
        );
        assert_eq!(
            theorem_bounds(1, 0, 0, ModuliSpace::Stable).unwrap_err(),
            BoundsError::Unstable(1, 0)
        );
        assert!(matches!(
            theorem_bounds(1, 1, 2, ModuliSpace::Stable).unwrap_err(),
            BoundsError::CodimTooLarge { .. }
        ));
    }

    #[test]
    fn socle_symmetry() {
        // Stable: invariant under k <-> 3g-3+n-k; compact type under
        // k <-> 2g-3+n-k; rational tails under k <-> g-2+n-k (g > 0).
        for g in 0..=3u32 {
            for n in 0..=10u32 {
                if 2 * g as i64 - 2 + n as i64 <= 0 {
                    continue;
                }
                let dim = moduli_dim(g, n);
                for k in 0..=dim {
                    let dual = dim - k;
                    assert_eq!(
                        theorem_bounds(g, n, k, ModuliSpace::Stable).unwrap(),
                        theorem_bounds(g, n, dual, ModuliSpace::Stable).unwrap(),
                        "stable g={} n={} k={}",
                        g,
                        n,
                        k
                    );
                    let socle_c = 2 * g as i64 - 3 + n as i64;
                    if socle_c >= 0 && (k as i64) <= socle_c && socle_c - (k as i64) <= dim as i64 {
                        assert_eq!(
                            theorem_bounds(g, n, k, ModuliSpace::CompactType).unwrap(),
                            theorem_bounds(g, n, (socle_c - k as i64) as u32, ModuliSpace::CompactType)
                                .unwrap(),
                            "compact g={} n={} k={}",
                            g,
                            n,
                            k
                        );
                    }
                    if g > 0 {
                        let socle_rt = g as i64 - 2 + n as i64;
                        if socle_rt >= 0
                            && (k as i64) <= socle_rt
                            && socle_rt - (k as i64) <= dim as i64
                        {
                            assert_eq!(
                                theorem_bounds(g, n, k, ModuliSpace::RationalTails).unwrap(),
                                theorem_bounds(
                                    g,
                                    n,
                                    (socle_rt - k as i64) as u32,
                                    ModuliSpace::RationalTails
                                )
                                .unwrap(),
                                "rt g={} n={} k={}",
                                g,
                                n,
                                k
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn genus2_n21_table() {
        // The floor((2g-1+n)/2) = 12 cap is what rules out length-13
        // representations in codimension 12.
        for k in 0..=moduli_dim(2, 21) {
            let b = theorem_bounds(2, 21, k, ModuliSpace::Stable).unwrap();
            assert!(b <= 12);
        }
    }
}
