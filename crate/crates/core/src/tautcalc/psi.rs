//! psi-class intersection numbers `<tau_{a_1} ... tau_{a_n}>_g` by the
//! Dijkgraaf-Verlinde-Verlinde recursion, seeded by `<tau_0^3>_0 = 1`.
//!
//! The recursion removes the largest insertion `tau_{a_1}`:
//!
//! ```text
//! (2a_1+1)!! <tau_{a_1} prod_j tau_{a_j}>_g =
//!     sum_j ((2a_1+2a_j-1)!!/(2a_j-1)!!) <tau_{a_1+a_j-1} prod_{i!=j}>_g
//!   + 1/2 sum_{b+c=a_1-2} (2b+1)!!(2c+1)!! ( <tau_b tau_c prod>_{g-1}
//!       + sum_{g1+g2=g, S1|S2} <tau_b S1>_{g1} <tau_c S2>_{g2} )
//! ```
//!
//! String and dilaton are special cases and come out of the same formula.
//! One-point numbers `<tau_{3g-2}>_g` are reached through the string
//! identity `<tau_{3g-2}>_g = <tau_0 tau_{3g-1}>_g`, which turns the
//! recursion into a solvable linear equation in the unknown.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::corekit::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TautError {
    #[error("grading violation: sum of exponents is {got}, expected {expected} = 3g-3+n")]
    GradingViolation { expected: i64, got: i64 },
    #[error("psi integrals need at least one marking")]
    NoMarkings,
    #[error("genus must be at least {0}")]
    GenusTooSmall(u32),
}

static PSI_MEMO: Mutex<Option<HashMap<(u32, Vec<u32>), Rat>>> = Mutex::new(None);

fn memo_get(key: &(u32, Vec<u32>)) -> Option<Rat> {
    PSI_MEMO
        .lock()
        .unwrap()
        .as_ref()
        .and_then(|m| m.get(key).cloned())
}

fn memo_put(key: (u32, Vec<u32>), value: Rat) {
    PSI_MEMO
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, value);
}

/// Odd double factorial `(2m+1)!!` (with `(-1)!! = 1` at `m
/// = -1`, which only appears through the `a_j = 0` denominators).
fn odd_double_factorial(m: i64) -> BigInt {
    if m <= -1 {
        return BigInt::one();
    }
    let mut acc = BigInt::one();
    let mut t = 1i64;
    while t <= 2 * m + 1 {
        acc *= BigInt::from(t);
        t += 2;
    }
    acc
}

fn rat_int(b: BigInt) -> Rat {
    Rat::from_integer(b)
}

/// Is `(g, n)` a stable pair with the correct grading?
fn valid_key(g: u32, exps: &[u32]) -> bool {
    let n = exps.len() as i64;
    if 2 * g as i64 - 2 + n <= 0 {
        return false;
    }
    let sum: i64 = exps.iter().map(|&a| a as i64).sum();
    sum == 3 * g as i64 - 3 + n
}

/// Internal evaluation: returns 0 for unstable or wrongly graded keys so the
/// recursion can sum over formal splittings freely.
fn value(g: u32, exps: &mut Vec<u32>) -> Rat {
    if !valid_key(g, exps) {
        return Rat::zero();
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let key = (g, exps.clone());
    if let Some(v) = memo_get(&key) {
        return v;
    }
    let result = compute(g, &key.1);
    memo_put(key, result.clone());
    result
}

fn compute(g: u32, exps: &[u32]) -> Rat {
    let n = exps.len();
    if g == 0 && n == 3 {
        return Rat::one();
    }
    if n == 1 {
        return one_point(g);
    }
    // Remove the largest insertion (exps are sorted descending, and a
    // correctly graded key with n >= 2 insertions has exps[0] >= 1 except
    // for (0, 3) handled above).
    let a1 = exps[0];
    debug_assert!(a1 >= 1);
    let spectators = &exps[1..];
    dvv_rhs(g, a1, spectators) / rat_int(odd_double_factorial(a1 as i64))
}

/// Right-hand side of the DVV relation for removing `tau_{a1}`, divided by
/// nothing; the caller divides by `(2 a1 + 1)!!`.
fn dvv_rhs(g: u32, a1: u32, spectators: &[u32]) -> Rat {
    let mut total = Rat::zero();

    // Contact terms: join tau_{a1} with one spectator.
    for j in 0..spectators.len() {
        let aj = spectators[j] as i64;
        let coeff = rat_int(odd_double_factorial(a1 as i64 + aj - 1))
            / rat_int(odd_double_factorial(aj - 1));
        let mut rest: Vec<u32> = Vec::with_capacity(spectators.len());
        rest.push(a1 + spectators[j]);
        rest[0] -= 1;
        for (i, &a) in spectators.iter().enumerate() {
            if i != j {
                rest.push(a);
            }
        }
        let v = value(g, &mut rest);
        if !v.is_zero() {
            total += coeff * v;
        }
    }

    // Splitting terms: tau_{a1} degenerates into tau_b tau_c.
    if a1 >= 2 {
        let mut split_total = Rat::zero();
        for b in 0..=(a1 - 2) {
            let c = a1 - 2 - b;
            let coeff = rat_int(
                odd_double_factorial(b as i64) * odd_double_factorial(c as i64),
            );

            // Non-separating: genus drops by one, both new insertions stay.
            if g >= 1 {
                let mut key: Vec<u32> = Vec::with_capacity(spectators.len() + 2);
                key.push(b);
                key.push(c);
                key.extend_from_slice(spectators);
                let v = value(g - 1, &mut key);
                if !v.is_zero() {
                    split_total += coeff.clone() * v;
                }
            }

            // Separating: distribute genus and spectators over two stable
            // pieces carrying tau_b and tau_c respectively.
            for g1 in 0..=g {
                let g2 = g - g1;
                for mask in 0..(1u32 << spectators.len()) {
                    let mut s1: Vec<u32> = vec![b];
                    let mut s2: Vec<u32> = vec![c];
                    for (i, &a) in spectators.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            s1.push(a);
                        } else {
                            s2.push(a);
                        }
                    }
                    let v1 = value(g1, &mut s1);
                    if v1.is_zero() {
                        continue;
                    }
                    let v2 = value(g2, &mut s2);
                    if v2.is_zero() {
                        continue;
                    }
                    split_total += coeff.clone() * v1 * v2;
                }
            }
        }
        total += split_total / rat_int(BigInt::from(2));
    }

    total
}

/// One-point number `<tau_{3g-2}>_g` for `g >= 1`, via the string-extended
/// key `<tau_{3g-1} tau_0>_g` whose DVV expansion is linear in the unknown.
fn one_point(g: u32) -> Rat {
    debug_assert!(g >= 1);
    let a = 3 * g - 2;
    let a1 = a + 1;
    // (2 a1 + 1)!! X = (2a+1)!!/(-1)!! * X + lower,  X = <tau_a>_g.
    let lhs = rat_int(odd_double_factorial(a1 as i64));
    let self_coeff = rat_int(odd_double_factorial(a as i64));

    // Lower-order part of the DVV right-hand side: splitting terms only
    // (the single contact term is the self-referential one).
    let mut lower = Rat::zero();
    for b in 0..=(a1 - 2) {
        let c = a1 - 2 - b;
        let coeff =
            rat_int(odd_double_factorial(b as i64) * odd_double_factorial(c as i64));
        let mut key = vec![b, c, 0];
        let v = value(g - 1, &mut key);
        if !v.is_zero() {
            lower += coeff.clone() * v;
        }
        for g1 in 0..=g {
            let g2 = g - g1;
            // tau_0 spectator goes to either side.
            let mut k1 = vec![b, 0];
            let v1 = value(g1, &mut k1);
            if !v1.is_zero() {
                let mut k2 = vec![c];
                let v2 = value(g2, &mut k2);
                if !v2.is_zero() {
                    lower += coeff.clone() * v1 * v2;
                }
            }
            let mut k1 = vec![b];
            let v1 = value(g1, &mut k1);
            if !v1.is_zero() {
                let mut k2 = vec![c, 0];
                let v2 = value(g2, &mut k2);
                if !v2.is_zero() {
                    lower += coeff.clone() * v1 * v2;
                }
            }
        }
    }
    lower = lower / rat_int(BigInt::from(2));
    lower / (lhs - self_coeff)
}

/// Exact psi-integral `int_{Mbar_{g,n}} psi_1^{a_1} ... psi_n^{a_n}`.
///
/// Errors when the exponents do not satisfy `sum a_i = 3g - 3 + n` or when
/// no markings are given.
pub fn psi_integral(g: u32, exps: &[u32]) -> Result<Rat, TautError> {
    if exps.is_empty() {
        return Err(TautError::NoMarkings);
    }
    let expected = 3 * g as i64 - 3 + exps.len() as i64;
    let got: i64 = exps.iter().map(|&a| a as i64).sum();
    if got != expected {
        return Err(TautError::GradingViolation { expected, got });
    }
    let mut key = exps.to_vec();
    // Stability: (0,1), (0,2) cannot satisfy the grading (expected < 0), so
    // the remaining keys are all stable.
    Ok(value(g, &mut key))
}

/// Closed genus-0 formula `binom(n-3; a_1, ..., a_n)`; used by tests and the
/// acceptance suite as an independent oracle for the recursion.
pub fn genus0_multinomial(exps: &[u32]) -> Rat {
    let n = exps.len() as i64;
    let total: i64 = exps.iter().map(|&a| a as i64).sum();
    if total != n - 3 {
        return Rat::zero();
    }
    let mut numer = BigInt::one();
    for i in 2..=(n - 3) {
        numer *= BigInt::from(i);
    }
    let mut denom = BigInt::one();
    for &a in exps {
        for i in 2..=(a as i64) {
            denom *= BigInt::from(i);
        }
    }
    Rat::new(numer, denom)
}
