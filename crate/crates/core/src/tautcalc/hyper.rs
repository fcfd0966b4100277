//! The closed Hodge-integral formula for `lambda_{g-1}^3` and the
//! hyperelliptic-locus chain: the Thom-Porteous degeneracy class on the
//! universal curve followed by push-forward to the moduli of curves.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::corekit::{bernoulli, rat, rat_to_string, Rat};

/// `int_{Mbar_g} lambda_{g-1}^3 = |B_{2g}|/2g * |B_{2g-2}|/(2g-2) * 1/(2g-2)!`.
pub fn hodge_lambda_cubed(g: u32) -> Rat {
    assert!(g >= 2, "formula applies from genus 2 on");
    let b2g = bernoulli(2 * g as usize).abs();
    let b2g2 = bernoulli(2 * g as usize - 2).abs();
    let mut fact = BigInt::one();
    for i in 2..=(2 * g as i64 - 2) {
        fact *= BigInt::from(i);
    }
    b2g / rat(2 * g as i64) * b2g2 / rat(2 * g as i64 - 2) / Rat::from_integer(fact)
}

/// Monomial in the classes tracked by the hyperelliptic chain: a power of
/// psi (or the kappa class it pushes to) times at most one lambda class.
///
/// `psi` holds the psi exponent before push-forward; `kappa` the single
/// kappa index afterwards. Unused slots stay `None` / zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassMonomial {
    pub psi: u32,
    pub kappa: Option<u32>,
    pub lambda: Option<u32>,
}

impl ClassMonomial {
    fn unit() -> Self {
        ClassMonomial { psi: 0, kappa: None, lambda: None }
    }
}

/// Exact linear combination of [`ClassMonomial`]s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassExpr {
    terms: BTreeMap<ClassMonomial, Rat>,
}

impl ClassExpr {
    pub fn new() -> Self {
        ClassExpr { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, m: ClassMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ClassMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant expression.
    pub fn constant(c: Rat) -> Self {
        let mut e = ClassExpr::new();
        e.add_term(ClassMonomial::unit(), c);
        e
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = ClassExpr::new();
        for (m, v) in self.terms.iter() {
            out.add_term(m.clone(), v * c);
        }
        out
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut names = Vec::new();
            if m.psi > 0 {
                names.push(if m.psi == 1 { "psi".to_string() } else { format!("psi^{}", m.psi) });
            }
            if let Some(j) = m.kappa {
                names.push(format!("kappa_{}", j));
            }
            if let Some(i) = m.lambda {
                names.push(format!("lambda_{}", i));
            }
            let mono = names.join("*");
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let a = c.abs();
            if mono.is_empty() {
                write!(f, "{}", rat_to_string(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", rat_to_string(&a), mono)?;
            }
        }
        Ok(())
    }
}

/// Degree-(g-1) part of
/// `(1 - lambda_1 + lambda_2 - ... +- lambda_g) / ((1 - psi)(1 - 2 psi))`
/// on the universal curve: the Thom-Porteous class of the Weierstrass
/// degeneracy locus. Uses `1/((1-psi)(1-2psi)) = sum_k (2^{k+1}-1) psi^k`.
pub fn hyperelliptic_delta(g: u32) -> ClassExpr {
    assert!(g >= 2);
    let mut out = ClassExpr::new();
    for i in 0..=(g - 1) {
        // (-1)^i lambda_i (lambda_0 = 1) paired with psi^{g-1-i}.
        let k = g - 1 - i;
        let coeff = rat(if i % 2 == 0 { 1 } else { -1 }) * rat((1i64 << (k + 1)) - 1);
        let m = ClassMonomial {
            psi: k,
            kappa: None,
            lambda: if i == 0 { None } else { Some(i) },
        };
        out.add_term(m, coeff);
    }
    out
}

/// Class of the hyperelliptic locus in the moduli of genus-`g` curves:
/// `(1/(2g+2)) pi_*(Delta)`, with `pi_*(psi^a . lambda) = kappa_{a-1} . lambda`,
/// `pi_*` of a pure lambda monomial zero by fiber dimension, and
/// `kappa_0 = 2g - 2`.
pub fn hyperelliptic_locus(g: u32) -> ClassExpr {
    let delta = hyperelliptic_delta(g);
    let mut pushed = ClassExpr::new();
    for (m, c) in delta.terms() {
        if m.psi == 0 {
            continue; // no fiber class to integrate
        }
        let kappa_index = m.psi - 1;
        if kappa_index == 0 {
            // kappa_0 is the scalar 2g - 2 on the unpointed space.
            let scaled = c * rat(2 * g as i64 - 2);
            pushed.add_term(
                ClassMonomial { psi: 0, kappa: None, lambda: m.lambda },
                scaled,
            );
        } else {
            pushed.add_term(
                ClassMonomial { psi: 0, kappa: Some(kappa_index), lambda: m.lambda },
                c.clone(),
            );
        }
    }
    pushed.scale(&Rat::new(BigInt::one(), BigInt::from(2 * g as i64 + 2)))
}
