//! Exact arithmetic substrate shared by every other module:
//! arbitrary-precision rationals, prime-field character tables, Bernoulli
//! numbers, and univariate polynomials with rational coefficients.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number. `BigRational` keeps values in lowest terms with a
/// positive denominator, which is exactly the representation contract here.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorekitError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact fraction `n/d`. Panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes a rational as `num/den` (plain `num` when the denominator is 1).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den` strings.
pub fn rat_from_str(s: &str) -> Result<Rat, CorekitError> {
    Rat::from_str(s.trim()).map_err(|_| CorekitError::BadRational(s.to_string()))
}

/// Deterministic primality test by trial division; adequate at word scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in `[2, bound]`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

static BERNOULLI_CACHE: Mutex<Vec<Option<Rat>>> = Mutex::new(Vec::new());

/// Bernoulli number `B_k` in the `x/(e^x - 1)` convention, so `B_1 = -1/2`.
///
/// Computed by the recurrence `sum_{j=0}^{k} C(k+1, j) B_j = 0` with all
/// results cached for reuse by the modular-form and Hodge-integral code.
pub fn bernoulli(k: usize) -> Rat {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.len() <= k {
        cache.resize(k + 1, None);
    }
    if let Some(v) = &cache[k] {
        return v.clone();
    }
    for m in 0..=k {
        if cache[m].is_some() {
            continue;
        }
        let value = if m == 0 {
            Rat::one()
        } else {
            // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
            let mut acc = Rat::zero();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for j in 0..m {
                let term = Rat::from_integer(binom.clone()) * cache[j].as_ref().unwrap();
                acc += term;
                // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            -acc / Rat::from_integer(BigInt::from(m + 1))
        };
        cache[m] = Some(value);
    }
    cache[k].clone().unwrap()
}

// ---------------------------------------------------------------------------
// Prime fields with quadratic character tables
// ---------------------------------------------------------------------------

/// Prime field `F_p` with a precomputed quadratic-character table.
///
/// `chi[a]` is `+1` if `a` is a nonzero square mod `p`, `-1` if a nonsquare,
/// and `0` at `a = 0`. The table is built once by squaring every residue, so
/// the census hot loops pay a single lookup per evaluation.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    chi: Vec<i8>,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, CorekitError> {
        if !is_prime(p) {
            return Err(CorekitError::NotPrime(p));
        }
        let mut chi = vec![-1i8; p as usize];
        chi[0] = 0;
        for r in 1..p {
            chi[((r * r) % p) as usize] = 1;
        }
        if p == 2 {
            // Every nonzero element of F_2 is a square.
            chi[1] = 1;
        }
        Ok(PrimeField { p, chi })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Quadratic character of `a` (reduced mod p by the caller).
    #[inline]
    pub fn chi(&self, a: u64) -> i8 {
        self.chi[a as usize]
    }

    #[inline]
    pub fn chi_table(&self) -> &[i8] {
        &self.chi
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials over the rationals
// ---------------------------------------------------------------------------

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rat>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Exact evaluation at an integer argument.
    pub fn eval(&self, x: &BigInt) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * Rat::from_integer(x.clone()) + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rat {
        self.eval(&BigInt::from(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        RationalPolynomial::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", rat_to_string(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", rat_to_string(&a))?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
