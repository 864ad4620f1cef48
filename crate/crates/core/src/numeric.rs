//! Exact unbounded-integer and rational arithmetic, factorials, binomials,
//! and exact determinants.
//!
//! The factorial memo table is a process-global table behind a mutex and is
//! safe for concurrent readers and writers; parallel sweeps share it without
//! further coordination. All other values here are immutable after
//! construction and all operations are pure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Mutex;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum NumericError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("entry count {given} does not match {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, given: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// An exact fraction of unbounded integers, kept in canonical form:
/// the denominator is positive and coprime to the numerator, and zero is
/// stored as `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den` reduced to canonical form. Panics if `den` is zero, which is
    /// a contract violation everywhere in this crate.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The numerator, provided the value is an integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(self.0.pow(exp))
    }

    /// Decimal rendering with `sig` significant digits, rounded half-even.
    /// Plain notation is used for decimal exponents in `-4..=14`, scientific
    /// notation outside that range. Purely integer arithmetic, so the output
    /// is identical on every platform.
    pub fn decimal_string(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let n = self.0.numer().abs();
        let d = self.0.denom().clone();

        // exponent e with 10^e <= n/d < 10^(e+1)
        let mut e: i64 = n.to_string().len() as i64 - d.to_string().len() as i64;
        let pow10 = |k: u64| -> BigInt { BigInt::from(10u32).pow(k as u32) };
        let scaled = |e: i64| -> (BigInt, BigInt) {
            // value * 10^(sig-1-e) as a fraction
            let shift = sig as i64 - 1 - e;
            if shift >= 0 {
                (&n * pow10(shift as u64), d.clone())
            } else {
                (n.clone(), &d * pow10((-shift) as u64))
            }
        };
        // estimate may be off by one
        {
            let (num, den) = scaled(e);
            let q = &num / &den;
            if q.to_string().len() > sig {
                e += 1;
            } else if q < pow10(sig as u64 - 1) {
                e -= 1;
            }
        }
        let (num, den) = scaled(e);
        let (mut q, rem) = num.div_rem(&den);
        let twice = &rem * 2;
        if twice > den || (twice == den && q.is_odd()) {
            q += 1;
        }
        let mut digits = q.to_string();
        if digits.len() > sig {
            // rounding carried over, e.g. 999... -> 1000...
            digits.truncate(sig);
            e += 1;
        }
        debug_assert_eq!(digits.len(), sig);

        let sign = if neg { "-" } else { "" };
        if (-4..=14).contains(&e) {
            if e >= 0 {
                let k = e as usize + 1;
                if k >= sig {
                    format!("{sign}{}{}", digits, "0".repeat(k - sig))
                } else {
                    format!("{sign}{}.{}", &digits[..k], &digits[k..])
                }
            } else {
                format!("{sign}0.{}{}", "0".repeat((-e - 1) as usize), digits)
            }
        } else {
            format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], e)
        }
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including a unit denominator, so that exact values
    /// survive a round trip through text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = NumericError;

    fn from_str(s: &str) -> Result<Self, NumericError> {
        let bad = || NumericError::Parse(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Rational::new(num, den))
            }
            None => {
                let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_bigint(num))
            }
        }
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` exactly, from a process-global memo table that grows on demand.
pub fn factorial(n: u64) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n as usize {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// `1/n!` for `n >= 0`, and `0` for `n < 0`. The zero convention is what
/// makes reciprocal-factorial determinant entries with negative arguments
/// drop out.
pub fn inv_factorial_or_zero(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(n as u64))
    }
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: i64, k: i64) -> Rational {
    Rational::from_bigint(binomial(n, k))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, NumericError> {
        if entries.len() != rows * cols {
            return Err(NumericError::BadShape { rows, cols, given: entries.len() });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    /// The matrix with entries `1/(a_j + l)!` for row `j`, column `l`
    /// (both zero-based); negative arguments give zero entries.
    pub fn reciprocal_factorials(a: &[i64]) -> Self {
        let n = a.len();
        let mut m = RationalMatrix::zero(n, n);
        for (j, &aj) in a.iter().enumerate() {
            for l in 0..n {
                m.set(j, l, inv_factorial_or_zero(aj + l as i64));
            }
        }
        m
    }

    /// Exact determinant by Gaussian elimination with rational pivots.
    pub fn determinant(&self) -> Result<Rational, NumericError> {
        if self.rows != self.cols {
            return Err(NumericError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.entries.clone();
        let at = |m: &Vec<Rational>, i: usize, j: usize| m[i * n + j].clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !at(&m, r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(Rational::zero()),
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = at(&m, col, col);
            det = det * pivot.clone();
            for r in col + 1..n {
                let factor = &at(&m, r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &at(&m, r, j) - &(&factor * &at(&m, col, j));
                    m[r * n + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// Exact determinant by the Bareiss fraction-free scheme. Kept as an
    /// independent route; the two must always agree.
    pub fn determinant_bareiss(&self) -> Result<Rational, NumericError> {
        if self.rows != self.cols {
            return Err(NumericError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<Rational>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = false;
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let swap = match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => r,
                    None => return Ok(Rational::zero()),
                };
                for j in 0..n {
                    m.swap(swap * n + j, k * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&at(&m, i, j) * &at(&m, k, k)) - &(&at(&m, i, k) * &at(&m, k, j));
                    m[i * n + j] = &v / &prev;
                }
            }
            prev = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        Ok(if sign { -det } else { det })
    }
}
