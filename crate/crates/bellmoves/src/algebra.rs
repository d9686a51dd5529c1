//! Exact arithmetic: big integers, big rationals, dense matrices over them,
//! truncated rational power series, and multiset comparison by power sums.
//!
//! Everything here is exact; there is no floating point. Matrices are dense
//! (the groups and move graphs handled by this crate are tiny) and series
//! carry an explicit truncation order that all arithmetic must agree on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(Int::from(numer), Int::from(denom))
}

pub fn rat_from_int(v: Int) -> Rat {
    Rat::from_integer(v)
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient with the usual out-of-range convention:
/// zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn pow2(e: u64) -> Int {
    Int::one() << usize::try_from(e).expect("exponent fits usize")
}

/// Formats a rational as `p` or `p/q` in decimal.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` decimal notation.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |part: &str| -> Result<Int> {
        part.trim()
            .parse::<Int>()
            .map_err(|e| Error::invalid("rational", format!("{part:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::invalid("rational", "zero denominator"));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Dense row-major matrix over any exact scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadEntryCount(entries.len(), rows, cols));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Exact matrix product; the inner dimensions must agree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// `self^t` by repeated squaring, with `self^0 = I`.
    pub fn pow(&self, t: u64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = t;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

impl RatMatrix {
    /// JSON array-of-arrays with rationals rendered as `p` / `p/q` strings.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| {
                serde_json::Value::Array(
                    self.row(r).iter().map(|e| serde_json::Value::String(format_rat(e))).collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows).to_string()
    }
}

impl IntMatrix {
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| {
                serde_json::Value::Array(
                    self.row(r).iter().map(|e| serde_json::Value::String(e.to_string())).collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows).to_string()
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Power series over the rationals, truncated at a fixed order `N`:
/// the coefficients of `x^0 .. x^N`. Arithmetic never changes the order;
/// combining series of different orders is an error rather than a silent
/// truncation to the shorter one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatSeries {
    coeffs: Vec<Rat>,
}

impl RatSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant coefficient");
        RatSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        RatSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The series `c * x^k` at the given truncation order.
    pub fn monomial(order: usize, k: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from a coefficient rule `t -> c_t`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        RatSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t: usize) -> &Rat {
        &self.coeffs[t]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::SeriesOrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(RatSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(RatSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `exp(self)`, requiring a zero constant term. Coefficients come from
    /// the recurrence `m g_m = sum_{i=1..m} i f_i g_{m-i}` obtained by
    /// differentiating `g = exp(f)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut g = Self::zero(n);
        g.coeffs[0] = Rat::one();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=m {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc += Rat::from_integer(Int::from(i)) * &self.coeffs[i] * &g.coeffs[m - i];
            }
            g.coeffs[m] = acc / Rat::from_integer(Int::from(m));
        }
        Ok(g)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let c0 = self.coeffs[0].recip();
        let mut h = Self::zero(n);
        h.coeffs[0] = c0.clone();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=m {
                acc += &self.coeffs[i] * &h.coeffs[m - i];
            }
            h.coeffs[m] = -acc * &c0;
        }
        Ok(h)
    }
}

/// Decides whether the multiset `xs` has exactly the given power sums:
/// `moments[t-1] = sum_i xs[i]^t` must hold for `t = 1 ..= xs.len()`.
///
/// Over a field of characteristic zero, Newton's identities recover the
/// elementary symmetric functions from the first `|xs|` power sums, so
/// agreement here certifies equality with the multiset whose moments were
/// supplied. Extra moments beyond `|xs|` are ignored.
pub fn power_sums_equal(xs: &[Rat], moments: &[Rat]) -> Result<bool> {
    if moments.len() < xs.len() {
        return Err(Error::TooFewMoments { got: moments.len(), need: xs.len() });
    }
    let mut powers: Vec<Rat> = xs.to_vec();
    for m in moments.iter().take(xs.len()) {
        let sum: Rat = powers.iter().fold(Rat::zero(), |acc, p| acc + p);
        if &sum != m {
            return Ok(false);
        }
        for (p, x) in powers.iter_mut().zip(xs) {
            *p *= x;
        }
    }
    Ok(true)
}

/// Exact power sums `sum_i xs[i]^t` for `t = 1 ..= count`.
pub fn power_sums(xs: &[Rat], count: usize) -> Vec<Rat> {
    let mut powers: Vec<Rat> = xs.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(powers.iter().fold(Rat::zero(), |acc, p| acc + p));
        for (p, x) in powers.iter_mut().zip(xs) {
            *p *= x;
        }
    }
    out
}

/// True when the rational is an integer; used by closed forms whose
/// intermediate values must come out integral.
pub fn as_integer(r: &Rat) -> Option<Int> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
