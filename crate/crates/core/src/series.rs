//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` knows the coefficients of `z^0..=z^N` exactly and
//! nothing beyond. Binary operations truncate to the smaller order of their
//! operands, so every coefficient of a result is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("constant term must be exactly 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("constant term must be 0, found {0}")]
    NonzeroConstantTerm(Rational),
    #[error("inner series of a composition must have constant term 0, found {0}")]
    NonzeroInnerConstant(Rational),
    #[error("series is not revertible: needs [z^0] = 0 and [z^1] != 0")]
    NotRevertible,
    #[error("coefficient z^{requested} requested beyond known order {order}")]
    OrderExceeded { requested: usize, order: usize },
}

/// A power series known exactly up to `z^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Rational::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// The series `z`, i.e. `[0, 1, 0, ...]`. Needs `order >= 1` to be meaningful.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Exact `[z^n]`; errors if `n` lies beyond the known order.
    pub fn coeff(&self, n: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OrderExceeded {
            requested: n,
            order: self.order(),
        })
    }

    /// Drops every coefficient above `order`. Never extends the series.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// `h` with `h * other = self` to the common order.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let g0 = other.constant_term();
        if g0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order().min(other.order());
        let mut h: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &other.coeffs[k] * &h[n - k];
            }
            h.push(acc / g0);
        }
        Ok(Self { coeffs: h })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 {
            Self::one(self.order()).div(self)?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `self^a` for rational `a`, requiring `[z^0] = 1`.
    ///
    /// With `g = f^a` the identity `f g' = a f' g` gives
    /// `n g_n = sum_{k=1..n} (a k - (n - k)) f_k g_{n-k}`.
    pub fn pow_rational(&self, a: &Rational) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTermNotOne(
                self.constant_term().clone(),
            ));
        }
        let order = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(order + 1);
        g.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let f_k = &self.coeffs[k];
                if f_k.is_zero() {
                    continue;
                }
                let weight = a * int(k as i64) - int((n - k) as i64);
                acc += weight * f_k * &g[n - k];
            }
            g.push(acc / int(n as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `exp(self)` for `[z^0] = 0`, from `g' = f' g`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(
                self.constant_term().clone(),
            ));
        }
        let order = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(order + 1);
        g.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += int(k as i64) * &self.coeffs[k] * &g[n - k];
            }
            g.push(acc / int(n as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `log(self)` for `[z^0] = 1`, as the integral of `f'/f`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTermNotOne(
                self.constant_term().clone(),
            ));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(self.derivative().div(self)?.integrate())
    }

    /// `self(inner(z))` by Horner's scheme; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::NonzeroInnerConstant(
                inner.constant_term().clone(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `self(g(z)) = z`, solved order by order.
    ///
    /// The only contribution of `g_n` to `[z^n] f(g)` is `f_1 g_n`. Every other
    /// term is `f_k [z^n] g^k` with `k >= 2`, which only involves `g_1..g_{n-1}`,
    /// so each step cancels that residual. `powers[k][m]` caches `[z^m] g^k`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        let order = self.order();
        if order < 1 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotRevertible);
        }
        let f1 = &self.coeffs[1];
        let mut g = vec![Rational::zero(); order + 1];
        g[1] = f1.recip();
        // g^k starts at z^k; powers[k][m] is only meaningful for m >= k.
        let mut powers = vec![vec![Rational::zero(); order + 1]; order + 1];
        powers[1][1] = g[1].clone();
        for n in 2..=order {
            let mut residual = Rational::zero();
            for k in 2..=n {
                let mut c = Rational::zero();
                for j in 1..=(n + 1 - k) {
                    if !g[j].is_zero() {
                        c += &g[j] * &powers[k - 1][n - j];
                    }
                }
                if !self.coeffs[k].is_zero() {
                    residual += &self.coeffs[k] * &c;
                }
                powers[k][n] = c;
            }
            g[n] = -residual / f1;
            powers[1][n] = g[n].clone();
        }
        Ok(Self { coeffs: g })
    }

    /// Formal derivative; the result has order one less (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..=self.order())
                .map(|k| int(k as i64) * &self.coeffs[k])
                .collect(),
        }
    }

    /// Formal antiderivative with constant term 0; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / int(k as i64 + 1)),
        );
        Self { coeffs }
    }

    /// Treats the series as an exponential generating function and returns
    /// `n! [z^n]` for every known index.
    pub fn egf_counts(&self) -> Vec<Rational> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= n;
                }
                c * &fact
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries{:?}", self.to_strings())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}

// Wire form: JSON array of "p/q" strings.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_rational(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SeriesVisitor;

        impl<'de> Visitor<'de> for SeriesVisitor {
            type Value = TruncatedSeries;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-empty array of rational strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(text) = seq.next_element::<String>()? {
                    coeffs.push(parse_rational(&text).map_err(de::Error::custom)?);
                }
                if coeffs.is_empty() {
                    return Err(de::Error::invalid_length(0, &self));
                }
                Ok(TruncatedSeries { coeffs })
            }
        }

        deserializer.deserialize_seq(SeriesVisitor)
    }
}
