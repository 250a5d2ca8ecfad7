//! Hook weight functions and the series identities that determine them.
//!
//! For a degree-weight family `phi` and hook weights `rho`, the series
//! `F(z) = sum_n (sum over ordered trees T of size n of w_deg(T) w_hook(T)) z^n`
//! and `rho` determine each other through
//!
//! ```text
//! rho(n) = [z^n] F(z) / [z^(n-1)] phi(F(z))
//! ```
//!
//! Both directions are implemented here, along with the forest form that
//! goes through the compositional inverse of `phi`, the binary special case,
//! and the two tree equations `T = z phi(T)` and `T' = phi(T)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::families::{Builtin, DegreeWeightFamily};
use crate::rational::{factorial_rational, generalized_binomial, int, Rational};
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HookError {
    /// `rho(n)` is undefined because its denominator coefficient is zero.
    #[error("rho({0}) is undefined: denominator coefficient vanishes")]
    DenominatorVanishes(usize),
    #[error("G(0) = {found} but phi_0 = {expected}")]
    ConstantMismatch {
        expected: Box<Rational>,
        found: Box<Rational>,
    },
    #[error("phi is not invertible at phi_0: phi_1 = 0")]
    NotInvertible,
    #[error("series must have zero constant term, found {0}")]
    NonzeroConstantTerm(Rational),
    #[error("series of order {have} is too short, need order {need}")]
    OrderTooSmall { need: usize, have: usize },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedRho {
    /// `rho(n) = 1`
    One,
    /// `rho(n) = 1/n`
    Reciprocal,
    /// `rho(n) = n`
    Identity,
}

impl fmt::Display for NamedRho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedRho::One => write!(f, "1"),
            NamedRho::Reciprocal => write!(f, "1/n"),
            NamedRho::Identity => write!(f, "n"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhoOrigin {
    Given,
    DerivedFromF,
    DerivedFromG,
    Named(NamedRho),
    Custom(String),
}

/// The table `rho(1), ..., rho(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookWeightFunction {
    values: Vec<Rational>,
    origin: RhoOrigin,
}

impl HookWeightFunction {
    /// `values[i]` is `rho(i + 1)`.
    pub fn given(values: Vec<Rational>) -> Self {
        Self {
            values,
            origin: RhoOrigin::Given,
        }
    }

    pub fn named(name: NamedRho, len: usize) -> Self {
        let values = (1..=len as i64)
            .map(|n| match &name {
                NamedRho::One => Rational::one(),
                NamedRho::Reciprocal => Rational::new(1.into(), n.into()),
                NamedRho::Identity => int(n),
            })
            .collect();
        Self {
            values,
            origin: RhoOrigin::Named(name),
        }
    }

    pub fn one(len: usize) -> Self {
        Self::named(NamedRho::One, len)
    }

    pub fn reciprocal(len: usize) -> Self {
        Self::named(NamedRho::Reciprocal, len)
    }

    /// `rho(n) = f(n)` for `n = 1..=len`.
    pub fn from_fn(name: &str, len: usize, f: impl Fn(usize) -> Rational) -> Self {
        Self {
            values: (1..=len).map(f).collect(),
            origin: RhoOrigin::Custom(name.to_string()),
        }
    }

    pub fn with_origin(mut self, origin: RhoOrigin) -> Self {
        self.origin = origin;
        self
    }

    pub fn origin(&self) -> &RhoOrigin {
        &self.origin
    }

    /// Largest `n` with `rho(n)` defined.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `rho(n)` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn check_zero_constant(f: &TruncatedSeries) -> Result<(), HookError> {
    if f.constant_term().is_zero() {
        Ok(())
    } else {
        Err(HookError::NonzeroConstantTerm(f.constant_term().clone()))
    }
}

fn check_order(f: &TruncatedSeries, need: usize) -> Result<(), HookError> {
    if f.order() < need {
        Err(HookError::OrderTooSmall {
            need,
            have: f.order(),
        })
    } else {
        Ok(())
    }
}

/// Solves `T_n = factor(n) [z^(n-1)] phi(T)` for `n = 1..=order`, `T_0 = 0`.
///
/// Each step only reads coefficients of `T` below `n`, so composing with the
/// partial solution truncated to `n - 1` is exact.
fn triangular_solve(
    phi: &DegreeWeightFamily,
    order: usize,
    factor: impl Fn(usize) -> Rational,
) -> TruncatedSeries {
    let phi_series = phi.series(order);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in 1..=order {
        let known = TruncatedSeries::new(coeffs[..n].to_vec());
        let composed = phi_series
            .truncate(n - 1)
            .compose(&known)
            .expect("partial solution has zero constant term");
        coeffs[n] = factor(n) * &composed.coeffs()[n - 1];
    }
    TruncatedSeries::new(coeffs)
}

/// The weighted tree series `T` with `T = z phi(T)`, to `order`.
pub fn solve_simply_generated(phi: &DegreeWeightFamily, order: usize) -> TruncatedSeries {
    triangular_solve(phi, order, |_| Rational::one())
}

/// The increasing tree series `T` with `T' = phi(T)`, `T(0) = 0`, to `order`.
///
/// Returned as plain coefficients `T_n / n!`; see [`TruncatedSeries::egf_counts`]
/// for the totals `T_n`.
pub fn solve_increasing(phi: &DegreeWeightFamily, order: usize) -> TruncatedSeries {
    triangular_solve(phi, order, |n| Rational::new(1.into(), (n as i64).into()))
}

/// `rho(n) = [z^n] F / [z^(n-1)] phi(F)` for `n = 1..=len`.
pub fn rho_from_f(
    f: &TruncatedSeries,
    phi: &DegreeWeightFamily,
    len: usize,
) -> Result<HookWeightFunction, HookError> {
    check_zero_constant(f)?;
    check_order(f, len)?;
    let composed = phi.compose(&f.truncate(len));
    let values = quotients(len, |n| &f.coeffs()[n], |n| &composed.coeffs()[n - 1])?;
    Ok(HookWeightFunction::given(values).with_origin(RhoOrigin::DerivedFromF))
}

fn quotients<'a>(
    len: usize,
    num: impl Fn(usize) -> &'a Rational,
    den: impl Fn(usize) -> &'a Rational,
) -> Result<Vec<Rational>, HookError> {
    (1..=len)
        .map(|n| {
            let d = den(n);
            if d.is_zero() {
                Err(HookError::DenominatorVanishes(n))
            } else {
                Ok(num(n) / d)
            }
        })
        .collect()
}

/// The unique `F` with `F(0) = 0` and `[z^n] F = rho(n) [z^(n-1)] phi(F)`.
///
/// `order` may not exceed the length of `rho`.
pub fn f_from_rho(
    rho: &HookWeightFunction,
    phi: &DegreeWeightFamily,
    order: usize,
) -> Result<TruncatedSeries, HookError> {
    if rho.len() < order {
        return Err(HookError::OrderTooSmall {
            need: order,
            have: rho.len(),
        });
    }
    Ok(triangular_solve(phi, order, |n| {
        rho.get(n).expect("length checked").clone()
    }))
}

/// Forest form: given `G = phi(F)`, recover `rho` through the compositional
/// inverse of `phi`.
///
/// With `H = revert(phi(t) - phi_0)` we have `phi^[-1](phi_0 + u) = H(u)`, so
/// `rho(n) = [z^n] H(G - phi_0) / [z^(n-1)] G`.
pub fn rho_forest(
    g: &TruncatedSeries,
    phi: &DegreeWeightFamily,
    len: usize,
) -> Result<HookWeightFunction, HookError> {
    check_order(g, len)?;
    let phi_series = phi.series(len.max(1));
    let phi0 = phi_series.constant_term().clone();
    if *g.constant_term() != phi0 {
        return Err(HookError::ConstantMismatch {
            expected: Box::new(phi0),
            found: Box::new(g.constant_term().clone()),
        });
    }
    if phi_series.coeffs()[1].is_zero() {
        return Err(HookError::NotInvertible);
    }
    let shifted_phi = phi_series.sub(&TruncatedSeries::constant(phi0.clone(), len.max(1)));
    let inverse = shifted_phi.revert()?;
    let g = g.truncate(len);
    let shifted_g = g.sub(&TruncatedSeries::constant(phi0, len));
    let f = inverse.truncate(len).compose(&shifted_g)?;
    let values = quotients(len, |n| &f.coeffs()[n], |n| &g.coeffs()[n - 1])?;
    Ok(HookWeightFunction::given(values).with_origin(RhoOrigin::DerivedFromG))
}

/// The binary-tree case `rho(n) = [z^n] F / [z^(n-1)] (1 + F)^2`, computed
/// without going through a degree-weight family.
pub fn han_binary_rho(f: &TruncatedSeries, len: usize) -> Result<HookWeightFunction, HookError> {
    check_zero_constant(f)?;
    check_order(f, len)?;
    let f = f.truncate(len);
    let one_plus = f.add(&TruncatedSeries::one(len));
    let square = one_plus.mul(&one_plus);
    let values = quotients(len, |n| &f.coeffs()[n], |n| &square.coeffs()[n - 1])?;
    Ok(HookWeightFunction::given(values).with_origin(RhoOrigin::DerivedFromF))
}

fn check_alpha(alpha: &Rational) -> Result<(), HookError> {
    if alpha.is_positive() {
        Ok(())
    } else {
        Err(HookError::DomainError(format!(
            "alpha must be positive, got {alpha}"
        )))
    }
}

/// Total weight `T_n` of size-`n` increasing trees for `phi(t) = (1-t)^(-alpha)`:
/// `(alpha+1)^(n-1) (n-1)! binom(n - 1 - 1/(alpha+1), n - 1)`.
pub fn alpha_family_tn(alpha: &Rational, n: usize) -> Result<Rational, HookError> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(HookError::DomainError("n must be at least 1".into()));
    }
    let a1 = alpha + Rational::one();
    let m = n - 1;
    let top = int(m as i64) - a1.recip();
    Ok(a1.pow(m as i32) * factorial_rational(m) * generalized_binomial(&top, m))
}

/// `T(z) = 1 - (1 - (alpha+1) z)^(1/(alpha+1))`, as plain coefficients.
pub fn alpha_family_t(alpha: &Rational, order: usize) -> Result<TruncatedSeries, HookError> {
    check_alpha(alpha)?;
    let a1 = alpha + Rational::one();
    let inner = TruncatedSeries::from_coeffs(vec![Rational::one(), -&a1], order);
    let root = inner.pow_rational(&a1.recip())?;
    Ok(TruncatedSeries::one(order).sub(&root))
}

/// The family `1/(1-t)^alpha` that pairs with [`alpha_family_t`].
pub fn alpha_family(alpha: &Rational) -> Result<DegreeWeightFamily, HookError> {
    DegreeWeightFamily::builtin(Builtin::PolyAlpha(alpha.clone()))
        .map_err(|e| HookError::DomainError(e.to_string()))
}
