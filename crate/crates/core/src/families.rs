//! Degree-weight families `(phi_k)` and their generating functions `phi(t)`.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::gfparse::{self, EvalError, GfExpr, ParamBinding, ParseError};
use crate::rational::{int, parse_rational, Rational};
use crate::series::TruncatedSeries;
use crate::treeoracle::OrderedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// The named families with a closed-form `phi(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    /// `(1+t)^2`
    Binary,
    /// `(1+t)^k`, `k >= 2`
    Kary(u32),
    /// `1/(1-t)`
    Plane,
    /// `e^t`
    Labelled,
    /// `(1+s t)^m`
    Yang { s: Rational, m: Rational },
    /// `1/(1-t)^alpha`, `alpha > 0`
    PolyAlpha(Rational),
}

impl Builtin {
    /// Source text and parameter binding for `phi(t)` in the expression grammar.
    pub fn expression(&self) -> (&'static str, ParamBinding) {
        use gfparse::binding;
        match self {
            Builtin::Binary => ("(1+t)^2", ParamBinding::new()),
            Builtin::Kary(k) => ("(1+t)^k", binding([("k", int(*k as i64))])),
            Builtin::Plane => ("1/(1-t)", ParamBinding::new()),
            Builtin::Labelled => ("exp(t)", ParamBinding::new()),
            Builtin::Yang { s, m } => ("(1+s*t)^m", binding([("s", s.clone()), ("m", m.clone())])),
            Builtin::PolyAlpha(a) => ("1/(1-t)^a", binding([("a", a.clone())])),
        }
    }

    fn check(&self) -> Result<(), FamilyError> {
        match self {
            Builtin::Kary(k) if *k < 2 => Err(FamilyError::DomainError(format!(
                "k-ary family needs k >= 2, got {k}"
            ))),
            Builtin::PolyAlpha(a) if !a.is_positive() => Err(FamilyError::DomainError(format!(
                "polyalpha family needs alpha > 0, got {a}"
            ))),
            _ => Ok(()),
        }
    }

    /// `phi(t)` to `order`, built directly from series primitives.
    fn series(&self, order: usize) -> TruncatedSeries {
        let one_plus = |c: Rational| TruncatedSeries::from_coeffs(vec![Rational::one(), c], order);
        let result = match self {
            Builtin::Binary => one_plus(int(1)).pow_int(2),
            Builtin::Kary(k) => one_plus(int(1)).pow_int(*k as i64),
            Builtin::Plane => TruncatedSeries::one(order).div(&one_plus(int(-1))),
            Builtin::Labelled => TruncatedSeries::identity(order).exp(),
            Builtin::Yang { s, m } => {
                match m.is_integer().then(|| m.to_integer().to_i64()).flatten() {
                    Some(k) => one_plus(s.clone()).pow_int(k),
                    None => one_plus(s.clone()).pow_rational(m),
                }
            }
            Builtin::PolyAlpha(a) => one_plus(int(-1)).pow_rational(&-a),
        };
        result.expect("builtin generating functions have admissible constant terms")
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Binary => write!(f, "binary"),
            Builtin::Kary(k) => write!(f, "kary:{k}"),
            Builtin::Plane => write!(f, "plane"),
            Builtin::Labelled => write!(f, "labelled"),
            Builtin::Yang { s, m } => write!(f, "yang:{s},{m}"),
            Builtin::PolyAlpha(a) => write!(f, "polyalpha:{a}"),
        }
    }
}

/// Accepts `binary`, `kary:3`, `plane`, `labelled`, `yang:1/2,4`, `polyalpha:2`.
impl FromStr for Builtin {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let unknown = || FamilyError::UnknownFamily(text.to_string());
        let bad =
            |what: &str| FamilyError::DomainError(format!("bad parameter in `{text}`: {what}"));
        let (name, args) = match text.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (text.trim(), None),
        };
        let rat = |s: &str| parse_rational(s).map_err(|e| bad(&e.to_string()));
        match (name, args) {
            ("binary", None) => Ok(Builtin::Binary),
            ("plane", None) => Ok(Builtin::Plane),
            ("labelled" | "labeled", None) => Ok(Builtin::Labelled),
            ("kary", Some(a)) => {
                let k: u32 = a
                    .trim()
                    .parse()
                    .map_err(|_| bad("k must be a non-negative integer"))?;
                Ok(Builtin::Kary(k))
            }
            ("yang", Some(a)) => {
                let (s, m) = a.split_once(',').ok_or_else(|| bad("expected s,m"))?;
                Ok(Builtin::Yang {
                    s: rat(s)?,
                    m: rat(m)?,
                })
            }
            ("polyalpha", Some(a)) => Ok(Builtin::PolyAlpha(rat(a)?)),
            _ => Err(unknown()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySource {
    Builtin(Builtin),
    Expression { expr: GfExpr, binding: ParamBinding },
}

/// A degree-weight sequence together with its generating function.
///
/// The series of `phi` is cached and extended on demand. Extensions take the
/// write lock; concurrent readers are fine.
pub struct DegreeWeightFamily {
    name: String,
    source: FamilySource,
    cache: RwLock<TruncatedSeries>,
}

impl DegreeWeightFamily {
    pub fn builtin(b: Builtin) -> Result<Self, FamilyError> {
        b.check()?;
        let initial = b.series(2);
        Ok(Self {
            name: b.to_string(),
            source: FamilySource::Builtin(b),
            cache: RwLock::new(initial),
        })
    }

    pub fn from_expr(expr: GfExpr, binding: ParamBinding) -> Result<Self, FamilyError> {
        // Every evaluation failure is decided by constant terms alone, so a
        // low-order probe here rules out failures at any later order.
        let initial = expr.evaluate(&binding, 2)?;
        Ok(Self {
            name: expr.to_string(),
            source: FamilySource::Expression { expr, binding },
            cache: RwLock::new(initial),
        })
    }

    pub fn parse_expr(text: &str, binding: ParamBinding) -> Result<Self, FamilyError> {
        let mut family = Self::from_expr(gfparse::parse(text)?, binding)?;
        family.name = text.to_string();
        Ok(family)
    }

    /// Builtin name if `text` is one, otherwise a `phi(t)` expression.
    pub fn from_cli(text: &str, binding: ParamBinding) -> Result<Self, FamilyError> {
        match text.parse::<Builtin>() {
            Ok(b) => Self::builtin(b),
            Err(FamilyError::UnknownFamily(_)) => Self::parse_expr(text, binding),
            Err(e) => Err(e),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &FamilySource {
        &self.source
    }

    /// `phi(t)` to exactly `order`.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        {
            let cached = self.cache.read().expect("family cache poisoned");
            if cached.order() >= order {
                return cached.truncate(order);
            }
        }
        let fresh = match &self.source {
            FamilySource::Builtin(b) => b.series(order),
            FamilySource::Expression { expr, binding } => expr
                .evaluate(binding, order)
                .expect("expression was validated at construction"),
        };
        let mut cached = self.cache.write().expect("family cache poisoned");
        if cached.order() < fresh.order() {
            *cached = fresh.clone();
        }
        fresh
    }

    /// `(phi_0, ..., phi_kmax)`.
    pub fn coefficients(&self, kmax: usize) -> Vec<Rational> {
        self.series(kmax).into_coeffs()
    }

    pub fn weight_of_degree(&self, k: usize) -> Rational {
        self.series(k).coeffs()[k].clone()
    }

    /// `phi(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> TruncatedSeries {
        self.series(inner.order())
            .compose(inner)
            .expect("inner series must have zero constant term")
    }

    /// Checks the standing assumptions on `phi_0..phi_kmax`.
    pub fn validate(&self, kmax: usize) -> ValidationReport {
        let coeffs = self.coefficients(kmax.max(2));
        let mut report = ValidationReport::default();
        if !coeffs[0].is_positive() {
            report
                .violations
                .push(Violation::RootWeightNotPositive(coeffs[0].clone()));
        }
        if !coeffs.iter().skip(2).any(|c| !c.is_zero()) {
            report
                .violations
                .push(Violation::Degenerate { kmax: kmax.max(2) });
        }
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_negative() {
                report.warnings.push(Warning::NegativeWeight {
                    k,
                    value: c.clone(),
                });
            }
        }
        report
    }
}

impl Clone for DegreeWeightFamily {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            source: self.source.clone(),
            cache: RwLock::new(self.cache.read().expect("family cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for DegreeWeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DegreeWeightFamily")
            .field("name", &self.name)
            .field("source", &self.source)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `phi_0 <= 0`.
    RootWeightNotPositive(Rational),
    /// No `k` in `2..=kmax` with `phi_k != 0`.
    Degenerate { kmax: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    NegativeWeight { k: usize, value: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RootWeightNotPositive(v) => write!(f, "phi_0 = {v} is not positive"),
            Violation::Degenerate { kmax } => {
                write!(f, "degenerate family: phi_k = 0 for every 2 <= k <= {kmax}")
            }
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NegativeWeight { k, value } => write!(f, "negative weight phi_{k} = {value}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::Degenerate { .. }))
    }
}

/// `prod_v phi_{d(v)}` over all vertices.
pub fn tree_weight_deg(family: &DegreeWeightFamily, tree: &OrderedTree) -> Rational {
    let phi = family.coefficients(tree.max_out_degree());
    weight_with_table(&phi, tree)
}

/// Same product against a precomputed `phi` table covering every out-degree.
pub(crate) fn weight_with_table(phi: &[Rational], tree: &OrderedTree) -> Rational {
    let mut acc = phi[tree.children().len()].clone();
    for child in tree.children() {
        if acc.is_zero() {
            break;
        }
        acc *= weight_with_table(phi, child);
    }
    acc
}

/// Sum of `phi_k` for `k <= kmax`.
pub fn weight_sum(family: &DegreeWeightFamily, kmax: usize) -> Rational {
    family.coefficients(kmax).iter().sum()
}
