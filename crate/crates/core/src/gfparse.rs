//! Recursive-descent parser for degree-weight generating functions.
//!
//! Grammar (ASCII, whitespace ignored between tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' factor)?
//! base   := NUMBER | 't' | IDENT | '(' expr ')' | ('exp' | 'log') '(' expr ')'
//! NUMBER := integer | integer '/' integer
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-t^2`
//! is `-(t^2)`. Identifiers other than `t`, `exp` and `log` are parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::{exact_root, Rational};
use crate::series::{SeriesError, TruncatedSeries};

pub type Span = Range<usize>;

/// Largest exponent numerator accepted in `^`.
pub const MAX_EXPONENT: i64 = 4096;

/// Parameter name to value.
pub type ParamBinding = BTreeMap<String, Rational>;

#[derive(Debug, Clone)]
pub struct GfExpr {
    pub kind: ExprKind,
    /// Byte range of the source text this node was parsed from.
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Literal(Rational),
    Variable,
    Parameter(String),
    Neg(Box<GfExpr>),
    Add(Box<GfExpr>, Box<GfExpr>),
    Sub(Box<GfExpr>, Box<GfExpr>),
    Mul(Box<GfExpr>, Box<GfExpr>),
    Div(Box<GfExpr>, Box<GfExpr>),
    Pow(Box<GfExpr>, Box<GfExpr>),
    Exp(Box<GfExpr>),
    Log(Box<GfExpr>),
}

// Structural equality; spans are positional metadata and do not participate.
impl PartialEq for GfExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl fmt::Display for GfExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Literal(r) => write!(f, "{r}"),
            ExprKind::Variable => write!(f, "t"),
            ExprKind::Parameter(name) => write!(f, "{name}"),
            ExprKind::Neg(a) => write!(f, "(-{a})"),
            ExprKind::Add(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprKind::Div(a, b) => write!(f, "({a} / {b})"),
            ExprKind::Pow(a, b) => write!(f, "({a}^{b})"),
            ExprKind::Exp(a) => write!(f, "exp({a})"),
            ExprKind::Log(a) => write!(f, "log({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    SyntaxError {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("unknown function `{name}` at byte {offset}")]
    UnknownFunction { name: String, offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::SyntaxError { offset, .. } | ParseError::UnknownFunction { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("exponent depends on t")]
    VariableInExponent,
    #[error("exponent is not a rational constant")]
    NonRationalExponent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} (at bytes {}..{})", span.start, span.end)]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start..i));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start..i));
                continue;
            }
            _ => {
                return Err(ParseError::SyntaxError {
                    offset: start,
                    expected: vec!["number", "identifier", "operator", "parenthesis"],
                })
            }
        };
        i += 1;
        out.push((tok, start..i));
    }
    out.push((Tok::Eof, text.len()..text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

const BASE_START: &[&str] = &["number", "'t'", "identifier", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1.start
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(ParseError::SyntaxError {
                offset: self.offset(),
                expected: vec![name],
            })
        }
    }

    fn expr(&mut self) -> Result<GfExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let ctor: fn(Box<GfExpr>, Box<GfExpr>) -> ExprKind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = binary(ctor, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<GfExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = binary(ExprKind::Mul, lhs, rhs);
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = fold_rational_literal(lhs, rhs);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<GfExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().1.start;
            let inner = self.unary()?;
            let span = start..inner.span.end;
            return Ok(GfExpr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<GfExpr, ParseError> {
        let base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exponent = self.factor()?;
            return Ok(binary(ExprKind::Pow, base, exponent));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<GfExpr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                let span = self.bump().1;
                Ok(GfExpr {
                    kind: ExprKind::Literal(Rational::from_integer(n)),
                    span,
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let span = self.bump().1;
                match name.as_str() {
                    "t" => Ok(GfExpr {
                        kind: ExprKind::Variable,
                        span,
                    }),
                    "exp" | "log" => {
                        self.expect(Tok::LParen, "'('")?;
                        let arg = Box::new(self.expr()?);
                        let end = self.expect(Tok::RParen, "')'")?.end;
                        let kind = if name == "exp" {
                            ExprKind::Exp(arg)
                        } else {
                            ExprKind::Log(arg)
                        };
                        Ok(GfExpr {
                            kind,
                            span: span.start..end,
                        })
                    }
                    _ if *self.peek() == Tok::LParen => {
                        Err(ParseError::UnknownFunction { name, offset })
                    }
                    _ => Ok(GfExpr {
                        kind: ExprKind::Parameter(name),
                        span,
                    }),
                }
            }
            _ => Err(ParseError::SyntaxError {
                offset,
                expected: BASE_START.to_vec(),
            }),
        }
    }
}

fn binary(ctor: fn(Box<GfExpr>, Box<GfExpr>) -> ExprKind, lhs: GfExpr, rhs: GfExpr) -> GfExpr {
    let span = lhs.span.start..rhs.span.end;
    GfExpr {
        kind: ctor(Box::new(lhs), Box::new(rhs)),
        span,
    }
}

/// `p / q` with literal operands becomes the literal `p/q`. Any other shape
/// (including `q = 0`) stays a division.
fn fold_rational_literal(lhs: GfExpr, rhs: GfExpr) -> GfExpr {
    if let (ExprKind::Literal(p), ExprKind::Literal(q)) = (&lhs.kind, &rhs.kind) {
        if !q.is_zero() {
            return GfExpr {
                kind: ExprKind::Literal(p / q),
                span: lhs.span.start..rhs.span.end,
            };
        }
    }
    binary(ExprKind::Div, lhs, rhs)
}

/// Parses a generating-function expression.
pub fn parse(text: &str) -> Result<GfExpr, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(ParseError::SyntaxError {
            offset: parser.offset(),
            expected: vec!["operator", "end of input"],
        });
    }
    Ok(e)
}

impl GfExpr {
    pub fn mentions_variable(&self) -> bool {
        match &self.kind {
            ExprKind::Variable => true,
            ExprKind::Literal(_) | ExprKind::Parameter(_) => false,
            ExprKind::Neg(a) | ExprKind::Exp(a) | ExprKind::Log(a) => a.mentions_variable(),
            ExprKind::Add(a, b)
            | ExprKind::Sub(a, b)
            | ExprKind::Mul(a, b)
            | ExprKind::Div(a, b)
            | ExprKind::Pow(a, b) => a.mentions_variable() || b.mentions_variable(),
        }
    }

    /// Names of all parameters, sorted and deduplicated.
    pub fn parameters(&self) -> Vec<String> {
        fn walk(e: &GfExpr, out: &mut Vec<String>) {
            match &e.kind {
                ExprKind::Parameter(n) => out.push(n.clone()),
                ExprKind::Literal(_) | ExprKind::Variable => {}
                ExprKind::Neg(a) | ExprKind::Exp(a) | ExprKind::Log(a) => walk(a, out),
                ExprKind::Add(a, b)
                | ExprKind::Sub(a, b)
                | ExprKind::Mul(a, b)
                | ExprKind::Div(a, b)
                | ExprKind::Pow(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn err(&self, kind: impl Into<EvalErrorKind>) -> EvalError {
        EvalError {
            kind: kind.into(),
            span: self.span.clone(),
        }
    }

    /// Value of a `t`-free subtree as an exact rational.
    fn constant(&self, binding: &ParamBinding) -> Result<Rational, EvalError> {
        Ok(match &self.kind {
            ExprKind::Literal(r) => r.clone(),
            ExprKind::Variable => return Err(self.err(EvalErrorKind::VariableInExponent)),
            ExprKind::Parameter(n) => binding
                .get(n)
                .cloned()
                .ok_or_else(|| self.err(EvalErrorKind::UnboundParameter(n.clone())))?,
            ExprKind::Neg(a) => -a.constant(binding)?,
            ExprKind::Add(a, b) => a.constant(binding)? + b.constant(binding)?,
            ExprKind::Sub(a, b) => a.constant(binding)? - b.constant(binding)?,
            ExprKind::Mul(a, b) => a.constant(binding)? * b.constant(binding)?,
            ExprKind::Div(a, b) => {
                let d = b.constant(binding)?;
                if d.is_zero() {
                    return Err(self.err(EvalErrorKind::DivisionByZero));
                }
                a.constant(binding)? / d
            }
            ExprKind::Pow(a, b) => {
                let base = a.constant(binding)?;
                let e = b.constant(binding)?;
                if e.numer().to_i64().is_none_or(|p| p.abs() > MAX_EXPONENT) {
                    return Err(self.err(EvalErrorKind::ExponentTooLarge));
                }
                rational_power(&base, &e)
                    .ok_or_else(|| self.err(EvalErrorKind::NonRationalExponent))?
            }
            ExprKind::Exp(a) => {
                if !a.constant(binding)?.is_zero() {
                    return Err(self.err(EvalErrorKind::NonRationalExponent));
                }
                Rational::one()
            }
            ExprKind::Log(a) => {
                if !a.constant(binding)?.is_one() {
                    return Err(self.err(EvalErrorKind::NonRationalExponent));
                }
                Rational::zero()
            }
        })
    }

    /// Expands the expression as a power series in `t` up to `t^order`.
    pub fn evaluate(
        &self,
        binding: &ParamBinding,
        order: usize,
    ) -> Result<TruncatedSeries, EvalError> {
        let wrap = |r: Result<TruncatedSeries, SeriesError>| r.map_err(|e| self.err(e));
        match &self.kind {
            ExprKind::Literal(_) | ExprKind::Parameter(_) => {
                Ok(TruncatedSeries::constant(self.constant(binding)?, order))
            }
            ExprKind::Variable => Ok(TruncatedSeries::identity(order)),
            ExprKind::Neg(a) => Ok(a.evaluate(binding, order)?.neg()),
            ExprKind::Add(a, b) => Ok(a
                .evaluate(binding, order)?
                .add(&b.evaluate(binding, order)?)),
            ExprKind::Sub(a, b) => Ok(a
                .evaluate(binding, order)?
                .sub(&b.evaluate(binding, order)?)),
            ExprKind::Mul(a, b) => Ok(a
                .evaluate(binding, order)?
                .mul(&b.evaluate(binding, order)?)),
            ExprKind::Div(a, b) => {
                let num = a.evaluate(binding, order)?;
                let den = b.evaluate(binding, order)?;
                wrap(num.div(&den))
            }
            ExprKind::Pow(a, b) => {
                if b.mentions_variable() {
                    return Err(b.err(EvalErrorKind::VariableInExponent));
                }
                let exponent = b.constant(binding)?;
                let base = a.evaluate(binding, order)?;
                power(&base, &exponent).map_err(|kind| self.err(kind))
            }
            ExprKind::Exp(a) => {
                // exp(c + g) = e^c exp(g) is only rational for c = 0.
                wrap(a.evaluate(binding, order)?.exp())
            }
            ExprKind::Log(a) => wrap(a.evaluate(binding, order)?.log()),
        }
    }
}

/// `base^exponent` for a rational constant exponent.
///
/// Integer exponents go through repeated multiplication. Otherwise the base is
/// normalized to constant term 1, which needs an exact rational root of the
/// constant term.
fn power(base: &TruncatedSeries, exponent: &Rational) -> Result<TruncatedSeries, EvalErrorKind> {
    let too_large = exponent
        .numer()
        .to_i64()
        .is_none_or(|p| p.abs() > MAX_EXPONENT);
    if too_large {
        return Err(EvalErrorKind::ExponentTooLarge);
    }
    if exponent.is_integer() {
        let k = exponent.to_integer().to_i64().expect("bounded above");
        return Ok(base.pow_int(k)?);
    }
    let c = base.constant_term();
    if c.is_one() || c.is_zero() {
        return Ok(base.pow_rational(exponent)?);
    }
    let scale = rational_power(c, exponent)
        .ok_or_else(|| EvalErrorKind::Series(SeriesError::ConstantTermNotOne(c.clone())))?;
    let normalized = base.scale(&c.recip());
    Ok(normalized.pow_rational(exponent)?.scale(&scale))
}

/// `base^(p/q)` when it is rational.
fn rational_power(base: &Rational, exponent: &Rational) -> Option<Rational> {
    let p = exponent.numer().to_i32()?;
    let q = exponent.denom().to_u32()?;
    if base.is_zero() {
        return (p > 0).then(Rational::zero);
    }
    let root = exact_root(base, q)?;
    let mag = root.pow(p.abs());
    Some(if p.is_negative() { mag.recip() } else { mag })
}

/// `(phi_0, ..., phi_kmax)` of the evaluated expression.
pub fn phi_coefficients(
    e: &GfExpr,
    binding: &ParamBinding,
    kmax: usize,
) -> Result<Vec<Rational>, EvalError> {
    Ok(e.evaluate(binding, kmax)?.into_coeffs())
}

/// Parses `name=p/q` into a binding entry.
pub fn parse_param(text: &str) -> Option<(String, Rational)> {
    let (name, value) = text.split_once('=')?;
    let name = name.trim();
    let valid = name
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(name, "t" | "exp" | "log");
    if !valid {
        return None;
    }
    Some((
        name.to_string(),
        crate::rational::parse_rational(value).ok()?,
    ))
}

pub fn binding<const N: usize>(pairs: [(&str, Rational); N]) -> ParamBinding {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn lit(n: i64) -> GfExpr {
        GfExpr {
            kind: ExprKind::Literal(int(n)),
            span: 0..0,
        }
    }

    fn b(kind: ExprKind) -> Box<GfExpr> {
        Box::new(GfExpr { kind, span: 0..0 })
    }

    fn l(n: i64) -> Box<GfExpr> {
        Box::new(lit(n))
    }

    fn t() -> Box<GfExpr> {
        b(ExprKind::Variable)
    }

    fn p(name: &str) -> Box<GfExpr> {
        b(ExprKind::Parameter(name.into()))
    }

    #[test]
    fn parses_binomial_power() {
        let e = parse("(1+t)^2").unwrap();
        assert_eq!(e.kind, ExprKind::Pow(b(ExprKind::Add(l(1), t())), l(2)));
    }

    #[test]
    fn power_binds_tighter_than_division() {
        let e = parse("1/(1-t)^a").unwrap();
        let expected = ExprKind::Div(l(1), b(ExprKind::Pow(b(ExprKind::Sub(l(1), t())), p("a"))));
        assert_eq!(e.kind, expected);
    }

    #[test]
    fn unclosed_call_fails_at_end() {
        let err = parse("exp(t").unwrap_err();
        assert_eq!(
            err,
            ParseError::SyntaxError {
                offset: 5,
                expected: vec!["')'"]
            }
        );
    }

    #[test]
    fn caret_is_right_associative_and_minus_is_looser() {
        let e = parse("2^3^t").unwrap();
        assert_eq!(e.kind, ExprKind::Pow(l(2), b(ExprKind::Pow(l(3), t()))));
        let e = parse("-t^2").unwrap();
        assert_eq!(e.kind, ExprKind::Neg(b(ExprKind::Pow(t(), l(2)))));
    }

    #[test]
    fn rational_literals_fold_only_at_literal_pairs() {
        assert_eq!(parse("1/2").unwrap().kind, ExprKind::Literal(frac(1, 2)));
        assert_eq!(
            parse("3/6*t").unwrap().kind,
            ExprKind::Mul(b(ExprKind::Literal(frac(1, 2))), t())
        );
        // Left-associative: (2/3)/4.
        assert_eq!(parse("2/3/4").unwrap().kind, ExprKind::Literal(frac(1, 6)));
        assert_eq!(
            parse("2/3^2").unwrap().kind,
            ExprKind::Div(l(2), b(ExprKind::Pow(l(3), l(2))))
        );
        assert_eq!(parse("1/0").unwrap().kind, ExprKind::Div(l(1), l(0)));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse("sin(t)"),
            Err(ParseError::UnknownFunction {
                name: "sin".into(),
                offset: 0
            })
        );
        // Implicit multiplication is rejected.
        assert!(matches!(
            parse("2t"),
            Err(ParseError::SyntaxError { offset: 1, .. })
        ));
        assert!(matches!(
            parse("2 t"),
            Err(ParseError::SyntaxError { offset: 2, .. })
        ));
        assert!(matches!(
            parse(""),
            Err(ParseError::SyntaxError { offset: 0, .. })
        ));
        assert!(matches!(
            parse("1+"),
            Err(ParseError::SyntaxError { offset: 2, .. })
        ));
        assert!(matches!(
            parse("(1"),
            Err(ParseError::SyntaxError { offset: 2, .. })
        ));
        assert!(matches!(
            parse("1 # 2"),
            Err(ParseError::SyntaxError { offset: 2, .. })
        ));
        assert!(matches!(
            parse("exp t"),
            Err(ParseError::SyntaxError { offset: 4, .. })
        ));
        assert!(matches!(
            parse("1)"),
            Err(ParseError::SyntaxError { offset: 1, .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let none = ParamBinding::new();
        let got = parse("(1+t)^2").unwrap().evaluate(&none, 4).unwrap();
        assert_eq!(got, TruncatedSeries::from_ints(&[1, 2, 1, 0, 0]));
        let got = parse("1/(1-t)^a")
            .unwrap()
            .evaluate(&binding([("a", int(2))]), 3)
            .unwrap();
        assert_eq!(got, TruncatedSeries::from_ints(&[1, 2, 3, 4]));
        let got = parse("exp(t)").unwrap().evaluate(&none, 3).unwrap();
        assert_eq!(got.coeffs(), &[int(1), int(1), frac(1, 2), frac(1, 6)]);
    }

    #[test]
    fn evaluate_errors_carry_spans() {
        let none = ParamBinding::new();
        let e = parse("(1+s*t)^m").unwrap();
        let err = e.evaluate(&binding([("s", int(1))]), 3).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::UnboundParameter("m".into()));
        assert_eq!(err.span, 8..9);

        let err = parse("1 + 1/t").unwrap().evaluate(&none, 3).unwrap_err();
        assert_eq!(
            err.kind,
            EvalErrorKind::Series(SeriesError::ZeroConstantTerm)
        );
        assert_eq!(err.span, 4..7);

        let err = parse("(2+t)^(1/2)")
            .unwrap()
            .evaluate(&none, 3)
            .unwrap_err();
        assert_eq!(
            err.kind,
            EvalErrorKind::Series(SeriesError::ConstantTermNotOne(int(2)))
        );

        let err = parse("(1+t)^t").unwrap().evaluate(&none, 3).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::VariableInExponent);
        assert_eq!(err.span, 6..7);

        let err = parse("exp(1+t)").unwrap().evaluate(&none, 3).unwrap_err();
        assert!(matches!(
            err.kind,
            EvalErrorKind::Series(SeriesError::NonzeroConstantTerm(_))
        ));

        let err = parse("t^(1/0)").unwrap().evaluate(&none, 3).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::DivisionByZero);
    }

    #[test]
    fn huge_exponents_are_rejected() {
        let none = ParamBinding::new();
        for text in [
            "2^1000000000",
            "t^(2^100000)",
            "(1+t)^99999999999999999999999",
        ] {
            let err = parse(text).unwrap().evaluate(&none, 3).unwrap_err();
            assert_eq!(err.kind, EvalErrorKind::ExponentTooLarge, "{text}");
        }
    }

    #[test]
    fn perfect_power_constant_is_factored_out() {
        let none = ParamBinding::new();
        let got = parse("(4+4*t)^(1/2)").unwrap().evaluate(&none, 4).unwrap();
        let hand = TruncatedSeries::from_ints(&[1, 1, 0, 0, 0])
            .pow_rational(&frac(1, 2))
            .unwrap()
            .scale(&int(2));
        assert_eq!(got, hand);
    }

    #[test]
    fn exponent_may_use_parameters_and_arithmetic() {
        let e = parse("(1-t)^(-(a+1)/2)").unwrap();
        let got = e.evaluate(&binding([("a", int(1))]), 5).unwrap();
        assert_eq!(got, TruncatedSeries::from_ints(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn phi_coefficient_examples() {
        let none = ParamBinding::new();
        let c = phi_coefficients(&parse("(1+t)^3").unwrap(), &none, 3).unwrap();
        assert_eq!(c, vec![int(1), int(3), int(3), int(1)]);
        let c = phi_coefficients(&parse("1/(1-t)").unwrap(), &none, 4).unwrap();
        assert_eq!(c, vec![int(1); 5]);
        let c = phi_coefficients(&parse("exp(t)").unwrap(), &none, 3).unwrap();
        assert_eq!(c, vec![int(1), int(1), frac(1, 2), frac(1, 6)]);
    }

    #[test]
    fn parameter_listing() {
        let e = parse("(1+s*t)^m + s").unwrap();
        assert_eq!(e.parameters(), vec!["m".to_string(), "s".to_string()]);
    }

    #[test]
    fn param_flags() {
        assert_eq!(parse_param("a=1/2"), Some(("a".into(), frac(1, 2))));
        assert_eq!(parse_param("t=1"), None);
        assert_eq!(parse_param("1x=1"), None);
        assert_eq!(parse_param("a"), None);
        assert_eq!(parse_param("a=1/0"), None);
    }
}
