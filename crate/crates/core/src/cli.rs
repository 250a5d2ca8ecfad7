//! Batch command-line front end.
//!
//! Exit codes: 0 success or verified, 1 verified false, 2 input error,
//! 3 a hook weight is undefined because its denominator vanishes.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::families::DegreeWeightFamily;
use crate::gfparse::{self, parse_param, ParamBinding};
use crate::hookcalc::{self, HookError, HookWeightFunction, NamedRho};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::series::TruncatedSeries;
use crate::treeoracle::{self, parse_tree, BRUTEFORCE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;

/// Largest tree size `verify` will enumerate.
pub const VERIFY_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "hooklen",
    version,
    about = "Exact hook length formulas for weighted tree families"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub output: OutputFormat,

    /// Parameter binding `name=p/q`; repeatable.
    #[arg(long = "param", value_name = "NAME=P/Q", global = true)]
    pub params: Vec<String>,

    /// Run even if phi violates the non-degeneracy assumptions.
    #[arg(long, global = true)]
    pub allow_degenerate: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// Simply generated: `T = z phi(T)`.
    Sg,
    /// Increasing: `T' = phi(T)`.
    Inc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the tree series T for a family.
    Series {
        #[arg(long, value_enum)]
        model: Model,
        #[command(flatten)]
        phi: PhiArg,
        #[arg(long)]
        order: usize,
    },
    /// Hook weights rho(1..N) from F.
    Rho {
        #[command(flatten)]
        phi: PhiArg,
        #[command(flatten)]
        source: SeriesSource,
        #[arg(long)]
        order: usize,
    },
    /// Hook weights rho(1..N) from G = phi(F), through the inverse of phi.
    RhoForest {
        #[command(flatten)]
        phi: PhiArg,
        #[command(flatten)]
        source: ForestSource,
        #[arg(long)]
        order: usize,
    },
    /// Compare tree enumeration against the series recurrence for each n.
    Verify {
        #[command(flatten)]
        phi: PhiArg,
        /// `1`, `1/n`, `n`, a constant `p/q`, or a comma-separated table.
        #[arg(long)]
        rho: String,
        #[arg(long)]
        max_n: usize,
        /// Add 1 to the series side at this n (self-test of the mismatch path).
        #[arg(long, hide = true)]
        perturb_rhs: Option<usize>,
    },
    /// Count increasing labellings of a tree three ways.
    Labellings {
        /// Balanced-parenthesis tree, e.g. `((())())`.
        #[arg(long)]
        tree: String,
    },
}

#[derive(Debug, Args)]
pub struct PhiArg {
    /// Builtin family (binary, kary:K, plane, labelled, yang:S,M, polyalpha:A)
    /// or an expression in t.
    #[arg(long)]
    pub phi: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SeriesSource {
    /// F as an expression in t.
    #[arg(long = "F", value_name = "EXPR")]
    pub f: Option<String>,
    /// Take F as the tree series of this model.
    #[arg(long, value_enum)]
    pub from_model: Option<Model>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ForestSource {
    /// G as an expression in t.
    #[arg(long = "G", value_name = "EXPR")]
    pub g: Option<String>,
    /// Take G = phi(T) for the tree series T of this model.
    #[arg(long, value_enum)]
    pub from_model: Option<Model>,
}

/// A failure with its exit code; the message goes to the error stream.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<HookError> for Failure {
    fn from(e: HookError) -> Self {
        let code = match e {
            HookError::DenominatorVanishes(_) => EXIT_UNDEFINED,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match execute(&config, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let binding = bindings(&config.params)?;
    let fmt = config.output;
    match &config.command {
        Command::Series { model, phi, order } => {
            let phi = family(config, &phi.phi, &binding, *order)?;
            cmd_series(&phi, *model, *order, fmt, out)
        }
        Command::Rho { phi, source, order } => {
            let phi = family(config, &phi.phi, &binding, *order)?;
            let f = match (&source.f, source.from_model) {
                (Some(text), _) => expression_series(text, &binding, *order)?,
                (None, Some(model)) => model_series(&phi, model, *order),
                (None, None) => unreachable!("clap enforces one source"),
            };
            let rho = hookcalc::rho_from_f(&f, &phi, *order)?;
            print_rho(&rho, fmt, out)
        }
        Command::RhoForest { phi, source, order } => {
            let phi = family(config, &phi.phi, &binding, *order)?;
            let g = match (&source.g, source.from_model) {
                (Some(text), _) => expression_series(text, &binding, *order)?,
                (None, Some(model)) => phi.compose(&model_series(&phi, model, *order)),
                (None, None) => unreachable!("clap enforces one source"),
            };
            let rho = hookcalc::rho_forest(&g, &phi, *order)?;
            print_rho(&rho, fmt, out)
        }
        Command::Verify {
            phi,
            rho,
            max_n,
            perturb_rhs,
        } => {
            if *max_n < 1 || *max_n > VERIFY_MAX_N {
                return Err(Failure::input(format!(
                    "--max-n must be between 1 and {VERIFY_MAX_N}"
                )));
            }
            let phi = family(config, &phi.phi, &binding, *max_n)?;
            let rho = parse_rho_spec(rho, *max_n)?;
            cmd_verify(&phi, &rho, *max_n, *perturb_rhs, fmt, out)
        }
        Command::Labellings { tree } => cmd_labellings(tree, fmt, out),
    }
}

fn bindings(params: &[String]) -> Result<ParamBinding, Failure> {
    let mut binding = ParamBinding::new();
    for p in params {
        let (name, value) = parse_param(p)
            .ok_or_else(|| Failure::input(format!("bad --param `{p}`, expected name=p/q")))?;
        binding.insert(name, value);
    }
    Ok(binding)
}

fn family(
    config: &RunConfig,
    text: &str,
    binding: &ParamBinding,
    order: usize,
) -> Result<DegreeWeightFamily, Failure> {
    if order < 1 {
        return Err(Failure::input("order must be at least 1"));
    }
    let phi = DegreeWeightFamily::from_cli(text, binding.clone())
        .map_err(|e| Failure::input(format!("phi `{text}`: {e}")))?;
    let report = phi.validate(order.max(2));
    if !report.is_ok() && !config.allow_degenerate {
        let reasons: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::input(format!(
            "phi `{text}` rejected: {} (use --allow-degenerate to override)",
            reasons.join("; ")
        )));
    }
    Ok(phi)
}

fn expression_series(
    text: &str,
    binding: &ParamBinding,
    order: usize,
) -> Result<TruncatedSeries, Failure> {
    let expr = gfparse::parse(text).map_err(|e| Failure::input(format!("`{text}`: {e}")))?;
    expr.evaluate(binding, order)
        .map_err(|e| Failure::input(format!("`{text}`: {e}")))
}

fn model_series(phi: &DegreeWeightFamily, model: Model, order: usize) -> TruncatedSeries {
    match model {
        Model::Sg => hookcalc::solve_simply_generated(phi, order),
        Model::Inc => hookcalc::solve_increasing(phi, order),
    }
}

/// `1`, `1/n`, `n`, a constant rational, or an explicit comma-separated table.
pub fn parse_rho_spec(spec: &str, len: usize) -> Result<HookWeightFunction, String> {
    let spec = spec.trim();
    match spec {
        "1" => return Ok(HookWeightFunction::named(NamedRho::One, len)),
        "1/n" => return Ok(HookWeightFunction::named(NamedRho::Reciprocal, len)),
        "n" => return Ok(HookWeightFunction::named(NamedRho::Identity, len)),
        _ => {}
    }
    if spec.contains(',') {
        let values = spec
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("rho table: {e}"))?;
        if values.len() < len {
            return Err(format!(
                "rho table has {} entries, need {len}",
                values.len()
            ));
        }
        return Ok(HookWeightFunction::given(values));
    }
    let c = parse_rational(spec).map_err(|e| format!("rho `{spec}`: {e}"))?;
    Ok(HookWeightFunction::from_fn(spec, len, |_| c.clone()))
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure::input(message)
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn io(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("write failed: {e}"),
    }
}

fn cmd_series(
    phi: &DegreeWeightFamily,
    model: Model,
    order: usize,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let t = model_series(phi, model, order);
    let coeffs = t.to_strings();
    let counts = (model == Model::Inc).then(|| strings(&t.egf_counts()));
    match fmt {
        OutputFormat::Plain => {
            writeln!(out, "coefficients: {}", coeffs.join(" ")).map_err(io)?;
            if let Some(c) = &counts {
                writeln!(out, "counts: {}", c.join(" ")).map_err(io)?;
            }
        }
        OutputFormat::Json => {
            let mut v = json!({ "series": coeffs });
            if let Some(c) = counts {
                v["counts"] = json!(c);
            }
            writeln!(out, "{v}").map_err(io)?;
        }
        OutputFormat::Csv => {
            match &counts {
                Some(_) => writeln!(out, "n,coefficient,count"),
                None => writeln!(out, "n,coefficient"),
            }
            .map_err(io)?;
            for (n, c) in coeffs.iter().enumerate() {
                match &counts {
                    Some(k) => writeln!(out, "{n},{c},{}", k[n]),
                    None => writeln!(out, "{n},{c}"),
                }
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn print_rho(rho: &HookWeightFunction, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let values = strings(rho.values());
    match fmt {
        OutputFormat::Plain => writeln!(out, "rho: {}", values.join(" ")).map_err(io)?,
        OutputFormat::Json => writeln!(out, "{}", json!({ "rho": values })).map_err(io)?,
        OutputFormat::Csv => {
            writeln!(out, "n,rho").map_err(io)?;
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", i + 1).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// One line of the `verify` report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl VerifyRow {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of the weighted tree identity for `n = 1..=max_n`, each
/// computed from scratch: the left by enumeration, the right by recurrence.
pub fn verify_rows(
    phi: &DegreeWeightFamily,
    rho: &HookWeightFunction,
    max_n: usize,
) -> Result<Vec<VerifyRow>, String> {
    let f = hookcalc::f_from_rho(rho, phi, max_n).map_err(|e| e.to_string())?;
    (1..=max_n)
        .map(|n| {
            let lhs = treeoracle::weighted_sum(n, phi, rho).map_err(|e| e.to_string())?;
            Ok(VerifyRow {
                n,
                lhs,
                rhs: f.coeffs()[n].clone(),
            })
        })
        .collect()
}

fn cmd_verify(
    phi: &DegreeWeightFamily,
    rho: &HookWeightFunction,
    max_n: usize,
    perturb: Option<usize>,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let mut rows = verify_rows(phi, rho, max_n)?;
    if let Some(row) = perturb.and_then(|k| rows.iter_mut().find(|r| r.n == k)) {
        row.rhs += Rational::from_integer(1.into());
    }
    if fmt == OutputFormat::Csv {
        writeln!(out, "n,lhs,rhs,equal").map_err(io)?;
    }
    for r in &rows {
        let (lhs, rhs) = (format_rational(&r.lhs), format_rational(&r.rhs));
        match fmt {
            OutputFormat::Plain => writeln!(
                out,
                "n={} lhs={lhs} rhs={rhs} {}",
                r.n,
                if r.equal() { "equal" } else { "MISMATCH" }
            ),
            OutputFormat::Json => writeln!(
                out,
                "{}",
                json!({ "n": r.n, "lhs": lhs, "rhs": rhs, "equal": r.equal() })
            ),
            OutputFormat::Csv => writeln!(out, "{},{lhs},{rhs},{}", r.n, r.equal()),
        }
        .map_err(io)?;
    }
    let ok = rows.iter().all(VerifyRow::equal);
    Ok(if ok { EXIT_OK } else { EXIT_FALSIFIED })
}

fn cmd_labellings(text: &str, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let tree = parse_tree(text).map_err(|e| Failure::input(format!("tree `{text}`: {e}")))?;
    let hook = treeoracle::labellings_hook(&tree);
    let recursive = Rational::from_integer(treeoracle::labellings_recursive(&tree).into());
    let brute = (tree.size() <= BRUTEFORCE_LIMIT).then(|| {
        let count = treeoracle::labellings_bruteforce(&tree).expect("size checked");
        Rational::from_integer(count.into())
    });
    let agree = hook == recursive && brute.as_ref().is_none_or(|b| *b == hook);
    let hooks: Vec<String> = treeoracle::hook_lengths(&tree)
        .iter()
        .map(usize::to_string)
        .collect();
    let brute_text = brute.as_ref().map(format_rational);
    match fmt {
        OutputFormat::Plain => {
            writeln!(out, "tree: {tree}").map_err(io)?;
            writeln!(out, "size: {}", tree.size()).map_err(io)?;
            writeln!(out, "hooks: {}", hooks.join(" ")).map_err(io)?;
            writeln!(out, "hook formula: {}", format_rational(&hook)).map_err(io)?;
            writeln!(out, "recursive: {}", format_rational(&recursive)).map_err(io)?;
            writeln!(
                out,
                "brute force: {}",
                brute_text.as_deref().unwrap_or("skipped (size > 8)")
            )
            .map_err(io)?;
            writeln!(out, "agree: {agree}").map_err(io)?;
        }
        OutputFormat::Json => {
            let v = json!({
                "tree": tree.to_string(),
                "size": tree.size(),
                "hooks": treeoracle::hook_lengths(&tree),
                "hook_formula": format_rational(&hook),
                "recursive": format_rational(&recursive),
                "bruteforce": brute_text,
                "agree": agree,
            });
            writeln!(out, "{v}").map_err(io)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "tree,size,hook_formula,recursive,bruteforce,agree").map_err(io)?;
            writeln!(
                out,
                "{tree},{},{},{},{},{agree}",
                tree.size(),
                format_rational(&hook),
                format_rational(&recursive),
                brute_text.as_deref().unwrap_or("")
            )
            .map_err(io)?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_FALSIFIED })
}
