//! The `gda` command line: every subcommand prints one JSON report on stdout.
//!
//! Reports embed the exact input they were computed from and are byte-identical
//! across runs unless `--timing` is given. Exit codes:
//!
//! | code | meaning |
//! |---|---|
//! | 0 | verdict computed (including `false` and `"undecided"`) |
//! | 2 | usage error |
//! | 3 | malformed JSON or descriptor |
//! | 4 | precondition violated |
//! | 5 | file I/O error |
//! | 6 | internal consistency failure |

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abelian::FinAbGroup;
use crate::error::Error;
use crate::exactfield::{poly, AnyElem, AnyField, CyclotomicField, Field};
use crate::gradedalg::{algebra_from_json, algebra_to_json, graded_iso_any, GradedAlgebra};
use crate::gradedfield::{
    dual_galois_check, ff_grading_exists, ff_grading_mus, frobenius_grading, is_field_general, kummer_grading, oracle,
    GradedFieldSpec, KummerSpec, Verdict,
};
use crate::quasitorus::{
    commutation_bicharacter, construct, mu_invariant, params_from_json, params_to_json, primary_decompose,
    verify_primary_tensor,
};
use crate::realclass::{classify_all, ClassifyOptions};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_JSON: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_IO: i32 = 5;
pub const EXIT_INTERNAL: i32 = 6;

/// Largest algebra, in elements, searched exhaustively for zero divisors.
const ZERO_DIVISOR_BUDGET: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    /// Re-run associativity and division oracles on every output.
    Full,
    /// Trust construction invariants.
    Fast,
}

#[derive(Debug, Parser)]
#[command(name = "gda", version, about = "Graded-division algebras: construct, verify, classify, decide")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "full", global = true)]
    pub oracle: OracleMode,
    /// Worker threads for enumeration subcommands.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Add wall-clock time to the report; reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build D(K, β, μ) from a parameter descriptor.
    Construct {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read (β, μ) off an algebra descriptor with 1-dimensional components.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Split an algebra with 1-dimensional components into primary parts.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Search for a graded isomorphism between two algebras.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Real graded-division algebras graded by a group.
    ClassifyReal {
        /// Cyclic factor orders, e.g. "2,2".
        #[arg(long, allow_hyphen_values = true)]
        group: String,
        /// Restrict to items (repeatable).
        #[arg(long = "item")]
        items: Vec<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        count_only: bool,
        /// Every subgroup as support, not only the whole group.
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Decide whether ⊗ F[X_i]/(X_i^{n_i} − μ_i) is a field.
    IsField {
        #[arg(long)]
        field: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// A `{field, group, mu}` descriptor instead of the three flags above.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Existence of a ℤ_k-grading of GF(p^{ℓk}) over GF(p^ℓ).
    FfGrade {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        list_mu: bool,
    },
    /// ℤ_q-grading of GF(p^{qℓ}) by Frobenius eigenspaces.
    FrobeniusGrade {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kummer extension F(Λ^{1/n}) graded by Λ/(F^×)^n.
    KummerGrade {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: u64,
        /// Generators of Λ, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every oracle on an algebra descriptor.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Descriptor(_) => (EXIT_JSON, "descriptor"),
            Error::Internal(_) => (EXIT_INTERNAL, "internal"),
            _ => (EXIT_PRECONDITION, "precondition"),
        };
        CliError { code, kind, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, kind: "usage", message: msg.into() }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError { code: EXIT_IO, kind: "io", message: format!("{}: {e}", path.display()) }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError {
        code: EXIT_JSON,
        kind: "json",
        message: format!("{}: {e}", path.display()),
    })
}

fn write_json(path: &Path, v: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(v).expect("serializable") + "\n";
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn parse_orders(s: &str) -> CliResult<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| usage(format!("bad group order {x:?} in {s:?}"))))
        .collect()
}

/// Splits on commas outside brackets.
fn split_top(s: &str) -> Vec<String> {
    let (mut out, mut cur, mut depth) = (Vec::new(), String::new(), 0i32);
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|x| x.trim().to_string()).collect()
}

/// A field element written as a JSON number or array, or a bare `p/q`.
fn parse_elem(f: &AnyField, tok: &str) -> CliResult<AnyElem> {
    let v = serde_json::from_str::<Value>(tok).unwrap_or_else(|_| Value::String(tok.to_string()));
    Ok(f.elem_from_json(&v)?)
}

fn log_json(log: &[(String, String)]) -> Value {
    log.iter().map(|(k, v)| json!([k, v])).collect()
}

fn all_pass(log: &[(String, String)]) -> bool {
    log.iter().all(|(_, v)| v == "pass")
}

/// Parses `argv` (including the program name) and runs the command; returns the
/// text for stdout (or stderr on failure) and the exit code.
pub fn run<I, T>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    let start = Instant::now();
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(usage(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(mut report) => {
            if cli.timing {
                report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            (serde_json::to_string_pretty(&report).expect("serializable") + "\n", 0)
        }
        Err(e) => {
            let v = json!({"error": {"kind": e.kind, "exit_code": e.code, "message": e.message}});
            (serde_json::to_string_pretty(&v).expect("serializable") + "\n", e.code)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<Value> {
    let full = cli.oracle == OracleMode::Full;
    match &cli.command {
        Command::Construct { input, out } => cmd_construct(input, out.as_deref(), full),
        Command::Invariants { input } => cmd_invariants(input),
        Command::Decompose { input } => cmd_decompose(input, full),
        Command::Iso { a, b } => cmd_iso(a, b),
        Command::ClassifyReal { group, items, out, count_only, all_subgroups } => {
            cmd_classify(group, items, out.as_deref(), *count_only, *all_subgroups, full)
        }
        Command::IsField { field, group, mu, input } => {
            cmd_is_field(field.as_deref(), group.as_deref(), mu.as_deref(), input.as_deref(), full)
        }
        Command::FfGrade { p, ell, k, list_mu } => cmd_ff_grade(*p, *ell, *k, *list_mu, full),
        Command::FrobeniusGrade { p, ell, q, out } => cmd_frobenius(*p, *ell, *q, out.as_deref(), full),
        Command::KummerGrade { field, n, lambda, out } => cmd_kummer(field, *n, lambda, out.as_deref(), full),
        Command::Verify { input } => cmd_verify(input),
    }
}

fn cmd_construct(input: &Path, out: Option<&Path>, full: bool) -> CliResult<Value> {
    let params = read_json(input)?;
    let (beta, mu) = params_from_json(&params)?;
    let alg = construct(&beta, &mu)?;
    let desc = algebra_to_json(&alg);
    if let Some(path) = out {
        write_json(path, &desc)?;
    }
    let mut report = json!({"command": "construct", "input": params, "algebra": desc});
    if full {
        let log = alg.verification_log();
        report["verdict"] = json!(all_pass(&log));
        report["verification"] = log_json(&log);
    }
    Ok(report)
}

/// An algebra descriptor, or parameters to construct one from.
fn load_algebra(v: &Value) -> CliResult<GradedAlgebra<AnyField>> {
    if v.get("constants").is_some() {
        Ok(algebra_from_json(v)?)
    } else {
        let (beta, mu) = params_from_json(v)?;
        Ok(construct(&beta, &mu)?)
    }
}

fn cmd_invariants(input: &Path) -> CliResult<Value> {
    let v = read_json(input)?;
    let alg = load_algebra(&v)?;
    let beta = commutation_bicharacter(&alg)?;
    let mu = mu_invariant(&alg)?;
    Ok(json!({
        "command": "invariants",
        "input": v,
        "invariants": params_to_json(&beta, &mu)?,
        "commutative": beta.is_trivial(),
    }))
}

fn cmd_decompose(input: &Path, full: bool) -> CliResult<Value> {
    let v = read_json(input)?;
    let alg = load_algebra(&v)?;
    let parts = primary_decompose(&alg)?;
    let mut report = json!({
        "command": "decompose",
        "input": v,
        "parts": parts.iter().map(|(p, a)| json!({"prime": p, "dimension": a.dim(), "algebra": algebra_to_json(a)})).collect::<Vec<_>>(),
    });
    if full {
        report["verdict"] = json!(verify_primary_tensor(&alg, &parts));
    }
    Ok(report)
}

fn cmd_iso(a: &Path, b: &Path) -> CliResult<Value> {
    let (va, vb) = (read_json(a)?, read_json(b)?);
    let (x, y) = (load_algebra(&va)?, load_algebra(&vb)?);
    let w = graded_iso_any(&x, &y)?;
    let field = match (x.field(), y.field()) {
        (AnyField::Cyclotomic(fa), AnyField::Cyclotomic(fb)) => {
            let w = num_integer::lcm(fa.roots_of_unity_count(), fb.roots_of_unity_count());
            AnyField::Cyclotomic(CyclotomicField::new(w * x.group().exponent()))
        }
        (f, _) => f.clone(),
    };
    let witness = w.as_ref().map(|w| w.iter().map(|(t, l)| json!([t, field.elem_to_json(l)])).collect::<Vec<_>>());
    Ok(json!({
        "command": "iso",
        "input": {"a": va, "b": vb},
        "verdict": w.is_some(),
        "witness": witness,
    }))
}

fn cmd_classify(
    group: &str,
    items: &[u8],
    out: Option<&Path>,
    count_only: bool,
    all_subgroups: bool,
    full: bool,
) -> CliResult<Value> {
    let orders = parse_orders(group)?;
    let g = FinAbGroup::new(orders.clone())?;
    if let Some(bad) = items.iter().find(|i| !(1..=4).contains(*i)) {
        return Err(usage(format!("item must be 1, 2, 3 or 4, got {bad}")));
    }
    let items: BTreeSet<u8> = if items.is_empty() { (1..=4).collect() } else { items.iter().copied().collect() };
    let opts = ClassifyOptions { all_subgroups, items: items.clone(), verify: full, ..ClassifyOptions::default() };
    let census = classify_all(&g, &opts)?;
    let input = json!({"group": orders, "items": items, "all_subgroups": all_subgroups});
    let mut report = json!({
        "command": "classify-real",
        "input": input,
        "census": census.counts_json(),
        "invariants_pairwise_distinct": census.invariants_pairwise_distinct(),
    });
    if full {
        report["verdict"] = json!(census.all_passed());
    }
    if !count_only {
        report["representatives"] = census.to_json();
    }
    if let Some(path) = out {
        write_json(path, &report)?;
    }
    Ok(report)
}

fn cmd_is_field(
    field: Option<&str>,
    group: Option<&str>,
    mu: Option<&str>,
    input: Option<&Path>,
    full: bool,
) -> CliResult<Value> {
    let spec = match (input, field, group, mu) {
        (Some(path), None, None, None) => GradedFieldSpec::from_json(&read_json(path)?)?,
        (None, Some(f), Some(g), Some(m)) => {
            let f = AnyField::parse(f)?;
            let orders = parse_orders(g)?;
            let mu = split_top(m).iter().map(|t| parse_elem(&f, t)).collect::<CliResult<Vec<_>>>()?;
            GradedFieldSpec::new(f, orders, mu)?
        }
        _ => return Err(usage("is-field needs either --in or all of --field, --group and --mu")),
    };
    let d = is_field_general(&spec)?;
    let mut report = d.to_json(&spec.field);
    report["command"] = json!("is-field");
    report["input"] = spec.to_json();
    if full {
        let mut checks = serde_json::Map::new();
        if let Some(crate::gradedfield::Witness::ZeroDivisor { x, y }) = &d.witness {
            let a = spec.algebra()?;
            let (xv, yv) = (spec.to_vector(x), spec.to_vector(y));
            let ok = !a.is_zero(&xv) && !a.is_zero(&yv) && a.is_zero(&a.mul(&xv, &yv));
            checks.insert("witness_multiplies_to_zero".into(), json!(ok));
        }
        if spec.field.elements().is_some() && d.verdict != Verdict::Undecided {
            let a = spec.algebra()?;
            match oracle::has_zero_divisor(&a, ZERO_DIVISOR_BUDGET) {
                Ok(zd) => {
                    let agree = zd == (d.verdict == Verdict::False);
                    if !agree {
                        return Err(Error::Internal("criterion disagrees with exhaustive zero-divisor search".into()).into());
                    }
                    checks.insert("zero_divisor_search_agrees".into(), json!(agree));
                }
                Err(Error::Unsupported(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        report["oracles"] = Value::Object(checks);
    }
    Ok(report)
}

fn cmd_ff_grade(p: u64, ell: u32, k: u64, list_mu: bool, full: bool) -> CliResult<Value> {
    let ex = ff_grading_exists(p, ell, k)?;
    let mut report = json!({
        "command": "ff-grade",
        "input": {"p": p, "ell": ell, "k": k},
        "verdict": ex.exists,
        "reason": ex.reason,
        "witness": Value::Null,
    });
    if ex.exists || list_mu {
        let (f, mus) = ff_grading_mus(p, ell, k)?;
        if let Some(mu) = mus.first() {
            report["witness"] = json!({"kind": "binomial", "field": f.descriptor(), "mu": f.elem_to_json(mu)});
            if full {
                let irreducible = poly::is_irreducible_finite(&f, &poly::binomial(&f, k as usize, mu));
                if !irreducible {
                    return Err(Error::Internal(format!("X^{k} − μ is reducible for the witness μ")).into());
                }
                report["oracles"] = json!({"witness_binomial_irreducible": irreducible});
            }
        }
        if list_mu {
            report["mu"] = mus.iter().map(|m| f.elem_to_json(m)).collect();
        }
    }
    Ok(report)
}

fn grading_report(
    command: &str,
    input: Value,
    alg: &GradedAlgebra<crate::exactfield::FiniteField>,
    big: &crate::exactfield::FiniteField,
    basis: &[u32],
    construction_log: &[(String, String)],
    out: Option<&Path>,
    full: bool,
) -> CliResult<Value> {
    let desc = algebra_to_json(alg);
    if let Some(path) = out {
        write_json(path, &desc)?;
    }
    let mut log = construction_log.to_vec();
    if full {
        log.extend(alg.verification_log());
        let galois = dual_galois_check(alg);
        match galois {
            Ok(r) => log.extend(r.verification.into_iter().map(|(k, v)| (format!("dual_galois_{k}"), v))),
            Err(e) => log.push(("dual_galois".into(), format!("fail: {e}"))),
        }
    }
    Ok(json!({
        "command": command,
        "input": input,
        "verdict": all_pass(&log),
        "witness": {
            "kind": "grading",
            "algebra": desc,
            "extension": big.descriptor(),
            "basis": basis.iter().map(|b| big.elem_to_json(b)).collect::<Vec<_>>(),
        },
        "verification": log_json(&log),
    }))
}

fn cmd_frobenius(p: u64, ell: u32, q: u64, out: Option<&Path>, full: bool) -> CliResult<Value> {
    let fg = frobenius_grading(p, ell, q)?;
    grading_report(
        "frobenius-grade",
        json!({"p": p, "ell": ell, "q": q}),
        &fg.algebra,
        &fg.big,
        &fg.basis,
        &fg.verification,
        out,
        full,
    )
}

fn cmd_kummer(field: &str, n: u64, lambda: &str, out: Option<&Path>, full: bool) -> CliResult<Value> {
    let AnyField::GF(f) = AnyField::parse(field)? else {
        return Err(Error::Precondition("Kummer gradings are built over finite fields only".into()).into());
    };
    let af = AnyField::GF(f.clone());
    let generators = split_top(lambda)
        .iter()
        .map(|t| match parse_elem(&af, t)? {
            AnyElem::GF(x) => Ok(x),
            _ => Err(usage(format!("bad generator {t:?}"))),
        })
        .collect::<CliResult<Vec<u32>>>()?;
    let spec = KummerSpec { field: f, n, generators };
    let kg = kummer_grading(&spec)?;
    let mut report = grading_report("kummer-grade", spec.to_json(), &kg.algebra, &kg.big, &kg.basis, &kg.verification, out, full)?;
    report["witness"]["coset_representatives"] = kg.coset_reps.iter().map(|c| spec.field.elem_to_json(c)).collect();
    Ok(report)
}

/// Every algebra descriptor inside `v`, with its JSON pointer.
fn embedded_algebras<'a>(v: &'a Value, path: String, out: &mut Vec<(String, &'a Value)>) {
    match v {
        Value::Object(m) if m.contains_key("constants") && m.contains_key("degrees") => out.push((path, v)),
        Value::Object(m) => {
            for (k, x) in m {
                if k != "input" {
                    embedded_algebras(x, format!("{path}/{k}"), out);
                }
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                embedded_algebras(x, format!("{path}/{i}"), out);
            }
        }
        _ => {}
    }
}

/// Verifies an algebra descriptor, or every descriptor embedded in a report.
fn cmd_verify(input: &Path) -> CliResult<Value> {
    let v = read_json(input)?;
    let mut found = Vec::new();
    embedded_algebras(&v, String::new(), &mut found);
    if found.is_empty() {
        return Err(Error::Descriptor("no algebra descriptor found".into()).into());
    }
    let mut verdict = true;
    let mut algebras = Vec::new();
    for (path, d) in found {
        let log = algebra_from_json(d)?.verification_log();
        verdict &= all_pass(&log);
        algebras.push(json!({"path": path, "verdict": all_pass(&log), "verification": log_json(&log)}));
    }
    Ok(json!({
        "command": "verify",
        "input": v,
        "verdict": verdict,
        "algebras": algebras,
    }))
}
