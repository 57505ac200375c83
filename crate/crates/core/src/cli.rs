//! The `nsdeg` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid semigroup, 3 invariant
//! or theorem failure, 4 budget exceeded, 5 conjecture counterexample found
//! by `survey`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::degrees::classify;
use crate::derived::{herzog_exponents, mm_report, mm_ring, HerzogReport, MmReport};
use crate::error::Error;
use crate::relideal::{IdealJson, RelativeIdeal};
use crate::roots::{rootset, RootClassJson, DEFAULT_NMAX, DEFAULT_NODE_BUDGET};
use crate::semigroup::{parse_list, NumericalSemigroup};
use crate::survey::{run_survey, CheckName, Format, SurveyConfig};

pub const BUDGET_VAR: &str = "NSDEG_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "nsdeg", version, about = "Canonical, bi-canonical and trace degrees of numerical semigroup rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Single {
    /// Generators, comma separated (e.g. 5,7,9).
    #[arg(value_name = "G", value_parser = parse_gens)]
    gens: Gens,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius number, genus, type, pseudo-Frobenius numbers.
    Info(Single),
    /// cdeg, bideg, tdeg and the Gorenstein-type classes.
    Degrees(Single),
    /// Relative ideal calculator.
    Ideal {
        #[command(flatten)]
        single: Single,
        #[arg(long = "ideal-gens", value_name = "L", value_parser = parse_gens)]
        ideal_gens: Gens,
        #[arg(long, value_enum)]
        op: Option<Op>,
        /// Right-hand side for --op colon.
        #[arg(long, value_name = "L2", value_parser = parse_gens)]
        rhs: Option<Gens>,
    },
    /// The ring m:m and its canonical-degree formula.
    Mm {
        #[command(flatten)]
        single: Single,
        #[arg(long, value_name = "N", default_value_t = 1)]
        iterate: usize,
    },
    /// Herzog exponents of a 3-generated non-symmetric semigroup.
    Herzog(Single),
    /// Ideal classes L with nL isomorphic to the canonical ideal.
    Roots {
        #[command(flatten)]
        single: Single,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_NMAX)]
        nmax: usize,
    },
    /// Exhaustive check over all semigroups up to a genus.
    Survey {
        #[arg(long = "max-genus", value_name = "N")]
        max_genus: usize,
        #[arg(long, value_name = "F")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
        #[arg(long, value_name = "N")]
        workers: Option<usize>,
        /// Comma separated check names; default all.
        #[arg(long, value_name = "LIST")]
        checks: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Dual,
    Bidual,
    Trace,
    Colon,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Dual => "dual",
            Op::Bidual => "bidual",
            Op::Trace => "trace",
            Op::Colon => "colon",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

/// A comma-separated integer list, kept as one argument.
#[derive(Clone, Debug)]
struct Gens(Vec<i64>);

fn parse_gens(text: &str) -> Result<Gens, String> {
    parse_list(text).map(Gens).map_err(|e| e.to_string())
}

struct Failure {
    code: i32,
    message: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EmptyGenerators
        | Error::NonPositiveGenerator(_)
        | Error::NonCoprime(_)
        | Error::SieveCapExceeded(_) => 2,
        Error::InternalInvariantViolation(_) => 3,
        Error::SearchBudgetExceeded(_) | Error::LimitExceeded(_) => 4,
        _ => 1,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::from(e).into()
    }
}

/// Attributes an error to the flag or argument that caused it.
fn at(what: &'static str) -> impl Fn(Error) -> Failure {
    move |e| Failure {
        code: exit_code(&e),
        message: format!("{what}: {e}"),
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 1, message }
}

fn budget_from_env() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{BUDGET_VAR}: expected a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "nsdeg: {}", f.message);
            f.code
        }
    }
}

fn semigroup(gens: &[i64]) -> Result<Arc<NumericalSemigroup>, Failure> {
    NumericalSemigroup::from_generators(gens)
        .map(Arc::new)
        .map_err(at("G"))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Info(s) => info(&s, out),
        Command::Degrees(s) => degrees(&s, out),
        Command::Ideal {
            single,
            ideal_gens,
            op,
            rhs,
        } => ideal(&single, &ideal_gens.0, op, rhs.as_ref().map(|r| r.0.as_slice()), out),
        Command::Mm { single, iterate } => mm(&single, iterate, out),
        Command::Herzog(s) => herzog(&s, out),
        Command::Roots { single, nmax } => roots(&single, nmax, out),
        Command::Survey {
            max_genus,
            out: path,
            format,
            workers,
            checks,
            json,
        } => survey(max_genus, path, format, workers, checks.as_deref(), json, out),
    }
}

fn info(s: &Single, out: &mut dyn Write) -> Result<i32, Failure> {
    let h = semigroup(&s.gens.0)?;
    let info = h.info();
    if s.json {
        emit_json(out, &info)?;
    } else {
        writeln!(out, "H = {h}")?;
        writeln!(out, "frobenius {}  conductor {}  genus {}", info.frobenius, info.conductor, info.genus)?;
        writeln!(out, "multiplicity {}  type {}  symmetric {}", info.multiplicity, info.r#type, yes_no(info.symmetric))?;
        writeln!(out, "pseudo-frobenius {:?}", info.pf)?;
    }
    Ok(0)
}

fn degrees(s: &Single, out: &mut dyn Write) -> Result<i32, Failure> {
    let h = semigroup(&s.gens.0)?;
    let d = classify(&h);
    if s.json {
        emit_json(out, &d)?;
    } else {
        writeln!(out, "H = {h}  type {}  multiplicity {}  genus {}  frobenius {}", d.r#type, d.multiplicity, d.genus, d.frobenius)?;
        writeln!(out, "canonical ideal embedded with shift {}", d.shift)?;
        writeln!(out, "cdeg {}  bideg {}  tdeg {}", d.cdeg, d.bideg, d.tdeg)?;
        writeln!(
            out,
            "gorenstein {}  almost gorenstein {}  nearly gorenstein {}  goto {}",
            yes_no(d.gorenstein),
            yes_no(d.almost_gorenstein),
            yes_no(d.nearly_gorenstein),
            yes_no(d.goto)
        )?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct IdealOutput {
    gens: Vec<i64>,
    ideal: IdealJson,
    minimal_generators: Vec<i64>,
    canonical_class: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    op: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<IdealJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<IdealJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result_generators: Option<Vec<i64>>,
}

fn ideal(s: &Single, ideal_gens: &[i64], op: Option<Op>, rhs: Option<&[i64]>, out: &mut dyn Write) -> Result<i32, Failure> {
    let h = semigroup(&s.gens.0)?;
    match (op, rhs) {
        (Some(Op::Colon), None) => return Err(usage("--rhs: required with --op colon".into())),
        (Some(o), Some(_)) if !matches!(o, Op::Colon) => {
            return Err(usage(format!("--rhs: only valid with --op colon, not --op {}", o.name())))
        }
        (None, Some(_)) => return Err(usage("--rhs: only valid with --op colon".into())),
        _ => {}
    }
    let i = RelativeIdeal::from_generators(&h, ideal_gens).map_err(at("--ideal-gens"))?;
    let j = rhs
        .map(|r| RelativeIdeal::from_generators(&h, r).map_err(at("--rhs")))
        .transpose()?;
    let k = RelativeIdeal::canonical(&h);
    let result = match op {
        None => None,
        Some(Op::Dual) => Some(i.dual()),
        Some(Op::Bidual) => Some(i.bidual()),
        Some(Op::Trace) => Some(i.trace()),
        Some(Op::Colon) => Some(i.colon(j.as_ref().expect("checked above")).map_err(at("--rhs"))?),
    };
    let report = IdealOutput {
        gens: h.generators().to_vec(),
        ideal: i.to_json(),
        minimal_generators: i.minimal_generators(),
        canonical_class: i.iso_equal(&k)?,
        op: op.map(Op::name),
        rhs: j.as_ref().map(RelativeIdeal::to_json),
        result: result.as_ref().map(RelativeIdeal::to_json),
        result_generators: result.as_ref().map(RelativeIdeal::minimal_generators),
    };
    if s.json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "H = {h}")?;
        writeln!(out, "I = {i}  generated by {:?}", report.minimal_generators)?;
        writeln!(out, "I is a translate of K: {}", yes_no(report.canonical_class))?;
        if let (Some(o), Some(r)) = (op, &result) {
            match &j {
                Some(j) => writeln!(out, "I - J with J = {j}")?,
                None => writeln!(out, "{} of I", o.name())?,
            }
            writeln!(out, "result = {r}  generated by {:?}", r.minimal_generators())?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct MmOutput {
    steps: Vec<MmReport>,
    /// True when the tower reached N within the requested steps.
    reached_dvr: bool,
}

fn mm(s: &Single, iterate: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut h = semigroup(&s.gens.0)?;
    if h.is_naturals() {
        return Err(at("G")(Error::IsDvr));
    }
    if iterate == 0 {
        return Err(usage("--iterate: must be at least 1".into()));
    }
    let mut steps = Vec::new();
    for _ in 0..iterate {
        if h.is_naturals() {
            break;
        }
        steps.push(mm_report(&h)?);
        h = mm_ring(&h)?;
    }
    let all_ok = steps
        .iter()
        .all(|r| r.formula_ok && r.nu_matches_type_plus_one && r.canonical_ok);
    if s.json {
        emit_json(
            out,
            &MmOutput {
                steps,
                reached_dvr: h.is_naturals(),
            },
        )?;
    } else {
        for r in &steps {
            writeln!(out, "H = <{}>  type {}  cdeg {}", crate::semigroup::join(&r.gens), r.r#type, r.cdeg)?;
            writeln!(out, "  A = m:m = <{}>", crate::semigroup::join(&r.mm_gens))?;
            writeln!(out, "  nu(A) = {} (r+1 = {}): {}", r.nu, r.r#type + 1, pass_fail(r.nu_matches_type_plus_one))?;
            writeln!(
                out,
                "  cdeg(A) = {} direct, {} by formula: {}",
                r.cdeg_mm_direct,
                r.cdeg_mm_formula,
                pass_fail(r.formula_ok)
            )?;
            writeln!(out, "  M + C isomorphic to K(A): {}", pass_fail(r.canonical_ok))?;
            writeln!(
                out,
                "  lengths: A/D {}  A/D** {}  A/xD {}  A/(xD)** {}  bideg(A) {}",
                r.colength_d, r.colength_d_bidual, r.colength_xd, r.colength_xd_bidual, r.bideg_mm
            )?;
        }
        if h.is_naturals() {
            writeln!(out, "tower reached N")?;
        }
    }
    Ok(if all_ok { 0 } else { 3 })
}

#[derive(Serialize)]
struct HerzogOutput {
    #[serde(flatten)]
    report: HerzogReport,
    cdeg: i64,
    bideg: i64,
    cdeg_in_candidates: bool,
    predictions_ok: bool,
}

fn herzog(s: &Single, out: &mut dyn Write) -> Result<i32, Failure> {
    let h = semigroup(&s.gens.0)?;
    let report = herzog_exponents(&h).map_err(at("G"))?;
    let d = classify(&h);
    let (cdeg, bideg) = (d.cdeg as i64, d.bideg as i64);
    let cdeg_in_candidates = report.ascending.cdeg_candidates.contains(&cdeg);
    let predictions_ok = report.applicable().all(|o| o.predicted_bideg == bideg);
    let ok = cdeg_in_candidates && predictions_ok;
    if s.json {
        emit_json(
            out,
            &HerzogOutput {
                report,
                cdeg,
                bideg,
                cdeg_in_candidates,
                predictions_ok,
            },
        )?;
    } else {
        writeln!(out, "H = {h}  cdeg {cdeg}  bideg {bideg}")?;
        writeln!(out, "minimal multiples {:?}", report.minimal_multiples)?;
        writeln!(out, "{:<12} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3}  hyp  a1*b2*c1", "ordering", "a1", "a2", "b1", "b2", "c1", "c2")?;
        for o in &report.orderings {
            writeln!(
                out,
                "{:<12} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3}  {:<4} {}",
                crate::semigroup::join(&o.ordering),
                o.a1,
                o.a2,
                o.b1,
                o.b2,
                o.c1,
                o.c2,
                yes_no(o.hypothesis),
                o.predicted_bideg
            )?;
        }
        let [lo, hi] = report.ascending.cdeg_candidates;
        writeln!(out, "cdeg in {{{lo}, {hi}}}: {}", pass_fail(cdeg_in_candidates))?;
        writeln!(
            out,
            "bideg prediction on {} applicable ordering(s): {}",
            report.applicable().count(),
            pass_fail(predictions_ok)
        )?;
    }
    Ok(if ok { 0 } else { 3 })
}

#[derive(Serialize)]
struct RootsOutput {
    gens: Vec<i64>,
    nmax: usize,
    symmetric: bool,
    classes: Vec<RootClassJson>,
}

fn roots(s: &Single, nmax: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let h = semigroup(&s.gens.0)?;
    if nmax == 0 {
        return Err(usage("--nmax: must be at least 1".into()));
    }
    let budget = budget_from_env()?;
    let classes = rootset(&h, nmax, budget).map_err(at("roots"))?;
    if s.json {
        emit_json(
            out,
            &RootsOutput {
                gens: h.generators().to_vec(),
                nmax,
                symmetric: h.is_symmetric(),
                classes: classes.iter().map(|c| c.to_json()).collect(),
            },
        )?;
    } else {
        writeln!(out, "H = {h}  nmax {nmax}  {} class(es)", classes.len())?;
        for c in &classes {
            writeln!(
                out,
                "  n = {}  exponents {:?}  irreducible {}  L = {}",
                c.n,
                c.exponents,
                yes_no(c.irreducible),
                c.representative
            )?;
        }
    }
    Ok(0)
}

fn survey(
    max_genus: usize,
    path: Option<PathBuf>,
    format: FormatArg,
    workers: Option<usize>,
    checks: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut cfg = SurveyConfig {
        max_genus,
        output: path,
        format: match format {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        },
        node_budget: budget_from_env()?,
        ..SurveyConfig::default()
    };
    if let Some(w) = workers {
        if w == 0 {
            return Err(usage("--workers: must be at least 1".into()));
        }
        cfg.workers = w;
    }
    if let Some(list) = checks {
        cfg.checks = list
            .split(',')
            .map(|name| CheckName::parse(name.trim()))
            .collect::<Result<_, _>>()
            .map_err(at("--checks"))?;
    }
    let outcome = run_survey(&cfg).map_err(at("survey"))?;
    if json {
        emit_json(out, &outcome.summary)?;
    } else {
        writeln!(out, "{}", outcome.summary)?;
    }
    Ok(outcome.summary.exit_code())
}
