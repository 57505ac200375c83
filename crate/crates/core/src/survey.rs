//! Exhaustive survey over the semigroup tree.
//!
//! Every numerical semigroup of genus `g + 1` arises exactly once as
//! `H \ {a}` for a minimal generator `a > F(H)` of some `H` of genus `g`.
//! The tree is expanded breadth-first down to a split depth, the frontier
//! subtrees are evaluated in parallel, and records are sorted by
//! `(genus, gens)` before anything is written, so output never depends on
//! scheduling.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::degrees::{classify, DegreeReport};
use crate::derived::{herzog_exponents, mm_canonical_check, mm_module_generators, mm_ring, tcdeg_formula};
use crate::error::{Error, Result};
use crate::relideal::RelativeIdeal;
use crate::roots::{rootset, IdealEnumerator};
use crate::semigroup::NumericalSemigroup;

pub fn tree_children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.children()
}

/// Every semigroup of genus `≤ max_genus`, sorted by `(genus, gens)`.
pub fn enumerate_by_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut level = vec![NumericalSemigroup::naturals()];
    for g in 0..=max_genus {
        level.sort_by(|a, b| a.generators().cmp(b.generators()));
        let next = if g < max_genus {
            level.iter().flat_map(|h| h.children()).collect()
        } else {
            Vec::new()
        };
        out.append(&mut level);
        level = next;
    }
    out
}

/// Number of semigroups of each genus `0..=max_genus`, by depth-first walk.
pub fn genus_counts(max_genus: usize) -> Vec<usize> {
    fn walk(h: &NumericalSemigroup, max_genus: usize, counts: &mut [usize]) {
        counts[h.genus()] += 1;
        if h.genus() < max_genus {
            for child in h.children() {
                walk(&child, max_genus, counts);
            }
        }
    }
    let mut counts = vec![0; max_genus + 1];
    walk(&NumericalSemigroup::naturals(), max_genus, &mut counts);
    counts
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    BidegEqTdeg,
    CdegGeBideg,
    GorIffSymmetric,
    AgImpliesBideg1,
    CdegGeTypeMinus1,
    TcdegFormula,
    NuMm,
    CanonicalMm,
    DualitySample,
    Herzog,
    RootProp,
}

impl CheckName {
    pub const ALL: [CheckName; 11] = [
        CheckName::BidegEqTdeg,
        CheckName::CdegGeBideg,
        CheckName::GorIffSymmetric,
        CheckName::AgImpliesBideg1,
        CheckName::CdegGeTypeMinus1,
        CheckName::TcdegFormula,
        CheckName::NuMm,
        CheckName::CanonicalMm,
        CheckName::DualitySample,
        CheckName::Herzog,
        CheckName::RootProp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::BidegEqTdeg => "bideg_eq_tdeg",
            CheckName::CdegGeBideg => "cdeg_ge_bideg",
            CheckName::GorIffSymmetric => "gor_iff_symmetric",
            CheckName::AgImpliesBideg1 => "ag_implies_bideg1",
            CheckName::CdegGeTypeMinus1 => "cdeg_ge_type_minus_1",
            CheckName::TcdegFormula => "tcdeg_formula",
            CheckName::NuMm => "nu_mm",
            CheckName::CanonicalMm => "canonical_mm",
            CheckName::DualitySample => "duality_sample",
            CheckName::Herzog => "herzog",
            CheckName::RootProp => "root_prop",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == name)
            .ok_or_else(|| Error::Parse {
                what: "check name",
                value: name.to_string(),
            })
    }

    /// Everything except the comparison conjecture is a theorem; a failure
    /// there is a bug, not a discovery.
    pub fn is_theorem(self) -> bool {
        self != CheckName::CdegGeBideg
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Na,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Na => "na",
        }
    }
}

/// Outcome of every named check, serialized as an object in fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks([Outcome; 11]);

impl Checks {
    pub fn get(&self, name: CheckName) -> Outcome {
        self.0[name.index()]
    }

    fn set(&mut self, name: CheckName, outcome: Outcome) {
        self.0[name.index()] = outcome;
    }

    pub fn iter(&self) -> impl Iterator<Item = (CheckName, Outcome)> + '_ {
        CheckName::ALL.into_iter().map(|c| (c, self.get(c)))
    }

    pub fn theorem_failures(&self) -> Vec<CheckName> {
        self.iter()
            .filter(|(c, o)| c.is_theorem() && *o == Outcome::Fail)
            .map(|(c, _)| c)
            .collect()
    }
}

impl Serialize for Checks {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, outcome) in self.iter() {
            map.serialize_entry(name.as_str(), &outcome)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SurveyRecord {
    #[serde(flatten)]
    pub report: DegreeReport,
    pub checks: Checks,
}

impl SurveyRecord {
    fn sort_key(&self) -> (usize, &[i64]) {
        (self.report.genus, &self.report.gens)
    }

    pub fn conjecture_violated(&self) -> bool {
        self.checks.get(CheckName::CdegGeBideg) == Outcome::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

impl Format {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse {
                what: "format",
                value: text.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub max_genus: usize,
    pub checks: Vec<CheckName>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub workers: usize,
    /// Genus at which the tree is split into parallel subtrees.
    pub split_depth: usize,
    /// Rootset checks only run up to this genus.
    pub root_genus_cap: usize,
    pub root_nmax: usize,
    /// Number of enumerated ideals used for the duality check.
    pub duality_sample: usize,
    pub node_budget: u64,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            max_genus: 6,
            checks: CheckName::ALL.to_vec(),
            output: None,
            format: Format::Jsonl,
            workers: rayon::current_num_threads(),
            split_depth: 8,
            root_genus_cap: 10,
            root_nmax: 3,
            duality_sample: 64,
            node_budget: crate::roots::DEFAULT_NODE_BUDGET,
        }
    }
}

fn enabled(cfg: &SurveyConfig, name: CheckName) -> bool {
    cfg.checks.contains(&name)
}

/// Runs every enabled check on `h`. Failures are recorded, not raised.
pub fn evaluate_record(h: &Arc<NumericalSemigroup>, cfg: &SurveyConfig) -> Result<SurveyRecord> {
    let report = classify(h);
    let mut checks = Checks([Outcome::Na; 11]);
    let r = report.r#type;
    let symmetric = h.is_symmetric();
    let dvr = h.is_naturals();
    let on = |c| enabled(cfg, c);

    if on(CheckName::BidegEqTdeg) {
        checks.set(CheckName::BidegEqTdeg, Outcome::from_bool(report.bideg == report.tdeg));
    }
    if on(CheckName::CdegGeBideg) {
        checks.set(CheckName::CdegGeBideg, Outcome::from_bool(report.cdeg >= report.bideg));
    }
    if on(CheckName::GorIffSymmetric) {
        let all_equal = [report.cdeg == 0, report.bideg == 0, report.tdeg == 0, report.gorenstein]
            .iter()
            .all(|&b| b == symmetric);
        checks.set(CheckName::GorIffSymmetric, Outcome::from_bool(all_equal));
    }
    if on(CheckName::AgImpliesBideg1) && report.almost_gorenstein && !report.gorenstein {
        checks.set(CheckName::AgImpliesBideg1, Outcome::from_bool(report.bideg == 1));
    }
    if on(CheckName::CdegGeTypeMinus1) {
        let bounds = report.cdeg + 1 >= r
            && (report.gorenstein || (report.cdeg >= 1 && report.bideg >= 1 && report.tdeg >= 1));
        checks.set(CheckName::CdegGeTypeMinus1, Outcome::from_bool(bounds));
    }
    if !dvr {
        if on(CheckName::TcdegFormula) {
            let a = mm_ring(h)?;
            let direct = classify(&a).cdeg as i64;
            checks.set(CheckName::TcdegFormula, Outcome::from_bool(tcdeg_formula(h)? == direct));
        }
        if on(CheckName::NuMm) {
            checks.set(CheckName::NuMm, Outcome::from_bool(mm_module_generators(h)? == r + 1));
        }
        if on(CheckName::CanonicalMm) {
            checks.set(CheckName::CanonicalMm, Outcome::from_bool(mm_canonical_check(h)?));
        }
    }
    if on(CheckName::DualitySample) {
        let k = RelativeIdeal::canonical(h);
        let ok = IdealEnumerator::new(h)
            .take(cfg.duality_sample)
            .all(|i| k.colon(&k.colon(&i).expect("same ambient")).expect("same ambient") == i);
        checks.set(CheckName::DualitySample, Outcome::from_bool(ok));
    }
    if on(CheckName::Herzog) && h.embedding_dimension() == 3 && !symmetric {
        let data = herzog_exponents(h)?;
        let cdeg = report.cdeg as i64;
        let bideg = report.bideg as i64;
        let ok = data.ascending.cdeg_candidates.contains(&cdeg)
            && data.applicable().all(|d| d.predicted_bideg == bideg);
        checks.set(CheckName::Herzog, Outcome::from_bool(ok));
    }
    if on(CheckName::RootProp) && h.genus() <= cfg.root_genus_cap {
        let roots = rootset(h, cfg.root_nmax, cfg.node_budget)?;
        checks.set(CheckName::RootProp, Outcome::from_bool(root_proposition_holds(h, &roots)));
    }
    Ok(SurveyRecord { report, checks })
}

/// The provable form of the rootset statement: an irreducible `L` with
/// `nL ≅ K` for some `n ≥ 2` forces `H` symmetric. The class of `K` itself
/// (`n = 1`) is always irreducible. For symmetric `H` the class of `H` is a
/// root with `n = 1`.
pub fn root_proposition_holds(h: &Arc<NumericalSemigroup>, roots: &[crate::roots::RootClass]) -> bool {
    let symmetric = h.is_symmetric();
    let proper_roots_ok = roots
        .iter()
        .all(|c| symmetric || !c.irreducible || c.exponents.iter().all(|&n| n == 1));
    let unit_present = !symmetric
        || roots
            .iter()
            .any(|c| c.n == 1 && c.representative == RelativeIdeal::unit(h));
    proper_roots_ok && unit_present
}

/// Like [`evaluate_record`] but any failed theorem check is an error.
pub fn verify_record(h: &Arc<NumericalSemigroup>, cfg: &SurveyConfig) -> Result<SurveyRecord> {
    let record = evaluate_record(h, cfg)?;
    let failed = record.checks.theorem_failures();
    if !failed.is_empty() {
        let names: Vec<_> = failed.iter().map(|c| c.as_str()).collect();
        return Err(Error::InternalInvariantViolation(format!(
            "{} fails {}",
            h,
            names.join(", ")
        )));
    }
    Ok(record)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveySummary {
    pub max_genus: usize,
    pub root_genus_cap: usize,
    pub root_nmax: usize,
    pub per_genus: Vec<usize>,
    pub records: usize,
    pub tallies: Vec<(CheckName, Tally)>,
    pub min_cdeg_minus_bideg: Option<i64>,
    pub max_cdeg_minus_bideg: Option<i64>,
    pub theorem_failures: usize,
    pub conjecture_violations: usize,
    pub violations_path: Option<PathBuf>,
}

impl Serialize for CheckName {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl SurveySummary {
    fn from_records(records: &[SurveyRecord], cfg: &SurveyConfig) -> Self {
        let max_genus = cfg.max_genus;
        let mut per_genus = vec![0; max_genus + 1];
        let mut tallies: Vec<(CheckName, Tally)> =
            CheckName::ALL.iter().map(|&c| (c, Tally::default())).collect();
        let mut diffs = records
            .iter()
            .map(|r| r.report.cdeg as i64 - r.report.bideg as i64);
        let first = diffs.next();
        let (lo, hi) = diffs.fold((first, first), |(lo, hi), d| {
            (lo.map(|l| l.min(d)), hi.map(|h| h.max(d)))
        });
        let mut theorem_failures = 0;
        for r in records {
            per_genus[r.report.genus] += 1;
            if !r.checks.theorem_failures().is_empty() {
                theorem_failures += 1;
            }
            for (i, (_, outcome)) in r.checks.iter().enumerate() {
                let t = &mut tallies[i].1;
                match outcome {
                    Outcome::Pass => t.pass += 1,
                    Outcome::Fail => t.fail += 1,
                    Outcome::Na => t.na += 1,
                }
            }
        }
        SurveySummary {
            max_genus,
            root_genus_cap: cfg.root_genus_cap,
            root_nmax: cfg.root_nmax,
            per_genus,
            records: records.len(),
            tallies,
            min_cdeg_minus_bideg: lo,
            max_cdeg_minus_bideg: hi,
            theorem_failures,
            conjecture_violations: records.iter().filter(|r| r.conjecture_violated()).count(),
            violations_path: None,
        }
    }

    /// Survey exit status: theorem failures first, then conjecture
    /// counterexamples.
    pub fn exit_code(&self) -> i32 {
        if self.theorem_failures > 0 {
            3
        } else if self.conjecture_violations > 0 {
            5
        } else {
            0
        }
    }
}

impl fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "survey up to genus {}: {} semigroups", self.max_genus, self.records)?;
        writeln!(
            f,
            "root_prop limited to genus <= {} with nmax = {}",
            self.root_genus_cap, self.root_nmax
        )?;
        writeln!(f, "{:>6} {:>10}", "genus", "count")?;
        for (g, n) in self.per_genus.iter().enumerate() {
            writeln!(f, "{g:>6} {n:>10}")?;
        }
        writeln!(f, "{:<22} {:>8} {:>8} {:>8}", "check", "pass", "fail", "na")?;
        for (c, t) in &self.tallies {
            writeln!(f, "{:<22} {:>8} {:>8} {:>8}", c.as_str(), t.pass, t.fail, t.na)?;
        }
        if let (Some(lo), Some(hi)) = (self.min_cdeg_minus_bideg, self.max_cdeg_minus_bideg) {
            writeln!(f, "cdeg - bideg ranges over [{lo}, {hi}]")?;
        }
        writeln!(f, "theorem failures: {}", self.theorem_failures)?;
        write!(f, "conjecture violations (cdeg < bideg): {}", self.conjecture_violations)?;
        if let Some(p) = &self.violations_path {
            write!(f, " -> {}", p.display())?;
        }
        Ok(())
    }
}

pub struct SurveyOutcome {
    pub records: Vec<SurveyRecord>,
    pub summary: SurveySummary,
}

fn evaluate_subtree(root: NumericalSemigroup, cfg: &SurveyConfig) -> Result<Vec<SurveyRecord>> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(h) = stack.pop() {
        if h.genus() < cfg.max_genus {
            stack.extend(h.children());
        }
        out.push(evaluate_record(&Arc::new(h), cfg)?);
    }
    Ok(out)
}

/// Enumerates, checks, sorts and (optionally) writes every record.
pub fn run_survey(cfg: &SurveyConfig) -> Result<SurveyOutcome> {
    let split = cfg.split_depth.min(cfg.max_genus);
    let mut shallow = Vec::new();
    let mut frontier = vec![NumericalSemigroup::naturals()];
    for _ in 0..split {
        let next = frontier.iter().flat_map(|h| h.children()).collect();
        shallow.append(&mut frontier);
        frontier = next;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let mut records: Vec<SurveyRecord> = pool.install(|| -> Result<Vec<SurveyRecord>> {
        let mut top: Vec<SurveyRecord> = shallow
            .par_iter()
            .map(|h| evaluate_record(&Arc::new(h.clone()), cfg))
            .collect::<Result<_>>()?;
        let deep: Vec<Vec<SurveyRecord>> = frontier
            .into_par_iter()
            .map(|root| evaluate_subtree(root, cfg))
            .collect::<Result<_>>()?;
        top.extend(deep.into_iter().flatten());
        Ok(top)
    })?;
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    let mut summary = SurveySummary::from_records(&records, cfg);
    if let Some(path) = &cfg.output {
        write_records(path, cfg.format, &records)?;
        let violations: Vec<SurveyRecord> = records
            .iter()
            .filter(|r| r.conjecture_violated())
            .cloned()
            .collect();
        if !violations.is_empty() {
            let vpath = violations_path(path);
            write_records(&vpath, Format::Jsonl, &violations)?;
            summary.violations_path = Some(vpath);
        }
    }
    Ok(SurveyOutcome { records, summary })
}

pub fn violations_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".violations.jsonl");
    PathBuf::from(name)
}

pub fn write_records(path: &Path, format: Format, records: &[SurveyRecord]) -> Result<()> {
    let file = BufWriter::new(File::create(path)?);
    match format {
        Format::Jsonl => write_jsonl(file, records),
        Format::Csv => write_csv(file, records),
    }
}

pub fn write_jsonl<W: Write>(mut w: W, records: &[SurveyRecord]) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub const CSV_REPORT_COLUMNS: [&str; 13] = [
    "gens",
    "type",
    "multiplicity",
    "genus",
    "frobenius",
    "shift",
    "cdeg",
    "bideg",
    "tdeg",
    "gorenstein",
    "almost_gorenstein",
    "nearly_gorenstein",
    "goto",
];

pub fn write_csv<W: Write>(w: W, records: &[SurveyRecord]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    let header: Vec<&str> = CSV_REPORT_COLUMNS
        .iter()
        .copied()
        .chain(CheckName::ALL.iter().map(|c| c.as_str()))
        .collect();
    out.write_record(&header)?;
    for r in records {
        let d = &r.report;
        let mut row = vec![
            crate::semigroup::join(&d.gens),
            d.r#type.to_string(),
            d.multiplicity.to_string(),
            d.genus.to_string(),
            d.frobenius.to_string(),
            d.shift.to_string(),
            d.cdeg.to_string(),
            d.bideg.to_string(),
            d.tdeg.to_string(),
            d.gorenstein.to_string(),
            d.almost_gorenstein.to_string(),
            d.nearly_gorenstein.to_string(),
            d.goto.to_string(),
        ];
        row.extend(r.checks.iter().map(|(_, o)| o.as_str().to_string()));
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}
