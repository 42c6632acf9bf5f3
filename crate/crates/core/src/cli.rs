//! Command-line front end: `compute`, `verify` and `export`.
//!
//! Results go to the writer passed to [`run`]; diagnostics are returned as
//! errors for the binary to print. Exit status is 0 when every requested
//! check passes, 1 when one fails and 2 for usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{
    betti_hochster, betti_koszul, char_independence, gamma_complement, projective_dimension, regularity,
    verify_sphere_claims, GradedBettiTable, TableDocument,
};
use crate::error::{domain, Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::{split_domino, split_intersection, verify_splitting, Universe, VariableId};
use crate::recursion::{reconcile, relations_check, splitting_identity_check, BaseCaseTable, Recursion};
use crate::simplicial::{facet_complex, SimplicialComplex};
use crate::tiling::{domino_ideal, enumerate_tilings};

/// Primes used by the characteristic-independence check.
pub const CHARINDEP_PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, Parser)]
#[command(name = "domino", version, about = "Betti numbers of domino ideals of 2×n tilings")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the Betti table of I_n.
    Compute(ComputeArgs),
    /// Run check suites over a range of n.
    Verify(VerifyArgs),
    /// Write generators, complexes and the Betti table as JSON.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BoardRange {
    /// Single board width.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with_all = ["min_n", "max_n"])]
    pub n: Option<u64>,
    /// Smallest board width of a range.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_n: Option<u64>,
    /// Largest board width of a range.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: Option<u64>,
    /// Refuse boards with more than this many variables (3n − 2).
    #[arg(long, default_value_t = 22)]
    pub max_vars: usize,
}

impl BoardRange {
    fn resolve(&self, default_min: usize) -> Result<RangeInclusive<usize>> {
        let (lo, hi) = match (self.n, self.min_n, self.max_n) {
            (Some(n), _, _) => (n as usize, n as usize),
            (None, lo, Some(hi)) => (lo.map_or(default_min, |v| v as usize), hi as usize),
            (None, _, None) => return Err(domain("give --n or --max-n")),
        };
        if lo > hi {
            return Err(domain(format!("empty range {lo}..={hi}")));
        }
        if 3 * hi - 2 > self.max_vars {
            return Err(domain(format!("n = {hi} needs {} variables, above --max-vars {}", 3 * hi - 2, self.max_vars)));
        }
        Universe::board(hi)?;
        Ok(lo..=hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hochster,
    Koszul,
    Recursion,
    /// Every method; fails unless they agree.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Fibonacci,
    Splitting,
    Relations,
    Recursion,
    Spheres,
    Charindep,
    Pdreg,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Fibonacci,
        Check::Splitting,
        Check::Relations,
        Check::Recursion,
        Check::Spheres,
        Check::Charindep,
        Check::Pdreg,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Fibonacci => "fibonacci",
            Check::Splitting => "splitting",
            Check::Relations => "relations",
            Check::Recursion => "recursion",
            Check::Spheres => "spheres",
            Check::Charindep => "charindep",
            Check::Pdreg => "pdreg",
        }
    }

    fn min_n(self) -> usize {
        match self {
            Check::Fibonacci | Check::Charindep | Check::Pdreg => 1,
            Check::Splitting | Check::Spheres => 3,
            Check::Relations | Check::Recursion => 4,
        }
    }
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub range: BoardRange,
    /// Q or F<p>.
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Method::Koszul)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Keep entries with i ≥ this.
    #[arg(long)]
    pub i_min: Option<usize>,
    /// Keep entries with i ≤ this.
    #[arg(long)]
    pub i_max: Option<usize>,
    /// Keep entries with j ≥ this.
    #[arg(long)]
    pub j_min: Option<usize>,
    /// Keep entries with j ≤ this.
    #[arg(long)]
    pub j_max: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub range: BoardRange,
    /// Field for the splitting, relations and pdreg checks.
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Comma-separated check names; all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub range: BoardRange,
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    CheckFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::CheckFailed => 1,
        }
    }
}

/// Runs a parsed configuration. `Err` means a usage or domain error (exit 2).
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: std::io::Error| domain(format!("write failed: {e}"));
    match &config.command {
        Command::Compute(args) => {
            let (text, outcome) = compute(args)?;
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(outcome)
        }
        Command::Verify(args) => {
            let (text, outcome) = verify(args)?;
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(outcome)
        }
        Command::Export(args) => {
            let text = export(args)?;
            match &args.output {
                Some(path) => std::fs::write(path, text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(Outcome::Pass)
        }
    }
}

fn table_by(method: Method, n: usize, field: FieldSpec) -> Result<GradedBettiTable> {
    let ideal = domino_ideal(n)?;
    match method {
        Method::Hochster => betti_hochster(&ideal, field),
        Method::Koszul | Method::All => Ok(betti_koszul(&ideal, field).graded),
        Method::Recursion => {
            // the recursion is characteristic-free; tables are relabelled
            let t = Recursion::new(BaseCaseTable::ideal_indexed()).table(n)?.clone();
            Ok(GradedBettiTable::from_entries(field, t.entries()))
        }
    }
}

fn compute(args: &ComputeArgs) -> Result<(String, Outcome)> {
    let range = args.range.resolve(1)?;
    let results: Vec<(usize, GradedBettiTable, Vec<String>)> = range
        .into_par_iter()
        .map(|n| {
            let table = table_by(args.method, n, args.field)?;
            let mut disagreements = Vec::new();
            if args.method == Method::All {
                for other in [Method::Hochster, Method::Recursion] {
                    if !table_by(other, n, args.field)?.same_numbers(&table) {
                        disagreements.push(format!("n = {n}: {other:?} disagrees with Koszul"));
                    }
                }
            }
            let filtered = table.filtered(bound(args.i_min, args.i_max), bound(args.j_min, args.j_max));
            Ok((n, filtered, disagreements))
        })
        .collect::<Result<_>>()?;
    let outcome = if results.iter().all(|(_, _, d)| d.is_empty()) { Outcome::Pass } else { Outcome::CheckFailed };
    let mut text = String::new();
    match args.format {
        Format::Table => {
            for (n, t, disagreements) in &results {
                writeln!(text, "I_{n} over {} ({})", args.field, method_name(args.method)).unwrap();
                text.push_str(&t.to_string());
                for d in disagreements {
                    writeln!(text, "MISMATCH {d}").unwrap();
                }
            }
        }
        Format::Json => {
            let docs: Vec<TableDocument> = results.iter().map(|(n, t, _)| t.to_document(*n)).collect();
            let json = if docs.len() == 1 {
                serde_json::to_string_pretty(&docs[0])
            } else {
                serde_json::to_string_pretty(&docs)
            };
            text = json.expect("tables serialize");
            text.push('\n');
        }
        Format::Csv => {
            text.push_str("n,i,j,value\n");
            for (n, t, _) in &results {
                for ((i, j), v) in t.entries() {
                    writeln!(text, "{n},{i},{j},{v}").unwrap();
                }
            }
        }
    }
    Ok((text, outcome))
}

fn bound(lo: Option<usize>, hi: Option<usize>) -> Option<(usize, usize)> {
    match (lo, hi) {
        (None, None) => None,
        (lo, hi) => Some((lo.unwrap_or(0), hi.unwrap_or(usize::MAX))),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Hochster => "hochster",
        Method::Koszul => "koszul",
        Method::Recursion => "recursion",
        Method::All => "all methods",
    }
}

struct CheckLine {
    passed: bool,
    skipped: bool,
    detail: String,
}

impl CheckLine {
    fn verdict(passed: bool, detail: String) -> Self {
        CheckLine { passed, skipped: false, detail }
    }
}

fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn run_check(check: Check, n: usize, field: FieldSpec) -> Result<CheckLine> {
    if n < check.min_n() {
        return Ok(CheckLine { passed: true, skipped: true, detail: format!("needs n >= {}", check.min_n()) });
    }
    Ok(match check {
        Check::Fibonacci => {
            let count = enumerate_tilings(n)?.len() as u64;
            let expected = fibonacci(n);
            CheckLine::verdict(count == expected, format!("|T_n| = {count}, expected {expected}"))
        }
        Check::Splitting => {
            let identity = splitting_identity_check(n, field)?;
            let outer = verify_splitting(&split_domino(n)?)?;
            let mut ok = identity.passed() && outer.passed();
            let mut detail = format!(
                "identity {} mismatches; V+U split {} ({} subsets)",
                identity.mismatches.len(),
                pass_word(outer.passed()),
                outer.subsets_checked
            );
            if n >= 4 {
                let inner = verify_splitting(&split_intersection(n)?)?;
                ok &= inner.passed();
                write!(
                    detail,
                    "; intersection split {} ({} subsets)",
                    pass_word(inner.passed()),
                    inner.subsets_checked
                )
                .unwrap();
            }
            CheckLine::verdict(ok, detail)
        }
        Check::Relations => {
            let r = relations_check(n, field)?;
            CheckLine::verdict(
                r.passed(),
                format!(
                    "mismatches: relation1 {}, relation2 {}, relation3 {}, intersection split {}",
                    r.relation1.len(),
                    r.relation2.len(),
                    r.relation3.len(),
                    r.intersection_split.len()
                ),
            )
        }
        Check::Recursion => {
            let direct = betti_koszul(&domino_ideal(n)?, FieldSpec::Rationals).graded;
            let rec = Recursion::new(BaseCaseTable::ideal_indexed()).table(n)?.clone();
            let diff = direct.differences(&rec);
            CheckLine::verdict(diff.is_empty(), format!("base case s = -1, {} entries differ", diff.len()))
        }
        Check::Spheres => {
            let r = verify_sphere_claims(n)?;
            CheckLine::verdict(
                r.passed(),
                format!("complement {}; link {}; deletion {}", r.complement, r.link, r.deletion),
            )
        }
        Check::Charindep => {
            let r = char_independence(&domino_ideal(n)?, &CHARINDEP_PRIMES)?;
            CheckLine::verdict(
                r.all_equal() && r.torsion_free(),
                format!(
                    "Q vs F2,F3,F5: {} differing fields; torsion in {} of {} complexes",
                    r.mismatches.len(),
                    r.torsion.len(),
                    r.koszul_scanned + r.complements_scanned.unwrap_or(0)
                ),
            )
        }
        Check::Pdreg => {
            let t = betti_koszul(&domino_ideal(n)?, field).graded;
            let (pd, reg) = (projective_dimension(&t)?, regularity(&t)?);
            let corner = t.get(n - 1, 3 * n - 2);
            CheckLine::verdict(
                pd == n - 1 && reg == 2 * n as i64 - 1 && corner == 1,
                format!("pd = {pd}, reg = {reg}, beta({},{}) = {corner}", n - 1, 3 * n - 2),
            )
        }
    })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn verify(args: &VerifyArgs) -> Result<(String, Outcome)> {
    let range = args.range.resolve(1)?;
    let mut checks = if args.checks.is_empty() { Check::ALL.to_vec() } else { args.checks.clone() };
    checks.sort_unstable();
    checks.dedup();
    let jobs: Vec<(usize, Check)> = range.clone().flat_map(|n| checks.iter().map(move |&c| (n, c))).collect();
    let lines: Vec<(usize, Check, CheckLine)> = jobs
        .into_par_iter()
        .map(|(n, c)| run_check(c, n, args.field).map(|line| (n, c, line)))
        .collect::<Result<_>>()?;
    let mut text = String::new();
    let mut all_passed = true;
    for (n, check, line) in &lines {
        let status = if line.skipped {
            "SKIP"
        } else if line.passed {
            "PASS"
        } else {
            "FAIL"
        };
        all_passed &= line.passed;
        writeln!(text, "n={n} {} {status} {}", check.name(), line.detail).unwrap();
    }
    if checks.contains(&Check::Recursion) && *range.end() >= 4 {
        let report = reconcile((*range.start()).max(4), *range.end())?;
        all_passed &= report.unique_shift().is_some();
        text.push_str(&report.to_string());
    }
    writeln!(text, "{}", if all_passed { "all checks passed" } else { "some checks FAILED" }).unwrap();
    Ok((text, if all_passed { Outcome::Pass } else { Outcome::CheckFailed }))
}

#[derive(Debug, Serialize)]
struct ComplexDocument {
    vertices: Vec<String>,
    facets: Vec<String>,
}

impl From<&SimplicialComplex> for ComplexDocument {
    fn from(c: &SimplicialComplex) -> Self {
        let u = c.universe();
        ComplexDocument {
            vertices: crate::ideal::positions(c.vertices()).map(|p| u.variable(p).to_string()).collect(),
            facets: c.facet_names(),
        }
    }
}

#[derive(Debug, Serialize)]
struct ExportDocument {
    n: usize,
    variables: Vec<String>,
    generators: Vec<String>,
    facet_complex: ComplexDocument,
    complement: ComplexDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    link: Option<(String, ComplexDocument)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deletion: Option<(String, ComplexDocument)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersection_generators: Option<Vec<String>>,
    table: TableDocument,
}

fn export_one(n: usize, field: FieldSpec) -> Result<ExportDocument> {
    let ideal = domino_ideal(n)?;
    let universe = ideal.universe();
    let gamma = gamma_complement(n)?;
    let (link, deletion, intersection_generators) = if n >= 3 {
        let v = VariableId::y(n - 1);
        (
            Some((v.to_string(), (&gamma.link(v)?).into())),
            Some((v.to_string(), (&gamma.deletion(v)?).into())),
            Some(split_domino(n)?.intersection()?.generators().iter().map(ToString::to_string).collect()),
        )
    } else {
        (None, None, None)
    };
    Ok(ExportDocument {
        n,
        variables: (0..universe.size()).map(|p| universe.variable(p).to_string()).collect(),
        generators: ideal.generators().iter().map(ToString::to_string).collect(),
        facet_complex: (&facet_complex(&ideal)).into(),
        complement: (&gamma).into(),
        link,
        deletion,
        intersection_generators,
        table: betti_koszul(&ideal, field).graded.to_document(n),
    })
}

fn export(args: &ExportArgs) -> Result<String> {
    let docs: Vec<ExportDocument> =
        args.range.resolve(1)?.into_par_iter().map(|n| export_one(n, args.field)).collect::<Result<_>>()?;
    let json =
        if docs.len() == 1 { serde_json::to_string_pretty(&docs[0]) } else { serde_json::to_string_pretty(&docs) };
    let mut text = json.expect("export serializes");
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<Outcome>, String) {
        let config = RunConfig::try_parse_from(std::iter::once("domino").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let outcome = run(&config, &mut out);
        (outcome, String::from_utf8(out).unwrap())
    }

    #[test]
    fn compute_json_parses_back() {
        let (outcome, text) = run_args(&["compute", "--n", "3", "--format", "json"]);
        assert_eq!(outcome.unwrap(), Outcome::Pass);
        let (n, table) = GradedBettiTable::from_json(&text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(table.get(2, 7), 1);
    }

    #[test]
    fn degree_filters() {
        let (_, text) = run_args(&["compute", "--n", "3", "--format", "csv", "--i-min", "1", "--j-max", "6"]);
        assert_eq!(text, "n,i,j,value\n3,1,5,2\n3,1,6,1\n");
    }

    #[test]
    fn all_methods_agree() {
        let (outcome, text) = run_args(&["compute", "--min-n", "1", "--max-n", "5", "--method", "all"]);
        assert_eq!(outcome.unwrap(), Outcome::Pass);
        assert!(!text.contains("MISMATCH"));
    }

    #[test]
    fn usage_errors() {
        assert!(RunConfig::try_parse_from(["domino", "compute", "--n", "0"]).is_err());
        assert!(RunConfig::try_parse_from(["domino", "compute", "--n", "3", "--field", "F4"]).is_err());
        assert!(RunConfig::try_parse_from(["domino", "compute", "--n", "3", "--method", "magic"]).is_err());
        assert!(run_args(&["compute", "--n", "9"]).0.is_err());
        assert!(run_args(&["compute", "--min-n", "4", "--max-n", "3"]).0.is_err());
        assert!(run_args(&["compute"]).0.is_err());
    }

    #[test]
    fn verify_small_range() {
        let (outcome, text) = run_args(&["verify", "--max-n", "4"]);
        assert_eq!(outcome.unwrap(), Outcome::Pass, "{text}");
        assert!(text.contains("n=2 spheres SKIP"));
        assert!(text.contains("n=4 pdreg PASS pd = 3, reg = 7, beta(3,10) = 1"));
        assert!(text.contains("unique reconciling setting: s = -1"));
    }

    #[test]
    fn export_shape() {
        let (_, text) = run_args(&["export", "--n", "3"]);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["generators"], serde_json::json!(["x1x3y3", "x2x4y1", "y1y2y3"]));
        assert_eq!(v["table"]["entries"].as_array().unwrap().len(), 4);
        assert_eq!(v["link"][0], "y2");
    }

    #[test]
    fn fibonacci_anchors() {
        assert_eq!((1..=6).map(fibonacci).collect::<Vec<_>>(), [1, 2, 3, 5, 8, 13]);
    }
}
