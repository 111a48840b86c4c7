//! Command-line front end. The `bihom` binary is a thin wrapper around
//! [`run`].
//!
//! Output is a plain-text table by default, a JSON envelope with `--json`,
//! and CSV with `--csv` (spectra and matrices only). Exit codes: 0 success,
//! 1 failed verification or internal error, 2 usage error or request beyond
//! `--max-dim`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{g_poly, GCombination, GProduct};
use crate::operator::{is_regular_pair, straighten_pair};
use crate::partition::{count_partitions, hook_leg_profile, profile_to_partition, DiagonalBox, Partition};
use crate::poly::{Bidegree, Polynomial};
use crate::rational::Rational;
use crate::spectral::{
    eigenvalue_of_sequence, s_basis, spectrum, t_matrix, BasisKind, BasisLabel, EigenVector,
};
use crate::verify::{self, CheckResult, CheckSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bihom", version, about = "Exact spectrum of the transfer operator T on F(d, l)")]
pub struct Cli {
    /// Emit a JSON envelope instead of a table.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV (spectrum and tmatrix only).
    #[arg(long, global = true)]
    pub csv: bool,

    /// Refuse requests whose space F(d, l) has more basis elements than this.
    #[arg(long, global = true, default_value_t = 2000)]
    pub max_dim: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sorted eigenvalues of T on F(d, l) with their index sequences.
    Spectrum {
        d: usize,
        l: usize,
        /// Also print one eigenvector per eigenvalue.
        #[arg(long)]
        eigenvectors: bool,
    },
    /// The basis S(d, l) and the Young diagram of each element.
    Basis { d: usize, l: usize },
    /// The bihomogeneous function g(d, l) in the x-coordinates.
    Gpoly { d: usize, l: usize },
    /// Rewrite g(d1,l1) g(d2,l2) as a combination of regular pairs.
    Straighten { d1: usize, l1: usize, d2: usize, l2: usize },
    /// Hook numbers, leg numbers and leg increments of a partition, e.g. 7,7,5,4,3,2.
    Hooks { partition: String },
    /// Matrix of T on F(d, l).
    Tmatrix {
        d: usize,
        l: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Gbasis)]
        basis: BasisArg,
    },
    /// Run every structural check for all l <= d <= max-d.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_d: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Gbasis,
}

impl From<BasisArg> for BasisKind {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Monomial => BasisKind::Monomial,
            BasisArg::Gbasis => BasisKind::GBasis,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

/// Envelope for `--json` output. Field order is fixed by declaration order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope<P> {
    pub command: String,
    pub params: serde_json::Value,
    pub status: Status,
    pub result: Option<P>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub eigenvalue: u64,
    pub sequence: Vec<(usize, usize)>,
    pub diagram: Partition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigenvector: Option<EigenVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumPayload {
    pub bidegree: Bidegree,
    pub eigenvalues: Vec<u64>,
    pub dominant: u64,
    pub has_zero: bool,
    pub entries: Vec<SpectrumRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRow {
    pub product: GProduct,
    pub diagram: Partition,
    pub eigenvalue: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisPayload {
    pub bidegree: Bidegree,
    pub entries: Vec<BasisRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GPolyPayload {
    pub d: usize,
    pub l: usize,
    pub polynomial: Polynomial,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraightenPayload {
    pub input: Vec<(usize, usize)>,
    pub regular: bool,
    pub combination: GCombination,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HooksPayload {
    pub partition: Partition,
    pub boxes: Vec<DiagonalBox>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TMatrixPayload {
    pub bidegree: Bidegree,
    pub basis: BasisKind,
    pub labels: Vec<BasisLabel>,
    #[serde(with = "fraction_rows")]
    pub matrix: Vec<Vec<Rational>>,
    pub upper_triangular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub max_d: usize,
    pub passed: bool,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<CheckResult>,
}

mod fraction_rows {
    use super::*;
    use crate::rational::{parse_rational, to_fraction_string};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            rows.iter()
                .map(|r| r.iter().map(to_fraction_string).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Table,
    Json,
    Csv,
}

fn check_bidegree(d: usize, l: usize) -> Result<()> {
    if l == 0 || d < l {
        Err(Error::InvalidBidegree { d, len: l })
    } else {
        Ok(())
    }
}

fn check_size(d: usize, l: usize, limit: usize) -> Result<()> {
    let dim = count_partitions(d, l);
    if dim > limit as u128 {
        return Err(Error::TooLarge {
            d,
            len: l,
            dim: usize::try_from(dim).unwrap_or(usize::MAX),
            limit,
        });
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn sequence_text(seq: &[(usize, usize)]) -> String {
    seq.iter().map(|(d, l)| format!("({d},{l})")).collect()
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out`/`err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Table,
    };
    let outcome = match &cli.command {
        Command::Spectrum { d, l, eigenvectors } => {
            cmd_spectrum(*d, *l, *eigenvectors, cli.max_dim, format, out)
        }
        Command::Basis { d, l } => cmd_basis(*d, *l, cli.max_dim, format, out),
        Command::Gpoly { d, l } => cmd_gpoly(*d, *l, cli.max_dim, format, out),
        Command::Straighten { d1, l1, d2, l2 } => {
            cmd_straighten(*d1, *l1, *d2, *l2, cli.max_dim, format, out)
        }
        Command::Hooks { partition } => cmd_hooks(partition, format, out),
        Command::Tmatrix { d, l, basis } => cmd_tmatrix(*d, *l, (*basis).into(), cli.max_dim, format, out),
        Command::Verify { max_d } => cmd_verify(*max_d, cli.max_dim, format, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            if format == Format::Json {
                let envelope: ReportEnvelope<()> = ReportEnvelope {
                    command: command_name(&cli.command).into(),
                    params: command_params(&cli.command),
                    status: Status::Fail,
                    result: None,
                    error: Some(e.to_string()),
                };
                let _ = write_json(out, &envelope);
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Spectrum { .. } => "spectrum",
        Command::Basis { .. } => "basis",
        Command::Gpoly { .. } => "gpoly",
        Command::Straighten { .. } => "straighten",
        Command::Hooks { .. } => "hooks",
        Command::Tmatrix { .. } => "tmatrix",
        Command::Verify { .. } => "verify",
    }
}

fn command_params(c: &Command) -> serde_json::Value {
    use serde_json::json;
    match c {
        Command::Spectrum { d, l, eigenvectors } => json!({"d": d, "l": l, "eigenvectors": eigenvectors}),
        Command::Basis { d, l } | Command::Gpoly { d, l } => json!({"d": d, "l": l}),
        Command::Straighten { d1, l1, d2, l2 } => json!({"d1": d1, "l1": l1, "d2": d2, "l2": l2}),
        Command::Hooks { partition } => json!({"partition": partition}),
        Command::Tmatrix { d, l, basis } => {
            json!({"d": d, "l": l, "basis": BasisKind::from(*basis)})
        }
        Command::Verify { max_d } => json!({"max_d": max_d}),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Error::Internal(e.to_string()))
}

fn emit_ok<P: Serialize>(out: &mut dyn Write, command: &Command, payload: P) -> Result<()> {
    write_json(
        out,
        &ReportEnvelope {
            command: command_name(command).into(),
            params: command_params(command),
            status: Status::Ok,
            result: Some(payload),
            error: None,
        },
    )
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn csv_unsupported(command: &str) -> Error {
    Error::Parse(format!("--csv is available for spectrum and tmatrix, not {command}"))
}

pub fn spectrum_payload(d: usize, l: usize, eigenvectors: bool) -> Result<SpectrumPayload> {
    let report = spectrum(d, l)?;
    Ok(SpectrumPayload {
        bidegree: report.bidegree,
        eigenvalues: report.eigenvalues(),
        dominant: report.dominant,
        has_zero: report.has_zero,
        entries: report
            .entries
            .into_iter()
            .map(|e| SpectrumRow {
                eigenvalue: e.eigenvalue,
                sequence: e.sequence,
                diagram: e.diagram,
                eigenvector: eigenvectors.then_some(e.eigenvector),
            })
            .collect(),
    })
}

fn cmd_spectrum(d: usize, l: usize, eigenvectors: bool, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    check_bidegree(d, l)?;
    check_size(d, l, max_dim)?;
    let payload = spectrum_payload(d, l, eigenvectors)?;
    match format {
        Format::Json => emit_ok(out, &Command::Spectrum { d, l, eigenvectors }, &payload)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["eigenvalue", "sequence", "diagram"];
            if eigenvectors {
                header.push("eigenvector");
            }
            w.write_record(&header).map_err(|e| Error::Internal(e.to_string()))?;
            for row in &payload.entries {
                let mut rec = vec![
                    row.eigenvalue.to_string(),
                    sequence_text(&row.sequence),
                    row.diagram.to_string(),
                ];
                if let Some(v) = &row.eigenvector {
                    rec.push(v.polynomial.to_string());
                }
                w.write_record(&rec).map_err(|e| Error::Internal(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Table => {
            let values: Vec<String> = payload.eigenvalues.iter().map(u64::to_string).collect();
            writeln!(out, "spectrum of T on F({d},{l}): [{}]", values.join(", ")).map_err(io)?;
            writeln!(out, "{:>10}  {:<28}  diagram", "eigenvalue", "sequence").map_err(io)?;
            for row in &payload.entries {
                writeln!(out, "{:>10}  {:<28}  {}", row.eigenvalue, sequence_text(&row.sequence), row.diagram)
                    .map_err(io)?;
                if let Some(v) = &row.eigenvector {
                    writeln!(out, "{:>10}  eigenvector: {}", "", v.polynomial).map_err(io)?;
                }
            }
            writeln!(out, "dominant eigenvalue: {}", payload.dominant).map_err(io)?;
            writeln!(out, "zero eigenvalue: {}", if payload.has_zero { "yes" } else { "no" }).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn basis_payload(d: usize, l: usize) -> Result<BasisPayload> {
    let entries = s_basis(d, l)
        .into_iter()
        .map(|p| {
            let seq = p.pairs();
            Ok(BasisRow {
                diagram: profile_to_partition(&seq)?,
                eigenvalue: eigenvalue_of_sequence(&seq),
                product: p,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisPayload {
        bidegree: Bidegree::new(d, l),
        entries,
    })
}

fn cmd_basis(d: usize, l: usize, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    check_bidegree(d, l)?;
    check_size(d, l, max_dim)?;
    let payload = basis_payload(d, l)?;
    match format {
        Format::Json => emit_ok(out, &Command::Basis { d, l }, &payload)?,
        Format::Csv => return Err(csv_unsupported("basis")),
        Format::Table => {
            writeln!(out, "S({d},{l}): {} elements, greatest first", payload.entries.len()).map_err(io)?;
            for row in &payload.entries {
                writeln!(out, "{:<28}  {:<20}  eigenvalue {}", row.product.to_string(), row.diagram.to_string(), row.eigenvalue)
                    .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gpoly(d: usize, l: usize, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    check_size(d, l, max_dim)?;
    let polynomial = g_poly(d, l);
    let payload = GPolyPayload {
        d,
        l,
        text: polynomial.to_string(),
        polynomial,
    };
    match format {
        Format::Json => emit_ok(out, &Command::Gpoly { d, l }, &payload)?,
        Format::Csv => return Err(csv_unsupported("gpoly")),
        Format::Table => writeln!(out, "{}", payload.text).map_err(io)?,
    }
    Ok(EXIT_OK)
}

fn cmd_straighten(d1: usize, l1: usize, d2: usize, l2: usize, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    check_size(d1 + d2, l1 + l2, max_dim)?;
    let combination = straighten_pair(d1, l1, d2, l2)?;
    let payload = StraightenPayload {
        input: vec![(d1, l1), (d2, l2)],
        regular: is_regular_pair(d1, l1, d2, l2),
        text: combination.to_string(),
        combination,
    };
    match format {
        Format::Json => emit_ok(out, &Command::Straighten { d1, l1, d2, l2 }, &payload)?,
        Format::Csv => return Err(csv_unsupported("straighten")),
        Format::Table => {
            let note = if payload.regular { " (already regular)" } else { "" };
            writeln!(out, "g({d1},{l1})g({d2},{l2}) = {}{note}", payload.text).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_hooks(partition: &str, format: Format, out: &mut dyn Write) -> Result<i32> {
    let p: Partition = partition.parse()?;
    let profile = hook_leg_profile(&p)?;
    let payload = HooksPayload {
        partition: p.clone(),
        boxes: profile.boxes.clone(),
    };
    match format {
        Format::Json => emit_ok(out, &Command::Hooks { partition: partition.into() }, &payload)?,
        Format::Csv => return Err(csv_unsupported("hooks")),
        Format::Table => {
            let pairs: Vec<String> = profile.hook_leg_pairs().iter().map(|(d, q)| format!("({d},{q})")).collect();
            let incs: Vec<String> = profile.boxes.iter().map(|b| b.increment.to_string()).collect();
            writeln!(out, "partition {p}: d = {}, l = {}", p.size(), p.len()).map_err(io)?;
            writeln!(out, "hooks/legs: {}", pairs.join(",")).map_err(io)?;
            writeln!(out, "increments: {}", incs.join(",")).map_err(io)?;
            writeln!(out, "{}", p.young_diagram()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn tmatrix_payload(d: usize, l: usize, basis: BasisKind) -> Result<TMatrixPayload> {
    let m = t_matrix(d, l, basis)?;
    Ok(TMatrixPayload {
        bidegree: m.bidegree,
        basis,
        upper_triangular: m.matrix.is_upper_triangular(),
        labels: m.labels,
        matrix: m.matrix.to_rows(),
    })
}

fn cmd_tmatrix(d: usize, l: usize, basis: BasisKind, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    check_bidegree(d, l)?;
    check_size(d, l, max_dim)?;
    let payload = tmatrix_payload(d, l, basis)?;
    let labels: Vec<String> = payload.labels.iter().map(ToString::to_string).collect();
    match format {
        Format::Json => {
            let arg = match basis {
                BasisKind::Monomial => BasisArg::Monomial,
                BasisKind::GBasis => BasisArg::Gbasis,
            };
            emit_ok(out, &Command::Tmatrix { d, l, basis: arg }, &payload)?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec![String::new()];
            header.extend(labels.iter().cloned());
            w.write_record(&header).map_err(|e| Error::Internal(e.to_string()))?;
            for (label, row) in labels.iter().zip(&payload.matrix) {
                let mut rec = vec![label.clone()];
                rec.extend(row.iter().map(ToString::to_string));
                w.write_record(&rec).map_err(|e| Error::Internal(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Table => {
            let kind = match basis {
                BasisKind::Monomial => "monomial basis",
                BasisKind::GBasis => "basis S(d,l)",
            };
            writeln!(out, "T on F({d},{l}) in the {kind}; column j = T(basis_j)").map_err(io)?;
            let cells: Vec<Vec<String>> = payload
                .matrix
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let label_w = labels.iter().map(String::len).max().unwrap_or(0);
            let cell_w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            for (label, row) in labels.iter().zip(&cells) {
                let row: Vec<String> = row.iter().map(|c| format!("{c:>cell_w$}")).collect();
                writeln!(out, "{label:<label_w$}  [{}]", row.join(" ")).map_err(io)?;
            }
            if basis == BasisKind::GBasis {
                writeln!(out, "upper triangular: {}", if payload.upper_triangular { "yes" } else { "no" })
                    .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(max_d: usize, max_dim: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    if max_d == 0 {
        return Err(Error::Domain("--max-d must be at least 1".into()));
    }
    if format == Format::Csv {
        return Err(csv_unsupported("verify"));
    }
    for l in 1..=max_d {
        check_size(max_d, l, max_dim)?;
    }
    let report = verify::run(max_d);
    let payload = VerifyPayload {
        max_d,
        passed: report.all_passed(),
        checks: report.summaries,
        failures: report.failures,
    };
    match format {
        Format::Json => {
            let envelope = ReportEnvelope {
                command: "verify".into(),
                params: command_params(&Command::Verify { max_d }),
                status: if payload.passed { Status::Ok } else { Status::Fail },
                result: Some(&payload),
                error: None,
            };
            write_json(out, &envelope)?;
        }
        _ => {
            writeln!(out, "verification sweep for 1 <= l <= d <= {max_d}").map_err(io)?;
            for c in &payload.checks {
                let mark = if c.passed == c.total { "PASS" } else { "FAIL" };
                writeln!(out, "{mark}  {:<22} {}/{}", c.kind.name(), c.passed, c.total).map_err(io)?;
            }
            for f in &payload.failures {
                writeln!(
                    out,
                    "  failed {} on {}: {}",
                    f.kind.name(),
                    f.subject,
                    f.detail.as_deref().unwrap_or("")
                )
                .map_err(io)?;
            }
            writeln!(out, "{}", if payload.passed { "all checks passed" } else { "verification FAILED" })
                .map_err(io)?;
        }
    }
    Ok(if payload.passed { EXIT_OK } else { EXIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bihom").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gpoly_text() {
        let (code, out, _) = run_capture(&["gpoly", "4", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "x1*x3 + 1/2*x2^2");
    }

    #[test]
    fn straighten_text() {
        let (code, out, _) = run_capture(&["straighten", "2", "1", "2", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "g(2,1)g(2,1) = 2*g(4,2) - 2*g(3,1)g(1,1)");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["spectrum", "2", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["spectrum", "x", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["hooks", "1,2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--max-d", "0"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["gpoly", "4", "2", "--csv"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["spectrum", "30", "6", "--max-dim", "10"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--json", "--csv", "spectrum", "4", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn json_failure_envelope() {
        let (code, out, _) = run_capture(&["--json", "spectrum", "2", "3"]);
        assert_eq!(code, EXIT_USAGE);
        let env: ReportEnvelope<SpectrumPayload> = serde_json::from_str(&out).unwrap();
        assert_eq!(env.status, Status::Fail);
        assert!(env.result.is_none());
        assert!(env.error.unwrap().contains("invalid bidegree"));
    }
}
