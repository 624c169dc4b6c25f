//! `hochbv`: validate algebras, compute windowed homology, run identity checks,
//! derive coproducts from pairings and export operator matrices.
//!
//! Exit codes: 0 all pass, 1 a check failed, 2 configuration or parse error,
//! 3 a check needs a larger window.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use exactlinalg::{Field, Fp, Q};
use hochbv::checks::{check_identity, IdentityName};
use hochbv::schema::{AlgebraFile, FieldSpec};
use hochbv::{derive_open_from_closed, fixtures, CheckStatus, Complex, FrobeniusAlgebra, Level, Truncation, Word};
use serde::Serialize;

const DEFAULT_CAP: usize = 6;

#[derive(Parser)]
#[command(name = "hochbv", version, about = "Exact chain-level operations on Hochschild complexes of open Frobenius algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a level and the structural propositions.
    Validate {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "symmetric_open")]
        level: Level,
    },
    /// Homology dimensions of a window.
    Homology {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        window: Window,
    },
    /// Run identities exhaustively on a window.
    Check {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        window: Window,
        /// Comma-separated identity ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        identities: Vec<String>,
    },
    /// Solve for the coproduct of a closed Frobenius algebra.
    DeriveCoproduct {
        #[command(flatten)]
        io: Io,
    },
    /// Write operator matrices in coordinate format.
    Export {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        window: Window,
        #[arg(long, value_delimiter = ',', default_value = "d,b")]
        ops: Vec<ExportOp>,
    },
}

#[derive(Args)]
struct Io {
    /// Algebra file, or the name of a shipped fixture.
    algebra: String,
    /// `Q` or `Fp:<p>`; defaults to the field named in the file.
    #[arg(long)]
    field: Option<String>,
    /// Directory for report files; reports go to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Window {
    #[arg(long, default_value_t = 3)]
    max_length: usize,
    #[arg(long, allow_hyphen_values = true)]
    max_degree: Option<i64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportOp {
    D,
    B,
}

/// Prime fields reachable from `--field`.
const PRIMES: [u64; 5] = [2, 3, 5, 7, 65521];

macro_rules! with_field {
    ($spec:expr, $run:ident ( $($arg:expr),* )) => {
        match $spec {
            FieldSpec::Named(s) if s == "Q" => $run::<Q>($($arg),*),
            FieldSpec::Prime { fp: 2 } => $run::<Fp<2>>($($arg),*),
            FieldSpec::Prime { fp: 3 } => $run::<Fp<3>>($($arg),*),
            FieldSpec::Prime { fp: 5 } => $run::<Fp<5>>($($arg),*),
            FieldSpec::Prime { fp: 7 } => $run::<Fp<7>>($($arg),*),
            FieldSpec::Prime { fp: 65521 } => $run::<Fp<65521>>($($arg),*),
            other => Err(anyhow!("unsupported field {}; supported: Q and Fp:p for p in {:?}", other.label(), PRIMES)),
        }
    };
}

/// Loaded input: the parsed file, a display name and the field to compute over.
struct Input {
    file: AlgebraFile,
    name: String,
    field: FieldSpec,
}

fn load(io: &Io, closed: bool) -> Result<Input> {
    let path = Path::new(&io.algebra);
    let (text, name) = if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let name = path.file_stem().map_or(io.algebra.clone(), |s| s.to_string_lossy().into_owned());
        (text, name)
    } else {
        let shipped = if closed { fixtures::closed_json(&io.algebra) } else { fixtures::json(&io.algebra) };
        let text = shipped.ok_or_else(|| anyhow!("{:?} is neither a file nor a shipped fixture", io.algebra))?;
        (text.to_string(), io.algebra.clone())
    };
    let file = AlgebraFile::from_json(&text).with_context(|| format!("parsing {}", io.algebra))?;
    let field = match &io.field {
        Some(s) => FieldSpec::parse(s).ok_or_else(|| anyhow!("cannot parse field {s:?}"))?,
        None => file.field.clone(),
    };
    Ok(Input { file, name, field })
}

fn truncation(w: &Window, field: &FieldSpec) -> Result<Truncation> {
    let cap = match std::env::var("HOCHBV_MAX_LENGTH") {
        Ok(v) => v.parse().with_context(|| format!("HOCHBV_MAX_LENGTH={v:?}"))?,
        Err(_) => DEFAULT_CAP,
    };
    if w.max_length > cap {
        bail!("--max-length {} exceeds the cap {cap} (set HOCHBV_MAX_LENGTH to raise it)", w.max_length);
    }
    if let FieldSpec::Prime { fp } = field {
        if *fp as usize <= w.max_length {
            eprintln!("warning: p = {fp} ≤ max length {}; results may differ from characteristic 0", w.max_length);
        }
    }
    let t = Truncation::new(w.max_length);
    Ok(match w.max_degree {
        Some(d) => t.with_max_degree(d),
        None => t,
    })
}

/// Writes `text` to `<out>/<file>` or to stdout.
fn emit(out: &Option<PathBuf>, file: &str, text: &str) -> Result<()> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let p = dir.join(file);
            std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn algebra<F: Field>(input: &Input) -> Result<FrobeniusAlgebra<F>> {
    input.file.to_algebra::<F>().with_context(|| format!("building {}", input.name))
}

#[derive(Serialize)]
struct ValidateOut<'a> {
    algebra: &'a str,
    field: String,
    level: Level,
    passed: bool,
    axioms: hochbv::ValidationReport,
    propositions: hochbv::ValidationReport,
}

fn validate<F: Field>(input: &Input, level: Level, out: &Option<PathBuf>) -> Result<u8> {
    let a = algebra::<F>(input)?;
    let axioms = a.validate(level);
    let propositions = a.check_propositions();
    let passed = axioms.passed() && propositions.passed();
    let report = ValidateOut { algebra: &input.name, field: F::label(), level, passed, axioms, propositions };
    emit(out, "validate.json", &json(&report))?;
    Ok(if passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct HomologyOut<'a> {
    algebra: &'a str,
    #[serde(flatten)]
    profile: hochbv::hochschild::HomologyProfile,
}

fn homology<F: Field>(input: &Input, t: Truncation, out: &Option<PathBuf>) -> Result<u8> {
    let a = algebra::<F>(input)?;
    let t0 = Instant::now();
    let profile = Complex::new(&a).homology(&t);
    eprintln!("homology {} L={} {:.2?}", input.name, t.max_length, t0.elapsed());
    emit(out, "homology.json", &json(&HomologyOut { algebra: &input.name, profile }))?;
    Ok(0)
}

#[derive(Serialize)]
struct Skipped {
    identity: &'static str,
    reason: String,
}

#[derive(Serialize)]
struct CheckOut<'a> {
    algebra: &'a str,
    field: String,
    window: Truncation,
    reports: Vec<hochbv::IdentityReport>,
    skipped: Vec<Skipped>,
}

fn selection(names: &[String]) -> Result<(Vec<IdentityName>, bool)> {
    if names.iter().any(|n| n == "all") {
        return Ok((IdentityName::ALL.to_vec(), true));
    }
    let ids = names.iter().map(|n| n.parse::<IdentityName>()).collect::<Result<Vec<_>, _>>()?;
    Ok((ids, false))
}

fn check<F: Field>(input: &Input, t: Truncation, names: &[String], out: &Option<PathBuf>) -> Result<u8> {
    let a = algebra::<F>(input)?;
    let (ids, all) = selection(names)?;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for id in ids {
        let t0 = Instant::now();
        match check_identity(&a, &input.name, id, &t) {
            Ok(r) => {
                eprintln!("{:<16} {:?} ({} inputs) {:.2?}", id.name(), r.status, r.inputs, t0.elapsed());
                reports.push(r);
            }
            Err(e) if all => skipped.push(Skipped { identity: id.name(), reason: e.to_string() }),
            Err(e) => return Err(anyhow!(e).context(format!("identity {id} does not apply to {}", input.name))),
        }
    }
    let code = if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        1
    } else if reports.iter().any(|r| r.status == CheckStatus::NeedsLargerWindow) {
        3
    } else {
        0
    };
    emit(out, "check.json", &json(&CheckOut { algebra: &input.name, field: F::label(), window: t, reports, skipped }))?;
    Ok(code)
}

fn derive<F: Field>(input: &Input, out: &Option<PathBuf>) -> Result<u8> {
    let closed = input.file.to_closed::<F>()?;
    let a = derive_open_from_closed(closed).with_context(|| format!("deriving the coproduct of {}", input.name))?;
    emit(out, "derived.json", &AlgebraFile::from_algebra(&a, input.field.clone()).to_json())?;
    Ok(0)
}

fn export<F: Field>(input: &Input, t: Truncation, ops: &[ExportOp], out: &Option<PathBuf>) -> Result<u8> {
    let a = algebra::<F>(input)?;
    let c = Complex::new(&a);
    let domain = c.enumerate_words(&Truncation::new(t.max_length));
    let codomain = c.enumerate_words(&Truncation::new(t.max_length + 1));
    let mut basis = String::new();
    for (i, w) in codomain.iter().enumerate() {
        let _ = writeln!(basis, "{i} {} {}", c.degree(w), c.word_name(w));
    }
    emit(out, "basis.txt", &basis)?;
    for op in ops {
        let f = |w: &Word| match op {
            ExportOp::D => c.d(w),
            ExportOp::B => c.b(w),
        };
        let mat = c.operator_matrix(&domain, &codomain, f)?;
        let mut text = format!("# {op:?} rows {} cols {} field {}\n", codomain.len(), domain.len(), F::label());
        for (i, j, v) in mat.triplets() {
            let _ = writeln!(text, "{i} {j} {}", v.to_ratio_string());
        }
        emit(out, &format!("{op:?}.txt"), &text)?;
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate { io, level } => {
            let input = load(&io, false)?;
            with_field!(&input.field, validate(&input, level, &io.out))
        }
        Command::Homology { io, window } => {
            let input = load(&io, false)?;
            let t = truncation(&window, &input.field)?;
            with_field!(&input.field, homology(&input, t, &io.out))
        }
        Command::Check { io, window, identities } => {
            let input = load(&io, false)?;
            let t = truncation(&window, &input.field)?;
            with_field!(&input.field, check(&input, t, &identities, &io.out))
        }
        Command::DeriveCoproduct { io } => {
            let input = load(&io, true)?;
            with_field!(&input.field, derive(&input, &io.out))
        }
        Command::Export { io, window, ops } => {
            let input = load(&io, false)?;
            let t = truncation(&window, &input.field)?;
            with_field!(&input.field, export(&input, t, &ops, &io.out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_table_is_prime() {
        assert!(PRIMES.iter().all(|&p| exactlinalg::is_prime(p)));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
