//! `lefschetz`: Meyer signatures and separating-fiber bounds from the
//! command line.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde_json::Value;

use lefschetz_core::bounds::{check, check_data};
use lefschetz_core::fibration::{monodromy_image, sp_consistency};
use lefschetz_core::meyer::meyer_cocycle;
use lefschetz_core::scl::{commutator_count_lower, scl_lower};
use lefschetz_core::word::{parse_fibration_file, parse_flat_word, print_word};
use lefschetz_core::{Error, FibrationCounts, FibrationData, SclFlavor, SclQuery, Verdict};

use output::{rational, report_value, Envelope};

/// Integer inputs beyond this are rejected so the bound arithmetic stays
/// inside `i64`.
const MAX_INPUT: i64 = 1_000_000;
/// Largest fiber genus for commands that build `2h x 2h` matrices.
const MAX_MATRIX_GENUS: usize = 64;

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Meyer signatures and separating-fiber bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    /// Emit the JSON envelope instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Meyer cocycle of the homology images of two words.
    Meyer {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        format: Format,
    },
    /// Euler characteristic, signature over the disk and bounds for a fibration file.
    Signature {
        #[arg(long)]
        file: PathBuf,
        /// Exit with status 1 if the bounds rule the fibration out.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Bound report for the counts (g, h, s, n).
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        h: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Also check the bound for fibrations with Torelli monodromy.
        #[arg(long)]
        torelli: bool,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Lower bound on the stable commutator length of a separating twist power.
    Scl {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        /// full, hyperelliptic, torelli or torelli-refined.
        #[arg(long, default_value = "full")]
        flavor: String,
        /// Exponent k of t_a^k (full flavor only).
        #[arg(long, allow_negative_numbers = true, conflicts_with = "factors")]
        power: Option<i64>,
        /// Number s of separating twist factors (full flavor only).
        #[arg(long, allow_negative_numbers = true)]
        factors: Option<i64>,
        #[command(flatten)]
        format: Format,
    },
    /// Fewest commutators that can express t_a^k for a separating curve a.
    Commutators {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        #[arg(long, allow_negative_numbers = true)]
        power: i64,
        #[command(flatten)]
        format: Format,
    },
    /// Whether the disk monodromy equals the flat-part commutator product on homology.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        format: Format,
    },
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<lefschetz_core::ParseError> for Failure {
    fn from(e: lefschetz_core::ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Outcome {
    envelope: Envelope,
    json: bool,
    /// Set when `--strict` was given and the verdict is `NoSuchFibration`.
    rejected: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let text = if out.json { out.envelope.to_json() + "\n" } else { out.envelope.to_text() };
            print!("{text}");
            ExitCode::from(if out.rejected { 1 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn bounded(name: &str, v: i64) -> Result<i64, Failure> {
    if v.abs() > MAX_INPUT {
        return Err(Failure::Input(format!("{name} = {v} exceeds the supported range |{name}| <= {MAX_INPUT}")));
    }
    Ok(v)
}

fn matrix_genus(h: usize) -> Result<usize, Failure> {
    if h > MAX_MATRIX_GENUS {
        return Err(Failure::Input(format!("genus {h} exceeds the supported maximum {MAX_MATRIX_GENUS}")));
    }
    Ok(h)
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Meyer { genus, a, b, format } => meyer(genus, &a, &b, format.json),
        Command::Signature { file, strict, format } => signature(&file, strict, format.json),
        Command::Bounds { g, h, s, n, torelli, strict, format } => bounds(g, h, s, n, torelli, strict, format.json),
        Command::Scl { genus, flavor, power, factors, format } => scl(genus, &flavor, power.or(factors), format.json),
        Command::Commutators { genus, power, format } => commutators(genus, power, format.json),
        Command::Verify { file, strict, format } => verify(&file, strict, format.json),
    }
}

fn meyer(genus: usize, a: &str, b: &str, json: bool) -> Result<Outcome, Failure> {
    let h = matrix_genus(genus)?;
    let mut env = Envelope::new("meyer");
    env.input("genus", h);
    env.input("a", a);
    env.input("b", b);
    let wa = parse_flat_word(a, h).map_err(|e| Failure::Input(format!("--a: {e}")))?;
    let wb = parse_flat_word(b, h).map_err(|e| Failure::Input(format!("--b: {e}")))?;
    let v = meyer_cocycle(&monodromy_image(&wa)?, &monodromy_image(&wb)?)?;
    env.result("tau", v.value);
    env.result("dim_v", v.dim);
    env.result("positive", v.inertia.pos);
    env.result("null", v.inertia.zero);
    env.result("negative", v.inertia.neg);
    Ok(Outcome { envelope: env, json, rejected: false })
}

fn load(path: &PathBuf) -> Result<FibrationData, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file = parse_fibration_file(&text)?;
    matrix_genus(file.fiber_genus)?;
    bounded("base_genus", i64::try_from(file.base_genus).unwrap_or(i64::MAX))?;
    Ok(FibrationData::from_file(&file)?)
}

fn signature(path: &PathBuf, strict: bool, json: bool) -> Result<Outcome, Failure> {
    let data = load(path)?;
    let counts = data.counts();
    let mut env = Envelope::new("signature");
    env.input("file", path.display().to_string());
    let sigma = data.signature_over_disk()?;
    let (s, n) = (counts.separating, counts.nonseparating);
    env.result("h", counts.fiber_genus);
    env.result("g", counts.base_genus);
    env.result("s", s);
    env.result("n", n);
    env.result("euler_characteristic", counts.euler_characteristic());
    env.result("signature_over_disk", sigma);
    env.result(
        "ozbagci",
        serde_json::json!({ "relation": "sigma <= n - s", "lhs": sigma, "rhs": n - s, "satisfied": sigma <= n - s }),
    );
    let mut rejected = false;
    if counts.base_genus >= 1 && counts.fiber_genus >= 2 {
        let report = check_data(&data, false)?;
        rejected = strict && report.verdict == Verdict::NoSuchFibration;
        env.result("report", report_value(&report));
    } else {
        env.warn("bound report skipped: it needs base genus g >= 1 and fiber genus h >= 2");
    }
    Ok(Outcome { envelope: env, json, rejected })
}

#[allow(clippy::too_many_arguments)]
fn bounds(g: i64, h: i64, s: i64, n: i64, torelli: bool, strict: bool, json: bool) -> Result<Outcome, Failure> {
    let counts = FibrationCounts::new(bounded("g", g)?, bounded("h", h)?, bounded("s", s)?, bounded("n", n)?);
    let mut env = Envelope::new("bounds");
    env.input("g", g);
    env.input("h", h);
    env.input("s", s);
    env.input("n", n);
    env.input("torelli", torelli);
    let report = check(&counts, torelli)?;
    if report.betti.vacuous {
        env.warn("s = 0: the Betti number bounds only reflect the fiber class");
    }
    env.result("euler_characteristic", counts.euler_characteristic());
    env.result("report", report_value(&report));
    let rejected = strict && report.verdict == Verdict::NoSuchFibration;
    Ok(Outcome { envelope: env, json, rejected })
}

fn scl(genus: i64, flavor: &str, factors: Option<i64>, json: bool) -> Result<Outcome, Failure> {
    let genus = bounded("genus", genus)?;
    let flavor: SclFlavor = flavor.parse()?;
    let mut env = Envelope::new("scl");
    env.input("genus", genus);
    env.input("flavor", flavor.name());
    if let Some(k) = factors {
        env.input("factors", bounded("factors", k)?);
    }
    let mut query = SclQuery::new(genus, flavor);
    match (flavor, factors) {
        (SclFlavor::Full, k) => query.factors = Some(k.unwrap_or(1)),
        (_, Some(_)) => {
            return Err(Failure::Input(format!("--power/--factors only apply to the full flavor, not {flavor}")));
        }
        (_, None) => {}
    }
    let bound = scl_lower(&query)?;
    env.result("twist_power", query.twist_power()?);
    env.result("scl_lower", rational(bound));
    env.result("positive", bound > Ratio::from_integer(0));
    Ok(Outcome { envelope: env, json, rejected: false })
}

fn commutators(genus: i64, power: i64, json: bool) -> Result<Outcome, Failure> {
    let genus = bounded("genus", genus)?;
    let power = bounded("power", power)?;
    let mut env = Envelope::new("commutators");
    env.input("genus", genus);
    env.input("power", power);
    let count = commutator_count_lower(genus, power)?;
    env.result("commutators_lower", count);
    env.result("scl_lower", rational(scl_lower(&SclQuery::full(genus, power))?));
    Ok(Outcome { envelope: env, json, rejected: false })
}

fn verify(path: &PathBuf, strict: bool, json: bool) -> Result<Outcome, Failure> {
    let data = load(path)?;
    let mut env = Envelope::new("verify");
    env.input("file", path.display().to_string());
    let consistent = sp_consistency(&data)?;
    env.result("consistent", consistent);
    env.result(
        "flat",
        Value::Array(
            data.flat_pairs()
                .iter()
                .map(|(a, b)| Value::String(format!("[{}, {}]", print_word(a), print_word(b))))
                .collect(),
        ),
    );
    if !consistent {
        env.warn("disk monodromy differs from the flat-part commutator product on homology");
    }
    Ok(Outcome { envelope: env, json, rejected: strict && !consistent })
}
