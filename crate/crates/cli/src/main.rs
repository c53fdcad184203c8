//! `rimwalk`: scriptable front end for the border-strip walk library.
//!
//! Every subcommand writes its data to stdout in one of three formats
//! (`--format json`, `tsv`, or the default `pretty`) and keeps diagnostics
//! on stderr, so output can be piped safely. JSON output is byte-identical
//! across runs for identical arguments.
//!
//! Exit codes: 0 on success, 1 when a verification sweep or conjecture scan
//! finds a mismatch, 2 on usage or precondition errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rimwalk_core::{
    check_conjectures, dimension_poly_shifted, enumerate_partitions, going_around, mn_character,
    verify_centralizer_split, verify_closed_form, verify_column_orthogonality,
    verify_decomposition, verify_identities, verify_matrix_form, CharacterTable, ConjectureLine,
    GoingAround, IntPolynomial, Partition, RangeChecked, VerificationReport, VirtualCharacter,
};

#[derive(Parser)]
#[command(
    name = "rimwalk",
    version,
    about = "Exact symmetric-group character arithmetic on border-strip walks",
    propagate_version = true
)]
struct Cli {
    /// Output format for the data stream.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Worker threads for verification sweeps (0 = one per core). The
    /// default single worker keeps timings reproducible.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of `n` in canonical order, one per line.
    Partitions {
        /// Size to partition.
        n: usize,
    },

    /// Evaluate the irreducible character of shape `--lambda` on the
    /// conjugacy class `--mu` (both partitions of the same size).
    Char {
        /// Shape, as comma-separated parts (e.g. `3,1`) or `empty`.
        #[arg(long)]
        lambda: String,
        /// Class, in the same notation.
        #[arg(long)]
        mu: String,
    },

    /// Print the character table of the symmetric group on `k` letters,
    /// shapes down the rows and classes across the columns.
    Table {
        /// Group size.
        k: usize,
    },

    /// Build the signed virtual character around `--nu` at size `--n`; with
    /// `--mu`, evaluate it on that class instead of listing its terms.
    Psi {
        /// Inner shape the walk goes around.
        #[arg(long)]
        nu: String,
        /// Total size of the walk stations.
        #[arg(long)]
        n: usize,
        /// Class of `n` to evaluate on.
        #[arg(long)]
        mu: Option<String>,
    },

    /// List the border-strip walk around `--nu` at size `--n`: each station
    /// with its strip height, width, and length.
    GoingAround {
        /// Inner shape the walk goes around.
        #[arg(long)]
        nu: String,
        /// Total size of the walk stations.
        #[arg(long)]
        n: usize,
    },

    /// Run a verification sweep and report every mismatch (exit 1 if any).
    Verify {
        /// What to verify.
        target: VerifyTarget,
        /// Inner size for the sweeps that take one.
        #[arg(long)]
        k: Option<usize>,
        /// Station size for the sweeps that take one.
        #[arg(long)]
        n: Option<usize>,
        /// Upper size bound for the `identities` sweep.
        #[arg(long)]
        n_max: Option<usize>,
    },

    /// Scan the single-cell walk polynomial conjectures over a size range,
    /// one observation per line (exit 1 if any size deviates).
    Conjectures {
        /// Smallest size to scan (at least 4).
        #[arg(long, default_value_t = 4)]
        n_lo: usize,
        /// Largest size to scan.
        #[arg(long)]
        n_hi: usize,
    },

    /// Print the dimension generating polynomial of the walk around `--nu`
    /// at size `--n`, with its multiplicity and quotient at `t = -1`.
    Poly {
        /// Inner shape the walk goes around.
        #[arg(long)]
        nu: String,
        /// Total size of the walk stations.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    /// Closed form of the virtual character on every class (`--k`, `--n`).
    Theorem,
    /// Glued-class contraction against the station expansion (`--k`, `--n`).
    Decomposition,
    /// Virtual characters on glued classes reproduce the size-`k` table
    /// scaled by `n - k` (`--k`, `--n`).
    Matrix,
    /// Exact column orthogonality of the size-`k` character table (`--k`).
    Orthogonality,
    /// Centralizer orders of glued classes factor through the inner class
    /// (`--k`, `--n`).
    Centralizer,
    /// Dimension-sum identities and the middle-station recurrence up to
    /// `--n-max`.
    Identities,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // A failure here means a pool already exists, which is equally fine.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Executes one subcommand. `Ok(true)` means success, `Ok(false)` means a
/// sweep completed but found mismatches (exit 1), `Err` is a usage or
/// precondition problem (exit 2).
fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Partitions { n } => cmd_partitions(*n, cli.format),
        Command::Char { lambda, mu } => cmd_char(lambda, mu, cli.format),
        Command::Table { k } => cmd_table(*k, cli.format),
        Command::Psi { nu, n, mu } => cmd_psi(nu, *n, mu.as_deref(), cli.format),
        Command::GoingAround { nu, n } => cmd_going_around(nu, *n, cli.format),
        Command::Verify { target, k, n, n_max } => {
            cmd_verify(*target, *k, *n, *n_max, cli.format)
        }
        Command::Conjectures { n_lo, n_hi } => cmd_conjectures(*n_lo, *n_hi, cli.format),
        Command::Poly { nu, n } => cmd_poly(nu, *n, cli.format),
    }
}

fn parse_partition(text: &str, flag: &str) -> Result<Partition, String> {
    text.parse::<Partition>().map_err(|_| {
        format!(
            "--{flag} wants comma-separated parts in weakly decreasing order \
             (e.g. `3,1`) or `empty`, got `{text}`"
        )
    })
}

/// Unwraps a range-gated result, turning the out-of-range case into the
/// standard precondition message.
fn require_clean_regime<T>(outcome: RangeChecked<T>) -> Result<T, String> {
    match outcome {
        RangeChecked::Checked(value) => Ok(value),
        RangeChecked::OutOfRange { k, n, required } => Err(format!(
            "this sweep requires n >= 2k + 2: k = {k} needs n >= {required}, got n = {n}"
        )),
    }
}

fn cmd_partitions(n: usize, format: Format) -> Result<bool, String> {
    let all = enumerate_partitions(n);
    for p in &all {
        match format {
            Format::Json | Format::Pretty => {
                println!("{}", serde_json::to_string(p).expect("array of integers"))
            }
            Format::Tsv => println!("{}", p.to_compact_string()),
        }
    }
    Ok(true)
}

fn cmd_char(lambda: &str, mu: &str, format: Format) -> Result<bool, String> {
    let lambda = parse_partition(lambda, "lambda")?;
    let mu = parse_partition(mu, "mu")?;
    let value = mn_character(&lambda, &mu).map_err(|e| e.to_string())?;
    match format {
        Format::Pretty => println!("{value}"),
        Format::Json => println!(
            "{}",
            json!({ "lambda": lambda, "mu": mu, "value": value })
        ),
        Format::Tsv => println!(
            "{}\t{}\t{}",
            lambda.to_compact_string(),
            mu.to_compact_string(),
            value
        ),
    }
    Ok(true)
}

fn cmd_table(k: usize, format: Format) -> Result<bool, String> {
    let table = CharacterTable::build(k).map_err(|e| e.to_string())?;
    let orthogonality = verify_column_orthogonality(k).map_err(|e| e.to_string())?;
    let status = if orthogonality.passed() { "pass" } else { "fail" };
    match format {
        Format::Tsv => print!("{}", ensure_trailing_newline(table.to_tsv())),
        Format::Json => {
            let mut document =
                serde_json::to_value(&table).expect("table serialization is infallible");
            document
                .as_object_mut()
                .expect("table serializes to an object")
                .insert("orthogonality".to_string(), json!(status));
            println!("{document}");
        }
        Format::Pretty => print_aligned_table(&table),
    }
    if !orthogonality.passed() {
        eprintln!("warning: column orthogonality FAILED at size {k}");
    }
    Ok(orthogonality.passed())
}

/// Pretty-prints the table with right-aligned value columns.
fn print_aligned_table(table: &CharacterTable) {
    let labels: Vec<String> = table
        .order()
        .iter()
        .map(Partition::to_compact_string)
        .collect();
    let corner = "shape/class";
    let row_width = labels
        .iter()
        .map(String::len)
        .chain([corner.len()])
        .max()
        .unwrap_or(0);
    let col_widths: Vec<usize> = labels
        .iter()
        .enumerate()
        .map(|(j, label)| {
            (0..labels.len())
                .map(|i| table.value(i, j).to_string().len())
                .chain([label.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut header = format!("{corner:<row_width$}");
    for (label, width) in labels.iter().zip(&col_widths) {
        header.push_str(&format!("  {label:>width$}"));
    }
    println!("{header}");
    for (i, label) in labels.iter().enumerate() {
        let mut row = format!("{label:<row_width$}");
        for (j, width) in col_widths.iter().enumerate() {
            row.push_str(&format!("  {:>width$}", table.value(i, j)));
        }
        println!("{row}");
    }
}

fn ensure_trailing_newline(mut text: String) -> String {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn cmd_psi(nu: &str, n: usize, mu: Option<&str>, format: Format) -> Result<bool, String> {
    let nu = parse_partition(nu, "nu")?;
    let psi = VirtualCharacter::build(&nu, n).map_err(|e| e.to_string())?;
    if !psi.in_clean_regime() {
        eprintln!(
            "warning: n = {n} is below the clean regime n >= {} for |nu| = {}; \
             station heights repeat and the walk is ambiguous",
            2 * psi.k() + 2,
            psi.k()
        );
    }
    match mu {
        Some(mu) => {
            let mu = parse_partition(mu, "mu")?;
            let value = psi.eval(&mu).map_err(|e| e.to_string())?;
            match format {
                Format::Pretty => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({ "nu": psi.nu(), "n": n, "mu": mu, "value": value })
                ),
                Format::Tsv => println!(
                    "{}\t{}\t{}\t{}",
                    psi.nu().to_compact_string(),
                    n,
                    mu.to_compact_string(),
                    value
                ),
            }
        }
        None => match format {
            Format::Pretty => {
                for term in psi.terms() {
                    let sign = if term.sign > 0 { '+' } else { '-' };
                    println!("{sign} {}", term.shape);
                }
            }
            Format::Json => println!(
                "{}",
                serde_json::to_string(&psi).expect("virtual character serialization")
            ),
            Format::Tsv => {
                for term in psi.terms() {
                    println!("{:+}\t{}", term.sign, term.shape.to_compact_string());
                }
            }
        },
    }
    Ok(true)
}

fn cmd_going_around(nu: &str, n: usize, format: Format) -> Result<bool, String> {
    let nu = parse_partition(nu, "nu")?;
    let walk = going_around(&nu, n).map_err(|e| e.to_string())?;
    if walk.ambiguous() {
        eprintln!(
            "warning: n = {n} is below the clean regime n >= {} for |nu| = {}; \
             some stations share a strip height",
            2 * nu.size() + 2,
            nu.size()
        );
    }
    match format {
        Format::Pretty => {
            for (i, strip) in walk.strips().iter().enumerate() {
                println!(
                    "{}: {}  [height {}, width {}, length {}]",
                    i + 1,
                    strip.outer(),
                    strip.height(),
                    strip.width(),
                    strip.length()
                );
            }
        }
        Format::Json => println!("{}", walk_json(&walk)),
        Format::Tsv => {
            println!("outer\theight\twidth\tlength");
            for strip in walk.strips() {
                println!(
                    "{}\t{}\t{}\t{}",
                    strip.outer().to_compact_string(),
                    strip.height(),
                    strip.width(),
                    strip.length()
                );
            }
        }
    }
    Ok(true)
}

fn walk_json(walk: &GoingAround) -> serde_json::Value {
    json!({
        "nu": walk.nu(),
        "n": walk.n(),
        "ambiguous": walk.ambiguous(),
        "strips": walk.strips(),
    })
}

fn cmd_verify(
    target: VerifyTarget,
    k: Option<usize>,
    n: Option<usize>,
    n_max: Option<usize>,
    format: Format,
) -> Result<bool, String> {
    let need = |flag: Option<usize>, name: &str| {
        flag.ok_or_else(|| format!("verify {} requires --{name}", target_name(target)))
    };
    match target {
        VerifyTarget::Theorem | VerifyTarget::Decomposition | VerifyTarget::Matrix => {
            let k = need(k, "k")?;
            let n = need(n, "n")?;
            eprintln!("verifying {} at k = {k}, n = {n}", target_name(target));
            let sweep = match target {
                VerifyTarget::Theorem => verify_closed_form(k, n),
                VerifyTarget::Decomposition => verify_decomposition(k, n),
                _ => verify_matrix_form(k, n),
            };
            let report = require_clean_regime(sweep.map_err(|e| e.to_string())?)?;
            print_verification_report(target, &report, format);
            Ok(report.passed())
        }
        VerifyTarget::Orthogonality => {
            let k = need(k, "k")?;
            eprintln!("verifying column orthogonality at size {k}");
            let report = verify_column_orthogonality(k).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serialization")
                ),
                Format::Tsv => println!(
                    "orthogonality\t{}\t{}\t{}",
                    k,
                    report.pairs_checked,
                    if report.passed() { "pass" } else { "fail" }
                ),
                Format::Pretty => {
                    println!(
                        "column orthogonality at size {k}: {} pairs checked, {}",
                        report.pairs_checked,
                        if report.passed() { "all exact" } else { "MISMATCH" }
                    );
                    if let Some((a, b)) = &report.offending {
                        println!("  columns {a} and {b} deviate");
                    }
                }
            }
            Ok(report.passed())
        }
        VerifyTarget::Centralizer => {
            let k = need(k, "k")?;
            let n = need(n, "n")?;
            eprintln!("verifying centralizer factorization at k = {k}, n = {n}");
            let report = require_clean_regime(verify_centralizer_split(k, n))?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serialization")
                ),
                Format::Tsv => println!(
                    "centralizer\t{}\t{}\t{}\t{}",
                    report.k,
                    report.n,
                    report.checked,
                    report.mismatches.len()
                ),
                Format::Pretty => {
                    println!(
                        "centralizer factorization at k = {k}, n = {n}: {} classes checked, \
                         {} mismatches",
                        report.checked,
                        report.mismatches.len()
                    );
                    for m in &report.mismatches {
                        println!("  class {}: {} != {}", m.nu, m.glued, m.split);
                    }
                }
            }
            Ok(report.passed())
        }
        VerifyTarget::Identities => {
            let n_max =
                n_max.ok_or_else(|| "verify identities requires --n-max".to_string())?;
            eprintln!("verifying dimension identities through n = {n_max}");
            let report = verify_identities(n_max).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serialization")
                ),
                Format::Tsv => println!(
                    "identities\t{}\t{}\t{}",
                    n_max,
                    report.checked,
                    report.mismatches.len()
                ),
                Format::Pretty => {
                    println!(
                        "identities through n = {n_max}: {} checks, {} mismatches",
                        report.checked,
                        report.mismatches.len()
                    );
                    for m in &report.mismatches {
                        println!("  {} at n = {}: {} != {}", m.identity, m.n, m.lhs, m.rhs);
                    }
                }
            }
            Ok(report.passed())
        }
    }
}

fn target_name(target: VerifyTarget) -> &'static str {
    match target {
        VerifyTarget::Theorem => "theorem",
        VerifyTarget::Decomposition => "decomposition",
        VerifyTarget::Matrix => "matrix",
        VerifyTarget::Orthogonality => "orthogonality",
        VerifyTarget::Centralizer => "centralizer",
        VerifyTarget::Identities => "identities",
    }
}

fn print_verification_report(target: VerifyTarget, report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(report).expect("report serialization")
        ),
        Format::Tsv => println!(
            "{}\t{}\t{}\t{}\t{}",
            target_name(target),
            report.k,
            report.n,
            report.checked,
            report.mismatches.len()
        ),
        Format::Pretty => {
            println!(
                "{} at k = {}, n = {}: {} checks, {} mismatches",
                target_name(target),
                report.k,
                report.n,
                report.checked,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                println!("  nu = {}, mu = {}: {} != {}", m.nu, m.mu, m.lhs, m.rhs);
            }
        }
    }
}

fn cmd_conjectures(n_lo: usize, n_hi: usize, format: Format) -> Result<bool, String> {
    let lines = check_conjectures(n_lo, n_hi).map_err(|e| e.to_string())?;
    let mut clean = true;
    for line in &lines {
        print_conjecture_line(line, format);
        if !line.meets_expectations() {
            clean = false;
            eprintln!("finding: n = {} deviates from the conjectured pattern", line.n);
        }
    }
    Ok(clean)
}

fn print_conjecture_line(line: &ConjectureLine, format: Format) {
    let q = line
        .q_at_minus1
        .as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(line).expect("line serialization")
        ),
        Format::Tsv => println!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            line.n, line.multiplicity, q, line.positive, line.unimodal, line.palindromic
        ),
        Format::Pretty => println!(
            "n = {:2}: multiplicity {} q(-1) {:>2} positive {} unimodal {} palindromic {}",
            line.n, line.multiplicity, q, line.positive, line.unimodal, line.palindromic
        ),
    }
}

fn cmd_poly(nu: &str, n: usize, format: Format) -> Result<bool, String> {
    let nu = parse_partition(nu, "nu")?;
    let poly = dimension_poly_shifted(&nu, n).map_err(|e| e.to_string())?;
    let (multiplicity, quotient) = poly
        .root_multiplicity_at_minus_1()
        .expect("dimension polynomials are nonzero");
    match format {
        Format::Pretty => {
            println!("{poly}");
            println!("multiplicity at t = -1: {multiplicity}");
            println!("quotient: {quotient}");
        }
        Format::Json => println!(
            "{}",
            json!({
                "nu": nu,
                "n": n,
                "polynomial": poly,
                "multiplicity": multiplicity,
                "quotient": quotient,
            })
        ),
        Format::Tsv => {
            println!("polynomial\t{}", coeff_row(&poly));
            println!("multiplicity\t{multiplicity}");
            println!("quotient\t{}", coeff_row(&quotient));
        }
    }
    Ok(true)
}

/// Ascending coefficients as a comma-separated cell.
fn coeff_row(poly: &IntPolynomial) -> String {
    poly.coefficients()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
