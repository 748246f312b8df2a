//! `seidel`: build conference matrices, inspect spectra, test switching
//! equivalence and explore principal submatrices.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 negative
//! verdict (`equiv` only).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use seidel_core::explore::render_classification;
use seidel_core::{
    are_equivalent, char_poly, classify_orders, explore, paley_conference_for_prime,
    ClassifyOptions, ConferenceMatrix, ExplorationTask, PaleyError, SeidelMatrix, DEFAULT_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "seidel",
    version,
    about = "Seidel and conference matrix toolkit"
)]
struct Cli {
    /// Print extra progress information to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the symmetric Paley conference matrix of order p+1.
    Paley {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the characteristic polynomial and spectral facts of a matrix.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also check whether the polynomial is (x^2 - (n-1))^(n/2).
        #[arg(long)]
        certify_conference: bool,
    },
    /// Decide switching equivalence of two matrices.
    Equiv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Classify the principal k-submatrices of a conference matrix.
    Explore(ExploreArgs),
    /// Summarize every submatrix order of a conference matrix.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug)]
struct SourceArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Accept sources that are not conference matrices.
    #[arg(long)]
    allow_noncc: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Attach canonical switching-class keys and count distinct classes.
    #[arg(long)]
    dedupe: bool,
}

#[derive(Args, Debug)]
struct ExploreArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    k: usize,
    /// Draw this many distinct subsets instead of enumerating all of them.
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    /// Maximum number of subsets for exhaustive runs.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Ignore the cap.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Subsets drawn for orders above the cap.
    #[arg(long, default_value_t = 1000)]
    sample: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A failed command, carrying its exit status.
#[derive(Debug)]
enum Failure {
    Io(String),
    Invalid(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Invalid(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Invalid(m) => m,
        }
    }
}

fn read_matrix(path: &Path) -> Result<SeidelMatrix, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    SeidelMatrix::parse(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_source(args: &SourceArgs) -> Result<SeidelMatrix, Failure> {
    let s = read_matrix(&args.input)?;
    if !args.allow_noncc {
        ConferenceMatrix::new(s.clone()).map_err(|e| {
            Failure::Invalid(format!(
                "{}: not a conference matrix: {e} (pass --allow-noncc to explore anyway)",
                args.input.display()
            ))
        })?;
    }
    Ok(s)
}

fn cmd_paley(prime: u64, out: &Path) -> Result<u8, Failure> {
    let c = paley_conference_for_prime(prime).map_err(|e| match e {
        PaleyError::Field(f) => Failure::Invalid(f.to_string()),
        other => Failure::Invalid(other.to_string()),
    })?;
    write_file(out, c.matrix().render().as_bytes())?;
    println!(
        "wrote order-{} conference matrix to {} (C C^T = {} I verified)",
        c.order(),
        out.display(),
        prime
    );
    Ok(0)
}

fn cmd_spectrum(input: &Path, certify: bool) -> Result<u8, Failure> {
    let s = read_matrix(input)?;
    let p = char_poly(&s);
    let summary = p.summary();
    println!("order: {}", s.order());
    println!("charpoly: {}", p.render());
    println!("determinant: {}", summary.det);
    println!("symmetric: {}", summary.is_symmetric);
    println!(
        "zero multiplicity: {}",
        summary.eigenvalue_zero_multiplicity
    );
    println!("distinct eigenvalues: {}", summary.distinct_roots());
    for interval in &summary.interval_counts {
        println!("eigenvalues in {interval}");
    }
    if certify {
        println!(
            "certified conference spectrum: {}",
            p.certify_conference_spectrum(s.order())
        );
    }
    Ok(0)
}

fn cmd_equiv(a: &Path, b: &Path) -> Result<u8, Failure> {
    let ma = read_matrix(a)?;
    let mb = read_matrix(b)?;
    if ma.order() != mb.order() {
        return Err(Failure::Invalid(format!(
            "order mismatch: {} has order {}, {} has order {}",
            a.display(),
            ma.order(),
            b.display(),
            mb.order()
        )));
    }
    if are_equivalent(&ma, &mb) {
        println!("equivalent");
        Ok(0)
    } else {
        println!("not equivalent");
        Ok(3)
    }
}

fn cmd_explore(args: &ExploreArgs, verbose: u8) -> Result<u8, Failure> {
    let source = read_source(&args.source)?;
    let mut task = ExplorationTask::with_any_source(source, args.k)
        .dedupe(args.source.dedupe)
        .threads(args.source.threads)
        .cap(if args.force { u64::MAX } else { args.cap });
    if let (Some(count), Some(seed)) = (args.sample, args.seed) {
        task = task.sample(count, seed);
    }
    if verbose > 0 {
        eprintln!("exploring k={} ...", args.k);
    }
    let report = explore(&task).map_err(|e| Failure::Invalid(e.to_string()))?;
    let mut csv = Vec::new();
    report
        .write_csv(&mut csv)
        .map_err(|e| Failure::Io(e.to_string()))?;
    write_file(&args.out, &csv)?;
    print!("{}", report.summary());
    Ok(0)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<u8, Failure> {
    let source = read_source(&args.source)?;
    let options = ClassifyOptions {
        cap: args.cap,
        sample_count: args.sample,
        seed: args.seed,
        dedupe: args.source.dedupe,
        threads: args.source.threads,
    };
    let rows = classify_orders(&source, &options).map_err(|e| Failure::Invalid(e.to_string()))?;
    print!("{}", render_classification(&rows));
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Paley { prime, out } => cmd_paley(*prime, out),
        Command::Spectrum {
            input,
            certify_conference,
        } => cmd_spectrum(input, *certify_conference),
        Command::Equiv { a, b } => cmd_equiv(a, b),
        Command::Explore(args) => cmd_explore(args, cli.verbose),
        Command::Classify(args) => cmd_classify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
