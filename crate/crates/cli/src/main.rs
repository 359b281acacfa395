use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qmonk::ffgeom::{
    is_prime, sweep_curve_count, sweep_lemma_kernel, sweep_lemma_span, sweep_prop_kernel_span,
    Budget, Report, DEFAULT_MAX_OPS, DEFAULT_MAX_PRIME, DEFAULT_RETRIES,
};
use qmonk::qring::{gw_divisor, monk_multiply, Multidegree, QuantumRing};
use qmonk::{Error, Permutation};

/// Quantum Schubert calculus on complete flag manifolds.
#[derive(Parser)]
#[command(name = "qmonk", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on elementary operations for finite-field enumerations.
    #[arg(long, global = true, env = "QMONK_MAX_OPS", default_value_t = DEFAULT_MAX_OPS)]
    max_ops: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply a Schubert class by the divisor class σ_{s_r}.
    Monk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        w: String,
    },
    /// Quantum product σ_u · σ_v.
    Product {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Divisor Gromov–Witten invariant <Ω_u, Ω_w, Ω_{s_r}>_d.
    Gw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        r: usize,
        /// Multidegree as comma-separated entries, e.g. 1,0.
        #[arg(long)]
        d: String,
    },
    /// Every product σ_u · σ_v as JSON lines.
    Table {
        #[arg(long)]
        n: usize,
        /// Allow n >= 5.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run a finite-field verification sweep.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Flag triples drawn by curve-count.
        #[arg(long, default_value_t = 3)]
        triples: usize,
        /// Redraws allowed per triple in curve-count.
        #[arg(long, default_value_t = DEFAULT_RETRIES)]
        retries: u32,
        #[arg(long, env = "QMONK_MAX_PRIME", default_value_t = DEFAULT_MAX_PRIME)]
        max_prime: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    LemmaKernel,
    LemmaSpan,
    PropKernelSpan,
    CurveCount,
}

enum Failure {
    Usage(String),
    Resource(String),
    Verification(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            Error::NotABijection { .. }
            | Error::SizeMismatch { .. }
            | Error::IndexOutOfRange(_)
            | Error::Parse(_)
            | Error::PreconditionViolated(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn parse_perm(n: usize, s: &str) -> Result<Permutation, Failure> {
    let w: Permutation = s.parse()?;
    if w.n() != n {
        return Err(Failure::Usage(format!(
            "{s} is not a permutation of 1..{n}"
        )));
    }
    Ok(w)
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Monk { n, r, w } => {
            check_n(n)?;
            let w = parse_perm(n, &w)?;
            let e = monk_multiply(r, &w)?;
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&e).expect("ring elements serialize")
                )?;
            } else {
                writeln!(out, "{e}")?;
            }
        }
        Command::Product { n, u, v } => {
            check_n(n)?;
            let (u, v) = (parse_perm(n, &u)?, parse_perm(n, &v)?);
            let e = QuantumRing::new(n).product(&u, &v)?;
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&e).expect("ring elements serialize")
                )?;
            } else {
                writeln!(out, "{e}")?;
            }
        }
        Command::Gw { n, u, w, r, d } => {
            check_n(n)?;
            let (u, w) = (parse_perm(n, &u)?, parse_perm(n, &w)?);
            let degs = d
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Failure::Usage(format!("degree {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let d = Multidegree::new(n, degs)?;
            let value = gw_divisor(&u, &w, r, &d)?;
            if cli.json {
                let record = json!({"u": u.one_line(), "w": w.one_line(), "r": r, "d": d.degs(), "value": value});
                writeln!(out, "{record}")?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Table { n, allow_large } => {
            check_n(n)?;
            if n >= 5 && !allow_large {
                return Err(Failure::Resource(format!(
                    "a table for n = {n} is large; pass --allow-large to compute it"
                )));
            }
            let ring = QuantumRing::new(n);
            let perms = Permutation::all(n);
            for u in &perms {
                for v in &perms {
                    let e = ring.product(u, v)?;
                    let record = json!({"u": u.one_line(), "v": v.one_line(), "product": e});
                    writeln!(out, "{record}")?;
                }
            }
        }
        Command::Verify {
            kind,
            n,
            p,
            seed,
            triples,
            retries,
            max_prime,
        } => {
            check_n(n)?;
            if !is_prime(p) || p > max_prime {
                return Err(Failure::Usage(format!(
                    "--p must be a prime at most {max_prime}"
                )));
            }
            let budget = Budget::new(cli.max_ops);
            let reports = match kind {
                VerifyKind::LemmaKernel => sweep_lemma_kernel(n, p, seed, &budget)?,
                VerifyKind::LemmaSpan => sweep_lemma_span(n, p, seed, &budget)?,
                VerifyKind::PropKernelSpan => sweep_prop_kernel_span(n, p, seed, &budget)?,
                VerifyKind::CurveCount => sweep_curve_count(n, p, seed, triples, retries, &budget)?,
            };
            write_reports(&reports, cli.json, out)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                return Err(Failure::Verification(format!(
                    "{failed} of {} checks failed",
                    reports.len()
                )));
            }
        }
    }
    Ok(())
}

fn write_reports(reports: &[Report], as_json: bool, out: &mut impl Write) -> io::Result<()> {
    if as_json {
        for r in reports {
            writeln!(
                out,
                "{}",
                serde_json::to_string(r).expect("reports serialize")
            )?;
        }
        return Ok(());
    }
    for r in reports.iter().filter(|r| !r.pass) {
        writeln!(
            out,
            "FAIL {} lhs={} rhs={} {}",
            r.check, r.lhs_count, r.rhs_count, r.params
        )?;
    }
    let check = reports.first().map_or("verify", |r| r.check.as_str());
    let passed = reports.iter().filter(|r| r.pass).count();
    let retries: u32 = reports.iter().map(|r| r.retries).sum();
    writeln!(
        out,
        "{check}: {passed}/{} passed, {retries} retries",
        reports.len()
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
