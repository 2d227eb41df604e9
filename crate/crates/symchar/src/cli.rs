//! Batch command-line surface: every computation emitted as a
//! reproducible table.
//!
//! All parameters are validated before any computation starts, output is
//! assembled fully before a single byte is printed, and identical inputs
//! produce byte-identical output. Exit codes: 0 success, 2
//! parse/validation error, 3 mathematically undefined request, 4 internal
//! consistency failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::emit;
use crate::error::Result;
use crate::kronecker;
use crate::oracle;
use crate::partition::Partition;
use crate::stable;

/// Environment variable consulted for the character cache directory when
/// `--cache-dir` is absent.
pub const CACHE_DIR_ENV: &str = "SYMCHAR_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "symchar",
    version,
    about = "Exact tables for symmetric-group characters, stable Schur functions, and Kronecker-type structure constants"
)]
struct Cli {
    /// Output format; JSON is canonical, CSV a projection.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Directory for the on-disk character cache (overrides the
    /// SYMCHAR_CACHE_DIR environment variable).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Width of the verification window used when certifying stable
    /// coefficient values.
    #[arg(long, global = true, default_value_t = stable::DEFAULT_WINDOW)]
    window: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expansion of the stable Schur function of LAMBDA in the Schur basis.
    Tilde {
        #[arg(long)]
        lambda: String,
    },
    /// Expansion of the Schur function of the given partition in the
    /// stable basis.
    ExpandStable {
        #[arg(long)]
        schur: String,
    },
    /// Kronecker coefficient k(lambda; mu, nu).
    Kron {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Full table of reduced Kronecker coefficients of st_mu * st_nu.
    ReducedKron {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Kronecker comultiplication table of st_lambda in the stable basis.
    Rtable {
        #[arg(long)]
        lambda: String,
    },
    /// Large-n limit of the padded table entry R^{lambda[n]} at
    /// (mu[n-a], nu[n-b]).
    Rlimit {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// M transition coefficient; without --n, the certified stable value.
    Mcoef {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        n: Option<i64>,
    },
    /// N transition coefficient; without --n, the certified stable value.
    Ncoef {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        n: Option<i64>,
    },
    /// Restriction multiplicities of the irreducible LAMBDA of S_{m*n}
    /// under S_m x S_n, from the character oracle.
    RestrictMn {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Multiplicity of the S_n-irreducible MU in the polynomial
    /// general-linear module of LAMBDA restricted to permutations.
    GlRestrict {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
    },
    /// Scan of the padded table entry over n, with measured onset and the
    /// independently computed limit.
    StabilityScan {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        max_n: usize,
    },
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
    if let Some(dir) = cache_dir {
        if let Err(e) = oracle::attach_cache_dir(&dir) {
            eprintln!("error: {e}");
            return 2;
        }
    }
    match execute(&cli) {
        Ok(output) => {
            print!("{}", output);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition> {
    text.parse::<Partition>()
}

fn execute(cli: &Cli) -> Result<String> {
    let json = cli.format == OutputFormat::Json;
    let render = |v: serde_json::Value| format!("{}\n", v);
    Ok(match &cli.command {
        Command::Tilde { lambda } => {
            let lam = parse_partition(lambda)?;
            let f = stable::stable_schur(&lam);
            if json {
                render(emit::symfunc_json(&f))
            } else {
                emit::symfunc_csv(&f)
            }
        }
        Command::ExpandStable { schur } => {
            let lam = parse_partition(schur)?;
            let f = stable::expand_in_stable(&crate::symfunc::SymFunc::elem(
                crate::symfunc::Basis::Schur,
                lam,
            ))?;
            if json {
                render(emit::symfunc_json(&f))
            } else {
                emit::symfunc_csv(&f)
            }
        }
        Command::Kron { lambda, mu, nu } => {
            let lam = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let v = kronecker::kronecker(&lam, &mu, &nu)?;
            if json {
                render(emit::value_json(&v))
            } else {
                emit::value_csv(&v)
            }
        }
        Command::ReducedKron { mu, nu } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let table = kronecker::reduced_kronecker_table(&mu, &nu)?;
            if json {
                let rows: Vec<serde_json::Value> = table
                    .iter()
                    .map(|(lam, v)| {
                        serde_json::json!({
                            "lambda": emit::partition_json(lam),
                            "value": v.to_string(),
                        })
                    })
                    .collect();
                render(serde_json::json!({
                    "mu": emit::partition_json(&mu),
                    "nu": emit::partition_json(&nu),
                    "entries": rows,
                }))
            } else {
                let mut out = String::from("lambda,value\n");
                for (lam, v) in &table {
                    out.push_str(&format!("{},{}\n", emit::partition_csv(lam), v));
                }
                out
            }
        }
        Command::Rtable { lambda } => {
            let lam = parse_partition(lambda)?;
            let t = kronecker::r_table(&lam)?;
            if json {
                render(emit::rtable_json(&t))
            } else {
                emit::pair_table_csv(&t.entries)
            }
        }
        Command::Rlimit {
            lambda,
            mu,
            nu,
            a,
            b,
        } => {
            let lam = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let v = kronecker::stable_r_limit(&lam, &mu, &nu, *a, *b)?;
            if json {
                render(emit::value_json(&v))
            } else {
                emit::value_csv(&v)
            }
        }
        Command::Mcoef { lambda, mu, i, n } => {
            coefficient_output(stable::m_family(), lambda, mu, *i, *n, cli.window, json)?
        }
        Command::Ncoef { lambda, mu, i, n } => {
            coefficient_output(stable::n_family(), lambda, mu, *i, *n, cli.window, json)?
        }
        Command::RestrictMn { lambda, m, n } => {
            let lam = parse_partition(lambda)?;
            let table = oracle::restriction_table(&lam, *m, *n)?;
            if json {
                render(emit::multiplicity_table_json(&lam, *m, *n, &table))
            } else {
                emit::pair_table_csv(&table)
            }
        }
        Command::GlRestrict { lambda, mu, n } => {
            let lam = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let v = oracle::gl_restriction_multiplicity(&lam, &mu, *n)?;
            if json {
                render(emit::value_json(&v))
            } else {
                emit::value_csv(&v)
            }
        }
        Command::StabilityScan {
            lambda,
            mu,
            nu,
            a,
            b,
            max_n,
        } => {
            let lam = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let report = kronecker::stability_scan(&lam, &mu, &nu, *a, *b, *max_n)?;
            if json {
                render(emit::scan_json(&report))
            } else {
                emit::scan_csv(&report)
            }
        }
    })
}

fn coefficient_output(
    family: &stable::CoeffFamily,
    lambda: &str,
    mu: &str,
    i: i64,
    n: Option<i64>,
    window: usize,
    json: bool,
) -> Result<String> {
    let lam = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let record = match n {
        Some(n) => {
            let value = family.entry(&lam, &mu, i, n)?;
            stable::CoeffRecord {
                kind: family.kind(),
                lambda: lam,
                mu,
                i,
                n,
                value,
                stable: false,
            }
        }
        None => {
            let certified = family.stable(&lam, &mu, i, window)?;
            stable::CoeffRecord {
                kind: family.kind(),
                lambda: lam,
                mu,
                i,
                n: certified.certified_n as i64,
                value: certified.value,
                stable: true,
            }
        }
    };
    Ok(if json {
        format!("{}\n", emit::coeff_record_json(&record))
    } else {
        emit::coeff_record_csv(&record)
    })
}
