//! `wittsig`: exact invariants and claim verifiers for the type B/D
//! quantum-group modular categories, on the command line.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

mod config;
mod output;
mod verify;

use std::io::Write;

use clap::{Parser, Subcommand};

use wittsig::exact::Sign;
use wittsig::invariants::CategoryData;
use wittsig::roots::alcove_jsonl;
use wittsig::signature::{Family, SignatureFamily};

use config::{Format, RunConfig};
use output::{csv_field, emit};

#[derive(Parser)]
#[command(
    name = "wittsig",
    version,
    about = "Exact Witt-signature invariants of the so(2r)_{2r} and so(2b+1)_{2b+1} modular categories"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_parser = ["json", "csv", "text"])]
    format: Option<String>,

    /// Write the data stream to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,

    /// Starting interval precision in bits
    #[arg(long, global = true)]
    precision_start: Option<u32>,

    /// Precision cap in bits for certified signs
    #[arg(long, global = true)]
    precision_cap: Option<u32>,

    /// Largest working conductor accepted before refusing a request
    #[arg(long, global = true)]
    conductor_guard: Option<u64>,

    /// Worker threads for per-object computations (0 = default)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the fundamental alcove of so(2r)_{2r} as JSON lines
    Alcove {
        #[arg(long)]
        rank: usize,
    },
    /// Twists, quantum dimensions, T-order, global dimension, and
    /// optional Gauss sums / central charges
    Invariants {
        #[arg(long)]
        rank: usize,
        /// Gauss-sum indices, e.g. --gauss 1,2,-1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gauss: Vec<i64>,
    },
    /// Signature ε(σ_k) = sgn(σ_k(√dim)) for one family member
    Signature {
        /// D or B
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Galois residues, e.g. --k 1,5,9
        #[arg(long, value_delimiter = ',')]
        k: Vec<i64>,
    },
    /// Run a named claim battery (see --claim help for ids)
    Verify {
        /// One of: lemma-d-count, lemma-s-parity, lemma-sine-galois,
        /// lemma-t-order, dim-double-check, central-charge, periodicity,
        /// prop-d-odd-sign, prop-d-even-sign, lemma-b-shift,
        /// prop-bd-separation, thm-independence-odd,
        /// thm-independence-even, thm-pointed-ising, jacobi-conditions,
        /// anisotropy-d4, all
        #[arg(long)]
        claim: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        window: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        primes7: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        primes11: Vec<u64>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        x_max: Option<u64>,
        #[arg(long)]
        max_m: Option<u64>,
        #[arg(long)]
        max_rank: Option<u64>,
        #[arg(long)]
        max_p: Option<u64>,
    },
    /// The full exclusion pipeline for the local-module category of so(8)_8
    Anisotropy,
}

/// Failure carrying the process exit code.
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// Map a core error onto the exit-code contract: malformed requests are
/// usage errors, failed mathematics is a verification failure.
fn classify(err: wittsig::Error) -> Failure {
    use wittsig::Error::*;
    match err {
        InvalidArgument(_)
        | RankTooSmall { .. }
        | BadProgression { .. }
        | EvenModulus(_)
        | NotCoprime { .. }
        | RankMismatch(..)
        | OutsideAlcove(_)
        | ConductorNotDivisible { .. } => Failure::usage(err.to_string()),
        _ => Failure::verification(err.to_string()),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = RunConfig::resolve(
        cli.format.as_deref(),
        cli.output.clone(),
        cli.precision_start,
        cli.precision_cap,
        cli.conductor_guard,
    )?;
    if let Some(n) = cli.threads {
        if n > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
        }
    }
    match cli.command {
        Command::Alcove { rank } => cmd_alcove(rank, &config),
        Command::Invariants { rank, gauss } => cmd_invariants(rank, &gauss, &config),
        Command::Signature { family, rank, k } => cmd_signature(&family, rank, &k, &config),
        Command::Verify {
            claim,
            rank,
            window,
            primes,
            primes7,
            primes11,
            b,
            k,
            x_max,
            max_m,
            max_rank,
            max_p,
        } => {
            let params = verify::Params {
                rank,
                window,
                primes,
                primes7,
                primes11,
                b,
                k,
                x_max,
                max_m,
                max_rank,
                max_p,
            };
            verify::cmd_verify(&claim, &params, &config)
        }
        Command::Anisotropy => cmd_anisotropy(&config),
    }
}

fn cmd_alcove(rank: usize, config: &RunConfig) -> Result<(), Failure> {
    let jsonl = alcove_jsonl(rank).map_err(classify)?;
    let body = match config.format {
        Format::Json => jsonl,
        Format::Csv => {
            let mut out = String::from("coords2,level_pairing\r\n");
            for w in wittsig::roots::alcove_d(rank).map_err(classify)? {
                let coords = w
                    .coords2()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!("{},{}\r\n", csv_field(&coords), w.level_pairing()));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for w in wittsig::roots::alcove_d(rank).map_err(classify)? {
                out.push_str(&format!("{w}  level {}\n", w.level_pairing()));
            }
            out
        }
    };
    emit(config, &body)
}

fn check_rank(rank: usize) -> Result<(), Failure> {
    if rank < 2 {
        return Err(Failure::usage(format!(
            "rank {rank} is below the minimum 2 for these families"
        )));
    }
    Ok(())
}

fn cmd_invariants(rank: usize, gauss: &[i64], config: &RunConfig) -> Result<(), Failure> {
    check_rank(rank)?;
    config.check_conductor(wittsig::invariants::twist_conductor(rank))?;
    eprintln!("building category data for rank {rank}...");
    let data = CategoryData::build(rank).map_err(classify)?;
    let export = data.export();
    let mut gauss_rows = Vec::new();
    for &n in gauss {
        let tau = data.gauss_sum(n);
        let xi = data
            .central_charge(n)
            .map(|x| x.to_string())
            .unwrap_or_else(|e| format!("undefined ({e})"));
        gauss_rows.push((n, tau.to_string(), xi));
    }
    let body = match config.format {
        Format::Json => {
            let mut v = serde_json::to_value(&export).expect("serializable");
            if !gauss_rows.is_empty() {
                v["gauss_sums"] = serde_json::Value::Array(
                    gauss_rows
                        .iter()
                        .map(|(n, tau, xi)| {
                            serde_json::json!({"n": n, "tau": tau, "central_charge": xi})
                        })
                        .collect(),
                );
            }
            format!("{v:#}\n")
        }
        Format::Csv => {
            let mut out = String::from("coords2,twist_exponent_num,qdim_approx\r\n");
            for o in &export.objects {
                let coords = o
                    .coords2
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!(
                    "{},{},{}\r\n",
                    csv_field(&coords),
                    o.twist_exponent_num,
                    o.qdim_approx
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "rank {rank}: {} simple objects, T-order {}\ndim = {} (rounded: {})\n",
                export.num_objects, export.t_order, export.dim_decimal, export.dim_rounding
            );
            for (n, tau, xi) in &gauss_rows {
                out.push_str(&format!("tau_{n} = {tau}\nxi_{n} = {xi}\n"));
            }
            out
        }
    };
    emit(config, &body)
}

fn parse_family(family: &str) -> Result<Family, Failure> {
    match family {
        "D" | "d" => Ok(Family::D),
        "B" | "b" => Ok(Family::B),
        other => Err(Failure::usage(format!(
            "unknown family {other:?}; expected D or B"
        ))),
    }
}

fn cmd_signature(family: &str, rank: usize, ks: &[i64], config: &RunConfig) -> Result<(), Failure> {
    let family = parse_family(family)?;
    check_rank(rank)?;
    let conductor = match family {
        Family::D => 8 * rank as u64 - 4,
        Family::B => 16 * rank as u64,
    };
    config.check_conductor(conductor)?;
    if ks.is_empty() {
        return Err(Failure::usage("no Galois residues given (use --k)"));
    }
    eprintln!("computing exact √dim for {family}{rank}...");
    let member = SignatureFamily::new(family, rank)
        .map_err(classify)?
        .with_precision(config.precision);
    let mut rows: Vec<(i64, Sign)> = Vec::new();
    for &k in ks {
        rows.push((k, member.sign(k).map_err(classify)?));
    }
    let body = match config.format {
        Format::Json => {
            let mut out = String::new();
            for (k, s) in &rows {
                out.push_str(&format!(
                    "{}\n",
                    serde_json::json!({
                        "family": family.to_string(),
                        "rank": rank,
                        "k": k,
                        "sign": s.to_i32(),
                    })
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("family,rank,k,sign\r\n");
            for (k, s) in &rows {
                out.push_str(&format!("{family},{rank},{k},{}\r\n", s.to_i32()));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, s) in &rows {
                out.push_str(&format!("epsilon_{family}{rank}(sigma_{k}) = {s}\n"));
            }
            out
        }
    };
    emit(config, &body)
}

fn cmd_anisotropy(config: &RunConfig) -> Result<(), Failure> {
    eprintln!("running the anisotropy pipeline for rank 4...");
    let report = wittsig::anisotropy::anisotropy_report(config.precision).map_err(classify)?;
    let body = match config.format {
        Format::Json => format!(
            "{:#}\n",
            serde_json::to_value(&report).expect("serializable")
        ),
        Format::Csv => {
            let mut out = String::from(
                "a1,a2,dim_approx,totally_positive,norm_integral,ratio_admissible\r\n",
            );
            for c in &report.candidates {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\r\n",
                    c.a1,
                    c.a2,
                    c.dim_approx,
                    c.totally_positive,
                    c.norm_integral,
                    c.ratio_admissible
                ));
            }
            out
        }
        Format::Text => report.to_text(),
    };
    emit(config, &body)
}

pub fn write_stream(path: Option<&std::path::Path>, body: &str) -> Result<(), Failure> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Failure::verification(format!("write: {e}")))
        }
        Some(p) => std::fs::write(p, body.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", p.display()))),
    }
}
