use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use edbound::ed::FieldContext;
use edbound::group_spec::{parse_group_spec, ParseOptions, DEFAULT_M_MAX};
use edbound::nt::{dirichlet_search, Characteristic, Prime};
use edbound::report::bound_report;
use edbound::reproduce::{all_passed, run_all, ReproduceOptions};
use edbound::{Error, DEFAULT_CAP};

// A closed pipe is not an error worth a panic.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

/// Finite-group invariants and essential-dimension bounds.
#[derive(Parser)]
#[command(name = "edbound", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    /// Search bound for m in `sd:p,n` specs and the dirichlet command.
    #[arg(long, global = true, default_value_t = DEFAULT_M_MAX)]
    mmax: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound report for a group over a base field.
    Report {
        /// Group spec, e.g. psl2:961, sd:2,4,17, perm:4;(0 1),(0 1 2 3).
        spec: String,
        /// C | Q | R | Qsqrt:<p> | Fpbar:<p> | Fp-at-p:<p>
        #[arg(long, default_value = "C")]
        field: String,
    },
    /// Sylow class at a prime.
    Sylow {
        spec: String,
        #[arg(long, short)]
        prime: u64,
    },
    /// The p-core O_p(G) of an enumerable group.
    Pcore {
        spec: String,
        #[arg(long, short)]
        prime: u64,
    },
    /// Weak tameness at a prime, or at 0.
    Weaklytame {
        spec: String,
        #[arg(long, short)]
        prime: u64,
    },
    /// Smallest m with m p^n + 1 prime.
    Dirichlet { p: u64, n: u32 },
    /// Recompute every numeric claim and report PASS/FAIL.
    ReproducePaper,
}

fn prime_arg(n: u64) -> Result<Prime, Error> {
    Prime::new(n).map_err(|_| Error::Semantic(format!("{n} is not prime")))
}

fn execute(cli: &Cli) -> Result<bool, Error> {
    let opts = ParseOptions {
        cap: cli.cap,
        m_max: cli.mmax,
    };
    match &cli.command {
        Command::Report { spec, field } => {
            let ctx: FieldContext = field.parse()?;
            let g = parse_group_spec(spec, &opts)?;
            let report = bound_report(&g, ctx)?;
            if cli.json {
                out!("{}", report.to_json());
            } else {
                out!("{}", report.to_text().trim_end());
            }
        }
        Command::Sylow { spec, prime } => {
            let l = prime_arg(*prime)?;
            let g = parse_group_spec(spec, &opts)?;
            let class = g.sylow(l)?;
            if cli.json {
                let out = json!({
                    "group": g.to_string(),
                    "prime": l.get(),
                    "class": class.tag(),
                    "order": class.order(),
                    "rank": class.rank(),
                });
                out!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                out!("{g}: Sylow {l}-subgroup is {class} (order {})", class.order());
            }
        }
        Command::Pcore { spec, prime } => {
            let l = prime_arg(*prime)?;
            let g = parse_group_spec(spec, &opts)?;
            let core = g.concrete()?.p_core(l);
            let elements: Vec<String> = core.iter().map(ToString::to_string).collect();
            if cli.json {
                let out = json!({
                    "group": g.to_string(),
                    "prime": l.get(),
                    "order": core.len(),
                    "elements": elements,
                });
                out!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                out!("{g}: O_{l} has order {}", core.len());
                for e in elements {
                    out!("  {e}");
                }
            }
        }
        Command::Weaklytame { spec, prime } => {
            let c = Characteristic::new(*prime).map_err(|_| {
                Error::Semantic(format!("{prime} is neither 0 nor a prime"))
            })?;
            let g = parse_group_spec(spec, &opts)?;
            let answer = g.structural_weakly_tame(c)?;
            if cli.json {
                let out = json!({ "group": g.to_string(), "prime": prime, "weakly_tame": answer });
                out!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                out!("{g} weakly tame at {prime}: {answer}");
            }
        }
        Command::Dirichlet { p, n } => {
            let p = prime_arg(*p)?;
            let found = dirichlet_search(p, *n, cli.mmax)?;
            if cli.json {
                let out = json!({
                    "p": p.get(),
                    "n": n,
                    "m": found.map(|(m, _)| m),
                    "q": found.map(|(_, q)| q),
                });
                out!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                match found {
                    Some((m, q)) => out!("m = {m}, q = {q}"),
                    None => out!("no prime of the form m * {p}^{n} + 1 with m <= {}", cli.mmax),
                }
            }
        }
        Command::ReproducePaper => {
            let ropts = ReproduceOptions {
                cap: cli.cap,
                ..ReproduceOptions::default()
            };
            let checks = run_all(&ropts);
            let ok = all_passed(&checks);
            if cli.json {
                let out = json!({ "checks": checks, "all_passed": ok });
                out!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                for c in &checks {
                    out!("{c}");
                }
                out!("{}", if ok { "all checks passed" } else { "some checks FAILED" });
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("edbound: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
