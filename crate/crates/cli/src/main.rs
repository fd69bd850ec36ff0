use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use surfsing::continuant::{self, WeightChain};
use surfsing::cycles::mumford_pullback_exc;
use surfsing::enumerate::{self, FamilySpec};
use surfsing::input::{parse_input, Input};
use surfsing::rat::{self, Rat};
use surfsing::report::{analyze, AnalyzeOptions};

/// Exact invariants of normal surface singularities from weighted dual graphs.
#[derive(Parser)]
#[command(name = "surfsing", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Stand-in value p/q for the D-type curve threshold.
    #[arg(long, global = true, value_parser = parse_rat)]
    epsilon: Option<Rat>,
    /// Re-verify delta_min by exhaustive active-set enumeration.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of the germ described in FILE.
    Analyze { file: PathBuf },
    /// Evaluate the numerical hypotheses for the nef data in FILE.
    Check { file: PathBuf },
    /// Run the invariant checks over a family of chains and forks.
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_length: usize,
        #[arg(long, default_value_t = 6)]
        max_weight: u64,
        /// Include the smooth point and the D/E forks.
        #[arg(long)]
        forks: bool,
        #[arg(long, default_value_t = 100_000)]
        row_limit: usize,
    },
    /// Continuant of a chain w1,w2,... and optionally one inverse entry.
    Continuant {
        #[arg(value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        /// 1-based indices i j of the inverse-matrix entry.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        inverse: Option<Vec<usize>>,
    },
    /// Exceptional part of the pullback of a divisor with strict-transform degrees v1,v2,...
    Pullback {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rat)]
        meets: Vec<Rat>,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    rat::parse(s).ok_or_else(|| format!("`{s}` is not an exact rational p/q"))
}

/// A failed run: message for stderr and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(e: impl std::fmt::Display) -> Self {
        Self {
            code: 1,
            message: e.to_string(),
        }
    }

    fn assertion(message: String) -> Self {
        Self { code: 2, message }
    }
}

fn load(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_input(&text).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

fn options(g: &GlobalOpts) -> AnalyzeOptions {
    AnalyzeOptions {
        epsilon: g.epsilon.clone(),
        oracle: g.oracle,
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Analyze { file } => {
            let input = load(&file)?;
            let report = analyze(&input, &options(g)).map_err(Failure::validation)?;
            let out = if g.json {
                report.to_json()
            } else {
                report.render_text()
            };
            match &report.oracle {
                Some(o) if !o.agrees => {
                    print!("{out}");
                    Err(Failure::assertion("oracle disagrees with active-set result".into()))
                }
                _ => Ok(out),
            }
        }
        Command::Check { file } => {
            let input = load(&file)?;
            if input.nef.is_none() {
                return Err(Failure::validation(format!(
                    "{}: missing \"nef\" data (M2, minMC)",
                    file.display()
                )));
            }
            let report = analyze(&input, &options(g)).map_err(Failure::validation)?;
            let theorem = report.theorem.as_ref().expect("nef data present");
            if g.json {
                Ok(report.to_json())
            } else {
                let mut out = format!(
                    "delta = {}, delta' = {}\n",
                    report.delta_value,
                    report
                        .delta_prime
                        .value
                        .as_deref()
                        .unwrap_or("any positive number"),
                );
                out.push_str(&theorem.render_text(&report.delta_value, &report.delta_prime));
                Ok(out)
            }
        }
        Command::Enumerate {
            max_length,
            max_weight,
            forks,
            row_limit,
        } => {
            let spec = FamilySpec {
                max_length,
                max_weight,
                forks,
                row_limit,
            };
            let table = enumerate::enumerate(&spec).map_err(Failure::validation)?;
            let out = if g.json {
                let mut s = serde_json::to_string_pretty(&table).expect("table serializes");
                s.push('\n');
                s
            } else {
                table.render_text()
            };
            if table.failures() > 0 {
                print!("{out}");
                return Err(Failure::assertion(format!(
                    "{} assertion failures",
                    table.failures()
                )));
            }
            Ok(out)
        }
        Command::Continuant { weights, inverse } => {
            let chain = WeightChain::new(weights).map_err(Failure::validation)?;
            let table = chain.table();
            let n = chain.len();
            let discrepancies: Vec<String> = (0..n)
                .map(|i| rat::to_string(&table.discrepancy(i).expect("in range")))
                .collect();
            let delta_y = rat::to_string(&continuant::chain_delta_y(&chain).expect("nonempty"));
            let entry = match inverse.as_deref() {
                Some(&[i, j]) => {
                    if i == 0 || j == 0 {
                        return Err(Failure::validation("--inverse indices are 1-based"));
                    }
                    let v = table.inverse_entry(i - 1, j - 1).map_err(Failure::validation)?;
                    Some((i, j, rat::to_string(&v)))
                }
                _ => None,
            };
            let labels: Vec<String> = chain.weights().iter().map(u64::to_string).collect();
            if g.json {
                let mut doc = json!({
                    "weights": chain.weights(),
                    "continuant": table.total().to_string(),
                    "discrepancies": discrepancies,
                    "delta_y": delta_y,
                });
                if let Some((i, j, v)) = entry {
                    doc["inverse"] = json!({"i": i, "j": j, "value": v});
                }
                Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")))
            } else {
                let mut out = format!("a({}) = {}\n", labels.join(","), table.total());
                out.push_str(&format!("discrepancies a_j: {}\n", discrepancies.join(", ")));
                out.push_str(&format!("delta_y = 2 - a_1 - a_n = {delta_y}\n"));
                if let Some((i, j, v)) = entry {
                    out.push_str(&format!("c_{i},{j} = {v}\n"));
                }
                Ok(out)
            }
        }
        Command::Pullback { file, meets } => {
            let input = load(&file)?;
            let graph = input.graph.validate().map_err(Failure::validation)?;
            let p = mumford_pullback_exc(&graph, &meets).map_err(Failure::validation)?;
            let coeffs: Vec<String> = p.coefficients().iter().map(rat::to_string).collect();
            if g.json {
                let ids: Vec<&str> = graph.vertices().iter().map(|v| v.id.as_str()).collect();
                let doc = json!({"vertices": ids, "pullback": coeffs});
                Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")))
            } else {
                let cells: Vec<String> = graph
                    .vertices()
                    .iter()
                    .zip(&coeffs)
                    .map(|(v, c)| format!("{}={c}", v.id))
                    .collect();
                Ok(format!("{}\n", cells.join("  ")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
