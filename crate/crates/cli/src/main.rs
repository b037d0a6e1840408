use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use elnet::action::{act_network_word, act_word, GenWord};
use elnet::network::{apply_local_move, response, LocalMove, MoveKind, Network};
use elnet::perms::{catalan, enumerate_efficient};
use elnet::symplectic::{factorize_top_cell, SpElement};
use elnet::verify::{run_suite, Suite, SuiteOptions};
use elnet::{Error, Mat, Rat};

#[derive(Parser)]
#[command(
    name = "elnet",
    version,
    about = "Exact calculus for planar electrical networks"
)]
struct Cli {
    /// Print numbers as decimals with this many digits instead of exact fractions.
    #[arg(long, global = true, value_name = "K")]
    decimal: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Response matrix of a network (`-` reads stdin).
    Response { network: String },

    /// Apply a local move and print the new network.
    Transform {
        network: String,
        #[arg(long = "move", value_name = "KIND")]
        kind: String,
        /// Interior vertex id, or comma-separated 0-based edge indices.
        #[arg(long = "at", value_name = "SITE")]
        site: String,
    },

    /// Act by a word `i:t,i:t,…` on the zero response or on a network.
    #[command(group(ArgGroup::new("start").required(true).args(["zero", "network"])))]
    Act {
        word: String,
        /// Start from the empty network with n+1 boundary vertices.
        #[arg(long, value_name = "N")]
        zero: Option<usize>,
        #[arg(long, value_name = "FILE")]
        network: Option<String>,
        #[arg(long, value_enum, default_value_t = Emit::Matrix)]
        emit: Emit,
    },

    /// Recover the staircase parameters of a top-cell element.
    Factorize {
        matrix: String,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
    },

    /// Count (and optionally list) efficient permutations of S_{2n+1}.
    Efficient {
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        #[arg(long)]
        list: bool,
    },

    /// Run a self-check suite.
    Verify {
        suite: String,
        #[arg(long, value_name = "P/Q")]
        tau: Option<String>,
        #[arg(long, value_name = "N")]
        trials: Option<usize>,
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
        #[arg(short = 'n', value_name = "N")]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Network,
    Matrix,
}

/// Failures of the computation itself exit 1; bad input exits 2.
enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Validation(_)
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch(_)
            | Error::UnknownName(_)
            | Error::NegativeParameter(_)
            | Error::NonPositiveParameter(_)
            | Error::EvenSize(_) => Failure::Input(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn read_network(path: &str) -> Result<Network, Failure> {
    Ok(Network::from_json_str(&read_input(path)?)?)
}

struct Printer {
    decimal: Option<usize>,
}

impl Printer {
    fn rat(&self, x: &Rat) -> String {
        match self.decimal {
            Some(k) => x.to_decimal(k),
            None => x.to_string(),
        }
    }

    fn mat(&self, m: &Mat) -> Value {
        let data: Vec<Vec<String>> = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| self.rat(x)).collect())
            .collect();
        json!({ "rows": m.rows(), "cols": m.cols(), "data": data })
    }

    fn network(&self, net: &Network) -> String {
        let mut v: Value = serde_json::from_str(&net.to_json_string()).expect("valid json");
        if self.decimal.is_some() {
            for (e, edge) in v["edges"]
                .as_array_mut()
                .expect("edges")
                .iter_mut()
                .zip(net.edges())
            {
                e["w"] = Value::String(self.rat(&edge.weight));
            }
        }
        pretty(&v)
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes")
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let out = Printer {
        decimal: cli.decimal,
    };
    match cli.command {
        Command::Response { network } => {
            let l = response(&read_network(&network)?)?;
            println!("{}", pretty(&out.mat(l.mat())));
        }
        Command::Transform {
            network,
            kind,
            site,
        } => {
            let net = read_network(&network)?;
            let m = LocalMove::parse(kind.parse::<MoveKind>()?, &site)?;
            println!("{}", out.network(&apply_local_move(&net, &m)?));
        }
        Command::Act {
            word,
            zero,
            network,
            emit,
        } => {
            let start = match (zero, network) {
                (Some(n), None) => Network::empty(n + 1),
                (None, Some(path)) => read_network(&path)?,
                _ => unreachable!("clap enforces exactly one start"),
            };
            let size = start.boundary_count();
            if size == 0 {
                return Err(Failure::Input("need at least one boundary vertex".into()));
            }
            let word = GenWord::parse(size - 1, &word)?;
            match emit {
                Emit::Network => println!("{}", out.network(&act_network_word(&start, &word)?)),
                Emit::Matrix => println!(
                    "{}",
                    pretty(&out.mat(act_word(&response(&start)?, &word)?.mat()))
                ),
            }
        }
        Command::Factorize { matrix, n } => {
            let m: Mat = serde_json::from_str(&read_input(&matrix)?)
                .map_err(|e| Failure::Input(format!("matrix: {e}")))?;
            let params = factorize_top_cell(&SpElement::new(n, m)?, n)?;
            let list: Vec<String> = params.iter().map(|p| out.rat(p)).collect();
            println!("{}", serde_json::to_string(&list).expect("json serializes"));
        }
        Command::Efficient { n, list } => {
            let all = enumerate_efficient(n);
            println!("count={} catalan={}", all.len(), catalan(n + 1));
            if list {
                for w in all {
                    println!("{w}");
                }
            }
        }
        Command::Verify {
            suite,
            tau,
            trials,
            seed,
            n,
        } => {
            let suite = suite.parse::<Suite>()?;
            let tau = tau.map(|t| t.parse::<Rat>()).transpose()?;
            let report = run_suite(
                suite,
                &SuiteOptions {
                    tau,
                    trials,
                    seed,
                    n,
                },
            )?;
            print!("{report}");
            return Ok(report.all_pass());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
