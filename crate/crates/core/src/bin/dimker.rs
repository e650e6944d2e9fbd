use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dimker::diminishers::{diminish, DiminishOutcome, DiminisherConfig, EdgeBudget};
use dimker::generate::{generate, Model};
use dimker::gkf::{parse_gkf, write_gkf, write_provenance};
use dimker::graph::ProvenanceMap;
use dimker::instance::{Instance, ParamKind, ProblemKind};
use dimker::kernelize::{interleave_solve, strict_kernel, Epsilon};
use dimker::solvers::{solve_nwt, solve_tc, solve_hsi, TcAnswer};
use dimker::suite::run_suite;
use dimker::turing_kernel::turing_solve_default;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "dimker", version, about = "Diminishers and strict kernels for triangle and pattern problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print yes/no.
    Solve {
        file: PathBuf,
    },
    /// Print n, m and the three structural parameters.
    Stats {
        file: PathBuf,
    },
    /// Apply the diminisher for the instance parameter.
    Diminish {
        file: PathBuf,
        #[arg(long)]
        param: Option<ParamKind>,
        #[arg(long, default_value = "exact")]
        edge_budget: EdgeBudget,
        /// Number of successive applications.
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        /// Write the reduced instance here (stdout otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the provenance sidecar here.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Apply the strict kernel once.
    Kernel {
        file: PathBuf,
        #[arg(long)]
        param: Option<ParamKind>,
        #[arg(long, default_value = "2")]
        eps: Epsilon,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alternate diminisher and strict kernel until decided.
    Interleave {
        file: PathBuf,
        #[arg(long)]
        param: Option<ParamKind>,
        #[arg(long, default_value = "2")]
        eps: Epsilon,
        #[arg(long, default_value = "exact")]
        edge_budget: EdgeBudget,
        /// Per-round statistics as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write 0 in the ms column so the CSV is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Decide a subgraph instance through ball queries.
    Turing {
        file: PathBuf,
    },
    /// Run the seeded randomized verification suite.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        trials: usize,
    },
    /// Generate a random instance as GKF.
    Generate {
        #[arg(value_enum)]
        model: ModelKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long)]
        plant: bool,
        #[arg(long, default_value_t = 0)]
        wmin: i64,
        #[arg(long, default_value_t = 10)]
        wmax: i64,
        #[arg(long, default_value_t = 3)]
        f: u32,
        #[arg(long, default_value_t = 5)]
        hubs: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Target parameter value for `planted-param`.
        #[arg(long, default_value_t = 16)]
        k: usize,
        #[arg(long, default_value = "component")]
        param: ParamKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    Gnp,
    PlantedNwt,
    RandomTc,
    HardBall,
    PlantedParam,
}

enum Failure {
    Usage(String),
    Parse(String),
    Verify(String),
}

type CmdResult = Result<(), Failure>;

impl From<dimker::Error> for Failure {
    fn from(e: dimker::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(path: &Path, param: Option<ParamKind>) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let inst = parse_gkf(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(match param {
        Some(p) => inst.with_param(p),
        None => inst,
    })
}

fn emit(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(answer: bool) -> &'static str {
    if answer {
        "yes"
    } else {
        "no"
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Solve { file } => {
            let inst = load(&file, None)?;
            let g = inst.graph();
            match inst.problem() {
                ProblemKind::Nwt => match solve_nwt(g)? {
                    Some(w) => {
                        println!("yes");
                        eprintln!(
                            "triangle {:?} weight {}",
                            w.vertices,
                            w.weight.unwrap_or_default()
                        );
                    }
                    None => println!("no"),
                },
                ProblemKind::Tc => match solve_tc(g)? {
                    TcAnswer::Covered => println!("yes"),
                    TcAnswer::Missing(t) => {
                        println!("no");
                        eprintln!("uncovered colors {t:?}");
                    }
                },
                ProblemKind::Hsi(h) => println!("{}", yes_no(solve_hsi(g, h))),
            }
        }
        Command::Stats { file } => {
            let inst = load(&file, None)?;
            let g = inst.graph();
            println!("n {}", g.n());
            println!("m {}", g.m());
            println!("component {}", g.component_order());
            println!("maxdeg {}", g.max_degree());
            println!("degeneracy {}", g.degeneracy());
        }
        Command::Diminish {
            file,
            param,
            edge_budget,
            rounds,
            out,
            provenance,
        } => {
            let original = load(&file, param)?;
            let cfg = DiminisherConfig::for_problem(original.problem(), edge_budget);
            let mut current = original.clone();
            let mut prov = ProvenanceMap::identity(original.graph());
            for _ in 0..rounds {
                match diminish(&current, &cfg)? {
                    DiminishOutcome::Decided(answer) => {
                        eprintln!("decided: {}", yes_no(answer));
                        break;
                    }
                    DiminishOutcome::Reduced {
                        instance,
                        provenance,
                        stats,
                    } => {
                        eprintln!(
                            "k {} -> {}, {} parts, size {} -> {}",
                            stats.old_k, stats.new_k, stats.parts, stats.old_size, stats.new_size
                        );
                        prov = provenance.compose(&prov);
                        current = instance;
                    }
                }
            }
            emit(out.as_deref(), &write_gkf(&current))?;
            if let Some(path) = provenance {
                let text = write_provenance(current.graph(), original.graph(), &prov);
                emit(Some(&path), &text)?;
            }
        }
        Command::Kernel {
            file,
            param,
            eps,
            out,
        } => {
            let inst = load(&file, param)?;
            let k = strict_kernel(&inst, eps)?;
            eprintln!("{:?}: k {} -> {}", k.branch, k.old_k, k.new_k);
            emit(out.as_deref(), &write_gkf(&k.instance))?;
        }
        Command::Interleave {
            file,
            param,
            eps,
            edge_budget,
            csv,
            no_timing,
        } => {
            let inst = load(&file, param)?;
            let cfg = DiminisherConfig::for_problem(inst.problem(), edge_budget);
            let (answer, trace) = interleave_solve(&inst, eps, &cfg)?;
            println!("{}", yes_no(answer));
            if let Some(path) = csv {
                emit(Some(&path), &trace.to_csv(!no_timing))?;
            }
        }
        Command::Turing { file } => {
            let inst = load(&file, None)?;
            let ProblemKind::Hsi(h) = inst.problem() else {
                return Err(Failure::Usage("turing expects an hsi instance".into()));
            };
            let (answer, trace) = turing_solve_default(inst.graph(), h);
            println!("{}", yes_no(answer));
            eprintln!(
                "{} oracle calls, largest ball {}, {} yes",
                trace.calls(),
                trace.max_order(),
                trace.yes_calls
            );
        }
        Command::Verify { seed, trials } => {
            let report = run_suite(seed, trials);
            print!("{}", report.render());
            if !report.passed() {
                return Err(Failure::Verify("verification failed".into()));
            }
        }
        Command::Generate {
            model,
            seed,
            n,
            p,
            plant,
            wmin,
            wmax,
            f,
            hubs,
            degree,
            k,
            param,
            out,
        } => {
            let model = match model {
                ModelKind::Gnp => Model::Gnp { n, p },
                ModelKind::PlantedNwt => Model::PlantedNwt {
                    n,
                    p,
                    plant,
                    wmin,
                    wmax,
                },
                ModelKind::RandomTc => Model::RandomTc { n, p, f },
                ModelKind::HardBall => Model::HardBall { hubs, degree },
                ModelKind::PlantedParam => Model::PlantedParam {
                    param,
                    k,
                    plant,
                    wmax,
                },
            };
            let inst = generate(&model, seed, param)?;
            emit(out.as_deref(), &write_gkf(&inst))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
