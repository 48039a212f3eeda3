//! `cfcut`: solve, verify, generate, encode, scan and benchmark conflict-free
//! cut instances.

mod bench;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use cfcut::cnf::parse_dimacs_raw;
use cfcut::format::{parse_classes, parse_cut, parse_graph, parse_instance, write_cut, write_instance};
use cfcut::generators::{
    gen_from_clean3sat_multigraph, gen_from_clean3sat_simple, gen_from_mis, gen_matching_cut,
    gen_odd_square, gen_random, gen_random_clean3cnf, gen_uncutable, validate_clean,
    ConflictModel, MisInstance, ReductionCertificate,
};
use cfcut::sat::SchoeningConfig;
use cfcut::{
    encode_symmetric, scan_vertex_boundaries, solve, verify_cut, Algorithm, Backend, Instance,
    SolveOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_CUT: u8 = 10;
const EXIT_NOCUT: u8 = 20;
const EXIT_ERROR: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "cfcut", version, about = "Conflict-free edge cuts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance has a conflict-free cut.
    Solve(SolveArgs),
    /// Check a cut certificate against an instance.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Export the symmetric CNF encoding as DIMACS.
    Encode {
        instance: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for a vertex whose incident edges form a conflict-free cut.
    Scan { instance: PathBuf },
    /// Run several algorithms over a directory of instances.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, default_value = "auto")]
    algo: Algorithm,
    #[arg(long, value_enum, default_value_t = BackendArg::Dpll)]
    backend: BackendArg,
    /// Seed of the randomised backend.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restarts per piece for the randomised backend; default scales with size.
    #[arg(long)]
    tries: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Vertex limit of the brute-force solver.
    #[arg(long)]
    brute_max: Option<usize>,
    /// Vertex cover limit of the fpt solver.
    #[arg(long)]
    max_cover: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum BackendArg {
    Dpll,
    Schoening,
}

impl BackendArg {
    pub(crate) fn build(self, seed: u64, tries: Option<u64>, jobs: usize) -> Backend {
        match self {
            BackendArg::Dpll => Backend::Dpll,
            BackendArg::Schoening => Backend::Schoening(SchoeningConfig {
                tries,
                jobs,
                ..SchoeningConfig::new(3, seed)
            }),
        }
    }
}

#[derive(Args)]
struct Output {
    /// Instance path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reduction certificate path.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// Uncutable gadget on 2*half vertices.
    Uncutable {
        #[arg(long)]
        half: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Square of an odd cycle, conflicts between opposite chords.
    OddSquare {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Reduction from a clean 3-SAT formula.
    Clean3sat {
        /// DIMACS formula; a random clean formula is drawn when omitted.
        #[arg(long, conflicts_with = "vars")]
        cnf: Option<PathBuf>,
        /// Variable count of the random formula.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Stage::Multigraph)]
        stage: Stage,
        #[command(flatten)]
        output: Output,
    },
    /// Reduction from multicoloured independent set.
    Mis {
        /// Plain graph file (`p edge`).
        #[arg(long)]
        graph: PathBuf,
        /// Vertex classes file.
        #[arg(long)]
        classes: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Graph with line-graph conflicts: conflict-free cuts are matching cuts.
    MatchingCut {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Random connected simple graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::OneRegular)]
        model: ModelArg,
        /// Conflict probability for `--model density`.
        #[arg(long, default_value_t = 0.1)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    Multigraph,
    Simple,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    OneRegular,
    Density,
}

pub(crate) fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub(crate) fn read_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<u8> {
    let inst = read_instance(&args.instance)?;
    let defaults = SolveOptions::default();
    let opts = SolveOptions {
        algorithm: args.algo,
        backend: args.backend.build(args.seed, args.tries, args.jobs),
        brute_max_vertices: args.brute_max.unwrap_or(defaults.brute_max_vertices),
        fpt_max_cover: args.max_cover.unwrap_or(defaults.fpt_max_cover),
        jobs: args.jobs,
    };
    let answer = solve(&inst, &opts)?;
    eprintln!("method: {:?}", answer.method);
    match &answer.cut {
        Some(cut) => {
            print!("{}", write_cut(Some(cut)));
            Ok(EXIT_CUT)
        }
        None if answer.exact => {
            println!("nocut");
            Ok(EXIT_NOCUT)
        }
        None => {
            println!("nocut probable");
            Ok(EXIT_NOCUT)
        }
    }
}

fn cmd_verify(instance: &Path, certificate: &Path) -> Result<u8> {
    let inst = read_instance(instance)?;
    let cut = parse_cut(&read(certificate)?)
        .with_context(|| format!("{}", certificate.display()))?;
    let Some(cut) = cut else {
        bail!("{} claims no cut; nothing to verify", certificate.display());
    };
    let report = verify_cut(&inst, &cut)?;
    if !report.disconnects {
        println!("invalid not-disconnecting");
        return Ok(EXIT_INVALID);
    }
    if let Some(&(i, j)) = report.violating_pairs.first() {
        println!("invalid conflicting-pair {} {}", i + 1, j + 1);
        return Ok(EXIT_INVALID);
    }
    println!("valid");
    Ok(0)
}

fn cmd_gen(family: &Family) -> Result<u8> {
    let (inst, cert, output): (Instance, Option<ReductionCertificate>, &Output) = match family {
        Family::Uncutable { half, output } => (gen_uncutable(*half)?, None, output),
        Family::OddSquare { n, output } => (gen_odd_square(*n)?, None, output),
        Family::Clean3sat {
            cnf,
            vars,
            seed,
            stage,
            output,
        } => {
            let formula = match (cnf, vars) {
                (Some(path), _) => validate_clean(
                    &parse_dimacs_raw(&read(path)?).with_context(|| format!("{}", path.display()))?,
                )?,
                (None, Some(n)) => gen_random_clean3cnf(*n, *seed)?,
                (None, None) => bail!("clean3sat needs --cnf or --vars"),
            };
            let (inst, cert) = match stage {
                Stage::Multigraph => gen_from_clean3sat_multigraph(&formula),
                Stage::Simple => gen_from_clean3sat_simple(&formula),
            };
            (inst, Some(cert), output)
        }
        Family::Mis {
            graph,
            classes,
            output,
        } => {
            let g = parse_graph(&read(graph)?).with_context(|| format!("{}", graph.display()))?;
            let c = parse_classes(&read(classes)?)
                .with_context(|| format!("{}", classes.display()))?;
            let (inst, cert) = gen_from_mis(&MisInstance::new(g, c)?);
            (inst, Some(cert), output)
        }
        Family::MatchingCut { graph, output } => {
            let g = parse_graph(&read(graph)?).with_context(|| format!("{}", graph.display()))?;
            (gen_matching_cut(g)?, None, output)
        }
        Family::Random {
            n,
            m,
            model,
            density,
            seed,
            output,
        } => {
            let model = match model {
                ModelArg::OneRegular => ConflictModel::OneRegular,
                ModelArg::Density => ConflictModel::Density(*density),
            };
            (gen_random(*n, *m, model, *seed)?, None, output)
        }
    };
    match (&output.cert, &cert) {
        (Some(path), Some(cert)) => emit(Some(path), &cert.to_text())?,
        (Some(_), None) => bail!("this family has no reduction certificate"),
        (None, _) => {}
    }
    emit(output.out.as_deref(), &write_instance(&inst))?;
    Ok(0)
}

fn cmd_encode(instance: &Path, out: Option<&Path>) -> Result<u8> {
    let inst = read_instance(instance)?;
    let formula = encode_symmetric(&inst);
    let mut comments = vec![
        "symmetric encoding: a model is a bipartition, true and false are the two sides".to_string(),
    ];
    comments.extend((1..=inst.vertex_count()).map(|i| format!("var {i} vertex {i}")));
    emit(out, &formula.to_dimacs(&comments))?;
    Ok(0)
}

fn cmd_scan(instance: &Path) -> Result<u8> {
    let inst = read_instance(instance)?;
    match scan_vertex_boundaries(&inst) {
        Some((v, cut)) => {
            println!("vertex {}", v + 1);
            print!("{}", write_cut(Some(&cut)));
        }
        None => println!("none"),
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify {
            instance,
            certificate,
        } => cmd_verify(&instance, &certificate),
        Command::Gen { family } => cmd_gen(&family),
        Command::Encode { instance, out } => cmd_encode(&instance, out.as_deref()),
        Command::Scan { instance } => cmd_scan(&instance),
        Command::Bench(args) => bench::run(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
