//! Runs a set of algorithms over every file of a corpus directory and writes a
//! JSON report with answers, timings and pairwise agreement counts.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use cfcut::format::parse_instance;
use cfcut::{solve, verify_cut, Algorithm, Instance, SolveOptions};
use clap::Args;
use serde::Serialize;

use crate::{read, BackendArg};

#[derive(Args)]
pub(crate) struct BenchArgs {
    corpus: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "brute,fpt,sat")]
    algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 1)]
    repetitions: usize,
    #[arg(long, value_enum, default_value_t = BackendArg::Dpll)]
    backend: BackendArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Serialize)]
struct Run {
    algo: String,
    /// `cut`, `nocut`, `nocut probable`, `skipped` or `error`.
    answer: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cut_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
    seconds_min: f64,
    seconds_mean: f64,
}

#[derive(Serialize)]
struct Entry {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    runs: Vec<Run>,
    ok: bool,
}

#[derive(Serialize)]
struct Report {
    algos: Vec<String>,
    repetitions: usize,
    instances: Vec<Entry>,
    /// `agreement[a][b]`: instances where both gave exact answers that match.
    agreement: BTreeMap<String, BTreeMap<String, usize>>,
    failures: usize,
}

fn run_one(inst: &Instance, opts: &SolveOptions, reps: usize) -> (Run, Option<bool>) {
    let mut times = Vec::with_capacity(reps);
    let mut last = None;
    for _ in 0..reps {
        let start = Instant::now();
        let out = solve(inst, opts);
        times.push(start.elapsed().as_secs_f64());
        last = Some(out);
    }
    let seconds_min = times.iter().copied().fold(f64::INFINITY, f64::min);
    let seconds_mean = times.iter().sum::<f64>() / times.len() as f64;
    let mut run = Run {
        algo: opts.algorithm.to_string(),
        answer: String::new(),
        cut_size: None,
        message: None,
        seconds_min,
        seconds_mean,
    };
    // the second component is the exact existence answer, if any
    let exact = match last.expect("at least one repetition") {
        Ok(answer) => match answer.cut {
            Some(cut) => match verify_cut(inst, &cut) {
                Ok(r) if r.is_valid() => {
                    run.answer = "cut".into();
                    run.cut_size = Some(cut.len());
                    Some(true)
                }
                _ => {
                    run.answer = "error".into();
                    run.message = Some("returned cut fails verification".into());
                    None
                }
            },
            None if answer.exact => {
                run.answer = "nocut".into();
                Some(false)
            }
            None => {
                run.answer = "nocut probable".into();
                None
            }
        },
        Err(e @ cfcut::Error::Capacity { .. }) => {
            run.answer = "skipped".into();
            run.message = Some(e.to_string());
            None
        }
        Err(e) => {
            run.answer = "error".into();
            run.message = Some(e.to_string());
            None
        }
    };
    (run, exact)
}

pub(crate) fn run(args: &BenchArgs) -> Result<u8> {
    let mut files: Vec<PathBuf> = fs::read_dir(&args.corpus)
        .with_context(|| format!("cannot read {}", args.corpus.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.is_file());
    files.sort();

    let reps = args.repetitions.max(1);
    let names: Vec<String> = args.algos.iter().map(|a| a.to_string()).collect();
    let mut agreement: BTreeMap<String, BTreeMap<String, usize>> = names
        .iter()
        .map(|a| (a.clone(), names.iter().map(|b| (b.clone(), 0)).collect()))
        .collect();
    let mut instances = Vec::with_capacity(files.len());
    let mut failures = 0;

    for path in files {
        let file = path.display().to_string();
        let inst = match read(&path).and_then(|t| Ok(parse_instance(&t)?)) {
            Ok(inst) => inst,
            Err(e) => {
                eprintln!("{file}: {e:#}");
                failures += 1;
                instances.push(Entry {
                    file,
                    vertices: None,
                    edges: None,
                    error: Some(format!("{e:#}")),
                    runs: Vec::new(),
                    ok: false,
                });
                continue;
            }
        };
        let mut runs = Vec::with_capacity(args.algos.len());
        let mut exact = Vec::with_capacity(args.algos.len());
        for &algorithm in &args.algos {
            let opts = SolveOptions {
                algorithm,
                backend: args.backend.build(args.seed, None, args.jobs),
                jobs: args.jobs,
                ..SolveOptions::default()
            };
            let (run, answer) = run_one(&inst, &opts, reps);
            runs.push(run);
            exact.push(answer);
        }
        for (i, a) in names.iter().enumerate() {
            for (j, b) in names.iter().enumerate() {
                if exact[i].is_some() && exact[i] == exact[j] {
                    *agreement.get_mut(a).unwrap().get_mut(b).unwrap() += 1;
                }
            }
        }
        let decided: Vec<bool> = exact.iter().flatten().copied().collect();
        let ok = decided.windows(2).all(|w| w[0] == w[1])
            && runs.iter().all(|r| r.answer != "error");
        if !ok {
            eprintln!("{file}: algorithms disagree or failed");
            failures += 1;
        }
        instances.push(Entry {
            file,
            vertices: Some(inst.vertex_count()),
            edges: Some(inst.edge_count()),
            error: None,
            runs,
            ok,
        });
    }

    let report = Report {
        algos: names,
        repetitions: reps,
        instances,
        agreement,
        failures,
    };
    let text = serde_json::to_string_pretty(&report)? + "\n";
    match &args.report {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(if failures == 0 { 0 } else { 1 })
}
