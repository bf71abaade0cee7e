use std::path::PathBuf;

use rayon::prelude::*;
use semistream::algo::{predicted_factor, run_two_pass, MetaParams, MuSource, RunReport};
use semistream::instances::{gen_random_planted, HardInstance};
use semistream::io::read_graph_file;
use semistream::oracle::maximum_matching;
use semistream::BipartiteGraph;

use crate::args::ExperimentCommand;
use crate::error::Failure;
use crate::sink;

enum Source {
    Hard(HardInstance),
    /// `n`, extra-edge density; a fresh instance per trial.
    Planted(u32, f64),
    File(BipartiteGraph, u64),
}

fn parse_source(s: &str) -> Result<Source, Failure> {
    let bad = || Failure::Usage(format!("bad --source `{s}`; expected hard:N, planted:N:DENSITY or file:PATH"));
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    match kind {
        "hard" => match rest.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(Source::Hard(HardInstance::new(n))),
            _ => Err(bad()),
        },
        "planted" => {
            let (n, density) = rest.split_once(':').ok_or_else(bad)?;
            let n = n.parse().map_err(|_| bad())?;
            let density: f64 = density.parse().map_err(|_| bad())?;
            if !(0.0..=1.0).contains(&density) {
                return Err(bad());
            }
            Ok(Source::Planted(n, density))
        }
        "file" => {
            let g = read_graph_file(PathBuf::from(rest))?;
            let mu = maximum_matching(&g).len() as u64;
            Ok(Source::File(g, mu))
        }
        _ => Err(bad()),
    }
}

const EMPIRICAL_HEADER: [&str; 14] = [
    "source",
    "d",
    "p",
    "trial",
    "seed",
    "predicted_factor",
    "ratio",
    "first_pass_size",
    "augmentations",
    "final_size",
    "mu",
    "epsilon",
    "peak_space",
    "status",
];

fn trial(source: &Source, params: &MetaParams, trial_seed: u64) -> Result<RunReport, String> {
    let run = match source {
        Source::Hard(inst) => run_two_pass(inst, params, MuSource::Known(inst.mu())),
        Source::Planted(n, density) => {
            let (g, planted) = gen_random_planted(*n, *density, trial_seed);
            run_two_pass(&g, params, MuSource::Known(planted.len() as u64))
        }
        Source::File(g, mu) => run_two_pass(g, params, MuSource::Known(*mu)),
    };
    run.map(|r| r.report).map_err(|e| e.to_string())
}

fn row(label: &str, d: u32, p: f64, t: u32, seed: u64, result: Result<RunReport, String>) -> Vec<String> {
    let mut out = vec![
        label.to_string(),
        d.to_string(),
        p.to_string(),
        t.to_string(),
        seed.to_string(),
        predicted_factor(p, d).unwrap().to_string(),
    ];
    match result {
        Ok(r) => {
            out.extend([
                r.ratio().map(|x| x.to_string()).unwrap_or_default(),
                r.first_pass_size.to_string(),
                r.augmentations.to_string(),
                r.final_size.to_string(),
                r.mu.map(|x| x.to_string()).unwrap_or_default(),
                r.epsilon.map(|x| x.to_string()).unwrap_or_default(),
                r.peak_space.to_string(),
                "ok".to_string(),
            ]);
        }
        Err(e) => {
            out.extend(std::iter::repeat_n(String::new(), 7));
            out.push(format!("error: {e}"));
        }
    }
    out
}

pub fn run(cmd: ExperimentCommand) -> Result<(), Failure> {
    match cmd {
        ExperimentCommand::Analytic { d, p_step, out } => {
            if !(p_step > 0.0 && p_step <= 1.0) {
                return Err(Failure::Usage(format!("--p-step must lie in (0, 1], got {p_step}")));
            }
            let steps = (1.0 / p_step).round().max(1.0) as u32;
            let mut w = csv::Writer::from_writer(sink(out.as_deref())?);
            w.write_record(["d", "p", "predicted_factor"])?;
            for &d in &d {
                for i in 1..=steps {
                    let p = i as f64 / steps as f64;
                    w.write_record([d.to_string(), p.to_string(), predicted_factor(p, d)?.to_string()])?;
                }
            }
            w.flush()?;
        }
        ExperimentCommand::Empirical { source, d, p, trials, seed, out } => {
            if trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let src = parse_source(&source)?;
            let mut grid = Vec::new();
            for &d in &d {
                for &p in &p {
                    for t in 0..trials {
                        grid.push((d, p, t));
                    }
                }
            }
            // Trials run in parallel; collect keeps grid order.
            let rows: Vec<Vec<String>> = grid
                .par_iter()
                .map(|&(d, p, t)| {
                    let s = seed + t as u64;
                    let params = MetaParams::new(p, d, s).map_err(|e| e.to_string());
                    row(&source, d, p, t, s, params.and_then(|params| trial(&src, &params, s)))
                })
                .collect();
            let mut w = csv::Writer::from_writer(sink(out.as_deref())?);
            w.write_record(EMPIRICAL_HEADER)?;
            for r in rows {
                w.write_record(&r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
