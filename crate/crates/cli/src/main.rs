mod args;
mod error;
mod experiment;
mod rs;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use semistream::algo::{predicted_factor, run_two_pass, MetaParams, MuSource, RunReport};
use semistream::instances::{gen_random_planted, HardInstance};
use semistream::io::{read_graph_file, write_graph, write_source};
use semistream::oracle::maximum_matching;

use args::{Cli, Command, Format, GenCommand, RunArgs};
use error::Failure;

/// Standard output, or a buffered file when a path is given.
pub fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Report fields in output order.
fn report_fields(r: &RunReport) -> Vec<(&'static str, String)> {
    vec![
        ("p", r.p.to_string()),
        ("d", r.d.to_string()),
        ("seed", r.seed.to_string()),
        ("first_pass_size", r.first_pass_size.to_string()),
        ("sampled_size", r.sampled_size.to_string()),
        ("left_wing_size", r.wing_sizes.0.to_string()),
        ("right_wing_size", r.wing_sizes.1.to_string()),
        ("candidates", r.candidates.to_string()),
        ("augmentations", r.augmentations.to_string()),
        ("final_size", r.final_size.to_string()),
        ("mu", opt(r.mu)),
        ("epsilon", opt(r.epsilon)),
        ("peak_space", r.peak_space.to_string()),
        ("passes", r.passes.to_string()),
        ("predicted_factor", predicted_factor(r.p, r.d).unwrap().to_string()),
        ("ratio", opt(r.ratio())),
    ]
}

fn cmd_run(a: RunArgs) -> Result<(), Failure> {
    let params = MetaParams::new(a.p, a.d, a.seed)?;
    let report = match (&a.source.input, a.source.hard) {
        (Some(path), _) => {
            let g = read_graph_file(path)?;
            let mu = if a.no_oracle { MuSource::Skip } else { MuSource::Oracle };
            run_two_pass(&g, &params, mu)?.report
        }
        (None, Some(0)) => return Err(Failure::Usage("--hard needs N >= 1".into())),
        (None, Some(n)) => {
            let inst = HardInstance::new(n);
            let mu = if a.no_oracle { MuSource::Skip } else { MuSource::Known(inst.mu()) };
            run_two_pass(&inst, &params, mu)?.report
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let fields = report_fields(&report);
    let mut w = sink(a.out.as_deref())?;
    match a.format {
        Format::Text => {
            for (k, v) in &fields {
                writeln!(w, "{k:<18}{v}")?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(fields.iter().map(|f| f.0))?;
            csv.write_record(fields.iter().map(|f| &f.1))?;
            csv.flush()?;
            return Ok(());
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_gen(g: GenCommand) -> Result<(), Failure> {
    match g {
        GenCommand::Hard { n, out } => {
            if n == 0 {
                return Err(Failure::Usage("--N must be at least 1".into()));
            }
            let mut w = sink(out.as_deref())?;
            write_source(&mut w, &HardInstance::new(n))?;
            w.flush()?;
        }
        GenCommand::Random { n, density, seed, out } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Failure::Usage(format!("density must lie in [0, 1], got {density}")));
            }
            let (graph, _) = gen_random_planted(n, density, seed);
            let mut w = sink(out.as_deref())?;
            write_graph(&mut w, &graph)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Gen(g) => cmd_gen(g),
        Command::Rs(r) => rs::run(r),
        Command::Oracle { input } => {
            let g = read_graph_file(input)?;
            println!("{}", maximum_matching(&g).len());
            Ok(())
        }
        Command::Experiment(e) => experiment::run(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
