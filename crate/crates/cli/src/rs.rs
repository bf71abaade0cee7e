use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::Path;

use semistream::io::{read_graph_file, write_graph, write_graph_file};
use semistream::rs::{
    gen_lambda, read_manifest, write_manifest, ColouringParams, LambdaOptions, Manifest, RsInstance,
};

use crate::args::{LambdaArgs, RsCommand};
use crate::error::Failure;
use crate::sink;

const GRAPH: &str = "graph.txt";
const MANIFEST: &str = "manifest.txt";

fn load(dir: &Path) -> Result<RsInstance, Failure> {
    let man = read_manifest(BufReader::new(File::open(dir.join(MANIFEST))?))?;
    let graph = read_graph_file(dir.join(GRAPH))?;
    Ok(man.instance(&graph)?)
}

fn summarize(w: &mut dyn Write, inst: &RsInstance) -> io::Result<bool> {
    let p = inst.params();
    writeln!(w, "params m={} k={} delta={} w={} shift={}", p.m(), p.k(), p.delta(), p.w(), p.shift())?;
    writeln!(w, "vertices per side {}", inst.n())?;
    let sets: Vec<String> = inst.family().iter().map(|s| format!("{s:?}")).collect();
    writeln!(w, "family of {}: {}", sets.len(), sets.join(" "))?;
    for (id, m) in inst.matchings() {
        writeln!(w, "{id} {} edges", m.len())?;
    }
    let Some(c) = inst.certificate() else {
        writeln!(w, "certificate: none")?;
        return Ok(false);
    };
    for (name, ok, count) in Manifest::of(inst).verdicts {
        writeln!(w, "check {name:<16}{} ({count} violations)", if ok { "pass" } else { "FAIL" })?;
    }
    for cov in &c.coverage {
        writeln!(
            w,
            "coverage set {}: {}/{} = {:.4} (1-2delta = {})",
            cov.set,
            cov.size,
            inst.n(),
            cov.fraction,
            cov.target
        )?;
    }
    writeln!(w, "certificate: {}", if c.passed() { "pass" } else { "FAIL" })?;
    Ok(c.passed())
}

fn verdict(passed: bool) -> Result<(), Failure> {
    if passed {
        Ok(())
    } else {
        Err(Failure::Certification("certification failed".into()))
    }
}

fn lambda(a: LambdaArgs) -> Result<(), Failure> {
    let mut inst = match (&a.dir, a.m, a.k) {
        (Some(dir), _, _) => load(dir)?,
        (None, Some(m), Some(k)) => RsInstance::build(ColouringParams::new(m, k)?)?,
        _ => return Err(Failure::Usage("give --dir or both --m and --k".into())),
    };
    if !inst.certify().passed() {
        return verdict(false);
    }
    let opts = LambdaOptions {
        plus: a.plus,
        include_mirrored: !a.no_mirrored,
        designated: a.designated,
        keep_size: a.keep,
    };
    let c = gen_lambda(&inst, opts, a.seed)?;
    let mut w = sink(a.out.as_deref())?;
    write_graph(&mut w, &c.graph)?;
    w.flush()?;
    eprintln!(
        "special {} of {} matchings, keep {}, pads {}+{}, edges {} (alice {}, bob {}{})",
        c.special,
        c.matchings.len(),
        c.keep_size,
        c.pad_x.len(),
        c.pad_y.len(),
        c.graph.edge_count(),
        c.alice.len(),
        c.bob.len(),
        c.overlay.as_ref().map(|p| format!(", overlay {}", p.len())).unwrap_or_default()
    );
    Ok(())
}

pub fn run(cmd: RsCommand) -> Result<(), Failure> {
    match cmd {
        RsCommand::Build { m, k, out, vertex_cap } => {
            let mut inst = RsInstance::build_capped(ColouringParams::new(m, k)?, vertex_cap)?;
            inst.certify();
            fs::create_dir_all(&out)?;
            write_graph_file(out.join(GRAPH), &inst.union_graph()?)?;
            write_manifest(File::create(out.join(MANIFEST))?, &Manifest::of(&inst))?;
            let passed = summarize(&mut io::stdout().lock(), &inst)?;
            verdict(passed)
        }
        RsCommand::Certify { dir } => {
            let mut inst = load(&dir)?;
            inst.certify();
            let passed = summarize(&mut io::stdout().lock(), &inst)?;
            verdict(passed)
        }
        RsCommand::Lambda(a) => lambda(a),
    }
}
