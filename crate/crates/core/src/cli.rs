//! The `leray` command line.
//!
//! Results go to standard output as JSON (JSON-lines for `check` batches),
//! a short summary goes to standard error. Exit codes: 0 when every claim
//! holds, 1 when a checked claim fails, 2 for usage and input errors, 3 when
//! two independent computations of the same quantity disagree.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::DEFAULT_SIMPLEX_GUARD;
use crate::error::{Error, Result};
use crate::harness::{self, Guards, Outcome, DEFAULT_MATERIALIZE_GUARD, DEFAULT_MAX_VERTICES};
use crate::helly::{helly_number_with, FrFamily, DEFAULT_HELLY_CAP};
use crate::homology::reduced_betti_with;
use crate::icss::{e1_page_with, euler_report, page_vanishing_report, IcssConfig};
use crate::io::{self, Family};
use crate::leray::{leray_by_definition_with, leray_by_links_with, LerayConfig, DEFAULT_DEFINITION_CAP};
use crate::multiproj::{
    extremal_example, fiber_bound_with, generalized_mpc_with, multiple_point_complex_with, project,
    DEFAULT_MPC_VERTEX_GUARD,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "leray",
    version,
    about = "Exact Leray numbers, projections, multiple-point complexes and Helly numbers"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Worker threads for batch runs; 0 uses every core.
    #[arg(long, global = true, env = "LERAY_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Leave out elapsed times so that reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timings: bool,
    /// Most simplices any single enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_SIMPLEX_GUARD)]
    simplex_guard: usize,
    /// Most vertices a multiple-point complex may have.
    #[arg(long, global = true, default_value_t = DEFAULT_MPC_VERTEX_GUARD)]
    vertex_guard: usize,
    /// Most vertices for the induced-subcomplex scan of the Leray number.
    #[arg(long, global = true, default_value_t = DEFAULT_DEFINITION_CAP)]
    definition_cap: usize,
    /// Most simplices materialized when comparing D^k with M_k.
    #[arg(long, global = true, default_value_t = DEFAULT_MATERIALIZE_GUARD)]
    materialize_guard: usize,
    /// Most members of a family whose Helly number is computed.
    #[arg(long, global = true, default_value_t = DEFAULT_HELLY_CAP)]
    helly_cap: usize,
}

impl Opts {
    fn guards(&self) -> Guards {
        Guards {
            simplex: self.simplex_guard,
            mpc_vertices: self.vertex_guard,
            definition_cap: self.definition_cap,
            materialize: self.materialize_guard,
        }
    }

    fn leray(&self) -> LerayConfig {
        LerayConfig {
            definition_cap: self.definition_cap,
            simplex_guard: self.simplex_guard,
        }
    }

    fn icss(&self) -> IcssConfig {
        IcssConfig {
            simplex_guard: self.simplex_guard,
            vertex_guard: self.vertex_guard,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Betti numbers of a complex.
    Homology {
        /// Complex JSON file; standard input when absent.
        input: Option<PathBuf>,
    },
    /// Leray number of a complex.
    Leray {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Image of a partitioned complex under the projection, with its fiber bound.
    Project { input: Option<PathBuf> },
    /// Multiple-point complex of one or more partitioned complexes.
    Mps {
        /// Partitioned complex files sharing one partition.
        inputs: Vec<PathBuf>,
        /// Use k copies of a single input.
        #[arg(long)]
        k: Option<usize>,
        /// Restrict to the coordinate-distinct subcomplex D^k.
        #[arg(long)]
        double_point: bool,
    },
    /// First page of the image computing spectral sequence.
    Icss { input: Option<PathBuf> },
    /// Helly number of a family read from a file, or of seeded random boxes.
    Helly {
        input: Option<PathBuf>,
        #[command(flatten)]
        batch: FamilyBatch,
    },
    /// Helly number bound for an (F, r)-family of boxes.
    Amenta {
        input: Option<PathBuf>,
        /// Pieces per member; defaults to the largest member for file input.
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        batch: FamilyBatch,
    },
    /// Verify a claim on one instance or on a seeded batch.
    Check {
        #[command(subcommand)]
        claim: CheckCommand,
    },
    /// Print the extremal partitioned complex for given r and d.
    Example {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Definition,
    Links,
    Both,
}

#[derive(Args, Debug, Clone)]
struct Batch {
    /// Input files; standard input when none is given and no seed is set.
    inputs: Vec<PathBuf>,
    /// First seed of a generated batch.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of generated instances.
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Largest vertex count of a generated instance.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
}

#[derive(Args, Debug, Clone)]
struct FamilyBatch {
    /// First seed of a generated batch.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of generated families.
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Dimension of generated boxes.
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// L(pi(X)) <= r L(X) + r - 1 for partitioned complexes.
    Lproj(Batch),
    /// Vanishing homology of multiple-point complexes above the Leray sum.
    Hmps {
        #[command(flatten)]
        batch: Batch,
        /// Copies of a single input file.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// L of an intersection is at most the sum of the Leray numbers.
    Inter(Batch),
    /// h(F) <= 1 + L(N(F)).
    Hl {
        input: Option<PathBuf>,
        #[command(flatten)]
        batch: FamilyBatch,
    },
    /// Consistency of the E1 page.
    Icss(Batch),
    /// h(G) <= r (d + 1) for (F, r)-families of boxes.
    Amenta {
        input: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        batch: FamilyBatch,
    },
}

/// Where an instance came from.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
enum Source {
    Seed { seed: u64 },
    Files { files: Vec<String> },
    Stdin { stdin: bool },
}

#[derive(Serialize)]
struct ReportLine<'a> {
    command: &'a str,
    instance: &'a Source,
    #[serde(flatten)]
    outcome: &'a Outcome,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

struct Io<'a> {
    stdin: &'a mut (dyn Read + Send),
    out: &'a mut (dyn Write + Send),
    err: &'a mut (dyn Write + Send),
}

/// Runs the command line on the process streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdin(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

/// Runs the command line on the given streams.
pub fn run_with<I, T>(
    args: I,
    stdin: &mut (dyn Read + Send),
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.opts.workers).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin, out, err };
    let result = pool.install(|| dispatch(&cli, &mut io));
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    };
    let _ = io.out.flush();
    code
}

fn read_text(path: Option<&Path>, stdin: &mut (dyn Read + Send)) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| Error::Format(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn with_path<T>(path: Option<&Path>, r: Result<T>) -> Result<T> {
    match (path, r) {
        (Some(p), Err(Error::Format(msg))) => Err(Error::Format(format!("{}: {msg}", p.display()))),
        (_, r) => r,
    }
}

fn emit(io: &mut Io, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *io.out, value)?;
    io.out.write_all(b"\n")?;
    Ok(())
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Homology { input } => {
            let text = read_text(input.as_deref(), io.stdin)?;
            let x = with_path(input.as_deref(), io::complex_from_json(&text))?;
            let b = reduced_betti_with(&x, opts.simplex_guard)?;
            emit(io, &b)?;
            writeln!(
                io.err,
                "homology: reduced Betti numbers {:?}, euler characteristic {}",
                b.reduced, b.euler
            )?;
            Ok(EXIT_OK)
        }
        Command::Leray { input, method } => {
            let text = read_text(input.as_deref(), io.stdin)?;
            let x = with_path(input.as_deref(), io::complex_from_json(&text))?;
            let cfg = opts.leray();
            match method {
                Method::Definition | Method::Links => {
                    let cert = if *method == Method::Definition {
                        leray_by_definition_with(&x, &cfg)?
                    } else {
                        leray_by_links_with(&x, &cfg)?
                    };
                    emit(io, &cert)?;
                    writeln!(io.err, "leray: L = {}", cert.value)?;
                    Ok(EXIT_OK)
                }
                Method::Both => {
                    let a = leray_by_definition_with(&x, &cfg)?;
                    let b = leray_by_links_with(&x, &cfg)?;
                    let agree = a.value == b.value && a.recheck(&x)? && b.recheck(&x)?;
                    emit(
                        io,
                        &json!({ "value": a.value, "agree": agree, "definition": a, "links": b }),
                    )?;
                    if agree {
                        writeln!(io.err, "leray: L = {}, both methods agree", a.value)?;
                        Ok(EXIT_OK)
                    } else {
                        writeln!(
                            io.err,
                            "leray: methods disagree ({} by definition, {} by links)",
                            a.value, b.value
                        )?;
                        Ok(EXIT_ORACLE)
                    }
                }
            }
        }
        Command::Project { input } => {
            let text = read_text(input.as_deref(), io.stdin)?;
            let px = with_path(input.as_deref(), io::partitioned_from_json(&text))?;
            let image = project(&px);
            let fb = fiber_bound_with(&px, opts.simplex_guard)?;
            let image_json: Value = serde_json::from_str(&io::complex_to_json(&image))?;
            emit(
                io,
                &json!({ "image": image_json, "fiber_bound": fb.r, "witness": fb.witness }),
            )?;
            writeln!(
                io.err,
                "project: {} facets in the image, fiber bound {}",
                image.facets().len(),
                fb.r
            )?;
            Ok(EXIT_OK)
        }
        Command::Mps {
            inputs,
            k,
            double_point,
        } => {
            let mut pxs = Vec::new();
            if inputs.is_empty() {
                let text = read_text(None, io.stdin)?;
                pxs.push(io::partitioned_from_json(&text)?);
            }
            for p in inputs {
                let text = read_text(Some(p), io.stdin)?;
                pxs.push(with_path(Some(p), io::partitioned_from_json(&text))?);
            }
            let m = match (k, pxs.len()) {
                (Some(k), 1) => multiple_point_complex_with(&pxs[0], *k, opts.vertex_guard)?,
                (Some(_), _) => return Err(Error::InvalidArgument("--k takes exactly one input".into())),
                (None, _) => generalized_mpc_with(&pxs, opts.vertex_guard)?,
            };
            let m = if *double_point { m.double_point_closure()? } else { m };
            let sub = m.to_complex(opts.simplex_guard)?;
            let labels = sub
                .to_parent
                .iter()
                .map(|&v| {
                    let t = m.vertex(v).tuple;
                    let names: Vec<String> = t.iter().map(|&u| pxs[0].complex().label(u)).collect();
                    format!("({})", names.join(","))
                })
                .collect();
            let x = sub.complex.with_labels(labels)?;
            io.out.write_all(io::complex_to_json(&x).as_bytes())?;
            writeln!(
                io.err,
                "mps: k = {}, {} vertices, {} facets",
                m.k(),
                x.vertex_count(),
                x.facets().len()
            )?;
            Ok(EXIT_OK)
        }
        Command::Icss { input } => {
            let text = read_text(input.as_deref(), io.stdin)?;
            let px = with_path(input.as_deref(), io::partitioned_from_json(&text))?;
            let page = e1_page_with(&px, &opts.icss())?;
            let euler = euler_report(&px, &page)?;
            let vanishing = page_vanishing_report(&px, &page)?;
            let holds = euler.holds && vanishing.holds;
            emit(
                io,
                &json!({
                    "r": page.r,
                    "page": page.table,
                    "column_r": page.column_r,
                    "image_betti": page.image_betti,
                    "euler": euler,
                    "vanishing": vanishing,
                    "holds": holds,
                }),
            )?;
            writeln!(
                io.err,
                "icss: r = {}, page sum {}, chi(Y) = {}",
                page.r, euler.page_sum, euler.euler_image
            )?;
            Ok(if holds { EXIT_OK } else { EXIT_CLAIM_FAILED })
        }
        Command::Helly { input, batch } => helly_command(opts, io, input.as_deref(), batch),
        Command::Amenta { input, r, batch } => run_families(
            opts,
            io,
            "amenta",
            input.as_deref(),
            batch,
            |text| amenta_from_text(text, *r),
            |seed| harness::amenta_instance(seed, batch.d, r.unwrap_or(2)),
            harness::check_amenta_claims,
        ),
        Command::Check { claim } => check_command(opts, io, claim),
        Command::Example { r, d } => {
            let px = extremal_example(*r, *d)?;
            io.out.write_all(io::partitioned_to_json(&px).as_bytes())?;
            writeln!(
                io.err,
                "example: r = {r}, d = {d}, {} vertices in {} parts",
                px.complex().vertex_count(),
                px.part_count()
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn amenta_from_text(text: &str, r: Option<usize>) -> Result<FrFamily> {
    match io::family_from_json(text)? {
        Family::Boxes(u) => {
            let r = r.unwrap_or_else(|| u.members().iter().map(Vec::len).max().unwrap_or(1).max(1));
            FrFamily::from_unions(&u, r)
        }
        Family::Atoms(_) => Err(Error::Format("an (F, r)-family needs boxes, not atoms".into())),
    }
}

fn helly_command(opts: &Opts, io: &mut Io, input: Option<&Path>, batch: &FamilyBatch) -> Result<i32> {
    let run_one = |f: &dyn Fn() -> Result<crate::helly::HellyReport>| -> Result<(Value, bool)> {
        let rep = f()?;
        let agree = rep.algorithms_agree();
        Ok((serde_json::to_value(&rep)?, agree))
    };
    let mut results: Vec<(Source, Value, bool)> = Vec::new();
    match batch.seed {
        Some(seed) => {
            let rows = (0..batch.count)
                .into_par_iter()
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    let f = harness::helly_instance(s, batch.d)?;
                    let (v, a) = run_one(&|| helly_number_with(&f, opts.helly_cap))?;
                    Ok((Source::Seed { seed: s }, v, a))
                })
                .collect::<Result<Vec<_>>>()?;
            results.extend(rows);
        }
        None => {
            let text = read_text(input, io.stdin)?;
            let fam = with_path(input, io::family_from_json(&text))?;
            let (v, a) = match &fam {
                Family::Boxes(u) => run_one(&|| helly_number_with(u, opts.helly_cap))?,
                Family::Atoms(a) => run_one(&|| helly_number_with(a, opts.helly_cap))?,
            };
            results.push((source_of(input), v, a));
        }
    }
    let mut code = EXIT_OK;
    for (src, v, agree) in &results {
        emit(
            io,
            &json!({ "command": "helly", "instance": src, "report": v, "version": VERSION }),
        )?;
        if !agree {
            code = EXIT_ORACLE;
        }
    }
    writeln!(
        io.err,
        "helly: {} families, {}",
        results.len(),
        if code == EXIT_OK {
            "algorithms agree"
        } else {
            "ALGORITHMS DISAGREE"
        }
    )?;
    Ok(code)
}

fn source_of(input: Option<&Path>) -> Source {
    match input {
        Some(p) if p != Path::new("-") => Source::Files {
            files: vec![p.display().to_string()],
        },
        _ => Source::Stdin { stdin: true },
    }
}

fn sources_of(inputs: &[PathBuf]) -> Source {
    if inputs.is_empty() {
        Source::Stdin { stdin: true }
    } else {
        Source::Files {
            files: inputs.iter().map(|p| p.display().to_string()).collect(),
        }
    }
}

type Row = (Source, Result<Vec<Outcome>>, u64);

fn timed(source: Source, f: impl FnOnce() -> Result<Vec<Outcome>>) -> Row {
    let start = Instant::now();
    let r = f();
    (source, r, start.elapsed().as_millis() as u64)
}

/// Runs generated instances in parallel and returns them in seed order.
fn seeded<T>(
    seed: u64,
    count: u64,
    make: impl Fn(u64) -> Result<T> + Sync,
    check: impl Fn(&T) -> Result<Vec<Outcome>> + Sync,
) -> Vec<Row> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            timed(Source::Seed { seed: s }, || check(&make(s)?))
        })
        .collect()
}

fn report(opts: &Opts, io: &mut Io, command: &str, rows: Vec<Row>) -> Result<i32> {
    let (mut checked, mut failed, mut skipped, mut disagreements, mut errors) = (0, 0, 0, 0, 0);
    for (source, result, elapsed) in &rows {
        match result {
            Ok(outcomes) => {
                for o in outcomes {
                    let line = ReportLine {
                        command,
                        instance: source,
                        outcome: o,
                        version: VERSION,
                        elapsed_ms: (!opts.no_timings).then_some(*elapsed),
                    };
                    emit(io, &line)?;
                    if o.is_skipped() {
                        skipped += 1;
                    } else {
                        checked += 1;
                    }
                    if !o.holds() {
                        failed += 1;
                    }
                    if !o.oracle_agrees() {
                        disagreements += 1;
                    }
                }
            }
            Err(e) => {
                errors += 1;
                emit(
                    io,
                    &json!({ "command": command, "instance": source, "error": e.to_string(), "version": VERSION }),
                )?;
                writeln!(io.err, "{command}: error: {e}")?;
            }
        }
    }
    writeln!(
        io.err,
        "{command}: {} instances, {checked} claims checked, {failed} failed, {skipped} skipped, {disagreements} oracle disagreements",
        rows.len()
    )?;
    Ok(if errors > 0 {
        EXIT_USAGE
    } else if disagreements > 0 {
        EXIT_ORACLE
    } else if failed > 0 {
        EXIT_CLAIM_FAILED
    } else {
        EXIT_OK
    })
}

#[allow(clippy::too_many_arguments)]
fn run_families<T: Sync>(
    opts: &Opts,
    io: &mut Io,
    command: &str,
    input: Option<&Path>,
    batch: &FamilyBatch,
    parse: impl Fn(&str) -> Result<T>,
    make: impl Fn(u64) -> Result<T> + Sync,
    check: impl Fn(&T, &Guards) -> Result<Vec<Outcome>> + Sync,
) -> Result<i32> {
    let guards = opts.guards();
    let rows = match batch.seed {
        Some(seed) => seeded(seed, batch.count, make, |f| check(f, &guards)),
        None => {
            let text = read_text(input, io.stdin)?;
            let f = with_path(input, parse(&text))?;
            vec![timed(source_of(input), || check(&f, &guards))]
        }
    };
    report(opts, io, command, rows)
}

fn load_partitioned(io: &mut Io, inputs: &[PathBuf]) -> Result<Vec<crate::multiproj::PartitionedComplex>> {
    if inputs.is_empty() {
        let text = read_text(None, io.stdin)?;
        return Ok(vec![io::partitioned_from_json(&text)?]);
    }
    inputs
        .iter()
        .map(|p| {
            let text = read_text(Some(p), io.stdin)?;
            with_path(Some(p), io::partitioned_from_json(&text))
        })
        .collect()
}

fn load_complexes(io: &mut Io, inputs: &[PathBuf]) -> Result<Vec<crate::complex::SimplicialComplex>> {
    if inputs.is_empty() {
        let text = read_text(None, io.stdin)?;
        return Ok(vec![io::complex_from_json(&text)?]);
    }
    inputs
        .iter()
        .map(|p| {
            let text = read_text(Some(p), io.stdin)?;
            with_path(Some(p), io::complex_from_json(&text))
        })
        .collect()
}

fn check_command(opts: &Opts, io: &mut Io, claim: &CheckCommand) -> Result<i32> {
    let guards = opts.guards();
    let g = &guards;
    match claim {
        CheckCommand::Lproj(b) => {
            let rows = match b.seed {
                Some(seed) => seeded(
                    seed,
                    b.count,
                    |s| harness::projection_instance(s, b.max_vertices),
                    |px| harness::check_lproj(px, g),
                ),
                None => {
                    let pxs = load_partitioned(io, &b.inputs)?;
                    vec![timed(sources_of(&b.inputs), || {
                        let mut out = Vec::new();
                        for px in &pxs {
                            out.extend(harness::check_lproj(px, g)?);
                        }
                        Ok(out)
                    })]
                }
            };
            report(opts, io, "check lproj", rows)
        }
        CheckCommand::Hmps { batch: b, k } => {
            let rows = match b.seed {
                Some(seed) => seeded(
                    seed,
                    b.count,
                    |s| harness::mps_instance(s, b.max_vertices),
                    |pxs| harness::check_hmps(pxs, g),
                ),
                None => {
                    let mut pxs = load_partitioned(io, &b.inputs)?;
                    if pxs.len() == 1 {
                        pxs = vec![pxs[0].clone(); (*k).max(1)];
                    }
                    vec![timed(sources_of(&b.inputs), || harness::check_hmps(&pxs, g))]
                }
            };
            report(opts, io, "check hmps", rows)
        }
        CheckCommand::Inter(b) => {
            let rows = match b.seed {
                Some(seed) => seeded(
                    seed,
                    b.count,
                    |s| harness::intersection_instance(s, b.max_vertices),
                    |xs| harness::check_inter(xs, g),
                ),
                None => {
                    let xs = load_complexes(io, &b.inputs)?;
                    vec![timed(sources_of(&b.inputs), || harness::check_inter(&xs, g))]
                }
            };
            report(opts, io, "check inter", rows)
        }
        CheckCommand::Icss(b) => {
            let rows = match b.seed {
                Some(seed) => seeded(
                    seed,
                    b.count,
                    |s| harness::projection_instance(s, b.max_vertices),
                    |px| harness::check_icss(px, g),
                ),
                None => {
                    let pxs = load_partitioned(io, &b.inputs)?;
                    vec![timed(sources_of(&b.inputs), || {
                        let mut out = Vec::new();
                        for px in &pxs {
                            out.extend(harness::check_icss(px, g)?);
                        }
                        Ok(out)
                    })]
                }
            };
            report(opts, io, "check icss", rows)
        }
        CheckCommand::Hl { input, batch } => {
            let guards = opts.guards();
            let rows = match batch.seed {
                Some(seed) => seeded(
                    seed,
                    batch.count,
                    |s| harness::helly_instance(s, batch.d),
                    |f| harness::check_hl_claim(f, &guards),
                ),
                None => {
                    let text = read_text(input.as_deref(), io.stdin)?;
                    let fam = with_path(input.as_deref(), io::family_from_json(&text))?;
                    vec![timed(source_of(input.as_deref()), || match &fam {
                        Family::Boxes(u) => harness::check_hl_claim(u, &guards),
                        Family::Atoms(a) => harness::check_hl_claim(a, &guards),
                    })]
                }
            };
            report(opts, io, "check hl", rows)
        }
        CheckCommand::Amenta { input, r, batch } => run_families(
            opts,
            io,
            "check amenta",
            input.as_deref(),
            batch,
            |text| amenta_from_text(text, *r),
            |seed| harness::amenta_instance(seed, batch.d, r.unwrap_or(2)),
            harness::check_amenta_claims,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(args, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn every_check_names_its_claim() {
        for (sub, claim) in [
            ("lproj", "lproj"),
            ("hmps", "hmps"),
            ("inter", "inter"),
            ("icss", "icss"),
        ] {
            let (code, out, _) = run(
                &["leray", "check", sub, "--seed", "2", "--count", "2", "--no-timings"],
                "",
            );
            assert_eq!(code, EXIT_OK, "{sub}");
            for line in out.lines() {
                let v: Value = serde_json::from_str(line).unwrap();
                assert_eq!(v["claim"], claim);
                assert_eq!(v["command"], format!("check {sub}"));
                assert!(v["statement"].is_string());
            }
        }
    }

    #[test]
    fn summary_goes_to_stderr() {
        let (code, out, err) = run(&["leray", "homology"], r#"{"facets":[[0],[1]]}"#);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "{\"reduced\":[1],\"euler\":2}\n");
        assert!(err.starts_with("homology:"));
    }

    #[test]
    fn single_method_leray() {
        let (code, out, _) = run(
            &["leray", "leray", "--method", "definition"],
            r#"{"facets":[[0,1],[1,2],[0,2]]}"#,
        );
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 2);
        assert_eq!(v["method"], "definition");
    }

    #[test]
    fn amenta_file_input() {
        let fam = r#"{"d":1,"members":{"A":[[[0,1]],[[4,5]]],"B":[[[1,4]]],"C":[[[2,3]]]}}"#;
        let (code, out, _) = run(&["leray", "check", "amenta", "--no-timings"], fam);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.lines().count(), 3);
    }
}
