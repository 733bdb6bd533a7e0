//! Command-line front end. The binary calls [`run`]; tests call it with
//! in-memory writers.
//!
//! Exit status: 0 on success, 1 when a `verify` check fails, 2 on errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::classes::{GraphClass, HereditaryClass};
use crate::error::{Error, Result};
use crate::gen::{enumerate_levels, for_each_graph, manifest_line, read_graph6, GenSpec, GENERATOR};
use crate::graph::Graph;
use crate::matroid::{enumerate_forbidden_flats, MatroidClassSpec};
use crate::obstructions::{
    bound_violations, duality_check_in, enumerate_spec_in, obstructions_from_graphs, operator_bound,
};
use crate::operators::{iterated_member, Mode, OperatorSpec};

pub const OUTPUT_ENV: &str = "HEREDITARY_OUT";
const DEFAULT_OUTPUT: &str = "hereditary-out";

#[derive(Debug, Parser)]
#[command(
    name = "hereditary",
    version,
    about = "Hereditary graph classes and their minimal obstructions"
)]
pub struct RunConfig {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Directory for artifacts. Defaults to $HEREDITARY_OUT, then ./hereditary-out.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

impl Output {
    fn dir(&self) -> PathBuf {
        self.output_dir
            .clone()
            .or_else(|| std::env::var_os(OUTPUT_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test base-class membership of every graph in a graph6 file.
    Recognize {
        #[arg(long)]
        class: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Test derived-class membership, printing the edits that witness it.
    Member {
        #[arg(long)]
        class: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Write every graph of one order, up to isomorphism.
    Enumerate {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Minimal obstructions of a class through an order, or among input graphs.
    Obstructions {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Check complement duality or order bounds on exhaustive runs.
    Verify {
        /// Base class whose edge-add and edge-apex obstructions are compared.
        #[arg(long, conflicts_with = "bounds", required_unless_present = "bounds")]
        duality: Option<String>,
        /// Edge-add class whose obstructions are checked against the order bound.
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Forbidden flats of a matroid class over GF(2) or GF(3).
    Matroid {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 2)]
        q: u8,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match execute(&config, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

/// Runs a parsed configuration, on a private pool when a thread count is set.
pub fn execute(config: &RunConfig, out: &mut (dyn Write + Send)) -> Result<i32> {
    match config.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::BadClassSpec {
                    spec: format!("--threads {n}"),
                    reason: e.to_string(),
                })?;
            pool.install(|| dispatch(&config.command, out))
        }
        None => dispatch(&config.command, out),
    }
}

fn dispatch(command: &Command, out: &mut (dyn Write + Send)) -> Result<i32> {
    match command {
        Command::Recognize { class, input } => {
            let class = HereditaryClass::parse(class)?;
            for (i, g) in read_graph6(input)?.iter().enumerate() {
                writeln!(out, "{i}\t{}", class.contains(g)).map_err(stdout_err)?;
            }
            Ok(0)
        }
        Command::Member { class, input } => {
            let spec = OperatorSpec::parse(class)?;
            for (i, g) in read_graph6(input)?.iter().enumerate() {
                match iterated_member(g, &spec) {
                    Some(cert) => writeln!(out, "{i}\ttrue\t{cert}"),
                    None => writeln!(out, "{i}\tfalse\t-"),
                }
                .map_err(stdout_err)?;
            }
            Ok(0)
        }
        Command::Enumerate { n_max, output } => {
            let dir = output.dir();
            fs::create_dir_all(&dir).map_err(io_err(&dir))?;
            let path = dir.join(format!("graphs_n{n_max}.g6"));
            // graph6 bytes are far smaller than adjacency rows at order 10
            let mut body = Vec::new();
            let mut count = 0usize;
            for_each_graph(&GenSpec::order(*n_max), |g| {
                body.extend_from_slice(&crate::graph6::encode_bytes(&g));
                body.push(b'\n');
                count += 1;
            })?;
            let mut file = std::io::BufWriter::new(fs::File::create(&path).map_err(io_err(&path))?);
            writeln!(file, "{}", manifest_line(Some(*n_max), count))
                .and_then(|_| file.write_all(&body))
                .and_then(|_| file.flush())
                .map_err(io_err(&path))?;
            let manifest = dir.join("manifest.txt");
            let text = format!("command = enumerate\norder = {n_max}\ncount = {count}\ngenerator = {GENERATOR}\n");
            fs::write(&manifest, text).map_err(io_err(&manifest))?;
            writeln!(out, "{n_max}\t{count}").map_err(stdout_err)?;
            Ok(0)
        }
        Command::Obstructions {
            class,
            n_max,
            input,
            output,
        } => {
            let spec = OperatorSpec::parse(class)?;
            let report = match input {
                Some(path) => {
                    let mut r = obstructions_from_graphs(&spec, read_graph6(path)?)?;
                    r.bound_used = operator_bound(&spec);
                    r
                }
                None => enumerate_spec_in(&spec, &enumerate_levels(*n_max)?)?,
            };
            report.write_dir(output.dir())?;
            for n in report.orders() {
                writeln!(out, "{n}\t{}", report.count(n)).map_err(stdout_err)?;
            }
            writeln!(out, "total\t{}", report.total()).map_err(stdout_err)?;
            Ok(0)
        }
        Command::Verify { duality, bounds, n_max } => {
            let levels = enumerate_levels(*n_max)?;
            if let Some(class) = duality {
                let class = HereditaryClass::parse(class)?;
                let outcome = duality_check_in(&class, &levels)?;
                writeln!(out, "edge-add\t{}", outcome.edge_add.total()).map_err(stdout_err)?;
                writeln!(out, "edge-apex\t{}", outcome.edge_apex.total()).map_err(stdout_err)?;
                match &outcome.counterexample {
                    None => writeln!(out, "duality\tholds"),
                    Some(g) => writeln!(out, "duality\tfails\t{g}"),
                }
                .map_err(stdout_err)?;
                return Ok(if outcome.holds { 0 } else { 1 });
            }
            let spec = OperatorSpec::parse(bounds.as_deref().unwrap_or_default())?;
            verify_bounds(&spec, &levels, out)
        }
        Command::Matroid {
            class,
            q,
            r_max,
            output,
        } => {
            let spec = MatroidClassSpec::parse(class)?;
            let flats = enumerate_forbidden_flats(&spec, *q, *r_max)?;
            let dir = output.dir();
            fs::create_dir_all(&dir).map_err(io_err(&dir))?;
            let mut text = String::new();
            for m in &flats {
                text.push_str(&m.to_string());
                text.push('\n');
                writeln!(out, "{m}").map_err(stdout_err)?;
            }
            let path = dir.join("forbidden_flats.txt");
            fs::write(&path, text).map_err(io_err(&path))?;
            let manifest = dir.join("manifest.txt");
            let max_rank = flats.iter().map(|m| m.rank()).max().unwrap_or(0);
            let text = format!(
                "class = {spec}\nq = {q}\ncomplete_through_rank = {r_max}\ncount = {}\nmax_rank = {max_rank}\ngenerator = {GENERATOR}\n",
                flats.len()
            );
            fs::write(&manifest, text).map_err(io_err(&manifest))?;
            Ok(0)
        }
    }
}

fn verify_bounds(spec: &OperatorSpec, levels: &[Vec<Graph>], out: &mut (dyn Write + Send)) -> Result<i32> {
    let Some(bound) = operator_bound(spec) else {
        return Err(Error::BadClassSpec {
            spec: spec.to_string(),
            reason: "no order bound is known for this class".into(),
        });
    };
    let report = enumerate_spec_in(spec, levels)?;
    let max = report.orders().max().unwrap_or(0);
    let mut ok = max <= bound;
    writeln!(out, "bound\t{bound}").map_err(stdout_err)?;
    writeln!(out, "max_order\t{max}").map_err(stdout_err)?;
    let pure_add = spec.mode == Mode::Single && spec.adds == 1 && spec.edge_deletes == 0 && spec.vertex_deletes == 0;
    if pure_add {
        let base = spec.base.forbidden().expect("bound implies a finite list");
        let violations = bound_violations(&report, &base);
        writeln!(out, "violations\t{}", violations.len()).map_err(stdout_err)?;
        ok &= violations.is_empty();
    }
    writeln!(out, "bounds\t{}", if ok { "hold" } else { "fail" }).map_err(stdout_err)?;
    Ok(if ok { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let status = run(
            std::iter::once("hereditary").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn recognize_prints_tsv() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("in.g6");
        fs::write(&input, ">>graph6<<Ch\nC]\nC~\n").unwrap();
        let (status, out, _) = call(&["recognize", "--class", "threshold", "--input", input.to_str().unwrap()]);
        assert_eq!(status, 0);
        assert_eq!(out, "0\tfalse\n1\tfalse\n2\ttrue\n");
    }

    #[test]
    fn errors_exit_with_two() {
        let (status, _, err) = call(&["recognize", "--class", "nope", "--input", "/nonexistent"]);
        assert_eq!(status, 2);
        assert!(err.contains("nope"), "{err}");
        let (status, _, err) = call(&["enumerate", "--n-max", "11", "--output-dir", "/tmp/unused"]);
        assert_eq!(status, 2);
        assert!(err.contains("cap"), "{err}");
        let (status, _, _) = call(&["frobnicate"]);
        assert_eq!(status, 2);
    }

    #[test]
    fn verify_duality_small() {
        let (status, out, _) = call(&["verify", "--duality", "threshold", "--n-max", "6", "--threads", "2"]);
        assert_eq!(status, 0, "{out}");
        assert!(out.ends_with("duality\tholds\n"));
        let (status, _, err) = call(&["verify", "--duality", "chordal", "--n-max", "5"]);
        assert_eq!(status, 2);
        assert!(err.contains("complement"), "{err}");
    }

    #[test]
    fn help_goes_to_stdout() {
        let (status, out, _) = call(&["--help"]);
        assert_eq!(status, 0);
        assert!(out.contains("obstructions"));
    }
}
