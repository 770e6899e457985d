//! Command-line driver: file formats, reports, drawings and the
//! subcommands of the `outerspatial` binary.

pub mod format;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use outerspatial::decider::{decide_outerspatial_with, DeciderError, DeciderOptions, NestedPlane};
use outerspatial::generate::{self, RandomBase, RandomParams};
use outerspatial::oracle::{brute_force_outerspatial, OracleError, DEFAULT_CAP};
use outerspatial::{decide_nested_plane, Obstruction, TwoComplex, Verdict};
use thiserror::Error;

use crate::format::{parse_complex, parse_complex_file, parse_cycles, print_complex, ParseError};
use crate::render::{certificate_drawing, Drawing, RenderFormat};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "outerspatial", version, about = "Decide whether a 2-complex is outerspatial")]
pub struct Cli {
    /// Largest number of rotation systems the exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
    /// Seed for `generate random`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format for `render`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a complex file describes a simple complex.
    Validate { file: PathBuf },
    /// Print every link graph with its outerplanarity status.
    Links { file: PathBuf },
    /// Run the decision pipeline.
    Decide {
        file: PathBuf,
        /// Skip the shortcut for complexes whose faces are all triangles.
        #[arg(long)]
        no_fast_path: bool,
    },
    /// Decide whether a graph has a plane embedding nesting the given cycles.
    Nested { graph: PathBuf, cycles: PathBuf },
    /// Decide by exhaustive search over rotation systems.
    Oracle { file: PathBuf },
    /// Classify each component as a surface.
    Surface { file: PathBuf },
    /// Draw the certificate embedding, the obstructing link, or one link.
    Render {
        file: PathBuf,
        /// Draw the link graph at this vertex instead.
        #[arg(long)]
        link: Option<String>,
    },
    /// Print a complex file for a named or random example.
    Generate {
        #[command(subcommand)]
        what: Generator,
    },
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    /// Boundary of the tetrahedron.
    Tetra,
    /// Double cone over an n-cycle.
    Bipyramid { n: usize },
    /// Bipyramid with the equator as an extra face.
    BipyramidEquator { n: usize },
    /// Seven-vertex triangulation of the torus.
    Torus7,
    /// Six-vertex triangulation of the projective plane.
    Rp2,
    /// Cone over a graph file (vertices and edges only).
    Cone { graph: PathBuf },
    /// Seeded random complex (see `--seed`).
    Random {
        #[arg(long, value_enum, default_value_t = Base::Sphere)]
        base: Base,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 1)]
        merges: usize,
        #[arg(long, default_value_t = 1)]
        extra_faces: usize,
        #[arg(long, default_value_t = 5)]
        max_cycle_len: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    Sphere,
    Torus,
    Rp2,
    Cycles,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Decider(#[from] DeciderError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Oracle(OracleError::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

/// Exit status for a verdict; depends on nothing else.
pub fn verdict_exit(v: &Verdict) -> i32 {
    match v {
        Verdict::Outerspatial(_) => EXIT_YES,
        Verdict::NotOuterspatial(_) => EXIT_NO,
        Verdict::HypothesisViolated(_) => EXIT_UNDECIDED,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<TwoComplex, CliError> {
    parse_complex(&read(path)?).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

/// A graph file is a complex file without faces.
fn load_graph(path: &Path) -> Result<outerspatial::Graph, CliError> {
    let file = parse_complex_file(&read(path)?)
        .map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    if file.complex.face_count() > 0 {
        return Err(CliError::Usage(format!("{}: a graph file declares no faces", path.display())));
    }
    Ok(file.complex.skeleton())
}

fn generated(cli: &Cli, what: &Generator) -> Result<TwoComplex, CliError> {
    let check_n = |n: usize| {
        if n < 3 {
            Err(CliError::Usage(format!("bipyramid needs n >= 3, got {n}")))
        } else {
            Ok(n)
        }
    };
    Ok(match what {
        Generator::Tetra => generate::tetrahedron(),
        Generator::Bipyramid { n } => generate::bipyramid(check_n(*n)?),
        Generator::BipyramidEquator { n } => generate::bipyramid_with_equator(check_n(*n)?),
        Generator::Torus7 => generate::torus7(),
        Generator::Rp2 => generate::rp2_6(),
        Generator::Cone { graph } => {
            let g = load_graph(graph)?;
            if !g.is_simple() {
                return Err(CliError::Usage("cone needs a simple graph".into()));
            }
            generate::cone_over_graph(&g)
        }
        Generator::Random { base, vertices, merges, extra_faces, max_cycle_len } => {
            let base = match base {
                Base::Sphere => RandomBase::Sphere,
                Base::Torus => RandomBase::Torus,
                Base::Rp2 => RandomBase::ProjectivePlane,
                Base::Cycles => RandomBase::Cycles,
            };
            let params = RandomParams {
                base,
                vertices: *vertices,
                merges: *merges,
                extra_faces: *extra_faces,
                max_cycle_len: *max_cycle_len,
            };
            generate::random_complex(&mut generate::rng(cli.seed), &params)
        }
    })
}

fn render(cli: &Cli, c: &TwoComplex, link: Option<&str>) -> Result<String, CliError> {
    let format = match cli.format {
        Format::Dot => RenderFormat::Dot,
        Format::Svg => RenderFormat::Svg,
    };
    if let Some(label) = link {
        let v = c.graph().find_vertex(label).ok_or_else(|| CliError::Usage(format!("no vertex `{label}`")))?;
        let l = c.link_graph(v).expect("vertex of the complex");
        let d = Drawing { name: format!("link {label}"), graph: &l.graph, rotation: None, notes: vec![] };
        return Ok(d.render(format));
    }
    let verdict = decide_outerspatial_with(c, DeciderOptions::default())?;
    Ok(match &verdict {
        Verdict::Outerspatial(cert) => certificate_drawing(c, cert).render(format),
        Verdict::NotOuterspatial(Obstruction::NonOuterplanarLink { path, link, witness }) => {
            let vs: Vec<&str> = path.vertices.iter().map(|&v| c.graph().label(v)).collect();
            let notes = vec![format!("path {}", vs.join(" ")), format!("{} minor", witness.target.name())];
            Drawing { name: "obstructing link".into(), graph: &link.graph, rotation: None, notes }.render(format)
        }
        Verdict::NotOuterspatial(Obstruction::AsphericalSubcomplex { class, .. }) => {
            let notes = vec![format!("aspherical subcomplex: {}", class.kind)];
            Drawing { name: "skeleton".into(), graph: c.graph(), rotation: None, notes }.render(format)
        }
        Verdict::HypothesisViolated(_) => {
            let notes = vec!["undecided".to_string()];
            Drawing { name: "skeleton".into(), graph: c.graph(), rotation: None, notes }.render(format)
        }
    })
}

/// Runs one command, writing the report to `out`; returns the exit code.
fn execute(cli: &Cli, out: &mut String) -> Result<i32, CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let text = read(file)?;
            let parsed = parse_complex_file(&text)
                .map_err(|source| CliError::Parse { path: file.display().to_string(), source })?;
            let diags = parsed.diagnostics();
            if diags.is_empty() {
                let c = &parsed.complex;
                out.push_str(&format!(
                    "valid: {} vertices, {} edges, {} faces\n",
                    c.graph().vertex_count(),
                    c.graph().edge_count(),
                    c.face_count()
                ));
                return Ok(EXIT_YES);
            }
            for (line, msg) in diags {
                out.push_str(&format!("line {line}: {msg}\n"));
            }
            Ok(EXIT_NO)
        }
        Command::Links { file } => {
            let (report, all) = report::links_report(&load(file)?);
            out.push_str(&report);
            Ok(if all { EXIT_YES } else { EXIT_NO })
        }
        Command::Decide { file, no_fast_path } => {
            let c = load(file)?;
            let v = decide_outerspatial_with(&c, DeciderOptions { triangle_fast_path: !no_fast_path })?;
            out.push_str(&report::verdict_report(&c, &v));
            Ok(verdict_exit(&v))
        }
        Command::Nested { graph, cycles } => {
            let g = load_graph(graph)?;
            let specs = parse_cycles(&g, &read(cycles)?)
                .map_err(|source| CliError::Parse { path: cycles.display().to_string(), source })?;
            let (c, outcome) = decide_nested_plane(&g, &specs, cli.cap)?;
            out.push_str(&report::nested_report(&c, &outcome));
            Ok(match outcome {
                NestedPlane::CapExceeded { .. } => EXIT_CAP,
                o => match o.answer() {
                    Some(true) => EXIT_YES,
                    Some(false) => EXIT_NO,
                    None => EXIT_UNDECIDED,
                },
            })
        }
        Command::Oracle { file } => {
            let c = load(file)?;
            let cert = brute_force_outerspatial(&c, cli.cap)?;
            out.push_str(&report::oracle_report(&c, cert.as_ref()));
            Ok(if cert.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::Surface { file } => {
            let parsed = parse_complex_file(&read(file)?)
                .map_err(|source| CliError::Parse { path: file.display().to_string(), source })?;
            out.push_str(&report::surface_report(&parsed.complex));
            Ok(EXIT_YES)
        }
        Command::Render { file, link } => {
            let c = load(file)?;
            out.push_str(&render(cli, &c, link.as_deref())?);
            Ok(EXIT_YES)
        }
        Command::Generate { what } => {
            out.push_str(&print_complex(&generated(cli, what)?));
            Ok(EXIT_YES)
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(code) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return EXIT_IO;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
