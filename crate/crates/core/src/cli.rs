//! Command-line front end: `generate`, `solve`, `compare` and `voronoi`.
//!
//! Exit codes: 0 success, 1 no path between source and destination, 2 bad
//! input (flags, files, configuration), 3 a solver failed to converge or its
//! wave or front never reached the source.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chemo::{self, ChemoConfig, ChemoError, OregonatorParams};
use crate::electrical::{self, ElectricalError};
use crate::field::{FieldError, ScalarField, SolverConfig};
use crate::fluid::{self, FluidError};
use crate::lee::{self, LeeError};
use crate::maze::{self, Coord, GenConfig, MazeError, MazeGrid, PathTrace};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_PATH: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mapper {
    Chemo,
    Electrical,
    Fluid,
    Lee,
    Oregonator,
}

impl Mapper {
    /// All mappers, sorted by name.
    pub const ALL: [Mapper; 5] = [
        Mapper::Chemo,
        Mapper::Electrical,
        Mapper::Fluid,
        Mapper::Lee,
        Mapper::Oregonator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mapper::Chemo => "chemo",
            Mapper::Electrical => "electrical",
            Mapper::Fluid => "fluid",
            Mapper::Lee => "lee",
            Mapper::Oregonator => "oregonator",
        }
    }
}

/// One pipeline run measured against the BFS oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub mapper: Mapper,
    pub converged: bool,
    /// Solver sweeps or simulation steps.
    pub iterations: usize,
    pub path_length: Option<usize>,
    pub oracle_length: Option<usize>,
    pub length_ratio: Option<f64>,
    pub wall_clock_ms: f64,
    /// `None` on success, otherwise the failure kind (`NoPath`, `NotConverged`, ...).
    /// Kept out of the JSON schema; the CLI prints it on stderr.
    #[serde(skip)]
    pub error: Option<String>,
}

/// Per-mapper settings, as read from a JSON config file.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PipelineConfig {
    pub solver: SolverConfig,
    pub chemo: ChemoConfig,
    pub oregonator: OregonatorParams,
}

/// Why a pipeline stopped without a path.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    NoPath,
    NotConverged,
    WaveDied,
    FrontNeverArrives,
    NumericalBlowup,
    Plateau,
    BadInput(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::NoPath => EXIT_NO_PATH,
            Failure::BadInput(_) => EXIT_BAD_INPUT,
            _ => EXIT_SOLVER,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Failure::NoPath => "NoPath".into(),
            Failure::NotConverged => "NotConverged".into(),
            Failure::WaveDied => "WaveDied".into(),
            Failure::FrontNeverArrives => "FrontNeverArrives".into(),
            Failure::NumericalBlowup => "NumericalBlowup".into(),
            Failure::Plateau => "Plateau".into(),
            Failure::BadInput(msg) => format!("BadInput: {msg}"),
        }
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::NotConverged { .. } => Failure::NotConverged,
            FieldError::Plateau { .. } | FieldError::Cycle(_) => Failure::Plateau,
            other => Failure::BadInput(other.to_string()),
        }
    }
}

impl From<ChemoError> for Failure {
    fn from(e: ChemoError) -> Self {
        match e {
            ChemoError::Field(f) => f.into(),
            ChemoError::WaveDied { .. } => Failure::WaveDied,
            ChemoError::FrontNeverArrives { .. } => Failure::FrontNeverArrives,
            ChemoError::NumericalBlowup { .. } => Failure::NumericalBlowup,
            other => Failure::BadInput(other.to_string()),
        }
    }
}

impl From<ElectricalError> for Failure {
    fn from(e: ElectricalError) -> Self {
        match e {
            ElectricalError::Field(f) => f.into(),
            ElectricalError::DegenerateField => Failure::NoPath,
        }
    }
}

impl From<FluidError> for Failure {
    fn from(e: FluidError) -> Self {
        match e {
            FluidError::Field(f) => f.into(),
            other => Failure::BadInput(other.to_string()),
        }
    }
}

impl From<LeeError> for Failure {
    fn from(e: LeeError) -> Self {
        match e {
            LeeError::Unreachable(_) => Failure::NoPath,
            other => Failure::BadInput(other.to_string()),
        }
    }
}

/// Everything a pipeline produced: the report plus the map and trace for
/// rendering.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub report: RunReport,
    pub field: Option<ScalarField>,
    pub path: Option<PathTrace>,
    pub failure: Option<Failure>,
}

struct Traced {
    field: ScalarField,
    path: Result<PathTrace, Failure>,
    converged: bool,
    iterations: usize,
}

fn trace_with(grid: &MazeGrid, mapper: Mapper, cfg: &PipelineConfig) -> Result<Traced, Failure> {
    Ok(match mapper {
        Mapper::Lee => {
            let labels = lee::lee_map(grid);
            let path = lee::lee_trace(&labels, grid, grid.source()).map_err(Failure::from);
            Traced {
                field: labels,
                path,
                converged: true,
                iterations: 0,
            }
        }
        Mapper::Electrical => {
            let emap = electrical::map_potential(grid, &cfg.solver)?;
            let path = electrical::trace_voltage_ascent(&emap, grid).map_err(Failure::from);
            Traced {
                converged: emap.report.converged,
                iterations: emap.report.iterations,
                field: emap.potential,
                path,
            }
        }
        Mapper::Fluid => {
            let fmap = fluid::map_pressure(grid, &cfg.solver)?;
            let path = fluid::trace_streamline(&fmap, grid).map_err(Failure::from);
            Traced {
                converged: fmap.report.converged,
                iterations: fmap.report.iterations,
                field: fmap.pressure,
                path,
            }
        }
        Mapper::Chemo => {
            let arrivals = chemo::arrival_time_map(grid, &cfg.chemo)?;
            let steps = arrivals.get(grid.source()).unwrap_or(0) as usize;
            let path = chemo::arrival_descent_trace(&arrivals, grid).map_err(Failure::from);
            Traced {
                field: arrivals.to_field(),
                path,
                converged: true,
                iterations: steps,
            }
        }
        Mapper::Oregonator => {
            let run = chemo::run_oregonator(grid, &cfg.oregonator)?;
            Traced {
                field: run.arrivals.to_field(),
                path: Ok(run.path),
                converged: true,
                iterations: run.steps,
            }
        }
    })
}

/// Runs one mapper with its tracer and scores the path against the oracle.
pub fn run_pipeline(grid: &MazeGrid, mapper: Mapper, cfg: &PipelineConfig) -> PipelineRun {
    let oracle = maze::oracle_path(grid).ok();
    let started = Instant::now();
    let mut report = RunReport {
        mapper,
        converged: false,
        iterations: 0,
        path_length: None,
        oracle_length: oracle.as_ref().map(PathTrace::len),
        length_ratio: None,
        wall_clock_ms: 0.0,
        error: None,
    };
    let (field, path, failure) = if oracle.is_none() {
        (None, None, Some(Failure::NoPath))
    } else {
        match trace_with(grid, mapper, cfg) {
            Ok(t) => {
                report.converged = t.converged;
                report.iterations = t.iterations;
                match t.path {
                    Ok(p) => (Some(t.field), Some(p), None),
                    Err(f) => (Some(t.field), None, Some(f)),
                }
            }
            Err(f) => (None, None, Some(f)),
        }
    };
    if let (Some(p), Some(o)) = (&path, &oracle) {
        report.path_length = Some(p.len());
        report.length_ratio = Some(p.len() as f64 / o.len() as f64);
    }
    if matches!(failure, Some(Failure::NotConverged)) {
        report.converged = false;
    }
    report.error = failure.as_ref().map(Failure::label);
    report.wall_clock_ms = started.elapsed().as_secs_f64() * 1e3;
    PipelineRun {
        report,
        field,
        path,
        failure,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mazemap",
    about = "Solve mazes by mapping a physical field and tracing its gradient"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded maze in ASCII form.
    Generate(GenerateArgs),
    /// Run one mapper on a maze and report against the oracle.
    Solve(SolveArgs),
    /// Run several mappers on the same maze.
    Compare(CompareArgs),
    /// Diffusion Voronoi diagram of seed points in an open arena.
    Voronoi(VoronoiArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub width: usize,
    #[arg(long)]
    pub height: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.0)]
    pub braid: f64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MazeInput {
    #[arg(long)]
    pub maze: PathBuf,
    /// JSON file with optional `solver`, `chemo` and `oregonator` sections.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Override the source cell, as `col,row`.
    #[arg(long, value_parser = parse_coord)]
    pub source: Option<Coord>,
    /// Override the destination cell, as `col,row`.
    #[arg(long, value_parser = parse_coord)]
    pub destination: Option<Coord>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    #[arg(long)]
    pub upscale: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: MazeInput,
    #[arg(long, value_enum)]
    pub mapper: Mapper,
    /// Directory for field and overlay images.
    #[arg(long)]
    pub render: Option<PathBuf>,
    /// Pixels per maze cell in rendered images.
    #[arg(long, default_value_t = 4)]
    pub scale: usize,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: MazeInput,
    /// Comma-separated mapper names; all of them by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub mappers: Vec<Mapper>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VoronoiArgs {
    #[arg(long)]
    pub width: usize,
    #[arg(long)]
    pub height: usize,
    /// Seed cells as `x1,y1;x2,y2;...`.
    #[arg(long)]
    pub seeds: String,
    #[arg(long)]
    pub render: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pub scale: usize,
}

fn parse_coord(s: &str) -> Result<Coord, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected col,row but got {s:?}"))?;
    let col = a
        .trim()
        .parse()
        .map_err(|e| format!("bad column {a:?}: {e}"))?;
    let row = b
        .trim()
        .parse()
        .map_err(|e| format!("bad row {b:?}: {e}"))?;
    Ok(Coord::new(col, row))
}

pub fn parse_seeds(s: &str) -> Result<Vec<Coord>, String> {
    s.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(parse_coord)
        .collect()
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    solver: SolverSection,
    #[serde(default)]
    chemo: ChemoSection,
    #[serde(default)]
    oregonator: OregonatorSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolverSection {
    tolerance: Option<f64>,
    max_iters: Option<usize>,
    omega: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChemoSection {
    diffusivity: Option<f64>,
    dt: Option<f64>,
    threshold: Option<f64>,
    max_steps: Option<usize>,
    clamp_value: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct OregonatorSection {
    epsilon: Option<f64>,
    f: Option<f64>,
    q: Option<f64>,
    du: Option<f64>,
    dt: Option<f64>,
    spacing: Option<f64>,
    upscale: Option<usize>,
    arrival_level: Option<f64>,
    max_steps: Option<usize>,
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

/// Defaults, then the config file, then command-line flags.
fn load_config(input: &MazeInput) -> Result<PipelineConfig, String> {
    let file: ConfigFile = match &input.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str(&text)
                .map_err(|e| format!("bad config {}: {e}", path.display()))?
        }
        None => ConfigFile::default(),
    };
    let mut cfg = PipelineConfig::default();
    let s = &mut cfg.solver;
    set(&mut s.tolerance, file.solver.tolerance);
    set(&mut s.max_iters, file.solver.max_iters);
    set(&mut s.omega, file.solver.omega);
    set(&mut s.tolerance, input.tolerance);
    set(&mut s.omega, input.omega);
    set(&mut s.max_iters, input.max_iters);
    s.validate().map_err(|e| e.to_string())?;

    let c = &mut cfg.chemo;
    set(&mut c.diffusivity, file.chemo.diffusivity);
    set(&mut c.dt, file.chemo.dt);
    set(&mut c.threshold, file.chemo.threshold);
    set(&mut c.max_steps, file.chemo.max_steps);
    set(&mut c.clamp_value, file.chemo.clamp_value);
    c.validate().map_err(|e| e.to_string())?;

    let o = &mut cfg.oregonator;
    let f = file.oregonator;
    set(&mut o.epsilon, f.epsilon);
    set(&mut o.f, f.f);
    set(&mut o.q, f.q);
    set(&mut o.du, f.du);
    set(&mut o.dt, f.dt);
    set(&mut o.spacing, f.spacing);
    set(&mut o.upscale, f.upscale);
    set(&mut o.arrival_level, f.arrival_level);
    set(&mut o.max_steps, f.max_steps);
    set(&mut o.upscale, input.upscale);
    Ok(cfg)
}

fn load_maze(input: &MazeInput) -> Result<MazeGrid, String> {
    let text = fs::read_to_string(&input.maze)
        .map_err(|e| format!("cannot read {}: {e}", input.maze.display()))?;
    let grid = maze::parse_ascii(&text).map_err(|e| format!("{}: {e}", input.maze.display()))?;
    if input.source.is_none() && input.destination.is_none() {
        return Ok(grid);
    }
    grid.with_endpoints(
        input.source.unwrap_or(grid.source()),
        input.destination.unwrap_or(grid.destination()),
    )
    .map_err(|e: MazeError| e.to_string())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| format!("cannot write stdout: {e}"))
        }
    }
}

fn bad_input(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_BAD_INPUT
}

pub fn cmd_generate(args: &GenerateArgs) -> i32 {
    let cfg = GenConfig::new(args.width, args.height, args.seed).braid(args.braid);
    let grid = match maze::generate(&cfg) {
        Ok(g) => g,
        Err(e) => return bad_input(e),
    };
    match write_output(args.out.as_deref(), maze::serialize_ascii(&grid).as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(e) => bad_input(e),
    }
}

fn render_run(dir: &Path, grid: &MazeGrid, run: &PipelineRun, scale: usize) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let name = run.report.mapper.name();
    if let Some(field) = &run.field {
        let pgm = render::render_scalar_pgm(field, grid, scale).map_err(|e| e.to_string())?;
        write_output(Some(&dir.join(format!("{name}_field.pgm"))), &pgm)?;
    }
    let ppm = render::render_overlay_ppm(grid, run.path.as_ref(), None, scale)
        .map_err(|e| e.to_string())?;
    write_output(Some(&dir.join(format!("{name}_overlay.ppm"))), &ppm)
}

fn report_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn cmd_solve(args: &SolveArgs) -> i32 {
    let (grid, cfg) = match load_maze(&args.input).and_then(|g| Ok((g, load_config(&args.input)?)))
    {
        Ok(x) => x,
        Err(e) => return bad_input(e),
    };
    if args.scale == 0 {
        return bad_input("--scale must be at least 1");
    }
    let run = run_pipeline(&grid, args.mapper, &cfg);
    if let Some(dir) = &args.render {
        if let Err(e) = render_run(dir, &grid, &run, args.scale) {
            return bad_input(e);
        }
    }
    if let Err(e) = write_output(args.report.as_deref(), report_json(&run.report).as_bytes()) {
        return bad_input(e);
    }
    match &run.failure {
        None => EXIT_OK,
        Some(f) => {
            eprintln!("{}: {}", args.mapper.name(), f.label());
            f.exit_code()
        }
    }
}

pub fn cmd_compare(args: &CompareArgs) -> i32 {
    let (grid, cfg) = match load_maze(&args.input).and_then(|g| Ok((g, load_config(&args.input)?)))
    {
        Ok(x) => x,
        Err(e) => return bad_input(e),
    };
    let mut mappers = if args.mappers.is_empty() {
        Mapper::ALL.to_vec()
    } else {
        args.mappers.clone()
    };
    mappers.sort();
    mappers.dedup();
    let runs: Vec<PipelineRun> = mappers
        .par_iter()
        .map(|&m| run_pipeline(&grid, m, &cfg))
        .collect();
    for run in &runs {
        if let Some(f) = &run.failure {
            eprintln!("{}: {}", run.report.mapper.name(), f.label());
        }
    }
    let reports: Vec<&RunReport> = runs.iter().map(|r| &r.report).collect();
    if let Err(e) = write_output(args.report.as_deref(), report_json(&reports).as_bytes()) {
        return bad_input(e);
    }
    if maze::oracle_path(&grid).is_err() {
        EXIT_NO_PATH
    } else if runs.iter().any(|r| r.failure.is_none()) {
        EXIT_OK
    } else {
        EXIT_SOLVER
    }
}

#[derive(Serialize)]
struct VoronoiSummary {
    width: usize,
    height: usize,
    seeds: Vec<[usize; 2]>,
    region_cells: Vec<usize>,
    boundary_cells: usize,
}

pub fn cmd_voronoi(args: &VoronoiArgs) -> i32 {
    let seeds = match parse_seeds(&args.seeds) {
        Ok(s) => s,
        Err(e) => return bad_input(e),
    };
    if seeds.len() < 2 {
        return bad_input(format!("need at least two seeds, got {}", seeds.len()));
    }
    if let Some(s) = seeds
        .iter()
        .find(|s| s.col >= args.width || s.row >= args.height)
    {
        return bad_input(format!("seed {s} outside {}x{}", args.width, args.height));
    }
    if args.scale == 0 {
        return bad_input("--scale must be at least 1");
    }
    let corner = Coord::new(args.width - 1, args.height - 1);
    let arena = match MazeGrid::open(args.width, args.height, Coord::new(0, 0), corner) {
        Ok(a) => a,
        Err(e) => return bad_input(e),
    };
    let map = match chemo::voronoi_from_seeds(&arena, &seeds, &ChemoConfig::first_contact()) {
        Ok(m) => m,
        Err(e) => return bad_input(e),
    };
    let dir = args.render.clone().unwrap_or_else(|| PathBuf::from("."));
    let written = fs::create_dir_all(&dir)
        .map_err(|e| format!("cannot create {}: {e}", dir.display()))
        .and_then(|()| {
            render::render_voronoi_ppm(&map, &arena, args.scale).map_err(|e| e.to_string())
        })
        .and_then(|ppm| write_output(Some(&dir.join("voronoi.ppm")), &ppm));
    if let Err(e) = written {
        return bad_input(e);
    }
    let mut region_cells = vec![0; seeds.len()];
    for (label, boundary) in map.labels.iter().zip(&map.boundary) {
        if let (Some(k), false) = (label, boundary) {
            region_cells[*k] += 1;
        }
    }
    let summary = VoronoiSummary {
        width: args.width,
        height: args.height,
        seeds: seeds.iter().map(|s| [s.col, s.row]).collect(),
        region_cells,
        boundary_cells: map.boundary.iter().filter(|&&b| b).count(),
    };
    match write_output(None, report_json(&summary).as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(e) => bad_input(e),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Voronoi(a) => cmd_voronoi(a),
    }
}
