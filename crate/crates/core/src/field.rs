//! Grid numerics shared by every mapper: scalar and vector fields, the masked
//! Laplace solver, the explicit diffusion step, discrete gradients and the
//! greedy neighbour tracer.
//!
//! All operators act on corridor cells only. Walls are zero-flux: a wall
//! neighbour simply drops out of the stencil.

use thiserror::Error;

use crate::maze::{Coord, Direction, MazeGrid, PathTrace};

/// Marker stored in label and arrival fields for cells that were never
/// reached. Finite, and larger than any real label, so a descending trace can
/// never step onto it.
pub const UNREACHED: f64 = f64::MAX;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("field is {found_w}x{found_h}, grid is {want_w}x{want_h}")]
    DimensionMismatch {
        found_w: usize,
        found_h: usize,
        want_w: usize,
        want_h: usize,
    },
    #[error("pin at {0} is not a corridor cell")]
    PinOnWall(Coord),
    #[error("no pinned cells given")]
    NoPins,
    #[error("clamp at {0} is not a corridor cell")]
    ClampOnWall(Coord),
    #[error("explicit diffusion unstable: D*dt = {0} exceeds 0.25")]
    UnstableStep(f64),
    #[error("{0} is not a corridor cell")]
    NotCorridor(Coord),
    #[error("trace stalled at {at} after {steps} steps: no strictly improving neighbour")]
    Plateau { at: Coord, steps: usize },
    #[error("trace exceeded {0} steps")]
    Cycle(usize),
    #[error("solver stopped after {iterations} sweeps with residual {residual:e}")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

/// One real number per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl ScalarField {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), width * height, "value count mismatch");
        Self {
            width,
            height,
            values,
        }
    }

    pub fn filled(width: usize, height: usize, value: f64) -> Self {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn zeros_like(grid: &MazeGrid) -> Self {
        Self::filled(grid.width(), grid.height(), 0.0)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, c: Coord) -> f64 {
        self.values[c.row * self.width + c.col]
    }

    pub fn set(&mut self, c: Coord, v: f64) {
        self.values[c.row * self.width + c.col] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self::new(
            self.width,
            self.height,
            self.values.iter().map(|&v| f(v)).collect(),
        )
    }

    /// Sum over corridor cells.
    pub fn corridor_sum(&self, grid: &MazeGrid) -> f64 {
        grid.corridors().map(|c| self.get(c)).sum()
    }

    pub fn check_dims(&self, grid: &MazeGrid) -> Result<(), FieldError> {
        if self.width == grid.width() && self.height == grid.height() {
            Ok(())
        } else {
            Err(FieldError::DimensionMismatch {
                found_w: self.width,
                found_h: self.height,
                want_w: grid.width(),
                want_h: grid.height(),
            })
        }
    }
}

/// Per-cell 2-vector. `vx` grows with column, `vy` grows with row (south).
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    width: usize,
    height: usize,
    vx: Vec<f64>,
    vy: Vec<f64>,
}

impl VectorField {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            vx: vec![0.0; width * height],
            vy: vec![0.0; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, c: Coord) -> (f64, f64) {
        let i = c.row * self.width + c.col;
        (self.vx[i], self.vy[i])
    }

    pub fn set(&mut self, c: Coord, v: (f64, f64)) {
        let i = c.row * self.width + c.col;
        self.vx[i] = v.0;
        self.vy[i] = v.1;
    }

    pub fn magnitude(&self, c: Coord) -> f64 {
        let (x, y) = self.get(c);
        x.hypot(y)
    }

    /// Euclidean norm per cell.
    pub fn magnitudes(&self) -> ScalarField {
        ScalarField::new(
            self.width,
            self.height,
            self.vx
                .iter()
                .zip(&self.vy)
                .map(|(x, y)| x.hypot(*y))
                .collect(),
        )
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            width: self.width,
            height: self.height,
            vx: self.vx.iter().map(|v| v * k).collect(),
            vy: self.vy.iter().map(|v| v * k).collect(),
        }
    }
}

/// Successive over-relaxation settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Largest single-cell update allowed in the final sweep.
    pub tolerance: f64,
    pub max_iters: usize,
    /// Relaxation factor in (0, 2).
    pub omega: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iters: 200_000,
            omega: 1.8,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), FieldError> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(FieldError::BadConfig(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iters == 0 {
            return Err(FieldError::BadConfig("max_iters must be positive".into()));
        }
        if !(self.omega > 0.0 && self.omega < 2.0) {
            return Err(FieldError::BadConfig(format!(
                "omega must lie in (0, 2), got {}",
                self.omega
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveReport {
    pub iterations: usize,
    pub final_residual: f64,
    pub converged: bool,
}

impl SolveReport {
    pub fn ensure_converged(&self) -> Result<(), FieldError> {
        if self.converged {
            Ok(())
        } else {
            Err(FieldError::NotConverged {
                iterations: self.iterations,
                residual: self.final_residual,
            })
        }
    }
}

/// Corridor adjacency in flat form: for corridor cell `order[k]`, its corridor
/// neighbours are `nbrs[start[k]..start[k + 1]]` (as grid indices).
struct Adjacency {
    order: Vec<usize>,
    start: Vec<usize>,
    nbrs: Vec<usize>,
}

impl Adjacency {
    fn build(grid: &MazeGrid) -> Self {
        let mut order = Vec::new();
        let mut start = vec![0];
        let mut nbrs = Vec::new();
        for c in grid.corridors() {
            order.push(grid.index(c));
            nbrs.extend(grid.corridor_neighbors(c).map(|n| grid.index(n)));
            start.push(nbrs.len());
        }
        Self { order, start, nbrs }
    }
}

/// Solves the discrete Laplace equation on corridor cells with the given
/// Dirichlet pins, by SOR sweeps in row-major order.
///
/// Each unpinned corridor cell relaxes toward the mean of its corridor
/// neighbours; pinned cells keep their value bit-exactly. The sweep residual
/// is the largest absolute single-cell update. The solve stops once that
/// residual, inflated by the observed contraction rate to a bound on the
/// remaining error (`r·ρ/(1−ρ)`), falls under `tolerance`; so a converged
/// report always has `final_residual <= tolerance`. Hitting `max_iters` is not
/// an error here: the field comes back with `converged == false`.
pub fn solve_laplace(
    grid: &MazeGrid,
    pins: &[(Coord, f64)],
    config: &SolverConfig,
) -> Result<(ScalarField, SolveReport), FieldError> {
    config.validate()?;
    if pins.is_empty() {
        return Err(FieldError::NoPins);
    }
    let mut pinned = vec![false; grid.len()];
    let mut values = vec![0.0; grid.len()];
    for &(c, v) in pins {
        if !grid.is_corridor(c) {
            return Err(FieldError::PinOnWall(c));
        }
        pinned[grid.index(c)] = true;
        values[grid.index(c)] = v;
    }
    let (lo, hi) = pins
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, v)| {
            (lo.min(v), hi.max(v))
        });
    let guess = 0.5 * (lo + hi);
    for c in grid.corridors() {
        let i = grid.index(c);
        if !pinned[i] {
            values[i] = guess;
        }
    }

    let adj = Adjacency::build(grid);
    let free: Vec<usize> = (0..adj.order.len())
        .filter(|&k| !pinned[adj.order[k]] && adj.start[k + 1] > adj.start[k])
        .collect();
    let omega = config.omega;

    let mut report = SolveReport {
        iterations: 0,
        final_residual: 0.0,
        converged: free.is_empty(),
    };
    // Contraction estimate: geometric mean of residual ratios over a window,
    // since SOR residuals oscillate sweep to sweep.
    const WINDOW: usize = 8;
    let mut history = [0.0f64; WINDOW];
    while !report.converged && report.iterations < config.max_iters {
        let mut residual = 0.0f64;
        for &k in &free {
            let i = adj.order[k];
            let ns = &adj.nbrs[adj.start[k]..adj.start[k + 1]];
            let mean = ns.iter().map(|&n| values[n]).sum::<f64>() / ns.len() as f64;
            let update = omega * (mean - values[i]);
            values[i] += update;
            residual = residual.max(update.abs());
        }
        history[report.iterations % WINDOW] = residual;
        report.iterations += 1;
        report.final_residual = residual;

        if residual == 0.0 {
            report.converged = true;
        } else if residual <= config.tolerance && report.iterations > WINDOW {
            let oldest = history[report.iterations % WINDOW];
            let rho = if oldest > 0.0 {
                (residual / oldest).powf(1.0 / WINDOW as f64).min(1.0)
            } else {
                0.0
            };
            let bound = if rho < 1.0 {
                residual * rho / (1.0 - rho)
            } else {
                f64::INFINITY
            };
            report.converged = bound <= config.tolerance;
        }
    }
    Ok((
        ScalarField::new(grid.width(), grid.height(), values),
        report,
    ))
}

/// One forward-time centred-space diffusion step over corridor cells, then
/// clamped cells are reset. Requires `D·dt <= 0.25`.
pub fn diffuse_step(
    field: &ScalarField,
    grid: &MazeGrid,
    diffusivity: f64,
    dt: f64,
    clamps: &[(Coord, f64)],
) -> Result<ScalarField, FieldError> {
    let mut next = field.clone();
    Diffuser::new(grid, diffusivity, dt, clamps)?.step(field.values(), next.values_mut());
    Ok(next)
}

/// Precomputed diffusion stepper for repeated stepping on one grid.
pub(crate) struct Diffuser {
    adj: Adjacency,
    rate: f64,
    clamps: Vec<(usize, f64)>,
}

impl Diffuser {
    pub(crate) fn new(
        grid: &MazeGrid,
        diffusivity: f64,
        dt: f64,
        clamps: &[(Coord, f64)],
    ) -> Result<Self, FieldError> {
        let rate = check_diffusion_rate(diffusivity, dt)?;
        let clamps = clamps
            .iter()
            .map(|&(c, v)| {
                if grid.is_corridor(c) {
                    Ok((grid.index(c), v))
                } else {
                    Err(FieldError::ClampOnWall(c))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            adj: Adjacency::build(grid),
            rate,
            clamps,
        })
    }

    pub(crate) fn apply_clamps(&self, values: &mut [f64]) {
        for &(i, v) in &self.clamps {
            values[i] = v;
        }
    }

    /// Writes the stepped field into `out`; `out` must start as a copy of `cur`
    /// (wall cells are passed through untouched).
    pub(crate) fn step(&self, cur: &[f64], out: &mut [f64]) {
        for (k, &i) in self.adj.order.iter().enumerate() {
            let ns = &self.adj.nbrs[self.adj.start[k]..self.adj.start[k + 1]];
            let c = cur[i];
            let flux: f64 = ns.iter().map(|&n| cur[n] - c).sum();
            out[i] = c + self.rate * flux;
        }
        self.apply_clamps(out);
    }
}

pub(crate) fn check_diffusion_rate(diffusivity: f64, dt: f64) -> Result<f64, FieldError> {
    if !(diffusivity >= 0.0 && dt > 0.0) || !(diffusivity * dt).is_finite() {
        return Err(FieldError::BadConfig(format!(
            "need D >= 0 and dt > 0, got D = {diffusivity}, dt = {dt}"
        )));
    }
    let rate = diffusivity * dt;
    if rate > 0.25 {
        return Err(FieldError::UnstableStep(rate));
    }
    Ok(rate)
}

/// Discrete gradient on corridor cells: central differences where both lateral
/// neighbours are corridors, one-sided where only one is, zero where neither.
/// Wall cells get the zero vector.
pub fn gradient(field: &ScalarField, grid: &MazeGrid) -> Result<VectorField, FieldError> {
    field.check_dims(grid)?;
    let mut out = VectorField::zeros(grid.width(), grid.height());
    let axis = |c: Coord, back: Direction, fwd: Direction| -> f64 {
        let b = grid.step(c, back).filter(|&n| grid.is_corridor(n));
        let f = grid.step(c, fwd).filter(|&n| grid.is_corridor(n));
        match (b, f) {
            (Some(b), Some(f)) => 0.5 * (field.get(f) - field.get(b)),
            (None, Some(f)) => field.get(f) - field.get(c),
            (Some(b), None) => field.get(c) - field.get(b),
            (None, None) => 0.0,
        }
    };
    for c in grid.corridors() {
        out.set(
            c,
            (
                axis(c, Direction::West, Direction::East),
                axis(c, Direction::North, Direction::South),
            ),
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceMode {
    Ascend,
    Descend,
}

/// Walks from `start` to `goal`, each step moving to the corridor neighbour
/// with the best value strictly better than the current one. Equal best
/// values resolve in N, E, S, W order.
pub fn greedy_trace(
    field: &ScalarField,
    grid: &MazeGrid,
    start: Coord,
    goal: Coord,
    mode: TraceMode,
) -> Result<PathTrace, FieldError> {
    field.check_dims(grid)?;
    for c in [start, goal] {
        if !grid.is_corridor(c) {
            return Err(FieldError::NotCorridor(c));
        }
    }
    let better = |a: f64, b: f64| match mode {
        TraceMode::Ascend => a > b,
        TraceMode::Descend => a < b,
    };
    let bound = grid.corridor_count();
    let mut cells = vec![start];
    let mut at = start;
    while at != goal {
        if cells.len() > bound {
            return Err(FieldError::Cycle(bound));
        }
        let here = field.get(at);
        let mut best: Option<(Coord, f64)> = None;
        for n in grid.corridor_neighbors(at) {
            let v = field.get(n);
            if better(v, here) && best.is_none_or(|(_, bv)| better(v, bv)) {
                best = Some((n, v));
            }
        }
        match best {
            Some((n, _)) => {
                at = n;
                cells.push(n);
            }
            None => {
                return Err(FieldError::Plateau {
                    at,
                    steps: cells.len() - 1,
                })
            }
        }
    }
    Ok(PathTrace::new(cells))
}
