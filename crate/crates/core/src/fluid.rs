//! Fluid mapper in the Hele-Shaw (Darcy) limit: thin-layer, inertia-free flow
//! whose pressure is harmonic. Inlet = maze source at pressure 1, outlet =
//! destination at pressure 0, velocity `v = -∇p`.
//!
//! Dye transport uses a finite-volume upwind scheme on cell faces. The flux
//! across the face between corridor cells `i` and `j` is `p_i - p_j` (unit
//! conductance), so the face flow field is exactly the discrete Darcy flow
//! the pressure solve balances.

use thiserror::Error;

use crate::field::{
    gradient, greedy_trace, solve_laplace, Diffuser, FieldError, ScalarField, SolveReport,
    SolverConfig, TraceMode, VectorField,
};
use crate::maze::{Coord, MazeGrid, PathTrace};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FluidError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("branch {0} contains no corridor cells")]
    EmptyBranch(usize),
    #[error("Courant number {0} exceeds 1")]
    CflViolation(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FluidMap {
    pub pressure: ScalarField,
    pub velocity: VectorField,
    pub report: SolveReport,
}

impl FluidMap {
    pub fn speed(&self, c: Coord) -> f64 {
        self.velocity.magnitude(c)
    }
}

pub fn map_pressure(grid: &MazeGrid, config: &SolverConfig) -> Result<FluidMap, FluidError> {
    let pins = [(grid.source(), 1.0), (grid.destination(), 0.0)];
    let (pressure, report) = solve_laplace(grid, &pins, config)?;
    let velocity = gradient(&pressure, grid)?.scaled(-1.0);
    Ok(FluidMap {
        pressure,
        velocity,
        report,
    })
}

/// Mean speed over the corridor cells of each branch.
pub fn branch_speeds(
    fmap: &FluidMap,
    grid: &MazeGrid,
    branches: &[Vec<Coord>],
) -> Result<Vec<f64>, FluidError> {
    branches
        .iter()
        .enumerate()
        .map(|(k, branch)| {
            let speeds: Vec<f64> = branch
                .iter()
                .filter(|&&c| grid.is_corridor(c))
                .map(|&c| fmap.speed(c))
                .collect();
            if speeds.is_empty() {
                Err(FluidError::EmptyBranch(k))
            } else {
                Ok(speeds.iter().sum::<f64>() / speeds.len() as f64)
            }
        })
        .collect()
}

/// Steepest pressure descent from inlet to outlet through cell centres.
pub fn trace_streamline(fmap: &FluidMap, grid: &MazeGrid) -> Result<PathTrace, FluidError> {
    fmap.report.ensure_converged()?;
    Ok(greedy_trace(
        &fmap.pressure,
        grid,
        grid.source(),
        grid.destination(),
        TraceMode::Descend,
    )?)
}

/// Dye concentration and elapsed step count.
#[derive(Debug, Clone, PartialEq)]
pub struct DyeState {
    pub concentration: ScalarField,
    pub time: usize,
}

impl DyeState {
    pub fn clean(grid: &MazeGrid) -> Self {
        Self {
            concentration: ScalarField::zeros_like(grid),
            time: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyeConfig {
    pub diffusivity: f64,
    pub dt: f64,
    pub steps: usize,
    /// Hold the inlet at concentration 1 (continuous feed).
    pub feed_inlet: bool,
    /// Zero the outlet after every step (dye leaves the maze).
    pub drain_outlet: bool,
}

impl Default for DyeConfig {
    fn default() -> Self {
        Self {
            diffusivity: 0.0,
            dt: 1.0,
            steps: 1000,
            feed_inlet: true,
            drain_outlet: true,
        }
    }
}

/// Upwind face fluxes, one entry per corridor adjacency.
struct FaceFlow {
    faces: Vec<(usize, usize, f64)>,
    max_outflow: f64,
}

impl FaceFlow {
    fn build(grid: &MazeGrid, pressure: &ScalarField) -> Self {
        let mut faces = Vec::new();
        let mut outflow = vec![0.0; grid.len()];
        for c in grid.corridors() {
            let i = grid.index(c);
            for n in grid.corridor_neighbors(c) {
                let j = grid.index(n);
                if j > i {
                    let flux = pressure.get(c) - pressure.get(n);
                    faces.push((i, j, flux));
                    if flux > 0.0 {
                        outflow[i] += flux;
                    } else {
                        outflow[j] -= flux;
                    }
                }
            }
        }
        let max_outflow = outflow.iter().copied().fold(0.0, f64::max);
        Self { faces, max_outflow }
    }

    fn advect(&self, cur: &[f64], out: &mut [f64], dt: f64) {
        out.copy_from_slice(cur);
        for &(i, j, flux) in &self.faces {
            let moved = if flux > 0.0 {
                dt * flux * cur[i]
            } else {
                dt * flux * cur[j]
            };
            out[i] -= moved;
            out[j] += moved;
        }
    }
}

/// Advances the dye `config.steps` times: upwind advection along the Darcy
/// flow, then diffusion, then the inlet feed and outlet drain.
///
/// Requires Courant number `dt·max(max|v|, max cell outflow) <= 1` and
/// `D·dt <= 0.25`.
pub fn advect_dye(
    grid: &MazeGrid,
    fmap: &FluidMap,
    init: &DyeState,
    config: &DyeConfig,
) -> Result<DyeState, FluidError> {
    advect_dye_with(grid, fmap, init, config, |_| {})
}

/// Like [`advect_dye`], calling `observe` after every step.
pub fn advect_dye_with(
    grid: &MazeGrid,
    fmap: &FluidMap,
    init: &DyeState,
    config: &DyeConfig,
    mut observe: impl FnMut(&DyeState),
) -> Result<DyeState, FluidError> {
    init.concentration.check_dims(grid)?;
    fmap.pressure.check_dims(grid)?;
    let flow = FaceFlow::build(grid, &fmap.pressure);
    let max_speed = grid.corridors().map(|c| fmap.speed(c)).fold(0.0, f64::max);
    let courant = config.dt * max_speed.max(flow.max_outflow);
    if courant > 1.0 {
        return Err(FluidError::CflViolation(courant));
    }
    let mut clamps = Vec::new();
    if config.feed_inlet {
        clamps.push((grid.source(), 1.0));
    }
    let diffuser = Diffuser::new(grid, config.diffusivity, config.dt, &clamps)?;
    let outlet = grid.index(grid.destination());

    let mut state = init.clone();
    let mut scratch = state.concentration.values().to_vec();
    for _ in 0..config.steps {
        let cur = state.concentration.values_mut();
        flow.advect(cur, &mut scratch, config.dt);
        diffuser.step(&scratch, cur);
        if config.drain_outlet {
            cur[outlet] = 0.0;
        }
        state.time += 1;
        observe(&state);
    }
    Ok(state)
}
