//! Two-variable Oregonator excitable medium on an upscaled maze lattice.
//!
//! ```text
//! du/dt = (u - u² - f·v·(u - q)/(u + q)) / ε + Du·∇²u
//! dv/dt = u - v
//! ```
//!
//! Each maze cell becomes a `k`×`k` block of simulation cells. Corridor
//! blocks are excitable; wall blocks hold `u = v = 0` and are never touched.
//! The Laplacian is the 5-point stencil with zero-flux walls and spacing
//! `spacing`. Integration is explicit Euler with both fields double-buffered,
//! so rows update independently and the result does not depend on thread
//! count.

use rayon::prelude::*;

use super::{arrival_descent_trace, ArrivalField, ChemoError};
use crate::maze::{Coord, MazeGrid, PathTrace};

/// Oregonator constants and run controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OregonatorParams {
    pub epsilon: f64,
    pub f: f64,
    pub q: f64,
    /// Activator diffusion coefficient.
    pub du: f64,
    pub dt: f64,
    /// Physical width of one simulation cell.
    pub spacing: f64,
    /// Simulation cells per maze cell along each axis.
    pub upscale: usize,
    /// Block-mean activator level that counts as the wave having arrived.
    pub arrival_level: f64,
    pub max_steps: usize,
}

impl Default for OregonatorParams {
    fn default() -> Self {
        Self {
            epsilon: 0.02,
            f: 1.4,
            q: 0.002,
            du: 1.0,
            dt: 1e-3,
            spacing: 0.25,
            upscale: 8,
            arrival_level: 0.5,
            max_steps: 2_000_000,
        }
    }
}

impl OregonatorParams {
    fn validate(&self) -> Result<(), ChemoError> {
        let positive = [
            ("epsilon", self.epsilon),
            ("f", self.f),
            ("q", self.q),
            ("du", self.du),
            ("dt", self.dt),
            ("spacing", self.spacing),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ChemoError::BadConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.upscale < 4 {
            return Err(ChemoError::BadConfig(format!(
                "upscale must be at least 4, got {}",
                self.upscale
            )));
        }
        if self.du * self.dt / (self.spacing * self.spacing) > 0.25 {
            return Err(ChemoError::BadConfig(
                "Du*dt/spacing^2 exceeds 0.25, explicit diffusion unstable".into(),
            ));
        }
        if !(self.arrival_level > 0.0 && self.arrival_level < 1.0) {
            return Err(ChemoError::BadConfig(format!(
                "arrival_level must lie in (0, 1), got {}",
                self.arrival_level
            )));
        }
        Ok(())
    }

    /// Homogeneous rest state `u = v = u*` of the excitable kinetics.
    pub fn rest_state(&self) -> f64 {
        // 1 - u - f(u - q)/(u + q) = 0, i.e. u² + (f + q - 1)u - q(f + 1) = 0
        let b = self.f + self.q - 1.0;
        0.5 * (-b + (b * b + 4.0 * self.q * (self.f + 1.0)).sqrt())
    }
}

/// Activator/inhibitor fields on the upscaled lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct OregonatorState {
    width: usize,
    height: usize,
    upscale: usize,
    excitable: Vec<bool>,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub steps: usize,
}

impl OregonatorState {
    /// Rest state on corridor blocks, zero on walls.
    pub fn new(grid: &MazeGrid, params: &OregonatorParams) -> Self {
        let k = params.upscale;
        let (width, height) = (grid.width() * k, grid.height() * k);
        let excitable: Vec<bool> = (0..width * height)
            .map(|i| grid.is_corridor(Coord::new((i % width) / k, (i / width) / k)))
            .collect();
        let rest = params.rest_state();
        let u: Vec<f64> = excitable
            .iter()
            .map(|&e| if e { rest } else { 0.0 })
            .collect();
        Self {
            width,
            height,
            upscale: k,
            excitable,
            v: u.clone(),
            u,
            steps: 0,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_excitable(&self, x: usize, y: usize) -> bool {
        self.excitable[y * self.width + x]
    }

    /// Sets `u = 1` over the excitable part of a maze cell's block.
    pub fn stimulate(&mut self, cell: Coord) {
        let block: Vec<usize> = self.block(cell).collect();
        for i in block {
            if self.excitable[i] {
                self.u[i] = 1.0;
            }
        }
    }

    fn block(&self, cell: Coord) -> impl Iterator<Item = usize> + '_ {
        let k = self.upscale;
        (0..k).flat_map(move |dy| {
            (0..k).map(move |dx| (cell.row * k + dy) * self.width + cell.col * k + dx)
        })
    }

    /// Mean activator over a maze cell's block.
    pub fn block_mean_u(&self, cell: Coord) -> f64 {
        let k = self.upscale;
        self.block(cell).map(|i| self.u[i]).sum::<f64>() / (k * k) as f64
    }

    pub fn max_u(&self) -> f64 {
        self.u
            .iter()
            .zip(&self.excitable)
            .filter(|(_, &e)| e)
            .map(|(&u, _)| u)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Advances one explicit Euler step.
    pub fn step(&mut self, params: &OregonatorParams) {
        let w = self.width;
        let h = self.height;
        let OregonatorParams {
            epsilon,
            f,
            q,
            du,
            dt,
            spacing,
            ..
        } = *params;
        let diff = du / (spacing * spacing);
        let u = &self.u;
        let v = &self.v;
        let ex = &self.excitable;
        let mut next_u = u.clone();
        let mut next_v = v.clone();
        next_u
            .par_chunks_mut(w)
            .zip(next_v.par_chunks_mut(w))
            .enumerate()
            .for_each(|(y, (row_u, row_v))| {
                for x in 0..w {
                    let i = y * w + x;
                    if !ex[i] {
                        continue;
                    }
                    let ui = u[i];
                    let vi = v[i];
                    let mut lap = 0.0;
                    if y > 0 && ex[i - w] {
                        lap += u[i - w] - ui;
                    }
                    if x + 1 < w && ex[i + 1] {
                        lap += u[i + 1] - ui;
                    }
                    if y + 1 < h && ex[i + w] {
                        lap += u[i + w] - ui;
                    }
                    if x > 0 && ex[i - 1] {
                        lap += u[i - 1] - ui;
                    }
                    let react = (ui - ui * ui - f * vi * (ui - q) / (ui + q)) / epsilon;
                    row_u[x] = ui + dt * (react + diff * lap);
                    row_v[x] = vi + dt * (ui - vi);
                }
            });
        self.u = next_u;
        self.v = next_v;
        self.steps += 1;
    }

    fn all_finite(&self) -> bool {
        self.u.iter().chain(&self.v).all(|x| x.is_finite())
    }
}

/// Result of [`run_oregonator`].
#[derive(Debug, Clone, PartialEq)]
pub struct OregonatorRun {
    pub arrivals: ArrivalField,
    pub path: PathTrace,
    pub steps: usize,
}

/// Launches a wave from the destination block and records, per maze cell, the
/// first step at which the block-mean activator reaches `arrival_level`. The
/// path is the arrival-time descent from the source.
pub fn run_oregonator(
    grid: &MazeGrid,
    params: &OregonatorParams,
) -> Result<OregonatorRun, ChemoError> {
    run_oregonator_with(grid, params, |_| {})
}

/// Like [`run_oregonator`] but with the stimulus applied at an arbitrary
/// maze cell. A stimulus on a wall excites nothing.
pub fn run_oregonator_from(
    grid: &MazeGrid,
    params: &OregonatorParams,
    stimulus: Coord,
) -> Result<OregonatorRun, ChemoError> {
    run_inner(grid, params, stimulus, |_| {})
}

/// Like [`run_oregonator`], calling `observe` after every step (for snapshots).
pub fn run_oregonator_with(
    grid: &MazeGrid,
    params: &OregonatorParams,
    observe: impl FnMut(&OregonatorState),
) -> Result<OregonatorRun, ChemoError> {
    run_inner(grid, params, grid.destination(), observe)
}

fn run_inner(
    grid: &MazeGrid,
    params: &OregonatorParams,
    stimulus: Coord,
    mut observe: impl FnMut(&OregonatorState),
) -> Result<OregonatorRun, ChemoError> {
    params.validate()?;
    let mut state = OregonatorState::new(grid, params);
    let mut arrivals = ArrivalField::never(grid.width(), grid.height());
    let corridors: Vec<Coord> = grid.corridors().collect();
    state.stimulate(stimulus);
    for &c in &corridors {
        if state.block_mean_u(c) >= params.arrival_level {
            arrivals.set(c, 0);
        }
    }
    const CHECK_EVERY: usize = 64;
    while arrivals.get(grid.source()).is_none() {
        if state.steps >= params.max_steps {
            return Err(ChemoError::FrontNeverArrives { steps: state.steps });
        }
        state.step(params);
        observe(&state);
        let t = state.steps as u64;
        for &c in &corridors {
            if arrivals.get(c).is_none() && state.block_mean_u(c) >= params.arrival_level {
                arrivals.set(c, t);
            }
        }
        if state.steps.is_multiple_of(CHECK_EVERY) {
            if !state.all_finite() {
                return Err(ChemoError::NumericalBlowup { step: state.steps });
            }
            if state.max_u() < 0.1 {
                return Err(ChemoError::WaveDied { step: state.steps });
            }
        }
    }
    let path = arrival_descent_trace(&arrivals, grid)?;
    Ok(OregonatorRun {
        arrivals,
        path,
        steps: state.steps,
    })
}
