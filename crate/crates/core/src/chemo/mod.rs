//! Diffusion mappers: a chemoattractant released at the destination, its
//! first-arrival map, chemotactic and arrival-descent tracers, the Oregonator
//! excitable medium and the diffusion Voronoi processor.

mod oregonator;
mod voronoi;

pub use oregonator::{
    run_oregonator, run_oregonator_from, run_oregonator_with, OregonatorParams, OregonatorRun,
    OregonatorState,
};
pub use voronoi::{voronoi_from_seeds, VoronoiMap};

use thiserror::Error;

use crate::field::{greedy_trace, Diffuser, FieldError, ScalarField, TraceMode, UNREACHED};
use crate::maze::{Coord, MazeGrid, PathTrace};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChemoError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("front did not reach the source within {steps} steps")]
    FrontNeverArrives { steps: usize },
    #[error("excitation died out at step {step}")]
    WaveDied { step: usize },
    #[error("non-finite values at step {step}")]
    NumericalBlowup { step: usize },
    #[error("seed {0} is not a corridor cell")]
    SeedOnWall(Coord),
    #[error("need at least two distinct seeds, got {0}")]
    TooFewSeeds(usize),
}

/// Parameters of the diffusing chemoattractant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChemoConfig {
    pub diffusivity: f64,
    pub dt: f64,
    /// Front detection level, `0 < threshold < clamp_value`.
    pub threshold: f64,
    pub max_steps: usize,
    /// Concentration held at the diffusion source.
    pub clamp_value: f64,
}

impl Default for ChemoConfig {
    fn default() -> Self {
        Self {
            diffusivity: 1.0,
            dt: 0.2,
            threshold: 0.05,
            max_steps: 1_000_000,
            clamp_value: 1.0,
        }
    }
}

impl ChemoConfig {
    /// Threshold just above zero, so a cell "arrives" at its first contact
    /// with the diffusing front. Arrival steps then equal hop distance,
    /// which is what equidistant Voronoi boundaries need.
    pub fn first_contact() -> Self {
        Self {
            threshold: 1e-100,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ChemoError> {
        crate::field::check_diffusion_rate(self.diffusivity, self.dt)?;
        if !(self.threshold > 0.0 && self.threshold < self.clamp_value) {
            return Err(ChemoError::BadConfig(format!(
                "threshold {} must lie in (0, clamp_value = {})",
                self.threshold, self.clamp_value
            )));
        }
        Ok(())
    }
}

/// First step at which each cell's concentration crossed the threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrivalField {
    width: usize,
    height: usize,
    times: Vec<Option<u64>>,
}

impl ArrivalField {
    pub fn never(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            times: vec![None; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, c: Coord) -> Option<u64> {
        self.times[c.row * self.width + c.col]
    }

    pub fn set(&mut self, c: Coord, t: u64) {
        self.times[c.row * self.width + c.col] = Some(t);
    }

    pub fn times(&self) -> &[Option<u64>] {
        &self.times
    }

    /// Arrival steps as reals, [`UNREACHED`] where the front never came.
    pub fn to_field(&self) -> ScalarField {
        ScalarField::new(
            self.width,
            self.height,
            self.times
                .iter()
                .map(|t| t.map_or(UNREACHED, |t| t as f64))
                .collect(),
        )
    }
}

/// Concentration field plus the number of diffusion steps run.
#[derive(Debug, Clone, PartialEq)]
pub struct ChemoMap {
    pub concentration: ScalarField,
    pub steps: usize,
}

/// Clamped diffusion from the destination, run until the source concentration
/// exceeds the threshold or `max_steps` is reached.
pub fn map_chemoattractant(grid: &MazeGrid, config: &ChemoConfig) -> Result<ChemoMap, ChemoError> {
    map_chemoattractant_with(grid, config, |_, _| {})
}

/// Like [`map_chemoattractant`], calling `observe(step, field)` after every step.
pub fn map_chemoattractant_with(
    grid: &MazeGrid,
    config: &ChemoConfig,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<ChemoMap, ChemoError> {
    config.validate()?;
    let diffuser = Diffuser::new(
        grid,
        config.diffusivity,
        config.dt,
        &[(grid.destination(), config.clamp_value)],
    )?;
    let src = grid.index(grid.source());
    let mut cur = vec![0.0; grid.len()];
    diffuser.apply_clamps(&mut cur);
    let mut next = cur.clone();
    let mut steps = 0;
    while steps < config.max_steps && cur[src] <= config.threshold {
        diffuser.step(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
        steps += 1;
        observe(steps, &cur);
    }
    Ok(ChemoMap {
        concentration: ScalarField::new(grid.width(), grid.height(), cur),
        steps,
    })
}

/// A chemotactic agent placed at the source climbs the concentration gradient
/// to the destination.
pub fn chemotactic_trace(conc: &ScalarField, grid: &MazeGrid) -> Result<PathTrace, ChemoError> {
    Ok(greedy_trace(
        conc,
        grid,
        grid.source(),
        grid.destination(),
        TraceMode::Ascend,
    )?)
}

/// Runs the clamped diffusion from the destination and records first-arrival
/// steps; stops once the source has been reached.
pub fn arrival_time_map(grid: &MazeGrid, config: &ChemoConfig) -> Result<ArrivalField, ChemoError> {
    let arrivals = arrivals_from(grid, grid.destination(), config, Some(grid.source()))?;
    match arrivals.get(grid.source()) {
        Some(_) => Ok(arrivals),
        None => Err(ChemoError::FrontNeverArrives {
            steps: config.max_steps,
        }),
    }
}

/// Clamped diffusion from `origin`, recording arrival steps until `stop_at`
/// arrives, every cell reachable from `origin` has arrived, or `max_steps`.
pub(crate) fn arrivals_from(
    grid: &MazeGrid,
    origin: Coord,
    config: &ChemoConfig,
    stop_at: Option<Coord>,
) -> Result<ArrivalField, ChemoError> {
    config.validate()?;
    let diffuser = Diffuser::new(
        grid,
        config.diffusivity,
        config.dt,
        &[(origin, config.clamp_value)],
    )?;
    let reachable =
        crate::maze::bfs_distances(grid, origin).map_err(|_| FieldError::NotCorridor(origin))?;
    let mut pending: Vec<usize> = grid
        .corridors()
        .filter(|&c| reachable.get(c).is_some())
        .map(|c| grid.index(c))
        .collect();
    let mut arrivals = ArrivalField::never(grid.width(), grid.height());
    let mut cur = vec![0.0; grid.len()];
    diffuser.apply_clamps(&mut cur);
    let mut next = cur.clone();
    let mut record = |cur: &[f64], t: u64, pending: &mut Vec<usize>| {
        pending.retain(|&i| {
            if cur[i] >= config.threshold {
                arrivals.times[i] = Some(t);
                false
            } else {
                true
            }
        });
    };
    record(&cur, 0, &mut pending);
    let stop = stop_at.map(|c| grid.index(c));
    let mut steps = 0;
    while !pending.is_empty() && steps < config.max_steps {
        if stop.is_some_and(|s| !pending.contains(&s)) {
            break;
        }
        diffuser.step(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
        steps += 1;
        record(&cur, steps as u64, &mut pending);
    }
    Ok(arrivals)
}

/// Descends arrival times from the source to the destination.
pub fn arrival_descent_trace(
    arrivals: &ArrivalField,
    grid: &MazeGrid,
) -> Result<PathTrace, ChemoError> {
    if arrivals.get(grid.source()).is_none() {
        return Err(ChemoError::FrontNeverArrives { steps: 0 });
    }
    Ok(greedy_trace(
        &arrivals.to_field(),
        grid,
        grid.source(),
        grid.destination(),
        TraceMode::Descend,
    )?)
}
