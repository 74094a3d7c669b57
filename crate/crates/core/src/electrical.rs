//! Electrical mapper. Corridors form a unit-resistor network, walls are
//! insulators; the destination is held at potential 1 and the source at 0.
//! Current magnitude per cell stands in for the heat a thermal camera or a
//! liquid-crystal sheet would show.

use thiserror::Error;

use crate::field::{
    gradient, greedy_trace, solve_laplace, FieldError, ScalarField, SolveReport, SolverConfig,
    TraceMode,
};
use crate::maze::{MazeGrid, PathTrace};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ElectricalError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("current is zero everywhere; source and destination are not connected")]
    DegenerateField,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElectricalMap {
    /// Potential: 1 at the destination, 0 at the source.
    pub potential: ScalarField,
    /// |∇φ| per corridor cell.
    pub current: ScalarField,
    pub report: SolveReport,
}

/// Solves for the potential. A solve that runs out of sweeps is still
/// returned; check `report.converged`.
pub fn map_potential(
    grid: &MazeGrid,
    config: &SolverConfig,
) -> Result<ElectricalMap, ElectricalError> {
    let pins = [(grid.destination(), 1.0), (grid.source(), 0.0)];
    let (potential, report) = solve_laplace(grid, &pins, config)?;
    let current = gradient(&potential, grid)?.magnitudes();
    Ok(ElectricalMap {
        potential,
        current,
        report,
    })
}

/// From the source, keep stepping to the neighbour with the highest voltage.
pub fn trace_voltage_ascent(
    emap: &ElectricalMap,
    grid: &MazeGrid,
) -> Result<PathTrace, ElectricalError> {
    emap.report.ensure_converged()?;
    Ok(greedy_trace(
        &emap.potential,
        grid,
        grid.source(),
        grid.destination(),
        TraceMode::Ascend,
    )?)
}

/// Current magnitude scaled so the hottest cell reads 1.
pub fn thermal_map(emap: &ElectricalMap) -> Result<ScalarField, ElectricalError> {
    let peak = emap.current.values().iter().copied().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Err(ElectricalError::DegenerateField);
    }
    Ok(emap.current.map(|v| v / peak))
}
