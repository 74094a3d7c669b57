//! Lee's wavefront router: label every cell with its step count from the
//! destination, then walk the labels back down from the source.

use thiserror::Error;

use crate::field::{ScalarField, UNREACHED};
use crate::maze::{Coord, MazeGrid, PathTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeeError {
    #[error("source {0} was never reached by the wavefront")]
    Unreachable(Coord),
    #[error("labels do not decrease by one at {0}; not a Lee map for this grid")]
    BrokenLabels(Coord),
    #[error("label field does not match the grid dimensions")]
    DimensionMismatch,
}

/// Wavefront expansion from the destination. Reached corridor cells carry
/// their hop count as an exact small integer; everything else is
/// [`UNREACHED`].
pub fn lee_map(grid: &MazeGrid) -> ScalarField {
    let mut labels = ScalarField::filled(grid.width(), grid.height(), UNREACHED);
    labels.set(grid.destination(), 0.0);
    let mut front = vec![grid.destination()];
    let mut step = 0.0;
    while !front.is_empty() {
        step += 1.0;
        let mut next = Vec::new();
        for &c in &front {
            for n in grid.corridor_neighbors(c) {
                if labels.get(n) == UNREACHED {
                    labels.set(n, step);
                    next.push(n);
                }
            }
        }
        front = next;
    }
    labels
}

/// Backtrace from `source`, each step to the first neighbour (N, E, S, W)
/// whose label is exactly one less.
pub fn lee_trace(
    labels: &ScalarField,
    grid: &MazeGrid,
    source: Coord,
) -> Result<PathTrace, LeeError> {
    if labels.check_dims(grid).is_err() {
        return Err(LeeError::DimensionMismatch);
    }
    let start = labels.get(source);
    if start == UNREACHED || !grid.is_corridor(source) {
        return Err(LeeError::Unreachable(source));
    }
    let mut cells = vec![source];
    let mut at = source;
    let mut label = start;
    while label > 0.0 {
        at = grid
            .corridor_neighbors(at)
            .find(|&n| labels.get(n) == label - 1.0)
            .ok_or(LeeError::BrokenLabels(at))?;
        label -= 1.0;
        cells.push(at);
    }
    Ok(PathTrace::new(cells))
}
