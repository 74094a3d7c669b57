//! Diffusion Voronoi processor: one clamped diffusion per seed, each cell
//! labelled by the seed whose front reached it first.

use rayon::prelude::*;

use super::{arrivals_from, ArrivalField, ChemoConfig, ChemoError};
use crate::maze::{Coord, MazeGrid};

#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiMap {
    width: usize,
    height: usize,
    /// Index into the seed list, `None` where no front arrived.
    pub labels: Vec<Option<usize>>,
    /// Cells whose two earliest arrivals differ by at most one step.
    pub boundary: Vec<bool>,
    pub arrivals: Vec<ArrivalField>,
}

impl VoronoiMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn label(&self, c: Coord) -> Option<usize> {
        self.labels[c.row * self.width + c.col]
    }

    pub fn is_boundary(&self, c: Coord) -> bool {
        self.boundary[c.row * self.width + c.col]
    }
}

pub fn voronoi_from_seeds(
    arena: &MazeGrid,
    seeds: &[Coord],
    config: &ChemoConfig,
) -> Result<VoronoiMap, ChemoError> {
    config.validate()?;
    let mut distinct = seeds.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 2 || distinct.len() != seeds.len() {
        return Err(ChemoError::TooFewSeeds(distinct.len()));
    }
    if let Some(&bad) = seeds.iter().find(|&&s| !arena.is_corridor(s)) {
        return Err(ChemoError::SeedOnWall(bad));
    }
    let arrivals = seeds
        .par_iter()
        .map(|&s| arrivals_from(arena, s, config, None))
        .collect::<Result<Vec<_>, _>>()?;

    let n = arena.len();
    let mut labels = vec![None; n];
    let mut boundary = vec![false; n];
    for i in 0..n {
        let mut times: Vec<(u64, usize)> = arrivals
            .iter()
            .enumerate()
            .filter_map(|(k, a)| a.times()[i].map(|t| (t, k)))
            .collect();
        times.sort();
        labels[i] = times.first().map(|&(_, k)| k);
        if let [(t0, _), (t1, _), ..] = times[..] {
            boundary[i] = t1 - t0 <= 1;
        }
    }
    Ok(VoronoiMap {
        width: arena.width(),
        height: arena.height(),
        labels,
        boundary,
        arrivals,
    })
}
