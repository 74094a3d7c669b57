//! Hele-Shaw flow through a maze with dye fed at the inlet. Writes one frame
//! every 100 steps; the dye front runs down the shortest route first.
//!
//!     cargo run --example fluid_dye -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::field::SolverConfig;
use maze_mappers::fluid::{advect_dye_with, map_pressure, trace_streamline, DyeConfig, DyeState};
use maze_mappers::maze::{generate, GenConfig};
use maze_mappers::render::render_scalar_pgm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let grid = generate(&GenConfig::new(21, 21, 5).braid(0.4))?;
    let fmap = map_pressure(&grid, &SolverConfig::default())?;
    let streamline = trace_streamline(&fmap, &grid)?;
    println!("streamline {} cells", streamline.len());

    // Flow is slow in a long maze, so take big steps; the Courant check in
    // advect_dye guards the limit.
    let peak = grid.corridors().map(|c| fmap.speed(c)).fold(0.0, f64::max);
    let config = DyeConfig {
        diffusivity: 0.05,
        dt: (0.5 / peak).min(5.0),
        steps: 1000,
        ..DyeConfig::default()
    };
    let mut frames = Vec::new();
    advect_dye_with(&grid, &fmap, &DyeState::clean(&grid), &config, |s| {
        if s.time % 100 == 0 {
            frames.push((s.time, s.concentration.clone()));
        }
    })?;
    for (t, frame) in frames {
        fs::write(
            out.join(format!("dye_{t:04}.pgm")),
            render_scalar_pgm(&frame, &grid, 6)?,
        )?;
    }
    Ok(())
}
