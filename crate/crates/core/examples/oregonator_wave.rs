//! Excitation wave in an Oregonator medium shaped like the maze. Saves
//! activator snapshots and the path read off the arrival times.
//!
//!     cargo run --release --example oregonator_wave -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::chemo::{run_oregonator_with, OregonatorParams};
use maze_mappers::field::ScalarField;
use maze_mappers::maze::{generate, oracle_path, Coord, GenConfig, MazeGrid};
use maze_mappers::render::{render_overlay_ppm, render_scalar_pgm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let grid = generate(&GenConfig::new(15, 15, 4).braid(0.3))?;
    let params = OregonatorParams::default();

    let mut snapshots = Vec::new();
    let run = run_oregonator_with(&grid, &params, |state| {
        if state.steps % 500 == 0 {
            let field = ScalarField::new(state.width(), state.height(), state.u.clone());
            snapshots.push((state.steps, field));
        }
    })?;
    println!(
        "wave reached the source after {} steps; path {} cells, shortest {}",
        run.steps,
        run.path.len(),
        oracle_path(&grid)?.len()
    );

    // Snapshots live on the fine lattice, so render them against an open
    // arena of the same size.
    let k = params.upscale;
    let (w, h) = (grid.width() * k, grid.height() * k);
    let lattice = MazeGrid::open(w, h, Coord::new(0, 0), Coord::new(w - 1, h - 1))?;
    for (t, u) in &snapshots {
        fs::write(
            out.join(format!("wave_{t:06}.pgm")),
            render_scalar_pgm(u, &lattice, 1)?,
        )?;
    }
    fs::write(
        out.join("oregonator_path.ppm"),
        render_overlay_ppm(&grid, Some(&run.path), None, k)?,
    )?;
    Ok(())
}
