//! Lee wavefront labels on a braided maze, written as a heatmap and an overlay.
//!
//!     cargo run --example lee_wavefront -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::lee::{lee_map, lee_trace};
use maze_mappers::maze::{generate, GenConfig};
use maze_mappers::render::{render_overlay_ppm, render_scalar_pgm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let grid = generate(&GenConfig::new(41, 41, 3).braid(0.3))?;
    let labels = lee_map(&grid);
    let path = lee_trace(&labels, &grid, grid.source())?;
    println!(
        "source label {}, path {} cells",
        labels.get(grid.source()),
        path.len()
    );

    fs::write(
        out.join("lee_labels.pgm"),
        render_scalar_pgm(&labels, &grid, 6)?,
    )?;
    fs::write(
        out.join("lee_path.ppm"),
        render_overlay_ppm(&grid, Some(&path), Some(&labels), 6)?,
    )?;
    Ok(())
}
