//! Chemoattractant released at the destination: a chemotactic walker climbs
//! the concentration, and the first-arrival map gives a second route.
//!
//!     cargo run --example chemo_arrival -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::chemo::{
    arrival_descent_trace, arrival_time_map, chemotactic_trace, map_chemoattractant, ChemoConfig,
};
use maze_mappers::maze::{generate, oracle_path, GenConfig};
use maze_mappers::render::{render_overlay_ppm, render_scalar_pgm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let grid = generate(&GenConfig::new(21, 21, 9).braid(0.5))?;
    let config = ChemoConfig::default();

    let chem = map_chemoattractant(&grid, &config)?;
    let walker = chemotactic_trace(&chem.concentration, &grid)?;
    let arrivals = arrival_time_map(&grid, &config)?;
    let descent = arrival_descent_trace(&arrivals, &grid)?;
    println!(
        "after {} steps: chemotaxis {} cells, arrival descent {} cells, shortest {}",
        chem.steps,
        walker.len(),
        descent.len(),
        oracle_path(&grid)?.len()
    );

    fs::write(
        out.join("attractant.pgm"),
        render_scalar_pgm(&chem.concentration, &grid, 6)?,
    )?;
    fs::write(
        out.join("arrivals.pgm"),
        render_scalar_pgm(&arrivals.to_field(), &grid, 6)?,
    )?;
    fs::write(
        out.join("descent.ppm"),
        render_overlay_ppm(&grid, Some(&descent), None, 6)?,
    )?;
    Ok(())
}
