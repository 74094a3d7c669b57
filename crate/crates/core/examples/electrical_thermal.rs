//! Resistor-network maze: potential, current "heat" and voltage ascent.
//!
//!     cargo run --example electrical_thermal -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::electrical::{map_potential, thermal_map, trace_voltage_ascent};
use maze_mappers::field::SolverConfig;
use maze_mappers::maze::{generate, oracle_path, GenConfig};
use maze_mappers::render::{render_overlay_ppm, render_scalar_pgm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let grid = generate(&GenConfig::new(31, 31, 12).braid(0.5))?;
    let emap = map_potential(&grid, &SolverConfig::default())?;
    println!(
        "SOR: {} sweeps, residual {:.1e}",
        emap.report.iterations, emap.report.final_residual
    );

    let heat = thermal_map(&emap)?;
    let path = trace_voltage_ascent(&emap, &grid)?;
    let best = oracle_path(&grid)?;
    println!(
        "voltage ascent {} cells, shortest {} cells",
        path.len(),
        best.len()
    );

    fs::write(
        out.join("potential.pgm"),
        render_scalar_pgm(&emap.potential, &grid, 6)?,
    )?;
    fs::write(out.join("thermal.pgm"), render_scalar_pgm(&heat, &grid, 6)?)?;
    fs::write(
        out.join("ascent.ppm"),
        render_overlay_ppm(&grid, Some(&path), Some(&heat), 6)?,
    )?;
    Ok(())
}
