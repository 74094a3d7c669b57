//! Diffusion Voronoi diagram: one front per seed, cells owned by the first
//! front to touch them.
//!
//!     cargo run --example voronoi -- out/

use std::fs;
use std::path::PathBuf;

use maze_mappers::chemo::{voronoi_from_seeds, ChemoConfig};
use maze_mappers::maze::{Coord, MazeGrid};
use maze_mappers::render::render_voronoi_ppm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&out)?;

    let (w, h) = (61, 41);
    let arena = MazeGrid::open(w, h, Coord::new(0, 0), Coord::new(w - 1, h - 1))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut seeds = Vec::new();
    while seeds.len() < 8 {
        let s = Coord::new(rng.gen_range(0..w), rng.gen_range(0..h));
        if !seeds.contains(&s) {
            seeds.push(s);
        }
    }

    let map = voronoi_from_seeds(&arena, &seeds, &ChemoConfig::first_contact())?;
    for (k, s) in seeds.iter().enumerate() {
        let owned = map.labels.iter().filter(|&&l| l == Some(k)).count();
        println!("seed {k} at {s}: {owned} cells");
    }
    println!(
        "{} boundary cells",
        map.boundary.iter().filter(|&&b| b).count()
    );
    fs::write(
        out.join("voronoi.ppm"),
        render_voronoi_ppm(&map, &arena, 8)?,
    )?;
    Ok(())
}
