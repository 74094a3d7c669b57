//! Generate a perfect and a braided maze from the same seed and compare them.
//!
//!     cargo run --example generate_maze -- 21 7

use maze_mappers::maze::{generate, oracle_path, serialize_ascii, GenConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let size: usize = args.next().map_or(Ok(21), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(7), |s| s.parse())?;

    for braid in [0.0, 0.5] {
        let grid = generate(&GenConfig::new(size, size, seed).braid(braid))?;
        let loops = grid.corridor_edge_count() + 1 - grid.corridor_count();
        let path = oracle_path(&grid)?;
        println!(
            "braid {braid}: {loops} independent loops, shortest path {} cells",
            path.len()
        );
        print!("{}", serialize_ascii(&grid));
    }
    Ok(())
}
