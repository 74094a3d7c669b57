//! Every mapper on the same braided maze, scored against BFS.
//!
//!     cargo run --release --example compare_all -- 15 11

use maze_mappers::cli::{run_pipeline, Mapper, PipelineConfig};
use maze_mappers::maze::{generate, GenConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let size: usize = args.next().map_or(Ok(15), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(11), |s| s.parse())?;
    let grid = generate(&GenConfig::new(size, size, seed).braid(0.5))?;

    println!(
        "{:<11} {:>6} {:>6} {:>7} {:>10}",
        "mapper", "path", "best", "ratio", "ms"
    );
    for mapper in Mapper::ALL {
        let r = run_pipeline(&grid, mapper, &PipelineConfig::default()).report;
        let show = |v: Option<usize>| v.map_or("-".to_string(), |n| n.to_string());
        println!(
            "{:<11} {:>6} {:>6} {:>7} {:>10.1}{}",
            mapper.name(),
            show(r.path_length),
            show(r.oracle_length),
            r.length_ratio.map_or("-".into(), |x| format!("{x:.3}")),
            r.wall_clock_ms,
            r.error.map(|e| format!("  ({e})")).unwrap_or_default()
        );
    }
    Ok(())
}
