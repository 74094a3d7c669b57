//! Fixtures and independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::VecDeque;

use maze_mappers::maze::{generate, parse_ascii, CellKind, Coord, GenConfig, MazeGrid, PathTrace};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn maze(size: usize, seed: u64, braid: f64) -> MazeGrid {
    generate(&GenConfig::new(size, size, seed).braid(braid)).expect("valid maze config")
}

/// Plain queue BFS over corridor cells, written without the library's helpers.
pub fn bfs(grid: &MazeGrid, from: Coord) -> Vec<Option<usize>> {
    let (w, h) = (grid.width(), grid.height());
    let open = |c: usize, r: usize| grid.cells()[r * w + c] == CellKind::Corridor;
    let mut dist = vec![None; w * h];
    if !open(from.col, from.row) {
        return dist;
    }
    dist[from.row * w + from.col] = Some(0);
    let mut queue = VecDeque::from([(from.col, from.row)]);
    while let Some((c, r)) = queue.pop_front() {
        let d = dist[r * w + c].unwrap();
        let mut next = Vec::with_capacity(4);
        if r > 0 {
            next.push((c, r - 1));
        }
        if c + 1 < w {
            next.push((c + 1, r));
        }
        if r + 1 < h {
            next.push((c, r + 1));
        }
        if c > 0 {
            next.push((c - 1, r));
        }
        for (nc, nr) in next {
            if open(nc, nr) && dist[nr * w + nc].is_none() {
                dist[nr * w + nc] = Some(d + 1);
                queue.push_back((nc, nr));
            }
        }
    }
    dist
}

/// Shortest source-to-destination length in cells, if connected.
pub fn oracle_len(grid: &MazeGrid) -> Option<usize> {
    let w = grid.width();
    let s = grid.source();
    bfs(grid, grid.destination())[s.row * w + s.col].map(|d| d + 1)
}

/// Checks that `path` is a connected corridor walk from source to destination.
pub fn assert_valid_path(grid: &MazeGrid, path: &PathTrace) {
    assert_eq!(path.first(), Some(grid.source()));
    assert_eq!(path.last(), Some(grid.destination()));
    for pair in path.cells().windows(2) {
        assert_eq!(pair[0].manhattan(pair[1]), 1, "gap at {}", pair[0]);
        assert!(grid.is_corridor(pair[1]), "{} is a wall", pair[1]);
    }
}

/// Direct solution of the discrete Laplace system: every unpinned corridor
/// cell connected to a pin equals the mean of its corridor neighbours. Cells
/// in components without a pin come back as `None`.
pub fn dense_laplace(grid: &MazeGrid, pins: &[(Coord, f64)]) -> Vec<Option<f64>> {
    let n = grid.len();
    let mut pin_value = vec![None; n];
    for &(c, v) in pins {
        pin_value[grid.index(c)] = Some(v);
    }
    let mut reach = vec![false; n];
    for &(c, _) in pins {
        for (i, d) in bfs(grid, c).iter().enumerate() {
            reach[i] |= d.is_some();
        }
    }
    let unknowns: Vec<usize> = (0..n)
        .filter(|&i| reach[i] && pin_value[i].is_none())
        .collect();
    let mut slot = vec![usize::MAX; n];
    for (k, &i) in unknowns.iter().enumerate() {
        slot[i] = k;
    }
    let m = unknowns.len();
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut b = DVector::<f64>::zeros(m);
    for (k, &i) in unknowns.iter().enumerate() {
        for nb in grid.corridor_neighbors(grid.coord(i)) {
            let j = grid.index(nb);
            a[(k, k)] += 1.0;
            match pin_value[j] {
                Some(v) => b[k] += v,
                None => a[(k, slot[j])] -= 1.0,
            }
        }
    }
    let x = if m == 0 {
        DVector::zeros(0)
    } else {
        a.lu()
            .solve(&b)
            .expect("pinned Laplace system is nonsingular")
    };
    (0..n)
        .map(|i| pin_value[i].or_else(|| (slot[i] != usize::MAX).then(|| x[slot[i]])))
        .collect()
}

/// Random corridor mask with source and destination on corridor cells.
pub fn random_mask(rng: &mut ChaCha8Rng, width: usize, height: usize, density: f64) -> MazeGrid {
    let mut cells: Vec<CellKind> = (0..width * height)
        .map(|_| {
            if rng.gen_bool(density) {
                CellKind::Corridor
            } else {
                CellKind::Wall
            }
        })
        .collect();
    let s = rng.gen_range(0..width * height);
    let mut d = rng.gen_range(0..width * height - 1);
    if d >= s {
        d += 1;
    }
    cells[s] = CellKind::Corridor;
    cells[d] = CellKind::Corridor;
    let at = |i: usize| Coord::new(i % width, i / width);
    MazeGrid::new(width, height, cells, at(s), at(d)).expect("distinct corridor endpoints")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square loop with a 4-cell branch over the top and an 8-cell branch down
/// the left side and along the bottom.
pub const TWO_BRANCH: &str = "S...\n.##.\n.##D\n.##.\n....";

pub fn two_branch() -> (MazeGrid, Vec<Coord>, Vec<Coord>) {
    let grid = parse_ascii(TWO_BRANCH).unwrap();
    let c = Coord::new;
    let short = vec![c(1, 0), c(2, 0), c(3, 0), c(3, 1)];
    let long = vec![
        c(0, 1),
        c(0, 2),
        c(0, 3),
        c(0, 4),
        c(1, 4),
        c(2, 4),
        c(3, 4),
        c(3, 3),
    ];
    (grid, short, long)
}

/// Main channel along row 0 with sealed stubs hanging below it. Returns the
/// grid and the stub cells (junction excluded).
pub fn stub_fixture(k: usize) -> (MazeGrid, Vec<Coord>) {
    let width = 7 + k;
    let depth = 1 + k % 4;
    let mut stubs = vec![(2 + k % 3, depth)];
    if k >= 5 {
        stubs.push((width - 3, 1 + (k + 1) % 3));
    }
    let height = 1 + stubs.iter().map(|s| s.1).max().unwrap();
    let mut rows = vec![vec![b'#'; width]; height];
    for cell in rows[0].iter_mut() {
        *cell = b'.';
    }
    rows[0][0] = b'S';
    rows[0][width - 1] = b'D';
    let mut cells = Vec::new();
    for &(col, len) in &stubs {
        for (row, line) in rows.iter_mut().enumerate().skip(1).take(len) {
            line[col] = b'.';
            cells.push(Coord::new(col, row));
        }
    }
    let text: Vec<String> = rows
        .into_iter()
        .map(|r| String::from_utf8(r).unwrap())
        .collect();
    (parse_ascii(&text.join("\n")).unwrap(), cells)
}

/// Hand-written grids used across suites.
pub fn fixtures() -> Vec<MazeGrid> {
    let mut out: Vec<MazeGrid> = [
        "S.D",
        "SD",
        "S\n.\n.\nD",
        TWO_BRANCH,
        "S....\n.###.\n.....\n.###.\n....D",
        "S......\n#####.#\n......D",
        "S.#..\n..#.#\n....D",
    ]
    .iter()
    .map(|t| parse_ascii(t).unwrap())
    .collect();
    out.extend((0..10).map(|k| stub_fixture(k).0));
    out
}

/// Least-squares line through `(x, y)`; returns `(slope, intercept, r2)`.
pub fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx, sxy * sxy / (sxx * syy))
}
