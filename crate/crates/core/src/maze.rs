//! Grid mazes: representation, ASCII format, seeded generation and the BFS
//! oracle every physical solver is checked against.
//!
//! Cells are addressed as `(col, row)` with row 0 at the top. Connectivity is
//! the 4-neighbourhood, enumerated in the fixed order N, E, S, W everywhere in
//! the crate.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Errors raised while building, parsing or searching a maze.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MazeError {
    #[error("maze text is empty")]
    Empty,
    #[error("line {line} has {found} cells, expected {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no '{0}' marker in maze")]
    MissingMarker(char),
    #[error("more than one '{0}' marker in maze")]
    DuplicateMarker(char),
    #[error("unexpected character {ch:?} at line {line}, column {col}")]
    BadChar { ch: char, line: usize, col: usize },
    #[error(
        "bad maze dimensions {width}x{height}: both must be odd and at least 3, with two rooms"
    )]
    BadDims { width: usize, height: usize },
    #[error("cell count {found} does not match {width}x{height}")]
    CellCount {
        width: usize,
        height: usize,
        found: usize,
    },
    #[error("{which} {at} is not a corridor cell inside the grid")]
    BadEndpoint { which: &'static str, at: Coord },
    #[error("source and destination coincide at {0}")]
    SameEndpoints(Coord),
    #[error("braid fraction {0} outside [0, 1]")]
    BadBraid(f64),
    #[error("search origin {0} is a wall")]
    FromIsWall(Coord),
    #[error("destination is unreachable from source")]
    NoPath,
}

/// A cell address, `col` counted from the left and `row` from the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub col: usize,
    pub row: usize,
}

impl Coord {
    pub const fn new(col: usize, row: usize) -> Self {
        Self { col, row }
    }

    pub fn manhattan(self, other: Coord) -> usize {
        self.col.abs_diff(other.col) + self.row.abs_diff(other.row)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

impl From<(usize, usize)> for Coord {
    fn from((col, row): (usize, usize)) -> Self {
        Self { col, row }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Wall,
    Corridor,
}

/// The four lattice directions in the crate-wide enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    North,
    East,
    South,
    West,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::North,
        Direction::East,
        Direction::South,
        Direction::West,
    ];

    fn offset(self) -> (isize, isize) {
        match self {
            Direction::North => (0, -1),
            Direction::East => (1, 0),
            Direction::South => (0, 1),
            Direction::West => (-1, 0),
        }
    }
}

/// Rectangular wall/corridor lattice with a designated source and destination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MazeGrid {
    width: usize,
    height: usize,
    cells: Vec<CellKind>,
    source: Coord,
    destination: Coord,
}

impl MazeGrid {
    pub fn new(
        width: usize,
        height: usize,
        cells: Vec<CellKind>,
        source: Coord,
        destination: Coord,
    ) -> Result<Self, MazeError> {
        if width == 0 || height == 0 {
            return Err(MazeError::Empty);
        }
        if cells.len() != width * height {
            return Err(MazeError::CellCount {
                width,
                height,
                found: cells.len(),
            });
        }
        let grid = Self {
            width,
            height,
            cells,
            source,
            destination,
        };
        grid.check_endpoint("source", source)?;
        grid.check_endpoint("destination", destination)?;
        if source == destination {
            return Err(MazeError::SameEndpoints(source));
        }
        Ok(grid)
    }

    /// An obstacle-free `width`×`height` arena. Handy for Voronoi runs and
    /// straight-channel fixtures.
    pub fn open(
        width: usize,
        height: usize,
        source: Coord,
        destination: Coord,
    ) -> Result<Self, MazeError> {
        Self::new(
            width,
            height,
            vec![CellKind::Corridor; width * height],
            source,
            destination,
        )
    }

    fn check_endpoint(&self, which: &'static str, at: Coord) -> Result<(), MazeError> {
        if self.is_corridor(at) {
            Ok(())
        } else {
            Err(MazeError::BadEndpoint { which, at })
        }
    }

    /// Same layout with new endpoints, e.g. a goal in a central chamber.
    pub fn with_endpoints(&self, source: Coord, destination: Coord) -> Result<Self, MazeError> {
        Self::new(
            self.width,
            self.height,
            self.cells.clone(),
            source,
            destination,
        )
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn source(&self) -> Coord {
        self.source
    }

    pub fn destination(&self) -> Coord {
        self.destination
    }

    pub fn cells(&self) -> &[CellKind] {
        &self.cells
    }

    pub fn in_bounds(&self, c: Coord) -> bool {
        c.col < self.width && c.row < self.height
    }

    /// Row-major index of `c`. Panics when out of bounds.
    pub fn index(&self, c: Coord) -> usize {
        assert!(
            self.in_bounds(c),
            "{c} outside {}x{}",
            self.width,
            self.height
        );
        c.row * self.width + c.col
    }

    pub fn coord(&self, index: usize) -> Coord {
        Coord::new(index % self.width, index / self.width)
    }

    /// Kind of cell `c`; anything outside the grid reads as wall.
    pub fn kind(&self, c: Coord) -> CellKind {
        if self.in_bounds(c) {
            self.cells[c.row * self.width + c.col]
        } else {
            CellKind::Wall
        }
    }

    pub fn is_corridor(&self, c: Coord) -> bool {
        self.kind(c) == CellKind::Corridor
    }

    pub fn step(&self, c: Coord, dir: Direction) -> Option<Coord> {
        let (dx, dy) = dir.offset();
        let col = c.col.checked_add_signed(dx)?;
        let row = c.row.checked_add_signed(dy)?;
        let n = Coord::new(col, row);
        self.in_bounds(n).then_some(n)
    }

    /// In-bounds neighbours in N, E, S, W order.
    pub fn neighbors(&self, c: Coord) -> impl Iterator<Item = Coord> + '_ {
        Direction::ALL
            .into_iter()
            .filter_map(move |d| self.step(c, d))
    }

    /// Corridor neighbours in N, E, S, W order.
    pub fn corridor_neighbors(&self, c: Coord) -> impl Iterator<Item = Coord> + '_ {
        self.neighbors(c).filter(|&n| self.is_corridor(n))
    }

    pub fn corridor_degree(&self, c: Coord) -> usize {
        self.corridor_neighbors(c).count()
    }

    pub fn corridor_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|&&k| k == CellKind::Corridor)
            .count()
    }

    /// All corridor cells in row-major order.
    pub fn corridors(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.cells.len())
            .filter(|&i| self.cells[i] == CellKind::Corridor)
            .map(|i| self.coord(i))
    }

    /// Number of corridor–corridor adjacencies (each counted once).
    pub fn corridor_edge_count(&self) -> usize {
        self.corridors()
            .map(|c| {
                [Direction::East, Direction::South]
                    .into_iter()
                    .filter_map(|d| self.step(c, d))
                    .filter(|&n| self.is_corridor(n))
                    .count()
            })
            .sum()
    }
}

/// Ordered cell sequence from source to destination.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathTrace {
    cells: Vec<Coord>,
}

impl PathTrace {
    pub fn new(cells: Vec<Coord>) -> Self {
        Self { cells }
    }

    pub fn cells(&self) -> &[Coord] {
        &self.cells
    }

    /// Length in cells (not steps).
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn first(&self) -> Option<Coord> {
        self.cells.first().copied()
    }

    pub fn last(&self) -> Option<Coord> {
        self.cells.last().copied()
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.cells.contains(&c)
    }

    pub fn into_cells(self) -> Vec<Coord> {
        self.cells
    }

    /// Checks the path invariants against `grid`: 4-adjacent steps, corridor
    /// cells only, no repeats, source first and destination last.
    pub fn validate(&self, grid: &MazeGrid) -> Result<(), String> {
        let (Some(first), Some(last)) = (self.first(), self.last()) else {
            return Err("empty path".into());
        };
        if first != grid.source() {
            return Err(format!(
                "path starts at {first}, source is {}",
                grid.source()
            ));
        }
        if last != grid.destination() {
            return Err(format!(
                "path ends at {last}, destination is {}",
                grid.destination()
            ));
        }
        let mut seen = vec![false; grid.len()];
        for (i, &c) in self.cells.iter().enumerate() {
            if !grid.is_corridor(c) {
                return Err(format!("cell {c} is not a corridor"));
            }
            let idx = grid.index(c);
            if seen[idx] {
                return Err(format!("cell {c} repeats"));
            }
            seen[idx] = true;
            if i > 0 && self.cells[i - 1].manhattan(c) != 1 {
                return Err(format!("{} and {c} are not adjacent", self.cells[i - 1]));
            }
        }
        Ok(())
    }
}

pub fn parse_ascii(text: &str) -> Result<MazeGrid, MazeError> {
    let lines: Vec<&str> = text
        .strip_suffix('\n')
        .unwrap_or(text)
        .split('\n')
        .collect();
    if text.is_empty() || lines.iter().all(|l| l.is_empty()) {
        return Err(MazeError::Empty);
    }
    let width = lines[0].chars().count();
    let mut cells = Vec::with_capacity(width * lines.len());
    let mut source = None;
    let mut destination = None;
    for (row, line) in lines.iter().enumerate() {
        let found = line.chars().count();
        if found != width {
            return Err(MazeError::RaggedRows {
                line: row + 1,
                expected: width,
                found,
            });
        }
        for (col, ch) in line.chars().enumerate() {
            let here = Coord::new(col, row);
            let kind = match ch {
                '#' => CellKind::Wall,
                '.' => CellKind::Corridor,
                'S' | 'D' => {
                    let slot = if ch == 'S' {
                        &mut source
                    } else {
                        &mut destination
                    };
                    if slot.replace(here).is_some() {
                        return Err(MazeError::DuplicateMarker(ch));
                    }
                    CellKind::Corridor
                }
                _ => {
                    return Err(MazeError::BadChar {
                        ch,
                        line: row + 1,
                        col: col + 1,
                    })
                }
            };
            cells.push(kind);
        }
    }
    let source = source.ok_or(MazeError::MissingMarker('S'))?;
    let destination = destination.ok_or(MazeError::MissingMarker('D'))?;
    MazeGrid::new(width, lines.len(), cells, source, destination)
}

pub fn serialize_ascii(grid: &MazeGrid) -> String {
    let mut out = String::with_capacity((grid.width + 1) * grid.height);
    for row in 0..grid.height {
        for col in 0..grid.width {
            let c = Coord::new(col, row);
            out.push(if c == grid.source {
                'S'
            } else if c == grid.destination {
                'D'
            } else if grid.is_corridor(c) {
                '.'
            } else {
                '#'
            });
        }
        out.push('\n');
    }
    out
}

/// Parameters for [`generate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub width: usize,
    pub height: usize,
    pub seed: u64,
    /// Probability that a dead end is opened into a loop.
    pub braid_fraction: f64,
}

impl GenConfig {
    pub fn new(width: usize, height: usize, seed: u64) -> Self {
        Self {
            width,
            height,
            seed,
            braid_fraction: 0.0,
        }
    }

    pub fn braid(mut self, fraction: f64) -> Self {
        self.braid_fraction = fraction;
        self
    }
}

/// Seeded maze generator.
///
/// Rooms sit at odd coordinates. An iterative recursive backtracker starting
/// at room (1,1) carves a spanning tree, drawing directions from a ChaCha8
/// stream seeded with `config.seed` (`gen_range` over `u32`, so the stream is
/// identical on 32- and 64-bit targets). Braiding then scans rows top to
/// bottom; every cell that is still a dead end draws a uniform `f64` and, if
/// it falls below `braid_fraction`, opens one random closed wall towards an
/// adjacent room. Source is room (1,1), destination the bottom-right room.
pub fn generate(config: &GenConfig) -> Result<MazeGrid, MazeError> {
    let GenConfig {
        width,
        height,
        seed,
        braid_fraction,
    } = *config;
    // 3x3 has a single room, so source and destination would coincide.
    if width < 3 || height < 3 || width % 2 == 0 || height % 2 == 0 || width * height == 9 {
        return Err(MazeError::BadDims { width, height });
    }
    if !(0.0..=1.0).contains(&braid_fraction) {
        return Err(MazeError::BadBraid(braid_fraction));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = vec![CellKind::Wall; width * height];
    let idx = |c: Coord| c.row * width + c.col;
    let room_step = |c: Coord, d: Direction| -> Option<Coord> {
        let (dx, dy) = d.offset();
        let col = c.col.checked_add_signed(2 * dx)?;
        let row = c.row.checked_add_signed(2 * dy)?;
        (col < width - 1 && row < height - 1).then_some(Coord::new(col, row))
    };
    let between = |a: Coord, b: Coord| Coord::new((a.col + b.col) / 2, (a.row + b.row) / 2);

    let start = Coord::new(1, 1);
    cells[idx(start)] = CellKind::Corridor;
    let mut stack = vec![start];
    while let Some(&current) = stack.last() {
        let open: Vec<Coord> = Direction::ALL
            .into_iter()
            .filter_map(|d| room_step(current, d))
            .filter(|&n| cells[idx(n)] == CellKind::Wall)
            .collect();
        if open.is_empty() {
            stack.pop();
            continue;
        }
        let next = open[rng.gen_range(0..open.len() as u32) as usize];
        cells[idx(between(current, next))] = CellKind::Corridor;
        cells[idx(next)] = CellKind::Corridor;
        stack.push(next);
    }

    let degree = |cells: &[CellKind], c: Coord| {
        Direction::ALL
            .into_iter()
            .filter_map(|d| {
                let (dx, dy) = d.offset();
                let n = Coord::new(c.col.checked_add_signed(dx)?, c.row.checked_add_signed(dy)?);
                (n.col < width && n.row < height).then_some(n)
            })
            .filter(|&n| cells[idx(n)] == CellKind::Corridor)
            .count()
    };
    for row in (1..height).step_by(2) {
        for col in (1..width).step_by(2) {
            let room = Coord::new(col, row);
            if degree(&cells, room) != 1 {
                continue;
            }
            let draw: f64 = rng.gen();
            if draw >= braid_fraction {
                continue;
            }
            let closed: Vec<Coord> = Direction::ALL
                .into_iter()
                .filter_map(|d| room_step(room, d))
                .filter(|&n| cells[idx(between(room, n))] == CellKind::Wall)
                .collect();
            if closed.is_empty() {
                continue;
            }
            let target = closed[rng.gen_range(0..closed.len() as u32) as usize];
            cells[idx(between(room, target))] = CellKind::Corridor;
        }
    }

    let last_room = Coord::new(width - 2, height - 2);
    MazeGrid::new(width, height, cells, start, last_room)
}

/// Hop counts from an origin; `None` where unreachable or on walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopMap {
    width: usize,
    height: usize,
    hops: Vec<Option<u32>>,
}

impl HopMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, c: Coord) -> Option<u32> {
        self.hops[c.row * self.width + c.col]
    }

    pub fn as_slice(&self) -> &[Option<u32>] {
        &self.hops
    }
}

/// Breadth-first hop counts from `from` over corridor cells.
pub fn bfs_distances(grid: &MazeGrid, from: Coord) -> Result<HopMap, MazeError> {
    if !grid.is_corridor(from) {
        return Err(MazeError::FromIsWall(from));
    }
    let mut hops = vec![None; grid.len()];
    hops[grid.index(from)] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(c) = queue.pop_front() {
        let next = hops[grid.index(c)].map(|h| h + 1);
        for n in grid.corridor_neighbors(c) {
            let slot = &mut hops[grid.index(n)];
            if slot.is_none() {
                *slot = next;
                queue.push_back(n);
            }
        }
    }
    Ok(HopMap {
        width: grid.width(),
        height: grid.height(),
        hops,
    })
}

/// A shortest source→destination path from BFS parent pointers, exploring
/// neighbours in N, E, S, W order.
pub fn oracle_path(grid: &MazeGrid) -> Result<PathTrace, MazeError> {
    let mut parent: Vec<Option<usize>> = vec![None; grid.len()];
    let mut seen = vec![false; grid.len()];
    let start = grid.index(grid.source());
    let goal = grid.index(grid.destination());
    seen[start] = true;
    let mut queue = VecDeque::from([grid.source()]);
    while let Some(c) = queue.pop_front() {
        if grid.index(c) == goal {
            break;
        }
        for n in grid.corridor_neighbors(c) {
            let ni = grid.index(n);
            if !seen[ni] {
                seen[ni] = true;
                parent[ni] = Some(grid.index(c));
                queue.push_back(n);
            }
        }
    }
    if !seen[goal] {
        return Err(MazeError::NoPath);
    }
    let mut cells = vec![grid.destination()];
    let mut at = goal;
    while let Some(p) = parent[at] {
        cells.push(grid.coord(p));
        at = p;
    }
    cells.reverse();
    Ok(PathTrace::new(cells))
}

/// Marks every corridor cell lying on at least one shortest source–destination
/// path, i.e. `d(S,c) + d(c,D) == d(S,D)`.
pub fn shortest_path_cells(grid: &MazeGrid) -> Result<Vec<bool>, MazeError> {
    let from_source = bfs_distances(grid, grid.source())?;
    let from_dest = bfs_distances(grid, grid.destination())?;
    let total = from_source
        .get(grid.destination())
        .ok_or(MazeError::NoPath)?;
    Ok(from_source
        .as_slice()
        .iter()
        .zip(from_dest.as_slice())
        .map(|(a, b)| matches!((a, b), (Some(a), Some(b)) if a + b == total))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(col: usize, row: usize) -> Coord {
        Coord::new(col, row)
    }

    #[test]
    fn parses_smallest_corridor() {
        let g = parse_ascii("S.D").unwrap();
        assert_eq!((g.width(), g.height()), (3, 1));
        assert_eq!(g.source(), c(0, 0));
        assert_eq!(g.destination(), c(2, 0));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_ascii("S.\n.D#"),
            Err(MazeError::RaggedRows { line: 2, .. })
        ));
        assert_eq!(parse_ascii("..D"), Err(MazeError::MissingMarker('S')));
        assert_eq!(parse_ascii("S.."), Err(MazeError::MissingMarker('D')));
        assert_eq!(parse_ascii("S.DS"), Err(MazeError::DuplicateMarker('S')));
        assert_eq!(parse_ascii("SDD"), Err(MazeError::DuplicateMarker('D')));
        assert!(matches!(
            parse_ascii("S x D"),
            Err(MazeError::BadChar { ch: ' ', .. })
        ));
        assert_eq!(parse_ascii(""), Err(MazeError::Empty));
        // CRLF is not part of the format
        assert!(matches!(
            parse_ascii("S.\r\n.D\r\n"),
            Err(MazeError::BadChar { ch: '\r', .. })
        ));
    }

    #[test]
    fn walled_markers_parse() {
        let g = parse_ascii("S#D").unwrap();
        assert_eq!(oracle_path(&g), Err(MazeError::NoPath));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(serialize_ascii(&parse_ascii("S.D").unwrap()), "S.D\n");
        let g = MazeGrid::open(2, 2, c(0, 0), c(1, 1)).unwrap();
        assert_eq!(serialize_ascii(&g), "S.\n.D\n");
        assert_eq!(parse_ascii("S.\n.D\n").unwrap(), g);
    }

    #[test]
    fn generate_rejects_bad_dims() {
        for (w, h) in [(4, 5), (5, 4), (1, 5), (5, 1), (2, 2)] {
            assert_eq!(
                generate(&GenConfig::new(w, h, 0)),
                Err(MazeError::BadDims {
                    width: w,
                    height: h
                })
            );
        }
        assert_eq!(
            generate(&GenConfig::new(5, 5, 0).braid(1.5)),
            Err(MazeError::BadBraid(1.5))
        );
    }

    #[test]
    fn perfect_maze_is_a_spanning_tree() {
        let g = generate(&GenConfig::new(5, 5, 1)).unwrap();
        assert_eq!(g.corridor_edge_count(), g.corridor_count() - 1);
        let hops = bfs_distances(&g, g.source()).unwrap();
        assert!(g.corridors().all(|c| hops.get(c).is_some()));
    }

    #[test]
    fn full_braid_leaves_no_dead_ends() {
        let g = generate(&GenConfig::new(31, 31, 7).braid(1.0)).unwrap();
        let dead: Vec<Coord> = g
            .corridors()
            .filter(|&c| g.corridor_degree(c) == 1)
            .filter(|&c| c != g.source() && c != g.destination())
            .collect();
        assert!(dead.is_empty(), "dead ends left: {dead:?}");
        assert!(g.corridor_edge_count() > g.corridor_count() - 1);
    }

    #[test]
    fn thinnest_generated_maze() {
        assert!(matches!(
            generate(&GenConfig::new(3, 3, 5)),
            Err(MazeError::BadDims { .. })
        ));
        let g = generate(&GenConfig::new(3, 5, 5).braid(1.0)).unwrap();
        assert_eq!(serialize_ascii(&g), "###\n#S#\n#.#\n#D#\n###\n");
    }

    #[test]
    fn bfs_examples() {
        let g = parse_ascii("S.D").unwrap();
        let h = bfs_distances(&g, g.destination()).unwrap();
        assert_eq!(h.as_slice(), &[Some(2), Some(1), Some(0)]);
        let g = parse_ascii("S#D").unwrap();
        let h = bfs_distances(&g, g.destination()).unwrap();
        assert_eq!(h.get(g.source()), None);
        assert_eq!(h.get(c(1, 0)), None);
        assert_eq!(
            bfs_distances(&g, c(1, 0)),
            Err(MazeError::FromIsWall(c(1, 0)))
        );
    }

    #[test]
    fn oracle_examples() {
        let g = parse_ascii("S.D").unwrap();
        assert_eq!(
            oracle_path(&g).unwrap().cells(),
            &[c(0, 0), c(1, 0), c(2, 0)]
        );
        // Tie order N, E, S, W: from S the east move is explored first.
        let g = parse_ascii("S.\n.D").unwrap();
        assert_eq!(
            oracle_path(&g).unwrap().cells(),
            &[c(0, 0), c(1, 0), c(1, 1)]
        );
    }

    #[test]
    fn endpoint_validation() {
        let cells = vec![CellKind::Corridor, CellKind::Wall, CellKind::Corridor];
        assert!(matches!(
            MazeGrid::new(3, 1, cells.clone(), c(1, 0), c(2, 0)),
            Err(MazeError::BadEndpoint {
                which: "source",
                ..
            })
        ));
        assert!(matches!(
            MazeGrid::new(3, 1, cells.clone(), c(0, 0), c(0, 0)),
            Err(MazeError::SameEndpoints(_))
        ));
        assert!(matches!(
            MazeGrid::new(3, 1, cells, c(0, 0), c(5, 0)),
            Err(MazeError::BadEndpoint { .. })
        ));
    }

    #[test]
    fn path_validation_catches_gaps() {
        let g = parse_ascii("S..D").unwrap();
        assert!(PathTrace::new(vec![c(0, 0), c(2, 0), c(3, 0)])
            .validate(&g)
            .is_err());
        assert!(PathTrace::new(vec![c(0, 0), c(1, 0), c(2, 0), c(3, 0)])
            .validate(&g)
            .is_ok());
    }
}
