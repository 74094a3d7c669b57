//! Binary netpbm output: grayscale heatmaps (P5) and colour overlays (P6).
//!
//! Byte layout is fixed so golden files stay valid across platforms:
//! header `P5\n{w} {h}\n255\n` (or `P6`), then row-major pixels. Each maze
//! cell becomes a `scale`×`scale` square.

use thiserror::Error;

use crate::chemo::VoronoiMap;
use crate::field::{ScalarField, UNREACHED};
use crate::maze::{MazeGrid, PathTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("input is {found_w}x{found_h}, grid is {want_w}x{want_h}")]
    DimensionMismatch {
        found_w: usize,
        found_h: usize,
        want_w: usize,
        want_h: usize,
    },
    #[error("path cell ({col},{row}) lies outside the grid")]
    PathOffGrid { col: usize, row: usize },
    #[error("scale must be at least 1")]
    ZeroScale,
}

pub type Rgb = [u8; 3];

pub const WALL: Rgb = [0, 0, 0];
pub const OPEN: Rgb = [255, 255, 255];
pub const PATH: Rgb = [255, 0, 0];
pub const SOURCE: Rgb = [0, 255, 0];
pub const DESTINATION: Rgb = [0, 0, 255];

/// Twelve well-separated colours for Voronoi regions, cycled by seed index.
pub const PALETTE: [Rgb; 12] = [
    [230, 25, 75],
    [60, 180, 75],
    [255, 225, 25],
    [0, 130, 200],
    [245, 130, 48],
    [145, 30, 180],
    [70, 240, 240],
    [240, 50, 230],
    [210, 245, 60],
    [250, 190, 212],
    [0, 128, 128],
    [170, 110, 40],
];

/// An 8-bit raster, one (gray) or three (RGB) channels per pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<u8>,
}

impl Raster {
    pub fn gray(width: usize, height: usize) -> Self {
        Self::blank(width, height, 1)
    }

    pub fn rgb(width: usize, height: usize) -> Self {
        Self::blank(width, height, 3)
    }

    fn blank(width: usize, height: usize, channels: usize) -> Self {
        Self {
            width,
            height,
            channels,
            data: vec![0; width * height * channels],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    /// Paints a `scale`×`scale` block for cell `(col, row)`.
    fn fill_cell(&mut self, col: usize, row: usize, scale: usize, px: &[u8]) {
        debug_assert_eq!(px.len(), self.channels);
        for y in row * scale..(row + 1) * scale {
            for x in col * scale..(col + 1) * scale {
                let at = (y * self.width + x) * self.channels;
                self.data[at..at + self.channels].copy_from_slice(px);
            }
        }
    }

    /// Netpbm encoding: P5 for gray, P6 for RGB.
    pub fn encode(&self) -> Vec<u8> {
        let magic = if self.channels == 1 { "P5" } else { "P6" };
        let mut out = format!("{magic}\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.data);
        out
    }
}

fn check_field(field: &ScalarField, grid: &MazeGrid) -> Result<(), RenderError> {
    if field.width() == grid.width() && field.height() == grid.height() {
        Ok(())
    } else {
        Err(RenderError::DimensionMismatch {
            found_w: field.width(),
            found_h: field.height(),
            want_w: grid.width(),
            want_h: grid.height(),
        })
    }
}

/// Min-max normalised gray levels per cell: `floor(255·t)` over corridor
/// cells holding real values; walls, sentinels and constant fields give 0.
pub fn gray_levels(field: &ScalarField, grid: &MazeGrid) -> Result<Vec<u8>, RenderError> {
    check_field(field, grid)?;
    let live = |i: usize| {
        let v = field.values()[i];
        (grid.cells()[i] == crate::maze::CellKind::Corridor && v != UNREACHED && v.is_finite())
            .then_some(v)
    };
    let (lo, hi) = (0..grid.len())
        .filter_map(live)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    let span = hi - lo;
    Ok((0..grid.len())
        .map(|i| match live(i) {
            Some(v) if span > 0.0 => (((v - lo) / span).clamp(0.0, 1.0) * 255.0).floor() as u8,
            _ => 0,
        })
        .collect())
}

pub fn render_scalar_pgm(
    field: &ScalarField,
    grid: &MazeGrid,
    scale: usize,
) -> Result<Vec<u8>, RenderError> {
    if scale == 0 {
        return Err(RenderError::ZeroScale);
    }
    let levels = gray_levels(field, grid)?;
    let mut raster = Raster::gray(grid.width() * scale, grid.height() * scale);
    for (i, &g) in levels.iter().enumerate() {
        let c = grid.coord(i);
        raster.fill_cell(c.col, c.row, scale, &[g]);
    }
    Ok(raster.encode())
}

/// Maze overlay: black walls, corridors white (or field gray), path red,
/// source green, destination blue. Markers win over the path, the path wins
/// over the field.
pub fn render_overlay_ppm(
    grid: &MazeGrid,
    path: Option<&PathTrace>,
    field: Option<&ScalarField>,
    scale: usize,
) -> Result<Vec<u8>, RenderError> {
    if scale == 0 {
        return Err(RenderError::ZeroScale);
    }
    let mut colours: Vec<Rgb> = match field {
        Some(f) => gray_levels(f, grid)?.into_iter().map(|g| [g; 3]).collect(),
        None => vec![OPEN; grid.len()],
    };
    for (i, kind) in grid.cells().iter().enumerate() {
        if *kind == crate::maze::CellKind::Wall {
            colours[i] = WALL;
        }
    }
    if let Some(p) = path {
        for &c in p.cells() {
            if !grid.in_bounds(c) {
                return Err(RenderError::PathOffGrid {
                    col: c.col,
                    row: c.row,
                });
            }
            colours[grid.index(c)] = PATH;
        }
    }
    colours[grid.index(grid.source())] = SOURCE;
    colours[grid.index(grid.destination())] = DESTINATION;
    Ok(paint(grid.width(), grid.height(), scale, &colours))
}

fn paint(width: usize, height: usize, scale: usize, colours: &[Rgb]) -> Vec<u8> {
    let mut raster = Raster::rgb(width * scale, height * scale);
    for (i, px) in colours.iter().enumerate() {
        raster.fill_cell(i % width, i / width, scale, px);
    }
    raster.encode()
}

/// Voronoi regions in [`PALETTE`] colours, boundary band and walls black,
/// unlabelled cells white.
pub fn render_voronoi_ppm(
    map: &VoronoiMap,
    grid: &MazeGrid,
    scale: usize,
) -> Result<Vec<u8>, RenderError> {
    if scale == 0 {
        return Err(RenderError::ZeroScale);
    }
    if map.width() != grid.width() || map.height() != grid.height() {
        return Err(RenderError::DimensionMismatch {
            found_w: map.width(),
            found_h: map.height(),
            want_w: grid.width(),
            want_h: grid.height(),
        });
    }
    let colours: Vec<Rgb> = (0..grid.len())
        .map(|i| {
            if grid.cells()[i] == crate::maze::CellKind::Wall || map.boundary[i] {
                WALL
            } else {
                map.labels[i].map_or(OPEN, |k| PALETTE[k % PALETTE.len()])
            }
        })
        .collect();
    Ok(paint(grid.width(), grid.height(), scale, &colours))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maze::{parse_ascii, Coord};

    #[test]
    fn single_cell_header() {
        let g = parse_ascii("S\nD").unwrap();
        let f = ScalarField::new(1, 2, vec![0.0, 1.0]);
        let bytes = render_scalar_pgm(&f, &g, 1).unwrap();
        assert!(bytes.starts_with(b"P5\n1 2\n255\n"));
        assert_eq!(&bytes[11..], &[0, 255]);
    }

    #[test]
    fn ramp_quantisation() {
        let g = parse_ascii("S.D").unwrap();
        let f = ScalarField::new(3, 1, vec![0.0, 0.5, 1.0]);
        let bytes = render_scalar_pgm(&f, &g, 1).unwrap();
        assert_eq!(bytes, b"P5\n3 1\n255\n\x00\x7f\xff");
    }

    #[test]
    fn constant_and_sentinel_cells_are_black() {
        let g = parse_ascii("S.#D").unwrap();
        let f = ScalarField::filled(4, 1, 3.0);
        let bytes = render_scalar_pgm(&f, &g, 1).unwrap();
        assert_eq!(&bytes[bytes.len() - 4..], &[0, 0, 0, 0]);
        let f = ScalarField::new(4, 1, vec![UNREACHED, 2.0, 9.0, 4.0]);
        let levels = gray_levels(&f, &g).unwrap();
        assert_eq!(levels, vec![0, 0, 0, 255]);
    }

    #[test]
    fn scaling_repeats_cells() {
        let g = parse_ascii("SD").unwrap();
        let f = ScalarField::new(2, 1, vec![0.0, 1.0]);
        let bytes = render_scalar_pgm(&f, &g, 2).unwrap();
        assert_eq!(bytes, b"P5\n4 2\n255\n\x00\x00\xff\xff\x00\x00\xff\xff");
        assert_eq!(render_scalar_pgm(&f, &g, 0), Err(RenderError::ZeroScale));
    }

    #[test]
    fn overlay_marker_precedence() {
        let g = parse_ascii("S.D").unwrap();
        let p = PathTrace::new(vec![Coord::new(0, 0), Coord::new(1, 0), Coord::new(2, 0)]);
        let bytes = render_overlay_ppm(&g, Some(&p), None, 1).unwrap();
        assert_eq!(bytes, b"P6\n3 1\n255\n\x00\xff\x00\xff\x00\x00\x00\x00\xff");
    }

    #[test]
    fn overlay_plain_maze() {
        let g = parse_ascii("S#D").unwrap();
        let bytes = render_overlay_ppm(&g, None, None, 1).unwrap();
        assert_eq!(&bytes[11..14], &SOURCE);
        assert_eq!(&bytes[14..17], &WALL);
        let g = parse_ascii("S.\n#D").unwrap();
        let bytes = render_overlay_ppm(&g, None, None, 1).unwrap();
        assert_eq!(&bytes[14..17], &OPEN);
        assert_eq!(&bytes[17..20], &WALL);
    }

    #[test]
    fn overlay_markers_beat_field() {
        let g = parse_ascii("SD").unwrap();
        let f = ScalarField::new(2, 1, vec![0.0, 1.0]);
        let bytes = render_overlay_ppm(&g, None, Some(&f), 1).unwrap();
        assert_eq!(&bytes[11..], &[0, 255, 0, 0, 0, 255]);
    }

    #[test]
    fn overlay_rejects_bad_input() {
        let g = parse_ascii("SD").unwrap();
        let off = PathTrace::new(vec![Coord::new(5, 5)]);
        assert_eq!(
            render_overlay_ppm(&g, Some(&off), None, 1),
            Err(RenderError::PathOffGrid { col: 5, row: 5 })
        );
        let f = ScalarField::filled(3, 1, 0.0);
        assert!(matches!(
            render_overlay_ppm(&g, None, Some(&f), 1),
            Err(RenderError::DimensionMismatch { .. })
        ));
    }
}
