mod common;

use common::*;
use maze_mappers::maze::{
    generate, oracle_path, parse_ascii, serialize_ascii, shortest_path_cells, CellKind, Coord,
    GenConfig, MazeError, MazeGrid,
};
use proptest::prelude::*;

/// Frozen outputs: any change to the generator's random stream shows up here.
const SEED_1_7X7: &str = "\
#######
#S#...#
#.#.#.#
#...#.#
#####.#
#....D#
#######
";

const SEED_42_9X7_BRAID: &str = "\
#########
#S..#...#
###.###.#
#.#...#.#
#.###.#.#
#......D#
#########
";

#[test]
fn generator_output_is_frozen() {
    assert_eq!(
        serialize_ascii(&generate(&GenConfig::new(7, 7, 1)).unwrap()),
        SEED_1_7X7
    );
    let braided = GenConfig::new(9, 7, 42).braid(0.5);
    assert_eq!(
        serialize_ascii(&generate(&braided).unwrap()),
        SEED_42_9X7_BRAID
    );
}

#[test]
fn small_perfect_maze_is_a_tree() {
    let g = maze(5, 1, 0.0);
    assert_eq!(g.corridor_edge_count(), g.corridor_count() - 1);
}

#[test]
fn fully_braided_maze_has_no_dead_ends() {
    let g = maze(31, 7, 1.0);
    for c in g.corridors() {
        if c != g.source() && c != g.destination() {
            assert!(g.corridor_degree(c) >= 2, "dead end at {c}");
        }
    }
}

fn count_simple_paths(g: &MazeGrid, at: Coord, seen: &mut Vec<bool>) -> usize {
    if at == g.destination() {
        return 1;
    }
    seen[g.index(at)] = true;
    let mut total = 0;
    for n in g.corridor_neighbors(at).collect::<Vec<_>>() {
        if !seen[g.index(n)] {
            total += count_simple_paths(g, n, seen);
        }
    }
    seen[g.index(at)] = false;
    total
}

#[test]
fn perfect_maze_path_is_unique() {
    let g = maze(31, 3, 0.0);
    let mut seen = vec![false; g.len()];
    assert_eq!(count_simple_paths(&g, g.source(), &mut seen), 1);
    let path = oracle_path(&g).unwrap();
    assert_valid_path(&g, &path);
    assert_eq!(Some(path.len()), oracle_len(&g));
    let on_path = shortest_path_cells(&g).unwrap();
    assert_eq!(on_path.iter().filter(|&&b| b).count(), path.len());
}

#[test]
fn parse_errors() {
    assert_eq!(parse_ascii(""), Err(MazeError::Empty));
    assert_eq!(
        parse_ascii("S.\nD"),
        Err(MazeError::RaggedRows {
            line: 2,
            expected: 2,
            found: 1
        })
    );
    assert_eq!(parse_ascii("S.."), Err(MazeError::MissingMarker('D')));
    assert_eq!(parse_ascii("SSD"), Err(MazeError::DuplicateMarker('S')));
    assert!(matches!(
        parse_ascii("S?D"),
        Err(MazeError::BadChar { ch: '?', .. })
    ));
}

#[test]
fn generator_rejects_bad_dimensions() {
    for (w, h) in [(4, 5), (5, 4), (1, 5), (3, 3), (0, 0)] {
        assert!(matches!(
            generate(&GenConfig::new(w, h, 0)),
            Err(MazeError::BadDims { .. })
        ));
    }
    assert!(matches!(
        generate(&GenConfig::new(5, 5, 0).braid(1.5)),
        Err(MazeError::BadBraid(_))
    ));
}

#[test]
fn walled_off_destination_has_no_path() {
    let g = parse_ascii("S#D").unwrap();
    assert_eq!(oracle_path(&g), Err(MazeError::NoPath));
}

fn arb_grid() -> impl Strategy<Value = MazeGrid> {
    (1usize..12, 1usize..12)
        .prop_filter("need two cells", |(w, h)| w * h >= 2)
        .prop_flat_map(|(w, h)| {
            let n = w * h;
            (
                Just((w, h)),
                prop::collection::vec(any::<bool>(), n),
                0..n,
                0..n - 1,
            )
        })
        .prop_map(|((w, h), walls, s, d)| {
            let d = if d >= s { d + 1 } else { d };
            let mut cells: Vec<CellKind> = walls
                .into_iter()
                .map(|wall| {
                    if wall {
                        CellKind::Wall
                    } else {
                        CellKind::Corridor
                    }
                })
                .collect();
            cells[s] = CellKind::Corridor;
            cells[d] = CellKind::Corridor;
            let at = |i: usize| Coord::new(i % w, i / w);
            MazeGrid::new(w, h, cells, at(s), at(d)).unwrap()
        })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(g in arb_grid()) {
        let text = serialize_ascii(&g);
        let back = parse_ascii(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_ascii(&back), text);
    }

    #[test]
    fn perfect_mazes_are_connected_trees(half_w in 1usize..12, half_h in 2usize..12, seed in any::<u64>()) {
        let g = generate(&GenConfig::new(2 * half_w + 1, 2 * half_h + 1, seed)).unwrap();
        prop_assert_eq!(g.corridor_edge_count(), g.corridor_count() - 1);
        let reached = bfs(&g, g.source()).iter().filter(|d| d.is_some()).count();
        prop_assert_eq!(reached, g.corridor_count());
    }

    #[test]
    fn generation_is_deterministic(seed in any::<u64>(), braid in 0.0f64..=1.0) {
        let cfg = GenConfig::new(15, 11, seed).braid(braid);
        prop_assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
    }

    #[test]
    fn oracle_matches_independent_bfs(g in arb_grid()) {
        match oracle_path(&g) {
            Ok(p) => {
                assert_valid_path(&g, &p);
                prop_assert_eq!(Some(p.len()), oracle_len(&g));
            }
            Err(e) => {
                prop_assert_eq!(e, MazeError::NoPath);
                prop_assert_eq!(oracle_len(&g), None);
            }
        }
    }
}
