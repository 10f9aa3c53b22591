//! Built-in graphs used by the CLI and the test suites.

use crate::graph::WeightedOrientedGraph;

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 7] = [
    "example1",
    "example2",
    "eleven-vertex",
    "d1",
    "d2",
    "d3",
    "d4",
];

pub fn by_name(name: &str) -> Option<WeightedOrientedGraph> {
    Some(match name {
        "example1" => example1(),
        "example2" => example2(),
        "eleven-vertex" => eleven_vertex(),
        "d1" => d1(),
        "d2" => d2(),
        "d3" => d3(),
        "d4" => d4(),
        _ => return None,
    })
}

fn graph(weights: &[u32], edges: &[(usize, usize)]) -> WeightedOrientedGraph {
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(t, h)| (t - 1, h - 1)).collect();
    WeightedOrientedGraph::from_indexed(weights, &edges).expect("fixture is valid")
}

/// Oriented triangle x3 → x5 → x4 → x3 with the tail x3 → x2 → x1;
/// weights (3, 4, 5, 2, 2).
///
/// `I(D) = (x1^3*x2, x2^4*x3, x3^5*x4, x3*x5^2, x4^2*x5)`.
pub fn example1() -> WeightedOrientedGraph {
    graph(&[3, 4, 5, 2, 2], &[(2, 1), (3, 2), (4, 3), (3, 5), (5, 4)])
}

/// Oriented path x1 → x2 → x3 → x4 with weights (1, 2, 5, 7).
pub fn example2() -> WeightedOrientedGraph {
    graph(&[1, 2, 5, 7], &[(1, 2), (2, 3), (3, 4)])
}

/// Eleven vertices, 25 edges; the only heavy vertices x1, x2, x3 (weight 2)
/// are sinks.
pub fn eleven_vertex() -> WeightedOrientedGraph {
    let mut weights = [1; 11];
    weights[..3].copy_from_slice(&[2, 2, 2]);
    graph(
        &weights,
        &[
            (4, 1),
            (8, 1),
            (5, 1),
            (9, 1),
            (10, 2),
            (5, 2),
            (11, 2),
            (8, 2),
            (6, 2),
            (7, 3),
            (10, 3),
            (6, 3),
            (9, 3),
            (4, 8),
            (7, 4),
            (4, 11),
            (10, 5),
            (11, 5),
            (9, 5),
            (9, 6),
            (6, 8),
            (6, 11),
            (10, 7),
            (11, 7),
            (11, 9),
        ],
    )
}

// The four exceptional orientations of C5. Heavy vertices get weight 2;
// edges the templates leave unoriented are given one fixed direction here.

/// x2 → x1, x5 → x1, x4 → x5, x4 → x3, x3 → x2; heavy: x3, x5.
pub fn d1() -> WeightedOrientedGraph {
    graph(&[1, 1, 2, 1, 2], &[(2, 1), (5, 1), (4, 5), (4, 3), (3, 2)])
}

/// x1 → x5, x2 → x1, x3 → x2, with x5 - x4 - x3 unoriented; heavy: x1, x2.
pub fn d2() -> WeightedOrientedGraph {
    graph(&[2, 2, 1, 1, 1], &[(1, 5), (2, 1), (3, 2), (5, 4), (4, 3)])
}

/// x1 → x5 → x4 → x3, with x3 - x2 - x1 unoriented; heavy: x3, x4, x5.
pub fn d3() -> WeightedOrientedGraph {
    graph(&[1, 1, 2, 2, 2], &[(1, 5), (5, 4), (4, 3), (1, 2), (2, 3)])
}

/// x1 → x2 → x3, x4 → x3, x4 → x5, with x5 - x1 unoriented; heavy: x2, x3, x5.
pub fn d4() -> WeightedOrientedGraph {
    graph(&[1, 2, 2, 1, 2], &[(1, 2), (2, 3), (4, 3), (4, 5), (5, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves_without_normalization() {
        for name in NAMES {
            let g = by_name(name).unwrap();
            assert!(g.normalized_vertices().is_empty(), "{name}");
        }
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn eleven_vertex_heavy_vertices_are_sinks() {
        let g = eleven_vertex();
        assert_eq!(g.edges().len(), 25);
        for v in g.heavy_vertices() {
            assert!(g.is_sink(v));
        }
    }
}
