//! Exhaustive graph families for sweeping the criteria.
//!
//! Weight assignments skip those that would put a weight other than 1 on
//! a vertex without in-neighbours, since normalization would map them onto
//! an assignment already produced.

use crate::graph::{SimpleGraph, WeightedOrientedGraph};

/// All labelled simple graphs on `n` vertices as edge lists `(a, b)` with
/// `a < b`.
pub fn simple_graphs(n: usize, connected_only: bool) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 32, "too many vertex pairs to enumerate");
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|edges| !connected_only || SimpleGraph::from_edges(n, edges).is_connected())
        .collect()
}

/// All `2^m` orientations of an edge list.
pub fn orientations(edges: &[(usize, usize)]) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    assert!(edges.len() < 32, "too many edges to orient");
    (0u32..1 << edges.len()).map(move |mask| {
        edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
            .collect()
    })
}

/// Every weighting of the oriented graph `(n, edges)` with weights drawn
/// from `choices`, sources fixed at 1.
pub fn weightings(
    n: usize,
    edges: &[(usize, usize)],
    choices: &[u32],
) -> Vec<WeightedOrientedGraph> {
    let mut has_in = vec![false; n];
    for &(_, h) in edges {
        has_in[h] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&v| has_in[v]).collect();
    let mut out = Vec::new();
    let mut weights = vec![1u32; n];
    let mut counter = vec![0usize; free.len()];
    loop {
        for (i, &v) in free.iter().enumerate() {
            weights[v] = choices[counter[i]];
        }
        out.push(
            WeightedOrientedGraph::from_indexed(&weights, edges).expect("family graphs are valid"),
        );
        // odometer step
        let mut i = 0;
        loop {
            if i == free.len() {
                return out;
            }
            counter[i] += 1;
            if counter[i] < choices.len() {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// Every orientation and weighting of the simple graph `(n, edges)`.
pub fn weighted_orientations(
    n: usize,
    edges: &[(usize, usize)],
    choices: &[u32],
) -> Vec<WeightedOrientedGraph> {
    orientations(edges)
        .flat_map(|o| weightings(n, &o, choices))
        .collect()
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn path_edges(k: usize) -> Vec<(usize, usize)> {
    (1..k).map(|i| (i - 1, i)).collect()
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// The whisker of the graph `(n, base)`: vertex `n + i` is the pendant
/// attached to `i`.
pub fn whisker_edges(n: usize, base: &[(usize, usize)]) -> Vec<(usize, usize)> {
    base.iter()
        .copied()
        .chain((0..n).map(|i| (i, n + i)))
        .collect()
}

/// All bipartite edge sets between parts `0..a` and `a..a + b`.
pub fn bipartite_graphs(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .collect();
    assert!(pairs.len() < 32, "too many vertex pairs to enumerate");
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(simple_graphs(3, false).len(), 8);
        assert_eq!(simple_graphs(3, true).len(), 4);
        assert_eq!(simple_graphs(4, true).len(), 38);
        assert_eq!(orientations(&cycle_edges(4)).count(), 16);
        assert_eq!(bipartite_graphs(2, 3).len(), 64);
    }

    #[test]
    fn sources_keep_weight_one() {
        // x1 → x2: only x2 is free
        assert_eq!(weightings(2, &[(0, 1)], &[1, 2, 3]).len(), 3);
        let all = weighted_orientations(3, &cycle_edges(3), &[1, 2]);
        assert!(all.iter().all(|g| g.normalized_vertices().is_empty()));
        // two cyclic orientations with 8 weightings each, six transitive ones with 4
        assert_eq!(all.len(), 2 * 8 + 6 * 4);
    }

    #[test]
    fn shapes() {
        assert_eq!(whisker_edges(2, &[(0, 1)]), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(path_edges(3), vec![(0, 1), (1, 2)]);
        assert_eq!(complete_edges(3).len(), 3);
    }
}
