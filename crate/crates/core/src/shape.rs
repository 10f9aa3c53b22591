//! Recognition of the graph families that have closed-form criteria.

use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::vertex_set::VertexSet;

/// Base/pendant pairing of a whisker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiskerPairs {
    /// `(base, pendant)` pairs, ordered by base vertex.
    pub pairs: Vec<(usize, usize)>,
}

impl WhiskerPairs {
    pub fn base(&self) -> VertexSet {
        self.pairs.iter().map(|&(b, _)| b).collect()
    }
}

/// Every shape the underlying graph matches, each with its witness.
/// Tags are not exclusive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShapeTags {
    /// Vertex order along the path, starting at the smaller endpoint.
    pub path: Option<Vec<usize>>,
    /// Vertex order around the cycle, starting at vertex 0 towards its
    /// smaller neighbour.
    pub cycle: Option<Vec<usize>>,
    pub complete: bool,
    pub bipartite: Option<(VertexSet, VertexSet)>,
    pub whisker: Option<WhiskerPairs>,
}

impl ShapeTags {
    /// True when no specific shape applies.
    pub fn is_general(&self) -> bool {
        self.path.is_none()
            && self.cycle.is_none()
            && !self.complete
            && self.bipartite.is_none()
            && self.whisker.is_none()
    }

    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.path.is_some() {
            out.push("path");
        }
        if self.cycle.is_some() {
            out.push("cycle");
        }
        if self.complete {
            out.push("complete");
        }
        if self.bipartite.is_some() {
            out.push("bipartite");
        }
        if self.whisker.is_some() {
            out.push("whisker");
        }
        if out.is_empty() {
            out.push("general");
        }
        out
    }
}

pub fn classify_shape(g: &WeightedOrientedGraph) -> ShapeTags {
    classify_simple(&g.underlying_graph())
}

pub fn classify_simple(g: &SimpleGraph) -> ShapeTags {
    ShapeTags {
        path: path_order(g),
        cycle: cycle_order(g),
        complete: is_complete(g),
        bipartite: g.bipartition(),
        whisker: whisker_pairs(g),
    }
}

/// Path with at least one edge.
pub fn path_order(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    if (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    Some(walk(g, start, n))
}

/// Cycle on at least three vertices.
pub fn cycle_order(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    Some(walk(g, 0, n))
}

fn walk(g: &SimpleGraph, start: usize, n: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&u| u != prev && !order.contains(&u))
            .expect("walk stays on the path or cycle");
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

/// Complete graph on at least two vertices.
pub fn is_complete(g: &SimpleGraph) -> bool {
    let n = g.n();
    n >= 2 && (0..n).all(|v| g.degree(v) == n - 1)
}

/// Pairs every vertex with a degree-one partner so that the partners are
/// exactly the pendants. An isolated edge pairs its smaller endpoint as the
/// base.
pub fn whisker_pairs(g: &SimpleGraph) -> Option<WhiskerPairs> {
    let n = g.n();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let mut partner = vec![usize::MAX; n];
    let mut pairs = Vec::new();
    for y in 0..n {
        if g.degree(y) != 1 {
            continue;
        }
        let x = g.neighbors(y).first().unwrap();
        // an isolated edge {x, y} is taken once, with x < y
        if g.degree(x) == 1 && y < x {
            continue;
        }
        if partner[x] != usize::MAX {
            return None;
        }
        partner[x] = y;
        partner[y] = x;
        pairs.push((x, y));
    }
    if pairs.len() * 2 != n {
        return None;
    }
    pairs.sort_unstable();
    Some(WhiskerPairs { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example2_is_path_and_bipartite() {
        let tags = classify_shape(&fixtures::example2());
        assert_eq!(tags.path, Some(vec![0, 1, 2, 3]));
        let (a, b) = tags.bipartite.unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
        assert!(tags.cycle.is_none() && !tags.complete);
        // P4 is also the whisker of the edge x2 - x3.
        assert_eq!(tags.whisker.unwrap().pairs, vec![(1, 0), (2, 3)]);
    }

    #[test]
    fn example1_is_general() {
        // A triangle with a two-edge tail; not a cycle, not bipartite.
        let tags = classify_shape(&fixtures::example1());
        assert!(tags.is_general());
        assert_eq!(tags.labels(), vec!["general"]);
    }

    #[test]
    fn five_cycle_is_only_a_cycle() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let tags = classify_simple(&g);
        assert_eq!(tags.cycle, Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(tags.labels(), vec!["cycle"]);
    }

    #[test]
    fn triangle_is_complete_and_cycle() {
        for edges in [[(0, 1), (1, 2), (2, 0)], [(0, 1), (0, 2), (1, 2)]] {
            let g = WeightedOrientedGraph::from_indexed(&[1, 2, 2], &edges).unwrap();
            let tags = classify_shape(&g);
            assert!(tags.complete);
            assert!(tags.cycle.is_some());
            assert!(tags.bipartite.is_none());
        }
    }

    #[test]
    fn whisker_of_triangle() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        let w = whisker_pairs(&g).unwrap();
        assert_eq!(w.pairs, vec![(0, 3), (1, 4), (2, 5)]);
        // a star is not a whisker
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(whisker_pairs(&star).is_none());
        // an isolated vertex prevents a perfect pairing
        let g = SimpleGraph::from_edges(3, &[(0, 1)]);
        assert!(whisker_pairs(&g).is_none());
        let k2 = SimpleGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(whisker_pairs(&k2).unwrap().pairs, vec![(0, 1)]);
    }
}
