//! Vertex covers: the L1/L2/L3 partition, minimal and strong covers, and
//! unicycle partitions of the full vertex set.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::limits::Limits;
use crate::vertex_set::{sort_canonical, VertexSet};

/// A vertex cover with its L-partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverAnalysis {
    pub cover: VertexSet,
    /// Vertices with an out-neighbour outside the cover.
    pub l1: VertexSet,
    /// Vertices not in `l1` with an in-neighbour outside the cover.
    pub l2: VertexSet,
    /// Vertices whose whole neighbourhood lies in the cover.
    pub l3: VertexSet,
    pub is_minimal: bool,
    pub is_strong: bool,
    /// For each `x` in `l3`, the chosen heavy in-neighbour `y` in `l2 ∪ l3`.
    /// `None` when the cover is not strong.
    pub strong_witness: Option<Vec<(usize, usize)>>,
}

fn check_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> Result<()> {
    match g
        .edges()
        .iter()
        .find(|&&(t, h)| !cover.contains(t) && !cover.contains(h))
    {
        Some(&(t, h)) => Err(Error::NotACover(
            g.name(t).to_string(),
            g.name(h).to_string(),
        )),
        None => Ok(()),
    }
}

pub fn is_vertex_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> bool {
    check_cover(g, cover).is_ok()
}

/// Raw L-sets of a cover, without validation.
fn l_sets(g: &WeightedOrientedGraph, cover: VertexSet) -> (VertexSet, VertexSet, VertexSet) {
    let outside = cover.complement(g.n());
    let mut l1 = VertexSet::empty();
    let mut l2 = VertexSet::empty();
    for x in cover {
        if g.out_neighbors(x).intersects(outside) {
            l1.insert(x);
        } else if g.in_neighbors(x).intersects(outside) {
            l2.insert(x);
        }
    }
    (l1, l2, cover.difference(l1.union(l2)))
}

/// Smallest heavy in-neighbour in `L2 ∪ L3` for every `L3` vertex, or
/// `None` if some `L3` vertex has none.
fn strong_witness(
    g: &WeightedOrientedGraph,
    heavy: VertexSet,
    l2: VertexSet,
    l3: VertexSet,
) -> Option<Vec<(usize, usize)>> {
    let eligible = heavy.intersection(l2.union(l3));
    l3.iter()
        .map(|x| {
            g.in_neighbors(x)
                .intersection(eligible)
                .first()
                .map(|y| (x, y))
        })
        .collect()
}

pub fn l_partition(g: &WeightedOrientedGraph, cover: VertexSet) -> Result<CoverAnalysis> {
    check_cover(g, cover)?;
    let (l1, l2, l3) = l_sets(g, cover);
    debug_assert_eq!(
        l3,
        cover
            .iter()
            .filter(|&x| g.neighbors(x).is_subset(cover))
            .collect::<VertexSet>()
    );
    let witness = strong_witness(g, g.heavy_vertices(), l2, l3);
    Ok(CoverAnalysis {
        cover,
        l1,
        l2,
        l3,
        is_minimal: l3.is_empty(),
        is_strong: witness.is_some(),
        strong_witness: witness,
    })
}

pub fn is_minimal_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> Result<bool> {
    Ok(l_partition(g, cover)?.is_minimal)
}

/// The strong-cover witness, or `None` if the cover is not strong.
pub fn is_strong_cover(
    g: &WeightedOrientedGraph,
    cover: VertexSet,
) -> Result<Option<Vec<(usize, usize)>>> {
    Ok(l_partition(g, cover)?.strong_witness)
}

/// Strong-cover test on a set already known to be a cover.
fn strong_fast(g: &WeightedOrientedGraph, heavy: VertexSet, cover: VertexSet) -> bool {
    let (_, l2, l3) = l_sets(g, cover);
    let eligible = heavy.intersection(l2.union(l3));
    l3.iter().all(|x| g.in_neighbors(x).intersects(eligible))
}

/// All inclusion-minimal vertex covers, canonically ordered.
pub fn enumerate_minimal_covers(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<VertexSet>> {
    minimal_covers_simple(&g.underlying_graph(), limits)
}

/// All inclusion-minimal vertex covers of a simple graph: complements of
/// the maximal independent sets, listed by Bron–Kerbosch with pivoting on
/// the complement graph.
pub fn minimal_covers_simple(g: &SimpleGraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limits.max_minimal_cover_vertices {
        return Err(Error::SizeCap {
            n,
            cap: limits.max_minimal_cover_vertices,
        });
    }
    let all = VertexSet::full(n);
    // non-neighbours, excluding the vertex itself
    let anti: Vec<VertexSet> = (0..n)
        .map(|v| all.difference(g.neighbors(v)).without(v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(
        &anti,
        VertexSet::empty(),
        all,
        VertexSet::empty(),
        &mut |mis| {
            out.push(mis.complement(n));
        },
    );
    sort_canonical(&mut out);
    Ok(out)
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    emit: &mut impl FnMut(VertexSet),
) {
    if p.is_empty() {
        if x.is_empty() {
            emit(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| adj[u].intersection(p).len())
        .unwrap();
    for v in p.difference(adj[pivot]) {
        bron_kerbosch(
            adj,
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            emit,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Every strong vertex cover, minimal or not, canonically ordered.
///
/// Walks the vertices in order, deciding membership; excluding a vertex
/// forces all of its neighbours in, so only covers are ever reached.
pub fn enumerate_strong_covers(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<CoverAnalysis>> {
    let covers = strong_cover_sets(g, limits)?;
    Ok(covers
        .into_iter()
        .map(|c| l_partition(g, c).expect("enumerated set is a cover"))
        .collect())
}

/// Strong covers as bare sets, canonically ordered.
pub fn strong_cover_sets(g: &WeightedOrientedGraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limits.max_strong_cover_vertices {
        return Err(Error::SizeCap {
            n,
            cap: limits.max_strong_cover_vertices,
        });
    }
    let heavy = g.heavy_vertices();
    let mut out = Vec::new();
    let mut visit = |cover: VertexSet| {
        if strong_fast(g, heavy, cover) {
            out.push(cover);
        }
    };
    for_each_cover(g, 0, VertexSet::empty(), VertexSet::empty(), &mut visit);
    sort_canonical(&mut out);
    Ok(out)
}

fn for_each_cover(
    g: &WeightedOrientedGraph,
    v: usize,
    chosen: VertexSet,
    forced: VertexSet,
    visit: &mut impl FnMut(VertexSet),
) {
    if v == g.n() {
        visit(chosen);
        return;
    }
    let nb = g.neighbors(v);
    // v may stay out only if every earlier neighbour is in
    let earlier = VertexSet::full(v);
    if !forced.contains(v) && nb.intersection(earlier).is_subset(chosen) {
        for_each_cover(g, v + 1, chosen, forced.union(nb), visit);
    }
    for_each_cover(g, v + 1, chosen.with(v), forced, visit);
}

/// True iff every vertex has an in-neighbour of weight different from 1,
/// i.e. `V` itself is a strong cover.
pub fn full_vertex_set_strong(g: &WeightedOrientedGraph) -> bool {
    let heavy = g.heavy_vertices();
    (0..g.n()).all(|x| g.in_neighbors(x).intersects(heavy))
}

/// One block of a unicycle partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicycleBlock {
    pub vertices: VertexSet,
    /// The oriented cycle, listed along its edges.
    pub cycle: Vec<usize>,
    /// Edges of the out-trees hanging off the cycle, as `(parent, child)`.
    pub tree_edges: Vec<(usize, usize)>,
}

impl UnicycleBlock {
    /// All edges of the block: the cycle followed by the tree edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.cycle.len();
        let mut edges: Vec<(usize, usize)> = (0..k)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % k]))
            .collect();
        edges.extend_from_slice(&self.tree_edges);
        edges
    }

    /// The block as a stand-alone weighted oriented graph.
    pub fn subgraph(&self, g: &WeightedOrientedGraph) -> WeightedOrientedGraph {
        let verts = self.vertices.to_vec();
        let pos = |v: usize| verts.iter().position(|&u| u == v).unwrap();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(t, h)| (pos(t), pos(h)))
            .collect();
        let weights: Vec<u32> = verts.iter().map(|&v| g.weight(v)).collect();
        let sub =
            WeightedOrientedGraph::from_indexed(&weights, &edges).expect("block is a valid graph");
        sub.with_names(verts.iter().map(|&v| g.name(v).to_string()).collect())
    }
}

/// A partition of `V` into unicycle oriented subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclePartition {
    pub blocks: Vec<UnicycleBlock>,
}

/// Partitions `V` into unicycle oriented subgraphs, or returns `None` when
/// `V` is not a strong cover (no such partition exists then).
///
/// Starting from the smallest remaining vertex, walk backwards along heavy
/// in-neighbours inside the remaining vertices until the walk repeats;
/// the repeated stretch is the cycle and the rest of the walk a path out of
/// it. The block then absorbs every remaining vertex reachable by an edge
/// out of a heavy block vertex, and the procedure recurses on what is left.
pub fn unicycle_partition(g: &WeightedOrientedGraph) -> Option<UnicyclePartition> {
    if !full_vertex_set_strong(g) {
        return None;
    }
    let heavy = g.heavy_vertices();
    let mut remaining = g.vertices();
    let mut blocks = Vec::new();
    while let Some(start) = remaining.first() {
        let mut walk = vec![start];
        let close_at = loop {
            let cur = *walk.last().unwrap();
            let pred = g
                .in_neighbors(cur)
                .intersection(heavy)
                .intersection(remaining)
                .first()
                .expect("remaining vertex set stays strong");
            if let Some(pos) = walk.iter().position(|&u| u == pred) {
                break pos;
            }
            walk.push(pred);
        };
        // walk = y1 <- y2 <- ... <- yk, and y_{close_at} -> yk closes the cycle
        let mut cycle: Vec<usize> = walk[close_at..].to_vec();
        cycle.reverse();
        let lowest = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(lowest);
        let mut vertices: VertexSet = walk.iter().copied().collect();
        let mut tree_edges: Vec<(usize, usize)> =
            (0..close_at).map(|i| (walk[i + 1], walk[i])).collect();
        loop {
            let sources = vertices.intersection(heavy);
            let grow = remaining.difference(vertices).iter().find_map(|x| {
                g.in_neighbors(x)
                    .intersection(sources)
                    .first()
                    .map(|y| (y, x))
            });
            match grow {
                Some((y, x)) => {
                    tree_edges.push((y, x));
                    vertices.insert(x);
                }
                None => break,
            }
        }
        tree_edges.sort_unstable();
        remaining = remaining.difference(vertices);
        blocks.push(UnicycleBlock {
            vertices,
            cycle,
            tree_edges,
        });
    }
    Some(UnicyclePartition { blocks })
}

/// Checks the unicycle conditions on the whole graph: connected with
/// exactly one cycle, that cycle oriented, every other vertex reachable
/// from it along edges, and weight ≠ 1 on every vertex of degree ≥ 2.
pub fn is_unicycle_oriented(g: &WeightedOrientedGraph) -> bool {
    let u = g.underlying_graph();
    let n = g.n();
    if n < 3 || !u.is_connected() || u.edge_count() != n {
        return false;
    }
    // strip leaves to find the cycle
    let mut degree: Vec<usize> = (0..n).map(|v| u.degree(v)).collect();
    let mut on_cycle = g.vertices();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        on_cycle.remove(v);
        for w in u.neighbors(v).intersection(on_cycle) {
            degree[w] -= 1;
            if degree[w] == 1 {
                leaves.push(w);
            }
        }
    }
    let oriented = on_cycle.iter().all(|v| {
        g.out_neighbors(v).intersection(on_cycle).len() == 1
            && g.in_neighbors(v).intersection(on_cycle).len() == 1
    });
    if !oriented {
        return false;
    }
    let mut reached = on_cycle;
    let mut frontier = on_cycle;
    while !frontier.is_empty() {
        let next = frontier
            .iter()
            .fold(VertexSet::empty(), |acc, v| acc.union(g.out_neighbors(v)))
            .difference(reached);
        reached = reached.union(next);
        frontier = next;
    }
    reached == g.vertices() && (0..n).all(|v| u.degree(v) < 2 || g.weight(v) != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &WeightedOrientedGraph, names: &[&str]) -> VertexSet {
        g.parse_set(names).unwrap()
    }

    fn names(g: &WeightedOrientedGraph, sets: &[VertexSet]) -> Vec<Vec<String>> {
        sets.iter().map(|&s| g.set_names(s)).collect()
    }

    #[test]
    fn cover_membership() {
        let g = fixtures::example2();
        assert!(is_vertex_cover(&g, set(&g, &["x1", "x3"])));
        assert!(!is_vertex_cover(&g, set(&g, &["x1", "x4"])));
        assert!(is_vertex_cover(&g, g.vertices()));
        assert_eq!(
            l_partition(&g, set(&g, &["x1", "x4"])),
            Err(Error::NotACover("x2".into(), "x3".into()))
        );
    }

    #[test]
    fn l_partitions() {
        let g1 = fixtures::example1();
        let full = l_partition(&g1, g1.vertices()).unwrap();
        assert!(full.l1.is_empty() && full.l2.is_empty());
        assert_eq!(full.l3, g1.vertices());

        let g = fixtures::example2();
        let a = l_partition(&g, set(&g, &["x1", "x3"])).unwrap();
        assert_eq!(
            (a.l1, a.l2, a.l3),
            (
                set(&g, &["x1", "x3"]),
                VertexSet::empty(),
                VertexSet::empty()
            )
        );

        let b = l_partition(&g, set(&g, &["x2", "x3", "x4"])).unwrap();
        assert_eq!(b.l1, VertexSet::empty());
        assert_eq!(b.l2, set(&g, &["x2"]));
        assert_eq!(b.l3, set(&g, &["x3", "x4"]));
    }

    #[test]
    fn minimality() {
        let g = fixtures::example2();
        assert!(is_minimal_cover(&g, set(&g, &["x1", "x3"])).unwrap());
        assert!(!is_minimal_cover(&g, g.vertices()).unwrap());
        let g1 = fixtures::example1();
        // x4 and x5 have their whole neighbourhoods inside
        let c = set(&g1, &["x1", "x3", "x4", "x5"]);
        let a = l_partition(&g1, c).unwrap();
        assert_eq!(a.l3, set(&g1, &["x4", "x5"]));
        assert!(!a.is_minimal);
    }

    #[test]
    fn strong_covers() {
        let g1 = fixtures::example1();
        let w = is_strong_cover(&g1, g1.vertices()).unwrap().unwrap();
        // every vertex is witnessed by its unique in-neighbour
        assert_eq!(w, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]);

        let g = fixtures::example2();
        assert_eq!(is_strong_cover(&g, g.vertices()).unwrap(), None);
        assert!(is_strong_cover(&g, set(&g, &["x1", "x3"]))
            .unwrap()
            .is_some());
    }

    #[test]
    fn minimal_cover_enumeration() {
        let edge = WeightedOrientedGraph::from_indexed(&[1, 1], &[(0, 1)]).unwrap();
        assert_eq!(
            names(
                &edge,
                &enumerate_minimal_covers(&edge, &Limits::default()).unwrap()
            ),
            vec![vec!["x1"], vec!["x2"]]
        );

        let g = fixtures::example2();
        let covers = enumerate_minimal_covers(&g, &Limits::default()).unwrap();
        assert_eq!(
            names(&g, &covers),
            vec![vec!["x1", "x3"], vec!["x2", "x3"], vec!["x2", "x4"]]
        );

        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let covers = minimal_covers_simple(&c5, &Limits::default()).unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));

        let iso = WeightedOrientedGraph::from_indexed(&[1, 1], &[]).unwrap();
        assert_eq!(
            enumerate_minimal_covers(&iso, &Limits::default()).unwrap(),
            vec![VertexSet::empty()]
        );
    }

    #[test]
    fn strong_cover_enumeration() {
        let g1 = fixtures::example1();
        let covers: Vec<VertexSet> = enumerate_strong_covers(&g1, &Limits::default())
            .unwrap()
            .iter()
            .map(|a| a.cover)
            .collect();
        let expected: Vec<Vec<&str>> = vec![
            vec!["x1", "x3", "x4"],
            vec!["x1", "x3", "x5"],
            vec!["x2", "x3", "x4"],
            vec!["x2", "x3", "x5"],
            vec!["x2", "x4", "x5"],
            vec!["x1", "x2", "x3", "x5"],
            vec!["x1", "x2", "x4", "x5"],
            vec!["x2", "x3", "x4", "x5"],
            vec!["x1", "x2", "x3", "x4", "x5"],
        ];
        assert_eq!(names(&g1, &covers), expected);

        let g = fixtures::example2();
        let covers: Vec<VertexSet> = strong_cover_sets(&g, &Limits::default()).unwrap();
        let expected: Vec<Vec<&str>> = vec![
            vec!["x1", "x3"],
            vec!["x2", "x3"],
            vec!["x2", "x4"],
            vec!["x1", "x3", "x4"],
            vec!["x2", "x3", "x4"],
        ];
        assert_eq!(names(&g, &covers), expected);

        let edge = WeightedOrientedGraph::from_indexed(&[1, 3], &[(0, 1)]).unwrap();
        assert_eq!(
            strong_cover_sets(&edge, &Limits::default()).unwrap().len(),
            2
        );
    }

    #[test]
    fn size_caps() {
        let g = WeightedOrientedGraph::from_indexed(&[1; 21], &[]).unwrap();
        assert_eq!(
            strong_cover_sets(&g, &Limits::default()),
            Err(Error::SizeCap { n: 21, cap: 20 })
        );
        assert!(enumerate_minimal_covers(&g, &Limits::default()).is_ok());
        let tight = Limits {
            max_minimal_cover_vertices: 4,
            ..Limits::default()
        };
        assert!(enumerate_minimal_covers(&fixtures::example1(), &tight)
            .unwrap_err()
            .is_size_cap());
    }

    #[test]
    fn full_vertex_set() {
        assert!(full_vertex_set_strong(&fixtures::example1()));
        assert!(!full_vertex_set_strong(&fixtures::example2()));
    }

    #[test]
    fn unicycle_partitions() {
        let g1 = fixtures::example1();
        let p = unicycle_partition(&g1).unwrap();
        assert_eq!(p.blocks.len(), 1);
        let block = &p.blocks[0];
        assert_eq!(block.vertices, g1.vertices());
        // x3 -> x5 -> x4 -> x3
        assert_eq!(block.cycle, vec![2, 4, 3]);
        assert!(is_unicycle_oriented(&block.subgraph(&g1)));

        assert!(unicycle_partition(&fixtures::example2()).is_none());

        let tri =
            WeightedOrientedGraph::from_indexed(&[2, 2, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(unicycle_partition(&tri).unwrap().blocks.len(), 1);
    }

    #[test]
    fn unicycle_recognition() {
        let tri =
            WeightedOrientedGraph::from_indexed(&[2, 2, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_unicycle_oriented(&tri));
        let pendant =
            WeightedOrientedGraph::from_indexed(&[2, 2, 2, 1], &[(0, 1), (1, 2), (2, 0), (2, 3)])
                .unwrap();
        assert!(is_unicycle_oriented(&pendant));
        let inward =
            WeightedOrientedGraph::from_indexed(&[2, 2, 2, 1], &[(0, 1), (1, 2), (2, 0), (3, 2)])
                .unwrap();
        assert!(!is_unicycle_oriented(&inward));
        let light_cycle =
            WeightedOrientedGraph::from_indexed(&[2, 1, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_unicycle_oriented(&light_cycle));
        let unoriented =
            WeightedOrientedGraph::from_indexed(&[2, 2, 2], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_unicycle_oriented(&unoriented));
        assert!(!is_unicycle_oriented(&fixtures::example2()));
    }
}
