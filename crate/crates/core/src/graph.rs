//! Weighted oriented graphs and their underlying simple graphs.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Unvalidated graph description, as read from Graph JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGraph {
    pub vertices: Vec<RawVertex>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawVertex {
    pub name: String,
    pub weight: i64,
}

/// A weighted oriented graph `D = (V, E, w)`.
///
/// Vertices are addressed by their position in the input order. Every
/// vertex without in-neighbours (a source, or an isolated vertex) carries
/// weight 1; heavier weights on such vertices are lowered during
/// construction and recorded in [`normalized_vertices`](Self::normalized_vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrientedGraph {
    names: Vec<String>,
    weights: Vec<u32>,
    edges: Vec<(usize, usize)>,
    out_sets: Vec<VertexSet>,
    in_sets: Vec<VertexSet>,
    normalized: Vec<usize>,
}

/// Out-, in- and full neighbourhood of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhoods {
    pub out: VertexSet,
    pub inward: VertexSet,
    pub all: VertexSet,
}

/// Validates a raw description and builds the normalized graph.
pub fn build_graph(raw: &RawGraph) -> Result<WeightedOrientedGraph> {
    if raw.vertices.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(raw.vertices.len()));
    }
    let mut index = HashMap::new();
    let mut names = Vec::with_capacity(raw.vertices.len());
    let mut weights = Vec::with_capacity(raw.vertices.len());
    for (i, v) in raw.vertices.iter().enumerate() {
        if index.insert(v.name.as_str(), i).is_some() {
            return Err(Error::DuplicateVertex(v.name.clone()));
        }
        if v.weight < 1 {
            return Err(Error::NonpositiveWeight {
                name: v.name.clone(),
                weight: v.weight,
            });
        }
        let weight = u32::try_from(v.weight).map_err(|_| Error::WeightTooLarge {
            name: v.name.clone(),
            weight: v.weight,
        })?;
        names.push(v.name.clone());
        weights.push(weight);
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    };
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (tail, head) in &raw.edges {
        let (t, h) = (lookup(tail)?, lookup(head)?);
        if t == h {
            return Err(Error::LoopEdge(tail.clone()));
        }
        edges.push((t, h));
    }
    WeightedOrientedGraph::assemble(names, weights, edges)
}

impl WeightedOrientedGraph {
    /// Builds a graph on vertices named `x1, .., xn` from 0-based edge pairs.
    pub fn from_indexed(weights: &[u32], edges: &[(usize, usize)]) -> Result<Self> {
        let raw = RawGraph {
            vertices: weights
                .iter()
                .enumerate()
                .map(|(i, &w)| RawVertex {
                    name: format!("x{}", i + 1),
                    weight: i64::from(w),
                })
                .collect(),
            edges: edges
                .iter()
                .map(|&(t, h)| {
                    let name = |v: usize| {
                        if v < weights.len() {
                            format!("x{}", v + 1)
                        } else {
                            format!("#{v}")
                        }
                    };
                    (name(t), name(h))
                })
                .collect(),
        };
        build_graph(&raw)
    }

    fn assemble(
        names: Vec<String>,
        mut weights: Vec<u32>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        let set: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        for &(t, h) in &set {
            if set.contains(&(h, t)) {
                let (a, b) = (t.min(h), t.max(h));
                return Err(Error::AntiparallelPair(names[a].clone(), names[b].clone()));
            }
        }
        let mut out_sets = vec![VertexSet::empty(); n];
        let mut in_sets = vec![VertexSet::empty(); n];
        for &(t, h) in &set {
            out_sets[t].insert(h);
            in_sets[h].insert(t);
        }
        let mut normalized = Vec::new();
        for v in 0..n {
            if in_sets[v].is_empty() && weights[v] != 1 {
                weights[v] = 1;
                normalized.push(v);
            }
        }
        Ok(WeightedOrientedGraph {
            names,
            weights,
            edges: set.into_iter().collect(),
            out_sets,
            in_sets,
            normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Directed edges `(tail, head)` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.out_sets[tail].contains(head)
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_sets[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_sets[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.out_sets[v].union(self.in_sets[v])
    }

    /// `V⁺`, the vertices of weight different from 1.
    pub fn heavy_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.weights[v] != 1).collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_sets[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_sets[v].is_empty()
    }

    /// Vertices whose input weight was lowered to 1 because they have no
    /// in-neighbours.
    pub fn normalized_vertices(&self) -> &[usize] {
        &self.normalized
    }

    /// Neighbourhoods of the vertex called `name`.
    pub fn neighborhoods(&self, name: &str) -> Result<Neighborhoods> {
        let v = self.index_of(name)?;
        Ok(Neighborhoods {
            out: self.out_sets[v],
            inward: self.in_sets[v],
            all: self.neighbors(v),
        })
    }

    pub fn underlying_graph(&self) -> SimpleGraph {
        let adj = (0..self.n()).map(|v| self.neighbors(v)).collect();
        SimpleGraph {
            names: self.names.clone(),
            adj,
        }
    }

    /// The subgraph induced on `keep`, re-indexed in the original order and
    /// re-normalized.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Self {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(t, h)| keep.contains(t) && keep.contains(h))
            .map(|&(t, h)| (position[t], position[h]))
            .collect();
        Self::assemble(
            kept.iter().map(|&v| self.names[v].clone()).collect(),
            kept.iter().map(|&v| self.weights[v]).collect(),
            edges,
        )
        .expect("subgraph of a valid graph is valid")
    }

    /// The c-minor `D \ N_G[S]` for a stable set `S`.
    pub fn c_minor(&self, stable: VertexSet) -> Result<Self> {
        for &(t, h) in &self.edges {
            if stable.contains(t) && stable.contains(h) {
                return Err(Error::NotStableSet(
                    self.names[t].clone(),
                    self.names[h].clone(),
                ));
            }
        }
        let closed = stable
            .iter()
            .fold(stable, |acc, v| acc.union(self.neighbors(v)));
        Ok(self.induced_subgraph(self.vertices().difference(closed)))
    }

    /// Connected components of the underlying graph, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Self> {
        self.underlying_graph()
            .component_sets()
            .into_iter()
            .map(|set| self.induced_subgraph(set))
            .collect()
    }

    /// Disjoint union; vertex names must not collide.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let mut raw = self.to_raw();
        let other_raw = other.to_raw();
        raw.vertices.extend(other_raw.vertices);
        raw.edges.extend(other_raw.edges);
        build_graph(&raw)
    }

    /// Same graph with every vertex name prefixed.
    pub fn with_name_prefix(&self, prefix: &str) -> Self {
        let mut g = self.clone();
        for name in &mut g.names {
            *name = format!("{prefix}{name}");
        }
        g
    }

    pub(crate) fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n());
        self.names = names;
        self
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: self
                .names
                .iter()
                .zip(&self.weights)
                .map(|(name, &w)| RawVertex {
                    name: name.clone(),
                    weight: i64::from(w),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(t, h)| (self.names[t].clone(), self.names[h].clone()))
                .collect(),
        }
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn parse_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.index_of(n.as_ref())).collect()
    }
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// Builds a graph from 0-based undirected edges on vertices `x1, .., xn`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut adj = vec![VertexSet::empty(); n];
        for &(a, b) in edges {
            assert!(a != b && a < n && b < n, "invalid simple edge ({a}, {b})");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        SimpleGraph {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges `{a, b}` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|a| {
                self.adj[a]
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty();
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VertexSet::empty(), |acc, v| acc.union(self.adj[v]))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Deletes the closed neighbourhood `N[S]`.
    pub fn delete_closed_neighborhood(&self, set: VertexSet) -> Self {
        let closed = set.iter().fold(set, |acc, v| acc.union(self.adj[v]));
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !closed.contains(v)).collect();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .difference(closed)
                    .iter()
                    .map(|u| position[u])
                    .collect()
            })
            .collect();
        SimpleGraph {
            names: kept.iter().map(|&v| self.names[v].clone()).collect(),
            adj,
        }
    }

    /// A proper 2-colouring; in each component the smallest vertex lands in
    /// the first part.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for start in 0..self.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for u in self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let first = (0..self.n()).filter(|&v| color[v] == Some(false)).collect();
        let second = (0..self.n()).filter(|&v| color[v] == Some(true)).collect();
        Some((first, second))
    }
}
