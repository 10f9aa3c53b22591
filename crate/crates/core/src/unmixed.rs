//! Unmixedness of `I(D)`: the three equivalent criteria, the
//! minimal-strong property, reductions to c-minors and components, and the
//! closed-form criteria for whiskers, bipartite graphs, cycles, paths and
//! complete graphs.

use crate::cover::{
    enumerate_strong_covers, full_vertex_set_strong, minimal_covers_simple, unicycle_partition,
    CoverAnalysis,
};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::limits::Limits;
use crate::shape::{cycle_order, is_complete, path_order, whisker_pairs};
use crate::vertex_set::VertexSet;

/// Evidence that an ideal is mixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedCertificate {
    /// Two strong covers of different sizes.
    StrongSizes {
        smaller: VertexSet,
        larger: VertexSet,
    },
    /// A strong cover that is not minimal.
    NonemptyL3 { cover: VertexSet, l3: VertexSet },
    /// Two minimal covers of the underlying graph of different sizes.
    UnderlyingMixed {
        smaller: VertexSet,
        larger: VertexSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnmixedReport {
    /// All strong covers have the same size.
    pub criterion_strong_cardinality: bool,
    /// `G` unmixed and `L3(C) = ∅` for every strong cover.
    pub criterion_graph_unmixed_and_l3: bool,
    /// `G` unmixed and every strong cover is a minimal cover.
    pub criterion_minimal_strong_and_g: bool,
    pub unmixed: bool,
    pub agreement: bool,
    pub graph_unmixed: bool,
    pub minimal_strong: bool,
    pub certificates: Vec<MixedCertificate>,
}

fn size_spread(sets: &[VertexSet]) -> Option<(VertexSet, VertexSet)> {
    let smaller = *sets.iter().min_by_key(|s| s.len())?;
    let larger = *sets.iter().max_by_key(|s| s.len())?;
    (smaller.len() != larger.len()).then_some((smaller, larger))
}

/// Unmixedness of a simple graph, with two minimal covers of different
/// sizes when it is mixed.
pub fn simple_graph_unmixed(
    g: &SimpleGraph,
    limits: &Limits,
) -> Result<Option<(VertexSet, VertexSet)>> {
    Ok(size_spread(&minimal_covers_simple(g, limits)?))
}

/// Evaluates the three criteria independently and checks that they agree.
///
/// The first compares strong cover sizes, the second reads `L3` off the
/// L-partition, and the third checks each strong cover against the list
/// of minimal covers of the underlying graph.
pub fn is_unmixed(g: &WeightedOrientedGraph, limits: &Limits) -> Result<UnmixedReport> {
    let strong = enumerate_strong_covers(g, limits)?;
    let sets: Vec<VertexSet> = strong.iter().map(|a| a.cover).collect();
    let minimal = minimal_covers_simple(&g.underlying_graph(), limits)?;

    let spread = size_spread(&sets);
    let underlying_spread = size_spread(&minimal);
    let graph_unmixed = underlying_spread.is_none();
    let with_l3 = strong.iter().find(|a| !a.l3.is_empty());
    let minimal_strong = sets
        .iter()
        .all(|c| minimal.binary_search_by(|m| m.canonical_cmp(c)).is_ok());

    let c1 = spread.is_none();
    let c2 = graph_unmixed && with_l3.is_none();
    let c3 = graph_unmixed && minimal_strong;

    let mut certificates = Vec::new();
    if let Some((smaller, larger)) = spread {
        certificates.push(MixedCertificate::StrongSizes { smaller, larger });
    }
    if let Some(a) = with_l3 {
        certificates.push(MixedCertificate::NonemptyL3 {
            cover: a.cover,
            l3: a.l3,
        });
    }
    if let Some((smaller, larger)) = underlying_spread {
        certificates.push(MixedCertificate::UnderlyingMixed { smaller, larger });
    }
    let agreement = c1 == c2 && c2 == c3;
    if !agreement {
        return Err(Error::CriteriaDisagreement(format!(
            "strong cardinality {c1}, G unmixed and L3 empty {c2}, minimal-strong and G unmixed {c3}"
        )));
    }
    Ok(UnmixedReport {
        criterion_strong_cardinality: c1,
        criterion_graph_unmixed_and_l3: c2,
        criterion_minimal_strong_and_g: c3,
        unmixed: c1,
        agreement,
        graph_unmixed,
        minimal_strong,
        certificates,
    })
}

/// Every strong cover is minimal, i.e. has empty `L3`.
pub fn has_minimal_strong_property(g: &WeightedOrientedGraph, limits: &Limits) -> Result<bool> {
    Ok(enumerate_strong_covers(g, limits)?
        .iter()
        .all(|a| a.l3.is_empty()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FastReason {
    /// Every vertex has weight different from 1.
    AllHeavy,
    /// Every vertex has a heavy in-neighbour.
    FullVertexSetStrong,
}

/// Mixedness shown without enumerating covers: `V` is then a strong,
/// non-minimal cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastCertificate {
    pub reason: FastReason,
    /// A heavy in-neighbour `(y, x)` for every vertex `x`.
    pub witness: Vec<(usize, usize)>,
}

/// A mixedness certificate when `V = V⁺` or `V` is strong; `None` says
/// nothing either way.
pub fn mixedness_fast_certificates(g: &WeightedOrientedGraph) -> Option<FastCertificate> {
    if g.n() == 0 || !full_vertex_set_strong(g) {
        return None;
    }
    let heavy = g.heavy_vertices();
    let reason = if heavy == g.vertices() {
        FastReason::AllHeavy
    } else {
        FastReason::FullVertexSetStrong
    };
    let witness = (0..g.n())
        .map(|x| (g.in_neighbors(x).intersection(heavy).first().unwrap(), x))
        .collect();
    Some(FastCertificate { reason, witness })
}

/// Requires `g` unmixed and returns whether the c-minor by `stable` is
/// unmixed as well.
pub fn check_c_minor_closure(
    g: &WeightedOrientedGraph,
    stable: VertexSet,
    limits: &Limits,
) -> Result<bool> {
    if !is_unmixed(g, limits)?.unmixed {
        return Err(Error::NotUnmixed);
    }
    Ok(is_unmixed(&g.c_minor(stable)?, limits)?.unmixed)
}

/// Unmixedness decided component by component.
pub fn unmixed_by_components(g: &WeightedOrientedGraph, limits: &Limits) -> Result<bool> {
    for component in g.connected_components() {
        if !is_unmixed(&component, limits)?.unmixed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of one closed-form criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationResult {
    pub shape: &'static str,
    pub applicable: bool,
    pub verdict: bool,
    /// Identifier of the deciding clause, e.g. `cycle.2`.
    pub clause: String,
    pub witness_vertices: Vec<usize>,
    pub witness_edges: Vec<(usize, usize)>,
}

impl CharacterizationResult {
    fn new(shape: &'static str, verdict: bool, clause: impl Into<String>) -> Self {
        CharacterizationResult {
            shape,
            applicable: true,
            verdict,
            clause: clause.into(),
            witness_vertices: Vec::new(),
            witness_edges: Vec::new(),
        }
    }

    fn vertices(mut self, v: Vec<usize>) -> Self {
        self.witness_vertices = v;
        self
    }

    fn edges(mut self, e: Vec<(usize, usize)>) -> Self {
        self.witness_edges = e;
        self
    }

    fn not_applicable(shape: &'static str) -> Self {
        CharacterizationResult {
            applicable: false,
            ..Self::new(shape, false, "")
        }
    }
}

/// Whisker criterion: unmixed iff every edge oriented from a base vertex
/// to its pendant starts at a vertex of weight 1.
pub fn characterize_whisker(g: &WeightedOrientedGraph) -> Result<CharacterizationResult> {
    let pairs = whisker_pairs(&g.underlying_graph()).ok_or(Error::NotAWhisker)?;
    let bad: Vec<(usize, usize)> = pairs
        .pairs
        .iter()
        .copied()
        .filter(|&(x, y)| g.has_edge(x, y) && g.weight(x) != 1)
        .collect();
    Ok(
        CharacterizationResult::new("whisker", bad.is_empty(), "whisker.2")
            .vertices(pairs.base().to_vec())
            .edges(if bad.is_empty() { pairs.pairs } else { bad }),
    )
}

/// Perfect matchings between `a` and `b` as partner maps.
fn perfect_matchings(
    g: &SimpleGraph,
    a: &[usize],
    b: VertexSet,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    fn go(
        g: &SimpleGraph,
        a: &[usize],
        i: usize,
        free: VertexSet,
        partner: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == a.len() {
            return visit(partner);
        }
        for y in g.neighbors(a[i]).intersection(free) {
            partner[a[i]] = y;
            partner[y] = a[i];
            if go(g, a, i + 1, free.without(y), partner, visit) {
                return true;
            }
        }
        false
    }
    let mut partner = vec![usize::MAX; g.n()];
    go(g, a, 0, b, &mut partner, &mut visit);
}

fn matching_is_transitive(g: &SimpleGraph, a: &[usize], partner: &[usize]) -> bool {
    // x_j ~ y_i and x_i ~ y_k force x_j ~ y_k
    a.iter().all(|&xi| {
        let yi = partner[xi];
        g.neighbors(yi)
            .iter()
            .all(|xj| g.neighbors(xi).is_subset(g.neighbors(xj)) || xj == xi)
    })
}

/// First violation of the weight condition: a heavy `x`, an out-neighbour
/// `y` and the partner `p` of `y`.
fn weight_clause_violation(
    g: &WeightedOrientedGraph,
    partner: &[usize],
) -> Option<(usize, usize, usize)> {
    let heavy = g.heavy_vertices();
    for x in heavy {
        let out = g.out_neighbors(x);
        for y in out {
            let p = partner[y];
            if !g.neighbors(p).is_subset(out) || g.in_neighbors(p).intersects(heavy) {
                return Some((x, y, p));
            }
        }
    }
    None
}

/// Bipartite criterion: unmixed iff some perfect matching of `G` satisfies
/// the transitivity clause and the weight clause. Isolated vertices are
/// ignored.
pub fn characterize_bipartite(g: &WeightedOrientedGraph) -> Result<CharacterizationResult> {
    let u = g.underlying_graph();
    let (p1, p2) = u.bipartition().ok_or(Error::NotBipartite)?;
    let active: VertexSet = (0..g.n()).filter(|&v| u.degree(v) > 0).collect();
    let a = p1.intersection(active).to_vec();
    let b = p2.intersection(active);
    if a.len() != b.len() {
        return Ok(CharacterizationResult::new(
            "bipartite",
            false,
            "bipartite.1",
        ));
    }
    let mut clause1 = None;
    let mut success = None;
    perfect_matchings(&u, &a, b, |partner| {
        if !matching_is_transitive(&u, &a, partner) {
            return false;
        }
        match weight_clause_violation(g, partner) {
            None => {
                success = Some(partner.to_vec());
                true
            }
            Some(v) => {
                clause1.get_or_insert((partner.to_vec(), v));
                false
            }
        }
    });
    let pairs = |partner: &[usize]| a.iter().map(|&x| (x, partner[x])).collect::<Vec<_>>();
    Ok(match (success, clause1) {
        (Some(partner), _) => {
            CharacterizationResult::new("bipartite", true, "bipartite.1+2").edges(pairs(&partner))
        }
        (None, Some((partner, (x, y, p)))) => {
            CharacterizationResult::new("bipartite", false, "bipartite.2")
                .vertices(vec![x, y, p])
                .edges(pairs(&partner))
        }
        (None, None) => CharacterizationResult::new("bipartite", false, "bipartite.1"),
    })
}

#[derive(Clone, Copy)]
enum Arc {
    Forward,
    Backward,
    Either,
}

/// A five-cycle template: heavy flags and the arc between positions `i`
/// and `i + 1`.
struct Template {
    heavy: [bool; 5],
    arcs: [Arc; 5],
}

const TEMPLATES: [Template; 4] = {
    use Arc::*;
    [
        // x2→x1, x3→x2, x4→x3, x4→x5, x5→x1
        Template {
            heavy: [false, false, true, false, true],
            arcs: [Backward, Backward, Backward, Forward, Forward],
        },
        // x2→x1, x3→x2, x1→x5
        Template {
            heavy: [true, true, false, false, false],
            arcs: [Backward, Backward, Either, Either, Backward],
        },
        // x4→x3, x5→x4, x1→x5
        Template {
            heavy: [false, false, true, true, true],
            arcs: [Either, Either, Backward, Backward, Backward],
        },
        // x1→x2, x2→x3, x4→x3, x4→x5
        Template {
            heavy: [false, true, true, false, true],
            arcs: [Forward, Forward, Backward, Forward, Either],
        },
    ]
};

/// Is the oriented five-cycle with vertex order `order` isomorphic to
/// template `t`, up to rotation and reflection?
fn matches_template(g: &WeightedOrientedGraph, order: &[usize], t: &Template) -> bool {
    (0..5).any(|shift| {
        [1usize, 4].iter().any(|&step| {
            let at = |i: usize| order[(shift + step * i) % 5];
            (0..5).all(|i| (g.weight(at(i)) != 1) == t.heavy[i])
                && (0..5).all(|i| match t.arcs[i] {
                    Arc::Forward => g.has_edge(at(i), at(i + 1)),
                    Arc::Backward => g.has_edge(at(i + 1), at(i)),
                    Arc::Either => true,
                })
        })
    })
}

/// Index `k` such that the graph is isomorphic to `D(k+1)`.
fn exceptional_match(g: &WeightedOrientedGraph, order: &[usize]) -> Vec<usize> {
    if order.len() != 5 {
        return Vec::new();
    }
    (0..4)
        .filter(|&k| matches_template(g, order, &TEMPLATES[k]))
        .collect()
}

/// Cycle criterion, trying its four clauses in turn.
pub fn characterize_cycle(g: &WeightedOrientedGraph) -> Result<CharacterizationResult> {
    let order = cycle_order(&g.underlying_graph()).ok_or(Error::NotACycle)?;
    let n = order.len();
    let heavy = g.heavy_vertices();
    let light: Vec<usize> = (0..n).filter(|&v| g.weight(v) == 1).collect();
    if n == 3 && !light.is_empty() {
        return Ok(CharacterizationResult::new("cycle", true, "cycle.1").vertices(light));
    }
    if [4, 5, 7].contains(&n) && heavy.iter().all(|v| g.is_sink(v)) {
        return Ok(CharacterizationResult::new("cycle", true, "cycle.2").vertices(heavy.to_vec()));
    }
    let exceptional = exceptional_match(g, &order);
    if n == 5 {
        let light_edge = g
            .edges()
            .iter()
            .copied()
            .find(|&(x, y)| g.weight(x) == 1 && g.weight(y) == 1);
        if let Some(e) = light_edge {
            if !exceptional.iter().any(|&k| k < 3) {
                return Ok(CharacterizationResult::new("cycle", true, "cycle.3").edges(vec![e]));
            }
        }
        if exceptional.contains(&3) {
            return Ok(CharacterizationResult::new("cycle", true, "cycle.4").vertices(order));
        }
    }
    let clause = match exceptional.first() {
        Some(k) => format!("cycle.none.d{}", k + 1),
        None => "cycle.none".to_string(),
    };
    Ok(CharacterizationResult::new("cycle", false, clause).vertices(order))
}

/// Path criterion: Cohen-Macaulay iff unmixed iff `k = 2`, or `k = 4` with
/// `w(x2) = 1` when `(x2, x1) ∈ E` and `w(x3) = 1` when `(x3, x4) ∈ E`.
pub fn cm_path(g: &WeightedOrientedGraph) -> Result<CharacterizationResult> {
    let p = path_order(&g.underlying_graph()).ok_or(Error::NotAPath)?;
    Ok(match p.len() {
        2 => CharacterizationResult::new("path", true, "path.k2").vertices(p),
        4 => {
            let bad: Vec<(usize, usize)> = [(p[1], p[0]), (p[2], p[3])]
                .into_iter()
                .filter(|&(x, y)| g.has_edge(x, y) && g.weight(x) != 1)
                .collect();
            CharacterizationResult::new("path", bad.is_empty(), "path.k4")
                .vertices(p)
                .edges(bad)
        }
        _ => CharacterizationResult::new("path", false, "path.length").vertices(p),
    })
}

/// Complete-graph criterion: Cohen-Macaulay iff unmixed iff `V` admits no
/// partition into unicycle oriented subgraphs.
pub fn cm_complete(g: &WeightedOrientedGraph) -> Result<CharacterizationResult> {
    if !is_complete(&g.underlying_graph()) {
        return Err(Error::NotComplete);
    }
    let strong = full_vertex_set_strong(g);
    let partition = unicycle_partition(g);
    if strong != partition.is_some() {
        return Err(Error::CriteriaDisagreement(
            "full vertex set strong disagrees with unicycle partition".into(),
        ));
    }
    Ok(match partition {
        None => {
            let unwitnessed = (0..g.n())
                .filter(|&x| !g.in_neighbors(x).intersects(g.heavy_vertices()))
                .collect();
            CharacterizationResult::new("complete", true, "complete.3").vertices(unwitnessed)
        }
        Some(p) => {
            let edges = p.blocks.iter().flat_map(|b| b.edges()).collect();
            CharacterizationResult::new("complete", false, "complete.3").edges(edges)
        }
    })
}

/// Every closed-form criterion, with the inapplicable ones flagged.
pub fn characterize_all(g: &WeightedOrientedGraph) -> Vec<CharacterizationResult> {
    type Criterion = fn(&WeightedOrientedGraph) -> Result<CharacterizationResult>;
    let attempts: [(&str, Criterion); 5] = [
        ("whisker", characterize_whisker),
        ("bipartite", characterize_bipartite),
        ("cycle", characterize_cycle),
        ("path", cm_path),
        ("complete", cm_complete),
    ];
    attempts
        .into_iter()
        .map(|(shape, f)| f(g).unwrap_or_else(|_| CharacterizationResult::not_applicable(shape)))
        .collect()
}

/// Cohen-Macaulay status where a combinatorial criterion is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmStatus {
    Decided(CharacterizationResult),
    /// No criterion applies. Both sides of the open question are
    /// reported: unmixedness and the minimal-strong property.
    RequiresExternalCas {
        unmixed: bool,
        minimal_strong: bool,
    },
}

pub fn cm_status(g: &WeightedOrientedGraph, limits: &Limits) -> Result<CmStatus> {
    if let Ok(r) = cm_path(g) {
        return Ok(CmStatus::Decided(r));
    }
    if let Ok(r) = cm_complete(g) {
        return Ok(CmStatus::Decided(r));
    }
    let report = is_unmixed(g, limits)?;
    Ok(CmStatus::RequiresExternalCas {
        unmixed: report.unmixed,
        minimal_strong: has_minimal_strong_property(g, limits)?,
    })
}

/// Strong covers with nonempty `L3`.
pub fn non_minimal_strong_covers(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<CoverAnalysis>> {
    Ok(enumerate_strong_covers(g, limits)?
        .into_iter()
        .filter(|a| !a.l3.is_empty())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn g(weights: &[u32], edges: &[(usize, usize)]) -> WeightedOrientedGraph {
        WeightedOrientedGraph::from_indexed(weights, edges).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn worked_examples_are_mixed() {
        let r1 = is_unmixed(&fixtures::example1(), &lim()).unwrap();
        assert!(!r1.unmixed && r1.agreement);
        assert!(r1.certificates.iter().any(|c| matches!(c, MixedCertificate::StrongSizes { smaller, larger } if smaller.len() == 3 && larger.len() == 5)));
        let r2 = is_unmixed(&fixtures::example2(), &lim()).unwrap();
        assert!(!r2.unmixed);
        assert!(is_unmixed(&g(&[1, 1], &[(0, 1)]), &lim()).unwrap().unmixed);
    }

    #[test]
    fn minimal_strong() {
        assert!(has_minimal_strong_property(&fixtures::eleven_vertex(), &lim()).unwrap());
        assert!(!has_minimal_strong_property(&fixtures::example1(), &lim()).unwrap());
        assert!(
            has_minimal_strong_property(&g(&[1, 1, 1], &[(0, 1), (1, 2), (2, 0)]), &lim()).unwrap()
        );
    }

    #[test]
    fn fast_certificates() {
        // every weight in the first example differs from 1
        let c = mixedness_fast_certificates(&fixtures::example1()).unwrap();
        assert_eq!(c.reason, FastReason::AllHeavy);
        let pendant = g(&[2, 2, 2, 1], &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        let c = mixedness_fast_certificates(&pendant).unwrap();
        assert_eq!(c.reason, FastReason::FullVertexSetStrong);
        assert_eq!(c.witness[3], (0, 3));
        let tri = g(&[2, 2, 2], &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(
            mixedness_fast_certificates(&tri).unwrap().reason,
            FastReason::AllHeavy
        );
        assert!(mixedness_fast_certificates(&fixtures::example2()).is_none());
    }

    #[test]
    fn c_minor_closure() {
        let p4 = g(&[1, 1, 1, 1], &[(0, 1), (1, 2), (2, 3)]);
        assert!(check_c_minor_closure(&p4, VertexSet::empty(), &lim()).unwrap());
        assert!(check_c_minor_closure(&p4, VertexSet::singleton(0), &lim()).unwrap());
        assert_eq!(
            check_c_minor_closure(&fixtures::example2(), VertexSet::empty(), &lim()),
            Err(Error::NotUnmixed)
        );
    }

    #[test]
    fn components() {
        let edgeless = g(&[1, 1, 1], &[]);
        assert!(unmixed_by_components(&edgeless, &lim()).unwrap());
        assert!(is_unmixed(&edgeless, &lim()).unwrap().unmixed);
    }

    #[test]
    fn whiskers() {
        // triangle 0,1,2 with pendants 3,4,5
        let tri = [(0, 1), (1, 2), (2, 0)];
        let inward: Vec<_> = tri
            .iter()
            .copied()
            .chain([(3, 0), (4, 1), (5, 2)])
            .collect();
        let r = characterize_whisker(&g(&[2, 2, 2, 1, 1, 1], &inward)).unwrap();
        assert!(r.verdict);
        let outward: Vec<_> = tri
            .iter()
            .copied()
            .chain([(0, 3), (1, 4), (2, 5)])
            .collect();
        assert!(
            !characterize_whisker(&g(&[2, 1, 1, 1, 1, 1], &outward))
                .unwrap()
                .verdict
        );
        assert!(
            characterize_whisker(&g(&[1, 1, 1, 1, 1, 1], &outward))
                .unwrap()
                .verdict
        );
        assert_eq!(
            characterize_whisker(&fixtures::example1()),
            Err(Error::NotAWhisker)
        );
    }

    #[test]
    fn bipartite() {
        let r = characterize_bipartite(&fixtures::example2()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.clause, "bipartite.2");
        assert!(
            characterize_bipartite(&g(&[1; 4], &[(0, 1), (2, 1), (2, 3)]))
                .unwrap()
                .verdict
        );
        let p6 = g(&[1; 6], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let r = characterize_bipartite(&p6).unwrap();
        assert_eq!((r.verdict, r.clause.as_str()), (false, "bipartite.1"));
        assert_eq!(
            characterize_bipartite(&fixtures::example1()),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn cycles() {
        let tri = g(&[2, 2, 2], &[(0, 1), (1, 2), (2, 0)]);
        assert!(!characterize_cycle(&tri).unwrap().verdict);
        // x2 is the only heavy vertex and a sink
        let c7 = g(
            &[1, 2, 1, 1, 1, 1, 1],
            &[(0, 1), (2, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)],
        );
        let r = characterize_cycle(&c7).unwrap();
        assert_eq!((r.verdict, r.clause.as_str()), (true, "cycle.2"));
        let c6_edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        assert!(!characterize_cycle(&g(&[1; 6], &c6_edges)).unwrap().verdict);
        assert_eq!(
            characterize_cycle(&fixtures::example2()),
            Err(Error::NotACycle)
        );
    }

    #[test]
    fn exceptional_templates_match_their_fixtures() {
        for (k, d) in [
            fixtures::d1(),
            fixtures::d2(),
            fixtures::d3(),
            fixtures::d4(),
        ]
        .iter()
        .enumerate()
        {
            let order = cycle_order(&d.underlying_graph()).unwrap();
            assert!(exceptional_match(d, &order).contains(&k), "d{}", k + 1);
        }
        let r = characterize_cycle(&fixtures::d4()).unwrap();
        assert_eq!((r.verdict, r.clause.as_str()), (true, "cycle.4"));
        for d in [fixtures::d1(), fixtures::d2(), fixtures::d3()] {
            assert!(!characterize_cycle(&d).unwrap().verdict);
        }
    }

    #[test]
    fn paths() {
        let r = cm_path(&fixtures::example2()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness_edges, vec![(2, 3)]);
        assert!(cm_path(&g(&[1, 5], &[(0, 1)])).unwrap().verdict);
        assert!(
            cm_path(&g(&[1; 4], &[(1, 0), (1, 2), (3, 2)]))
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn complete_graphs() {
        let tri = g(&[2, 2, 2], &[(0, 1), (1, 2), (2, 0)]);
        assert!(!cm_complete(&tri).unwrap().verdict);
        let with_source = g(&[1, 2, 2], &[(0, 1), (0, 2), (1, 2)]);
        assert!(cm_complete(&with_source).unwrap().verdict);
        assert!(cm_complete(&g(&[1, 1], &[(0, 1)])).unwrap().verdict);
        assert_eq!(cm_complete(&fixtures::example2()), Err(Error::NotComplete));
    }

    #[test]
    fn eleven_vertex_needs_a_cas() {
        let status = cm_status(&fixtures::eleven_vertex(), &lim()).unwrap();
        assert_eq!(
            status,
            CmStatus::RequiresExternalCas {
                unmixed: true,
                minimal_strong: true
            }
        );
    }
}
