//! Edge ideals, the irreducible ideals of vertex covers, and the
//! irredundant irreducible decomposition indexed by strong covers.

use crate::cover::{enumerate_strong_covers, l_partition, strong_cover_sets, CoverAnalysis};
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::limits::Limits;
use crate::monomial::{
    intersect_all, irreducible_decomposition_oracle, IrreducibleIdeal, Monomial, MonomialIdeal,
};
use crate::vertex_set::VertexSet;

/// `I(D)`, generated by `x · y^w(y)` for every edge `(x, y)`.
pub fn edge_ideal(g: &WeightedOrientedGraph) -> MonomialIdeal {
    let gens = g
        .edges()
        .iter()
        .map(|&(t, h)| {
            Monomial::var(t)
                .mul(&Monomial::power(h, g.weight(h)))
                .expect("distinct variables cannot overflow")
        })
        .collect();
    MonomialIdeal::new(gens).expect("edge generators are never 1")
}

/// `I_C`: exponent 1 on `L1(C)` and `w(x)` on `L2(C) ∪ L3(C)`.
pub fn irreducible_ideal_of_cover(
    g: &WeightedOrientedGraph,
    cover: VertexSet,
) -> Result<IrreducibleIdeal> {
    Ok(ideal_of_analysis(g, &l_partition(g, cover)?))
}

fn ideal_of_analysis(g: &WeightedOrientedGraph, analysis: &CoverAnalysis) -> IrreducibleIdeal {
    let powers = analysis
        .cover
        .iter()
        .map(|x| {
            (
                x,
                if analysis.l1.contains(x) {
                    1
                } else {
                    g.weight(x)
                },
            )
        })
        .collect();
    IrreducibleIdeal::from_powers(powers).expect("cover vertices are distinct")
}

/// One component of the decomposition and the strong cover producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub analysis: CoverAnalysis,
    pub ideal: IrreducibleIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub edge_ideal: MonomialIdeal,
    /// One component per strong cover, in canonical cover order.
    pub components: Vec<Component>,
    /// Supports of the components.
    pub associated_primes: Vec<VertexSet>,
    /// `Some(true)` when the oracle cross-check ran and agreed.
    pub verified: Option<bool>,
}

impl DecompositionReport {
    pub fn ideals(&self) -> Vec<IrreducibleIdeal> {
        self.components.iter().map(|c| c.ideal.clone()).collect()
    }
}

/// `I(D) = ⋂ I_C` over the strong covers `C`.
///
/// With `verify`, the intersection of the components is compared with
/// `I(D)` and the component set with the splitting oracle; any mismatch is
/// reported as [`Error::VerificationFailure`].
pub fn strong_cover_decomposition(
    g: &WeightedOrientedGraph,
    verify: bool,
    limits: &Limits,
) -> Result<DecompositionReport> {
    let ideal = edge_ideal(g);
    let components: Vec<Component> = enumerate_strong_covers(g, limits)?
        .into_iter()
        .map(|analysis| Component {
            ideal: ideal_of_analysis(g, &analysis),
            analysis,
        })
        .collect();
    let associated_primes = components.iter().map(|c| c.analysis.cover).collect();
    let mut report = DecompositionReport {
        edge_ideal: ideal,
        components,
        associated_primes,
        verified: None,
    };
    if verify {
        verify_report(g, &report, limits)?;
        report.verified = Some(true);
    }
    Ok(report)
}

fn verify_report(
    g: &WeightedOrientedGraph,
    report: &DecompositionReport,
    limits: &Limits,
) -> Result<()> {
    let names = g.names();
    let ideals = report.ideals();
    let intersection = intersect_all(&ideals);
    if intersection != report.edge_ideal {
        return Err(Error::VerificationFailure(format!(
            "intersection {} differs from I(D) = {}",
            intersection.display(names),
            report.edge_ideal.display(names)
        )));
    }
    let mut expected =
        irreducible_decomposition_oracle(&report.edge_ideal, limits.oracle_max_steps)?;
    expected.sort();
    let mut ours = ideals;
    ours.sort();
    if let Some(extra) = ours.iter().find(|c| !expected.contains(c)) {
        return Err(Error::VerificationFailure(format!(
            "component {} is not in the oracle decomposition",
            extra.display(names)
        )));
    }
    if let Some(missing) = expected.iter().find(|c| !ours.contains(c)) {
        return Err(Error::VerificationFailure(format!(
            "oracle component {} is missing",
            missing.display(names)
        )));
    }
    Ok(())
}

/// `Ass(I(D))` as the supports of the strong covers, canonically ordered.
pub fn associated_primes(g: &WeightedOrientedGraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    strong_cover_sets(g, limits)
}
