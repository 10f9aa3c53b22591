//! Edge ideals of weighted oriented graphs.
//!
//! For a weighted oriented graph `D` the edge ideal `I(D)` is generated by
//! `x·y^w(y)` over the edges `(x, y)`. This crate computes its irredundant
//! irreducible decomposition from the strong vertex covers of `D`, the
//! associated primes, and decides unmixedness, with an independent
//! splitting oracle to check the decomposition.
//!
//! ```
//! use oriented_ideal::{fixtures, strong_cover_decomposition, display_decomposition, Limits};
//!
//! let g = fixtures::example2();
//! let report = strong_cover_decomposition(&g, true, &Limits::default()).unwrap();
//! assert_eq!(
//!     display_decomposition(&report.ideals(), g.names()),
//!     "(x1,x3) ∩ (x2^2,x3) ∩ (x2,x4^7) ∩ (x1,x3^5,x4^7) ∩ (x2^2,x3^5,x4^7)"
//! );
//! ```

pub mod cover;
pub mod decomposition;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod limits;
pub mod monomial;
pub mod shape;
pub mod unmixed;
pub mod vertex_set;

pub use cover::{
    enumerate_minimal_covers, enumerate_strong_covers, full_vertex_set_strong, is_minimal_cover,
    is_strong_cover, is_unicycle_oriented, is_vertex_cover, l_partition, strong_cover_sets,
    unicycle_partition, CoverAnalysis, UnicycleBlock, UnicyclePartition,
};
pub use decomposition::{
    associated_primes, edge_ideal, irreducible_ideal_of_cover, strong_cover_decomposition,
    Component, DecompositionReport,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, Neighborhoods, RawGraph, RawVertex, SimpleGraph, WeightedOrientedGraph,
};
pub use io::{load_graph, parse_graph, LoadError};
pub use limits::Limits;
pub use monomial::{
    display_decomposition, ideal_equals, intersect_all, irreducible_decomposition_oracle,
    support_height, IrreducibleIdeal, Monomial, MonomialIdeal,
};
pub use shape::{classify_shape, ShapeTags, WhiskerPairs};
pub use unmixed::{
    characterize_all, characterize_bipartite, characterize_cycle, characterize_whisker,
    check_c_minor_closure, cm_complete, cm_path, cm_status, has_minimal_strong_property,
    is_unmixed, mixedness_fast_certificates, unmixed_by_components, CharacterizationResult,
    CmStatus, FastCertificate, MixedCertificate, UnmixedReport,
};
pub use vertex_set::VertexSet;
