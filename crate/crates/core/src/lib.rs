//! Splittings of right-angled Artin groups, executable.
//!
//! Given a finite simple graph, the associated group is generated by the
//! vertices with commuting relations exactly along the edges. This crate
//! makes the splitting theory of such groups concrete: it finds
//! separating vertex sets, builds the corresponding amalgam splittings,
//! simulates the resulting tree actions exactly on finite windows, and
//! runs a checker that produces and certifies the separating set whose
//! subgroup stabilizes an edge of the tree.

#![forbid(unsafe_code)]

pub mod config;
pub mod graph;
pub mod harness;
pub mod splittings;
pub mod theorem;
pub mod tree;
pub mod words;

pub use config::Config;
pub use graph::{Graph, GraphError, GraphSpec, VertexSet};
pub use splittings::{
    AmalgamSplitting, Classification, HomCheck, HomSpec, InducedAction, LineAction, RaagHom, Side,
    SideChoice, SplitError, SplittingDescriptor, Syllable,
};
pub use theorem::{
    abelian_splitting_report, verify_theorem, AbelianReport, Action, CaseTag, CheckEntry,
    CheckerError, TheoremReport,
};
pub use tree::{
    act, act_edge, axis_segment, axis_vertices, bridge_edge, build_ball, coset_edge, coset_vertex,
    displacement, fixed_vertices, fixes_edge, tree_distance, vertex_fixed_by, AxisSegment,
    BallExport, BridgeCertificate, TreeBall, TreeEdge, TreeError, TreeVertex,
};
pub use words::{
    abelianization, equal, in_special_subgroup, normal_form, retract, support, z_image,
    IntegerVector, Letter, NormalForm, Word, WordError,
};
