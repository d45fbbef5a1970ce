//! The circuit triangulation of a connected positroid polytope, its dual
//! graph, and the BFS shelling.

mod affine;
mod graph;
mod labels;
mod phi;
mod shelling;

pub use affine::{affine_consistency_check, AffineReport, AffineWindow};
pub use graph::{build_graph, GraphEdge, TriangulationGraph};
pub use labels::{
    adjacent_letter_facets, enumerate_labels, labels_by_restricted_descents, simplex_facets,
    SimplexFacet, TriangulationLabel,
};
pub use phi::{phi_inverse_point, phi_inverse_point_upper, phi_point};
pub use shelling::{hstar_from_covers, shelling_poset, ShellingPoset};

pub(crate) use labels::cycles_ending_at_n;
