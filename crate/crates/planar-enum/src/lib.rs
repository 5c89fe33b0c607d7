//! Plane graphs with trivalent and quadrivalent vertices, stored as rotation
//! systems, and exhaustive generation of the census skeletons.

pub mod canon;
pub mod connectivity;
pub mod enumerate;
mod graph;
pub mod io;

pub use canon::CanonicalCode;
pub use connectivity::{connectivity_at_most_one, edge_connectivity};
pub use enumerate::{
    classify_double_arcs, enumerate_codes, enumerate_plane_graphs, enumerate_plane_graphs_with,
    is_admissible, strand_component_count, DoubleArc, DoubleArcVerdict, EnumError, EnumOptions,
};
pub use graph::{Kind, PlaneGraph, NONE};
