//! Combinatorial constructions on geometries with a leaf: parity classes,
//! partitioned neighbourhood geometries, the leaf conditions B1 and B2, and
//! the halving constructions `P`, `BP` and `H`.

mod graph;
mod halving;
mod leaf;

pub use graph::{
    parity_classes, partitioned_neighborhood_geometry, partitioned_neighborhood_gonality, Graph, ParityClasses,
};
pub use halving::{
    bp_construction, duality_correlation, halving_geometry, induced_action, is_correlation, p_construction,
    BP_CONSTRUCTION, P_CONSTRUCTION,
};
pub use leaf::{
    b1b2_propagation, check_b1, check_b2, residue_graph, truncation_graph, truncation_is_bipartite, LeafGraph,
};
