//! The cubic toroids `{4,3^{n-2},4}_s`, the presentations of their halving
//! groups and the verification driver for the whole family.

mod presentations;
mod verify;

pub use presentations::{
    cubic_toroid_presentation, double_halved_matrix, double_halved_presentation, double_halving_excluded,
    halved_matrix, halved_presentation, linear_matrix, predict_degenerate_leaf, predict_truncation_bipartite,
    ToroidParams,
};
pub use verify::{
    build_cubic_toroid, hypertope_checks, verify_family, Check, CubicToroid, FamilyReport, LevelReport, Status,
    COMBINATORIAL_CHAMBER_LIMIT,
};
