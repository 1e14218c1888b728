//! Finitely presented groups generated by involutions: coset enumeration,
//! permutation representations and the subgroup computations needed for
//! coset geometries and halving.

mod perm;
mod presentation;
mod regular;
mod todd_coxeter;

pub use perm::{compose, invert, orbit, perm_order, schreier_sims_order, Perm, PermGroup};
pub use presentation::{check_word, cyclically_reduce, freely_reduce, power, Presentation, Word};
pub use regular::{
    check_b1_algebraic, check_b2_algebraic_sufficient, coset_geometry, coxeter_matrix, generators_correspond,
    group_order, halving_generators, halving_group, intersection_property, is_leaf, relator_parity_bipartite,
    subgroup_order, CosetGeometry,
};
pub use todd_coxeter::{todd_coxeter, CosetTable};

use crate::error::Result;
use crate::Limits;

/// Coset enumeration with the ceiling from [`Limits::default`].
pub fn enumerate(pres: &Presentation, subgens: &[Word]) -> Result<CosetTable> {
    todd_coxeter(pres, subgens, Limits::default().max_cosets)
}

/// The permutation group induced on the cosets of a table.
pub fn perm_image(table: &CosetTable) -> Result<PermGroup> {
    PermGroup::from_coset_table(table)
}

/// The right-regular representation of a presented group.
pub fn regular_group(pres: &Presentation, limits: &Limits) -> Result<PermGroup> {
    perm_image(&todd_coxeter(pres, &[], limits.max_cosets)?)
}
