//! Finite partially ordered Γ-semigroups.
//!
//! Every definition is a decidable predicate over explicit tables:
//! associativity and order compatibility ([`structures`]), subsemigroups and
//! interior ideals ([`ideals`]), automorphisms and characteristic interior
//! ideals ([`automorphisms`]), and their fuzzy counterparts with exact
//! rational grades ([`fuzzy`]). [`theorems`] turns the level-cut and
//! characteristic-function criteria into executable equivalence checks,
//! [`generator`] enumerates the small structures they are swept over, and
//! [`cli`] binds it all to two text formats and the `pogs` binary.

pub mod automorphisms;
pub mod cli;
pub mod error;
pub mod fuzzy;
pub mod generator;
pub mod ideals;
pub mod structures;
pub mod theorems;
pub mod verdict;

pub use automorphisms::{
    apply_to_subset, enumerate_automorphisms, is_automorphism, is_characteristic_interior_ideal,
    Automorphism,
};
pub use error::{Error, Result};
pub use fuzzy::{
    characteristic_function, compose_with_automorphism, image_levels,
    is_fuzzy_characteristic_interior_ideal, is_fuzzy_interior_ideal, is_fuzzy_subsemigroup, t_cut,
    FuzzySubset, Grade,
};
pub use ideals::{
    downward_closure, enumerate_interior_ideals, is_interior_ideal, is_subsemigroup, CrispSubset,
};
pub use structures::{
    product, validate_compatibility, validate_gamma_semigroup, validate_partial_order, ElementId,
    GammaId, GammaSemigroup, PartialOrder, PoGammaSemigroup,
};
pub use verdict::{Side, Verdict, Witness};
