//! Finite groups as Cayley tables, with the coprime-commutator machinery:
//! δ_k*-commutators, the lower Fitting series, nilpotent residuals and
//! Fitting height, plus checks that evaluate nilpotency criteria of the
//! form "coprime-order elements multiply with multiplicative orders" on
//! concrete groups.

pub mod analysis;
pub mod arith;
pub mod checks;
pub mod coprime;
pub mod corpus;
pub mod error;
pub mod group;
pub mod hom;
pub mod perm;
pub mod series;
pub mod spec;
pub mod subgroup;
pub mod survey;
pub mod sylow;
pub mod verdict;

pub use analysis::GroupAnalysis;
pub use checks::{
    bw_equivalence, coprime_action_check, coprime_product_property, lemma3_check, theorem_check, Theorem,
};
pub use coprime::{delta_star_set, focal_check, generated_dk, lower_fitting_series, power_closure, DeltaSet};
pub use error::{Error, Result};
pub use group::{direct_product, semidirect_cyclic, GroupTable, Limits};
pub use hom::{quotient, GroupHom};
pub use perm::Perm;
pub use series::{derived_series, is_nilpotent, is_soluble, lower_central_series, SeriesKind, SeriesReport};
pub use spec::{parse_spec, realize, GroupSpec};
pub use subgroup::{centralizer, generated_subgroup, normal_closure, normalizer, subgroup_table, Subgroup};
pub use sylow::{fitting_height, fitting_subgroup, p_core, sylow_subgroup, FittingHeight};
pub use verdict::{CheckStatus, CheckVerdict, Witness};
