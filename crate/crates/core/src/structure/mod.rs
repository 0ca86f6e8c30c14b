//! Subgroup-level machinery: classes, centralizers, normalizers, quotients,
//! Sylow and Hall subgroups.

mod classes;
pub(crate) mod hall;
pub mod oracle;
mod orbit;
mod props;
mod subgroups;
mod sylow;

pub use classes::{conjugacy_classes, conjugacy_classes_capped, ConjClass};
pub use hall::{
    construct_nilpotent_hall, construct_nilpotent_hall_with_budget, find_commuting_conjugate,
    find_commuting_sylow_pair, has_abelian_hall, has_nilpotent_hall, ConjugateSearch,
    HallConstruction, DEFAULT_CONJUGATE_BUDGET,
};
pub use orbit::generate;
pub use props::{is_abelian, is_cp_x_cp, is_elementary_abelian, is_nilpotent, is_sigma3};
pub use subgroups::{
    center, center_capped, centralizer, centralizer_of_subgroup, derived_subgroup, is_normal,
    normal_closure, quotient, quotient_capped, SubgroupHandle,
};
pub use sylow::{count_conjugates, normalizer, num_sylow, sylow};
