//! The forms `H_g` and the operators acting on binary invariants: star and
//! its inverse, valuations and the `T`/Witt maps, `Φ`, symmetrization and
//! membership tests.

mod collapse;
mod forms;
pub mod perm;
mod phi;
mod star;
mod symmetry;
mod witt;

pub use collapse::{collapse_identity_at, triple_collapse};
pub use forms::{
    delta, delta_pair, enumerate_alternating, h_form, h_form_at, membership_sw, psi, AltSequence,
    InvariantForm,
};
pub use phi::{
    cusp_divisor, cusp_factor, is_cusp, phi, phi_witt_relations, starred_phi_bar_vanishes,
    PhiRelations,
};
pub use star::{star, star_poly, unstar};
pub use symmetry::{
    is_invariant_under, membership_b, morozov_check, morozov_integrand, sum_over, swap_xy,
    symmetrize, symmetrize_direct, valuations, Group, MorozovOutcome,
};
pub use witt::{
    delta_pair_witt_closed_form, discriminant_witt, nu, pi1_subset, pi2_subset, split_tensor,
    tensor, tmap, witt_check, witt_grade, WittImage,
};
