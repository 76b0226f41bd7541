//! Theta characteristics over F₂ and the route from Thomae's formula to
//! the forms `G̃_d` and `K^{(g)}`.

mod chars;
mod frobenius;
mod projection;
mod subspace;
mod thomae;

pub use chars::{
    all_chars, char_of_subset, dump, e_triple, eta_basis, is_balanced, is_balanced_subset,
    parse_dump, subset_of_char, symplectic_pair, thomae_support, ThetaChar, MAX_GENUS,
};
pub use frobenius::{
    act_genus_one, frobenius_same_orbit, same_orbit_brute_force_genus_one, sp2_f2,
};
pub use projection::{
    permute_subspace, pi_project, pi_project_subspace, witt_g_tilde, witt_image_q,
    witt_q_coordinate, witt_q_restricted, witt_q_tally, witt_restrict, witt_restrict_subspace,
    WittTally,
};
pub use subspace::{
    balanced_structure, enumerate_subspaces, gaussian_binomial, BalancedStructure, F2Subspace,
};
pub use thomae::{
    g_tilde, k_coefficient, k_form, k_form_at, key_identity_holds, n_count, q_squared,
    q_squared_exponents, thomae4, thomae4_char,
};
