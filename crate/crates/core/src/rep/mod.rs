pub mod construct;
pub mod hom;
pub mod homological;
pub mod iso;
pub mod module;
pub mod series;

pub use construct::{inflate, projective, simple, string_module, string_module_str};
pub use hom::{end_dim, hom, hom_by_intertwiners, HomSpace};
pub use homological::{
    ext1, ext1_via_stable, injective_hull, is_projective, omega, omega_inv, projective_cover, projective_halving,
    stable_end_dim, stable_hom, top_multiplicities, ProjectiveHalving, StableHom,
};
pub use iso::{decide_isomorphism, default_seed, set_default_seed, fingerprint, is_isomorphic, is_isomorphic_seeded, Fingerprint, IsoCertificate};
pub use module::{Morphism, QuiverRep, Sub};
pub use series::{
    is_uniserial, loewy_length, radical_filtration, radical_power, radical_series, render_layers, socle_dims,
    socle_series, top_dims, uniserial_pattern,
};
