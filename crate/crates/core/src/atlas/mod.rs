//! The list of bricks over each dihedral quotient and an exhaustive check of
//! that list in small dimension.

pub mod entries;
pub mod small;
pub mod sweep;

pub use entries::{atlas, atlas_specs, diagram_dims, AtlasSpec, BrickEntry, BrickSummary};
pub use sweep::{completeness_sweep, SweepClass, SweepReport, MAX_SWEEP_DIM};
