//! Exact F2 representation theory for three families of tame block algebras
//! of quaternion type and their dihedral quotients, with mod-2 deformation
//! ring certification and truncated Witt-ring identities.

pub mod arith;
pub mod atlas;
pub mod deform;
pub mod error;
pub mod harness;
pub mod quiver;
pub mod rep;
pub mod witt_rings;

pub use error::{Error, Result};
