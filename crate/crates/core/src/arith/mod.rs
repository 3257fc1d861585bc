pub mod f2;
pub mod f2poly;
pub mod witt;

pub use f2::{canonical_basis, f2_rank_kernel, f2_solve, F2Matrix, F2Vec, RowSpace};
pub use f2poly::F2Poly;
pub use witt::{witt_poly_mul, WittPoly, WittScalar};
