pub mod algebra;
pub mod family;
pub mod path;
pub(crate) mod rewrite;

pub use algebra::{build_algebra, check_pi_lambda, pi_lambda, AlgebraId, BoundQuiverAlgebra, PiLambdaWitness};
pub use family::{
    cartan_from_decomposition, decomposition_matrix, expected_projective_loewy_lengths, relation_ideal, Arrow,
    Family, Kind, Quiver, Relation, RelationIdeal,
};
pub use path::{parse_word, PathWord, StringWord};
