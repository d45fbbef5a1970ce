//! Positroid representations: Grassmann necklaces, decorated permutations,
//! basis families, and the interval-sum H-description of the polytope.

mod bases;
mod decorated;
mod hrep;
mod necklace;

pub use bases::{bases_from_necklace, necklace_from_bases, PositroidBases};
pub use decorated::{
    all_decorated_permutations, decorated_from_necklace, necklace_from_decorated, Color,
    DecoratedPermutation, SifReport,
};
pub use hrep::{h_representation, HRepresentation, Inequality, Sense};
pub use necklace::{validate_necklace, GrassmannNecklace};
