//! GF(2) and GF(3) matroids as point sets of small projective geometries.

mod classes;
mod group;
#[allow(clippy::module_inception)]
mod matroid;
mod space;

pub use classes::{
    add_class_rank_bound, add_flat_rank_bound, add_member, enumerate_forbidden_flats, extension_member,
    is_forbidden_flat, AddClass, BaseMatroidClass, ExtensionClass, FlatStats, MatroidClass, MatroidClassSpec,
    MatroidUnion, MatroidWitness,
};
pub use group::{apply, group, orbits, OrbitTable, ProjectiveGroup};
pub use matroid::{FlatLattice, GFqMatroid};
pub use space::{pg, rank_cap, PGSpace, PointSet};

/// Same as [`pg`].
pub fn pg_points(q: u8, r: usize) -> Result<std::sync::Arc<PGSpace>, crate::error::MatroidError> {
    pg(q, r)
}
