//! Scalar-generic 3D primitives: vectors, unit quaternions, axis-aligned and
//! oriented boxes, and voxel occupancy grids.

mod aabb;
mod obb;
mod quat;
mod vec;
mod voxel;

pub use aabb::Aabb;
pub use obb::{penetration_depth, sweep_contact, Obb};
pub use quat::Quat;
pub use vec::Vec3;
pub use voxel::VoxelGrid;
