//! Region approximations: the carrier values that qualitative spatial
//! classification runs over. A region is either an oriented box (treated as
//! a closed solid) or a voxel occupancy grid.

use crate::geom::{Aabb, Obb, Vec3, VoxelGrid};
use crate::scalar::Real;

#[derive(Clone, Debug)]
pub enum RegionApprox<R> {
    Box(Obb<R>),
    Voxels(VoxelGrid<R>),
}

impl<R: Real> RegionApprox<R> {
    pub fn is_empty(&self) -> bool {
        match self {
            RegionApprox::Box(b) => b.is_degenerate(),
            RegionApprox::Voxels(g) => g.is_empty(),
        }
    }

    pub fn world_aabb(&self) -> Aabb<R> {
        match self {
            RegionApprox::Box(b) => b.world_aabb(),
            RegionApprox::Voxels(g) => g.world_bounds(),
        }
    }

    pub fn contains_point(&self, p: Vec3<R>) -> bool {
        match self {
            RegionApprox::Box(b) => b.contains_point(p, R::zero()),
            RegionApprox::Voxels(g) => g.contains_world_point(p),
        }
    }

    /// Distance from a point to the region (0 when inside).
    pub fn distance_to_point(&self, p: Vec3<R>) -> R {
        match self {
            RegionApprox::Box(b) => b.distance_to_point(p),
            RegionApprox::Voxels(g) => {
                let mut best = R::infinity();
                for k in g.occupied_voxels() {
                    let c = g.voxel_center(k);
                    let half = Vec3::splat(g.resolution.half());
                    let d = Aabb::from_center_half(c, half).distance_to_point(p);
                    best = best.min(d);
                }
                best
            }
        }
    }
}
