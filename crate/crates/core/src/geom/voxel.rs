//! Voxel occupancy grids: the general-pose fallback for region queries that
//! the exact interval path cannot cover.

use super::aabb::Aabb;
use super::vec::Vec3;
use crate::scalar::Real;

/// Occupancy grid over a world-frame lattice; a voxel is occupied when its
/// center lies inside the sampled region.
#[derive(Clone, Debug)]
pub struct VoxelGrid<R> {
    pub origin: Vec3<R>,
    pub resolution: R,
    pub dims: [usize; 3],
    bits: Vec<bool>,
}

impl<R: Real> VoxelGrid<R> {
    /// Sample `membership` over a lattice covering `bounds`.
    pub fn sample(bounds: &Aabb<R>, resolution: R, membership: impl Fn(Vec3<R>) -> bool) -> Self {
        let ext = bounds.extents();
        let count = |e: R| -> usize {
            let n = (e / resolution).ceil().to_f64x() as isize;
            n.max(1) as usize
        };
        let dims = [count(ext.x), count(ext.y), count(ext.z)];
        let mut bits = vec![false; dims[0] * dims[1] * dims[2]];
        let mut idx = 0;
        for kz in 0..dims[2] {
            for ky in 0..dims[1] {
                for kx in 0..dims[0] {
                    let p = bounds.min
                        + Vec3::new(
                            (R::of(kx as f64) + R::of(0.5)) * resolution,
                            (R::of(ky as f64) + R::of(0.5)) * resolution,
                            (R::of(kz as f64) + R::of(0.5)) * resolution,
                        );
                    bits[idx] = membership(p);
                    idx += 1;
                }
            }
        }
        Self {
            origin: bounds.min,
            resolution,
            dims,
            bits,
        }
    }

    fn index(&self, k: [usize; 3]) -> usize {
        (k[2] * self.dims[1] + k[1]) * self.dims[0] + k[0]
    }

    pub fn get(&self, k: [usize; 3]) -> bool {
        self.bits[self.index(k)]
    }

    pub fn occupied_count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.occupied_count() == 0
    }

    /// Occupied volume estimate.
    pub fn volume(&self) -> R {
        let cell = self.resolution * self.resolution * self.resolution;
        R::of(self.occupied_count() as f64) * cell
    }

    pub fn world_bounds(&self) -> Aabb<R> {
        let ext = Vec3::new(
            R::of(self.dims[0] as f64),
            R::of(self.dims[1] as f64),
            R::of(self.dims[2] as f64),
        ) * self.resolution;
        Aabb::new(self.origin, self.origin + ext)
    }

    pub fn voxel_center(&self, k: [usize; 3]) -> Vec3<R> {
        self.origin
            + Vec3::new(
                (R::of(k[0] as f64) + R::of(0.5)) * self.resolution,
                (R::of(k[1] as f64) + R::of(0.5)) * self.resolution,
                (R::of(k[2] as f64) + R::of(0.5)) * self.resolution,
            )
    }

    /// True when the voxel center lies inside the grid's region. Points
    /// outside the lattice are outside the region.
    pub fn contains_world_point(&self, p: Vec3<R>) -> bool {
        let rel = (p - self.origin) / self.resolution;
        let k = [rel.x, rel.y, rel.z].map(|c| c.floor().to_f64x() as isize);
        for (i, ki) in k.iter().enumerate() {
            if *ki < 0 || *ki >= self.dims[i] as isize {
                return false;
            }
        }
        self.get([k[0] as usize, k[1] as usize, k[2] as usize])
    }

    pub fn occupied_voxels(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let dims = self.dims;
        (0..dims[2]).flat_map(move |kz| {
            (0..dims[1]).flat_map(move |ky| {
                (0..dims[0]).filter_map(move |kx| {
                    if self.get([kx, ky, kz]) {
                        Some([kx, ky, kz])
                    } else {
                        None
                    }
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_volume_estimate_converges() {
        let bounds = Aabb::<f64>::from_center_half(Vec3::zero(), Vec3::splat(1.0));
        let inside = |p: Vec3<f64>| p.norm() <= 1.0;
        let coarse = VoxelGrid::sample(&bounds, 0.1, inside).volume();
        let fine = VoxelGrid::sample(&bounds, 0.05, inside).volume();
        let exact = 4.0 / 3.0 * std::f64::consts::PI;
        assert!((fine - exact).abs() < (coarse - exact).abs() + 1e-9);
        assert!((fine - exact).abs() / exact < 0.05);
    }

    #[test]
    fn point_lookup_matches_sampling() {
        let bounds = Aabb::<f64>::new(Vec3::zero(), Vec3::splat(1.0));
        let grid = VoxelGrid::sample(&bounds, 0.25, |p| p.x < 0.5);
        assert!(grid.contains_world_point(Vec3::of(0.1, 0.5, 0.5)));
        assert!(!grid.contains_world_point(Vec3::of(0.9, 0.5, 0.5)));
        assert!(!grid.contains_world_point(Vec3::of(-1.0, 0.5, 0.5)));
    }
}
