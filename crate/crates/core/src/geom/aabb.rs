use super::vec::Vec3;
use crate::scalar::Real;

/// Axis-aligned box given by opposite corners.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb<R> {
    pub min: Vec3<R>,
    pub max: Vec3<R>,
}

impl<R: Real> Aabb<R> {
    pub fn new(min: Vec3<R>, max: Vec3<R>) -> Self {
        Self { min, max }
    }

    pub fn from_center_half(center: Vec3<R>, half: Vec3<R>) -> Self {
        Self {
            min: center - half,
            max: center + half,
        }
    }

    pub fn center(&self) -> Vec3<R> {
        (self.min + self.max) * R::of(0.5)
    }

    pub fn half_extents(&self) -> Vec3<R> {
        (self.max - self.min) * R::of(0.5)
    }

    pub fn extents(&self) -> Vec3<R> {
        self.max - self.min
    }

    pub fn volume(&self) -> R {
        let e = self.extents();
        e.x * e.y * e.z
    }

    pub fn is_degenerate(&self) -> bool {
        self.extents().min_component() <= R::zero()
    }

    pub fn union(&self, o: &Self) -> Self {
        Self {
            min: Vec3::new(
                self.min.x.min(o.min.x),
                self.min.y.min(o.min.y),
                self.min.z.min(o.min.z),
            ),
            max: Vec3::new(
                self.max.x.max(o.max.x),
                self.max.y.max(o.max.y),
                self.max.z.max(o.max.z),
            ),
        }
    }

    pub fn contains_point(&self, p: Vec3<R>, tol: R) -> bool {
        p.x >= self.min.x - tol
            && p.x <= self.max.x + tol
            && p.y >= self.min.y - tol
            && p.y <= self.max.y + tol
            && p.z >= self.min.z - tol
            && p.z <= self.max.z + tol
    }

    /// Contains with every face moved inward by `margin` (strict interior test).
    pub fn contains_point_shrunk(&self, p: Vec3<R>, margin: R) -> bool {
        self.contains_point(p, -margin)
    }

    /// Box fully inside `outer`, allowing `tol` slack outward.
    pub fn inside(&self, outer: &Self, tol: R) -> bool {
        outer.contains_point(self.min, tol) && outer.contains_point(self.max, tol)
    }

    /// Euclidean distance from a point to the box (0 when inside).
    pub fn distance_to_point(&self, p: Vec3<R>) -> R {
        let dx = (self.min.x - p.x).max(R::zero()).max(p.x - self.max.x);
        let dy = (self.min.y - p.y).max(R::zero()).max(p.y - self.max.y);
        let dz = (self.min.z - p.z).max(R::zero()).max(p.z - self.max.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    /// Euclidean gap between two boxes (0 when touching or overlapping).
    pub fn distance_to(&self, o: &Self) -> R {
        let mut s = R::zero();
        for i in 0..3 {
            let gap = (o.min.component(i) - self.max.component(i))
                .max(self.min.component(i) - o.max.component(i))
                .max(R::zero());
            s = s + gap * gap;
        }
        s.sqrt()
    }

    /// Per-axis signed overlap: positive values mean the projections overlap
    /// by that much, negative values are the separation gap.
    pub fn axis_overlap(&self, o: &Self, i: usize) -> R {
        self.max.component(i).min(o.max.component(i))
            - self.min.component(i).max(o.min.component(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Aabb<f64> {
        Aabb::from_center_half(Vec3::zero(), Vec3::splat(0.5))
    }

    #[test]
    fn distance_outside_and_inside() {
        let b = unit();
        assert_eq!(b.distance_to_point(Vec3::of(0.0, 0.0, 0.0)), 0.0);
        assert!((b.distance_to_point(Vec3::of(3.5, 4.5, 0.0)) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn gap_between_boxes() {
        let a = unit();
        let b = Aabb::from_center_half(Vec3::of(2.0, 0.0, 0.0), Vec3::splat(0.5));
        assert!((a.distance_to(&b) - 1.0).abs() < 1e-12);
        assert_eq!(a.distance_to(&unit()), 0.0);
    }
}
