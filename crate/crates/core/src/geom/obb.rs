//! Oriented boxes with separating-axis tests, the workhorse of all contact
//! and containment queries. Every solid in the engine is a box (possibly
//! with a box-shaped cavity carved out), so exact SAT queries cover contact,
//! penetration depth, and straight-line sweeps with no mesh machinery.

use super::aabb::Aabb;
use super::quat::Quat;
use super::vec::Vec3;
use crate::scalar::Real;

/// Box with arbitrary position and orientation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Obb<R> {
    pub center: Vec3<R>,
    pub rotation: Quat<R>,
    pub half: Vec3<R>,
}

impl<R: Real> Obb<R> {
    pub fn new(center: Vec3<R>, rotation: Quat<R>, half: Vec3<R>) -> Self {
        Self {
            center,
            rotation,
            half,
        }
    }

    pub fn axis_aligned(center: Vec3<R>, half: Vec3<R>) -> Self {
        Self::new(center, Quat::identity(), half)
    }

    pub fn from_aabb(b: &Aabb<R>) -> Self {
        Self::axis_aligned(b.center(), b.half_extents())
    }

    pub fn axes(&self) -> [Vec3<R>; 3] {
        [
            self.rotation.rotate(Vec3::unit_x()),
            self.rotation.rotate(Vec3::unit_y()),
            self.rotation.rotate(Vec3::unit_z()),
        ]
    }

    pub fn volume(&self) -> R {
        let e = self.half * R::of(2.0);
        e.x * e.y * e.z
    }

    pub fn is_degenerate(&self) -> bool {
        self.half.min_component() <= R::zero()
    }

    pub fn to_world(&self, object_point: Vec3<R>) -> Vec3<R> {
        self.center + self.rotation.rotate(object_point)
    }

    pub fn to_object(&self, world_point: Vec3<R>) -> Vec3<R> {
        self.rotation.conjugate().rotate(world_point - self.center)
    }

    pub fn corners(&self) -> [Vec3<R>; 8] {
        let h = self.half;
        let mut out = [Vec3::zero(); 8];
        let mut i = 0;
        for sx in [-R::one(), R::one()] {
            for sy in [-R::one(), R::one()] {
                for sz in [-R::one(), R::one()] {
                    out[i] = self.to_world(Vec3::new(h.x * sx, h.y * sy, h.z * sz));
                    i += 1;
                }
            }
        }
        out
    }

    pub fn world_aabb(&self) -> Aabb<R> {
        // Extent along each world axis is the absolute projection of the
        // rotated half extents.
        let axes = self.axes();
        let mut half = Vec3::zero();
        for i in 0..3 {
            let mut e = R::zero();
            for (k, a) in axes.iter().enumerate() {
                e = e + self.half.component(k) * a.component(i).abs();
            }
            half = half.with_component(i, e);
        }
        Aabb::from_center_half(self.center, half)
    }

    pub fn contains_point(&self, p: Vec3<R>, tol: R) -> bool {
        let q = self.to_object(p).abs();
        q.x <= self.half.x + tol && q.y <= self.half.y + tol && q.z <= self.half.z + tol
    }

    /// Half length of the box's projection onto a unit axis.
    pub fn projected_radius(&self, axis: Vec3<R>) -> R {
        let a = self.axes();
        self.half.x * a[0].dot(axis).abs()
            + self.half.y * a[1].dot(axis).abs()
            + self.half.z * a[2].dot(axis).abs()
    }

    fn projection(&self, axis: Vec3<R>) -> (R, R) {
        let c = self.center.dot(axis);
        let r = self.projected_radius(axis);
        (c - r, c + r)
    }

    /// True when every local axis maps onto a world axis within `angle_slack`
    /// radians, i.e. the box is an AABB up to numerical noise.
    pub fn is_axis_aligned(&self, angle_slack: R) -> bool {
        let cos_ok = angle_slack.cos();
        self.axes()
            .iter()
            .all(|a| a.abs().max_component() >= cos_ok)
    }

    /// Distance from a point to the box surface (0 when inside).
    pub fn distance_to_point(&self, p: Vec3<R>) -> R {
        let q = self.to_object(p);
        let local = Aabb::from_center_half(Vec3::zero(), self.half);
        local.distance_to_point(q)
    }
}

/// The 15 candidate separating axes of an OBB pair: 3 + 3 face normals and
/// the 9 edge-edge cross products. Near-degenerate cross products are dropped.
fn sat_axes<R: Real>(a: &Obb<R>, b: &Obb<R>) -> Vec<Vec3<R>> {
    let aa = a.axes();
    let bb = b.axes();
    let mut axes = Vec::with_capacity(15);
    axes.extend_from_slice(&aa);
    axes.extend_from_slice(&bb);
    for i in 0..3 {
        for j in 0..3 {
            let c = aa[i].cross(bb[j]);
            if c.norm_sq() > R::of(1e-12) {
                axes.push(c.normalized());
            }
        }
    }
    axes
}

/// Depth of interpenetration between two boxes: `None` when separated,
/// otherwise the smallest translation that would separate them (standard
/// SAT minimum overlap).
pub fn penetration_depth<R: Real>(a: &Obb<R>, b: &Obb<R>) -> Option<R> {
    let mut depth = R::infinity();
    for axis in sat_axes(a, b) {
        let (a0, a1) = a.projection(axis);
        let (b0, b1) = b.projection(axis);
        let overlap = a1.min(b1) - a0.max(b0);
        if overlap < R::zero() {
            return None;
        }
        depth = depth.min(overlap);
    }
    Some(depth)
}

/// First time of contact when `moving` translates along unit `dir`, against
/// the static box. Returns `Some(0)` when already touching or overlapping,
/// `None` when the sweep never makes contact.
pub fn sweep_contact<R: Real>(moving: &Obb<R>, dir: Vec3<R>, fixed: &Obb<R>) -> Option<R> {
    let mut t_enter = R::neg_infinity();
    let mut t_exit = R::infinity();
    for axis in sat_axes(moving, fixed) {
        let speed = dir.dot(axis);
        let (a0, a1) = moving.projection(axis);
        let (b0, b1) = fixed.projection(axis);
        if speed.abs() < R::of(1e-12) {
            if a1 < b0 || b1 < a0 {
                return None; // separated on a stationary axis forever
            }
            continue;
        }
        let mut e = (b0 - a1) / speed;
        let mut x = (b1 - a0) / speed;
        if e > x {
            std::mem::swap(&mut e, &mut x);
        }
        t_enter = t_enter.max(e);
        t_exit = t_exit.min(x);
    }
    if t_enter > t_exit || t_exit < R::zero() {
        return None;
    }
    Some(t_enter.max(R::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separated_boxes_have_no_penetration() {
        let a = Obb::<f64>::axis_aligned(Vec3::zero(), Vec3::splat(0.5));
        let b = Obb::axis_aligned(Vec3::of(5.0, 0.0, 0.0), Vec3::splat(0.5));
        assert_eq!(penetration_depth(&a, &b), None);
    }

    #[test]
    fn coincident_boxes_penetrate_fully() {
        let a = Obb::<f64>::axis_aligned(Vec3::zero(), Vec3::splat(0.5));
        let d = penetration_depth(&a, &a).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rotated_box_world_aabb_grows() {
        let q = Quat::from_axis_angle(Vec3::<f64>::unit_y(), std::f64::consts::FRAC_PI_4);
        let b = Obb::new(Vec3::zero(), q, Vec3::splat(0.5));
        let aabb = b.world_aabb();
        let expect = 0.5 * 2.0f64.sqrt();
        assert!((aabb.max.x - expect).abs() < 1e-12);
        assert!((aabb.max.y - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sweep_down_finds_drop_distance() {
        let cube = Obb::<f64>::axis_aligned(Vec3::of(0.0, 3.0, 0.0), Vec3::splat(0.5));
        let floor = Obb::axis_aligned(Vec3::of(0.0, -0.05, 0.0), Vec3::of(5.0, 0.05, 5.0));
        let t = sweep_contact(&cube, Vec3::of(0.0, -1.0, 0.0), &floor).unwrap();
        assert!((t - 2.5).abs() < 1e-12);
    }

    #[test]
    fn sweep_misses_laterally_offset_box() {
        let cube = Obb::<f64>::axis_aligned(Vec3::of(4.0, 3.0, 0.0), Vec3::splat(0.5));
        let block = Obb::axis_aligned(Vec3::of(0.0, 0.5, 0.0), Vec3::splat(0.5));
        assert_eq!(sweep_contact(&cube, Vec3::of(0.0, -1.0, 0.0), &block), None);
    }

    #[test]
    fn sweep_from_overlap_reports_zero() {
        let a = Obb::<f64>::axis_aligned(Vec3::of(0.0, 0.2, 0.0), Vec3::splat(0.5));
        let b = Obb::axis_aligned(Vec3::zero(), Vec3::splat(0.5));
        assert_eq!(sweep_contact(&a, Vec3::of(0.0, -1.0, 0.0), &b), Some(0.0));
    }

    #[test]
    fn axis_alignment_detection() {
        let aligned = Obb::<f64>::axis_aligned(Vec3::zero(), Vec3::splat(1.0));
        assert!(aligned.is_axis_aligned(1e-6));
        let quarter = Obb::new(
            Vec3::zero(),
            Quat::from_axis_angle(Vec3::unit_z(), std::f64::consts::FRAC_PI_2),
            Vec3::splat(1.0),
        );
        assert!(quarter.is_axis_aligned(1e-6));
        let tilted = Obb::new(
            Vec3::zero(),
            Quat::from_axis_angle(Vec3::unit_z(), 0.3),
            Vec3::splat(1.0),
        );
        assert!(!tilted.is_axis_aligned(1e-6));
    }
}
