use std::ops::Mul;

use super::vec::Vec3;
use crate::scalar::Real;

/// Unit quaternion rotation (w + xi + yj + zk).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quat<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Quat<R> {
    pub fn identity() -> Self {
        Self {
            w: R::one(),
            x: R::zero(),
            y: R::zero(),
            z: R::zero(),
        }
    }

    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_axis_angle(axis: Vec3<R>, radians: R) -> Self {
        let axis = axis.normalized();
        let half = radians.half();
        let s = half.sin();
        Self {
            w: half.cos(),
            x: axis.x * s,
            y: axis.y * s,
            z: axis.z * s,
        }
    }

    /// Extrinsic X-then-Y-then-Z rotation from degrees, the convention the
    /// scene file format uses for `rotation: euler`.
    pub fn from_euler_deg(x_deg: R, y_deg: R, z_deg: R) -> Self {
        let rx = Self::from_axis_angle(Vec3::unit_x(), x_deg.to_radians_x());
        let ry = Self::from_axis_angle(Vec3::unit_y(), y_deg.to_radians_x());
        let rz = Self::from_axis_angle(Vec3::unit_z(), z_deg.to_radians_x());
        rz * ry * rx
    }

    /// Shortest rotation carrying `from` onto `to` (both need not be unit).
    pub fn rotation_between(from: Vec3<R>, to: Vec3<R>) -> Self {
        let f = from.normalized();
        let t = to.normalized();
        let d = f.dot(t);
        if d > R::of(1.0 - 1e-12) {
            return Self::identity();
        }
        if d < R::of(-1.0 + 1e-12) {
            // Antiparallel: rotate half a turn about any perpendicular axis.
            return Self::from_axis_angle(f.any_perpendicular(), R::PI());
        }
        let axis = f.cross(t);
        Self::from_axis_angle(axis, d.min(R::one()).max(-R::one()).acos())
    }

    pub fn norm(self) -> R {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        Self {
            w: self.w / n,
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        }
    }

    pub fn conjugate(self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    pub fn rotate(self, v: Vec3<R>) -> Vec3<R> {
        // v' = v + 2 q_vec x (q_vec x v + w v)
        let qv = Vec3::new(self.x, self.y, self.z);
        let t = qv.cross(v) * R::of(2.0);
        v + t * self.w + qv.cross(t)
    }

    /// Rotation angle in radians, in [0, pi].
    pub fn angle(self) -> R {
        let w = self.w.abs().min(R::one());
        w.acos() * R::of(2.0)
    }

    /// Angle of the relative rotation from `self` to `other`, in radians.
    pub fn angle_between(self, other: Self) -> R {
        (self.conjugate() * other).angle()
    }

    /// Step from `self` toward `goal` by at most `max_radians` about the fixed
    /// relative axis; returns the new rotation and whether the goal was reached.
    pub fn step_toward(self, goal: Self, max_radians: R) -> (Self, bool) {
        let rel = (self.conjugate() * goal).normalized();
        let angle = rel.angle();
        if angle <= max_radians {
            return (goal, true);
        }
        let qv = Vec3::new(rel.x, rel.y, rel.z);
        let axis = if qv.norm() == R::zero() {
            Vec3::unit_y()
        } else {
            qv.normalized()
        };
        // Keep the short way round.
        let axis = if rel.w < R::zero() { -axis } else { axis };
        let step = Self::from_axis_angle(axis, max_radians);
        ((self * step).normalized(), false)
    }
}

impl<R: Real> Mul for Quat<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Vec3<f64>, b: Vec3<f64>) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn quarter_turn_about_y_maps_x_to_minus_z() {
        let q = Quat::from_axis_angle(Vec3::<f64>::unit_y(), std::f64::consts::FRAC_PI_2);
        assert!(close(q.rotate(Vec3::unit_x()), -Vec3::unit_z()));
    }

    #[test]
    fn rotation_between_recovers_target() {
        let from = Vec3::<f64>::of(1.0, 0.0, 0.0);
        let to = Vec3::of(0.0, 1.0, 0.0);
        let q = Quat::rotation_between(from, to);
        assert!(close(q.rotate(from), to));
        // Antiparallel case.
        let q = Quat::rotation_between(Vec3::<f64>::unit_x(), -Vec3::unit_x());
        assert!(close(q.rotate(Vec3::unit_x()), -Vec3::unit_x()));
    }

    #[test]
    fn step_toward_reaches_goal_monotonically() {
        let start = Quat::<f64>::identity();
        let goal = Quat::from_axis_angle(Vec3::unit_z(), 1.2);
        let mut q = start;
        let mut steps = 0;
        loop {
            let (next, done) = q.step_toward(goal, 0.1);
            q = next;
            steps += 1;
            if done {
                break;
            }
            assert!(steps < 100);
        }
        assert!(q.angle_between(goal) < 1e-9);
        assert_eq!(steps, 12);
    }

    #[test]
    fn rotation_preserves_length() {
        let q = Quat::<f64>::from_euler_deg(10.0, 77.0, -33.0);
        let v = Vec3::of(0.3, -1.2, 2.0);
        assert!((q.rotate(v).norm() - v.norm()).abs() < 1e-12);
    }
}
