use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::scalar::Real;

/// 3-vector in meters (or unitless, for scales and directions).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Vec3<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        Self { x, y, z }
    }

    pub fn splat(v: R) -> Self {
        Self { x: v, y: v, z: v }
    }

    pub fn zero() -> Self {
        Self::splat(R::zero())
    }

    pub fn unit_x() -> Self {
        Self::new(R::one(), R::zero(), R::zero())
    }

    pub fn unit_y() -> Self {
        Self::new(R::zero(), R::one(), R::zero())
    }

    pub fn unit_z() -> Self {
        Self::new(R::zero(), R::zero(), R::one())
    }

    /// World up. The world frame is +Y-up throughout the engine.
    pub fn up() -> Self {
        Self::unit_y()
    }

    pub fn of(x: f64, y: f64, z: f64) -> Self {
        Self::new(R::of(x), R::of(y), R::of(z))
    }

    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_sq(self) -> R {
        self.dot(self)
    }

    pub fn norm(self) -> R {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        if n == R::zero() {
            self
        } else {
            self / n
        }
    }

    pub fn distance(self, o: Self) -> R {
        (self - o).norm()
    }

    pub fn scale(self, o: Self) -> Self {
        Self::new(self.x * o.x, self.y * o.y, self.z * o.z)
    }

    pub fn abs(self) -> Self {
        Self::new(self.x.abs(), self.y.abs(), self.z.abs())
    }

    pub fn min_component(self) -> R {
        self.x.min(self.y).min(self.z)
    }

    pub fn max_component(self) -> R {
        self.x.max(self.y).max(self.z)
    }

    pub fn component(self, i: usize) -> R {
        match i {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    pub fn with_component(mut self, i: usize, v: R) -> Self {
        match i {
            0 => self.x = v,
            1 => self.y = v,
            _ => self.z = v,
        }
        self
    }

    /// Index of the largest component by absolute value.
    pub fn argmax_abs(self) -> usize {
        let a = self.abs();
        if a.x >= a.y && a.x >= a.z {
            0
        } else if a.y >= a.z {
            1
        } else {
            2
        }
    }

    /// Any unit vector perpendicular to `self` (which must be nonzero).
    pub fn any_perpendicular(self) -> Self {
        let probe = if self.x.abs() < R::of(0.9) {
            Self::unit_x()
        } else {
            Self::unit_y()
        };
        self.cross(probe).normalized()
    }

    /// Angle to another vector in radians, in [0, pi].
    pub fn angle_to(self, o: Self) -> R {
        let d = self.normalized().dot(o.normalized());
        d.min(R::one()).max(-R::one()).acos()
    }
}

impl<R: Real> Add for Vec3<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Real> AddAssign for Vec3<R> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<R: Real> Sub for Vec3<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Real> SubAssign for Vec3<R> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<R: Real> Mul<R> for Vec3<R> {
    type Output = Self;
    fn mul(self, s: R) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<R: Real> Div<R> for Vec3<R> {
    type Output = Self;
    fn div(self, s: R) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

impl<R: Real> Neg for Vec3<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_follows_right_hand_rule() {
        let v: Vec3<f64> = Vec3::unit_x().cross(Vec3::unit_y());
        assert_eq!(v, Vec3::unit_z());
    }

    #[test]
    fn perpendicular_is_perpendicular() {
        for v in [
            Vec3::<f64>::unit_y(),
            Vec3::of(1.0, 2.0, 3.0),
            Vec3::of(0.99, 0.0, 0.0),
        ] {
            let p = v.any_perpendicular();
            assert!(v.dot(p).abs() < 1e-12);
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn works_in_f32_too() {
        let v: Vec3<f32> = Vec3::of(3.0, 4.0, 0.0);
        assert!((v.norm() - 5.0).abs() < 1e-6);
    }
}
