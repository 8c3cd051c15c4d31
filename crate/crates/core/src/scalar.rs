//! Scalar abstraction: the whole engine is generic over the floating-point
//! type. `f64` is the shipped default (see the aliases at the crate root);
//! `f32` works anywhere the tolerances in [`crate::config::SimConfig`] remain
//! representable.

use std::fmt;

/// Floating-point scalar the geometry and simulation code is written against.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Convert a literal. Panics only if the target type cannot represent
    /// any finite approximation of `v`, which cannot happen for f32/f64.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal must convert")
    }

    /// Widen to f64 for formatting and serialization.
    fn to_f64x(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("scalar widens to f64")
    }

    fn half(self) -> Self {
        self / Self::of(2.0)
    }

    fn to_radians_x(self) -> Self {
        self * Self::PI() / Self::of(180.0)
    }

    fn to_degrees_x(self) -> Self {
        self * Self::of(180.0) / Self::PI()
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_conversion_roundtrips() {
        assert_eq!(f64::of(0.05), 0.05);
        assert_eq!(f32::of(0.5), 0.5f32);
        assert_eq!(0.25f64.to_f64x(), 0.25);
    }

    #[test]
    fn degree_radian_conversion() {
        let d: f64 = 180.0;
        assert!((d.to_radians_x() - std::f64::consts::PI).abs() < 1e-12);
        assert!((std::f64::consts::PI.to_degrees_x() - 180.0).abs() < 1e-12);
    }
}
