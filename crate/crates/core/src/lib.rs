//! Headless semantic simulation engine: controlled-English motion sentences
//! are parsed, grounded against a 3D scene of box-shaped object instances,
//! compiled into small-step event programs, and run; results are reported
//! qualitatively as RCC8 relations plus a metric satisfaction distance.
//! Linguistically unspecified parameters (the direction of "the ball
//! rolled") are resolved by seeded constraint-filtered Monte-Carlo sampling.
//!
//! All math is generic over the scalar type via [`scalar::Real`]; the
//! aliases below fix the shipped engine to `f64`.

pub mod geom;
pub mod textfmt;
pub mod voxicon;
pub mod rcc;
pub mod region;
pub mod scalar;

pub use scalar::Real;

/// Scalar the shipped engine and CLI run on.
pub type Scalar = f64;

pub type Vec3 = geom::Vec3<Scalar>;
pub type Quat = geom::Quat<Scalar>;
pub type Aabb = geom::Aabb<Scalar>;
pub type Obb = geom::Obb<Scalar>;
pub type RegionApprox = region::RegionApprox<Scalar>;
