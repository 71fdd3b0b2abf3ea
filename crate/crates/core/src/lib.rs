// negated comparisons are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod assembly;
pub mod basis;
pub mod curve;
pub mod error;
pub mod polygon;
pub mod postprocess;
pub mod problem;
pub mod mesh;
pub mod quadrature;
pub mod solver;
pub mod study;
pub mod vem;

pub use curve::{Curve, CurveKind, EdgeParam, Vec2};
pub use error::{Result, VemError};
pub use polygon::CurvedPolygon;
