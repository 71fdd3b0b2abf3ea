//! Boundary curves and edge parametrizations.
//!
//! A [`Curve`] is a regular, injective map t -> gamma(t) over a closed
//! parameter interval with closed-form first and second derivatives. Edges
//! of a mesh are either straight segments (affine parametrization over the
//! chord) or sub-arcs [t0, t1] of a registered curve; both are exposed
//! through [`EdgeParam`], which reparametrizes the edge affinely over
//! tau in [-1, 1] in the direction the edge is traversed.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::Vector2;

use crate::error::{Result, VemError};
use crate::quadrature::rules::gauss_legendre;

/// Points and vectors of the plane.
pub type Vec2 = Vector2<f64>;

/// Rotation by -90 degrees. Maps the CCW tangent to the outward normal.
#[inline]
pub fn rotate_cw(v: Vec2) -> Vec2 {
    Vec2::new(v.y, -v.x)
}

/// z-component of the cross product.
#[inline]
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// User-supplied parametrization for curves that are not built in.
pub trait Parametrization: Send + Sync + fmt::Debug {
    fn eval(&self, t: f64) -> Vec2;
    fn deriv1(&self, t: f64) -> Vec2;
    fn deriv2(&self, t: f64) -> Vec2;
}

#[derive(Debug, Clone)]
pub enum CurveKind {
    /// gamma(t) = (t, offset + amplitude * sin(frequency * pi * t)).
    SineGraph {
        amplitude: f64,
        frequency: f64,
        offset: f64,
    },
    /// Affine segment, gamma(a) = start and gamma(b) = end.
    Segment { start: Vec2, end: Vec2 },
    /// Natural cubic spline through points at uniformly spaced parameters.
    Spline(CubicSpline),
    Custom(Arc<dyn Parametrization>),
}

/// A named parametrized curve.
#[derive(Debug, Clone)]
pub struct Curve {
    pub id: String,
    pub kind: CurveKind,
    pub t_range: (f64, f64),
}

impl Curve {
    pub fn new(id: impl Into<String>, kind: CurveKind, t_range: (f64, f64)) -> Result<Self> {
        let (a, b) = t_range;
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(VemError::Argument(format!("invalid curve interval [{a}, {b}]")));
        }
        if let CurveKind::Spline(s) = &kind {
            if s.len() < 2 {
                return Err(VemError::Argument("spline needs at least two points".into()));
            }
        }
        Ok(Curve { id: id.into(), kind, t_range })
    }

    pub fn sine_graph(id: impl Into<String>, amplitude: f64, frequency: f64, offset: f64) -> Self {
        Curve {
            id: id.into(),
            kind: CurveKind::SineGraph { amplitude, frequency, offset },
            t_range: (0.0, 1.0),
        }
    }

    /// Bottom boundary of the sine channel, (t, sin(pi t)/20).
    pub fn channel_bottom() -> Self {
        Self::sine_graph("bottom", 0.05, 1.0, 0.0)
    }

    /// Top boundary of the sine channel, (t, 1 + sin(3 pi t)/20).
    pub fn channel_top() -> Self {
        Self::sine_graph("top", 0.05, 3.0, 1.0)
    }

    pub fn segment(id: impl Into<String>, start: Vec2, end: Vec2) -> Self {
        Curve { id: id.into(), kind: CurveKind::Segment { start, end }, t_range: (0.0, 1.0) }
    }

    pub fn custom(
        id: impl Into<String>,
        param: Arc<dyn Parametrization>,
        t_range: (f64, f64),
    ) -> Result<Self> {
        Self::new(id, CurveKind::Custom(param), t_range)
    }

    /// True when the image is a straight line, so edges on it are chords.
    pub fn is_straight(&self) -> bool {
        match &self.kind {
            CurveKind::SineGraph { amplitude, .. } => *amplitude == 0.0,
            CurveKind::Segment { .. } => true,
            _ => false,
        }
    }

    pub fn contains(&self, t: f64) -> bool {
        let (a, b) = self.t_range;
        let tol = 1e-12 * (b - a).abs().max(1.0);
        t >= a - tol && t <= b + tol
    }

    fn check(&self, t: f64) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(VemError::Domain { t, a: self.t_range.0, b: self.t_range.1 })
        }
    }

    /// gamma(t), checked against the parameter interval.
    pub fn eval(&self, t: f64) -> Result<Vec2> {
        self.check(t)?;
        Ok(self.point(t))
    }

    /// gamma(t) without the interval check.
    pub fn point(&self, t: f64) -> Vec2 {
        match &self.kind {
            CurveKind::SineGraph { amplitude, frequency, offset } => {
                Vec2::new(t, offset + amplitude * (frequency * PI * t).sin())
            }
            CurveKind::Segment { start, end } => {
                let s = (t - self.t_range.0) / (self.t_range.1 - self.t_range.0);
                start + (end - start) * s
            }
            CurveKind::Spline(s) => s.eval(self.spline_param(t)),
            CurveKind::Custom(p) => p.eval(t),
        }
    }

    /// d gamma / dt.
    pub fn d1(&self, t: f64) -> Vec2 {
        match &self.kind {
            CurveKind::SineGraph { amplitude, frequency, .. } => {
                let w = frequency * PI;
                Vec2::new(1.0, amplitude * w * (w * t).cos())
            }
            CurveKind::Segment { start, end } => (end - start) / (self.t_range.1 - self.t_range.0),
            CurveKind::Spline(s) => s.deriv1(self.spline_param(t)) * self.spline_scale(),
            CurveKind::Custom(p) => p.deriv1(t),
        }
    }

    /// d^2 gamma / dt^2.
    pub fn d2(&self, t: f64) -> Vec2 {
        match &self.kind {
            CurveKind::SineGraph { amplitude, frequency, .. } => {
                let w = frequency * PI;
                Vec2::new(0.0, -amplitude * w * w * (w * t).sin())
            }
            CurveKind::Segment { .. } => Vec2::zeros(),
            CurveKind::Spline(s) => s.deriv2(self.spline_param(t)) * self.spline_scale().powi(2),
            CurveKind::Custom(p) => p.deriv2(t),
        }
    }

    // spline knots sit at integer parameters 0..n-1
    fn spline_param(&self, t: f64) -> f64 {
        (t - self.t_range.0) * self.spline_scale()
    }

    fn spline_scale(&self) -> f64 {
        match &self.kind {
            CurveKind::Spline(s) => (s.len() - 1) as f64 / (self.t_range.1 - self.t_range.0),
            _ => 1.0,
        }
    }
}

/// Unit tangent, outward unit normal and parametric speed at a point of an edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeFrame {
    pub tangent: Vec2,
    pub normal: Vec2,
    pub speed: f64,
}

impl EdgeFrame {
    /// Frame from a traversal-direction derivative vector.
    pub fn from_derivative(d: Vec2) -> Option<Self> {
        let speed = d.norm();
        if speed == 0.0 || !speed.is_finite() {
            return None;
        }
        let tangent = d / speed;
        Some(EdgeFrame { tangent, normal: rotate_cw(tangent), speed })
    }

    /// Frame of the straight edge p0 -> p1 traversed counterclockwise.
    pub fn for_segment(p0: Vec2, p1: Vec2) -> Option<Self> {
        Self::from_derivative(p1 - p0)
    }
}

/// Frame of `curve` at `t`. `forward` is false when the edge is traversed
/// against increasing t. The normal is the tangent rotated by -90 degrees,
/// which is outward for counterclockwise traversal.
pub fn frame_at(curve: &Curve, t: f64, forward: bool) -> Result<EdgeFrame> {
    curve.check(t)?;
    let d = curve.d1(t);
    let d = if forward { d } else { -d };
    EdgeFrame::from_derivative(d).ok_or(VemError::DegenerateParametrization { t })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcQuantities {
    /// |gamma(t1) - gamma(t0)|, the edge size h_e.
    pub chord_length: f64,
    pub arc_length: f64,
}

const ARC_PANELS: usize = 8;
const ARC_POINTS: usize = 16;

/// Chord and arc length of the sub-arc [t0, t1].
pub fn arc_quantities(curve: &Curve, t0: f64, t1: f64) -> Result<ArcQuantities> {
    if !(t0 < t1) {
        return Err(VemError::Argument(format!("arc interval needs t0 < t1, got [{t0}, {t1}]")));
    }
    curve.check(t0)?;
    curve.check(t1)?;
    let chord_length = (curve.point(t1) - curve.point(t0)).norm();
    let rule = gauss_legendre(ARC_POINTS);
    let panel = (t1 - t0) / ARC_PANELS as f64;
    let mut arc_length = 0.0;
    for p in 0..ARC_PANELS {
        let mid = t0 + (p as f64 + 0.5) * panel;
        arc_length += 0.5 * panel * rule.integrate(|x| curve.d1(mid + 0.5 * panel * x).norm());
    }
    Ok(ArcQuantities { chord_length, arc_length })
}

/// Natural cubic spline through `points`, parametrized with knots at
/// 0, 1, ..., n-1.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    points: Vec<Vec2>,
    // second derivatives at the knots
    moments: Vec<Vec2>,
}

impl CubicSpline {
    pub fn new(points: Vec<Vec2>) -> Self {
        let n = points.len();
        let mut moments = vec![Vec2::zeros(); n];
        if n > 2 {
            // tridiagonal system M_{i-1} + 4 M_i + M_{i+1} = 6 (P_{i+1} - 2 P_i + P_{i-1})
            let m = n - 2;
            let mut diag = vec![4.0; m];
            let mut rhs: Vec<Vec2> =
                (1..n - 1).map(|i| (points[i + 1] - points[i] * 2.0 + points[i - 1]) * 6.0).collect();
            for i in 1..m {
                let w = 1.0 / diag[i - 1];
                diag[i] -= w;
                let prev = rhs[i - 1];
                rhs[i] -= prev * w;
            }
            let mut x = vec![Vec2::zeros(); m];
            x[m - 1] = rhs[m - 1] / diag[m - 1];
            for i in (0..m - 1).rev() {
                x[i] = (rhs[i] - x[i + 1]) / diag[i];
            }
            moments[1..n - 1].copy_from_slice(&x);
        }
        CubicSpline { points, moments }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    fn locate(&self, s: f64) -> (usize, f64) {
        let last = self.points.len() - 2;
        let i = (s.floor().max(0.0) as usize).min(last);
        (i, s - i as f64)
    }

    fn eval(&self, s: f64) -> Vec2 {
        let (i, u) = self.locate(s);
        let (p0, p1) = (self.points[i], self.points[i + 1]);
        let (m0, m1) = (self.moments[i], self.moments[i + 1]);
        let v = 1.0 - u;
        p0 * v + p1 * u + (m0 * (v * v * v - v) + m1 * (u * u * u - u)) / 6.0
    }

    fn deriv1(&self, s: f64) -> Vec2 {
        let (i, u) = self.locate(s);
        let (p0, p1) = (self.points[i], self.points[i + 1]);
        let (m0, m1) = (self.moments[i], self.moments[i + 1]);
        let v = 1.0 - u;
        p1 - p0 + (m1 * (3.0 * u * u - 1.0) - m0 * (3.0 * v * v - 1.0)) / 6.0
    }

    fn deriv2(&self, s: f64) -> Vec2 {
        let (i, u) = self.locate(s);
        self.moments[i] * (1.0 - u) + self.moments[i + 1] * u
    }
}

/// Geometry of a single edge as seen in its traversal direction.
#[derive(Debug, Clone)]
pub enum EdgeShape {
    Straight,
    /// Sub-arc of `curve`; gamma(t_start) is the first vertex and
    /// gamma(t_end) the second. t_start > t_end means the edge runs
    /// against the curve orientation.
    Arc { curve: Arc<Curve>, t_start: f64, t_end: f64 },
}

/// An edge parametrized affinely over tau in [-1, 1], from `start` to `end`.
#[derive(Debug, Clone)]
pub struct EdgeParam {
    pub start: Vec2,
    pub end: Vec2,
    pub shape: EdgeShape,
}

impl EdgeParam {
    pub fn straight(start: Vec2, end: Vec2) -> Self {
        EdgeParam { start, end, shape: EdgeShape::Straight }
    }

    /// Sub-arc from gamma(t_start) to gamma(t_end).
    pub fn arc(curve: Arc<Curve>, t_start: f64, t_end: f64) -> Self {
        let start = curve.point(t_start);
        let end = curve.point(t_end);
        EdgeParam { start, end, shape: EdgeShape::Arc { curve, t_start, t_end } }
    }

    pub fn is_curved(&self) -> bool {
        matches!(self.shape, EdgeShape::Arc { .. })
    }

    pub fn reversed(&self) -> Self {
        let shape = match &self.shape {
            EdgeShape::Straight => EdgeShape::Straight,
            EdgeShape::Arc { curve, t_start, t_end } => {
                EdgeShape::Arc { curve: curve.clone(), t_start: *t_end, t_end: *t_start }
            }
        };
        EdgeParam { start: self.end, end: self.start, shape }
    }

    /// Distance between the endpoints, h_e.
    pub fn chord_length(&self) -> f64 {
        (self.end - self.start).norm()
    }

    #[inline]
    fn curve_param(t_start: f64, t_end: f64, tau: f64) -> (f64, f64) {
        let half = 0.5 * (t_end - t_start);
        (0.5 * (t_start + t_end) + half * tau, half)
    }

    pub fn point(&self, tau: f64) -> Vec2 {
        match &self.shape {
            EdgeShape::Straight => (self.start + self.end) * 0.5 + (self.end - self.start) * (0.5 * tau),
            EdgeShape::Arc { curve, t_start, t_end } => {
                if tau == -1.0 {
                    return self.start;
                }
                if tau == 1.0 {
                    return self.end;
                }
                curve.point(Self::curve_param(*t_start, *t_end, tau).0)
            }
        }
    }

    /// d point / d tau.
    pub fn d1(&self, tau: f64) -> Vec2 {
        match &self.shape {
            EdgeShape::Straight => (self.end - self.start) * 0.5,
            EdgeShape::Arc { curve, t_start, t_end } => {
                let (t, half) = Self::curve_param(*t_start, *t_end, tau);
                curve.d1(t) * half
            }
        }
    }

    /// d^2 point / d tau^2.
    pub fn d2(&self, tau: f64) -> Vec2 {
        match &self.shape {
            EdgeShape::Straight => Vec2::zeros(),
            EdgeShape::Arc { curve, t_start, t_end } => {
                let (t, half) = Self::curve_param(*t_start, *t_end, tau);
                curve.d2(t) * (half * half)
            }
        }
    }

    pub fn frame(&self, tau: f64) -> Result<EdgeFrame> {
        EdgeFrame::from_derivative(self.d1(tau)).ok_or(VemError::DegenerateParametrization { t: tau })
    }

    /// Arc length via the edge's own parametrization.
    pub fn length(&self) -> f64 {
        match &self.shape {
            EdgeShape::Straight => self.chord_length(),
            EdgeShape::Arc { curve, t_start, t_end } => {
                let (a, b) = if t_start < t_end { (*t_start, *t_end) } else { (*t_end, *t_start) };
                arc_quantities(curve, a, b).map(|q| q.arc_length).unwrap_or(f64::NAN)
            }
        }
    }
}
