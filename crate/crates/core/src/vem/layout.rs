//! Local degrees of freedom.
//!
//! Order: per vertex (value, h_v d_x, h_v d_y); then the k_e value points of
//! every edge; then the k_n scaled normal derivatives h_e d_n of every edge;
//! then the moments h_E^-2 \int v m_j against M_{k-4}. Edge points are
//! listed in the element's traversal direction.

use crate::basis;
use crate::error::{Result, VemError};
use crate::quadrature::rules::gauss_lobatto;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DofKind {
    VertexValue { vertex: usize },
    VertexGradX { vertex: usize },
    VertexGradY { vertex: usize },
    EdgeValue { edge: usize, point: usize },
    EdgeNormal { edge: usize, point: usize },
    Moment { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofLayout {
    pub k: usize,
    /// Degree of the value trace, max(k, 3).
    pub r: usize,
    pub k_e: usize,
    pub k_n: usize,
    pub n_edges: usize,
    pub n_moments: usize,
}

/// (3 + k_e + k_n) N_e + (k - 3)(k - 2) / 2.
pub fn dof_count(k: usize, n_edges: usize) -> usize {
    let k_e = k.saturating_sub(3);
    let k_n = k - 2;
    (3 + k_e + k_n) * n_edges + basis::dim_signed(k as i64 - 4)
}

impl DofLayout {
    pub fn new(k: usize, n_edges: usize) -> Result<Self> {
        if k < 2 {
            return Err(VemError::Argument(format!("method order must be >= 2, got {k}")));
        }
        if n_edges < 2 {
            return Err(VemError::Argument(format!("element with {n_edges} edges")));
        }
        Ok(DofLayout {
            k,
            r: k.max(3),
            k_e: k.saturating_sub(3),
            k_n: k - 2,
            n_edges,
            n_moments: basis::dim_signed(k as i64 - 4),
        })
    }

    pub fn len(&self) -> usize {
        (3 + self.k_e + self.k_n) * self.n_edges + self.n_moments
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn vertex(&self, v: usize, component: usize) -> usize {
        3 * v + component
    }

    #[inline]
    pub fn edge_value(&self, e: usize, j: usize) -> usize {
        3 * self.n_edges + e * self.k_e + j
    }

    #[inline]
    pub fn edge_normal(&self, e: usize, j: usize) -> usize {
        (3 + self.k_e) * self.n_edges + e * self.k_n + j
    }

    #[inline]
    pub fn moment(&self, j: usize) -> usize {
        (3 + self.k_e + self.k_n) * self.n_edges + j
    }

    pub fn descriptors(&self) -> Vec<DofKind> {
        let mut out = Vec::with_capacity(self.len());
        for vertex in 0..self.n_edges {
            out.push(DofKind::VertexValue { vertex });
            out.push(DofKind::VertexGradX { vertex });
            out.push(DofKind::VertexGradY { vertex });
        }
        for edge in 0..self.n_edges {
            out.extend((0..self.k_e).map(|point| DofKind::EdgeValue { edge, point }));
        }
        for edge in 0..self.n_edges {
            out.extend((0..self.k_n).map(|point| DofKind::EdgeNormal { edge, point }));
        }
        out.extend((0..self.n_moments).map(|index| DofKind::Moment { index }));
        out
    }

    /// Reference parameters of the value points: interior nodes of the
    /// (k-1)-point Gauss-Lobatto rule.
    pub fn value_nodes(&self) -> &'static [f64] {
        if self.k_e == 0 {
            &[]
        } else {
            gauss_lobatto(self.k - 1).expect("k >= 4").interior_nodes()
        }
    }

    /// Reference parameters of the normal points: interior nodes of the
    /// k-point Gauss-Lobatto rule.
    pub fn normal_nodes(&self) -> &'static [f64] {
        gauss_lobatto(self.k).expect("k >= 2").interior_nodes()
    }
}
