//! Local stiffness a_h(v, w) = a(Pi v, Pi w) + S((I - Pi) v, (I - Pi) w).

use nalgebra::{DMatrix, SymmetricEigen};

use super::element::VemElement;
use super::projector::{ritz_projector, Projector};
use super::stabilization::{stabilization_rows, StabilizationRows};
use crate::error::{Result, VemError};

/// Eigenvalues below this fraction of the largest count as zero; below its
/// negative the matrix is reported as indefinite.
pub const KERNEL_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct LocalOperators {
    pub projector: Projector,
    pub stab_rows: StabilizationRows,
    /// P^T G P.
    pub consistency: DMatrix<f64>,
    /// S((I - Pi) ., (I - Pi) .).
    pub stabilization: DMatrix<f64>,
    /// consistency + stabilization.
    pub stiffness: DMatrix<f64>,
}

/// Number of eigenvalues of the symmetric matrix `a` within the kernel
/// tolerance; errors on significantly negative ones.
pub fn kernel_dimension(a: &DMatrix<f64>) -> Result<usize> {
    let eig = SymmetricEigen::new(a.clone()).eigenvalues;
    let max = eig.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 {
        return Ok(a.nrows());
    }
    let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -KERNEL_TOL * max {
        return Err(VemError::ElementDegeneracy(format!(
            "local stiffness is indefinite: eigenvalue {min:e} vs norm {max:e}"
        )));
    }
    Ok(eig.iter().filter(|&&v| v.abs() <= KERNEL_TOL * max).count())
}

/// Builds the local operators without the spectral checks.
pub fn local_operators(el: &VemElement) -> Result<LocalOperators> {
    let projector = ritz_projector(el)?;
    let p = &projector.matrix;
    let consistency = p.tr_mul(&(&projector.gram * p));
    let consistency = (&consistency + consistency.transpose()) * 0.5;
    let stab_rows = stabilization_rows(el);
    let stabilization = stab_rows.stabilized(p);
    let stiffness = &consistency + &stabilization;
    Ok(LocalOperators { projector, stab_rows, consistency, stabilization, stiffness })
}

/// Local operators with symmetry, PSD and kernel checks: the kernel may
/// not exceed P_1, and must equal it when every edge is straight.
pub fn local_stiffness(el: &VemElement) -> Result<LocalOperators> {
    let ops = local_operators(el)?;
    let kernel = kernel_dimension(&ops.stiffness)?;
    if kernel > 3 || (!el.poly.has_curved_edge() && kernel != 3) {
        return Err(VemError::ElementDegeneracy(format!(
            "local stiffness kernel has dimension {kernel} (expected {} 3)",
            if el.poly.has_curved_edge() { "at most" } else { "exactly" }
        )));
    }
    Ok(ops)
}
