//! Sparse SPD solve: reverse Cuthill-McKee ordering followed by an
//! envelope (variable-band) Cholesky factorization.

use std::io::Write;
use std::path::Path;

use sprs::{CsMat, TriMat};

use crate::error::{Result, VemError};

/// Relative residual above which one refinement step is taken.
const REFINE_TOL: f64 = 1e-12;

/// Reduced linear system A U = F on the free DoFs.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    /// Symmetric, both triangles stored.
    pub matrix: CsMat<f64>,
    pub rhs: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub u: Vec<f64>,
    /// ||F - A U|| / ||F|| (0 when F = 0).
    pub residual: f64,
    pub refined: bool,
}

/// Lower-triangular envelope factor in a permuted ordering.
#[derive(Debug, Clone)]
pub struct EnvelopeCholesky {
    /// perm[new] = old.
    perm: Vec<usize>,
    /// First stored column of each row of L.
    first: Vec<usize>,
    /// Offset of row i; row i holds columns first[i]..=i.
    start: Vec<usize>,
    values: Vec<f64>,
}

impl EnvelopeCholesky {
    pub fn factor(a: &CsMat<f64>) -> Result<Self> {
        let n = a.rows();
        if a.cols() != n {
            return Err(VemError::Argument(format!("matrix is {}x{}", n, a.cols())));
        }
        let a = if a.is_csr() { a.clone() } else { a.to_csr() };
        let ordering = sprs::linalg::reverse_cuthill_mckee(a.view());
        let perm: Vec<usize> = ordering.perm.vec();
        let mut inv = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }

        let mut first: Vec<usize> = (0..n).collect();
        for (old, row) in a.outer_iterator().enumerate() {
            let i = inv[old];
            for (col, _) in row.iter() {
                let j = inv[col];
                if j < i {
                    first[i] = first[i].min(j);
                }
            }
        }
        let mut start = Vec::with_capacity(n + 1);
        let mut len = 0usize;
        for i in 0..n {
            start.push(len);
            len += i - first[i] + 1;
        }
        start.push(len);
        let mut values = vec![0.0; len];
        for (old, row) in a.outer_iterator().enumerate() {
            let i = inv[old];
            for (col, &v) in row.iter() {
                let j = inv[col];
                if j <= i {
                    values[start[i] + j - first[i]] += v;
                }
            }
        }

        for i in 0..n {
            let fi = first[i];
            let (done, rest) = values.split_at_mut(start[i]);
            let row_i = &mut rest[..i - fi + 1];
            for j in fi..i {
                let fj = first[j];
                let lo = fi.max(fj);
                let row_j = &done[start[j]..start[j] + j - fj + 1];
                let dot: f64 =
                    row_i[lo - fi..j - fi].iter().zip(&row_j[lo - fj..j - fj]).map(|(x, y)| x * y).sum();
                row_i[j - fi] = (row_i[j - fi] - dot) / row_j[j - fj];
            }
            let sq: f64 = row_i[..i - fi].iter().map(|x| x * x).sum();
            let pivot = row_i[i - fi] - sq;
            if !(pivot > 0.0) {
                return Err(VemError::NotPositiveDefinite { dof: perm[i], pivot });
            }
            row_i[i - fi] = pivot.sqrt();
        }
        Ok(EnvelopeCholesky { perm, first, start, values })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Stored entries of L.
    pub fn envelope_size(&self) -> usize {
        self.values.len()
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut y: Vec<f64> = self.perm.iter().map(|&old| b[old]).collect();
        for i in 0..n {
            let fi = self.first[i];
            let row = &self.values[self.start[i]..self.start[i + 1]];
            let dot: f64 = row[..i - fi].iter().zip(&y[fi..i]).map(|(l, v)| l * v).sum();
            y[i] = (y[i] - dot) / row[i - fi];
        }
        for i in (0..n).rev() {
            let fi = self.first[i];
            let row = &self.values[self.start[i]..self.start[i + 1]];
            y[i] /= row[i - fi];
            let yi = y[i];
            for (l, v) in row[..i - fi].iter().zip(&mut y[fi..i]) {
                *v -= l * yi;
            }
        }
        let mut x = vec![0.0; n];
        for (new, &old) in self.perm.iter().enumerate() {
            x[old] = y[new];
        }
        x
    }
}

pub fn mat_vec(a: &CsMat<f64>, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; a.rows()];
    if a.is_csr() {
        for (i, row) in a.outer_iterator().enumerate() {
            y[i] = row.iter().map(|(j, v)| v * x[j]).sum();
        }
    } else {
        for (j, col) in a.outer_iterator().enumerate() {
            for (i, v) in col.iter() {
                y[i] += v * x[j];
            }
        }
    }
    y
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn relative_residual(a: &CsMat<f64>, x: &[f64], b: &[f64]) -> (Vec<f64>, f64) {
    let ax = mat_vec(a, x);
    let r: Vec<f64> = b.iter().zip(&ax).map(|(b, a)| b - a).collect();
    let nb = norm(b);
    let rel = if nb > 0.0 { norm(&r) / nb } else { norm(&r) };
    (r, rel)
}

/// Direct solve with one step of iterative refinement when needed.
pub fn solve(system: &SparseSystem) -> Result<Solution> {
    let a = &system.matrix;
    let b = &system.rhs;
    if b.len() != a.rows() {
        return Err(VemError::Argument(format!("rhs has {} entries for {} rows", b.len(), a.rows())));
    }
    if a.rows() == 0 {
        return Ok(Solution { u: Vec::new(), residual: 0.0, refined: false });
    }
    let chol = EnvelopeCholesky::factor(a)?;
    let mut u = chol.solve(b);
    let (r, mut residual) = relative_residual(a, &u, b);
    let mut refined = false;
    if residual > REFINE_TOL {
        let du = chol.solve(&r);
        u.iter_mut().zip(&du).for_each(|(x, d)| *x += d);
        residual = relative_residual(a, &u, b).1;
        refined = true;
    }
    Ok(Solution { u, residual, refined })
}

/// Builds a CSR matrix from triplets; duplicates are summed in input order.
pub fn csr_from_triplets(n: usize, rows: &[usize], cols: &[usize], vals: &[f64]) -> CsMat<f64> {
    TriMat::from_triplets((n, n), rows.to_vec(), cols.to_vec(), vals.to_vec()).to_csr()
}

/// Writes every stored entry as "row col value" with 17 significant digits.
pub fn dump_matrix(a: &CsMat<f64>, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| VemError::io(path, e))?;
    let mut w = std::io::BufWriter::new(file);
    for (v, (i, j)) in a.iter() {
        writeln!(w, "{i} {j} {v:.16e}").map_err(|e| VemError::io(path, e))?;
    }
    w.flush().map_err(|e| VemError::io(path, e))
}
