//! Error norms of u - Pi u_h, convergence rates and report files.

use std::fmt::Write as _;
use std::path::Path;

use crate::assembly::{element, GlobalDofMap};
use crate::error::{Result, VemError};
use crate::mesh::CurvedMesh;
use crate::problem::ExactSolution;
use crate::quadrature::area_rule;
use crate::vem::ritz_projector;

/// Relative errors: L2 norm, H1 and H2 seminorms of u - Pi u_h.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorNorms {
    pub err0: f64,
    pub err1: f64,
    pub err2: f64,
}

impl ErrorNorms {
    pub fn as_array(&self) -> [f64; 3] {
        [self.err0, self.err1, self.err2]
    }
}

/// Element by element, projects the discrete solution with the Ritz
/// projector and integrates the error with the fan rule of order 2k+6;
/// the exact norms in the denominators use the same rule.
pub fn compute_errors(
    mesh: &CurvedMesh,
    map: &GlobalDofMap,
    u_global: &[f64],
    exact: &dyn ExactSolution,
) -> Result<ErrorNorms> {
    let mut num = [0.0; 3];
    let mut den = [0.0; 3];
    for ie in 0..mesh.n_elements() {
        let el = element(mesh, map, ie)?;
        let c = ritz_projector(&el)?.matrix * map.gather(ie, u_global);
        let rule = area_rule(&el.poly, el.quad_order)?;
        for (&x, &w) in rule.points.iter().zip(&rule.weights) {
            let (u, g, h) = (exact.value(x), exact.gradient(x), exact.hessian(x));
            let (pu, pg, ph) = (el.basis.eval(&c, x), el.basis.eval_gradient(&c, x), el.basis.eval_hessian(&c, x));
            let hess2 = |a: [f64; 3]| a[0] * a[0] + 2.0 * a[1] * a[1] + a[2] * a[2];
            num[0] += w * (u - pu).powi(2);
            num[1] += w * (g - pg).norm_squared();
            num[2] += w * hess2([h[0] - ph[0], h[1] - ph[1], h[2] - ph[2]]);
            den[0] += w * u * u;
            den[1] += w * g.norm_squared();
            den[2] += w * hess2(h);
        }
    }
    if den.iter().any(|&d| !(d > 0.0)) {
        return Err(VemError::Config(format!("exact solution has a vanishing norm: {den:?}")));
    }
    Ok(ErrorNorms {
        err0: (num[0] / den[0]).sqrt(),
        err1: (num[1] / den[1]).sqrt(),
        err2: (num[2] / den[2]).sqrt(),
    })
}

/// rate_i = log(e_{i-1} / e_i) / log(h_{i-1} / h_i) for i >= 1.
pub fn eoc(errors: &[f64], hs: &[f64]) -> Result<Vec<f64>> {
    if errors.len() != hs.len() || errors.len() < 2 {
        return Err(VemError::Argument(format!(
            "need matching lists of length >= 2, got {} and {}",
            errors.len(),
            hs.len()
        )));
    }
    if errors.iter().chain(hs).any(|&v| !(v > 0.0)) {
        return Err(VemError::Argument("errors and mesh sizes must be positive".into()));
    }
    Ok((1..errors.len()).map(|i| (errors[i - 1] / errors[i]).ln() / (hs[i - 1] / hs[i]).ln()).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub level: usize,
    pub h: f64,
    pub ndof: usize,
    pub errors: [f64; 3],
    /// Rates against the previous row; None on the first.
    pub eoc: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ReportRow>,
}

impl ConvergenceReport {
    /// Appends a level and fills in its rates.
    pub fn push(&mut self, level: usize, h: f64, ndof: usize, errors: ErrorNorms) -> Result<()> {
        let errors = errors.as_array();
        let eoc = match self.rows.last() {
            None => None,
            Some(prev) => {
                if !(h < prev.h) {
                    return Err(VemError::Argument(format!("mesh size {h} does not decrease from {}", prev.h)));
                }
                let mut r = [0.0; 3];
                for i in 0..3 {
                    r[i] = eoc(&[prev.errors[i], errors[i]], &[prev.h, h])?[0];
                }
                Some(r)
            }
        };
        self.rows.push(ReportRow { level, h, ndof, errors, eoc });
        Ok(())
    }

    /// Rates of the last two rows.
    pub fn final_eoc(&self) -> Option<[f64; 3]> {
        self.rows.last().and_then(|r| r.eoc)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("level,h,ndof,err0,err1,err2,eoc0,eoc1,eoc2\n");
        for r in &self.rows {
            let _ = write!(s, "{},{:.6e},{},{:.6e},{:.6e},{:.6e}", r.level, r.h, r.ndof, r.errors[0], r.errors[1], r.errors[2]);
            match r.eoc {
                Some(e) => {
                    let _ = writeln!(s, ",{:.4},{:.4},{:.4}", e[0], e[1], e[2]);
                }
                None => s.push_str(",,,\n"),
            }
        }
        s
    }

    /// "h error" pairs for norm `i`, for log-log plotting.
    pub fn to_dat(&self, i: usize) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(s, "{:.16e} {:.16e}", r.h, r.errors[i]);
        }
        s
    }

    /// Writes report.csv and errs_{0,1,2}.dat into `dir`.
    pub fn write(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|e| VemError::io(dir, e))?;
        let put = |name: &str, text: String| {
            let p = dir.join(name);
            std::fs::write(&p, text).map_err(|e| VemError::io(&p, e))
        };
        put("report.csv", self.to_csv())?;
        for i in 0..3 {
            put(&format!("errs_{i}.dat"), self.to_dat(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eoc_examples() {
        assert!((eoc(&[4.0, 1.0], &[2.0, 1.0]).unwrap()[0] - 2.0).abs() < 1e-15);
        assert_eq!(eoc(&[0.3, 0.3], &[1.0, 0.5]).unwrap()[0], 0.0);
        assert!((eoc(&[1.0, 0.125], &[1.0, 0.5]).unwrap()[0] - 3.0).abs() < 1e-14);
        assert!(eoc(&[1.0, 0.0], &[1.0, 0.5]).is_err());
        assert!(eoc(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn report_rows() {
        let mut r = ConvergenceReport::default();
        let e = |v: f64| ErrorNorms { err0: v, err1: v, err2: v };
        r.push(8, 0.2, 100, e(1.0)).unwrap();
        r.push(16, 0.1, 400, e(0.25)).unwrap();
        assert!(r.push(32, 0.1, 900, e(0.1)).is_err());
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "level,h,ndof,err0,err1,err2,eoc0,eoc1,eoc2");
        assert!(lines[1].ends_with(",,,"));
        assert!(lines[2].ends_with("2.0000,2.0000,2.0000"));
        assert_eq!(r.to_dat(0).lines().count(), 2);
    }
}
