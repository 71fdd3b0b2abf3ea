//! Acceptance criteria 1-7, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always reach the output; exits non-zero
//! if any criterion fails.

use std::f64::consts::PI;
use std::sync::Arc;
use std::time::Instant;

use nalgebra::DVector;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use c1vem::assembly::{assemble_with, build_global_map, element, LoadRule};
use c1vem::mesh::{generate_mapped_mesh, generate_square_mesh, straighten_boundary, BaseFamily, CurvedMesh};
use c1vem::postprocess::ConvergenceReport;
use c1vem::quadrature::{integrate_function, monomial_integrals};
use c1vem::solver::solve;
use c1vem::study::{run_level, Domain, Family, Mode, SolutionId, StudyConfig};
use c1vem::vem::{
    dof_count, interpolate_polynomial, kernel_dimension, local_stiffness, ritz_projector, DofLayout, VemElement,
};
use c1vem::{Curve, CurvedPolygon, Vec2};

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(n: usize, name: &str, run: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = run();
    println!(
        "criterion {n} ({name}): {} [{:.1}s] {}",
        if o.pass { "PASS" } else { "FAIL" },
        t.elapsed().as_secs_f64(),
        o.detail
    );
    o.pass
}

/// Star-shaped polygon with n vertices around a random centre.
fn random_polygon(rng: &mut impl Rng, n: usize) -> CurvedPolygon {
    let scale = 10f64.powf(rng.gen_range(-2.0..1.0));
    let shift = Vec2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    let phase = rng.gen_range(0.0..2.0 * PI);
    let verts: Vec<Vec2> = (0..n)
        .map(|i| {
            let a = phase + 2.0 * PI * (i as f64 + rng.gen_range(-0.3..0.3)) / n as f64;
            let r = rng.gen_range(0.7..1.0);
            shift + Vec2::new(a.cos(), a.sin()) * (r * scale)
        })
        .collect();
    CurvedPolygon::from_vertices(&verts).unwrap()
}

fn channel(family: &BaseFamily) -> CurvedMesh {
    generate_mapped_mesh(family, Arc::new(Curve::channel_bottom()), Arc::new(Curve::channel_top())).unwrap()
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for k in 2..=5usize {
        for n in [3usize, 4, 5, 8] {
            let (k_e, k_n) = (k.saturating_sub(3), k - 2);
            let moments = if k >= 4 { (k - 3) * (k - 2) / 2 } else { 0 };
            let expected = (3 + k_e + k_n) * n + moments;
            let got = DofLayout::new(k, n).unwrap().len();
            let reg: Vec<Vec2> =
                (0..n).map(|i| Vec2::new((2.0 * PI * i as f64 / n as f64).cos(), (2.0 * PI * i as f64 / n as f64).sin())).collect();
            let el = VemElement::standalone(CurvedPolygon::from_vertices(&reg).unwrap(), k).unwrap();
            if got != expected || dof_count(k, n) != expected || el.n_dofs() != expected {
                bad.push(format!("k={k} N={n}: {got} != {expected}"));
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("16 (k, N_E) pairs checked {bad:?}") }
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for k in 2..=5 {
        for _ in 0..20 {
            let n = rng.gen_range(3..=8);
            let el = VemElement::standalone(random_polygon(&mut rng, n), k).unwrap();
            let p = ritz_projector(&el).unwrap().matrix;
            for _ in 0..50 {
                let c = DVector::from_fn(el.n_poly(), |_, _| rng.gen_range(-1.0..1.0));
                let back = &p * interpolate_polynomial(&el, &c);
                worst = worst.max((back - &c).amax());
            }
        }
    }
    Outcome { pass: worst <= 1e-9, detail: format!("max coefficient error {worst:.2e} (tol 1e-9)") }
}

fn criterion_3() -> Outcome {
    let k = 3;
    let max_deg = 2 * k + 2;
    let mesh = channel(&BaseFamily::Quad { n: 8 });
    let curved: Vec<usize> =
        (0..mesh.n_elements()).filter(|&ie| mesh.polygon(ie).unwrap().has_curved_edge()).take(10).collect();
    let mut worst: f64 = 0.0;
    for &ie in &curved {
        let poly = mesh.polygon(ie).unwrap();
        let exact = monomial_integrals(&poly, max_deg);
        for (j, (a, b)) in c1vem::basis::exponents(max_deg).into_iter().enumerate() {
            let m = |x: Vec2| {
                let d = (x - poly.centroid) / poly.diameter;
                d.x.powi(a as i32) * d.y.powi(b as i32)
            };
            let quad = integrate_function(&poly, m, max_deg).unwrap();
            // relative to the integral of |m|, which does not cancel
            let size = integrate_function(&poly, |x| m(x).abs(), max_deg).unwrap();
            worst = worst.max((quad - exact[j]).abs() / size);
        }
    }
    Outcome {
        pass: curved.len() == 10 && worst <= 1e-9,
        detail: format!("{} curved elements, |alpha| <= {max_deg}, max relative gap {worst:.2e} (tol 1e-9)", curved.len()),
    }
}

fn patch_config(k: usize, solution: SolutionId) -> StudyConfig {
    StudyConfig { degree: k, domain: Domain::Square, solution, ..StudyConfig::default() }
}

fn criterion_4() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for k in [2, 3] {
        // degree min(k, 3): P_3 is not contained in the k = 2 space
        let solution = if k == 2 { SolutionId::PatchP2 } else { SolutionId::PatchP3 };
        for n in [4, 8] {
            let r = run_level(&patch_config(k, solution), n, None).unwrap();
            pass &= r.errors.err2 <= 1e-8;
            details.push(format!("k={k} {n}x{n} {solution}: Err2={:.1e}", r.errors.err2));
        }
    }
    let info = run_level(&patch_config(2, SolutionId::PatchP3), 8, None).unwrap();
    details.push(format!("(info: k=2 with a full cubic, 8x8: Err2={:.1e})", info.errors.err2));
    Outcome { pass, detail: details.join("; ") }
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let mut systems = 0;
    let mut curved_elements = 0;
    let meshes: Vec<(String, CurvedMesh)> = [
        ("quad 4", BaseFamily::Quad { n: 4 }),
        ("quad 8", BaseFamily::Quad { n: 8 }),
        ("voronoi 8", StudyConfig { family: Family::Voronoi, ..StudyConfig::default() }.base_family(8)),
        ("voronoi 16", StudyConfig { family: Family::Voronoi, ..StudyConfig::default() }.base_family(16)),
    ]
    .into_iter()
    .flat_map(|(name, fam)| {
        let curved = channel(&fam);
        let straight = straighten_boundary(&curved).unwrap();
        let square = generate_square_mesh(&fam).unwrap();
        [
            (format!("curved {name}"), curved),
            (format!("chord {name}"), straight),
            (format!("square {name}"), square),
        ]
    })
    .collect();
    for (name, mesh) in &meshes {
        for k in [2, 3] {
            let map = build_global_map(mesh, k).unwrap();
            let sys = assemble_with(mesh, &map, |x| x.x.sin() + 1.0, None, LoadRule::Projected);
            match sys.and_then(|s| solve(&s)) {
                Ok(_) => systems += 1,
                Err(e) => problems.push(format!("{name} k={k}: {e}")),
            }
            if k == 3 && name.starts_with("curved") {
                for ie in 0..mesh.n_elements() {
                    if !mesh.elements[ie].edges.iter().any(|&e| mesh.edges[e].is_curved()) {
                        continue;
                    }
                    curved_elements += 1;
                    for kk in [2, 3] {
                        let m2 = build_global_map(mesh, kk).unwrap();
                        let el = element(mesh, &m2, ie).unwrap();
                        match local_stiffness(&el).and_then(|o| kernel_dimension(&o.stiffness)) {
                            Ok(d) if d <= 3 => {}
                            Ok(d) => problems.push(format!("{name} element {ie} k={kk}: kernel {d}")),
                            Err(e) => problems.push(format!("{name} element {ie} k={kk}: {e}")),
                        }
                    }
                }
            }
        }
    }

    // random straight single elements: kernel exactly P_1
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    let straight = runner.run(&(3usize..=8, 2usize..=3, any::<u64>()), |(n, k, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let el = VemElement::standalone(random_polygon(&mut rng, n), k).unwrap();
        let ops = local_stiffness(&el).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let d = kernel_dimension(&ops.stiffness).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(d, 3);
        Ok(())
    });
    if let Err(e) = straight {
        problems.push(format!("straight element: {e}"));
    }
    Outcome {
        pass: problems.is_empty(),
        detail: format!(
            "{systems} reduced systems factorized, {curved_elements} curved elements with kernel <= 3, 64 random straight elements with kernel 3 {problems:?}"
        ),
    }
}

fn study(k: usize, family: Family, mode: Mode, load: LoadRule) -> ConvergenceReport {
    let cfg = StudyConfig { degree: k, family, mode, load, ..StudyConfig::default() };
    let mut rep = ConvergenceReport::default();
    for &level in &cfg.levels {
        let r = run_level(&cfg, level, None).unwrap();
        rep.push(r.level, r.h, r.ndof, r.errors).unwrap();
    }
    rep
}

fn rates(r: &ConvergenceReport) -> [f64; 3] {
    r.final_eoc().unwrap()
}

fn fmt_rates(r: [f64; 3]) -> String {
    format!("eoc0={:.2} eoc1={:.2} eoc2={:.2}", r[0], r[1], r[2])
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn main() {
    let mut all = true;
    all &= report(1, "dof dimension", criterion_1);
    all &= report(2, "projector reproduction", criterion_2);
    all &= report(3, "quadrature oracle", criterion_3);
    all &= report(4, "patch test", criterion_4);
    all &= report(5, "spd and kernel", criterion_5);

    let mut curved = Vec::new();
    all &= report(6, "convergence rates", || {
        let mut pass = true;
        let mut details = Vec::new();
        for family in [Family::Quad, Family::Voronoi] {
            let r2 = study(2, family, Mode::Curved, LoadRule::Projected);
            let r3 = study(3, family, Mode::Curved, LoadRule::Projected);
            let (e2, e3) = (rates(&r2), rates(&r3));
            let ok = within(e2[2], 1.0, 0.2) && within(e3[2], 2.0, 0.25) && within(e3[1], 3.0, 0.3) && within(e3[0], 4.0, 0.3);
            pass &= ok;
            let ndofs: Vec<usize> = r3.rows.iter().map(|r| r.ndof).collect();
            details.push(format!("{family}: k=2 eoc2={:.2}; k=3 {} (ndof {ndofs:?})", e2[2], fmt_rates(e3)));
            curved.push((family, e3));
        }
        let avg = rates(&study(3, Family::Quad, Mode::Curved, LoadRule::Averaged));
        details.push(format!("(info: quad k=3 with the averaged load: {})", fmt_rates(avg)));
        Outcome { pass, detail: details.join("; ") }
    });

    all &= report(7, "straight-chord degradation", || {
        let mut pass = true;
        let mut details = Vec::new();
        for &(family, c) in &curved {
            let s = rates(&study(3, family, Mode::Straight, LoadRule::Projected));
            pass &= s[0] <= 2.5 && s[1] <= 2.5 && c[0] >= 3.5;
            details.push(format!("{family}: straight {} vs curved eoc0={:.2}", fmt_rates(s), c[0]));
        }
        Outcome { pass: pass && !curved.is_empty(), detail: details.join("; ") }
    });

    if !all {
        std::process::exit(1);
    }
}
