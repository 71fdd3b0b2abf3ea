use std::sync::Arc;

use c1vem::assembly::{assemble, build_global_map, interpolate_global, GlobalDofMap};
use c1vem::mesh::{generate_mapped_mesh, generate_square_mesh, BaseFamily, CurvedMesh};
use c1vem::postprocess::compute_errors;
use c1vem::problem::{CubicPatch, ExactSolution, SineChannel};
use c1vem::solver::solve;
use c1vem::{Curve, VemError};

fn channel(n: usize) -> CurvedMesh {
    generate_mapped_mesh(&BaseFamily::Quad { n }, Arc::new(Curve::channel_bottom()), Arc::new(Curve::channel_top()))
        .unwrap()
}

fn solve_channel(n: usize, k: usize) -> (CurvedMesh, GlobalDofMap, Vec<f64>) {
    let mesh = channel(n);
    let map = build_global_map(&mesh, k).unwrap();
    let sys = assemble(&mesh, &map, |x| SineChannel.load(x), None).unwrap();
    let u = map.expand(&solve(&sys).unwrap().u, None);
    (mesh, map, u)
}

#[test]
fn interpolated_polynomial_has_no_error() {
    for k in [2, 3, 4] {
        let u = CubicPatch::truncated(k.min(3));
        let mesh = generate_square_mesh(&BaseFamily::Quad { n: 3 }).unwrap();
        let map = build_global_map(&mesh, k).unwrap();
        let dofs = interpolate_global(&mesh, &map, |x| u.value(x), |x| u.gradient(x)).unwrap();
        let e = compute_errors(&mesh, &map, &dofs, &u).unwrap();
        assert!(e.err0 <= 1e-9 && e.err1 <= 1e-9 && e.err2 <= 1e-9, "k={k}: {e:?}");
    }
}

#[test]
fn zero_discrete_solution_has_unit_error() {
    let mesh = channel(4);
    let map = build_global_map(&mesh, 2).unwrap();
    let e = compute_errors(&mesh, &map, &vec![0.0; map.n_global], &SineChannel).unwrap();
    for v in e.as_array() {
        assert!((v - 1.0).abs() < 1e-14);
    }
}

#[test]
fn zero_exact_solution_is_a_config_error() {
    let mesh = channel(2);
    let map = build_global_map(&mesh, 2).unwrap();
    let zero = CubicPatch { coeffs: [0.0; 10] };
    assert!(matches!(compute_errors(&mesh, &map, &vec![0.0; map.n_global], &zero), Err(VemError::Config(_))));
}

#[test]
fn k2_h2_error_halves_with_h() {
    let (m8, map8, u8) = solve_channel(8, 2);
    let (m16, map16, u16) = solve_channel(16, 2);
    let e8 = compute_errors(&m8, &map8, &u8, &SineChannel).unwrap();
    let e16 = compute_errors(&m16, &map16, &u16, &SineChannel).unwrap();
    let ratio = e8.err2 / e16.err2;
    assert!((1.7..2.6).contains(&ratio), "{ratio}");
}

#[test]
fn errors_are_reproducible_bitwise() {
    let (m, map, u) = solve_channel(6, 3);
    let (_, _, v) = solve_channel(6, 3);
    assert_eq!(u.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), v.iter().map(|x| x.to_bits()).collect::<Vec<_>>());
    let a = compute_errors(&m, &map, &u, &SineChannel).unwrap();
    let b = compute_errors(&m, &map, &v, &SineChannel).unwrap();
    assert_eq!(a, b);
}

// relabelling the global DoFs together with the map leaves the errors alone
#[test]
fn errors_do_not_depend_on_the_numbering() {
    let (mesh, map, u) = solve_channel(4, 3);
    let n = map.n_global;
    let perm: Vec<usize> = (0..n).map(|i| (i * 7919) % n).collect();
    assert_eq!({ let mut p = perm.clone(); p.sort(); p }, (0..n).collect::<Vec<_>>(), "not a permutation");
    let mut shuffled = map.clone();
    for l2g in shuffled.local_to_global.iter_mut() {
        for g in l2g.iter_mut() {
            *g = perm[*g];
        }
    }
    let mut v = vec![0.0; n];
    for g in 0..n {
        v[perm[g]] = u[g];
    }
    let a = compute_errors(&mesh, &map, &u, &SineChannel).unwrap();
    let b = compute_errors(&mesh, &shuffled, &v, &SineChannel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn channel_solution_is_finite_and_nonzero() {
    let (_, map, u) = solve_channel(4, 4);
    assert!(u.iter().all(|x| x.is_finite()));
    assert!(map.free_dofs.iter().any(|&g| u[g] != 0.0));
    assert!(map.boundary.iter().zip(&u).all(|(&b, &x)| !b || x == 0.0));
}
