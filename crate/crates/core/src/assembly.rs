//! Global DoF numbering and assembly of the clamped-plate system.
//!
//! Global layout: 3 DoFs per node, then k_e value and k_n normal DoFs per
//! edge, then the moments of each element. Edge points are numbered in the
//! global edge orientation (lower node id first), whose normal is the
//! global tangent rotated clockwise; an element traversing the edge the
//! other way sees its points reversed and its normal DoFs with sign -1.
//! Boundary edges have a single owner and simply follow its traversal, so
//! their normal DoFs always refer to the outward normal.

use nalgebra::{DMatrix, DVector};

use crate::curve::Vec2;
use crate::error::{Result, VemError};
use crate::mesh::CurvedMesh;
use crate::solver::{csr_from_triplets, SparseSystem};
use crate::vem::{interpolate, local_load, local_stiffness, ritz_load, DofLayout, LocalOperators, VemElement};

/// Points from the two sides of an edge must agree to this (relative to h_e).
const POINT_MATCH_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct GlobalDofMap {
    pub k: usize,
    pub n_global: usize,
    /// Local -> global index per element.
    pub local_to_global: Vec<Vec<usize>>,
    /// +-1 per local DoF (only normal DoFs can be -1).
    pub signs: Vec<Vec<f64>>,
    /// DoFs fixed by the clamped boundary condition.
    pub boundary: Vec<bool>,
    /// Global -> free index.
    pub free_index: Vec<Option<usize>>,
    /// Free -> global index.
    pub free_dofs: Vec<usize>,
    /// h_v per mesh node.
    pub vertex_h: Vec<f64>,
    pub layouts: Vec<DofLayout>,
}

impl GlobalDofMap {
    pub fn n_free(&self) -> usize {
        self.free_dofs.len()
    }

    /// Local DoF vector of element `ie` (signs applied).
    pub fn gather(&self, ie: usize, global: &[f64]) -> DVector<f64> {
        DVector::from_iterator(
            self.local_to_global[ie].len(),
            self.local_to_global[ie].iter().zip(&self.signs[ie]).map(|(&g, &s)| s * global[g]),
        )
    }

    /// Global vector from free values plus prescribed boundary values.
    pub fn expand(&self, free: &[f64], boundary_values: Option<&[f64]>) -> Vec<f64> {
        let mut out = match boundary_values {
            Some(b) => (0..self.n_global).map(|g| if self.boundary[g] { b[g] } else { 0.0 }).collect(),
            None => vec![0.0; self.n_global],
        };
        for (f, &g) in self.free_dofs.iter().enumerate() {
            out[g] = free[f];
        }
        out
    }

    /// Elements whose local DoFs include global DoF `g`.
    pub fn elements_of(&self, g: usize) -> Vec<usize> {
        (0..self.local_to_global.len()).filter(|&ie| self.local_to_global[ie].contains(&g)).collect()
    }
}

pub fn build_global_map(mesh: &CurvedMesh, k: usize) -> Result<GlobalDofMap> {
    let probe = DofLayout::new(k, 3)?;
    let (k_e, k_n, n_mom) = (probe.k_e, probe.k_n, probe.n_moments);
    let n_nodes = mesh.n_nodes();
    let n_edges = mesh.edges.len();
    let value_base = 3 * n_nodes;
    let normal_base = value_base + k_e * n_edges;
    let moment_base = normal_base + k_n * n_edges;
    let n_global = moment_base + n_mom * mesh.n_elements();

    let mut local_to_global = Vec::with_capacity(mesh.n_elements());
    let mut signs = Vec::with_capacity(mesh.n_elements());
    let mut layouts = Vec::with_capacity(mesh.n_elements());
    for (ie, el) in mesh.elements.iter().enumerate() {
        let l = DofLayout::new(k, el.n_vertices())?;
        let mut map = vec![0usize; l.len()];
        let mut sign = vec![1.0; l.len()];
        for (v, &node) in el.vertices.iter().enumerate() {
            for c in 0..3 {
                map[l.vertex(v, c)] = 3 * node + c;
            }
        }
        for (e, (&eid, &fwd)) in el.edges.iter().zip(&el.forward).enumerate() {
            let fwd = fwd || mesh.edges[eid].is_boundary();
            for j in 0..k_e {
                let gj = if fwd { j } else { k_e - 1 - j };
                map[l.edge_value(e, j)] = value_base + eid * k_e + gj;
            }
            for j in 0..k_n {
                let gj = if fwd { j } else { k_n - 1 - j };
                map[l.edge_normal(e, j)] = normal_base + eid * k_n + gj;
                sign[l.edge_normal(e, j)] = if fwd { 1.0 } else { -1.0 };
            }
        }
        for j in 0..n_mom {
            map[l.moment(j)] = moment_base + ie * n_mom + j;
        }
        local_to_global.push(map);
        signs.push(sign);
        layouts.push(l);
    }

    check_shared_points(mesh, &layouts)?;

    let mut boundary = vec![false; n_global];
    for (id, e) in mesh.edges.iter().enumerate().filter(|(_, e)| e.is_boundary()) {
        for node in e.nodes {
            boundary[3 * node..3 * node + 3].iter_mut().for_each(|b| *b = true);
        }
        for j in 0..k_e {
            boundary[value_base + id * k_e + j] = true;
        }
        for j in 0..k_n {
            boundary[normal_base + id * k_n + j] = true;
        }
    }
    let mut free_index = vec![None; n_global];
    let mut free_dofs = Vec::new();
    for g in 0..n_global {
        if !boundary[g] {
            free_index[g] = Some(free_dofs.len());
            free_dofs.push(g);
        }
    }
    Ok(GlobalDofMap {
        k,
        n_global,
        local_to_global,
        signs,
        boundary,
        free_index,
        free_dofs,
        vertex_h: mesh.vertex_scales(),
        layouts,
    })
}

// Edge points and normals computed from both incident elements must match
// once the orientation is accounted for.
fn check_shared_points(mesh: &CurvedMesh, layouts: &[DofLayout]) -> Result<()> {
    for (id, edge) in mesh.edges.iter().enumerate().filter(|(_, e)| e.incidences.len() == 2) {
        let sample = |ie: usize, i: usize, nodes: &[f64]| -> Result<Vec<(Vec2, Vec2)>> {
            let p = mesh.edge_param(ie, i);
            let fwd = mesh.elements[ie].forward[i];
            let mut pts = nodes
                .iter()
                .map(|&t| Ok((p.point(t), p.frame(t)?.normal)))
                .collect::<Result<Vec<_>>>()?;
            if !fwd {
                pts.reverse();
            }
            Ok(pts)
        };
        let (a, b) = (edge.incidences[0], edge.incidences[1]);
        let l = &layouts[a.0];
        let h = (mesh.nodes[edge.nodes[1]] - mesh.nodes[edge.nodes[0]]).norm();
        for nodes in [l.value_nodes(), l.normal_nodes()] {
            let (pa, pb) = (sample(a.0, a.1, nodes)?, sample(b.0, b.1, nodes)?);
            for ((xa, na), (xb, nb)) in pa.iter().zip(&pb) {
                if (xa - xb).norm() > POINT_MATCH_TOL * h || (na + nb).norm() > POINT_MATCH_TOL.sqrt() {
                    return Err(VemError::Topology(format!(
                        "edge {id}: DoF points of elements {} and {} do not match",
                        a.0, b.0
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The virtual element of mesh element `ie` with the global h_v.
pub fn element(mesh: &CurvedMesh, map: &GlobalDofMap, ie: usize) -> Result<VemElement> {
    let hv = mesh.elements[ie].vertices.iter().map(|&v| map.vertex_h[v]).collect();
    VemElement::new(mesh.polygon(ie)?, map.k, hv)
}

/// Global normal of an edge at parameter tau of its global orientation:
/// clockwise rotation of the lower-to-higher node tangent inside, the
/// outward normal on the boundary.
pub fn global_normal(mesh: &CurvedMesh, edge: usize, tau: f64) -> Result<Vec2> {
    let e = &mesh.edges[edge];
    let (ie, i) = e.incidences[0];
    let p = mesh.edge_param(ie, i);
    if e.is_boundary() || mesh.elements[ie].forward[i] {
        Ok(p.frame(tau)?.normal)
    } else {
        Ok(-p.frame(-tau)?.normal)
    }
}

/// Global DoFs of a smooth function.
pub fn interpolate_global(
    mesh: &CurvedMesh,
    map: &GlobalDofMap,
    u: impl Fn(Vec2) -> f64,
    grad: impl Fn(Vec2) -> Vec2,
) -> Result<Vec<f64>> {
    let mut out = vec![0.0; map.n_global];
    for ie in 0..mesh.n_elements() {
        let el = element(mesh, map, ie)?;
        let local = interpolate(&el, &u, &grad)?;
        for ((&g, &s), v) in map.local_to_global[ie].iter().zip(&map.signs[ie]).zip(local.iter()) {
            out[g] = s * v;
        }
    }
    Ok(out)
}

/// Right-hand side functional paired with f.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadRule {
    /// Degree-dependent low-order rule: (f_h, vertex-averaged linear
    /// reconstruction of v) for k <= 4, (Pi^{k-4} f, v) above.
    Averaged,
    /// (f, Pi^{D,k} v) for every k.
    Projected,
}

/// Scatter-adds the local operators of every element and eliminates the
/// boundary DoFs symmetrically, moving `boundary_values` (global vector,
/// only boundary entries read; zero when absent) to the right-hand side.
pub fn assemble(
    mesh: &CurvedMesh,
    map: &GlobalDofMap,
    f: impl Fn(Vec2) -> f64,
    boundary_values: Option<&[f64]>,
) -> Result<SparseSystem> {
    assemble_with(mesh, map, f, boundary_values, LoadRule::Averaged)
}

pub fn assemble_with(
    mesh: &CurvedMesh,
    map: &GlobalDofMap,
    f: impl Fn(Vec2) -> f64,
    boundary_values: Option<&[f64]>,
    load: LoadRule,
) -> Result<SparseSystem> {
    let order: Vec<usize> = (0..mesh.n_elements()).collect();
    assemble_in_order(mesh, map, f, boundary_values, load, &order)
}

/// As [`assemble`], building the local operators in the given element
/// order. The scatter always runs in ascending element id, so the result
/// is bitwise independent of `order`.
pub fn assemble_in_order(
    mesh: &CurvedMesh,
    map: &GlobalDofMap,
    f: impl Fn(Vec2) -> f64,
    boundary_values: Option<&[f64]>,
    load: LoadRule,
    order: &[usize],
) -> Result<SparseSystem> {
    let mut locals: Vec<Option<(DMatrix<f64>, DVector<f64>)>> = vec![None; mesh.n_elements()];
    for &ie in order {
        let el = element(mesh, map, ie)?;
        let ops: LocalOperators = local_stiffness(&el).map_err(|e| match e {
            VemError::ElementDegeneracy(msg) => VemError::ElementDegeneracy(format!("element {ie}: {msg}")),
            other => other,
        })?;
        let rhs = match load {
            LoadRule::Averaged => local_load(&el, &f)?,
            LoadRule::Projected => ritz_load(&el, &ops.projector.matrix, &f)?,
        };
        locals[ie] = Some((ops.stiffness, rhs));
    }
    let n = map.n_free();
    let mut rhs = vec![0.0; n];
    let mut trip: Vec<(usize, usize, f64)> = Vec::new();
    for (ie, local) in locals.iter().enumerate() {
        let (a, load) = local
            .as_ref()
            .ok_or_else(|| VemError::Argument(format!("element {ie} missing from assembly order")))?;
        scatter(map, ie, a, load, boundary_values, &mut trip, &mut rhs);
    }
    // stable: equal (row, col) keys keep ascending element order
    trip.sort_by_key(|t| (t.0, t.1));
    let (mut r, mut c, mut v) = (Vec::with_capacity(trip.len()), Vec::new(), Vec::new());
    for (i, j, x) in trip {
        if r.last() == Some(&i) && c.last() == Some(&j) {
            *v.last_mut().unwrap() += x;
        } else {
            r.push(i);
            c.push(j);
            v.push(x);
        }
    }
    Ok(SparseSystem { matrix: csr_from_triplets(n, &r, &c, &v), rhs })
}

/// Wraps a non-positive pivot with the elements touching that DoF.
pub fn with_provenance(map: &GlobalDofMap, err: VemError) -> VemError {
    match err {
        VemError::NotPositiveDefinite { dof, pivot } => {
            let g = map.free_dofs[dof];
            VemError::Assembly { dof: g, pivot, elements: map.elements_of(g) }
        }
        other => other,
    }
}

fn scatter(
    map: &GlobalDofMap,
    ie: usize,
    a: &DMatrix<f64>,
    load: &DVector<f64>,
    boundary_values: Option<&[f64]>,
    trip: &mut Vec<(usize, usize, f64)>,
    rhs: &mut [f64],
) {
    let g = &map.local_to_global[ie];
    let s = &map.signs[ie];
    for i in 0..g.len() {
        let Some(fi) = map.free_index[g[i]] else { continue };
        rhs[fi] += s[i] * load[i];
        for j in 0..g.len() {
            let aij = s[i] * s[j] * a[(i, j)];
            match map.free_index[g[j]] {
                Some(fj) => trip.push((fi, fj, aij)),
                None => {
                    if let Some(b) = boundary_values {
                        rhs[fi] -= aij * b[g[j]];
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::curve::Curve;
    use crate::mesh::{generate_mapped_mesh, generate_square_mesh, BaseFamily};
    use crate::problem::{CubicPatch, ExactSolution, SineChannel};
    use crate::solver::{mat_vec, solve};
    use crate::vem::local_stiffness;

    fn two_squares() -> CurvedMesh {
        let nodes = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(2.0, 1.0),
        ];
        CurvedMesh::new(nodes, vec![], vec![vec![0, 1, 4, 3], vec![1, 2, 5, 4]], &[]).unwrap()
    }

    fn channel(n: usize) -> CurvedMesh {
        generate_mapped_mesh(
            &BaseFamily::Quad { n },
            Arc::new(Curve::channel_bottom()),
            Arc::new(Curve::channel_top()),
        )
        .unwrap()
    }

    fn dense(a: &sprs::CsMat<f64>) -> DMatrix<f64> {
        let mut d = DMatrix::zeros(a.rows(), a.cols());
        for (v, (i, j)) in a.iter() {
            d[(i, j)] += v;
        }
        d
    }

    #[test]
    fn quad_2x2_k2_has_27_dofs() {
        let mesh = generate_square_mesh(&BaseFamily::Quad { n: 2 }).unwrap();
        let map = build_global_map(&mesh, 2).unwrap();
        assert_eq!(map.n_global, 27);
        // only the centre node is interior
        assert_eq!(map.free_dofs, vec![12, 13, 14]);
    }

    #[test]
    fn single_element_map_is_identity() {
        for k in 2..=5 {
            let mesh = generate_square_mesh(&BaseFamily::Quad { n: 1 }).unwrap();
            let map = build_global_map(&mesh, k).unwrap();
            assert_eq!(map.local_to_global[0].len(), map.n_global);
            assert!(map.signs[0].iter().all(|&s| s == 1.0));
            // local order: vertex loop starts at node 0 and follows node ids 0, 1, 3, 2
            let l = &map.layouts[0];
            let nodes = [0, 1, 3, 2];
            for (v, &node) in nodes.iter().enumerate() {
                for c in 0..3 {
                    assert_eq!(map.local_to_global[0][l.vertex(v, c)], 3 * node + c);
                }
            }
            let mut seen = map.local_to_global[0].clone();
            seen.sort();
            assert_eq!(seen, (0..map.n_global).collect::<Vec<_>>());
        }
    }

    #[test]
    fn shared_edge_normal_signs() {
        let mesh = two_squares();
        let map = build_global_map(&mesh, 3).unwrap();
        assert_eq!(map.n_global, 6 * 3 + 7);
        let shared = mesh.edges.iter().position(|e| e.nodes == [1, 4]).unwrap();
        let g = 18 + shared;
        let mut sides = vec![];
        for ie in 0..2 {
            let i = map.local_to_global[ie].iter().position(|&x| x == g).unwrap();
            sides.push(map.signs[ie][i]);
        }
        assert_eq!(sides, vec![1.0, -1.0]);
        assert_eq!(map.free_dofs, vec![g]);
        // the global normal of edge 1 -> 4 points to +x
        assert!((global_normal(&mesh, shared, 0.0).unwrap() - Vec2::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn shared_value_points_are_reversed() {
        let mesh = two_squares();
        let map = build_global_map(&mesh, 5).unwrap();
        let shared = mesh.edges.iter().position(|e| e.nodes == [1, 4]).unwrap();
        let (ea, eb) = (mesh.edges[shared].incidences[0], mesh.edges[shared].incidences[1]);
        let la = &map.layouts[ea.0];
        let lb = &map.layouts[eb.0];
        for j in 0..la.k_e {
            assert_eq!(
                map.local_to_global[ea.0][la.edge_value(ea.1, j)],
                map.local_to_global[eb.0][lb.edge_value(eb.1, la.k_e - 1 - j)]
            );
        }
    }

    #[test]
    fn curved_boundary_edge_keeps_shared_points_consistent() {
        let mesh = two_squares();
        let curve = Arc::new(Curve::sine_graph("wave", 0.05, 1.0, 0.0));
        let loops = mesh.elements.iter().map(|e| e.vertices.clone()).collect();
        let ok = CurvedMesh::new(
            mesh.nodes.clone(),
            vec![curve],
            loops,
            &[crate::mesh::EdgeCurve { element: 0, local_edge: 0, curve: 0, t0: 0.0, t1: 1.0 }],
        );
        assert!(build_global_map(&ok.unwrap(), 3).is_ok());
    }

    #[test]
    fn zero_load_gives_zero_solution() {
        let mesh = channel(4);
        let map = build_global_map(&mesh, 3).unwrap();
        let sys = assemble(&mesh, &map, |_| 0.0, None).unwrap();
        let sol = solve(&sys).unwrap();
        assert!(sol.u.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn element_order_does_not_change_the_system() {
        let mesh = channel(3);
        let map = build_global_map(&mesh, 3).unwrap();
        let f = |x: Vec2| SineChannel.load(x);
        let a = assemble(&mesh, &map, f, None).unwrap();
        let rev: Vec<usize> = (0..mesh.n_elements()).rev().collect();
        let b = assemble_in_order(&mesh, &map, f, None, LoadRule::Averaged, &rev).unwrap();
        assert_eq!(a.matrix.indptr().raw_storage(), b.matrix.indptr().raw_storage());
        assert_eq!(a.matrix.indices(), b.matrix.indices());
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(a.matrix.data()), bits(b.matrix.data()));
        assert_eq!(bits(&a.rhs), bits(&b.rhs));
    }

    fn check_sum_of_locals(mesh: &CurvedMesh, k: usize) {
        let map = build_global_map(mesh, k).unwrap();
        let mut full = DMatrix::<f64>::zeros(map.n_global, map.n_global);
        for ie in 0..mesh.n_elements() {
            let a = local_stiffness(&element(mesh, &map, ie).unwrap()).unwrap().stiffness;
            let g = &map.local_to_global[ie];
            let s = &map.signs[ie];
            for i in 0..g.len() {
                for j in 0..g.len() {
                    full[(g[i], g[j])] += s[i] * s[j] * a[(i, j)];
                }
            }
        }
        let sys = assemble(mesh, &map, |_| 0.0, None).unwrap();
        let got = dense(&sys.matrix);
        let scale = full.amax();
        for (fi, &gi) in map.free_dofs.iter().enumerate() {
            for (fj, &gj) in map.free_dofs.iter().enumerate() {
                assert!((got[(fi, fj)] - full[(gi, gj)]).abs() <= 1e-13 * scale);
            }
        }
        assert!((&got - got.transpose()).amax() <= 1e-12 * scale);
    }

    #[test]
    fn assembled_matrix_is_the_sum_of_locals() {
        check_sum_of_locals(&two_squares(), 4);
        check_sum_of_locals(&channel(3), 3);
    }

    // two squares, k = 4: free DoFs are the shared edge's value point, its two
    // normal points and one moment per element
    #[test]
    fn two_element_block_structure() {
        let mesh = two_squares();
        let map = build_global_map(&mesh, 4).unwrap();
        assert_eq!(map.n_free(), 5);
        let sys = assemble(&mesh, &map, |_| 0.0, None).unwrap();
        let got = dense(&sys.matrix);
        let locals: Vec<_> =
            (0..2).map(|ie| local_stiffness(&element(&mesh, &map, ie).unwrap()).unwrap().stiffness).collect();
        let local_of = |ie: usize, g: usize| map.local_to_global[ie].iter().position(|&x| x == g);
        for (fi, &gi) in map.free_dofs.iter().enumerate() {
            for (fj, &gj) in map.free_dofs.iter().enumerate() {
                let mut expect = 0.0;
                for ie in 0..2 {
                    if let (Some(i), Some(j)) = (local_of(ie, gi), local_of(ie, gj)) {
                        expect += map.signs[ie][i] * map.signs[ie][j] * locals[ie][(i, j)];
                    }
                }
                assert!((got[(fi, fj)] - expect).abs() < 1e-13 * locals[0].amax());
            }
        }
        // the moment of element 0 and that of element 1 do not couple
        let m0 = map.free_index[map.local_to_global[0][map.layouts[0].moment(0)]].unwrap();
        let m1 = map.free_index[map.local_to_global[1][map.layouts[1].moment(0)]].unwrap();
        assert_eq!(got[(m0, m1)], 0.0);
        assert_eq!(map.elements_of(map.free_dofs[0]), vec![0, 1]);
    }

    #[test]
    fn straight_4x4_k2_residual() {
        let mesh = generate_square_mesh(&BaseFamily::Quad { n: 4 }).unwrap();
        let map = build_global_map(&mesh, 2).unwrap();
        // u = x^2 (1-x)^2 y^2 (1-y)^2
        let p = |t: f64| t * t * (1.0 - t) * (1.0 - t);
        let p2 = |t: f64| 2.0 - 12.0 * t + 12.0 * t * t;
        let f = |x: Vec2| 24.0 * p(x.y) + 2.0 * p2(x.x) * p2(x.y) + 24.0 * p(x.x);
        let sys = assemble(&mesh, &map, f, None).unwrap();
        let sol = solve(&sys).unwrap();
        assert!(sol.residual <= 1e-10, "{}", sol.residual);
    }

    #[test]
    fn curved_8x8_k2_residual() {
        let mesh = channel(8);
        let map = build_global_map(&mesh, 2).unwrap();
        let sys = assemble(&mesh, &map, |x| SineChannel.load(x), None).unwrap();
        let sol = solve(&sys).unwrap();
        let r = mat_vec(&sys.matrix, &sol.u);
        let num: f64 = r.iter().zip(&sys.rhs).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        let den: f64 = sys.rhs.iter().map(|b| b * b).sum::<f64>().sqrt();
        assert!(num / den <= 1e-11, "{}", num / den);
    }

    #[test]
    fn patch_test_reproduces_interior_dofs() {
        // degree min(k, 3): a genuine cubic is not in the k = 2 space
        for (n, k) in [(4, 2), (4, 3), (3, 4)] {
            let u = CubicPatch::truncated(k.min(3));
            let mesh = generate_square_mesh(&BaseFamily::Quad { n }).unwrap();
            let map = build_global_map(&mesh, k).unwrap();
            let exact = interpolate_global(&mesh, &map, |x| u.value(x), |x| u.gradient(x)).unwrap();
            let sys = assemble(&mesh, &map, |_| 0.0, Some(&exact)).unwrap();
            let sol = solve(&sys).unwrap();
            for (f, &g) in map.free_dofs.iter().enumerate() {
                assert!((sol.u[f] - exact[g]).abs() < 1e-8, "k={k} dof {g}: {} vs {}", sol.u[f], exact[g]);
            }
        }
    }

    #[test]
    fn provenance_names_the_elements() {
        let mesh = two_squares();
        let map = build_global_map(&mesh, 3).unwrap();
        match with_provenance(&map, VemError::NotPositiveDefinite { dof: 0, pivot: -1.0 }) {
            VemError::Assembly { elements, .. } => assert_eq!(elements, vec![0, 1]),
            other => panic!("{other:?}"),
        }
    }
}
