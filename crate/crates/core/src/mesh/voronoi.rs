//! Lloyd-relaxed Voronoi tessellations of the unit square.
//!
//! Each cell is the unit square clipped by the bisector half-planes of
//! nearby seeds; a bucket grid visits seeds ring by ring and stops once no
//! further seed can cut the cell (distance > twice the cell radius).
//! Vertices shared between cells are merged afterwards with a spatial hash,
//! and edges much shorter than the seed spacing are collapsed.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{cross, Vec2};
use crate::error::{Result, VemError};

/// Vertices closer than this are identified.
const MERGE_TOL: f64 = 1e-10;
const SNAP_TOL: f64 = 1e-12;
/// Edges shorter than this times the seed spacing 1/sqrt(seeds) collapse.
pub const COLLAPSE_RATIO: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VoronoiSpec {
    pub seeds: usize,
    pub lloyd: usize,
    pub seed: u64,
}

/// Seeds in (0,1)^2 after `lloyd` relaxation steps.
pub fn relaxed_seeds(spec: &VoronoiSpec) -> Result<Vec<Vec2>> {
    if spec.seeds < 2 {
        return Err(VemError::Argument(format!("voronoi needs at least 2 seeds, got {}", spec.seeds)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut pts: Vec<Vec2> = (0..spec.seeds).map(|_| Vec2::new(rng.gen::<f64>(), rng.gen::<f64>())).collect();
    for _ in 0..spec.lloyd {
        let cells = cells(&pts)?;
        pts = cells.iter().map(|c| centroid(c)).collect();
    }
    Ok(pts)
}

/// Voronoi diagram as shared nodes plus counterclockwise vertex loops.
pub fn tessellate(spec: &VoronoiSpec) -> Result<(Vec<Vec2>, Vec<Vec<usize>>)> {
    let pts = relaxed_seeds(spec)?;
    let polys = cells(&pts)?;

    let mut nodes: Vec<Vec2> = Vec::new();
    let mut hash: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let bucket = 100.0 * MERGE_TOL;
    let mut loops = Vec::with_capacity(polys.len());
    for (ic, poly) in polys.iter().enumerate() {
        let mut lp: Vec<usize> = Vec::with_capacity(poly.len());
        for &p in poly {
            let p = snap(p);
            let key = ((p.x / bucket).floor() as i64, (p.y / bucket).floor() as i64);
            let mut found = None;
            'search: for dx in -1..=1 {
                for dy in -1..=1 {
                    if let Some(ids) = hash.get(&(key.0 + dx, key.1 + dy)) {
                        for &id in ids {
                            if (nodes[id] - p).norm() <= MERGE_TOL {
                                found = Some(id);
                                break 'search;
                            }
                        }
                    }
                }
            }
            let id = found.unwrap_or_else(|| {
                nodes.push(p);
                hash.entry(key).or_default().push(nodes.len() - 1);
                nodes.len() - 1
            });
            if lp.last() != Some(&id) {
                lp.push(id);
            }
        }
        while lp.len() > 1 && lp.first() == lp.last() {
            lp.pop();
        }
        if lp.len() < 3 {
            return Err(VemError::Generation(format!("voronoi cell {ic} degenerated to {} vertices", lp.len())));
        }
        loops.push(lp);
    }
    let tol = COLLAPSE_RATIO / (spec.seeds as f64).sqrt();
    Ok(collapse_short_edges(nodes, loops, tol))
}

// Sides of the unit square through p, as a bit set.
fn sides(p: Vec2) -> u8 {
    (p.x == 0.0) as u8 | ((p.x == 1.0) as u8) << 1 | ((p.y == 0.0) as u8) << 2 | ((p.y == 1.0) as u8) << 3
}

/// Where the endpoints of a collapsed edge meet: the one pinned to more
/// sides of the square, else the midpoint. None if both are pinned
/// differently (e.g. two corners).
fn merge_target(a: Vec2, b: Vec2) -> Option<Vec2> {
    let (sa, sb) = (sides(a), sides(b));
    if sa == sb {
        Some((a + b) * 0.5)
    } else if sa & sb == sb {
        Some(a)
    } else if sa & sb == sa {
        Some(b)
    } else {
        None
    }
}

/// Repeatedly collapses the shortest edge below `tol`, skipping collapses
/// that would leave a cell with fewer than 3 vertices or flip one.
pub(crate) fn collapse_short_edges(
    mut nodes: Vec<Vec2>,
    mut loops: Vec<Vec<usize>>,
    tol: f64,
) -> (Vec<Vec2>, Vec<Vec<usize>>) {
    let mut rejected = std::collections::HashSet::new();
    loop {
        let mut best: Option<(f64, usize, usize)> = None;
        for lp in &loops {
            for i in 0..lp.len() {
                let (a, b) = (lp[i], lp[(i + 1) % lp.len()]);
                let key = (a.min(b), a.max(b));
                let len = (nodes[a] - nodes[b]).norm();
                if len < tol && !rejected.contains(&key) && best.is_none_or(|(l, ..)| len < l) {
                    best = Some((len, key.0, key.1));
                }
            }
        }
        let Some((_, a, b)) = best else { break };
        let Some(target) = merge_target(nodes[a], nodes[b]) else {
            rejected.insert((a, b));
            continue;
        };
        let merged: Vec<Vec<usize>> = loops
            .iter()
            .map(|lp| {
                let mut out: Vec<usize> = Vec::with_capacity(lp.len());
                for &v in lp {
                    let v = if v == b { a } else { v };
                    if out.last() != Some(&v) {
                        out.push(v);
                    }
                }
                while out.len() > 1 && out.first() == out.last() {
                    out.pop();
                }
                out
            })
            .collect();
        let mut trial = nodes.clone();
        trial[a] = target;
        let ok = merged.iter().zip(&loops).all(|(m, old)| {
            if !old.contains(&a) && !old.contains(&b) {
                return true;
            }
            let poly: Vec<Vec2> = m.iter().map(|&v| trial[v]).collect();
            m.len() >= 3 && area(&poly) > 0.0
        });
        if ok {
            nodes = trial;
            loops = merged;
        } else {
            rejected.insert((a, b));
        }
    }
    // drop orphaned nodes, keeping first-use order
    let mut new_id = vec![usize::MAX; nodes.len()];
    let mut kept = Vec::new();
    for lp in loops.iter_mut() {
        for v in lp.iter_mut() {
            if new_id[*v] == usize::MAX {
                new_id[*v] = kept.len();
                kept.push(nodes[*v]);
            }
            *v = new_id[*v];
        }
    }
    (kept, loops)
}

fn snap(p: Vec2) -> Vec2 {
    let s = |v: f64| {
        if v.abs() <= SNAP_TOL {
            0.0
        } else if (v - 1.0).abs() <= SNAP_TOL {
            1.0
        } else {
            v
        }
    };
    Vec2::new(s(p.x), s(p.y))
}

fn area(poly: &[Vec2]) -> f64 {
    let n = poly.len();
    (0..n).map(|i| cross(poly[i], poly[(i + 1) % n])).sum::<f64>() * 0.5
}

fn centroid(poly: &[Vec2]) -> Vec2 {
    let n = poly.len();
    let o = poly[0];
    let mut a = 0.0;
    let mut c = Vec2::zeros();
    for i in 1..n - 1 {
        let w = cross(poly[i] - o, poly[i + 1] - o);
        a += w;
        c += (poly[i] + poly[i + 1] - 2.0 * o) * w;
    }
    o + c / (3.0 * a)
}

/// Keeps the part of `poly` with (x - m) . d <= 0.
fn clip(poly: &[Vec2], m: Vec2, d: Vec2) -> Vec<Vec2> {
    let n = poly.len();
    let side: Vec<f64> = poly.iter().map(|&p| (p - m).dot(&d)).collect();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (si, sj) = (side[i], side[j]);
        if si <= 0.0 {
            out.push(poly[i]);
        }
        if (si < 0.0 && sj > 0.0) || (si > 0.0 && sj < 0.0) {
            let t = si / (si - sj);
            out.push(poly[i] + (poly[j] - poly[i]) * t);
        }
    }
    out
}

fn cells(pts: &[Vec2]) -> Result<Vec<Vec<Vec2>>> {
    let n = pts.len();
    let g = ((n as f64).sqrt().ceil() as usize).max(1);
    let cs = 1.0 / g as f64;
    let cell_of = |p: Vec2| {
        let i = ((p.x / cs) as usize).min(g - 1);
        let j = ((p.y / cs) as usize).min(g - 1);
        (i, j)
    };
    let mut grid = vec![Vec::new(); g * g];
    for (k, &p) in pts.iter().enumerate() {
        let (i, j) = cell_of(p);
        grid[j * g + i].push(k);
    }
    let square = [Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(0.0, 1.0)];

    let mut out = Vec::with_capacity(n);
    for (k, &s) in pts.iter().enumerate() {
        let mut poly = square.to_vec();
        let (ci, cj) = cell_of(s);
        for r in 0..g as isize {
            for dj in -r..=r {
                for di in -r..=r {
                    if di.abs().max(dj.abs()) != r {
                        continue;
                    }
                    let (i, j) = (ci as isize + di, cj as isize + dj);
                    if i < 0 || j < 0 || i >= g as isize || j >= g as isize {
                        continue;
                    }
                    for &o in &grid[j as usize * g + i as usize] {
                        if o != k {
                            let d = pts[o] - s;
                            poly = clip(&poly, (pts[o] + s) * 0.5, d);
                        }
                    }
                }
            }
            let radius = poly.iter().map(|p| (p - s).norm()).fold(0.0, f64::max);
            if r as f64 * cs > 2.0 * radius {
                break;
            }
        }
        if poly.len() < 3 || !(area(&poly) > 0.0) {
            return Err(VemError::Generation(format!("voronoi cell {k} has zero area")));
        }
        out.push(poly);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_tile_the_square() {
        let spec = VoronoiSpec { seeds: 60, lloyd: 5, seed: 7 };
        let (nodes, loops) = tessellate(&spec).unwrap();
        assert_eq!(loops.len(), 60);
        let total: f64 = loops
            .iter()
            .map(|l| area(&l.iter().map(|&i| nodes[i]).collect::<Vec<_>>()))
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reproducible() {
        let spec = VoronoiSpec { seeds: 30, lloyd: 2, seed: 3 };
        assert_eq!(tessellate(&spec).unwrap(), tessellate(&spec).unwrap());
        let other = VoronoiSpec { seed: 4, ..spec };
        assert_ne!(tessellate(&spec).unwrap().0, tessellate(&other).unwrap().0);
    }

    #[test]
    fn matches_brute_force_nearest_seed() {
        let spec = VoronoiSpec { seeds: 40, lloyd: 0, seed: 11 };
        let pts = relaxed_seeds(&spec).unwrap();
        let polys = cells(&pts).unwrap();
        // the centroid of each convex cell is closer to its own seed than to any other
        for (k, poly) in polys.iter().enumerate() {
            let c = centroid(poly);
            let own = (c - pts[k]).norm();
            for (o, &p) in pts.iter().enumerate() {
                if o != k {
                    assert!((c - p).norm() >= own - 1e-12);
                }
            }
        }
    }

    #[test]
    fn short_edges_are_collapsed() {
        let spec = VoronoiSpec { seeds: 300, lloyd: 30, seed: 1 };
        let (nodes, loops) = tessellate(&spec).unwrap();
        let tol = COLLAPSE_RATIO / 300f64.sqrt();
        let mut total = 0.0;
        for lp in &loops {
            let poly: Vec<Vec2> = lp.iter().map(|&v| nodes[v]).collect();
            total += area(&poly);
            assert!(area(&poly) > 0.0);
            for i in 0..lp.len() {
                assert!((poly[i] - poly[(i + 1) % lp.len()]).norm() >= tol);
            }
        }
        assert!((total - 1.0).abs() < 1e-12);
        for c in [Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(0.0, 1.0)] {
            assert!(nodes.contains(&c));
        }
    }

    #[test]
    fn collapse_keeps_boundary_points_on_the_boundary() {
        // two quads sharing a short edge that touches the bottom side
        let nodes = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(0.5, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.51, 0.01),
            Vec2::new(0.0, 1.0),
        ];
        let loops = vec![vec![0, 1, 4, 5], vec![1, 2, 3, 5, 4]];
        let (n, l) = collapse_short_edges(nodes, loops, 0.05);
        assert_eq!(n.len(), 5);
        assert!(n.contains(&Vec2::new(0.5, 0.0)));
        assert_eq!(l[0].len(), 3);
        assert_eq!(merge_target(Vec2::new(0.0, 0.0), Vec2::new(0.01, 0.0)), Some(Vec2::new(0.0, 0.0)));
        assert_eq!(merge_target(Vec2::new(0.0, 0.0), Vec2::new(1.0, 1.0)), None);
    }

    #[test]
    fn too_few_seeds() {
        assert!(tessellate(&VoronoiSpec { seeds: 1, lloyd: 0, seed: 0 }).is_err());
    }
}
