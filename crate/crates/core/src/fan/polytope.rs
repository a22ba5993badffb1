//! Lattice polytopes and their (inner) normal fans.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Signed;

use super::Fan;
use crate::linalg::{dot_int, kernel_basis_z, primitive, rank_int, Int, IntMat, IntVec};
use crate::FanError;

/// Convex hull of lattice points in `M`. Points that are not vertices are
/// allowed and ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    pub rank: usize,
    pub vertices: Vec<IntVec>,
}

impl Polytope {
    pub fn new(rank: usize, vertices: Vec<IntVec>) -> Self {
        Polytope { rank, vertices }
    }
}

fn err(msg: &str) -> FanError {
    FanError::Polytope(msg.into())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Facets as `(inner normal w, c)` with `⟨w, u⟩ >= c` on the polytope,
/// found by trying the affine hyperplane through every `rank`-subset.
fn facets(p: &Polytope) -> BTreeMap<IntVec, Int> {
    let n = p.rank;
    let mut out = BTreeMap::new();
    for s in subsets(p.vertices.len(), n) {
        let base = &p.vertices[s[0]];
        let diffs: Vec<IntVec> = s[1..]
            .iter()
            .map(|&i| p.vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let k = kernel_basis_z(&IntMat::from_rows(n, diffs).expect("rank-length points"));
        if k.rows() != 1 {
            continue;
        }
        let w = primitive(k.row(0)).expect("kernel vector is nonzero");
        let c = dot_int(&w, base);
        let values: Vec<Int> = p.vertices.iter().map(|v| dot_int(&w, v)).collect();
        if values.iter().all(|v| *v >= c) {
            out.insert(w, c);
        } else if values.iter().all(|v| *v <= c) {
            out.insert(w.iter().map(|x| -x).collect(), -c);
        }
    }
    out
}

/// The normal fan `Σ_P`: one ray per facet (its primitive inner normal) and
/// one maximal cone per vertex, spanned by the normals of the facets through
/// it.
///
/// Supports rank at most 3. The polytope must be full-dimensional, contain
/// the origin in its interior and be simple, since fans here are simplicial.
pub fn dual_fan_of_polytope(p: &Polytope) -> Result<Fan, FanError> {
    let n = p.rank;
    if n == 0 || n > 3 {
        return Err(err("only ranks 1 to 3 are supported"));
    }
    if p.vertices.iter().any(|v| v.len() != n) {
        return Err(err("vertex length differs from the rank"));
    }
    let facets = facets(p);
    let normals: Vec<IntVec> = facets.keys().cloned().collect();
    if normals.len() <= n || rank_int(&IntMat::from_rows(n, normals.clone()).expect("normals")) < n {
        return Err(err("polytope is not full-dimensional"));
    }
    if facets.values().any(|c| !c.is_negative()) {
        return Err(err("origin is not in the interior"));
    }
    let mut seen: Vec<&IntVec> = Vec::new();
    let mut cones = Vec::new();
    for v in &p.vertices {
        if seen.contains(&v) {
            continue;
        }
        seen.push(v);
        let through: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, (w, c))| dot_int(w, v) == **c)
            .map(|(i, _)| i)
            .collect();
        let rows: Vec<IntVec> = through.iter().map(|&i| normals[i].clone()).collect();
        if rows.is_empty() || rank_int(&IntMat::from_rows(n, rows).expect("normals")) < n {
            continue; // not a vertex
        }
        if through.len() != n {
            return Err(err("polytope is not simple"));
        }
        cones.push(through);
    }
    Fan::new(n, normals, cones)
}
