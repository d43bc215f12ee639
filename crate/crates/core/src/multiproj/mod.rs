//! Partitioned complexes `X ⊆ V_1 * ... * V_m`, the projection onto the
//! simplex on the parts, fiber bounds and multiple-point complexes.

mod mpc;
mod random;

pub use mpc::{
    generalized_mpc, generalized_mpc_with, multiple_point_complex, multiple_point_complex_with, MpcVertex,
    MultiPointComplex, DEFAULT_MPC_VERTEX_GUARD,
};
pub use random::{random_complex, random_partitioned_complex};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti_with, BettiVector};
use crate::leray::leray_number;

/// A complex together with a partition of its vertices such that no simplex
/// meets a part twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedComplex {
    complex: SimplicialComplex,
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
}

impl PartitionedComplex {
    pub fn new(complex: SimplicialComplex, parts: Vec<Vec<usize>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let n = complex.vertex_count();
        let mut part_of = vec![usize::MAX; n];
        let mut parts = parts;
        for (i, p) in parts.iter_mut().enumerate() {
            if p.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            p.sort_unstable();
            for &v in p.iter() {
                if v >= n {
                    return Err(Error::UnknownVertex(v));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} lies in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} lies in no part")));
        }
        for f in complex.facets() {
            let mut seen = std::collections::HashSet::new();
            for &v in f.vertices() {
                if !seen.insert(part_of[v]) {
                    return Err(Error::InvalidPartition(format!(
                        "facet {f} meets part {} twice",
                        part_of[v]
                    )));
                }
            }
        }
        Ok(PartitionedComplex {
            complex,
            parts,
            part_of,
        })
    }

    /// Every vertex in its own part.
    pub fn singletons(complex: SimplicialComplex) -> Self {
        let n = complex.vertex_count();
        PartitionedComplex {
            complex,
            parts: (0..n).map(|v| vec![v]).collect(),
            part_of: (0..n).collect(),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// The full simplex `σ` as a factor on the same vertex table and parts.
    /// Vertices outside `σ` are unused by this factor.
    pub fn simplex_factor(&self, sigma: &Simplex) -> Result<PartitionedComplex> {
        if !self.complex.contains(sigma) {
            return Err(Error::NotAFace(sigma.clone()));
        }
        Ok(PartitionedComplex {
            complex: SimplicialComplex::raw(self.complex.vertex_count(), vec![sigma.clone()]),
            parts: self.parts.clone(),
            part_of: self.part_of.clone(),
        })
    }

    /// `π(σ)`, the set of parts met by `σ`.
    pub fn image(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.part_of[v])
    }

    /// Simplices of `X` grouped by their image in `π(X)`; each group is
    /// sorted lexicographically, keys ascend by size then lexicographically.
    pub fn sections(&self, limit: usize) -> Result<Vec<(Simplex, Vec<Simplex>)>> {
        let mut by_image: BTreeMap<(usize, Simplex), Vec<Simplex>> = BTreeMap::new();
        for s in self.complex.simplices(limit)? {
            if s.is_empty() {
                continue;
            }
            let img = self.image(&s);
            by_image.entry((img.len(), img)).or_default().push(s);
        }
        Ok(by_image
            .into_iter()
            .map(|((_, img), mut v)| {
                v.sort_unstable();
                (img, v)
            })
            .collect())
    }
}

/// `Y = π(X)` on the vertex set of parts.
pub fn project(px: &PartitionedComplex) -> SimplicialComplex {
    if px.complex.is_void() {
        return SimplicialComplex::void();
    }
    let facets = px.complex.facets().iter().map(|f| px.image(f)).collect();
    SimplicialComplex::raw(px.part_count(), facets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberBound {
    pub r: usize,
    /// First simplex of `π(X)` (by size, then lexicographically) attaining `r`.
    pub witness: Simplex,
}

/// `r(X, π)`: the largest number of sections of `π` over a nonempty simplex
/// of the image.
pub fn fiber_bound(px: &PartitionedComplex) -> Result<FiberBound> {
    fiber_bound_with(px, DEFAULT_SIMPLEX_GUARD)
}

pub fn fiber_bound_with(px: &PartitionedComplex, limit: usize) -> Result<FiberBound> {
    let mut best = FiberBound {
        r: 0,
        witness: Simplex::empty(),
    };
    for (img, secs) in px.sections(limit)? {
        if secs.len() > best.r {
            best = FiberBound {
                r: secs.len(),
                witness: img,
            };
        }
    }
    Ok(best)
}

/// `σ̃`: the union of the parts met by `σ`.
pub fn tilde_closure(px: &PartitionedComplex, sigma: &Simplex) -> Result<Vec<usize>> {
    if !px.complex.contains(sigma) {
        return Err(Error::NotAFace(sigma.clone()));
    }
    let mut out: Vec<usize> = px
        .image(sigma)
        .vertices()
        .iter()
        .flat_map(|&i| px.parts[i].iter().copied())
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub leray_x: usize,
    pub fiber_bound: usize,
    pub leray_y: usize,
    /// `r * L(X) + r - 1`
    pub bound: usize,
    pub holds: bool,
    pub tight: bool,
}

/// Compares `L(π(X))` with `r L(X) + r - 1`.
pub fn check_projection_theorem(px: &PartitionedComplex) -> Result<ProjectionReport> {
    let leray_x = leray_number(&px.complex)?;
    let r = fiber_bound(px)?.r;
    let leray_y = leray_number(&project(px))?;
    let bound = (r * leray_x + r).saturating_sub(1);
    Ok(ProjectionReport {
        leray_x,
        fiber_bound: r,
        leray_y,
        bound,
        holds: leray_y <= bound,
        tight: leray_y == bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub factor_leray: Vec<usize>,
    pub leray_sum: usize,
    pub betti: BettiVector,
    /// Lowest degree `>= leray_sum` with nonzero reduced homology.
    pub violation: Option<usize>,
    pub holds: bool,
}

/// Reduced homology of `M(X_1, ..., X_k)` must vanish from degree
/// `L(X_1) + ... + L(X_k)` on.
pub fn check_mps_vanishing(pxs: &[PartitionedComplex]) -> Result<VanishingReport> {
    let m = generalized_mpc(pxs)?;
    let betti = reduced_betti_with(&m.to_complex(DEFAULT_SIMPLEX_GUARD)?.complex, DEFAULT_SIMPLEX_GUARD)?;
    let factor_leray = pxs
        .iter()
        .map(|p| leray_number(p.complex()))
        .collect::<Result<Vec<_>>>()?;
    let leray_sum: usize = factor_leray.iter().sum();
    let violation = (leray_sum..betti.reduced.len()).find(|&j| betti.reduced[j] != 0);
    Ok(VanishingReport {
        factor_leray,
        leray_sum,
        betti,
        violation,
        holds: violation.is_none(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub factor_leray: Vec<usize>,
    pub leray_intersection: usize,
    pub bound: usize,
    pub holds: bool,
    pub tight: bool,
}

/// Compares `L(X_1 ∩ ... ∩ X_k)` with `L(X_1) + ... + L(X_k)`.
pub fn check_intersection_bound(xs: &[SimplicialComplex]) -> Result<IntersectionReport> {
    let Some(first) = xs.first() else {
        return Err(Error::InvalidArgument("no complexes to intersect".into()));
    };
    let mut meet = first.clone();
    for x in &xs[1..] {
        meet = meet.intersection(x)?;
    }
    let factor_leray = xs.iter().map(leray_number).collect::<Result<Vec<_>>>()?;
    let bound = factor_leray.iter().sum();
    let leray_intersection = leray_number(&meet)?;
    Ok(IntersectionReport {
        factor_leray,
        leray_intersection,
        bound,
        holds: leray_intersection <= bound,
        tight: leray_intersection == bound,
    })
}

/// The complex attaining equality in the projection bound.
///
/// With `m = rd`, part `i` is `{i} × [r]` (vertex id `i·r + j`). The parts are
/// grouped in blocks `A_k` of `d` consecutive parts, and layer `k` is the join
/// of the full simplices on `A_l × {k}` for `l ≠ k` with the boundary of the
/// simplex on `A_k × {k}`. `X` is the union of the `r` layers.
pub fn extremal_example(r: usize, d: usize) -> Result<PartitionedComplex> {
    if r < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!(
            "extremal example needs r >= 1 and d >= 2 (got r = {r}, d = {d})"
        )));
    }
    let m = r * d;
    let id = |i: usize, j: usize| i * r + j;
    let mut facets = Vec::with_capacity(r * d);
    for k in 0..r {
        for skip in k * d..(k + 1) * d {
            facets.push(Simplex::new((0..m).filter(|&i| i != skip).map(|i| id(i, k))));
        }
    }
    let labels = (0..m)
        .flat_map(|i| (0..r).map(move |j| format!("{}.{}", i + 1, j + 1)))
        .collect();
    let complex = SimplicialComplex::on_vertices(m * r, facets)?.with_labels(labels)?;
    let parts = (0..m).map(|i| (0..r).map(|j| id(i, j)).collect()).collect();
    PartitionedComplex::new(complex, parts)
}
