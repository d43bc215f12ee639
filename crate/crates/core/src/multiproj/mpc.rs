use std::collections::HashMap;

use super::PartitionedComplex;
use crate::complex::{maximal, Simplex, SimplicialComplex, SubComplex};
use crate::error::{Error, Result};

/// Default cap on `Σ |V_i|^k`, the vertex count of a k-fold multiple-point
/// complex.
pub const DEFAULT_MPC_VERTEX_GUARD: usize = 20_000;

/// Simplicial model of `M(X_1, ..., X_k)`.
///
/// Vertices are pairs `(i, (v_1, ..., v_k))` with every `v_r` in part `V_i`.
/// A set of such vertices over distinct parts is a simplex when, for every
/// coordinate `r`, the `r`-th entries form a simplex of `X_r`. Vertex ids run
/// over parts in order and, within a part, over tuples lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPointComplex {
    k: usize,
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
    position: Vec<usize>,
    offsets: Vec<usize>,
    factors: Vec<SimplicialComplex>,
    distinct_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MpcVertex {
    pub part: usize,
    pub tuple: Vec<usize>,
}

pub fn multiple_point_complex(px: &PartitionedComplex, k: usize) -> Result<MultiPointComplex> {
    multiple_point_complex_with(px, k, DEFAULT_MPC_VERTEX_GUARD)
}

pub fn multiple_point_complex_with(px: &PartitionedComplex, k: usize, guard: usize) -> Result<MultiPointComplex> {
    if k == 0 {
        return Err(Error::InvalidArgument("multiple-point complexes need k >= 1".into()));
    }
    MultiPointComplex::build(px, vec![px.complex().clone(); k], guard)
}

/// `M(X_1, ..., X_k)` for complexes sharing one part structure.
pub fn generalized_mpc(pxs: &[PartitionedComplex]) -> Result<MultiPointComplex> {
    generalized_mpc_with(pxs, DEFAULT_MPC_VERTEX_GUARD)
}

pub fn generalized_mpc_with(pxs: &[PartitionedComplex], guard: usize) -> Result<MultiPointComplex> {
    let Some(first) = pxs.first() else {
        return Err(Error::InvalidArgument("no factors".into()));
    };
    for p in &pxs[1..] {
        if p.parts() != first.parts() {
            return Err(Error::InvalidPartition("factors have different parts".into()));
        }
    }
    MultiPointComplex::build(first, pxs.iter().map(|p| p.complex().clone()).collect(), guard)
}

impl MultiPointComplex {
    fn build(px: &PartitionedComplex, factors: Vec<SimplicialComplex>, guard: usize) -> Result<Self> {
        let k = factors.len();
        let mut offsets = vec![0usize];
        for p in px.parts() {
            let size = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p.len()));
            let next = size.and_then(|s| s.checked_add(*offsets.last().unwrap()));
            match next {
                Some(n) if n <= guard => offsets.push(n),
                _ => {
                    return Err(Error::CapExceeded {
                        what: "multiple-point vertex count",
                        count: next.unwrap_or(usize::MAX),
                        cap: guard,
                        hint: "",
                    })
                }
            }
        }
        let n = px.complex().vertex_count();
        let mut position = vec![0; n];
        for p in px.parts() {
            for (j, &v) in p.iter().enumerate() {
                position[v] = j;
            }
        }
        Ok(MultiPointComplex {
            k,
            parts: px.parts().to_vec(),
            part_of: (0..n).map(|v| px.part_of(v)).collect(),
            position,
            offsets,
            factors,
            distinct_only: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn factors(&self) -> &[SimplicialComplex] {
        &self.factors
    }

    /// The `r`-th factor with the shared parts.
    pub fn partitioned_factor(&self, r: usize) -> PartitionedComplex {
        PartitionedComplex {
            complex: self.factors[r].clone(),
            parts: self.parts.clone(),
            part_of: self.part_of.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// True when all factors coincide, so `S_k` acts on the complex.
    pub fn is_symmetric(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] == w[1])
    }

    /// True for the closure `D^k` of the coordinate-distinct simplices.
    pub fn is_double_point(&self) -> bool {
        self.distinct_only
    }

    pub fn vertex(&self, id: usize) -> MpcVertex {
        let part = self.offsets.partition_point(|&o| o <= id) - 1;
        let size = self.parts[part].len();
        let mut rest = id - self.offsets[part];
        let mut tuple = vec![0; self.k];
        for r in (0..self.k).rev() {
            tuple[r] = self.parts[part][rest % size];
            rest /= size;
        }
        MpcVertex { part, tuple }
    }

    /// Id of the vertex whose coordinates are the given vertices of one part.
    pub fn vertex_id(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.k);
        let part = self.part_of[tuple[0]];
        let size = self.parts[part].len();
        let mut id = 0;
        for &v in tuple {
            debug_assert_eq!(self.part_of[v], part);
            id = id * size + self.position[v];
        }
        self.offsets[part] + id
    }

    /// Splits a simplex into its `k` coordinate simplices (the `r`-th one is a
    /// section of `X_r` over the parts met).
    pub fn columns(&self, s: &Simplex) -> Vec<Simplex> {
        let rows: Vec<MpcVertex> = s.vertices().iter().map(|&v| self.vertex(v)).collect();
        (0..self.k)
            .map(|r| Simplex::new(rows.iter().map(|w| w.tuple[r])))
            .collect()
    }

    /// Inverse of [`columns`](Self::columns): the columns must be sections over
    /// the same parts.
    pub fn from_columns(&self, cols: &[Simplex]) -> Simplex {
        let aligned: Vec<Vec<usize>> = cols
            .iter()
            .map(|c| {
                let mut v = c.vertices().to_vec();
                v.sort_unstable_by_key(|&u| self.part_of[u]);
                v
            })
            .collect();
        Simplex::new((0..aligned[0].len()).map(|j| {
            let tuple: Vec<usize> = aligned.iter().map(|c| c[j]).collect();
            self.vertex_id(&tuple)
        }))
    }

    /// The rows of a simplex: its vertex tuples ordered by part.
    fn rows_distinct(rows: &[Vec<usize>], k: usize) -> bool {
        (0..k).all(|r| (r + 1..k).all(|s| rows.iter().any(|row| row[r] != row[s])))
    }

    /// True when no two coordinates of the simplex agree at every vertex.
    pub fn is_coordinate_distinct(&self, s: &Simplex) -> bool {
        let rows: Vec<Vec<usize>> = s.vertices().iter().map(|&v| self.vertex(v).tuple).collect();
        Self::rows_distinct(&rows, self.k)
    }

    /// `D^k`: the subcomplex generated by the coordinate-distinct simplices.
    pub fn double_point_closure(&self) -> Result<MultiPointComplex> {
        if !self.is_symmetric() {
            return Err(Error::UnequalFactors);
        }
        let mut d = self.clone();
        d.distinct_only = true;
        Ok(d)
    }

    /// Materializes the facets; `limit` caps the number of facet candidates.
    ///
    /// The result is packed onto the vertices actually used; `to_parent` maps
    /// back to vertex ids of this complex. It is the identity unless a factor
    /// leaves part of the shared vertex table unused.
    pub fn to_complex(&self, limit: usize) -> Result<SubComplex> {
        if self.factors.iter().any(SimplicialComplex::is_void) {
            return Ok(SubComplex {
                complex: SimplicialComplex::void(),
                to_parent: Vec::new(),
            });
        }
        // candidates are lists of rows (partial tuples), one per part met,
        // sorted by part; each stage appends one coordinate
        let mut stage: Vec<Vec<Vec<usize>>> = Vec::new();
        for (r, x) in self.factors.iter().enumerate() {
            let mut next: Vec<Vec<Vec<usize>>> = Vec::new();
            for g in x.facets() {
                let mut by_part: HashMap<usize, usize> = HashMap::new();
                for &v in g.vertices() {
                    by_part.insert(self.part_of[v], v);
                }
                if r == 0 {
                    let mut rows: Vec<Vec<usize>> = g.vertices().iter().map(|&v| vec![v]).collect();
                    rows.sort_unstable_by_key(|row| self.part_of[row[0]]);
                    next.push(rows);
                    continue;
                }
                for cand in &stage {
                    let rows: Vec<Vec<usize>> = cand
                        .iter()
                        .filter_map(|row| {
                            by_part.get(&self.part_of[row[0]]).map(|&v| {
                                let mut row = row.clone();
                                row.push(v);
                                row
                            })
                        })
                        .collect();
                    if !rows.is_empty() {
                        next.push(rows);
                    }
                    if next.len() > limit {
                        return Err(Error::SimplexGuard { limit });
                    }
                }
            }
            stage = prune(next);
        }
        if self.distinct_only {
            stage.retain(|rows| Self::rows_distinct(rows, self.k));
            if stage.is_empty() {
                return Ok(SubComplex {
                    complex: SimplicialComplex::void(),
                    to_parent: Vec::new(),
                });
            }
        }
        let facets: Vec<Simplex> = stage
            .iter()
            .map(|rows| Simplex::new(rows.iter().map(|row| self.vertex_id(row))))
            .collect();
        let n = self.vertex_count();
        let base = &self.factors[0];
        let labels = (0..n)
            .map(|id| {
                let w = self.vertex(id);
                let names: Vec<String> = w.tuple.iter().map(|&v| base.label(v)).collect();
                format!("{}:({})", w.part + 1, names.join(","))
            })
            .collect();
        let mut table = SimplicialComplex::raw(n, Vec::new());
        table.set_labels(Some(labels));
        let packed = table.reindexed(facets);
        if packed.to_parent.len() == n {
            let mut complex = packed.complex;
            complex.set_labels(table.labels().map(<[String]>::to_vec));
            return Ok(SubComplex {
                complex,
                to_parent: packed.to_parent,
            });
        }
        Ok(packed)
    }
}

/// Keeps the inclusion-maximal candidates.
fn prune(cands: Vec<Vec<Vec<usize>>>) -> Vec<Vec<Vec<usize>>> {
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut rows_of: Vec<Vec<usize>> = Vec::new();
    let simplices: Vec<Simplex> = cands
        .into_iter()
        .map(|rows| {
            Simplex::new(rows.into_iter().map(|row| {
                let next = ids.len();
                *ids.entry(row.clone()).or_insert_with(|| {
                    rows_of.push(row);
                    next
                })
            }))
        })
        .collect();
    maximal(simplices)
        .into_iter()
        .map(|s| {
            let mut rows: Vec<Vec<usize>> = s.vertices().iter().map(|&i| rows_of[i].clone()).collect();
            rows.sort_unstable();
            rows
        })
        .collect()
}
