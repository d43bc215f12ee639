//! The symmetric-group action on multiple-point complexes, alternating chain
//! complexes and the first page of the image-computing spectral sequence.
//!
//! Only page dimensions are computed, never differentials.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{next_permutation, Simplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::{Error, Result};
use crate::homology::{homology_from_ranks, reduced_betti, unreduced_betti};
use crate::leray::{combinations, leray_number};
use crate::linalg::{rank, SparseMatrix};
use crate::multiproj::{
    fiber_bound_with, multiple_point_complex_with, project, MultiPointComplex, PartitionedComplex,
    DEFAULT_MPC_VERTEX_GUARD,
};

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..k).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Sign of the permutation that sorts `items` (which must be distinct).
pub fn sort_sign<T: Ord>(items: &[T]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] > items[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A vertex bijection acting on oriented simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMap {
    vertex_map: Vec<usize>,
}

impl SignedMap {
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Image of an oriented simplex: the sorted image and the sign of the
    /// reordering.
    pub fn apply(&self, s: &Simplex) -> (i8, Simplex) {
        let img: Vec<usize> = s.vertices().iter().map(|&v| self.vertex_map[v]).collect();
        (sort_sign(&img), Simplex::new(img))
    }
}

/// The action of a permutation of the `k` coordinates on `M_k`: coordinate
/// `c` of a vertex tuple moves to position `perm[c]`.
pub fn sym_action(m: &MultiPointComplex, perm: &[usize]) -> Result<SignedMap> {
    if !m.is_symmetric() {
        return Err(Error::UnequalFactors);
    }
    let k = m.k();
    let mut seen = vec![false; k];
    if perm.len() != k || perm.iter().any(|&c| c >= k || std::mem::replace(&mut seen[c], true)) {
        return Err(Error::InvalidArgument(format!(
            "{perm:?} is not a permutation of 0..{k}"
        )));
    }
    let vertex_map = (0..m.vertex_count())
        .map(|id| {
            let w = m.vertex(id);
            let mut t = vec![0; k];
            for c in 0..k {
                t[perm[c]] = w.tuple[c];
            }
            m.vertex_id(&t)
        })
        .collect();
    Ok(SignedMap { vertex_map })
}

/// Basis simplices of one degree, each with its boundary as signed terms.
type Level = Vec<(Simplex, Vec<(Simplex, i64)>)>;

/// Chains fixed by the alternating projector, with `1/k!` dropped.
///
/// Degree `q` has one basis element `Alt(ρ)` per orbit of `q`-simplices whose
/// stabilizer contains no element acting by an odd signed permutation; `ρ`
/// is the lexicographically least simplex of the orbit, written in vertex ids
/// of the multiple-point complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltChainComplex {
    pub basis: Vec<Vec<Simplex>>,
    /// `boundaries[q]` maps degree `q` to degree `q - 1`; it has no rows for
    /// `q = 0`.
    pub boundaries: Vec<SparseMatrix>,
}

impl AltChainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Unreduced homology dimensions, without trailing zeros.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.par_iter().map(rank).collect();
        trimmed(homology_from_ranks(&self.dims(), &ranks))
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    fn assemble(levels: Vec<Level>) -> Self {
        let mut levels = levels;
        while levels.last().is_some_and(Vec::is_empty) {
            levels.pop();
        }
        for level in &mut levels {
            level.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        }
        let index: Vec<HashMap<&Simplex, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, (s, _))| (s, i)).collect())
            .collect();
        let boundaries = (0..levels.len())
            .map(|q| {
                let rows = if q == 0 { 0 } else { levels[q - 1].len() };
                let mut m = SparseMatrix::new(rows);
                for (_, faces) in &levels[q] {
                    let mut col: BTreeMap<usize, i64> = BTreeMap::new();
                    if q > 0 {
                        for (f, c) in faces {
                            *col.entry(index[q - 1][f]).or_insert(0) += c;
                        }
                    }
                    m.push_column(col.into_iter().filter(|&(_, c)| c != 0).collect());
                }
                m
            })
            .collect();
        let basis = levels
            .into_iter()
            .map(|l| l.into_iter().map(|(s, _)| s).collect())
            .collect();
        AltChainComplex { basis, boundaries }
    }
}

fn trimmed(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `Alt(s) = coef * Alt(rep)`; `coef` is 0 when `Alt(s)` vanishes.
fn classify(actions: &[(i8, SignedMap)], s: &Simplex) -> (Simplex, i64) {
    let images: Vec<(i64, Simplex)> = actions
        .iter()
        .map(|(sign, g)| {
            let (e, img) = g.apply(s);
            ((*sign * e) as i64, img)
        })
        .collect();
    if images.iter().any(|(c, img)| img == s && *c == -1) {
        let rep = images.into_iter().map(|(_, img)| img).min().unwrap();
        return (rep, 0);
    }
    let (c, rep) = images.into_iter().min_by(|a, b| a.1.cmp(&b.1)).unwrap();
    (rep, c)
}

fn actions(m: &MultiPointComplex) -> Result<Vec<(i8, SignedMap)>> {
    permutations(m.k())
        .into_iter()
        .map(|p| Ok((sort_sign(&p), sym_action(m, &p)?)))
        .collect()
}

pub fn alt_chain_complex(m: &MultiPointComplex) -> Result<AltChainComplex> {
    alt_chain_complex_with(m, DEFAULT_SIMPLEX_GUARD)
}

/// Materializes `M_k` (or `D^k`) and reduces its simplices to orbit
/// representatives; `limit` caps the simplex count.
pub fn alt_chain_complex_with(m: &MultiPointComplex, limit: usize) -> Result<AltChainComplex> {
    let actions = actions(m)?;
    let sub = m.to_complex(limit)?;
    if sub.complex.is_void() {
        return Ok(AltChainComplex::assemble(Vec::new()));
    }
    let simplices: Vec<Simplex> = sub
        .complex
        .simplices(limit)?
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| sub.parent_simplex(s))
        .collect();
    let classes: HashMap<Simplex, (Simplex, i64)> = simplices
        .par_iter()
        .map(|s| (s.clone(), classify(&actions, s)))
        .collect();
    let mut levels: Vec<Level> = Vec::new();
    for s in &simplices {
        let (rep, coef) = &classes[s];
        if *coef == 0 || rep != s {
            continue;
        }
        let q = s.len() - 1;
        if levels.len() <= q {
            levels.resize_with(q + 1, Vec::new);
        }
        let faces = if q == 0 {
            Vec::new()
        } else {
            s.boundary()
                .filter_map(|(sign, f)| {
                    let (r, c) = &classes[&f];
                    (*c != 0).then(|| (r.clone(), sign as i64 * c))
                })
                .collect()
        };
        levels[q].push((s.clone(), faces));
    }
    Ok(AltChainComplex::assemble(levels))
}

pub fn alt_chain_complex_from_sections(m: &MultiPointComplex) -> Result<AltChainComplex> {
    alt_chain_complex_from_sections_with(m, DEFAULT_SIMPLEX_GUARD)
}

/// The same complex as [`alt_chain_complex`] for `M_k`, computed without
/// materializing it.
///
/// A simplex of `M_k` over parts `J` is a `k`-tuple of sections over `J`, and
/// it survives the projector exactly when the sections are pairwise
/// distinct. The basis in degree `|J| - 1` is thus indexed by the `k`-subsets
/// of distinct sections over each `J`. `limit` caps both the simplex count of
/// the factor and the basis size.
pub fn alt_chain_complex_from_sections_with(m: &MultiPointComplex, limit: usize) -> Result<AltChainComplex> {
    if !m.is_symmetric() {
        return Err(Error::UnequalFactors);
    }
    if m.is_double_point() {
        return Err(Error::InvalidArgument(
            "the section model describes M_k, not its double-point closure".into(),
        ));
    }
    let k = m.k();
    let px = m.partitioned_factor(0);
    if px.complex().is_void() {
        return Ok(AltChainComplex::assemble(Vec::new()));
    }
    // each section is written with its vertices ordered by part
    let to_id = |cols: &[&Vec<usize>]| {
        Simplex::new((0..cols[0].len()).map(|j| {
            let tuple: Vec<usize> = cols.iter().map(|c| c[j]).collect();
            m.vertex_id(&tuple)
        }))
    };
    let mut levels: Vec<Level> = Vec::new();
    let mut total = 0usize;
    for (_, secs) in px.sections(limit)? {
        let mut secs: Vec<Vec<usize>> = secs
            .into_iter()
            .map(|s| {
                let mut v = s.into_vertices();
                v.sort_unstable_by_key(|&u| px.part_of(u));
                v
            })
            .collect();
        secs.sort_unstable();
        let q = secs[0].len() - 1;
        for choice in combinations(secs.len(), k) {
            total += 1;
            if total > limit {
                return Err(Error::SimplexGuard { limit });
            }
            let cols: Vec<&Vec<usize>> = choice.iter().map(|&i| &secs[i]).collect();
            let mut faces = Vec::new();
            for i in 0..=q {
                if q == 0 {
                    break;
                }
                let restricted: Vec<Vec<usize>> = cols
                    .iter()
                    .map(|c| c.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect())
                    .collect();
                let mut sorted = restricted.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 } * sort_sign(&restricted) as i64;
                let refs: Vec<&Vec<usize>> = sorted.iter().collect();
                faces.push((to_id(&refs), sign));
            }
            if levels.len() <= q {
                levels.resize_with(q + 1, Vec::new);
            }
            levels[q].push((to_id(&cols), faces));
        }
    }
    Ok(AltChainComplex::assemble(levels))
}

/// `dim Alt H_q` for every `q` (unreduced).
///
/// `M_k` is handled through its sections; the double-point closure is
/// materialized.
pub fn alt_betti(m: &MultiPointComplex) -> Result<Vec<usize>> {
    if m.is_double_point() {
        Ok(alt_chain_complex(m)?.betti())
    } else {
        Ok(alt_chain_complex_from_sections(m)?.betti())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IcssConfig {
    pub simplex_guard: usize,
    pub vertex_guard: usize,
}

impl Default for IcssConfig {
    fn default() -> Self {
        IcssConfig {
            simplex_guard: DEFAULT_SIMPLEX_GUARD,
            vertex_guard: DEFAULT_MPC_VERTEX_GUARD,
        }
    }
}

/// Dimensions of `E^1_{p,q} = Alt H_q(M_{p+1})`, unreduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Page {
    pub r: usize,
    /// `table[p][q]` for `0 <= p < r`.
    pub table: Vec<Vec<usize>>,
    /// The column at `p = r`, computed to confirm that it vanishes.
    pub column_r: Vec<usize>,
    /// Unreduced Betti numbers of the image, without trailing zeros.
    pub image_betti: Vec<usize>,
}

impl E1Page {
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.table.get(p).and_then(|c| c.get(q)).copied().unwrap_or(0)
    }

    pub fn column_r_vanishes(&self) -> bool {
        self.column_r.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^(p+q) dim E^1_{p,q}`.
    pub fn euler_sum(&self) -> i64 {
        let mut sum = 0i64;
        for (p, col) in self.table.iter().enumerate() {
            for (q, &b) in col.iter().enumerate() {
                sum += if (p + q) % 2 == 0 { b as i64 } else { -(b as i64) };
            }
        }
        sum
    }

    /// Nonzero entries with `p + q >= threshold`.
    pub fn entries_at_or_above(&self, threshold: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, col) in self.table.iter().enumerate() {
            for (q, &b) in col.iter().enumerate() {
                if b != 0 && p + q >= threshold {
                    out.push((p, q));
                }
            }
        }
        out
    }
}

pub fn e1_page(px: &PartitionedComplex) -> Result<E1Page> {
    e1_page_with(px, &IcssConfig::default())
}

/// Columns `p = 0..=r` are computed independently.
pub fn e1_page_with(px: &PartitionedComplex, cfg: &IcssConfig) -> Result<E1Page> {
    let r = fiber_bound_with(px, cfg.simplex_guard)?.r;
    let mut columns = (0..=r)
        .into_par_iter()
        .map(|p| {
            let m = multiple_point_complex_with(px, p + 1, cfg.vertex_guard)?;
            Ok(alt_chain_complex_from_sections_with(&m, cfg.simplex_guard)?.betti())
        })
        .collect::<Result<Vec<_>>>()?;
    let column_r = columns.pop().unwrap_or_default();
    Ok(E1Page {
        r,
        table: columns,
        column_r,
        image_betti: trimmed(unreduced_betti(&project(px))?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltIsoReport {
    pub k: usize,
    pub dims_double_point: Vec<usize>,
    pub dims_full: Vec<usize>,
    /// The inclusion `D^k -> M_k` is a bijection on alternating chains.
    pub bijective: bool,
    pub holds: bool,
}

/// Compares the alternating chains of `D^k` and `M_k`, both materialized.
pub fn check_alt_chain_iso(m: &MultiPointComplex) -> Result<AltIsoReport> {
    check_alt_chain_iso_with(m, DEFAULT_SIMPLEX_GUARD)
}

pub fn check_alt_chain_iso_with(m: &MultiPointComplex, limit: usize) -> Result<AltIsoReport> {
    let full = alt_chain_complex_with(m, limit)?;
    let double = alt_chain_complex_with(&m.double_point_closure()?, limit)?;
    let actions = actions(m)?;
    let mut bijective = full.basis.len() == double.basis.len();
    for (q, reps) in double.basis.iter().enumerate() {
        if !bijective {
            break;
        }
        let index: HashMap<&Simplex, usize> = full.basis[q].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut inclusion = SparseMatrix::new(full.basis[q].len());
        for s in reps {
            let (rep, coef) = classify(&actions, s);
            inclusion.push_column(match index.get(&rep) {
                Some(&i) if coef != 0 => vec![(i, coef)],
                _ => Vec::new(),
            });
        }
        bijective = inclusion.rows == inclusion.cols() && rank(&inclusion) == inclusion.rows;
    }
    let dims_full = full.dims();
    let dims_double_point = double.dims();
    Ok(AltIsoReport {
        k: m.k(),
        holds: bijective && dims_full == dims_double_point,
        dims_double_point,
        dims_full,
        bijective,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub euler_image: i64,
    pub page_sum: i64,
    pub holds: bool,
}

/// `χ(Y)` against the alternating sum of the page.
pub fn check_euler(px: &PartitionedComplex) -> Result<EulerReport> {
    euler_report(px, &e1_page(px)?)
}

pub fn euler_report(px: &PartitionedComplex, page: &E1Page) -> Result<EulerReport> {
    let euler_image = reduced_betti(&project(px))?.euler;
    let page_sum = page.euler_sum();
    Ok(EulerReport {
        euler_image,
        page_sum,
        holds: euler_image == page_sum,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageVanishingReport {
    pub r: usize,
    pub leray_x: usize,
    /// `r L(X) + r - 1`.
    pub threshold: usize,
    /// The region is only claimed when `L(X) > 0`; otherwise `X` is a
    /// simplex and the page is its homology.
    pub applies: bool,
    /// Nonzero entries `(p, q)` with `p + q` at or above the threshold.
    pub violations: Vec<(usize, usize)>,
    pub column_r_vanishes: bool,
    pub holds: bool,
}

/// For `L(X) > 0` the page vanishes on `p + q >= r L(X) + r - 1`; it always
/// vanishes beyond column `r - 1`.
pub fn check_proof_vanishing(px: &PartitionedComplex) -> Result<PageVanishingReport> {
    page_vanishing_report(px, &e1_page(px)?)
}

pub fn page_vanishing_report(px: &PartitionedComplex, page: &E1Page) -> Result<PageVanishingReport> {
    let leray_x = leray_number(px.complex())?;
    let threshold = (page.r * leray_x + page.r).saturating_sub(1);
    let applies = leray_x > 0;
    let violations = if applies {
        page.entries_at_or_above(threshold)
    } else {
        Vec::new()
    };
    let column_r_vanishes = page.column_r_vanishes();
    Ok(PageVanishingReport {
        r: page.r,
        leray_x,
        threshold,
        applies,
        holds: violations.is_empty() && column_r_vanishes,
        violations,
        column_r_vanishes,
    })
}
