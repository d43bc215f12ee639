//! Finite abstract simplicial complexes stored by their facets.
//!
//! A complex lives on the vertex table `0..vertex_count`. Every vertex of the
//! table must occur in some facet, so sub-objects such as links and induced
//! subcomplexes are re-indexed and carry a map back to their parent.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no simplices
//! at all, while the *empty* complex contains only the empty simplex.

mod graph;
mod order;

pub use graph::{clique_complex, is_chordal, Graph};
pub(crate) use order::next_permutation;
pub use order::{subdivision, upper_interval, OrderComplex};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of simplices materialized from a facet list.
pub const DEFAULT_SIMPLEX_GUARD: usize = 2_000_000;

/// A finite set of vertices, stored strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from arbitrary vertex ids; duplicates collapse.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// Wraps an already strictly increasing vertex list.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    v.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    v.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Simplex(v)
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// Codimension-one faces with their incidence signs: deleting the vertex at
    /// position `j` contributes `(-1)^j`.
    pub fn boundary(&self) -> impl Iterator<Item = (i8, Simplex)> + '_ {
        (0..self.len()).map(move |j| {
            let mut v = self.0.clone();
            v.remove(j);
            (if j % 2 == 0 { 1 } else { -1 }, Simplex(v))
        })
    }

    /// Every face, including the empty one and the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.len();
        assert!(n < 64, "simplex too large to enumerate its faces");
        (0u64..(1u64 << n)).map(move |mask| Simplex((0..n).filter(|b| mask >> b & 1 == 1).map(|b| self.0[b]).collect()))
    }

    /// Applies a vertex map, re-sorting the result.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Simplex {
        Simplex::new(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Simplex {
    fn from(v: [usize; N]) -> Self {
        Simplex::new(v)
    }
}

impl serde::Serialize for Simplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Orders simplices by size, then lexicographically.
pub fn size_lex(a: &Simplex, b: &Simplex) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A finite abstract simplicial complex in facet representation.
///
/// Equality compares the vertex table size and the facet set; labels are
/// carried for reports only.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Simplex>,
    labels: Option<Vec<String>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

/// A complex obtained from a parent by restriction, with its vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubComplex {
    pub complex: SimplicialComplex,
    /// `to_parent[v]` is the parent id of vertex `v`.
    pub to_parent: Vec<usize>,
}

impl SubComplex {
    pub fn parent_simplex(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.to_parent[v])
    }
}

impl SimplicialComplex {
    /// Builds a complex from a list of simplices; non-maximal entries are
    /// absorbed and the vertex table is `0..=max id`.
    pub fn from_facets<I, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let facets: Vec<Simplex> = facets
            .into_iter()
            .map(|f| Simplex::new(f.as_ref().iter().copied()))
            .collect();
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let vertex_count = facets
            .iter()
            .filter_map(|f| f.vertices().last())
            .max()
            .map_or(0, |m| m + 1);
        Self::on_vertices(vertex_count, facets)
    }

    /// Builds a complex on the vertex table `0..vertex_count`.
    pub fn on_vertices(vertex_count: usize, facets: Vec<Simplex>) -> Result<Self> {
        let mut seen = vec![false; vertex_count];
        for f in &facets {
            for &v in f.vertices() {
                if v >= vertex_count {
                    return Err(Error::UnknownVertex(v));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::PhantomVertex(v));
        }
        Ok(Self::raw(vertex_count, facets))
    }

    /// Canonicalizes without the phantom-vertex check.
    pub(crate) fn raw(vertex_count: usize, facets: Vec<Simplex>) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: maximal(facets),
            labels: None,
        }
    }

    /// The complex with no simplices at all.
    pub fn void() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            facets: Vec::new(),
            labels: None,
        }
    }

    /// The complex whose only simplex is the empty simplex.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            facets: vec![Simplex::empty()],
            labels: None,
        }
    }

    /// The full simplex on `n` vertices (`n = 0` gives the empty complex).
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            vertex_count: n,
            facets: vec![Simplex::from_sorted((0..n).collect())],
            labels: None,
        }
    }

    /// All proper faces of the simplex on `n >= 1` vertices, a sphere of
    /// dimension `n - 2`.
    pub fn boundary_complex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("boundary of the empty simplex".into()));
        }
        if n == 1 {
            return Ok(Self::empty());
        }
        let facets = (0..n)
            .map(|skip| Simplex::from_sorted((0..n).filter(|&v| v != skip).collect()))
            .collect();
        Ok(Self::raw(n, facets))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::Format(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.vertex_count));
        self.labels = labels;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// True when the complex has a single facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Largest facet dimension; -1 for both the void and the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Every simplex (the empty one included for nonvoid complexes), sorted by
    /// size and then lexicographically.
    pub fn simplices(&self, limit: usize) -> Result<Vec<Simplex>> {
        let mut set: HashSet<Simplex> = HashSet::new();
        for f in &self.facets {
            if f.len() >= 63 || (1usize << f.len()) > limit.saturating_mul(2) + 2 {
                return Err(Error::SimplexGuard { limit });
            }
            for s in f.faces() {
                set.insert(s);
                if set.len() > limit {
                    return Err(Error::SimplexGuard { limit });
                }
            }
        }
        let mut all: Vec<Simplex> = set.into_iter().collect();
        all.sort_unstable_by(size_lex);
        Ok(all)
    }

    /// Face counts `f_0, f_1, ..., f_dim`.
    pub fn f_vector(&self, limit: usize) -> Result<Vec<usize>> {
        let mut f = vec![0usize; (self.dim() + 1).max(0) as usize];
        for s in self.simplices(limit)? {
            if !s.is_empty() {
                f[s.len() - 1] += 1;
            }
        }
        Ok(f)
    }

    fn check_vertices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.vertex_count) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// The induced subcomplex `X[S]`, re-indexed along `S` in increasing order.
    pub fn induced(&self, subset: &[usize]) -> Result<SubComplex> {
        self.check_vertices(subset)?;
        let keep = Simplex::new(subset.iter().copied());
        if self.is_void() {
            return Ok(SubComplex {
                complex: Self::void(),
                to_parent: Vec::new(),
            });
        }
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.vertices().iter().enumerate() {
            index[v] = i;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.intersection(&keep).map(|v| index[v]))
            .collect();
        let mut complex = Self::raw(keep.len(), facets);
        complex.labels = self.sub_labels(keep.vertices());
        Ok(SubComplex {
            complex,
            to_parent: keep.into_vertices(),
        })
    }

    /// `lk(X, A) = { τ ∈ X : τ ∪ A ∈ X, τ ∩ A = ∅ }`, re-indexed onto its own
    /// vertices.
    pub fn link(&self, a: &Simplex) -> Result<SubComplex> {
        if !self.contains(a) {
            return Err(Error::NotAFace(a.clone()));
        }
        if a.is_empty() {
            return Ok(SubComplex {
                complex: self.clone(),
                to_parent: (0..self.vertex_count).collect(),
            });
        }
        let pieces: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| a.is_face_of(f))
            .map(|f| f.difference(a))
            .collect();
        Ok(self.reindexed(pieces))
    }

    /// Packs simplices on a subset of this vertex table into a standalone
    /// complex on exactly the vertices they use.
    pub(crate) fn reindexed(&self, facets: Vec<Simplex>) -> SubComplex {
        let used: BTreeSet<usize> = facets.iter().flat_map(|f| f.vertices().to_vec()).collect();
        let to_parent: Vec<usize> = used.into_iter().collect();
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let facets = facets.iter().map(|f| f.map(|v| index[v])).collect();
        let mut complex = Self::raw(to_parent.len(), facets);
        complex.labels = self.sub_labels(&to_parent);
        SubComplex { complex, to_parent }
    }

    fn sub_labels(&self, ids: &[usize]) -> Option<Vec<String>> {
        self.labels
            .as_ref()
            .map(|l| ids.iter().map(|&v| l[v].clone()).collect())
    }

    /// The join on concatenated vertex tables: vertices of `other` are shifted
    /// by `self.vertex_count()`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertex_count;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut v = f.vertices().to_vec();
                v.extend(g.vertices().iter().map(|x| x + shift));
                facets.push(Simplex::from_sorted(v));
            }
        }
        let mut out = Self::raw(self.vertex_count + other.vertex_count, facets);
        if self.labels.is_some() || other.labels.is_some() {
            out.labels = Some(
                (0..self.vertex_count)
                    .map(|v| self.label(v))
                    .chain((0..other.vertex_count).map(|v| other.label(v)))
                    .collect(),
            );
        }
        out
    }

    fn same_table(&self, other: &SimplicialComplex) -> Result<()> {
        if self.is_void() || other.is_void() || self.vertex_count == other.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexTableMismatch(self.vertex_count, other.vertex_count))
        }
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_table(other)?;
        if self.is_void() {
            return Ok(other.clone());
        }
        let facets = self.facets.iter().chain(&other.facets).cloned().collect();
        let mut out = Self::raw(self.vertex_count.max(other.vertex_count), facets);
        out.labels = self.labels.clone().or_else(|| other.labels.clone());
        Ok(out)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_table(other)?;
        if self.is_void() || other.is_void() {
            return Ok(Self::void());
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.intersection(g));
            }
        }
        let mut out = Self::raw(self.vertex_count, facets);
        out.labels = self.labels.clone().or_else(|| other.labels.clone());
        Ok(out)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        let mut seen = vec![false; self.vertex_count];
        if perm.len() != self.vertex_count
            || perm
                .iter()
                .any(|&p| p >= self.vertex_count || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidArgument("not a permutation of the vertex table".into()));
        }
        let facets = self.facets.iter().map(|f| f.map(|v| perm[v])).collect();
        Ok(Self::raw(self.vertex_count, facets))
    }

    /// Checks that `vertex_map` is a bijection of vertex tables carrying the
    /// facets of `self` exactly onto the facets of `other`.
    pub fn is_isomorphism(&self, other: &SimplicialComplex, vertex_map: &[usize]) -> bool {
        if self.vertex_count != other.vertex_count
            || vertex_map.len() != self.vertex_count
            || self.facets.len() != other.facets.len()
        {
            return false;
        }
        let mut seen = vec![false; other.vertex_count];
        for &w in vertex_map {
            if w >= other.vertex_count || std::mem::replace(&mut seen[w], true) {
                return false;
            }
        }
        let mut image: Vec<Simplex> = self.facets.iter().map(|f| f.map(|v| vertex_map[v])).collect();
        image.sort();
        image == other.facets
    }
}

/// Drops duplicates and non-maximal entries; returns the survivors sorted.
pub(crate) fn maximal(mut candidates: Vec<Simplex>) -> Vec<Simplex> {
    candidates.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    candidates.dedup();
    let mut kept: Vec<Simplex> = Vec::new();
    // vertex -> indices of kept facets containing it
    let mut by_vertex: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        let covered = if c.is_empty() {
            !kept.is_empty()
        } else {
            let pivot = c
                .vertices()
                .iter()
                .min_by_key(|&&v| by_vertex.get(v).map_or(0, Vec::len))
                .copied()
                .unwrap();
            by_vertex
                .get(pivot)
                .is_some_and(|ids| ids.iter().any(|&i| c.is_face_of(&kept[i])))
        };
        if !covered {
            for &v in c.vertices() {
                if by_vertex.len() <= v {
                    by_vertex.resize_with(v + 1, Vec::new);
                }
                by_vertex[v].push(kept.len());
            }
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept
}
