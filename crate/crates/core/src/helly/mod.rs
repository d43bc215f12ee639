//! Finite set families, their nerves and Helly numbers.
//!
//! Geometric members are axis-parallel boxes with exact rational bounds, or
//! finite unions of such boxes. Every nonempty intersection of boxes is a box,
//! so a box family is a good cover.

mod amenta;
mod random;

pub use amenta::{
    check_amenta, make_fr_family, pieces_projection, AmentaReport, FrFamily, PiecesProjection, PiecesReport,
};
pub use random::{random_box_family, random_fr_family};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{maximal, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::leray::leray_number;

/// Default cap on the member count for the Helly scans.
pub const DEFAULT_HELLY_CAP: usize = 20;
/// Largest family on which the definition scan runs alongside the default
/// algorithm.
pub const DEFINITION_SCAN_CAP: usize = 12;

pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self> {
        Interval::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        (lo <= hi).then(|| Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A product of closed rational intervals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisBox(Vec<Interval>);

impl AxisBox {
    pub fn new(intervals: Vec<Interval>) -> Self {
        AxisBox(intervals)
    }

    /// A box with integer bounds, one `(lo, hi)` pair per axis.
    pub fn from_ints(bounds: &[(i64, i64)]) -> Result<Self> {
        Ok(AxisBox(
            bounds
                .iter()
                .map(|&(lo, hi)| Interval::from_ints(lo, hi))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.0
    }

    pub fn intersect(&self, other: &AxisBox) -> Option<AxisBox> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.intersect(b))
            .collect::<Option<Vec<_>>>()
            .map(AxisBox)
    }

    pub fn meets(&self, other: &AxisBox) -> bool {
        self.intersect(other).is_some()
    }
}

impl fmt::Display for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A finite family of sets with an exact intersection oracle.
pub trait SetFamily: Sync {
    /// A nonempty intersection of members.
    type Meet: Clone + Send + Sync;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn name(&self, i: usize) -> String;

    /// Member `i`, or `None` when it is empty.
    fn member(&self, i: usize) -> Option<Self::Meet>;

    /// `acc ∩ member(i)`, or `None` when empty.
    fn meet(&self, acc: &Self::Meet, i: usize) -> Option<Self::Meet>;

    /// Whether the members in `subset` share a point; true for the empty
    /// subset.
    fn meets(&self, subset: &[usize]) -> bool {
        let Some((&first, rest)) = subset.split_first() else {
            return true;
        };
        let mut acc = match self.member(first) {
            Some(m) => m,
            None => return false,
        };
        for &i in rest {
            match self.meet(&acc, i) {
                Some(m) => acc = m,
                None => return false,
            }
        }
        true
    }
}

fn check_dims(d: usize, boxes: &[AxisBox], name: &str) -> Result<()> {
    match boxes.iter().find(|b| b.dim() != d) {
        Some(b) => Err(Error::InvalidArgument(format!(
            "member {name} has a box of dimension {} in a family of dimension {d}",
            b.dim()
        ))),
        None => Ok(()),
    }
}

/// Named boxes in `R^d`; a member may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxFamily {
    d: usize,
    names: Vec<String>,
    members: Vec<Option<AxisBox>>,
}

impl BoxFamily {
    pub fn new(d: usize, members: Vec<(String, Option<AxisBox>)>) -> Result<Self> {
        for (name, b) in &members {
            check_dims(d, b.as_slice(), name)?;
        }
        let (names, members) = members.into_iter().unzip();
        Ok(BoxFamily { d, names, members })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self) -> &[Option<AxisBox>] {
        &self.members
    }
}

impl SetFamily for BoxFamily {
    type Meet = AxisBox;

    fn len(&self) -> usize {
        self.members.len()
    }

    fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    fn member(&self, i: usize) -> Option<AxisBox> {
        self.members[i].clone()
    }

    fn meet(&self, acc: &AxisBox, i: usize) -> Option<AxisBox> {
        self.members[i].as_ref().and_then(|b| acc.intersect(b))
    }
}

/// Named finite unions of boxes in `R^d`.
///
/// The intersection of several members is carried as the list of nonempty
/// boxes obtained by choosing one box from each member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionFamily {
    d: usize,
    names: Vec<String>,
    members: Vec<Vec<AxisBox>>,
}

impl UnionFamily {
    pub fn new(d: usize, members: Vec<(String, Vec<AxisBox>)>) -> Result<Self> {
        for (name, boxes) in &members {
            check_dims(d, boxes, name)?;
        }
        let (names, members) = members.into_iter().unzip();
        Ok(UnionFamily { d, names, members })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self) -> &[Vec<AxisBox>] {
        &self.members
    }

    /// The nonempty piece-choice boxes of `⋂_{i ∈ subset} G_i`.
    pub fn choice_boxes(&self, subset: &[usize]) -> Vec<AxisBox> {
        let Some((&first, rest)) = subset.split_first() else {
            return Vec::new();
        };
        let mut acc = self.members[first].clone();
        for &i in rest {
            acc = self.meet(&acc, i).unwrap_or_default();
        }
        acc
    }

    /// One-box members become boxes, empty members empty boxes.
    pub fn to_box_family(&self) -> Option<BoxFamily> {
        if self.members.iter().any(|m| m.len() > 1) {
            return None;
        }
        Some(BoxFamily {
            d: self.d,
            names: self.names.clone(),
            members: self.members.iter().map(|m| m.first().cloned()).collect(),
        })
    }
}

impl From<&BoxFamily> for UnionFamily {
    fn from(f: &BoxFamily) -> Self {
        UnionFamily {
            d: f.d,
            names: f.names.clone(),
            members: f.members.iter().map(|m| m.iter().cloned().collect()).collect(),
        }
    }
}

impl SetFamily for UnionFamily {
    type Meet = Vec<AxisBox>;

    fn len(&self) -> usize {
        self.members.len()
    }

    fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    fn member(&self, i: usize) -> Option<Vec<AxisBox>> {
        (!self.members[i].is_empty()).then(|| self.members[i].clone())
    }

    fn meet(&self, acc: &Vec<AxisBox>, i: usize) -> Option<Vec<AxisBox>> {
        let out: Vec<AxisBox> = acc
            .iter()
            .flat_map(|a| self.members[i].iter().filter_map(move |b| a.intersect(b)))
            .collect();
        (!out.is_empty()).then_some(out)
    }
}

/// Named subsets of a finite ground set of atoms `0..atom_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomFamily {
    atom_count: usize,
    names: Vec<String>,
    members: Vec<BTreeSet<usize>>,
}

impl AtomFamily {
    pub fn new(atom_count: usize, members: Vec<(String, Vec<usize>)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut sets = Vec::new();
        for (name, atoms) in members {
            if let Some(&a) = atoms.iter().find(|&&a| a >= atom_count) {
                return Err(Error::InvalidArgument(format!(
                    "member {name} uses atom {a} outside 0..{atom_count}"
                )));
            }
            names.push(name);
            sets.push(atoms.into_iter().collect());
        }
        Ok(AtomFamily {
            atom_count,
            names,
            members: sets,
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn members(&self) -> &[BTreeSet<usize>] {
        &self.members
    }
}

impl SetFamily for AtomFamily {
    type Meet = BTreeSet<usize>;

    fn len(&self) -> usize {
        self.members.len()
    }

    fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    fn member(&self, i: usize) -> Option<BTreeSet<usize>> {
        (!self.members[i].is_empty()).then(|| self.members[i].clone())
    }

    fn meet(&self, acc: &BTreeSet<usize>, i: usize) -> Option<BTreeSet<usize>> {
        let out: BTreeSet<usize> = acc.intersection(&self.members[i]).copied().collect();
        (!out.is_empty()).then_some(out)
    }
}

/// The nerve of a family, on its nonempty members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    pub complex: SimplicialComplex,
    /// `members[v]` is the member index of vertex `v`.
    pub members: Vec<usize>,
}

impl Nerve {
    pub fn member_simplex(&self, s: &Simplex) -> Vec<usize> {
        s.vertices().iter().map(|&v| self.members[v]).collect()
    }
}

/// Subfamilies with a common point, as a simplicial complex. Empty members
/// are not vertices; a family with no nonempty member has the empty complex
/// as its nerve.
pub fn nerve<F: SetFamily>(f: &F) -> Nerve {
    let live: Vec<usize> = (0..f.len()).filter(|&i| f.member(i).is_some()).collect();
    if live.is_empty() {
        return Nerve {
            complex: SimplicialComplex::empty(),
            members: Vec::new(),
        };
    }
    let leaves: Vec<Simplex> = (0..live.len())
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut out = Vec::new();
            let start = f.member(live[v]).unwrap();
            let mut stack = vec![(vec![v], start)];
            while let Some((set, acc)) = stack.pop() {
                let last = *set.last().unwrap();
                let mut extended = false;
                for (w, &member) in live.iter().enumerate().skip(last + 1) {
                    if let Some(next) = f.meet(&acc, member) {
                        let mut s = set.clone();
                        s.push(w);
                        stack.push((s, next));
                        extended = true;
                    }
                }
                if !extended {
                    out.push(Simplex::from_sorted(set));
                }
            }
            out
        })
        .collect();
    let labels = live.iter().map(|&i| f.name(i)).collect();
    let complex = SimplicialComplex::on_vertices(live.len(), maximal(leaves))
        .and_then(|c| c.with_labels(labels))
        .expect("nerve facets cover every vertex");
    Nerve { complex, members: live }
}

/// `face[mask]`: whether the members in `mask` share a point.
fn face_table(member_count: usize, nerve: &Nerve) -> Vec<bool> {
    let mut face = vec![false; 1 << member_count];
    face[0] = true;
    for f in nerve.complex.facets() {
        let mask = f.vertices().iter().fold(0usize, |m, &v| m | 1 << nerve.members[v]);
        face[mask] = true;
    }
    // close downwards
    for bit in 0..member_count {
        for mask in 0..face.len() {
            if mask & (1 << bit) == 0 && face[mask | 1 << bit] {
                face[mask] = true;
            }
        }
    }
    face
}

fn bits(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&b| mask >> b & 1 == 1).collect()
}

/// Largest inclusion-minimal non-face, first in size-then-lexicographic
/// order among those of maximal size.
fn largest_minimal_nonface(face: &[bool]) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for mask in 1..face.len() {
        if face[mask] || bits(mask).iter().any(|&b| !face[mask ^ 1 << b]) {
            continue;
        }
        let set = bits(mask);
        let better = match &best {
            None => true,
            Some(b) => set.len() > b.len() || (set.len() == b.len() && set < *b),
        };
        if better {
            best = Some(set);
        }
    }
    best
}

/// The least `h >= 1` such that, for every subfamily, `h`-wise intersecting
/// implies intersecting.
fn helly_by_definition(member_count: usize, face: &[bool]) -> usize {
    for h in 1..member_count.max(1) {
        let mut good = vec![false; face.len()];
        let mut fails = false;
        for mask in 0..face.len() {
            good[mask] = if (mask.count_ones() as usize) <= h {
                face[mask]
            } else {
                bits(mask).iter().all(|&b| good[mask ^ 1 << b])
            };
            if good[mask] && !face[mask] {
                fails = true;
                break;
            }
        }
        if !fails {
            return h;
        }
    }
    member_count.max(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HellyReport {
    pub helly_number: usize,
    /// A largest subfamily with empty intersection all of whose proper
    /// subfamilies intersect (member indices); empty when every subfamily
    /// intersects.
    pub witness: Vec<usize>,
    pub nerve_leray: usize,
    /// `1 + L(N(F))`.
    pub bound: usize,
    /// The definition scan, run on families of at most
    /// [`DEFINITION_SCAN_CAP`] members.
    pub by_definition: Option<usize>,
}

impl HellyReport {
    pub fn algorithms_agree(&self) -> bool {
        self.by_definition.is_none_or(|h| h == self.helly_number)
    }
}

pub fn helly_number<F: SetFamily>(f: &F) -> Result<HellyReport> {
    helly_number_with(f, DEFAULT_HELLY_CAP)
}

pub fn helly_number_with<F: SetFamily>(f: &F, cap: usize) -> Result<HellyReport> {
    let n = f.len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "family size for the Helly scan",
            count: n,
            cap,
            hint: "",
        });
    }
    let nv = nerve(f);
    let face = face_table(n, &nv);
    let witness = largest_minimal_nonface(&face).unwrap_or_default();
    let nerve_leray = leray_number(&nv.complex)?;
    Ok(HellyReport {
        helly_number: witness.len().max(1),
        witness,
        nerve_leray,
        bound: 1 + nerve_leray,
        by_definition: (n <= DEFINITION_SCAN_CAP).then(|| helly_by_definition(n, &face)),
    })
}

/// The definition scan on its own.
pub fn helly_number_by_definition<F: SetFamily>(f: &F) -> Result<usize> {
    let n = f.len();
    if n > DEFAULT_HELLY_CAP {
        return Err(Error::CapExceeded {
            what: "family size for the Helly scan",
            count: n,
            cap: DEFAULT_HELLY_CAP,
            hint: "",
        });
    }
    Ok(helly_by_definition(n, &face_table(n, &nerve(f))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HlReport {
    #[serde(flatten)]
    pub helly: HellyReport,
    /// `h(F) <= 1 + L(N(F))`.
    pub holds: bool,
    pub tight: bool,
}

pub fn check_hl<F: SetFamily>(f: &F) -> Result<HlReport> {
    let helly = helly_number(f)?;
    Ok(HlReport {
        holds: helly.helly_number <= helly.bound,
        tight: helly.helly_number == helly.bound,
        helly,
    })
}
