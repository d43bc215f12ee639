use serde::Serialize;

use super::{helly_number, nerve, AxisBox, BoxFamily, SetFamily, UnionFamily};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::leray::leray_number;
use crate::multiproj::{fiber_bound, project, PartitionedComplex};

/// Members `G_i`, each a disjoint union of at most `r` boxes (the pieces
/// `F_ij`), such that every intersection of members is a disjoint union of at
/// most `r` boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrFamily {
    pieces: BoxFamily,
    groups: Vec<Vec<usize>>,
    group_names: Vec<String>,
    r: usize,
}

/// Validates a grouping of `pieces` into members.
///
/// Every piece must be a nonempty box lying in exactly one group, pieces of a
/// group must be pairwise disjoint, and for every subfamily of groups the
/// nonempty boxes `⋂ F_{i j_i}` must be pairwise disjoint and at most `r` in
/// number.
pub fn make_fr_family(pieces: BoxFamily, groups: Vec<(String, Vec<usize>)>, r: usize) -> Result<FrFamily> {
    if r == 0 {
        return Err(Error::NotFrFamily("r must be positive".into()));
    }
    let mut owner = vec![None; pieces.len()];
    for (gi, (name, g)) in groups.iter().enumerate() {
        if g.is_empty() {
            return Err(Error::NotFrFamily(format!("member {name} has no pieces")));
        }
        if g.len() > r {
            return Err(Error::NotFrFamily(format!(
                "member {name} has {} pieces, more than r = {r}",
                g.len()
            )));
        }
        for &p in g {
            if p >= pieces.len() {
                return Err(Error::NotFrFamily(format!("member {name} uses unknown piece {p}")));
            }
            if owner[p].replace(gi).is_some() {
                return Err(Error::NotFrFamily(format!(
                    "piece {} lies in two members",
                    pieces.name(p)
                )));
            }
            if pieces.member(p).is_none() {
                return Err(Error::NotFrFamily(format!("piece {} is empty", pieces.name(p))));
            }
        }
    }
    if let Some(p) = owner.iter().position(Option::is_none) {
        return Err(Error::NotFrFamily(format!(
            "piece {} lies in no member",
            pieces.name(p)
        )));
    }
    let (group_names, groups): (Vec<String>, Vec<Vec<usize>>) = groups.into_iter().unzip();
    let family = FrFamily {
        pieces,
        groups,
        group_names,
        r,
    };
    family.validate()?;
    Ok(family)
}

impl FrFamily {
    /// Reads each member of a union family as a group whose pieces are its
    /// boxes; piece `j` of member `G` is named `G.j`.
    pub fn from_unions(u: &UnionFamily, r: usize) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut groups = Vec::new();
        for (name, boxes) in u.names().iter().zip(u.members()) {
            let mut g = Vec::new();
            for (j, b) in boxes.iter().enumerate() {
                g.push(pieces.len());
                pieces.push((format!("{name}.{}", j + 1), Some(b.clone())));
            }
            groups.push((name.clone(), g));
        }
        make_fr_family(BoxFamily::new(u.dimension(), pieces)?, groups, r)
    }

    pub fn pieces(&self) -> &BoxFamily {
        &self.pieces
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group_names(&self) -> &[String] {
        &self.group_names
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dimension(&self) -> usize {
        self.pieces.dimension()
    }

    fn piece_box(&self, p: usize) -> AxisBox {
        self.pieces.members()[p].clone().expect("pieces are nonempty")
    }

    /// The members `G_i` as unions of their pieces.
    pub fn union_family(&self) -> UnionFamily {
        UnionFamily::new(
            self.dimension(),
            self.group_names
                .iter()
                .zip(&self.groups)
                .map(|(n, g)| (n.clone(), g.iter().map(|&p| self.piece_box(p)).collect()))
                .collect(),
        )
        .expect("pieces share the dimension")
    }

    fn validate(&self) -> Result<()> {
        let u = self.union_family();
        // depth-first over subfamilies with nonempty intersection
        let mut stack: Vec<(Vec<usize>, Vec<AxisBox>)> =
            (0..u.len()).rev().map(|i| (vec![i], u.members()[i].clone())).collect();
        while let Some((set, boxes)) = stack.pop() {
            let names = || {
                set.iter()
                    .map(|&i| self.group_names[i].as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            if boxes.len() > self.r {
                return Err(Error::NotFrFamily(format!(
                    "the intersection of {{{}}} splits into {} boxes, more than r = {}",
                    names(),
                    boxes.len(),
                    self.r
                )));
            }
            for a in 0..boxes.len() {
                for b in a + 1..boxes.len() {
                    if boxes[a].meets(&boxes[b]) {
                        return Err(Error::NotFrFamily(format!(
                            "the intersection of {{{}}} has overlapping boxes {} and {}",
                            names(),
                            boxes[a],
                            boxes[b]
                        )));
                    }
                }
            }
            let last = *set.last().unwrap();
            for next in (last + 1..u.len()).rev() {
                if let Some(m) = u.meet(&boxes, next) {
                    let mut s = set.clone();
                    s.push(next);
                    stack.push((s, m));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiecesReport {
    pub r: usize,
    pub fiber_bound: usize,
    /// Members over which the fiber bound is attained.
    pub fiber_witness: Simplex,
    /// `π(X) = N(G)`, simplex for simplex.
    pub image_is_nerve: bool,
    /// Over every simplex of `N(G)` the sections of `π` correspond to the
    /// nonempty piece-choice boxes.
    pub section_counts_match: bool,
    pub holds: bool,
}

/// The nerve `X` of all pieces, partitioned by member, and its projection
/// onto the nerve of the members.
#[derive(Clone, Debug)]
pub struct PiecesProjection {
    pub complex: PartitionedComplex,
    pub image: SimplicialComplex,
    pub nerve_of_members: SimplicialComplex,
    pub report: PiecesReport,
}

pub fn pieces_projection(g: &FrFamily) -> Result<PiecesProjection> {
    let x = nerve(&g.pieces);
    debug_assert_eq!(x.members, (0..g.pieces.len()).collect::<Vec<_>>());
    let px = PartitionedComplex::new(x.complex, g.groups.clone())?;
    let u = g.union_family();
    let nerve_of_members = nerve(&u).complex;
    let image = project(&px);
    let fb = fiber_bound(&px)?;
    let section_counts_match = px
        .sections(crate::complex::DEFAULT_SIMPLEX_GUARD)?
        .iter()
        .all(|(img, secs)| u.choice_boxes(img.vertices()).len() == secs.len());
    let image_is_nerve = image == nerve_of_members;
    let report = PiecesReport {
        r: g.r,
        holds: image_is_nerve && section_counts_match && fb.r <= g.r,
        fiber_bound: fb.r,
        fiber_witness: fb.witness,
        image_is_nerve,
        section_counts_match,
    };
    Ok(PiecesProjection {
        complex: px,
        image,
        nerve_of_members,
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmentaReport {
    pub d: usize,
    pub r: usize,
    pub helly_number: usize,
    pub witness: Vec<usize>,
    /// `r (d + 1)`.
    pub bound: usize,
    pub leray_nerve: usize,
    pub leray_image: usize,
    pub leray_pieces: usize,
    /// `h(G)`, `1 + L(N(G))`, `1 + r L(X) + r - 1`, `r (d + 1)`.
    pub chain: [usize; 4],
    /// The chain is nondecreasing, `L(N(G)) = L(π(X))` and `L(X) <= d`.
    pub chain_holds: bool,
    pub projection: PiecesReport,
    /// `h(G) <= r (d + 1)`.
    pub holds: bool,
}

pub fn check_amenta(g: &FrFamily) -> Result<AmentaReport> {
    let (d, r) = (g.dimension(), g.r);
    let helly = helly_number(&g.union_family())?;
    let proj = pieces_projection(g)?;
    let leray_pieces = leray_number(proj.complex.complex())?;
    let leray_image = leray_number(&proj.image)?;
    let leray_nerve = helly.nerve_leray;
    let bound = r * (d + 1);
    let chain = [helly.helly_number, 1 + leray_nerve, r * leray_pieces + r, bound];
    let chain_holds = chain.windows(2).all(|w| w[0] <= w[1]) && leray_nerve == leray_image && leray_pieces <= d;
    Ok(AmentaReport {
        d,
        r,
        helly_number: helly.helly_number,
        witness: helly.witness,
        bound,
        leray_nerve,
        leray_image,
        leray_pieces,
        chain,
        chain_holds,
        projection: proj.report,
        holds: helly.helly_number <= bound,
    })
}
