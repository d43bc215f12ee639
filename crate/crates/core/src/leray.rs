//! Rational Leray numbers.
//!
//! `L(X)` is the least `d` such that every induced subcomplex of `X` has
//! vanishing reduced rational homology in all degrees `>= d`. Two routes are
//! provided: scanning all induced subcomplexes, and scanning the links of all
//! simplices. They must agree.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{clique_complex, is_chordal, Graph, Simplex, SimplicialComplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti_with, BettiVector};

/// Default cap on the vertex count for the subset scan.
pub const DEFAULT_DEFINITION_CAP: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LerayMethod {
    Definition,
    Links,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "lowercase")]
pub enum Descriptor {
    /// Vertex set `S` of an induced subcomplex `X[S]`.
    Subset(Vec<usize>),
    /// Simplex whose link is inspected.
    Link(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub descriptor: Descriptor,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LerayCertificate {
    pub value: usize,
    pub witness: Option<Witness>,
    pub method: LerayMethod,
}

impl LerayCertificate {
    /// Recomputes the witness homology; true when it is nonzero in the
    /// recorded degree (or when the value is zero and there is no witness).
    pub fn recheck(&self, x: &SimplicialComplex) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(self.value == 0);
        };
        let sub = match &w.descriptor {
            Descriptor::Subset(s) => x.induced(s)?.complex,
            Descriptor::Link(s) => x.link(&Simplex::new(s.iter().copied()))?.complex,
        };
        Ok(w.degree + 1 == self.value && reduced_betti_with(&sub, DEFAULT_SIMPLEX_GUARD)?.get(w.degree) != 0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LerayConfig {
    pub definition_cap: usize,
    pub simplex_guard: usize,
}

impl Default for LerayConfig {
    fn default() -> Self {
        LerayConfig {
            definition_cap: DEFAULT_DEFINITION_CAP,
            simplex_guard: DEFAULT_SIMPLEX_GUARD,
        }
    }
}

fn top(b: &BettiVector) -> Option<usize> {
    b.top_degree()
}

/// First maximizer in the given order, as `(index, degree)`.
fn first_max(tops: impl Iterator<Item = Option<usize>>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, t) in tops.enumerate() {
        if let Some(d) = t {
            if best.is_none_or(|(_, b)| d > b) {
                best = Some((i, d));
            }
        }
    }
    best
}

pub fn leray_by_definition(x: &SimplicialComplex) -> Result<LerayCertificate> {
    leray_by_definition_with(x, &LerayConfig::default())
}

/// Scans every induced subcomplex, by subset size and then lexicographically.
pub fn leray_by_definition_with(x: &SimplicialComplex, cfg: &LerayConfig) -> Result<LerayCertificate> {
    let n = x.vertex_count();
    if n > cfg.definition_cap {
        return Err(Error::CapExceeded {
            what: "vertex count for the induced-subcomplex scan",
            count: n,
            cap: cfg.definition_cap,
            hint: "; use the link criterion instead",
        });
    }
    let max_degree = x.dim();
    let mut best: Option<(Vec<usize>, usize)> = None;
    for size in 2..=n {
        // a nonzero class in degree i needs at least i + 2 vertices
        let level: Vec<Vec<usize>> = combinations(n, size);
        let tops = level
            .par_iter()
            .map(|s| Ok(top(&reduced_betti_with(&x.induced(s)?.complex, cfg.simplex_guard)?)))
            .collect::<Result<Vec<_>>>()?;
        if let Some((i, d)) = first_max(tops.into_iter()) {
            if best.as_ref().is_none_or(|(_, b)| d > *b) {
                best = Some((level[i].clone(), d));
            }
        }
        if best.as_ref().is_some_and(|(_, b)| *b as isize >= max_degree) {
            break;
        }
    }
    Ok(certificate(
        best.map(|(s, d)| (Descriptor::Subset(s), d)),
        LerayMethod::Definition,
    ))
}

pub fn leray_by_links(x: &SimplicialComplex) -> Result<LerayCertificate> {
    leray_by_links_with(x, &LerayConfig::default())
}

/// Scans the links of every simplex, the empty simplex included.
pub fn leray_by_links_with(x: &SimplicialComplex, cfg: &LerayConfig) -> Result<LerayCertificate> {
    if x.is_void() {
        return Ok(certificate(None, LerayMethod::Links));
    }
    let simplices = x.simplices(cfg.simplex_guard)?;
    let tops = simplices
        .par_iter()
        .map(|s| Ok(top(&reduced_betti_with(&x.link(s)?.complex, cfg.simplex_guard)?)))
        .collect::<Result<Vec<_>>>()?;
    let best = first_max(tops.into_iter()).map(|(i, d)| (Descriptor::Link(simplices[i].vertices().to_vec()), d));
    Ok(certificate(best, LerayMethod::Links))
}

/// The Leray number via the link criterion.
pub fn leray_number(x: &SimplicialComplex) -> Result<usize> {
    Ok(leray_by_links(x)?.value)
}

fn certificate(best: Option<(Descriptor, usize)>, method: LerayMethod) -> LerayCertificate {
    match best {
        None => LerayCertificate {
            value: 0,
            witness: None,
            method,
        },
        Some((descriptor, degree)) => LerayCertificate {
            value: degree + 1,
            witness: Some(Witness { descriptor, degree }),
            method,
        },
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalReport {
    pub chordal: bool,
    pub leray: usize,
    /// `chordal` iff `leray <= 1`.
    pub holds: bool,
}

pub fn check_chordal_characterization(g: &Graph) -> Result<ChordalReport> {
    let chordal = is_chordal(g);
    let leray = leray_number(&clique_complex(g))?;
    Ok(ChordalReport {
        chordal,
        leray,
        holds: chordal == (leray <= 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().copied()).unwrap()
    }

    fn both(x: &SimplicialComplex) -> usize {
        let a = leray_by_definition(x).unwrap();
        let b = leray_by_links(x).unwrap();
        assert_eq!(a.value, b.value, "{x:?}");
        assert!(a.recheck(x).unwrap());
        assert!(b.recheck(x).unwrap());
        a.value
    }

    #[test]
    fn simplices_have_leray_zero() {
        for n in 1..6 {
            assert_eq!(both(&SimplicialComplex::simplex(n)), 0);
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(both(&cx(&[&[0, 1], &[1, 2], &[0, 2]])), 2);
        assert_eq!(both(&cx(&[&[0], &[1]])), 1);
        assert_eq!(both(&SimplicialComplex::boundary_complex(4).unwrap()), 3);
        assert_eq!(both(&cx(&[&[0, 1], &[1, 2]])), 1);
    }

    #[test]
    fn witnesses_are_first_maximizers() {
        let t = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        let d = leray_by_definition(&t).unwrap();
        assert_eq!(
            d.witness,
            Some(Witness {
                descriptor: Descriptor::Subset(vec![0, 1, 2]),
                degree: 1
            })
        );
        let l = leray_by_links(&t).unwrap();
        assert_eq!(l.witness.unwrap().descriptor, Descriptor::Link(vec![]));
        let pts = cx(&[&[0], &[1], &[2]]);
        assert_eq!(
            leray_by_definition(&pts).unwrap().witness.unwrap().descriptor,
            Descriptor::Subset(vec![0, 1])
        );
    }

    #[test]
    fn definition_cap() {
        let big = SimplicialComplex::boundary_complex(4).unwrap();
        let cfg = LerayConfig {
            definition_cap: 3,
            ..LerayConfig::default()
        };
        assert!(matches!(
            leray_by_definition_with(&big, &cfg),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn chordal_examples() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = check_chordal_characterization(&c4).unwrap();
        assert!(!r.chordal && r.leray == 2 && r.holds);
        let tree = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let r = check_chordal_characterization(&tree).unwrap();
        assert!(r.chordal && r.leray <= 1 && r.holds);
        let k4e = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let r = check_chordal_characterization(&k4e).unwrap();
        assert!(r.chordal && r.leray <= 1 && r.holds);
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
