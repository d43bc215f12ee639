use std::collections::HashMap;

use super::{size_lex, Simplex, SimplicialComplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::{Error, Result};

/// An order complex whose vertices are simplices of a source complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
    pub complex: SimplicialComplex,
    /// Source simplex labelling each vertex, sorted by size then lexicographically.
    pub elements: Vec<Simplex>,
}

impl OrderComplex {
    pub fn vertex_of(&self, s: &Simplex) -> Option<usize> {
        self.elements.binary_search_by(|e| size_lex(e, s)).ok()
    }
}

/// The barycentric subdivision `sd(K)`: the order complex of the nonempty
/// simplices of `K`.
pub fn subdivision(k: &SimplicialComplex) -> Result<OrderComplex> {
    if k.is_void() {
        return Err(Error::InvalidArgument("subdivision of the void complex".into()));
    }
    interval(k, &Simplex::empty(), true)
}

/// The pair `(D_K(σ), Ḋ_K(σ))`: order complexes of `[σ, ·]` and `(σ, ·]`.
pub fn upper_interval(k: &SimplicialComplex, sigma: &Simplex) -> Result<(OrderComplex, OrderComplex)> {
    if !k.contains(sigma) {
        return Err(Error::NotAFace(sigma.clone()));
    }
    Ok((interval(k, sigma, false)?, interval(k, sigma, true)?))
}

fn interval(k: &SimplicialComplex, base: &Simplex, strict: bool) -> Result<OrderComplex> {
    let tops: Vec<&Simplex> = k.facets().iter().filter(|f| base.is_face_of(f)).collect();
    let mut chains_estimate = 0usize;
    for f in &tops {
        let free = f.len() - base.len();
        chains_estimate = chains_estimate.saturating_add((1..=free).product::<usize>());
    }
    if chains_estimate > DEFAULT_SIMPLEX_GUARD {
        return Err(Error::SimplexGuard {
            limit: DEFAULT_SIMPLEX_GUARD,
        });
    }

    let mut elements: Vec<Simplex> = Vec::new();
    for f in &tops {
        let free = f.difference(base);
        for extra in free.faces() {
            if strict && extra.is_empty() {
                continue;
            }
            elements.push(base.union(&extra));
        }
    }
    elements.sort_unstable_by(size_lex);
    elements.dedup();
    if elements.is_empty() {
        return Ok(OrderComplex {
            complex: SimplicialComplex::void(),
            elements,
        });
    }
    let index: HashMap<&Simplex, usize> = elements.iter().enumerate().map(|(i, s)| (s, i)).collect();

    // maximal chains: start at the bottom, add the free vertices of a top
    // facet one at a time in every order
    let mut chains = Vec::new();
    for f in &tops {
        let free: Vec<usize> = f.difference(base).into_vertices();
        let mut order: Vec<usize> = (0..free.len()).collect();
        loop {
            let mut cur = base.clone();
            let mut chain = Vec::with_capacity(free.len() + 1);
            if !strict {
                chain.push(index[&cur]);
            }
            for &i in &order {
                cur = cur.union(&Simplex::from_sorted(vec![free[i]]));
                chain.push(index[&cur]);
            }
            chains.push(Simplex::new(chain));
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    let mut complex = SimplicialComplex::raw(elements.len(), chains);
    complex.set_labels(Some(
        elements
            .iter()
            .map(|s| {
                let names: Vec<String> = s.vertices().iter().map(|&v| k.label(v)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect(),
    ));
    Ok(OrderComplex { complex, elements })
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivide_edge_and_point() {
        let edge = SimplicialComplex::simplex(2);
        let sd = subdivision(&edge).unwrap();
        assert_eq!(sd.elements.len(), 3);
        assert_eq!(sd.complex.facets().len(), 2);
        let mid = sd.vertex_of(&Simplex::from([0, 1])).unwrap();
        assert!(sd.complex.facets().iter().all(|f| f.contains(mid)));
        let pt = subdivision(&SimplicialComplex::simplex(1)).unwrap();
        assert_eq!(pt.complex, SimplicialComplex::simplex(1));
        assert!(subdivision(&SimplicialComplex::void()).is_err());
    }

    #[test]
    fn intervals_in_a_triangle() {
        let tri = SimplicialComplex::simplex(3);
        let (d, dd) = upper_interval(&tri, &Simplex::from([0])).unwrap();
        assert_eq!(d.elements.len(), 4);
        assert_eq!(dd.elements.len(), 3);
        let (d, dd) = upper_interval(&tri, &Simplex::from([0, 1])).unwrap();
        assert_eq!(d.complex, SimplicialComplex::simplex(2));
        assert_eq!(dd.complex, SimplicialComplex::simplex(1));
        let (d, dd) = upper_interval(&tri, &Simplex::from([0, 1, 2])).unwrap();
        assert_eq!(d.complex, SimplicialComplex::simplex(1));
        assert!(dd.complex.is_void());
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 24);
    }
}
