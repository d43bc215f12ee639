//! Rational simplicial homology from exact boundary ranks.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::Result;
use crate::linalg::{rank, SparseMatrix};

/// The augmented simplicial chain complex of a complex.
///
/// `basis[i]` holds the simplices of degree `i - 1`, so `basis[0]` is `[∅]`
/// for a nonvoid complex. `boundaries[i]` maps degree `i - 1` to degree
/// `i - 2`; `boundaries[0]` is the zero map out of degree -1.
#[derive(Clone, Debug)]
pub struct ChainBoundary {
    pub basis: Vec<Vec<Simplex>>,
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainBoundary {
    pub fn basis_in(&self, degree: isize) -> &[Simplex] {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.basis.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// `∂_q : C_q → C_{q-1}` for `q >= 0`.
    pub fn boundary(&self, degree: usize) -> Option<&SparseMatrix> {
        self.boundaries.get(degree + 1)
    }
}

/// Reduced rational Betti numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    /// `reduced[q]` is the dimension of the reduced homology in degree `q`.
    pub reduced: Vec<usize>,
    /// Dimension in degree -1: one for the empty complex, zero otherwise.
    #[serde(skip)]
    pub minus_one: usize,
    /// Alternating count of nonempty faces.
    pub euler: i64,
}

impl BettiVector {
    pub fn get(&self, degree: usize) -> usize {
        self.reduced.get(degree).copied().unwrap_or(0)
    }

    /// Highest degree with nonvanishing reduced homology.
    pub fn top_degree(&self) -> Option<usize> {
        self.reduced.iter().rposition(|&b| b != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.minus_one == 0 && self.reduced.iter().all(|&b| b == 0)
    }
}

pub fn boundary_matrices(x: &SimplicialComplex) -> Result<ChainBoundary> {
    boundary_matrices_with(x, DEFAULT_SIMPLEX_GUARD)
}

pub fn boundary_matrices_with(x: &SimplicialComplex, limit: usize) -> Result<ChainBoundary> {
    let simplices = x.simplices(limit)?;
    let mut basis: Vec<Vec<Simplex>> = Vec::new();
    for s in simplices {
        let i = s.len();
        if basis.len() <= i {
            basis.resize_with(i + 1, Vec::new);
        }
        basis[i].push(s);
    }
    let index: Vec<HashMap<&Simplex, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(j, s)| (s, j)).collect())
        .collect();
    let boundaries = (0..basis.len())
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                return SparseMatrix::new(0);
            }
            let mut m = SparseMatrix::new(basis[i - 1].len());
            for s in &basis[i] {
                m.push_column(s.boundary().map(|(sign, f)| (index[i - 1][&f], sign as i64)).collect());
            }
            m
        })
        .collect();
    Ok(ChainBoundary { basis, boundaries })
}

/// Homology dimensions of a chain complex given by the sizes of its chain
/// groups and the ranks of its differentials (`ranks[i]` is the rank of the
/// map out of degree `i`).
pub fn homology_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|i| dims[i] - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect()
}

pub fn reduced_betti(x: &SimplicialComplex) -> Result<BettiVector> {
    reduced_betti_with(x, DEFAULT_SIMPLEX_GUARD)
}

pub fn reduced_betti_with(x: &SimplicialComplex, limit: usize) -> Result<BettiVector> {
    if x.is_void() {
        return Ok(BettiVector::default());
    }
    let chains = boundary_matrices_with(x, limit)?;
    let dims: Vec<usize> = chains.basis.iter().map(Vec::len).collect();
    let ranks: Vec<usize> = chains.boundaries.par_iter().map(rank).collect();
    let h = homology_from_ranks(&dims, &ranks);
    let euler = dims
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &n)| if i % 2 == 1 { n as i64 } else { -(n as i64) })
        .sum();
    Ok(BettiVector {
        reduced: h[1..].to_vec(),
        minus_one: h[0],
        euler,
    })
}

/// Unreduced Betti numbers `β_0, β_1, ...`; empty for the void and the empty
/// complex.
pub fn unreduced_betti(x: &SimplicialComplex) -> Result<Vec<usize>> {
    unreduced_betti_with(x, DEFAULT_SIMPLEX_GUARD)
}

pub fn unreduced_betti_with(x: &SimplicialComplex, limit: usize) -> Result<Vec<usize>> {
    let b = reduced_betti_with(x, limit)?;
    let mut out = b.reduced;
    if let Some(b0) = out.first_mut() {
        *b0 += 1;
    }
    Ok(out)
}

pub fn euler_characteristic(x: &SimplicialComplex) -> Result<i64> {
    Ok(reduced_betti(x)?.euler)
}
