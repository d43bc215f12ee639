use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PartitionedComplex;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::leray::combinations;

/// A seeded random complex in `V_1 * ... * V_m`.
///
/// Part `i` holds `part_sizes[i]` consecutive vertex ids. Every vertex is
/// present; each cross-part simplex with 2 to `dimension + 1` vertices is
/// then kept independently with probability `density`, candidates visited
/// by size, then by the parts met, then lexicographically. Kept simplices
/// contribute all their faces.
pub fn random_partitioned_complex(
    part_sizes: &[usize],
    dimension: usize,
    density: f64,
    seed: u64,
) -> Result<PartitionedComplex> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(Error::InvalidArgument("parts must be nonempty".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidArgument(format!("density {density} outside [0, 1]")));
    }
    let m = part_sizes.len();
    let mut parts = Vec::with_capacity(m);
    let mut next = 0;
    for &s in part_sizes {
        parts.push((next..next + s).collect::<Vec<usize>>());
        next += s;
    }
    let n = next;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<Simplex> = (0..n).map(|v| Simplex::from_sorted(vec![v])).collect();
    for size in 2..=(dimension + 1).min(m) {
        for chosen in combinations(m, size) {
            let total: usize = chosen.iter().map(|&p| part_sizes[p]).product();
            for t in 0..total {
                if rng.gen::<f64>() >= density {
                    continue;
                }
                // decode t with the last part varying fastest
                let mut rest = t;
                let mut verts = vec![0usize; size];
                for i in (0..size).rev() {
                    let s = part_sizes[chosen[i]];
                    verts[i] = parts[chosen[i]][rest % s];
                    rest /= s;
                }
                facets.push(Simplex::from_sorted(verts));
            }
        }
    }
    let complex = SimplicialComplex::on_vertices(n, facets)?;
    PartitionedComplex::new(complex, parts)
}

/// A seeded random complex on `n` vertices (all parts singletons).
pub fn random_complex(n: usize, dimension: usize, density: f64, seed: u64) -> Result<SimplicialComplex> {
    Ok(random_partitioned_complex(&vec![1; n], dimension, density, seed)?
        .complex()
        .clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_extremes() {
        let px = random_partitioned_complex(&[2, 2, 3], 2, 0.0, 4).unwrap();
        assert_eq!(px.complex().dim(), 0);
        assert_eq!(px.complex().facets().len(), 7);
        let full = random_partitioned_complex(&[1, 1, 1, 1], 3, 1.0, 4).unwrap();
        assert_eq!(*full.complex(), SimplicialComplex::simplex(4));
    }

    #[test]
    fn deterministic_for_a_seed() {
        let a = random_partitioned_complex(&[2, 2, 2], 2, 0.5, 1).unwrap();
        let b = random_partitioned_complex(&[2, 2, 2], 2, 0.5, 1).unwrap();
        assert_eq!(a, b);
        let c = random_partitioned_complex(&[2, 2, 2], 2, 0.5, 2).unwrap();
        assert_ne!(a.complex().facets(), c.complex().facets());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(random_partitioned_complex(&[2, 0], 1, 0.5, 0).is_err());
        assert!(random_partitioned_complex(&[], 1, 0.5, 0).is_err());
        assert!(random_partitioned_complex(&[2], 1, 1.5, 0).is_err());
    }

    #[test]
    fn full_density_uses_every_cross_simplex() {
        let px = random_partitioned_complex(&[2, 3], 1, 1.0, 0).unwrap();
        assert_eq!(px.complex().facets().len(), 6);
    }
}
