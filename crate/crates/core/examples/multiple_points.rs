//! Multiple-point complexes, their double-point part and the vanishing of
//! their homology above the sum of the Leray numbers.

use leray::homology::reduced_betti;
use leray::icss::{alt_betti, check_alt_chain_iso};
use leray::multiproj::{check_mps_vanishing, multiple_point_complex, random_partitioned_complex, PartitionedComplex};
use leray::SimplicialComplex;

fn main() -> leray::Result<()> {
    // two points over a single part
    let px = PartitionedComplex::new(SimplicialComplex::from_facets([[0usize], [1]])?, vec![vec![0, 1]])?;
    for k in 1..=3 {
        let m = multiple_point_complex(&px, k)?;
        let x = m.to_complex(100_000)?.complex;
        let d = m.double_point_closure()?.to_complex(100_000)?.complex;
        println!(
            "k = {k}: M_k has {} vertices, reduced {:?}; D^k has {} facets; alternating homology {:?}",
            x.vertex_count(),
            reduced_betti(&x)?.reduced,
            d.facets().len(),
            alt_betti(&m)?
        );
        assert!(check_alt_chain_iso(&m)?.holds);
    }

    let a = random_partitioned_complex(&[2, 2, 1], 2, 0.6, 1)?;
    let b = random_partitioned_complex(&[2, 2, 1], 2, 0.6, 2)?;
    let rep = check_mps_vanishing(&[a, b])?;
    println!(
        "M(X_1, X_2): Leray numbers {:?}, reduced homology {:?}, vanishes from degree {}: {}",
        rep.factor_leray, rep.betti.reduced, rep.leray_sum, rep.holds
    );
    Ok(())
}
