//! Reduced rational Betti numbers of a few classic complexes.

use leray::homology::reduced_betti;
use leray::SimplicialComplex;

fn torus() -> SimplicialComplex {
    let facets = (0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialComplex::from_facets(facets).unwrap()
}

fn main() -> leray::Result<()> {
    let named = [
        ("hollow tetrahedron", SimplicialComplex::boundary_complex(4)?),
        ("solid triangle", SimplicialComplex::simplex(3)),
        ("seven-vertex torus", torus()),
        ("two points", SimplicialComplex::from_facets([[0usize], [1]])?),
        ("empty complex", SimplicialComplex::empty()),
    ];
    for (name, x) in named {
        let b = reduced_betti(&x)?;
        println!(
            "{name:>20}: reduced {:?}, degree -1: {}, euler {}",
            b.reduced, b.minus_one, b.euler
        );
    }
    Ok(())
}
