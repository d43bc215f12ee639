//! Leray numbers by both algorithms, with the witnessing subcomplex.

use leray::leray::{leray_by_definition, leray_by_links};
use leray::SimplicialComplex;

fn main() -> leray::Result<()> {
    let named = [
        ("simplex", SimplicialComplex::simplex(4)),
        (
            "square",
            SimplicialComplex::from_facets([[0usize, 1], [1, 2], [2, 3], [0, 3]])?,
        ),
        ("hollow tetrahedron", SimplicialComplex::boundary_complex(4)?),
        (
            "two triangles on an edge",
            SimplicialComplex::from_facets([[0usize, 1, 2], [1, 2, 3]])?,
        ),
    ];
    for (name, x) in named {
        let by_subsets = leray_by_definition(&x)?;
        let by_links = leray_by_links(&x)?;
        assert_eq!(by_subsets.value, by_links.value);
        println!("{name:>24}: L = {}", by_links.value);
        if let Some(w) = &by_subsets.witness {
            println!(
                "{:>24}  nonzero homology in degree {} on {:?}",
                "", w.degree, w.descriptor
            );
        }
    }
    Ok(())
}
