//! A graph is chordal exactly when its clique complex has Leray number at most one.

use leray::complex::{clique_complex, Graph};
use leray::leray::check_chordal_characterization;

fn main() -> leray::Result<()> {
    let graphs = [
        ("path", Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?),
        ("4-cycle", Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])?),
        (
            "4-cycle with a chord",
            Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])?,
        ),
        ("5-cycle", Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?),
    ];
    for (name, g) in graphs {
        let rep = check_chordal_characterization(&g)?;
        let facets = clique_complex(&g).facets().len();
        println!(
            "{name:>22}: chordal {:<5} L = {}  ({facets} maximal cliques)",
            rep.chordal, rep.leray
        );
    }
    Ok(())
}
