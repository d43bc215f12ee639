mod common;

use leray::complex::{clique_complex, is_chordal, Graph, SimplicialComplex};
use leray::homology::{boundary_matrices, reduced_betti};
use leray::leray::{leray_by_definition, leray_by_links};
use leray::linalg::rank;

fn torus() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_facets(facets).unwrap()
}

#[test]
fn seven_vertex_torus_matches_smith_normal_form() {
    let t = torus();
    assert_eq!(t.f_vector(1000).unwrap(), vec![7, 21, 14]);
    let faces = common::faces(&t);
    // integral homology: free ranks 1, 2, 1 and no torsion
    let mut ranks = Vec::new();
    for q in 1..=3u32 {
        let inv = common::smith_invariants(&common::boundary(&faces, q));
        assert!(inv.iter().all(|&d| d == 1), "torsion in degree {q}: {inv:?}");
        ranks.push(inv.len());
    }
    assert_eq!(ranks, vec![6, 13, 0]);
    let b = reduced_betti(&t).unwrap();
    assert_eq!(b.reduced, vec![0, 2, 1]);
    assert_eq!(b.euler, 0);
    let chain = boundary_matrices(&t).unwrap();
    for q in 1..=2usize {
        assert_eq!(rank(chain.boundary(q).unwrap()), ranks[q - 1]);
    }
}

#[test]
fn smith_oracle_sees_projective_plane_torsion() {
    // six-vertex real projective plane
    let rp2 = SimplicialComplex::from_facets([
        [0usize, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ])
    .unwrap();
    let faces = common::faces(&rp2);
    let inv = common::smith_invariants(&common::boundary(&faces, 2));
    assert_eq!(inv.iter().filter(|&&d| d == 2).count(), 1);
    // rationally a point
    assert_eq!(reduced_betti(&rp2).unwrap().reduced, vec![0, 0, 0]);
    assert_eq!(common::reduced_betti(&rp2), vec![0, 0, 0, 0]);
}

#[test]
fn leray_agrees_with_the_oracle_on_all_four_vertex_complexes() {
    for n in 1..=4 {
        for facets in common::all_complexes(n) {
            let x = SimplicialComplex::from_facets(facets).unwrap();
            let oracle = common::leray(&x);
            assert_eq!(leray_by_definition(&x).unwrap().value, oracle, "{x:?}");
            assert_eq!(leray_by_links(&x).unwrap().value, oracle, "{x:?}");
        }
    }
}

#[test]
fn complex_enumeration_counts() {
    // labelled complexes using every vertex: 1, 2, 9, 114
    let counts: Vec<usize> = (1..=4).map(|n| common::all_complexes(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 9, 114]);
}

#[test]
fn chordal_graphs_by_oracle() {
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!is_chordal(&c4));
    assert!(is_chordal(&path));
    assert_eq!(common::leray(&clique_complex(&c4)), 2);
    assert_eq!(common::leray(&clique_complex(&path)), 1);
}
