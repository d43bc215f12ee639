use std::collections::BTreeSet;

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A finite simple graph on `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![BTreeSet::new(); vertex_count];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::UnknownVertex(v));
                }
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(Graph {
            vertex_count,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|a| self.adjacency[a].range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }
}

/// The flag complex whose simplices are the cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    if g.vertex_count == 0 {
        return SimplicialComplex::empty();
    }
    let mut cliques = Vec::new();
    bron_kerbosch(
        g,
        &mut Vec::new(),
        (0..g.vertex_count).collect(),
        BTreeSet::new(),
        &mut cliques,
    );
    SimplicialComplex::raw(g.vertex_count, cliques)
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: BTreeSet<usize>,
    mut excluded: BTreeSet<usize>,
    out: &mut Vec<Simplex>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(Simplex::new(current.iter().copied()));
        }
        return;
    }
    let pivot = *candidates
        .union(&excluded)
        .max_by_key(|&&u| g.adjacency[u].intersection(&candidates).count())
        .unwrap();
    let branch: Vec<usize> = candidates.difference(&g.adjacency[pivot]).copied().collect();
    for v in branch {
        let nv = &g.adjacency[v];
        current.push(v);
        bron_kerbosch(
            g,
            current,
            candidates.intersection(nv).copied().collect(),
            excluded.intersection(nv).copied().collect(),
            out,
        );
        current.pop();
        candidates.remove(&v);
        excluded.insert(v);
    }
}

/// Chordality via maximum cardinality search followed by a perfect
/// elimination ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g);
    // order[i] is visited i-th; elimination runs in reverse visit order
    let mut position = vec![0usize; g.vertex_count];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        // neighbours of v visited before v must form a clique; it suffices to
        // check they are all adjacent to the latest of them
        let earlier: Vec<usize> = g.adjacency[v]
            .iter()
            .copied()
            .filter(|&u| position[u] < position[v])
            .collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) {
            if earlier.iter().any(|&u| u != parent && !g.has_edge(u, parent)) {
                return false;
            }
        }
    }
    true
}

fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count;
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &u in &g.adjacency[v] {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_paths_and_complete_graphs() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_chordal(&c4));
        assert_eq!(clique_complex(&c4).facets().len(), 4);

        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_chordal(&path));
        assert_eq!(
            clique_complex(&path),
            SimplicialComplex::from_facets([[0usize, 1], [1, 2]]).unwrap()
        );

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_chordal(&k4));
        assert_eq!(clique_complex(&k4), SimplicialComplex::simplex(4));
    }

    #[test]
    fn isolated_vertices_and_loops() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            clique_complex(&g),
            SimplicialComplex::from_facets([vec![0usize, 1], vec![2]]).unwrap()
        );
        assert!(matches!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn five_cycle_with_one_chord_is_not_chordal() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_chordal(&g));
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap();
        assert!(is_chordal(&g));
    }
}
