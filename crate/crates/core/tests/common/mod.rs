//! Independent oracles: brute-force faces over bitmasks, rational Gaussian
//! elimination and an integer Smith normal form. Nothing here calls the
//! library's homology or Leray code.

#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::BigRational;
use num_traits::Zero;

use leray::SimplicialComplex;

/// Every face of `x` (including the empty one) as a bitmask, sorted by size
/// and then numerically.
pub fn faces(x: &SimplicialComplex) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for f in x.facets() {
        let mask: u32 = f.vertices().iter().map(|&v| 1u32 << v).sum();
        let mut sub = mask;
        loop {
            out.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    out.sort_unstable_by_key(|&m| (m.count_ones(), m));
    out.dedup();
    out
}

fn bits(mask: u32) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// Boundary from faces of size `q + 1` to faces of size `q`, as a dense
/// integer matrix (rows are the smaller faces).
pub fn boundary(faces: &[u32], q: u32) -> Vec<Vec<i64>> {
    let lower: Vec<u32> = faces.iter().copied().filter(|m| m.count_ones() == q).collect();
    let upper: Vec<u32> = faces.iter().copied().filter(|m| m.count_ones() == q + 1).collect();
    let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, &u) in upper.iter().enumerate() {
        for (i, b) in bits(u).into_iter().enumerate() {
            let face = u & !(1 << b);
            let row = lower
                .binary_search_by_key(&(face.count_ones(), face), |&m| (m.count_ones(), m))
                .unwrap();
            rows[row][j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    rows
}

/// Rank over the rationals by plain Gaussian elimination on fractions.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone() / pivot.clone();
                for k in c..cols {
                    let d = a[rank][k].clone() * f.clone();
                    a[i][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ...` up to the dimension of `x`.
pub fn reduced_betti(x: &SimplicialComplex) -> Vec<usize> {
    reduced_betti_of_faces(&faces(x))
}

pub fn reduced_betti_of_faces(faces: &[u32]) -> Vec<usize> {
    let top = faces.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    // ranks[s] = rank of the map from faces of size s to size s - 1
    let mut ranks = vec![0usize; top as usize + 2];
    for s in 1..=top {
        ranks[s as usize] = rational_rank(&boundary(faces, s - 1));
    }
    (0..=top)
        .map(|s| {
            let c = faces.iter().filter(|m| m.count_ones() == s).count();
            c - ranks[s as usize] - ranks[s as usize + 1]
        })
        .collect()
}

/// Largest `d + 1` such that some induced subcomplex has `β̃_d != 0`.
pub fn leray(x: &SimplicialComplex) -> usize {
    let all = faces(x);
    let n = x.vertex_count();
    let mut best = 0;
    for s in 0u32..(1 << n) {
        let induced: Vec<u32> = all.iter().copied().filter(|&m| m & !s == 0).collect();
        let b = reduced_betti_of_faces(&induced);
        // b[0] is degree -1
        if let Some(top) = b.iter().rposition(|&v| v != 0) {
            if top >= 1 {
                best = best.max(top);
            }
        }
    }
    best
}

/// Nonzero invariant factors of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut done = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for k in t..cols {
                        a[i][k] -= q * a[t][k];
                    }
                }
                if a[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for r in a.iter_mut() {
                        r[j] -= q * r[t];
                    }
                }
                if a[t][j] != 0 {
                    done = false;
                }
            }
            if !done {
                let (pi, pj) = (t..rows)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| (i == t || j == t) && a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].abs())
                    .unwrap();
                a.swap(t, pi);
                for r in a.iter_mut() {
                    r.swap(t, pj);
                }
                continue;
            }
            // divisibility of the remaining block
            if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
                for k in t..cols {
                    a[t][k] += a[i][k];
                }
                continue;
            }
            break;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// All simplicial complexes on exactly the vertices `0..n`, as facet lists.
pub fn all_complexes(n: usize) -> Vec<Vec<Vec<usize>>> {
    let masks: Vec<u32> = {
        let mut m: Vec<u32> = (1u32..(1 << n)).filter(|m| m.count_ones() >= 2).collect();
        m.sort_unstable_by_key(|&x| (x.count_ones(), x));
        m
    };
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = (0..n).map(|v| 1u32 << v).collect();
    extend(&masks, 0, &mut chosen, &mut out);
    out
}

fn extend(masks: &[u32], i: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<Vec<usize>>>) {
    if i == masks.len() {
        let facets = chosen
            .iter()
            .filter(|&&m| !chosen.iter().any(|&o| o != m && o & m == m))
            .map(|&m| bits(m).into_iter().map(|b| b as usize).collect())
            .collect();
        out.push(facets);
        return;
    }
    extend(masks, i + 1, chosen, out);
    let m = masks[i];
    if bits(m).into_iter().all(|b| chosen.contains(&(m & !(1 << b)))) {
        chosen.push(m);
        extend(masks, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Chordality by definition: no induced cycle on four or more vertices.
pub fn chordal_by_cycles(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = |a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    for s in 0u32..(1 << n) {
        if s.count_ones() < 4 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        if !vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| w != v && adj(v, w)).count() == 2)
        {
            continue;
        }
        // 2-regular: a cycle exactly when connected
        let mut seen = vec![vs[0]];
        let mut i = 0;
        while i < seen.len() {
            let v = seen[i];
            for &w in &vs {
                if w != v && adj(v, w) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        if seen.len() == vs.len() {
            return false;
        }
    }
    true
}
