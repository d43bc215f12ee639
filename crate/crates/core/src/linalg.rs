//! Exact rank of integer matrices over the rationals.
//!
//! Small matrices go through dense Bareiss elimination; larger ones through a
//! sparse fraction-free reduction that keeps each vector primitive. Both run
//! on checked `i64` first and restart on arbitrary-precision integers if an
//! intermediate value overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column count below which the dense path is used.
pub const DENSE_COLUMN_LIMIT: usize = 64;

/// A sparse integer matrix stored by columns; each column lists
/// `(row, value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix {
            rows,
            columns: Vec::new(),
        }
    }

    pub fn push_column(&mut self, mut col: Vec<(usize, i64)>) {
        debug_assert!(col.iter().all(|&(r, _)| r < self.rows));
        col.retain(|&(_, x)| x != 0);
        col.sort_unstable_by_key(|&(r, _)| r);
        self.columns.push(col);
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0i64; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, x) in col {
                d[r][c] += x;
            }
        }
        d
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        let mut out = SparseMatrix::new(self.rows);
        for col in &other.columns {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(k, x) in col {
                for &(r, y) in &self.columns[k] {
                    *acc.entry(r).or_default() += x * y;
                }
            }
            out.push_column(acc.into_iter().collect());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows == 0 || m.is_zero() {
        return 0;
    }
    if m.cols() < DENSE_COLUMN_LIMIT {
        let dense = m.to_dense();
        bareiss_rank::<i64>(&dense)
            .unwrap_or_else(|| bareiss_rank::<BigInt>(&dense).expect("big integers do not overflow"))
    } else {
        sparse_rank::<i64>(m).unwrap_or_else(|| sparse_rank::<BigInt>(m).expect("big integers do not overflow"))
    }
}

/// Rank of a dense integer matrix given by rows.
pub fn dense_rank(rows: &[Vec<i64>]) -> usize {
    bareiss_rank::<i64>(rows).unwrap_or_else(|| bareiss_rank::<BigInt>(rows).expect("big integers do not overflow"))
}

trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    /// Exact division; panics if the remainder is nonzero.
    fn div_exact(&self, d: &Self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl Coeff for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn div_exact(&self, d: &Self) -> Self {
        assert_eq!(self % d, 0, "inexact division in fraction-free elimination");
        self / d
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl Coeff for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(Zero::is_zero(&r), "inexact division in fraction-free elimination");
        q
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.abs())
    }
}

/// Fraction-free Gaussian elimination; pivots are the first nonzero entry in
/// row-major order among the remaining rows of each column.
fn bareiss_rank<T: Coeff>(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = T::from_i64(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = T::mul_sub(&a[r][c], &a[i][j], &a[i][c], &a[r][j])?;
                a[i][j] = v.div_exact(&prev);
            }
            a[i][c] = T::from_i64(0);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    Some(r)
}

type SparseVec<T> = Vec<(usize, T)>;

/// Column reduction keyed by the lowest (largest-index) nonzero entry.
fn sparse_rank<T: Coeff>(m: &SparseMatrix) -> Option<usize> {
    let mut pivots: HashMap<usize, SparseVec<T>> = HashMap::new();
    for col in &m.columns {
        let mut v: SparseVec<T> = col.iter().map(|&(r, x)| (r, T::from_i64(x))).collect();
        while let Some((low, a)) = v.last().cloned() {
            match pivots.get(&low) {
                None => {
                    pivots.insert(low, v);
                    break;
                }
                Some(p) => {
                    let b = p.last().unwrap().1.clone();
                    v = combine(&b, &v, &a, p)?;
                    normalize(&mut v);
                }
            }
        }
    }
    Some(pivots.len())
}

/// `b*v - a*p`, both sorted by index.
fn combine<T: Coeff>(b: &T, v: &SparseVec<T>, a: &T, p: &SparseVec<T>) -> Option<SparseVec<T>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let (idx, x, y) = match (v.get(i), p.get(j)) {
            (Some((vi, vx)), Some((pj, _))) if vi < pj => {
                i += 1;
                (*vi, vx, &zero)
            }
            (Some((vi, _)), Some((pj, py))) if pj < vi => {
                j += 1;
                (*pj, &zero, py)
            }
            (Some((vi, vx)), Some((_, py))) => {
                i += 1;
                j += 1;
                (*vi, vx, py)
            }
            (Some((vi, vx)), None) => {
                i += 1;
                (*vi, vx, &zero)
            }
            (None, Some((pj, py))) => {
                j += 1;
                (*pj, &zero, py)
            }
            (None, None) => unreachable!(),
        };
        let val = T::mul_sub(b, x, a, y)?;
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    Some(out)
}

fn normalize<T: Coeff>(v: &mut SparseVec<T>) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.clone();
    for (_, x) in v.iter().skip(1) {
        if g.is_one() {
            return;
        }
        g = g.gcd(x);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}
