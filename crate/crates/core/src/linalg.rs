//! Exact linear algebra over ℚ and over polynomial rings.
//!
//! Rows are sparse. Elimination over ℚ runs fraction-free on integer rows
//! (each row is kept primitive) and only the final reduced row-echelon form
//! is rescaled to rational entries with unit pivots. Determinants and ranks of
//! polynomial matrices use Bareiss elimination with exact division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Poly, Rat};

/// Sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow<T> = Vec<(usize, T)>;

fn primitive(row: &mut SparseRow<BigInt>) {
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    if row.first().map_or(false, |(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

fn to_integer_row(row: &[(usize, Rat)]) -> SparseRow<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
    let mut out: SparseRow<BigInt> =
        row.iter().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (*c, v.numer() * (&l / v.denom()))).collect();
    out.sort_by_key(|(c, _)| *c);
    primitive(&mut out);
    out
}

/// `a * x - b * y`, dropping zeros.
fn combine(a: &BigInt, x: &SparseRow<BigInt>, b: &BigInt, y: &SparseRow<BigInt>) -> SparseRow<BigInt> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &SparseRow<BigInt>, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// Incrementally built echelon form keyed by pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow<BigInt>>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduces `row` against the current pivots; returns whether it was
    /// independent (and therefore added).
    pub fn insert(&mut self, row: &[(usize, Rat)]) -> bool {
        let mut r = to_integer_row(row);
        while let Some((c, v)) = r.first().cloned() {
            match self.rows.get(&c) {
                Some(p) => {
                    let pv = p[0].1.clone();
                    r = combine(&pv, &r, &v, p);
                    primitive(&mut r);
                }
                None => {
                    self.rows.insert(c, r);
                    return true;
                }
            }
        }
        false
    }

    /// Reduced row-echelon form: rows sorted by pivot column, pivots equal to
    /// one, pivot columns cleared in every other row.
    pub fn rref(&self) -> Vec<SparseRow<Rat>> {
        let mut rows = self.rows.clone();
        let pivots: Vec<usize> = rows.keys().rev().copied().collect();
        for &c in &pivots {
            let p = rows[&c].clone();
            let pv = p[0].1.clone();
            for (_, r) in rows.range_mut(..c) {
                if let Some(v) = entry(r, c).cloned() {
                    *r = combine(&pv, r, &v, &p);
                    primitive(r);
                }
            }
        }
        rows.into_values()
            .map(|r| {
                let lead = r[0].1.clone();
                r.into_iter().map(|(c, v)| (c, Rat::new(v, lead.clone()))).collect()
            })
            .collect()
    }
}

/// Canonical basis of the row space.
pub fn row_space(rows: &[SparseRow<Rat>]) -> Vec<SparseRow<Rat>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rref()
}

pub fn rank(rows: &[SparseRow<Rat>]) -> usize {
    let mut e = Echelon::new();
    rows.iter().filter(|r| e.insert(r)).count()
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows and `ncols`
/// columns; one vector per free column, with a one in that column.
pub fn nullspace(rows: &[SparseRow<Rat>], ncols: usize) -> Vec<SparseRow<Rat>> {
    let rref = row_space(rows);
    let pivot_of: BTreeMap<usize, &SparseRow<Rat>> = rref.iter().map(|r| (r[0].0, r)).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_of.contains_key(c)) {
        let mut v: SparseRow<Rat> = vec![(free, Rat::one())];
        for (&pc, r) in &pivot_of {
            if let Ok(k) = r.binary_search_by_key(&free, |(c, _)| *c) {
                v.push((pc, -r[k].1.clone()));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        out.push(v);
    }
    out
}

/// Bareiss elimination with full pivoting. Returns the rank and, for square
/// input, the determinant.
fn bareiss(m: &[Vec<Poly>]) -> (usize, Option<Poly>) {
    let n = m.len();
    let c = m.first().map_or(0, Vec::len);
    let vars = m.iter().flatten().next().map(|p| p.vars().clone());
    let Some(vars) = vars else {
        return (0, None);
    };
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one(&vars);
    let mut sign = 1i32;
    let mut r = 0;
    for k in 0..n.min(c) {
        let pivot = (k..n).flat_map(|i| (k..c).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        if pi != k {
            a.swap(pi, k);
            sign = -sign;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..c {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("same table").expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero(&vars);
        }
        prev = a[k][k].clone();
        r += 1;
    }
    let det = if n == c {
        Some(if r == n { if sign > 0 { a[n - 1][n - 1].clone() } else { -&a[n - 1][n - 1] } } else { Poly::zero(&vars) })
    } else {
        None
    };
    (r, det)
}

/// Determinant of a square polynomial matrix. An empty matrix has no
/// variable table, so callers handle `n = 0` themselves.
pub fn poly_det(m: &[Vec<Poly>]) -> Option<Poly> {
    if m.is_empty() {
        return None;
    }
    assert!(m.iter().all(|r| r.len() == m.len()), "square matrix");
    bareiss(m).1
}

/// Rank over the fraction field of the polynomial ring.
pub fn poly_rank(m: &[Vec<Poly>]) -> usize {
    bareiss(m).0
}
