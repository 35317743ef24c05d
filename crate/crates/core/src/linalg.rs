//! Sparse exact linear algebra: fraction-free Gauss-Jordan elimination over integer rows.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse rational vector: column to nonzero value.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Sparse rational matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        SparseMatrix { cols, rows }
    }

    pub fn push_row(&mut self, row: SparseVec) {
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let s = dot(row, v);
            if !s.is_zero() {
                out.insert(i, s);
            }
        }
        out
    }

    /// `self * other`, where `other` is given by columns (each a sparse vector over `self.cols`).
    pub fn mul_columns(&self, columns: &[SparseVec]) -> Vec<SparseVec> {
        columns.iter().map(|c| self.mul_vec(c)).collect()
    }

    /// Dense copy, row major.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![Scalar::zero(); self.cols];
                for (&c, v) in r {
                    d[c] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(&self.rows).rank()
    }

    pub fn nullspace(&self) -> Vec<SparseVec> {
        Echelon::from_rows(&self.rows).nullspace(self.cols)
    }
}

pub fn dot(a: &SparseVec, b: &SparseVec) -> Scalar {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut s = Scalar::zero();
    for (k, v) in small {
        if let Some(w) = large.get(k) {
            s += v * w;
        }
    }
    s
}

pub fn add_scaled(target: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in v {
        let slot = target.entry(k).or_insert_with(Scalar::zero);
        *slot += c * x;
        if slot.is_zero() {
            target.remove(&k);
        }
    }
}

/// Sparse integer row used during elimination.
type IntRow = BTreeMap<usize, BigInt>;

fn to_int_row(row: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for v in row.values() {
        lcm = lcm.lcm(v.denom());
    }
    let mut out = IntRow::new();
    for (&k, v) in row {
        if !v.is_zero() {
            out.insert(k, v.numer() * (&lcm / v.denom()));
        }
    }
    normalize(&mut out);
    out
}

/// Divides by the content and makes the leading entry positive.
fn normalize(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let neg = row.values().next().map(|v| v.is_negative()).unwrap_or(false);
    if g.is_zero() {
        return;
    }
    if neg {
        g = -g;
    }
    if !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// `row := lead * row - row[col] * pivot`, which clears `col`.
fn eliminate(row: &mut IntRow, col: usize, pivot: &IntRow, lead: &BigInt) {
    let factor = match row.get(&col) {
        Some(f) => f.clone(),
        None => return,
    };
    if !lead.is_one() {
        for v in row.values_mut() {
            *v *= lead;
        }
    }
    for (&k, p) in pivot {
        let slot = row.entry(k).or_insert_with(BigInt::zero);
        *slot -= &factor * p;
        if slot.is_zero() {
            row.remove(&k);
        }
    }
    normalize(row);
}

/// Reduced row echelon form with pivots chosen at the lowest column index.
/// The result is independent of the order in which rows are supplied.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn from_rows(rows: &[SparseVec]) -> Self {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Adds a row; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let mut r = to_int_row(row);
        let cols: Vec<usize> = r.keys().copied().filter(|c| self.pivots.contains_key(c)).collect();
        for c in cols {
            if r.contains_key(&c) {
                let p = &self.pivots[&c];
                let lead = p[&c].clone();
                eliminate(&mut r, c, p, &lead);
            }
        }
        let Some((&lead_col, lead)) = r.iter().next() else {
            return false;
        };
        let lead = lead.clone();
        for p in self.pivots.values_mut() {
            if p.contains_key(&lead_col) {
                eliminate(p, lead_col, &r, &lead);
            }
        }
        self.pivots.insert(lead_col, r);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &SparseVec) -> bool {
        let mut probe = self.clone();
        !probe.insert(row)
    }

    /// Basis of `{v : M v = 0}`, one vector per free column (that column set to 1), in column order.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&pc, row) in &self.pivots {
            for &c in row.keys() {
                if c != pc {
                    by_col.entry(c).or_default().push(pc);
                }
            }
        }
        let mut out = Vec::new();
        for f in 0..ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(f, Scalar::one());
            if let Some(pcs) = by_col.get(&f) {
                for &pc in pcs {
                    let row = &self.pivots[&pc];
                    let val = Scalar::new(-row[&f].clone(), row[&pc].clone());
                    v.insert(pc, val);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Solves `sum_j x_j columns[j] = target`; returns the solution with free variables set to zero.
pub fn solve_columns(columns: &[SparseVec], target: &SparseVec) -> Option<SparseVec> {
    let n = columns.len();
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (&i, v) in col {
            rows.entry(i).or_default().insert(j, v.clone());
        }
    }
    for (&i, v) in target {
        rows.entry(i).or_default().insert(n, v.clone());
    }
    let mut e = Echelon::new();
    for r in rows.values() {
        e.insert(r);
    }
    if e.pivots.contains_key(&n) {
        return None;
    }
    let mut x = SparseVec::new();
    for (&pc, row) in &e.pivots {
        if let Some(b) = row.get(&n) {
            x.insert(pc, Scalar::new(b.clone(), row[&pc].clone()));
        }
    }
    Some(x)
}

/// Rank of the matrix whose columns are given.
pub fn column_rank(columns: &[SparseVec]) -> usize {
    Echelon::from_rows(columns).rank()
}
