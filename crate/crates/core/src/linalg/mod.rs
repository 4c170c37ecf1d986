//! Exact linear algebra over GF(p) and Smith normal form over the integers.

mod echelon;
mod smith;

pub use echelon::TaggedEchelon;
pub use smith::{smith_invariants, SmithForm};

use serde::Serialize;

/// Multiplicative inverse in GF(p), `a ≠ 0`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

/// A vector over GF(p). Bit-packed for p = 2, one entry per word otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpVector {
    p: u32,
    len: usize,
    data: Vec<u64>,
}

fn words_for(p: u32, len: usize) -> usize {
    if p == 2 {
        len.div_ceil(64)
    } else {
        len
    }
}

impl FpVector {
    pub fn zero(p: u32, len: usize) -> Self {
        FpVector { p, len, data: vec![0; words_for(p, len)] }
    }

    pub fn unit(p: u32, len: usize, i: usize) -> Self {
        let mut v = Self::zero(p, len);
        v.set(i, 1);
        v
    }

    pub fn from_entries(p: u32, entries: &[u32]) -> Self {
        let mut v = Self::zero(p, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e % p);
        }
        v
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.data
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.data
    }

    pub fn get(&self, i: usize) -> u32 {
        if self.p == 2 {
            ((self.data[i / 64] >> (i % 64)) & 1) as u32
        } else {
            self.data[i] as u32
        }
    }

    pub fn set(&mut self, i: usize, v: u32) {
        let v = v % self.p;
        if self.p == 2 {
            let bit = 1u64 << (i % 64);
            if v == 1 {
                self.data[i / 64] |= bit;
            } else {
                self.data[i / 64] &= !bit;
            }
        } else {
            self.data[i] = v as u64;
        }
    }

    /// `self[i] += v`
    pub fn add_at(&mut self, i: usize, v: u32) {
        if self.p == 2 {
            self.data[i / 64] ^= ((v & 1) as u64) << (i % 64);
        } else {
            self.data[i] = (self.data[i] + v as u64) % self.p as u64;
        }
    }

    pub fn entries(&self) -> Vec<u32> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        if self.p == 2 {
            self.data
                .iter()
                .position(|&w| w != 0)
                .map(|k| k * 64 + self.data[k].trailing_zeros() as usize)
        } else {
            self.data.iter().position(|&w| w != 0)
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &FpVector, c: u32) {
        self.add_scaled_from(other, c, 0);
    }

    /// `self += c · other`, where both vectors are known to vanish before
    /// entry `start`.
    pub(crate) fn add_scaled_from(&mut self, other: &FpVector, c: u32, start: usize) {
        debug_assert_eq!(self.len, other.len);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        if self.p == 2 {
            for (a, b) in self.data[start / 64..].iter_mut().zip(&other.data[start / 64..]) {
                *a ^= *b;
            }
        } else {
            let p = self.p as u64;
            let c = c as u64;
            for (a, b) in self.data[start..].iter_mut().zip(&other.data[start..]) {
                *a = (*a + c * *b) % p;
            }
        }
    }

    pub fn scale(&mut self, c: u32) {
        if self.p == 2 {
            if c % 2 == 0 {
                self.data.iter_mut().for_each(|w| *w = 0);
            }
        } else {
            let p = self.p as u64;
            self.data.iter_mut().for_each(|w| *w = *w * c as u64 % p);
        }
    }

    pub fn dot(&self, other: &FpVector) -> u32 {
        if self.p == 2 {
            let ones: u32 = self.data.iter().zip(&other.data).map(|(a, b)| (a & b).count_ones()).sum();
            ones % 2
        } else {
            let p = self.p as u64;
            (self.data.iter().zip(&other.data).fold(0u64, |acc, (a, b)| (acc + a * b) % p)) as u32
        }
    }
}

/// A dense matrix over GF(p), stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    cols: usize,
    rows: Vec<FpVector>,
}

#[derive(Serialize)]
struct MatrixDump {
    prime: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, cols, rows: (0..rows).map(|_| FpVector::zero(p, cols)).collect() }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        FpMatrix { p, cols: n, rows: (0..n).map(|i| FpVector::unit(p, n, i)).collect() }
    }

    pub fn from_rows(p: u32, cols: usize, rows: Vec<FpVector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols && r.prime() == p));
        FpMatrix { p, cols, rows }
    }

    pub fn from_entries(p: u32, cols: usize, entries: &[Vec<u32>]) -> Self {
        Self::from_rows(p, cols, entries.iter().map(|r| FpVector::from_entries(p, r)).collect())
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &FpVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.rows[i].set(j, v)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(FpVector::is_zero)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.p, self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if self.p == 2 {
                for (k, &w) in row.words().iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        let j = k * 64 + w.trailing_zeros() as usize;
                        t.rows[j].set(i, 1);
                        w &= w - 1;
                    }
                }
            } else {
                for j in 0..self.cols {
                    let v = row.get(j);
                    if v != 0 {
                        t.rows[j].set(i, v);
                    }
                }
            }
        }
        t
    }

    /// `self · v`
    pub fn mul_vec(&self, v: &FpVector) -> FpVector {
        let mut out = FpVector::zero(self.p, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(v));
        }
        out
    }

    /// `self · other`
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.num_rows());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = FpVector::zero(self.p, other.cols);
                for k in 0..self.cols {
                    let c = row.get(k);
                    if c != 0 {
                        out.add_scaled(&other.rows[k], c);
                    }
                }
                out
            })
            .collect();
        FpMatrix { p: self.p, cols: other.cols, rows }
    }

    /// Brings the matrix to reduced row echelon form in place, returning the
    /// pivot columns. Zero rows end up at the bottom.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(k) = (r..self.rows.len()).find(|&k| self.rows[k].get(c) != 0) else {
                continue;
            };
            self.rows.swap(r, k);
            let lead = self.rows[r].get(c);
            if lead != 1 {
                self.rows[r].scale(inv_mod(lead, self.p));
            }
            let pivot_row = std::mem::replace(&mut self.rows[r], FpVector::zero(self.p, 0));
            // the pivot row vanishes before column c
            let start = if self.p == 2 { c - c % 64 } else { c };
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let v = row.get(c);
                if v != 0 {
                    row.add_scaled_from(&pivot_row, self.p - v, start);
                }
            }
            self.rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column, in
    /// increasing order of the free column.
    pub fn nullspace(&self) -> Vec<FpVector> {
        let mut m = self.clone();
        let pivots = m.rref();
        nullspace_from_rref(&m, &pivots)
    }

    pub(crate) fn into_rows(self) -> Vec<FpVector> {
        self.rows
    }

    /// Plain-data dump for external verification.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixDump {
            prime: self.p,
            rows: self.rows.len(),
            cols: self.cols,
            entries: self.rows.iter().map(FpVector::entries).collect(),
        })
        .expect("serializable")
    }
}

pub(crate) fn nullspace_from_rref(m: &FpMatrix, pivots: &[usize]) -> Vec<FpVector> {
    let p = m.p;
    let mut is_pivot = vec![false; m.cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = FpVector::zero(p, m.cols);
        v.set(f, 1);
        for (i, &c) in pivots.iter().enumerate() {
            let e = m.rows[i].get(f);
            if e != 0 {
                v.set(c, p - e);
            }
        }
        basis.push(v);
    }
    basis
}

/// Basis of the span of `vectors`, in reduced echelon form.
pub fn row_space(p: u32, len: usize, vectors: Vec<FpVector>) -> Vec<FpVector> {
    let mut m = FpMatrix::from_rows(p, len, vectors);
    let r = m.rref().len();
    let mut rows = m.into_rows();
    rows.truncate(r);
    rows
}
