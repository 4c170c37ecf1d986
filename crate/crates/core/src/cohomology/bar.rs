//! Normalized bar cochains `C^n(G; GF(p))`: functions on `(G∖{e})^n`,
//! indexed in mixed radix with the first argument most significant.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::FiniteGroup;
use crate::linalg::{FpMatrix, FpVector};

pub(crate) struct BarComplex<'a> {
    pub group: &'a FiniteGroup,
    pub p: u32,
    /// `|G| − 1`
    pub m: usize,
}

impl<'a> BarComplex<'a> {
    pub fn new(group: &'a FiniteGroup, p: u32) -> Self {
        BarComplex { group, p, m: group.order() - 1 }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.m.pow(n as u32)
    }

    /// Index of a tuple of non-identity elements.
    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &g| acc * self.m + (g - 1))
    }

    pub fn tuple(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.m + 1;
            idx /= self.m;
        }
        t
    }

    /// The faces of the differential `d: C^n → C^{n+1}` at the row indexed by
    /// `tuple` (length `n + 1`): pairs `(column, sign)` with `sign ∈ {1, p−1}`.
    /// Faces whose merged argument is the identity vanish.
    pub fn faces(&self, tuple: &[usize], out: &mut Vec<(usize, u32)>) {
        out.clear();
        let n1 = tuple.len();
        let minus = self.p - 1;
        let sign = |i: usize| if i % 2 == 0 { 1 } else { minus };
        out.push((self.index(&tuple[1..]), 1));
        let mut merged = Vec::with_capacity(n1 - 1);
        for i in 0..n1 - 1 {
            let prod = self.group.mul(tuple[i], tuple[i + 1]);
            if prod == 0 {
                continue;
            }
            merged.clear();
            merged.extend_from_slice(&tuple[..i]);
            merged.push(prod);
            merged.extend_from_slice(&tuple[i + 2..]);
            out.push((self.index(&merged), sign(i + 1)));
        }
        out.push((self.index(&tuple[..n1 - 1]), sign(n1)));
    }

    /// Calls `visit(row, faces)` for every row of `d: C^n → C^{n+1}`.
    pub fn for_each_row(&self, n: usize, mut visit: impl FnMut(usize, &[(usize, u32)])) {
        let rows = self.dim(n + 1);
        let mut tuple = vec![1usize; n + 1];
        let mut faces = Vec::with_capacity(n + 2);
        for row in 0..rows {
            if n == 0 {
                // d⁰ vanishes for the trivial module
                visit(row, &[]);
            } else {
                self.faces(&tuple, &mut faces);
                visit(row, &faces);
            }
            // increment the mixed-radix counter (last digit fastest)
            for slot in tuple.iter_mut().rev() {
                if *slot < self.m {
                    *slot += 1;
                    break;
                }
                *slot = 1;
            }
        }
    }

    /// `d f` for a cochain `f ∈ C^n`.
    pub fn differential(&self, n: usize, f: &FpVector) -> FpVector {
        let mut out = FpVector::zero(self.p, self.dim(n + 1));
        self.for_each_row(n, |row, faces| {
            let v = faces.iter().fold(0u32, |acc, &(c, s)| (acc + s * f.get(c)) % self.p);
            if v != 0 {
                out.set(row, v);
            }
        });
        out
    }

    /// Columns of `d: C^{n} → C^{n+1}` as vectors, i.e. `d δ_c` for each
    /// basis cochain `δ_c`.
    pub fn differential_columns(&self, n: usize) -> Vec<FpVector> {
        let mut cols = vec![FpVector::zero(self.p, self.dim(n + 1)); self.dim(n)];
        self.for_each_row(n, |row, faces| {
            for &(c, s) in faces {
                cols[c].add_at(row, s);
            }
        });
        cols
    }

    /// Checks that each candidate lies in the kernel of `d: C^n → C^{n+1}`.
    pub fn all_cocycles(&self, n: usize, candidates: &[FpVector]) -> bool {
        if self.p == 2 {
            // bit-slice 64 candidates at a time
            for chunk in candidates.chunks(64) {
                let mut masks = vec![0u64; self.dim(n)];
                for (b, v) in chunk.iter().enumerate() {
                    for (c, mask) in masks.iter_mut().enumerate() {
                        if v.get(c) == 1 {
                            *mask |= 1 << b;
                        }
                    }
                }
                let mut ok = true;
                self.for_each_row(n, |_, faces| {
                    let acc = faces.iter().fold(0u64, |acc, &(c, _)| acc ^ masks[c]);
                    ok &= acc == 0;
                });
                if !ok {
                    return false;
                }
            }
            true
        } else {
            candidates.iter().all(|v| self.differential(n, v).is_zero())
        }
    }

    /// Matrix whose kernel equals `ker(d: C^n → C^{n+1})`.
    ///
    /// When `C^{n+1}` is much larger than `C^n` the rows are compressed by a
    /// random GF(p)-combination `R` with `cols + 64` rows; `ker(R d) ⊇ ker d`,
    /// with equality unless `R` is unlucky, which the caller detects by
    /// checking the kernel vectors against `d` itself.
    pub fn kernel_matrix(&self, n: usize, seed: u64) -> FpMatrix {
        let rows = self.dim(n + 1);
        let cols = self.dim(n);
        let k = cols + 64;
        let p = self.p;
        if rows <= k {
            let mut m = FpMatrix::zero(p, rows, cols);
            self.for_each_row(n, |row, faces| {
                for &(c, s) in faces {
                    let v = (m.get(row, c) + s) % p;
                    m.set(row, c, v);
                }
            });
            return m;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut transposed = vec![FpVector::zero(p, k); cols];
        let mut rho = FpVector::zero(p, k);
        self.for_each_row(n, |_, faces| {
            if p == 2 {
                let words = rho.words_mut();
                for w in words.iter_mut() {
                    *w = rng.next_u64();
                }
                if k % 64 != 0 {
                    let last = words.len() - 1;
                    words[last] &= (1u64 << (k % 64)) - 1;
                }
            } else {
                for i in 0..k {
                    rho.set(i, rng.gen_range(0..p));
                }
            }
            for &(c, s) in faces {
                transposed[c].add_scaled(&rho, s);
            }
        });
        FpMatrix::from_rows(p, k, transposed).transpose()
    }
}
