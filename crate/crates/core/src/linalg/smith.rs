use num_integer::Integer;
use num_traits::Signed;

/// Diagonal of the Smith normal form of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub invariants: Vec<T>,
    pub rows: usize,
    pub cols: usize,
}

impl<T: Integer + Signed + Clone> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Free rank of the cokernel `ℤ^cols / rowspace`.
    pub fn free_rank(&self) -> usize {
        self.cols - self.rank()
    }

    /// Invariant factors of the cokernel that are not 1.
    pub fn torsion(&self) -> Vec<T> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form of `matrix` (rows of equal length `cols`).
pub fn smith_invariants<T: Integer + Signed + Clone>(matrix: &[Vec<T>], cols: usize) -> SmithForm<T> {
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let pivot = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    for j in t..cols {
                        let s = m[t][j].clone() * q.clone();
                        m[i][j] = m[i][j].clone() - s;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let s = row[t].clone() * q.clone();
                        row[j] = row[j].clone() - s;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // enforce divisibility: diag(a, b) ~ diag(gcd, lcm)
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    SmithForm { invariants: diag, rows, cols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_forms() {
        let m: Vec<Vec<i64>> = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_invariants(&m, 3);
        assert_eq!(s.invariants, vec![2, 6, 12]);

        let m: Vec<Vec<i64>> = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_invariants(&m, 2).invariants, vec![1, 6]);

        let m: Vec<Vec<i64>> = vec![vec![0, 0, 0]];
        let s = smith_invariants(&m, 3);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.free_rank(), 3);
    }

    #[test]
    fn big_integers() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(6), BigInt::from(4)],
        ];
        let s = smith_invariants(&m, 2);
        assert_eq!(s.invariants, vec![BigInt::from(2), BigInt::from(10)]);
        assert_eq!(s.torsion(), vec![BigInt::from(2), BigInt::from(10)]);
    }
}
