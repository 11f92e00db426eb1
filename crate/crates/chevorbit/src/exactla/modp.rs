//! Dense matrices over a prime field `F_p`.

use crate::{Error, Result};

use super::primes::is_prime;

/// Row-major dense matrix over `F_p`, entries reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> ModMatrix {
        ModMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> ModMatrix {
        let mut m = Self::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1 % p);
        }
        m
    }

    pub fn from_rows_mod(cols: usize, rows: &[Vec<u64>], p: u64) -> Result<ModMatrix> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m = ModMatrix::zero(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = ModMatrix::zero(self.rows, other.cols, self.p);
        let p128 = self.p as u128;
        for r in 0..self.rows {
            let a = self.row(r);
            let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for (k, &av) in a.iter().enumerate() {
                if av == 0 {
                    continue;
                }
                let b = other.row(k);
                let av = av as u128;
                for (c, &bv) in b.iter().enumerate() {
                    let cur = orow[c] as u128 + av * bv as u128;
                    orow[c] = (cur % p128) as u64;
                }
            }
        }
        out
    }

    /// Apply to a column vector: `M v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u128;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u128;
                for (c, &x) in v.iter().enumerate() {
                    acc = (acc + self.get(r, c) as u128 * x as u128) % p;
                }
                acc as u64
            })
            .collect()
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // extended euclid; p prime, a != 0
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (self.p as i128, a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        (t.rem_euclid(self.p as i128)) as u64
    }

    /// In-place row echelon (not reduced); returns the matrix with zero rows
    /// removed. The surviving row count is the rank.
    pub fn row_echelon(mut self) -> ModMatrix {
        let p = self.p;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) = (pivot_row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(pivot_row, sel);
            let inv = self.inv_mod(self.get(pivot_row, col));
            // normalize pivot row
            for c in col..self.cols {
                let v = (self.get(pivot_row, c) as u128 * inv as u128 % p as u128) as u64;
                self.set(pivot_row, c, v);
            }
            for r in pivot_row + 1..self.rows {
                let f = self.get(r, col);
                if f == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = (self.get(r, c) as u128 + (p - f) as u128 * self.get(pivot_row, c) as u128
                        % p as u128)
                        % p as u128;
                    self.set(r, c, v as u64);
                }
            }
            pivot_row += 1;
        }
        self.data.truncate(pivot_row * self.cols);
        self.rows = pivot_row;
        self
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().row_echelon().rows()
    }

    /// Reduced row echelon form together with pivot column indices.
    pub fn rref(&self) -> (ModMatrix, Vec<usize>) {
        let mut e = self.clone().row_echelon();
        let p = e.p;
        let mut pivots = Vec::new();
        for r in 0..e.rows {
            let c = (0..e.cols).find(|&c| e.get(r, c) != 0).unwrap();
            pivots.push(c);
        }
        // back substitution
        for r in (0..e.rows).rev() {
            let c = pivots[r];
            for above in 0..r {
                let f = e.get(above, c);
                if f == 0 {
                    continue;
                }
                for cc in c..e.cols {
                    let v = (e.get(above, cc) as u128
                        + (p - f) as u128 * e.get(r, cc) as u128 % p as u128)
                        % p as u128;
                    e.set(above, cc, v as u64);
                }
            }
        }
        (e, pivots)
    }

    /// One solution of `M x = b` over `F_p`, if the system is consistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let p = self.p;
        let mut aug = ModMatrix::zero(self.rows, self.cols + 1, p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r] % p);
        }
        let (rref, pivots) = aug.rref();
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            if c == self.cols {
                return None; // pivot in the augmented column: inconsistent
            }
            x[c] = rref.get(r, self.cols);
        }
        Some(x)
    }

    /// Canonical basis of the row kernel `{v : v M = 0}`, in reduced echelon form.
    pub fn row_kernel(&self) -> Vec<Vec<u64>> {
        let t = self.transpose();
        let (rref, pivots) = t.rref();
        let free: Vec<usize> = (0..self.rows).filter(|c| !pivots.contains(c)).collect();
        let mut basis: Vec<Vec<u64>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u64; self.rows];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = rref.get(r, f);
                if coeff != 0 {
                    v[pc] = self.p - coeff;
                }
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        // normalize to reduced echelon form for a canonical result
        let m = ModMatrix::from_rows_mod(self.rows, &basis, self.p).unwrap();
        let (rref, _) = m.rref();
        (0..rref.rows()).map(|r| rref.row(r).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let z = ModMatrix::zero(3, 4, 5);
        assert_eq!(z.rank(), 0);
        let id = ModMatrix::identity(4, 7);
        assert_eq!(id.rank(), 4);
        // [[2,4],[6,8]] mod 2 is the zero matrix
        let m = ModMatrix::from_rows_mod(2, &[vec![0, 0], vec![0, 0]], 2).unwrap();
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn kernel_composes_with_matrix() {
        let m = ModMatrix::from_rows_mod(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 7)
            .unwrap();
        for v in m.row_kernel() {
            let vm = ModMatrix::from_rows_mod(3, &[v], 7).unwrap().mul(&m);
            assert!(vm.row(0).iter().all(|&x| x == 0));
        }
        assert_eq!(m.row_kernel().len(), 3 - m.rank());
    }
}
