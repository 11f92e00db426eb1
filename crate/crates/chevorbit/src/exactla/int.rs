//! Dense matrices over `Z` with arbitrary-precision entries.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

use super::modp::ModMatrix;
use super::primes::{factor_bigint, is_prime};

/// Row-major dense matrix over `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        assert_eq!(data.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            data: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn reduce_mod(&self, p: u64) -> Result<ModMatrix> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m = ModMatrix::zero(self.rows, self.cols, p);
        let bp = BigInt::from(p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c) % &bp;
                let v = if v.sign() == Sign::Minus { v + &bp } else { v };
                m.set(r, c, u64::try_from(&v).unwrap());
            }
        }
        Ok(m)
    }

    /// Rank over the rationals via incremental fraction-free elimination.
    pub fn rank_rational(&self) -> usize {
        let mut echelon: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            let mut v = self.row(r).to_vec();
            reduce_row_rational(&mut v, &echelon, &pivots);
            if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
                strip_content(&mut v);
                let pos = pivots.binary_search(&lead).unwrap_err();
                pivots.insert(pos, lead);
                echelon.insert(pos, v);
            }
        }
        echelon.len()
    }

    /// Incrementally accumulate rows into a lattice-preserving echelon form;
    /// only unimodular row operations are used, so the row lattice (and hence
    /// the Smith normal form) is preserved. Zero rows are dropped.
    pub fn row_echelon_lattice(&self) -> IntMatrix {
        let mut echelon: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            let v = self.row(r).to_vec();
            insert_row_lattice(v, &mut echelon, &mut pivots);
        }
        IntMatrix::from_rows(self.cols, &echelon)
    }

    /// Column analogue of [`IntMatrix::row_echelon_lattice`].
    pub fn column_echelon_lattice(&self) -> IntMatrix {
        self.transpose().row_echelon_lattice().transpose()
    }

    /// Elementary divisors `d_1 | d_2 | ... | d_r`, all positive.
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        // lattice-preserving compression on both sides keeps the working
        // matrix square of size rank and controls entry growth
        let compact = self.row_echelon_lattice().column_echelon_lattice();
        snf_divisors(compact)
    }

    /// Product of all elementary divisors (the last determinantal divisor),
    /// or zero for the zero matrix. Cheaper and better conditioned than a
    /// full Smith normal form: two lattice echelon passes leave a triangular
    /// rank-sized block whose diagonal carries the product.
    pub fn divisor_product(&self) -> BigInt {
        let h = self.row_echelon_lattice();
        if h.rows() == 0 {
            return BigInt::zero();
        }
        let w = h.transpose().row_echelon_lattice();
        debug_assert_eq!(w.rows(), w.cols());
        let mut prod = BigInt::from(1);
        for i in 0..w.rows() {
            prod *= w.get(i, i).abs();
        }
        prod
    }

    /// Rank together with the divisor product, sharing the echelon work.
    pub fn rank_and_divisor_product(&self) -> (usize, BigInt) {
        let h = self.row_echelon_lattice();
        if h.rows() == 0 {
            return (0, BigInt::zero());
        }
        let w = h.transpose().row_echelon_lattice();
        let mut prod = BigInt::from(1);
        for i in 0..w.rows() {
            prod *= w.get(i, i).abs();
        }
        (w.rows(), prod)
    }

    /// Primes dividing at least one elementary divisor. For any prime outside
    /// this set the rank mod p equals the rank over the rationals.
    pub fn exceptional_primes(&self) -> Result<Vec<u64>> {
        let divisors = self.smith_normal_form();
        // the divisibility chain means the last divisor carries every prime
        match divisors.last() {
            None => Ok(vec![]),
            Some(d) => {
                let mut ps = factor_bigint(d)?;
                ps.sort_unstable();
                ps.dedup();
                Ok(ps)
            }
        }
    }

    /// A basis of the saturated kernel lattice `{v in Z^rows : v M = 0}`,
    /// canonicalized to row Hermite normal form. Because `Z^rows / ker` is
    /// torsion-free, the reduction of this basis mod any prime stays
    /// linearly independent.
    pub fn saturated_row_kernel(&self) -> Vec<Vec<BigInt>> {
        // maintain [M | I] and row-reduce the left block with unimodular ops
        let n = self.rows;
        let mut work: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                let mut tail = vec![BigInt::zero(); n];
                tail[r] = BigInt::from(1);
                v.append(&mut tail);
                v
            })
            .collect();
        let mut echelon: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut kernel: Vec<Vec<BigInt>> = Vec::new();
        for v in work.drain(..) {
            let v = insert_row_lattice_tracked(v, self.cols, &mut echelon, &mut pivots);
            if let Some(done) = v {
                kernel.push(done[self.cols..].to_vec());
            }
        }
        hermite_normalize(&mut kernel);
        kernel
    }
}

/// Exact solution of `A x = b` over the rationals, if one exists.
pub fn solve_rational_system(
    a: &IntMatrix,
    b: &[BigInt],
) -> Option<Vec<num_rational::BigRational>> {
    use num_rational::BigRational;
    use num_traits::One;
    let rows = a.rows();
    let cols = a.cols();
    assert_eq!(b.len(), rows);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = a.row(r).iter().map(|x| BigRational::from(x.clone())).collect();
            row.push(BigRational::from(b[r].clone()));
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(sel) = (prow..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(prow, sel);
        let inv = m[prow][col].clone().recip();
        for j in col..=cols {
            let v = &m[prow][j] * &inv;
            m[prow][j] = v;
        }
        debug_assert!(m[prow][col].is_one());
        for r in 0..rows {
            if r != prow && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let v = &m[r][j] - &f * &m[prow][j];
                    m[r][j] = v;
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // inconsistent if a zero row has nonzero rhs
    for r in prow..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, c) in pivots {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Reduce a row against a rational echelon (fraction-free, content-stripped).
fn reduce_row_rational(v: &mut [BigInt], echelon: &[Vec<BigInt>], pivots: &[usize]) {
    for (row, &pc) in echelon.iter().zip(pivots) {
        if v[pc].is_zero() {
            continue;
        }
        let a = row[pc].clone();
        let b = v[pc].clone();
        let g = a.gcd(&b);
        let fa = &a / &g;
        let fb = &b / &g;
        for (x, y) in v.iter_mut().zip(row) {
            *x = &*x * &fa - y * &fb;
        }
        debug_assert!(v[pc].is_zero());
    }
}

fn strip_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Insert a row into a lattice echelon using unimodular operations only.
fn insert_row_lattice(mut v: Vec<BigInt>, echelon: &mut Vec<Vec<BigInt>>, pivots: &mut Vec<usize>) {
    loop {
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        match pivots.binary_search(&lead) {
            Err(pos) => {
                if v[lead].sign() == Sign::Minus {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                pivots.insert(pos, lead);
                echelon.insert(pos, v);
                return;
            }
            Ok(pos) => {
                // combine with the existing pivot row via extended gcd
                let a = echelon[pos][lead].clone();
                let b = v[lead].clone();
                let ext = a.extended_gcd(&b);
                let (g, x, y) = (ext.gcd, ext.x, ext.y);
                let fa = &a / &g;
                let fb = &b / &g;
                let old = echelon[pos].clone();
                for (i, (p, q)) in old.iter().zip(v.iter()).enumerate() {
                    echelon[pos][i] = &x * p + &y * q;
                }
                for (i, (p, q)) in old.iter().zip(v.clone().iter()).enumerate() {
                    v[i] = &fa * q - &fb * p;
                }
                debug_assert!(v[lead].is_zero());
            }
        }
    }
}

/// Same as `insert_row_lattice` but the row carries a transform tail; only
/// the first `cols` entries count as matrix content. Returns the full row if
/// its matrix part reduced to zero (i.e. it is a kernel certificate).
fn insert_row_lattice_tracked(
    mut v: Vec<BigInt>,
    cols: usize,
    echelon: &mut Vec<Vec<BigInt>>,
    pivots: &mut Vec<usize>,
) -> Option<Vec<BigInt>> {
    loop {
        let lead = (0..cols).find(|&c| !v[c].is_zero());
        let Some(lead) = lead else {
            return Some(v);
        };
        match pivots.binary_search(&lead) {
            Err(pos) => {
                pivots.insert(pos, lead);
                echelon.insert(pos, v);
                return None;
            }
            Ok(pos) => {
                let a = echelon[pos][lead].clone();
                let b = v[lead].clone();
                let ext = a.extended_gcd(&b);
                let (g, x, y) = (ext.gcd, ext.x, ext.y);
                let fa = &a / &g;
                let fb = &b / &g;
                let old = echelon[pos].clone();
                for i in 0..v.len() {
                    echelon[pos][i] = &x * &old[i] + &y * &v[i];
                }
                let vv = v.clone();
                for i in 0..v.len() {
                    v[i] = &fa * &vv[i] - &fb * &old[i];
                }
                debug_assert!(v[lead].is_zero());
            }
        }
    }
}

/// Row Hermite normal form of a full-rank list of rows (in place):
/// pivots positive, entries above each pivot reduced into [0, pivot).
fn hermite_normalize(rows: &mut Vec<Vec<BigInt>>) {
    if rows.is_empty() {
        return;
    }
    let width = rows[0].len();
    let mut echelon: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in rows.drain(..) {
        insert_row_lattice(v, &mut echelon, &mut pivots);
    }
    // reduce above pivots
    for i in (0..echelon.len()).rev() {
        let pc = pivots[i];
        if echelon[i][pc].sign() == Sign::Minus {
            for x in echelon[i].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = echelon[i][pc].clone();
        for j in 0..i {
            let q = echelon[j][pc].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            for c in 0..width {
                let sub = &q * &echelon[i][c];
                echelon[j][c] = &echelon[j][c] - sub;
            }
        }
    }
    *rows = echelon;
}

/// Smith normal form divisors by direct elimination.
fn snf_divisors(mut m: IntMatrix) -> Vec<BigInt> {
    let mut divisors: Vec<BigInt> = Vec::new();
    let mut top = 0usize;
    let (rows, cols) = (m.rows, m.cols);
    'outer: while top < rows.min(cols) {
        // find the minimal nonzero entry in the trailing submatrix
        let mut best: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if !m.get(r, c).is_zero()
                    && best.is_none_or(|(br, bc)| m.get(r, c).abs() < m.get(br, bc).abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else {
            break;
        };
        swap_rows(&mut m, top, br);
        swap_cols(&mut m, top, bc);
        // eliminate column and row at `top`; pivot may change during reduction
        loop {
            let mut clean = true;
            for r in top + 1..rows {
                if m.get(r, top).is_zero() {
                    continue;
                }
                let q = rounded_div(m.get(r, top), m.get(top, top));
                if !q.is_zero() {
                    for c in top..cols {
                        let sub = &q * m.get(top, c);
                        let v = m.get(r, c) - sub;
                        m.set(r, c, v);
                    }
                }
                if !m.get(r, top).is_zero() {
                    swap_rows(&mut m, top, r);
                    clean = false;
                }
            }
            for c in top + 1..cols {
                if m.get(top, c).is_zero() {
                    continue;
                }
                let q = rounded_div(m.get(top, c), m.get(top, top));
                if !q.is_zero() {
                    for r in top..rows {
                        let sub = &q * m.get(r, top);
                        let v = m.get(r, c) - sub;
                        m.set(r, c, v);
                    }
                }
                if !m.get(top, c).is_zero() {
                    swap_cols(&mut m, top, c);
                    clean = false;
                }
            }
            if clean
                && (top + 1..rows).all(|r| m.get(r, top).is_zero())
                && (top + 1..cols).all(|c| m.get(top, c).is_zero())
            {
                break;
            }
        }
        // pivot must divide the whole trailing block for the divisor chain
        for r in top + 1..rows {
            for c in top + 1..cols {
                if !(m.get(r, c) % m.get(top, top)).is_zero() {
                    // fold that row back into the pivot row and restart
                    for cc in top..cols {
                        let v = m.get(top, cc) + m.get(r, cc);
                        m.set(top, cc, v);
                    }
                    continue 'outer;
                }
            }
        }
        divisors.push(m.get(top, top).abs());
        top += 1;
    }
    divisors
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols {
        m.data.swap(a * m.cols + c, b * m.cols + c);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.rows {
        m.data.swap(r * m.cols + a, r * m.cols + b);
    }
}

/// Division rounded to nearest, which keeps remainders at most half the pivot.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        // step q by one so that |a - q b| shrinks below |b|/2
        if (r.sign() == Sign::Minus) == (b.sign() == Sign::Minus) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_rational_examples() {
        let m = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        assert_eq!(m.rank_rational(), 2);
        let m = IntMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.rank_rational(), 1);
        assert_eq!(IntMatrix::zero(3, 3).rank_rational(), 0);
    }

    #[test]
    fn lattice_echelon_preserves_snf() {
        let m = IntMatrix::from_i64(4, 3, &[2, 4, 4, 6, 6, 12, 10, 4, 16, 2, 2, 2]);
        let compact = m.row_echelon_lattice();
        assert_eq!(m.smith_normal_form(), snf_divisors(compact));
    }

    #[test]
    fn saturated_kernel_is_saturated() {
        // rows (2,0),( 0,2) of the map v -> v*M with M = [[1,1],[1,1]] have
        // kernel (1,-1); the unsaturated (2,-2) must not be returned
        let m = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        let k = m.saturated_row_kernel();
        assert_eq!(k, vec![vec![BigInt::from(1), BigInt::from(-1)]]);
    }

    #[test]
    fn kernel_annihilates() {
        let m = IntMatrix::from_i64(3, 2, &[3, 6, 1, 2, 4, 8]);
        let k = m.saturated_row_kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            for c in 0..2 {
                let s: BigInt = (0..3).map(|r| &v[r] * m.get(r, c)).sum();
                assert!(s.is_zero());
            }
        }
    }
}
