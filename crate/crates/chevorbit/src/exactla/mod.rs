//! Exact linear algebra over the integers and prime fields.
//!
//! Everything here is exact: matrices over `F_p` use machine words with
//! modular arithmetic, matrices over `Z` use arbitrary-precision integers.
//! No floating point, no probabilistic shortcuts.

mod int;
mod modp;
mod primes;

pub use int::{solve_rational_system, IntMatrix};
pub use modp::ModMatrix;
pub use primes::{factor_u64, is_prime};

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut j = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= j).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            j += 1;
        }
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("-"))
    }
}

/// Jordan partition of a nilpotent matrix over `F_p` from ranks of powers.
///
/// The number of Jordan blocks of size at least `j` is
/// `rank(N^(j-1)) - rank(N^j)`. Errors if `N^bound` is still nonzero.
pub fn jordan_partition(n: &ModMatrix, bound: usize) -> Result<Partition> {
    if n.rows() != n.cols() {
        return Err(Error::Invalid("jordan_partition needs a square matrix".into()));
    }
    let side = n.rows();
    let mut ranks = vec![side];
    // row space of successive powers: R_{j+1} = rowreduce(R_j * N)
    let mut r = n.clone().row_echelon();
    loop {
        let rank = r.rows();
        ranks.push(rank);
        if rank == 0 {
            break;
        }
        if ranks.len() > bound + 1 {
            return Err(Error::NotNilpotent);
        }
        r = r.mul(n).row_echelon();
    }
    // parts of size >= j occur (ranks[j-1] - ranks[j]) times
    let mut parts = Vec::new();
    for j in 1..ranks.len() {
        let ge_j = ranks[j - 1] - ranks[j];
        let ge_j1 = if j < ranks.len() - 1 {
            ranks[j] - ranks[j + 1]
        } else {
            0
        };
        for _ in 0..ge_j.saturating_sub(ge_j1) {
            parts.push(j);
        }
    }
    let p = Partition::new(parts)?;
    debug_assert_eq!(p.sum(), side);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn partition_conjugate() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn jordan_of_zero_and_single_block() {
        let z = ModMatrix::zero(4, 4, 5);
        let p = jordan_partition(&z, 4).unwrap();
        assert_eq!(p.parts(), &[1, 1, 1, 1]);

        let mut j3 = ModMatrix::zero(3, 3, 7);
        j3.set(0, 1, 1);
        j3.set(1, 2, 1);
        let p = jordan_partition(&j3, 3).unwrap();
        assert_eq!(p.parts(), &[3]);
    }

    #[test]
    fn jordan_rejects_non_nilpotent() {
        let id = ModMatrix::identity(3, 5);
        assert!(jordan_partition(&id, 3).is_err());
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        assert_eq!(m.smith_normal_form(), vec![BigInt::from(1), BigInt::from(6)]);

        let z = IntMatrix::zero(3, 2);
        assert!(z.smith_normal_form().is_empty());

        let m = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        assert_eq!(m.smith_normal_form(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn exceptional_primes_examples() {
        let id = IntMatrix::identity(3);
        assert!(id.exceptional_primes().unwrap().is_empty());

        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        assert_eq!(m.exceptional_primes().unwrap(), vec![2, 3]);

        let m = IntMatrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 4]);
        assert_eq!(m.exceptional_primes().unwrap(), vec![2]);
    }

    #[test]
    fn saturated_kernel_examples() {
        let id = IntMatrix::identity(3);
        assert!(id.saturated_row_kernel().is_empty());

        let m = IntMatrix::from_i64(1, 1, &[2]);
        assert!(m.saturated_row_kernel().is_empty());

        // kernel of v . [[1],[1]] = 0 is spanned by (1,-1)
        let m = IntMatrix::from_i64(2, 1, &[1, 1]);
        let k = m.saturated_row_kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn kernel_mod_p_examples() {
        let id = ModMatrix::identity(2, 3);
        assert!(id.row_kernel().is_empty());

        let z = ModMatrix::zero(3, 2, 5);
        let k = z.row_kernel();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            let mut expect = vec![0u64; 3];
            expect[i] = 1;
            assert_eq!(*v, expect);
        }

        let m = ModMatrix::from_rows_mod(2, &[vec![1, 1], vec![1, 1]], 3).unwrap();
        let k = m.row_kernel();
        assert_eq!(k, vec![vec![1, 2]]);
    }

    // brute-force determinant for the minor-gcd oracle
    fn det_brute(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut det = 0;
        for j in 0..n {
            if m[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = (1..n)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * m[0][j] * det_brute(&minor);
        }
        det
    }

    /// Independent oracle: gcd of all k x k minors, for the SNF identity
    /// d_1 ... d_k = gcd of k x k minors.
    fn minor_gcd(rows: usize, cols: usize, data: &[i64], k: usize) -> i64 {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }
        let mut g: i64 = 0;
        for rset in subsets(rows, k) {
            for cset in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rset
                    .iter()
                    .map(|&r| cset.iter().map(|&c| data[r * cols + c]).collect())
                    .collect();
                g = gcd_i64(g, det_brute(&sub));
            }
        }
        g.abs()
    }

    fn gcd_i64(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd_i64(b, a % b)
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn snf_matches_minor_gcd_oracle(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-20i64..=20, 25),
        ) {
            let data: Vec<i64> = seed.iter().take(rows * cols).cloned().collect();
            let m = IntMatrix::from_i64(rows, cols, &data);
            let divisors = m.smith_normal_form();
            // divisibility chain
            for w in divisors.windows(2) {
                prop_assert!((&w[1] % &w[0]).bits() == 0);
            }
            // product of first k divisors = gcd of k x k minors
            let mut prod = BigInt::from(1);
            for (k, d) in divisors.iter().enumerate() {
                prod *= d;
                let oracle = minor_gcd(rows, cols, &data, k + 1);
                prop_assert_eq!(prod.clone(), BigInt::from(oracle));
            }
            // rank over Q agrees with the number of divisors
            prop_assert_eq!(m.rank_rational(), divisors.len());
        }

        #[test]
        fn modular_rank_counts_divisors_prime_to_p(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-20i64..=20, 25),
        ) {
            let data: Vec<i64> = seed.iter().take(rows * cols).cloned().collect();
            let m = IntMatrix::from_i64(rows, cols, &data);
            let divisors = m.smith_normal_form();
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                let mp = m.reduce_mod(p).unwrap();
                let expected = divisors
                    .iter()
                    .filter(|d| (&**d % BigInt::from(p)).bits() != 0)
                    .count();
                prop_assert_eq!(mp.rank(), expected);
            }
        }

        #[test]
        fn saturated_kernel_reduces_to_modular_kernel_off_exceptional_primes(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-10i64..=10, 25),
        ) {
            let data: Vec<i64> = seed.iter().take(rows * cols).cloned().collect();
            let m = IntMatrix::from_i64(rows, cols, &data);
            let kernel = m.saturated_row_kernel();
            let exceptional = m.exceptional_primes().unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                if exceptional.contains(&p) {
                    continue;
                }
                let mp = m.reduce_mod(p).unwrap();
                let kp = mp.row_kernel();
                prop_assert_eq!(kernel.len(), kp.len());
                // the reduced saturated basis must span the modular kernel:
                // stack both and check the rank stays |kernel|
                let mut rows_v: Vec<Vec<u64>> = kp;
                for v in &kernel {
                    rows_v.push(v.iter().map(|x| int_mod(x, p)).collect());
                }
                let stacked = ModMatrix::from_rows_mod(rows, &rows_v, p).unwrap();
                prop_assert_eq!(stacked.rank(), kernel.len());
            }
        }

        #[test]
        fn jordan_conjugate_consistency(
            side in 1usize..6,
            seed in proptest::collection::vec(0u64..3, 36),
        ) {
            // random strictly upper triangular matrix mod 3 is nilpotent
            let p = 3u64;
            let mut n = ModMatrix::zero(side, side, p);
            let mut idx = 0;
            for r in 0..side {
                for c in r + 1..side {
                    n.set(r, c, seed[idx % seed.len()] % p);
                    idx += 1;
                }
            }
            let part = jordan_partition(&n, side).unwrap();
            prop_assert_eq!(part.sum(), side);
            // conjugate partition entry k = nullity(N^k) - nullity(N^(k-1))
            let conj = part.conjugate();
            let mut power = ModMatrix::identity(side, p);
            let mut prev_nullity = 0usize;
            for k in 1..=conj.parts().len() {
                power = power.mul(&n);
                let nullity = side - power.rank();
                prop_assert_eq!(conj.parts()[k - 1], nullity - prev_nullity);
                prev_nullity = nullity;
            }
        }
    }

    fn int_mod(x: &BigInt, p: u64) -> u64 {
        let m = x % BigInt::from(p);
        let m = if m.sign() == num_bigint::Sign::Minus {
            m + BigInt::from(p)
        } else {
            m
        };
        u64::try_from(&m).unwrap()
    }
}
