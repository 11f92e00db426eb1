//! Irreducible root systems in simple-root coordinates.
//!
//! Roots are stored as integer coordinate vectors over the simple roots,
//! which are numbered as in Bourbaki (see `docs/CONVENTIONS.md`). The
//! positive roots are kept in a canonical order: ascending height, ties
//! broken lexicographically on coordinates. All external data files refer
//! to roots by coordinate vector, never by position, so the ordering is an
//! internal convenience only.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A root in simple-root coordinates.
pub type Root = Vec<i64>;

/// Simple Lie type together with its rank, e.g. `E8` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub series: Series,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.series {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        write!(f, "{}{}", s, self.rank)
    }
}

impl TypeLabel {
    pub fn parse(s: &str) -> Result<TypeLabel> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        let ok = match series {
            Series::A => (1..=12).contains(&rank),
            Series::B | Series::C => (2..=12).contains(&rank),
            Series::D => (4..=12).contains(&rank),
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnknownType(s.to_string()));
        }
        Ok(TypeLabel { series, rank })
    }

    /// Bad primes for the adjoint group of this type.
    pub fn bad_primes(&self) -> Vec<u64> {
        match self.series {
            Series::A => vec![],
            Series::B | Series::C | Series::D => vec![2],
            Series::G | Series::F => vec![2, 3],
            Series::E => match self.rank {
                6 | 7 => vec![2, 3],
                8 => vec![2, 3, 5],
                _ => unreachable!(),
            },
        }
    }

    pub fn is_good_prime(&self, p: u64) -> bool {
        !self.bad_primes().contains(&p)
    }
}

/// An irreducible root system with Cartan pairings and canonical orderings.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)`.
    cartan: Vec<Vec<i64>>,
    /// Squared length of each simple root, short roots normalized to 2.
    len2: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

/// A coweight in the "weights" encoding: `weights[i] = <alpha_i, lambda>`.
///
/// This is the natural encoding for weighted Dynkin diagrams; the
/// alternative coroot-coordinate encoding `lambda = sum a_i alpha_i^vee`
/// converts via the transposed Cartan matrix (see [`RootSystem::coweight_from_coroot_coords`]
/// and [`RootSystem::coroot_coords_of_coweight`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight {
    pub weights: Vec<i64>,
}

impl Coweight {
    pub fn from_weights(weights: Vec<i64>) -> Self {
        Coweight { weights }
    }

    /// True if all values lie in {0,1,2}, as weighted Dynkin diagrams must.
    pub fn is_dynkin_diagram(&self) -> bool {
        self.weights.iter().all(|&w| (0..=2).contains(&w))
    }
}

/// A subset of simple roots, stored as sorted 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviSubset {
    indices: Vec<usize>,
}

impl LeviSubset {
    pub fn new(rank: usize, mut indices: Vec<usize>) -> Result<LeviSubset> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::Invalid(format!(
                "simple-root index {bad} out of range 1..={rank}"
            )));
        }
        Ok(LeviSubset { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Result of solving `<lambda, gamma> = 2` for all `gamma` in a set.
#[derive(Debug, Clone)]
pub struct GammaCocharacter {
    /// Coefficients of `lambda = sum a_g gamma_g^vee`, in the input order.
    pub coefficients: Vec<BigRational>,
    /// Whether every coefficient is an integer.
    pub integral: bool,
    /// Pairings `<alpha_i, lambda>` with the simple roots.
    pub weights: Vec<BigRational>,
}

impl GammaCocharacter {
    /// The coweight in weights encoding, if all pairings are integral.
    pub fn coweight(&self) -> Option<Coweight> {
        let mut w = Vec::with_capacity(self.weights.len());
        for x in &self.weights {
            if !x.is_integer() {
                return None;
            }
            let n = x.to_integer();
            w.push(i64::try_from(&n).ok()?);
        }
        Some(Coweight::from_weights(w))
    }
}

pub fn build_root_system(type_label: &str) -> Result<RootSystem> {
    RootSystem::new(TypeLabel::parse(type_label)?)
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Result<RootSystem> {
        let rank = label.rank;
        let (cartan, len2) = cartan_and_lengths(label);
        let mut rs = RootSystem {
            label,
            rank,
            cartan,
            len2,
            positive: Vec::new(),
            index: HashMap::new(),
        };
        rs.generate_positive_roots();
        Ok(rs)
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan()[i][j] = <alpha_j, alpha_i^vee>` (0-based indices).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Dimension of the Chevalley algebra built on this system.
    pub fn algebra_dim(&self) -> usize {
        2 * self.positive.len() + self.rank
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Root = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// Position of a positive root in the canonical order.
    pub fn positive_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn height(&self, v: &[i64]) -> i64 {
        v.iter().sum()
    }

    /// Symmetric bilinear form, short roots normalized to squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] == 0 {
                    continue;
                }
                // (alpha_i, alpha_j) = cartan[i][j] * len2[i] / 2
                s += a[i] * b[j] * self.cartan[i][j] * self.len2[i] / 2;
            }
        }
        s
    }

    pub fn len2(&self, v: &[i64]) -> i64 {
        self.inner(v, v)
    }

    /// Cartan pairing `<beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha)`.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * self.inner(beta, alpha);
        let den = self.len2(alpha);
        debug_assert!(den != 0 && num % den == 0, "pairing not integral");
        num / den
    }

    /// Pairing of a root with a coweight in weights encoding.
    pub fn weight_of(&self, d: &Coweight, beta: &[i64]) -> i64 {
        beta.iter().zip(&d.weights).map(|(&m, &w)| m * w).sum()
    }

    /// Coordinates of the coroot `beta^vee` over the simple coroots.
    pub fn coroot_coords(&self, beta: &[i64]) -> Vec<i64> {
        let b2 = self.len2(beta);
        beta.iter()
            .enumerate()
            .map(|(i, &m)| {
                let num = m * self.len2[i];
                debug_assert!(num % b2 == 0, "coroot coordinates not integral");
                num / b2
            })
            .collect()
    }

    /// Weights encoding of `lambda = sum a_i alpha_i^vee`.
    pub fn coweight_from_coroot_coords(&self, a: &[i64]) -> Coweight {
        let weights = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| a[j] * self.cartan[j][i]).sum())
            .collect();
        Coweight::from_weights(weights)
    }

    /// Coroot coordinates of a coweight, when they exist over the rationals.
    pub fn coroot_coords_of_coweight(&self, d: &Coweight) -> Vec<BigRational> {
        // Solve C^T a = weights.
        let n = self.rank;
        let mut m = vec![vec![BigRational::zero(); n + 1]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = BigRational::from(BigInt::from(self.cartan[j][i]));
            }
            m[i][n] = BigRational::from(BigInt::from(d.weights[i]));
        }
        solve_rational(&mut m).expect("Cartan matrix is invertible")
    }

    /// Root string through `beta` in the direction of `alpha`:
    /// `p = max {k : beta - k alpha is a root}`, `q = max {k : beta + k alpha is a root}`.
    pub fn root_string(&self, alpha: &[i64], beta: &[i64]) -> Result<(usize, usize)> {
        let neg: Root = alpha.iter().map(|x| -x).collect();
        if beta == alpha || beta == &neg[..] {
            return Err(Error::Invalid("root string undefined for beta = ±alpha".into()));
        }
        if !self.is_root(alpha) || !self.is_root(beta) {
            return Err(Error::Invalid("root string arguments must be roots".into()));
        }
        let mut p = 0;
        let mut v: Root = beta.to_vec();
        loop {
            for i in 0..self.rank {
                v[i] -= alpha[i];
            }
            if self.is_root(&v) {
                p += 1;
            } else {
                break;
            }
        }
        let mut q = 0;
        let mut v: Root = beta.to_vec();
        loop {
            for i in 0..self.rank {
                v[i] += alpha[i];
            }
            if self.is_root(&v) {
                q += 1;
            } else {
                break;
            }
        }
        Ok((p, q))
    }

    /// Center dimension of the standard Levi subalgebra attached to a subset.
    pub fn levi_center_dim(&self, levi: &LeviSubset) -> usize {
        self.rank - levi.len()
    }

    /// Positive roots lying in the span of a set of simple-root indices (1-based).
    pub fn levi_positive_roots(&self, levi: &LeviSubset) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| {
                r.iter()
                    .enumerate()
                    .all(|(i, &m)| m == 0 || levi.contains(i + 1))
            })
            .cloned()
            .collect()
    }

    /// Apply the simple reflection `s_i` (0-based) to a coweight in weights encoding.
    pub fn reflect_coweight(&self, d: &Coweight, i: usize) -> Coweight {
        // <alpha_j, s_i lambda> = <s_i alpha_j, lambda> = w_j - cartan[i][j] * w_i
        let wi = d.weights[i];
        let weights = d
            .weights
            .iter()
            .enumerate()
            .map(|(j, &wj)| wj - self.cartan[i][j] * wi)
            .collect();
        Coweight::from_weights(weights)
    }

    /// The dominant Weyl-chamber representative of a coweight.
    pub fn dominantize(&self, d: &Coweight) -> Coweight {
        let mut cur = d.clone();
        loop {
            match cur.weights.iter().position(|&w| w < 0) {
                Some(i) => cur = self.reflect_coweight(&cur, i),
                None => return cur,
            }
        }
    }

    /// Solve `<lambda, gamma> = 2` for all `gamma` in a linearly independent set,
    /// with `lambda = sum a_g gamma_g^vee`.
    pub fn cocharacter_from_gamma(&self, gamma: &[Root]) -> Result<GammaCocharacter> {
        let k = gamma.len();
        for g in gamma {
            if !self.is_root(g) {
                return Err(Error::Invalid(format!("{g:?} is not a root")));
            }
        }
        // Row s encodes <lambda, gamma_s> = sum_t a_t <gamma_s, gamma_t^vee> = 2.
        let mut m = vec![vec![BigRational::zero(); k + 1]; k];
        for s in 0..k {
            for t in 0..k {
                m[s][t] = BigRational::from(BigInt::from(self.pairing(&gamma[s], &gamma[t])));
            }
            m[s][k] = BigRational::from(BigInt::from(2));
        }
        let coefficients = solve_rational(&mut m).ok_or_else(|| {
            Error::Invalid("singular Gram matrix: gamma is not a simple system".into())
        })?;
        let integral = coefficients.iter().all(|c| c.is_integer());
        // <alpha_i, lambda> = sum_s a_s <alpha_i, gamma_s^vee>
        let weights = (0..self.rank)
            .map(|i| {
                let alpha = self.simple_root(i);
                coefficients
                    .iter()
                    .zip(gamma)
                    .map(|(a, g)| a * BigRational::from(BigInt::from(self.pairing(&alpha, g))))
                    .sum()
            })
            .collect();
        Ok(GammaCocharacter {
            coefficients,
            integral,
            weights,
        })
    }

    fn generate_positive_roots(&mut self) {
        let mut set: HashMap<Root, ()> = HashMap::new();
        let mut by_height: Vec<Vec<Root>> = vec![Vec::new()];
        let simples: Vec<Root> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        by_height.push(simples.clone());
        for s in &simples {
            set.insert(s.clone(), ());
        }
        let mut h = 1;
        while !by_height[h].is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in by_height[h].clone() {
                for (i, alpha) in simples.iter().enumerate() {
                    if beta == *alpha {
                        continue;
                    }
                    // p = how far the alpha-string extends below beta
                    let mut p = 0i64;
                    let mut v = beta.clone();
                    loop {
                        for t in 0..self.rank {
                            v[t] -= alpha[t];
                        }
                        if set.contains_key(&v) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum();
                    let q = p - pair;
                    if q > 0 {
                        let mut up = beta.clone();
                        for t in 0..self.rank {
                            up[t] += alpha[t];
                        }
                        if !set.contains_key(&up) {
                            set.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            by_height.push(next);
            h += 1;
        }
        let mut all: Vec<Root> = set.into_keys().collect();
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        self.index = all
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        self.positive = all;
    }
}

fn cartan_and_lengths(label: TypeLabel) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = label.rank;
    let mut edges: Vec<(usize, usize)> = Vec::new(); // single bonds between same-length nodes
    let mut len2 = vec![2i64; n];
    let mut cartan = vec![vec![0i64; n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 0-based node indices
    match label.series {
        Series::A => {
            for i in 0..n - 1 {
                edges.push((i, i + 1));
            }
        }
        Series::B => {
            for i in 0..n.saturating_sub(2) {
                edges.push((i, i + 1));
            }
            for l in len2.iter_mut().take(n - 1) {
                *l = 4;
            }
            // double bond n-1 => n with alpha_n short
            cartan[n - 2][n - 1] = -1;
            cartan[n - 1][n - 2] = -2;
        }
        Series::C => {
            for i in 0..n.saturating_sub(2) {
                edges.push((i, i + 1));
            }
            len2[n - 1] = 4;
            cartan[n - 2][n - 1] = -2;
            cartan[n - 1][n - 2] = -1;
        }
        Series::D => {
            for i in 0..n - 2 {
                edges.push((i, i + 1));
            }
            edges.push((n - 3, n - 1));
        }
        Series::E => {
            // chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
            let chain = [0usize, 2, 3, 4, 5, 6, 7];
            for w in chain[..n - 1].windows(2) {
                edges.push((w[0], w[1]));
            }
            edges.push((1, 3));
        }
        Series::F => {
            edges.push((0, 1));
            edges.push((2, 3));
            len2[0] = 4;
            len2[1] = 4;
            cartan[1][2] = -1;
            cartan[2][1] = -2;
        }
        Series::G => {
            // alpha_1 short, alpha_2 long
            len2[1] = 6;
            cartan[0][1] = -3;
            cartan[1][0] = -1;
        }
    }
    for (i, j) in edges {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
    }
    (cartan, len2)
}

/// Gaussian elimination over the rationals on an augmented matrix.
/// Returns the solution of the square system, or None if singular.
fn solve_rational(m: &mut [Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for j in col..=n {
            let v = &m[col][j] / &inv;
            m[col][j] = v;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n {
                    let v = &m[r][j] - &f * &m[col][j];
                    m[r][j] = v;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// Checks that a rational is ±1-free integral and fits in i64.
pub(crate) fn rational_is_one(x: &BigRational) -> bool {
    x.is_integer() && x.to_integer().abs() == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        build_root_system(label).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        assert_eq!(rs("G2").num_positive(), 6);
        assert_eq!(rs("F4").num_positive(), 24);
        assert_eq!(rs("E6").num_positive(), 36);
        assert_eq!(rs("E7").num_positive(), 63);
        assert_eq!(rs("E8").num_positive(), 120);
        assert_eq!(rs("A5").num_positive(), 15);
        assert_eq!(rs("B4").num_positive(), 16);
        assert_eq!(rs("C3").num_positive(), 9);
        assert_eq!(rs("D5").num_positive(), 20);
    }

    #[test]
    fn algebra_dims() {
        assert_eq!(rs("G2").algebra_dim(), 14);
        assert_eq!(rs("F4").algebra_dim(), 52);
        assert_eq!(rs("E6").algebra_dim(), 78);
        assert_eq!(rs("E7").algebra_dim(), 133);
        assert_eq!(rs("E8").algebra_dim(), 248);
    }

    #[test]
    fn unknown_labels_rejected() {
        assert!(build_root_system("H3").is_err());
        assert!(build_root_system("E9").is_err());
        assert!(build_root_system("A13").is_err());
        assert!(build_root_system("D3").is_err());
    }

    #[test]
    fn positive_roots_all_nonnegative_and_ordered() {
        for label in ["A3", "B3", "C4", "D4", "G2", "F4", "E6"] {
            let r = rs(label);
            let mut prev_height = 0;
            for root in r.positive_roots() {
                assert!(root.iter().all(|&m| m >= 0), "{label}: {root:?}");
                let h: i64 = root.iter().sum();
                assert!(h >= prev_height);
                prev_height = h;
            }
        }
    }

    #[test]
    fn root_string_examples() {
        let a2 = rs("A2");
        let (p, q) = a2.root_string(&[1, 0], &[0, 1]).unwrap();
        assert_eq!((p, q), (0, 1));

        let g2 = rs("G2");
        // alpha_1 short, alpha_2 long: the string alpha_2 + k alpha_1 has length 3
        let (p, q) = g2.root_string(&[1, 0], &[0, 1]).unwrap();
        assert_eq!((p, q), (0, 3));

        assert!(g2.root_string(&[1, 0], &[1, 0]).is_err());
        assert!(g2.root_string(&[1, 0], &[-1, 0]).is_err());
    }

    #[test]
    fn string_relation_exhaustive_small_ranks() {
        for label in ["A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"] {
            let r = rs(label);
            let mut all: Vec<Root> = r.positive_roots().to_vec();
            let negs: Vec<Root> = all
                .iter()
                .map(|v| v.iter().map(|x| -x).collect())
                .collect();
            all.extend(negs);
            for a in &all {
                for b in &all {
                    if b == a {
                        continue;
                    }
                    let neg: Root = a.iter().map(|x| -x).collect();
                    if *b == neg {
                        continue;
                    }
                    let (p, q) = r.root_string(a, b).unwrap();
                    assert_eq!(
                        p as i64 - q as i64,
                        r.pairing(b, a),
                        "{label}: string relation failed for {a:?}, {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn positive_roots_closed_under_simple_descent() {
        // every non-simple positive root is a simple root plus a positive root
        for label in ["B4", "F4", "G2", "E6"] {
            let r = rs(label);
            for root in r.positive_roots() {
                let h: i64 = root.iter().sum();
                if h == 1 {
                    continue;
                }
                let mut found = false;
                for i in 0..r.rank() {
                    if root[i] > 0 {
                        let mut v = root.clone();
                        v[i] -= 1;
                        if r.is_positive_root(&v) {
                            found = true;
                            break;
                        }
                    }
                }
                assert!(found, "{label}: {root:?} has no simple descent");
            }
        }
    }

    #[test]
    fn dynkin_weight_examples() {
        let g2 = rs("G2");
        let two = Coweight::from_weights(vec![2, 2]);
        for root in g2.positive_roots() {
            let h: i64 = root.iter().sum();
            assert_eq!(g2.weight_of(&two, root), 2 * h);
        }
        // highest root of G2 is 3a1 + 2a2
        let highest = g2.positive_roots().last().unwrap().clone();
        assert_eq!(highest, vec![3, 2]);
        assert_eq!(g2.weight_of(&two, &highest), 10);
        let zero = Coweight::from_weights(vec![0, 0]);
        assert_eq!(g2.weight_of(&zero, &highest), 0);
    }

    #[test]
    fn cocharacter_examples() {
        let a2 = rs("A2");
        let g = a2.cocharacter_from_gamma(&[vec![1, 0]]).unwrap();
        assert!(g.integral);
        assert_eq!(g.coefficients[0], BigRational::from(BigInt::from(1)));

        let g = a2.cocharacter_from_gamma(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(g.integral);
        assert_eq!(g.coefficients[0], BigRational::from(BigInt::from(2)));
        assert_eq!(g.coefficients[1], BigRational::from(BigInt::from(2)));

        // two orthogonal roots
        let d4 = rs("D4");
        let g = d4
            .cocharacter_from_gamma(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0]])
            .unwrap();
        assert!(g.integral);
        assert!(g.coefficients.iter().all(rational_is_one));

        // dependent set is rejected
        assert!(a2
            .cocharacter_from_gamma(&[vec![1, 0], vec![1, 0]])
            .is_err());
    }

    #[test]
    fn cocharacter_pairs_to_two_on_gamma() {
        let f4 = rs("F4");
        let gamma: Vec<Root> = (0..4).map(|i| f4.simple_root(i)).collect();
        let g = f4.cocharacter_from_gamma(&gamma).unwrap();
        let d = g.coweight().unwrap();
        for root in &gamma {
            assert_eq!(f4.weight_of(&d, root), 2);
        }
    }

    #[test]
    fn levi_center_dims() {
        let f4 = rs("F4");
        let c3 = LeviSubset::new(4, vec![2, 3, 4]).unwrap();
        assert_eq!(f4.levi_center_dim(&c3), 1);
        let full = LeviSubset::new(4, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(f4.levi_center_dim(&full), 0);
        let g2 = rs("G2");
        let empty = LeviSubset::new(2, vec![]).unwrap();
        assert_eq!(g2.levi_center_dim(&empty), 2);
    }

    #[test]
    fn coroot_coords_are_integral() {
        for label in ["G2", "F4", "B3", "C3", "E6"] {
            let r = rs(label);
            for root in r.positive_roots() {
                let c = r.coroot_coords(root);
                // <root, root^vee> = sum_i c_i <root, alpha_i^vee> must be 2
                let mut s = 0;
                for (i, &ci) in c.iter().enumerate() {
                    s += ci * r.pairing(root, &r.simple_root(i));
                }
                assert_eq!(s, 2, "{label} {root:?}");
            }
        }
    }

    #[test]
    fn dominantize_fixes_dominant() {
        let e6 = rs("E6");
        let d = Coweight::from_weights(vec![2, 0, 0, 0, 0, 2]);
        assert_eq!(e6.dominantize(&d), d);
        // a negative weight gets reflected away
        let w = Coweight::from_weights(vec![-1, 0, 1, 0, 0, 0]);
        let dom = e6.dominantize(&w);
        assert!(dom.weights.iter().all(|&x| x >= 0));
    }
}
