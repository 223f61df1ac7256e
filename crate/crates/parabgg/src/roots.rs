//! Root systems and Weyl groups for the classical series A, B, C, D.
//!
//! Weights live in fundamental-weight coordinates (`m_i = <mu, alpha_i^vee>`),
//! roots additionally carry their simple-root coordinate vector. The Weyl
//! group is enumerated by breadth-first closure on reduced words, with each
//! element stored as its integer matrix on fundamental-weight coordinates
//! (plus the inverse, built incrementally). Rank is capped at 8; everything in
//! the catalog fits well below that.

use crate::linalg::{frac, rat, QMatrix, Rational};
use num_traits::Zero;
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};

pub const MAX_RANK: usize = 8;

/// Classical series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        write!(f, "{s}")
    }
}

/// A weight in fundamental-weight coordinates; length = rank.
pub type Weight = Vec<i64>;

/// A root, stored both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// Fundamental-weight coordinates (Cartan matrix times `coeffs`).
    pub fw: Weight,
    /// Coroot coordinates: `<mu, beta^vee> = sum_i coroot[i] * mu_i`.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`; column `j` is `fw(alpha_j)`.
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    /// Index into `positive_roots` for each simple root.
    simple_indices: Vec<usize>,
    /// fw coords -> (index into positive_roots, sign).
    root_lookup: HashMap<Weight, (usize, i64)>,
}

/// Element of the Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Reduced word in simple reflections, 0-based; `word[0]` acts last.
    pub word: Vec<usize>,
    /// Matrix on fundamental-weight coordinates.
    pub matrix: Vec<Vec<i64>>,
    /// Matrix of the inverse element.
    pub inverse: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, mu: &[i64]) -> Weight {
        mat_vec(&self.matrix, mu)
    }

    pub fn apply_inverse(&self, mu: &[i64]) -> Weight {
        mat_vec(&self.inverse, mu)
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Builds the root system for the given series and rank.
///
/// Positive roots are generated by closing the simple roots under root
/// addition (string criterion), so the classical counts come out as a
/// consequence rather than a table.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem, String> {
    let min = match series {
        Series::A => 1,
        Series::B | Series::C => 2,
        Series::D => 3,
    };
    if rank < min {
        return Err(format!("{series}{rank}: rank must be at least {min} for series {series}"));
    }
    if rank > MAX_RANK {
        return Err(format!("{series}{rank}: rank capped at {MAX_RANK}"));
    }

    let cartan = cartan_matrix(series, rank);
    // Squared lengths of the simple roots (short = 1 or 2 by series).
    let d: Vec<i64> = match series {
        Series::A | Series::D => vec![2; rank],
        Series::B => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        Series::C => {
            let mut d = vec![2; rank];
            d[rank - 1] = 4;
            d
        }
    };

    // Closure by height. `beta + alpha_i` is a root iff q = p - <beta, alpha_i^vee> > 0
    // where p is the depth of the alpha_i-string below beta.
    let mut coeff_set: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new(); 1];
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        coeff_set.insert(e.clone());
        by_height[0].push(e);
    }
    let mut height = 0usize;
    while height < by_height.len() {
        let current = by_height[height].clone();
        for beta in current {
            for i in 0..rank {
                let fw_i: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0i64;
                loop {
                    let mut lower = beta.clone();
                    lower[i] -= p + 1;
                    if lower[i] < 0 || !coeff_set.contains(&lower) {
                        break;
                    }
                    p += 1;
                }
                if p - fw_i > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if coeff_set.insert(up.clone()) {
                        while by_height.len() <= height + 1 {
                            by_height.push(Vec::new());
                        }
                        by_height[height + 1].push(up);
                    }
                }
            }
        }
        height += 1;
    }

    let mut positive_roots = Vec::new();
    for level in &by_height {
        let mut sorted = level.clone();
        sorted.sort();
        for coeffs in sorted {
            let fw: Weight = (0..rank)
                .map(|i| (0..rank).map(|j| cartan[i][j] * coeffs[j]).sum())
                .collect();
            // (beta, beta) = sum_i coeffs[i] * fw[i] * d[i] / 2, in units where
            // short simple roots of B have norm 1.
            let norm2 = {
                let mut acc = Rational::zero();
                for i in 0..rank {
                    acc += frac(coeffs[i] * fw[i] * d[i], 2);
                }
                acc
            };
            let coroot: Vec<i64> = (0..rank)
                .map(|i| {
                    let c = frac(coeffs[i] * d[i], 1) / norm2.clone();
                    assert!(c.is_integer(), "coroot coordinates must be integral");
                    int_to_i64(&c)
                })
                .collect();
            positive_roots.push(Root { coeffs, fw, coroot });
        }
    }

    let expected = match series {
        Series::A => rank * (rank + 1) / 2,
        Series::B | Series::C => rank * rank,
        Series::D => rank * (rank - 1),
    };
    assert_eq!(positive_roots.len(), expected, "positive root count for {series}{rank}");

    let mut root_lookup = HashMap::new();
    for (i, root) in positive_roots.iter().enumerate() {
        root_lookup.insert(root.fw.clone(), (i, 1));
        root_lookup.insert(root.fw.iter().map(|x| -x).collect(), (i, -1));
    }
    let mut simple_indices = vec![usize::MAX; rank];
    for (i, root) in positive_roots.iter().enumerate() {
        if root.height() == 1 {
            let j = root.coeffs.iter().position(|&c| c == 1).unwrap();
            simple_indices[j] = i;
        }
    }

    Ok(RootSystem { series, rank, cartan, positive_roots, simple_indices, root_lookup })
}

fn cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
        if i + 1 < rank {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    match series {
        Series::A => {}
        Series::B => {
            // alpha_rank short: <alpha_{r-1}, alpha_r^vee> = -2.
            c[rank - 1][rank - 2] = -2;
        }
        Series::C => {
            // alpha_rank long: <alpha_r, alpha_{r-1}^vee> = -2.
            c[rank - 2][rank - 1] = -2;
        }
        Series::D => {
            c[rank - 1][rank - 2] = 0;
            c[rank - 2][rank - 1] = 0;
            c[rank - 1][rank - 3] = -1;
            c[rank - 3][rank - 1] = -1;
        }
    }
    c
}

fn int_to_i64(x: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    x.to_integer().to_i64().expect("value fits in i64")
}

impl RootSystem {
    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    /// fw coordinates of the highest root (the adjoint highest weight).
    pub fn highest_root(&self) -> Weight {
        let top = self
            .positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty root system");
        top.fw.clone()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive_roots[self.simple_indices[i]]
    }

    /// `<mu, alpha_i^vee>` is just the i-th fundamental-weight coordinate.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = identity_matrix(n);
        for j in 0..n {
            m[j][i] -= self.cartan[j][i];
        }
        m
    }

    /// Is the weight a root, and if so which one? Returns (index, sign).
    pub fn lookup_root(&self, fw: &[i64]) -> Option<(usize, i64)> {
        self.root_lookup.get(fw).copied()
    }

    pub fn is_positive_root(&self, fw: &[i64]) -> bool {
        matches!(self.lookup_root(fw), Some((_, 1)))
    }

    /// Root coordinates of a weight, exact.
    pub fn root_coordinates(&self, mu: &[i64]) -> Vec<Rational> {
        let c = QMatrix::from_i64(&self.cartan);
        let rhs: Vec<Rational> = mu.iter().map(|&x| rat(x)).collect();
        c.solve(&rhs).expect("Cartan matrix is invertible")
    }

    /// Full Weyl group by breadth-first closure on reduced words.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        self.weyl_group_up_to(usize::MAX)
    }

    pub fn weyl_order(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => factorial(n + 1),
            Series::B | Series::C => factorial(n) << n,
            Series::D => factorial(n) << (n - 1),
        }
    }

    fn weyl_group_up_to(&self, max_length: usize) -> Vec<WeylElement> {
        let n = self.rank;
        let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|i| self.simple_reflection_matrix(i)).collect();
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut out = Vec::new();
        let id = WeylElement {
            word: Vec::new(),
            matrix: identity_matrix(n),
            inverse: identity_matrix(n),
        };
        seen.insert(id.matrix.clone());
        let mut queue = VecDeque::from([id.clone()]);
        out.push(id);
        while let Some(w) = queue.pop_front() {
            if w.word.len() >= max_length {
                continue;
            }
            for (i, s) in gens.iter().enumerate() {
                // Append on the right: (w s_i)(mu) = w(s_i(mu)).
                let matrix = mat_mul(&w.matrix, s);
                if seen.insert(matrix.clone()) {
                    let mut word = w.word.clone();
                    word.push(i);
                    let inverse = mat_mul(s, &w.inverse);
                    let next = WeylElement { word, matrix, inverse };
                    queue.push_back(next.clone());
                    out.push(next);
                }
            }
        }
        out
    }

    /// Minimal-length coset representatives for the parabolic given by the
    /// crossed nodes: all `w` with `l(w) <= up_to_length` such that `w^{-1}`
    /// maps every positive root of the uncrossed subsystem to a positive
    /// root. Checking the uncrossed simple roots suffices.
    pub fn minimal_coset_reps(
        &self,
        crossed: &[usize],
        up_to_length: usize,
    ) -> Vec<WeylElement> {
        let crossed_set: HashSet<usize> = crossed.iter().copied().collect();
        let uncrossed: Vec<usize> =
            (0..self.rank).filter(|i| !crossed_set.contains(i)).collect();
        self.weyl_group_up_to(up_to_length)
            .into_iter()
            .filter(|w| {
                uncrossed.iter().all(|&i| {
                    let image = w.apply_inverse(&self.simple_root(i).fw);
                    self.is_positive_root(&image)
                })
            })
            .collect()
    }

    /// The shifted action `w . mu = w(mu + rho) - rho`.
    pub fn affine_weyl_action(&self, w: &WeylElement, mu: &[i64]) -> Weight {
        let rho = self.rho();
        let shifted: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let moved = w.apply(&shifted);
        moved.iter().zip(&rho).map(|(a, b)| a - b).collect()
    }

    /// Weyl dimension formula over the full system; `mu` must be dominant.
    pub fn weyl_dimension(&self, mu: &[i64]) -> Result<num_bigint::BigInt, String> {
        if mu.iter().any(|&m| m < 0) {
            return Err(format!("weight {mu:?} is not dominant"));
        }
        Ok(self.dimension_over(&self.positive_roots, mu))
    }

    /// Weyl dimension formula over the Levi subsystem of the uncrossed nodes;
    /// `mu` must be dominant for the Levi.
    pub fn weyl_dimension_levi(
        &self,
        crossed: &[usize],
        mu: &[i64],
    ) -> Result<num_bigint::BigInt, String> {
        let crossed_set: HashSet<usize> = crossed.iter().copied().collect();
        for i in 0..self.rank {
            if !crossed_set.contains(&i) && mu[i] < 0 {
                return Err(format!("weight {mu:?} is not Levi-dominant (node {})", i + 1));
            }
        }
        let levi: Vec<Root> = self
            .positive_roots
            .iter()
            .filter(|r| r.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || !crossed_set.contains(&i)))
            .cloned()
            .collect();
        Ok(self.dimension_over(&levi, mu))
    }

    fn dimension_over(&self, roots: &[Root], mu: &[i64]) -> num_bigint::BigInt {
        let rho = self.rho();
        let mut dim = Rational::from_integer(1.into());
        for beta in roots {
            let num: i64 = beta
                .coroot
                .iter()
                .zip(mu.iter().zip(&rho))
                .map(|(c, (m, r))| c * (m + r))
                .sum();
            let den: i64 = beta.coroot.iter().zip(&rho).map(|(c, r)| c * r).sum();
            dim *= frac(num, den);
        }
        assert!(dim.is_integer(), "Weyl dimension must be an integer");
        dim.to_integer()
    }

    /// The dominant representative of `mu` under the Levi Weyl group of the
    /// uncrossed nodes.
    pub fn levi_dominant(&self, crossed: &[usize], mu: &[i64]) -> Weight {
        let crossed_set: HashSet<usize> = crossed.iter().copied().collect();
        let mut v = mu.to_vec();
        let mut guard = 0usize;
        loop {
            let Some(i) = (0..self.rank).find(|i| !crossed_set.contains(i) && v[*i] < 0) else {
                return v;
            };
            let m = v[i];
            for j in 0..self.rank {
                v[j] -= m * self.cartan[j][i];
            }
            guard += 1;
            assert!(guard < 100_000, "levi_dominant failed to terminate");
        }
    }

    /// All reflection matrices, one per positive root, for Bruhat cover tests.
    pub fn reflection_matrices(&self) -> HashSet<Vec<Vec<i64>>> {
        let n = self.rank;
        self.positive_roots
            .iter()
            .map(|beta| {
                let mut m = identity_matrix(n);
                for j in 0..n {
                    for l in 0..n {
                        m[j][l] -= beta.fw[j] * beta.coroot[l];
                    }
                }
                m
            })
            .collect()
    }

    /// Does `w` cover `u` in Bruhat order? Requires `l(w) = l(u) + 1`; the
    /// test is whether `u^{-1} w` is a reflection.
    pub fn bruhat_covers(
        &self,
        reflections: &HashSet<Vec<Vec<i64>>>,
        u: &WeylElement,
        w: &WeylElement,
    ) -> bool {
        if w.length() != u.length() + 1 {
            return false;
        }
        let q = mat_mul(&u.inverse, &w.matrix);
        reflections.contains(&q)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(build_root_system(Series::A, 1).unwrap().positive_roots.len(), 1);
        assert_eq!(build_root_system(Series::A, 3).unwrap().positive_roots.len(), 6);
        let c4 = build_root_system(Series::C, 4).unwrap();
        assert_eq!(c4.positive_roots.len(), 16);
        // Long roots 2*eps_i have coefficient 2 on some inner node.
        let long_count = c4.positive_roots.iter().filter(|r| r.coeffs.contains(&2)).count();
        assert_eq!(long_count, 3 + 3); // 2eps_1, 2eps_2, 2eps_3 plus eps_i+eps_j overlaps
        assert!(build_root_system(Series::D, 2).is_err());
        assert_eq!(build_root_system(Series::D, 4).unwrap().positive_roots.len(), 12);
        assert_eq!(build_root_system(Series::B, 3).unwrap().positive_roots.len(), 9);
    }

    #[test]
    fn sum_of_positive_roots_is_two_rho() {
        for (series, rank) in [(Series::A, 4), (Series::B, 3), (Series::C, 4), (Series::D, 4)] {
            let rs = build_root_system(series, rank).unwrap();
            let mut sum = vec![0i64; rank];
            for r in &rs.positive_roots {
                for i in 0..rank {
                    sum[i] += r.fw[i];
                }
            }
            assert_eq!(sum, vec![2; rank], "{series}{rank}");
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (series, rank) in [(Series::A, 3), (Series::B, 2), (Series::C, 3), (Series::D, 4)] {
            let rs = build_root_system(series, rank).unwrap();
            assert_eq!(rs.weyl_group().len(), rs.weyl_order(), "{series}{rank}");
        }
    }

    #[test]
    fn coset_reps_a3_node2() {
        // Schubert cells of Gr(2,4): 1 + q + 2q^2 + q^3 + q^4.
        let rs = build_root_system(Series::A, 3).unwrap();
        let reps = rs.minimal_coset_reps(&[1], usize::MAX);
        assert_eq!(reps.len(), 6);
        let mut by_len = [0usize; 5];
        for w in &reps {
            by_len[w.length()] += 1;
        }
        assert_eq!(by_len, [1, 1, 2, 1, 1]);
    }

    #[test]
    fn coset_reps_degenerate_cases() {
        let rs = build_root_system(Series::A, 3).unwrap();
        // All nodes crossed: trivial Levi, every element is minimal.
        assert_eq!(rs.minimal_coset_reps(&[0, 1, 2], usize::MAX).len(), 24);
        // Nodes 1 and 3 crossed: |W| / |W_levi| = 24 / 2.
        assert_eq!(rs.minimal_coset_reps(&[0, 2], usize::MAX).len(), 12);
    }

    #[test]
    fn coset_factorization() {
        // |W^p| * |W_levi| = |W| for every crossing of A_3 and C_3.
        for (series, rank) in [(Series::A, 3), (Series::C, 3)] {
            let rs = build_root_system(series, rank).unwrap();
            let total = rs.weyl_group().len();
            for mask in 1u32..(1 << rank) {
                let crossed: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
                let reps = rs.minimal_coset_reps(&crossed, usize::MAX).len();
                // The Levi Weyl group is the full group of the uncrossed subdiagram;
                // count it by brute force: elements whose inverse fixes positivity
                // of all crossed... easier: elements generated by uncrossed nodes.
                let levi = brute_force_levi_order(&rs, &crossed);
                assert_eq!(reps * levi, total, "{series}{rank} crossed {crossed:?}");
            }
        }
    }

    fn brute_force_levi_order(rs: &RootSystem, crossed: &[usize]) -> usize {
        let crossed_set: HashSet<usize> = crossed.iter().copied().collect();
        let gens: Vec<Vec<Vec<i64>>> = (0..rs.rank)
            .filter(|i| !crossed_set.contains(i))
            .map(|i| rs.simple_reflection_matrix(i))
            .collect();
        let mut seen = HashSet::new();
        seen.insert(identity_matrix(rs.rank));
        let mut queue: VecDeque<Vec<Vec<i64>>> = seen.iter().cloned().collect();
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let next = mat_mul(&m, g);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn affine_action_examples() {
        let rs = build_root_system(Series::A, 3).unwrap();
        let theta = rs.highest_root();
        assert_eq!(theta, vec![1, 0, 1]);
        let w = rs.weyl_group();
        let id = w.iter().find(|e| e.is_identity()).unwrap();
        assert_eq!(rs.affine_weyl_action(id, &theta), theta);
        let s2 = w.iter().find(|e| e.word == vec![1]).unwrap();
        assert_eq!(rs.affine_weyl_action(s2, &theta), vec![2, -2, 2]);
        // Applying w then w^{-1} affinely recovers the weight.
        for e in w.iter().filter(|e| e.length() <= 2) {
            let moved = rs.affine_weyl_action(e, &theta);
            let inv = WeylElement {
                word: e.word.iter().rev().copied().collect(),
                matrix: e.inverse.clone(),
                inverse: e.matrix.clone(),
            };
            assert_eq!(rs.affine_weyl_action(&inv, &moved), theta);
        }
    }

    #[test]
    fn affine_action_is_shifted_group_action() {
        let rs = build_root_system(Series::A, 2).unwrap();
        let w = rs.weyl_group();
        let lambda = vec![1, 1];
        for v in &w {
            for u in &w {
                // (v u) . lambda = v . (u . lambda)
                let vu = WeylElement {
                    word: v.word.iter().chain(&u.word).copied().collect(),
                    matrix: mat_mul(&v.matrix, &u.matrix),
                    inverse: mat_mul(&u.inverse, &v.inverse),
                };
                assert_eq!(
                    rs.affine_weyl_action(&vu, &lambda),
                    rs.affine_weyl_action(v, &rs.affine_weyl_action(u, &lambda))
                );
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = build_root_system(Series::A, 1).unwrap();
        assert_eq!(a1.weyl_dimension(&[0]).unwrap(), 1.into());
        assert_eq!(a1.weyl_dimension(&[1]).unwrap(), 2.into());
        let a3 = build_root_system(Series::A, 3).unwrap();
        assert_eq!(a3.weyl_dimension(&a3.highest_root()).unwrap(), 15.into());
        assert!(a3.weyl_dimension(&[-1, 0, 0]).is_err());
        // Adjoint dimensions across the series.
        let b3 = build_root_system(Series::B, 3).unwrap();
        assert_eq!(b3.weyl_dimension(&b3.highest_root()).unwrap(), 21.into());
        let c4 = build_root_system(Series::C, 4).unwrap();
        assert_eq!(c4.weyl_dimension(&c4.highest_root()).unwrap(), 36.into());
        let d4 = build_root_system(Series::D, 4).unwrap();
        assert_eq!(d4.weyl_dimension(&d4.highest_root()).unwrap(), 28.into());
    }

    #[test]
    fn levi_dimension_grassmannian_h01() {
        // Levi of A_4 with node 2 crossed is A_1 x A_2; the weight (2,-2,1,1)
        // is adjoint x adjoint, dimension 3 * 8.
        let a4 = build_root_system(Series::A, 4).unwrap();
        assert_eq!(a4.weyl_dimension_levi(&[1], &[2, -2, 1, 1]).unwrap(), 24.into());
    }

    #[test]
    fn levi_dominant_translate() {
        let a4 = build_root_system(Series::A, 4).unwrap();
        let mu = vec![-2, 2, -1, -1];
        assert_eq!(a4.levi_dominant(&[1], &mu), vec![2, -2, 1, 1]);
    }

    #[test]
    fn bruhat_covers_in_a3() {
        let rs = build_root_system(Series::A, 3).unwrap();
        let refl = rs.reflection_matrices();
        assert_eq!(refl.len(), 6);
        let w = rs.weyl_group();
        let id = w.iter().find(|e| e.is_identity()).unwrap();
        for s in w.iter().filter(|e| e.length() == 1) {
            assert!(rs.bruhat_covers(&refl, id, s));
        }
        // Number of covers of the identity is the number of simple reflections.
        let covers: usize =
            w.iter().filter(|e| rs.bruhat_covers(&refl, id, e)).count();
        assert_eq!(covers, 3);
    }
}
