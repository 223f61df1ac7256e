//! Graded matrix realizations of the classical complex simple Lie algebras.
//!
//! Each algebra is realized concretely: traceless matrices for A, orthogonal
//! for B/D and symplectic for C, with the bilinear form chosen anti-diagonal.
//! That choice puts the Borel in upper-triangular position and makes plain
//! matrix transposition map grade `j` onto grade `-j`, which is what the Hodge
//! inner product downstream needs. Brackets are matrix commutators, so all
//! structure constants and signs are forced; nothing here depends on a sign
//! convention table.
//!
//! The grading comes from a set of crossed Dynkin nodes: the grade of a root
//! vector is the sum of its coefficients over the crossed simple roots.

use crate::linalg::{rat, QMatrix, Rational};
use crate::roots::{build_root_system, Root, RootSystem, Series, Weight};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Sparse coordinate vector over the algebra basis.
pub type SparseVec = Vec<(usize, Rational)>;

/// Label of a basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Root vector for the positive root with this index.
    Pos(usize),
    /// Root vector for the negative of the positive root with this index.
    Neg(usize),
    /// Coroot `alpha_i^vee` of the i-th simple root.
    Cartan(usize),
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub label: BasisLabel,
    pub matrix: QMatrix,
    pub grade: i64,
    /// Weight in fundamental-weight coordinates (zero for Cartan elements).
    pub weight: Weight,
}

/// The seven structure families treated in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Projective,
    ContactProjective,
    Grassmannian,
    Quaternionic,
    LagrangeanContact,
    Cr,
    QuaternionicContact,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Projective,
        Family::ContactProjective,
        Family::Grassmannian,
        Family::Quaternionic,
        Family::LagrangeanContact,
        Family::Cr,
        Family::QuaternionicContact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Projective => "projective",
            Family::ContactProjective => "contact-projective",
            Family::Grassmannian => "grassmannian",
            Family::Quaternionic => "quaternionic",
            Family::LagrangeanContact => "lagrangean-contact",
            Family::Cr => "cr",
            Family::QuaternionicContact => "quaternionic-contact",
        }
    }

    /// Smallest parameter for which the family is defined.
    pub fn min_param(self) -> usize {
        match self {
            Family::Projective => 1,
            Family::ContactProjective => 2,
            Family::Grassmannian => 2,
            Family::Quaternionic => 1,
            Family::LagrangeanContact => 2,
            Family::Cr => 2,
            Family::QuaternionicContact => 1,
        }
    }

    /// `(series, rank, crossed nodes)` for parameter `n`; nodes are 0-based.
    pub fn data(self, n: usize) -> (Series, usize, Vec<usize>) {
        match self {
            Family::Projective => (Series::A, n, vec![0]),
            Family::ContactProjective => (Series::C, n, vec![0]),
            Family::Grassmannian => (Series::A, n + 1, vec![1]),
            Family::Quaternionic => (Series::A, 2 * n + 1, vec![1]),
            Family::LagrangeanContact | Family::Cr => (Series::A, n + 1, vec![0, n]),
            Family::QuaternionicContact => (Series::C, n + 2, vec![1]),
        }
    }

    /// Expected dimension of the flat model base, stated per family.
    pub fn base_dimension(self, n: usize) -> usize {
        match self {
            Family::Projective => n,
            Family::ContactProjective => 2 * n - 1,
            Family::Grassmannian => 2 * n,
            Family::Quaternionic => 4 * n,
            Family::LagrangeanContact | Family::Cr => 2 * n + 1,
            Family::QuaternionicContact => 4 * n + 3,
        }
    }
}

/// A catalog entry or raw (series, rank, crossing) triple.
#[derive(Clone, Debug)]
pub struct StructureSpec {
    pub name: String,
    pub family: Option<Family>,
    pub param: usize,
    pub series: Series,
    pub rank: usize,
    /// Crossed nodes, 0-based, sorted.
    pub crossed: Vec<usize>,
    /// CR-style folding: pair components swapped by the diagram involution.
    pub involution_paired: bool,
}

impl fmt::Display for StructureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl StructureSpec {
    pub fn from_family(family: Family, n: usize) -> Result<StructureSpec, String> {
        if n < family.min_param() {
            return Err(format!(
                "{}: parameter must be at least {}",
                family.name(),
                family.min_param()
            ));
        }
        let (series, rank, crossed) = family.data(n);
        if rank > crate::roots::MAX_RANK {
            return Err(format!("{}:{n} needs rank {rank}, which exceeds the cap", family.name()));
        }
        Ok(StructureSpec {
            name: format!("{}:{}", family.name(), n),
            family: Some(family),
            param: n,
            series,
            rank,
            crossed,
            involution_paired: family == Family::Cr,
        })
    }

    pub fn raw(series: Series, rank: usize, crossed_1based: &[usize]) -> Result<StructureSpec, String> {
        // Fail early on impossible series/rank combinations.
        build_root_system(series, rank)?;
        let mut crossed: Vec<usize> = Vec::new();
        for &c in crossed_1based {
            if c == 0 || c > rank {
                return Err(format!("crossed node {c} outside 1..={rank}"));
            }
            crossed.push(c - 1);
        }
        crossed.sort_unstable();
        crossed.dedup();
        if crossed.is_empty() {
            return Err("at least one crossed node is required".into());
        }
        let name = format!(
            "{series}{rank}:{}",
            crossed.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(",")
        );
        Ok(StructureSpec {
            name,
            family: None,
            param: 0,
            series,
            rank,
            crossed,
            involution_paired: false,
        })
    }

    /// Parses `grassmannian:3`, `A3:2` or `A3:1,3`.
    pub fn parse(s: &str) -> Result<StructureSpec, String> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| format!("`{s}`: expected NAME:PARAM or SERIES+RANK:NODES"))?;
        for family in Family::ALL {
            if head == family.name() {
                let n: usize =
                    tail.parse().map_err(|_| format!("`{tail}`: bad parameter"))?;
                return StructureSpec::from_family(family, n);
            }
        }
        let series = match head.chars().next() {
            Some('A') | Some('a') => Series::A,
            Some('B') | Some('b') => Series::B,
            Some('C') | Some('c') => Series::C,
            Some('D') | Some('d') => Series::D,
            _ => return Err(format!("`{head}`: unknown structure")),
        };
        let rank: usize =
            head[1..].parse().map_err(|_| format!("`{head}`: bad rank"))?;
        let nodes: Result<Vec<usize>, _> = tail.split(',').map(|t| t.trim().parse()).collect();
        let nodes = nodes.map_err(|_| format!("`{tail}`: bad crossed node list"))?;
        StructureSpec::raw(series, rank, &nodes)
    }
}

/// Exact matrix realization of a |k|-graded classical simple Lie algebra.
pub struct GradedLieAlgebra {
    pub spec: StructureSpec,
    pub rs: RootSystem,
    /// Matrix size of the realization.
    pub matrix_size: usize,
    /// Grading depth k.
    pub depth: i64,
    /// Basis ordered by grade, then label.
    pub basis: Vec<BasisElement>,
    /// Killing-form proportionality constant: `killing = c * trace form`.
    pub killing_constant: i64,
    /// `bracket_table[i][j]` = coordinates of `[e_i, e_j]`.
    bracket_table: Vec<Vec<SparseVec>>,
    /// Gram matrix of `<x,y> = tr(x y^T)` on the basis.
    gram: QMatrix,
    /// Coordinates of the grading element over the basis.
    pub grading_element: Vec<Rational>,
    /// Basis index of the transpose of each basis element.
    transpose_index: Vec<usize>,
    label_index: HashMap<BasisLabel, usize>,
}

/// epsilon-coordinate expression of a root (length rank+1 for A, rank else).
fn epsilon_vector(series: Series, rank: usize, root: &Root) -> Vec<i64> {
    if series == Series::A {
        let mut out = vec![0i64; rank + 1];
        for (l, &c) in root.coeffs.iter().enumerate() {
            out[l] += c;
            out[l + 1] -= c;
        }
        return out;
    }
    let mut eps = vec![vec![0i64; rank]; rank];
    for (i, row) in eps.iter_mut().enumerate().take(rank - 1) {
        row[i] = 1;
        row[i + 1] = -1;
    }
    match series {
        Series::B => eps[rank - 1][rank - 1] = 1,
        Series::C => eps[rank - 1][rank - 1] = 2,
        Series::D => {
            eps[rank - 1][rank - 2] = 1;
            eps[rank - 1][rank - 1] = 1;
        }
        Series::A => unreachable!(),
    }
    let mut out = vec![0i64; rank];
    for (l, &c) in root.coeffs.iter().enumerate() {
        for (j, &e) in eps[l].iter().enumerate() {
            out[j] += c * e;
        }
    }
    out
}

/// Builds the realization for a catalog entry or raw triple.
pub fn build_graded_algebra(spec: &StructureSpec) -> Result<GradedLieAlgebra, String> {
    let rs = build_root_system(spec.series, spec.rank)?;
    for &c in &spec.crossed {
        if c >= spec.rank {
            return Err(format!("crossed node {} outside diagram", c + 1));
        }
    }
    let rank = spec.rank;
    let n = match spec.series {
        Series::A => rank + 1,
        Series::B => 2 * rank + 1,
        Series::C | Series::D => 2 * rank,
    };

    // Positive root vectors from the epsilon-expression of each root.
    let mirror = |a: usize| n - 1 - a;
    let mut pos_matrices: Vec<QMatrix> = Vec::with_capacity(rs.positive_roots.len());
    for root in &rs.positive_roots {
        let eps = epsilon_vector(spec.series, rank, root);
        let mut m = QMatrix::zeros(n, n);
        match spec.series {
            Series::A => {
                let i = eps.iter().position(|&x| x == 1).unwrap();
                let j = eps.iter().position(|&x| x == -1).unwrap();
                m[(i, j)] = Rational::one();
            }
            Series::B | Series::D => {
                let plus: Vec<usize> = (0..rank).filter(|&a| eps[a] > 0).collect();
                let minus: Vec<usize> = (0..rank).filter(|&a| eps[a] < 0).collect();
                match (plus.len(), minus.len()) {
                    (1, 1) => {
                        let (i, j) = (plus[0], minus[0]);
                        m[(i, j)] = Rational::one();
                        m[(mirror(j), mirror(i))] = -Rational::one();
                    }
                    (1, 0) => {
                        // short root eps_i, B only; middle column index = rank
                        let i = plus[0];
                        let mid = rank;
                        m[(i, mid)] = Rational::one();
                        m[(mid, mirror(i))] = -Rational::one();
                    }
                    (2, 0) => {
                        let (i, j) = (plus[0], plus[1]);
                        m[(i, mirror(j))] = Rational::one();
                        m[(j, mirror(i))] = -Rational::one();
                    }
                    _ => unreachable!("unexpected orthogonal root {eps:?}"),
                }
            }
            Series::C => {
                let plus: Vec<usize> = (0..rank).filter(|&a| eps[a] > 0).collect();
                let minus: Vec<usize> = (0..rank).filter(|&a| eps[a] < 0).collect();
                match (plus.len(), minus.len()) {
                    (1, 1) => {
                        let (i, j) = (plus[0], minus[0]);
                        m[(i, j)] = Rational::one();
                        m[(mirror(j), mirror(i))] = -Rational::one();
                    }
                    (1, 0) => {
                        // long root 2 eps_i
                        let i = plus[0];
                        m[(i, mirror(i))] = Rational::one();
                    }
                    (2, 0) => {
                        let (i, j) = (plus[0], plus[1]);
                        m[(i, mirror(j))] = Rational::one();
                        m[(j, mirror(i))] = Rational::one();
                    }
                    _ => unreachable!("unexpected symplectic root {eps:?}"),
                }
            }
        }
        pos_matrices.push(m);
    }

    // Coroots: h_i = c * [e_i, f_i] normalized so that alpha_i(h_i) = 2.
    let mut coroot_matrices: Vec<QMatrix> = Vec::with_capacity(rank);
    for i in 0..rank {
        let idx = rs
            .positive_roots
            .iter()
            .position(|r| r.height() == 1 && r.coeffs[i] == 1)
            .unwrap();
        let e = &pos_matrices[idx];
        let f = e.transpose();
        let h = commutator(e, &f);
        let he = commutator(&h, e);
        let scale = scalar_ratio(&he, e).expect("root vector is an h-eigenvector");
        let c = rat(2) / scale;
        let mut hm = QMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                hm[(a, b)] = &h[(a, b)] * &c;
            }
        }
        coroot_matrices.push(hm);
    }

    // Grade of a positive root: sum of coefficients over crossed nodes.
    let grade_of_root = |r: &Root| -> i64 { spec.crossed.iter().map(|&c| r.coeffs[c]).sum() };
    let depth = rs.positive_roots.iter().map(grade_of_root).max().unwrap_or(0);
    if depth == 0 {
        return Err("crossing produces a trivial grading".into());
    }

    // Assemble the basis ordered by grade; within grade zero the Cartan sits
    // between the Levi lowering and raising root vectors.
    let mut basis: Vec<BasisElement> = Vec::new();
    for grade in -depth..=depth {
        for (idx, root) in rs.positive_roots.iter().enumerate() {
            if grade_of_root(root) == -grade && grade <= 0 {
                basis.push(BasisElement {
                    label: BasisLabel::Neg(idx),
                    matrix: pos_matrices[idx].transpose(),
                    grade,
                    weight: root.fw.iter().map(|x| -x).collect(),
                });
            }
        }
        if grade == 0 {
            for (i, h) in coroot_matrices.iter().enumerate() {
                basis.push(BasisElement {
                    label: BasisLabel::Cartan(i),
                    matrix: h.clone(),
                    grade: 0,
                    weight: vec![0; rank],
                });
            }
        }
        for (idx, root) in rs.positive_roots.iter().enumerate() {
            if grade_of_root(root) == grade && grade >= 0 {
                basis.push(BasisElement {
                    label: BasisLabel::Pos(idx),
                    matrix: pos_matrices[idx].clone(),
                    grade,
                    weight: root.fw.clone(),
                });
            }
        }
    }

    let dim = basis.len();
    let label_index: HashMap<BasisLabel, usize> =
        basis.iter().enumerate().map(|(i, b)| (b.label, i)).collect();

    // Gram matrix of <x,y> = tr(x y^T) and its inverse, used once to expand
    // commutators in the basis.
    let mut gram = QMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = trace_pairing(&basis[i].matrix, &basis[j].matrix, true);
            gram[(i, j)] = v.clone();
            gram[(j, i)] = v;
        }
    }
    let gram_inverse = gram.inverse().expect("trace form is positive definite");

    let expand = |m: &QMatrix| -> SparseVec {
        let pairings: Vec<Rational> =
            (0..dim).map(|i| trace_pairing(m, &basis[i].matrix, true)).collect();
        gram_inverse
            .mul_vec(&pairings)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };

    let mut bracket_table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let c = commutator(&basis[i].matrix, &basis[j].matrix);
            if c.is_zero() {
                continue;
            }
            let coords = expand(&c);
            bracket_table[i][j] = coords.clone();
            bracket_table[j][i] = coords.into_iter().map(|(k, x)| (k, -x)).collect();
        }
    }

    for i in 0..dim {
        for j in 0..dim {
            for &(k, _) in &bracket_table[i][j] {
                if basis[k].grade != basis[i].grade + basis[j].grade {
                    return Err(format!(
                        "grading failure: [{:?},{:?}] hits grade {}",
                        basis[i].label, basis[j].label, basis[k].grade
                    ));
                }
            }
        }
    }

    // Grading element: alpha_i(E) = 1 on crossed nodes, 0 elsewhere, solved
    // over the coroot basis; alpha_i(h_j) = cartan[j][i].
    let ct = QMatrix::from_i64(&rs.cartan).transpose();
    let chi: Vec<Rational> = (0..rank)
        .map(|i| if spec.crossed.contains(&i) { Rational::one() } else { Rational::zero() })
        .collect();
    let y = ct.solve(&chi).expect("Cartan matrix is invertible");
    let mut grading_element = vec![Rational::zero(); dim];
    for (j, c) in y.into_iter().enumerate() {
        grading_element[label_index[&BasisLabel::Cartan(j)]] = c;
    }

    let transpose_index: Vec<usize> = basis
        .iter()
        .map(|b| match b.label {
            BasisLabel::Pos(i) => label_index[&BasisLabel::Neg(i)],
            BasisLabel::Neg(i) => label_index[&BasisLabel::Pos(i)],
            BasisLabel::Cartan(i) => label_index[&BasisLabel::Cartan(i)],
        })
        .collect();

    let killing_constant = match spec.series {
        Series::A => 2 * (rank as i64 + 1),
        Series::B => 2 * rank as i64 - 1,
        Series::C => 2 * rank as i64 + 2,
        Series::D => 2 * rank as i64 - 2,
    };

    let g = GradedLieAlgebra {
        spec: spec.clone(),
        rs,
        matrix_size: n,
        depth,
        basis,
        killing_constant,
        bracket_table,
        gram,
        grading_element,
        transpose_index,
        label_index,
    };

    // The grading element must act with eigenvalue = grade on every basis
    // element; this wires the matrix realization to the root bookkeeping.
    for (i, b) in g.basis.iter().enumerate() {
        let mut x = vec![Rational::zero(); g.dim()];
        x[i] = Rational::one();
        let br = g.bracket_coords(&g.grading_element, &x);
        for (k, c) in br.iter().enumerate() {
            let expected = if k == i { rat(b.grade) } else { Rational::zero() };
            if *c != expected {
                return Err(format!("grading element acts wrongly on {:?}", b.label));
            }
        }
    }

    Ok(g)
}

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let n = a.rows;
    let mut out = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = &ab[(i, j)] - &ba[(i, j)];
        }
    }
    out
}

/// `tr(a b^T)` when `transpose_second`, else `tr(a b)`.
fn trace_pairing(a: &QMatrix, b: &QMatrix, transpose_second: bool) -> Rational {
    let n = a.rows;
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let y = if transpose_second { &b[(i, j)] } else { &b[(j, i)] };
            if !y.is_zero() {
                acc += x * y;
            }
        }
    }
    acc
}

/// If `a = s * b` entrywise for a single scalar `s`, returns `s`.
fn scalar_ratio(a: &QMatrix, b: &QMatrix) -> Option<Rational> {
    let mut s: Option<Rational> = None;
    for i in 0..a.rows {
        for j in 0..a.cols {
            let (x, y) = (&a[(i, j)], &b[(i, j)]);
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = x / y;
                    if let Some(prev) = &s {
                        if *prev != r {
                            return None;
                        }
                    } else {
                        s = Some(r);
                    }
                }
                _ => return None,
            }
        }
    }
    s
}

impl GradedLieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, label: BasisLabel) -> usize {
        self.label_index[&label]
    }

    pub fn grade(&self, i: usize) -> i64 {
        self.basis[i].grade
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.basis[i].weight
    }

    pub fn grade_indices(&self, j: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].grade == j).collect()
    }

    /// Basis indices of `p_+ = g_1 + ... + g_k`.
    pub fn p_plus_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].grade > 0).collect()
    }

    /// Basis indices of `g_- = g_{-k} + ... + g_{-1}`.
    pub fn g_minus_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].grade < 0).collect()
    }

    /// Root vectors of the uncrossed simple roots (Levi raising operators).
    pub fn levi_raising_indices(&self) -> Vec<usize> {
        self.simple_levi(BasisLabel::Pos)
    }

    pub fn levi_lowering_indices(&self) -> Vec<usize> {
        self.simple_levi(BasisLabel::Neg)
    }

    fn simple_levi(&self, wrap: impl Fn(usize) -> BasisLabel) -> Vec<usize> {
        (0..self.rs.rank)
            .filter(|i| !self.spec.crossed.contains(i))
            .map(|i| {
                let idx = self
                    .rs
                    .positive_roots
                    .iter()
                    .position(|r| r.height() == 1 && r.coeffs[i] == 1)
                    .unwrap();
                self.index_of(wrap(idx))
            })
            .collect()
    }

    /// `(grade, dim)` pairs from `-k` to `k`.
    pub fn grading_summand_dims(&self) -> Vec<(i64, usize)> {
        (-self.depth..=self.depth)
            .map(|j| (j, self.basis.iter().filter(|b| b.grade == j).count()))
            .collect()
    }

    /// Bracket of coordinate vectors, exact.
    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for &(k, ref c) in &self.bracket_table[i][j] {
                    out[k] += xi * yj * c;
                }
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket_table[i][j]
    }

    /// Trace form `tr(x y)`; the Killing form is `killing_constant` times it.
    pub fn killing_pairing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let t = trace_pairing(&self.basis[i].matrix, &self.basis[j].matrix, false);
                if !t.is_zero() {
                    acc += xi * yj * t;
                }
            }
        }
        acc
    }

    /// Positive definite inner product `<x,y> = tr(x y^T)` on coordinates.
    pub fn gram_inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        crate::linalg::dot(x, &gy)
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[(i, j)]
    }

    /// Index of the transpose of basis element `i`; the transpose of a basis
    /// element is again a basis element in these realizations.
    pub fn transpose_index(&self, i: usize) -> usize {
        self.transpose_index[i]
    }

    /// Grading-element eigenvalue of a coordinate vector, or `None` when
    /// graded components mix.
    pub fn homogeneity_of(&self, x: &[Rational]) -> Option<i64> {
        let mut seen: Option<i64> = None;
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.basis[i].grade),
                Some(g) if g == self.basis[i].grade => {}
                _ => return None,
            }
        }
        seen
    }

    /// Exact check of the Jacobi identity on all basis triples.
    pub fn verify_jacobi(&self) -> Result<(), String> {
        let dim = self.dim();
        let unit = |i: usize| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            v
        };
        for i in 0..dim {
            for j in i + 1..dim {
                let bij = sparse_to_dense(&self.bracket_table[i][j], dim);
                for k in j + 1..dim {
                    let bjk = sparse_to_dense(&self.bracket_table[j][k], dim);
                    let bki = sparse_to_dense(&self.bracket_table[k][i], dim);
                    let t1 = self.bracket_coords(&unit(i), &bjk);
                    let t2 = self.bracket_coords(&unit(j), &bki);
                    let t3 = self.bracket_coords(&unit(k), &bij);
                    for l in 0..dim {
                        if !(&t1[l] + &t2[l] + &t3[l]).is_zero() {
                            return Err(format!(
                                "Jacobi fails on triple ({:?},{:?},{:?})",
                                self.basis[i].label, self.basis[j].label, self.basis[k].label
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn sparse_to_dense(v: &SparseVec, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for &(i, ref c) in v {
        out[i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(name: &str) -> GradedLieAlgebra {
        build_graded_algebra(&StructureSpec::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn sl2_projective() {
        let g = algebra("A1:1");
        assert_eq!(g.depth, 1);
        assert_eq!(g.grading_summand_dims(), vec![(-1, 1), (0, 1), (1, 1)]);
    }

    #[test]
    fn grassmannian_n2_grading() {
        let g = algebra("grassmannian:2");
        assert_eq!(g.depth, 1);
        assert_eq!(g.grading_summand_dims(), vec![(-1, 4), (0, 7), (1, 4)]);
    }

    #[test]
    fn quaternionic_contact_n2_grading() {
        let g = algebra("quaternionic-contact:2");
        assert_eq!(g.depth, 2);
        assert_eq!(
            g.grading_summand_dims(),
            vec![(-2, 3), (-1, 8), (0, 14), (1, 8), (2, 3)]
        );
    }

    #[test]
    fn lagrangean_contact_n2_grading() {
        let g = algebra("A3:1,3");
        assert_eq!(g.depth, 2);
        assert_eq!(
            g.grading_summand_dims(),
            vec![(-2, 1), (-1, 4), (0, 5), (1, 4), (2, 1)]
        );
    }

    #[test]
    fn quaternionic_n2_grading() {
        let g = algebra("quaternionic:2");
        assert_eq!(g.depth, 1);
        assert_eq!(g.grading_summand_dims(), vec![(-1, 8), (0, 19), (1, 8)]);
        let total: usize = g.grading_summand_dims().iter().map(|(_, d)| d).sum();
        assert_eq!(total, 35);
    }

    #[test]
    fn base_dimensions_match_family_statements() {
        for (family, n) in [
            (Family::Grassmannian, 3),
            (Family::Quaternionic, 2),
            (Family::LagrangeanContact, 2),
            (Family::QuaternionicContact, 2),
            (Family::Projective, 2),
            (Family::ContactProjective, 2),
            (Family::Cr, 2),
        ] {
            let spec = StructureSpec::from_family(family, n).unwrap();
            let g = build_graded_algebra(&spec).unwrap();
            assert_eq!(g.g_minus_indices().len(), family.base_dimension(n), "{}", spec.name);
        }
    }

    #[test]
    fn bracket_is_alternating_and_graded() {
        let g = algebra("grassmannian:2");
        let dim = g.dim();
        for i in 0..dim {
            let mut x = vec![Rational::zero(); dim];
            x[i] = rat(3);
            let b = g.bracket_coords(&x, &x);
            assert!(b.iter().all(|c| c.is_zero()));
        }
        // |1|-graded: [g_1, g_1] = 0.
        for &i in &g.p_plus_indices() {
            for &j in &g.p_plus_indices() {
                assert!(g.bracket_basis(i, j).is_empty());
            }
        }
    }

    #[test]
    fn jacobi_small_algebras() {
        for name in [
            "A2:1",
            "grassmannian:2",
            "A3:1,3",
            "C2:1",
            "quaternionic-contact:1",
            "B3:1",
            "D4:1",
        ] {
            let g = algebra(name);
            g.verify_jacobi().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn killing_grading_orthogonality_and_nondegeneracy() {
        let g = algebra("grassmannian:2");
        let dim = g.dim();
        for i in 0..dim {
            for j in 0..dim {
                let mut x = vec![Rational::zero(); dim];
                x[i] = Rational::one();
                let mut y = vec![Rational::zero(); dim];
                y[j] = Rational::one();
                let v = g.killing_pairing(&x, &y);
                if g.grade(i) + g.grade(j) != 0 {
                    assert!(v.is_zero());
                }
            }
        }
        // Pairing matrix of g_1 x g_{-1} has full rank 4.
        let p_plus = g.p_plus_indices();
        let g_minus = g.g_minus_indices();
        let mut pairing = QMatrix::zeros(p_plus.len(), g_minus.len());
        for (a, &i) in p_plus.iter().enumerate() {
            for (b, &j) in g_minus.iter().enumerate() {
                let mut x = vec![Rational::zero(); dim];
                x[i] = Rational::one();
                let mut y = vec![Rational::zero(); dim];
                y[j] = Rational::one();
                pairing[(a, b)] = g.killing_pairing(&x, &y);
            }
        }
        assert_eq!(pairing.rank(), 4);
        // killing(E, E) > 0.
        let e = g.grading_element.clone();
        assert!(g.killing_pairing(&e, &e) > Rational::zero());
    }

    #[test]
    fn transpose_flips_grading() {
        for name in ["grassmannian:2", "quaternionic-contact:1", "B3:2", "D4:2"] {
            let g = algebra(name);
            for i in 0..g.dim() {
                let t = g.transpose_index(i);
                assert_eq!(g.grade(t), -g.grade(i), "{name}");
                assert_eq!(g.basis[t].matrix, g.basis[i].matrix.transpose(), "{name}");
            }
        }
    }

    #[test]
    fn unsupported_inputs_error() {
        assert!(StructureSpec::parse("bogus:1").is_err());
        assert!(StructureSpec::parse("A3:9").is_err());
        assert!(StructureSpec::parse("grassmannian:1").is_err());
        assert!(StructureSpec::parse("D2:1").is_err());
    }

    #[test]
    fn catalog_names_round_trip() {
        for family in Family::ALL {
            let n = family.min_param().max(2);
            let spec = StructureSpec::from_family(family, n).unwrap();
            let reparsed = StructureSpec::parse(&spec.name).unwrap();
            assert_eq!(reparsed.series, spec.series);
            assert_eq!(reparsed.rank, spec.rank);
            assert_eq!(reparsed.crossed, spec.crossed);
        }
    }
}
