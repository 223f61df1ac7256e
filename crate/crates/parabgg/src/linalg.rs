//! Exact rational linear algebra.
//!
//! Everything downstream (brackets, chain maps, harmonic projections,
//! polynomial models) reduces to kernels, ranks and solves over Q. All of it
//! goes through this module so that the elimination order, pivot choice and
//! output normalization are fixed in exactly one place: results are
//! reproducible bit for bit across runs.
//!
//! Elimination is fraction-free (Bareiss): rows are first scaled to integers,
//! then reduced with the two-term update `(a*p - b*q)/prev_pivot`, which keeps
//! every intermediate entry an exact integer and controls coefficient growth.
//! Pivots are chosen leftmost column first, then smallest row index.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar. Stored in lowest terms with a
/// positive denominator (upheld by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let acc = &out[(r, c)] + a * b;
                        out[(r, c)] = acc;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc += &self[(r, c)] * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Row rank = column rank over Q.
    pub fn rank(&self) -> usize {
        Echelon::reduce(self.to_int_rows()).pivots.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    ///
    /// Vectors are normalized to primitive integer form with a positive
    /// leading entry, ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::reduce(self.to_int_rows());
        ech.kernel_basis(self.cols)
    }

    /// A solution of `self * x = b`, or `None` when `b` is not in the image.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        // Augment with b, scale rows to integers, eliminate, then demand that
        // no pivot lands in the augmented column.
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row: Vec<Rational> = self.row(r).to_vec();
            row.push(b[r].clone());
            rows.push(row);
        }
        let ech = Echelon::reduce(int_scale_rows(rows));
        if ech.pivots.iter().any(|&(_, c)| c == self.cols) {
            return None;
        }
        Some(ech.particular_solution(self.cols))
    }

    /// Inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        // Gauss-Jordan over Q; n is small wherever this is called.
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                for c in 0..n {
                    a.data.swap(piv * n + c, col * n + c);
                    inv.data.swap(piv * n + c, col * n + c);
                }
            }
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &p;
                inv[(col, c)] = &inv[(col, c)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let x = &a[(col, c)] * &f;
                    a[(r, c)] = &a[(r, c)] - &x;
                    let y = &inv[(col, c)] * &f;
                    inv[(r, c)] = &inv[(r, c)] - &y;
                }
            }
        }
        Some(inv)
    }

    fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        int_scale_rows((0..self.rows).map(|r| self.row(r).to_vec()).collect())
    }
}

/// Completes `sub` to a basis of Q^ambient with standard basis vectors.
///
/// The classes of the returned vectors form a basis of the quotient by
/// `span(sub)`. Fails if `sub` is linearly dependent, naming the offending
/// vector.
pub fn quotient_representatives(
    sub: &[Vec<Rational>],
    ambient_dim: usize,
) -> Result<Vec<Vec<Rational>>, String> {
    for (i, v) in sub.iter().enumerate() {
        assert_eq!(v.len(), ambient_dim, "sub vector {i} has wrong dimension");
    }
    let ech = Echelon::reduce(int_scale_rows(sub.to_vec()));
    if ech.pivots.len() < sub.len() {
        return Err(format!(
            "dependent input: {} vectors span only rank {}",
            sub.len(),
            ech.pivots.len()
        ));
    }
    let pivot_cols: std::collections::HashSet<usize> =
        ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for c in 0..ambient_dim {
        if !pivot_cols.contains(&c) {
            let mut e = vec![Rational::zero(); ambient_dim];
            e[c] = Rational::one();
            out.push(e);
        }
    }
    Ok(out)
}

/// Clears denominators row by row; kernels and row spaces are unchanged.
fn int_scale_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in &row {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            row.into_iter()
                .map(|x| {
                    let (n, d) = x.into_raw();
                    n * (&lcm / d)
                })
                .collect()
        })
        .collect()
}

/// Fraction-free row echelon form over the integers.
struct Echelon {
    mat: Vec<Vec<BigInt>>,
    /// `(row, col)` pairs in elimination order; rows are post-swap indices.
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    fn reduce(mut mat: Vec<Vec<BigInt>>) -> Echelon {
        let rows = mat.len();
        let cols = mat.first().map_or(0, |r| r.len());
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..cols {
            // Leftmost column, then smallest row index.
            let Some(piv) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(rank, piv);
            for r in rank + 1..rows {
                if mat[r][col].is_zero() && mat[rank][col].is_one() {
                    // fast path: nothing to eliminate, no rescale needed
                    if prev.is_one() {
                        continue;
                    }
                }
                for c in col + 1..cols {
                    let v = (&mat[rank][col] * &mat[r][c] - &mat[r][col] * &mat[rank][c]) / &prev;
                    mat[r][c] = v;
                }
                mat[r][col] = BigInt::zero();
            }
            prev = mat[rank][col].clone();
            pivots.push((rank, col));
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Echelon { mat, pivots }
    }

    /// Kernel basis by back-substitution, one vector per free column.
    fn kernel_basis(&self, cols: usize) -> Vec<Vec<Rational>> {
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|&(_, c)| c).collect();
        let is_pivot: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..cols {
            if is_pivot.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            // Solve pivot rows bottom-up.
            for &(row, pc) in self.pivots.iter().rev() {
                let mut acc = Rational::zero();
                for c in pc + 1..cols {
                    if !self.mat[row][c].is_zero() && !v[c].is_zero() {
                        acc += Rational::from_integer(self.mat[row][c].clone()) * &v[c];
                    }
                }
                v[pc] = -acc / Rational::from_integer(self.mat[row][pc].clone());
            }
            basis.push(primitive_integer(v));
        }
        basis
    }

    /// Solution with all free variables set to zero. Assumes consistency was
    /// already checked and the matrix carries one extra augmented column.
    fn particular_solution(&self, cols: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); cols];
        for &(row, pc) in self.pivots.iter().rev() {
            let mut acc = Rational::from_integer(self.mat[row][cols].clone());
            for c in pc + 1..cols {
                if !self.mat[row][c].is_zero() && !x[c].is_zero() {
                    acc -= Rational::from_integer(self.mat[row][c].clone()) * &x[c];
                }
            }
            x[pc] = acc / Rational::from_integer(self.mat[row][pc].clone());
        }
        x
    }
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Canonical representative of the ray.
pub fn primitive_integer(v: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = num_integer::gcd(gcd, n.clone());
    }
    if gcd.is_zero() {
        return v;
    }
    let sign = ints
        .iter()
        .find(|n| !n.is_zero())
        .map_or(BigInt::one(), |n| if n.is_negative() { -BigInt::one() } else { BigInt::one() });
    let scale = gcd * sign;
    ints.into_iter().map(|n| Rational::from_integer(n / &scale)).collect()
}

/// Dot product of rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}
