//! Small dense complex matrices (dimension at most [`MAX_DIM`]).
//!
//! Storage is a fixed inline array so that the hot loops of the orbit search
//! never touch the allocator. Entries are addressed row-major with stride
//! equal to the column count.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::tolerance::TOL;

pub type C64 = Complex64;

pub const MAX_DIM: usize = 8;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const MAX_SWEEPS: usize = 64;

#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: [C64; MAX_DIM * MAX_DIM],
}

impl ComplexMatrix {
    /// Panics if either dimension is zero or exceeds [`MAX_DIM`].
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(
            (1..=MAX_DIM).contains(&rows) && (1..=MAX_DIM).contains(&cols),
            "matrix dimensions {rows}x{cols} outside 1..={MAX_DIM}"
        );
        Self {
            rows,
            cols,
            data: [ZERO; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if !(1..=MAX_DIM).contains(&n_rows) || !(1..=MAX_DIM).contains(&n_cols) {
            return Err(Error::Dimension(format!(
                "{n_rows}x{n_cols} outside 1..={MAX_DIM}"
            )));
        }
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self::from_fn(n_rows, n_cols, |i, j| rows[i][j]))
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    pub fn trace(&self) -> C64 {
        self.diagonal().into_iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max entrywise absolute difference. Panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max over entries of `|m[i][j] - conj(m[j][i])|`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// Kronecker product; the left factor indexes the most significant block.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Self::from_fn(r, c, |i, j| {
            self[(i / other.rows, j / other.cols)] * other[(i % other.rows, j % other.cols)]
        })
    }

    /// `self * m * self^dagger`.
    pub fn conjugate(&self, m: &Self) -> Self {
        &(self * m) * &self.adjoint()
    }

    /// Determinant by LU factorisation with partial pivoting.
    pub fn determinant(&self) -> C64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = *self;
        let mut det = ONE;
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
                .unwrap_or(k);
            if a[(pivot, k)].norm() == 0.0 {
                return ZERO;
            }
            if pivot != k {
                for j in 0..n {
                    let tmp = a[(k, j)];
                    a[(k, j)] = a[(pivot, j)];
                    a[(pivot, j)] = tmp;
                }
                det = -det;
            }
            let akk = a[(k, k)];
            det *= akk;
            for i in k + 1..n {
                let f = a[(i, k)] / akk;
                for j in k + 1..n {
                    let akj = a[(k, j)];
                    a[(i, j)] -= f * akj;
                }
            }
        }
        det
    }

    fn entries(&self) -> impl Iterator<Item = C64> + '_ {
        self.data[..self.rows * self.cols].iter().copied()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A square matrix equal to its conjugate transpose within
/// [`TOL.hermitian`](crate::tolerance::Tolerances::hermitian).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct HermitianMatrix(ComplexMatrix);

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "Hermitian matrix must be square, got {}x{}",
                m.rows, m.cols
            )));
        }
        let deviation = m.hermitian_deviation();
        if deviation > TOL.hermitian {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self::symmetrized(&m))
    }

    /// `(m + m^dagger) / 2`, which is exactly Hermitian in floating point.
    pub fn symmetrized(m: &ComplexMatrix) -> Self {
        assert!(m.is_square());
        let mut h = *m;
        for i in 0..m.rows {
            h[(i, i)] = C64::new(m[(i, i)].re, 0.0);
            for j in i + 1..m.cols {
                let z = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
            }
        }
        Self(h)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self(ComplexMatrix::from_real_diagonal(diag))
    }

    pub fn identity(n: usize) -> Self {
        Self(ComplexMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// `Tr(m^2)`; equals the squared Frobenius norm for Hermitian input.
    pub fn trace_of_square(&self) -> f64 {
        self.0.frobenius_norm().powi(2)
    }

    /// `U m U^dagger` for any square `U` of matching size.
    pub fn conjugated_by(&self, u: &ComplexMatrix) -> Self {
        Self::symmetrized(&u.conjugate(&self.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.scale(C64::new(s, 0.0)))
    }
}

impl Index<(usize, usize)> for HermitianMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Non-ascending.
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector of `values[k]`.
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::from_real_diagonal(&self.values);
        self.vectors.conjugate(&d)
    }
}

/// Full eigendecomposition by cyclic complex Jacobi rotations.
pub fn eig_hermitian(m: &HermitianMatrix) -> EigenDecomposition {
    let (values, vectors) = jacobi(m.as_matrix(), true);
    let vectors = vectors.expect("vectors requested");
    let order = descending_order(&values);
    let n = values.len();
    EigenDecomposition {
        values: order.iter().map(|&k| values[k]).collect(),
        vectors: ComplexMatrix::from_fn(n, n, |i, j| vectors[(i, order[j])]),
    }
}

/// Eigenvalues only (non-ascending); skips accumulating the rotations.
pub fn eigenvalues_hermitian(m: &HermitianMatrix) -> Vec<f64> {
    let (values, _) = jacobi(m.as_matrix(), false);
    let order = descending_order(&values);
    order.iter().map(|&k| values[k]).collect()
}

pub fn min_eigenvalue(m: &HermitianMatrix) -> f64 {
    let (values, _) = jacobi(m.as_matrix(), false);
    values.into_iter().fold(f64::INFINITY, f64::min)
}

fn descending_order(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable, so ties keep the Jacobi output order
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    order
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(m: &ComplexMatrix, want_vectors: bool) -> (Vec<f64>, Option<ComplexMatrix>) {
    let n = m.rows;
    let mut a = *m;
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let threshold = TOL.jacobi_off_diagonal * m.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let modulus = apq.norm();
                if modulus < f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / modulus;
                let zeta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * modulus);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // J = diag-phase * Givens: rotates (p, q) so that (J^dag A J)_pq = 0
                let j_pp = C64::new(c, 0.0);
                let j_pq = C64::new(s, 0.0);
                let j_qp = -phase.conj() * s;
                let j_qq = phase.conj() * c;

                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = akp * j_pp + akq * j_qp;
                    a[(k, q)] = akp * j_pq + akq * j_qq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
                    a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = vkp * j_pp + vkq * j_qp;
                        v[(k, q)] = vkp * j_pq + vkq * j_qq;
                    }
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)].re).collect(), v)
}

/// `exp(i * eps * h)` through the eigendecomposition of `h`.
pub fn exp_i_hermitian(h: &HermitianMatrix, eps: f64) -> ComplexMatrix {
    let eig = eig_hermitian(h);
    let phases: Vec<C64> = eig
        .values
        .iter()
        .map(|&l| C64::from_polar(1.0, eps * l))
        .collect();
    let n = h.dim();
    let mut d = ComplexMatrix::zeros(n, n);
    for (i, &p) in phases.iter().enumerate() {
        d[(i, i)] = p;
    }
    eig.vectors.conjugate(&d)
}

/// Orthonormal basis of the traceless Hermitian matrices of size `dim`
/// (generalised Gell-Mann matrices, normalised to `Tr(G_a G_b) = 2 delta_ab`).
pub fn su_generators(dim: usize) -> Vec<HermitianMatrix> {
    let mut out = Vec::with_capacity(dim * dim - 1);
    for j in 0..dim {
        for k in j + 1..dim {
            let mut sym = ComplexMatrix::zeros(dim, dim);
            sym[(j, k)] = ONE;
            sym[(k, j)] = ONE;
            out.push(HermitianMatrix(sym));
            let mut anti = ComplexMatrix::zeros(dim, dim);
            anti[(j, k)] = C64::new(0.0, -1.0);
            anti[(k, j)] = C64::new(0.0, 1.0);
            out.push(HermitianMatrix(anti));
        }
    }
    for l in 1..dim {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut d = vec![0.0; dim];
        for x in d.iter_mut().take(l) {
            *x = norm;
        }
        d[l] = -(l as f64) * norm;
        out.push(HermitianMatrix::from_real_diagonal(&d));
    }
    out
}

/// Element of SU(d) for d in {3, 4}, the symmetric-sector groups of two and
/// three qubits.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct UnitaryMatrix(ComplexMatrix);

impl UnitaryMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() || !(3..=4).contains(&m.rows) {
            return Err(Error::Dimension(format!(
                "unitary must be 3x3 or 4x4, got {}x{}",
                m.rows, m.cols
            )));
        }
        let deviation = unitarity_deviation(&m);
        if deviation > TOL.unitary {
            return Err(Error::NotUnitary { deviation });
        }
        let det_dev = (m.determinant().norm() - 1.0).abs();
        if det_dev > TOL.determinant {
            return Err(Error::NotUnitary { deviation: det_dev });
        }
        Ok(Self(m))
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    /// `U m U^dagger`.
    pub fn apply(&self, m: &HermitianMatrix) -> HermitianMatrix {
        m.conjugated_by(&self.0)
    }

    /// `g * U`; caller guarantees `g` is (numerically) special unitary.
    pub fn left_multiplied(&self, g: &ComplexMatrix) -> Self {
        Self(g * &self.0)
    }

    pub fn with_global_phase(&self, phase: f64) -> ComplexMatrix {
        self.0.scale(C64::from_polar(1.0, phase))
    }

    /// Re-projects onto SU(d) (Gram-Schmidt plus determinant phase fix),
    /// undoing drift accumulated over long products.
    pub fn reorthonormalized(&self) -> Self {
        Self(special_unitary_part(gram_schmidt(&self.0)))
    }
}

pub fn unitarity_deviation(m: &ComplexMatrix) -> f64 {
    (m * &m.adjoint()).max_abs_diff(&ComplexMatrix::identity(m.rows))
}

/// Haar-distributed unitary of any size up to [`MAX_DIM`] (phase-fixed QR of a
/// complex Ginibre matrix). Not projected to SU(d).
pub fn haar_unitary_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let ginibre = ComplexMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    });
    // Gram-Schmidt yields R with a positive real diagonal, which is the
    // phase normalisation that makes Q Haar distributed.
    gram_schmidt(&ginibre)
}

/// Haar-random element of SU(dim), dim in {3, 4}.
pub fn haar_random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<UnitaryMatrix> {
    if !(3..=4).contains(&dim) {
        return Err(Error::Dimension(format!(
            "Haar unitary dimension must be 3 or 4, got {dim}"
        )));
    }
    Ok(UnitaryMatrix(special_unitary_part(haar_unitary_matrix(
        dim, rng,
    ))))
}

fn special_unitary_part(q: ComplexMatrix) -> ComplexMatrix {
    let det = q.determinant();
    let n = q.rows as f64;
    q.scale(C64::from_polar(1.0, -det.arg() / n))
}

/// Column-wise modified Gram-Schmidt with one re-orthogonalisation pass.
fn gram_schmidt(m: &ComplexMatrix) -> ComplexMatrix {
    let (rows, cols) = (m.rows, m.cols);
    let mut q = *m;
    for j in 0..cols {
        for _ in 0..2 {
            for k in 0..j {
                let mut dot = ZERO;
                for i in 0..rows {
                    dot += q[(i, k)].conj() * q[(i, j)];
                }
                for i in 0..rows {
                    let qik = q[(i, k)];
                    q[(i, j)] -= dot * qik;
                }
            }
        }
        let norm = (0..rows).map(|i| q[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        for i in 0..rows {
            q[(i, j)] /= norm;
        }
    }
    q
}
