//! Dense symmetric matrices for signed graphs, a cyclic Jacobi eigensolver,
//! trace moments `tr(L^k)` and Rayleigh moments `j^T L^k j`.
//!
//! Graph matrices have small integer entries, so they are built as
//! `SymMatrix<i64>` and the moment identities are checked exactly. Only the
//! eigensolver works in floating point.

use std::ops::{Add, Mul};

use thiserror::Error;

use crate::sgraph::{DegreeProfile, Sign, SignedGraph, TriangleStats};

/// Off-diagonal Frobenius norm at which the eigensolver stops.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
/// Maximum number of full cyclic sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Absolute tolerance for spectral comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("matrix data has {len} entries, expected {order}x{order}")]
    Shape { order: usize, len: usize },
    #[error("moment order {0} not supported (expected 1, 2 or 3)")]
    MomentOrder(u32),
}

/// Element type of a [`SymMatrix`].
pub trait Scalar: Copy + Default + PartialEq + Add<Output = Self> + Mul<Output = Self> {}

impl Scalar for i64 {}
impl Scalar for f64 {}

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        SymMatrix { order, entries: vec![T::default(); order * order] }
    }

    /// Wraps row-major data after checking it is square and exactly symmetric.
    pub fn from_row_major(order: usize, entries: Vec<T>) -> Result<Self, SpectraError> {
        if entries.len() != order * order {
            return Err(SpectraError::Shape { order, len: entries.len() });
        }
        let m = SymMatrix { order, entries };
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> SymMatrix<U> {
        SymMatrix { order: self.order, entries: self.entries.iter().map(|&x| f(x)).collect() }
    }

    fn check_symmetric(&self) -> Result<(), SpectraError> {
        for row in 0..self.order {
            for col in row + 1..self.order {
                if self.get(row, col) != self.get(col, row) {
                    return Err(SpectraError::Asymmetric { row, col });
                }
            }
        }
        Ok(())
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::default(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        self.rows().map(|row| row.iter().zip(x).fold(T::default(), |acc, (&a, &b)| acc + a * b)).collect()
    }
}

impl SymMatrix<i64> {
    pub fn to_f64(&self) -> SymMatrix<f64> {
        self.map(|x| x as f64)
    }
}

fn square_product<T: Scalar>(n: usize, a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::default(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == T::default() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j] + aik * b[k * n + j];
            }
        }
    }
    out
}

fn check_moment_order(k: u32) -> Result<(), SpectraError> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(SpectraError::MomentOrder(k))
    }
}

/// `tr(M^k)` by explicit matrix products, `k` in `1..=3`.
pub fn trace_moment<T: Scalar>(m: &SymMatrix<T>, k: u32) -> Result<T, SpectraError> {
    check_moment_order(k)?;
    let n = m.order();
    let mut power = m.entries().to_vec();
    for _ in 1..k {
        power = square_product(n, &power, m.entries());
    }
    Ok((0..n).fold(T::default(), |acc, i| acc + power[i * n + i]))
}

/// Degree matrix `D(Σ)`.
pub fn degree_matrix(g: &SignedGraph) -> SymMatrix<i64> {
    let mut m = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set_sym(v, v, g.degree(v) as i64);
    }
    m
}

/// Signed adjacency matrix `A(Σ)`: `σ(e_ij)` on edges, zero elsewhere.
pub fn adjacency(g: &SignedGraph) -> SymMatrix<i64> {
    let mut m = SymMatrix::zeros(g.order());
    for e in g.edges() {
        m.set_sym(e.u, e.v, e.sign.value());
    }
    m
}

/// Laplacian `L(Σ) = D(Σ) - A(Σ)`.
pub fn laplacian(g: &SignedGraph) -> SymMatrix<i64> {
    let mut m = degree_matrix(g);
    for e in g.edges() {
        m.set_sym(e.u, e.v, -e.sign.value());
    }
    m
}

/// The same underlying graph with every edge signed `sign`.
///
/// `laplacian(&sign_all(g, Sign::Pos))` is the ordinary Laplacian of the
/// underlying graph and `laplacian(&sign_all(g, Sign::Neg))` its signless
/// Laplacian.
pub fn sign_all(g: &SignedGraph, sign: Sign) -> SignedGraph {
    g.resign(|_| sign)
}

/// Eigenvalues of a symmetric matrix, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn lambda_max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `Σ λ^k`.
    pub fn power_sum(&self, k: i32) -> f64 {
        self.values.iter().map(|x| x.powi(k)).sum()
    }

    /// Number of eigenvalues strictly greater than `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.values.iter().filter(|&&x| x > tol).count()
    }

    /// Largest absolute difference between matched eigenvalues, or infinity
    /// when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.values.len() != other.values.len() {
            return f64::INFINITY;
        }
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    sum.sqrt()
}

/// All eigenvalues of `m` by cyclic Jacobi rotations.
///
/// Sweeps visit pairs `(p, q)` with `p < q` in row order. Iteration stops once
/// the off-diagonal Frobenius norm drops below `tol`; after
/// [`JACOBI_MAX_SWEEPS`] sweeps without getting there the residual is reported
/// as an error.
pub fn eigenvalues(m: &SymMatrix<f64>, tol: f64) -> Result<Spectrum, SpectraError> {
    m.check_symmetric()?;
    let n = m.order();
    let mut a = m.entries().to_vec();

    let mut residual = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while residual >= tol {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(&a, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(Spectrum { values })
}

/// Applies the plane rotation that zeroes `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

pub fn laplacian_spectrum(g: &SignedGraph) -> Result<Spectrum, SpectraError> {
    eigenvalues(&laplacian(g).to_f64(), JACOBI_TOLERANCE)
}

/// Largest eigenvalue of `L(Σ)`.
pub fn spectral_radius_laplacian(g: &SignedGraph) -> Result<f64, SpectraError> {
    laplacian_spectrum(g).map(|s| s.lambda_max())
}

/// `tr(L^k)` from degree and triangle statistics: `s1`, `s1 + s2`, and
/// `s3 + 3 s2 - 6 t±` for `k = 1, 2, 3`.
pub fn laplacian_trace_closed_form(
    profile: &DegreeProfile,
    triangles: &TriangleStats,
    k: u32,
) -> Result<i64, SpectraError> {
    check_moment_order(k)?;
    let (s1, s2, s3) = (profile.s1 as i64, profile.s2 as i64, profile.s3 as i64);
    Ok(match k {
        1 => s1,
        2 => s1 + s2,
        _ => s3 + 3 * s2 - 6 * triangles.net(),
    })
}

/// Rayleigh moment `N_k = j^T L(Σ)^k j` in closed form:
///
/// ```text
/// N1 = 2 Σ d⁻_j
/// N2 = 4 Σ (d⁻_j)²
/// N3 = 4 Σ d_j (d⁻_j)² - 8 Σ_{edges ij} σ(e_ij) d⁻_i d⁻_j
/// ```
pub fn rayleigh_moment(g: &SignedGraph, k: u32) -> Result<i64, SpectraError> {
    check_moment_order(k)?;
    let mut neg = vec![0i64; g.order()];
    for e in g.edges().iter().filter(|e| e.sign.is_negative()) {
        neg[e.u] += 1;
        neg[e.v] += 1;
    }
    Ok(match k {
        1 => 2 * neg.iter().sum::<i64>(),
        2 => 4 * neg.iter().map(|x| x * x).sum::<i64>(),
        _ => {
            let vertex: i64 = (0..g.order()).map(|v| g.degree(v) as i64 * neg[v] * neg[v]).sum();
            let edge: i64 = g.edges().iter().map(|e| e.sign.value() * neg[e.u] * neg[e.v]).sum();
            4 * vertex - 8 * edge
        }
    })
}

/// `j^T L^k j` by repeated matrix-vector products.
pub fn rayleigh_moment_by_product(g: &SignedGraph, k: u32) -> Result<i64, SpectraError> {
    check_moment_order(k)?;
    let l = laplacian(g);
    let mut x = vec![1i64; g.order()];
    for _ in 0..k {
        x = l.mul_vec(&x);
    }
    Ok(x.iter().sum())
}

/// `x^T M x / x^T x`.
pub fn rayleigh_quotient(m: &SymMatrix<f64>, x: &[f64]) -> f64 {
    let mx = m.mul_vec(x);
    let num: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
    num / x.iter().map(|a| a * a).sum::<f64>()
}
