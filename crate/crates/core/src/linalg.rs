//! Dense symmetric matrices and two symmetric eigensolvers.
//!
//! Network graphs here have at most a few dozen nodes, so everything is dense
//! and O(n³). [`eig_sym`] is a cyclic Jacobi solver used wherever a single
//! decomposition is needed. [`eig_sym_fast`] is the tridiagonal QR path for
//! the relaxation loop, which decomposes a new matrix on every step.
//! Both return ascending eigenvalues with column eigenvectors.

use std::fmt;

use crate::error::{Error, Result};

/// Square real matrix in row-major storage.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest |a_ij − a_ji|.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self += weight · (e_i − e_j)(e_i − e_j)ᵀ`.
    pub fn add_edge_term(&mut self, i: usize, j: usize, weight: f64) {
        self[(i, i)] += weight;
        self[(j, j)] += weight;
        self[(i, j)] -= weight;
        self[(j, i)] -= weight;
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| self.row(i)))
            .finish()
    }
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the unit eigenvector of `eigenvalues[k]`.
    pub eigenvectors: Matrix,
}

impl SymmetricEigen {
    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        (0..self.eigenvectors.dim())
            .map(|i| self.eigenvectors[(i, k)])
            .collect()
    }
}

pub const SYMMETRY_TOL: f64 = 1e-12;
/// Stop once the off-diagonal Frobenius norm falls below this fraction of ‖A‖.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const MAX_QL_ITERATIONS: usize = 60;

/// Cyclic Jacobi eigendecomposition.
///
/// Rejects inputs whose asymmetry exceeds `1e-12 · max(1, max|a_ij|)`.
pub fn eig_sym(m: &Matrix) -> Result<SymmetricEigen> {
    let n = m.dim();
    check_symmetric(m)?;

    // symmetrize exactly so rotations see a symmetric input
    let mut a = symmetrized(m);
    let mut v = Matrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let diagonal: Vec<f64> = (0..n).map(|k| a[(k, k)]).collect();
    Ok(sorted(&diagonal, |i, k| v[(i, k)]))
}

/// Householder tridiagonalization followed by implicit-shift QL. Same
/// conventions as [`eig_sym`], several times faster at the sizes used here.
pub fn eig_sym_fast(m: &Matrix) -> Result<SymmetricEigen> {
    let n = m.dim();
    check_symmetric(m)?;
    if n == 0 {
        return Ok(sorted(&[], |_, _| 0.0));
    }
    let mut v = symmetrized(m);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e);
    // rows of `vt` are the basis vectors, so QL rotations touch contiguous memory
    let mut vt = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            vt[(j, i)] = v[(i, j)];
        }
    }
    tridiagonal_ql(Some(&mut vt), &mut d, &mut e)?;
    Ok(sorted(&d, |i, k| vt[(k, i)]))
}

/// Eigenvalues only, ascending.
pub fn eigenvalues_sym(m: &Matrix) -> Result<Vec<f64>> {
    let n = m.dim();
    check_symmetric(m)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut v = symmetrized(m);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_reduce(&mut v, &mut d, &mut e);
    for i in 0..n {
        d[i] = v[(i, i)];
    }
    e[0] = 0.0;
    tridiagonal_ql(None, &mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Inverse iteration: factors `m − σI` once (LU with partial pivoting) and
/// applies `steps` solves to `start`, removing the components along
/// `deflate` (orthonormal vectors) and normalizing after each. Exactly
/// singular pivots are nudged to `ε·‖m‖_F`.
pub fn inverse_iteration(
    m: &Matrix,
    sigma: f64,
    start: &[f64],
    deflate: &[&[f64]],
    steps: usize,
) -> Vec<f64> {
    let n = m.dim();
    let mut lu = m.clone();
    for i in 0..n {
        lu[(i, i)] -= sigma;
    }
    let tiny = f64::EPSILON * m.frobenius_norm().max(1.0);
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| {
                lu[(i, k)]
                    .abs()
                    .total_cmp(&lu[(j, k)].abs())
                    .then(j.cmp(&i))
            })
            .unwrap_or(k);
        if p != k {
            for j in 0..n {
                lu.data.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
        }
        if lu[(k, k)].abs() < tiny {
            lu[(k, k)] = if lu[(k, k)] < 0.0 { -tiny } else { tiny };
        }
        let pivot = lu[(k, k)];
        for i in (k + 1)..n {
            let factor = lu[(i, k)] / pivot;
            lu[(i, k)] = factor;
            if factor == 0.0 {
                continue;
            }
            for j in (k + 1)..n {
                lu.data[i * n + j] -= factor * lu.data[k * n + j];
            }
        }
    }

    let mut x = start.to_vec();
    for _ in 0..steps {
        let mut y: Vec<f64> = perm.iter().map(|&p| x[p]).collect();
        for i in 0..n {
            let head: f64 = (0..i).map(|j| lu[(i, j)] * y[j]).sum();
            y[i] -= head;
        }
        for i in (0..n).rev() {
            let tail: f64 = ((i + 1)..n).map(|j| lu[(i, j)] * y[j]).sum();
            y[i] = (y[i] - tail) / lu[(i, i)];
        }
        for u in deflate {
            let dot: f64 = y.iter().zip(u.iter()).map(|(a, b)| a * b).sum();
            y.iter_mut()
                .zip(u.iter())
                .for_each(|(yi, ui)| *yi -= dot * ui);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 && norm.is_finite() {
            y.iter_mut().for_each(|v| *v /= norm);
        }
        x = y;
    }
    x
}

/// `√(a² + b²)` without overflow.
fn pythag(a: f64, b: f64) -> f64 {
    let (a, b) = (a.abs(), b.abs());
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if big == 0.0 {
        return 0.0;
    }
    let ratio = small / big;
    big * (1.0 + ratio * ratio).sqrt()
}

fn symmetrized(m: &Matrix) -> Matrix {
    let mut v = m.clone();
    let n = m.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (v[(i, j)] + v[(j, i)]);
            v[(i, j)] = avg;
            v[(j, i)] = avg;
        }
    }
    v
}

/// Reduces symmetric `v` to tridiagonal form in place. On return `d` holds
/// the diagonal, `e[1..]` the subdiagonal and `v` the orthogonal transform.
fn tridiagonalize(v: &mut Matrix, d: &mut [f64], e: &mut [f64]) {
    householder_reduce(v, d, e);
    accumulate_transform(v, d, e);
}

/// Householder sweep. Leaves the reflectors in `v`, `e[1..]` holding the
/// subdiagonal and the tridiagonal's diagonal on the diagonal of `v`.
fn householder_reduce(v: &mut Matrix, d: &mut [f64], e: &mut [f64]) {
    let n = v.dim();
    for j in 0..n {
        d[j] = v[(n - 1, j)];
    }
    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
                v[(j, i)] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let f = d[i - 1];
            let g = if f > 0.0 { -h.sqrt() } else { h.sqrt() };
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);
            for j in 0..i {
                let f = d[j];
                v[(j, i)] = f;
                let mut g = e[j] + v[(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[(k, j)] * d[k];
                    e[k] += v[(k, j)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }
}

fn accumulate_transform(v: &mut Matrix, d: &mut [f64], e: &mut [f64]) {
    let n = v.dim();
    for i in 0..n - 1 {
        v[(n - 1, i)] = v[(i, i)];
        v[(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[(k, i + 1)] * v[(k, j)];
                }
                for k in 0..=i {
                    v[(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1, j)];
        v[(n - 1, j)] = 0.0;
    }
    v[(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Diagonalizes the tridiagonal matrix (`d`, `e`) by implicit QL, rotating
/// the rows of `vt` along. Eigenvalues are left unsorted in `d`.
fn tridiagonal_ql(mut vt: Option<&mut Matrix>, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > f64::EPSILON * tst1 {
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_QL_ITERATIONS {
                    return Err(Error::domain("tridiagonal QL did not converge"));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = pythag(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in &mut d[(l + 2)..] {
                    *x -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = pythag(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(vt) = vt.as_deref_mut() {
                        let (head, tail) = vt.data.split_at_mut((i + 1) * n);
                        let row_i = &mut head[i * n..];
                        let row_next = &mut tail[..n];
                        for (a, b) in row_i.iter_mut().zip(row_next.iter_mut()) {
                            let h = *b;
                            *b = s * *a + c * h;
                            *a = c * *a - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= f64::EPSILON * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

fn check_symmetric(m: &Matrix) -> Result<()> {
    let scale = m.data.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let asym = m.asymmetry();
    if asym > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    Ok(())
}

/// Ascending eigenpairs; equal eigenvalues keep their original order.
fn sorted(values: &[f64], vector: impl Fn(usize, usize) -> f64) -> SymmetricEigen {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&k| values[k]).collect();
    let mut eigenvectors = Matrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors[(i, col)] = vector(i, k);
        }
    }
    SymmetricEigen {
        eigenvalues,
        eigenvectors,
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..a.n {
        for j in 0..a.n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// Annihilates a_pq with the rotation A ← JᵀAJ and accumulates V ← VJ.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let n = a.n;
    let apq = a.data[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a.data[p * n + p];
    let aqq = a.data[q * n + q];
    let tau = (aqq - app) / (2.0 * apq);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.data[k * n + p];
        let akq = a.data[k * n + q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a.data[k * n + p] = new_p;
        a.data[p * n + k] = new_p;
        a.data[k * n + q] = new_q;
        a.data[q * n + k] = new_q;
    }
    a.data[p * n + p] = app - t * apq;
    a.data[q * n + q] = aqq + t * apq;
    a.data[p * n + q] = 0.0;
    a.data[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v.data[k * n + p];
        let vkq = v.data[k * n + q];
        v.data[k * n + p] = c * vkp - s * vkq;
        v.data[k * n + q] = s * vkp + c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &Matrix, eig: &SymmetricEigen) -> f64 {
        let mut worst = 0.0f64;
        for k in 0..m.dim() {
            let v = eig.eigenvector(k);
            let mv = m.mul_vec(&v);
            let r: f64 = mv
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - eig.eigenvalues[k] * y).powi(2))
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
        worst
    }

    #[test]
    fn diagonal_is_sorted() {
        let m = Matrix::from_rows(&[
            vec![3.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        let eig = eig_sym(&m).unwrap();
        assert_eq!(eig.eigenvalues, vec![-1.0, 2.0, 3.0]);
        assert_eq!(eig.eigenvector(0), vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn two_by_two() {
        let m = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let eig = eig_sym(&m).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 3.0).abs() < 1e-14);
        assert!(residual(&m, &eig) < 1e-13);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(eig_sym(&m), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(&[vec![1.0, 2.0], vec![0.0]]).is_err());
    }

    #[test]
    fn empty_matrix() {
        let eig = eig_sym(&Matrix::zeros(0)).unwrap();
        assert!(eig.eigenvalues.is_empty());
    }

    #[test]
    fn dense_random_orthonormal() {
        // fixed pseudo-random fill, no RNG dependency needed
        let n = 12;
        let mut m = Matrix::zeros(n);
        let mut x = 0.123_f64;
        for i in 0..n {
            for j in i..n {
                x = (x * 3.7 + 0.31).fract();
                m[(i, j)] = x - 0.5;
                m[(j, i)] = x - 0.5;
            }
        }
        let eig = eig_sym(&m).unwrap();
        assert!(residual(&m, &eig) < 1e-8 * m.frobenius_norm().max(1.0));
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = (0..n)
                    .map(|i| eig.eigenvectors[(i, a)] * eig.eigenvectors[(i, b)])
                    .sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
        assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn fast_path_agrees_with_jacobi() {
        let n = 9;
        let mut m = Matrix::zeros(n);
        let mut x = 0.77_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                x = (x * 5.3 + 0.17).fract();
                m.add_edge_term(i, j, x);
            }
        }
        let slow = eig_sym(&m).unwrap();
        let fast = eig_sym_fast(&m).unwrap();
        for (a, b) in slow.eigenvalues.iter().zip(&fast.eigenvalues) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!(residual(&m, &fast) < 1e-10);
        assert!(
            eig_sym_fast(&Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap()).is_err()
        );
    }

    #[test]
    fn fast_path_repeated_and_trivial() {
        // K5: eigenvalues 0, 5, 5, 5, 5
        let mut k5 = Matrix::zeros(5);
        for i in 0..5 {
            for j in (i + 1)..5 {
                k5.add_edge_term(i, j, 1.0);
            }
        }
        let eig = eig_sym_fast(&k5).unwrap();
        assert!(eig.eigenvalues[0].abs() < 1e-12);
        assert!(eig.eigenvalues[1..].iter().all(|x| (x - 5.0).abs() < 1e-12));
        assert!(residual(&k5, &eig) < 1e-12);
        for a in 0..5 {
            for b in 0..5 {
                let dot: f64 = (0..5)
                    .map(|i| eig.eigenvectors[(i, a)] * eig.eigenvectors[(i, b)])
                    .sum();
                assert!((dot - if a == b { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        assert!(eig_sym_fast(&Matrix::zeros(0))
            .unwrap()
            .eigenvalues
            .is_empty());
        let one = eig_sym_fast(&Matrix::from_rows(&[vec![-2.5]]).unwrap()).unwrap();
        assert_eq!(one.eigenvalues, vec![-2.5]);
        assert_eq!(one.eigenvectors[(0, 0)].abs(), 1.0);
    }

    #[test]
    fn eigenvalues_only_path() {
        let mut m = Matrix::zeros(7);
        let mut x = 0.41_f64;
        for i in 0..7 {
            for j in i..7 {
                x = (x * 4.3 + 0.11).fract();
                m[(i, j)] = x - 0.5;
                m[(j, i)] = x - 0.5;
            }
        }
        let full = eig_sym(&m).unwrap().eigenvalues;
        let only = eigenvalues_sym(&m).unwrap();
        for (a, b) in full.iter().zip(&only) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(eigenvalues_sym(&Matrix::zeros(0)).unwrap().is_empty());
    }

    #[test]
    fn inverse_iteration_finds_the_shifted_vector() {
        // diag(1, 2, 5): σ near 2 picks e₂
        let m = Matrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 5.0],
        ])
        .unwrap();
        let x = inverse_iteration(&m, 2.0 + 1e-9, &[1.0, 1.0, 1.0], &[], 1);
        assert!((x[1].abs() - 1.0).abs() < 1e-12);
        // deflating e₂ leaves the next closest, e₁
        let e2 = [0.0, 1.0, 0.0];
        let x = inverse_iteration(&m, 2.0, &[1.0, 1.0, 1.0], &[&e2], 2);
        assert!(x[1].abs() < 1e-12);
        assert!(x[0].abs() > x[2].abs());
        // permuted pivots still solve the system
        let p = Matrix::from_rows(&[vec![0.0, 2.0], vec![3.0, 1.0]]).unwrap();
        let x = inverse_iteration(&p, 0.0, &[2.0, 4.0], &[], 1);
        // (0 2; 3 1)·(1, 1) = (2, 4), normalized
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((x[0] - h).abs() < 1e-12 && (x[1] - h).abs() < 1e-12);
        assert!((pythag(3.0, -4.0) - 5.0).abs() < 1e-15);
        assert_eq!(pythag(0.0, 0.0), 0.0);
        assert!(pythag(1e200, 1e200).is_finite());
    }
}
