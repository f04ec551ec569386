//! Small dense complex linear algebra: matrix products, singular values by
//! one-sided Jacobi rotations, and Householder least squares.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::qseries::Complex;
use crate::{Error, Result};

const ZERO: Complex = Complex::new(0.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Complex>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().ok_or(Error::Empty)?.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::LengthMismatch { expected: rows, found: bad.len() });
        }
        Ok(Self::from_fn(rows, cols, |r, c| columns[c][r]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Complex] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Complex> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        crate::norm_inf(&self.data)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.data[r * self.cols + c]
    }
}

/// Singular values in decreasing order, `min(rows, cols)` of them.
pub fn singular_values(a: &Matrix) -> Vec<f64> {
    // work on whichever orientation has fewer columns
    let m = if a.cols <= a.rows { a.clone() } else { a.adjoint() };
    let (rows, cols) = (m.rows, m.cols);
    let mut cols_data: Vec<Vec<Complex>> = (0..cols).map(|c| m.column(c)).collect();

    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, ZERO);
                for r in 0..rows {
                    let (x, y) = (cols_data[p][r], cols_data[q][r]);
                    alpha += x.norm_sqr();
                    beta += y.norm_sqr();
                    gamma += x.conj() * y;
                }
                let g = gamma.norm();
                if g == 0.0 || g <= 1e-15 * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                // rotation annihilating the (p, q) entry of the Gram matrix
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let t = if zeta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / libm::sqrt(1.0 + t * t);
                let sn = cs * t;
                for r in 0..rows {
                    let x = cols_data[p][r];
                    let y = cols_data[q][r] * phase.conj();
                    cols_data[p][r] = cs * x - sn * y;
                    cols_data[q][r] = (sn * x + cs * y) * phase;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols_data.iter().map(|c| libm::sqrt(c.iter().map(|z| z.norm_sqr()).sum::<f64>())).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Minimises `‖A x - b‖₂` for a tall or square `A` of full column rank.
pub fn least_squares(a: &Matrix, b: &[Complex]) -> Result<Vec<Complex>> {
    let (rows, cols) = (a.rows, a.cols);
    if b.len() != rows {
        return Err(Error::LengthMismatch { expected: rows, found: b.len() });
    }
    if cols == 0 {
        return Err(Error::Empty);
    }
    if rows < cols {
        return Err(Error::InvalidArgument("least squares needs at least as many rows as columns"));
    }
    let mut r = a.clone();
    let mut rhs = b.to_vec();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);

    for k in 0..cols {
        let norm = libm::sqrt((k..rows).map(|i| r[(i, k)].norm_sqr()).sum::<f64>());
        if norm <= 1e-14 * scale {
            return Err(Error::IllConditioned { condition: f64::INFINITY });
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == 0.0 { Complex::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm;
        let mut v: Vec<Complex> = (k..rows).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for c in k..cols {
            let dot: Complex = v.iter().enumerate().map(|(i, vi)| vi.conj() * r[(k + i, c)]).sum();
            let f = 2.0 * dot / vnorm2;
            for (i, vi) in v.iter().enumerate() {
                r[(k + i, c)] -= f * vi;
            }
        }
        let dot: Complex = v.iter().enumerate().map(|(i, vi)| vi.conj() * rhs[k + i]).sum();
        let f = 2.0 * dot / vnorm2;
        for (i, vi) in v.iter().enumerate() {
            rhs[k + i] -= f * vi;
        }
    }

    let mut x = vec![ZERO; cols];
    for k in (0..cols).rev() {
        let s: Complex = ((k + 1)..cols).map(|c| r[(k, c)] * x[c]).sum();
        x[k] = (rhs[k] - s) / r[(k, k)];
    }
    if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("least squares"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn product_and_adjoint() {
        let a = Matrix::from_fn(2, 3, |r, k| c(r as f64, k as f64));
        let i3 = Matrix::identity(3);
        assert_eq!(a.matmul(&i3).unwrap(), a);
        assert_eq!(a.adjoint().adjoint(), a);
        assert!(a.matmul(&a).is_err());
        assert_eq!(a.mul_vec(&[c(1.0, 0.0), ZERO, ZERO]).unwrap(), a.column(0));
    }

    #[test]
    fn singular_values_of_known_matrices() {
        let d = Matrix::from_fn(3, 3, |r, k| if r == k { c(0.0, (r + 1) as f64) } else { ZERO });
        let sv = singular_values(&d);
        assert!((sv[0] - 3.0).abs() < 1e-14 && (sv[2] - 1.0).abs() < 1e-14);

        // rank one: u v*
        let u = [c(1.0, 1.0), c(0.0, 2.0), c(-1.0, 0.5)];
        let v = [c(0.5, 0.0), c(1.0, -1.0)];
        let a = Matrix::from_fn(3, 2, |r, k| u[r] * v[k].conj());
        let nu: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let nv: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let sv = singular_values(&a);
        assert!((sv[0] - nu * nv).abs() < 1e-13);
        assert!(sv[1] < 1e-14);
        assert_eq!(singular_values(&a.adjoint()).len(), 2);
    }

    #[test]
    fn singular_values_of_unitary() {
        let n = 6;
        let w = core::f64::consts::TAU / n as f64;
        let f = Matrix::from_fn(n, n, |r, k| Complex::from_polar(1.0 / (n as f64).sqrt(), w * (r * k) as f64));
        assert!(singular_values(&f).iter().all(|s| (s - 1.0).abs() < 1e-13));
    }

    #[test]
    fn least_squares_recovers_exact_solution() {
        let a = Matrix::from_fn(5, 3, |r, k| {
            let (r, k) = (r as f64, k as f64);
            c(libm::sin(1.3 * r + 2.1 * k + 0.2 * r * k), libm::cos(0.7 * r * k + k))
        });
        let x = [c(1.0, -2.0), c(0.5, 0.0), c(0.0, 3.0)];
        let b = a.mul_vec(&x).unwrap();
        let got = least_squares(&a, &b).unwrap();
        assert!(crate::max_abs_diff(&got, &x) < 1e-12);
    }

    #[test]
    fn least_squares_normal_equations_hold() {
        let a = Matrix::from_fn(4, 2, |r, k| c(1.0 + r as f64, if k == 0 { 1.0 } else { r as f64 }));
        let b = [c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(-1.0, 1.0)];
        let x = least_squares(&a, &b).unwrap();
        let ax = a.mul_vec(&x).unwrap();
        let res: Vec<Complex> = b.iter().zip(&ax).map(|(p, q)| p - q).collect();
        let grad = a.adjoint().mul_vec(&res).unwrap();
        assert!(crate::norm_inf(&grad) < 1e-12);
    }

    #[test]
    fn least_squares_rejects_rank_deficient() {
        let a = Matrix::from_fn(3, 2, |r, _| c(r as f64 + 1.0, 0.0));
        assert!(matches!(least_squares(&a, &[ZERO; 3]), Err(Error::IllConditioned { .. })));
    }
}
