//! Dense linear algebra for the eigenproblems: LU, the symmetric
//! tridiagonal QL method, and Hessenberg QR with inverse iteration.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    n_rows: usize,
    n_cols: usize,
    data: Vec<T>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, n_cols, data: vec![T::zero(); n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_diag(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_row_major(n_rows: usize, n_cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n_rows * n_cols {
            return Err(Error::Dimension(format!("{} entries for a {n_rows}x{n_cols} matrix", data.len())));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("matrix entries must be finite".into()));
        }
        Ok(Self { n_rows, n_cols, data })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Self::from_row_major(rows.len(), n_cols, rows.concat())
    }

    /// Matrix whose column `j` is `col(j)`.
    pub fn from_columns(n_rows: usize, n_cols: usize, mut col: impl FnMut(usize) -> Result<Vec<T>>) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols);
        for j in 0..n_cols {
            let c = col(j)?;
            if c.len() != n_rows {
                return Err(Error::Dimension(format!("column {j} has {} entries, expected {n_rows}", c.len())));
            }
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n_rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.n_rows.min(self.n_cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let mut out = Self::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.n_cols..(i + 1) * other.n_cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d = *d + a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n_cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", x.len(), self.n_cols)));
        }
        Ok((0..self.n_rows).map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum()).collect())
    }

    pub fn mul_complex_vec(&self, x: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if x.len() != self.n_cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", x.len(), self.n_cols)));
        }
        Ok((0..self.n_rows)
            .map(|i| self.row(i).iter().zip(x).fold(Complex::new(T::zero(), T::zero()), |acc, (&a, &b)| acc + b * a))
            .collect())
    }

    /// `D_l · self · D_r` for diagonal `D_l`, `D_r`.
    pub fn scale_rows_cols(&self, left: &[T], right: &[T]) -> Result<Self> {
        if left.len() != self.n_rows || right.len() != self.n_cols {
            return Err(Error::Dimension("diagonal scaling of the wrong length".into()));
        }
        let mut out = self.clone();
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out[(i, j)] = left[i] * self[(i, j)] * right[j];
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols) {
            return Err(Error::Dimension("cannot add matrices of different shapes".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Ok(Self { n_rows: self.n_rows, n_cols: self.n_cols, data })
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> T {
        (0..self.n_rows).map(|i| self.row(i).iter().map(|x| x.abs()).sum::<T>()).fold(T::zero(), T::max)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    /// `‖M - Mᵀ‖∞ / ‖M‖∞`.
    pub fn symmetry_defect(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("symmetry defect of a non-square matrix".into()));
        }
        let n = self.norm_inf();
        let d = (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| (self[(i, j)] - self[(j, i)]).abs()).sum::<T>())
            .fold(T::zero(), T::max);
        Ok(if n > T::zero() { d / n } else { d })
    }

    fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n_rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n_cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n_cols + j]
    }
}

/// LU factorization with partial pivoting.
#[derive(Clone, Debug)]
pub struct Lu<T> {
    lu: DenseMatrix<T>,
    perm: Vec<usize>,
}

impl<T: Real> Lu<T> {
    /// Fails when a pivot falls below `rel_tol` times the largest entry.
    pub fn new(a: &DenseMatrix<T>, rel_tol: T) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension("LU of a non-square matrix".into()));
        }
        let n = a.n_rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let floor = rel_tol * a.max_abs();
        for k in 0..n {
            let p = (k..n).max_by(|&i, &j| lu[(i, k)].abs().partial_cmp(&lu[(j, k)].abs()).unwrap()).unwrap();
            if !(lu[(p, k)].abs() > floor) {
                return Err(Error::SingularPivot(format!("column {k} has no pivot above {floor:e}")));
            }
            if p != k {
                for j in 0..n {
                    lu.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let piv = lu[(k, k)];
            for i in k + 1..n {
                let l = lu[(i, k)] / piv;
                lu[(i, k)] = l;
                if l != T::zero() {
                    for j in k + 1..n {
                        let u = lu[(k, j)];
                        lu[(i, j)] = lu[(i, j)] - l * u;
                    }
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.lu.n_rows();
        if b.len() != n {
            return Err(Error::Dimension(format!("right-hand side of length {} for order {n}", b.len())));
        }
        let mut x: Vec<T> = self.perm.iter().map(|&i| b[i]).collect();
        for i in 0..n {
            for k in 0..i {
                x[i] = x[i] - self.lu[(i, k)] * x[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                x[i] = x[i] - self.lu[(i, k)] * x[k];
            }
            x[i] = x[i] / self.lu[(i, i)];
        }
        Ok(x)
    }

    /// `A⁻¹ M`, column by column.
    pub fn solve_matrix(&self, m: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
        DenseMatrix::from_columns(m.n_rows(), m.n_cols(), |j| self.solve(&m.column(j)))
    }
}

/// Eigenpairs of a real symmetric matrix, ascending.
#[derive(Clone, Debug)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: DenseMatrix<T>,
}

/// Householder tridiagonalization followed by the implicit QL method.
pub fn symmetric_eigen<T: Real>(a: &DenseMatrix<T>) -> Result<SymmetricEigen<T>> {
    if !a.is_square() {
        return Err(Error::Dimension("eigenproblem of a non-square matrix".into()));
    }
    let n = a.n_rows();
    if n == 0 {
        return Ok(SymmetricEigen { values: vec![], vectors: DenseMatrix::zeros(0, 0) });
    }
    let mut v = a.to_rows();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tridiagonalize(&mut v, &mut d, &mut e);
    tridiagonal_ql(&mut v, &mut d, &mut e)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values = order.iter().map(|&k| d[k]).collect();
    let vectors = DenseMatrix::from_columns(n, n, |j| Ok((0..n).map(|i| v[i][order[j]]).collect()))?;
    Ok(SymmetricEigen { values, vectors })
}

fn tridiagonalize<T: Real>(v: &mut [Vec<T>], d: &mut [T], e: &mut [T]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v[n - 1][j];
    }
    for i in (1..n).rev() {
        let scale: T = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = T::zero();
        if scale == T::zero() {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = T::zero();
                v[j][i] = T::zero();
            }
        } else {
            for x in d[..i].iter_mut() {
                *x = *x / scale;
                h = h + *x * *x;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > T::zero() {
                g = -g;
            }
            e[i] = scale * g;
            h = h - f * g;
            d[i - 1] = f - g;
            for x in e[..i].iter_mut() {
                *x = T::zero();
            }
            for j in 0..i {
                let f = d[j];
                v[j][i] = f;
                let mut g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g = g + v[k][j] * d[k];
                    e[k] = e[k] + v[k][j] * f;
                }
                e[j] = g;
            }
            let mut f = T::zero();
            for j in 0..i {
                e[j] = e[j] / h;
                f = f + e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] = e[j] - hh * d[j];
            }
            for j in 0..i {
                let (f, g) = (d[j], e[j]);
                for k in j..i {
                    v[k][j] = v[k][j] - (f * e[k] + g * d[k]);
                }
                d[j] = v[i - 1][j];
                v[i][j] = T::zero();
            }
        }
        d[i] = h;
    }
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = T::one();
        let h = d[i + 1];
        if h != T::zero() {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let g: T = (0..=i).map(|k| v[k][i + 1] * v[k][j]).sum();
                for k in 0..=i {
                    v[k][j] = v[k][j] - g * d[k];
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = T::zero();
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = T::zero();
    }
    v[n - 1][n - 1] = T::one();
    e[0] = T::zero();
}

fn tridiagonal_ql<T: Real>(v: &mut [Vec<T>], d: &mut [T], e: &mut [T]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    let mut f = T::zero();
    let mut tst1 = T::zero();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 60 {
                    return Err(Error::Eigensolver(format!("QL iteration stalled at index {l}")));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (T::lit(2.0) * e[l]);
                let mut r = p.hypot(T::one());
                if p < T::zero() {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for x in d[l + 2..].iter_mut() {
                    *x = *x - h;
                }
                f = f + h;
                p = d[m];
                let (mut c, mut c2, mut c3) = (T::one(), T::one(), T::one());
                let el1 = e[l + 1];
                let (mut s, mut s2) = (T::zero(), T::zero());
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut() {
                        let h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if !(e[l].abs() > eps * tst1) {
                    break;
                }
            }
        }
        d[l] = d[l] + f;
        e[l] = T::zero();
    }
    Ok(())
}

/// Eigenpairs of a real general matrix.
#[derive(Clone, Debug)]
pub struct GeneralEigen<T> {
    pub values: Vec<Complex<T>>,
    /// `vectors[k]` belongs to `values[k]`, scaled to unit max-modulus.
    pub vectors: Vec<Vec<Complex<T>>>,
}

/// Hessenberg reduction, Francis double-shift QR for the eigenvalues, and
/// inverse iteration on the Hessenberg form for the eigenvectors.
///
/// Eigenvalues are sorted by real part, then imaginary part.
pub fn general_eigen<T: Real>(a: &DenseMatrix<T>) -> Result<GeneralEigen<T>> {
    if !a.is_square() {
        return Err(Error::Dimension("eigenproblem of a non-square matrix".into()));
    }
    let n = a.n_rows();
    if n == 0 {
        return Ok(GeneralEigen { values: vec![], vectors: vec![] });
    }
    let mut h = a.to_rows();
    let q = hessenberg(&mut h);
    let mut values = hessenberg_qr(h.clone())?;
    values.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap()));
    let norm = h.iter().map(|r| r.iter().map(|x| x.abs()).sum::<T>()).fold(T::zero(), T::max).max(T::min_positive_value());
    let mut vectors = Vec::with_capacity(n);
    for &lam in &values {
        let y = inverse_iteration(&h, lam, norm);
        let mut x: Vec<Complex<T>> =
            (0..n).map(|i| (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + y[k] * q[i][k])).collect();
        normalize_max(&mut x);
        vectors.push(x);
    }
    Ok(GeneralEigen { values, vectors })
}

fn normalize_max<T: Real>(x: &mut [Complex<T>]) {
    let big = x.iter().copied().max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
    if let Some(big) = big {
        if big.norm() > T::zero() {
            let inv = big.inv();
            for v in x.iter_mut() {
                *v = *v * inv;
            }
        }
    }
}

/// Reduces `h` in place and returns the orthogonal `Q` with `A = Q H Qᵀ`.
fn hessenberg<T: Real>(h: &mut [Vec<T>]) -> Vec<Vec<T>> {
    let n = h.len();
    let mut ort = vec![T::zero(); n];
    let high = n - 1;
    for m in 1..high {
        let scale: T = (m..=high).map(|i| h[i][m - 1].abs()).sum();
        if scale == T::zero() {
            continue;
        }
        let mut hh = T::zero();
        for i in (m..=high).rev() {
            ort[i] = h[i][m - 1] / scale;
            hh = hh + ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > T::zero() {
            g = -g;
        }
        hh = hh - ort[m] * g;
        ort[m] = ort[m] - g;
        for j in m..n {
            let f = (m..=high).rev().map(|i| ort[i] * h[i][j]).sum::<T>() / hh;
            for i in m..=high {
                h[i][j] = h[i][j] - f * ort[i];
            }
        }
        for row in h.iter_mut() {
            let f = (m..=high).rev().map(|j| ort[j] * row[j]).sum::<T>() / hh;
            for j in m..=high {
                row[j] = row[j] - f * ort[j];
            }
        }
        ort[m] = scale * ort[m];
        h[m][m - 1] = scale * g;
    }
    let mut v = vec![vec![T::zero(); n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    for m in (1..high).rev() {
        if h[m][m - 1] == T::zero() {
            continue;
        }
        for i in m + 1..=high {
            ort[i] = h[i][m - 1];
        }
        for j in m..=high {
            let g = (m..=high).map(|i| ort[i] * v[i][j]).sum::<T>();
            let g = (g / ort[m]) / h[m][m - 1];
            for i in m..=high {
                v[i][j] = v[i][j] + g * ort[i];
            }
        }
    }
    for (i, row) in h.iter_mut().enumerate() {
        for x in row.iter_mut().take(i.saturating_sub(1)) {
            *x = T::zero();
        }
    }
    v
}

/// Eigenvalues of an upper Hessenberg matrix by the Francis double-shift QR step.
fn hessenberg_qr<T: Real>(mut a: Vec<Vec<T>>) -> Result<Vec<Complex<T>>> {
    let n = a.len();
    let eps = T::epsilon();
    let two = T::lit(2.0);
    let mut out = vec![Complex::new(T::zero(), T::zero()); n];
    let mut anorm = T::zero();
    for (i, row) in a.iter().enumerate() {
        for x in row.iter().skip(i.saturating_sub(1)) {
            anorm = anorm + x.abs();
        }
    }
    let mut nn = n as isize - 1;
    let mut t = T::zero();
    let at = |a: &Vec<Vec<T>>, i: isize, j: isize| a[i as usize][j as usize];
    while nn >= 0 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 1 {
                let mut s = at(&a, l - 1, l - 1).abs() + at(&a, l, l).abs();
                if s == T::zero() {
                    s = anorm;
                }
                if at(&a, l, l - 1).abs() <= eps * s {
                    a[l as usize][(l - 1) as usize] = T::zero();
                    break;
                }
                l -= 1;
            }
            let mut x = at(&a, nn, nn);
            if l == nn {
                out[nn as usize] = Complex::new(x + t, T::zero());
                nn -= 1;
                break;
            }
            let mut y = at(&a, nn - 1, nn - 1);
            let mut w = at(&a, nn, nn - 1) * at(&a, nn - 1, nn);
            if l == nn - 1 {
                let p = (y - x) / two;
                let q = p * p + w;
                let z = q.abs().sqrt();
                x = x + t;
                if q >= T::zero() {
                    let z = p + z.copysign(p);
                    let hi = x + z;
                    let lo = if z != T::zero() { x - w / z } else { hi };
                    out[(nn - 1) as usize] = Complex::new(hi, T::zero());
                    out[nn as usize] = Complex::new(lo, T::zero());
                } else {
                    out[(nn - 1) as usize] = Complex::new(x + p, -z);
                    out[nn as usize] = Complex::new(x + p, z);
                }
                nn -= 2;
                break;
            }
            if its >= 60 {
                return Err(Error::Eigensolver(format!("QR iteration stalled at index {nn}")));
            }
            if its > 0 && its % 10 == 0 {
                t = t + x;
                for i in 0..=nn as usize {
                    a[i][i] = a[i][i] - x;
                }
                let s = at(&a, nn, nn - 1).abs() + at(&a, nn - 1, nn - 2).abs();
                x = T::lit(0.75) * s;
                y = x;
                w = T::lit(-0.4375) * s * s;
            }
            its += 1;
            let mut m = nn - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = at(&a, m, m);
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / at(&a, m + 1, m) + at(&a, m, m + 1);
                q = at(&a, m + 1, m + 1) - z - rr - ss;
                r = at(&a, m + 2, m + 1);
                let s = p.abs() + q.abs() + r.abs();
                p = p / s;
                q = q / s;
                r = r / s;
                if m == l {
                    break;
                }
                let u = at(&a, m, m - 1).abs() * (q.abs() + r.abs());
                let v = p.abs() * (at(&a, m - 1, m - 1).abs() + z.abs() + at(&a, m + 1, m + 1).abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                a[i as usize][(i - 2) as usize] = T::zero();
                if i != m + 2 {
                    a[i as usize][(i - 3) as usize] = T::zero();
                }
            }
            let mut k = m;
            while k <= nn - 1 {
                let mut xk = T::zero();
                if k != m {
                    p = at(&a, k, k - 1);
                    q = at(&a, k + 1, k - 1);
                    r = if k != nn - 1 { at(&a, k + 2, k - 1) } else { T::zero() };
                    xk = p.abs() + q.abs() + r.abs();
                    if xk != T::zero() {
                        p = p / xk;
                        q = q / xk;
                        r = r / xk;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s != T::zero() {
                    if k == m {
                        if l != m {
                            a[k as usize][(k - 1) as usize] = -at(&a, k, k - 1);
                        }
                    } else {
                        a[k as usize][(k - 1) as usize] = -s * xk;
                    }
                    p = p + s;
                    let (xx, yy, zz) = (p / s, q / s, r / s);
                    q = q / p;
                    r = r / p;
                    let (ku, nnu) = (k as usize, nn as usize);
                    for j in ku..=nnu {
                        let mut pp = a[ku][j] + q * a[ku + 1][j];
                        if k != nn - 1 {
                            pp = pp + r * a[ku + 2][j];
                            a[ku + 2][j] = a[ku + 2][j] - pp * zz;
                        }
                        a[ku + 1][j] = a[ku + 1][j] - pp * yy;
                        a[ku][j] = a[ku][j] - pp * xx;
                    }
                    let mmin = if nn < k + 3 { nn } else { k + 3 };
                    for i in l as usize..=mmin as usize {
                        let mut pp = xx * a[i][ku] + yy * a[i][ku + 1];
                        if k != nn - 1 {
                            pp = pp + zz * a[i][ku + 2];
                            a[i][ku + 2] = a[i][ku + 2] - pp * r;
                        }
                        a[i][ku + 1] = a[i][ku + 1] - pp * q;
                        a[i][ku] = a[i][ku] - pp;
                    }
                }
                k += 1;
            }
            if l >= nn - 1 {
                break;
            }
        }
    }
    Ok(out)
}

/// Solves `(H - μI) y = b` repeatedly with an LU that pivots only between
/// adjacent rows, which keeps the Hessenberg structure.
fn inverse_iteration<T: Real>(h: &[Vec<T>], mu: Complex<T>, norm: T) -> Vec<Complex<T>> {
    let n = h.len();
    let zero = Complex::new(T::zero(), T::zero());
    let tiny = T::epsilon() * norm;
    let mut u: Vec<Vec<Complex<T>>> = h
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { Complex::new(x, T::zero()) - mu } else { Complex::new(x, T::zero()) })
                .collect()
        })
        .collect();
    let mut swapped = vec![false; n];
    let mut mult = vec![zero; n];
    for k in 0..n.saturating_sub(1) {
        if u[k + 1][k].norm() > u[k][k].norm() {
            u.swap(k, k + 1);
            swapped[k] = true;
        }
        if u[k][k].norm() <= tiny {
            u[k][k] = Complex::new(tiny, T::zero());
        }
        let l = u[k + 1][k] / u[k][k];
        mult[k] = l;
        u[k + 1][k] = zero;
        if l != zero {
            let (top, bottom) = u.split_at_mut(k + 1);
            for (d, &s) in bottom[0][k + 1..].iter_mut().zip(&top[k][k + 1..]) {
                *d = *d - l * s;
            }
        }
    }
    if u[n - 1][n - 1].norm() <= tiny {
        u[n - 1][n - 1] = Complex::new(tiny, T::zero());
    }
    let mut y = vec![Complex::new(T::one(), T::zero()); n];
    for _ in 0..3 {
        for k in 0..n.saturating_sub(1) {
            if swapped[k] {
                y.swap(k, k + 1);
            }
            let s = y[k];
            y[k + 1] = y[k + 1] - mult[k] * s;
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in i + 1..n {
                acc = acc - u[i][j] * y[j];
            }
            y[i] = acc / u[i][i];
        }
        normalize_max(&mut y);
    }
    y
}
