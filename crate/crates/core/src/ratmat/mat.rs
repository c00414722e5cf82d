use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Poly, Rat, Subspace};
use crate::error::{LabError, Result};

/// Dense row-major matrix over the rationals.
///
/// A `rows x cols` matrix is a linear map `Q^cols -> Q^rows` acting on column
/// vectors. Arithmetic operators panic on shape mismatch; the fallible entry
/// points (`try_mul`, `new`, ...) report it as an error instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LabError::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[Rat]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows; an empty row list gives a `0 x cols` matrix
    /// only through [`Mat::zeros`], so here it yields `0 x 0`.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(LabError::DimensionMismatch(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal constructor, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| Rat::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(converted).expect("ragged integer literal")
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    /// Assembles a block matrix. Every block in a block-row must share its row
    /// count and every block in a block-column its column count.
    pub fn from_blocks(blocks: &[Vec<Mat>]) -> Result<Self> {
        let Some(first_row) = blocks.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let col_widths: Vec<usize> = first_row.iter().map(Mat::cols).collect();
        let total_cols: usize = col_widths.iter().sum();
        let mut out_rows = Vec::new();
        for (bi, brow) in blocks.iter().enumerate() {
            if brow.len() != col_widths.len() {
                return Err(LabError::DimensionMismatch(format!(
                    "block row {bi} has {} blocks, expected {}",
                    brow.len(),
                    col_widths.len()
                )));
            }
            let height = brow[0].rows;
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != height || b.cols != col_widths[bj] {
                    return Err(LabError::DimensionMismatch(format!(
                        "block ({bi},{bj}) is {}x{}, expected {height}x{}",
                        b.rows, b.cols, col_widths[bj]
                    )));
                }
            }
            for i in 0..height {
                let mut row = Vec::with_capacity(total_cols);
                for b in brow {
                    row.extend_from_slice(b.row(i));
                }
                out_rows.push(row);
            }
        }
        let rows = out_rows.len();
        Ok(Self {
            rows,
            cols: total_cols,
            data: out_rows.into_iter().flatten().collect(),
        })
    }

    pub fn block_diag(a: &Mat, b: &Mat) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
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

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LabError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &Rat) -> Self {
        assert!(self.is_square(), "shift of a non-square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = &m.data[i * self.cols + i] - lambda;
            m.data[i * self.cols + i] = v;
        }
        m
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn try_mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(LabError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Mat {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Mat::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `[I, M, M^2, ..., M^k]`.
    pub fn powers(&self, k: usize) -> Vec<Mat> {
        assert!(self.is_square(), "powers of a non-square matrix");
        let mut out = Vec::with_capacity(k + 1);
        out.push(Mat::identity(self.rows));
        for i in 0..k {
            let next = &out[i] * self;
            out.push(next);
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = row_reduce(&mut rows, self.cols);
        let m = Mat {
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Rat>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rat::zero(); self.cols];
                v[free] = Rat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, free).clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, basis)
    }

    pub fn image(&self) -> Subspace {
        let t = self.transpose();
        Subspace::span(self.rows, t.to_rows())
    }

    pub fn determinant(&self) -> Result<Rat> {
        let n = self.ensure_square()?;
        let mut rows = self.to_rows();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = &rows[r][col] / &pivot;
                let (top, bottom) = rows.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &f * y;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Mat> {
        let n = self.ensure_square().ok()?;
        let mut rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                r
            })
            .collect();
        let pivots = row_reduce(&mut rows, 2 * n);
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Some(Mat {
            rows: n,
            cols: n,
            data,
        })
    }

    /// A solution `X` of `self * X = rhs` (free variables set to zero), or
    /// `None` if some column of `rhs` is outside the column space.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "right-hand side row mismatch");
        let n = self.cols;
        let mut rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(rhs.row(i));
                r
            })
            .collect();
        let pivots = row_reduce(&mut rows, n);
        if rows[pivots.len()..]
            .iter()
            .any(|r| r[n..].iter().any(|v| !v.is_zero()))
        {
            return None;
        }
        let mut x = Mat::zeros(n, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, rows[r][n + j].clone());
            }
        }
        Some(x)
    }

    /// `det(xI - M)` via the Faddeev-LeVerrier recurrence (exact over Q).
    pub fn charpoly(&self) -> Result<Poly> {
        let n = self.ensure_square()?;
        let mut h: Vec<Vec<Rat>> = self.to_rows();
        // Similarity to upper Hessenberg form by elementary eliminations.
        for m in 1..n {
            let Some(p) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if p != m {
                h.swap(p, m);
                for row in h.iter_mut() {
                    row.swap(p, m);
                }
            }
            let pivot = h[m][m - 1].recip();
            for j in m + 1..n {
                if h[j][m - 1].is_zero() {
                    continue;
                }
                let u = &h[j][m - 1] * &pivot;
                let (top, bottom) = h.split_at_mut(j);
                for (x, y) in bottom[0].iter_mut().zip(&top[m]) {
                    if !y.is_zero() {
                        *x -= &u * y;
                    }
                }
                for row in h.iter_mut() {
                    if !row[j].is_zero() {
                        let d = &u * &row[j];
                        row[m] += d;
                    }
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}
        let x = Poly::new(vec![Rat::zero(), Rat::one()]);
        let mut p = vec![Poly::new(vec![Rat::one()])];
        for k in 0..n {
            let mut next = &(&x - &Poly::constant(h[k][k].clone())) * &p[k];
            let mut prod = Rat::one();
            for i in (0..k).rev() {
                prod *= &h[i + 1][i];
                if prod.is_zero() {
                    break;
                }
                let coef = &prod * &h[i][k];
                if !coef.is_zero() {
                    next = &next - &p[i].scale(&coef);
                }
            }
            p.push(next);
        }
        Ok(p.pop().expect("at least the constant"))
    }

    /// Smallest `k` with `M^k = 0`; `None` if `M` is not nilpotent.
    /// The `0 x 0` matrix has degree 0.
    pub fn nilpotency_degree(&self) -> Option<usize> {
        let n = self.ensure_square().ok()?;
        if n == 0 {
            return Some(0);
        }
        let mut p = self.clone();
        for k in 1..=n {
            if p.is_zero() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_degree().is_some()
    }
}

/// In-place reduction to RREF over the first `ncols` columns. Returns the
/// pivot columns; rows past `pivots.len()` are zero afterwards.
///
/// Elimination runs on primitive integer rows (each row scaled by the lcm of
/// its denominators, then divided by its content); only the final
/// normalisation by the pivots goes back to rationals.
pub(crate) fn row_reduce(rows: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let m = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut ints: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= m {
            break;
        }
        let Some(p) = (r..m)
            .filter(|&i| !ints[i][col].is_zero())
            .min_by_key(|&i| ints[i][col].bits())
        else {
            continue;
        };
        ints.swap(p, r);
        let (head, tail) = ints.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        let a = pivot_row[col].clone();
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let g = a.gcd(&other[col]);
            let fa = &a / &g;
            let fb = &other[col] / &g;
            for c in 0..width {
                if !fa.is_one() && !other[c].is_zero() {
                    other[c] *= &fa;
                }
                if !pivot_row[c].is_zero() {
                    other[c] -= &fb * &pivot_row[c];
                }
            }
            make_primitive(other);
        }
        pivots.push(col);
        r += 1;
    }
    for (i, (row, ints)) in rows.iter_mut().zip(ints).enumerate() {
        let d = match pivots.get(i) {
            Some(&pc) => ints[pc].clone(),
            None => BigInt::one(),
        };
        for (x, n) in row.iter_mut().zip(ints) {
            *x = Rat::new(n, d.clone());
        }
    }
    pivots
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn mul(self, rhs: &'a Mat) -> Mat {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn add(self, rhs: &'a Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in addition"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn sub(self, rhs: &'a Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in subtraction"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows().iter().map(|r| {
            r.iter().map(ToString::to_string).collect::<Vec<_>>()
        }))
        .finish()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
