//! Exact dense matrices and echelon-form subspaces over [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i * n + i] = c.clone();
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            Scalar::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if (i == j && *v != c) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| if v.is_zero() { Scalar::zero() } else { v * c })
                .collect(),
        }
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    m.set(j, i, v.conj());
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let nz: Vec<usize> = (0..v.len()).filter(|&j| !v[j].is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for &j in &nz {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let rhs_nz: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| {
                (0..rhs.cols)
                    .filter(|&j| !rhs.get(k, j).is_zero())
                    .collect()
            })
            .collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, cols) in rhs_nz.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in cols {
                    let p = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += &p;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        (0..e).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn rank(&self) -> usize {
        Subspace::from_vectors(self.cols, (0..self.rows).map(|i| self.row(i).to_vec())).dim()
    }

    /// Characteristic polynomial `det(tI - M)`, coefficients from the constant term up.
    pub fn charpoly(&self) -> Vec<Scalar> {
        // Faddeev-LeVerrier; valid in characteristic zero.
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            let prev = &coeffs[n - k + 1];
            mk = &(self * &mk) + &Matrix::scalar(n, prev.clone());
            let am = self * &mk;
            coeffs[n - k] = -(&am.trace() * &Scalar::frac(1, k as i64));
        }
        coeffs
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

type SparseRow = BTreeMap<usize, Scalar>;

/// Incremental row echelon form over sparse rows; rows are normalized to a
/// leading 1 but only fully reduced on [`Echelon::finish`].
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(width: usize) -> Echelon {
        Echelon {
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .map(|(&k, _)| k)
                .find(|k| self.rows.contains_key(k));
            let Some(k) = next else { break };
            let f = row.remove(&k).expect("key present");
            for (&j, v) in self.rows[&k].iter().skip(1) {
                let e = row.entry(j).or_default();
                *e -= &(&f * v);
                if e.is_zero() {
                    row.remove(&j);
                }
            }
            cursor = k + 1;
        }
        row
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&p, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseRow = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        self.insert(to_sparse(v))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(to_sparse(v)).is_empty()
    }

    /// Fully reduced rows, ordered by pivot.
    pub fn finish(self) -> (Vec<usize>, Vec<SparseRow>) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: Vec<SparseRow> = self.rows.into_values().collect();
        for a in (0..rows.len()).rev() {
            // only rows with smaller pivots can contain this pivot column
            let (before, rest) = rows.split_at_mut(a);
            let pivot_row = &rest[0];
            let p = pivots[a];
            for r in before.iter_mut() {
                if let Some(f) = r.remove(&p) {
                    for (&j, v) in pivot_row.iter().skip(1) {
                        let e = r.entry(j).or_default();
                        *e -= &(&f * v);
                        if e.is_zero() {
                            r.remove(&j);
                        }
                    }
                }
            }
        }
        (pivots, rows)
    }

    /// Basis of the solutions `v` with `row . v = 0` for all inserted rows.
    pub fn null_space(self) -> Vec<Vec<Scalar>> {
        let width = self.width;
        let (pivots, rows) = self.finish();
        let mut is_pivot = vec![false; width];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..width).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Scalar::zero(); width];
            v[free] = Scalar::one();
            for (p, row) in pivots.iter().zip(&rows) {
                if let Some(c) = row.get(&free) {
                    v[*p] = -c;
                }
            }
            out.push(v);
        }
        out
    }
}

fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

fn to_dense(width: usize, row: &SparseRow) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); width];
    for (&j, x) in row {
        v[j] = x.clone();
    }
    v
}

/// A subspace of `Scalar^ambient`, stored as a reduced echelon basis: each basis
/// vector has a 1 at its pivot and every other basis vector vanishes there.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<Scalar>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            pivots: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        let mut e = Echelon::new(ambient);
        for i in 0..ambient {
            e.insert(SparseRow::from([(i, Scalar::one())]));
        }
        Subspace::from_echelon(e)
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert_dense(&v);
        }
        Subspace::from_echelon(e)
    }

    fn from_echelon(e: Echelon) -> Subspace {
        let ambient = e.width;
        let (pivots, rows) = e.finish();
        Subspace {
            ambient,
            pivots,
            basis: rows.iter().map(|r| to_dense(ambient, r)).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= &(c * x);
                }
            }
        }
        rest.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_vectors(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // a . A = b . B, solved as the kernel of [A^T | -B^T]
        let p = self.dim();
        let mut cols: Vec<Vec<Scalar>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.ambient, &cols);
        let ker = kernel_vectors(&m);
        let vecs = ker.into_iter().map(|k| {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (a, b) in k[..p].iter().zip(&self.basis) {
                if a.is_zero() {
                    continue;
                }
                for (t, x) in v.iter_mut().zip(b) {
                    if !x.is_zero() {
                        *t += &(a * x);
                    }
                }
            }
            v
        });
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// `dim(self / sub)`; `sub` must be contained in `self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        self.check_ambient(sub)?;
        if !self.contains_subspace(sub) {
            return Err(Error::Unstable("quotient by a non-subspace".into()));
        }
        Ok(self.dim() - sub.dim())
    }

    /// Vectors of `self` whose classes form a basis of `self / sub`.
    pub fn complement_in(&self, sub: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.quotient_dim(sub)?;
        let mut e = Echelon::new(self.ambient);
        for v in &sub.basis {
            e.insert_dense(v);
        }
        Ok(self
            .basis
            .iter()
            .filter(|v| e.insert_dense(v))
            .cloned()
            .collect())
    }

    /// Matrix of `m` restricted to this subspace, in the echelon basis.
    pub fn restrict(&self, m: &Matrix) -> Result<Matrix> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: m.rows(),
            });
        }
        let cols = self
            .basis
            .iter()
            .map(|b| {
                self.coordinates(&m.apply(b))
                    .ok_or_else(|| Error::Unstable("subspace is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }

    /// Matrix of the map induced by `m` on `self / sub`, in the basis given by
    /// [`Self::complement_in`]. Both subspaces must be `m`-stable.
    pub fn induced_on_quotient(&self, sub: &Subspace, m: &Matrix) -> Result<Matrix> {
        let reps = self.complement_in(sub)?;
        let mut full: Vec<Vec<Scalar>> = sub.basis.clone();
        full.extend(reps.iter().cloned());
        let s = sub.dim();
        let frame = Matrix::from_columns(self.ambient, &full);
        let mut cols = Vec::with_capacity(reps.len());
        for r in &reps {
            let image = m.apply(r);
            let coords = solve_columns(&frame, &image)
                .ok_or_else(|| Error::Unstable("quotient is not invariant".into()))?;
            cols.push(coords[s..].to_vec());
        }
        if sub.basis.iter().any(|v| !sub.contains(&m.apply(v))) {
            return Err(Error::Unstable("submodule is not invariant".into()));
        }
        Ok(Matrix::from_columns(reps.len(), &cols))
    }
}

fn kernel_vectors(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    e.null_space()
}

/// Solves `frame * x = v` for linearly independent columns, if possible.
fn solve_columns(frame: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = frame.cols();
    let mut cols: Vec<Vec<Scalar>> = (0..k).map(|j| frame.column(j)).collect();
    cols.push(v.iter().map(|x| -x).collect());
    let aug = Matrix::from_columns(frame.rows(), &cols);
    let ker = kernel_vectors(&aug);
    let sol = ker.into_iter().find(|z| !z[k].is_zero())?;
    let inv = sol[k].inv().ok()?;
    Some(sol[..k].iter().map(|x| x * &inv).collect())
}

pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::from_vectors(m.cols(), kernel_vectors(m))
}

pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_vectors(m.rows(), (0..m.cols()).map(|j| m.column(j)))
}

/// `sum_j dim ker (m - t)^j` stabilized: the algebraic multiplicity of `t`.
pub fn generalized_eigenspace_dim(m: &Matrix, t: &Scalar) -> usize {
    let shifted = m - &Matrix::scalar(m.rows(), t.clone());
    let mut power = shifted.clone();
    let mut last = kernel(&power).dim();
    loop {
        if last == 0 || last == m.rows() {
            return last;
        }
        power = &power * &shifted;
        let d = kernel(&power).dim();
        if d == last {
            return d;
        }
        last = d;
    }
}
