//! Exact dense linear algebra over the rationals.
//!
//! Every morphism between finite-dimensional spaces is a [`RatMatrix`] in fixed
//! bases. Tensor products order their basis with the left factor slowest, so the
//! basis vector `v_i ⊗ w_j` of `V ⊗ W` sits at index `i * dim(W) + j`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// `Σ coeffs[j] * vectors[j]`.
pub fn combine(len: usize, coeffs: &[Rational], vectors: &[Vec<Rational>]) -> Vec<Rational> {
    let mut out = zero_vec(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        add_scaled(&mut out, c, v);
    }
    out
}

/// Tensor product of two coordinate vectors.
pub fn tensor_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = zero_vec(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl core::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        RatMatrix { rows: rows.len(), cols, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Builds a matrix column by column; `col(j)` must have length `rows`.
    pub fn from_columns(rows: usize, cols: usize, mut col: impl FnMut(usize) -> Vec<Rational>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            let c = col(j);
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn row_vector(v: &[Rational]) -> Self {
        RatMatrix { rows: 1, cols: v.len(), entries: v.to_vec() }
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        RatMatrix { rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Matrix product; skips zero entries, which dominate the structured maps used here.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let acc = &mut out.entries[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                add_scaled(acc, a, other.row(k));
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        Ok(self.mul(other))
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = zero_vec(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self.entries[i * self.cols + k];
                if !a.is_zero() {
                    out[i] += a * x;
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "shape mismatch in hstack");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "shape mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        RatMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert_dense(self.row(i));
        }
        ech.rank()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r * n + c].is_zero())?;
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                    inv.swap(p * n + j, c * n + j);
                }
            }
            let piv = a[c * n + c].clone();
            for j in 0..n {
                a[c * n + j] /= &piv;
                inv[c * n + j] /= &piv;
            }
            for r in 0..n {
                if r == c || a[r * n + c].is_zero() {
                    continue;
                }
                let f = a[r * n + c].clone();
                for j in 0..n {
                    if !a[c * n + j].is_zero() {
                        let t = &f * &a[c * n + j];
                        a[r * n + j] -= t;
                    }
                    if !inv[c * n + j].is_zero() {
                        let t = &f * &inv[c * n + j];
                        inv[r * n + j] -= t;
                    }
                }
            }
        }
        Some(RatMatrix { rows: n, cols: n, entries: inv })
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[c * n + c].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let f = &a[r * n + c] / &piv;
                for j in c..n {
                    if !a[c * n + j].is_zero() {
                        let t = &f * &a[c * n + j];
                        a[r * n + j] -= t;
                    }
                }
            }
        }
        det
    }

    /// Largest absolute numerator or denominator; used to keep sampled data small in tests.
    pub fn height(&self) -> BigInt {
        self.entries
            .iter()
            .map(|x| core::cmp::max(x.numer().abs(), x.denom().clone()))
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

/// Kronecker product, left factor slowest.
pub fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let mut out = RatMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    let oc = out.cols;
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out.entries[(i * b.rows + k) * oc + j * b.cols + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Applies `f` to the middle factor of a vector in `L ⊗ M ⊗ R`, where `left = dim L`
/// and `right = dim R`; `dim M` is `f.cols()`.
pub fn apply_in_slot(v: &[Rational], left: usize, right: usize, f: &RatMatrix) -> Vec<Rational> {
    let mi = f.cols();
    let mo = f.rows();
    assert_eq!(v.len(), left * mi * right, "slot shape mismatch");
    let mut out = zero_vec(left * mo * right);
    for l in 0..left {
        for m in 0..mi {
            for r in 0..right {
                let x = &v[(l * mi + m) * right + r];
                if x.is_zero() {
                    continue;
                }
                for o in 0..mo {
                    let c = &f[(o, m)];
                    if !c.is_zero() {
                        out[(l * mo + o) * right + r] += c * x;
                    }
                }
            }
        }
    }
    out
}

/// Incrementally maintained reduced row-echelon form with sparse rows.
///
/// Rows are normalised (pivot entry 1) and fully reduced: no row has a nonzero
/// entry in another row's pivot column. Pivots are the lowest nonzero column of
/// each inserted residual, so the result depends only on insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }

    pub fn row_entries(&self, t: usize) -> &[(usize, Rational)] {
        &self.rows[t]
    }

    pub fn row_dense(&self, t: usize) -> Vec<Rational> {
        let mut v = zero_vec(self.ncols);
        for (c, x) in &self.rows[t] {
            v[*c] = x.clone();
        }
        v
    }

    /// Residual of `v` after eliminating all pivot columns, as a dense vector.
    pub fn reduce_dense(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (col, t) in self.pivot_row.iter().enumerate() {
            if let Some(t) = t {
                if out[col].is_zero() {
                    continue;
                }
                let c = out[col].clone();
                for (k, x) in &self.rows[*t] {
                    out[*k] -= &c * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce_dense(v))
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ncols, "echelon row length");
        let residual = self.reduce_dense(v);
        self.push_residual(residual)
    }

    pub fn insert_sparse(&mut self, v: &[(usize, Rational)]) -> bool {
        let mut dense = zero_vec(self.ncols);
        for (c, x) in v {
            dense[*c] += x;
        }
        self.insert_dense(&dense)
    }

    fn push_residual(&mut self, residual: Vec<Rational>) -> bool {
        let Some(p) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &residual[p];
        let new_row: Vec<(usize, Rational)> = residual
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x * &inv))
            .collect();
        for row in &mut self.rows {
            let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) else {
                continue;
            };
            let f = row[pos].1.clone();
            row.remove(pos);
            let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(row.len() + new_row.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < new_row.len() {
                let take_left = j >= new_row.len() || (i < row.len() && row[i].0 < new_row[j].0);
                let take_right = i >= row.len() || (j < new_row.len() && new_row[j].0 < row[i].0);
                if take_left {
                    merged.push(row[i].clone());
                    i += 1;
                } else if take_right {
                    if new_row[j].0 != p {
                        merged.push((new_row[j].0, -(&f * &new_row[j].1)));
                    }
                    j += 1;
                } else {
                    let x = &row[i].1 - &f * &new_row[j].1;
                    if !x.is_zero() {
                        merged.push((row[i].0, x));
                    }
                    i += 1;
                    j += 1;
                }
            }
            *row = merged;
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(new_row);
        true
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Basis of the solution space of the homogeneous system whose rows span this echelon form.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = unit_vec(self.ncols, f);
                for (t, row) in self.rows.iter().enumerate() {
                    if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                        v[self.pivots[t]] = -row[pos].1.clone();
                    }
                }
                v
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect() }
    }

    /// Span of arbitrary generators; the stored basis is an independent subset of them.
    pub fn span(ambient_dim: usize, gens: &[Vec<Rational>]) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        let mut basis = Vec::new();
        for g in gens {
            assert_eq!(g.len(), ambient_dim, "generator length");
            if ech.insert_dense(g) {
                basis.push(g.clone());
            }
        }
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut ech = Echelon::new(self.ambient_dim);
        for b in &self.basis {
            ech.insert_dense(b);
        }
        ech.contains(v)
    }
}

#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient_dim: usize,
    killed: Subspace,
    projection: RatMatrix,
    section: RatMatrix,
    free: Vec<usize>,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn killed(&self) -> &Subspace {
        &self.killed
    }

    pub fn projection(&self) -> &RatMatrix {
        &self.projection
    }

    pub fn section(&self) -> &RatMatrix {
        &self.section
    }

    /// Ambient coordinates used as representatives of the quotient basis.
    pub fn representative_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Rational]) -> Vec<Rational> {
        self.section.apply(v)
    }
}

pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let mut sys = AffineSystem::new(a.cols());
    for i in 0..a.rows() {
        sys.add_equation(a.row(i), &b[i]);
    }
    Ok(sys.solution().map(|s| s.particular))
}

pub fn kernel_basis(a: &RatMatrix) -> Subspace {
    let mut ech = Echelon::new(a.cols());
    for i in 0..a.rows() {
        ech.insert_dense(a.row(i));
    }
    Subspace { ambient_dim: a.cols(), basis: ech.null_space() }
}

/// Quotient of the ambient space by the span of `gens`, with projection and
/// a section picked from the pivot structure of the relation span.
pub fn quotient_by(ambient_dim: usize, gens: &[Vec<Rational>]) -> QuotientSpace {
    let mut ech = Echelon::new(ambient_dim);
    for g in gens {
        assert_eq!(g.len(), ambient_dim, "generator length");
        ech.insert_dense(g);
    }
    quotient_from_echelon(ech)
}

/// Same as [`quotient_by`] but for sparse generators, which is how relation spans arrive.
pub fn quotient_by_sparse(ambient_dim: usize, gens: impl IntoIterator<Item = Vec<(usize, Rational)>>) -> QuotientSpace {
    let mut ech = Echelon::new(ambient_dim);
    for g in gens {
        ech.insert_sparse(&g);
    }
    quotient_from_echelon(ech)
}

fn quotient_from_echelon(ech: Echelon) -> QuotientSpace {
    let n = ech.ncols();
    let free = ech.free_columns();
    let mut projection = RatMatrix::zeros(free.len(), n);
    let mut section = RatMatrix::zeros(n, free.len());
    for (qi, &f) in free.iter().enumerate() {
        projection[(qi, f)] = Rational::one();
        section[(f, qi)] = Rational::one();
    }
    let index_of_free: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (qi, &f) in free.iter().enumerate() {
            v[f] = Some(qi);
        }
        v
    };
    let mut killed = Vec::with_capacity(ech.rank());
    for t in 0..ech.rank() {
        let p = ech.pivots()[t];
        for (c, x) in ech.row_entries(t) {
            if let Some(qi) = index_of_free[*c] {
                projection[(qi, p)] = -x.clone();
            }
        }
        killed.push(ech.row_dense(t));
    }
    QuotientSpace { ambient_dim: n, killed: Subspace { ambient_dim: n, basis: killed }, projection, section, free }
}

/// Solution set of an affine system: `particular + span(kernel)`.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Accumulates equations `coeffs · x = rhs` and keeps them reduced.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    vars: usize,
    ech: Echelon,
    inconsistent: bool,
}

impl AffineSystem {
    pub fn new(vars: usize) -> Self {
        AffineSystem { vars, ech: Echelon::new(vars + 1), inconsistent: false }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn add_equation(&mut self, coeffs: &[Rational], rhs: &Rational) {
        assert_eq!(coeffs.len(), self.vars, "equation length");
        if self.inconsistent || (is_zero_vec(coeffs) && rhs.is_zero()) {
            return;
        }
        let mut row = Vec::with_capacity(self.vars + 1);
        row.extend(coeffs.iter().cloned());
        row.push(rhs.clone());
        if self.ech.insert_dense(&row) && *self.ech.pivots().last().unwrap() == self.vars {
            self.inconsistent = true;
        }
    }

    /// Adds the vector equation `Σ_j x_j columns[j] = rhs`.
    pub fn add_column_equations(&mut self, columns: &[Vec<Rational>], rhs: &[Rational]) {
        assert_eq!(columns.len(), self.vars, "column count");
        for (i, r) in rhs.iter().enumerate() {
            let coeffs: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            self.add_equation(&coeffs, r);
        }
    }

    pub fn solution(&self) -> Option<AffineSolution> {
        if self.inconsistent {
            return None;
        }
        let mut particular = zero_vec(self.vars);
        for t in 0..self.ech.rank() {
            let p = self.ech.pivots()[t];
            if let Ok(pos) = self.ech.row_entries(t).binary_search_by_key(&self.vars, |(c, _)| *c) {
                particular[p] = self.ech.row_entries(t)[pos].1.clone();
            }
        }
        let kernel = self
            .ech
            .null_space()
            .into_iter()
            .filter(|v| v[self.vars].is_zero())
            .map(|mut v| {
                v.pop();
                v
            })
            .collect();
        Some(AffineSolution { particular, kernel })
    }
}

/// Solves `Σ_j x_j columns[j] = rhs` for `x`.
pub fn solve_columns(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<AffineSolution> {
    let mut sys = AffineSystem::new(columns.len());
    sys.add_column_equations(columns, rhs);
    sys.solution()
}

/// Basis of `{x : Σ_j x_j columns[j] = 0}`.
pub fn null_combinations(columns: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    solve_columns(columns, &zero_vec(len)).map(|s| s.kernel).unwrap_or_default()
}

/// Basis of the kernel of the linear map `x ↦ apply(x)` on `Q^n`, found from its
/// values on unit vectors.
pub fn linear_kernel(n: usize, mut apply: impl FnMut(&[Rational]) -> Vec<Rational>) -> Vec<Vec<Rational>> {
    let columns: Vec<Vec<Rational>> = (0..n).map(|u| apply(&unit_vec(n, u))).collect();
    let len = columns.first().map_or(0, Vec::len);
    null_combinations(&columns, len)
}

/// Coordinates of `v` in the linearly independent family `basis`.
pub fn coordinates_in(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    solve_columns(basis, v).map(|s| s.particular)
}
