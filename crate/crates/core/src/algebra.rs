//! Finite-dimensional associative unital algebras given by structure constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{add_scaled, rat, unit_vec, zero_vec, RatMatrix, Rational};
use crate::report::{ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    Shape(String),
    UnknownBuiltin(String),
    InvalidParameter(String),
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Shape(s) => write!(f, "malformed algebra data: {s}"),
            AlgebraError::UnknownBuiltin(s) => write!(f, "unknown builtin algebra `{s}`"),
            AlgebraError::InvalidParameter(s) => write!(f, "invalid builtin parameter: {s}"),
            AlgebraError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

/// Structure constants `m[i][j][k]` with `e_i · e_j = Σ_k m[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct Algebra {
    dim: usize,
    mult: Vec<Rational>,
    unit: Vec<Rational>,
    labels: Vec<String>,
}

/// Labels are cosmetic and ignored by equality.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra without checking the axioms; see [`validate_algebra`].
    pub fn new(dim: usize, mult: Vec<Rational>, unit: Vec<Rational>) -> Result<Self, AlgebraError> {
        if mult.len() != dim * dim * dim {
            return Err(AlgebraError::Shape(format!("expected {} structure constants, found {}", dim * dim * dim, mult.len())));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit has length {}, expected {dim}", unit.len())));
        }
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        Ok(Algebra { dim, mult, unit, labels })
    }

    /// Sparse constructor from `(i, j, k, coefficient)` entries.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
        unit: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        let mut mult = zero_vec(dim * dim * dim);
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(AlgebraError::Shape(format!("index ({i},{j},{k}) out of range for dim {dim}")));
            }
            mult[(i * dim + j) * dim + k] += c;
        }
        Algebra::new(dim, mult, unit)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.dim {
            self.labels = labels;
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.mult
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.mult[start..start + self.dim]
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(x * y), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        unit_vec(self.dim, i)
    }

    /// The multiplication as a map `A ⊗ A → A`.
    pub fn mult_matrix(&self) -> RatMatrix {
        let d = self.dim;
        RatMatrix::from_fn(d, d * d, |k, ij| self.mult[ij * d + k].clone())
    }

    /// `x ↦ a·x`.
    pub fn left_mul(&self, a: &[Rational]) -> RatMatrix {
        let d = self.dim;
        RatMatrix::from_columns(d, d, |j| self.product(a, &unit_vec(d, j)))
    }

    /// `x ↦ x·a`.
    pub fn right_mul(&self, a: &[Rational]) -> RatMatrix {
        let d = self.dim;
        RatMatrix::from_columns(d, d, |i| self.product(&unit_vec(d, i), a))
    }

    /// Multiplication of the element in the left slot by the one in the right slot,
    /// applied to a vector in `A ⊗ A`.
    pub fn multiply_tensor(&self, v: &[Rational]) -> Vec<Rational> {
        let d = self.dim;
        let mut out = zero_vec(d);
        for i in 0..d {
            for j in 0..d {
                let x = &v[i * d + j];
                if !x.is_zero() {
                    add_scaled(&mut out, x, self.basis_product(i, j));
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}

pub fn validate_algebra(a: &Algebra) -> ValidationReport {
    let d = a.dim;
    let mut report = ValidationReport::default();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = a.product(a.basis_product(i, j), &a.basis(k));
                let right = a.product(&a.basis(i), a.basis_product(j, k));
                for q in 0..d {
                    if left[q] != right[q] {
                        report.push(Violation::new("associativity", vec![i, j, k, q]));
                    }
                }
            }
        }
    }
    for i in 0..d {
        let e = a.basis(i);
        let l = a.product(&a.unit, &e);
        let r = a.product(&e, &a.unit);
        for k in 0..d {
            if l[k] != e[k] {
                report.push(Violation::new("left unit", vec![i, k]));
            }
            if r[k] != e[k] {
                report.push(Violation::new("right unit", vec![i, k]));
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Algebra,
    target: Algebra,
    matrix: RatMatrix,
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, matrix: RatMatrix) -> Result<Self, AlgebraError> {
        if matrix.cols() != source.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: source.dim(), found: matrix.cols() });
        }
        if matrix.rows() != target.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: target.dim(), found: matrix.rows() });
        }
        Ok(AlgebraMorphism { source, target, matrix })
    }

    pub fn identity(a: &Algebra) -> Self {
        AlgebraMorphism { source: a.clone(), target: a.clone(), matrix: RatMatrix::identity(a.dim()) }
    }

    /// The unit map `Q → A`.
    pub fn unit_map(a: &Algebra) -> Self {
        AlgebraMorphism { source: field(), target: a.clone(), matrix: RatMatrix::column_vector(a.unit()) }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }
}

pub fn validate_morphism(f: &AlgebraMorphism) -> ValidationReport {
    let (s, t) = (&f.source, &f.target);
    let mut report = ValidationReport::default();
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let lhs = f.apply(s.basis_product(i, j));
            let rhs = t.product(&f.apply(&s.basis(i)), &f.apply(&s.basis(j)));
            if lhs != rhs {
                report.push(Violation::new("multiplicativity", vec![i, j]));
            }
        }
    }
    if f.apply(s.unit()) != t.unit() {
        report.push(Violation::new("unitality", vec![]));
    }
    report
}

/// A bilinear form `B(a, b) = aᵀ · matrix · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub algebra: Algebra,
    pub matrix: RatMatrix,
}

impl BilinearForm {
    pub fn eval(&self, a: &[Rational], b: &[Rational]) -> Rational {
        crate::exactlin::dot(a, &self.matrix.apply(b))
    }

    /// First basis triple `(i, j, k)` with `B(e_i e_j, e_k) ≠ B(e_i, e_j e_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let l = self.eval(a.basis_product(i, j), &a.basis(k));
                    let r = self.eval(&a.basis(i), a.basis_product(j, k));
                    if l != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }
}

pub fn field() -> Algebra {
    Algebra::new(1, vec![Rational::one()], vec![Rational::one()]).unwrap().with_labels(vec!["1".to_string()])
}

/// The group algebra of the cyclic group of order `n`, basis `1, g, …, g^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("cyclic group order must be positive".into()));
    }
    let entries: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, Rational::one())))
        .collect();
    let labels = (0..n).map(power_label("g")).collect();
    Ok(Algebra::from_entries(n, &entries, unit_vec(n, 0))?.with_labels(labels))
}

/// `n × n` matrices, basis `E_ij` at index `i*n + j`.
pub fn matrix_algebra(n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("matrix size must be positive".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, Rational::one()));
            }
        }
    }
    let mut unit = zero_vec(n * n);
    for i in 0..n {
        unit[i * n + i] = Rational::one();
    }
    let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    Ok(Algebra::from_entries(n * n, &entries, unit)?.with_labels(labels))
}

/// `Q[x]/(x^n)`, basis `1, x, …, x^{n-1}`.
pub fn truncated_poly(n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("truncation degree must be positive".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            entries.push((i, j, i + j, Rational::one()));
        }
    }
    let labels = (0..n).map(power_label("x")).collect();
    Ok(Algebra::from_entries(n, &entries, unit_vec(n, 0))?.with_labels(labels))
}

/// Upper triangular `n × n` matrices, basis `E_ij` (`i ≤ j`) in row-major order.
pub fn upper_triangular(n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("matrix size must be positive".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let mut entries = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                entries.push((a, b, index(i, l), Rational::one()));
            }
        }
    }
    let mut unit = zero_vec(pairs.len());
    for i in 0..n {
        unit[index(i, i)] = Rational::one();
    }
    let labels = pairs.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    Ok(Algebra::from_entries(pairs.len(), &entries, unit)?.with_labels(labels))
}

/// `Q^n` with componentwise product.
pub fn diagonal(n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("diagonal size must be positive".into()));
    }
    let entries: Vec<_> = (0..n).map(|i| (i, i, i, Rational::one())).collect();
    let labels = (0..n).map(|i| format!("p{}", i + 1)).collect();
    Ok(Algebra::from_entries(n, &entries, vec![Rational::one(); n])?.with_labels(labels))
}

fn power_label(var: &'static str) -> impl Fn(usize) -> String {
    move |i| match i {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

/// Named builtin algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Field,
    Cyclic(usize),
    Matrix(usize),
    TruncatedPoly(usize),
    UpperTriangular(usize),
    Diagonal(usize),
}

impl Builtin {
    /// Parses `field`, `cyclic:N`, `matrix:N`, `truncated:N`, `upper_triangular:N`, `diagonal:N`.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (s, None),
        };
        let n = || -> Result<usize, AlgebraError> {
            let p = param.ok_or_else(|| AlgebraError::InvalidParameter(format!("`{name}` needs a size, e.g. `{name}:2`")))?;
            p.parse::<usize>().map_err(|_| AlgebraError::InvalidParameter(format!("`{p}` is not a size")))
        };
        match name {
            "field" | "Q" => Ok(Builtin::Field),
            "cyclic" | "group_algebra" => Ok(Builtin::Cyclic(n()?)),
            "matrix" => Ok(Builtin::Matrix(n()?)),
            "truncated" | "truncated_poly" => Ok(Builtin::TruncatedPoly(n()?)),
            "upper_triangular" => Ok(Builtin::UpperTriangular(n()?)),
            "diagonal" => Ok(Builtin::Diagonal(n()?)),
            _ => Err(AlgebraError::UnknownBuiltin(s.into())),
        }
    }

    pub fn build(self) -> Result<Algebra, AlgebraError> {
        match self {
            Builtin::Field => Ok(field()),
            Builtin::Cyclic(n) => cyclic_group_algebra(n),
            Builtin::Matrix(n) => matrix_algebra(n),
            Builtin::TruncatedPoly(n) => truncated_poly(n),
            Builtin::UpperTriangular(n) => upper_triangular(n),
            Builtin::Diagonal(n) => diagonal(n),
        }
    }

    pub fn name(self) -> String {
        match self {
            Builtin::Field => "field".into(),
            Builtin::Cyclic(n) => format!("cyclic:{n}"),
            Builtin::Matrix(n) => format!("matrix:{n}"),
            Builtin::TruncatedPoly(n) => format!("truncated:{n}"),
            Builtin::UpperTriangular(n) => format!("upper_triangular:{n}"),
            Builtin::Diagonal(n) => format!("diagonal:{n}"),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn builtin(name: &str) -> Result<Algebra, AlgebraError> {
    Builtin::parse(name)?.build()
}

/// The algebras every suite iterates over.
pub fn builtin_suite() -> Vec<Builtin> {
    vec![
        Builtin::Field,
        Builtin::Cyclic(2),
        Builtin::Cyclic(3),
        Builtin::Cyclic(4),
        Builtin::Matrix(2),
        Builtin::TruncatedPoly(2),
        Builtin::TruncatedPoly(3),
        Builtin::UpperTriangular(2),
    ]
}

/// `A ⊗ B` with componentwise product; basis `a_i ⊗ b_k` at `i * dim B + k`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut mult = zero_vec(d * d * d);
    for i in 0..da {
        for j in 0..da {
            for p in 0..da {
                let x = a.c(i, j, p);
                if x.is_zero() {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        for q in 0..db {
                            let y = b.c(k, l, q);
                            if !y.is_zero() {
                                mult[((i * db + k) * d + j * db + l) * d + p * db + q] = x * y;
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = crate::exactlin::tensor_vec(a.unit(), b.unit());
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    Algebra::new(d, mult, unit).unwrap().with_labels(labels)
}

pub fn opposite(a: &Algebra) -> Algebra {
    let d = a.dim();
    let mut mult = zero_vec(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                mult[(i * d + j) * d + k] = a.c(j, i, k).clone();
            }
        }
    }
    Algebra::new(d, mult, a.unit().to_vec()).unwrap().with_labels(a.labels().to_vec())
}

/// `A × B` with componentwise product; `A` occupies the first coordinates.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut entries = Vec::new();
    for i in 0..da {
        for j in 0..da {
            for k in 0..da {
                entries.push((i, j, k, a.c(i, j, k).clone()));
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            for k in 0..db {
                entries.push((da + i, da + j, da + k, b.c(i, j, k).clone()));
            }
        }
    }
    let mut unit = a.unit().to_vec();
    unit.extend(b.unit().iter().cloned());
    let labels = a
        .labels()
        .iter()
        .map(|x| format!("({x},0)"))
        .chain(b.labels().iter().map(|y| format!("(0,{y})")))
        .collect();
    Algebra::from_entries(d, &entries, unit).unwrap().with_labels(labels)
}

/// The diagonal embedding `A → A × A`.
pub fn diagonal_embedding(a: &Algebra) -> AlgebraMorphism {
    let d = a.dim();
    let m = RatMatrix::from_fn(2 * d, d, |i, j| if i % d == j { Rational::one() } else { Rational::zero() });
    AlgebraMorphism::new(a.clone(), direct_product(a, a), m).unwrap()
}

/// `Q[C_m] → Q[C_n]` sending `g ↦ h^(n/m)`; requires `m | n`.
pub fn cyclic_inclusion(m: usize, n: usize) -> Result<AlgebraMorphism, AlgebraError> {
    if m == 0 || n % m != 0 {
        return Err(AlgebraError::InvalidParameter(format!("{m} does not divide {n}")));
    }
    let step = n / m;
    let mat = RatMatrix::from_fn(n, m, |i, j| if i == j * step { Rational::one() } else { Rational::zero() });
    AlgebraMorphism::new(cyclic_group_algebra(m)?, cyclic_group_algebra(n)?, mat)
}

/// Sum of the diagonal coordinates of an element of `M_n`.
pub fn matrix_trace_functional(n: usize) -> Vec<Rational> {
    let mut t = zero_vec(n * n);
    for i in 0..n {
        t[i * n + i] = rat(1);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_valid() {
        for b in builtin_suite().into_iter().chain([Builtin::Matrix(3), Builtin::Diagonal(3), Builtin::UpperTriangular(3)]) {
            let a = b.build().unwrap();
            assert!(validate_algebra(&a).is_empty(), "{b}");
            assert!(a.left_mul(a.unit()).is_identity());
            assert!(a.right_mul(a.unit()).is_identity());
        }
    }

    #[test]
    fn builtin_tables() {
        let q = builtin("field").unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.basis_product(0, 0), &[rat(1)]);
        let c2 = builtin("cyclic:2").unwrap();
        assert_eq!(c2.labels(), &["1".to_string(), "g".to_string()]);
        assert_eq!(c2.basis_product(1, 1), &[rat(1), rat(0)]);
        let ut = builtin("upper_triangular:2").unwrap();
        assert_eq!(ut.labels(), &["E11".to_string(), "E12".to_string(), "E22".to_string()]);
        assert_eq!(ut.basis_product(0, 1), &[rat(0), rat(1), rat(0)]);
        assert_eq!(ut.basis_product(1, 2), &[rat(0), rat(1), rat(0)]);
        assert_eq!(ut.basis_product(1, 0), &[rat(0), rat(0), rat(0)]);
        assert!(builtin("octonions").is_err());
        assert!(builtin("cyclic").is_err());
        assert!(builtin("cyclic:0").is_err());
    }

    #[test]
    fn broken_table_is_reported() {
        let c2 = cyclic_group_algebra(2).unwrap();
        let mut mult = c2.structure_constants().to_vec();
        mult[0] = rat(2);
        let broken = Algebra::new(2, mult, c2.unit().to_vec()).unwrap();
        assert!(!validate_algebra(&broken).is_empty());
    }

    #[test]
    fn morphism_examples() {
        let m2 = matrix_algebra(2).unwrap();
        assert!(validate_morphism(&AlgebraMorphism::identity(&m2)).is_empty());
        assert!(validate_morphism(&AlgebraMorphism::unit_map(&m2)).is_empty());
        let c2 = cyclic_group_algebra(2).unwrap();
        let neg = AlgebraMorphism::new(c2.clone(), c2.clone(), RatMatrix::identity(2).scale(&rat(-1))).unwrap();
        assert!(!validate_morphism(&neg).is_empty());
        // g ↦ −g fixing 1 is the sign automorphism
        let sign = AlgebraMorphism::new(c2.clone(), c2, RatMatrix::from_i64_rows(&[&[1, 0], &[0, -1]])).unwrap();
        assert!(validate_morphism(&sign).is_empty());
        assert!(validate_morphism(&cyclic_inclusion(2, 4).unwrap()).is_empty());
        assert!(validate_morphism(&diagonal_embedding(&c2_alg())).is_empty());
    }

    fn c2_alg() -> Algebra {
        cyclic_group_algebra(2).unwrap()
    }

    #[test]
    fn tensor_and_opposite() {
        let q = field();
        let m2 = matrix_algebra(2).unwrap();
        assert_eq!(tensor_algebra(&q, &m2), m2);
        assert_eq!(tensor_algebra(&m2, &q), m2);
        let cc = tensor_algebra(&c2_alg(), &c2_alg());
        assert_eq!(cc.dim(), 4);
        assert!(cc.is_commutative());
        assert!(validate_algebra(&tensor_algebra(&m2, &c2_alg())).is_empty());

        assert_eq!(opposite(&c2_alg()), c2_alg());
        assert_eq!(opposite(&opposite(&m2)), m2);
        let ut = upper_triangular(2).unwrap();
        let op = opposite(&ut);
        assert!(validate_algebra(&op).is_empty());
        assert_ne!(op, ut);
    }
}
