//! Frobenius and separability of a single algebra, with witnesses.
//!
//! A Frobenius pair `(ϑ, e)` consists of a functional `ϑ: A → Q` and a Casimir
//! element `e = Σ e' ⊗ e''` with `a e' ⊗ e'' = e' ⊗ e'' a`, `Σ ϑ(e') e'' = 1` and
//! `Σ e' ϑ(e'') = 1`. The Casimir element is stored by its coordinates in
//! `A ⊗ A`, left factor slowest.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, BilinearForm};
use crate::exactlin::{apply_in_slot, dot, solve_columns, unit_vec, zero_vec, AffineSolution, RatMatrix, Rational};
use crate::report::ValidationReport;
use crate::sampling::{Sampler, SearchOptions};
use crate::symbolic::{search_pencil, verify_singular, LinearPencil, PencilOutcome, SearchError, SingularPencilProof};

/// The Nakayama map `N` is characterised by `ϑ(N(a)·b) = ϑ(b·a)` for all `a, b`.
pub const NAKAYAMA_CONVENTION: &str = "theta(N(a)*b) = theta(b*a)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub algebra: Algebra,
    pub theta: Vec<Rational>,
    pub casimir: Vec<Rational>,
    pub nakayama: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityCertificate {
    pub algebra: Algebra,
    pub idempotent: Vec<Rational>,
}

/// Why an object is not Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonFrobeniusProof {
    /// Every candidate functional gives a singular pairing.
    SingularPairing(SingularPencilProof),
    /// The space of one-sided linear maps into the base has the wrong dimension,
    /// so no pairing can be bijective.
    HomDimensionMismatch { source_dim: usize, hom_dim: usize },
}

impl fmt::Display for NonFrobeniusProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonFrobeniusProof::SingularPairing(p) => write!(f, "{p}"),
            NonFrobeniusProof::HomDimensionMismatch { source_dim, hom_dim } => write!(
                f,
                "the dual module has dimension {hom_dim} but the algebra has dimension {source_dim}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusDecision<C> {
    Frobenius(C),
    NotFrobenius(NonFrobeniusProof),
}

impl<C> FrobeniusDecision<C> {
    pub fn is_frobenius(&self) -> bool {
        matches!(self, FrobeniusDecision::Frobenius(_))
    }

    pub fn witness(&self) -> Option<&C> {
        match self {
            FrobeniusDecision::Frobenius(c) => Some(c),
            FrobeniusDecision::NotFrobenius(_) => None,
        }
    }

    pub fn proof(&self) -> Option<&NonFrobeniusProof> {
        match self {
            FrobeniusDecision::Frobenius(_) => None,
            FrobeniusDecision::NotFrobenius(p) => Some(p),
        }
    }
}

/// `B_ij = ϑ(e_i e_j)`.
pub fn form_matrix(a: &Algebra, theta: &[Rational]) -> RatMatrix {
    RatMatrix::from_fn(a.dim(), a.dim(), |i, j| dot(theta, a.basis_product(i, j)))
}

/// The element `e = Σ_ij (B⁻¹)_ij e_i ⊗ e_j`, which is `Σ_i f_i ⊗ e_i` for the
/// basis `f_i` with `ϑ(e_k f_i) = δ_ki`.
pub fn casimir_from_form(b: &RatMatrix) -> Option<Vec<Rational>> {
    Some(b.inverse()?.entries().to_vec())
}

/// `N = B⁻ᵀ B`, the matrix form of `ϑ(N(a)·b) = ϑ(b·a)`.
pub fn nakayama_from_form(b: &RatMatrix) -> Option<RatMatrix> {
    Some(b.transpose().inverse()?.mul(b))
}

/// `(L_x ⊗ id) v` on `A ⊗ A`.
pub fn act_left_factor(a: &Algebra, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
    apply_in_slot(v, 1, a.dim(), &a.left_mul(x))
}

/// `(id ⊗ R_x) v` on `A ⊗ A`.
pub fn act_right_factor(a: &Algebra, v: &[Rational], x: &[Rational]) -> Vec<Rational> {
    apply_in_slot(v, a.dim(), 1, &a.right_mul(x))
}

/// `(ϑ ⊗ id) v` and `(id ⊗ ϑ) v`.
pub fn contract(a: &Algebra, v: &[Rational], theta: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let d = a.dim();
    let row = RatMatrix::row_vector(theta);
    (apply_in_slot(v, 1, d, &row), apply_in_slot(v, d, 1, &row))
}

fn casimir_law(a: &Algebra, e: &[Rational], report: &mut ValidationReport) {
    for x in 0..a.dim() {
        let bx = a.basis(x);
        report.check(act_left_factor(a, &bx, e) == act_right_factor(a, e, &bx), "casimir law", alloc::vec![x]);
    }
}

pub fn verify_frobenius(cert: &FrobeniusCertificate) -> ValidationReport {
    let a = &cert.algebra;
    let d = a.dim();
    let mut report = ValidationReport::default();
    if cert.theta.len() != d || cert.casimir.len() != d * d || cert.nakayama.rows() != d || cert.nakayama.cols() != d {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    casimir_law(a, &cert.casimir, &mut report);
    let (left, right) = contract(a, &cert.casimir, &cert.theta);
    report.check(left == a.unit(), "counit law (theta on the left factor)", alloc::vec![]);
    report.check(right == a.unit(), "counit law (theta on the right factor)", alloc::vec![]);
    report.extend(verify_nakayama(a, &cert.theta, &cert.nakayama));
    report
}

/// Checks the pinned convention plus invertibility, unitality and multiplicativity.
pub fn verify_nakayama(a: &Algebra, theta: &[Rational], n: &RatMatrix) -> ValidationReport {
    let d = a.dim();
    let mut report = ValidationReport::default();
    report.check(n.inverse().is_some(), "nakayama invertible", alloc::vec![]);
    report.check(n.apply(a.unit()) == a.unit(), "nakayama unital", alloc::vec![]);
    for i in 0..d {
        let ni = n.column(i);
        for j in 0..d {
            let lhs = dot(theta, &a.product(&ni, &a.basis(j)));
            let rhs = dot(theta, a.basis_product(j, i));
            report.check(lhs == rhs, "nakayama convention", alloc::vec![i, j]);
            let prod = n.apply(a.basis_product(i, j));
            report.check(prod == a.product(&ni, &n.column(j)), "nakayama multiplicative", alloc::vec![i, j]);
        }
    }
    report
}

/// The Frobenius certificate determined by `ϑ`, when its form is nondegenerate.
pub fn frobenius_from_functional(a: &Algebra, theta: &[Rational]) -> Option<FrobeniusCertificate> {
    let b = form_matrix(a, theta);
    let casimir = casimir_from_form(&b)?;
    let nakayama = nakayama_from_form(&b)?;
    let cert = FrobeniusCertificate { algebra: a.clone(), theta: theta.to_vec(), casimir, nakayama };
    verify_frobenius(&cert).is_empty().then_some(cert)
}

pub fn nakayama(cert: &FrobeniusCertificate) -> Result<RatMatrix, String> {
    let b = form_matrix(&cert.algebra, &cert.theta);
    let n = nakayama_from_form(&b).ok_or_else(|| String::from("degenerate Frobenius form"))?;
    let report = verify_nakayama(&cert.algebra, &cert.theta, &n);
    if report.is_empty() {
        Ok(n)
    } else {
        Err(alloc::format!("nakayama postconditions failed: {report}"))
    }
}

/// The pencil `B(t)_ij = Σ_k t_k m[i][j][k]` of all forms `ϑ ∘ m`.
pub fn frobenius_pencil(a: &Algebra) -> LinearPencil {
    let d = a.dim();
    let coeffs = (0..d).map(|k| RatMatrix::from_fn(d, d, |i, j| a.c(i, j, k).clone())).collect();
    LinearPencil::new(d, coeffs)
}

pub fn find_frobenius(a: &Algebra, opts: &SearchOptions) -> Result<FrobeniusDecision<FrobeniusCertificate>, SearchError> {
    let pencil = frobenius_pencil(a);
    let mut sampler = Sampler::new(opts.seed);
    match search_pencil(&pencil, opts, &mut sampler, |t| frobenius_from_functional(a, t))? {
        PencilOutcome::Found(cert) => Ok(FrobeniusDecision::Frobenius(cert)),
        PencilOutcome::Singular(p) => Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::SingularPairing(p))),
    }
}

pub fn verify_non_frobenius(a: &Algebra, proof: &NonFrobeniusProof) -> bool {
    match proof {
        NonFrobeniusProof::SingularPairing(p) => verify_singular(&frobenius_pencil(a), p),
        NonFrobeniusProof::HomDimensionMismatch { .. } => false,
    }
}

/// Columns `(e_i e_k ⊗ e_j...)`: the linear conditions on `e ∈ A ⊗ A` for the
/// Casimir law, one block of `d²` rows per basis element `x`.
fn casimir_columns(a: &Algebra) -> Vec<Vec<Rational>> {
    let d = a.dim();
    (0..d * d)
        .map(|u| {
            let e = unit_vec(d * d, u);
            let mut col = Vec::with_capacity(d * d * d);
            for x in 0..d {
                let bx = a.basis(x);
                let l = act_left_factor(a, &bx, &e);
                let r = act_right_factor(a, &e, &bx);
                col.extend(l.into_iter().zip(r).map(|(p, q)| p - q));
            }
            col
        })
        .collect()
}

pub fn is_separable(a: &Algebra) -> Option<SeparabilityCertificate> {
    let d = a.dim();
    let mut columns = casimir_columns(a);
    for (u, col) in columns.iter_mut().enumerate() {
        col.extend(a.multiply_tensor(&unit_vec(d * d, u)));
    }
    let mut rhs = zero_vec(d * d * d);
    rhs.extend(a.unit().iter().cloned());
    let sol = solve_columns(&columns, &rhs)?;
    let cert = SeparabilityCertificate { algebra: a.clone(), idempotent: sol.particular };
    debug_assert!(verify_separable(&cert).is_empty());
    Some(cert)
}

pub fn verify_separable(cert: &SeparabilityCertificate) -> ValidationReport {
    let a = &cert.algebra;
    let mut report = ValidationReport::default();
    if cert.idempotent.len() != a.dim() * a.dim() {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    casimir_law(a, &cert.idempotent, &mut report);
    report.check(a.multiply_tensor(&cert.idempotent) == a.unit(), "multiplication of e is the unit", alloc::vec![]);
    report
}

/// `γ(a) = a e' ⊗ e''`, a bimodule section of the multiplication.
pub fn splitting_map(cert: &SeparabilityCertificate) -> RatMatrix {
    let a = &cert.algebra;
    let d = a.dim();
    RatMatrix::from_columns(d * d, d, |i| act_left_factor(a, &a.basis(i), &cert.idempotent))
}

/// `Σ e' α e''` for a Casimir element `e`.
pub fn sandwich(a: &Algebra, e: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
    let d = a.dim();
    let mut out = zero_vec(d);
    for i in 0..d {
        for j in 0..d {
            let c = &e[i * d + j];
            if c.is_zero() {
                continue;
            }
            let v = a.product(&a.product(&a.basis(i), alpha), &a.basis(j));
            crate::exactlin::add_scaled(&mut out, c, &v);
        }
    }
    out
}

/// All `α` with `Σ e' α e'' = 1`.
pub fn separability_alphas(cert: &FrobeniusCertificate) -> Option<AffineSolution> {
    let a = &cert.algebra;
    let d = a.dim();
    let columns: Vec<Vec<Rational>> = (0..d).map(|k| sandwich(a, &cert.casimir, &a.basis(k))).collect();
    solve_columns(&columns, a.unit())
}

/// `𝐞 = Σ e' α ⊗ e''`.
pub fn induced_idempotent(cert: &FrobeniusCertificate, alpha: &[Rational]) -> SeparabilityCertificate {
    let a = &cert.algebra;
    let idempotent = act_left_factor_right(a, &cert.casimir, alpha);
    SeparabilityCertificate { algebra: a.clone(), idempotent }
}

/// `(R_α ⊗ id) v`.
fn act_left_factor_right(a: &Algebra, v: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
    apply_in_slot(v, 1, a.dim(), &a.right_mul(alpha))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaWitness {
    pub alpha: Vec<Rational>,
    pub separability: SeparabilityCertificate,
}

pub fn frobenius_to_separable_alpha(cert: &FrobeniusCertificate) -> Option<AlphaWitness> {
    let alpha = separability_alphas(cert)?.particular;
    let separability = induced_idempotent(cert, &alpha);
    if !verify_separable(&separability).is_empty() {
        return None;
    }
    Some(AlphaWitness { alpha, separability })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormRejection {
    NotAssociative { at: (usize, usize, usize) },
    Degenerate,
}

impl fmt::Display for FormRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormRejection::NotAssociative { at: (i, j, k) } => {
                write!(f, "form is not associative at basis triple ({i},{j},{k})")
            }
            FormRejection::Degenerate => f.write_str("form is degenerate"),
        }
    }
}

pub fn frobenius_via_form(a: &Algebra, form: &BilinearForm) -> Result<FrobeniusCertificate, FormRejection> {
    if let Some(at) = form.associativity_failure() {
        return Err(FormRejection::NotAssociative { at });
    }
    if !form.is_nondegenerate() {
        return Err(FormRejection::Degenerate);
    }
    let theta: Vec<Rational> = (0..a.dim()).map(|i| form.eval(&a.basis(i), a.unit())).collect();
    frobenius_from_functional(a, &theta).ok_or(FormRejection::Degenerate)
}
