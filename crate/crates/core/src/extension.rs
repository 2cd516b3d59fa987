//! Frobenius and separability of an algebra extension `i: R → S`.
//!
//! Two independent procedures are provided for each property. The extension
//! route works with maps `S → R` and elements of `S ⊗_R S` directly. The
//! bimodule-algebra route treats `S` as an algebra in `R`-bimodules and builds
//! every composite from the generic lifts and associators of [`crate::bimod`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{validate_morphism, Algebra, AlgebraMorphism};
use crate::bimod::{lift_hat, lift_tilde, upsilon, upsilon_prime, BimodError, Bimodule, Iso, TensorOverR, TripleTensor};
use crate::exactlin::{coordinates_in, kron, linear_kernel, unit_vec, zero_vec, AffineSystem, RatMatrix, Rational};
use crate::frobsep::{
    frobenius_from_functional, frobenius_to_separable_alpha, verify_frobenius, FrobeniusCertificate, FrobeniusDecision,
    NonFrobeniusProof,
};
use crate::report::ValidationReport;
use crate::sampling::{Sampler, SearchOptions};
use crate::symbolic::{search_pencil, verify_singular, LinearPencil, PencilOutcome, SearchError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionError {
    InvalidMorphism(ValidationReport),
    Bimod(BimodError),
    Precondition(&'static str),
}

impl fmt::Display for ExtensionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionError::InvalidMorphism(r) => write!(f, "not an algebra morphism: {r}"),
            ExtensionError::Bimod(e) => write!(f, "{e}"),
            ExtensionError::Precondition(p) => write!(f, "precondition failed: {p}"),
        }
    }
}

impl From<BimodError> for ExtensionError {
    fn from(e: BimodError) -> Self {
        ExtensionError::Bimod(e)
    }
}

/// `i: R → S` with `S` as an `R`-bimodule, `S ⊗_R S`, and `m̲: S ⊗_R S → S`.
#[derive(Clone, Debug)]
pub struct AlgebraExtension {
    i: AlgebraMorphism,
    r_mod: Bimodule,
    s_mod: Bimodule,
    sts: TensorOverR,
    rs: TensorOverR,
    sr: TensorOverR,
    m_rs: RatMatrix,
    upsilon_s: Iso,
    upsilon_prime_s: Iso,
    s_left: Vec<RatMatrix>,
    s_right: Vec<RatMatrix>,
}

impl AlgebraExtension {
    pub fn new(i: AlgebraMorphism) -> Result<Self, ExtensionError> {
        let report = validate_morphism(&i);
        if !report.is_empty() {
            return Err(ExtensionError::InvalidMorphism(report));
        }
        let r_mod = Bimodule::regular(i.source());
        let s_mod = Bimodule::restricted(&i);
        let sts = TensorOverR::new(&s_mod, &s_mod)?;
        let rs = TensorOverR::new(&r_mod, &s_mod)?;
        let sr = TensorOverR::new(&s_mod, &r_mod)?;
        let s = i.target();
        let m_rs = sts.factor(&s.mult_matrix(), "multiplication of S")?;
        let upsilon_s = upsilon(&sr)?;
        let upsilon_prime_s = upsilon_prime(&rs)?;
        let ds = s.dim();
        let id = RatMatrix::identity(ds);
        let mut s_left = Vec::with_capacity(ds);
        let mut s_right = Vec::with_capacity(ds);
        for k in 0..ds {
            let b = s.basis(k);
            s_left.push(sts.factor(&sts.q().mul(&kron(&s.left_mul(&b), &id)), "left S-action")?);
            s_right.push(sts.factor(&sts.q().mul(&kron(&id, &s.right_mul(&b))), "right S-action")?);
        }
        Ok(AlgebraExtension { i, r_mod, s_mod, sts, rs, sr, m_rs, upsilon_s, upsilon_prime_s, s_left, s_right })
    }

    pub fn identity(a: &Algebra) -> Self {
        Self::new(AlgebraMorphism::identity(a)).expect("identity is a valid extension")
    }

    pub fn from_base(a: &Algebra) -> Self {
        Self::new(AlgebraMorphism::unit_map(a)).expect("unit map is a valid extension")
    }

    pub fn morphism(&self) -> &AlgebraMorphism {
        &self.i
    }

    pub fn base(&self) -> &Algebra {
        self.i.source()
    }

    pub fn top(&self) -> &Algebra {
        self.i.target()
    }

    pub fn s_bimodule(&self) -> &Bimodule {
        &self.s_mod
    }

    pub fn r_bimodule(&self) -> &Bimodule {
        &self.r_mod
    }

    /// `S ⊗_R S`.
    pub fn sts(&self) -> &TensorOverR {
        &self.sts
    }

    /// `m̲: S ⊗_R S → S`.
    pub fn m_rs(&self) -> &RatMatrix {
        &self.m_rs
    }

    fn ds(&self) -> usize {
        self.top().dim()
    }

    fn dr(&self) -> usize {
        self.base().dim()
    }

    /// Stacked `(s·e − e·s)` over the basis of `S`.
    pub fn w_defect(&self, e: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::new();
        for (l, r) in self.s_left.iter().zip(&self.s_right) {
            out.extend(l.apply(e).into_iter().zip(r.apply(e)).map(|(a, b)| a - b));
        }
        out
    }

    /// Membership in `W = {e : s·e = e·s for all s}`.
    pub fn in_w(&self, e: &[Rational]) -> bool {
        e.len() == self.sts.dim() && self.w_defect(e).iter().all(Zero::is_zero)
    }

    /// `Υ′_S ∘ (ϑ ⊗_R id): S ⊗_R S → S`.
    pub fn counit_left(&self, theta: &RatMatrix) -> Result<RatMatrix, BimodError> {
        Ok(self.upsilon_prime_s.forward.mul(&lift_hat(&self.sts, &self.rs, theta)?))
    }

    /// `Υ_S ∘ (id ⊗_R ϑ): S ⊗_R S → S`.
    pub fn counit_right(&self, theta: &RatMatrix) -> Result<RatMatrix, BimodError> {
        Ok(self.upsilon_s.forward.mul(&lift_tilde(&self.sts, &self.sr, theta)?))
    }

    fn map_from_flat(&self, v: &[Rational]) -> RatMatrix {
        RatMatrix::from_entries(self.dr(), self.ds(), v.to_vec()).expect("flat map length")
    }

    /// Basis of the `R`-bimodule maps `S → R`.
    pub fn bimodule_maps_to_base(&self) -> Vec<RatMatrix> {
        self.maps_to_base(true)
    }

    /// Basis of the right `R`-linear maps `S → R`.
    pub fn right_linear_maps_to_base(&self) -> Vec<RatMatrix> {
        self.maps_to_base(false)
    }

    fn maps_to_base(&self, both_sides: bool) -> Vec<RatMatrix> {
        let (dr, ds) = (self.dr(), self.ds());
        let r = &self.r_mod;
        let s = &self.s_mod;
        linear_kernel(dr * ds, |u| {
            let f = RatMatrix::from_entries(dr, ds, u.to_vec()).unwrap();
            let mut out = Vec::new();
            for k in 0..dr {
                let rk = f.mul(s.right_basis_action(k)).sub(&r.right_basis_action(k).mul(&f));
                out.extend(rk.entries().iter().cloned());
                if both_sides {
                    let lk = f.mul(s.left_basis_action(k)).sub(&r.left_basis_action(k).mul(&f));
                    out.extend(lk.entries().iter().cloned());
                }
            }
            out
        })
        .iter()
        .map(|v| self.map_from_flat(v))
        .collect()
    }

    /// Elements of `S ⊗_R S` commuting with `i(R)`.
    pub fn r_central_tensors(&self) -> Vec<Vec<Rational>> {
        let induced = self.sts.as_bimodule();
        linear_kernel(self.sts.dim(), |v| {
            let mut out = Vec::new();
            for k in 0..self.dr() {
                let l = induced.left_basis_action(k).apply(v);
                let r = induced.right_basis_action(k).apply(v);
                out.extend(l.into_iter().zip(r).map(|(a, b)| a - b));
            }
            out
        })
    }

    /// Elements of `S` commuting with `i(R)`.
    pub fn centralizer_of_base(&self) -> Vec<Vec<Rational>> {
        let s = self.top();
        linear_kernel(self.ds(), |a| {
            let mut out = Vec::new();
            for k in 0..self.dr() {
                let ir = self.i.matrix().column(k);
                let l = s.product(&ir, a);
                let r = s.product(a, &ir);
                out.extend(l.into_iter().zip(r).map(|(x, y)| x - y));
            }
            out
        })
    }

    /// `q(1 ⊗ 1)`.
    pub fn unit_tensor(&self) -> Vec<Rational> {
        let s = self.top();
        self.sts.project(&crate::exactlin::tensor_vec(s.unit(), s.unit()))
    }
}

fn flat(m: &RatMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn combine_matrices(ms: &[RatMatrix], t: &[Rational]) -> RatMatrix {
    let mut out = RatMatrix::zeros(ms[0].rows(), ms[0].cols());
    for (m, c) in ms.iter().zip(t) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSeparabilityCertificate {
    pub e: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFrobeniusCertificate {
    /// `ϑ: S → R`, a `dim R × dim S` matrix.
    pub theta: RatMatrix,
    /// Coordinates in `S ⊗_R S`.
    pub e: Vec<Rational>,
}

pub fn verify_ext_separable(ext: &AlgebraExtension, cert: &ExtSeparabilityCertificate) -> ValidationReport {
    let mut report = ValidationReport::default();
    if cert.e.len() != ext.sts.dim() {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    report.check(ext.in_w(&cert.e), "e commutes with S", alloc::vec![]);
    report.check(ext.m_rs.apply(&cert.e) == ext.top().unit(), "multiplication of e is the unit", alloc::vec![]);
    report
}

pub fn check_separable_extension(ext: &AlgebraExtension) -> Option<ExtSeparabilityCertificate> {
    let n = ext.sts.dim();
    let mut sys = AffineSystem::new(n);
    let columns: Vec<Vec<Rational>> = (0..n).map(|u| ext.w_defect(&unit_vec(n, u))).collect();
    if let Some(len) = columns.first().map(Vec::len) {
        sys.add_column_equations(&columns, &zero_vec(len));
    }
    let m_cols: Vec<Vec<Rational>> = (0..n).map(|u| ext.m_rs.column(u)).collect();
    sys.add_column_equations(&m_cols, ext.top().unit());
    let cert = ExtSeparabilityCertificate { e: sys.solution()?.particular };
    debug_assert!(verify_ext_separable(ext, &cert).is_empty());
    Some(cert)
}

pub fn verify_ext_frobenius(ext: &AlgebraExtension, cert: &ExtFrobeniusCertificate) -> ValidationReport {
    let mut report = ValidationReport::default();
    let th = &cert.theta;
    if th.rows() != ext.dr() || th.cols() != ext.ds() || cert.e.len() != ext.sts.dim() {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    for k in 0..ext.dr() {
        let r = &ext.r_mod;
        let s = &ext.s_mod;
        report.check(th.mul(s.left_basis_action(k)) == r.left_basis_action(k).mul(th), "theta left R-linear", alloc::vec![k]);
        report.check(th.mul(s.right_basis_action(k)) == r.right_basis_action(k).mul(th), "theta right R-linear", alloc::vec![k]);
    }
    if !report.is_empty() {
        return report;
    }
    report.check(ext.in_w(&cert.e), "e commutes with S", alloc::vec![]);
    let unit = ext.top().unit();
    let left = ext.counit_left(th).map(|c| c.apply(&cert.e));
    let right = ext.counit_right(th).map(|c| c.apply(&cert.e));
    report.check(left.as_deref() == Ok(unit), "counit law (theta on the left factor)", alloc::vec![]);
    report.check(right.as_deref() == Ok(unit), "counit law (theta on the right factor)", alloc::vec![]);
    report
}

/// The pairing data: a basis of bimodule maps, a basis of right-linear maps,
/// and the pencil `t ↦ (s ↦ (Σ t_j ϑ_j)(s·−))`.
pub struct PairingPencil {
    pub bimodule_maps: Vec<RatMatrix>,
    pub right_linear_dim: usize,
    pub pencil: Option<LinearPencil>,
}

/// Builds the pairing pencil with `mult` giving the matrix of `t ↦ s_a·t` on `S`.
fn pairing_pencil_with(ext: &AlgebraExtension, mult: impl Fn(usize) -> RatMatrix) -> PairingPencil {
    let thetas = ext.bimodule_maps_to_base();
    let psis: Vec<Vec<Rational>> = ext.right_linear_maps_to_base().iter().map(flat).collect();
    let ds = ext.ds();
    if psis.len() != ds {
        return PairingPencil { bimodule_maps: thetas, right_linear_dim: psis.len(), pencil: None };
    }
    let left_mults: Vec<RatMatrix> = (0..ds).map(mult).collect();
    let coeffs = thetas
        .iter()
        .map(|th| {
            RatMatrix::from_columns(ds, ds, |a| {
                coordinates_in(&psis, &flat(&th.mul(&left_mults[a]))).expect("pairing lands in right-linear maps")
            })
        })
        .collect();
    PairingPencil { bimodule_maps: thetas, right_linear_dim: ds, pencil: Some(LinearPencil::new(ds, coeffs)) }
}

pub fn pairing_pencil(ext: &AlgebraExtension) -> PairingPencil {
    let s = ext.top();
    pairing_pencil_with(ext, |a| s.left_mul(&s.basis(a)))
}

/// Same pencil, with `s·t` computed as `m̲(q(s ⊗ t))`.
fn bimodule_pairing_pencil(ext: &AlgebraExtension) -> PairingPencil {
    let ds = ext.ds();
    let mq = ext.m_rs.mul(ext.sts.q());
    pairing_pencil_with(ext, |a| RatMatrix::from_columns(ds, ds, |t| mq.column(a * ds + t)))
}

fn decide_from_pairing<C>(
    source_dim: usize,
    pp: PairingPencil,
    opts: &SearchOptions,
    accept: impl FnMut(&[Rational]) -> Option<C>,
) -> Result<FrobeniusDecision<C>, SearchError> {
    let Some(pencil) = pp.pencil else {
        return Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::HomDimensionMismatch {
            source_dim,
            hom_dim: pp.right_linear_dim,
        }));
    };
    let mut sampler = Sampler::new(opts.seed);
    match search_pencil(&pencil, opts, &mut sampler, accept)? {
        PencilOutcome::Found(c) => Ok(FrobeniusDecision::Frobenius(c)),
        PencilOutcome::Singular(p) => Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::SingularPairing(p))),
    }
}

/// Completes `ϑ` to a certificate by solving for `e`, or `None` if no `e` exists.
pub fn complete_frobenius_witness(ext: &AlgebraExtension, theta: &RatMatrix) -> Option<ExtFrobeniusCertificate> {
    let n = ext.sts.dim();
    let left = ext.counit_left(theta).ok()?;
    let right = ext.counit_right(theta).ok()?;
    let mut sys = AffineSystem::new(n);
    let columns: Vec<Vec<Rational>> = (0..n).map(|u| ext.w_defect(&unit_vec(n, u))).collect();
    if let Some(len) = columns.first().map(Vec::len) {
        sys.add_column_equations(&columns, &zero_vec(len));
    }
    for c in [&left, &right] {
        let cols: Vec<Vec<Rational>> = (0..n).map(|u| c.column(u)).collect();
        sys.add_column_equations(&cols, ext.top().unit());
    }
    let cert = ExtFrobeniusCertificate { theta: theta.clone(), e: sys.solution()?.particular };
    verify_ext_frobenius(ext, &cert).is_empty().then_some(cert)
}

pub fn check_frobenius_extension(
    ext: &AlgebraExtension,
    opts: &SearchOptions,
) -> Result<FrobeniusDecision<ExtFrobeniusCertificate>, SearchError> {
    let pp = pairing_pencil(ext);
    let thetas = pp.bimodule_maps.clone();
    decide_from_pairing(ext.ds(), pp, opts, |t| complete_frobenius_witness(ext, &combine_matrices(&thetas, t)))
}

pub fn verify_non_frobenius_extension(ext: &AlgebraExtension, proof: &NonFrobeniusProof) -> bool {
    check_pairing_proof(ext, pairing_pencil(ext), proof)
}

fn check_pairing_proof(ext: &AlgebraExtension, pp: PairingPencil, proof: &NonFrobeniusProof) -> bool {
    match proof {
        NonFrobeniusProof::HomDimensionMismatch { source_dim, hom_dim } => {
            *source_dim == ext.ds() && *hom_dim == pp.right_linear_dim && pp.right_linear_dim != ext.ds()
        }
        NonFrobeniusProof::SingularPairing(p) => pp.pencil.is_some_and(|pen| verify_singular(&pen, p)),
    }
}

/// A Frobenius or separable structure on `S` as an algebra in `R`-bimodules:
/// `ϑ: S → R` and `𝔢: R → S ⊗_R S`, both bimodule maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimodAlgebraWitness {
    pub theta: Option<RatMatrix>,
    /// Columns are `𝔢(r_k)`.
    pub frak_e: RatMatrix,
}

/// The composites needed to state the Casimir law of `𝔢` in `R`-bimodules.
pub struct BimodAlgebraView<'a> {
    ext: &'a AlgebraExtension,
    triple: TripleTensor,
    sts_mod: Bimodule,
}

impl<'a> BimodAlgebraView<'a> {
    pub fn new(ext: &'a AlgebraExtension) -> Result<Self, BimodError> {
        let s = &ext.s_mod;
        let triple = TripleTensor::new(s, s, s)?;
        Ok(BimodAlgebraView { ext, sts_mod: ext.sts.as_bimodule(), triple })
    }

    /// `𝔢(r) = r·v` for `R`-central `v`.
    pub fn frak_e_from(&self, v: &[Rational]) -> RatMatrix {
        RatMatrix::from_columns(self.ext.sts.dim(), self.ext.dr(), |k| self.sts_mod.left_basis_action(k).apply(v))
    }

    /// `(id ⊗_R m̲) ∘ a ∘ (𝔢 ⊗_R id) ∘ Υ′⁻¹ − (m̲ ⊗_R id) ∘ a⁻¹ ∘ (id ⊗_R 𝔢) ∘ Υ⁻¹`, as maps `S → S ⊗_R S`.
    pub fn casimir_defect(&self, frak_e: &RatMatrix) -> Result<RatMatrix, BimodError> {
        let ext = self.ext;
        let t = &self.triple;
        let e_hat = lift_hat(&ext.rs, &t.xy_z, frak_e)?;
        let m_tilde = lift_tilde(&t.x_yz, &ext.sts, &ext.m_rs)?;
        let lhs = m_tilde.mul(&t.assoc.forward).mul(&e_hat).mul(&ext.upsilon_prime_s.inverse);
        let e_tilde = lift_tilde(&ext.sr, &t.x_yz, frak_e)?;
        let m_hat = lift_hat(&t.xy_z, &ext.sts, &ext.m_rs)?;
        let rhs = m_hat.mul(&t.assoc.inverse).mul(&e_tilde).mul(&ext.upsilon_s.inverse);
        Ok(lhs.sub(&rhs))
    }

    fn is_bimodule_map_from_base(&self, frak_e: &RatMatrix) -> bool {
        let r = &self.ext.r_mod;
        (0..self.ext.dr()).all(|k| {
            frak_e.mul(r.left_basis_action(k)) == self.sts_mod.left_basis_action(k).mul(frak_e)
                && frak_e.mul(r.right_basis_action(k)) == self.sts_mod.right_basis_action(k).mul(frak_e)
        })
    }

    pub fn verify_separable(&self, w: &BimodAlgebraWitness) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.check(self.is_bimodule_map_from_base(&w.frak_e), "e is an R-bimodule map", alloc::vec![]);
        let casimir = self.casimir_defect(&w.frak_e).map(|d| d.is_zero()).unwrap_or(false);
        report.check(casimir, "casimir law in bimodules", alloc::vec![]);
        report.check(self.ext.m_rs.mul(&w.frak_e) == *self.ext.i.matrix(), "multiplication of e is the unit", alloc::vec![]);
        report
    }

    pub fn verify_frobenius(&self, w: &BimodAlgebraWitness) -> ValidationReport {
        let mut report = ValidationReport::default();
        let Some(theta) = &w.theta else {
            report.check(false, "missing theta", alloc::vec![]);
            return report;
        };
        let ext = self.ext;
        report.check(is_bimodule_map_to_base(ext, theta), "theta is an R-bimodule map", alloc::vec![]);
        report.check(self.is_bimodule_map_from_base(&w.frak_e), "e is an R-bimodule map", alloc::vec![]);
        let casimir = self.casimir_defect(&w.frak_e).map(|d| d.is_zero()).unwrap_or(false);
        report.check(casimir, "casimir law in bimodules", alloc::vec![]);
        let unit = ext.i.matrix();
        let left = ext.counit_left(theta).map(|c| c.mul(&w.frak_e));
        let right = ext.counit_right(theta).map(|c| c.mul(&w.frak_e));
        report.check(left.as_ref() == Ok(unit), "counit law (theta on the left factor)", alloc::vec![]);
        report.check(right.as_ref() == Ok(unit), "counit law (theta on the right factor)", alloc::vec![]);
        report
    }

    /// Linear system for `v` over the `R`-central basis: Casimir defect zero
    /// plus `extra` affine conditions `Σ y_j cols_j = rhs` built per basis vector.
    fn solve_central(
        &self,
        mut extra: impl FnMut(&RatMatrix) -> Vec<Rational>,
        rhs: &[Rational],
    ) -> Option<BimodAlgebraWitness> {
        let central = self.ext.r_central_tensors();
        let mut sys = AffineSystem::new(central.len());
        let mut cas = Vec::new();
        let mut ex = Vec::new();
        for c in &central {
            let fe = self.frak_e_from(c);
            cas.push(self.casimir_defect(&fe).ok()?.entries().to_vec());
            ex.push(extra(&fe));
        }
        if let Some(len) = cas.first().map(Vec::len) {
            sys.add_column_equations(&cas, &zero_vec(len));
            sys.add_column_equations(&ex, rhs);
        } else if !rhs.iter().all(Zero::is_zero) {
            return None;
        }
        let y = sys.solution()?.particular;
        let mut v = zero_vec(self.ext.sts.dim());
        for (c, b) in y.iter().zip(&central) {
            crate::exactlin::add_scaled(&mut v, c, b);
        }
        Some(BimodAlgebraWitness { theta: None, frak_e: self.frak_e_from(&v) })
    }

    pub fn find_separable(&self) -> Option<BimodAlgebraWitness> {
        let unit = flat(self.ext.i.matrix());
        let w = self.solve_central(|fe| flat(&self.ext.m_rs.mul(fe)), &unit)?;
        self.verify_separable(&w).is_empty().then_some(w)
    }

    pub fn complete_frobenius(&self, theta: &RatMatrix) -> Option<BimodAlgebraWitness> {
        let ext = self.ext;
        let left = ext.counit_left(theta).ok()?;
        let right = ext.counit_right(theta).ok()?;
        let unit = flat(ext.i.matrix());
        let mut rhs = unit.clone();
        rhs.extend(unit);
        let mut w = self.solve_central(
            |fe| {
                let mut v = flat(&left.mul(fe));
                v.extend(flat(&right.mul(fe)));
                v
            },
            &rhs,
        )?;
        w.theta = Some(theta.clone());
        self.verify_frobenius(&w).is_empty().then_some(w)
    }

    /// Re-checks a negative answer of [`Self::find_frobenius`].
    pub fn verify_non_frobenius(&self, proof: &NonFrobeniusProof) -> bool {
        check_pairing_proof(self.ext, bimodule_pairing_pencil(self.ext), proof)
    }

    pub fn find_frobenius(&self, opts: &SearchOptions) -> Result<FrobeniusDecision<BimodAlgebraWitness>, SearchError> {
        let pp = bimodule_pairing_pencil(self.ext);
        let thetas = pp.bimodule_maps.clone();
        decide_from_pairing(self.ext.ds(), pp, opts, |t| self.complete_frobenius(&combine_matrices(&thetas, t)))
    }
}

fn is_bimodule_map_to_base(ext: &AlgebraExtension, theta: &RatMatrix) -> bool {
    let r = &ext.r_mod;
    let s = &ext.s_mod;
    theta.rows() == ext.dr()
        && theta.cols() == ext.ds()
        && (0..ext.dr()).all(|k| {
            theta.mul(s.left_basis_action(k)) == r.left_basis_action(k).mul(theta)
                && theta.mul(s.right_basis_action(k)) == r.right_basis_action(k).mul(theta)
        })
}

/// Verdicts of both routes and whether their witnesses transfer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub frobenius_extension: bool,
    pub frobenius_bimodule: bool,
    pub separable_extension: bool,
    pub separable_bimodule: bool,
    /// Each route's witness, mapped through `e ↔ 𝔢(1)`, verifies in the other route.
    pub witnesses_correspond: bool,
}

impl ConsistencyReport {
    pub fn agrees(&self) -> bool {
        self.frobenius_extension == self.frobenius_bimodule
            && self.separable_extension == self.separable_bimodule
            && self.witnesses_correspond
    }
}

pub fn crosscheck_bimodule_algebra(ext: &AlgebraExtension, opts: &SearchOptions) -> Result<ConsistencyReport, ExtensionError> {
    let view = BimodAlgebraView::new(ext)?;
    let search = |e: SearchError| ExtensionError::Precondition(if matches!(e, SearchError::CapExceeded { .. }) {
        "search exceeded the symbolic cap"
    } else {
        "search inconclusive"
    });
    let fa = check_frobenius_extension(ext, opts).map_err(search)?;
    let fb = view.find_frobenius(opts).map_err(search)?;
    let sa = check_separable_extension(ext);
    let sb = view.find_separable();
    let one = |m: &RatMatrix| m.apply(ext.base().unit());
    let mut correspond = true;
    if let Some(c) = fa.witness() {
        let w = BimodAlgebraWitness { theta: Some(c.theta.clone()), frak_e: view.frak_e_from(&c.e) };
        correspond &= view.verify_frobenius(&w).is_empty();
    }
    if let Some(w) = fb.witness() {
        let c = ExtFrobeniusCertificate { theta: w.theta.clone().unwrap(), e: one(&w.frak_e) };
        correspond &= verify_ext_frobenius(ext, &c).is_empty();
    }
    if let Some(c) = &sa {
        let w = BimodAlgebraWitness { theta: None, frak_e: view.frak_e_from(&c.e) };
        correspond &= view.verify_separable(&w).is_empty();
    }
    if let Some(w) = &sb {
        let c = ExtSeparabilityCertificate { e: one(&w.frak_e) };
        correspond &= verify_ext_separable(ext, &c).is_empty();
    }
    Ok(ConsistencyReport {
        frobenius_extension: fa.is_frobenius(),
        frobenius_bimodule: fb.is_frobenius(),
        separable_extension: sa.is_some(),
        separable_bimodule: sb.is_some(),
        witnesses_correspond: correspond,
    })
}

fn require_frobenius_separable_base(ext: &AlgebraExtension, cert_r: &FrobeniusCertificate) -> Result<(), ExtensionError> {
    if cert_r.algebra != *ext.base() || !verify_frobenius(cert_r).is_empty() {
        return Err(ExtensionError::Precondition("base certificate does not verify"));
    }
    if frobenius_to_separable_alpha(cert_r).is_none() {
        return Err(ExtensionError::Precondition("base algebra is not separable"));
    }
    Ok(())
}

fn require_top(ext: &AlgebraExtension, cert_s: &FrobeniusCertificate) -> Result<(), ExtensionError> {
    if cert_s.algebra != *ext.top() || !verify_frobenius(cert_s).is_empty() {
        return Err(ExtensionError::Precondition("top certificate does not verify"));
    }
    Ok(())
}

/// `Ñ ∘ i = i ∘ N`.
pub fn check_nakayama_compat(
    ext: &AlgebraExtension,
    cert_r: &FrobeniusCertificate,
    cert_s: &FrobeniusCertificate,
) -> Result<bool, ExtensionError> {
    require_frobenius_separable_base(ext, cert_r)?;
    require_top(ext, cert_s)?;
    let i = ext.i.matrix();
    Ok(cert_s.nakayama.mul(i) == i.mul(&cert_r.nakayama))
}

/// Which linear condition on `ϑ̃` ties the Frobenius structure of `S` to that of `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatRoute {
    /// `ϑ̃(s·i(r)) = Σ ϑ̃(i(e″)·s) ϑ(e′·r)`.
    CasimirEquation,
    /// `ϑ̃(i(N(r))·s) = ϑ̃(s·i(r))`.
    Nakayama,
}

/// Elements `c` of `S` such that the route's condition reads `ϑ̃(c) = 0` for each `c`.
fn compat_constraints(ext: &AlgebraExtension, cert_r: &FrobeniusCertificate, route: CompatRoute) -> Vec<Vec<Rational>> {
    let (r, s) = (ext.base(), ext.top());
    let dr = r.dim();
    let i = ext.i.matrix();
    let mut out = Vec::new();
    for a in 0..s.dim() {
        let sa = s.basis(a);
        for b in 0..dr {
            let irb = i.column(b);
            let mut c = s.product(&sa, &irb);
            match route {
                CompatRoute::CasimirEquation => {
                    for p in 0..dr {
                        for q in 0..dr {
                            let e = &cert_r.casimir[p * dr + q];
                            if e.is_zero() {
                                continue;
                            }
                            let th = crate::exactlin::dot(&cert_r.theta, r.basis_product(p, b));
                            if th.is_zero() {
                                continue;
                            }
                            let term = s.product(&i.column(q), &sa);
                            crate::exactlin::add_scaled(&mut c, &(-(e * th)), &term);
                        }
                    }
                }
                CompatRoute::Nakayama => {
                    let n_rb = i.apply(&cert_r.nakayama.column(b));
                    let term = s.product(&n_rb, &sa);
                    for (x, y) in c.iter_mut().zip(term) {
                        *x -= y;
                    }
                }
            }
            out.push(c);
        }
    }
    out
}

/// Both sides of the Casimir-form condition agree for the given structures.
pub fn check_char_frob_ext_equation(
    ext: &AlgebraExtension,
    cert_r: &FrobeniusCertificate,
    cert_s: &FrobeniusCertificate,
) -> Result<bool, ExtensionError> {
    require_frobenius_separable_base(ext, cert_r)?;
    require_top(ext, cert_s)?;
    Ok(compat_constraints(ext, cert_r, CompatRoute::CasimirEquation)
        .iter()
        .all(|c| crate::exactlin::dot(&cert_s.theta, c).is_zero()))
}

/// Functionals on `S` satisfying the route's condition, and the pencil of their forms.
fn compat_pencil(ext: &AlgebraExtension, cert_r: &FrobeniusCertificate, route: CompatRoute) -> (Vec<Vec<Rational>>, LinearPencil) {
    let s = ext.top();
    let ds = s.dim();
    let constraints = compat_constraints(ext, cert_r, route);
    let thetas = linear_kernel(ds, |th| constraints.iter().map(|c| crate::exactlin::dot(th, c)).collect());
    let coeffs =
        thetas.iter().map(|th| RatMatrix::from_fn(ds, ds, |a, b| crate::exactlin::dot(th, s.basis_product(a, b)))).collect();
    (thetas, LinearPencil::new(ds, coeffs))
}

/// Re-checks a negative answer of [`find_compatible_structure`].
pub fn verify_no_compatible_structure(
    ext: &AlgebraExtension,
    cert_r: &FrobeniusCertificate,
    route: CompatRoute,
    proof: &NonFrobeniusProof,
) -> bool {
    if require_frobenius_separable_base(ext, cert_r).is_err() {
        return false;
    }
    match proof {
        NonFrobeniusProof::SingularPairing(p) => verify_singular(&compat_pencil(ext, cert_r, route).1, p),
        NonFrobeniusProof::HomDimensionMismatch { .. } => false,
    }
}

/// Searches for a Frobenius functional on `S` satisfying the route's
/// compatibility condition with the fixed structure on `R`.
pub fn find_compatible_structure(
    ext: &AlgebraExtension,
    cert_r: &FrobeniusCertificate,
    route: CompatRoute,
    opts: &SearchOptions,
) -> Result<FrobeniusDecision<FrobeniusCertificate>, ExtensionError> {
    require_frobenius_separable_base(ext, cert_r)?;
    let s = ext.top();
    let ds = s.dim();
    let (thetas, pencil) = compat_pencil(ext, cert_r, route);
    let mut sampler = Sampler::new(opts.seed);
    let accept = |t: &[Rational]| {
        let mut th = zero_vec(ds);
        for (c, b) in t.iter().zip(&thetas) {
            crate::exactlin::add_scaled(&mut th, c, b);
        }
        frobenius_from_functional(s, &th)
    };
    match search_pencil(&pencil, opts, &mut sampler, accept) {
        Ok(PencilOutcome::Found(c)) => Ok(FrobeniusDecision::Frobenius(c)),
        Ok(PencilOutcome::Singular(p)) => Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::SingularPairing(p))),
        Err(SearchError::CapExceeded { .. }) => Err(ExtensionError::Precondition("search exceeded the symbolic cap")),
        Err(SearchError::Inconclusive(_)) => Err(ExtensionError::Precondition("search inconclusive")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alpha0Witness {
    pub alpha0: Vec<Rational>,
    pub separability: ExtSeparabilityCertificate,
}

/// `s ⊗ t ↦ s α t` on `S ⊗ S`.
fn sandwich_map(s: &Algebra, alpha: &[Rational]) -> RatMatrix {
    s.mult_matrix().mul(&kron(&s.right_mul(alpha), &RatMatrix::identity(s.dim())))
}

/// Finds `α₀` commuting with `i(R)` such that `m̲((id ⊗ α₀ ⊗ id) e) = 1`.
pub fn sep_from_frob_ext_alpha0(ext: &AlgebraExtension, cert: &ExtFrobeniusCertificate) -> Option<Alpha0Witness> {
    if !verify_ext_frobenius(ext, cert).is_empty() {
        return None;
    }
    let s = ext.top();
    let central = ext.centralizer_of_base();
    let cols: Vec<Vec<Rational>> =
        central.iter().map(|c| ext.sts.factor(&sandwich_map(s, c), "sandwich").expect("central").apply(&cert.e)).collect();
    let y = crate::exactlin::solve_columns(&cols, s.unit())?.particular;
    let mut alpha0 = zero_vec(s.dim());
    for (c, b) in y.iter().zip(&central) {
        crate::exactlin::add_scaled(&mut alpha0, c, b);
    }
    let shift = kron(&s.right_mul(&alpha0), &RatMatrix::identity(s.dim()));
    let induced = ext.sts.factor(&ext.sts.q().mul(&shift), "right multiplication by alpha").ok()?;
    let separability = ExtSeparabilityCertificate { e: induced.apply(&cert.e) };
    verify_ext_separable(ext, &separability).is_empty().then_some(Alpha0Witness { alpha0, separability })
}

/// `α₀` centralizes `i(R)`, sandwiches `e` to `1`, and induces the stated idempotent.
pub fn verify_alpha0(ext: &AlgebraExtension, cert: &ExtFrobeniusCertificate, w: &Alpha0Witness) -> bool {
    let s = ext.top();
    if w.alpha0.len() != s.dim() || !verify_ext_frobenius(ext, cert).is_empty() {
        return false;
    }
    let i = ext.i.matrix();
    let central = (0..ext.dr()).all(|k| {
        let r = i.column(k);
        s.product(&r, &w.alpha0) == s.product(&w.alpha0, &r)
    });
    if !central {
        return false;
    }
    let Ok(sandwich) = ext.sts.factor(&sandwich_map(s, &w.alpha0), "sandwich") else {
        return false;
    };
    let shift = kron(&s.right_mul(&w.alpha0), &RatMatrix::identity(s.dim()));
    let Ok(induced) = ext.sts.factor(&ext.sts.q().mul(&shift), "right multiplication by alpha") else {
        return false;
    };
    sandwich.apply(&cert.e) == s.unit()
        && induced.apply(&cert.e) == w.separability.e
        && verify_ext_separable(ext, &w.separability).is_empty()
}

/// A bimodule map `ϑ: S → R` with `ϑ(1) = 1`, the condition for the induction
/// functor to be separable.
pub fn unital_bimodule_retraction(ext: &AlgebraExtension) -> Option<RatMatrix> {
    let thetas = ext.bimodule_maps_to_base();
    let cols: Vec<Vec<Rational>> = thetas.iter().map(|t| t.apply(ext.top().unit())).collect();
    let y = crate::exactlin::solve_columns(&cols, ext.base().unit())?.particular;
    if thetas.is_empty() {
        return None;
    }
    Some(combine_matrices(&thetas, &y))
}

/// Named extensions used by tests, the acceptance suite and the command line.
pub fn extension_suite() -> Vec<(String, AlgebraExtension)> {
    use crate::algebra::{builtin_suite, cyclic_inclusion, diagonal_embedding, field};
    let mut out = Vec::new();
    for b in builtin_suite() {
        let a = b.build().expect("builtin");
        out.push((alloc::format!("identity on {b}"), AlgebraExtension::identity(&a)));
        if a != field() {
            out.push((alloc::format!("field into {b}"), AlgebraExtension::from_base(&a)));
        }
    }
    let c2 = crate::algebra::cyclic_group_algebra(2).expect("builtin");
    out.push(("cyclic:2 into cyclic:4".into(), AlgebraExtension::new(cyclic_inclusion(2, 4).expect("inclusion")).expect("valid")));
    out.push(("cyclic:2 diagonally into its square".into(), AlgebraExtension::new(diagonal_embedding(&c2)).expect("valid")));
    out
}
