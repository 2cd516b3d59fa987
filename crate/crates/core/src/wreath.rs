//! Wreaths `(A, X, ψ, ζ, σ)` in vector spaces, the wreath product `A#X`, the
//! extension `ι: A → A#X`, and Frobenius/separability decisions computed both
//! through `ι` and through witnesses living in `A ⊗ X ⊗ X`.
//!
//! Shapes: `ψ: X⊗A → A⊗X`, `ζ: X⊗X → A⊗X`, `σ ∈ A⊗X`. Tensor coordinates put
//! the left factor slowest.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{validate_algebra, validate_morphism, Algebra, AlgebraMorphism};
use crate::exactlin::{coordinates_in, kron, linear_kernel, zero_vec, AffineSystem, RatMatrix, Rational};
use crate::extension::{
    check_frobenius_extension, check_separable_extension, AlgebraExtension, ExtFrobeniusCertificate, ExtSeparabilityCertificate,
};
use crate::frobsep::{FrobeniusDecision, NonFrobeniusProof};
use crate::report::ValidationReport;
use crate::sampling::{Sampler, SearchOptions};
use crate::symbolic::{search_pencil, verify_singular, LinearPencil, PencilOutcome, SearchError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WreathError {
    Shape(&'static str),
    /// The wreath axioms fail.
    Invalid(ValidationReport),
    /// A group action is not by automorphisms or has the wrong order.
    BadAction(&'static str),
    Search(SearchError),
    /// Two routes that must agree gave different verdicts.
    RouteDisagreement(&'static str),
    Internal(String),
}

impl fmt::Display for WreathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WreathError::Shape(s) => write!(f, "shape mismatch: {s}"),
            WreathError::Invalid(r) => write!(f, "wreath axioms fail: {r}"),
            WreathError::BadAction(s) => write!(f, "bad group action: {s}"),
            WreathError::Search(e) => write!(f, "{e}"),
            WreathError::RouteDisagreement(s) => write!(f, "routes disagree on {s}"),
            WreathError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl From<SearchError> for WreathError {
    fn from(e: SearchError) -> Self {
        WreathError::Search(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathData {
    pub a: Algebra,
    pub x_dim: usize,
    pub psi: RatMatrix,
    pub zeta: RatMatrix,
    pub sigma: Vec<Rational>,
}

/// Shorthand for the identity and the structure maps as matrices.
struct Maps {
    p: usize,
    n: usize,
    m: RatMatrix,
    eta: RatMatrix,
    sigma: RatMatrix,
}

impl Maps {
    fn new(w: &WreathData) -> Self {
        Maps {
            p: w.a.dim(),
            n: w.x_dim,
            m: w.a.mult_matrix(),
            eta: RatMatrix::column_vector(w.a.unit()),
            sigma: RatMatrix::column_vector(&w.sigma),
        }
    }

    fn ia(&self) -> RatMatrix {
        RatMatrix::identity(self.p)
    }

    fn ix(&self) -> RatMatrix {
        RatMatrix::identity(self.n)
    }

    /// `m ⊗ id_X`.
    fn mx(&self) -> RatMatrix {
        kron(&self.m, &self.ix())
    }
}

fn k3(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> RatMatrix {
    kron(&kron(a, b), c)
}

impl WreathData {
    pub fn new(a: Algebra, x_dim: usize, psi: RatMatrix, zeta: RatMatrix, sigma: Vec<Rational>) -> Result<Self, WreathError> {
        let p = a.dim();
        let ax = p * x_dim;
        if psi.rows() != ax || psi.cols() != ax {
            return Err(WreathError::Shape("psi must map X⊗A to A⊗X"));
        }
        if zeta.rows() != ax || zeta.cols() != x_dim * x_dim {
            return Err(WreathError::Shape("zeta must map X⊗X to A⊗X"));
        }
        if sigma.len() != ax {
            return Err(WreathError::Shape("sigma must lie in A⊗X"));
        }
        Ok(WreathData { a, x_dim, psi, zeta, sigma })
    }

    /// `new` followed by validation.
    pub fn validated(a: Algebra, x_dim: usize, psi: RatMatrix, zeta: RatMatrix, sigma: Vec<Rational>) -> Result<Self, WreathError> {
        let w = Self::new(a, x_dim, psi, zeta, sigma)?;
        let report = validate_wreath(&w);
        if report.is_empty() {
            Ok(w)
        } else {
            Err(WreathError::Invalid(report))
        }
    }
}

/// The six wreath axioms, reported as `wr1a`, `wr1b`, `wr2`, …, `wr6`.
pub fn validate_wreath(w: &WreathData) -> ValidationReport {
    let s = Maps::new(w);
    let (ia, ix) = (s.ia(), s.ix());
    let mx = s.mx();
    let (psi, zeta) = (&w.psi, &w.zeta);
    let mut report = ValidationReport::default();

    let lhs = psi.mul(&kron(&ix, &s.m));
    let rhs = mx.mul(&kron(&ia, psi)).mul(&kron(psi, &ia));
    report.check(lhs == rhs, "wr1a: psi respects multiplication", alloc::vec![]);

    report.check(psi.mul(&kron(&ix, &s.eta)) == kron(&s.eta, &ix), "wr1b: psi respects the unit", alloc::vec![]);

    let lhs = mx.mul(&kron(&ia, psi)).mul(&kron(&s.sigma, &ia));
    let rhs = mx.mul(&kron(&ia, &s.sigma));
    report.check(lhs == rhs, "wr2: sigma commutes with A", alloc::vec![]);

    let lhs = mx.mul(&kron(&ia, psi)).mul(&kron(zeta, &ia));
    let rhs = mx.mul(&kron(&ia, zeta)).mul(&kron(psi, &ix)).mul(&kron(&ix, psi));
    report.check(lhs == rhs, "wr3: zeta is compatible with psi", alloc::vec![]);

    let lhs = mx.mul(&kron(&ia, zeta)).mul(&kron(zeta, &ix));
    let rhs = mx.mul(&kron(&ia, zeta)).mul(&kron(psi, &ix)).mul(&kron(&ix, zeta));
    report.check(lhs == rhs, "wr4: zeta is associative", alloc::vec![]);

    let unit = kron(&s.eta, &ix);
    let lhs = mx.mul(&kron(&ia, zeta)).mul(&kron(&s.sigma, &ix));
    report.check(lhs == unit, "wr5: sigma is a left unit for zeta", alloc::vec![]);

    let lhs = mx.mul(&kron(&ia, zeta)).mul(&kron(psi, &ix)).mul(&kron(&ix, &s.sigma));
    report.check(lhs == unit, "wr6: sigma is a right unit for zeta", alloc::vec![]);
    report
}

/// `ψ = flip`, `ζ(x ⊗ y) = 1 ⊗ xy`, `σ = 1 ⊗ 1`.
pub fn trivial_wreath(a: &Algebra, x: &Algebra) -> WreathData {
    let (p, n) = (a.dim(), x.dim());
    let psi = RatMatrix::from_fn(p * n, n * p, |row, col| {
        let (ai, xi) = (row / n, row % n);
        let (xj, aj) = (col / p, col % p);
        if ai == aj && xi == xj {
            Rational::from_integer(1.into())
        } else {
            Rational::zero()
        }
    });
    let zeta = kron(&RatMatrix::column_vector(a.unit()), &x.mult_matrix());
    let sigma = crate::exactlin::tensor_vec(a.unit(), x.unit());
    WreathData::new(a.clone(), n, psi, zeta, sigma).expect("shapes agree")
}

/// Cyclic group of order `n` acting on `A` through `generator`:
/// `ψ(g^k ⊗ a) = g^k·a ⊗ g^k`, `ζ(g^j ⊗ g^k) = 1 ⊗ g^{j+k}`, `σ = 1 ⊗ e`.
pub fn smash_wreath(a: &Algebra, order: usize, generator: &RatMatrix) -> Result<WreathData, WreathError> {
    let p = a.dim();
    if order == 0 || generator.rows() != p || generator.cols() != p {
        return Err(WreathError::Shape("action matrix"));
    }
    let morph = AlgebraMorphism::new(a.clone(), a.clone(), generator.clone()).map_err(|_| WreathError::Shape("action matrix"))?;
    if !validate_morphism(&morph).is_empty() {
        return Err(WreathError::BadAction("generator is not an algebra endomorphism"));
    }
    let mut powers = alloc::vec![RatMatrix::identity(p)];
    for k in 1..=order {
        powers.push(powers[k - 1].mul(generator));
    }
    if !powers[order].is_identity() || (1..order).any(|k| powers[k].is_identity() && order % k != 0) {
        return Err(WreathError::BadAction("generator does not have the group order"));
    }
    let n = order;
    let psi = RatMatrix::from_fn(p * n, n * p, |row, col| {
        let (ai, gk) = (row / n, row % n);
        let (gj, aj) = (col / p, col % p);
        if gk == gj {
            powers[gj][(ai, aj)].clone()
        } else {
            Rational::zero()
        }
    });
    let zeta = RatMatrix::from_fn(p * n, n * n, |row, col| {
        let (ai, g) = (row / n, row % n);
        let (gj, gk) = (col / n, col % n);
        if g == (gj + gk) % n {
            a.unit()[ai].clone()
        } else {
            Rational::zero()
        }
    });
    let mut sigma = zero_vec(p * n);
    for ai in 0..p {
        sigma[ai * n] = a.unit()[ai].clone();
    }
    WreathData::validated(a.clone(), n, psi, zeta, sigma)
}

#[derive(Clone, Debug)]
pub struct WreathProduct {
    pub data: WreathData,
    pub product: Algebra,
    pub iota: AlgebraMorphism,
}

pub fn wreath_product(w: &WreathData) -> Result<WreathProduct, WreathError> {
    let report = validate_wreath(w);
    if !report.is_empty() {
        return Err(WreathError::Invalid(report));
    }
    let s = Maps::new(w);
    let (p, n) = (s.p, s.n);
    let d = p * n;
    let ixx = RatMatrix::identity(n * n);
    let mu = s
        .mx()
        .mul(&kron(&s.ia(), &w.zeta))
        .mul(&kron(&s.m, &ixx))
        .mul(&k3(&s.ia(), &w.psi, &s.ix()));
    let mut mult = Vec::with_capacity(d * d * d);
    for c in 0..d * d {
        mult.extend(mu.column(c));
    }
    let product = Algebra::new(d, mult, w.sigma.clone()).map_err(|e| WreathError::Internal(alloc::format!("{e}")))?;
    let report = validate_algebra(&product);
    if !report.is_empty() {
        return Err(WreathError::Internal(alloc::format!("wreath product fails the algebra laws: {report}")));
    }
    let iota_m = s.mx().mul(&kron(&s.ia(), &s.sigma));
    let iota = AlgebraMorphism::new(w.a.clone(), product.clone(), iota_m).map_err(|e| WreathError::Internal(alloc::format!("{e}")))?;
    let report = validate_morphism(&iota);
    if !report.is_empty() {
        return Err(WreathError::Internal(alloc::format!("iota is not an algebra morphism: {report}")));
    }
    Ok(WreathProduct { data: w.clone(), product, iota })
}

/// Linear maps on `κ ∈ A ⊗ X ⊗ X` expressing commutation with `A` and `X`.
struct KappaMaps {
    /// One `(a·κ − κ·a)` map per basis element of `A`, then one `(κ·x − x·κ)` per basis element of `X`.
    commutators: Vec<RatMatrix>,
}

impl KappaMaps {
    fn new(w: &WreathData) -> Self {
        let s = Maps::new(w);
        let (p, n) = (s.p, s.n);
        let ia = s.ia();
        let ix = s.ix();
        let ixx = RatMatrix::identity(n * n);
        let iaxx = RatMatrix::identity(p * n * n);
        let iax = RatMatrix::identity(p * n);
        let m_xx = kron(&s.m, &ixx);
        let mut commutators = Vec::with_capacity(p + n);
        let move_a = m_xx.mul(&k3(&ia, &w.psi, &ix)).mul(&kron(&iax, &w.psi));
        for k in 0..p {
            let a = w.a.basis(k);
            let left = kron(&w.a.left_mul(&a), &ixx);
            let right = move_a.mul(&kron(&iaxx, &RatMatrix::column_vector(&a)));
            commutators.push(left.sub(&right));
        }
        let kx = m_xx.mul(&k3(&ia, &w.psi, &ix)).mul(&kron(&iax, &w.zeta));
        let xk = m_xx.mul(&k3(&ia, &w.zeta, &ix)).mul(&kron(&w.psi, &ixx));
        for j in 0..n {
            let x = RatMatrix::column_vector(&crate::exactlin::unit_vec(n, j));
            let right = kx.mul(&kron(&iaxx, &x));
            let left = xk.mul(&kron(&x, &iaxx));
            commutators.push(right.sub(&left));
        }
        KappaMaps { commutators }
    }

    fn defect(&self, kappa: &[Rational]) -> Vec<Rational> {
        self.commutators.iter().flat_map(|c| c.apply(kappa)).collect()
    }

    /// Basis of the `κ` commuting with `A` and `X`.
    fn central_basis(&self, dim: usize) -> Vec<Vec<Rational>> {
        linear_kernel(dim, |k| self.defect(k))
    }
}

/// `κ ↦ Σ κ_A ζ(κ_X1 ⊗ κ_X2)`, the multiplication `A⊗X⊗X → A⊗X`.
fn kappa_multiplication(w: &WreathData) -> RatMatrix {
    let s = Maps::new(w);
    s.mx().mul(&kron(&s.ia(), &w.zeta))
}

/// `κ ↦ Σ κ_A ς(κ_X1) ⊗ κ_X2`.
fn counit_left(w: &WreathData, varsigma: &RatMatrix) -> RatMatrix {
    let s = Maps::new(w);
    s.mx().mul(&k3(&s.ia(), varsigma, &s.ix()))
}

/// `κ ↦ Σ κ_A ψ(κ_X1 ⊗ ς(κ_X2))`.
fn counit_right(w: &WreathData, varsigma: &RatMatrix) -> RatMatrix {
    let s = Maps::new(w);
    s.mx().mul(&kron(&s.ia(), &w.psi)).mul(&kron(&RatMatrix::identity(s.p * s.n), varsigma))
}

/// `m (id ⊗ ς) ψ − m (ς ⊗ id)` on `X ⊗ A`.
fn varsigma_defect(w: &WreathData, varsigma: &RatMatrix) -> RatMatrix {
    let s = Maps::new(w);
    let lhs = s.m.mul(&kron(&s.ia(), varsigma)).mul(&w.psi);
    let rhs = s.m.mul(&kron(varsigma, &s.ia()));
    lhs.sub(&rhs)
}

/// A separability witness `e ∈ A ⊗ X ⊗ X`.
pub fn verify_separable_wreath_witness(w: &WreathData, e: &[Rational]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let dim = w.a.dim() * w.x_dim * w.x_dim;
    if e.len() != dim {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    let km = KappaMaps::new(w);
    let p = w.a.dim();
    for (k, c) in km.commutators.iter().enumerate() {
        let law = if k < p { "e commutes with A" } else { "e commutes with X" };
        report.check(c.apply(e).iter().all(Zero::is_zero), law, alloc::vec![k]);
    }
    report.check(kappa_multiplication(w).apply(e) == w.sigma, "multiplication of e is sigma", alloc::vec![]);
    report
}

/// Solves for `e ∈ A ⊗ X ⊗ X` directly.
pub fn separable_wreath_witness(w: &WreathData) -> Option<Vec<Rational>> {
    let km = KappaMaps::new(w);
    let dim = w.a.dim() * w.x_dim * w.x_dim;
    let mut sys = AffineSystem::new(dim);
    let cols: Vec<Vec<Rational>> = (0..dim).map(|u| km.defect(&crate::exactlin::unit_vec(dim, u))).collect();
    if let Some(len) = cols.first().map(Vec::len) {
        sys.add_column_equations(&cols, &zero_vec(len));
    }
    let mul = kappa_multiplication(w);
    let cols: Vec<Vec<Rational>> = (0..dim).map(|u| mul.column(u)).collect();
    sys.add_column_equations(&cols, &w.sigma);
    let e = sys.solution()?.particular;
    debug_assert!(verify_separable_wreath_witness(w, &e).is_empty());
    Some(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparableWreathDecision {
    pub witness: Option<Vec<Rational>>,
    pub extension_witness: Option<ExtSeparabilityCertificate>,
}

/// Both routes, with agreement enforced.
pub fn check_separable_wreath(w: &WreathData) -> Result<SeparableWreathDecision, WreathError> {
    let wp = wreath_product(w)?;
    let witness = separable_wreath_witness(w);
    let ext = AlgebraExtension::new(wp.iota).map_err(|e| WreathError::Internal(alloc::format!("{e}")))?;
    let extension_witness = check_separable_extension(&ext);
    if witness.is_some() != extension_witness.is_some() {
        return Err(WreathError::RouteDisagreement("separability"));
    }
    Ok(SeparableWreathDecision { witness, extension_witness })
}

/// `ς: X → A` and `κ ∈ A ⊗ X ⊗ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathFrobeniusWitness {
    pub varsigma: RatMatrix,
    pub kappa: Vec<Rational>,
}

pub fn verify_wreath_frobenius_witness(w: &WreathData, wit: &WreathFrobeniusWitness) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (p, n) = (w.a.dim(), w.x_dim);
    if wit.varsigma.rows() != p || wit.varsigma.cols() != n || wit.kappa.len() != p * n * n {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    report.check(varsigma_defect(w, &wit.varsigma).is_zero(), "varsigma gives an A-bimodule map", alloc::vec![]);
    let km = KappaMaps::new(w);
    for (k, c) in km.commutators.iter().enumerate() {
        let law = if k < p { "kappa commutes with A" } else { "kappa commutes with X" };
        report.check(c.apply(&wit.kappa).iter().all(Zero::is_zero), law, alloc::vec![k]);
    }
    report.check(counit_left(w, &wit.varsigma).apply(&wit.kappa) == w.sigma, "counit law (left)", alloc::vec![]);
    report.check(counit_right(w, &wit.varsigma).apply(&wit.kappa) == w.sigma, "counit law (right)", alloc::vec![]);
    report
}

fn varsigma_basis(w: &WreathData) -> Vec<RatMatrix> {
    let (p, n) = (w.a.dim(), w.x_dim);
    linear_kernel(p * n, |v| {
        let vs = RatMatrix::from_entries(p, n, v.to_vec()).unwrap();
        varsigma_defect(w, &vs).entries().to_vec()
    })
    .into_iter()
    .map(|v| RatMatrix::from_entries(p, n, v).unwrap())
    .collect()
}

/// The pencil `t ↦ (s ↦ ϑ_ς(s·t))` into left `A`-linear maps `A#X → A`,
/// with `ϑ_ς(a ⊗ x) = a ς(x)` and `ς` ranging over the bimodule-compatible maps.
pub struct WitnessPencil {
    pub varsigmas: Vec<RatMatrix>,
    pub hom_dim: usize,
    pub pencil: Option<LinearPencil>,
}

pub fn witness_pencil(wp: &WreathProduct) -> WitnessPencil {
    let w = &wp.data;
    let e = &wp.product;
    let (p, d) = (w.a.dim(), e.dim());
    let varsigmas = varsigma_basis(w);
    let iota = wp.iota.matrix();
    let homs: Vec<Vec<Rational>> = linear_kernel(p * d, |v| {
        let f = RatMatrix::from_entries(p, d, v.to_vec()).unwrap();
        let mut out = Vec::new();
        for k in 0..p {
            let lhs = f.mul(&e.left_mul(&iota.column(k)));
            let rhs = w.a.left_mul(&w.a.basis(k)).mul(&f);
            out.extend(lhs.sub(&rhs).entries().iter().cloned());
        }
        out
    });
    if homs.len() != d {
        return WitnessPencil { varsigmas, hom_dim: homs.len(), pencil: None };
    }
    let m = w.a.mult_matrix();
    let right_mults: Vec<RatMatrix> = (0..d).map(|t| e.right_mul(&e.basis(t))).collect();
    let coeffs = varsigmas
        .iter()
        .map(|vs| {
            let theta = m.mul(&kron(&RatMatrix::identity(p), vs));
            RatMatrix::from_columns(d, d, |t| {
                coordinates_in(&homs, theta.mul(&right_mults[t]).entries()).expect("left A-linear")
            })
        })
        .collect();
    WitnessPencil { varsigmas, hom_dim: d, pencil: Some(LinearPencil::new(d, coeffs)) }
}

fn complete_wreath_witness(w: &WreathData, central: &[Vec<Rational>], varsigma: &RatMatrix) -> Option<WreathFrobeniusWitness> {
    let cl = counit_left(w, varsigma);
    let cr = counit_right(w, varsigma);
    let mut sys = AffineSystem::new(central.len());
    let cols: Vec<Vec<Rational>> = central.iter().map(|c| cl.apply(c)).collect();
    sys.add_column_equations(&cols, &w.sigma);
    let cols: Vec<Vec<Rational>> = central.iter().map(|c| cr.apply(c)).collect();
    sys.add_column_equations(&cols, &w.sigma);
    if central.is_empty() && !w.sigma.iter().all(Zero::is_zero) {
        return None;
    }
    let y = sys.solution()?.particular;
    let mut kappa = zero_vec(w.a.dim() * w.x_dim * w.x_dim);
    for (c, b) in y.iter().zip(central) {
        crate::exactlin::add_scaled(&mut kappa, c, b);
    }
    let wit = WreathFrobeniusWitness { varsigma: varsigma.clone(), kappa };
    verify_wreath_frobenius_witness(w, &wit).is_empty().then_some(wit)
}

/// Frobenius decision from witnesses in `A ⊗ X ⊗ X`.
pub fn frobenius_wreath_witness(
    wp: &WreathProduct,
    opts: &SearchOptions,
) -> Result<FrobeniusDecision<WreathFrobeniusWitness>, SearchError> {
    let w = &wp.data;
    let wpen = witness_pencil(wp);
    let Some(pencil) = wpen.pencil else {
        return Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::HomDimensionMismatch {
            source_dim: wp.product.dim(),
            hom_dim: wpen.hom_dim,
        }));
    };
    let central = KappaMaps::new(w).central_basis(w.a.dim() * w.x_dim * w.x_dim);
    let mut sampler = Sampler::new(opts.seed);
    let accept = |t: &[Rational]| {
        let mut vs = RatMatrix::zeros(w.a.dim(), w.x_dim);
        for (c, b) in t.iter().zip(&wpen.varsigmas) {
            vs = vs.add(&b.scale(c));
        }
        complete_wreath_witness(w, &central, &vs)
    };
    match search_pencil(&pencil, opts, &mut sampler, accept)? {
        PencilOutcome::Found(c) => Ok(FrobeniusDecision::Frobenius(c)),
        PencilOutcome::Singular(p) => Ok(FrobeniusDecision::NotFrobenius(NonFrobeniusProof::SingularPairing(p))),
    }
}

pub fn verify_non_frobenius_wreath(wp: &WreathProduct, proof: &NonFrobeniusProof) -> bool {
    let wpen = witness_pencil(wp);
    match proof {
        NonFrobeniusProof::HomDimensionMismatch { source_dim, hom_dim } => {
            *source_dim == wp.product.dim() && *hom_dim == wpen.hom_dim && wpen.pencil.is_none()
        }
        NonFrobeniusProof::SingularPairing(p) => wpen.pencil.is_some_and(|pen| verify_singular(&pen, p)),
    }
}

#[derive(Clone, Debug)]
pub struct FrobeniusWreathDecision {
    pub extension_route: FrobeniusDecision<ExtFrobeniusCertificate>,
    pub witness_route: FrobeniusDecision<WreathFrobeniusWitness>,
}

impl FrobeniusWreathDecision {
    pub fn is_frobenius(&self) -> bool {
        self.extension_route.is_frobenius()
    }
}

/// Both routes, with agreement enforced.
pub fn check_frobenius_wreath(w: &WreathData, opts: &SearchOptions) -> Result<FrobeniusWreathDecision, WreathError> {
    let wp = wreath_product(w)?;
    let witness_route = frobenius_wreath_witness(&wp, opts)?;
    let ext = AlgebraExtension::new(wp.iota.clone()).map_err(|e| WreathError::Internal(alloc::format!("{e}")))?;
    let extension_route = check_frobenius_extension(&ext, opts)?;
    if witness_route.is_frobenius() != extension_route.is_frobenius() {
        return Err(WreathError::RouteDisagreement("the Frobenius property"));
    }
    Ok(FrobeniusWreathDecision { extension_route, witness_route })
}

/// `u ↦ w u w⁻¹` on `M_n` in the `E_ij` basis.
pub fn conjugation_action(n: usize, u: &RatMatrix) -> Option<RatMatrix> {
    let ui = u.inverse()?;
    let a = crate::algebra::matrix_algebra(n).ok()?;
    let u_el = u.entries().to_vec();
    let ui_el = ui.entries().to_vec();
    Some(RatMatrix::from_columns(n * n, n * n, |k| a.product(&a.product(&u_el, &a.basis(k)), &ui_el)))
}

/// Named wreaths: trivial wreaths on small builtin pairs and smash products
/// of cyclic actions, some with randomly drawn parameters from `seed`.
pub fn wreath_suite(seed: u64, max_trivial_dim: usize) -> Vec<(String, WreathData)> {
    use crate::algebra::{builtin, builtin_suite};
    let mut out = Vec::new();
    let suite = builtin_suite();
    for ba in &suite {
        for bx in &suite {
            let a = ba.build().expect("builtin");
            let x = bx.build().expect("builtin");
            if a.dim() * x.dim() <= max_trivial_dim {
                out.push((alloc::format!("trivial {ba} # {bx}"), trivial_wreath(&a, &x)));
            }
        }
    }
    let mut s = Sampler::new(seed);
    let neg = |k: usize, signs: &[i64]| RatMatrix::from_fn(k, k, |i, j| if i == j { Rational::from_integer(signs[i].into()) } else { Rational::zero() });
    let mut push = |name: String, a: &Algebra, order: usize, g: RatMatrix| {
        let w = smash_wreath(a, order, &g).unwrap_or_else(|e| panic!("{name}: {e}"));
        out.push((name, w));
    };
    let t2 = builtin("truncated:2").expect("builtin");
    push("C2 on truncated:2 by x -> -x".into(), &t2, 2, neg(2, &[1, -1]));
    let t3 = builtin("truncated:3").expect("builtin");
    push("C2 on truncated:3 by x -> -x".into(), &t3, 2, neg(3, &[1, -1, 1]));
    let c = s.rational();
    let mut g = neg(3, &[1, -1, 1]);
    g[(2, 1)] = c.clone();
    push(alloc::format!("C2 on truncated:3 by x -> -x + ({c})x^2"), &t3, 2, g);
    let c2 = builtin("cyclic:2").expect("builtin");
    push("C2 on cyclic:2 by g -> -g".into(), &c2, 2, neg(2, &[1, -1]));
    let c4 = builtin("cyclic:4").expect("builtin");
    let h3 = RatMatrix::from_fn(4, 4, |i, j| if i == (3 * j) % 4 { Rational::from_integer(1.into()) } else { Rational::zero() });
    push("C2 on cyclic:4 by h -> h^3".into(), &c4, 2, h3);
    let m2 = builtin("matrix:2").expect("builtin");
    let swap = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
    push("C2 on matrix:2 by conjugation".into(), &m2, 2, conjugation_action(2, &swap).expect("invertible"));
    loop {
        // [[a, b], [c, -a]] squares to a scalar
        let (a, b, c) = (s.rational(), s.rational(), s.rational());
        let u = RatMatrix::from_rows(&[alloc::vec![a.clone(), b.clone()], alloc::vec![c.clone(), -a.clone()]]);
        if let Some(g) = conjugation_action(2, &u) {
            push(alloc::format!("C2 on matrix:2 by conjugation with [[{a},{b}],[{c},{}]]", -a.clone()), &m2, 2, g);
            break;
        }
    }
    let rot = RatMatrix::from_i64_rows(&[&[0, -1], &[1, -1]]);
    push("C3 on matrix:2 by conjugation".into(), &m2, 3, conjugation_action(2, &rot).expect("invertible"));
    loop {
        let v = RatMatrix::from_fn(2, 2, |_, _| s.rational());
        if let Some(vi) = v.inverse() {
            let u = v.mul(&rot).mul(&vi);
            push("C3 on matrix:2 by a random conjugate of rotation".into(), &m2, 3, conjugation_action(2, &u).expect("invertible"));
            break;
        }
    }
    let d3 = builtin("diagonal:3").expect("builtin");
    let cyc = RatMatrix::from_fn(3, 3, |i, j| if i == (j + 1) % 3 { Rational::from_integer(1.into()) } else { Rational::zero() });
    push("C3 on diagonal:3 by cyclic permutation".into(), &d3, 3, cyc);
    out
}
