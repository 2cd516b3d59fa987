//! Bimodules over an algebra `R`, the tensor product over `R` as an explicit
//! quotient, the unit isomorphisms, lifted maps, the associator, and the
//! Frobenius monoidal structure of the forgetful functor to vector spaces.
//!
//! Tensoring is exact over a field, so no flatness conditions are checked.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::exactlin::{kron, quotient_by_sparse, QuotientSpace, RatMatrix, Rational};
use crate::frobsep::FrobeniusCertificate;
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimodError {
    RingMismatch,
    Shape { what: &'static str },
    /// A map that should descend to a quotient does not kill the relations.
    NotWellDefined { what: &'static str },
    NotLinear { side: &'static str },
    InvalidCertificate,
}

impl fmt::Display for BimodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BimodError::RingMismatch => f.write_str("bimodules are over different rings"),
            BimodError::Shape { what } => write!(f, "shape mismatch in {what}"),
            BimodError::NotWellDefined { what } => write!(f, "{what} does not factor through the quotient"),
            BimodError::NotLinear { side } => write!(f, "map is not {side}-linear"),
            BimodError::InvalidCertificate => f.write_str("Frobenius certificate does not verify"),
        }
    }
}

/// An `R`-bimodule given by one action matrix per basis element of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    ring: Algebra,
    dim: usize,
    left: Vec<RatMatrix>,
    right: Vec<RatMatrix>,
}

impl Bimodule {
    /// `left[k]` is `x ↦ r_k·x` and `right[k]` is `x ↦ x·r_k`.
    pub fn new(ring: Algebra, dim: usize, left: Vec<RatMatrix>, right: Vec<RatMatrix>) -> Result<Self, BimodError> {
        let ok = |ms: &[RatMatrix]| ms.len() == ring.dim() && ms.iter().all(|m| m.rows() == dim && m.cols() == dim);
        if !ok(&left) || !ok(&right) {
            return Err(BimodError::Shape { what: "action matrices" });
        }
        Ok(Bimodule { ring, dim, left, right })
    }

    /// From action tensors `λ[r][x][y]` (coefficient of `y` in `r·x`) and `ρ[x][r][y]`.
    pub fn from_tensors(ring: Algebra, dim: usize, lambda: &[Rational], rho: &[Rational]) -> Result<Self, BimodError> {
        let dr = ring.dim();
        if lambda.len() != dr * dim * dim || rho.len() != dr * dim * dim {
            return Err(BimodError::Shape { what: "action tensors" });
        }
        let left = (0..dr)
            .map(|r| RatMatrix::from_fn(dim, dim, |y, x| lambda[(r * dim + x) * dim + y].clone()))
            .collect();
        let right = (0..dr)
            .map(|r| RatMatrix::from_fn(dim, dim, |y, x| rho[(x * dr + r) * dim + y].clone()))
            .collect();
        Bimodule::new(ring, dim, left, right)
    }

    /// `R` acting on itself by multiplication.
    pub fn regular(ring: &Algebra) -> Self {
        let left = (0..ring.dim()).map(|k| ring.left_mul(&ring.basis(k))).collect();
        let right = (0..ring.dim()).map(|k| ring.right_mul(&ring.basis(k))).collect();
        Bimodule { ring: ring.clone(), dim: ring.dim(), left, right }
    }

    /// `S` as an `R`-bimodule through `i: R → S`.
    pub fn restricted(i: &AlgebraMorphism) -> Self {
        let s = i.target();
        let r = i.source();
        let left = (0..r.dim()).map(|k| s.left_mul(&i.matrix().column(k))).collect();
        let right = (0..r.dim()).map(|k| s.right_mul(&i.matrix().column(k))).collect();
        Bimodule { ring: r.clone(), dim: s.dim(), left, right }
    }

    /// A vector space of dimension `dim` over a one-dimensional base.
    pub fn over_base(ring: &Algebra, dim: usize) -> Result<Self, BimodError> {
        if ring.dim() != 1 {
            return Err(BimodError::Shape { what: "base ring must be one-dimensional" });
        }
        let id = RatMatrix::identity(dim).scale(&ring.unit()[0].recip());
        Bimodule::new(ring.clone(), dim, alloc::vec![id.clone()], alloc::vec![id])
    }

    pub fn ring(&self) -> &Algebra {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_basis_action(&self, k: usize) -> &RatMatrix {
        &self.left[k]
    }

    pub fn right_basis_action(&self, k: usize) -> &RatMatrix {
        &self.right[k]
    }

    fn combine(&self, ms: &[RatMatrix], r: &[Rational]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.dim, self.dim);
        for (c, m) in r.iter().zip(ms) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Matrix of `x ↦ r·x`.
    pub fn left_action(&self, r: &[Rational]) -> RatMatrix {
        self.combine(&self.left, r)
    }

    /// Matrix of `x ↦ x·r`.
    pub fn right_action(&self, r: &[Rational]) -> RatMatrix {
        self.combine(&self.right, r)
    }

    /// `μ: R ⊗ X → X`.
    pub fn left_action_map(&self) -> RatMatrix {
        let n = self.dim;
        RatMatrix::from_columns(n, self.ring.dim() * n, |c| self.left[c / n].column(c % n))
    }

    /// `ν: X ⊗ R → X`.
    pub fn right_action_map(&self) -> RatMatrix {
        let dr = self.ring.dim();
        RatMatrix::from_columns(self.dim, self.dim * dr, |c| self.right[c % dr].column(c / dr))
    }
}

pub fn validate_bimodule(x: &Bimodule) -> ValidationReport {
    let r = &x.ring;
    let d = r.dim();
    let mut report = ValidationReport::default();
    report.check(x.left_action(r.unit()).is_identity(), "left unit acts trivially", alloc::vec![]);
    report.check(x.right_action(r.unit()).is_identity(), "right unit acts trivially", alloc::vec![]);
    for i in 0..d {
        for j in 0..d {
            let rij = r.basis_product(i, j);
            report.check(x.left_action(rij) == x.left[i].mul(&x.left[j]), "left action associative", alloc::vec![i, j]);
            report.check(x.right_action(rij) == x.right[j].mul(&x.right[i]), "right action associative", alloc::vec![i, j]);
            report.check(x.left[i].mul(&x.right[j]) == x.right[j].mul(&x.left[i]), "actions commute", alloc::vec![i, j]);
        }
    }
    report
}

/// `X ⊗_R Y` as the quotient of `X ⊗ Y` by `x·r ⊗ y − x ⊗ r·y`.
#[derive(Clone, Debug)]
pub struct TensorOverR {
    left: Bimodule,
    right: Bimodule,
    quotient: QuotientSpace,
}

impl TensorOverR {
    pub fn new(x: &Bimodule, y: &Bimodule) -> Result<Self, BimodError> {
        if x.ring != y.ring {
            return Err(BimodError::RingMismatch);
        }
        let (dx, dy) = (x.dim, y.dim);
        let mut gens = Vec::with_capacity(dx * dy * x.ring.dim());
        for k in 0..x.ring.dim() {
            for a in 0..dx {
                let xr = x.right[k].column(a);
                for b in 0..dy {
                    let ry = y.left[k].column(b);
                    let mut g: Vec<(usize, Rational)> = Vec::new();
                    for (p, c) in xr.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        g.push((p * dy + b, c.clone()));
                    }
                    for (p, c) in ry.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        g.push((a * dy + p, -c.clone()));
                    }
                    g.sort_by_key(|(i, _)| *i);
                    let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(g.len());
                    for (i, c) in g {
                        match merged.last_mut() {
                            Some((j, acc)) if *j == i => *acc += c,
                            _ => merged.push((i, c)),
                        }
                    }
                    merged.retain(|(_, c)| !c.is_zero());
                    gens.push(merged);
                }
            }
        }
        let quotient = quotient_by_sparse(dx * dy, gens);
        Ok(TensorOverR { left: x.clone(), right: y.clone(), quotient })
    }

    pub fn left(&self) -> &Bimodule {
        &self.left
    }

    pub fn right(&self) -> &Bimodule {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    /// The projection `q: X ⊗ Y → X ⊗_R Y`.
    pub fn q(&self) -> &RatMatrix {
        self.quotient.projection()
    }

    pub fn section(&self) -> &RatMatrix {
        self.quotient.section()
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.quotient.project(v)
    }

    /// Whether `f` (defined on `X ⊗ Y`) kills every relation.
    pub fn annihilates_relations(&self, f: &RatMatrix) -> bool {
        self.quotient.killed().basis().iter().all(|v| f.apply(v).iter().all(Zero::is_zero))
    }

    /// The unique `f̄` with `f̄ ∘ q = f`.
    pub fn factor(&self, f: &RatMatrix, what: &'static str) -> Result<RatMatrix, BimodError> {
        if f.cols() != self.ambient_dim() {
            return Err(BimodError::Shape { what });
        }
        if !self.annihilates_relations(f) {
            return Err(BimodError::NotWellDefined { what });
        }
        Ok(f.mul(self.section()))
    }

    /// `X ⊗_R Y` with its induced `R`-bimodule structure.
    pub fn as_bimodule(&self) -> Bimodule {
        let (dx, dy) = (self.left.dim, self.right.dim);
        let q = self.q();
        let s = self.section();
        let left = self.left.left.iter().map(|l| q.mul(&kron(l, &RatMatrix::identity(dy))).mul(s)).collect();
        let right = self.right.right.iter().map(|r| q.mul(&kron(&RatMatrix::identity(dx), r)).mul(s)).collect();
        Bimodule { ring: self.left.ring.clone(), dim: self.dim(), left, right }
    }

    /// Checks that the induced actions satisfy `μ(id ⊗ q) = q(μ_X ⊗ id)` and its mirror.
    pub fn verify_induced_actions(&self) -> ValidationReport {
        let (dx, dy) = (self.left.dim, self.right.dim);
        let induced = self.as_bimodule();
        let mut report = ValidationReport::default();
        for k in 0..self.left.ring.dim() {
            let l = kron(&self.left.left[k], &RatMatrix::identity(dy));
            let r = kron(&RatMatrix::identity(dx), &self.right.right[k]);
            report.check(self.annihilates_relations(&self.q().mul(&l)), "left action preserves relations", alloc::vec![k]);
            report.check(self.annihilates_relations(&self.q().mul(&r)), "right action preserves relations", alloc::vec![k]);
            report.check(induced.left[k].mul(self.q()) == self.q().mul(&l), "induced left action", alloc::vec![k]);
            report.check(induced.right[k].mul(self.q()) == self.q().mul(&r), "induced right action", alloc::vec![k]);
        }
        report
    }
}

pub fn tensor_over_r(x: &Bimodule, y: &Bimodule) -> Result<TensorOverR, BimodError> {
    TensorOverR::new(x, y)
}

/// A pair of mutually inverse maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iso {
    pub forward: RatMatrix,
    pub inverse: RatMatrix,
}

impl Iso {
    pub fn is_valid(&self) -> bool {
        self.forward.rows() == self.inverse.cols()
            && self.forward.cols() == self.inverse.rows()
            && self.forward.mul(&self.inverse).is_identity()
            && self.inverse.mul(&self.forward).is_identity()
    }
}

/// `Υ: X ⊗_R R → X` with `Υ ∘ q = ν_X`, inverse `q ∘ (id ⊗ η)`.
pub fn upsilon(t: &TensorOverR) -> Result<Iso, BimodError> {
    let x = t.left();
    if t.right() != &Bimodule::regular(x.ring()) {
        return Err(BimodError::Shape { what: "upsilon needs X ⊗_R R" });
    }
    let forward = t.factor(&x.right_action_map(), "right action")?;
    let unit = RatMatrix::column_vector(x.ring().unit());
    let inverse = t.q().mul(&kron(&RatMatrix::identity(x.dim()), &unit));
    Ok(Iso { forward, inverse })
}

/// `Υ′: R ⊗_R Y → Y` with `Υ′ ∘ q = μ_Y`, inverse `q ∘ (η ⊗ id)`.
pub fn upsilon_prime(t: &TensorOverR) -> Result<Iso, BimodError> {
    let y = t.right();
    if t.left() != &Bimodule::regular(y.ring()) {
        return Err(BimodError::Shape { what: "upsilon' needs R ⊗_R Y" });
    }
    let forward = t.factor(&y.left_action_map(), "left action")?;
    let unit = RatMatrix::column_vector(y.ring().unit());
    let inverse = t.q().mul(&kron(&unit, &RatMatrix::identity(y.dim())));
    Ok(Iso { forward, inverse })
}

/// Whether `f: X → Y` commutes with the left `R`-actions.
pub fn is_left_linear(x: &Bimodule, y: &Bimodule, f: &RatMatrix) -> bool {
    (0..x.ring().dim()).all(|k| f.mul(&x.left[k]) == y.left[k].mul(f))
}

pub fn is_right_linear(x: &Bimodule, y: &Bimodule, f: &RatMatrix) -> bool {
    (0..x.ring().dim()).all(|k| f.mul(&x.right[k]) == y.right[k].mul(f))
}

/// `f̃: M ⊗_R X → M ⊗_R Y` with `f̃ q = q (id ⊗ f)`, for left `R`-linear `f`.
pub fn lift_tilde(src: &TensorOverR, dst: &TensorOverR, f: &RatMatrix) -> Result<RatMatrix, BimodError> {
    if src.left() != dst.left() || f.cols() != src.right().dim() || f.rows() != dst.right().dim() {
        return Err(BimodError::Shape { what: "lift_tilde" });
    }
    if !is_left_linear(src.right(), dst.right(), f) {
        return Err(BimodError::NotLinear { side: "left" });
    }
    let m = RatMatrix::identity(src.left().dim());
    src.factor(&dst.q().mul(&kron(&m, f)), "lifted map")
}

/// `ĝ: M ⊗_R Y → N ⊗_R Y` with `ĝ q = q (g ⊗ id)`, for right `R`-linear `g`.
pub fn lift_hat(src: &TensorOverR, dst: &TensorOverR, g: &RatMatrix) -> Result<RatMatrix, BimodError> {
    if src.right() != dst.right() || g.cols() != src.left().dim() || g.rows() != dst.left().dim() {
        return Err(BimodError::Shape { what: "lift_hat" });
    }
    if !is_right_linear(src.left(), dst.left(), g) {
        return Err(BimodError::NotLinear { side: "right" });
    }
    let y = RatMatrix::identity(src.right().dim());
    src.factor(&dst.q().mul(&kron(g, &y)), "lifted map")
}

/// The four tensor products needed to compare `(X ⊗_R Y) ⊗_R Z` with
/// `X ⊗_R (Y ⊗_R Z)`, plus the canonical isomorphism between them.
#[derive(Clone, Debug)]
pub struct TripleTensor {
    pub xy: TensorOverR,
    pub yz: TensorOverR,
    pub xy_z: TensorOverR,
    pub x_yz: TensorOverR,
    /// `(X ⊗_R Y) ⊗_R Z → X ⊗_R (Y ⊗_R Z)`.
    pub assoc: Iso,
}

impl TripleTensor {
    pub fn new(x: &Bimodule, y: &Bimodule, z: &Bimodule) -> Result<Self, BimodError> {
        let xy = TensorOverR::new(x, y)?;
        let yz = TensorOverR::new(y, z)?;
        let xy_z = TensorOverR::new(&xy.as_bimodule(), z)?;
        let x_yz = TensorOverR::new(x, &yz.as_bimodule())?;
        let g = Self::right_nested_projection(x, &yz, &x_yz);
        let h = Self::left_nested_projection(z, &xy, &xy_z);
        let forward = g.mul(&kron(xy.section(), &RatMatrix::identity(z.dim()))).mul(xy_z.section());
        let inverse = h.mul(&kron(&RatMatrix::identity(x.dim()), yz.section())).mul(x_yz.section());
        if forward.mul(&h) != g || inverse.mul(&g) != h {
            return Err(BimodError::NotWellDefined { what: "associator" });
        }
        Ok(TripleTensor { xy, yz, xy_z, x_yz, assoc: Iso { forward, inverse } })
    }

    /// `q_{X,YZ} ∘ (id ⊗ q_{Y,Z})` on `X ⊗ Y ⊗ Z`.
    fn right_nested_projection(x: &Bimodule, yz: &TensorOverR, x_yz: &TensorOverR) -> RatMatrix {
        x_yz.q().mul(&kron(&RatMatrix::identity(x.dim()), yz.q()))
    }

    /// `q_{XY,Z} ∘ (q_{X,Y} ⊗ id)` on `X ⊗ Y ⊗ Z`.
    fn left_nested_projection(z: &Bimodule, xy: &TensorOverR, xy_z: &TensorOverR) -> RatMatrix {
        xy_z.q().mul(&kron(xy.q(), &RatMatrix::identity(z.dim())))
    }

    pub fn x(&self) -> &Bimodule {
        self.xy.left()
    }

    pub fn y(&self) -> &Bimodule {
        self.xy.right()
    }

    pub fn z(&self) -> &Bimodule {
        self.yz.right()
    }

    /// `q_{XY,Z} ∘ (q_{X,Y} ⊗ id)`.
    pub fn left_projection(&self) -> RatMatrix {
        Self::left_nested_projection(self.z(), &self.xy, &self.xy_z)
    }

    /// `q_{X,YZ} ∘ (id ⊗ q_{Y,Z})`.
    pub fn right_projection(&self) -> RatMatrix {
        Self::right_nested_projection(self.x(), &self.yz, &self.x_yz)
    }
}

/// The opmonoidal half of the forgetful functor `R`-bimodules → vector
/// spaces, determined by a Frobenius pair of `R`.
#[derive(Clone, Debug)]
pub struct ForgetfulFrobStructure {
    pub cert: FrobeniusCertificate,
}

impl ForgetfulFrobStructure {
    pub fn new(cert: &FrobeniusCertificate) -> Result<Self, BimodError> {
        if !crate::frobsep::verify_frobenius(cert).is_empty() {
            return Err(BimodError::InvalidCertificate);
        }
        Ok(ForgetfulFrobStructure { cert: cert.clone() })
    }

    pub fn ring(&self) -> &Algebra {
        &self.cert.algebra
    }

    /// `ψ_0 = ϑ: R → Q`.
    pub fn psi0(&self) -> &[Rational] {
        &self.cert.theta
    }

    /// `x ⊗ y ↦ Σ x·e' ⊗ e''·y` on `X ⊗ Y`.
    pub fn casimir_insertion(&self, x: &Bimodule, y: &Bimodule) -> RatMatrix {
        let d = self.ring().dim();
        let mut out = RatMatrix::zeros(x.dim() * y.dim(), x.dim() * y.dim());
        for a in 0..d {
            for b in 0..d {
                let c = &self.cert.casimir[a * d + b];
                if !c.is_zero() {
                    out = out.add(&kron(&x.right[a], &y.left[b]).scale(c));
                }
            }
        }
        out
    }

    /// `ψ_{X,Y}: X ⊗_R Y → X ⊗ Y`.
    pub fn psi(&self, t: &TensorOverR) -> Result<RatMatrix, BimodError> {
        if t.left().ring() != self.ring() {
            return Err(BimodError::RingMismatch);
        }
        t.factor(&self.casimir_insertion(t.left(), t.right()), "casimir insertion")
    }

    /// Defining equation, bilinearity, and the separable-case splitting when `m(e) = 1`.
    pub fn verify_pair(&self, t: &TensorOverR) -> Result<ValidationReport, BimodError> {
        let psi = self.psi(t)?;
        let (x, y) = (t.left(), t.right());
        let induced = t.as_bimodule();
        let mut report = ValidationReport::default();
        report.check(psi.mul(t.q()) == self.casimir_insertion(x, y), "psi defining equation", alloc::vec![]);
        for k in 0..self.ring().dim() {
            let l = kron(&x.left[k], &RatMatrix::identity(y.dim()));
            let r = kron(&RatMatrix::identity(x.dim()), &y.right[k]);
            report.check(psi.mul(&induced.left[k]) == l.mul(&psi), "psi left linear", alloc::vec![k]);
            report.check(psi.mul(&induced.right[k]) == r.mul(&psi), "psi right linear", alloc::vec![k]);
        }
        Ok(report)
    }

    /// Whether `q ∘ ψ = id`, which holds when the Casimir element multiplies to 1.
    pub fn splits_projection(&self, t: &TensorOverR) -> Result<bool, BimodError> {
        Ok(t.q().mul(&self.psi(t)?).is_identity())
    }

    /// The monoidal, opmonoidal and Frobenius compatibility diagrams on `(X, Y, Z)`.
    pub fn verify_triple(&self, tri: &TripleTensor) -> Result<ValidationReport, BimodError> {
        let (x, y, z) = (tri.x(), tri.y(), tri.z());
        let ix = RatMatrix::identity(x.dim());
        let iz = RatMatrix::identity(z.dim());
        let a = &tri.assoc;
        let mut report = ValidationReport::default();

        report.check(tri.assoc.is_valid(), "associator invertible", alloc::vec![]);
        report.check(a.forward.mul(&tri.left_projection()) == tri.right_projection(), "monoidal associativity", alloc::vec![]);

        let psi_xy = self.psi(&tri.xy)?;
        let psi_yz = self.psi(&tri.yz)?;
        let psi_xy_z = self.psi(&tri.xy_z)?;
        let psi_x_yz = self.psi(&tri.x_yz)?;
        let lhs = kron(&psi_xy, &iz).mul(&psi_xy_z);
        let rhs = kron(&ix, &psi_yz).mul(&psi_x_yz).mul(&a.forward);
        report.check(lhs == rhs, "opmonoidal coassociativity", alloc::vec![]);

        let lhs = kron(&ix, tri.yz.q()).mul(&kron(&psi_xy, &iz));
        let rhs = psi_x_yz.mul(&a.forward).mul(tri.xy_z.q());
        report.check(lhs == rhs, "frobenius compatibility (left)", alloc::vec![]);

        let lhs = kron(tri.xy.q(), &iz).mul(&kron(&ix, &psi_yz));
        let rhs = psi_xy_z.mul(&a.inverse).mul(tri.x_yz.q());
        report.check(lhs == rhs, "frobenius compatibility (right)", alloc::vec![]);

        for m in [x, y, z] {
            report.extend(self.verify_units(m)?);
        }
        Ok(report)
    }

    /// Unit laws on one bimodule: `Υ′ q (η ⊗ id) = id`, `(ϑ ⊗ id) ψ_{R,X} = Υ′`
    /// and their right-hand mirrors.
    pub fn verify_units(&self, x: &Bimodule) -> Result<ValidationReport, BimodError> {
        let r = Bimodule::regular(self.ring());
        let rx = TensorOverR::new(&r, x)?;
        let xr = TensorOverR::new(x, &r)?;
        let up = upsilon_prime(&rx)?;
        let u = upsilon(&xr)?;
        let ix = RatMatrix::identity(x.dim());
        let unit = RatMatrix::column_vector(self.ring().unit());
        let theta = RatMatrix::row_vector(self.psi0());
        let mut report = ValidationReport::default();
        report.check(up.is_valid() && u.is_valid(), "unit isomorphisms invertible", alloc::vec![]);
        report.check(up.forward.mul(rx.q()).mul(&kron(&unit, &ix)).is_identity(), "monoidal left unit", alloc::vec![]);
        report.check(u.forward.mul(xr.q()).mul(&kron(&ix, &unit)).is_identity(), "monoidal right unit", alloc::vec![]);
        report.check(kron(&theta, &ix).mul(&self.psi(&rx)?) == up.forward, "opmonoidal left counit", alloc::vec![]);
        report.check(kron(&ix, &theta).mul(&self.psi(&xr)?) == u.forward, "opmonoidal right counit", alloc::vec![]);
        Ok(report)
    }
}
