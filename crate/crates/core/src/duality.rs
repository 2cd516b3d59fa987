//! Dual objects of finite-dimensional spaces, their lifts to `R`-bimodules
//! when `R` is Frobenius and separable, and the Frobenius isomorphism `A ≅ A*`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::bimod::{
    lift_hat, lift_tilde, upsilon, upsilon_prime, validate_bimodule, BimodError, Bimodule, ForgetfulFrobStructure,
    TensorOverR, TripleTensor,
};
use crate::exactlin::{dot, kron, RatMatrix, Rational};
use crate::frobsep::{form_matrix, sandwich, verify_frobenius, FrobeniusCertificate};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityError {
    Shape(&'static str),
    Precondition(&'static str),
    Bimod(BimodError),
    /// The constructed data fails a law it must satisfy.
    Invariant(ValidationReport),
}

impl fmt::Display for DualityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityError::Shape(s) => write!(f, "shape mismatch: {s}"),
            DualityError::Precondition(s) => write!(f, "precondition failed: {s}"),
            DualityError::Bimod(e) => write!(f, "{e}"),
            DualityError::Invariant(r) => write!(f, "constructed data fails: {r}"),
        }
    }
}

impl From<BimodError> for DualityError {
    fn from(e: BimodError) -> Self {
        DualityError::Bimod(e)
    }
}

/// `(ρ, λ): Y ⊣ X` with `ρ ∈ X ⊗ Y` and `λ: Y ⊗ X → Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub x_dim: usize,
    pub y_dim: usize,
    pub rho: Vec<Rational>,
    /// A `1 × (dim Y · dim X)` row.
    pub lambda: RatMatrix,
}

impl Adjunction {
    /// `P[a][c]`, the coefficient of `x_a ⊗ y_c` in `ρ`.
    pub fn rho_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.x_dim, self.y_dim, |a, c| self.rho[a * self.y_dim + c].clone())
    }

    /// `Λ[c][b] = λ(y_c ⊗ x_b)`.
    pub fn lambda_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.y_dim, self.x_dim, |c, b| self.lambda[(0, c * self.x_dim + b)].clone())
    }
}

pub fn verify_adjunction(adj: &Adjunction) -> ValidationReport {
    let (dx, dy) = (adj.x_dim, adj.y_dim);
    let mut report = ValidationReport::default();
    if adj.rho.len() != dx * dy || adj.lambda.rows() != 1 || adj.lambda.cols() != dx * dy {
        report.check(false, "shape", alloc::vec![]);
        return report;
    }
    let rho = RatMatrix::column_vector(&adj.rho);
    let ix = RatMatrix::identity(dx);
    let iy = RatMatrix::identity(dy);
    let snake_x = kron(&ix, &adj.lambda).mul(&kron(&rho, &ix));
    let snake_y = kron(&adj.lambda, &iy).mul(&kron(&iy, &rho));
    report.check(snake_x.is_identity(), "snake on X", alloc::vec![]);
    report.check(snake_y.is_identity(), "snake on Y", alloc::vec![]);
    report
}

/// `Y` the coordinate dual of `Q^dim`, `ρ = Σ e_i ⊗ e*_i`, `λ` the evaluation.
pub fn canonical_dual(dim: usize) -> Adjunction {
    let id = RatMatrix::identity(dim);
    Adjunction { x_dim: dim, y_dim: dim, rho: id.entries().to_vec(), lambda: RatMatrix::row_vector(id.entries()) }
}

/// `(ρ₀, λ₀): Y ⊣ X` in `R`-bimodules; `ρ₀` is stored by `ρ₀(1) ∈ X ⊗_R Y`.
#[derive(Clone, Debug)]
pub struct BimodAdjunction {
    pub ring: Algebra,
    pub x: Bimodule,
    pub y: Bimodule,
    pub rho0: Vec<Rational>,
    /// `dim R × dim(Y ⊗_R X)`.
    pub lambda0: RatMatrix,
}

impl BimodAdjunction {
    /// `r ↦ r·ρ₀(1)`.
    pub fn rho0_map(&self, xy: &TensorOverR) -> RatMatrix {
        let induced = xy.as_bimodule();
        RatMatrix::from_columns(xy.dim(), self.ring.dim(), |k| induced.left_basis_action(k).apply(&self.rho0))
    }
}

pub fn verify_bimod_adjunction(adj: &BimodAdjunction) -> Result<ValidationReport, DualityError> {
    let (x, y) = (&adj.x, &adj.y);
    let r = Bimodule::regular(&adj.ring);
    let mut report = ValidationReport::default();
    report.extend(validate_bimodule(x));
    report.extend(validate_bimodule(y));
    if !report.is_empty() {
        return Ok(report);
    }
    let xyx = TripleTensor::new(x, y, x)?;
    let yxy = TripleTensor::new(y, x, y)?;
    let xy = &xyx.xy;
    let yx = &xyx.yz;
    if adj.rho0.len() != xy.dim() || adj.lambda0.rows() != adj.ring.dim() || adj.lambda0.cols() != yx.dim() {
        return Err(DualityError::Shape("bimodule adjunction data"));
    }
    let rho0 = adj.rho0_map(xy);
    let xy_mod = xy.as_bimodule();
    let yx_mod = yx.as_bimodule();
    let central = (0..adj.ring.dim()).all(|k| {
        xy_mod.left_basis_action(k).apply(&adj.rho0) == xy_mod.right_basis_action(k).apply(&adj.rho0)
    });
    report.check(central, "rho0 is an R-bimodule map", alloc::vec![]);
    let bilinear = (0..adj.ring.dim()).all(|k| {
        adj.lambda0.mul(yx_mod.left_basis_action(k)) == r.left_basis_action(k).mul(&adj.lambda0)
            && adj.lambda0.mul(yx_mod.right_basis_action(k)) == r.right_basis_action(k).mul(&adj.lambda0)
    });
    report.check(bilinear, "lambda0 is an R-bimodule map", alloc::vec![]);
    if !report.is_empty() {
        return Ok(report);
    }

    let rx = TensorOverR::new(&r, x)?;
    let xr = TensorOverR::new(x, &r)?;
    let snake_x = upsilon(&xr)?
        .forward
        .mul(&lift_tilde(&xyx.x_yz, &xr, &adj.lambda0)?)
        .mul(&xyx.assoc.forward)
        .mul(&lift_hat(&rx, &xyx.xy_z, &rho0)?)
        .mul(&upsilon_prime(&rx)?.inverse);
    report.check(snake_x.is_identity(), "snake on X in bimodules", alloc::vec![]);

    let ry = TensorOverR::new(&r, y)?;
    let yr = TensorOverR::new(y, &r)?;
    let snake_y = upsilon_prime(&ry)?
        .forward
        .mul(&lift_hat(&yxy.xy_z, &ry, &adj.lambda0)?)
        .mul(&yxy.assoc.inverse)
        .mul(&lift_tilde(&yr, &yxy.x_yz, &rho0)?)
        .mul(&upsilon(&yr)?.inverse);
    report.check(snake_y.is_identity(), "snake on Y in bimodules", alloc::vec![]);
    Ok(report)
}

fn check_inputs(adj: &Adjunction, cert: &FrobeniusCertificate, alpha: &[Rational]) -> Result<(), DualityError> {
    if !verify_adjunction(adj).is_empty() {
        return Err(DualityError::Precondition("adjunction does not satisfy the snake equations"));
    }
    if !verify_frobenius(cert).is_empty() {
        return Err(DualityError::Precondition("Frobenius certificate does not verify"));
    }
    if alpha.len() != cert.algebra.dim() || sandwich(&cert.algebra, &cert.casimir, alpha) != cert.algebra.unit() {
        return Err(DualityError::Precondition("alpha does not split the Casimir element"));
    }
    Ok(())
}

/// `Σ_pq e_pq ϑ(r_p·r) r_q` for `which = Left`, `Σ_pq e_pq ϑ(r·r_q) r_p` otherwise.
fn twisted(cert: &FrobeniusCertificate, r: &[Rational], left: bool) -> Vec<Rational> {
    let a = &cert.algebra;
    let d = a.dim();
    let mut out = crate::exactlin::zero_vec(d);
    for p in 0..d {
        for q in 0..d {
            let e = &cert.casimir[p * d + q];
            if e.is_zero() {
                continue;
            }
            let (first, other) = if left { (p, q) } else { (q, p) };
            let th = if left {
                dot(&cert.theta, &a.product(&a.basis(first), r))
            } else {
                dot(&cert.theta, &a.product(r, &a.basis(first)))
            };
            out[other] += e * th;
        }
    }
    out
}

/// Given `(ρ, λ): Y ⊣ X` with `Y` an `R`-bimodule, puts the induced bimodule
/// structure on `X` and builds `(ρ₀, λ₀)` in `R`-bimodules.
pub fn lift_adjunction_left(
    adj: &Adjunction,
    y: &Bimodule,
    cert: &FrobeniusCertificate,
    alpha: &[Rational],
) -> Result<BimodAdjunction, DualityError> {
    check_inputs(adj, cert, alpha)?;
    if y.dim() != adj.y_dim || *y.ring() != cert.algebra {
        return Err(DualityError::Shape("Y does not match the adjunction"));
    }
    let ring = cert.algebra.clone();
    let d = ring.dim();
    let p = adj.rho_matrix();
    let l = adj.lambda_matrix();
    // r·x = Σ ρ′ λ(ρ″·r ⊗ x)
    let left = (0..d).map(|k| p.mul(&y.right_basis_action(k).transpose()).mul(&l)).collect();
    // x·r = Σ ρ′ λ(e″·ρ″ ⊗ x) ϑ(e′·r)
    let right = (0..d)
        .map(|k| {
            let t = twisted(cert, &ring.basis(k), true);
            p.mul(&y.left_action(&t).transpose()).mul(&l)
        })
        .collect();
    let x = Bimodule::new(ring.clone(), adj.x_dim, left, right)?;
    let report = validate_bimodule(&x);
    if !report.is_empty() {
        return Err(DualityError::Invariant(report));
    }
    let xy = TensorOverR::new(&x, y)?;
    let yx = TensorOverR::new(y, &x)?;
    // ρ₀(1) = q(Σ ρ′ ⊗ α·ρ″)
    let shifted = kron(&RatMatrix::identity(adj.x_dim), &y.left_action(alpha)).apply(&adj.rho);
    let rho0 = xy.project(&shifted);
    // λ₀(q(y ⊗ x)) = Σ e′ λ(e″·y ⊗ x)
    let mut lam = RatMatrix::zeros(d, adj.y_dim * adj.x_dim);
    for pp in 0..d {
        for qq in 0..d {
            let e = &cert.casimir[pp * d + qq];
            if e.is_zero() {
                continue;
            }
            let inner = adj.lambda.mul(&kron(y.left_basis_action(qq), &RatMatrix::identity(adj.x_dim)));
            lam = lam.add(&RatMatrix::column_vector(&ring.basis(pp)).mul(&inner).scale(e));
        }
    }
    let lambda0 = yx.factor(&lam, "lambda0")?;
    finish(BimodAdjunction { ring, x, y: y.clone(), rho0, lambda0 })
}

/// Mirror of [`lift_adjunction_left`]: `X` is the given bimodule and `Y` gets
/// the induced structure.
pub fn lift_adjunction_right(
    adj: &Adjunction,
    x: &Bimodule,
    cert: &FrobeniusCertificate,
    alpha: &[Rational],
) -> Result<BimodAdjunction, DualityError> {
    check_inputs(adj, cert, alpha)?;
    if x.dim() != adj.x_dim || *x.ring() != cert.algebra {
        return Err(DualityError::Shape("X does not match the adjunction"));
    }
    let ring = cert.algebra.clone();
    let d = ring.dim();
    let p = adj.rho_matrix();
    let l = adj.lambda_matrix();
    // y·r = Σ λ(y ⊗ r·ρ′) ρ″
    let right = (0..d).map(|k| l.mul(x.left_basis_action(k)).mul(&p).transpose()).collect();
    // r·y = Σ ρ″ λ(y ⊗ ρ′·e′) ϑ(r·e″)
    let left = (0..d)
        .map(|k| {
            let t = twisted(cert, &ring.basis(k), false);
            l.mul(&x.right_action(&t)).mul(&p).transpose()
        })
        .collect();
    let y = Bimodule::new(ring.clone(), adj.y_dim, left, right)?;
    let report = validate_bimodule(&y);
    if !report.is_empty() {
        return Err(DualityError::Invariant(report));
    }
    let xy = TensorOverR::new(x, &y)?;
    let yx = TensorOverR::new(&y, x)?;
    // ρ₀(1) = q(Σ ρ′·α ⊗ ρ″)
    let shifted = kron(&x.right_action(alpha), &RatMatrix::identity(adj.y_dim)).apply(&adj.rho);
    let rho0 = xy.project(&shifted);
    // λ₀(q(y ⊗ x)) = Σ λ(y ⊗ x·e′) e″
    let mut lam = RatMatrix::zeros(d, adj.y_dim * adj.x_dim);
    for pp in 0..d {
        for qq in 0..d {
            let e = &cert.casimir[pp * d + qq];
            if e.is_zero() {
                continue;
            }
            let inner = adj.lambda.mul(&kron(&RatMatrix::identity(adj.y_dim), x.right_basis_action(pp)));
            lam = lam.add(&RatMatrix::column_vector(&ring.basis(qq)).mul(&inner).scale(e));
        }
    }
    let lambda0 = yx.factor(&lam, "lambda0")?;
    finish(BimodAdjunction { ring, x: x.clone(), y, rho0, lambda0 })
}

fn finish(adj: BimodAdjunction) -> Result<BimodAdjunction, DualityError> {
    let report = verify_bimod_adjunction(&adj)?;
    if report.is_empty() {
        Ok(adj)
    } else {
        Err(DualityError::Invariant(report))
    }
}

/// Forgets a bimodule adjunction to vector spaces: `ρ′ = ψ(ρ₀(1))`, `λ′ = ϑ ∘ λ₀ ∘ q`.
pub fn plain_from_bimod(adj: &BimodAdjunction, f: &ForgetfulFrobStructure) -> Result<Adjunction, DualityError> {
    if f.ring() != &adj.ring {
        return Err(DualityError::Shape("Frobenius structure is for another ring"));
    }
    let xy = TensorOverR::new(&adj.x, &adj.y)?;
    let yx = TensorOverR::new(&adj.y, &adj.x)?;
    let rho = f.psi(&xy)?.apply(&adj.rho0);
    let lambda = RatMatrix::row_vector(f.psi0()).mul(&adj.lambda0).mul(yx.q());
    let plain = Adjunction { x_dim: adj.x.dim(), y_dim: adj.y.dim(), rho, lambda };
    let report = verify_adjunction(&plain);
    if report.is_empty() {
        Ok(plain)
    } else {
        Err(DualityError::Invariant(report))
    }
}

/// `Φ(s) = ϑ(−·s)` in coordinates of the dual basis, checked invertible and
/// satisfying `Φ(s·s′) = Φ(s′) ∘ R_s`.
pub fn phi_iso(cert: &FrobeniusCertificate) -> Result<RatMatrix, DualityError> {
    if !verify_frobenius(cert).is_empty() {
        return Err(DualityError::Precondition("Frobenius certificate does not verify"));
    }
    let a = &cert.algebra;
    let phi = form_matrix(a, &cert.theta);
    let mut report = ValidationReport::default();
    report.check(phi.inverse().is_some(), "phi invertible", alloc::vec![]);
    for s in 0..a.dim() {
        let rs_t = a.right_mul(&a.basis(s)).transpose();
        for t in 0..a.dim() {
            let lhs = phi.apply(a.basis_product(s, t));
            let rhs = rs_t.apply(&phi.column(t));
            report.check(lhs == rhs, "phi transports right multiplication", alloc::vec![s, t]);
        }
    }
    if report.is_empty() {
        Ok(phi)
    } else {
        Err(DualityError::Invariant(report))
    }
}
