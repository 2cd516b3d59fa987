use frobsep_core::algebra::{builtin, matrix_trace_functional, Algebra};
use frobsep_core::bimod::{tensor_over_r, validate_bimodule, Bimodule, ForgetfulFrobStructure};
use frobsep_core::duality::*;
use frobsep_core::exactlin::{add_scaled, rat, RatMatrix, Rational};
use frobsep_core::frobsep::{find_frobenius, frobenius_from_functional, separability_alphas, FrobeniusCertificate};
use frobsep_core::sampling::{Sampler, SearchOptions};

#[test]
fn canonical_duals() {
    for n in 0..4 {
        let adj = canonical_dual(n);
        assert!(verify_adjunction(&adj).is_empty(), "{n}");
    }
    let one = canonical_dual(1);
    assert_eq!(one.rho, vec![rat(1)]);
    let mut bad = canonical_dual(2);
    bad.rho[0] = rat(2);
    assert!(!verify_adjunction(&bad).is_empty());
}

// A non-canonical pair: ρ = Σ P_ac x_a ⊗ y_c with Λ = P⁻¹.
fn twisted_dual(n: usize, seed: u64) -> Adjunction {
    let mut s = Sampler::new(seed);
    loop {
        let p = RatMatrix::from_fn(n, n, |_, _| s.rational());
        if let Some(l) = p.inverse() {
            return Adjunction { x_dim: n, y_dim: n, rho: p.entries().to_vec(), lambda: RatMatrix::row_vector(l.entries()) };
        }
    }
}

fn alphas(cert: &FrobeniusCertificate) -> Vec<Vec<Rational>> {
    let sol = separability_alphas(cert).expect("separable");
    let mut out = vec![sol.particular.clone()];
    if let Some(k) = sol.kernel.first() {
        let mut other = sol.particular.clone();
        add_scaled(&mut other, &rat(1), k);
        out.push(other);
    }
    out
}

fn separable_certs() -> Vec<(Algebra, FrobeniusCertificate)> {
    let q = builtin("field").unwrap();
    let c2 = builtin("cyclic:2").unwrap();
    let m2 = builtin("matrix:2").unwrap();
    vec![
        (q.clone(), frobenius_from_functional(&q, &[rat(1)]).unwrap()),
        (c2.clone(), find_frobenius(&c2, &SearchOptions::default()).unwrap().witness().unwrap().clone()),
        (m2.clone(), frobenius_from_functional(&m2, &matrix_trace_functional(2)).unwrap()),
    ]
}

#[test]
fn base_field_lift_is_the_input() {
    let q = builtin("field").unwrap();
    let cert = frobenius_from_functional(&q, &[rat(1)]).unwrap();
    let adj = twisted_dual(2, 5);
    let y = Bimodule::over_base(&q, 2).unwrap();
    let lifted = lift_adjunction_left(&adj, &y, &cert, &[rat(1)]).unwrap();
    assert_eq!(lifted.rho0, adj.rho);
    let yx = tensor_over_r(&y, &lifted.x).unwrap();
    assert_eq!(lifted.lambda0.mul(yx.q()), adj.lambda);
    let lifted = lift_adjunction_right(&adj, &y, &cert, &[rat(1)]).unwrap();
    assert_eq!(lifted.rho0, adj.rho);
}

#[test]
fn lifted_snakes_hold() {
    for (ring, cert) in separable_certs() {
        let y = Bimodule::regular(&ring);
        let f = ForgetfulFrobStructure::new(&cert).unwrap();
        // M2 has a three-dimensional family of α, so two distinct ones are used
        let alphas = alphas(&cert);
        if ring.dim() == 4 {
            assert_eq!(alphas.len(), 2);
        }
        for alpha in &alphas {
            for adj in [canonical_dual(ring.dim()), twisted_dual(ring.dim(), 9)] {
                let left = lift_adjunction_left(&adj, &y, &cert, alpha).unwrap();
                assert!(verify_bimod_adjunction(&left).unwrap().is_empty());
                assert!(validate_bimodule(&left.x).is_empty());
                let plain = plain_from_bimod(&left, &f).unwrap();
                assert!(verify_adjunction(&plain).is_empty());

                let right = lift_adjunction_right(&adj, &y, &cert, alpha).unwrap();
                assert!(verify_bimod_adjunction(&right).unwrap().is_empty());
                assert!(verify_adjunction(&plain_from_bimod(&right, &f).unwrap()).is_empty());
            }
        }
    }
}

#[test]
fn left_then_right_recovers_the_structure() {
    for (ring, cert) in separable_certs() {
        let y = Bimodule::regular(&ring);
        let alpha = &alphas(&cert)[0];
        let adj = twisted_dual(ring.dim(), 21);
        let left = lift_adjunction_left(&adj, &y, &cert, alpha).unwrap();
        let right = lift_adjunction_right(&adj, &left.x, &cert, alpha).unwrap();
        assert_eq!(right.y, y);
    }
}

#[test]
fn lifted_lambda_matches_its_formula() {
    let (ring, cert) = separable_certs().remove(1);
    let y = Bimodule::regular(&ring);
    let adj = canonical_dual(2);
    let alpha = &alphas(&cert)[0];
    let left = lift_adjunction_left(&adj, &y, &cert, alpha).unwrap();
    let yx = tensor_over_r(&y, &left.x).unwrap();
    // λ₀ q (y ⊗ x) = Σ e′ λ(e″·y ⊗ x), evaluated on every basis pair by hand
    let composite = left.lambda0.mul(yx.q());
    for c in 0..2 {
        for b in 0..2 {
            let mut expect = vec![rat(0); 2];
            for p in 0..2 {
                for q in 0..2 {
                    let e = &cert.casimir[p * 2 + q];
                    let ey = ring.product(&ring.basis(q), &ring.basis(c));
                    let lam = ey[b].clone();
                    add_scaled(&mut expect, &(e * lam), &ring.basis(p));
                }
            }
            assert_eq!(composite.column(c * 2 + b), expect);
        }
    }
}

#[test]
fn bad_inputs_are_refused() {
    let (ring, cert) = separable_certs().remove(1);
    let y = Bimodule::regular(&ring);
    let err = lift_adjunction_left(&canonical_dual(2), &y, &cert, &[rat(1), rat(0)]).unwrap_err();
    assert!(matches!(err, DualityError::Precondition(_)));
    let err = lift_adjunction_left(&canonical_dual(3), &y, &cert, &alphas(&cert)[0]).unwrap_err();
    assert!(matches!(err, DualityError::Shape(_)));
}

#[test]
fn phi_examples() {
    let q = builtin("field").unwrap();
    assert_eq!(phi_iso(&frobenius_from_functional(&q, &[rat(1)]).unwrap()).unwrap(), RatMatrix::identity(1));
    let c2 = builtin("cyclic:2").unwrap();
    let phi = phi_iso(&frobenius_from_functional(&c2, &[rat(1), rat(0)]).unwrap()).unwrap();
    assert!(phi.is_identity());
    let m2 = builtin("matrix:2").unwrap();
    let phi = phi_iso(&frobenius_from_functional(&m2, &matrix_trace_functional(2)).unwrap()).unwrap();
    assert!(phi.inverse().unwrap().mul(&phi).is_identity());
    // trace pairing: E_ij pairs with E_ji
    assert_eq!(phi, RatMatrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
    for name in ["truncated:3", "cyclic:3"] {
        let a = builtin(name).unwrap();
        let cert = find_frobenius(&a, &SearchOptions::default()).unwrap().witness().unwrap().clone();
        assert!(phi_iso(&cert).is_ok(), "{name}");
    }
}
