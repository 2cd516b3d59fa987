use frobsep_core::algebra::{builtin, builtin_suite, matrix_trace_functional, Algebra, BilinearForm};
use frobsep_core::exactlin::{dot, frac, rat, tensor_vec, RatMatrix, Rational};
use frobsep_core::frobsep::*;
use frobsep_core::sampling::{Sampler, SearchOptions};
use proptest::prelude::*;

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn cert_of(a: &Algebra, theta: &[Rational], casimir: Vec<Rational>) -> FrobeniusCertificate {
    let b = form_matrix(a, theta);
    FrobeniusCertificate {
        algebra: a.clone(),
        theta: theta.to_vec(),
        casimir,
        nakayama: nakayama_from_form(&b).unwrap(),
    }
}

// Σ c_ij e_i ⊗ e_j built from explicit pairs, independent of the library.
fn tensor_sum(a: &Algebra, pairs: &[(Vec<Rational>, Vec<Rational>)]) -> Vec<Rational> {
    let mut out = vec![rat(0); a.dim() * a.dim()];
    for (x, y) in pairs {
        for (o, t) in out.iter_mut().zip(tensor_vec(x, y)) {
            *o += t;
        }
    }
    out
}

#[test]
fn separability_examples() {
    let q = builtin("field").unwrap();
    assert_eq!(is_separable(&q).unwrap().idempotent, v(&[1]));
    assert!(is_separable(&builtin("truncated:2").unwrap()).is_none());

    let m2 = builtin("matrix:2").unwrap();
    let cert = is_separable(&m2).unwrap();
    assert!(verify_separable(&cert).is_empty());
    assert_eq!(m2.multiply_tensor(&cert.idempotent), v(&[1, 0, 0, 1]));
    // Σ_i E_i1 ⊗ E_1i
    let e11 = m2.basis(0);
    let e12 = m2.basis(1);
    let e21 = m2.basis(2);
    let known = tensor_sum(&m2, &[(e11.clone(), e11.clone()), (e21, e12)]);
    let known = SeparabilityCertificate { algebra: m2.clone(), idempotent: known };
    assert!(verify_separable(&known).is_empty());
}

#[test]
fn frobenius_witnesses() {
    let opts = SearchOptions::default();
    let c2 = builtin("cyclic:2").unwrap();
    let found = find_frobenius(&c2, &opts).unwrap();
    assert!(verify_frobenius(found.witness().unwrap()).is_empty());
    let canonical = cert_of(&c2, &v(&[1, 0]), v(&[1, 0, 0, 1]));
    assert!(verify_frobenius(&canonical).is_empty());

    let t2 = builtin("truncated:2").unwrap();
    let found = find_frobenius(&t2, &opts).unwrap();
    assert!(verify_frobenius(found.witness().unwrap()).is_empty());
    let canonical = cert_of(&t2, &v(&[0, 1]), v(&[0, 1, 1, 0]));
    assert!(verify_frobenius(&canonical).is_empty());
}

#[test]
fn upper_triangular_is_not_frobenius() {
    let ut = builtin("upper_triangular:2").unwrap();
    let d = find_frobenius(&ut, &SearchOptions::default()).unwrap();
    let proof = d.proof().expect("certified negative");
    assert!(verify_non_frobenius(&ut, proof));
    let mut s = Sampler::new(17);
    for _ in 0..100 {
        let theta = s.vector(3);
        assert!(form_matrix(&ut, &theta).determinant() == rat(0));
    }
}

#[test]
fn verification_examples() {
    let c2 = builtin("cyclic:2").unwrap();
    let scaled = cert_of(&c2, &v(&[1, 0]), v(&[2, 0, 0, 2]));
    assert!(!verify_frobenius(&scaled).is_empty());

    let m2 = builtin("matrix:2").unwrap();
    let tr = matrix_trace_functional(2);
    let mut pairs = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            pairs.push((m2.basis(i * 2 + j), m2.basis(j * 2 + i)));
        }
    }
    let cert = cert_of(&m2, &tr, tensor_sum(&m2, &pairs));
    assert!(verify_frobenius(&cert).is_empty());
}

#[test]
fn nakayama_examples() {
    let opts = SearchOptions::default();
    for name in ["cyclic:3", "truncated:3", "diagonal:2"] {
        let a = builtin(name).unwrap();
        let cert = find_frobenius(&a, &opts).unwrap().witness().unwrap().clone();
        assert!(nakayama(&cert).unwrap().is_identity(), "{name}");
    }

    let m2 = builtin("matrix:2").unwrap();
    let cert = frobenius_from_functional(&m2, &matrix_trace_functional(2)).unwrap();
    assert!(nakayama(&cert).unwrap().is_identity());

    // tr(u·a) with u = diag(1,2) gives a ↦ u⁻¹ a u
    let u = v(&[1, 0, 0, 2]);
    let u_inv = vec![rat(1), rat(0), rat(0), frac(1, 2)];
    let cert = frobenius_from_functional(&m2, &u).unwrap();
    let n = nakayama(&cert).unwrap();
    assert!(!n.is_identity());
    let conj = RatMatrix::from_columns(4, 4, |k| m2.product(&m2.product(&u_inv, &m2.basis(k)), &u));
    assert_eq!(n, conj);
}

#[test]
fn alpha_examples() {
    let c2 = builtin("cyclic:2").unwrap();
    let cert = cert_of(&c2, &v(&[1, 0]), v(&[1, 0, 0, 1]));
    let w = frobenius_to_separable_alpha(&cert).unwrap();
    assert_eq!(w.alpha, vec![frac(1, 2), rat(0)]);
    assert_eq!(w.separability.idempotent, vec![frac(1, 2), rat(0), rat(0), frac(1, 2)]);

    let t2 = builtin("truncated:2").unwrap();
    let cert = cert_of(&t2, &v(&[0, 1]), v(&[0, 1, 1, 0]));
    assert!(frobenius_to_separable_alpha(&cert).is_none());

    let q = builtin("field").unwrap();
    let cert = cert_of(&q, &v(&[1]), v(&[1]));
    assert_eq!(frobenius_to_separable_alpha(&cert).unwrap().alpha, v(&[1]));
}

#[test]
fn form_examples() {
    let c2 = builtin("cyclic:2").unwrap();
    let form = BilinearForm { algebra: c2.clone(), matrix: RatMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]) };
    let cert = frobenius_via_form(&c2, &form).unwrap();
    assert_eq!(cert.theta, v(&[1, 0]));
    assert!(verify_frobenius(&cert).is_empty());

    let m2 = builtin("matrix:2").unwrap();
    let tr = matrix_trace_functional(2);
    let tt = RatMatrix::from_fn(4, 4, |i, j| tr[i].clone() * tr[j].clone());
    let form = BilinearForm { algebra: m2.clone(), matrix: tt };
    assert!(matches!(frobenius_via_form(&m2, &form), Err(FormRejection::NotAssociative { .. })));

    let t2 = builtin("truncated:2").unwrap();
    let eps = RatMatrix::from_fn(2, 2, |i, j| t2.basis_product(i, j)[0].clone());
    let form = BilinearForm { algebra: t2.clone(), matrix: eps };
    assert_eq!(frobenius_via_form(&t2, &form), Err(FormRejection::Degenerate));
}

#[test]
fn procedures_agree_on_builtins() {
    let opts = SearchOptions::default();
    for b in builtin_suite() {
        let a = b.build().unwrap();
        let sep = is_separable(&a);
        let frob = find_frobenius(&a, &opts).unwrap();
        if let Some(s) = &sep {
            let gamma = splitting_map(s);
            assert!(a.mult_matrix().mul(&gamma).is_identity(), "{b}");
        }
        match frob.witness() {
            Some(cert) => {
                assert!(verify_frobenius(cert).is_empty(), "{b}");
                assert_eq!(sep.is_some(), frobenius_to_separable_alpha(cert).is_some(), "{b}");
            }
            None => assert!(verify_non_frobenius(&a, frob.proof().unwrap()), "{b}"),
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_functionals_give_consistent_certificates(
        name in prop::sample::select(vec!["cyclic:3", "matrix:2", "truncated:3", "diagonal:3"]),
        raw in prop::collection::vec(small_rational(), 9),
    ) {
        let a = builtin(name).unwrap();
        let theta = raw[..a.dim()].to_vec();
        let nondegenerate = form_matrix(&a, &theta).determinant() != rat(0);
        let cert = frobenius_from_functional(&a, &theta);
        prop_assert_eq!(nondegenerate, cert.is_some());
        if let Some(cert) = cert {
            prop_assert!(verify_frobenius(&cert).is_empty());
            let n = &cert.nakayama;
            let ninv = n.inverse().unwrap();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let ni = n.column(i);
                    prop_assert_eq!(dot(&theta, a.basis_product(j, i)), dot(&theta, &a.product(&ni, &a.basis(j))));
                    // read through N⁻¹: ϑ(ab) = ϑ(b·N⁻¹(a))
                    let back = a.product(&a.basis(j), &ninv.column(i));
                    prop_assert_eq!(dot(&theta, a.basis_product(i, j)), dot(&theta, &back));
                }
            }
        }
    }
}
