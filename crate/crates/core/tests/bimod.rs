use frobsep_core::algebra::{builtin, diagonal_embedding, Algebra};
use frobsep_core::bimod::*;
use frobsep_core::exactlin::{frac, kron, rat, RatMatrix, Rational};
use frobsep_core::frobsep::{find_frobenius, frobenius_from_functional, FrobeniusCertificate};
use frobsep_core::sampling::{Sampler, SearchOptions};
use proptest::prelude::*;

// R ⊗ R with r·(a ⊗ b)·s = ra ⊗ bs.
fn free_bimodule(r: &Algebra) -> Bimodule {
    let d = r.dim();
    let id = RatMatrix::identity(d);
    let left = (0..d).map(|k| kron(&r.left_mul(&r.basis(k)), &id)).collect();
    let right = (0..d).map(|k| kron(&id, &r.right_mul(&r.basis(k)))).collect();
    Bimodule::new(r.clone(), d * d, left, right).unwrap()
}

fn suite(r: &Algebra) -> Vec<Bimodule> {
    let mut out = vec![Bimodule::regular(r)];
    if r.dim() <= 2 {
        out.push(free_bimodule(r));
    }
    if r.dim() == 1 {
        out.push(Bimodule::over_base(r, 2).unwrap());
    }
    out
}

#[test]
fn bimodule_suite_is_valid() {
    for name in ["field", "cyclic:2", "matrix:2"] {
        let r = builtin(name).unwrap();
        for x in suite(&r) {
            assert!(validate_bimodule(&x).is_empty(), "{name}");
        }
    }
    let c2 = builtin("cyclic:2").unwrap();
    let broken = Bimodule::new(
        c2.clone(),
        2,
        vec![RatMatrix::identity(2), RatMatrix::identity(2).scale(&rat(2))],
        vec![RatMatrix::identity(2), RatMatrix::identity(2)],
    )
    .unwrap();
    assert!(!validate_bimodule(&broken).is_empty());
}

#[test]
fn tensor_dimensions() {
    let c2 = builtin("cyclic:2").unwrap();
    let r = Bimodule::regular(&c2);
    let t = tensor_over_r(&r, &r).unwrap();
    assert_eq!(t.dim(), 2);
    assert_eq!(t.quotient().killed().dim(), 2);
    assert!(t.verify_induced_actions().is_empty());

    let q = builtin("field").unwrap();
    let x = Bimodule::over_base(&q, 2).unwrap();
    let y = Bimodule::over_base(&q, 3).unwrap();
    let t = tensor_over_r(&x, &y).unwrap();
    assert_eq!(t.dim(), 6);
    assert!(t.q().is_identity());

    let m2 = builtin("matrix:2").unwrap();
    let m = Bimodule::regular(&m2);
    let t = tensor_over_r(&m, &m).unwrap();
    assert_eq!(t.dim(), 4);
    assert!(t.verify_induced_actions().is_empty());

    assert_eq!(tensor_over_r(&r, &m).unwrap_err(), BimodError::RingMismatch);
}

#[test]
fn unit_isomorphisms() {
    for name in ["field", "cyclic:2", "matrix:2"] {
        let ring = builtin(name).unwrap();
        let r = Bimodule::regular(&ring);
        for x in suite(&ring) {
            let xr = tensor_over_r(&x, &r).unwrap();
            let rx = tensor_over_r(&r, &x).unwrap();
            let u = upsilon(&xr).unwrap();
            let up = upsilon_prime(&rx).unwrap();
            assert!(u.is_valid() && up.is_valid(), "{name}");
            assert_eq!(u.forward.mul(xr.q()), x.right_action_map());
            assert_eq!(up.forward.mul(rx.q()), x.left_action_map());
        }
    }
    let q = builtin("field").unwrap();
    let r = Bimodule::regular(&q);
    let u = upsilon(&tensor_over_r(&r, &r).unwrap()).unwrap();
    assert!(u.forward.is_identity());
}

#[test]
fn lifts_are_functorial() {
    let c2 = builtin("cyclic:2").unwrap();
    let r = Bimodule::regular(&c2);
    let f2 = free_bimodule(&c2);
    let rr = tensor_over_r(&r, &r).unwrap();
    assert!(lift_tilde(&rr, &rr, &RatMatrix::identity(2)).unwrap().is_identity());
    assert!(lift_hat(&rr, &rr, &RatMatrix::identity(2)).unwrap().is_identity());

    // left R-linear maps R → R are right multiplications
    let mut s = Sampler::new(3);
    for _ in 0..5 {
        let f = c2.right_mul(&s.vector(2));
        let g = c2.right_mul(&s.vector(2));
        let src = tensor_over_r(&f2, &r).unwrap();
        let lf = lift_tilde(&src, &src, &f).unwrap();
        let lg = lift_tilde(&src, &src, &g).unwrap();
        let lgf = lift_tilde(&src, &src, &g.mul(&f)).unwrap();
        assert_eq!(lgf, lg.mul(&lf));
        assert_eq!(lf.mul(src.q()), src.q().mul(&kron(&RatMatrix::identity(4), &f)));

        let h = c2.left_mul(&s.vector(2));
        let src = tensor_over_r(&r, &f2).unwrap();
        let lh = lift_hat(&src, &src, &h).unwrap();
        assert_eq!(lh.mul(src.q()), src.q().mul(&kron(&h, &RatMatrix::identity(4))));
    }
    let t = tensor_over_r(&r, &r).unwrap();
    let proj = RatMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
    assert_eq!(lift_tilde(&t, &t, &proj).unwrap_err(), BimodError::NotLinear { side: "left" });
}

#[test]
fn associator_is_canonical() {
    for name in ["field", "cyclic:2", "matrix:2"] {
        let ring = builtin(name).unwrap();
        let ms = suite(&ring);
        for x in &ms {
            for y in &ms {
                let z = &ms[0];
                let tri = TripleTensor::new(x, y, z).unwrap();
                assert!(tri.assoc.is_valid(), "{name}");
                assert_eq!(tri.assoc.forward.mul(&tri.left_projection()), tri.right_projection());
            }
        }
    }
}

fn certs_for(ring: &Algebra) -> Vec<FrobeniusCertificate> {
    let mut out = vec![find_frobenius(ring, &SearchOptions::default()).unwrap().witness().unwrap().clone()];
    if ring.dim() == 2 {
        out.push(frobenius_from_functional(ring, &[rat(2), rat(0)]).unwrap());
    }
    out
}

#[test]
fn forgetful_functor_is_frobenius_monoidal() {
    for name in ["field", "cyclic:2", "matrix:2"] {
        let ring = builtin(name).unwrap();
        let ms = suite(&ring);
        for cert in certs_for(&ring) {
            let f = ForgetfulFrobStructure::new(&cert).unwrap();
            for x in &ms {
                for y in &ms {
                    let t = tensor_over_r(x, y).unwrap();
                    assert!(f.verify_pair(&t).unwrap().is_empty(), "{name}");
                    let tri = TripleTensor::new(x, y, &ms[0]).unwrap();
                    let rep = f.verify_triple(&tri).unwrap();
                    assert!(rep.is_empty(), "{name}: {rep}");
                    let tri = TripleTensor::new(&ms[0], x, y).unwrap();
                    assert!(f.verify_triple(&tri).unwrap().is_empty(), "{name}");
                }
            }
        }
    }
}

#[test]
fn forgetful_examples() {
    let q = builtin("field").unwrap();
    let cert = frobenius_from_functional(&q, &[rat(1)]).unwrap();
    let f = ForgetfulFrobStructure::new(&cert).unwrap();
    let x = Bimodule::over_base(&q, 2).unwrap();
    assert!(f.psi(&tensor_over_r(&x, &x).unwrap()).unwrap().is_identity());

    let c2 = builtin("cyclic:2").unwrap();
    let r = Bimodule::regular(&c2);
    let t = tensor_over_r(&r, &r).unwrap();
    let canonical = frobenius_from_functional(&c2, &[rat(1), rat(0)]).unwrap();
    assert_eq!(canonical.casimir, vec![rat(1), rat(0), rat(0), rat(1)]);
    let f = ForgetfulFrobStructure::new(&canonical).unwrap();
    let psi = f.psi(&t).unwrap();
    assert_eq!(psi.mul(t.q()), f.casimir_insertion(&r, &r));
    assert!(!f.splits_projection(&t).unwrap());

    let separable = frobenius_from_functional(&c2, &[rat(2), rat(0)]).unwrap();
    assert_eq!(separable.casimir, vec![frac(1, 2), rat(0), rat(0), frac(1, 2)]);
    let f = ForgetfulFrobStructure::new(&separable).unwrap();
    assert!(f.splits_projection(&t).unwrap());

    let m2 = builtin("matrix:2").unwrap();
    // the trace form multiplies its Casimir element to 2, so halve it
    let twice: Vec<Rational> = frobsep_core::algebra::matrix_trace_functional(2).iter().map(|c| c * rat(2)).collect();
    let tr = frobenius_from_functional(&m2, &twice).unwrap();
    let f = ForgetfulFrobStructure::new(&tr).unwrap();
    let m = Bimodule::regular(&m2);
    assert!(f.splits_projection(&tensor_over_r(&m, &m).unwrap()).unwrap());
}

#[test]
fn restricted_bimodules() {
    let c2 = builtin("cyclic:2").unwrap();
    let i = diagonal_embedding(&c2);
    let s = Bimodule::restricted(&i);
    assert!(validate_bimodule(&s).is_empty());
    let t = tensor_over_r(&s, &s).unwrap();
    assert!(t.verify_induced_actions().is_empty());
    // S is free of rank 2 on each side over the diagonal copy of R, so S ⊗_R S has dim 16 / 2
    assert_eq!(t.dim(), 8);
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn psi_is_defined_for_random_frobenius_forms(theta in prop::collection::vec(small_rational(), 2)) {
        let c2 = builtin("cyclic:2").unwrap();
        if let Some(cert) = frobenius_from_functional(&c2, &theta) {
            let f = ForgetfulFrobStructure::new(&cert).unwrap();
            let fb = free_bimodule(&c2);
            let r = Bimodule::regular(&c2);
            let tri = TripleTensor::new(&fb, &r, &fb).unwrap();
            prop_assert!(f.verify_triple(&tri).unwrap().is_empty());
            let m = c2.multiply_tensor(&cert.casimir);
            let t = tensor_over_r(&r, &r).unwrap();
            prop_assert_eq!(f.splits_projection(&t).unwrap(), m == c2.unit().to_vec());
        }
    }
}
