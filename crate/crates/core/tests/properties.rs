//! Property tests for the algebraic invariants: random inputs against the
//! exact laws the library is built on.

use l2cs_core::algebra::{swap_operator, tensor_apply, tensor_index, CMat, MatrixLieAlgebra};
use l2cs_core::complex;
use l2cs_core::crossed::{HaarSystem, TwoGroupElement};
use l2cs_core::holonomy::{FlatConfig, GaugeTransform, Site};
use l2cs_core::library;
use l2cs_core::rmatrix::{represent_pairing, sl2_standard_r, uq_sl2_r, ybe_residual};
use l2cs_core::statehopf::{antipode_h, RingState};
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn cvec(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), len).prop_map(|v| {
        v.into_iter()
            .map(|(re, im)| Complex64::new(re, im))
            .collect()
    })
}

fn cmat2() -> impl Strategy<Value = CMat> {
    cvec(4).prop_map(|v| CMat {
        rows: 2,
        cols: 2,
        data: v,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// (A ⊗ B)(u ⊗ v) = Au ⊗ Bv, and the Kronecker action is associative
    /// against componentwise evaluation.
    #[test]
    fn kron_action_factorizes(a in cmat2(), b in cmat2(), u in cvec(2), v in cvec(2)) {
        let mut uv = vec![Complex64::new(0.0, 0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                uv[tensor_index(i, j, 2)] = u[i] * v[j];
            }
        }
        let lhs = tensor_apply(&a.kron(&b), &uv).unwrap();
        let au = a.apply(&u).unwrap();
        let bv = b.apply(&v).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!((lhs[tensor_index(i, j, 2)] - au[i] * bv[j]).norm() < 1e-9);
            }
        }
    }

    /// Kronecker products compose: (A⊗B)(C⊗D) = (AC)⊗(BD).
    #[test]
    fn kron_multiplicativity(a in cmat2(), b in cmat2(), c in cmat2(), d in cmat2()) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-8);
    }

    /// The swap operator is an involution intertwining the factors.
    #[test]
    fn swap_involution(u in cvec(2), v in cvec(2)) {
        let p = swap_operator(2);
        let mut uv = vec![Complex64::new(0.0, 0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                uv[tensor_index(i, j, 2)] = u[i] * v[j];
            }
        }
        let once = tensor_apply(&p, &uv).unwrap();
        let twice = tensor_apply(&p, &once).unwrap();
        for k in 0..4 {
            prop_assert!((twice[k] - uv[k]).norm() < 1e-12);
        }
    }

    /// Bracket antisymmetry in coordinates for sl2.
    #[test]
    fn sl2_bracket_antisymmetric(a in cvec(3), b in cvec(3)) {
        let l = MatrixLieAlgebra::sl2();
        let ab = l.bracket_coords(&a, &b).unwrap();
        let ba = l.bracket_coords(&b, &a).unwrap();
        for k in 0..3 {
            prop_assert!((ab[k] + ba[k]).norm() < 1e-8);
        }
    }

    /// Haar counting-measure whiskering invariance for random rational test
    /// functions on Inn(S3).
    #[test]
    fn haar_whiskering_invariance(coeffs in proptest::collection::vec(-20i64..20, 36), a in 0usize..6) {
        let cm = library::inn_s3();
        let haar = HaarSystem::counting(&cm);
        let f = |e: TwoGroupElement| BigRational::new(coeffs[cm.index_of(e)].into(), 3.into());
        prop_assert!(haar.whiskering_identity_holds(&cm, a, f));
    }

    /// Gauge composition closes on random transforms of the theta lattice
    /// over Inn(S3).
    #[test]
    fn gauge_composition_random(
        va in 0usize..6, ea in proptest::collection::vec(0usize..6, 3),
        vb in 0usize..6, eb in proptest::collection::vec(0usize..6, 3),
        edges in proptest::collection::vec(0usize..6, 3),
    ) {
        let lat = complex::theta();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let inner = GaugeTransform { vertex_labels: vec![va], edge_labels: ea };
        let outer = GaugeTransform { vertex_labels: vec![vb], edge_labels: eb };
        let mut cfg = FlatConfig { edge_labels: edges, face_labels: vec![0, 0] };
        // Force flatness: t = id fixes the face labels from the holonomies.
        for (fpos, f) in lat.faces.iter().enumerate() {
            let hs = site.path_holonomy(&cfg, &f.source);
            let ht = site.path_holonomy(&cfg, &f.target);
            cfg.face_labels[fpos] = cm.g.op(cm.g.invert(hs), ht);
        }
        prop_assert!(site.is_flat(&cfg));
        let two = site.gauge_apply(&site.gauge_apply(&cfg, &inner), &outer);
        let one = site.gauge_apply(&cfg, &site.compose_gauge(&inner, &outer));
        prop_assert_eq!(two, one);
    }

    /// Coassociativity and the antipode anti-homomorphism hold for random
    /// complex states on the coordinate ring of Z4 -> x2 -> Z4.
    #[test]
    fn random_state_hopf_laws(values in cvec(16), values2 in cvec(16)) {
        let cm = library::z4_x2_z4();
        let phi = RingState { values };
        let psi = RingState { values: values2 };
        prop_assert!(l2cs_core::statehopf::coassociativity_h(&cm, &phi).passed());
        prop_assert!(l2cs_core::statehopf::cointerchange(&cm, &phi).passed());
        let lhs = antipode_h(&cm, &phi.convolve(&cm, &psi));
        let rhs = antipode_h(&cm, &psi).convolve(&cm, &antipode_h(&cm, &phi));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);
    }

    /// The standard quantum family solves the Yang-Baxter equation across a
    /// continuous range of parameters.
    #[test]
    fn uq_family_ybe_random_q(q in 0.25f64..4.0) {
        prop_assert!(ybe_residual(&uq_sl2_r(q)).unwrap() < 1e-10);
    }

    /// Represented classical r-matrix: the Fock-Rosly bracket of delocalized
    /// states vanishes for any states.
    #[test]
    fn delocalized_brackets_vanish(a in cmat2(), b in cmat2()) {
        let rep = l2cs_core::algebra::Representation::new(MatrixLieAlgebra::sl2().basis).unwrap();
        let r = represent_pairing(&sl2_standard_r(), &rep, &rep).unwrap();
        let params = l2cs_core::rmatrix::DeformationParams::new(2.0).unwrap();
        let out = l2cs_core::rmatrix::fock_rosly_bracket(
            &a, &b, &r,
            l2cs_core::rmatrix::Adjacency::delocalized(),
            &params,
        ).unwrap();
        prop_assert_eq!(out.max_abs(), 0.0);
    }
}
