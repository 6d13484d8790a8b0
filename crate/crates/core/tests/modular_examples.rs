use k3lab_core::exactcore::{int, IntMat};
use k3lab_core::modular::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat() -> impl Strategy<Value = Mat2Z> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(x, y, z, w)| Mat2Z::new(x, y, z, w))
}

fn l_vec() -> impl Strategy<Value = Mat2Z> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -3i64..=3).prop_map(|(x, y, z, w)| Mat2Z::new(x, y, z, 3 * w))
}

/// Random elements of SL₂(Z) as words in the standard generators.
fn sl2() -> impl Strategy<Value = Mat2Z> {
    proptest::collection::vec(0usize..4, 0..6).prop_map(|w| {
        let g = [Mat2Z::new(1, 1, 0, 1), Mat2Z::new(1, -1, 0, 1), Mat2Z::new(0, -1, 1, 0), Mat2Z::new(0, 1, -1, 0)];
        w.iter().fold(Mat2Z::identity(), |acc, &i| acc.mul(&g[i]))
    })
}

fn gamma0_3() -> impl Strategy<Value = Mat2Z> {
    proptest::collection::vec(0usize..4, 0..6).prop_map(|w| {
        let [t, s] = gamma0_3_generators();
        let g = [t.clone(), t.inverse_sl2().unwrap(), s.clone(), s.inverse_sl2().unwrap()];
        w.iter().fold(Mat2Z::identity(), |acc, &i| acc.mul(&g[i]))
    })
}

fn mobius_tau(m: &Mat2Z, t: Complex64) -> Complex64 {
    mobius_of(m).apply(t)
}

#[test]
fn index_of_l_is_three() {
    let l = gram_of(&sublattice_l_basis());
    let r = gram_of(&r_basis());
    // det(L) = index² · det(R)
    assert_eq!(l.det().unwrap(), r.det().unwrap() * int(9));
    assert!(!Mat2Z::new(0, 0, 0, 1).in_l());
    assert!(u_vector().in_l());
}

#[test]
fn gamma0_generators_preserve_l() {
    for g in gamma0_3_generators() {
        assert!(g.is_gamma0_3());
        let iso = l_isometry(|v| pair_action(&g, &Mat2Z::identity(), v)).unwrap();
        assert_eq!(iso.lattice().gram(), &lattice_l().gram().clone());
        l_isometry(|v| pair_action(&Mat2Z::identity(), &g, v)).unwrap();
    }
    let s = Mat2Z::new(0, -1, 1, 0);
    assert!(l_isometry(|v| pair_action(&s, &Mat2Z::identity(), v)).is_err());
    assert_eq!(pair_action(&Mat2Z::new(2, 0, 0, 1), &Mat2Z::identity(), &u_vector()), Err(ModularError::NotUnimodular));
}

#[test]
fn identity_pair_action() {
    let v = Mat2Z::new(3, 1, 4, 1);
    assert_eq!(pair_action(&Mat2Z::identity(), &Mat2Z::identity(), &v).unwrap(), v);
}

#[test]
fn group_words_preserve_l_and_pairing() {
    let [t, s] = gamma0_3_generators();
    let id = Mat2Z::identity();
    let gens: Vec<Box<dyn Fn(&Mat2Z) -> Result<Mat2Z, ModularError>>> = vec![
        Box::new(move |v| pair_action(&t, &id, v)),
        Box::new({
            let s = s.clone();
            move |v| pair_action(&Mat2Z::identity(), &s, v)
        }),
        Box::new(sigma_action),
        Box::new(|v| Ok(rho_action(v))),
    ];
    let isos: Vec<IntMat> = gens.iter().map(|g| l_isometry(g).unwrap().matrix().clone()).collect();
    let gram = lattice_l().gram().clone();
    let mut words = vec![IntMat::identity(4)];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &words {
            for g in &isos {
                let m = g.mul_mat(w).unwrap();
                assert_eq!(m.congruence(&gram).unwrap(), gram);
                next.push(m);
            }
        }
        words = next;
    }
    assert_eq!(words.len(), 256);
}

#[test]
fn period_matrix_examples() {
    let z = period_matrix_z(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
    let zb = z.map(|x| x.conj());
    assert!((det_pairing_c(&z, &zb) - c(4.0, 0.0)).norm() < 1e-12);
    assert!(det_pairing_c(&z, &z).norm() < 1e-12);
    assert_eq!(period_matrix_z(c(0.0, -1.0), c(0.0, 1.0)), Err(ModularError::NotInUpperHalfPlane));
}

#[test]
fn period_point_a1_examples() {
    let eta = period_point_a1(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
    let bar = eta.map(|x| x.conj());
    assert!((pair_u_u3(&eta, &bar) - c(12.0, 0.0)).norm() < 1e-12);
    assert!(pair_u_u3(&eta, &eta).norm() < 1e-12);
    let scaled = eta.map(|x| x * c(-2.0, 3.0));
    let sb = scaled.map(|x| x.conj());
    assert!(pair_u_u3(&scaled, &sb).re > 0.0);
}

#[test]
fn period_point_a1_isotropic_symbolically() {
    use k3lab_core::exactcore::rat;
    use k3lab_core::galedisc::LaurentPoly;
    let z1 = LaurentPoly::var(2, 0);
    let z2 = LaurentPoly::var(2, 1);
    let eta = [z1.mul(&z2).scale(&rat(3, 1)), LaurentPoly::constant(2, rat(-1, 1)), z1.clone(), z2.clone()];
    let two = rat(2, 1);
    let q = eta[0].mul(&eta[1]).scale(&two).add(&eta[2].mul(&eta[3]).scale(&rat(6, 1)));
    assert!(q.is_zero());
}

#[test]
fn hilbert_identity_entries() {
    use k3lab_core::exactcore::Quad5;
    let eps = Quad5::epsilon();
    let inv = eps.inverse().unwrap();
    assert_eq!(&eps - &inv, Quad5::one());
    assert!(hilbert_w_identity());
}

#[test]
fn trivial_and_composed_transport() {
    let zero_loop = vec![Segment::Line { from: c(0.5, 0.0), to: c(0.5, 0.0) }];
    let id = ode_transport(&zero_loop, 1e-12).unwrap();
    assert!(mat2_distance(&id, &[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]) < 1e-10);

    let p1 = vec![Segment::Line { from: c(0.5, 0.0), to: c(0.4, 0.3) }];
    let p2 = vec![Segment::Line { from: c(0.4, 0.3), to: c(0.7, -0.2) }];
    let both: Path = p1.iter().chain(&p2).copied().collect();
    let m1 = ode_transport(&p1, 1e-12).unwrap();
    let m2 = ode_transport(&p2, 1e-12).unwrap();
    let m12 = ode_transport(&both, 1e-12).unwrap();
    assert!(mat2_distance(&m12, &mat2_mul(&m2, &m1)) < 1e-9);
    let back = ode_transport(&reverse_path(&both), 1e-12).unwrap();
    assert!(mat2_distance(&back, &mat2_inverse(&m12)) < 1e-9);
}

#[test]
fn contractible_loop_is_identity() {
    let l = LoopPath::around(c(0.5, 0.0), c(0.5, 0.3), 0.15);
    let m = ode_transport(&l.path(), 1e-12).unwrap();
    assert!(mat2_distance(&m, &[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]) < 1e-9);
}

#[test]
fn gauss_solution_is_transported() {
    use k3lab_core::exactcore::rat;
    use k3lab_core::periods::gauss_2f1_derivatives;
    let (a, b, one) = (rat(1, 3), rat(2, 3), rat(1, 1));
    let at = |x: f64| gauss_2f1_derivatives(&a, &b, &one, c(x, 0.0), 1e-15, 1).unwrap().0;
    let (u0, u1) = (at(0.2), at(0.5));
    let p = vec![Segment::Line { from: c(0.2, 0.0), to: c(0.5, 0.0) }];
    let y = ode_transport_vector(&p, [u0[0], u0[1]], 1e-12).unwrap();
    assert!((y[0] - u1[0]).norm() < 1e-9 && (y[1] - u1[1]).norm() < 1e-9);
}

#[test]
fn loop_traces_match_published_classes() {
    let r = loop_monodromy_traces(1e-6).unwrap();
    assert!(r.passed(), "{r:?}");
    assert!((r.abs_traces[0] - 2.0).abs() < 1e-6);
    assert!((r.abs_traces[1] - 2.0).abs() < 1e-6);
    assert!((r.abs_traces[2] - 1.0).abs() < 1e-6);
    let [_, _, mi] = r.loops.mobius();
    assert!(mi.compose(&mi).compose(&mi).distance_to_identity() < 1e-6);
}

#[test]
fn traces_independent_of_basepoint() {
    let base = loop_monodromy(c(0.5, 0.0), 1e-12).unwrap().abs_traces();
    for bp in [c(1.0 / 3.0, 0.01), c(1.0 / 3.0, -0.01)] {
        let t = loop_monodromy(bp, 1e-12).unwrap().abs_traces();
        for i in 0..3 {
            assert!((t[i] - base[i]).abs() < 1e-6, "{bp} {t:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pairing_bilinear(v in mat(), w in mat(), u in mat()) {
        prop_assert_eq!(det_pairing(&v.add(&w), &u), det_pairing(&v, &u) + det_pairing(&w, &u));
        prop_assert_eq!(det_pairing(&v, &w), det_pairing(&w, &v));
        prop_assert_eq!(det_pairing(&u, &u), u.det() * int(-2));
    }

    #[test]
    fn pair_action_preserves_pairing(a in sl2(), b in sl2(), v in mat(), w in mat()) {
        let av = pair_action(&a, &b, &v).unwrap();
        let aw = pair_action(&a, &b, &w).unwrap();
        prop_assert_eq!(det_pairing(&av, &aw), det_pairing(&v, &w));
    }

    #[test]
    fn rho_intertwines(a in sl2(), b in sl2(), v in mat()) {
        let lhs = pair_action(&a, &b, &rho_action(&v)).unwrap();
        let rhs = rho_action(&pair_action(&b, &a, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(rho_action(&rho_action(&v)), v.clone());
        prop_assert_eq!(det_pairing(&rho_action(&v), &rho_action(&v)), det_pairing(&v, &v));
    }

    #[test]
    fn gamma0_preserves_l(a in gamma0_3(), b in gamma0_3(), v in l_vec()) {
        prop_assert!(pair_action(&a, &b, &v).unwrap().in_l());
    }

    #[test]
    fn sigma_involution(v in l_vec(), w in l_vec()) {
        let sv = sigma_action(&v).unwrap();
        prop_assert!(sv.in_l());
        prop_assert_eq!(sigma_action(&sv).unwrap(), v.clone());
        prop_assert_eq!(det_pairing(&sv, &sigma_action(&w).unwrap()), det_pairing(&v, &w));
    }

    #[test]
    fn z_equivariance(a in gamma0_3(), b in gamma0_3(), x1 in -1.0f64..1.0, y1 in 0.3f64..2.0, x2 in -1.0f64..1.0, y2 in 0.3f64..2.0) {
        let (t1, t2) = (c(x1, y1), c(x2, y2));
        let z = period_matrix_z(t1, t2).unwrap();
        let az = act_on_z(&a, &b, &z);
        let expect = period_matrix_z(mobius_tau(&a, t1), mobius_tau(&b, t2)).unwrap();
        let scale = az[3];
        for i in 0..4 {
            prop_assert!((az[i] / scale - expect[i]).norm() < 1e-9 * (1.0 + expect[i].norm()));
        }
    }
}

#[test]
fn published_maps_satisfy_the_loop_order() {
    let [m0, m1, mi] = published_monodromies().map(|m| mobius_of(&m));
    assert!(mi.compose(&m0).compose(&m1).distance_to_identity() < 1e-15);
    assert!(mi.compose(&m1).compose(&m0).distance_to_identity() > 1.0);
}
