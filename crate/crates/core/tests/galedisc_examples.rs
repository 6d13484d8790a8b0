use k3lab_core::cases;
use k3lab_core::exactcore::{ints, rat, same_lattice, BigRat};
use k3lab_core::galedisc::{
    discriminant_vanishes_on_horn, fan_sequence, horn_kapranov, newton_edge_normals, reduce_discriminant,
    same_direction, sample_points, superpotential, GaleError, LaurentPoly,
};
use k3lab_core::polytope::secondary_fan_with_basis;
use k3lab_core::Case;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn published_gale(case: Case) -> k3lab_core::galedisc::GaleData {
    fan_sequence(&cases::point_config(case)).unwrap().with_basis(cases::gale_rows(case)).unwrap()
}

#[test]
fn fan_sequences_reproduce_published_matrices() {
    for case in Case::ALL {
        let g = fan_sequence(&cases::point_config(case)).unwrap();
        assert!(same_lattice(&g.kernel_basis, &cases::gale_rows(case)));
        for row in &g.kernel_basis {
            assert!(g.ptilde.mul_vec(row).unwrap().iter().all(Zero::is_zero));
            assert!(row.iter().sum::<num_bigint::BigInt>().is_zero());
        }
    }
}

#[test]
fn torus_coordinates_as_monomials() {
    let t1 = published_gale(Case::A1).torus_coordinates();
    assert_eq!(t1.describe(0), "a1*a3*a4/a0^3");
    assert_eq!(t1.describe(1), "a2*a3*a5/a0^3");
    let t0 = published_gale(Case::A0).torus_coordinates();
    assert_eq!(t0.describe(0), "a3*a4/a0^2");
    assert_eq!(t0.describe(1), "a1*a2*a3^2*a5/a0^5");
    // the printed alternative a2*a4/a0^2 is not an affine relation of A0
    let g = fan_sequence(&cases::point_config(Case::A0)).unwrap();
    let alt = vec![ints(&[-2, 0, 1, 0, 1, 0]), ints(&[-5, 1, 1, 2, 0, 1])];
    assert_eq!(g.with_basis(alt), Err(GaleError::BasisMismatch));
}

#[test]
fn horn_kapranov_published_values_a1() {
    let g = published_gale(Case::A1);
    let hk = |a: i64, b: i64| horn_kapranov(&g, &[rat(a, 1), rat(b, 1)]).unwrap();
    assert_eq!(hk(1, 0), [rat(-1, 27), rat(0, 1)]);
    assert_eq!(hk(1, 1), [rat(-1, 108), rat(-1, 108)]);
    assert_eq!(hk(2, 1), [rat(-4, 243), rat(-1, 243)]);
    let r = cases::reduced_discriminant(Case::A1);
    for (a, b) in [(1, 0), (1, 1), (2, 1)] {
        assert!(r.eval(&hk(a, b)).unwrap().is_zero());
    }
}

#[test]
fn horn_kapranov_closed_forms() {
    let g0 = published_gale(Case::A0);
    let g1 = published_gale(Case::A1);
    for l in sample_points(11, 40, 2) {
        let (l1, l2) = (&l[0], &l[1]);
        let d0 = rat(2, 1) * l1 + rat(5, 1) * l2;
        let s = l1 + rat(2, 1) * l2;
        if !d0.is_zero() && !s.is_zero() && !l1.is_zero() && !l2.is_zero() {
            let lam = l1 * &s / (&d0 * &d0);
            let mu = -(l2 * l2 * l2) * &s * &s / num_traits::pow(d0.clone(), 5);
            assert_eq!(horn_kapranov(&g0, &l).unwrap(), [lam, mu]);
        }
        let t = l1 + l2;
        if !t.is_zero() {
            let d = rat(27, 1) * &t * &t;
            let expect = [-(l1 * l1) / &d, -(l2 * l2) / &d];
            assert_eq!(horn_kapranov(&g1, &l).unwrap(), expect);
        }
    }
}

#[test]
fn reductions_match_published_polynomials() {
    for case in Case::ALL {
        let g = published_gale(case);
        let r = reduce_discriminant(&cases::discriminant(case), &g).unwrap();
        assert_eq!(r, cases::reduced_discriminant(case), "{case:?}");
    }
}

#[test]
fn reduction_by_direct_substitution() {
    let g0 = published_gale(Case::A0);
    let g1 = published_gale(Case::A1);
    for pt in sample_points(5, 20, 6) {
        if pt.iter().any(Zero::is_zero) {
            continue;
        }
        let d1 = cases::discriminant(Case::A1).eval(&pt).unwrap();
        let lm = g1.torus_coordinates().evaluate(&pt).unwrap();
        let a0_6 = num_traits::pow(pt[0].clone(), 6);
        assert_eq!(&d1 / &a0_6, cases::reduced_discriminant(Case::A1).eval(&lm).unwrap());

        let d0 = cases::discriminant(Case::A0).eval(&pt).unwrap();
        let lm = g0.torus_coordinates().evaluate(&pt).unwrap();
        let lhs = d0 * &lm[0] * &lm[0] / (a0_6 * &pt[4] * &pt[4]);
        assert_eq!(lhs, -cases::reduced_discriminant(Case::A0).eval(&lm).unwrap());
    }
}

#[test]
fn a1_factorization_identity() {
    let l = LaurentPoly::var(2, 0);
    let m = LaurentPoly::var(2, 1);
    let one = LaurentPoly::constant(2, BigRat::one());
    let f = one
        .add(&l.add(&m).scale(&rat(54, 1)))
        .add(&l.sub(&m).pow(2).scale(&rat(729, 1)));
    assert_eq!(f, cases::reduced_discriminant(Case::A1));
}

#[test]
fn discriminants_vanish_on_horn_images() {
    for case in Case::ALL {
        let rows = cases::gale_rows(case);
        let rep = discriminant_vanishes_on_horn(&rows, &cases::reduced_discriminant(case), &sample_points(2024, 25, 2));
        assert!(rep.evaluated() >= 20);
        assert!(rep.all_zero(), "{case:?}");
    }
}

#[test]
fn perturbed_exponents_do_not_vanish() {
    let rows = vec![ints(&[-2, 0, 0, 1, 1, 0]), ints(&[-5, 1, 1, 2, 1, 0])];
    let rep = discriminant_vanishes_on_horn(&rows, &cases::reduced_discriminant(Case::A0), &sample_points(2024, 25, 2));
    assert!(!rep.all_zero());
    assert!(rep.nonzero() >= 20);
}

#[test]
fn non_quasi_homogeneous_input_is_rejected() {
    let g = published_gale(Case::A1);
    let p = cases::discriminant(Case::A1).add(&LaurentPoly::from_int_terms(6, &[(&[1, 0, 0, 0, 0, 0], 1)]));
    assert!(matches!(reduce_discriminant(&p, &g), Err(GaleError::NotQuasiHomogeneous(_))));
}

#[test]
fn evaluations_at_all_ones() {
    let ones = vec![BigRat::one(); 6];
    assert_eq!(cases::discriminant(Case::A1).eval(&ones).unwrap(), rat(109, 1));
    let w = superpotential(&cases::point_config(Case::A0), &ones);
    assert_eq!(w.eval(&[rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap(), rat(6, 1));
    assert_eq!(w.len(), 6);
}

#[test]
fn newton_polygon_normals_are_secondary_rays() {
    for case in Case::ALL {
        let fan = secondary_fan_with_basis(&cases::point_config(case), &cases::gale_rows(case)).unwrap();
        for n in newton_edge_normals(&cases::reduced_discriminant(case)) {
            assert!(fan.rays.iter().any(|r| same_direction(&n, r)), "{case:?} normal {n:?}");
        }
    }
}

proptest! {
    #[test]
    fn horn_kapranov_is_degree_zero(
        l1 in -20i64..20, l2 in -20i64..20, tn in 1i64..12, td in 1i64..12, neg in any::<bool>()
    ) {
        let t = rat(if neg { -tn } else { tn }, td);
        for case in Case::ALL {
            let g = published_gale(case);
            let l = [rat(l1, 1), rat(l2, 1)];
            let scaled = [&l[0] * &t, &l[1] * &t];
            match horn_kapranov(&g, &l) {
                Ok(v) => prop_assert_eq!(horn_kapranov(&g, &scaled).unwrap(), v),
                Err(e) => prop_assert_eq!(horn_kapranov(&g, &scaled), Err(e)),
            }
        }
    }

    #[test]
    fn torus_action_preserves_coordinates(
        a in proptest::collection::vec(1i64..9, 6), row in 0usize..4, tn in 1i64..6, td in 1i64..6
    ) {
        for case in Case::ALL {
            let g = published_gale(case);
            let t = rat(tn, td);
            let pt: Vec<BigRat> = a.iter().map(|&x| rat(x, 1)).collect();
            let moved: Vec<BigRat> = pt
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    let w: i64 = num_traits::ToPrimitive::to_i64(g.ptilde.get(row, j)).unwrap();
                    x * k3lab_core::exactcore::rat_pow(&t, w).unwrap()
                })
                .collect();
            let tc = g.torus_coordinates();
            let (c1, c2) = (tc.evaluate(&pt).unwrap(), tc.evaluate(&moved).unwrap());
            prop_assert_eq!(&c1, &c2);
            let r = cases::reduced_discriminant(case);
            prop_assert_eq!(r.eval(&c1).unwrap(), r.eval(&c2).unwrap());
        }
    }
}
