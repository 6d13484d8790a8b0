//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use k3lab::Registry;
use k3lab_core::cases::CONE_LABELS;
use k3lab_core::exactcore::{int, ints, rat, BigRat, IntMat};
use k3lab_core::galedisc::{discriminant_vanishes_on_horn, reduce_discriminant, sample_points, LaurentPoly};
use k3lab_core::lattice::{check_dolgachev, hilbert_w_gram, n_a0_generators};
use k3lab_core::modular::{
    gamma0_3_generators, gram_of, l_isometry, lattice_l, loop_monodromy_traces, mat2_distance,
    ode_transport, pair_action, r_basis, sigma_action, sublattice_l_basis, LoopPath, Mat2Z,
};
use k3lab_core::monodromy::{
    build_numgroth, cusp_fan, hyperbolic_splitting, hyperbolic_splitting_with, large_radius_monodromies,
    monodromy_log, tensor_action, NumGroth, Splitting,
};
use k3lab_core::periods::{
    appell_f4, appell_f4_coeffs, eta1_coeffs, gauss_2f1, gkz_recurrence_check, hilbert_relation_degree_check,
    ifunction_rows, lambda_mu_from_xy, period_map_a0, period_map_a0_homogeneous, wproj_homogeneity_check,
    ModularRingData, WeightedPoint,
};
use k3lab_core::polytope::{
    circuits, enumerate_regular_triangulations, hull, normalized_volume, secondary_fan_with_basis,
};
use k3lab_core::exactcore::Quad5;
use k3lab_core::Case;
use num_complex::Complex64;
use num_traits::{One, Zero};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn c1_polytopes(reg: &Registry) -> Verdict {
    for case in Case::ALL {
        let ex = reg.case(case).unwrap();
        let p = hull(&ex.vertices).map_err(|e| e.to_string())?;
        ensure(p.is_reflexive(), || format!("{case} not reflexive"))?;
        let n = p.lattice_points().len();
        ensure(n == 6, || format!("{case} has {n} lattice points"))?;
        let d = p.polar_dual().map_err(|e| e.to_string())?;
        ensure(sorted(d.vertices()) == sorted(&ex.dual_vertices), || format!("{case} dual vertices differ"))?;
    }
    Ok("both reflexive, 6 points each, duals match".into())
}

fn c2_volumes(reg: &Registry) -> Verdict {
    let a = reg.case(Case::A0).unwrap().point_config().map_err(|e| e.to_string())?;
    let v1 = normalized_volume(&[1, 2, 3, 5], &a).map_err(|e| e.to_string())?;
    let v2 = normalized_volume(&[0, 1, 2, 5], &a).map_err(|e| e.to_string())?;
    ensure(v1 == int(5) && v2 == int(2), || format!("volumes {v1}, {v2}"))?;
    Ok("vol{a1,a2,a3,a5} = 5, vol{a0,a1,a2,a5} = 2".into())
}

fn c3_fans(reg: &Registry) -> Verdict {
    for case in Case::ALL {
        let ex = reg.case(case).unwrap();
        let a = ex.point_config().map_err(|e| e.to_string())?;
        let found = enumerate_regular_triangulations(&a).map_err(|e| e.to_string())?;
        ensure(found.len() == 4, || format!("{case}: {} triangulations", found.len()))?;
        ensure(sorted(&found) == sorted(&ex.triangulations()), || format!("{case}: simplex lists differ"))?;
        let fan = secondary_fan_with_basis(&a, &ex.divisor_rows_big()).map_err(|e| e.to_string())?;
        let published = ex.triangulations();
        let labels: Vec<usize> = fan.triangulations.iter().map(|t| published.iter().position(|p| p == t).unwrap()).collect();
        let start = labels.iter().position(|&l| l == 0).unwrap();
        let order: Vec<&str> = (0..4).map(|k| CONE_LABELS[labels[(start + k) % 4]]).collect();
        ensure(order == CONE_LABELS, || format!("{case}: cone order {order:?}"))?;
        for adj in &fan.adjacency {
            let (l1, l2) = (labels[adj.cones.0], labels[adj.cones.1]);
            let k = if (l1 + 1) % 4 == l2 { l1 } else { l2 };
            ensure(adj.circuit.support == ex.adjacency_circuits[k], || format!("{case}: wall {l1}-{l2}"))?;
        }
    }
    let a0 = reg.case(Case::A0).unwrap().point_config().unwrap();
    let c = circuits(&a0).into_iter().find(|c| c.support == [0, 3, 4]).ok_or("no circuit {a0,a3,a4}")?;
    ensure(c.relation == ints(&[2, -1, -1]), || format!("relation {:?}", c.relation))?;
    Ok("4 regular triangulations each in order I-IV, walls match, 2a0 = a3 + a4".into())
}

fn published_reduced(case: Case) -> LaurentPoly {
    let l = LaurentPoly::var(2, 0);
    let m = LaurentPoly::var(2, 1);
    let k = |n: i64| LaurentPoly::constant(2, rat(n, 1));
    match case {
        Case::A0 => k(64)
            .mul(&l.pow(5))
            .sub(&k(48).mul(&l.pow(4)))
            .add(&k(12).mul(&l.pow(3)))
            .sub(&l.pow(2))
            .sub(&k(1000).mul(&l.pow(2)).mul(&m))
            .add(&k(50).mul(&l).mul(&m))
            .sub(&k(3125).mul(&m.pow(2)))
            .sub(&k(4).mul(&m)),
        Case::A1 => k(1).add(&k(54).mul(&l.add(&m))).add(&k(729).mul(&l.sub(&m).pow(2))),
    }
}

fn c4_discriminants(reg: &Registry) -> Verdict {
    let mut counts = Vec::new();
    for case in Case::ALL {
        let ex = reg.case(case).unwrap();
        let g = ex.gale().map_err(|e| e.to_string())?;
        let reduced = reduce_discriminant(&ex.discriminant().unwrap(), &g).map_err(|e| e.to_string())?;
        let want = published_reduced(case);
        ensure(reduced == want || reduced == want.neg(), || format!("{case}: reduced form differs"))?;
        let rep = discriminant_vanishes_on_horn(&ex.divisor_rows_big(), &reduced, &sample_points(2024, 40, 2));
        ensure(rep.evaluated() >= 25, || format!("{case}: only {} points", rep.evaluated()))?;
        ensure(rep.all_zero(), || format!("{case}: nonzero at {} points", rep.nonzero()))?;
        counts.push(rep.evaluated());
    }
    Ok(format!("exact zeros at {} and {} Horn-Kapranov points, reduced forms match", counts[0], counts[1]))
}

fn c5_series(_: &Registry) -> Verdict {
    let (a, b, one) = (rat(1, 3), rat(2, 3), rat(1, 1));
    let f4 = appell_f4_coeffs(&a, &b, &one, &one, &rat(-27, 1), &rat(-27, 1), 8);
    ensure(f4 == eta1_coeffs(8), || "F4 and eta1 differ for n + m <= 8".into())?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let grid: Vec<f64> = (0..5).map(|i| 0.01 + 0.035 * i as f64).collect();
    let mut worst = 0.0f64;
    for &x in &grid {
        for &y in &grid {
            let (lam, mu) = lambda_mu_from_xy(c(x), c(y));
            let lhs = appell_f4(&a, &b, &one, &one, lam * -27.0, mu * -27.0, 1e-15).map_err(|e| e.to_string())?.value;
            let rhs = gauss_2f1(&a, &b, &one, c(x), 1e-15).unwrap().value * gauss_2f1(&a, &b, &one, c(y), 1e-15).unwrap().value;
            worst = worst.max((lhs - rhs).norm() / rhs.norm());
        }
    }
    ensure(worst < 1e-10, || format!("factorization defect {worst:e}"))?;
    let r = gkz_recurrence_check(&ifunction_rows(Case::A1), &eta1_coeffs(11)).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("GKZ failure {:?}", r.failure))?;
    Ok(format!("F4 = eta1 to degree 8, 5x5 grid defect {worst:.1e}, {} GKZ recurrences exact", r.checked))
}

fn splitting(reg: &Registry, case: Case) -> Result<(NumGroth, Splitting), String> {
    let ex = reg.case(case).unwrap();
    let ng = build_numgroth(&ex.pic_gram().unwrap()).map_err(|e| e.to_string())?;
    let s = match &ex.published_f {
        Some(f) => hyperbolic_splitting_with(&ng, f),
        None => hyperbolic_splitting(&ng, 5),
    }
    .map_err(|e| e.to_string())?;
    Ok((ng, s))
}

fn c6_dictionary(reg: &Registry) -> Verdict {
    for case in Case::ALL {
        let (ng, s) = splitting(reg, case)?;
        let l = s.u_perp_n(&ng);
        let e = ints(&[1, 0, 0, 0]);
        let phi = |d: (i64, i64)| l.transvection(&e, &ints(&[0, 0, d.0, d.1])).unwrap().matrix().clone();
        for d1 in -3..=3 {
            for d2 in -3..=3 {
                let t = tensor_action(&ng, (d1, d2)).map_err(|e| e.to_string())?;
                ensure(s.to_u_perp_n(&t) == phi((d1, d2)), || format!("{case}: ({d1},{d2})"))?;
            }
        }
        for d in large_radius_monodromies(case) {
            let t = tensor_action(&ng, d).unwrap();
            ensure(s.to_u_perp_n(&t) == phi(d), || format!("{case}: large radius generator {d:?}"))?;
        }
    }
    Ok("tensor = transvection for all |d| <= 3; T1, T2 and the A1 generators e1+e2, e2".into())
}

fn c7_nilpotency(reg: &Registry) -> Verdict {
    let (ng, _) = splitting(reg, Case::A0)?;
    for d in [(1, 0), (0, 1)] {
        let n = monodromy_log(tensor_action(&ng, d).unwrap().matrix()).map_err(|e| e.to_string())?;
        let n2 = n.mul_mat(&n).unwrap();
        ensure(!n2.is_zero() && n2.mul_mat(&n).unwrap().is_zero(), || format!("A0 T{d:?} is not type III"))?;
    }
    let (ng, _) = splitting(reg, Case::A1)?;
    for d in [(1, 0), (0, 1)] {
        let n = monodromy_log(tensor_action(&ng, d).unwrap().matrix()).map_err(|e| e.to_string())?;
        ensure(!n.is_zero() && n.mul_mat(&n).unwrap().is_zero(), || format!("A1 T{d:?} is not type II"))?;
    }
    Ok("A0: N^2 != 0, N^3 = 0; A1 (isotropic e1, e2): N != 0, N^2 = 0".into())
}

fn c8_fans(_: &Registry) -> Verdict {
    let f1 = cusp_fan(Case::A1, 6);
    ensure(f1.rays == vec![[int(1), int(0)], [int(1), int(1)], [int(0), int(1)]], || format!("A1 rays {:?}", f1.rays))?;
    let f0 = cusp_fan(Case::A0, 4);
    let (g1, _) = n_a0_generators();
    let k = f0.rays.len();
    let mut shifts = 0;
    for i in 2..k - 2 {
        let w = g1.mul_vec(f0.rays[i].as_ref()).unwrap();
        if let Some(j) = f0.position(&[w[0].clone(), w[1].clone()]) {
            ensure(j.abs_diff(i) == 2, || format!("g1 moves ray {i} to {j}"))?;
            shifts += 1;
        }
    }
    ensure(shifts + 6 >= k, || format!("shift seen on {shifts} of {k} rays"))?;
    for w in f0.relations.windows(2) {
        let mut pair = [w[0].2.clone(), w[1].2.clone()];
        pair.sort();
        ensure(pair == [int(1), int(5)], || format!("relations {pair:?}"))?;
    }
    Ok(format!("A1 rays e1, e1+e2, e2; A0 chain of {k} rays, g1 shifts by two, self-intersections alternate -1/-5"))
}

fn c9_arithmetic(_: &Registry) -> Verdict {
    let q = |n: i64| Quad5::from_rat(rat(n, 1));
    ensure(hilbert_w_gram() == [[q(2), q(1)], [q(1), q(-2)]], || "W U W^T".into())?;
    let u_u = IntMat::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let u_u3 = IntMat::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, 3, 0]]);
    ensure(gram_of(&r_basis()) == u_u, || "M2(Z) is not U + U".into())?;
    ensure(gram_of(&sublattice_l_basis()) == u_u3, || "L is not U + U(3)".into())?;
    let id = Mat2Z::identity();
    let gram = lattice_l().gram().clone();
    for g in gamma0_3_generators() {
        for iso in [l_isometry(|v| pair_action(&g, &id, v)), l_isometry(|v| pair_action(&id, &g, v))] {
            let m = iso.map_err(|e| e.to_string())?;
            ensure(m.matrix().congruence(&gram).unwrap() == gram, || "generator does not preserve the pairing".into())?;
        }
    }
    let s = l_isometry(sigma_action).map_err(|e| e.to_string())?;
    ensure(s.matrix().congruence(&gram).unwrap() == gram, || "sigma".into())?;
    Ok("W U W^T = (2 1 / 1 -2) over Q(sqrt5); U+U, U+U(3); sigma and Gamma0(3)^2 preserve L".into())
}

fn c10_ode(_: &Registry) -> Verdict {
    let r = loop_monodromy_traces(1e-6).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("traces {:?}, defects {:?}", r.abs_traces, r.product_defects))?;
    let [_, _, mi] = r.loops.mobius();
    let cube = mi.compose(&mi).compose(&mi).distance_to_identity();
    ensure(cube < 1e-6, || format!("M_inf^3 defect {cube:e}"))?;
    let c = |re, im| Complex64::new(re, im);
    let m = ode_transport(&LoopPath::around(c(0.5, 0.0), c(0.5, 0.3), 0.15).path(), 1e-12).map_err(|e| e.to_string())?;
    let d = mat2_distance(&m, &[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
    ensure(d < 1e-9, || format!("contractible loop defect {d:e}"))?;
    let t = r.abs_traces;
    Ok(format!("|tr| = {:.9}, {:.9}, {:.9}; M_inf order 3; contractible loop {d:.1e}", t[0], t[1], t[2]))
}

fn c11_weighted(_: &Registry) -> Verdict {
    let k = wproj_homogeneity_check(&period_map_a0_homogeneous(), &[1, 2, 5], &[1, 3, 5]);
    ensure(k == Some(2), || format!("degree {k:?}"))?;
    let cusp = WeightedPoint::new(vec![BigRat::one(), BigRat::zero(), BigRat::zero()], vec![1, 3, 5]).unwrap();
    for lam in [rat(0, 1), rat(1, 2), rat(-2, 3)] {
        let p = period_map_a0(&lam, &BigRat::zero()).map_err(|e| e.to_string())?;
        ensure(p.equivalent(&cusp), || format!("mu = 0 maps to {:?}", p.coords))?;
    }
    let r = hilbert_relation_degree_check(&ModularRingData::builtin());
    ensure(r.passed(), || format!("{r:?}"))?;
    Ok("(1,2,5) -> (1,3,5) with k = 2; mu = 0 -> [1:0:0]; 144D^2 - Delta has degree 30".into())
}

fn c12_dolgachev(reg: &Registry) -> Verdict {
    for case in Case::ALL {
        let rep = check_dolgachev(&reg.case(case).unwrap().dolgachev_input().map_err(|e| e.to_string())?);
        let bad: Vec<&str> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        ensure(bad.is_empty(), || format!("{case}: {bad:?}"))?;
        ensure(rep.witness_f.is_some(), || format!("{case}: no 1-admissible witness"))?;
        let s = rep.equivalence.ok_or_else(|| format!("{case}: no equivalence"))?;
        ensure(s.is_unimodular(), || format!("{case}: transform not unimodular"))?;
    }
    Ok("1-admissible vectors and unimodular equivalences for A0 and A1".into())
}

type Criterion = (&'static str, fn(&Registry) -> Verdict, Duration);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 12] = [
        ("polytope data", c1_polytopes, secs(1)),
        ("simplex volumes", c2_volumes, secs(1)),
        ("secondary fans", c3_fans, secs(30)),
        ("discriminants", c4_discriminants, secs(5)),
        ("series identities", c5_series, secs(10)),
        ("monodromy dictionary", c6_dictionary, secs(1)),
        ("nilpotency types", c7_nilpotency, secs(1)),
        ("toroidal fans", c8_fans, secs(5)),
        ("arithmetic models", c9_arithmetic, secs(1)),
        ("ODE monodromy", c10_ode, secs(60)),
        ("weighted maps", c11_weighted, secs(1)),
        ("Dolgachev checks", c12_dolgachev, secs(5)),
    ];
    let reg = Registry::builtin();
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f(&reg);
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if elapsed > *budget => Err(format!("{msg}; took {elapsed:?}, budget {budget:?}")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("criterion {:>2} PASS {name} ({} ms): {msg}", i + 1, elapsed.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({} ms): {msg}", i + 1, elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
