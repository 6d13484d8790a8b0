//! The verification suite: registered data bound to the core checks.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use k3lab_core::cases::CONE_LABELS;
use k3lab_core::exactcore::{int, ints, rat, BigRat, IntMat};
use k3lab_core::galedisc::{
    discriminant_vanishes_on_horn, newton_edge_normals, reduce_discriminant, same_direction, sample_points,
};
use k3lab_core::lattice::{check_dolgachev, n_a0_generators};
use k3lab_core::modular::{
    gamma0_3_generators, gram_of, hilbert_w_identity, l_isometry, lattice_l, loop_monodromy_traces, mat2_distance,
    ode_transport, pair_action, r_basis, rho_action, sigma_action, sublattice_l_basis, LoopPath, Mat2Z,
};
use k3lab_core::monodromy::{
    build_numgroth, degeneration_type, hyperbolic_splitting, hyperbolic_splitting_with, monodromy_log, orbit_fan,
    tensor_action, DegenerationType, NumGroth, Splitting,
};
use k3lab_core::periods::{
    appell_f4, appell_f4_coeffs, branch_relation_report, eta1_coeffs, gauss_2f1, gauss_2f1_derivatives,
    gkz_recurrence_check, hilbert_relation_degree_check, ifunction_fg, ifunction_rows, lambda_mu_from_xy,
    period_map_a0, period_map_a0_homogeneous, wproj_homogeneity_check, ModularRingData, WeightedPoint,
};
use k3lab_core::polytope::{
    circuits, enumerate_regular_triangulations, hull, normalized_volume, secondary_fan_with_basis, SecondaryFan2,
};
use k3lab_core::{Case, Signature};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::registry::{ExampleCase, Registry};
use crate::report::{CheckReport, Outcome, SuiteReport};

pub const DEFAULT_SEED: u64 = 2024;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_ODE_TOL: f64 = 1e-6;
pub const DEFAULT_MAX_DEG: u32 = 10;
pub const MAX_DEG_ENV: &str = "K3LAB_MAX_DEG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Group {
    Lattice,
    Polytope,
    Fan,
    Discriminant,
    Periods,
    Monodromy,
    Modular,
}

impl Group {
    pub const ALL: [Group; 7] =
        [Group::Lattice, Group::Polytope, Group::Fan, Group::Discriminant, Group::Periods, Group::Monodromy, Group::Modular];

    pub fn name(self) -> &'static str {
        match self {
            Group::Lattice => "lattice",
            Group::Polytope => "polytope",
            Group::Fan => "fan",
            Group::Discriminant => "discriminant",
            Group::Periods => "periods",
            Group::Monodromy => "monodromy",
            Group::Modular => "modular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteFilter {
    All,
    Only(Group),
}

impl SuiteFilter {
    fn admits(self, g: Group) -> bool {
        match self {
            SuiteFilter::All => true,
            SuiteFilter::Only(h) => h == g,
        }
    }
}

impl FromStr for SuiteFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(SuiteFilter::All);
        }
        Group::ALL.iter().find(|g| g.name() == s).map(|&g| SuiteFilter::Only(g)).ok_or_else(|| {
            let names: Vec<&str> = Group::ALL.iter().map(|g| g.name()).collect();
            format!("unknown suite {s:?}; expected all, {}", names.join(", "))
        })
    }
}

impl fmt::Display for SuiteFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteFilter::All => f.write_str("all"),
            SuiteFilter::Only(g) => f.write_str(g.name()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub filter: SuiteFilter,
    pub case: Option<Case>,
    pub seed: u64,
    pub tol: f64,
    pub ode_tol: f64,
    pub max_deg: u32,
    pub timings: bool,
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            filter: SuiteFilter::All,
            case: None,
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
            ode_tol: DEFAULT_ODE_TOL,
            max_deg: DEFAULT_MAX_DEG,
            timings: false,
            workers: 4,
        }
    }
}

/// Series degree cap from the environment, `DEFAULT_MAX_DEG` when unset.
pub fn max_deg_from_env() -> Result<u32, String> {
    match std::env::var(MAX_DEG_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{MAX_DEG_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_MAX_DEG),
    }
}

type CheckFn = fn(&ExampleCase, &SuiteConfig) -> Outcome;

struct CheckDef {
    group: Group,
    cases: &'static [Case],
    name: &'static str,
    exact: bool,
    run: CheckFn,
}

const BOTH: &[Case] = &[Case::A0, Case::A1];
const A0: &[Case] = &[Case::A0];
const A1: &[Case] = &[Case::A1];

macro_rules! check {
    ($g:ident, $cases:expr, $name:literal, $exact:expr, $f:expr) => {
        CheckDef { group: Group::$g, cases: $cases, name: $name, exact: $exact, run: $f }
    };
}

const CHECKS: &[CheckDef] = &[
    check!(Polytope, BOTH, "reflexive", true, |c, _| polytope_reflexive(c).into()),
    check!(Polytope, BOTH, "six_lattice_points", true, |c, _| polytope_points(c).into()),
    check!(Polytope, BOTH, "polar_dual_vertices", true, |c, _| polytope_dual(c).into()),
    check!(Polytope, BOTH, "simplex_volumes", true, |c, _| polytope_volumes(c)),
    check!(Polytope, BOTH, "triangulation_volumes", true, |c, _| triangulation_volumes(c).into()),
    check!(Fan, BOTH, "regular_triangulations", true, |c, _| fan_triangulations(c).into()),
    check!(Fan, BOTH, "four_maximal_cones", true, |c, _| fan_cones(c).into()),
    check!(Fan, BOTH, "cyclic_cone_order", true, |c, _| fan_order(c).into()),
    check!(Fan, BOTH, "wall_circuits", true, |c, _| fan_walls(c).into()),
    check!(Fan, A0, "circuit_2a0_a3_a4", true, |c, _| fan_a0_circuit(c).into()),
    check!(Discriminant, BOTH, "reduction", true, |c, _| disc_reduction(c).into()),
    check!(Discriminant, BOTH, "horn_kapranov_vanishing", true, |c, cfg| disc_horn(c, cfg).into()),
    check!(Discriminant, BOTH, "newton_normals_are_rays", true, |c, _| disc_newton(c).into()),
    check!(Periods, A1, "f4_equals_eta1", true, |_, cfg| periods_f4_eta1(cfg).into()),
    check!(Periods, A1, "f4_gauss_factorization", false, |_, cfg| periods_tensor(cfg).into()),
    check!(Periods, A1, "gauss_ode_residual", false, |_, cfg| periods_ode_residual(cfg).into()),
    check!(Periods, A1, "gkz_recurrences", true, |_, cfg| periods_gkz_eta1(cfg).into()),
    check!(Periods, A1, "ifunction_is_twisted_eta1", true, |_, cfg| periods_ifunction_a1(cfg).into()),
    check!(Periods, A0, "ifunction_gkz", true, |_, cfg| periods_ifunction_a0(cfg).into()),
    check!(Periods, BOTH, "mirror_map", true, |c, cfg| periods_mirror_map(c, cfg).into()),
    check!(Periods, A0, "weighted_homogeneity", true, |_, _| periods_homogeneity().into()),
    check!(Periods, A0, "cusp_image", true, |_, _| periods_cusp().into()),
    check!(Periods, A0, "modular_relation_degree", true, |_, _| periods_relation_degree().into()),
    check!(Periods, A0, "branch_relation", true, |_, cfg| periods_branch(cfg).into()),
    check!(Monodromy, BOTH, "numerical_grothendieck", true, |c, _| mono_numgroth(c).into()),
    check!(Monodromy, BOTH, "hyperbolic_splitting", true, |c, _| mono_splitting(c).into()),
    check!(Monodromy, BOTH, "transvection_dictionary", true, |c, _| mono_dictionary(c).into()),
    check!(Monodromy, BOTH, "nilpotency_type", true, |c, _| mono_nilpotency(c).into()),
    check!(Monodromy, BOTH, "orbit_fan", true, |c, _| mono_fan(c).into()),
    check!(Lattice, BOTH, "dolgachev", true, |c, _| lattice_dolgachev(c).into()),
    check!(Modular, A0, "hilbert_w_identity", true, |_, _| modular_hilbert().into()),
    check!(Modular, A1, "pairing_model", true, |_, _| modular_pairing().into()),
    check!(Modular, A1, "ode_loop_monodromy", false, |_, cfg| modular_ode(cfg).into()),
    check!(Modular, A1, "contractible_loop", false, |_, cfg| modular_contractible(cfg).into()),
];

/// Identifiers of every check, in report order.
pub fn check_ids() -> Vec<String> {
    let mut ids: Vec<String> = CHECKS
        .iter()
        .flat_map(|d| d.cases.iter().map(move |c| format!("{c}.{}.{}", d.group.name(), d.name)))
        .collect();
    ids.sort();
    ids
}

/// Runs the selected checks on a bounded worker pool and returns them
/// sorted by id.
pub fn run_suite(reg: &Registry, cfg: &SuiteConfig) -> SuiteReport {
    let mut jobs: Vec<(&CheckDef, &ExampleCase, String)> = Vec::new();
    for d in CHECKS.iter().filter(|d| cfg.filter.admits(d.group)) {
        for &case in d.cases.iter().filter(|&&c| cfg.case.is_none_or(|k| k == c)) {
            let ex = reg.case(case).expect("validated registry has both cases");
            jobs.push((d, ex, format!("{case}.{}.{}", d.group.name(), d.name)));
        }
    }
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(jobs.len()));
    let workers = cfg.workers.clamp(1, jobs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((d, ex, id)) = jobs.get(i) else { break };
                let start = Instant::now();
                let outcome = (d.run)(ex, cfg);
                let mut r = CheckReport::from_result(id, d.exact, outcome);
                if cfg.timings {
                    r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                }
                results.lock().expect("no poisoned workers").push(r);
            });
        }
    });
    SuiteReport::new(&cfg.filter.to_string(), cfg.seed, results.into_inner().expect("no poisoned workers"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

// polytope

fn polytope_reflexive(c: &ExampleCase) -> Result<(), String> {
    let p = hull(&c.vertices).map_err(err)?;
    ensure(sorted(p.vertices()) == sorted(&c.vertices), || "some listed points are not vertices".into())?;
    ensure(p.is_reflexive(), || "polytope is not reflexive".into())?;
    let interior = p.interior_lattice_points();
    ensure(interior == [vec![0, 0, 0]], || format!("interior points {interior:?}"))
}

fn polytope_points(c: &ExampleCase) -> Result<(), String> {
    let p = hull(&c.vertices).map_err(err)?;
    let found = p.lattice_points();
    let listed = c.point_config().map_err(err)?;
    ensure(found.len() == 6, || format!("{} lattice points", found.len()))?;
    ensure(sorted(found.points()) == sorted(listed.points()), || "lattice points differ from origin plus vertices".into())
}

fn polytope_dual(c: &ExampleCase) -> Result<(), String> {
    let p = hull(&c.vertices).map_err(err)?;
    let d = p.polar_dual().map_err(err)?;
    let got = sorted(d.vertices());
    ensure(got == sorted(&c.dual_vertices), || format!("polar dual vertices {got:?}"))?;
    ensure(d.is_reflexive(), || "polar dual is not reflexive".into())
}

fn polytope_volumes(c: &ExampleCase) -> Outcome {
    if c.volumes.is_empty() {
        return Outcome::Skip("no simplex volumes registered".into());
    }
    let run = || -> Result<(), String> {
        let a = c.point_config().map_err(err)?;
        for v in &c.volumes {
            let got = normalized_volume(&v.simplex, &a).map_err(err)?;
            ensure(got == BigInt::from(v.volume), || format!("simplex {:?} has volume {got}, registered {}", v.simplex, v.volume))?;
        }
        Ok(())
    };
    run().into()
}

fn triangulation_volumes(c: &ExampleCase) -> Result<(), String> {
    let a = c.point_config().map_err(err)?;
    let total = hull(a.points()).map_err(err)?.normalized_volume();
    for (t, e) in c.triangulations().iter().zip(&c.triangulations) {
        let mut s = BigInt::zero();
        for simplex in t.simplices() {
            s += normalized_volume(simplex, &a).map_err(err)?;
        }
        ensure(s == total, || format!("cone {}: volumes sum to {s}, hull has {total}", e.label))?;
    }
    Ok(())
}

// fan

fn fan_of(c: &ExampleCase) -> Result<SecondaryFan2, String> {
    let a = c.point_config().map_err(err)?;
    secondary_fan_with_basis(&a, &c.divisor_rows_big()).map_err(err)
}

/// Registered cone label of each cone of the computed fan.
fn fan_labels(c: &ExampleCase, fan: &SecondaryFan2) -> Result<Vec<usize>, String> {
    let published = c.triangulations();
    fan.triangulations
        .iter()
        .map(|t| published.iter().position(|p| p == t).ok_or_else(|| format!("unregistered triangulation {:?}", t.simplices())))
        .collect()
}

fn fan_triangulations(c: &ExampleCase) -> Result<(), String> {
    let a = c.point_config().map_err(err)?;
    let found = enumerate_regular_triangulations(&a).map_err(err)?;
    ensure(found.len() == 4, || format!("{} regular triangulations", found.len()))?;
    ensure(sorted(&found) == sorted(&c.triangulations()), || "enumerated triangulations differ from the registered lists".into())
}

fn fan_cones(c: &ExampleCase) -> Result<(), String> {
    let fan = fan_of(c)?;
    ensure(fan.cones.len() == 4, || format!("{} maximal cones", fan.cones.len()))?;
    ensure(fan.gkz_minimizers_agree(), || "GKZ vectors do not select their cones".into())
}

fn fan_order(c: &ExampleCase) -> Result<(), String> {
    let fan = fan_of(c)?;
    let labels = fan_labels(c, &fan)?;
    let start = labels.iter().position(|&l| l == 0).ok_or("cone I missing")?;
    let rotated: Vec<&str> = (0..labels.len()).map(|k| CONE_LABELS[labels[(start + k) % labels.len()]]).collect();
    ensure(rotated == CONE_LABELS, || format!("counterclockwise order {rotated:?}"))
}

fn fan_walls(c: &ExampleCase) -> Result<(), String> {
    let fan = fan_of(c)?;
    let labels = fan_labels(c, &fan)?;
    ensure(fan.adjacency.len() == 4, || format!("{} walls", fan.adjacency.len()))?;
    for adj in &fan.adjacency {
        let (l1, l2) = (labels[adj.cones.0], labels[adj.cones.1]);
        let k = if (l1 + 1) % 4 == l2 { l1 } else { l2 };
        let want = &c.adjacency_circuits[k];
        ensure(&adj.circuit.support == want, || {
            format!("wall {}-{}: circuit {:?}, registered {:?}", CONE_LABELS[l1], CONE_LABELS[l2], adj.circuit.support, want)
        })?;
    }
    Ok(())
}

fn fan_a0_circuit(c: &ExampleCase) -> Result<(), String> {
    let a = c.point_config().map_err(err)?;
    let cs = circuits(&a);
    let found = cs.iter().find(|x| x.support == [0, 3, 4]).ok_or("no circuit on {a0, a3, a4}")?;
    ensure(found.relation == ints(&[2, -1, -1]), || format!("relation {:?}", found.relation))?;
    ensure(c.adjacency_circuits.contains(&vec![0, 3, 4]), || "circuit is not registered as a wall".into())
}

// discriminant

fn disc_reduction(c: &ExampleCase) -> Result<(), String> {
    let g = c.gale().map_err(err)?;
    let reduced = reduce_discriminant(&c.discriminant().map_err(err)?, &g).map_err(err)?;
    let want = c.reduced_discriminant().map_err(err)?;
    ensure(reduced == want || reduced == want.neg(), || {
        format!("reduction gives {}", reduced.display_with(&["lambda", "mu"]))
    })
}

pub const HORN_SAMPLES: usize = 40;
pub const HORN_MIN_EVALUATED: usize = 25;

fn disc_horn(c: &ExampleCase, cfg: &SuiteConfig) -> Result<(), String> {
    let g = c.gale().map_err(err)?;
    let reduced = reduce_discriminant(&c.discriminant().map_err(err)?, &g).map_err(err)?;
    let rep = discriminant_vanishes_on_horn(&c.divisor_rows_big(), &reduced, &sample_points(cfg.seed, HORN_SAMPLES, 2));
    ensure(rep.evaluated() >= HORN_MIN_EVALUATED, || format!("only {} points evaluated", rep.evaluated()))?;
    ensure(rep.all_zero(), || format!("nonzero at {} of {} points", rep.nonzero(), rep.evaluated()))
}

fn disc_newton(c: &ExampleCase) -> Result<(), String> {
    let fan = fan_of(c)?;
    for n in newton_edge_normals(&c.reduced_discriminant().map_err(err)?) {
        ensure(fan.rays.iter().any(|r| same_direction(&n, r)), || format!("edge normal {n:?} is not a ray"))?;
    }
    Ok(())
}

// periods

fn third() -> (BigRat, BigRat, BigRat) {
    (rat(1, 3), rat(2, 3), rat(1, 1))
}

fn periods_f4_eta1(cfg: &SuiteConfig) -> Result<(), String> {
    let (a, b, one) = third();
    let d = cfg.max_deg.min(8);
    let f4 = appell_f4_coeffs(&a, &b, &one, &one, &rat(-27, 1), &rat(-27, 1), d);
    let eta = eta1_coeffs(d);
    for ((n, m), v) in eta.coeffs() {
        ensure(&f4.get(*n, *m) == v, || format!("coefficient ({n},{m}) differs"))?;
    }
    ensure(f4 == eta, || "series differ".into())
}

/// Grid of the factorization identity, shared with the acceptance suite.
pub fn tensor_grid() -> Vec<f64> {
    (0..5).map(|i| 0.01 + 0.035 * i as f64).collect()
}

fn periods_tensor(cfg: &SuiteConfig) -> Result<(), String> {
    let (a, b, one) = third();
    let c = |x: f64| Complex64::new(x, 0.0);
    let grid = tensor_grid();
    let mut worst = 0.0f64;
    for &x in &grid {
        for &y in &grid {
            let (lam, mu) = lambda_mu_from_xy(c(x), c(y));
            let lhs = appell_f4(&a, &b, &one, &one, lam * -27.0, mu * -27.0, 1e-15).map_err(err)?.value;
            let rhs = gauss_2f1(&a, &b, &one, c(x), 1e-15).map_err(err)?.value
                * gauss_2f1(&a, &b, &one, c(y), 1e-15).map_err(err)?.value;
            worst = worst.max((lhs - rhs).norm() / rhs.norm());
        }
    }
    ensure(worst < cfg.tol, || format!("relative defect {worst:e}"))
}

fn periods_ode_residual(cfg: &SuiteConfig) -> Result<(), String> {
    let (a, b, one) = third();
    for x in [0.1, 0.3, 0.6] {
        let ([u, du, ddu], _) = gauss_2f1_derivatives(&a, &b, &one, Complex64::new(x, 0.0), 1e-15, 2).map_err(err)?;
        let r = ddu * (x * (1.0 - x)) + du * (1.0 - 2.0 * x) - u * (2.0 / 9.0);
        ensure(r.norm() < cfg.tol * u.norm().max(1.0) * 10.0, || format!("residual {:e} at x = {x}", r.norm()))?;
    }
    Ok(())
}

fn periods_gkz_eta1(cfg: &SuiteConfig) -> Result<(), String> {
    let e = eta1_coeffs(cfg.max_deg + 1);
    let r = gkz_recurrence_check(&ifunction_rows(Case::A1), &e).map_err(err)?;
    ensure(r.passed(), || format!("{:?}", r.failure))?;
    for t in 0..=cfg.max_deg {
        for n in 0..=t {
            ensure(e.get(n, t - n) == e.get(t - n, n), || format!("asymmetric at ({n},{})", t - n))?;
        }
    }
    Ok(())
}

fn periods_ifunction_a1(cfg: &SuiteConfig) -> Result<(), String> {
    let i = ifunction_fg(&ifunction_rows(Case::A1), cfg.max_deg).map_err(err)?;
    ensure(i.f.sign_twist((3, 3)) == eta1_coeffs(cfg.max_deg), || "F is not the sign twist of eta1".into())
}

fn periods_ifunction_a0(cfg: &SuiteConfig) -> Result<(), String> {
    let i = ifunction_fg(&ifunction_rows(Case::A0), cfg.max_deg).map_err(err)?;
    let r = gkz_recurrence_check(&i.rows, &i.f.sign_twist((2, 1))).map_err(err)?;
    ensure(r.passed(), || format!("{:?}", r.failure))
}

fn periods_mirror_map(c: &ExampleCase, cfg: &SuiteConfig) -> Result<(), String> {
    let i = ifunction_fg(&ifunction_rows(c.case()), cfg.max_deg.min(6)).map_err(err)?;
    for p in 0..2 {
        ensure(i.mirror[p].get(0, 0).is_zero() && !i.mirror[p].is_zero(), || format!("mirror map {p} has wrong leading term"))?;
        ensure(i.mirror[p].mul(&i.f) == i.g[p], || format!("G{} != F * t{}", p + 1, p + 1))?;
    }
    Ok(())
}

fn periods_homogeneity() -> Result<(), String> {
    let k = wproj_homogeneity_check(&period_map_a0_homogeneous(), &[1, 2, 5], &[1, 3, 5]);
    ensure(k == Some(2), || format!("homogeneity degree {k:?}"))
}

fn periods_cusp() -> Result<(), String> {
    let cusp = WeightedPoint::new(vec![rat(1, 1), rat(0, 1), rat(0, 1)], vec![1, 3, 5]).map_err(err)?;
    for (n, d) in [(0, 1), (1, 2), (-3, 7), (5, 1)] {
        let p = period_map_a0(&rat(n, d), &rat(0, 1)).map_err(err)?;
        ensure(p.equivalent(&cusp), || format!("lambda = {n}/{d} maps to {:?}", p.coords))?;
    }
    Ok(())
}

fn periods_relation_degree() -> Result<(), String> {
    let r = hilbert_relation_degree_check(&ModularRingData::builtin());
    ensure(r.passed(), || format!("{r:?}"))
}

fn periods_branch(cfg: &SuiteConfig) -> Result<(), String> {
    let r = branch_relation_report(&sample_points(cfg.seed, 12, 2));
    ensure(r.evaluations.len() >= 6, || format!("only {} points evaluated", r.evaluations.len()))?;
    ensure(r.all_on_branch(), || "a discriminant point maps off Delta(1, B, C) = 0".into())
}

// monodromy

fn numgroth(c: &ExampleCase) -> Result<NumGroth, String> {
    build_numgroth(&c.pic_gram().map_err(err)?).map_err(err)
}

fn splitting(c: &ExampleCase, ng: &NumGroth) -> Result<Splitting, String> {
    match &c.published_f {
        Some(f) => hyperbolic_splitting_with(ng, f).map_err(err),
        None => hyperbolic_splitting(ng, 5).map_err(err),
    }
}

fn mono_numgroth(c: &ExampleCase) -> Result<(), String> {
    let ng = numgroth(c)?;
    let sig = ng.lattice.signature();
    ensure(sig == Signature::new(2, 2, 0), || format!("signature ({}, {})", sig.plus, sig.minus))?;
    ensure(ng.lattice.is_even(), || "numerical Grothendieck lattice is odd".into())?;
    let p = ng.point_class();
    ensure(ng.lattice.pair(&p, &p).is_zero(), || "point class is not isotropic".into())
}

fn mono_splitting(c: &ExampleCase) -> Result<(), String> {
    let ng = numgroth(c)?;
    let s = splitting(c, &ng)?;
    ensure(ng.lattice.pair(&s.e, &s.f) == int(1), || "(e, f) != 1".into())?;
    ensure(ng.lattice.pair(&s.f, &s.f).is_zero(), || "f is not isotropic".into())?;
    let n = s.n_gram(&ng);
    ensure(n == c.pic_gram().map_err(err)?, || format!("complement Gram {:?}", n.to_i64_rows()))
}

fn mono_dictionary(c: &ExampleCase) -> Result<(), String> {
    let ng = numgroth(c)?;
    let s = splitting(c, &ng)?;
    let l = s.u_perp_n(&ng);
    let e = ints(&[1, 0, 0, 0]);
    for d1 in -3..=3 {
        for d2 in -3..=3 {
            let t = tensor_action(&ng, (d1, d2)).map_err(err)?;
            let phi = l.transvection(&e, &ints(&[0, 0, d1, d2])).map_err(err)?;
            ensure(&s.to_u_perp_n(&t) == phi.matrix(), || format!("tensor by ({d1},{d2}) is not the transvection"))?;
        }
    }
    Ok(())
}

fn mono_nilpotency(c: &ExampleCase) -> Result<(), String> {
    let ng = numgroth(c)?;
    let (ds, want): (&[(i64, i64)], _) = match c.case() {
        Case::A0 => (&[(1, 0), (0, 1), (1, 1)], DegenerationType::III),
        Case::A1 => (&[(1, 0), (0, 1)], DegenerationType::II),
    };
    for &d in ds {
        let t = tensor_action(&ng, d).map_err(err)?;
        let n = monodromy_log(t.matrix()).map_err(err)?;
        let ty = degeneration_type(&n);
        ensure(ty == Some(want), || format!("log of T{d:?} has type {ty:?}"))?;
    }
    Ok(())
}

fn mono_fan(c: &ExampleCase) -> Result<(), String> {
    let gram = c.pic_gram().map_err(err)?;
    match c.case() {
        Case::A0 => {
            let (g1, g2) = n_a0_generators();
            let fan = orbit_fan(&gram, &[g1.clone(), g2], &[[1, 0], [0, 1]], 4).map_err(err)?;
            let k = fan.rays.len();
            let mut hits = 0;
            for i in 2..k.saturating_sub(2) {
                let w = g1.mul_vec(fan.rays[i].as_ref()).map_err(err)?;
                if let Some(j) = fan.position(&[w[0].clone(), w[1].clone()]) {
                    ensure(j.abs_diff(i) == 2, || format!("g1 moves ray {i} to {j}"))?;
                    hits += 1;
                }
            }
            ensure(hits + 6 >= k, || format!("g1 shift seen on {hits} of {k} rays"))?;
            ensure(fan.relations.iter().all(|r| r.0 == int(1) && r.1 == int(1)), || "non-unimodular neighbours".into())?;
            for w in fan.relations.windows(2) {
                let mut pair = [w[0].2.clone(), w[1].2.clone()];
                pair.sort();
                ensure(pair == [int(1), int(5)], || format!("relation pattern {pair:?}"))?;
            }
            Ok(())
        }
        Case::A1 => {
            let swap = IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
            let fan = orbit_fan(&gram, &[swap], &[[1, 0], [1, 1], [0, 1]], 4).map_err(err)?;
            let want = vec![[int(1), int(0)], [int(1), int(1)], [int(0), int(1)]];
            ensure(fan.rays == want, || format!("rays {:?}", fan.rays))
        }
    }
}

// lattice

fn lattice_dolgachev(c: &ExampleCase) -> Result<(), String> {
    let rep = check_dolgachev(&c.dolgachev_input().map_err(err)?);
    let failed: Vec<String> = rep.checks.iter().filter(|s| !s.passed).map(|s| format!("{} ({})", s.name, s.detail)).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    let s = rep.equivalence.ok_or("no explicit equivalence")?;
    ensure(s.is_unimodular(), || "equivalence is not unimodular".into())
}

// modular

fn modular_hilbert() -> Result<(), String> {
    ensure(hilbert_w_identity(), || "W U W^T != (2 1 / 1 -2)".into())
}

fn modular_pairing() -> Result<(), String> {
    let u_u = IntMat::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let u_u3 = IntMat::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, 3, 0]]);
    ensure(gram_of(&r_basis()) == u_u, || "M2(Z) is not U + U".into())?;
    ensure(gram_of(&sublattice_l_basis()) == u_u3, || "L is not U + U(3)".into())?;
    let id = Mat2Z::identity();
    for g in gamma0_3_generators() {
        ensure(g.is_gamma0_3(), || "generator is not in Gamma0(3)".into())?;
        l_isometry(|v| pair_action(&g, &id, v)).map_err(err)?;
        l_isometry(|v| pair_action(&id, &g, v)).map_err(err)?;
    }
    l_isometry(sigma_action).map_err(err)?;
    let rho = l_isometry(|v| Ok(rho_action(v))).map_err(err)?;
    ensure(rho.matrix().congruence(lattice_l().gram()).map_err(err)? == *lattice_l().gram(), || "rho".into())
}

fn modular_ode(cfg: &SuiteConfig) -> Result<(), String> {
    let r = loop_monodromy_traces(cfg.ode_tol).map_err(err)?;
    ensure(r.passed(), || format!("traces {:?}, expected {:?}, defects {:?}", r.abs_traces, r.expected, r.product_defects))?;
    let [_, _, mi] = r.loops.mobius();
    let d = mi.compose(&mi).compose(&mi).distance_to_identity();
    ensure(d < cfg.ode_tol, || format!("infinity loop cubed is {d:e} from the identity"))
}

fn modular_contractible(cfg: &SuiteConfig) -> Result<(), String> {
    let c = |re, im| Complex64::new(re, im);
    let l = LoopPath::around(c(0.5, 0.0), c(0.5, 0.3), 0.15);
    let m = ode_transport(&l.path(), 1e-12).map_err(err)?;
    let d = mat2_distance(&m, &[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
    ensure(d < cfg.tol, || format!("contractible loop is {d:e} from the identity"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_parse() {
        assert_eq!("all".parse::<SuiteFilter>(), Ok(SuiteFilter::All));
        assert_eq!("fan".parse::<SuiteFilter>(), Ok(SuiteFilter::Only(Group::Fan)));
        assert!("bogus".parse::<SuiteFilter>().is_err());
    }

    #[test]
    fn ids_are_unique() {
        let ids = check_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        assert!(ids.contains(&"A0.fan.four_maximal_cones".to_string()));
    }

    #[test]
    fn fan_suite_passes_on_builtin_registry() {
        let cfg = SuiteConfig { filter: SuiteFilter::Only(Group::Fan), ..SuiteConfig::default() };
        let r = run_suite(&Registry::builtin(), &cfg);
        assert!(!r.any_failed(), "{}", r.to_text());
        assert!(r.checks.iter().all(|c| c.check_id.contains(".fan.")));
    }

    #[test]
    fn case_filter_restricts() {
        let cfg = SuiteConfig { filter: SuiteFilter::Only(Group::Polytope), case: Some(Case::A1), ..SuiteConfig::default() };
        let r = run_suite(&Registry::builtin(), &cfg);
        assert!(r.checks.iter().all(|c| c.check_id.starts_with("A1.")));
        assert_eq!(r.count(crate::report::Status::Skip), 1);
    }
}
