//! Numerical Grothendieck lattices of the mirror K3 surfaces, monodromy by
//! tensoring with line bundles, monodromy logarithms and the cusp fans.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactcore::{gcd_all, int, rat, BigRat, IntMat, RatMat};
use crate::lattice::{Isometry, Lattice, LatticeError};
use crate::Case;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonodromyError {
    #[error("Picard Gram matrix must be 2x2, symmetric, with even diagonal")]
    BadPicard,
    #[error("no hyperbolic partner found with coefficients bounded by {0}")]
    NoSplitting(i64),
    #[error("supplied f does not span a hyperbolic plane with e")]
    BadSplitting,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("generator is not an isometry of N")]
    NotIsometry,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `N(Y) = Z[O] ⊕ Pic(Y) ⊕ Z[O_p]` on the basis `([O], [O_E1], [O_E2], [O_p])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumGroth {
    pub lattice: Lattice,
    pub pic_gram: IntMat,
    /// `(χ(O_E1), χ(O_E2))`.
    pub chi: (BigInt, BigInt),
}

pub fn pic_gram(case: Case) -> IntMat {
    match case {
        Case::A0 => IntMat::from_i64_rows(&[&[10, 5], &[5, 2]]),
        Case::A1 => IntMat::from_i64_rows(&[&[0, 3], &[3, 0]]),
    }
}

/// `χ(O_E) = 1 − g = −E²/2` and the pairing table
/// `(O,O) = −2`, `(O,O_D) = −χ(O_D)`, `(O,O_p) = −1`, `(O_D,O_E) = D·E`, `(O_D,O_p) = 0`.
pub fn build_numgroth(pic: &IntMat) -> Result<NumGroth, MonodromyError> {
    if pic.rows() != 2 || pic.cols() != 2 || !pic.is_symmetric() || (0..2).any(|i| pic.get(i, i).is_odd()) {
        return Err(MonodromyError::BadPicard);
    }
    let chi: Vec<BigInt> = (0..2).map(|i| -(pic.get(i, i) / BigInt::from(2))).collect();
    let mut g = IntMat::zeros(4, 4);
    g.set(0, 0, int(-2));
    g.set(0, 3, int(-1));
    g.set(3, 0, int(-1));
    for i in 0..2 {
        g.set(0, i + 1, -&chi[i]);
        g.set(i + 1, 0, -&chi[i]);
        for j in 0..2 {
            g.set(i + 1, j + 1, pic.get(i, j).clone());
        }
    }
    let lattice = Lattice::new("N(Y)", g)?;
    Ok(NumGroth { lattice, pic_gram: pic.clone(), chi: (chi[0].clone(), chi[1].clone()) })
}

impl NumGroth {
    pub fn builtin(case: Case) -> Self {
        build_numgroth(&pic_gram(case)).expect("even Picard lattice")
    }

    pub fn gram(&self) -> &IntMat {
        self.lattice.gram()
    }

    /// `e = [O_p]`.
    pub fn point_class(&self) -> Vec<BigInt> {
        vec![int(0), int(0), int(0), int(1)]
    }

    /// `[O_D]` for `D = d₁E₁ + d₂E₂`, as the linear part `d₁[O_E1] + d₂[O_E2]`.
    pub fn divisor_class(&self, d: (i64, i64)) -> Vec<BigInt> {
        vec![int(0), int(d.0), int(d.1), int(0)]
    }
}

/// `(−) ⊗ O(−D)` for `D = d₁E₁ + d₂E₂`:
/// `[O] ↦ [O] − d₁[O_E1] − d₂[O_E2] + ε[O_p]`, `[O_E] ↦ [O_E] − (D·E)[O_p]`,
/// `[O_p] ↦ [O_p]`, with `ε = D·D/2 − (D, [O])`.
pub fn tensor_action(ng: &NumGroth, d: (i64, i64)) -> Result<Isometry, MonodromyError> {
    let dv = [int(d.0), int(d.1)];
    let pic = &ng.pic_gram;
    let de: Vec<BigInt> = (0..2).map(|i| &dv[0] * pic.get(0, i) + &dv[1] * pic.get(i, 1)).collect();
    let dd = &dv[0] * &de[0] + &dv[1] * &de[1];
    let d_o = -(&dv[0] * &ng.chi.0 + &dv[1] * &ng.chi.1);
    let eps = dd / 2 - d_o;
    let mut m = IntMat::identity(4);
    m.set(1, 0, -&dv[0]);
    m.set(2, 0, -&dv[1]);
    m.set(3, 0, eps);
    m.set(3, 1, -&de[0]);
    m.set(3, 2, -&de[1]);
    Ok(Isometry::new(&ng.lattice, m)?)
}

/// A hyperbolic plane `⟨e, f⟩` in `N(Y)` and the projection of
/// `[O_E1], [O_E2]` to its orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub e: Vec<BigInt>,
    pub f: Vec<BigInt>,
    pub n_basis: [Vec<BigInt>; 2],
}

impl Splitting {
    /// Columns `e, f, e₁, e₂`.
    pub fn basis_change(&self) -> IntMat {
        IntMat::from_cols(&[self.e.clone(), self.f.clone(), self.n_basis[0].clone(), self.n_basis[1].clone()])
            .expect("four columns")
    }

    /// Gram matrix of `n_basis`.
    pub fn n_gram(&self, ng: &NumGroth) -> IntMat {
        let l = &ng.lattice;
        let p = |i: usize, j: usize| l.pair(&self.n_basis[i], &self.n_basis[j]);
        IntMat::from_rows(&[vec![p(0, 0), p(0, 1)], vec![p(1, 0), p(1, 1)]]).expect("2x2")
    }

    /// The target lattice `U ⊥ N`.
    pub fn u_perp_n(&self, ng: &NumGroth) -> Lattice {
        Lattice::u().direct_sum(&Lattice::new("N", self.n_gram(ng)).expect("symmetric"))
    }

    /// Matrix of `t` in the basis `e, f, e₁, e₂`.
    pub fn to_u_perp_n(&self, t: &Isometry) -> IntMat {
        let p = self.basis_change();
        let pinv = p.inverse_unimodular().expect("unimodular change of basis");
        pinv.mul_mat(t.matrix()).and_then(|x| x.mul_mat(&p)).expect("shape")
    }
}

/// Completes `e = [O_p]` with a given `f`.
pub fn hyperbolic_splitting_with(ng: &NumGroth, f: &[i64]) -> Result<Splitting, MonodromyError> {
    let l = &ng.lattice;
    let e = ng.point_class();
    let f: Vec<BigInt> = f.iter().map(|&x| int(x)).collect();
    if f.len() != 4 || !l.pair(&f, &f).is_zero() || !l.pair(&e, &f).is_one() {
        return Err(MonodromyError::BadSplitting);
    }
    let project = |x: Vec<BigInt>| -> Vec<BigInt> {
        let (xf, xe) = (l.pair(&x, &f), l.pair(&x, &e));
        (0..4).map(|i| &x[i] - &xf * &e[i] - &xe * &f[i]).collect()
    };
    let n_basis = [project(ng.divisor_class((1, 0))), project(ng.divisor_class((0, 1)))];
    let s = Splitting { e, f, n_basis };
    if s.basis_change().inverse_unimodular().is_err() {
        return Err(MonodromyError::BadSplitting);
    }
    Ok(s)
}

/// Searches `f` with `|f_i| ≤ bound`, by increasing max-norm and then
/// lexicographically.
pub fn hyperbolic_splitting(ng: &NumGroth, bound: i64) -> Result<Splitting, MonodromyError> {
    for r in 0..=bound {
        let range: Vec<i64> = (-r..=r).collect();
        for &a in &range {
            for &b in &range {
                for &c in &range {
                    for &d in &range {
                        let f = [a, b, c, d];
                        if f.iter().map(|x| x.abs()).max() != Some(r) {
                            continue;
                        }
                        if let Ok(s) = hyperbolic_splitting_with(ng, &f) {
                            return Ok(s);
                        }
                    }
                }
            }
        }
    }
    Err(MonodromyError::NoSplitting(bound))
}

/// `f = −[O] − [O_E1] + 3[O_E2]` for A0.
pub fn published_f(case: Case) -> Option<[i64; 4]> {
    match case {
        Case::A0 => Some([-1, -1, 3, 0]),
        Case::A1 => None,
    }
}

/// Exponent matrix of `(q₁, q₂)` in `(λ, μ)`: row `i` is the exponent of `q_i`.
pub fn coordinate_change_q(case: Case) -> IntMat {
    match case {
        Case::A0 => IntMat::from_i64_rows(&[&[1, 0], &[-2, 1]]),
        Case::A1 => IntMat::from_i64_rows(&[&[1, 0], &[-1, 1]]),
    }
}

/// Divisors `D` with `T = (−) ⊗ O(−D)` the monodromy around `q₁` and `q₂`.
pub fn large_radius_monodromies(case: Case) -> [(i64, i64); 2] {
    match case {
        Case::A0 => [(1, 0), (0, 1)],
        Case::A1 => [(1, 1), (0, 1)],
    }
}

fn nilpotent_power_zero(n: &RatMat) -> Option<usize> {
    let dim = n.rows();
    let mut p = RatMat::identity(dim);
    for k in 0..=dim {
        if p.is_zero() {
            return Some(k);
        }
        p = p.mul_mat(n).expect("square");
    }
    None
}

/// Smallest `k` with `N^k = 0`, if `N` is nilpotent.
pub fn nilpotency_index(n: &RatMat) -> Option<usize> {
    nilpotent_power_zero(n)
}

/// `log T = Σ_{k≥1} (−1)^{k+1} (T − 1)^k / k` for unipotent `T`.
pub fn monodromy_log(t: &IntMat) -> Result<RatMat, MonodromyError> {
    let dim = t.rows();
    if t.cols() != dim {
        return Err(MonodromyError::NotUnipotent);
    }
    let n = t.to_rat().sub_mat(&RatMat::identity(dim)).expect("square");
    let idx = nilpotent_power_zero(&n).ok_or(MonodromyError::NotUnipotent)?;
    let mut acc = RatMat::zeros(dim, dim);
    let mut p = n.clone();
    for k in 1..idx {
        let c = if k % 2 == 1 { rat(1, k as i64) } else { rat(-1, k as i64) };
        acc = acc.add_mat(&p.scale(&c)).expect("square");
        p = p.mul_mat(&n).expect("square");
    }
    Ok(acc)
}

/// `exp N` for nilpotent `N`.
pub fn exp_nilpotent(n: &RatMat) -> Option<RatMat> {
    let idx = nilpotent_power_zero(n)?;
    let dim = n.rows();
    let mut acc = RatMat::identity(dim);
    let mut p = RatMat::identity(dim);
    let mut fact = BigRat::one();
    for k in 1..idx {
        p = p.mul_mat(n).expect("square");
        fact *= BigRat::from_integer(k.into());
        acc = acc.add_mat(&p.scale(&fact.recip())).expect("square");
    }
    Some(acc)
}

/// Type of a degeneration from the nilpotency index of its monodromy logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegenerationType {
    I,
    II,
    III,
}

pub fn degeneration_type(log: &RatMat) -> Option<DegenerationType> {
    match nilpotency_index(log)? {
        0 | 1 => Some(DegenerationType::I),
        2 => Some(DegenerationType::II),
        3 => Some(DegenerationType::III),
        _ => None,
    }
}

/// A complete or partial 2-dimensional fan given by its rays in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspFan {
    pub rays: Vec<[BigInt; 2]>,
    /// For each interior ray `v_i` (`0 < i < len−1`), the primitive triple
    /// `(a, b, c)` with `a·v_{i−1} + b·v_{i+1} = c·v_i` and `a > 0`.
    pub relations: Vec<(BigInt, BigInt, BigInt)>,
}

impl CuspFan {
    pub fn position(&self, v: &[BigInt; 2]) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }
}

fn cross(a: &[BigInt; 2], b: &[BigInt; 2]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn half(v: &[BigInt; 2]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) { 0 } else { 1 }
}

/// Counterclockwise order starting from the positive x-axis.
fn angle_cmp(a: &[BigInt; 2], b: &[BigInt; 2]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| cross(b, a).cmp(&BigInt::zero()))
}

fn primitive2(v: [BigInt; 2]) -> Option<[BigInt; 2]> {
    let g = gcd_all(&v);
    if g.is_zero() {
        return None;
    }
    Some([&v[0] / &g, &v[1] / &g])
}

/// Images of `seeds` under words of length `≤ word_len` in `gens` and their
/// inverses, as primitive rays sorted counterclockwise. When the rays lie in
/// an open half-plane the order starts after the widest gap.
pub fn orbit_fan(n_gram: &IntMat, gens: &[IntMat], seeds: &[[i64; 2]], word_len: usize) -> Result<CuspFan, MonodromyError> {
    let n = Lattice::new("N", n_gram.clone())?;
    let mut all = Vec::new();
    for g in gens {
        let iso = Isometry::new(&n, g.clone()).map_err(|_| MonodromyError::NotIsometry)?;
        all.push(iso.matrix().clone());
        all.push(iso.inverse().matrix().clone());
    }
    let mut seen: BTreeSet<[BigInt; 2]> = BTreeSet::new();
    let mut frontier: Vec<[BigInt; 2]> = Vec::new();
    for s in seeds {
        if let Some(p) = primitive2([int(s[0]), int(s[1])]) {
            if seen.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    for _ in 0..word_len {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &all {
                let w = g.mul_vec(v.as_ref()).expect("2x2");
                let p = primitive2([w[0].clone(), w[1].clone()]).expect("isometry is injective");
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    let mut rays: Vec<[BigInt; 2]> = seen.into_iter().collect();
    rays.sort_by(angle_cmp);
    // rotate so that the sequence does not wrap across a gap of angle ≥ π
    if rays.len() > 1 {
        let k = rays.len();
        if let Some(start) = (0..k).find(|&i| !cross(&rays[(i + k - 1) % k], &rays[i]).is_positive()) {
            rays.rotate_left(start);
        }
    }
    let relations = (1..rays.len().saturating_sub(1))
        .map(|i| fan_relation(&rays[i - 1], &rays[i], &rays[i + 1]))
        .collect();
    Ok(CuspFan { rays, relations })
}

/// Primitive `(a, b, c)` with `a·p + b·q = c·v`, `a > 0`.
fn fan_relation(p: &[BigInt; 2], v: &[BigInt; 2], q: &[BigInt; 2]) -> (BigInt, BigInt, BigInt) {
    let a = cross(v, q);
    let b = cross(p, v);
    let c = cross(p, q);
    let g = gcd_all(&[a.clone(), b.clone(), c.clone()]);
    let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
    if a.is_negative() {
        a = -a;
        b = -b;
        c = -c;
    }
    (a, b, c)
}

/// Orbit fan with the published generators and seeds of each case.
pub fn cusp_fan(case: Case, word_len: usize) -> CuspFan {
    match case {
        Case::A0 => {
            let (g1, g2) = crate::lattice::n_a0_generators();
            orbit_fan(&pic_gram(case), &[g1, g2], &[[1, 0], [0, 1]], word_len).expect("isometries")
        }
        Case::A1 => {
            let swap = IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
            orbit_fan(&pic_gram(case), &[swap], &[[1, 0], [1, 1], [0, 1]], word_len).expect("isometry")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numgroth_grams() {
        let a0 = NumGroth::builtin(Case::A0);
        assert_eq!(*a0.gram(), IntMat::from_i64_rows(&[&[-2, 5, 1, -1], &[5, 10, 5, 0], &[1, 5, 2, 0], &[-1, 0, 0, 0]]));
        assert_eq!(a0.chi, (int(-5), int(-1)));
        let a1 = NumGroth::builtin(Case::A1);
        assert_eq!(*a1.gram(), IntMat::from_i64_rows(&[&[-2, 0, 0, -1], &[0, 0, 3, 0], &[0, 3, 0, 0], &[-1, 0, 0, 0]]));
        for ng in [a0, a1] {
            assert_eq!(ng.lattice.signature(), crate::Signature::new(2, 2, 0));
        }
        assert_eq!(build_numgroth(&IntMat::from_i64_rows(&[&[1, 0], &[0, 2]])), Err(MonodromyError::BadPicard));
    }

    #[test]
    fn identity_action() {
        let ng = NumGroth::builtin(Case::A0);
        assert!(tensor_action(&ng, (0, 0)).unwrap().matrix().is_identity());
    }

    #[test]
    fn log_of_identity_and_non_unipotent() {
        assert!(monodromy_log(&IntMat::identity(4)).unwrap().is_zero());
        let m = IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(monodromy_log(&m), Err(MonodromyError::NotUnipotent));
    }

    #[test]
    fn relation_of_smooth_fan() {
        let v = |a: i64, b: i64| [int(a), int(b)];
        assert_eq!(fan_relation(&v(1, 0), &v(1, 1), &v(0, 1)), (int(1), int(1), int(1)));
        assert_eq!(fan_relation(&v(1, 0), &v(0, 1), &v(-1, 0)), (int(1), int(1), int(0)));
    }

    #[test]
    fn angle_order() {
        let mut v = vec![[int(0), int(-1)], [int(-1), int(0)], [int(0), int(1)], [int(1), int(0)], [int(1), int(1)]];
        v.sort_by(angle_cmp);
        assert_eq!(v, vec![[int(1), int(0)], [int(1), int(1)], [int(0), int(1)], [int(-1), int(0)], [int(0), int(-1)]]);
    }
}
