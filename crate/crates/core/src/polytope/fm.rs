//! Fourier–Motzkin elimination for systems `a·x ≥ b` over Q.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exactcore::BigRat;

/// One inequality `coeffs · x ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ineq {
    pub coeffs: Vec<BigRat>,
    pub rhs: BigRat,
}

fn normalize(mut q: Ineq) -> Ineq {
    // scale so the first nonzero coefficient has absolute value 1
    if let Some(p) = q.coeffs.iter().find(|c| !c.is_zero()).cloned() {
        let s = p.abs();
        for c in q.coeffs.iter_mut() {
            *c = &*c / &s;
        }
        q.rhs = &q.rhs / &s;
    }
    q
}

fn eliminate(system: &[Ineq], k: usize) -> Vec<Ineq> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for q in system {
        let a = &q.coeffs[k];
        if a.is_positive() {
            pos.push(q);
        } else if a.is_negative() {
            neg.push(q);
        } else {
            out.push(q.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let (ap, an) = (p.coeffs[k].clone(), -n.coeffs[k].clone());
            let coeffs: Vec<BigRat> =
                p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x / &ap + y / &an).collect();
            let rhs = &p.rhs / &ap + &n.rhs / &an;
            out.push(Ineq { coeffs, rhs });
        }
    }
    let mut dedup: Vec<Ineq> = Vec::new();
    for q in out.into_iter().map(normalize) {
        if q.coeffs.iter().all(Zero::is_zero) && !q.rhs.is_positive() {
            continue;
        }
        // drop constraints implied by a parallel one
        if let Some(prev) = dedup.iter_mut().find(|d| d.coeffs == q.coeffs) {
            if q.rhs > prev.rhs {
                prev.rhs = q.rhs;
            }
            continue;
        }
        dedup.push(q);
    }
    dedup
}

/// A point satisfying every inequality, or `None` if the system is infeasible.
pub fn feasible_point(system: &[Ineq], dim: usize) -> Option<Vec<BigRat>> {
    let mut stages: Vec<Vec<Ineq>> = vec![system.to_vec()];
    for k in (0..dim).rev() {
        let next = eliminate(stages.last().unwrap(), k);
        stages.push(next);
    }
    if stages.last().unwrap().iter().any(|q| q.rhs.is_positive()) {
        return None;
    }
    let mut x = vec![BigRat::zero(); dim];
    for k in 0..dim {
        // stage dim-k constrains x_0..x_k
        let sys = &stages[dim - 1 - k];
        let (mut lo, mut hi): (Option<BigRat>, Option<BigRat>) = (None, None);
        for q in sys {
            let a = &q.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest: BigRat = (0..k).map(|j| &q.coeffs[j] * &x[j]).sum();
            let bound = (&q.rhs - rest) / a;
            if a.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        x[k] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / BigRat::from_integer(2.into()),
            (Some(l), None) => l + BigRat::one(),
            (None, Some(h)) => h - BigRat::one(),
            (None, None) => BigRat::zero(),
        };
    }
    debug_assert!(system.iter().all(|q| {
        let lhs: BigRat = q.coeffs.iter().zip(&x).map(|(a, b)| a * b).sum();
        lhs >= q.rhs
    }));
    Some(x)
}

/// Whether `y_k · x > 0` has a solution for every `y_k` in `rows`.
pub fn strict_cone_point(rows: &[Vec<BigRat>], dim: usize) -> Option<Vec<BigRat>> {
    let system: Vec<Ineq> =
        rows.iter().map(|r| Ineq { coeffs: r.clone(), rhs: BigRat::one() }).collect();
    feasible_point(&system, dim)
}
