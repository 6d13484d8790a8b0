use num_traits::{Signed, Zero};

use super::{BigRat, ExactError, IntMat, RatMat};

/// Inertia of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Signature { plus, minus, zero }
    }

    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }

    pub fn add(&self, other: &Signature) -> Signature {
        Signature::new(self.plus + other.plus, self.minus + other.minus, self.zero + other.zero)
    }
}

/// Sylvester inertia by exact symmetric Gaussian reduction over Q.
///
/// A zero diagonal with a nonzero off-diagonal entry `g[i][j]` is handled by
/// the congruence `x_i -> x_i + x_j`, which puts `2 g[i][j]` on the diagonal.
pub fn signature_of_form(g: &IntMat) -> Result<Signature, ExactError> {
    if !g.is_symmetric() {
        return Err(ExactError::NotSymmetric);
    }
    let mut a: RatMat = g.to_rat();
    let n = a.rows();
    let (mut plus, mut minus) = (0, 0);
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a.get(i, i).is_zero()) {
            a.swap_rows(p, k);
            a.swap_cols(p, k);
        } else {
            let pair = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_zero());
            let Some((i, j)) = pair else { break };
            // row/col i += row/col j
            for c in 0..n {
                let v = a.get(i, c) + a.get(j, c);
                a.set(i, c, v);
            }
            for r in 0..n {
                let v = a.get(r, i) + a.get(r, j);
                a.set(r, i, v);
            }
            a.swap_rows(i, k);
            a.swap_cols(i, k);
        }
        let piv: BigRat = a.get(k, k).clone();
        if piv.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        for i in k + 1..n {
            if a.get(i, k).is_zero() {
                continue;
            }
            let f = a.get(i, k) / &piv;
            for c in k..n {
                let v = a.get(i, c) - &(&f * a.get(k, c));
                a.set(i, c, v);
            }
            for r in k..n {
                let v = a.get(r, i) - &(&f * a.get(r, k));
                a.set(r, i, v);
            }
        }
        k += 1;
    }
    Ok(Signature::new(plus, minus, n - plus - minus))
}
