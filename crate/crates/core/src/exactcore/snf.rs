use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMat;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Snf {
    pub fn diagonal(&self) -> alloc::vec::Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }
}

fn add_row(m: &mut IntMat, target: usize, source: usize, f: &BigInt) {
    for j in 0..m.cols() {
        let v = m.get(target, j) + f * m.get(source, j);
        m.set(target, j, v);
    }
}

fn add_col(m: &mut IntMat, target: usize, source: usize, f: &BigInt) {
    for i in 0..m.rows() {
        let v = m.get(i, target) + f * m.get(i, source);
        m.set(i, target, v);
    }
}

fn negate_row(m: &mut IntMat, r: usize) {
    for j in 0..m.cols() {
        let v = -m.get(r, j).clone();
        m.set(r, j, v);
    }
}

/// Smith normal form by pivot-and-clear elimination with full-size integers.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                add_row(&mut d, i, t, &q);
                add_row(&mut u, i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                add_col(&mut d, j, t, &q);
                add_col(&mut v, j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pivot must divide the whole trailing block
            let piv = d.get(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(&piv));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    add_row(&mut d, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    finish(u, d, v)
}

fn finish(mut u: IntMat, mut d: IntMat, v: IntMat) -> Snf {
    for t in 0..d.rows().min(d.cols()) {
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    Snf { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::ints;
    use proptest::prelude::*;

    fn check(m: &IntMat) -> Snf {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul_mat(m).unwrap().mul_mat(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn identity_is_its_own_form() {
        let s = check(&IntMat::identity(2));
        assert!(s.d.is_identity());
    }

    #[test]
    fn hyperbolic_three() {
        let s = check(&IntMat::from_i64_rows(&[&[0, 3], &[3, 0]]));
        assert_eq!(s.diagonal(), ints(&[3, 3]));
    }

    #[test]
    fn binary_form_of_discriminant_minus_five() {
        let s = check(&IntMat::from_i64_rows(&[&[2, 1], &[1, -2]]));
        assert_eq!(s.diagonal(), ints(&[1, 5]));
    }

    #[test]
    fn rectangular_input() {
        let s = check(&IntMat::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12]]));
        assert_eq!(s.diagonal(), ints(&[2, 6]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn random_four_by_four(entries in proptest::collection::vec(-9i64..=9, 16)) {
            let m = IntMat::from_i64(4, 4, &entries);
            let s = check(&m);
            let prod: BigInt = s.diagonal().iter().product();
            prop_assert_eq!(prod.abs(), m.det().unwrap().abs());
        }
    }
}
