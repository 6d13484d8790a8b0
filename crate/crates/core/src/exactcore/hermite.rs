//! Unimodular row reduction: echelon forms, Hermite normal form, kernels.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMat;

/// Result of `Q · A = E` with `Q` unimodular and `E` in row echelon form.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub echelon: IntMat,
    pub transform: IntMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn row_combine(m: &mut IntMat, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let v = m.get(target, j) - factor * m.get(source, j);
        m.set(target, j, v);
    }
}

fn row_negate(m: &mut IntMat, r: usize) {
    for j in 0..m.cols() {
        let v = -m.get(r, j).clone();
        m.set(r, j, v);
    }
}

/// Row echelon form of `a` by unimodular row operations, tracking the
/// transform. Pivots are positive and entries above pivots are reduced into
/// `[0, pivot)`, so the nonzero rows are the Hermite normal form of the row
/// lattice.
pub fn row_echelon(a: &IntMat) -> ColumnEchelon {
    let mut e = a.clone();
    let mut q = IntMat::identity(a.rows());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..e.cols() {
        if r == e.rows() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let nonzero: Vec<usize> = (r..e.rows()).filter(|&i| !e.get(i, c).is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| e.get(i, c).abs()).unwrap();
            e.swap_rows(p, r);
            q.swap_rows(p, r);
            let mut done = true;
            for i in r + 1..e.rows() {
                if e.get(i, c).is_zero() {
                    continue;
                }
                let f = e.get(i, c).div_floor(e.get(r, c));
                row_combine(&mut e, i, r, &f);
                row_combine(&mut q, i, r, &f);
                if !e.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if e.get(r, c).is_zero() {
            continue;
        }
        if e.get(r, c).is_negative() {
            row_negate(&mut e, r);
            row_negate(&mut q, r);
        }
        for i in 0..r {
            let f = e.get(i, c).div_floor(e.get(r, c));
            row_combine(&mut e, i, r, &f);
            row_combine(&mut q, i, r, &f);
        }
        pivots.push(c);
        r += 1;
    }
    ColumnEchelon { echelon: e, transform: q, rank: r, pivots }
}

/// Column echelon form: `A · V = H` with `V` unimodular. Returned in the
/// transposed convention of [`row_echelon`] applied to `Aᵀ`.
pub fn column_echelon(a: &IntMat) -> ColumnEchelon {
    row_echelon(&a.transpose())
}

/// Hermite normal form of the lattice spanned by `rows`, zero rows dropped.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = IntMat::from_rows(rows).expect("rows of equal length");
    let ech = row_echelon(&m);
    (0..ech.rank).map(|i| ech.echelon.row(i).to_vec()).collect()
}

/// Z-basis of `{x : M x = 0}` in Hermite normal form (first nonzero entry of
/// each row positive). The basis spans a saturated sublattice.
pub fn integer_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    let ech = column_echelon(m);
    let n = m.cols();
    let basis: Vec<Vec<BigInt>> = (ech.rank..n).map(|i| ech.transform.row(i).to_vec()).collect();
    hermite_rows(&basis)
}

/// Saturation `(span_Q(rows)) ∩ Zⁿ`, in Hermite normal form.
pub fn saturate_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = IntMat::from_rows(rows).expect("rows of equal length");
    let perp = integer_kernel(&m);
    if perp.is_empty() {
        return hermite_rows(&(0..m.cols())
            .map(|i| {
                let mut v = alloc::vec![BigInt::zero(); m.cols()];
                v[i] = BigInt::from(1);
                v
            })
            .collect::<Vec<_>>());
    }
    integer_kernel(&IntMat::from_rows(&perp).unwrap())
}

/// Whether `rows_a` and `rows_b` span the same lattice.
pub fn same_lattice(rows_a: &[Vec<BigInt>], rows_b: &[Vec<BigInt>]) -> bool {
    hermite_rows(rows_a) == hermite_rows(rows_b)
}
