//! Built-in data of the two families, in the published bases.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactcore::ints;
use crate::galedisc::LaurentPoly;
use crate::polytope::{PointConfig, Triangulation};
use crate::Case;

/// Columns of the vertex matrix `β`.
pub fn polytope_vertices(case: Case) -> Vec<Vec<i64>> {
    match case {
        Case::A0 => vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, -1], vec![-1, -1, -2]],
        Case::A1 => vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, 0, -1], vec![0, -1, -1]],
    }
}

/// `A = {a_0 = 0, a_1, …, a_5}`.
pub fn point_config(case: Case) -> PointConfig {
    let mut pts = vec![vec![0, 0, 0]];
    pts.extend(polytope_vertices(case));
    PointConfig::new(3, pts).expect("distinct points")
}

/// Rows of the map `Z^A → L^∨` in the divisor sequence.
pub fn gale_rows(case: Case) -> Vec<Vec<BigInt>> {
    match case {
        Case::A0 => vec![ints(&[-2, 0, 0, 1, 1, 0]), ints(&[-5, 1, 1, 2, 0, 1])],
        Case::A1 => vec![ints(&[-3, 1, 0, 1, 1, 0]), ints(&[-3, 0, 1, 1, 0, 1])],
    }
}

/// Vertices of the polar dual polytope.
pub fn dual_vertices(case: Case) -> Vec<Vec<i64>> {
    match case {
        Case::A0 => vec![
            vec![0, -1, 1],
            vec![4, -1, -1],
            vec![-1, -1, -1],
            vec![-1, -1, 1],
            vec![-1, 4, -1],
            vec![-1, 0, 1],
        ],
        Case::A1 => vec![vec![2, 2, -1], vec![2, -1, -1], vec![-1, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
    }
}

pub const CONE_LABELS: [&str; 4] = ["I", "II", "III", "IV"];

fn tri(simplices: &[[usize; 4]]) -> Triangulation {
    Triangulation::new(simplices.iter().map(|s| s.to_vec()).collect())
}

/// Triangulations of the maximal cones I, II, III, IV.
pub fn cone_triangulations(case: Case) -> [Triangulation; 4] {
    match case {
        Case::A0 => [
            tri(&[[0, 1, 2, 3], [0, 2, 3, 5], [0, 1, 3, 5], [0, 1, 2, 4], [0, 2, 4, 5], [0, 1, 4, 5]]),
            tri(&[[1, 2, 3, 4], [2, 3, 4, 5], [1, 3, 4, 5]]),
            tri(&[[1, 2, 3, 5], [1, 2, 4, 5]]),
            tri(&[[0, 1, 2, 3], [0, 1, 3, 5], [0, 1, 2, 5], [0, 2, 3, 5], [1, 2, 4, 5]]),
        ],
        Case::A1 => [
            tri(&[[0, 2, 3, 4], [0, 1, 2, 4], [0, 1, 2, 3], [0, 3, 4, 5], [0, 1, 4, 5], [0, 1, 3, 5]]),
            tri(&[[1, 2, 3, 4], [1, 3, 4, 5]]),
            tri(&[[1, 2, 3, 5], [2, 3, 4, 5]]),
            tri(&[[0, 1, 3, 5], [0, 1, 2, 5], [0, 1, 2, 3], [0, 3, 4, 5], [0, 2, 4, 5], [0, 2, 3, 4]]),
        ],
    }
}

/// Supports of the circuits relating cones I–II, II–III, III–IV, IV–I.
pub fn adjacency_circuits(case: Case) -> [Vec<usize>; 4] {
    match case {
        Case::A0 => [vec![0, 3, 4], vec![1, 2, 3, 4, 5], vec![0, 1, 2, 3, 5], vec![0, 1, 2, 4, 5]],
        Case::A1 => [vec![0, 1, 3, 4], vec![1, 2, 4, 5], vec![0, 2, 3, 5], vec![1, 2, 4, 5]],
    }
}

/// The registered A-discriminant in the variables `a_0, …, a_5`.
pub fn discriminant(case: Case) -> LaurentPoly {
    match case {
        Case::A0 => LaurentPoly::from_int_terms(
            6,
            &[
                (&[6, 0, 0, 0, 2, 0], 1),
                (&[5, 1, 1, 0, 0, 1], 4),
                (&[4, 0, 0, 1, 3, 0], -12),
                (&[3, 1, 1, 1, 1, 1], -50),
                (&[2, 0, 0, 2, 4, 0], 48),
                (&[1, 1, 1, 2, 2, 1], 1000),
                (&[0, 0, 0, 3, 5, 0], -64),
                (&[0, 2, 2, 2, 0, 2], 3125),
            ],
        ),
        Case::A1 => LaurentPoly::from_int_terms(
            6,
            &[
                (&[6, 0, 0, 0, 0, 0], 1),
                (&[3, 1, 0, 1, 1, 0], 54),
                (&[3, 0, 1, 1, 0, 1], 54),
                (&[0, 2, 0, 2, 2, 0], 729),
                (&[0, 0, 2, 2, 0, 2], 729),
                (&[0, 1, 1, 2, 1, 1], -1458),
            ],
        ),
    }
}

/// The discriminant in the torus coordinates `(λ, μ)`, as published.
pub fn reduced_discriminant(case: Case) -> LaurentPoly {
    match case {
        Case::A0 => LaurentPoly::from_int_terms(
            2,
            &[
                (&[5, 0], 64),
                (&[4, 0], -48),
                (&[3, 0], 12),
                (&[2, 0], -1),
                (&[2, 1], -1000),
                (&[1, 1], 50),
                (&[0, 2], -3125),
                (&[0, 1], -4),
            ],
        ),
        Case::A1 => LaurentPoly::from_int_terms(
            2,
            &[(&[2, 0], 729), (&[1, 1], -1458), (&[0, 2], 729), (&[1, 0], 54), (&[0, 1], 54), (&[0, 0], 1)],
        ),
    }
}
