//! Secondary fans of configurations whose Gale dual has rank 2.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::triangulation::{gale_coords, lift_heights};
use super::{
    circuits, enumerate_regular_triangulations, gkz_vector, regularity_constraints, Circuit,
    PointConfig, PolytopeError, Triangulation,
};
use crate::exactcore::{gcd_all, rat_int, same_lattice, BigRat};

/// Two cyclically adjacent maximal cones, the ray between them and the
/// circuit along which their triangulations differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanAdjacency {
    pub cones: (usize, usize),
    pub ray: usize,
    pub circuit: Circuit,
}

/// The secondary fan in the coordinates `x = B ψ`, `B` the chosen Gale basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondaryFan2 {
    pub gale_basis: Vec<Vec<BigInt>>,
    /// Primitive rays in counterclockwise order, starting at angle 0.
    pub rays: Vec<Vec<BigInt>>,
    /// Consecutive ray pairs.
    pub cones: Vec<(usize, usize)>,
    pub triangulations: Vec<Triangulation>,
    pub gkz: Vec<Vec<BigInt>>,
    /// A point in the interior of each cone.
    pub interior_points: Vec<Vec<BigRat>>,
    /// Heights `ψ` with `B ψ` equal to the interior point.
    pub heights: Vec<Vec<BigRat>>,
    pub adjacency: Vec<FanAdjacency>,
}

fn half(v: &[BigInt]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

fn cross(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn angle_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| BigInt::zero().cmp(&cross(a, b)))
}

fn pair_rat(y: &[BigRat], x: &[BigInt]) -> BigRat {
    y.iter().zip(x).map(|(a, b)| a * rat_int(b)).sum()
}

fn pair_rr(y: &[BigRat], x: &[BigRat]) -> BigRat {
    y.iter().zip(x).map(|(a, b)| a * b).sum()
}

pub fn secondary_fan(a: &PointConfig) -> Result<SecondaryFan2, PolytopeError> {
    secondary_fan_with_basis(a, &a.gale_basis())
}

/// Secondary fan with rays expressed in the supplied Gale basis, which must
/// span the lattice of affine relations of `a`.
pub fn secondary_fan_with_basis(a: &PointConfig, basis: &[Vec<BigInt>]) -> Result<SecondaryFan2, PolytopeError> {
    let r = a.gale_rank();
    if r != 2 {
        return Err(PolytopeError::GaleRank(r));
    }
    if basis.len() != 2 || !same_lattice(basis, &a.gale_basis()) {
        return Err(PolytopeError::GaleBasisMismatch);
    }
    let n = a.len();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..n {
        let col = vec![basis[0][j].clone(), basis[1][j].clone()];
        let g = gcd_all(&col);
        if g.is_zero() {
            continue;
        }
        let prim: Vec<BigInt> = col.iter().map(|x| x / &g).collect();
        if !rays.contains(&prim) {
            rays.push(prim);
        }
    }
    rays.sort_by(|x, y| angle_cmp(x, y));
    let k = rays.len();
    if k < 2 {
        return Err(PolytopeError::InconsistentFan(format!("only {k} ray directions")));
    }
    let cones: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let interior_points: Vec<Vec<BigRat>> = cones
        .iter()
        .map(|&(i, j)| {
            let (u, v) = (&rays[i], &rays[j]);
            let c = cross(u, v);
            let p: Vec<BigInt> = if c.is_positive() {
                vec![&u[0] + &v[0], &u[1] + &v[1]]
            } else if c.is_zero() {
                vec![-u[1].clone(), u[0].clone()]
            } else {
                vec![-(&u[0] + &v[0]), -(&u[1] + &v[1])]
            };
            p.iter().map(rat_int).collect()
        })
        .collect();

    let regular = enumerate_regular_triangulations(a)?;
    if regular.len() != k {
        return Err(PolytopeError::InconsistentFan(format!(
            "{} regular triangulations for {k} cones",
            regular.len()
        )));
    }
    let ys: Vec<Vec<Vec<BigRat>>> = regular
        .iter()
        .map(|t| {
            regularity_constraints(a, t).map(|ws| ws.iter().map(|w| gale_coords(basis, w)).collect())
        })
        .collect::<Result<_, _>>()?;

    let mut triangulations = Vec::new();
    let mut gkz = Vec::new();
    let mut heights = Vec::new();
    for (c, &(i, j)) in cones.iter().enumerate() {
        let x = &interior_points[c];
        let hits: Vec<usize> = (0..regular.len())
            .filter(|&t| ys[t].iter().all(|y| pair_rr(y, x).is_positive()))
            .collect();
        let [t] = hits[..] else {
            return Err(PolytopeError::InconsistentFan(format!("cone {c} matches {} triangulations", hits.len())));
        };
        // the triangulation cone is exactly the cone spanned by rays i and j
        for &ray in &[i, j] {
            if ys[t].iter().any(|y| pair_rat(y, &rays[ray]).is_negative()) {
                return Err(PolytopeError::InconsistentFan(format!("ray {ray} outside cone {c}")));
            }
            if k > 2 && !ys[t].iter().any(|y| pair_rat(y, &rays[ray]).is_zero()) {
                return Err(PolytopeError::InconsistentFan(format!("ray {ray} interior to cone {c}")));
            }
        }
        triangulations.push(regular[t].clone());
        gkz.push(gkz_vector(a, &regular[t])?);
        heights.push(lift_heights(basis, x));
    }

    let all_circuits = circuits(a);
    let mut adjacency = Vec::new();
    for c in 0..k {
        let d = (c + 1) % k;
        if k == 2 && c == 1 {
            break;
        }
        let ray = cones[c].1;
        let (t1, t2) = (&triangulations[c], &triangulations[d]);
        let mut changed: Vec<usize> = t1
            .simplices()
            .iter()
            .filter(|s| !t2.simplices().contains(s))
            .chain(t2.simplices().iter().filter(|s| !t1.simplices().contains(s)))
            .flatten()
            .copied()
            .collect();
        changed.sort_unstable();
        changed.dedup();
        let mut cands: Vec<&Circuit> = all_circuits
            .iter()
            .filter(|z| z.support.iter().all(|i| changed.contains(i)))
            .filter(|z| pair_rat(&gale_coords(basis, &z.full(n)), &rays[ray]).is_zero())
            .collect();
        cands.sort_by_key(|z| z.support.len());
        let circuit = cands
            .first()
            .ok_or_else(|| PolytopeError::InconsistentFan(format!("no circuit between cones {c} and {d}")))?;
        adjacency.push(FanAdjacency { cones: (c, d), ray, circuit: (*circuit).clone() });
    }

    Ok(SecondaryFan2 {
        gale_basis: basis.to_vec(),
        rays,
        cones,
        triangulations,
        gkz,
        interior_points,
        heights,
        adjacency,
    })
}

impl SecondaryFan2 {
    /// For heights in the interior of each cone, the GKZ vector of that cone's
    /// triangulation is the unique minimizer of `⟨ψ, φ⟩` over all GKZ vectors.
    pub fn gkz_minimizers_agree(&self) -> bool {
        (0..self.cones.len()).all(|c| {
            let val = |phi: &[BigInt]| pair_rat(&self.heights[c], phi);
            let own = val(&self.gkz[c]);
            (0..self.cones.len()).filter(|&d| d != c).all(|d| val(&self.gkz[d]) > own)
        })
    }

    pub fn cone_of(&self, t: &Triangulation) -> Option<usize> {
        self.triangulations.iter().position(|x| x == t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::ints;

    #[test]
    fn square_with_centre() {
        // Gale rank 2: four corners and the centre of a square
        let a = PointConfig::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        let fan = secondary_fan(&a).unwrap();
        assert_eq!(fan.cones.len(), fan.triangulations.len());
        assert!(fan.gkz_minimizers_agree());
        for adj in &fan.adjacency {
            assert!(circuits(&a).contains(&adj.circuit));
        }
    }

    #[test]
    fn rank_mismatch() {
        let a = PointConfig::new(1, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(secondary_fan(&a), Err(PolytopeError::GaleRank(1)));
        let b = PointConfig::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        let wrong = vec![ints(&[2, 0, 0, 0, 0]), ints(&[0, 1, 0, 0, 0])];
        assert_eq!(secondary_fan_with_basis(&b, &wrong), Err(PolytopeError::GaleBasisMismatch));
    }
}
