//! Integral lattices, isometries, transvections and the tube domain.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactcore::{
    gcd_all, is_primitive, rat_int, signature_of_form, smith_normal_form, integer_kernel, BigRat,
    ExactError, IntMat, Quad5, Signature,
};
use crate::Case;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("zero vector")]
    ZeroVector,
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("not isotropic/orthogonal")]
    NotIsotropicOrthogonal,
    #[error("transvection is not integral")]
    NotIntegral,
    #[error("not in tube domain")]
    NotInTube,
    #[error("degenerate lattice")]
    Degenerate,
    #[error("matrix is not an isometry")]
    NotIsometry,
    #[error("vector length {got} does not match lattice rank {rank}")]
    Length { got: usize, rank: usize },
}

/// A free Z-module with an integral symmetric bilinear form, in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMat,
    label: String,
    signature: Signature,
    even: bool,
}

impl Lattice {
    pub fn new(label: &str, gram: IntMat) -> Result<Self, LatticeError> {
        let signature = signature_of_form(&gram)?;
        let even = (0..gram.rows()).all(|i| gram.get(i, i).is_even());
        Ok(Lattice { gram, label: label.to_string(), signature, even })
    }

    pub fn from_rows(label: &str, rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Lattice::new(label, IntMat::from_i64_rows(rows))
    }

    pub fn zero() -> Self {
        Lattice::new("0", IntMat::zeros(0, 0)).expect("empty form")
    }

    /// The hyperbolic plane U.
    pub fn u() -> Self {
        Lattice::from_rows("U", &[&[0, 1], &[1, 0]]).unwrap()
    }

    /// U(m).
    pub fn u_scaled(m: i64) -> Result<Self, LatticeError> {
        Lattice::u().rescale(m)
    }

    /// E8 with Gram the negative of the Cartan matrix, Bourbaki node order.
    pub fn e8() -> Self {
        let cartan: [[i64; 8]; 8] = [
            [2, 0, -1, 0, 0, 0, 0, 0],
            [0, 2, 0, -1, 0, 0, 0, 0],
            [-1, 0, 2, -1, 0, 0, 0, 0],
            [0, -1, -1, 2, -1, 0, 0, 0],
            [0, 0, 0, -1, 2, -1, 0, 0],
            [0, 0, 0, 0, -1, 2, -1, 0],
            [0, 0, 0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, 0, 0, -1, 2],
        ];
        let flat: Vec<i64> = cartan.iter().flatten().map(|x| -x).collect();
        Lattice::new("E8", IntMat::from_i64(8, 8, &flat)).unwrap()
    }

    /// The binary form with Gram [[a, b], [b, c]].
    pub fn binary(label: &str, a: i64, b: i64, c: i64) -> Self {
        Lattice::from_rows(label, &[&[a, b], &[b, c]]).unwrap()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn det(&self) -> BigInt {
        self.gram.det().expect("square")
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let label = match (self.rank(), other.rank()) {
            (0, _) => other.label.clone(),
            (_, 0) => self.label.clone(),
            _ => alloc::format!("{} + {}", self.label, other.label),
        };
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            label,
            signature: self.signature.add(&other.signature),
            even: self.even && other.even,
        }
    }

    pub fn rescale(&self, m: i64) -> Result<Lattice, LatticeError> {
        if m == 0 {
            return Err(LatticeError::ZeroScale);
        }
        let label = if self.label == "U" { alloc::format!("U({m})") } else { alloc::format!("{}({m})", self.label) };
        Lattice::new(&label, self.gram.scale(&BigInt::from(m)))
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), LatticeError> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(LatticeError::Length { got: v.len(), rank: self.rank() })
        }
    }

    pub fn vector(&self, coords: Vec<BigInt>) -> Result<LVector<'_>, LatticeError> {
        self.check_len(&coords)?;
        Ok(LVector { coords, parent: self })
    }

    pub fn vector_i64(&self, coords: &[i64]) -> Result<LVector<'_>, LatticeError> {
        self.vector(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn basis_vector(&self, i: usize) -> LVector<'_> {
        let mut c = vec![BigInt::zero(); self.rank()];
        c[i] = BigInt::one();
        LVector { coords: c, parent: self }
    }

    /// `(x, y) = xᵀ G y`.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let gy = self.gram.mul_vec(y).expect("length checked");
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn pair_rat(&self, x: &[BigRat], y: &[BigRat]) -> BigRat {
        let n = self.rank();
        let mut acc = BigRat::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let g = self.gram.get(i, j);
                if !g.is_zero() {
                    acc += &x[i] * &y[j] * rat_int(g);
                }
            }
        }
        acc
    }

    /// `gcd_w (v, w)`, the gcd of the entries of `G v`.
    pub fn sdiv(&self, v: &[BigInt]) -> Result<BigInt, LatticeError> {
        self.check_len(v)?;
        if v.iter().all(Zero::is_zero) {
            return Err(LatticeError::ZeroVector);
        }
        Ok(gcd_all(&self.gram.mul_vec(v)?))
    }

    /// Coordinates reachable from the support of `v` in the graph of nonzero
    /// Gram entries.
    fn component_of(&self, v: &[BigInt]) -> Vec<usize> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        for &i in &stack {
            seen[i] = true;
        }
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && !self.gram.get(i, j).is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// A primitive isotropic `f` with `(v, f) = m` and `sdiv f = m`, if `v`
    /// itself is primitive, isotropic and has `sdiv v = m`.
    ///
    /// Basis vectors are tried first, then a coefficient box `|c_i| ≤ bound`
    /// over the Gram-connected block containing `v`.
    pub fn admissibility_witness(&self, v: &[BigInt], m: i64, bound: i64) -> Option<Vec<BigInt>> {
        let m = BigInt::from(m);
        if self.check_len(v).is_err() || v.iter().all(Zero::is_zero) || !is_primitive(v) {
            return None;
        }
        if !self.pair(v, v).is_zero() || self.sdiv(v).ok()? != m {
            return None;
        }
        let good = |f: &[BigInt]| {
            !f.iter().all(Zero::is_zero)
                && self.pair(f, f).is_zero()
                && self.pair(v, f) == m
                && is_primitive(f)
                && self.sdiv(f).ok().as_ref() == Some(&m)
        };
        for i in 0..self.rank() {
            let f = self.basis_vector(i).coords;
            if good(&f) {
                return Some(f);
            }
        }
        let block = self.component_of(v);
        let width = (2 * bound + 1) as u64;
        let total = width.checked_pow(block.len() as u32)?;
        let mut f = vec![BigInt::zero(); self.rank()];
        for mut idx in 0..total {
            for &k in &block {
                f[k] = BigInt::from((idx % width) as i64 - bound);
                idx /= width;
            }
            if good(&f) {
                return Some(f);
            }
        }
        None
    }

    pub fn is_m_admissible(&self, v: &[BigInt], m: i64) -> bool {
        self.admissibility_witness(v, m, 6).is_some()
    }

    /// The Eichler transvection
    /// `φ_{e,v}(x) = x − ((v,v)/2·(e,x) + (v,x)) e + (e,x) v`.
    pub fn transvection(&self, e: &[BigInt], v: &[BigInt]) -> Result<Isometry, LatticeError> {
        self.check_len(e)?;
        self.check_len(v)?;
        if !self.pair(e, e).is_zero() || !self.pair(e, v).is_zero() {
            return Err(LatticeError::NotIsotropicOrthogonal);
        }
        let vv = self.pair(v, v);
        let n = self.rank();
        let mut m = IntMat::zeros(n, n);
        for k in 0..n {
            let x = self.basis_vector(k).coords;
            let ex = self.pair(e, &x);
            let num = &vv * &ex;
            if num.is_odd() {
                return Err(LatticeError::NotIntegral);
            }
            let c = num / 2 + self.pair(v, &x);
            for i in 0..n {
                let val = &x[i] - &c * &e[i] + &ex * &v[i];
                m.set(i, k, val);
            }
        }
        Isometry::new(self, m)
    }

    /// Nonzero elementary divisors greater than one of the Gram matrix.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>, LatticeError> {
        if self.det().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        let snf = smith_normal_form(&self.gram);
        Ok(snf.diagonal().into_iter().filter(|d| !d.is_one()).collect())
    }

    pub fn discriminant_order(&self) -> BigInt {
        self.det().abs()
    }

    /// Basis of `{x : (x, s) = 0 for s in vectors}` and its Gram matrix.
    pub fn orthogonal_complement(&self, vectors: &[Vec<BigInt>]) -> Result<(Vec<Vec<BigInt>>, Lattice), LatticeError> {
        if vectors.is_empty() {
            let basis = (0..self.rank()).map(|i| self.basis_vector(i).coords).collect();
            return Ok((basis, self.clone()));
        }
        let rows: Vec<Vec<BigInt>> = vectors.iter().map(|s| self.gram.mul_vec(s)).collect::<Result<_, _>>()?;
        let basis = integer_kernel(&IntMat::from_rows(&rows)?);
        let k = basis.len();
        let mut g = IntMat::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, self.pair(&basis[i], &basis[j]));
            }
        }
        let lat = Lattice::new(&alloc::format!("{}^perp", self.label), g)?;
        Ok((basis, lat))
    }

    /// The tube-domain point `Ω = −(v,v)/2·e + f + v` for `v = v_re + i·v_im`
    /// in `U ⊥ self`, with `(e, f)` the first two coordinates.
    pub fn tube_embed(&self, v_re: &[BigRat], v_im: &[BigRat]) -> Result<TubePoint, LatticeError> {
        if v_re.len() != self.rank() || v_im.len() != self.rank() {
            return Err(LatticeError::Length { got: v_re.len().max(v_im.len()), rank: self.rank() });
        }
        let bb = self.pair_rat(v_im, v_im);
        if !bb.is_positive() {
            return Err(LatticeError::NotInTube);
        }
        let aa = self.pair_rat(v_re, v_re);
        let ab = self.pair_rat(v_re, v_im);
        let half = BigRat::new(1.into(), 2.into());
        let mut re = vec![-(aa - &bb) * &half, BigRat::one()];
        re.extend(v_re.iter().cloned());
        let mut im = vec![-ab, BigRat::zero()];
        im.extend(v_im.iter().cloned());
        Ok(TubePoint { re, im })
    }
}

/// An integer vector together with the lattice it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LVector<'a> {
    pub coords: Vec<BigInt>,
    pub parent: &'a Lattice,
}

impl<'a> LVector<'a> {
    pub fn norm(&self) -> BigInt {
        self.parent.pair(&self.coords, &self.coords)
    }

    pub fn pair(&self, other: &LVector<'_>) -> BigInt {
        self.parent.pair(&self.coords, &other.coords)
    }

    pub fn sdiv(&self) -> Result<BigInt, LatticeError> {
        self.parent.sdiv(&self.coords)
    }

    pub fn is_m_admissible(&self, m: i64) -> bool {
        self.parent.is_m_admissible(&self.coords, m)
    }
}

/// A matrix `M` acting on column coordinates with `Mᵀ G M = G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    matrix: IntMat,
    parent: Lattice,
}

impl Isometry {
    pub fn new(lattice: &Lattice, matrix: IntMat) -> Result<Self, LatticeError> {
        if matrix.rows() != lattice.rank() || matrix.cols() != lattice.rank() {
            return Err(LatticeError::NotIsometry);
        }
        if matrix.congruence(lattice.gram())? != *lattice.gram() {
            return Err(LatticeError::NotIsometry);
        }
        Ok(Isometry { matrix, parent: lattice.clone() })
    }

    pub fn identity(lattice: &Lattice) -> Self {
        Isometry { matrix: IntMat::identity(lattice.rank()), parent: lattice.clone() }
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn lattice(&self) -> &Lattice {
        &self.parent
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x).expect("length")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry { matrix: self.matrix.mul_mat(&other.matrix).expect("square"), parent: self.parent.clone() }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry { matrix: self.matrix.inverse_unimodular().expect("isometry"), parent: self.parent.clone() }
    }
}

/// Real and imaginary parts of a period point in `U ⊥ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubePoint {
    pub re: Vec<BigRat>,
    pub im: Vec<BigRat>,
}

impl TubePoint {
    /// `((Ω, Ω) real part, (Ω, Ω) imaginary part, (Ω, Ω̄))`.
    pub fn pairings(&self, t: &Lattice) -> (BigRat, BigRat, BigRat) {
        let rr = t.pair_rat(&self.re, &self.re);
        let ii = t.pair_rat(&self.im, &self.im);
        let ri = t.pair_rat(&self.re, &self.im);
        (&rr - &ii, &ri + &ri, rr + ii)
    }
}

/// Search for unimodular `S`, `|s_ij| ≤ bound`, with `Sᵀ G1 S = G2`.
pub fn binary_form_equivalent(g1: &IntMat, g2: &IntMat, bound: i64) -> Option<IntMat> {
    if g1.rows() != 2 || g1.cols() != 2 || g2.rows() != 2 || g2.cols() != 2 {
        return None;
    }
    if !g1.is_symmetric() || !g2.is_symmetric() {
        return None;
    }
    if g1.det().ok()? != g2.det().ok()? {
        return None;
    }
    let parity = |g: &IntMat| (g.get(0, 0).is_even(), g.get(1, 1).is_even());
    let even = |g: &IntMat| parity(g) == (true, true);
    if even(g1) != even(g2) || gcd_all(g1.entries()) != gcd_all(g2.entries()) {
        return None;
    }
    let form = |x: i64, y: i64| -> BigInt {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        g1.get(0, 0) * &x * &x + BigInt::from(2) * g1.get(0, 1) * &x * &y + g1.get(1, 1) * &y * &y
    };
    let range = -bound..=bound;
    let firsts: Vec<(i64, i64)> = range
        .clone()
        .flat_map(|a| range.clone().map(move |c| (a, c)))
        .filter(|&(a, c)| form(a, c) == *g2.get(0, 0))
        .collect();
    let seconds: Vec<(i64, i64)> = range
        .clone()
        .flat_map(|b| range.clone().map(move |d| (b, d)))
        .filter(|&(b, d)| form(b, d) == *g2.get(1, 1))
        .collect();
    for &(a, c) in &firsts {
        for &(b, d) in &seconds {
            if (a * d - b * c).abs() != 1 {
                continue;
            }
            let s = IntMat::from_i64_rows(&[&[a, b], &[c, d]]);
            if s.congruence(g1).ok()? == *g2 {
                return Some(s);
            }
        }
    }
    None
}

/// The lattices entering the mirror-duality check for one family.
#[derive(Debug, Clone)]
pub struct DolgachevInput {
    /// `M_Δ`.
    pub m: Lattice,
    /// `M̌_Δ`, so that `M_Δ^⊥ = U ⊥ M̌_Δ`.
    pub m_check: Lattice,
    /// `M_Δ∨`.
    pub m_dual: Lattice,
}

impl DolgachevInput {
    pub fn builtin(case: Case) -> Self {
        let e8e8 = Lattice::e8().direct_sum(&Lattice::e8());
        let block = match case {
            Case::A0 => Lattice::binary("B5", 2, 1, -2),
            Case::A1 => Lattice::u_scaled(3).unwrap(),
        };
        DolgachevInput { m: e8e8.direct_sum(&block), m_check: block.clone(), m_dual: block }
    }

    pub fn m_perp(&self) -> Lattice {
        Lattice::u().direct_sum(&self.m_check)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DolgachevReport {
    pub checks: Vec<SubCheck>,
    pub witness_e: Vec<BigInt>,
    pub witness_f: Option<Vec<BigInt>>,
    pub equivalence: Option<IntMat>,
}

impl DolgachevReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks that `M_Δ^⊥ = U ⊥ M̌_Δ` carries a 1-admissible vector, that the
/// complement of its hyperbolic pair is equivalent to `M_Δ∨`, and that ranks,
/// signatures and discriminant orders are those of a primitive sublattice of
/// the K3 lattice and its complement.
pub fn check_dolgachev(input: &DolgachevInput) -> DolgachevReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(SubCheck { name: name.to_string(), passed, detail });
    };
    let t = input.m_perp();
    let e = t.basis_vector(0).coords;
    let f = t.admissibility_witness(&e, 1, 6);
    push("one_admissible", f.is_some(), alloc::format!("e = {:?}, f = {:?}", e, f));

    let mut equivalence = None;
    match &f {
        Some(f) => match t.orthogonal_complement(&[e.clone(), f.clone()]) {
            Ok((_, comp)) => {
                let s = if comp.rank() == 2 && input.m_dual.rank() == 2 {
                    binary_form_equivalent(comp.gram(), input.m_dual.gram(), 6)
                } else if comp.gram() == input.m_dual.gram() {
                    Some(IntMat::identity(comp.rank()))
                } else {
                    None
                };
                push(
                    "complement_equivalent_to_dual",
                    s.is_some(),
                    alloc::format!("complement {:?} vs {:?}", comp.gram(), input.m_dual.gram()),
                );
                equivalence = s;
            }
            Err(err) => push("complement_equivalent_to_dual", false, alloc::format!("{err}")),
        },
        None => push("complement_equivalent_to_dual", false, "no witness".to_string()),
    }

    let ranks = input.m.rank() + t.rank();
    push("rank_22", ranks == 22, alloc::format!("{} + {}", input.m.rank(), t.rank()));
    let sig = input.m.signature().add(&t.signature());
    push(
        "signature_3_19",
        sig == Signature::new(3, 19, 0),
        alloc::format!("({}, {})", sig.plus, sig.minus),
    );
    let (dm, dt) = (input.m.discriminant_order(), t.discriminant_order());
    push("discriminant_orders", dm == dt, alloc::format!("{dm} vs {dt}"));
    let even = input.m.is_even() && t.is_even() && input.m_dual.is_even();
    push("even", even, String::new());

    DolgachevReport { checks, witness_e: e, witness_f: f, equivalence }
}

/// `(10 5 / 5 2)`, the lattice `N` with `M_Δ^⊥ = U ⊥ N` up to isometry on
/// the mirror side of the first family.
pub fn lattice_n_a0() -> Lattice {
    Lattice::binary("N0", 10, 5, 2)
}

/// Generators `g₁`, `g₂` of the orientation-preserving isometries of
/// `(10 5 / 5 2)`.
pub fn n_a0_generators() -> (IntMat, IntMat) {
    (
        IntMat::from_i64_rows(&[&[4, 1], &[-5, -1]]),
        IntMat::from_i64_rows(&[&[1, 1], &[0, -1]]),
    )
}

/// `W · U · Wᵀ` for `W = (1 1 / −ε⁻¹ ε)` over Q(√5).
pub fn hilbert_w_gram() -> [[Quad5; 2]; 2] {
    let eps = Quad5::epsilon();
    let w = [[Quad5::one(), Quad5::one()], [-&eps.inverse().unwrap(), eps]];
    let u = [[Quad5::zero(), Quad5::one()], [Quad5::one(), Quad5::zero()]];
    let mul = |a: &[[Quad5; 2]; 2], b: &[[Quad5; 2]; 2]| -> [[Quad5; 2]; 2] {
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
    };
    let wt = [[w[0][0].clone(), w[1][0].clone()], [w[0][1].clone(), w[1][1].clone()]];
    mul(&mul(&w, &u), &wt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{ints, rat};

    #[test]
    fn direct_sum_of_u_and_u3() {
        let l = Lattice::u().direct_sum(&Lattice::u_scaled(3).unwrap());
        assert_eq!(l.gram().to_i64_rows(), [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 3], [0, 0, 3, 0]]);
        assert_eq!(l.direct_sum(&Lattice::zero()), l);
    }

    #[test]
    fn two_e8_and_binary_block() {
        let l = Lattice::e8().direct_sum(&Lattice::e8()).direct_sum(&Lattice::binary("B", 2, 1, -2));
        assert_eq!(l.rank(), 18);
        assert_eq!(l.signature(), Signature::new(1, 17, 0));
        assert!(l.is_even());
        assert_eq!(Lattice::e8().det(), BigInt::one());
    }

    #[test]
    fn rescaling() {
        assert_eq!(Lattice::u().rescale(1).unwrap().gram(), Lattice::u().gram());
        assert_eq!(Lattice::u_scaled(3).unwrap().gram().to_i64_rows(), [[0, 3], [3, 0]]);
        let twice = Lattice::u().rescale(2).unwrap().rescale(3).unwrap();
        assert_eq!(twice.gram(), Lattice::u_scaled(6).unwrap().gram());
        assert_eq!(Lattice::u().rescale(0), Err(LatticeError::ZeroScale));
    }

    #[test]
    fn sdiv_examples() {
        assert_eq!(Lattice::u().sdiv(&ints(&[1, 0])).unwrap(), BigInt::one());
        let u3 = Lattice::u_scaled(3).unwrap();
        assert_eq!(u3.sdiv(&ints(&[1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(u3.sdiv(&ints(&[1, 1])).unwrap(), BigInt::from(3));
        assert_eq!(u3.sdiv(&ints(&[0, 0])), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn admissibility() {
        let t = Lattice::u().direct_sum(&Lattice::binary("B", 2, 1, -2));
        assert!(t.is_m_admissible(&ints(&[1, 0, 0, 0]), 1));
        let t = Lattice::u_scaled(3).unwrap().direct_sum(&Lattice::u());
        let w = t.admissibility_witness(&ints(&[1, 0, 0, 0]), 3, 6).unwrap();
        assert_eq!(w, ints(&[0, 1, 0, 0]));
        let r = Lattice::binary("A1", -2, 0, -2);
        assert!(!r.is_m_admissible(&ints(&[1, 0]), 1));
    }

    #[test]
    fn transvection_examples() {
        let t = Lattice::u().direct_sum(&lattice_n_a0());
        let e = ints(&[1, 0, 0, 0]);
        let id = t.transvection(&e, &ints(&[0, 0, 0, 0])).unwrap();
        assert!(id.matrix().is_identity());
        let phi = t.transvection(&e, &ints(&[0, 0, 1, 0])).unwrap();
        assert_eq!(phi.apply(&ints(&[0, 1, 0, 0])), ints(&[-5, 1, 1, 0]));
        assert_eq!(phi.apply(&e), e);
        assert_eq!(
            t.transvection(&ints(&[1, 1, 0, 0]), &ints(&[0, 0, 1, 0])),
            Err(LatticeError::NotIsotropicOrthogonal)
        );
    }

    #[test]
    fn tube_domain_point() {
        let n = lattice_n_a0();
        let t = Lattice::u().direct_sum(&n);
        let p = n.tube_embed(&[rat(0, 1), rat(0, 1)], &[rat(0, 1), rat(1, 1)]).unwrap();
        let (re, im, herm) = p.pairings(&t);
        assert!(re.is_zero() && im.is_zero());
        assert_eq!(herm, rat(4, 1));
        assert_eq!(n.tube_embed(&[rat(1, 1), rat(0, 1)], &[rat(0, 1), rat(0, 1)]), Err(LatticeError::NotInTube));
    }

    #[test]
    fn discriminant_groups() {
        assert!(Lattice::u().discriminant_group().unwrap().is_empty());
        assert_eq!(Lattice::u_scaled(3).unwrap().discriminant_group().unwrap(), ints(&[3, 3]));
        assert_eq!(Lattice::binary("B", 2, 1, -2).discriminant_group().unwrap(), ints(&[5]));
        assert_eq!(Lattice::binary("D", 1, 1, 1).discriminant_group(), Err(LatticeError::Degenerate));
    }

    #[test]
    fn binary_equivalence() {
        let a = IntMat::from_i64_rows(&[&[2, 1], &[1, -2]]);
        let b = IntMat::from_i64_rows(&[&[-2, 1], &[1, 2]]);
        let s = binary_form_equivalent(&a, &a, 3).unwrap();
        assert_eq!(s.congruence(&a).unwrap(), a);
        let s = binary_form_equivalent(&a, &b, 3).unwrap();
        assert_eq!(s.congruence(&a).unwrap(), b);
        let u3 = IntMat::from_i64_rows(&[&[0, 3], &[3, 0]]);
        assert!(binary_form_equivalent(&a, &u3, 6).is_none());
    }

    #[test]
    fn dolgachev_both_cases() {
        for case in [Case::A0, Case::A1] {
            let r = check_dolgachev(&DolgachevInput::builtin(case));
            assert!(r.passed(), "{case:?}: {:?}", r.checks);
            assert_eq!(r.witness_f, Some(ints(&[0, 1, 0, 0])));
        }
    }

    #[test]
    fn generators_of_n_are_isometries() {
        let n = lattice_n_a0();
        let (g1, g2) = n_a0_generators();
        Isometry::new(&n, g1).unwrap();
        let g2 = Isometry::new(&n, g2).unwrap();
        assert!(g2.compose(&g2).matrix().is_identity());
        assert_eq!(Isometry::new(&n, IntMat::from_i64_rows(&[&[1, 1], &[0, 1]])), Err(LatticeError::NotIsometry));
    }

    #[test]
    fn hilbert_identity() {
        let g = hilbert_w_gram();
        let q = |x: i64| Quad5::from_rat(rat(x, 1));
        assert_eq!(g, [[q(2), q(1)], [q(1), q(-2)]]);
    }
}
