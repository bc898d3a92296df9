//! The Picard lattice of the surface, identified with `Z^4`.
//!
//! A class `(a, b, c, d)` stands for `aH - cE1 - bE2 - dE3`. The intersection form
//! is `aa' - bb' - cc' - dd'`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::CycNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("D.(D-K) = {0} is odd for D = {1}; lattice constants are corrupted")]
    OddRiemannRoch(i64, DivisorClass),
    #[error("theta * v != lambda * v for eigenpair {index}: theta*v = {lhs:?}, lambda*v = {rhs:?}")]
    Eigenpair {
        index: usize,
        lhs: Vec<String>,
        rhs: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl DivisorClass {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        DivisorClass { a, b, c, d }
    }

    pub const fn zero() -> Self {
        DivisorClass::new(0, 0, 0, 0)
    }

    pub fn to_array(self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn from_array(v: [i64; 4]) -> Self {
        DivisorClass::new(v[0], v[1], v[2], v[3])
    }

    /// Intersection number with another class.
    pub fn dot(self, other: DivisorClass) -> i64 {
        intersect(self, other)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: DivisorClass) -> DivisorClass {
        self + (-o)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, d: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * d.a, self * d.b, self * d.c, self * d.d)
    }
}

pub const H: DivisorClass = DivisorClass::new(1, 0, 0, 0);
pub const E1: DivisorClass = DivisorClass::new(0, 0, -1, 0);
pub const E2: DivisorClass = DivisorClass::new(0, -1, 0, 0);
pub const E3: DivisorClass = DivisorClass::new(0, 0, 0, -1);
/// Canonical class; `-K = (3,1,1,1)`.
pub const K: DivisorClass = DivisorClass::new(-3, -1, -1, -1);
pub const L1: DivisorClass = DivisorClass::new(1, 1, 0, 1);
pub const L2: DivisorClass = DivisorClass::new(1, 0, 1, 1);
pub const L3: DivisorClass = DivisorClass::new(1, 1, 1, 0);

/// Generators of the effective cone (the six -1-curves).
pub const EFFECTIVE_GENERATORS: [DivisorClass; 6] = [L1, L2, L3, E1, E2, E3];

pub fn intersect(x: DivisorClass, y: DivisorClass) -> i64 {
    x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d
}

/// Integer 4x4 matrix acting on the Picard lattice by left multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThetaMatrix(pub [[i64; 4]; 4]);

impl ThetaMatrix {
    /// The order-six automorphism induced by cyclically permuting the -1-curves.
    pub const fn standard() -> Self {
        ThetaMatrix([
            [2, -1, -1, -1],
            [1, -1, -1, 0],
            [1, 0, -1, -1],
            [1, -1, 0, -1],
        ])
    }

    pub const fn identity() -> Self {
        ThetaMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn apply(&self, v: DivisorClass) -> DivisorClass {
        let v = v.to_array();
        let row = |r: &[i64; 4]| r.iter().zip(v.iter()).map(|(m, x)| m * x).sum();
        DivisorClass::from_array([row(&self.0[0]), row(&self.0[1]), row(&self.0[2]), row(&self.0[3])])
    }

    /// Apply the matrix `k` times.
    pub fn apply_pow(&self, v: DivisorClass, k: usize) -> DivisorClass {
        (0..k).fold(v, |acc, _| self.apply(acc))
    }

    pub fn compose(&self, other: &ThetaMatrix) -> ThetaMatrix {
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..4).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        ThetaMatrix(out)
    }

    pub fn pow(&self, k: usize) -> ThetaMatrix {
        (0..k).fold(ThetaMatrix::identity(), |acc, _| acc.compose(self))
    }

    /// `D_n = D_1 + theta(D_1) + ... + theta^(n-1)(D_1)` via `D_{n+1} = D_1 + theta(D_n)`.
    pub fn divisor_sequence(&self, n: usize) -> DivisorClass {
        (0..n).fold(DivisorClass::zero(), |acc, _| L1 + self.apply(acc))
    }

    /// Matrix-vector product over `Q(zeta)`.
    pub fn apply_cyc(&self, v: &[CycNum; 4]) -> [CycNum; 4] {
        std::array::from_fn(|i| {
            let mut acc = CycNum::zero();
            for (m, x) in self.0[i].iter().zip(v.iter()) {
                acc += &(&CycNum::from(*m) * x);
            }
            acc
        })
    }
}

impl Default for ThetaMatrix {
    fn default() -> Self {
        ThetaMatrix::standard()
    }
}

pub fn apply_theta(d: DivisorClass) -> DivisorClass {
    ThetaMatrix::standard().apply(d)
}

/// The divisor `D_n` for the standard automorphism.
pub fn divisor_d(n: usize) -> DivisorClass {
    ThetaMatrix::standard().divisor_sequence(n)
}

/// Riemann-Roch: `chi(O(D)) = 1 + D.(D-K)/2`.
pub fn chi(d: DivisorClass) -> Result<i64, LatticeError> {
    chi_with(d, K)
}

pub(crate) fn chi_with(d: DivisorClass, canonical: DivisorClass) -> Result<i64, LatticeError> {
    let twice = intersect(d, d - canonical);
    if twice % 2 != 0 {
        return Err(LatticeError::OddRiemannRoch(twice, d));
    }
    Ok(1 + twice / 2)
}

/// Nakai-Moishezon on the effective-cone generators.
pub fn is_ample(d: DivisorClass) -> bool {
    intersect(d, d) > 0 && EFFECTIVE_GENERATORS.iter().all(|&c| intersect(d, c) > 0)
}

/// Explicit inequalities on `(a,b,c,d)` under which `D - K` is ample.
pub fn lemma_van_conditions(d: DivisorClass) -> bool {
    let DivisorClass { a, b, c, d } = d;
    let square = (a + 3).pow(2) > (b + 1).pow(2) + (c + 1).pow(2) + (d + 1).pow(2);
    let positive = b > -1 && c > -1 && d > -1;
    let lines = a + 1 > b + c && a + 1 > b + d && a + 1 > c + d;
    square && positive && lines
}

/// Closed form for `h^0(D_n)`, `n = 6m + r`.
pub fn h0_closed(n: usize) -> i64 {
    let m = (n / 6) as i64;
    let r = (n % 6) as i64;
    if r == 0 {
        3 * m * m + 3 * m + 1
    } else {
        (m + 1) * (3 * m + r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenpair {
    pub vector: [CycNum; 4],
    pub value: CycNum,
}

/// The four fixed eigenpairs of the standard automorphism, each checked exactly.
pub fn theta_eigensystem() -> Result<Vec<Eigenpair>, LatticeError> {
    check_eigensystem(&ThetaMatrix::standard())
}

pub(crate) fn eigenpairs() -> Vec<Eigenpair> {
    let int = |v: [i64; 4]| v.map(CycNum::from);
    let one = CycNum::one();
    let w = CycNum::omega();
    let w2 = &w * &w;
    vec![
        Eigenpair { vector: int([1, 1, 1, 1]), value: -&one },
        Eigenpair { vector: int([3, 1, 1, 1]), value: one.clone() },
        Eigenpair { vector: [CycNum::zero(), one.clone(), w.clone(), w2.clone()], value: w2.clone() },
        Eigenpair { vector: [CycNum::zero(), one, w2, w.clone()], value: w },
    ]
}

pub(crate) fn check_eigensystem(theta: &ThetaMatrix) -> Result<Vec<Eigenpair>, LatticeError> {
    let pairs = eigenpairs();
    for (index, pair) in pairs.iter().enumerate() {
        let lhs = theta.apply_cyc(&pair.vector);
        let rhs = pair.vector.clone().map(|x| &pair.value * &x);
        if lhs != rhs {
            return Err(LatticeError::Eigenpair {
                index,
                lhs: lhs.iter().map(|x| x.to_string()).collect(),
                rhs: rhs.iter().map(|x| x.to_string()).collect(),
            });
        }
    }
    Ok(pairs)
}
