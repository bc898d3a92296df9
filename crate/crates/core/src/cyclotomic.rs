//! Exact arithmetic in `Q(zeta)`, where `zeta` is a primitive sixth root of unity.
//!
//! Every element is stored as `p + q*zeta` with `p, q` rational. Products are
//! reduced with `zeta^2 = zeta - 1`, so the pair `(p, q)` is a canonical form and
//! equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number used throughout the crate.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero in Q(zeta)")]
    DivisionByZero,
    #[error("`{0}` does not denote a constant of Q(zeta): {1}")]
    Parse(String, String),
}

/// The element `p + q*zeta` of `Q(zeta)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycNum {
    p: Rational,
    q: Rational,
}

/// Build a rational from an integer numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl CycNum {
    pub fn new(p: Rational, q: Rational) -> Self {
        CycNum { p, q }
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        CycNum::new(rat(p, 1), rat(q, 1))
    }

    pub fn from_rational(p: Rational) -> Self {
        CycNum::new(p, Rational::zero())
    }

    /// The primitive sixth root of unity `zeta`.
    pub fn zeta() -> Self {
        CycNum::from_ints(0, 1)
    }

    /// The primitive cube root of unity `omega = zeta^2 = -1 + zeta`.
    pub fn omega() -> Self {
        zeta_pow(2)
    }

    /// Rational part.
    pub fn re(&self) -> &Rational {
        &self.p
    }

    /// Coefficient of `zeta`.
    pub fn zeta_part(&self) -> &Rational {
        &self.q
    }

    /// `Some(p)` when the value is the rational `p`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.q.is_zero().then_some(&self.p)
    }

    /// Field norm `N(p + q*zeta) = p^2 + pq + q^2`, strictly positive unless zero.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p + &self.p * &self.q + &self.q * &self.q
    }

    /// The multiplicative inverse. Uses the conjugate `p + q - q*zeta`.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let n = self.norm();
        Ok(CycNum::new((&self.p + &self.q) / &n, -&self.q / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CycError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the rendered form would need a leading minus sign, i.e. no
    /// component is positive.
    pub(crate) fn is_negative_like(&self) -> bool {
        !self.is_zero() && !self.p.is_positive() && !self.q.is_positive()
    }

    /// True when at most one of the two components is nonzero.
    pub(crate) fn is_monomial(&self) -> bool {
        self.p.is_zero() || self.q.is_zero()
    }
}

/// `zeta^k` for any integer `k`; periodic with period 6.
pub fn zeta_pow(k: i64) -> CycNum {
    match k.rem_euclid(6) {
        0 => CycNum::from_ints(1, 0),
        1 => CycNum::from_ints(0, 1),
        2 => CycNum::from_ints(-1, 1),
        3 => CycNum::from_ints(-1, 0),
        4 => CycNum::from_ints(0, -1),
        _ => CycNum::from_ints(1, -1),
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_ints(n, 0)
    }
}

impl From<Rational> for CycNum {
    fn from(p: Rational) -> Self {
        CycNum::from_rational(p)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        // (p + q z)(p' + q' z) = pp' + (pq' + qp') z + qq' z^2, and z^2 = z - 1.
        let qq = &self.q * &rhs.q;
        let p = &self.p * &rhs.p - &qq;
        let q = &self.p * &rhs.q + &self.q * &rhs.p + qq;
        CycNum::new(p, q)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-&self.p, -&self.q)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        self.p += &rhs.p;
        self.q += &rhs.q;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        self.p -= &rhs.p;
        self.q -= &rhs.q;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `p + q*zeta`, dropping zero parts and unit coefficients:
/// `0`, `3/2`, `zeta`, `-2*zeta`, `-1 + zeta`, `1/2 - 3*zeta`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zeta_term = |q: &Rational| -> String {
            if q.is_one() {
                "zeta".to_string()
            } else {
                format!("{}*zeta", fmt_rational(q))
            }
        };
        match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.p)),
            (true, false) => {
                if self.q.is_negative() {
                    write!(f, "-{}", zeta_term(&-&self.q))
                } else {
                    write!(f, "{}", zeta_term(&self.q))
                }
            }
            (false, false) => {
                let sign = if self.q.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", fmt_rational(&self.p), sign, zeta_term(&self.q.abs()))
            }
        }
    }
}

impl FromStr for CycNum {
    type Err = CycError;

    /// Parses any constant expression of the polynomial grammar, e.g.
    /// `"1/2 - 3*zeta"` or `"zeta^5"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let poly = crate::ncpoly::parse(s, crate::ncpoly::Alphabet::Constants)
            .map_err(|e| CycError::Parse(s.to_string(), e.to_string()))?;
        Ok(poly.constant_term())
    }
}

/// Coefficient ring shared by the noncommutative and Cox-side polynomial
/// types, so cross-module comparisons work over the same interface.
pub trait Coefficient:
    Clone + Eq + fmt::Debug + fmt::Display + Zero + One + for<'a> AddAssign<&'a Self>
{
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Coefficient for CycNum {
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coefficient for Rational {
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> CycNum {
        CycNum::zeta()
    }

    #[test]
    fn zeta_squared_reduces() {
        assert_eq!(&z() * &z(), CycNum::from_ints(-1, 1));
    }

    #[test]
    fn zeta_cubed_is_minus_one() {
        // z^2 = z - 1, so z^3 = z^2 - z = -1.
        assert_eq!(&(&z() * &z()) * &z(), CycNum::from_ints(-1, 0));
    }

    #[test]
    fn one_is_identity() {
        let x = CycNum::new(rat(3, 7), rat(-2, 5));
        assert_eq!(&CycNum::one() * &x, x);
    }

    #[test]
    fn inverses() {
        assert_eq!(CycNum::one().inv().unwrap(), CycNum::one());
        // z^6 = 1 so z^-1 = z^5, computed by repeated multiplication.
        let z5 = (0..5).fold(CycNum::one(), |acc, _| &acc * &z());
        assert_eq!(z().inv().unwrap(), z5);
        assert_eq!(z().inv().unwrap(), CycNum::from_ints(1, -1));
        assert_eq!(CycNum::from_ints(2, 0).inv().unwrap(), CycNum::from_rational(rat(1, 2)));
        assert_eq!(CycNum::zero().inv(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn zeta_pow_matches_multiplication_chain() {
        let mut acc = CycNum::one();
        for k in 0..13 {
            assert_eq!(zeta_pow(k), acc, "k = {k}");
            acc = &acc * &z();
        }
        assert_eq!(zeta_pow(0), CycNum::one());
        assert_eq!(zeta_pow(3), CycNum::from_ints(-1, 0));
        assert_eq!(zeta_pow(7), z());
        assert_eq!(zeta_pow(-1), z().inv().unwrap());
        for k in -20..20 {
            assert_eq!(zeta_pow(k + 6), zeta_pow(k));
        }
    }

    #[test]
    fn minimal_polynomials() {
        let one = CycNum::one();
        assert!((&(&one - &z()) + &(&z() * &z())).is_zero());
        let w = CycNum::omega();
        assert!((&(&one + &w) + &(&w * &w)).is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(CycNum::zero().to_string(), "0");
        assert_eq!(CycNum::from_ints(-1, 1).to_string(), "-1 + zeta");
        assert_eq!(CycNum::new(rat(1, 2), rat(-3, 1)).to_string(), "1/2 - 3*zeta");
        assert_eq!(CycNum::from_ints(0, -1).to_string(), "-zeta");
        assert_eq!(CycNum::new(rat(0, 1), rat(2, 3)).to_string(), "2/3*zeta");
    }

    #[test]
    fn parse_rendered_forms() {
        for s in ["0", "-1 + zeta", "1/2 - 3*zeta", "-zeta", "7/4", "2/3*zeta"] {
            let c: CycNum = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("zeta^2".parse::<CycNum>().unwrap(), CycNum::omega());
        assert!("x + 1".parse::<CycNum>().is_err());
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9)
            .prop_map(|(a, b, c, d)| CycNum::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn mul_associative(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_commutative(a in arb_cyc(), b in arb_cyc()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn distributive(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_is_inverse(a in arb_cyc()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv().unwrap(), CycNum::one());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_cyc()) {
            prop_assert_eq!(a.to_string().parse::<CycNum>().unwrap(), a);
        }
    }
}
