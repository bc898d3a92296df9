//! The Cox ring `C[X,Y,Z,s,t,u]` of the surface, graded by the Picard lattice.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::{Coefficient, Rational};
use crate::picard::{intersect, DivisorClass};

pub const NUM_VARS: usize = 6;

/// Variable names in their fixed order.
pub const VAR_NAMES: [&str; NUM_VARS] = ["X", "Y", "Z", "s", "t", "u"];

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const S: usize = 3;
pub const T: usize = 4;
pub const U: usize = 5;

/// Multidegree of each variable; equal to the class of its zero locus.
pub const WEIGHTS: [DivisorClass; NUM_VARS] = [
    DivisorClass::new(1, 1, 0, 1),
    DivisorClass::new(1, 0, 1, 1),
    DivisorClass::new(1, 1, 1, 0),
    DivisorClass::new(0, -1, 0, 0),
    DivisorClass::new(0, 0, -1, 0),
    DivisorClass::new(0, 0, 0, -1),
];

/// Image of each variable under `tau`: X -> u -> Y -> t -> Z -> s -> X.
pub const TAU: [usize; NUM_VARS] = [U, T, S, X, Z, Y];

/// The variables in the order `tau` visits them, starting from `X`.
pub const TAU_CYCLE: [usize; NUM_VARS] = [X, U, Y, T, Z, S];

/// The nine coordinate pairs whose common vanishing loci form the irrelevant locus.
pub const IRRELEVANT_PAIRS: [(usize, usize); 9] = [
    (X, T),
    (Y, S),
    (Z, U),
    (X, Y),
    (Y, Z),
    (Z, X),
    (S, T),
    (U, T),
    (S, U),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoxMonomial(pub [u32; NUM_VARS]);

impl CoxMonomial {
    pub const ONE: CoxMonomial = CoxMonomial([0; NUM_VARS]);

    pub fn var(v: usize) -> Self {
        let mut e = [0; NUM_VARS];
        e[v] = 1;
        CoxMonomial(e)
    }

    pub fn exponents(&self) -> &[u32; NUM_VARS] {
        &self.0
    }

    pub fn mul(&self, other: &CoxMonomial) -> CoxMonomial {
        CoxMonomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn multidegree(&self) -> DivisorClass {
        multidegree(self)
    }

    /// `tau` applied once; permutes exponents, no scalars appear.
    pub fn tau(&self) -> CoxMonomial {
        let mut e = [0; NUM_VARS];
        for (v, &k) in self.0.iter().enumerate() {
            e[TAU[v]] += k;
        }
        CoxMonomial(e)
    }

    pub fn tau_pow(&self, k: usize) -> CoxMonomial {
        (0..k % NUM_VARS).fold(*self, |m, _| m.tau())
    }

    /// Parses the rendered form, e.g. `X^2*Y*s*u^2` or `1`.
    pub fn parse(text: &str) -> Option<CoxMonomial> {
        let text = text.trim();
        if text == "1" {
            return Some(CoxMonomial::ONE);
        }
        let mut e = [0; NUM_VARS];
        for factor in text.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, k)) => (n, k.parse().ok()?),
                None => (factor, 1),
            };
            let v = VAR_NAMES.iter().position(|&n| n == name)?;
            e[v] += exp;
        }
        Some(CoxMonomial(e))
    }
}

impl fmt::Display for CoxMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &k) in VAR_NAMES.iter().zip(self.0.iter()) {
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{k}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl Serialize for CoxMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn multidegree(m: &CoxMonomial) -> DivisorClass {
    m.0.iter()
        .zip(WEIGHTS.iter())
        .fold(DivisorClass::zero(), |acc, (&k, &w)| acc + (k as i64) * w)
}

/// A polynomial in the Cox ring. Coefficients default to exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxPoly<C: Coefficient = Rational> {
    terms: BTreeMap<CoxMonomial, C>,
}

impl<C: Coefficient> Default for CoxPoly<C> {
    fn default() -> Self {
        CoxPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> CoxPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: CoxMonomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CoxMonomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: CoxMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(C::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoxMonomial, &C)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &CoxMonomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// Ordinary commutative product in the Cox ring.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms().map(|(m, x)| (*m, x.mul_ref(c))))
    }

    /// The set of multidegrees occurring; a homogeneous polynomial has at most one.
    pub fn multidegrees(&self) -> Vec<DivisorClass> {
        let mut out: Vec<_> = self.monomials().map(multidegree).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl<C: Coefficient> fmt::Display for CoxPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if *m == CoxMonomial::ONE {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

/// Applies `tau` to every monomial; coefficients are untouched.
pub fn apply_tau<C: Coefficient>(p: &CoxPoly<C>) -> CoxPoly<C> {
    apply_tau_pow(p, 1)
}

pub fn apply_tau_pow<C: Coefficient>(p: &CoxPoly<C>, k: usize) -> CoxPoly<C> {
    CoxPoly::from_terms(p.terms().map(|(m, c)| (m.tau_pow(k), c.clone())))
}

/// The graded piece of the Cox ring in a given degree, as a monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionSpace {
    pub degree: DivisorClass,
    pub basis: Vec<CoxMonomial>,
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, m: &CoxMonomial) -> bool {
        self.basis.binary_search_by(|probe| m.cmp(probe)).is_ok()
    }
}

/// All monomials of multidegree `degree`, listed in decreasing lex order
/// (`X > Y > Z > s > t > u`).
///
/// The first coordinate fixes the total `X,Y,Z` exponent, after which the
/// exponents of `s,t,u` are determined by the remaining three coordinates.
pub fn enumerate_sections(degree: DivisorClass) -> SectionSpace {
    let DivisorClass { a, b, c, d } = degree;
    let mut basis = Vec::new();
    if a >= 0 {
        for i in 0..=a {
            for j in 0..=(a - i) {
                let k = a - i - j;
                let es = i + k - b;
                let et = j + k - c;
                let eu = i + j - d;
                if es >= 0 && et >= 0 && eu >= 0 {
                    basis.push(CoxMonomial([i, j, k, es, et, eu].map(|x| x as u32)));
                }
            }
        }
    }
    basis.sort_by(|x, y| y.cmp(x));
    SectionSpace { degree, basis }
}

pub fn h0_via_count(degree: DivisorClass) -> usize {
    enumerate_sections(degree).dim()
}

/// Intersection matrix of the variable weights, rows and columns in `order`.
pub fn weight_intersections(order: &[usize]) -> Vec<Vec<i64>> {
    order
        .iter()
        .map(|&i| order.iter().map(|&j| intersect(WEIGHTS[i], WEIGHTS[j])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{apply_theta, divisor_d, h0_closed};
    use proptest::prelude::*;

    fn mono(s: &str) -> CoxMonomial {
        CoxMonomial::parse(s).unwrap()
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(multidegree(&mono("X")), DivisorClass::new(1, 1, 0, 1));
        assert_eq!(multidegree(&mono("Z*t")), DivisorClass::new(1, 1, 0, 0));
        assert_eq!(multidegree(&mono("Z*t")), divisor_d(2));
        assert_eq!(multidegree(&CoxMonomial::ONE), DivisorClass::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(CoxMonomial([2, 1, 0, 1, 0, 2]).to_string(), "X^2*Y*s*u^2");
        assert_eq!(CoxMonomial::ONE.to_string(), "1");
        assert_eq!(mono("X^2*Y*s*u^2"), CoxMonomial([2, 1, 0, 1, 0, 2]));
        assert_eq!(CoxMonomial::parse("X*w"), None);
    }

    #[test]
    fn sections_examples() {
        let b2 = enumerate_sections(DivisorClass::new(1, 1, 0, 0));
        assert_eq!(b2.basis, vec![mono("X*u"), mono("Z*t")]);
        let b6 = enumerate_sections(DivisorClass::new(3, 1, 1, 1));
        assert_eq!(b6.dim(), 7);
        assert!(b6.contains(&mono("X*Y*Z*s*t*u")));
        assert!(b6.contains(&mono("Y^2*Z*t^2*u")));
        assert_eq!(enumerate_sections(DivisorClass::zero()).basis, vec![CoxMonomial::ONE]);
        assert!(enumerate_sections(DivisorClass::new(-1, 0, 0, 0)).basis.is_empty());
    }

    #[test]
    fn sections_are_homogeneous_and_sorted() {
        for n in 0..20 {
            let space = enumerate_sections(divisor_d(n));
            assert!(space.basis.windows(2).all(|w| w[0] > w[1]));
            assert!(space.basis.iter().all(|m| multidegree(m) == space.degree));
        }
    }

    /// Brute force over a box of exponents, independent of the slack elimination.
    fn brute_force_count(degree: DivisorClass) -> usize {
        let bound = 8u32;
        let mut count = 0;
        let mut e = [0u32; NUM_VARS];
        loop {
            if multidegree(&CoxMonomial(e)) == degree {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == NUM_VARS {
                    return count;
                }
                e[i] += 1;
                if e[i] <= bound {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..8 {
            let d = divisor_d(n);
            assert_eq!(h0_via_count(d), brute_force_count(d), "D_{n}");
        }
        for d in [DivisorClass::new(2, 0, 3, -1), DivisorClass::new(3, 3, 0, 0)] {
            assert_eq!(h0_via_count(d), brute_force_count(d), "{d}");
        }
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_via_count(DivisorClass::new(3, 1, 1, 1)), 7);
        assert_eq!(h0_via_count(DivisorClass::new(4, 2, 1, 2)), 8);
        assert_eq!(h0_via_count(DivisorClass::zero()), 1);
        for n in 0..40 {
            assert_eq!(h0_via_count(divisor_d(n)) as i64, h0_closed(n));
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(mono("X").tau(), mono("u"));
        assert_eq!(mono("Z*t").tau(), mono("s*Z"));
        let mut v = X;
        for &expected in TAU_CYCLE.iter().cycle().skip(1).take(6) {
            v = TAU[v];
            assert_eq!(v, expected);
        }
        let p: CoxPoly = CoxPoly::from_terms([
            (mono("X^2*t"), Rational::from_integer(3.into())),
            (mono("Y*s*u"), Rational::from_integer((-1).into())),
        ]);
        assert_eq!(apply_tau_pow(&p, 6), p);
        assert_ne!(apply_tau(&p), p);
    }

    #[test]
    fn hexagon() {
        let m = weight_intersections(&TAU_CYCLE);
        for i in 0..6 {
            for j in 0..6 {
                let expected = match (i + 6 - j) % 6 {
                    0 => -1,
                    1 | 5 => 1,
                    _ => 0,
                };
                assert_eq!(m[i][j], expected, "({i},{j})");
            }
        }
    }

    #[test]
    fn irrelevant_locus_is_tau_stable() {
        let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let pairs: Vec<_> = IRRELEVANT_PAIRS.iter().map(|&p| norm(p)).collect();
        for &(a, b) in &IRRELEVANT_PAIRS {
            assert!(pairs.contains(&norm((TAU[a], TAU[b]))));
        }
    }

    proptest! {
        #[test]
        fn tau_is_graded(e in prop::array::uniform6(0u32..5)) {
            let m = CoxMonomial(e);
            prop_assert_eq!(multidegree(&m.tau()), apply_theta(multidegree(&m)));
            prop_assert_eq!(m.tau_pow(6), m);
        }

        #[test]
        fn render_parse_roundtrip(e in prop::array::uniform6(0u32..4)) {
            let m = CoxMonomial(e);
            prop_assert_eq!(CoxMonomial::parse(&m.to_string()), Some(m));
        }
    }
}
