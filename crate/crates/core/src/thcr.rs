//! The twisted homogeneous coordinate ring `B = (+)_n H^0(L_n)` and the map
//! from words in `x, y` to Cox monomials.
//!
//! `B_n` is the degree-`D_n` piece of the Cox ring; the product of `a` in `B_m`
//! and `b` in `B_n` is `a * tau^m(b)`.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::cox::{apply_tau_pow, enumerate_sections, multidegree, CoxMonomial, CoxPoly, SectionSpace, T, X, Z};
use crate::cyclotomic::Rational;
use crate::ncpoly::{Alphabet, NcPoly, Word};
use crate::picard::{divisor_d, DivisorClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThcrError {
    #[error("monomial {monomial} has degree {found}, expected D_{n} = {expected}")]
    NotHomogeneous {
        n: usize,
        monomial: CoxMonomial,
        found: DivisorClass,
        expected: DivisorClass,
    },
    #[error("coefficient {0} is not rational")]
    NonRational(String),
    #[error("expected a polynomial in x, y; got alphabet {0}")]
    WrongAlphabet(Alphabet),
    #[error("polynomial is not homogeneous (degrees {0:?})")]
    MixedDegrees(Vec<u32>),
}

/// An element of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSection {
    n: usize,
    poly: CoxPoly<Rational>,
}

impl GradedSection {
    /// Checks every monomial lies in degree `D_n`.
    pub fn new(n: usize, poly: CoxPoly<Rational>) -> Result<Self, ThcrError> {
        let expected = divisor_d(n);
        for m in poly.monomials() {
            let found = multidegree(m);
            if found != expected {
                return Err(ThcrError::NotHomogeneous { n, monomial: *m, found, expected });
            }
        }
        Ok(GradedSection { n, poly })
    }

    pub fn monomial(n: usize, m: CoxMonomial) -> Result<Self, ThcrError> {
        Self::new(n, CoxPoly::monomial(m, Rational::one()))
    }

    pub fn one() -> Self {
        GradedSection { n: 0, poly: CoxPoly::monomial(CoxMonomial::ONE, Rational::one()) }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &CoxPoly<Rational> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &GradedSection) -> Result<GradedSection, ThcrError> {
        GradedSection::new(self.n, self.poly.add(&other.poly))
    }
}

impl fmt::Display for GradedSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `a *_B b = a * tau^m(b)` where `m = deg a`.
pub fn twisted_mul(a: &GradedSection, b: &GradedSection) -> Result<GradedSection, ThcrError> {
    // Re-validate: a section built through a corrupted path must not propagate.
    let a = GradedSection::new(a.n, a.poly.clone())?;
    let b = GradedSection::new(b.n, b.poly.clone())?;
    let product = a.poly.mul(&apply_tau_pow(&b.poly, a.n));
    GradedSection::new(a.n + b.n, product)
}

pub fn basis_b(n: usize) -> SectionSpace {
    enumerate_sections(divisor_d(n))
}

/// Image of `x`.
pub fn phi_x() -> CoxMonomial {
    CoxMonomial::var(X)
}

/// Image of `y`.
pub fn phi_y() -> CoxMonomial {
    CoxMonomial::var(Z).mul(&CoxMonomial::var(T))
}

/// Evaluates a word in `x, y` left to right with the twisted product.
pub fn phi_word(word: &Word) -> CoxMonomial {
    phi_letters(word.letters())
}

fn phi_letters(letters: &[u8]) -> CoxMonomial {
    let mut degree = 0;
    let mut acc = CoxMonomial::ONE;
    for &l in letters {
        let (image, weight) = if l == 0 { (phi_x(), 1) } else { (phi_y(), 2) };
        acc = acc.mul(&image.tau_pow(degree));
        degree += weight;
    }
    acc
}

/// Parses a word like `y*x^2*y` over `x, y` (coefficient must be 1).
pub fn parse_word(text: &str) -> Option<Word> {
    let p = crate::ncpoly::parse(text, Alphabet::Xy).ok()?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(w, c)] if c.is_one() => Some((*w).clone()),
        _ => None,
    }
}

/// Extends `Phi` linearly to a homogeneous polynomial in `x, y`.
pub fn phi_poly(p: &NcPoly) -> Result<GradedSection, ThcrError> {
    if p.alphabet() != Alphabet::Xy {
        return Err(ThcrError::WrongAlphabet(p.alphabet()));
    }
    let degrees = p.degrees();
    if degrees.len() > 1 {
        return Err(ThcrError::MixedDegrees(degrees));
    }
    let n = degrees.first().copied().unwrap_or(0) as usize;
    let mut poly = CoxPoly::zero();
    for (w, c) in p.terms() {
        let c = c.as_rational().ok_or_else(|| ThcrError::NonRational(c.to_string()))?;
        poly.add_term(phi_word(w), c.clone());
    }
    GradedSection::new(n, poly)
}

/// All words over `x` (weight 1) and `y` (weight 2) of total weight `n`.
pub fn words_of_degree(n: usize) -> Vec<Word> {
    let mut layers: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    for d in 1..=n {
        let mut layer: Vec<Word> = layers[d - 1].iter().map(|w| w.concat(&Word(vec![0]))).collect();
        if d >= 2 {
            layer.extend(layers[d - 2].iter().map(|w| w.concat(&Word(vec![1]))));
        }
        layers.push(layer);
    }
    layers.swap_remove(n)
}

/// Whether `{a * tau^2(b) : a in B_2, b in B_n}` covers every monomial of `B_{n+2}`.
pub fn check_generation(n: usize) -> bool {
    generation_gaps(n).is_empty()
}

/// Monomials of `B_{n+2}` not reached by `B_2 * B_n`.
pub fn generation_gaps(n: usize) -> Vec<CoxMonomial> {
    let b2 = basis_b(2);
    let bn = basis_b(n);
    let mut reached: Vec<CoxMonomial> = b2
        .basis
        .iter()
        .flat_map(|a| bn.basis.iter().map(move |b| a.mul(&b.tau_pow(2))))
        .collect();
    reached.sort();
    reached.dedup();
    basis_b(n + 2)
        .basis
        .into_iter()
        .filter(|m| reached.binary_search(m).is_err())
        .collect()
}

/// Word/monomial pairs listing a basis of `B_n` for `n <= 6`.
pub const LOW_DEGREE_TABLE: [(&str, &str); 22] = [
    ("x", "X"),
    ("x^2", "X*u"),
    ("x^3", "X*Y*u"),
    ("x^4", "X*Y*t*u"),
    ("x^5", "X*Y*Z*t*u"),
    ("x^6", "X*Y*Z*s*t*u"),
    ("y", "Z*t"),
    ("y*x", "Y*Z*t"),
    ("y*x^2", "Y*Z*t^2"),
    ("y*x^3", "Y*Z^2*t^2"),
    ("y*x^4", "Y*Z^2*s*t^2"),
    ("x*y", "X*Z*s"),
    ("y^2", "X*Z*s*t"),
    ("y^2*x", "X*Z^2*s*t"),
    ("y^2*x^2", "X*Z^2*s^2*t"),
    ("x^2*y", "X^2*s*u"),
    ("x*y^2", "X^2*Z*s*u"),
    ("x*y^2*x", "X^2*Z*s^2*u"),
    ("y*x^2*y", "Y^2*Z*t^2*u"),
    ("x^3*y", "X^2*Y*u^2"),
    ("x^2*y^2", "X^2*Y*s*u^2"),
    ("x^4*y", "X*Y^2*t*u^2"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cox::{TAU, U};
    use crate::picard::ThetaMatrix;
    use proptest::prelude::*;

    fn mono(s: &str) -> CoxMonomial {
        CoxMonomial::parse(s).unwrap()
    }

    fn word(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn section(n: usize, s: &str) -> GradedSection {
        GradedSection::monomial(n, mono(s)).unwrap()
    }

    #[test]
    fn twisted_products() {
        let x = section(1, "X");
        let y = section(2, "Z*t");
        assert_eq!(twisted_mul(&x, &x).unwrap(), section(2, "X*u"));
        assert_eq!(twisted_mul(&y, &y).unwrap(), section(4, "X*Z*s*t"));
        assert_eq!(twisted_mul(&GradedSection::one(), &y).unwrap(), y);
        assert_eq!(twisted_mul(&y, &GradedSection::one()).unwrap(), y);
    }

    #[test]
    fn homogeneity_is_enforced() {
        assert!(matches!(
            GradedSection::monomial(2, mono("X")),
            Err(ThcrError::NotHomogeneous { n: 2, .. })
        ));
        let mixed = CoxPoly::from_terms([
            (mono("X*u"), Rational::one()),
            (mono("X"), Rational::one()),
        ]);
        assert!(GradedSection::new(2, mixed).is_err());
    }

    #[test]
    fn low_bases() {
        assert_eq!(basis_b(1).basis, vec![mono("X")]);
        assert_eq!(basis_b(0).basis, vec![CoxMonomial::ONE]);
        let mut b5 = basis_b(5).basis;
        let mut expected: Vec<_> =
            ["X*Y*Z*t*u", "Y*Z^2*t^2", "X*Z^2*s*t", "X^2*Z*s*u", "X^2*Y*u^2"].map(mono).to_vec();
        b5.sort();
        expected.sort();
        assert_eq!(b5, expected);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_word(&word("x^5")), mono("X*Y*Z*t*u"));
        assert_eq!(phi_word(&word("y*x*y")), mono("X*Y*Z*t*u"));
        assert_eq!(phi_word(&Word::empty()), CoxMonomial::ONE);
        assert_eq!(phi_word(&word("y^2")), phi_word(&word("x*y*x")));
        assert_eq!(phi_word(&word("x^6")), phi_word(&word("y^3")));
    }

    #[test]
    fn table_reproduces() {
        for (w, m) in LOW_DEGREE_TABLE {
            assert_eq!(phi_word(&word(w)).to_string(), m, "{w}");
        }
        for n in 1..=6 {
            let mut images: Vec<_> = LOW_DEGREE_TABLE
                .iter()
                .filter(|(w, _)| word(w).degree(Alphabet::Xy) as usize == n)
                .map(|(_, m)| mono(m))
                .collect();
            images.sort();
            let mut basis = basis_b(n).basis;
            basis.sort();
            assert_eq!(images, basis, "B_{n}");
        }
    }

    #[test]
    fn phi_poly_agrees_with_twisted_products() {
        let p = crate::ncpoly::parse("x^5 - y*x*y", Alphabet::Xy).unwrap();
        assert!(phi_poly(&p).unwrap().is_zero());
        let p = crate::ncpoly::parse("2*x*y + y*x", Alphabet::Xy).unwrap();
        let s = phi_poly(&p).unwrap();
        assert_eq!(s.degree(), 3);
        assert_eq!(s.poly().len(), 2);
        assert!(matches!(
            phi_poly(&crate::ncpoly::parse("x + y", Alphabet::Xy).unwrap()),
            Err(ThcrError::MixedDegrees(_))
        ));
        assert!(matches!(
            phi_poly(&crate::ncpoly::parse("zeta*x", Alphabet::Xy).unwrap()),
            Err(ThcrError::NonRational(_))
        ));
    }

    #[test]
    fn word_enumeration_counts() {
        let mut c = vec![1usize, 1];
        for n in 2..=20 {
            c.push(c[n - 1] + c[n - 2]);
        }
        for n in 0..=20 {
            let words = words_of_degree(n);
            assert_eq!(words.len(), c[n]);
            assert!(words.iter().all(|w| w.degree(Alphabet::Xy) as usize == n));
        }
        assert_eq!(words_of_degree(13).len(), 377);
    }

    #[test]
    fn generation_examples() {
        assert!(check_generation(5));
        assert!(check_generation(0));
        assert!(check_generation(10));
    }

    #[test]
    fn degree_additivity() {
        let theta = ThetaMatrix::standard();
        for m in 0..15 {
            for n in 0..15 {
                assert_eq!(divisor_d(m + n), divisor_d(m) + theta.apply_pow(divisor_d(n), m));
            }
        }
    }

    #[test]
    fn degree_two_sections_use_disjoint_curves() {
        use crate::cox::WEIGHTS;
        use crate::picard::intersect;
        for a in [X, U] {
            for b in [Z, T] {
                assert_eq!(intersect(WEIGHTS[a], WEIGHTS[b]), 0);
            }
        }
        assert_eq!(TAU[X], U);
    }

    fn arb_section() -> impl Strategy<Value = GradedSection> {
        (0usize..7, prop::collection::vec((0usize..64, -3i64..=3), 1..4)).prop_map(|(n, picks)| {
            let basis = basis_b(n).basis;
            let poly = CoxPoly::from_terms(
                picks.into_iter().map(|(i, c)| (basis[i % basis.len()], Rational::from_integer(c.into()))),
            );
            GradedSection::new(n, poly).unwrap()
        })
    }

    proptest! {
        #[test]
        fn twisted_mul_associative(a in arb_section(), b in arb_section(), c in arb_section()) {
            let left = twisted_mul(&twisted_mul(&a, &b).unwrap(), &c).unwrap();
            let right = twisted_mul(&a, &twisted_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
