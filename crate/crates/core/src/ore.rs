//! Normal forms in `R = C<x,y>/(x^5 - yxy, y^2 - xyx)` via the PBW presentation.
//!
//! With `w = y - x^2` and `z = xw + zeta^2 wx`, the ring is presented on `w, z, x`
//! by the rewriting rules
//!
//! ```text
//! zw -> zeta wz
//! xw -> -zeta^2 wx + z
//! xz -> zeta zx - w^2
//! ```
//!
//! whose irreducible words are exactly the ordered monomials `w^i z^j x^k`.
//! Which redex gets rewritten first is a pluggable [`ReductionStrategy`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::{zeta_pow, CycNum};
use crate::ncpoly::{substitute, Alphabet, Letter, NcError, NcPoly, Word};

const W: Letter = 0;
const Z: Letter = 1;
const X: Letter = 2;

/// Chooses the position of the adjacent pair to rewrite in a reducible word.
pub trait ReductionStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Index `i` such that `word[i..i + 2]` is a redex, or `None` if the word is
    /// already a PBW monomial.
    fn select(&self, word: &[Letter]) -> Option<usize>;
}

fn is_redex(a: Letter, b: Letter) -> bool {
    a > b
}

/// Rewrites the leftmost redex.
#[derive(Debug, Default, Clone, Copy)]
pub struct Leftmost;

impl ReductionStrategy for Leftmost {
    fn name(&self) -> &'static str {
        "leftmost"
    }

    fn select(&self, word: &[Letter]) -> Option<usize> {
        word.windows(2).position(|p| is_redex(p[0], p[1]))
    }
}

/// Rewrites the rightmost redex.
#[derive(Debug, Default, Clone, Copy)]
pub struct Rightmost;

impl ReductionStrategy for Rightmost {
    fn name(&self) -> &'static str {
        "rightmost"
    }

    fn select(&self, word: &[Letter]) -> Option<usize> {
        word.windows(2).rposition(|p| is_redex(p[0], p[1]))
    }
}

/// Reduction strategies keyed by name.
pub struct StrategyRegistry {
    entries: Vec<Box<dyn ReductionStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { entries: Vec::new() }
    }

    /// Replaces any strategy already registered under the same name.
    pub fn register(&mut self, strategy: Box<dyn ReductionStrategy>) {
        self.entries.retain(|s| s.name() != strategy.name());
        self.entries.push(strategy);
    }

    pub fn get(&self, name: &str) -> Option<&dyn ReductionStrategy> {
        self.entries.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = StrategyRegistry::empty();
        r.register(Box::new(Leftmost));
        r.register(Box::new(Rightmost));
        r
    }
}

/// `(#x, #z, inversions)`; every rewrite strictly decreases it lexicographically.
pub fn termination_measure(word: &[Letter]) -> (usize, usize, usize) {
    let count = |l| word.iter().filter(|&&m| m == l).count();
    let mut inversions = 0;
    let (mut seen_z, mut seen_x) = (0, 0);
    for &l in word {
        match l {
            W => inversions += seen_z + seen_x,
            Z => {
                inversions += seen_x;
                seen_z += 1;
            }
            _ => seen_x += 1,
        }
    }
    (count(X), count(Z), inversions)
}

/// The result of rewriting the redex at `pos`; at most two terms.
pub fn rewrite_at(word: &[Letter], pos: usize) -> Vec<(Word, CycNum)> {
    let splice = |mid: &[Letter]| {
        let mut v = Vec::with_capacity(word.len());
        v.extend_from_slice(&word[..pos]);
        v.extend_from_slice(mid);
        v.extend_from_slice(&word[pos + 2..]);
        Word(v)
    };
    let out = match (word[pos], word[pos + 1]) {
        (Z, W) => vec![(splice(&[W, Z]), zeta_pow(1))],
        (X, W) => vec![(splice(&[W, X]), -zeta_pow(2)), (splice(&[Z]), CycNum::one())],
        (X, Z) => vec![(splice(&[Z, X]), zeta_pow(1)), (splice(&[W, W]), -CycNum::one())],
        pair => panic!("no rule for pair {pair:?}"),
    };
    if cfg!(debug_assertions) {
        let before = termination_measure(word);
        for (w, _) in &out {
            debug_assert!(termination_measure(&w.0) < before, "measure did not decrease");
        }
    }
    out
}

fn expect_alphabet(p: &NcPoly, alphabet: Alphabet) -> Result<(), NcError> {
    if p.alphabet() == alphabet {
        Ok(())
    } else {
        Err(NcError::AlphabetMismatch(alphabet, p.alphabet()))
    }
}

/// Normal form using the default (leftmost) strategy.
pub fn normal_form(p: &NcPoly) -> Result<NcPoly, NcError> {
    normal_form_with(p, &Leftmost)
}

/// Rewrites in passes: each pass rewrites one selected redex in every reducible
/// word, then like terms are collected.
pub fn normal_form_with(p: &NcPoly, strategy: &dyn ReductionStrategy) -> Result<NcPoly, NcError> {
    expect_alphabet(p, Alphabet::Wzx)?;
    let mut current = p.clone();
    loop {
        let mut next = NcPoly::zero(Alphabet::Wzx);
        let mut changed = false;
        for (w, c) in current.into_terms() {
            match strategy.select(&w.0) {
                None => next.add_term(w, &c),
                Some(pos) => {
                    changed = true;
                    for (w2, c2) in rewrite_at(&w.0, pos) {
                        next.add_term(w2, &(&c * &c2));
                    }
                }
            }
        }
        if !changed {
            return Ok(next);
        }
        current = next;
    }
}

/// The substitution `x -> x`, `y -> w + x^2` from the `(x,y)` presentation.
pub fn xy_to_wzx_images() -> BTreeMap<&'static str, NcPoly> {
    let x = NcPoly::var(Alphabet::Wzx, "x").expect("x");
    let w = NcPoly::var(Alphabet::Wzx, "w").expect("w");
    let y = w.add(&x.pow(2)).expect("same alphabet");
    BTreeMap::from([("x", x), ("y", y)])
}

/// Converts a polynomial in `x, y` to its PBW normal form.
pub fn from_xy(p: &NcPoly) -> Result<NcPoly, NcError> {
    expect_alphabet(p, Alphabet::Xy)?;
    normal_form(&substitute(p, Alphabet::Wzx, &xy_to_wzx_images())?)
}

/// Checks `p*x - x*p` and `p*y - y*p` vanish in `R`.
pub fn commutes_with_generators(p: &NcPoly) -> Result<bool, NcError> {
    for g in ["x", "y"] {
        let g = NcPoly::var(Alphabet::Xy, g).expect("generator");
        let commutator = p.mul(&g)?.sub(&g.mul(p)?)?;
        if !from_xy(&commutator)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The ordered monomial `w^i z^j x^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl PbwMonomial {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        PbwMonomial { i, j, k }
    }

    pub fn degree(&self) -> u32 {
        2 * self.i + 3 * self.j + self.k
    }

    pub fn word(&self) -> Word {
        let mut v = vec![W; self.i as usize];
        v.extend(std::iter::repeat_n(Z, self.j as usize));
        v.extend(std::iter::repeat_n(X, self.k as usize));
        Word(v)
    }

    /// Recognises a word that is already ordered.
    pub fn from_word(word: &Word) -> Option<Self> {
        if word.0.windows(2).any(|p| is_redex(p[0], p[1])) {
            return None;
        }
        let count = |l| word.0.iter().filter(|&&m| m == l).count() as u32;
        Some(PbwMonomial::new(count(W), count(Z), count(X)))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word().render(Alphabet::Wzx))
    }
}

impl Serialize for PbwMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All `w^i z^j x^k` of degree `n`, sorted by `(i, j, k)`.
pub fn pbw_basis(n: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for i in 0..=n / 2 {
        for j in 0..=(n - 2 * i) / 3 {
            out.push(PbwMonomial::new(i, j, n - 2 * i - 3 * j));
        }
    }
    out
}

pub fn hilbert_coeffs(max_degree: u32) -> Vec<usize> {
    (0..=max_degree).map(|n| pbw_basis(n).len()).collect()
}

/// Coordinates of a normal-form polynomial in the PBW basis of degree `n`.
/// `None` if `p` is not a homogeneous normal form of that degree.
pub fn pbw_coordinates(p: &NcPoly, n: u32) -> Option<Vec<CycNum>> {
    let basis = pbw_basis(n);
    let mut coords = vec![CycNum::zero(); basis.len()];
    for (w, c) in p.terms() {
        let m = PbwMonomial::from_word(w)?;
        let idx = basis.binary_search(&m).ok()?;
        coords[idx] = c.clone();
    }
    Some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse;
    use proptest::prelude::*;

    fn xy(s: &str) -> NcPoly {
        parse(s, Alphabet::Xy).unwrap()
    }

    fn wzx(s: &str) -> NcPoly {
        parse(s, Alphabet::Wzx).unwrap()
    }

    fn nf(s: &str) -> NcPoly {
        normal_form(&wzx(s)).unwrap()
    }

    #[test]
    fn single_rules() {
        assert_eq!(nf("z*w"), wzx("zeta*w*z"));
        assert_eq!(nf("x*w"), wzx("-zeta^2*w*x + z"));
        assert_eq!(nf("x*z"), wzx("zeta*z*x - w^2"));
        assert_eq!(nf("x*w").to_string(), "(1 - zeta)*w*x + z");
    }

    #[test]
    fn z_definition_is_consistent() {
        assert_eq!(nf("x*w + zeta^2*w*x"), wzx("z"));
        let z_from_xy = from_xy(&xy("x*y + zeta^2*y*x - zeta*x^3")).unwrap();
        assert_eq!(z_from_xy, wzx("z"));
    }

    #[test]
    fn defining_relations_vanish() {
        assert!(from_xy(&xy("x^5 - y*x*y")).unwrap().is_zero());
        assert!(from_xy(&xy("y^2 - x*y*x")).unwrap().is_zero());
        assert!(from_xy(&xy("x^6 - y^3")).unwrap().is_zero());
    }

    #[test]
    fn proof_chain_in_pbw_alphabet() {
        let big_y = "(w + x^2)";
        assert!(nf(&format!("{big_y}*x*{big_y} - x^5")).is_zero());
        assert!(nf(&format!("{big_y}^2 - x*{big_y}*x")).is_zero());
        assert_eq!(nf("x*w*x - x^2*w"), wzx("w^2 + w*x^2"));
    }

    #[test]
    fn centrality() {
        assert!(commutes_with_generators(&xy("x^6")).unwrap());
        assert!(commutes_with_generators(&xy("1")).unwrap());
        assert!(!commutes_with_generators(&xy("x")).unwrap());
        assert!(!from_xy(&xy("x*y - y*x")).unwrap().is_zero());
    }

    #[test]
    fn alphabet_checks() {
        assert!(matches!(normal_form(&xy("x")), Err(NcError::AlphabetMismatch(..))));
        assert!(matches!(from_xy(&wzx("x")), Err(NcError::AlphabetMismatch(..))));
    }

    /// Independent count of (i, j, k) with 2i + 3j + k = n.
    fn brute_count(n: u32) -> usize {
        let mut c = 0;
        for i in 0..=n {
            for j in 0..=n {
                for k in 0..=n {
                    if 2 * i + 3 * j + k == n {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn basis_examples() {
        assert_eq!(pbw_basis(0), vec![PbwMonomial::new(0, 0, 0)]);
        assert_eq!(pbw_basis(6).len(), 7);
        assert_eq!(pbw_basis(12).len(), 19);
        assert_eq!(hilbert_coeffs(6), vec![1, 1, 2, 3, 4, 5, 7]);
        assert_eq!(hilbert_coeffs(0), vec![1]);
        assert_eq!(hilbert_coeffs(9)[9], 12);
        for n in 0..25 {
            assert_eq!(pbw_basis(n).len(), brute_count(n));
            assert!(pbw_basis(n).windows(2).all(|p| p[0] < p[1]));
            assert!(pbw_basis(n).iter().all(|m| m.degree() == n));
        }
        let h = hilbert_coeffs(40);
        for n in 0..35 {
            assert_eq!(h[n + 6], h[n] + n + 6);
        }
    }

    #[test]
    fn pbw_rendering() {
        assert_eq!(PbwMonomial::new(0, 0, 0).to_string(), "1");
        assert_eq!(PbwMonomial::new(2, 0, 1).to_string(), "w^2*x");
        assert_eq!(PbwMonomial::new(1, 1, 3).to_string(), "w*z*x^3");
    }

    #[test]
    fn measure_decreases_for_every_rule() {
        for pair in [[Z, W], [X, W], [X, Z]] {
            for prefix in [vec![], vec![X], vec![W, Z]] {
                let mut word = prefix.clone();
                word.extend_from_slice(&pair);
                word.push(X);
                let before = termination_measure(&word);
                for (w, _) in rewrite_at(&word, prefix.len()) {
                    assert!(termination_measure(&w.0) < before);
                }
            }
        }
    }

    #[test]
    fn registry_lookup() {
        let reg = StrategyRegistry::default();
        assert_eq!(reg.names(), vec!["leftmost", "rightmost"]);
        assert!(reg.get("leftmost").is_some());
        assert!(reg.get("outermost").is_none());
    }

    fn arb_wzx(max_len: usize) -> impl Strategy<Value = NcPoly> {
        let coeff = (-3i64..=3, -3i64..=3).prop_map(|(p, q)| CycNum::from_ints(p, q));
        prop::collection::vec((prop::collection::vec(0u8..3, 0..max_len), coeff), 1..4).prop_map(
            |terms| NcPoly::from_terms(Alphabet::Wzx, terms.into_iter().map(|(w, c)| (Word(w), c))),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn strategies_agree(p in arb_wzx(7)) {
            let left = normal_form_with(&p, &Leftmost).unwrap();
            let right = normal_form_with(&p, &Rightmost).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn idempotent(p in arb_wzx(7)) {
            let once = normal_form(&p).unwrap();
            prop_assert!(once.terms().all(|(w, _)| PbwMonomial::from_word(w).is_some()));
            prop_assert_eq!(normal_form(&once).unwrap(), once);
        }

        #[test]
        fn congruence(p in arb_wzx(5), q in arb_wzx(5)) {
            let direct = normal_form(&p.mul(&q).unwrap()).unwrap();
            let staged = normal_form(&normal_form(&p).unwrap().mul(&normal_form(&q).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(direct, staged);
        }

        #[test]
        fn homogeneous_stays_homogeneous(word in prop::collection::vec(0u8..3, 0..8)) {
            let p = NcPoly::word(Alphabet::Wzx, Word(word.clone()));
            let d = Word(word).degree(Alphabet::Wzx);
            let out = normal_form(&p).unwrap();
            prop_assert!(out.terms().all(|(w, _)| w.degree(Alphabet::Wzx) == d));
        }
    }
}
