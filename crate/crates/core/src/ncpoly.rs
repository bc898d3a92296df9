//! Noncommutative polynomials over `Q(zeta)` on a weighted, ordered alphabet,
//! together with the expression parser used by the CLI.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' int)?
//! atom   := variable | rational | 'zeta' | '(' expr ')'
//! ```
//!
//! `*` is mandatory and never commutes its operands.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::{CycNum, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos} for alphabet {alphabet}")]
    UnknownVariable {
        name: String,
        pos: usize,
        alphabet: Alphabet,
    },
    #[error("no image given for letter `{0}`")]
    MissingImage(String),
    #[error("unknown alphabet `{0}` (expected xy, wzx or cox)")]
    UnknownAlphabet(String),
}

/// The alphabets in use. Letter order is the declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Generators `x` (degree 1) and `y` (degree 2).
    Xy,
    /// PBW generators `w` (2), `z` (3), `x` (1), ordered `w < z < x`.
    Wzx,
    /// Cox variables, weighted by their first Picard coordinate.
    Cox,
    /// No letters; constants of `Q(zeta)` only.
    Constants,
}

impl Alphabet {
    pub fn letters(self) -> &'static [&'static str] {
        match self {
            Alphabet::Xy => &["x", "y"],
            Alphabet::Wzx => &["w", "z", "x"],
            Alphabet::Cox => &crate::cox::VAR_NAMES,
            Alphabet::Constants => &[],
        }
    }

    pub fn weights(self) -> &'static [u32] {
        match self {
            Alphabet::Xy => &[1, 2],
            Alphabet::Wzx => &[2, 3, 1],
            Alphabet::Cox => &[1, 1, 1, 0, 0, 0],
            Alphabet::Constants => &[],
        }
    }

    pub fn letter(self, name: &str) -> Option<Letter> {
        self.letters().iter().position(|&l| l == name).map(|i| i as Letter)
    }

    pub fn name(self, letter: Letter) -> &'static str {
        self.letters()[letter as usize]
    }

    pub fn weight(self, letter: Letter) -> u32 {
        self.weights()[letter as usize]
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Xy => "xy",
            Alphabet::Wzx => "wzx",
            Alphabet::Cox => "cox",
            Alphabet::Constants => "const",
        })
    }
}

impl FromStr for Alphabet {
    type Err = NcError;
    fn from_str(s: &str) -> Result<Self, NcError> {
        match s {
            "xy" => Ok(Alphabet::Xy),
            "wzx" => Ok(Alphabet::Wzx),
            "cox" => Ok(Alphabet::Cox),
            "const" => Ok(Alphabet::Constants),
            _ => Err(NcError::UnknownAlphabet(s.to_string())),
        }
    }
}

/// Index of a letter within its alphabet.
pub type Letter = u8;

/// A word is a plain letter sequence; its alphabet is carried by the polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn degree(&self, alphabet: Alphabet) -> u32 {
        self.0.iter().map(|&l| alphabet.weight(l)).sum()
    }

    /// Renders with runs collapsed into powers, e.g. `x^2*y*x`; `1` when empty.
    pub fn render(&self, alphabet: Alphabet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let run = self.0[i..].iter().take_while(|&&m| m == l).count();
            let name = alphabet.name(l);
            parts.push(if run == 1 { name.to_string() } else { format!("{name}^{run}") });
            i += run;
        }
        parts.join("*")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, CycNum>,
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NcPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::constant(alphabet, CycNum::one())
    }

    pub fn constant(alphabet: Alphabet, c: CycNum) -> Self {
        Self::term(alphabet, Word::empty(), c)
    }

    pub fn term(alphabet: Alphabet, word: Word, c: CycNum) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, &c);
        p
    }

    pub fn word(alphabet: Alphabet, word: Word) -> Self {
        Self::term(alphabet, word, CycNum::one())
    }

    /// The single-letter polynomial for `name`.
    pub fn var(alphabet: Alphabet, name: &str) -> Option<Self> {
        alphabet.letter(name).map(|l| Self::word(alphabet, Word(vec![l])))
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, CycNum)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycNum)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, CycNum> {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> CycNum {
        self.terms.get(w).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn constant_term(&self) -> CycNum {
        self.coefficient(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn check_alphabet(&self, other: &NcPoly) -> Result<(), NcError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(NcError::AlphabetMismatch(self.alphabet, other.alphabet))
        }
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly, NcError> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly, NcError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-CycNum::one())
    }

    pub fn scale(&self, c: &CycNum) -> NcPoly {
        NcPoly::from_terms(self.alphabet, self.terms().map(|(w, x)| (w.clone(), c * x)))
    }

    /// Free-algebra product: bilinear extension of concatenation.
    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly, NcError> {
        self.check_alphabet(other)?;
        let mut out = NcPoly::zero(self.alphabet);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> NcPoly {
        let mut acc = NcPoly::one(self.alphabet);
        for _ in 0..e {
            acc = acc.mul(self).expect("same alphabet");
        }
        acc
    }

    /// Weighted degrees of the terms, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<_> = self.terms.keys().map(|w| w.degree(self.alphabet)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn nc_mul(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, NcError> {
    p.mul(q)
}

/// Sum of the terms of weighted degree exactly `n`.
pub fn graded_component(p: &NcPoly, n: u32) -> NcPoly {
    NcPoly::from_terms(
        p.alphabet,
        p.terms()
            .filter(|(w, _)| w.degree(p.alphabet) == n)
            .map(|(w, c)| (w.clone(), c.clone())),
    )
}

/// Applies the algebra homomorphism sending each letter (by name) to its image.
/// All images must live in `target`.
pub fn substitute(
    p: &NcPoly,
    target: Alphabet,
    images: &BTreeMap<&str, NcPoly>,
) -> Result<NcPoly, NcError> {
    let mut table: Vec<Option<&NcPoly>> = vec![None; p.alphabet.letters().len()];
    for (name, image) in images {
        if image.alphabet != target {
            return Err(NcError::AlphabetMismatch(target, image.alphabet));
        }
        if let Some(l) = p.alphabet.letter(name) {
            table[l as usize] = Some(image);
        }
    }
    let mut out = NcPoly::zero(target);
    for (w, c) in p.terms() {
        let mut acc = NcPoly::constant(target, c.clone());
        for &l in w.letters() {
            let image = table[l as usize]
                .ok_or_else(|| NcError::MissingImage(p.alphabet.name(l).to_string()))?;
            acc = acc.mul(image)?;
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Writes a coefficient followed by a non-empty word.
fn write_scaled_word(f: &mut fmt::Formatter<'_>, c: &CycNum, word: &str) -> fmt::Result {
    if c.is_one() {
        f.write_str(word)
    } else if c.is_monomial() {
        write!(f, "{c}*{word}")
    } else {
        write!(f, "({c})*{word}")
    }
}

/// Canonical rendering: terms ordered by weighted degree, then by letter order.
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (w.degree(self.alphabet), *w));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative_like();
            let shown = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                if shown.is_monomial() || (i == 0 && !negative) {
                    write!(f, "{shown}")?;
                } else {
                    write!(f, "({shown})")?;
                }
            } else {
                write_scaled_word(f, &shown, &w.render(self.alphabet))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Num(BigInt, Option<BigInt>),
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, NcError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                let digits = |i: &mut usize| {
                    let s = *i;
                    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                        *i += 1;
                    }
                    text[s..*i].parse::<BigInt>().expect("ascii digits")
                };
                let numer = digits(&mut i);
                let mut denom = None;
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    denom = Some(digits(&mut i));
                }
                out.push((start, Tok::Num(numer, denom)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(NcError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alphabet: Alphabet,
    _text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, NcError> {
        Err(NcError::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<NcPoly, NcError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, NcError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPoly, NcError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Num(n, None)) => {
                let e: u32 = match n.try_into() {
                    Ok(e) => e,
                    Err(_) => return self.error("exponent too large"),
                };
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<NcPoly, NcError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n, d)) => {
                self.pos += 1;
                let d = d.unwrap_or_else(BigInt::one);
                if d.is_zero() {
                    return Err(NcError::Syntax { pos: at, msg: "zero denominator".into() });
                }
                Ok(NcPoly::constant(self.alphabet, CycNum::from(Rational::new(n, d))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "zeta" {
                    return Ok(NcPoly::constant(self.alphabet, CycNum::zeta()));
                }
                NcPoly::var(self.alphabet, &name).ok_or(NcError::UnknownVariable {
                    name,
                    pos: at,
                    alphabet: self.alphabet,
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.error("expected a variable, number, `zeta` or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial over `alphabet`.
pub fn parse(text: &str, alphabet: Alphabet) -> Result<NcPoly, NcError> {
    let toks = tokenize(text)?;
    let mut parser = Parser { toks, pos: 0, end: text.len(), alphabet, _text: text };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::zeta_pow;
    use proptest::prelude::*;

    fn xy(s: &str) -> NcPoly {
        parse(s, Alphabet::Xy).unwrap()
    }

    fn wzx(s: &str) -> NcPoly {
        parse(s, Alphabet::Wzx).unwrap()
    }

    fn word(a: Alphabet, names: &str) -> Word {
        Word(names.chars().map(|c| a.letter(&c.to_string()).unwrap()).collect())
    }

    #[test]
    fn multiplication_examples() {
        let x = NcPoly::var(Alphabet::Xy, "x").unwrap();
        let y = NcPoly::var(Alphabet::Xy, "y").unwrap();
        let xy_ = x.mul(&y).unwrap();
        assert_eq!(xy_, NcPoly::word(Alphabet::Xy, word(Alphabet::Xy, "xy")));
        assert_eq!(x.add(&y).unwrap().mul(&x).unwrap(), xy("x^2 + y*x"));
        let zx = x.scale(&CycNum::zeta());
        assert_eq!(
            zx.mul(&zx).unwrap(),
            NcPoly::term(Alphabet::Xy, word(Alphabet::Xy, "xx"), CycNum::from_ints(-1, 1))
        );
        let w = NcPoly::var(Alphabet::Wzx, "w").unwrap();
        assert!(matches!(x.mul(&w), Err(NcError::AlphabetMismatch(..))));
    }

    #[test]
    fn parse_examples() {
        let r = xy("x^5 - y*x*y");
        assert_eq!(r.len(), 2);
        assert_eq!(r.coefficient(&word(Alphabet::Xy, "xxxxx")), CycNum::one());
        assert_eq!(r.coefficient(&word(Alphabet::Xy, "yxy")), -CycNum::one());
        assert!(xy("0").is_zero());
        let p = wzx("zeta^2*w*x");
        assert_eq!(
            p,
            NcPoly::term(Alphabet::Wzx, word(Alphabet::Wzx, "wx"), CycNum::from_ints(-1, 1))
        );
    }

    #[test]
    fn parse_is_noncommutative_and_respects_precedence() {
        assert_ne!(xy("x*y"), xy("y*x"));
        assert_eq!(xy("x*y^2"), xy("x*y*y"));
        assert_eq!(xy("(x*y)^2"), xy("x*y*x*y"));
        assert_eq!(xy("-x + 2*y - 1/2"), xy("2*y - x - 1/2"));
        assert_eq!(xy("(x + y)*(x - y)"), xy("x^2 - x*y + y*x - y^2"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("x*", Alphabet::Xy), Err(NcError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("x y", Alphabet::Xy), Err(NcError::Syntax { pos: 2, .. })));
        assert!(matches!(
            parse("xy", Alphabet::Xy),
            Err(NcError::UnknownVariable { pos: 0, .. })
        ));
        assert!(matches!(
            parse("x + w", Alphabet::Xy),
            Err(NcError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(parse("x^-1", Alphabet::Xy), Err(NcError::Syntax { .. })));
        assert!(matches!(parse("(x", Alphabet::Xy), Err(NcError::Syntax { .. })));
        assert!(matches!(parse("1/0", Alphabet::Xy), Err(NcError::Syntax { .. })));
        assert!(matches!(parse("x $ y", Alphabet::Xy), Err(NcError::Syntax { pos: 2, .. })));
    }

    #[test]
    fn rendering() {
        assert_eq!(xy("y*x*y - x^5").to_string(), "-x^5 + y*x*y");
        assert_eq!(wzx("z + x*w - zeta*x*w").to_string(), "z + (1 - zeta)*x*w");
        assert_eq!(wzx("w*x*zeta^2").to_string(), "(-1 + zeta)*w*x");
        assert_eq!(xy("1").to_string(), "1");
        assert_eq!(xy("-zeta").to_string(), "-zeta");
        assert_eq!(xy("x - 1 - zeta").to_string(), "-(1 + zeta) + x");
        assert_eq!(xy("3/2*x^2 - y").to_string(), "3/2*x^2 - y");
    }

    #[test]
    fn substitution() {
        let y_image = wzx("w + x^2");
        let x_image = wzx("x");
        let images = BTreeMap::from([("x", x_image.clone()), ("y", y_image.clone())]);
        let y2 = substitute(&xy("y^2"), Alphabet::Wzx, &images).unwrap();
        assert_eq!(y2, wzx("w^2 + w*x^2 + x^2*w + x^4"));
        let only_x = BTreeMap::from([("x", x_image.clone())]);
        assert_eq!(substitute(&xy("x"), Alphabet::Wzx, &only_x).unwrap(), x_image);
        assert_eq!(substitute(&xy("x*y"), Alphabet::Wzx, &images).unwrap(), wzx("x*w + x^3"));
        assert_eq!(
            substitute(&xy("y"), Alphabet::Wzx, &only_x),
            Err(NcError::MissingImage("y".into()))
        );
    }

    #[test]
    fn graded_components() {
        assert_eq!(graded_component(&xy("x + y"), 2), xy("y"));
        let r = xy("x^5 - y*x*y");
        assert_eq!(graded_component(&r, 5), r);
        assert_eq!(graded_component(&wzx("w + x^2"), 2), wzx("w + x^2"));
        assert_eq!(xy("x^5 - y*x*y").degrees(), vec![5]);
        assert_eq!(xy("y^2 - x*y*x").degrees(), vec![4]);
        assert!(!xy("x + y").is_homogeneous());
    }

    #[test]
    fn zeta_powers_parse() {
        for k in 0..12u32 {
            let p = parse(&format!("zeta^{k}"), Alphabet::Constants).unwrap();
            assert_eq!(p.constant_term(), zeta_pow(k as i64));
        }
    }

    fn arb_coeff() -> impl Strategy<Value = CycNum> {
        (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(p, q, d)| {
            CycNum::new(crate::cyclotomic::rat(p, d), crate::cyclotomic::rat(q, 1))
        })
    }

    fn arb_poly(alphabet: Alphabet) -> impl Strategy<Value = NcPoly> {
        let n = alphabet.letters().len() as u8;
        prop::collection::vec((prop::collection::vec(0..n, 0..4), arb_coeff()), 0..4).prop_map(
            move |terms| NcPoly::from_terms(alphabet, terms.into_iter().map(|(w, c)| (Word(w), c))),
        )
    }

    proptest! {
        #[test]
        fn mul_associative(p in arb_poly(Alphabet::Xy), q in arb_poly(Alphabet::Xy), r in arb_poly(Alphabet::Xy)) {
            prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        }

        #[test]
        fn mul_distributes(p in arb_poly(Alphabet::Wzx), q in arb_poly(Alphabet::Wzx), r in arb_poly(Alphabet::Wzx)) {
            prop_assert_eq!(
                p.mul(&q.add(&r).unwrap()).unwrap(),
                p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
            );
        }

        #[test]
        fn render_parse_roundtrip(p in arb_poly(Alphabet::Wzx)) {
            prop_assert_eq!(parse(&p.to_string(), Alphabet::Wzx).unwrap(), p);
        }

        #[test]
        fn substitution_is_homomorphism(p in arb_poly(Alphabet::Xy), q in arb_poly(Alphabet::Xy)) {
            let images = BTreeMap::from([("x", wzx("x - zeta*w")), ("y", wzx("w + x^2"))]);
            let lhs = substitute(&p.mul(&q).unwrap(), Alphabet::Wzx, &images).unwrap();
            let rhs = substitute(&p, Alphabet::Wzx, &images).unwrap()
                .mul(&substitute(&q, Alphabet::Wzx, &images).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
