//! Words over small integer alphabets, uniform morphisms, and power-free
//! word generation.
//!
//! Symbols are `u8` values rendered as the digits `0`-`9` in text form.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::rational::{format_rational, ratio, Rational};
use crate::repetitions::suffix_violation;

/// Extra symbols searched past the requested length when generating the
/// least extendable power-free word.
pub const LOOKAHEAD_MARGIN: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: u8) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= alphabet_size) {
            return domain(format!(
                "symbol {bad} out of range for alphabet of size {alphabet_size}"
            ));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    pub fn empty(alphabet_size: u8) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size,
        }
    }

    /// Parses a digit string such as `"0102"`.
    pub fn parse(text: &str, alphabet_size: u8) -> Result<Self> {
        let symbols = parse_digits(text)?;
        Word::new(symbols, alphabet_size)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn reverse(&self) -> Word {
        Word {
            symbols: self.symbols.iter().rev().copied().collect(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet_size != other.alphabet_size {
            return domain("cannot concatenate words over different alphabets");
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word {
            symbols,
            alphabet_size: self.alphabet_size,
        })
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            symbols: self.symbols[..len.min(self.len())].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    /// All distinct factors of the given length.
    pub fn factors(&self, len: usize) -> BTreeSet<Word> {
        factors(self, len)
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_digits(&self.symbols))
    }
}

pub fn parse_digits(text: &str) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| Error::Parse(format!("invalid symbol `{c}` in word")))
        })
        .collect()
}

pub fn render_digits(symbols: &[u8]) -> String {
    symbols
        .iter()
        .map(|&s| char::from_digit(u32::from(s), 36).unwrap_or('?'))
        .collect()
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

pub fn factors(w: &Word, len: usize) -> BTreeSet<Word> {
    if len > w.len() {
        return BTreeSet::new();
    }
    (0..=w.len() - len)
        .map(|i| Word {
            symbols: w.symbols[i..i + len].to_vec(),
            alphabet_size: w.alphabet_size,
        })
        .collect()
}

/// A `width`-uniform morphism: every source symbol maps to an image of the same length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Word>,
    width: usize,
}

impl Morphism {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        if images.len() > usize::from(u8::MAX) {
            return domain("source alphabet too large");
        }
        let width = images.first().map_or(0, Word::len);
        if images.iter().any(|w| w.len() != width) {
            return domain("morphism images must all have the same length");
        }
        if let Some(first) = images.first() {
            if images
                .iter()
                .any(|w| w.alphabet_size() != first.alphabet_size())
            {
                return domain("morphism images must share one alphabet");
            }
        }
        Ok(Morphism { images, width })
    }

    /// Builds a morphism from digit-string images over an inferred target alphabet.
    pub fn from_digit_images(images: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<u8>> = images
            .iter()
            .map(|s| parse_digits(s))
            .collect::<Result<_>>()?;
        let alphabet = parsed.iter().flatten().copied().max().map_or(1, |m| m + 1);
        Morphism::new(
            parsed
                .into_iter()
                .map(|s| Word::new(s, alphabet))
                .collect::<Result<_>>()?,
        )
    }

    /// The 12-uniform ternary morphism used for period-2 tree colorings.
    pub fn g2() -> Self {
        Morphism::from_digit_images(&G2_IMAGES).expect("g2 table is well formed")
    }

    /// The 21-uniform binary morphism used for period-5 tree colorings.
    pub fn g5() -> Self {
        Morphism::from_digit_images(&G5_IMAGES).expect("g5 table is well formed")
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "g2" => Some(Morphism::g2()),
            "g5" => Some(Morphism::g5()),
            _ => None,
        }
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, symbol: u8) -> &[u8] {
        self.images[usize::from(symbol)].symbols()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn source_alphabet_size(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn target_alphabet_size(&self) -> u8 {
        self.images.first().map_or(1, Word::alphabet_size)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let symbols = self.apply_symbols(w.symbols())?;
        Word::new(symbols, self.target_alphabet_size())
    }

    pub fn apply_symbols(&self, w: &[u8]) -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(w.len() * self.width);
        for &s in w {
            match self.images.get(usize::from(s)) {
                Some(img) => out.extend_from_slice(img.symbols()),
                None => {
                    return domain(format!(
                        "symbol {s} outside the morphism's source alphabet of size {}",
                        self.images.len()
                    ))
                }
            }
        }
        Ok(out)
    }

    /// Text form: one `symbol -> image` line per source symbol.
    pub fn to_text(&self) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(s, img)| format!("{s} -> {img}\n"))
            .collect()
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut images: Vec<(usize, String)> = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected `symbol -> image`, got `{line}`")))?;
            let symbol: usize = lhs
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid source symbol `{}`", lhs.trim())))?;
            images.push((symbol, rhs.trim().to_string()));
        }
        images.sort();
        if images.iter().enumerate().any(|(i, (s, _))| i != *s) {
            return Err(Error::Parse(
                "source symbols must be exactly 0..n, each once".into(),
            ));
        }
        let refs: Vec<&str> = images.iter().map(|(_, img)| img.as_str()).collect();
        Morphism::from_digit_images(&refs)
    }
}

pub const G2_IMAGES: [&str; 3] = ["011220012201", "122001120012", "200112201120"];

pub const G5_IMAGES: [&str; 3] = [
    "001101110001010110010",
    "001101110001001110101",
    "001101110001001101010",
];

pub fn apply_morphism(m: &Morphism, w: &Word) -> Result<Word> {
    m.apply(w)
}

/// `(β⁺, n)`-freeness when `strict`; `(β, n)`-freeness otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerFreeSpec {
    #[serde(with = "rational_text")]
    pub exponent_bound: Rational,
    pub strict: bool,
    pub min_period: usize,
}

impl PowerFreeSpec {
    pub fn new(exponent_bound: Rational, strict: bool, min_period: usize) -> Result<Self> {
        if exponent_bound < ratio(1, 1) {
            return domain("exponent bound must be at least 1");
        }
        if min_period == 0 {
            return domain("minimum period must be at least 1");
        }
        Ok(PowerFreeSpec {
            exponent_bound,
            strict,
            min_period,
        })
    }

    /// `(7/4)⁺`-free: the language the certificates draw source words from.
    pub fn dejean_ternary() -> Self {
        PowerFreeSpec {
            exponent_bound: ratio(7, 4),
            strict: true,
            min_period: 1,
        }
    }

    /// Whether a factor of `length` with period `period` is forbidden.
    pub fn forbids(&self, length: usize, period: usize) -> bool {
        if period < self.min_period {
            return false;
        }
        let lhs = i128::from(*self.exponent_bound.denom()) * length as i128;
        let rhs = i128::from(*self.exponent_bound.numer()) * period as i128;
        if self.strict {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    }
}

impl fmt::Display for PowerFreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}{}, {})",
            format_rational(&self.exponent_bound),
            if self.strict { "+" } else { "" },
            self.min_period
        )
    }
}

pub(crate) mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Depth-first walk over every word of length `<= max_len` over `alphabet`
/// that avoids the repetitions forbidden by `spec`, in lexicographic
/// pre-order. The empty word is visited first.
///
/// Power-freeness is factor-closed, so pruning at the first forbidden suffix
/// loses nothing. Returns `ControlFlow::Break` if the visitor stopped the walk.
pub fn walk_powerfree<B>(
    alphabet: u8,
    spec: &PowerFreeSpec,
    max_len: usize,
    mut visit: impl FnMut(&[u8]) -> ControlFlow<B, bool>,
) -> ControlFlow<B> {
    let mut word: Vec<u8> = Vec::with_capacity(max_len);
    match visit(&word) {
        ControlFlow::Break(b) => return ControlFlow::Break(b),
        ControlFlow::Continue(false) => return ControlFlow::Continue(()),
        ControlFlow::Continue(true) => {}
    }
    if max_len == 0 || alphabet == 0 {
        return ControlFlow::Continue(());
    }
    // `next[d]` is the next symbol to try at depth `d`.
    let mut next: Vec<u8> = vec![0];
    while let Some(&candidate) = next.last() {
        let depth = next.len() - 1;
        if candidate >= alphabet {
            next.pop();
            continue;
        }
        *next.last_mut().unwrap() += 1;
        word.truncate(depth);
        word.push(candidate);
        if suffix_violation(&word, spec).is_some() {
            continue;
        }
        match visit(&word) {
            ControlFlow::Break(b) => return ControlFlow::Break(b),
            ControlFlow::Continue(true) if word.len() < max_len => next.push(0),
            ControlFlow::Continue(_) => {}
        }
    }
    ControlFlow::Continue(())
}

/// The lexicographically least word of `length` avoiding `spec` that extends
/// by `margin` further symbols.
pub fn generate_powerfree(
    alphabet: u8,
    spec: &PowerFreeSpec,
    length: usize,
    margin: usize,
) -> Option<Word> {
    let target = length + margin;
    let found = walk_powerfree(alphabet, spec, target, |w| {
        if w.len() == target {
            ControlFlow::Break(w[..length].to_vec())
        } else {
            ControlFlow::Continue(true)
        }
    });
    match found {
        ControlFlow::Break(symbols) => Some(Word {
            symbols,
            alphabet_size: alphabet,
        }),
        ControlFlow::Continue(()) => None,
    }
}

/// A deterministic prefix of an infinite `(7/4)⁺`-free ternary word.
pub fn generate_powerfree_ternary(length: usize) -> Word {
    generate_powerfree(
        3,
        &PowerFreeSpec::dejean_ternary(),
        length,
        LOOKAHEAD_MARGIN,
    )
    .expect("(7/4)+-free ternary words exist at every length")
}

/// Every word of exactly `length` over `alphabet` avoiding `spec`.
pub fn enumerate_powerfree(alphabet: u8, spec: &PowerFreeSpec, length: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let _ = walk_powerfree::<()>(alphabet, spec, length, |w| {
        if w.len() == length {
            out.insert(Word {
                symbols: w.to_vec(),
                alphabet_size: alphabet,
            });
        }
        ControlFlow::Continue(true)
    });
    out
}

pub fn enumerate_powerfree_ternary(length: usize) -> BTreeSet<Word> {
    enumerate_powerfree(3, &PowerFreeSpec::dejean_ternary(), length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetitions::max_exponent;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        Word::parse(text, 3).unwrap()
    }

    #[test]
    fn morphism_tables() {
        let g2 = Morphism::g2();
        assert_eq!(g2.width(), 12);
        assert_eq!(g2.target_alphabet_size(), 3);
        let g5 = Morphism::g5();
        assert_eq!(g5.width(), 21);
        assert_eq!(g5.target_alphabet_size(), 2);
        assert_eq!(g5.images()[1].to_string(), "001101110001001110101");
    }

    #[test]
    fn apply_examples() {
        let g2 = Morphism::g2();
        assert_eq!(g2.apply(&w("0")).unwrap().to_string(), "011220012201");
        assert_eq!(g2.apply(&w("")).unwrap().to_string(), "");
        assert_eq!(
            g2.apply(&w("01")).unwrap().to_string(),
            "011220012201122001120012"
        );
    }

    #[test]
    fn apply_rejects_foreign_symbols() {
        let g5 = Morphism::g5();
        let bad = Word::parse("03", 4).unwrap();
        assert!(matches!(g5.apply(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn word_rejects_out_of_range_symbols() {
        assert!(Word::parse("0120", 2).is_err());
        assert!(Word::parse("01a", 3).is_err());
    }

    #[test]
    fn morphism_text_round_trip() {
        for m in [Morphism::g2(), Morphism::g5()] {
            assert_eq!(Morphism::parse_text(&m.to_text()).unwrap(), m);
        }
        assert!(Morphism::parse_text("0 -> 01\n1 -> 0").is_err());
        assert!(Morphism::parse_text("0 -> 01\n2 -> 10").is_err());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("012").reverse().to_string(), "210");
        assert_eq!(w("").reverse().to_string(), "");
        assert_eq!(w("00110").reverse().to_string(), "01100");
    }

    #[test]
    fn factor_examples() {
        let set = |items: &[&str]| items.iter().map(|s| w(s)).collect::<BTreeSet<_>>();
        assert_eq!(factors(&w("0102"), 2), set(&["01", "10", "02"]));
        assert_eq!(factors(&w("0102"), 0), set(&[""]));
        assert_eq!(factors(&w("0011"), 3), set(&["001", "011"]));
    }

    #[test]
    fn generated_prefixes() {
        assert_eq!(generate_powerfree_ternary(0).to_string(), "");
        assert_eq!(generate_powerfree_ternary(1).to_string(), "0");
        assert_eq!(generate_powerfree_ternary(4).to_string(), "0102");
    }

    /// Least word of length 4 that extends to length 6, by brute force over all
    /// ternary words with a naive exponent test.
    #[test]
    fn generated_prefix_matches_brute_force() {
        fn free(s: &[u8]) -> bool {
            max_exponent(s, 1) <= ratio(7, 4)
        }
        let mut all6: Vec<Vec<u8>> = Vec::new();
        for code in 0..3usize.pow(6) {
            let mut x = code;
            let word: Vec<u8> = (0..6)
                .map(|_| {
                    let s = (x % 3) as u8;
                    x /= 3;
                    s
                })
                .rev()
                .collect();
            if free(&word) {
                all6.push(word);
            }
        }
        all6.sort();
        assert_eq!(all6[0][..4], [0, 1, 0, 2]);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_powerfree_ternary(1).len(), 3);
        assert_eq!(enumerate_powerfree_ternary(2).len(), 6);
        assert_eq!(enumerate_powerfree_ternary(3).len(), 12);
    }

    #[test]
    fn enumeration_matches_exhaustive_filter() {
        for len in 0..=9u32 {
            let brute: BTreeSet<Word> = (0..3usize.pow(len))
                .map(|code| {
                    let mut x = code;
                    let mut s = vec![0u8; len as usize];
                    for slot in s.iter_mut().rev() {
                        *slot = (x % 3) as u8;
                        x /= 3;
                    }
                    Word::new(s, 3).unwrap()
                })
                .filter(|w| max_exponent(w.symbols(), 1) <= ratio(7, 4))
                .collect();
            assert_eq!(
                enumerate_powerfree_ternary(len as usize),
                brute,
                "length {len}"
            );
        }
    }

    #[test]
    fn enumerated_words_are_factor_closed() {
        let spec = PowerFreeSpec::dejean_ternary();
        let shorter = enumerate_powerfree_ternary(9);
        for word in enumerate_powerfree_ternary(10) {
            assert!(shorter.contains(&word.prefix(9)));
            let tail = Word::new(word.symbols()[1..].to_vec(), 3).unwrap();
            assert!(shorter.contains(&tail));
            assert!(crate::repetitions::is_power_free(word.symbols(), &spec).is_pass());
        }
    }

    #[test]
    fn generation_is_prefix_stable() {
        let long = generate_powerfree_ternary(201);
        for len in [0, 1, 7, 50, 123, 200] {
            assert_eq!(generate_powerfree_ternary(len), long.prefix(len));
        }
    }

    proptest! {
        #[test]
        fn morphism_distributes_over_concatenation(
            u in proptest::collection::vec(0u8..3, 0..20),
            v in proptest::collection::vec(0u8..3, 0..20),
        ) {
            for m in [Morphism::g2(), Morphism::g5()] {
                let uw = Word::new(u.clone(), 3).unwrap();
                let vw = Word::new(v.clone(), 3).unwrap();
                let whole = m.apply(&uw.concat(&vw).unwrap()).unwrap();
                prop_assert_eq!(whole.len(), (u.len() + v.len()) * m.width());
                prop_assert_eq!(whole, m.apply(&uw).unwrap().concat(&m.apply(&vw).unwrap()).unwrap());
            }
        }

        #[test]
        fn reverse_is_an_involution(s in proptest::collection::vec(0u8..3, 0..40)) {
            let word = Word::new(s, 3).unwrap();
            prop_assert_eq!(word.reverse().reverse(), word);
        }
    }
}
