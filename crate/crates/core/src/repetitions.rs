//! Squares, exponents, power-freeness and directedness of finite words.
//!
//! A factor `w[i..i+len)` has period `p` when `w[j] == w[j+p]` for every
//! `j` in `i..i+len-p`. Its exponent with respect to `p` is `len / p`. A
//! repetition of period `p` is counted against `(β⁺, n)`-freeness whenever
//! `p >= n`, whether or not `p` is the factor's smallest period, so `000000`
//! contains a square of period 3.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, ratio, Rational};
use crate::words::PowerFreeSpec;

/// Outcome of a check: pass, or the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    Pass,
    Fail(T),
}

impl<T> Verdict<T> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failure(&self) -> Option<&T> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(t) => Some(t),
        }
    }
}

impl<T> From<Option<T>> for Verdict<T> {
    fn from(value: Option<T>) -> Self {
        value.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Repetition {
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

impl Repetition {
    pub fn exponent(&self) -> Rational {
        ratio(self.length as i64, self.period as i64)
    }

    pub fn square(start: usize, period: usize) -> Self {
        Repetition {
            start,
            length: 2 * period,
            period,
        }
    }

    /// Checks that `w[start..start+length)` really has this period.
    pub fn holds_in(&self, w: &[u8]) -> bool {
        self.period >= 1
            && self.period <= self.length
            && self.start + self.length <= w.len()
            && (self.start..self.start + self.length - self.period)
                .all(|j| w[j] == w[j + self.period])
    }
}

impl fmt::Display for Repetition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "start={} len={} period={} exp={}",
            self.start,
            self.length,
            self.period,
            format_rational(&self.exponent())
        )
    }
}

/// All squares `w[s..s+p) == w[s+p..s+2p)` with `min_period <= p <= max_period`,
/// sorted by `(start, period)`.
pub fn find_squares(w: &[u8], min_period: usize, max_period: usize) -> Vec<Repetition> {
    let n = w.len();
    let mut out = Vec::new();
    for p in min_period.max(1)..=max_period.min(n / 2) {
        let mut run = 0;
        for j in 0..n - p {
            if w[j] == w[j + p] {
                run += 1;
                if run >= p {
                    out.push(Repetition::square(j + 1 - p, p));
                }
            } else {
                run = 0;
            }
        }
    }
    out.sort_by_key(|r| (r.start, r.period));
    out
}

/// Maximal repetitions of period `p`: maximal runs of `w[j] == w[j+p]`,
/// each reported with its full length `run + p`. Runs of zero matches are
/// skipped.
fn maximal_runs(w: &[u8], p: usize) -> impl Iterator<Item = Repetition> + '_ {
    let n = w.len();
    let mut j = 0;
    std::iter::from_fn(move || {
        while j + p < n {
            if w[j] != w[j + p] {
                j += 1;
                continue;
            }
            let start = j;
            while j + p < n && w[j] == w[j + p] {
                j += 1;
            }
            return Some(Repetition {
                start,
                length: j - start + p,
                period: p,
            });
        }
        None
    })
}

/// Largest `len / p` over factors with a period `p >= min_period`; zero when
/// the word is shorter than `min_period`.
pub fn max_exponent(w: &[u8], min_period: usize) -> Rational {
    let n = w.len();
    let min_period = min_period.max(1);
    if n < min_period {
        return ratio(0, 1);
    }
    let mut best = ratio(1, 1);
    for p in min_period..=n {
        for rep in maximal_runs(w, p) {
            best = best.max(rep.exponent());
        }
    }
    best
}

/// The first forbidden repetition by `(start, period)`, reported as a maximal run.
pub fn is_power_free(w: &[u8], spec: &PowerFreeSpec) -> Verdict<Repetition> {
    let n = w.len();
    if n < spec.min_period {
        return Verdict::Pass;
    }
    if spec.forbids(spec.min_period, spec.min_period) {
        // Degenerate bound: every factor of length p already violates.
        return Verdict::Fail(Repetition {
            start: 0,
            length: spec.min_period,
            period: spec.min_period,
        });
    }
    let mut best: Option<Repetition> = None;
    for p in spec.min_period..=n {
        if !spec.forbids(n, p) {
            break;
        }
        if let Some(rep) = maximal_runs(w, p).find(|r| spec.forbids(r.length, r.period)) {
            if best.is_none_or(|b| (rep.start, rep.period) < (b.start, b.period)) {
                best = Some(rep);
            }
        }
    }
    best.into()
}

/// Longest suffix of `w` with period `p` (at least `min(p, |w|)` symbols).
pub fn periodic_suffix_len(w: &[u8], p: usize) -> usize {
    let n = w.len();
    if p >= n {
        return n;
    }
    let mut len = p;
    while len < n && w[n - 1 - len] == w[n - 1 - len + p] {
        len += 1;
    }
    len
}

/// A forbidden repetition that ends at the last symbol of `w`, if any.
///
/// Checking this after every appended symbol detects every forbidden factor of
/// a word built left to right.
pub fn suffix_violation(w: &[u8], spec: &PowerFreeSpec) -> Option<Repetition> {
    let n = w.len();
    for p in spec.min_period..=n {
        if !spec.forbids(n, p) {
            break;
        }
        let len = periodic_suffix_len(w, p);
        if spec.forbids(len, p) {
            return Some(Repetition {
                start: n - len,
                length: len,
                period: p,
            });
        }
    }
    None
}

/// A length-`d` factor whose reversal also occurs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectednessViolation {
    pub factor: Vec<u8>,
    pub position: usize,
    pub reverse_position: usize,
}

impl fmt::Display for DirectednessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rev: Vec<u8> = self.factor.iter().rev().copied().collect();
        write!(
            f,
            "factor={} at {} reversed={} at {}",
            crate::words::render_digits(&self.factor),
            self.position,
            crate::words::render_digits(&rev),
            self.reverse_position
        )
    }
}

/// `d`-directedness: no length-`d` factor occurs together with its reversal.
/// Palindromic factors violate it.
pub fn is_d_directed(w: &[u8], d: usize) -> Verdict<DirectednessViolation> {
    assert!(d >= 1, "directedness window must be positive");
    if w.len() < d {
        return Verdict::Pass;
    }
    let mut first_seen: HashMap<&[u8], usize> = HashMap::new();
    for (i, f) in w.windows(d).enumerate() {
        first_seen.entry(f).or_insert(i);
    }
    let mut rev = vec![0u8; d];
    for (i, f) in w.windows(d).enumerate() {
        rev.copy_from_slice(f);
        rev.reverse();
        if let Some(&j) = first_seen.get(rev.as_slice()) {
            return Verdict::Fail(DirectednessViolation {
                factor: f.to_vec(),
                position: i,
                reverse_position: j,
            });
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_digits, Morphism, Word};
    use proptest::prelude::*;

    fn d(s: &str) -> Vec<u8> {
        parse_digits(s).unwrap()
    }

    /// Triple loop straight from the definition.
    fn naive_squares(w: &[u8], lo: usize, hi: usize) -> Vec<Repetition> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            for p in lo..=hi {
                if start + 2 * p <= w.len() && (0..p).all(|t| w[start + t] == w[start + p + t]) {
                    out.push(Repetition::square(start, p));
                }
            }
        }
        out
    }

    fn naive_max_exponent(w: &[u8], min_period: usize) -> Rational {
        let mut best = ratio(0, 1);
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                for p in min_period..=j - i {
                    if (i..j - p).all(|t| w[t] == w[t + p]) {
                        best = best.max(ratio((j - i) as i64, p as i64));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            find_squares(&d("0101"), 1, 4),
            vec![Repetition::square(0, 2)]
        );
        assert!(find_squares(&d("011220012201"), 2, 10).is_empty());
        assert_eq!(find_squares(&d("00"), 1, 1), vec![Repetition::square(0, 1)]);
        assert_eq!(
            find_squares(&d("000000"), 3, 3),
            vec![Repetition::square(0, 3)]
        );
    }

    #[test]
    fn squares_match_naive_scan_exhaustively() {
        for len in 0..=10u32 {
            for code in 0..3usize.pow(len) {
                let mut x = code;
                let w: Vec<u8> = (0..len)
                    .map(|_| {
                        let s = (x % 3) as u8;
                        x /= 3;
                        s
                    })
                    .collect();
                for (lo, hi) in [(1, 5), (2, 3), (3, 5)] {
                    assert_eq!(find_squares(&w, lo, hi), naive_squares(&w, lo, hi));
                }
            }
        }
    }

    #[test]
    fn max_exponent_examples() {
        assert_eq!(max_exponent(&d("0110110"), 1), ratio(7, 3));
        assert_eq!(max_exponent(&d("01"), 1), ratio(1, 1));
        assert_eq!(max_exponent(&d("000"), 1), ratio(3, 1));
        assert_eq!(max_exponent(&d(""), 1), ratio(0, 1));
        // 0^6 has period 3 with exponent 2.
        assert_eq!(max_exponent(&d("000000"), 3), ratio(2, 1));
    }

    #[test]
    fn power_free_examples() {
        let g5 = Morphism::g5();
        let img = g5.image(0);
        let spec = PowerFreeSpec::new(ratio(83, 42), true, 5).unwrap();
        assert!(is_power_free(img, &spec).is_pass());

        let spec = PowerFreeSpec::new(ratio(19, 10), true, 2).unwrap();
        let v = is_power_free(&d("01010"), &spec);
        let rep = v.failure().copied().unwrap();
        assert_eq!((rep.period, rep.exponent()), (2, ratio(5, 2)));

        assert!(is_power_free(&[], &spec).is_pass());
    }

    #[test]
    fn non_strict_bound_rejects_equality() {
        let strict = PowerFreeSpec::new(ratio(2, 1), true, 1).unwrap();
        let loose = PowerFreeSpec::new(ratio(2, 1), false, 1).unwrap();
        assert!(is_power_free(&d("0101"), &strict).is_pass());
        assert!(!is_power_free(&d("0101"), &loose).is_pass());
    }

    #[test]
    fn directedness_examples() {
        let v = is_d_directed(&d("0123210"), 3);
        let f = v.failure().unwrap();
        assert_eq!(f.factor, d("012"));
        assert_eq!(f.reverse_position, 4);

        let g2 = Morphism::g2();
        let img = g2.apply(&Word::parse("012", 3).unwrap()).unwrap();
        assert_eq!(img.len(), 36);
        assert!(is_d_directed(img.symbols(), 3).is_pass());

        assert!(is_d_directed(&d("01"), 3).is_pass());
        // A palindromic factor is its own reversal.
        assert!(!is_d_directed(&d("010"), 3).is_pass());
    }

    proptest! {
        #[test]
        fn power_free_two_strict_iff_no_squares(
            w in proptest::collection::vec(0u8..3, 0..40),
            k in 1usize..6,
        ) {
            let spec = PowerFreeSpec::new(ratio(2, 1), false, k).unwrap();
            let squares = find_squares(&w, k, w.len() / 2);
            prop_assert_eq!(is_power_free(&w, &spec).is_pass(), squares.is_empty());
        }

        #[test]
        fn suffix_checks_agree_with_whole_word(
            w in proptest::collection::vec(0u8..3, 0..30),
            num in 5i64..12, k in 1usize..4,
        ) {
            let spec = PowerFreeSpec::new(ratio(num, 4), true, k).unwrap();
            let incremental = (1..=w.len()).all(|i| suffix_violation(&w[..i], &spec).is_none());
            prop_assert_eq!(incremental, is_power_free(&w, &spec).is_pass());
        }

        #[test]
        fn max_exponent_matches_definition(w in proptest::collection::vec(0u8..2, 0..14), k in 1usize..4) {
            prop_assert_eq!(max_exponent(&w, k), naive_max_exponent(&w, k));
        }

        #[test]
        fn max_exponent_monotone_under_prefix(w in proptest::collection::vec(0u8..3, 0..40)) {
            let whole = max_exponent(&w, 1);
            for i in 0..=w.len() {
                prop_assert!(max_exponent(&w[..i], 1) <= whole);
            }
        }

        #[test]
        fn directedness_is_monotone(w in proptest::collection::vec(0u8..3, 0..60), dd in 1usize..8) {
            if is_d_directed(&w, dd).is_pass() {
                for larger in dd..dd + 6 {
                    prop_assert!(is_d_directed(&w, larger).is_pass());
                }
            }
        }

        #[test]
        fn reported_failures_hold(w in proptest::collection::vec(0u8..2, 0..40)) {
            let spec = PowerFreeSpec::new(ratio(3, 2), true, 2).unwrap();
            if let Verdict::Fail(rep) = is_power_free(&w, &spec) {
                prop_assert!(rep.holds_in(&w));
                prop_assert!(spec.forbids(rep.length, rep.period));
            }
        }
    }
}
