//! Certificates for level colorings of rooted trees.
//!
//! A rooted tree whose levels are colored by a word `w` (read towards the
//! root) has a square of period `p` on some path iff some factor `fs` of `w`
//! with `|s| = 1` makes `f s fᴿ` contain one. For `w = g(t)` with `g` a
//! uniform morphism and `t` ranging over `(7/4)⁺`-free ternary words, the
//! certificate establishes that no such square has period `>= k`:
//!
//! 1. `synchronizing`: `g` is synchronizing, so power-freeness of `g(t)` for
//!    every admissible `t` follows from a check on source words shorter than
//!    `max(2β/(β-α), 2(q-1)(2β-1)/(q(β-1)))` with `α = 7/4`.
//! 2. `power_free`: every such image is `(β⁺, n)`-free.
//! 3. `directed`: every such image is `d`-directed.
//! 4. `threshold`: with `p* = ceil((d-1)/(2-β))`, any center-crossing square
//!    of period `>= p*` would put a factor of length `>= d` and its reversal
//!    into `fs`.
//! 5. `palindrome_scan`: no `f s fᴿ` has a square with period in `[k, p*-1]`.
//!    Periods up to the enumeration window are scanned exhaustively; above it
//!    (`P`), a crossing square would leave a repetition of period `p > P` and
//!    exponent `>= 2 - (d-2)/p` inside `fs`, which a second lemma-backed
//!    freeness check at `β' = 2 - (d-2)/P` rules out.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graphs::{Coloring, Graph};
use crate::rational::{format_rational, ratio, Rational};
use crate::repetitions::{find_squares, suffix_violation, Repetition, Verdict};
use crate::words::{render_digits, walk_powerfree, Morphism, PowerFreeSpec, Word};

/// Longest source words any lemma-backed enumeration may require before the
/// configuration is rejected as impractical.
pub const MAX_LEMMA_SOURCE_LEN: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchCheckSpec {
    pub min_period: usize,
    pub free: PowerFreeSpec,
    pub directed_d: usize,
    pub small_period_max: usize,
}

impl BranchCheckSpec {
    /// Derives `small_period_max = p* - 1` from the freeness bound and `d`.
    pub fn new(min_period: usize, free: PowerFreeSpec, directed_d: usize) -> Result<Self> {
        let threshold = directedness_threshold(free.exponent_bound, directed_d)?;
        let spec = BranchCheckSpec {
            min_period,
            free,
            directed_d,
            small_period_max: threshold - 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_period == 0 {
            return domain("k must be at least 1");
        }
        if self.directed_d == 0 {
            return domain("directedness window d must be at least 1");
        }
        if self.small_period_max + 1 < self.min_period {
            return domain("small_period_max must be at least k - 1");
        }
        Ok(())
    }

    /// `k = 2`, `(19/10⁺, 2)`-free, `3`-directed.
    pub fn g2() -> Self {
        let free = PowerFreeSpec::new(ratio(19, 10), true, 2).unwrap();
        BranchCheckSpec::new(2, free, 3).unwrap()
    }

    /// `k = 5`, `(83/42⁺, 5)`-free, `20`-directed.
    pub fn g5() -> Self {
        let free = PowerFreeSpec::new(ratio(83, 42), true, 5).unwrap();
        BranchCheckSpec::new(5, free, 20).unwrap()
    }
}

/// Smallest `p >= 1` with `(2-β)p + 1 >= d`.
pub fn directedness_threshold(beta: Rational, d: usize) -> Result<usize> {
    if beta >= ratio(2, 1) {
        return domain("the directedness argument needs an exponent bound below 2");
    }
    if beta < ratio(1, 1) {
        return domain("exponent bound must be at least 1");
    }
    if d == 0 {
        return domain("directedness window d must be at least 1");
    }
    let p = (ratio(d as i64 - 1, 1) / (ratio(2, 1) - beta)).ceil();
    Ok((*p.numer()).max(1) as usize)
}

/// The first square of period in `[min_p, max_p]` of `X = f s fᴿ` that
/// contains `s`, where `left = f s`. Squares are ordered by period, then start;
/// the start is an index into `X`.
///
/// By the mirror symmetry of `X` every such square has a copy whose first
/// half lies inside `f`. Writing `c` for the index of `s` and `r < p` for the
/// length of the copy to the right of `c`, it exists iff
/// `left[c-t] == left[c-t-p]` for `t < p-r` and
/// `left[c-p+t] == left[c-t]` for `1 <= t <= r`.
pub fn crossing_square(left: &[u8], min_p: usize, max_p: usize) -> Option<Repetition> {
    let c = left.len().checked_sub(1)?;
    for p in min_p.max(1)..=max_p {
        if p > c {
            break;
        }
        // Backward matches of period p ending at c, capped at p.
        let mut back = 0;
        while back < p && back + p <= c && left[c - back] == left[c - back - p] {
            back += 1;
        }
        if back == 0 {
            continue;
        }
        // Reflected matches across the center, capped at p - 1.
        let mut mirror = 0;
        while mirror + 1 < p && left[c - p + mirror + 1] == left[c - mirror - 1] {
            mirror += 1;
        }
        if back + mirror >= p {
            let r = p - back;
            return Some(Repetition::square(c + r + 1 - 2 * p, p));
        }
    }
    None
}

/// A center-crossing square found by [`branch_palindrome_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchViolation {
    /// Index of `s` in the scanned word.
    pub position: usize,
    /// `f` starts here in the scanned word.
    pub window_start: usize,
    /// Coordinates in `X = w[window_start..=position] · reverse(w[window_start..position])`.
    pub square: Repetition,
}

impl BranchViolation {
    /// Distance from the square's start to the center, independent of the window.
    pub fn reach(&self) -> usize {
        self.position - self.window_start - self.square.start
    }
}

impl fmt::Display for BranchViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s at {} (f from {}): square period={} starting {} before s",
            self.position,
            self.window_start,
            self.square.period,
            self.reach()
        )
    }
}

/// For every split `w = u·f·s·v`, checks that `f s fᴿ` has no square with
/// period in `[k, pmax]`. `f` is restricted to its last `2·pmax` symbols,
/// which contain every square that can cross `s`.
pub fn branch_palindrome_scan(w: &[u8], k: usize, pmax: usize) -> Verdict<BranchViolation> {
    scan_with_window(w, k, pmax, Some(2 * pmax))
}

/// Reference form of [`branch_palindrome_scan`]: materializes `f s fᴿ` with
/// `f` running back to the start of `w` and searches it for squares.
pub fn branch_palindrome_scan_unrestricted(
    w: &[u8],
    k: usize,
    pmax: usize,
) -> Verdict<BranchViolation> {
    for position in 0..w.len() {
        let mut x = w[..=position].to_vec();
        x.extend(w[..position].iter().rev());
        let square = find_squares(&x, k, pmax)
            .into_iter()
            .filter(|r| r.start <= position && position < r.start + r.length)
            .min_by_key(|r| (r.period, r.start));
        if let Some(square) = square {
            return Verdict::Fail(BranchViolation {
                position,
                window_start: 0,
                square,
            });
        }
    }
    Verdict::Pass
}

fn scan_with_window(
    w: &[u8],
    k: usize,
    pmax: usize,
    window: Option<usize>,
) -> Verdict<BranchViolation> {
    for position in 0..w.len() {
        let window_start = window.map_or(0, |len| position.saturating_sub(len));
        if let Some(square) = crossing_square(&w[window_start..=position], k, pmax) {
            return Verdict::Fail(BranchViolation {
                position,
                window_start,
                square,
            });
        }
    }
    Verdict::Pass
}

/// A source triple showing the morphism is not synchronizing:
/// `g(c)` occurs in `g(ab)` at `offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SyncViolation {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub offset: usize,
}

/// `g` is synchronizing when `g(ab) = x g(c) y` forces `x = ε, a = c` or
/// `y = ε, b = c`.
pub fn is_synchronizing(m: &Morphism) -> Verdict<SyncViolation> {
    let q = m.width();
    let sigma = m.source_alphabet_size();
    let mut pair = Vec::with_capacity(2 * q);
    for a in 0..sigma {
        for b in 0..sigma {
            pair.clear();
            pair.extend_from_slice(m.image(a));
            pair.extend_from_slice(m.image(b));
            for c in 0..sigma {
                for offset in 0..=q {
                    if &pair[offset..offset + q] != m.image(c) {
                        continue;
                    }
                    let allowed = (offset == 0 && a == c) || (offset == q && b == c);
                    if !allowed {
                        return Verdict::Fail(SyncViolation { a, b, c, offset });
                    }
                }
            }
        }
    }
    Verdict::Pass
}

/// Longest source word length the synchronizing-morphism lemma asks for:
/// the largest integer strictly below
/// `max(2β/(β-α), 2(q-1)(2β-1)/(q(β-1)))`. Requires `1 < α < β < 2`.
pub fn lemma_source_len(alpha: Rational, beta: Rational, width: usize) -> Option<usize> {
    let one = ratio(1, 1);
    let two = ratio(2, 1);
    if !(one < alpha && alpha < beta && beta < two) || width == 0 {
        return None;
    }
    let q = ratio(width as i64, 1);
    let first = two * beta / (beta - alpha);
    let second = two * (q - one) * (two * beta - one) / (q * (beta - one));
    let bound = first.max(second);
    Some((*bound.ceil().numer() - 1).max(0) as usize)
}

/// Largest period whose crossing squares fit in images of source words of
/// `source_len` symbols, for every position of the last block.
pub fn scan_window_period(width: usize, source_len: usize) -> usize {
    if source_len == 0 {
        return 0;
    }
    ((source_len - 1) * width).div_ceil(2)
}

/// Exponent bound used to exclude crossing squares of period above `cutoff`.
fn exclusion_bound(d: usize, cutoff: usize) -> Option<Rational> {
    if d < 2 || cutoff == 0 {
        return None;
    }
    Some(ratio(2, 1) - ratio(d as i64 - 2, cutoff as i64))
}

/// How the period range `[k, small_period_max]` is split for a given `factor_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanPlan {
    /// Largest period scanned exhaustively.
    pub exhaustive_max: usize,
    /// Freeness check covering the periods above `exhaustive_max`, with the
    /// source length its lemma needs.
    pub exclusion: Option<(PowerFreeSpec, usize)>,
}

impl ScanPlan {
    pub fn cost(&self, factor_len: usize) -> usize {
        factor_len.max(self.exclusion.map_or(0, |(_, len)| len))
    }
}

pub fn scan_plan(m: &Morphism, spec: &BranchCheckSpec, factor_len: usize) -> Option<ScanPlan> {
    let window = scan_window_period(m.width(), factor_len);
    if window >= spec.small_period_max {
        return Some(ScanPlan {
            exhaustive_max: spec.small_period_max,
            exclusion: None,
        });
    }
    let beta = exclusion_bound(spec.directed_d, window)?;
    let len = lemma_source_len(source_language().exponent_bound, beta, m.width())?;
    let free = PowerFreeSpec::new(beta, true, window + 1).ok()?;
    Some(ScanPlan {
        exhaustive_max: window,
        exclusion: Some((free, len)),
    })
}

/// Smallest `factor_len >= 2` for which [`scan_plan`] exists.
pub fn min_factor_len(m: &Morphism, spec: &BranchCheckSpec) -> usize {
    (2..)
        .find(|&len| scan_plan(m, spec, len).is_some())
        .expect("a full scan window always yields a plan")
}

/// The `factor_len` minimizing the longest enumeration the certificate needs.
pub fn suggested_factor_len(m: &Morphism, spec: &BranchCheckSpec) -> usize {
    let lo = min_factor_len(m, spec);
    let mut best = (usize::MAX, lo);
    let mut len = lo;
    loop {
        let plan = scan_plan(m, spec, len).expect("plans persist as the window grows");
        let cost = plan.cost(len);
        if cost < best.0 {
            best = (cost, len);
        }
        if plan.exclusion.is_none() {
            break;
        }
        len += 1;
    }
    best.1
}

fn source_language() -> PowerFreeSpec {
    PowerFreeSpec::dejean_ternary()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckRecord {
    fn new(name: &str, passed: bool) -> Self {
        CheckRecord {
            name: name.to_string(),
            parameters: BTreeMap::new(),
            passed,
            counterexample: None,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn fail_with(mut self, counterexample: Option<String>) -> Self {
        self.passed = counterexample.is_none();
        self.counterexample = counterexample;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub morphism: String,
    pub morphism_table: Vec<String>,
    pub spec: BranchCheckSpec,
    pub factor_len: usize,
    pub threshold: usize,
    pub checks: Vec<CheckRecord>,
    pub overall: bool,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&serde_json::to_value(self)?)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Visits every admissible source word of length `<= max_len` in
/// lexicographic order and, for each, every position of its last image block
/// with the image up to and including that position. Returns the visited
/// word count, or the first break.
fn walk_image_positions<B>(
    m: &Morphism,
    max_len: usize,
    mut at: impl FnMut(&[u8], &[u8]) -> ControlFlow<B>,
) -> std::result::Result<u64, B> {
    let q = m.width();
    let mut image: Vec<u8> = Vec::with_capacity(max_len * q);
    let mut words = 0u64;
    let flow = walk_powerfree(m.source_alphabet_size(), &source_language(), max_len, |w| {
        let Some(&last) = w.last() else {
            return ControlFlow::Continue(true);
        };
        words += 1;
        let base = (w.len() - 1) * q;
        image.truncate(base);
        image.extend_from_slice(m.image(last));
        for c in base..base + q {
            if let ControlFlow::Break(b) = at(w, &image[..=c]) {
                return ControlFlow::Break(b);
            }
        }
        ControlFlow::Continue(true)
    });
    match flow {
        ControlFlow::Break(b) => Err(b),
        ControlFlow::Continue(()) => Ok(words),
    }
}

/// Checks `free` on the images of every admissible source word of length
/// `<= source_len`; the counterexample names the source word.
fn images_power_free(
    m: &Morphism,
    free: &PowerFreeSpec,
    source_len: usize,
) -> (u64, Option<String>) {
    match walk_image_positions(m, source_len, |w, image| {
        match suffix_violation(image, free) {
            Some(rep) => ControlFlow::Break(format!("g({}) has {rep}", render_digits(w))),
            None => ControlFlow::Continue(()),
        }
    }) {
        Ok(words) => (words, None),
        Err(cx) => (0, Some(cx)),
    }
}

fn directed_union(m: &Morphism, d: usize) -> (usize, Option<String>) {
    let source_len = 2.max((d.saturating_sub(1)).div_ceil(m.width().max(1)) + 1);
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let _ = walk_powerfree::<()>(
        m.source_alphabet_size(),
        &source_language(),
        source_len,
        |w| {
            if let Ok(image) = m.apply_symbols(w) {
                for f in image.windows(d) {
                    seen.insert(f.to_vec());
                }
            }
            ControlFlow::Continue(true)
        },
    );
    let cx = seen.iter().find_map(|f| {
        let rev: Vec<u8> = f.iter().rev().copied().collect();
        seen.contains(&rev).then(|| {
            format!(
                "{} and {} are both factors",
                render_digits(f),
                render_digits(&rev)
            )
        })
    });
    (source_len, cx)
}

/// Runs every check for `m` against `spec`, enumerating admissible source
/// words of length `factor_len` (and longer where a lemma requires it).
pub fn certify_morphic_tree_coloring(
    name: &str,
    m: &Morphism,
    spec: &BranchCheckSpec,
    factor_len: usize,
) -> Result<Certificate> {
    spec.validate()?;
    if m.width() == 0 || m.source_alphabet_size() == 0 {
        return domain("empty morphism");
    }
    let threshold = directedness_threshold(spec.free.exponent_bound, spec.directed_d)?;
    let plan = match scan_plan(m, spec, factor_len) {
        Some(plan) if factor_len >= 2 => plan,
        _ => {
            return Err(Error::Config(format!(
                "factor_len {factor_len} cannot cover the scan window; minimum admissible is {}",
                min_factor_len(m, spec)
            )))
        }
    };
    if let Some((ref free, len)) = plan.exclusion {
        if len > MAX_LEMMA_SOURCE_LEN {
            return Err(Error::Config(format!(
                "factor_len {factor_len} leaves periods above {} to a {free} check over source \
                 words of length {len}; use factor_len {} instead",
                plan.exhaustive_max,
                suggested_factor_len(m, spec)
            )));
        }
    }
    let alpha = source_language().exponent_bound;
    let q = m.width();
    let mut checks = Vec::new();

    let sync = is_synchronizing(m);
    let synchronizing = sync.is_pass();
    checks.push(
        CheckRecord::new("synchronizing", true)
            .param("width", q)
            .fail_with(sync.failure().map(|v| {
                format!(
                    "g({}) occurs in g({}{}) at offset {}",
                    v.c, v.a, v.b, v.offset
                )
            })),
    );

    let lemma_len = lemma_source_len(alpha, spec.free.exponent_bound, q).filter(|_| synchronizing);
    let free_len = factor_len.max(lemma_len.unwrap_or(0));
    let (words, cx) = images_power_free(m, &spec.free, free_len);
    let coverage = match lemma_len {
        Some(_) => "all admissible source words".to_string(),
        None => format!(
            "image factors of length <= {}",
            (free_len.saturating_sub(1)) * q + 1
        ),
    };
    checks.push(
        CheckRecord::new("power_free", true)
            .param("bound", spec.free)
            .param("source_len", free_len)
            .param(
                "lemma_source_len",
                lemma_len.map_or("n/a".into(), |l| l.to_string()),
            )
            .param("coverage", coverage)
            .param("source_words", words)
            .fail_with(cx),
    );

    let (dir_len, cx) = directed_union(m, spec.directed_d);
    checks.push(
        CheckRecord::new("directed", true)
            .param("d", spec.directed_d)
            .param("source_len", dir_len)
            .fail_with(cx),
    );

    let mut threshold_check = CheckRecord::new("threshold", true)
        .param("beta", format_rational(&spec.free.exponent_bound))
        .param("d", spec.directed_d)
        .param("p_star", threshold)
        .param("small_period_max", spec.small_period_max);
    if spec.small_period_max + 1 != threshold {
        threshold_check = threshold_check.fail_with(Some(format!(
            "small_period_max {} != p* - 1 = {}",
            spec.small_period_max,
            threshold - 1
        )));
    } else if spec.free.min_period > spec.min_period {
        threshold_check = threshold_check.fail_with(Some(format!(
            "freeness only covers periods >= {}, above k = {}",
            spec.free.min_period, spec.min_period
        )));
    }
    checks.push(threshold_check);

    let scan = walk_image_positions(m, factor_len, |w, image| {
        match crossing_square(image, spec.min_period, plan.exhaustive_max) {
            Some(sq) => ControlFlow::Break(format!(
                "g({}) position {}: square of period {} crossing the center",
                render_digits(w),
                image.len() - 1,
                sq.period
            )),
            None => ControlFlow::Continue(()),
        }
    });
    let mut scan_check = CheckRecord::new("palindrome_scan", true)
        .param(
            "periods",
            format!("[{}, {}]", spec.min_period, spec.small_period_max),
        )
        .param(
            "exhaustive_periods",
            format!("[{}, {}]", spec.min_period, plan.exhaustive_max),
        )
        .param("source_len", factor_len);
    let mut scan_cx = None;
    match scan {
        Ok(words) => scan_check = scan_check.param("source_words", words),
        Err(cx) => scan_cx = Some(cx),
    }
    if let Some((free, len)) = plan.exclusion {
        scan_check = scan_check
            .param("exclusion_bound", free)
            .param("exclusion_source_len", len);
        if scan_cx.is_none() {
            if !synchronizing {
                scan_cx = Some("periods above the window need a synchronizing morphism".into());
            } else {
                let (_, cx) = images_power_free(m, &free, len);
                scan_cx = cx.map(|cx| format!("exclusion failed: {cx}"));
            }
        }
    }
    checks.push(scan_check.fail_with(scan_cx));

    let overall = checks.iter().all(|c| c.passed);
    Ok(Certificate {
        morphism: name.to_string(),
        morphism_table: m.images().iter().map(Word::to_string).collect(),
        spec: *spec,
        factor_len,
        threshold,
        checks,
        overall,
    })
}

/// Complete rooted tree of the given depth and arity whose level-`i`
/// vertices are colored `w[depth - i]`, so every upward path spells a factor
/// of `w` read left to right. Vertices are numbered breadth-first.
pub fn build_level_tree(w: &[u8], depth: usize, arity: usize) -> Result<(Graph, Coloring)> {
    if w.len() < depth + 1 {
        return domain(format!(
            "a tree of depth {depth} needs a word of length >= {}",
            depth + 1
        ));
    }
    if arity == 0 {
        return domain("arity must be at least 1");
    }
    let mut g = Graph::new(1);
    let mut levels = vec![0usize];
    let mut frontier = vec![0usize];
    for level in 1..=depth {
        let mut next = Vec::with_capacity(frontier.len() * arity);
        for &parent in &frontier {
            for _ in 0..arity {
                let v = g.add_vertex();
                g.add_edge(parent, v)?;
                levels.push(level);
                next.push(v);
            }
        }
        frontier = next;
    }
    let colors: Vec<u8> = levels.iter().map(|&l| w[depth - l]).collect();
    let color_count = usize::from(colors.iter().copied().max().unwrap_or(0)) + 1;
    g.set_levels(levels);
    Ok((g, Coloring::new(colors, color_count)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{generate_powerfree_ternary, parse_digits};
    use proptest::prelude::*;

    /// Materializes `f s fᴿ` and picks the least (period, start) square
    /// containing the center.
    fn naive_crossing(left: &[u8], lo: usize, hi: usize) -> Option<Repetition> {
        let c = left.len() - 1;
        let mut x = left.to_vec();
        x.extend(left[..c].iter().rev());
        find_squares(&x, lo, hi)
            .into_iter()
            .filter(|r| r.start <= c && c < r.start + r.length)
            .min_by_key(|r| (r.period, r.start))
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(directedness_threshold(ratio(19, 10), 3).unwrap(), 20);
        assert_eq!(directedness_threshold(ratio(83, 42), 20).unwrap(), 798);
        assert_eq!(directedness_threshold(ratio(1, 1), 2).unwrap(), 1);
        assert!(directedness_threshold(ratio(2, 1), 3).is_err());
    }

    #[test]
    fn threshold_matches_scan_of_inequality() {
        let beta = ratio(83, 42);
        let first = (1..=1000)
            .find(|&p| (ratio(2, 1) - beta) * ratio(p, 1) + ratio(1, 1) >= ratio(20, 1))
            .unwrap();
        assert_eq!(first, 798);
    }

    #[test]
    fn scan_examples() {
        assert!(branch_palindrome_scan(&[0, 1], 1, 1).is_pass());
        let v = branch_palindrome_scan(&[0, 0], 1, 1);
        assert_eq!(v.failure().unwrap().position, 1);
        assert!(!branch_palindrome_scan(&parse_digits("0110").unwrap(), 1, 1).is_pass());
    }

    #[test]
    fn crossing_square_matches_materialized_scan() {
        for len in 1..=9u32 {
            for code in 0..2usize.pow(len) {
                let left: Vec<u8> = (0..len).map(|i| ((code >> i) & 1) as u8).collect();
                for (lo, hi) in [(1, 4), (2, 3), (3, 9)] {
                    assert_eq!(
                        crossing_square(&left, lo, hi),
                        naive_crossing(&left, lo, hi),
                        "{left:?} [{lo},{hi}]"
                    );
                }
            }
        }
    }

    #[test]
    fn g2_images_pass_the_small_period_scan() {
        let g2 = Morphism::g2();
        for u in crate::words::enumerate_powerfree_ternary(8) {
            let image = g2.apply(&u).unwrap();
            assert!(
                branch_palindrome_scan(image.symbols(), 2, 19).is_pass(),
                "{u}"
            );
        }
    }

    #[test]
    fn synchronization() {
        assert!(is_synchronizing(&Morphism::g2()).is_pass());
        assert!(is_synchronizing(&Morphism::g5()).is_pass());
        let constant = Morphism::from_digit_images(&["0", "0", "0"]).unwrap();
        assert!(!is_synchronizing(&constant).is_pass());
        let thue_morse = Morphism::from_digit_images(&["01", "10"]).unwrap();
        assert!(!is_synchronizing(&thue_morse).is_pass());
    }

    #[test]
    fn lemma_lengths() {
        let alpha = ratio(7, 4);
        // 2β/(β-α) = 76/3 for β = 19/10.
        assert_eq!(lemma_source_len(alpha, ratio(19, 10), 12), Some(25));
        // 2β/(β-α) = 332/19 for β = 83/42.
        assert_eq!(lemma_source_len(alpha, ratio(83, 42), 21), Some(17));
        assert_eq!(lemma_source_len(alpha, ratio(2, 1), 21), None);
    }

    #[test]
    fn plan_for_g5() {
        let m = Morphism::g5();
        let spec = BranchCheckSpec::g5();
        assert_eq!(spec.small_period_max, 797);
        let len = suggested_factor_len(&m, &spec);
        let plan = scan_plan(&m, &spec, len).unwrap();
        assert!(plan.exhaustive_max < 797);
        assert!(plan.cost(len) <= 24);
        assert!(min_factor_len(&m, &spec) <= len);
    }

    #[test]
    fn g2_certificate_passes() {
        let cert = certify_morphic_tree_coloring("g2", &Morphism::g2(), &BranchCheckSpec::g2(), 8)
            .unwrap();
        assert!(cert.overall, "{cert:#?}");
        assert_eq!(cert.threshold, 20);
        assert_eq!(cert.checks.len(), 5);
    }

    #[test]
    fn constant_morphism_fails_freeness() {
        let m = Morphism::from_digit_images(&["0", "0", "0"]).unwrap();
        let free = PowerFreeSpec::new(ratio(19, 10), true, 1).unwrap();
        let spec = BranchCheckSpec::new(1, free, 3).unwrap();
        let len = suggested_factor_len(&m, &spec);
        let cert = certify_morphic_tree_coloring("const", &m, &spec, len).unwrap();
        assert!(!cert.overall);
        assert!(!cert.check("power_free").unwrap().passed);
    }

    #[test]
    fn too_short_factor_len_is_a_config_error() {
        let err = certify_morphic_tree_coloring("g5", &Morphism::g5(), &BranchCheckSpec::g5(), 3);
        match err {
            Err(Error::Config(msg)) => assert!(msg.contains("minimum admissible")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = certify_morphic_tree_coloring("g2", &Morphism::g2(), &BranchCheckSpec::g2(), 8)
            .unwrap();
        let text = cert.to_json().unwrap();
        assert!(text.contains("\"19/10\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), cert);
        let again = certify_morphic_tree_coloring("g2", &Morphism::g2(), &BranchCheckSpec::g2(), 8)
            .unwrap();
        assert_eq!(again.to_json().unwrap(), text);
    }

    #[test]
    fn level_tree_examples() {
        let (g, c) = build_level_tree(&[0, 1, 2], 2, 1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        // Leaf (level 2) to root spells the word.
        assert_eq!(c.colors(), &[2, 1, 0]);
        let (g, c) = build_level_tree(&[1], 0, 3).unwrap();
        assert_eq!((g.vertex_count(), c.colors()), (1, &[1u8][..]));
        assert!(build_level_tree(&[0, 1], 2, 2).is_err());

        let w = Morphism::g2()
            .apply(&generate_powerfree_ternary(2))
            .unwrap();
        let (g, _) = build_level_tree(w.symbols(), 10, 2).unwrap();
        assert_eq!(g.vertex_count(), (1 << 11) - 1);
    }

    proptest! {
        #[test]
        fn window_restriction_is_lossless(
            w in proptest::collection::vec(0u8..2, 1..200),
            k in 1usize..4, extra in 0usize..6,
        ) {
            let pmax = k + extra;
            let a = branch_palindrome_scan(&w, k, pmax);
            let b = branch_palindrome_scan_unrestricted(&w, k, pmax);
            match (a, b) {
                (Verdict::Pass, Verdict::Pass) => {}
                (Verdict::Fail(x), Verdict::Fail(y)) => {
                    prop_assert_eq!(x.position, y.position);
                    prop_assert_eq!(x.square.period, y.square.period);
                    prop_assert_eq!(x.reach(), y.reach());
                }
                (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
            }
        }

        #[test]
        fn crossing_square_agrees_on_ternary(left in proptest::collection::vec(0u8..3, 1..40)) {
            prop_assert_eq!(crossing_square(&left, 1, 20), naive_crossing(&left, 1, 20));
        }
    }
}
