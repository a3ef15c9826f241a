//! The acceptance checks. Each one recomputes its expected values with code
//! that does not share the implementation it is checking.

use std::ops::ControlFlow;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::graphs::small::{nonisomorphic_graphs, nonisomorphic_trees};
use crate::graphs::{
    check_3tree, fan_witness, outerplanar_u, path_graph, plus4_gadget, stacked_triangulation,
    verify_coloring, verify_fan_witness, Coloring, Graph,
};
use crate::repetitions::{find_squares, Verdict};
use crate::search::{extend_word_search, pi_k_exact, SearchBudget};
use crate::treecert::{
    build_level_tree, certify_morphic_tree_coloring, suggested_factor_len, BranchCheckSpec,
};
use crate::words::{generate_powerfree_ternary, Morphism};

pub struct Criterion {
    pub id: u8,
    pub key: &'static str,
    pub title: &'static str,
    run: fn() -> Result<Check>,
}

/// Result of one criterion body: pass flag and a one-line summary.
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Check {
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub key: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            key: "morphisms",
            title: "morphism tables",
            run: morphism_tables,
        },
        Criterion {
            id: 2,
            key: "g2",
            title: "g2 certificate",
            run: g2_certificate,
        },
        Criterion {
            id: 3,
            key: "g5",
            title: "g5 certificate",
            run: g5_certificate,
        },
        Criterion {
            id: 4,
            key: "level-trees",
            title: "level trees vs path oracle",
            run: level_trees,
        },
        Criterion {
            id: 5,
            key: "paths",
            title: "path word searches",
            run: path_words,
        },
        Criterion {
            id: 6,
            key: "pik",
            title: "exact pi_k",
            run: exact_pi,
        },
        Criterion {
            id: 7,
            key: "lemma-path",
            title: "proper 2-colorings of P_4k",
            run: lemma_path,
        },
        Criterion {
            id: 8,
            key: "constructions",
            title: "construction invariants",
            run: constructions,
        },
        Criterion {
            id: 9,
            key: "oracles",
            title: "oracle equivalence",
            run: oracle_equivalence,
        },
    ]
}

/// Whether `filter` (comma-separated ids or keys) selects `c`; `None` selects all.
pub fn selects(filter: Option<&str>, c: &Criterion) -> bool {
    filter.is_none_or(|f| {
        f.split(',')
            .map(str::trim)
            .any(|item| item == c.key || item == c.id.to_string())
    })
}

pub fn run_criterion(c: &Criterion) -> Outcome {
    let start = Instant::now();
    let check = (c.run)().unwrap_or_else(|e| Check::new(false, format!("error: {e}")));
    Outcome {
        id: c.id,
        key: c.key.to_string(),
        title: c.title.to_string(),
        passed: check.passed,
        detail: check.detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_suite(filter: Option<&str>) -> Vec<Outcome> {
    criteria()
        .iter()
        .filter(|c| selects(filter, c))
        .map(run_criterion)
        .collect()
}

pub fn outcome_line(o: &Outcome) -> String {
    format!(
        "{:>2}  {:<14} {:<4} {:>9.3}s  {}",
        o.id,
        o.key,
        if o.passed { "PASS" } else { "FAIL" },
        o.seconds,
        o.detail
    )
}

pub fn render_table(outcomes: &[Outcome]) -> String {
    let mut out = format!(
        "{:>2}  {:<14} {:<4} {:>10}  {}\n",
        "id", "criterion", "ok", "time", "detail"
    );
    for o in outcomes {
        out.push_str(&outcome_line(o));
        out.push('\n');
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} passed\n", outcomes.len()));
    out
}

pub fn render_json(outcomes: &[Outcome]) -> String {
    let value = serde_json::to_value(outcomes).expect("outcomes serialize");
    serde_json::to_string_pretty(&value).expect("json values serialize")
}

fn morphism_tables() -> Result<Check> {
    let expected: [(&str, [&str; 3], usize); 2] = [
        ("g2", ["011220012201", "122001120012", "200112201120"], 12),
        (
            "g5",
            [
                "001101110001010110010",
                "001101110001001110101",
                "001101110001001101010",
            ],
            21,
        ),
    ];
    let mut bad = Vec::new();
    for (name, images, width) in expected {
        let m = Morphism::by_name(name).expect("built-in morphism");
        let table: Vec<String> = m.images().iter().map(|w| w.to_string()).collect();
        if m.width() != width || table != images {
            bad.push(name);
        }
    }
    Ok(Check::new(
        bad.is_empty(),
        if bad.is_empty() {
            "3x12 and 3x21 tables match".to_string()
        } else {
            format!("mismatch in {bad:?}")
        },
    ))
}

fn certificate_check(
    name: &str,
    spec: &BranchCheckSpec,
    factor_len: Option<usize>,
    p_star: usize,
    periods: &str,
) -> Result<Check> {
    let m = Morphism::by_name(name).expect("built-in morphism");
    let len = factor_len.unwrap_or_else(|| suggested_factor_len(&m, spec));
    let cert = certify_morphic_tree_coloring(name, &m, spec, len)?;
    let scan_periods = cert
        .check("palindrome_scan")
        .and_then(|c| c.parameters.get("periods"))
        .map(String::as_str);
    let failed: Vec<&str> = cert
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    let passed = cert.overall && cert.threshold == p_star && scan_periods == Some(periods);
    Ok(Check::new(
        passed,
        format!(
            "factor_len={len} p*={} periods={} failed={failed:?}",
            cert.threshold,
            scan_periods.unwrap_or("?")
        ),
    ))
}

fn g2_certificate() -> Result<Check> {
    certificate_check("g2", &BranchCheckSpec::g2(), Some(8), 20, "[2, 19]")
}

fn g5_certificate() -> Result<Check> {
    certificate_check("g5", &BranchCheckSpec::g5(), None, 798, "[5, 797]")
}

fn level_trees() -> Result<Check> {
    const DEPTH: usize = 12;
    let source = generate_powerfree_ternary(4);
    let mut runs = Vec::new();
    let g2 = Morphism::g2().apply(&source)?;
    for offset in [0, 11, 23, 35] {
        runs.push(("g2", 2, 2, g2.symbols()[offset..].to_vec()));
    }
    let g5 = Morphism::g5().apply(&source)?;
    for offset in [0, 17, 40, 70] {
        runs.push(("g5", 5, 1, g5.symbols()[offset..].to_vec()));
    }
    for offset in [0, 30] {
        runs.push(("g5", 5, 2, g5.symbols()[offset..].to_vec()));
    }
    let mut failures = Vec::new();
    for (name, k, arity, w) in &runs {
        let (g, c) = build_level_tree(w, DEPTH, *arity)?;
        let max_path = 2 * DEPTH + 1;
        if let Verdict::Fail((path, rep)) = verify_coloring(&g, &c, *k, max_path)? {
            failures.push(format!(
                "{name} arity {arity}: path {path:?} period {}",
                rep.period
            ));
        }
    }
    Ok(Check::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} trees of depth {DEPTH}, no square", runs.len())
        } else {
            failures.join("; ")
        },
    ))
}

/// Squares of period `>= k` in `w`, found by comparing every pair of blocks.
fn naive_squares(w: &[u8], k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        for p in k.max(1)..=(w.len() - i) / 2 {
            if (0..p).all(|j| w[i + j] == w[i + p + j]) {
                out.push((i, p));
            }
        }
    }
    out
}

fn path_words() -> Result<Check> {
    let budget = SearchBudget::default();
    let binary = extend_word_search(2, 1, 4, &budget)?;
    let a = !binary.reached_target && !binary.exhausted && binary.word.len() == 3;
    let ternary = extend_word_search(3, 1, 1000, &budget)?;
    let b = ternary.reached_target && naive_squares(&ternary.word, 1).is_empty();
    let k3 = extend_word_search(2, 3, 1000, &budget)?;
    let c = k3.reached_target && naive_squares(&k3.word, 3).is_empty();
    Ok(Check::new(
        a && b && c,
        format!(
            "binary k=1 max {}, ternary k=1 {}, binary k=3 {}",
            binary.word.len(),
            ternary.word.len(),
            k3.word.len()
        ),
    ))
}

fn exact_pi() -> Result<Check> {
    let budget = SearchBudget::default();
    let mut problems = Vec::new();
    for n in 4..=14 {
        let r = pi_k_exact(&path_graph(n)?, 1, &budget)?;
        if r.value() != Some(3) {
            problems.push(format!("pi_1(P{n})={:?}", r.value()));
        }
    }
    for n in 1..=60 {
        let g = path_graph(n)?;
        let r = pi_k_exact(&g, 3, &budget)?;
        // A square of period >= 3 needs 6 vertices.
        let expected = if n >= 6 { 2 } else { 1 };
        let witness_ok =
            verify_coloring(&g, &Coloring::from_colors(r.witness.clone()), 3, n.max(6))?.is_pass();
        if r.value() != Some(expected) || !witness_ok {
            problems.push(format!("pi_3(P{n})={:?}", r.value()));
        }
    }
    let mut trees = 0;
    for n in 1..=8 {
        for t in nonisomorphic_trees(n) {
            trees += 1;
            let values: Vec<Option<usize>> = (1..=5)
                .map(|k| pi_k_exact(&t, k, &budget).map(|r| r.value()))
                .collect::<Result<_>>()?;
            let monotone = values
                .windows(2)
                .all(|w| matches!((w[0], w[1]), (Some(a), Some(b)) if b <= a));
            if !monotone {
                problems.push(format!(
                    "tree {:?}: {values:?}",
                    t.edges().collect::<Vec<_>>()
                ));
            }
        }
    }
    Ok(Check::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("paths P4..P14 (k=1), P1..P60 (k=3), {trees} trees monotone")
        } else {
            problems.join("; ")
        },
    ))
}

fn lemma_path() -> Result<Check> {
    let mut problems = Vec::new();
    for k in 1..=4 {
        let n = 4 * k;
        let g = path_graph(n)?;
        let mut proper = 0;
        for mask in 0u32..1 << n {
            let colors: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
            let is_proper = colors.windows(2).all(|w| w[0] != w[1]);
            if !is_proper {
                continue;
            }
            proper += 1;
            let c = Coloring::new(colors.clone(), 2)?;
            let squares = naive_squares(&colors, k);
            let verified = verify_coloring(&g, &c, k, n)?;
            if squares.is_empty() || verified.is_pass() || !squares.contains(&(0, 2 * k)) {
                problems.push(format!("k={k}: {colors:?}"));
            }
        }
        if proper != 2 {
            problems.push(format!("k={k}: {proper} proper 2-colorings"));
        }
    }
    Ok(Check::new(
        problems.is_empty(),
        if problems.is_empty() {
            "every proper 2-coloring of P_4k has a square of period 2k (k=1..4)".to_string()
        } else {
            problems.join("; ")
        },
    ))
}

fn constructions() -> Result<Check> {
    let mut problems = Vec::new();
    let (mut v, mut e, mut f) = (4usize, 6usize, 4usize);
    for i in 0..=6 {
        let g = stacked_triangulation(i);
        let faces = g.faces().map_or(0, <[_]>::len);
        let euler = g.vertex_count() + faces == g.edge_count() + 2;
        let ok = (g.vertex_count(), g.edge_count(), faces) == (v, e, f)
            && faces == 4 * 3usize.pow(i as u32)
            && euler
            && check_3tree(&g)?.is_pass();
        if !ok {
            problems.push(format!("G_{i}"));
        }
        v += f;
        e += 3 * f;
        f *= 3;
    }
    for i in 0..=10 {
        let u = outerplanar_u(i);
        if u.vertex_count() != (1 << i) + 1 || u.edge_count() != (1 << (i + 1)) - 1 {
            problems.push(format!("U_{i}"));
        }
    }
    let hs = [
        Graph::new(0),
        Graph::new(1),
        path_graph(3)?,
        outerplanar_u(2),
        stacked_triangulation(0),
    ];
    for h in &hs {
        for m in 1..=5 {
            let g = plus4_gadget(h, m)?;
            let (hv, he) = (h.vertex_count(), h.edge_count());
            // Matching, edge cd, c and d to every matched vertex, each matched
            // vertex to its copy, and the copies' own edges.
            let edges = m + 1 + 2 * (2 * m) + 2 * m * hv + 2 * m * he;
            let vertices = 2 * m + 2 + 2 * m * hv;
            if (g.vertex_count(), g.edge_count()) != (vertices, edges) {
                problems.push(format!("plus4 |h|={hv} m={m}"));
            }
        }
    }
    let mut fans = 0;
    for i in 0..=3 {
        let edges: Vec<(usize, usize)> = stacked_triangulation(i).edges().collect();
        for t in 1..=4 {
            for &edge in &edges {
                fans += 1;
                if !verify_fan_witness(&fan_witness(i, edge, t)?, edge) {
                    problems.push(format!("fan i={i} t={t} {edge:?}"));
                }
            }
        }
    }
    Ok(Check::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("G_0..G_6, U_0..U_10, 25 gadgets, {fans} fan witnesses")
        } else {
            problems.join("; ")
        },
    ))
}

/// Independent coloring check: recursive DFS over simple paths (both
/// orientations) testing every square suffix of every path prefix.
fn dfs_square_free(g: &Graph, colors: &[u8], k: usize) -> bool {
    fn go(
        g: &Graph,
        colors: &[u8],
        k: usize,
        path: &mut Vec<u8>,
        visited: &mut [bool],
        v: usize,
    ) -> bool {
        let n = path.len();
        for p in k..=n / 2 {
            if path[n - 2 * p..n - p] == path[n - p..] {
                return false;
            }
        }
        for &u in g.neighbors(v) {
            if !visited[u] {
                visited[u] = true;
                path.push(colors[u]);
                let ok = go(g, colors, k, path, visited, u);
                path.pop();
                visited[u] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let n = g.vertex_count();
    (0..n).all(|s| {
        let mut visited = vec![false; n];
        visited[s] = true;
        go(g, colors, k, &mut vec![colors[s]], &mut visited, s)
    })
}

fn is_square_path(g: &Graph, colors: &[u8], path: &[usize], k: usize) -> bool {
    let mut sorted = path.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let p = path.len() / 2;
    sorted.len() == path.len()
        && path.windows(2).all(|e| g.has_edge(e[0], e[1]))
        && path.len().is_multiple_of(2)
        && p >= k
        && (0..p).all(|i| colors[path[i]] == colors[path[i + p]])
}

/// Runs `job` on every ternary word of `len` symbols, split across threads by
/// the first symbols; returns the first failure.
fn ternary_words_parallel(
    len: usize,
    job: impl Fn(&[u8]) -> ControlFlow<String> + Sync,
) -> Option<String> {
    let prefix_len = len.min(3);
    let prefixes = 3usize.pow(prefix_len as u32);
    let threads = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(prefixes);
    let job = &job;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let mut w = vec![0u8; len];
                    for prefix in (t..prefixes).step_by(threads) {
                        let suffixes = 3usize.pow((len - prefix_len) as u32);
                        for suffix in 0..suffixes {
                            let code = prefix * suffixes + suffix;
                            let mut x = code;
                            for slot in w.iter_mut().rev() {
                                *slot = (x % 3) as u8;
                                x /= 3;
                            }
                            if let ControlFlow::Break(msg) = job(&w) {
                                return Some(msg);
                            }
                        }
                    }
                    None
                })
            })
            .collect();
        handles
            .into_iter()
            .find_map(|h| h.join().expect("worker panicked"))
    })
}

fn oracle_equivalence() -> Result<Check> {
    let mut problems = Vec::new();
    let mut words = 0u64;
    for len in 0..=14 {
        words += 3u64.pow(len as u32);
        let failure = ternary_words_parallel(len, |w| {
            let fast: Vec<(usize, usize)> = find_squares(w, 1, w.len() / 2)
                .iter()
                .map(|r| (r.start, r.period))
                .collect();
            if fast == naive_squares(w, 1) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(format!("find_squares disagrees on {w:?}"))
            }
        });
        problems.extend(failure);
    }
    let mut cases = 0u64;
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            for mask in 0u32..1 << n {
                let colors: Vec<u8> = (0..n).map(|v| (mask >> v & 1) as u8).collect();
                let c = Coloring::new(colors.clone(), 2)?;
                for k in 1..=3 {
                    cases += 1;
                    let oracle = dfs_square_free(&g, &colors, k);
                    let verdict = verify_coloring(&g, &c, k, n.max(2 * k))?;
                    let agree = match &verdict {
                        Verdict::Pass => oracle,
                        Verdict::Fail((path, _)) => !oracle && is_square_path(&g, &colors, path, k),
                    };
                    if !agree {
                        problems.push(format!(
                            "verify_coloring disagrees: n={n} mask={mask} k={k}"
                        ));
                    }
                }
            }
        }
    }
    Ok(Check::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("{words} ternary words, {cases} graph/coloring/k cases")
        } else {
            problems.into_iter().take(5).collect::<Vec<_>>().join("; ")
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selects_by_key_or_id() {
        let all = criteria();
        let picked: Vec<u8> = all
            .iter()
            .filter(|c| selects(Some("g2, 8"), c))
            .map(|c| c.id)
            .collect();
        assert_eq!(picked, vec![2, 8]);
        assert_eq!(all.iter().filter(|c| selects(None, c)).count(), 9);
    }

    #[test]
    fn quick_criteria_pass() {
        let outcomes = run_suite(Some("morphisms,g2,paths,lemma-path"));
        assert_eq!(outcomes.len(), 4);
        for o in &outcomes {
            assert!(o.passed, "{}", outcome_line(o));
        }
        let json = render_json(&outcomes);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 4);
        assert!(render_table(&outcomes).ends_with("4/4 passed\n"));
    }

    #[test]
    fn dfs_oracle_examples() {
        let p4 = path_graph(4).unwrap();
        assert!(dfs_square_free(&p4, &[0, 1, 0, 2], 1));
        assert!(!dfs_square_free(&p4, &[0, 1, 0, 1], 1));
        assert!(dfs_square_free(&p4, &[0, 1, 0, 1], 3));
        assert_eq!(naive_squares(&[0, 1, 0, 1], 1), vec![(0, 2)]);
    }
}
