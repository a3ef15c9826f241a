//! Exact `π_k` by backtracking, longest-word searches, and exploratory tree
//! witness searches.
//!
//! Everything here is sequential and explores candidates in lexicographic
//! order, so results are reproducible.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{domain, Result};
use crate::graphs::{verify_coloring, Coloring, Graph};

pub const BUDGET_ENV: &str = "NONREP_BUDGET_NODES";
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
    pub max_colors: usize,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Option<Duration>, max_colors: usize) -> Result<Self> {
        if node_limit == 0 || max_colors == 0 || time_limit.is_some_and(|t| t.is_zero()) {
            return domain("budget limits must be positive");
        }
        Ok(SearchBudget {
            node_limit,
            time_limit,
            max_colors,
        })
    }

    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit: node_limit.max(1),
            time_limit: None,
            max_colors: 255,
        }
    }

    /// Node limit from `NONREP_BUDGET_NODES` when set and valid.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| parse_count(&s))
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_NODE_LIMIT);
        SearchBudget::nodes(limit)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(DEFAULT_NODE_LIMIT)
    }
}

/// Parses a non-negative integer count, also accepting `AeB` for `A·10^B`.
pub fn parse_count(text: &str) -> Option<u64> {
    let text = text.trim().replace('_', "");
    match text.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let m: u64 = mantissa.parse().ok()?;
            let e: u32 = exp.parse().ok()?;
            m.checked_mul(10u64.checked_pow(e)?)
        }
        None => text.parse().ok(),
    }
}

struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let late =
            self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if self.nodes > self.limit || late {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiResult {
    pub lower: usize,
    pub upper: usize,
    /// A valid coloring with `upper` colors.
    pub witness: Vec<u8>,
    pub exhausted: bool,
    pub nodes: u64,
}

impl PiResult {
    /// The exact value, when the bounds meet.
    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Square checks restricted to paths through one vertex, inside the set of
/// already colored vertices `0..colored`.
struct IncrementalChecker<'g> {
    g: &'g Graph,
    k: usize,
    dist: Vec<Vec<usize>>,
}

impl<'g> IncrementalChecker<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let n = g.vertex_count();
        let dist = (0..n).map(|s| bfs_distances(g, s)).collect();
        IncrementalChecker { g, k, dist }
    }

    /// Whether some path on colored vertices that contains `v` is a square of
    /// period `>= k`. Each period `p` is tried with a depth-`2p` search whose
    /// second half must repeat the colors of the first; branches that can no
    /// longer reach `v` are cut using graph distances.
    fn square_through(&self, colors: &[u8], colored: usize, v: usize) -> bool {
        let max_p = colored / 2;
        let mut on_path = vec![false; colored];
        let mut path = Vec::with_capacity(colored);
        for p in self.k..=max_p {
            for s in 0..colored {
                if self.dist[s][v] > 2 * p - 1 {
                    continue;
                }
                path.push(s);
                on_path[s] = true;
                let found = self.extend(colors, colored, v, p, &mut path, &mut on_path, s == v);
                on_path[s] = false;
                path.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        colors: &[u8],
        colored: usize,
        v: usize,
        p: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        seen_v: bool,
    ) -> bool {
        let len = path.len();
        if len == 2 * p {
            return seen_v;
        }
        let remaining = 2 * p - len;
        let last = path[len - 1];
        for &u in self.g.neighbors(last) {
            if u >= colored || on_path[u] {
                continue;
            }
            if len >= p && colors[u] != colors[path[len - p]] {
                continue;
            }
            let has_v = seen_v || u == v;
            if !has_v && self.dist[u][v] > remaining - 1 {
                continue;
            }
            path.push(u);
            on_path[u] = true;
            let found = self.extend(colors, colored, v, p, path, on_path, has_v);
            on_path[u] = false;
            path.pop();
            if found {
                return true;
            }
        }
        false
    }
}

fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Smallest number of colors such that no path of `g` carries a square of
/// period `>= k`, by backtracking in vertex order. Vertex 0 gets color 0 and
/// a new color may only be the next unused one. Colorings with one more
/// color than the largest tried are never needed: `n` distinct colors always
/// work, which gives the fallback upper bound.
pub fn pi_k_exact(g: &Graph, k: usize, budget: &SearchBudget) -> Result<PiResult> {
    if k == 0 {
        return domain("k must be at least 1");
    }
    let n = g.vertex_count();
    let rainbow: Vec<u8> = (0..n).map(|v| v.min(255) as u8).collect();
    if n == 0 {
        return Ok(PiResult {
            lower: 0,
            upper: 0,
            witness: Vec::new(),
            exhausted: false,
            nodes: 0,
        });
    }
    if n > 256 {
        return domain("at most 256 vertices");
    }
    let checker = IncrementalChecker::new(g, k);
    let mut meter = Meter::new(budget);
    let cap = budget.max_colors.min(n);
    for c in 1..=cap {
        let mut colors = vec![0u8; n];
        match color_with(&checker, &mut colors, c, &mut meter) {
            Some(true) => {
                let witness = Coloring::new(colors.clone(), c)?;
                assert!(
                    verify_coloring(g, &witness, k, n.max(2 * k))?.is_pass(),
                    "search produced an invalid coloring"
                );
                return Ok(PiResult {
                    lower: c,
                    upper: c,
                    witness: colors,
                    exhausted: false,
                    nodes: meter.nodes,
                });
            }
            Some(false) => continue,
            None => {
                return Ok(PiResult {
                    lower: c,
                    upper: n,
                    witness: rainbow,
                    exhausted: true,
                    nodes: meter.nodes,
                });
            }
        }
    }
    // Only reachable with cap < n, so the bounds stay ordered.
    Ok(PiResult {
        lower: cap + 1,
        upper: n,
        witness: rainbow,
        exhausted: false,
        nodes: meter.nodes,
    })
}

/// `Some(found)` when the search finished, `None` when the budget ran out.
fn color_with(
    checker: &IncrementalChecker,
    colors: &mut [u8],
    palette: usize,
    meter: &mut Meter,
) -> Option<bool> {
    let n = colors.len();
    // used[v]: number of distinct colors among vertices 0..v.
    let mut used = vec![0usize; n + 1];
    let mut v = 0usize;
    let mut next_color = vec![0u8; n];
    loop {
        if v == n {
            return Some(true);
        }
        let limit = (used[v] + 1).min(palette);
        let mut placed = false;
        while usize::from(next_color[v]) < limit {
            let c = next_color[v];
            next_color[v] += 1;
            if !meter.tick() {
                return None;
            }
            colors[v] = c;
            if !checker.square_through(colors, v + 1, v) {
                used[v + 1] = used[v].max(usize::from(c) + 1);
                placed = true;
                break;
            }
        }
        if placed {
            v += 1;
            if v < n {
                next_color[v] = 0;
            }
        } else {
            if v == 0 {
                return Some(false);
            }
            v -= 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordSearch {
    /// The target-length word, or the longest word met.
    pub word: Vec<u8>,
    pub reached_target: bool,
    pub exhausted: bool,
    pub nodes: u64,
}

/// Whether `w` ends with a square of period in `k..=|w|/2`.
fn square_suffix(w: &[u8], k: usize) -> bool {
    let n = w.len();
    (k.max(1)..=n / 2).any(|p| w[n - 2 * p..n - p] == w[n - p..])
}

/// Lexicographically least word of length `target_len` over `0..alphabet`
/// with no square of period `>= k`, by depth-first extension. When no such
/// word exists the longest word seen is returned.
pub fn extend_word_search(
    alphabet: u8,
    k: usize,
    target_len: usize,
    budget: &SearchBudget,
) -> Result<WordSearch> {
    if alphabet == 0 || k == 0 {
        return domain("alphabet and k must be at least 1");
    }
    let mut meter = Meter::new(budget);
    let mut word: Vec<u8> = Vec::with_capacity(target_len);
    let mut best: Vec<u8> = Vec::new();
    // next[i]: next symbol to try at position i.
    let mut next: Vec<u8> = vec![0];
    while word.len() < target_len {
        let pos = word.len();
        if next[pos] == alphabet {
            if pos == 0 {
                break;
            }
            next.pop();
            word.pop();
            continue;
        }
        if !meter.tick() {
            break;
        }
        word.push(next[pos]);
        next[pos] += 1;
        if square_suffix(&word, k) {
            word.pop();
            continue;
        }
        if word.len() > best.len() {
            best.clone_from(&word);
        }
        next.push(0);
    }
    let reached_target = word.len() == target_len;
    Ok(WordSearch {
        word: if reached_target { word } else { best },
        reached_target,
        exhausted: meter.exhausted,
        nodes: meter.nodes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TreeWitness {
    /// A rooted tree on which every coloring with the palette has a square
    /// of period `>= k`. The root is vertex 0 and `parents[i]` is the parent
    /// of vertex `i + 1`.
    Found {
        parents: Vec<usize>,
        pi: PiResult,
        trees_tried: u64,
    },
    /// Every tree within the shape bounds is colorable.
    NoneWithinBounds { trees_tried: u64 },
    /// The budget ran out; this is not a refutation.
    Inconclusive { trees_tried: u64, nodes: u64 },
}

/// Rooted trees of depth `<= max_depth` where every vertex has at most
/// `max_arity` children, one per isomorphism class, as parent arrays in
/// breadth-first numbering. Listed by vertex count, then by parent array.
pub fn rooted_trees(vertices: usize, max_depth: usize, max_arity: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut meter = Meter::new(&SearchBudget::nodes(u64::MAX));
    let _ = for_each_rooted_tree(vertices, max_depth, max_arity, &mut meter, &mut |t| {
        out.push(t.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Streams the trees of [`rooted_trees`] in order, charging one node of
/// `meter` per generation step; breaks when the meter runs out.
fn for_each_rooted_tree(
    vertices: usize,
    max_depth: usize,
    max_arity: usize,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut state = Growth {
        target: vertices,
        max_depth,
        max_arity,
        parents: vec![usize::MAX],
        depth: vec![0],
        children: vec![0],
        seen: HashSet::new(),
    };
    if vertices == 0 {
        return ControlFlow::Continue(());
    }
    state.grow(meter, visit)
}

struct Growth {
    target: usize,
    max_depth: usize,
    max_arity: usize,
    parents: Vec<usize>,
    depth: Vec<usize>,
    children: Vec<usize>,
    seen: HashSet<String>,
}

impl Growth {
    fn grow(
        &mut self,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if !meter.tick() {
            return ControlFlow::Break(());
        }
        if self.parents.len() == self.target {
            if self.seen.insert(rooted_code(&self.parents, 0)) {
                return visit(&self.parents);
            }
            return ControlFlow::Continue(());
        }
        // Breadth-first numbering keeps parent indices non-decreasing.
        let from = self
            .parents
            .last()
            .copied()
            .filter(|&p| p != usize::MAX)
            .unwrap_or(0);
        for p in from..self.parents.len() {
            if self.children[p] == self.max_arity || self.depth[p] == self.max_depth {
                continue;
            }
            self.parents.push(p);
            self.depth.push(self.depth[p] + 1);
            self.children.push(0);
            self.children[p] += 1;
            let flow = self.grow(meter, visit);
            self.children[p] -= 1;
            self.children.pop();
            self.depth.pop();
            self.parents.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Parenthesis encoding of the subtree at `v` with sorted child codes.
fn rooted_code(parents: &[usize], v: usize) -> String {
    let mut kids: Vec<String> = (1..parents.len())
        .filter(|&u| parents[u] == v)
        .map(|u| rooted_code(parents, u))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

pub fn tree_from_parents(parents: &[usize]) -> Graph {
    let mut g = Graph::new(parents.len());
    for (v, &p) in parents.iter().enumerate().skip(1) {
        g.add_edge(p, v).expect("parent precedes child");
    }
    g
}

/// Looks for a rooted tree within the shape bounds that needs more than
/// `colors` colors, trying trees by increasing size. Non-colorability is
/// established by [`pi_k_exact`] finishing without a witness.
pub fn tree_witness_search(
    k: usize,
    colors: usize,
    max_depth: usize,
    max_arity: usize,
    budget: &SearchBudget,
) -> Result<TreeWitness> {
    if k == 0 || colors == 0 {
        return domain("k and colors must be at least 1");
    }
    let max_vertices = max_vertices(max_depth, max_arity);
    let mut meter = Meter::new(budget);
    let mut trees_tried = 0u64;
    let mut pi_nodes = 0u64;
    let mut outcome: Result<Option<TreeWitness>> = Ok(None);
    for n in 1..=max_vertices {
        let flow = for_each_rooted_tree(n, max_depth, max_arity, &mut meter, &mut |parents| {
            trees_tried += 1;
            if pi_nodes >= budget.node_limit {
                return ControlFlow::Break(());
            }
            let sub = SearchBudget {
                node_limit: budget.node_limit - pi_nodes,
                time_limit: budget.time_limit,
                max_colors: colors,
            };
            let result = pi_k_exact(&tree_from_parents(parents), k, &sub);
            if let Ok(pi) = &result {
                pi_nodes += pi.nodes;
            }
            match result {
                Ok(pi) if pi.exhausted => ControlFlow::Break(()),
                Ok(pi) if pi.lower > colors => {
                    outcome = Ok(Some(TreeWitness::Found {
                        parents: parents[1..].to_vec(),
                        pi,
                        trees_tried,
                    }));
                    ControlFlow::Break(())
                }
                Ok(_) => ControlFlow::Continue(()),
                Err(e) => {
                    outcome = Err(e);
                    ControlFlow::Break(())
                }
            }
        });
        if flow.is_break() {
            return match outcome? {
                Some(found) => Ok(found),
                None => Ok(TreeWitness::Inconclusive {
                    trees_tried,
                    nodes: meter.nodes + pi_nodes,
                }),
            };
        }
    }
    Ok(TreeWitness::NoneWithinBounds { trees_tried })
}

fn max_vertices(max_depth: usize, max_arity: usize) -> usize {
    let mut total = 1usize;
    let mut layer = 1usize;
    for _ in 0..max_depth {
        layer = layer.saturating_mul(max_arity);
        total = total.saturating_add(layer);
    }
    total
}
