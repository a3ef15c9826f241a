//! Simple-path enumeration and the brute-force coloring verifier.

use std::ops::ControlFlow;

use super::{Coloring, Graph};
use crate::error::{domain, Result};
use crate::repetitions::{Repetition, Verdict};

/// Outcome of a bounded path walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathWalk<B> {
    Complete { paths: u64 },
    Truncated { paths: u64 },
    Stopped(B),
}

/// Visits every simple path on `2..=max_vertices` vertices once, oriented so
/// that the first vertex is smaller than the last. Paths arrive in
/// lexicographic order of their vertex sequences. At most `path_budget`
/// paths are visited.
pub fn for_each_path<B>(
    g: &Graph,
    max_vertices: usize,
    path_budget: u64,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> PathWalk<B> {
    let n = g.vertex_count();
    let mut paths = 0u64;
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(max_vertices.min(n));
    // next[i]: index into neighbors(path[i]) of the next extension to try.
    let mut next: Vec<usize> = Vec::with_capacity(max_vertices.min(n));
    for start in 0..n {
        path.push(start);
        next.push(0);
        on_path[start] = true;
        while let Some(&top) = path.last() {
            let depth = path.len() - 1;
            let nb = g.neighbors(top);
            let candidate = if path.len() < max_vertices {
                nb[next[depth]..].iter().position(|&u| !on_path[u])
            } else {
                None
            };
            match candidate {
                Some(offset) => {
                    let u = nb[next[depth] + offset];
                    next[depth] += offset + 1;
                    path.push(u);
                    next.push(0);
                    on_path[u] = true;
                    if start < u {
                        if paths == path_budget {
                            return PathWalk::Truncated { paths };
                        }
                        paths += 1;
                        if let ControlFlow::Break(b) = visit(&path) {
                            return PathWalk::Stopped(b);
                        }
                    }
                }
                None => {
                    on_path[top] = false;
                    path.pop();
                    next.pop();
                }
            }
        }
    }
    PathWalk::Complete { paths }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<Vec<usize>>,
    pub truncated: bool,
}

pub fn enumerate_paths(g: &Graph, max_vertices: usize, path_budget: u64) -> PathEnumeration {
    let mut paths = Vec::new();
    let walk = for_each_path::<()>(g, max_vertices, path_budget, |p| {
        paths.push(p.to_vec());
        ControlFlow::Continue(())
    });
    PathEnumeration {
        paths,
        truncated: matches!(walk, PathWalk::Truncated { .. }),
    }
}

/// A path whose color sequence is a square, with the square in path
/// coordinates.
pub type PathSquare = (Vec<usize>, Repetition);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    pub verdict: Verdict<PathSquare>,
    pub paths_checked: u64,
    /// The path budget ran out before every path was seen; a pass is then
    /// only partial.
    pub truncated: bool,
}

/// Checks that no simple path on at most `max_path` vertices carries a square
/// of period `>= k`. Any such square is itself the color sequence of a
/// subpath, so it is enough to test whether each path is a square; the
/// reported path is the lexicographically least one that is.
pub fn verify_coloring(
    g: &Graph,
    c: &Coloring,
    k: usize,
    max_path: usize,
) -> Result<Verdict<PathSquare>> {
    Ok(verify_coloring_budgeted(g, c, k, max_path, u64::MAX)?.verdict)
}

pub fn verify_coloring_budgeted(
    g: &Graph,
    c: &Coloring,
    k: usize,
    max_path: usize,
    path_budget: u64,
) -> Result<ColoringReport> {
    if k == 0 {
        return domain("k must be at least 1");
    }
    if max_path < 2 * k {
        return domain(format!("max_path {max_path} is below 2k = {}", 2 * k));
    }
    if c.len() != g.vertex_count() {
        return domain(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            g.vertex_count()
        ));
    }
    let colors = c.colors();
    let walk = for_each_path(g, max_path, path_budget, |path| {
        let len = path.len();
        let p = len / 2;
        if len % 2 == 0 && p >= k && (0..p).all(|i| colors[path[i]] == colors[path[i + p]]) {
            ControlFlow::Break((path.to_vec(), Repetition::square(0, p)))
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match walk {
        PathWalk::Complete { paths } => ColoringReport {
            verdict: Verdict::Pass,
            paths_checked: paths,
            truncated: false,
        },
        PathWalk::Truncated { paths } => ColoringReport {
            verdict: Verdict::Pass,
            paths_checked: paths,
            truncated: true,
        },
        PathWalk::Stopped(found) => ColoringReport {
            verdict: Verdict::Fail(found),
            paths_checked: 0,
            truncated: false,
        },
    })
}
