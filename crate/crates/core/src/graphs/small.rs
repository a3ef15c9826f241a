//! Exhaustive lists of small graphs up to isomorphism.
//!
//! Graphs on `n <= 8` vertices are stored as adjacency bitmasks. The
//! canonical form is the largest edge bitmask over all relabelings that list
//! vertices by non-increasing degree, which is a complete invariant.

use std::collections::BTreeSet;

use super::Graph;

pub const MAX_SMALL_ORDER: usize = 8;

type Masks = [u8; MAX_SMALL_ORDER];

fn pair_bit(i: usize, j: usize) -> u32 {
    // Pairs i < j in row-major order, at most 28 bits for 8 vertices.
    (j * (j - 1) / 2 + i) as u32
}

fn canonical_code(adj: &Masks, n: usize) -> u32 {
    let degree = |v: usize| adj[v].count_ones();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degree(v)));
    let degrees: Vec<u32> = order.iter().map(|&v| degree(v)).collect();
    let mut best = 0u32;
    let mut perm = Vec::with_capacity(n);
    let mut used = [false; MAX_SMALL_ORDER];
    relabel(adj, n, &degrees, &mut perm, &mut used, 0, &mut best);
    best
}

fn relabel(
    adj: &Masks,
    n: usize,
    degrees: &[u32],
    perm: &mut Vec<usize>,
    used: &mut [bool; MAX_SMALL_ORDER],
    code: u32,
    best: &mut u32,
) {
    let pos = perm.len();
    if pos == n {
        *best = (*best).max(code);
        return;
    }
    for v in 0..n {
        if used[v] || adj[v].count_ones() != degrees[pos] {
            continue;
        }
        let mut next = code;
        for (i, &u) in perm.iter().enumerate() {
            if adj[v] >> u & 1 == 1 {
                next |= 1 << pair_bit(i, pos);
            }
        }
        used[v] = true;
        perm.push(v);
        relabel(adj, n, degrees, perm, used, next, best);
        perm.pop();
        used[v] = false;
    }
}

fn decode(code: u32, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j).expect("vertices exist");
            }
        }
    }
    g
}

fn masks_of(code: u32, n: usize) -> Masks {
    let mut adj = [0u8; MAX_SMALL_ORDER];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Canonical codes of the graphs on `n` vertices obtained from each code on
/// `n - 1` vertices by adding one vertex joined to a subset allowed by `allow`.
fn augment(parents: &BTreeSet<u32>, n: usize, allow: impl Fn(u8) -> bool) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for &code in parents {
        let base = masks_of(code, n - 1);
        for subset in 0u16..1 << (n - 1) {
            let subset = subset as u8;
            if !allow(subset) {
                continue;
            }
            let mut adj = base;
            adj[n - 1] = subset;
            for (u, mask) in adj.iter_mut().enumerate().take(n - 1) {
                if subset >> u & 1 == 1 {
                    *mask |= 1 << (n - 1);
                }
            }
            out.insert(canonical_code(&adj, n));
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_SMALL_ORDER, "at most {MAX_SMALL_ORDER} vertices");
    let mut codes = BTreeSet::from([0u32]);
    for m in 2..=n {
        codes = augment(&codes, m, |_| true);
    }
    codes.into_iter().map(|c| decode(c, n)).collect()
}

/// One representative of every isomorphism class of trees on `n >= 1` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_SMALL_ORDER).contains(&n),
        "between 1 and {MAX_SMALL_ORDER} vertices"
    );
    let mut codes = BTreeSet::from([0u32]);
    for m in 2..=n {
        codes = augment(&codes, m, |s| s.count_ones() == 1);
    }
    codes.into_iter().map(|c| decode(c, n)).collect()
}

/// Whether two graphs on at most 8 vertices are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || n > MAX_SMALL_ORDER {
        return n == b.vertex_count() && a.edge_count() == b.edge_count() && a == b;
    }
    canonical_code(&to_masks(a), n) == canonical_code(&to_masks(b), n)
}

fn to_masks(g: &Graph) -> Masks {
    let mut adj = [0u8; MAX_SMALL_ORDER];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        for t in nonisomorphic_trees(8) {
            assert_eq!(t.edge_count(), 7);
        }
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &star));
    }
}
