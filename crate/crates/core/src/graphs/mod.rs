//! Graphs, colorings, and the planar and outerplanar families used in the
//! lower-bound constructions.
//!
//! Vertices are numbered in insertion order, so every generator is
//! deterministic and `G_i` is a prefix of `G_{i+1}`.

mod io;
pub mod paths;
pub mod small;

use std::collections::HashMap;

use crate::error::{domain, Error, Result};
use crate::repetitions::Verdict;

pub use io::GraphDoc;
pub use paths::{
    enumerate_paths, for_each_path, verify_coloring, verify_coloring_budgeted, ColoringReport,
    PathEnumeration, PathSquare, PathWalk,
};

/// One insertion step: `vertex` was added adjacent to `neighbors`, which
/// formed a clique at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    log: Option<Vec<LogEntry>>,
    faces: Option<Vec<[usize; 3]>>,
    main_edge: Option<(usize, usize)>,
    levels: Option<Vec<usize>>,
    roles: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            ..Default::default()
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return domain(format!("edge {u}-{v} outside a graph on {n} vertices"));
        }
        if u == v {
            return domain(format!("self-loop at {u}"));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|nb| nb.binary_search(&v).is_ok())
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn construction_log(&self) -> Option<&[LogEntry]> {
        self.log.as_deref()
    }

    pub fn faces(&self) -> Option<&[[usize; 3]]> {
        self.faces.as_deref()
    }

    pub fn main_edge(&self) -> Option<(usize, usize)> {
        self.main_edge
    }

    pub fn levels(&self) -> Option<&[usize]> {
        self.levels.as_deref()
    }

    pub fn roles(&self) -> Option<&[String]> {
        self.roles.as_deref()
    }

    pub fn set_levels(&mut self, levels: Vec<usize>) {
        self.levels = Some(levels);
    }

    /// Adds a vertex adjacent to every vertex of `clique` and logs it.
    fn insert_logged(&mut self, clique: &[usize]) -> Result<usize> {
        let v = self.add_vertex();
        for &u in clique {
            self.add_edge(u, v)?;
        }
        self.log.get_or_insert_with(Vec::new).push(LogEntry {
            vertex: v,
            neighbors: clique.to_vec(),
        });
        Ok(v)
    }

    /// Appends a disjoint copy of `h`, returning the offset of its vertex 0.
    fn append_copy(&mut self, h: &Graph) -> Result<usize> {
        let offset = self.vertex_count();
        for _ in 0..h.vertex_count() {
            self.add_vertex();
        }
        for (u, v) in h.edges() {
            self.add_edge(offset + u, offset + v)?;
        }
        Ok(offset)
    }

    /// Whether every pair of `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// A vertex coloring with colors `0..color_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
    color_count: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, color_count: usize) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| usize::from(c) >= color_count) {
            return domain(format!("color {c} outside palette of {color_count}"));
        }
        Ok(Coloring {
            colors,
            color_count,
        })
    }

    /// Palette size inferred as one more than the largest color.
    pub fn from_colors(colors: Vec<u8>) -> Self {
        let color_count = colors
            .iter()
            .map(|&c| usize::from(c) + 1)
            .max()
            .unwrap_or(0);
        Coloring {
            colors,
            color_count,
        }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.colors).expect("color arrays serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let colors: Vec<u8> = serde_json::from_str(text)?;
        Ok(Coloring::from_colors(colors))
    }
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return domain("a path needs at least one vertex");
    }
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("vertices exist");
        }
    }
    g
}

/// `G_0 = K_4`; `G_{i+1}` stacks a degree-3 vertex into every face of `G_i`.
/// Faces are sorted vertex triples; the log records each stacked vertex with
/// its face.
pub fn stacked_triangulation(i: usize) -> Graph {
    let mut g = Graph::new(0);
    for _ in 0..4 {
        let v = g.vertex_count();
        let earlier: Vec<usize> = (0..v).collect();
        g.insert_logged(&earlier).expect("K4 construction");
    }
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for _ in 0..i {
        let mut next = Vec::with_capacity(faces.len() * 3);
        for &[a, b, c] in &faces {
            let v = g.insert_logged(&[a, b, c]).expect("face vertices exist");
            next.extend([[a, b, v], [a, c, v], [b, c, v]]);
        }
        faces = next;
    }
    g.faces = Some(faces);
    g
}

/// Vertex count of `G_i`: `v_{i+1} = v_i + 4·3^i` from `v_0 = 4`.
pub fn stacked_vertex_count(i: usize) -> usize {
    4 + (0..i).map(|j| 4 * 3usize.pow(j as u32)).sum::<usize>()
}

/// `U_0 = K_2`; `U_{i+1}` glues two copies of `U_i` (main edges `ab`, `cd`)
/// at `b = c` and adds the new main edge `ad`.
pub fn outerplanar_u(i: usize) -> Graph {
    let mut g = Graph::from_edges(2, &[(0, 1)]).expect("K2");
    let mut main = (0, 1);
    for _ in 0..i {
        let copy = g.clone();
        let n = copy.vertex_count();
        // Copy vertex x maps to x + n - 1, except its first main endpoint, which maps to b.
        let (a, b) = main;
        let (c, d) = main;
        let map = |x: usize| -> usize {
            if x == c {
                b
            } else if x < c {
                x + n
            } else {
                x + n - 1
            }
        };
        for _ in 0..n - 1 {
            g.add_vertex();
        }
        for (u, v) in copy.edges() {
            g.add_edge(map(u), map(v)).expect("mapped vertices exist");
        }
        let d = map(d);
        g.add_edge(a, d).expect("main edge endpoints exist");
        main = (a, d);
    }
    g.main_edge = Some(main);
    g
}

/// A matching `a_j b_j` of `m` edges; every matched vertex `x` is joined to
/// all of a private copy `H_x` of `h`; two adjacent vertices `c`, `d` are
/// joined to every matched vertex.
///
/// Numbering: `a_1, b_1, ..., a_m, b_m`, then `c`, `d`, then the copies in
/// the same order as their matched vertices.
pub fn plus4_gadget(h: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return domain("the matching needs at least one edge");
    }
    let mut g = Graph::new(2 * m + 2);
    let mut roles: Vec<String> = Vec::with_capacity(2 * m * (1 + h.vertex_count()) + 2);
    for j in 0..m {
        g.add_edge(2 * j, 2 * j + 1)?;
        roles.push(format!("a{}", j + 1));
        roles.push(format!("b{}", j + 1));
    }
    let (c, d) = (2 * m, 2 * m + 1);
    roles.push("c".into());
    roles.push("d".into());
    g.add_edge(c, d)?;
    for x in 0..2 * m {
        g.add_edge(c, x)?;
        g.add_edge(d, x)?;
    }
    for x in 0..2 * m {
        let offset = g.append_copy(h)?;
        for u in 0..h.vertex_count() {
            g.add_edge(x, offset + u)?;
            roles.push(format!("H_{}", roles[x]));
        }
    }
    g.roles = Some(roles);
    Ok(g)
}

/// Closed-form vertex and edge counts of [`plus4_gadget`].
pub fn plus4_counts(h_vertices: usize, h_edges: usize, m: usize) -> (usize, usize) {
    let vertices = 2 * m * (1 + h_vertices) + 2;
    let edges = m + 1 + 4 * m + 2 * m * (h_edges + h_vertices);
    (vertices, edges)
}

/// Rooted graph where every vertex on level `i < levels` has a private path of
/// `path_len` children on level `i + 1`, each adjacent to it.
pub fn leveled_outerplanar(levels: usize, path_len: usize, vertex_budget: usize) -> Result<Graph> {
    if path_len == 0 {
        return domain("path_len must be at least 1");
    }
    let mut total: usize = 1;
    let mut layer: usize = 1;
    for _ in 0..levels {
        layer = layer.saturating_mul(path_len);
        total = total.saturating_add(layer);
    }
    if total > vertex_budget {
        return Err(Error::Config(format!(
            "leveled graph would have {total} vertices, over the budget of {vertex_budget}"
        )));
    }
    let mut g = Graph::new(1);
    let mut level_of = vec![0usize];
    let mut frontier = vec![0usize];
    for level in 1..=levels {
        let mut next = Vec::with_capacity(frontier.len() * path_len);
        for &parent in &frontier {
            let mut prev = None;
            for _ in 0..path_len {
                let v = g.add_vertex();
                level_of.push(level);
                g.add_edge(parent, v)?;
                if let Some(p) = prev {
                    g.add_edge(p, v)?;
                }
                prev = Some(v);
                next.push(v);
            }
        }
        frontier = next;
    }
    g.levels = Some(level_of);
    Ok(g)
}

/// Reverse insertion order must be a perfect elimination order in which each
/// vertex has at most 3 later neighbors, all mutually adjacent. The check uses
/// the actual adjacency, not the logged cliques. Fails with the first vertex
/// (in elimination order) that breaks it.
pub fn check_3tree(g: &Graph) -> Result<Verdict<usize>> {
    let log = g
        .construction_log()
        .ok_or_else(|| Error::Config("graph has no construction log".into()))?;
    let n = g.vertex_count();
    let mut position = vec![usize::MAX; n];
    for (i, entry) in log.iter().enumerate() {
        if entry.vertex >= n || position[entry.vertex] != usize::MAX {
            return Err(Error::Config(format!(
                "construction log entry {i} repeats or misnames vertex {}",
                entry.vertex
            )));
        }
        position[entry.vertex] = i;
    }
    if position.contains(&usize::MAX) {
        return Err(Error::Config("construction log misses vertices".into()));
    }
    for entry in log.iter().rev() {
        let v = entry.vertex;
        let earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| position[u] < position[v])
            .collect();
        if earlier.len() > 3 || !g.is_clique(&earlier) {
            return Ok(Verdict::Fail(v));
        }
    }
    Ok(Verdict::Pass)
}

/// Attaches a trivial log (insertion order `0..n`, neighbors = earlier
/// neighbors) to a graph built without one.
pub fn with_trivial_log(mut g: Graph) -> Graph {
    let log = (0..g.vertex_count())
        .map(|v| LogEntry {
            vertex: v,
            neighbors: g.neighbors(v).iter().copied().filter(|&u| u < v).collect(),
        })
        .collect();
    g.log = Some(log);
    g
}

fn face_to_stacked_vertex(g: &Graph) -> HashMap<[usize; 3], usize> {
    g.construction_log()
        .unwrap_or_default()
        .iter()
        .filter(|e| e.neighbors.len() == 3 && e.vertex >= 4)
        .map(|e| ([e.neighbors[0], e.neighbors[1], e.neighbors[2]], e.vertex))
        .collect()
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

#[derive(Clone, Debug)]
pub struct FanWitness {
    /// `G_{i+t}`.
    pub graph: Graph,
    /// Number of vertices of `G_i`, which form a prefix of `graph`.
    pub base_vertices: usize,
    pub path: Vec<usize>,
}

/// For an edge `xy` of `G_i`, finds `t` vertices of `G_{i+t}` outside `G_i`
/// forming a path, each adjacent to both `x` and `y`: stack into a face on
/// `xy`, then repeatedly into the face spanned by `xy` and the last vertex.
pub fn fan_witness(i: usize, edge: (usize, usize), t: usize) -> Result<FanWitness> {
    if t == 0 {
        return domain("t must be at least 1");
    }
    let base = stacked_triangulation(i);
    let (x, y) = edge;
    if !base.has_edge(x, y) {
        return domain(format!("{x}-{y} is not an edge of G_{i}"));
    }
    let face = *base
        .faces()
        .unwrap_or_default()
        .iter()
        .find(|f| f.contains(&x) && f.contains(&y))
        .expect("every edge of a triangulation lies on a face");
    let graph = stacked_triangulation(i + t);
    let stacked = face_to_stacked_vertex(&graph);
    let mut path = Vec::with_capacity(t);
    let mut current = face;
    for _ in 0..t {
        let v = stacked[&current];
        path.push(v);
        current = sorted3([x, y, v]);
    }
    Ok(FanWitness {
        base_vertices: base.vertex_count(),
        graph,
        path,
    })
}

/// Direct checks of a fan witness: disjoint from `G_i`, a path, and every
/// vertex adjacent to both endpoints of the edge.
pub fn verify_fan_witness(w: &FanWitness, edge: (usize, usize)) -> bool {
    let g = &w.graph;
    let (x, y) = edge;
    let mut distinct = w.path.clone();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len() == w.path.len()
        && w.path
            .iter()
            .all(|&v| v >= w.base_vertices && v < g.vertex_count())
        && w.path.windows(2).all(|p| g.has_edge(p[0], p[1]))
        && w.path.iter().all(|&v| g.has_edge(v, x) && g.has_edge(v, y))
}

#[derive(Clone, Debug)]
pub enum UWitness {
    Found {
        /// `G_{i+t+2}`.
        graph: Graph,
        base_vertices: usize,
        /// `mapping[u]` is the image of vertex `u` of `U_t`.
        mapping: Vec<usize>,
    },
    Exhausted {
        nodes: u64,
    },
}

/// Searches `G_{i+t+2}` for a copy of `U_t` (as a subgraph) among the
/// neighbors of `x` that are not in `G_i`, by backtracking over `U_t`'s
/// vertices in breadth-first order. Gives up after `node_budget` steps.
pub fn u_witness(i: usize, x: usize, t: usize, node_budget: u64) -> Result<UWitness> {
    let base_vertices = stacked_vertex_count(i);
    if x >= base_vertices {
        return domain(format!("vertex {x} is not in G_{i}"));
    }
    let graph = stacked_triangulation(i + t + 2);
    let pattern = outerplanar_u(t);
    let candidates: Vec<usize> = graph
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&v| v >= base_vertices)
        .collect();
    let order = bfs_order(&pattern);
    let mut mapping = vec![usize::MAX; pattern.vertex_count()];
    let mut nodes = 0u64;
    let found = embed(
        &graph,
        &pattern,
        &order,
        &candidates,
        0,
        &mut mapping,
        &mut nodes,
        node_budget,
    );
    Ok(if found {
        UWitness::Found {
            graph,
            base_vertices,
            mapping,
        }
    } else {
        UWitness::Exhausted { nodes }
    })
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    candidates: &[usize],
    depth: usize,
    mapping: &mut [usize],
    nodes: &mut u64,
    budget: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for &v in candidates {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        if mapping.contains(&v) {
            continue;
        }
        let consistent = pattern
            .neighbors(u)
            .iter()
            .filter(|&&w| mapping[w] != usize::MAX)
            .all(|&w| host.has_edge(mapping[w], v));
        if !consistent {
            continue;
        }
        mapping[u] = v;
        if embed(
            host,
            pattern,
            order,
            candidates,
            depth + 1,
            mapping,
            nodes,
            budget,
        ) {
            return true;
        }
        mapping[u] = usize::MAX;
    }
    false
}

/// Direct checks of a `U_t` witness for vertex `x`.
pub fn verify_u_witness(witness: &UWitness, x: usize, t: usize) -> bool {
    let UWitness::Found {
        graph,
        base_vertices,
        mapping,
    } = witness
    else {
        return false;
    };
    let pattern = outerplanar_u(t);
    let mut distinct = mapping.clone();
    distinct.sort_unstable();
    distinct.dedup();
    mapping.len() == pattern.vertex_count()
        && distinct.len() == mapping.len()
        && mapping
            .iter()
            .all(|&v| v >= *base_vertices && v < graph.vertex_count() && graph.has_edge(x, v))
        && pattern
            .edges()
            .all(|(a, b)| graph.has_edge(mapping[a], mapping[b]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn path_examples() {
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
        assert_eq!(path_graph(2).unwrap().edge_count(), 1);
        let p5 = path_graph(5).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!((p5.degree(0), p5.degree(4)), (1, 1));
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn graph_rejects_loops_and_strays() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn stacked_examples() {
        let counts: Vec<(usize, usize, usize)> = (0..3)
            .map(|i| {
                let g = stacked_triangulation(i);
                (g.vertex_count(), g.edge_count(), g.faces().unwrap().len())
            })
            .collect();
        assert_eq!(counts, vec![(4, 6, 4), (8, 18, 12), (20, 54, 36)]);
    }

    #[test]
    fn stacked_invariants() {
        let (mut v, mut e, mut f) = (4usize, 6usize, 4usize);
        for i in 0..=6 {
            let g = stacked_triangulation(i);
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.edge_count(), e);
            assert_eq!(g.faces().unwrap().len(), f);
            assert_eq!(f, 4 * 3usize.pow(i as u32));
            assert_eq!(v + f, e + 2, "Euler at i={i}");
            assert_eq!(stacked_vertex_count(i), v);
            assert!(check_3tree(&g).unwrap().is_pass());
            v += f;
            e += 3 * f;
            f *= 3;
        }
    }

    #[test]
    fn construction_log_cliques() {
        let g = stacked_triangulation(3);
        for entry in g.construction_log().unwrap() {
            assert!(g.is_clique(&entry.neighbors));
            assert!(entry.neighbors.iter().all(|&u| u < entry.vertex));
        }
    }

    #[test]
    fn three_tree_failure() {
        let k5 = with_trivial_log(complete_graph(5));
        assert_eq!(check_3tree(&k5).unwrap(), Verdict::Fail(4));
        assert!(check_3tree(&with_trivial_log(complete_graph(4)))
            .unwrap()
            .is_pass());
        assert!(matches!(
            check_3tree(&complete_graph(4)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn outerplanar_u_examples() {
        let u0 = outerplanar_u(0);
        assert_eq!(
            (u0.vertex_count(), u0.edge_count(), u0.main_edge()),
            (2, 1, Some((0, 1)))
        );
        let u1 = outerplanar_u(1);
        assert_eq!((u1.vertex_count(), u1.edge_count()), (3, 3));
        assert_eq!(u1.main_edge(), Some((0, 2)));
        for i in 0..=10 {
            let u = outerplanar_u(i);
            assert_eq!(u.vertex_count(), (1 << i) + 1);
            assert_eq!(u.edge_count(), (1 << (i + 1)) - 1);
            let (a, d) = u.main_edge().unwrap();
            assert!(u.has_edge(a, d));
        }
    }

    #[test]
    fn plus4_examples() {
        let k1 = Graph::new(1);
        let g = plus4_gadget(&k1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 8));
        let empty = Graph::new(0);
        let g = plus4_gadget(&empty, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 11));
        let tri = complete_graph(3);
        for m in 1..6 {
            let g = plus4_gadget(&tri, m).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), plus4_counts(3, 3, m));
        }
        let roles = plus4_gadget(&k1, 1).unwrap().roles().unwrap().to_vec();
        assert_eq!(roles, ["a1", "b1", "c", "d", "H_a1", "H_b1"]);
    }

    #[test]
    fn leveled_examples() {
        assert_eq!(leveled_outerplanar(0, 5, 100).unwrap().vertex_count(), 1);
        let fan = leveled_outerplanar(1, 3, 100).unwrap();
        assert_eq!((fan.vertex_count(), fan.edge_count()), (4, 5));
        assert_eq!(leveled_outerplanar(2, 2, 100).unwrap().vertex_count(), 7);
        assert!(matches!(
            leveled_outerplanar(10, 10, 1000),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn fan_witness_examples() {
        let w = fan_witness(0, (0, 1), 1).unwrap();
        assert_eq!(w.path.len(), 1);
        assert!(verify_fan_witness(&w, (0, 1)));
        let w = fan_witness(0, (0, 1), 3).unwrap();
        assert!(verify_fan_witness(&w, (0, 1)));
        let g1 = stacked_triangulation(1);
        for (x, y) in g1.edges() {
            assert!(verify_fan_witness(
                &fan_witness(1, (x, y), 5).unwrap(),
                (x, y)
            ));
        }
        assert!(fan_witness(1, (0, 7), 2).is_err() || g1.has_edge(0, 7));
    }

    #[test]
    fn u_witness_examples() {
        for t in 0..=2 {
            let w = u_witness(0, 0, t, 1_000_000).unwrap();
            assert!(verify_u_witness(&w, 0, t), "t={t}");
        }
        let w = u_witness(1, 5, 1, 1_000_000).unwrap();
        assert!(verify_u_witness(&w, 5, 1));
    }

    #[test]
    fn star_has_center_degree() {
        assert_eq!(star(3).degree(0), 3);
    }
}
