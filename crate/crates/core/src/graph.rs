//! Simple undirected graphs and the structural helpers the solvers share:
//! component decomposition, light path extraction, combinatorial embeddings
//! and a small exact vertex cover search.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Simple undirected graph with string vertex labels.
///
/// Edges are stored normalized (`u < v`), without duplicates or loops, in
/// insertion order. Edge indices are stable and used as identifiers by the
/// drawing and routing layers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` isolated vertices labeled `v0..v{n-1}`.
    pub fn new(n: usize) -> Self {
        Graph {
            labels: (0..n).map(|i| format!("v{i}")).collect(),
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the edge; returns its index. Panics on loops, out-of-range
    /// endpoints and duplicate edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u != v, "loop edge {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u}, {v}) out of range");
        let e = if u < v { (u, v) } else { (v, u) };
        assert!(!self.edges.contains(&e), "duplicate edge {e:?}");
        let idx = self.edges.len();
        self.edges.push(e);
        self.adj[u].push(v);
        self.adj[v].push(u);
        idx
    }

    /// Appends a fresh vertex; returns its index.
    pub fn add_vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.adj.push(Vec::new());
        self.labels.len() - 1
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().position(|&x| x == e)
    }

    /// Endpoints of edge `e` in normalized order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Edge indices incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    // Standard constructions used throughout the tests and solvers.

    /// Path on `n >= 1` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Star with `k` leaves; the center is vertex 0.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::new(k + 1);
        for i in 1..=k {
            g.add_edge(0, i);
        }
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph; the first class is vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, in order of
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `verts`, plus the map from new to old indices.
    /// Labels carry over. Edge order follows the original edge order.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        let order: Vec<usize> = set.iter().copied().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in order.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::with_labels(order.iter().map(|&v| self.labels[v].clone()).collect());
        for &(u, v) in &self.edges {
            if set.contains(&u) && set.contains(&v) {
                g.add_edge(back[u], back[v]);
            }
        }
        (g, order)
    }

    /// Graph with the given vertices removed (edges incident to them drop).
    pub fn remove_vertices(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let dropset: BTreeSet<usize> = drop.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n()).filter(|v| !dropset.contains(v)).collect();
        self.induced(&keep)
    }

    /// Graph with the given edges (by index) removed; vertices stay.
    pub fn remove_edges(&self, drop: &[usize]) -> Graph {
        let dropset: BTreeSet<usize> = drop.iter().copied().collect();
        let mut g = Graph::with_labels(self.labels.clone());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !dropset.contains(&i) {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// Shape of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Isolated vertex.
    Isolated,
    /// Path with at least one edge; carries the vertex sequence end to end.
    Path(Vec<usize>),
    /// Cycle; carries the vertex sequence once around.
    Cycle(Vec<usize>),
    /// Anything with a vertex of degree at least 3.
    Branched,
}

/// One connected component together with its classification.
#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

/// Classifies every connected component as isolated vertex, path, cycle or
/// branched.
pub fn decompose(g: &Graph) -> Vec<Component> {
    g.components()
        .into_iter()
        .map(|vertices| {
            let kind = classify_component(g, &vertices);
            Component { vertices, kind }
        })
        .collect()
}

fn classify_component(g: &Graph, comp: &[usize]) -> ComponentKind {
    if comp.len() == 1 && g.degree(comp[0]) == 0 {
        return ComponentKind::Isolated;
    }
    if comp.iter().any(|&v| g.degree(v) > 2) {
        return ComponentKind::Branched;
    }
    let ends: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 1).collect();
    if ends.is_empty() {
        // All degree 2: a cycle. Walk it.
        let start = comp[0];
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = g.neighbors(start)[0];
        while cur != start {
            seq.push(cur);
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev)
                .expect("degree 2");
            prev = cur;
            cur = next;
        }
        ComponentKind::Cycle(seq)
    } else {
        debug_assert_eq!(ends.len(), 2);
        let start = ends[0];
        let mut seq = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while g.degree(cur) != 1 || cur == start {
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev)
                .expect("path interior");
            prev = cur;
            cur = next;
            seq.push(cur);
            if g.degree(cur) == 1 {
                break;
            }
        }
        ComponentKind::Path(seq)
    }
}

/// Subgraph induced by the vertices of degree at least 3 (same vertex
/// indexing as `g`; edges restricted to high-degree endpoints).
pub fn high_degree_subgraph(g: &Graph) -> Graph {
    let mut h = Graph::with_labels(g.labels().to_vec());
    for &(u, v) in g.edges() {
        if g.degree(u) > 2 && g.degree(v) > 2 {
            h.add_edge(u, v);
        }
    }
    h
}

/// Maximal path whose interior vertices have degree 2 in the host graph,
/// starting at a vertex of degree at least 3 and ending at a vertex of
/// degree 1 or at least 3 (possibly the start vertex again).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LightPath {
    /// Vertex sequence from the high-degree anchor outward.
    pub vertices: Vec<usize>,
    /// Edge indices along the path, in step order.
    pub edges: Vec<usize>,
}

impl LightPath {
    /// True when the far end is a leaf of the host graph.
    pub fn ends_at_leaf(&self, g: &Graph) -> bool {
        g.degree(*self.vertices.last().unwrap()) == 1
    }
}

/// Decomposes all edges outside the high-degree subgraph of components that
/// contain a high-degree vertex into light paths. Components that are pure
/// paths or cycles contribute nothing here; they are handled separately.
pub fn light_paths(g: &Graph) -> Vec<LightPath> {
    let mut used = vec![false; g.m()];
    let mut out = Vec::new();
    for u in 0..g.n() {
        if g.degree(u) <= 2 {
            continue;
        }
        for &w in g.neighbors(u) {
            if g.degree(w) > 2 {
                continue; // lives in the high-degree subgraph
            }
            let first = g.edge_index(u, w).unwrap();
            if used[first] {
                continue;
            }
            used[first] = true;
            let mut verts = vec![u, w];
            let mut edges = vec![first];
            let mut prev = u;
            let mut cur = w;
            while g.degree(cur) == 2 {
                let next = *g
                    .neighbors(cur)
                    .iter()
                    .find(|&&x| x != prev)
                    .expect("degree 2 interior");
                let e = g.edge_index(cur, next).unwrap();
                if used[e] {
                    break; // closed walk back to the anchor
                }
                used[e] = true;
                verts.push(next);
                edges.push(e);
                prev = cur;
                cur = next;
            }
            out.push(LightPath {
                vertices: verts,
                edges,
            });
        }
    }
    out
}

/// Combinatorial embedding: for every vertex, the cyclic order of its
/// neighbors (counterclockwise by convention).
pub type Rotation = Vec<Vec<usize>>;

/// Number of faces traced by the rotation system, summed over components.
pub fn count_faces(g: &Graph, rot: &Rotation) -> usize {
    // Darts are (edge, direction). Successor of the dart u->v is v->w where
    // w follows u in the rotation at v.
    let mut seen = vec![[false; 2]; g.m()];
    let mut faces = 0;
    for e in 0..g.m() {
        for dir in 0..2 {
            if seen[e][dir] {
                continue;
            }
            faces += 1;
            let (mut eu, mut edir) = (e, dir);
            loop {
                seen[eu][edir] = true;
                let (a, b) = g.endpoints(eu);
                let (u, v) = if edir == 0 { (a, b) } else { (b, a) };
                let r = &rot[v];
                let pos = r.iter().position(|&x| x == u).expect("rotation");
                let w = r[(pos + 1) % r.len()];
                let ne = g.edge_index(v, w).unwrap();
                let (na, _) = g.endpoints(ne);
                let ndir = if na == v { 0 } else { 1 };
                if ne == e && ndir == dir {
                    break;
                }
                eu = ne;
                edir = ndir;
            }
        }
    }
    faces
}

/// Whether the rotation system embeds every component in the plane,
/// checked per component through the Euler relation `F = E - V + 2`.
pub fn rotation_is_planar(g: &Graph, rot: &Rotation) -> bool {
    for comp in g.components() {
        let (h, order) = g.induced(&comp);
        if h.m() == 0 {
            continue;
        }
        let mut back = vec![usize::MAX; g.n()];
        for (new, &old) in order.iter().enumerate() {
            back[old] = new;
        }
        let hrot: Rotation = order
            .iter()
            .map(|&v| rot[v].iter().map(|&w| back[w]).collect())
            .collect();
        if count_faces(&h, &hrot) != h.m() + 2 - h.n() {
            return false;
        }
    }
    true
}

fn mirror_rotation(rot: &Rotation) -> Rotation {
    rot.iter()
        .map(|r| {
            let mut rev: Vec<usize> = r.clone();
            rev.reverse();
            rev
        })
        .collect()
}

fn rotation_encoding(rot: &Rotation) -> Vec<Vec<usize>> {
    // Canonical form: rotate each cyclic order so its smallest entry comes
    // first. Vertices of degree 0 contribute empty rows.
    rot.iter()
        .map(|r| {
            if r.is_empty() {
                return Vec::new();
            }
            let k = r
                .iter()
                .enumerate()
                .min_by_key(|&(_, &x)| x)
                .map(|(i, _)| i)
                .unwrap();
            (0..r.len()).map(|i| r[(k + i) % r.len()]).collect()
        })
        .collect()
}

/// Enumerates all planar rotation systems, optionally deduplicated up to
/// reflection (a drawing and its mirror image induce reversed rotations).
/// Returns `None` when more than `budget` rotation systems would have to be
/// inspected.
pub fn enumerate_planar_embeddings(
    g: &Graph,
    dedup_reflection: bool,
    budget: usize,
) -> Option<Vec<Rotation>> {
    let mut total: usize = 1;
    for v in 0..g.n() {
        let d = g.degree(v);
        if d > 2 {
            total = total.checked_mul(factorial(d - 1))?;
            if total > budget {
                return None;
            }
        }
    }

    let mut rotations = Vec::new();
    let mut current: Rotation = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    enumerate_rec(g, 0, &mut current, &mut rotations);

    let mut out = Vec::new();
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for rot in rotations {
        if !rotation_is_planar(g, &rot) {
            continue;
        }
        let enc = rotation_encoding(&rot);
        if dedup_reflection {
            let menc = rotation_encoding(&mirror_rotation(&rot));
            let key = enc.clone().min(menc);
            if !seen.insert(key) {
                continue;
            }
        } else if !seen.insert(enc) {
            continue;
        }
        out.push(rot);
    }
    Some(out)
}

fn enumerate_rec(g: &Graph, v: usize, current: &mut Rotation, out: &mut Vec<Rotation>) {
    if v == g.n() {
        out.push(current.clone());
        return;
    }
    let d = g.degree(v);
    if d <= 2 {
        enumerate_rec(g, v + 1, current, out);
        return;
    }
    // Fix the first neighbor, permute the rest: one representative per
    // cyclic order.
    let base = g.neighbors(v).to_vec();
    let first = base[0];
    let rest: Vec<usize> = base[1..].to_vec();
    for perm in permutations(&rest) {
        let mut order = vec![first];
        order.extend(perm);
        current[v] = order;
        enumerate_rec(g, v + 1, current, out);
    }
    current[v] = base;
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

/// Exhaustive planarity test through rotation systems. Suited only to small
/// graphs; returns `None` when the search space exceeds `budget`.
pub fn is_planar(g: &Graph, budget: usize) -> Option<bool> {
    // Quick edge-count cut: planar graphs have m <= 3n - 6 for n >= 3.
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return Some(false);
    }
    let embeddings = enumerate_planar_embeddings(g, true, budget)?;
    Some(!embeddings.is_empty())
}

/// Maximum bipartite matching (augmenting paths). `adj[l]` lists the right
/// vertices available to left vertex `l`; right vertices are `0..r`.
pub fn max_bipartite_matching(adj: &[Vec<usize>], r: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; r];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; r];
        if augment(adj, l, &mut seen, &mut match_right) {
            size += 1;
        }
    }
    size
}

fn augment(
    adj: &[Vec<usize>],
    l: usize,
    seen: &mut Vec<bool>,
    match_right: &mut Vec<Option<usize>>,
) -> bool {
    for &rv in &adj[l] {
        if seen[rv] {
            continue;
        }
        seen[rv] = true;
        if match_right[rv].is_none() || augment(adj, match_right[rv].unwrap(), seen, match_right) {
            match_right[rv] = Some(l);
            return true;
        }
    }
    false
}

/// Minimum vertex cover by branch and bound. Exact; intended for the small
/// graphs the fixed-parameter solvers see.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut chosen = Vec::new();
    let mut removed = vec![false; g.n()];
    vc_search(g, &mut chosen, &mut removed, &mut best);
    best.unwrap_or_default()
}

fn vc_search(
    g: &Graph,
    chosen: &mut Vec<usize>,
    removed: &mut Vec<bool>,
    best: &mut Option<Vec<usize>>,
) {
    if let Some(b) = best {
        if chosen.len() >= b.len() {
            return;
        }
    }
    // Highest-degree vertex among the live ones.
    let live_degree = |v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| !removed[w])
            .count()
    };
    let pick = (0..g.n())
        .filter(|&v| !removed[v])
        .max_by_key(|&v| live_degree(v))
        .filter(|&v| live_degree(v) > 0);
    let Some(v) = pick else {
        // No edges left: chosen is a cover.
        let sol = chosen.clone();
        if best.as_ref().map_or(true, |b| sol.len() < b.len()) {
            *best = Some(sol);
        }
        return;
    };
    // Degree-1 shortcut: covering the neighbor dominates.
    if live_degree(v) == 1 {
        // v has one live neighbor w; take w.
        let w = *g
            .neighbors(v)
            .iter()
            .find(|&&x| !removed[x])
            .unwrap();
        chosen.push(w);
        removed[w] = true;
        vc_search(g, chosen, removed, best);
        removed[w] = false;
        chosen.pop();
        return;
    }
    // Branch 1: v in the cover.
    chosen.push(v);
    removed[v] = true;
    vc_search(g, chosen, removed, best);
    removed[v] = false;
    chosen.pop();
    // Branch 2: all live neighbors of v in the cover.
    let nbrs: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| !removed[w])
        .collect();
    for &w in &nbrs {
        chosen.push(w);
        removed[w] = true;
    }
    removed[v] = true; // v is isolated once its neighbors are gone
    vc_search(g, chosen, removed, best);
    removed[v] = false;
    for &w in nbrs.iter().rev() {
        removed[w] = false;
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_accessors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.edge_index(3, 2), Some(2));
    }

    #[test]
    fn component_classification() {
        let mut g = Graph::new(10);
        // path 0-1-2, cycle 3-4-5, star at 6 with leaves 7,8,9
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 3);
        g.add_edge(6, 7);
        g.add_edge(6, 8);
        g.add_edge(6, 9);
        let comps = decompose(&g);
        assert_eq!(comps.len(), 3);
        assert!(matches!(&comps[0].kind, ComponentKind::Path(p) if p.len() == 3));
        assert!(matches!(&comps[1].kind, ComponentKind::Cycle(c) if c.len() == 3));
        assert!(matches!(&comps[2].kind, ComponentKind::Branched));
    }

    #[test]
    fn single_edge_is_path() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let comps = decompose(&g);
        assert!(matches!(&comps[0].kind, ComponentKind::Path(p) if p == &vec![0, 1]));
    }

    #[test]
    fn light_path_extraction() {
        // K4 with a path of length 3 hanging off vertex 0 and a pendant on 1.
        let mut g = Graph::complete(4);
        let a = g.add_vertex("a".into());
        let b = g.add_vertex("b".into());
        let c = g.add_vertex("c".into());
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, c);
        let d = g.add_vertex("d".into());
        g.add_edge(1, d);
        let lps = light_paths(&g);
        assert_eq!(lps.len(), 2);
        let long = lps.iter().find(|p| p.vertices.len() == 4).unwrap();
        assert_eq!(long.vertices, vec![0, a, b, c]);
        assert!(long.ends_at_leaf(&g));
        let short = lps.iter().find(|p| p.vertices.len() == 2).unwrap();
        assert_eq!(short.vertices, vec![1, d]);
    }

    #[test]
    fn light_path_between_branch_vertices() {
        // Two triangles joined by a degree-2 chain 0-6-7-3. Vertices 0 and 3
        // have degree 3; every other vertex has degree 2, so the triangle
        // rims are closed light paths and the chain is an open one.
        let mut g = Graph::new(8);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 3);
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 3);
        let lps = light_paths(&g);
        assert_eq!(lps.len(), 3);
        let chain = lps
            .iter()
            .find(|p| p.vertices.first() != p.vertices.last())
            .unwrap();
        assert!(chain.vertices == vec![0, 6, 7, 3] || chain.vertices == vec![3, 7, 6, 0]);
        assert!(!chain.ends_at_leaf(&g));
        let closed: Vec<_> = lps
            .iter()
            .filter(|p| p.vertices.first() == p.vertices.last())
            .collect();
        assert_eq!(closed.len(), 2);
        assert!(closed.iter().all(|p| p.vertices.len() == 4));
        // Every edge outside the (here empty) high-degree subgraph is
        // covered exactly once.
        assert_eq!(high_degree_subgraph(&g).m(), 0);
        let covered: usize = lps.iter().map(|p| p.edges.len()).sum();
        assert_eq!(covered, g.m());
    }

    #[test]
    fn high_degree_subgraph_keeps_indices() {
        let mut g = Graph::complete(4);
        let a = g.add_vertex("a".into());
        g.add_edge(0, a);
        let h = high_degree_subgraph(&g);
        assert_eq!(h.n(), g.n());
        assert_eq!(h.m(), 6);
        assert_eq!(h.degree(a), 0);
    }

    #[test]
    fn faces_of_k4() {
        let g = Graph::complete(4);
        let embs = enumerate_planar_embeddings(&g, false, 1 << 20).unwrap();
        // K4 is 3-connected: 2 embeddings (one up to reflection).
        assert_eq!(embs.len(), 2);
        let embs_refl = enumerate_planar_embeddings(&g, true, 1 << 20).unwrap();
        assert_eq!(embs_refl.len(), 1);
        assert_eq!(count_faces(&g, &embs[0]), 4);
    }

    #[test]
    fn planarity_small() {
        assert_eq!(is_planar(&Graph::complete(4), 1 << 20), Some(true));
        assert_eq!(is_planar(&Graph::complete(5), 1 << 20), Some(false));
        assert_eq!(
            is_planar(&Graph::complete_bipartite(3, 3), 1 << 22),
            Some(false)
        );
        assert_eq!(is_planar(&Graph::cycle(6), 1 << 20), Some(true));
    }

    #[test]
    fn cycle_has_two_faces() {
        let g = Graph::cycle(5);
        let rot: Rotation = (0..5).map(|v| g.neighbors(v).to_vec()).collect();
        assert_eq!(count_faces(&g, &rot), 2);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(min_vertex_cover(&Graph::path(5)).len(), 2);
        assert_eq!(min_vertex_cover(&Graph::cycle(5)).len(), 3);
        assert_eq!(min_vertex_cover(&Graph::star(6)).len(), 1);
        assert_eq!(min_vertex_cover(&Graph::complete(4)).len(), 3);
        assert_eq!(min_vertex_cover(&Graph::complete_bipartite(2, 7)).len(), 2);
        // Banana: K_{2,3} has cover {poles}.
        let cover = min_vertex_cover(&Graph::complete_bipartite(2, 3));
        assert_eq!(cover.len(), 2);
    }

    #[test]
    fn embedding_budget() {
        // 7-star center has degree 7: 720 rotations, fine; K5 minus nothing
        // with budget 1 must bail.
        assert!(enumerate_planar_embeddings(&Graph::complete(5), true, 1).is_none());
    }
}
