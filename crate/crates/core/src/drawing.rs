//! Straight-line drawings and the two quantities measured on them:
//! segments (maximal collinear runs of edges) and supporting lines.

use crate::geom::{chi, on_segment, segments_cross, LineKey, Point};
use crate::graph::Graph;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// A straight-line drawing: one exact point per vertex.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub graph: Graph,
    pub pos: Vec<Point>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawingError {
    #[error("drawing has {got} positions for {want} vertices")]
    PositionCount { got: usize, want: usize },
    #[error("vertices {0} and {1} share a position")]
    DuplicatePosition(usize, usize),
    #[error("vertex {vertex} lies on edge {edge}")]
    VertexOnEdge { vertex: usize, edge: usize },
    #[error("edges {0} and {1} cross")]
    EdgesCross(usize, usize),
}

impl Drawing {
    pub fn new(graph: Graph, pos: Vec<Point>) -> Self {
        Drawing { graph, pos }
    }

    /// Drawing from integer grid coordinates.
    pub fn from_ints(graph: Graph, coords: &[(i64, i64)]) -> Self {
        let pos = coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        Drawing { graph, pos }
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.pos[v]
    }
}

/// Checks that the drawing is a planar straight-line drawing: positions are
/// distinct, no vertex lies in the relative interior of an edge, and edges
/// intersect only at shared endpoints.
pub fn validate_drawing(d: &Drawing) -> Result<(), DrawingError> {
    let g = &d.graph;
    if d.pos.len() != g.n() {
        return Err(DrawingError::PositionCount {
            got: d.pos.len(),
            want: g.n(),
        });
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if d.pos[u] == d.pos[v] {
                return Err(DrawingError::DuplicatePosition(u, v));
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for w in 0..g.n() {
            if w == u || w == v {
                continue;
            }
            if on_segment(&d.pos[u], &d.pos[v], &d.pos[w]) {
                return Err(DrawingError::VertexOnEdge { vertex: w, edge: e });
            }
        }
    }
    for e in 0..g.m() {
        let (a, b) = g.endpoints(e);
        for f in (e + 1)..g.m() {
            let (c, dd) = g.endpoints(f);
            if segments_cross(&d.pos[a], &d.pos[b], &d.pos[c], &d.pos[dd]) {
                return Err(DrawingError::EdgesCross(e, f));
            }
        }
    }
    Ok(())
}

/// One maximal straight run of edges in a drawing.
#[derive(Clone, Debug)]
pub struct Segment {
    /// Edge indices in order along the segment.
    pub edges: Vec<usize>,
    /// Extreme points of the segment.
    pub ends: (Point, Point),
    /// Supporting line.
    pub line: LineKey,
}

/// True when edges `e` and `f` are aligned at a shared vertex: they share an
/// endpoint, all three involved points are collinear, and the edges extend
/// in opposite directions from the shared vertex.
pub fn edges_aligned(d: &Drawing, e: usize, f: usize) -> bool {
    let (a, b) = d.graph.endpoints(e);
    let (c, dd) = d.graph.endpoints(f);
    let shared = [(a, b, c, dd), (a, b, dd, c), (b, a, c, dd), (b, a, dd, c)]
        .into_iter()
        .find(|&(x, _, y, _)| x == y);
    let Some((v, p, _, q)) = shared else {
        return false;
    };
    // v shared vertex, p and q the far ends.
    let (pv, pp, pq) = (&d.pos[v], &d.pos[p], &d.pos[q]);
    if !chi(pv, pp, pq).is_zero() {
        return false;
    }
    // Opposite directions: (p - v) . (q - v) < 0.
    let dot = (&pp.x - &pv.x) * (&pq.x - &pv.x) + (&pp.y - &pv.y) * (&pq.y - &pv.y);
    dot < Zero::zero()
}

/// Number of aligned incident edge pairs in the drawing.
///
/// In a valid drawing every edge has at most one aligned partner per
/// endpoint, so the segments are exactly the connected groups under
/// alignment and `segments = edges - aligned pairs`.
pub fn aligned_pairs(d: &Drawing) -> usize {
    let g = &d.graph;
    let mut count = 0;
    for v in 0..g.n() {
        let inc = g.incident_edges(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if edges_aligned(d, e, f) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// The segments of the drawing: edges grouped into maximal straight runs,
/// each with its extreme points and supporting line. Only meaningful on
/// drawings that pass [`validate_drawing`].
pub fn segments_of(d: &Drawing) -> Vec<Segment> {
    let g = &d.graph;
    let m = g.m();
    let mut dsu = Dsu::new(m);
    for v in 0..g.n() {
        let inc = g.incident_edges(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if edges_aligned(d, e, f) {
                    dsu.union(e, f);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..m {
        groups.entry(dsu.find(e)).or_default().push(e);
    }
    groups
        .into_values()
        .map(|edges| order_segment(d, edges))
        .collect()
}

fn order_segment(d: &Drawing, edges: Vec<usize>) -> Segment {
    let g = &d.graph;
    // Extreme points: endpoints appearing in exactly one edge of the group.
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in &edges {
        let (u, v) = g.endpoints(e);
        *count.entry(u).or_insert(0) += 1;
        *count.entry(v).or_insert(0) += 1;
    }
    let ends: Vec<usize> = count
        .iter()
        .filter(|&(_, &c)| c == 1)
        .map(|(&v, _)| v)
        .collect();
    debug_assert_eq!(ends.len(), 2, "segment group must form a path");
    let (s, t) = (ends[0], ends[1]);
    // Walk from s to t to order the edges.
    let mut ordered = Vec::with_capacity(edges.len());
    let mut cur = s;
    let mut remaining: Vec<usize> = edges.clone();
    while cur != t {
        let pos = remaining
            .iter()
            .position(|&e| {
                let (u, v) = g.endpoints(e);
                u == cur || v == cur
            })
            .expect("segment path");
        let e = remaining.remove(pos);
        let (u, v) = g.endpoints(e);
        cur = if u == cur { v } else { u };
        ordered.push(e);
    }
    let line = LineKey::through(&d.pos[s], &d.pos[t]).expect("distinct endpoints");
    Segment {
        edges: ordered,
        ends: (d.pos[s].clone(), d.pos[t].clone()),
        line,
    }
}

/// Number of segments in the drawing.
pub fn segment_count(d: &Drawing) -> usize {
    d.graph.m() - aligned_pairs(d)
}

/// Distinct supporting lines over all edges of the drawing.
pub fn supporting_lines(d: &Drawing) -> Vec<LineKey> {
    let mut set = std::collections::BTreeSet::new();
    for &(u, v) in d.graph.edges() {
        if let Some(k) = LineKey::through(&d.pos[u], &d.pos[v]) {
            set.insert(k);
        }
    }
    set.into_iter().collect()
}

/// Number of distinct supporting lines.
pub fn line_count(d: &Drawing) -> usize {
    supporting_lines(d).len()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3_straight() -> Drawing {
        Drawing::from_ints(Graph::path(3), &[(0, 0), (1, 0), (2, 0)])
    }

    fn path3_bent() -> Drawing {
        Drawing::from_ints(Graph::path(3), &[(0, 0), (1, 0), (1, 1)])
    }

    #[test]
    fn straight_path_is_one_segment() {
        let d = path3_straight();
        assert!(validate_drawing(&d).is_ok());
        assert_eq!(aligned_pairs(&d), 1);
        assert_eq!(segment_count(&d), 1);
        assert_eq!(line_count(&d), 1);
        let segs = segments_of(&d);
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].edges, vec![0, 1]);
    }

    #[test]
    fn bent_path_is_two_segments() {
        let d = path3_bent();
        assert!(validate_drawing(&d).is_ok());
        assert_eq!(aligned_pairs(&d), 0);
        assert_eq!(segment_count(&d), 2);
        assert_eq!(line_count(&d), 2);
    }

    #[test]
    fn triangle_counts() {
        let d = Drawing::from_ints(Graph::cycle(3), &[(0, 0), (4, 0), (0, 4)]);
        assert!(validate_drawing(&d).is_ok());
        assert_eq!(segment_count(&d), 3);
        assert_eq!(line_count(&d), 3);
    }

    #[test]
    fn segment_edge_count_identity() {
        // Long straight path plus a bend.
        let d = Drawing::from_ints(
            Graph::path(5),
            &[(0, 0), (1, 0), (2, 0), (3, 0), (3, 5)],
        );
        assert!(validate_drawing(&d).is_ok());
        let segs = segments_of(&d);
        assert_eq!(segs.len(), d.graph.m() - aligned_pairs(&d));
        assert_eq!(segs.len(), 2);
        let long = segs.iter().find(|s| s.edges.len() == 3).unwrap();
        assert_eq!(long.edges, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_duplicate_positions() {
        let d = Drawing::from_ints(Graph::path(3), &[(0, 0), (1, 0), (0, 0)]);
        assert_eq!(
            validate_drawing(&d),
            Err(DrawingError::DuplicatePosition(0, 2))
        );
    }

    #[test]
    fn rejects_vertex_on_edge() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1);
        let d = Drawing::from_ints(g, &[(0, 0), (4, 0), (2, 0)]);
        assert_eq!(
            validate_drawing(&d),
            Err(DrawingError::VertexOnEdge { vertex: 2, edge: 0 })
        );
    }

    #[test]
    fn rejects_crossing_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let d = Drawing::from_ints(g, &[(0, 0), (2, 2), (0, 2), (2, 0)]);
        assert_eq!(validate_drawing(&d), Err(DrawingError::EdgesCross(0, 1)));
    }

    #[test]
    fn rejects_overlapping_collinear_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]);
        let d = Drawing::from_ints(g, &[(0, 0), (3, 0), (5, 0)]);
        // Vertex 1 sits inside edge (0, 2).
        assert!(validate_drawing(&d).is_err());
    }

    #[test]
    fn star_aligned_through_center() {
        // Center with 4 rays, two pairs collinear: 2 aligned pairs.
        let d = Drawing::from_ints(
            Graph::star(4),
            &[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)],
        );
        assert!(validate_drawing(&d).is_ok());
        assert_eq!(aligned_pairs(&d), 2);
        assert_eq!(segment_count(&d), 2);
        assert_eq!(line_count(&d), 2);
    }

    #[test]
    fn same_direction_edges_not_aligned() {
        // Bent sharply back: shares vertex, collinear, same direction.
        // Such drawings are invalid (overlap), but alignment must still
        // answer false.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let d = Drawing::from_ints(g, &[(0, 0), (2, 0), (1, 0)]);
        assert!(!edges_aligned(&d, 0, 1));
    }

    #[test]
    fn supporting_lines_dedup() {
        // Two parallel horizontal edges on the same line (disjoint) count once.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let d = Drawing::from_ints(g, &[(0, 0), (1, 0), (3, 0), (4, 0)]);
        assert!(validate_drawing(&d).is_ok());
        assert_eq!(line_count(&d), 1);
        assert_eq!(segment_count(&d), 2);
    }
}
