//! Multigraphs with labelled vertices and edges.
//!
//! Vertices and edges are addressed by dense indices. Loops and parallel
//! edges are representable; contexts that need a simple graph check for it.
//! Every edge has two ends, so a half-edge is an `(edge, end)` pair and a
//! dart is an edge traversed from one end to the other.

use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One end of an edge. `end` is 0 or 1 and indexes the edge's endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: u8,
}

impl HalfEdge {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        HalfEdge { edge, end }
    }

    pub fn index(self) -> usize {
        2 * self.edge.0 + self.end as usize
    }

    pub fn from_index(i: usize) -> Self {
        HalfEdge::new(EdgeId(i / 2), (i % 2) as u8)
    }

    pub fn opposite(self) -> Self {
        HalfEdge::new(self.edge, 1 - self.end)
    }
}

/// An edge traversed from `ends[dir]` to `ends[1 - dir]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub dir: u8,
}

impl Dart {
    pub fn new(edge: EdgeId, dir: u8) -> Self {
        debug_assert!(dir < 2);
        Dart { edge, dir }
    }

    pub fn index(self) -> usize {
        2 * self.edge.0 + self.dir as usize
    }

    pub fn from_index(i: usize) -> Self {
        Dart::new(EdgeId(i / 2), (i % 2) as u8)
    }

    pub fn reversed(self) -> Self {
        Dart::new(self.edge, 1 - self.dir)
    }

    /// The half-edge the dart leaves through.
    pub fn tail_half(self) -> HalfEdge {
        HalfEdge::new(self.edge, self.dir)
    }

    /// The half-edge the dart arrives through.
    pub fn head_half(self) -> HalfEdge {
        HalfEdge::new(self.edge, 1 - self.dir)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EdgeData {
    label: String,
    ends: [VertexId; 2],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<EdgeData>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph on `n` vertices labelled `0..n` from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(i.to_string());
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(format!("e{i}"), VertexId(u), VertexId(v));
        }
        g
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> VertexId {
        self.labels.push(label.into());
        VertexId(self.labels.len() - 1)
    }

    /// Panics if an endpoint is not a vertex of the graph.
    pub fn add_edge(&mut self, label: impl Into<String>, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u.0 < self.labels.len() && v.0 < self.labels.len(), "edge endpoint out of range");
        self.edges.push(EdgeData { label: label.into(), ends: [u, v] });
        EdgeId(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn edge_label(&self, e: EdgeId) -> &str {
        &self.edges[e.0].label
    }

    pub fn find_vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn find_edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e.0].ends
    }

    pub fn half_edge_vertex(&self, h: HalfEdge) -> VertexId {
        self.edges[h.edge.0].ends[h.end as usize]
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        self.edges[d.edge.0].ends[d.dir as usize]
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.edges[d.edge.0].ends[1 - d.dir as usize]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let [a, b] = self.endpoints(e);
        a == b
    }

    /// The endpoint of `e` other than `v`; `v` itself for a loop.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Half-edges at `v`, sorted by `(edge, end)`. A loop contributes both ends.
    pub fn half_edges_at(&self, v: VertexId) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for end in 0..2u8 {
                if e.ends[end as usize] == v {
                    out.push(HalfEdge::new(EdgeId(i), end));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| e.ends.iter().filter(|&&w| w == v).count())
            .sum()
    }

    /// Per-vertex lists of half-edges, sorted by `(edge, end)`.
    pub fn incidence(&self) -> Vec<Vec<HalfEdge>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            for end in 0..2u8 {
                inc[e.ends[end as usize].0].push(HalfEdge::new(EdgeId(i), end));
            }
        }
        inc
    }

    /// Adjacency lists of `(neighbour, edge)` pairs in edge order; loops appear twice.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            let [a, b] = e.ends;
            adj[a.0].push((b, EdgeId(i)));
            adj[b.0].push((a, EdgeId(i)));
        }
        adj
    }

    /// Lowest-id edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| (e.ends[0] == u && e.ends[1] == v) || (e.ends[0] == v && e.ends[1] == u))
            .map(EdgeId)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.ends[0] == e.ends[1])
    }

    pub fn parallel_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut seen: std::collections::BTreeMap<(VertexId, VertexId), EdgeId> = Default::default();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.ends[0] == e.ends[1] {
                continue;
            }
            let key = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
            match seen.get(&key) {
                Some(&first) => out.push((first, EdgeId(i))),
                None => {
                    seen.insert(key, EdgeId(i));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.parallel_pairs().is_empty()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![VertexId(s)];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = id;
                        members.push(w);
                        queue.push_back(w.0);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices`, with maps back to this graph.
    pub fn induced(&self, vertices: &[VertexId]) -> Subgraph {
        let mut vmap = vec![None; self.vertex_count()];
        let mut g = Graph::new();
        let mut vertex_origin = Vec::new();
        for &v in vertices {
            vmap[v.0] = Some(g.add_vertex(self.label(v)));
            vertex_origin.push(v);
        }
        let mut edge_origin = Vec::new();
        for e in self.edges() {
            let [a, b] = self.endpoints(e);
            if let (Some(x), Some(y)) = (vmap[a.0], vmap[b.0]) {
                g.add_edge(self.edge_label(e), x, y);
                edge_origin.push(e);
            }
        }
        Subgraph { graph: g, vertex_origin, edge_origin }
    }

    /// Adds a fresh vertex joined to every existing vertex.
    pub fn with_apex(&self) -> (Graph, VertexId) {
        let mut g = self.clone();
        let apex = g.add_vertex("*apex*");
        for v in 0..self.vertex_count() {
            g.add_edge(format!("*apex-{v}*"), apex, VertexId(v));
        }
        (g, apex)
    }
}

/// An induced subgraph together with the ids its parts had in the parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loops_and_parallel_edges_are_flagged() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (2, 2)]);
        assert!(g.has_loops());
        assert_eq!(g.parallel_pairs(), vec![(EdgeId(0), EdgeId(1))]);
        assert_eq!(g.degree(VertexId(2)), 2);
        assert_eq!(g.half_edges_at(VertexId(2)).len(), 2);
    }

    #[test]
    fn components_are_sorted() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 2)]);
        assert_eq!(
            g.components(),
            vec![vec![VertexId(0), VertexId(2)], vec![VertexId(1)], vec![VertexId(3), VertexId(4)]]
        );
    }

    #[test]
    fn dart_halves() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let d = Dart::new(EdgeId(0), 1);
        assert_eq!(g.tail(d), VertexId(1));
        assert_eq!(g.head(d), VertexId(0));
        assert_eq!(g.half_edge_vertex(d.head_half()), VertexId(0));
        assert_eq!(d.reversed().tail_half(), d.head_half());
    }
}
