//! 2-complexes: a multigraph plus a set of faces given as closed walks.
//!
//! Face boundaries are stored as dart sequences so that contracting an edge
//! is always defined; validation is what insists on genuine cycles. Each
//! boundary is kept in a canonical rotation/reflection so that equal cycles
//! compare equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Dart, EdgeId, Graph, HalfEdge, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("face `{face}` is not a closed walk of the graph")]
    NotAWalk { face: String },
    #[error("face `{face}` is empty")]
    EmptyFace { face: String },
    #[error("no edge joins `{u}` and `{v}` (face `{face}`)")]
    MissingEdge { face: String, u: String, v: String },
    #[error("`{face}` is not a cycle of the graph")]
    NotACycle { face: String },
    #[error("vertices do not form a path: {0}")]
    NotAPath(String),
    #[error("cone over a complex with a loop (edge `{0}`)")]
    LoopInCone(String),
    #[error("pairing is not a bijection between the edges at the summed vertex")]
    BadPairing,
}

/// A face: a label and a closed walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    label: String,
    darts: Vec<Dart>,
}

impl Face {
    pub fn new(label: impl Into<String>, darts: Vec<Dart>) -> Self {
        Face { label: label.into(), darts }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge)
    }

    pub fn vertices<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexId> + 'a {
        self.darts.iter().map(move |&d| g.tail(d))
    }

    /// No repeated vertex or edge, and at least three edges.
    pub fn is_genuine_cycle(&self, g: &Graph) -> bool {
        if self.darts.len() < 3 {
            return false;
        }
        let vs: BTreeSet<_> = self.vertices(g).collect();
        let es: BTreeSet<_> = self.edges().collect();
        vs.len() == self.darts.len() && es.len() == self.darts.len()
    }
}

/// Lexicographically least rotation/reflection of a closed walk.
pub fn canonical_walk(g: &Graph, darts: &[Dart]) -> Vec<Dart> {
    let k = darts.len();
    if k == 0 {
        return Vec::new();
    }
    let reflected: Vec<Dart> = darts.iter().rev().map(|d| d.reversed()).collect();
    let key = |w: &[Dart], r: usize| -> Vec<(usize, usize, u8)> {
        (0..k)
            .map(|i| {
                let d = w[(r + i) % k];
                (g.tail(d).0, d.edge.0, d.dir)
            })
            .collect()
    };
    let mut best: Option<(Vec<(usize, usize, u8)>, &[Dart], usize)> = None;
    for w in [darts, &reflected[..]] {
        for r in 0..k {
            let kk = key(w, r);
            if best.as_ref().is_none_or(|(b, _, _)| kk < *b) {
                best = Some((kk, w, r));
            }
        }
    }
    let (_, w, r) = best.expect("non-empty walk");
    (0..k).map(|i| w[(r + i) % k]).collect()
}

/// A face given by its vertex sequence; edges are looked up in the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSpec {
    pub label: String,
    pub vertices: Vec<VertexId>,
}

impl FaceSpec {
    pub fn new(label: impl Into<String>, vertices: Vec<VertexId>) -> Self {
        FaceSpec { label: label.into(), vertices }
    }
}

/// Resolves a vertex cycle into darts using the lowest-id joining edge.
pub fn darts_for_cycle(g: &Graph, spec: &FaceSpec) -> Result<Vec<Dart>, ComplexError> {
    let k = spec.vertices.len();
    let mut darts = Vec::with_capacity(k);
    for i in 0..k {
        let (u, v) = (spec.vertices[i], spec.vertices[(i + 1) % k]);
        if u.0 >= g.vertex_count() {
            return Err(ComplexError::UnknownVertex(u));
        }
        let e = g.edge_between(u, v).ok_or_else(|| ComplexError::MissingEdge {
            face: spec.label.clone(),
            u: g.label(u).to_string(),
            v: g.label(v).to_string(),
        })?;
        let dir = if g.endpoints(e)[0] == u { 0 } else { 1 };
        darts.push(Dart::new(e, dir));
    }
    Ok(darts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Loop { edge: EdgeId, vertex: VertexId },
    ParallelEdges { first: EdgeId, second: EdgeId },
    NonCycleFace { face: FaceId },
    DuplicateFace { first: FaceId, second: FaceId },
}

impl Diagnostic {
    pub fn describe(&self, c: &TwoComplex) -> String {
        let g = c.graph();
        match *self {
            Diagnostic::Loop { edge, vertex } => {
                format!("loop `{}` at `{}`", g.edge_label(edge), g.label(vertex))
            }
            Diagnostic::ParallelEdges { first, second } => {
                format!("parallel edges `{}` and `{}`", g.edge_label(first), g.edge_label(second))
            }
            Diagnostic::NonCycleFace { face } => {
                format!("face `{}` is not a genuine cycle", c.face(face).label())
            }
            Diagnostic::DuplicateFace { first, second } => format!(
                "faces `{}` and `{}` have the same boundary",
                c.face(first).label(),
                c.face(second).label()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    graph: Graph,
    faces: Vec<Face>,
}

impl TwoComplex {
    /// Checks that every face is a non-empty closed walk and canonicalises it.
    pub fn new(graph: Graph, faces: Vec<Face>) -> Result<Self, ComplexError> {
        let mut out = Vec::with_capacity(faces.len());
        for f in faces {
            if f.darts.is_empty() {
                return Err(ComplexError::EmptyFace { face: f.label });
            }
            let k = f.darts.len();
            for i in 0..k {
                let (a, b) = (f.darts[i], f.darts[(i + 1) % k]);
                if a.edge.0 >= graph.edge_count() || b.edge.0 >= graph.edge_count() {
                    return Err(ComplexError::NotAWalk { face: f.label });
                }
                if graph.head(a) != graph.tail(b) {
                    return Err(ComplexError::NotAWalk { face: f.label });
                }
            }
            let darts = canonical_walk(&graph, &f.darts);
            out.push(Face { label: f.label, darts });
        }
        Ok(TwoComplex { graph, faces: out })
    }

    pub fn from_specs(graph: Graph, specs: &[FaceSpec]) -> Result<Self, ComplexError> {
        let faces = specs
            .iter()
            .map(|s| Ok(Face::new(s.label.clone(), darts_for_cycle(&graph, s)?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        TwoComplex::new(graph, faces)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn find_face(&self, label: &str) -> Option<FaceId> {
        self.faces.iter().position(|f| f.label == label).map(FaceId)
    }

    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f.0].vertices(&self.graph).collect()
    }

    pub fn face_edges(&self, f: FaceId) -> Vec<EdgeId> {
        self.faces[f.0].edges().collect()
    }

    /// Number of face traversals of each edge.
    pub fn edge_face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.graph.edge_count()];
        for f in &self.faces {
            for e in f.edges() {
                counts[e.0] += 1;
            }
        }
        counts
    }

    pub fn is_simplicial(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        let g = &self.graph;
        let mut out = Vec::new();
        for e in g.edges() {
            if g.is_loop(e) {
                out.push(Diagnostic::Loop { edge: e, vertex: g.endpoints(e)[0] });
            }
        }
        for (first, second) in g.parallel_pairs() {
            out.push(Diagnostic::ParallelEdges { first, second });
        }
        let mut seen: BTreeMap<Vec<Dart>, FaceId> = BTreeMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            if !f.is_genuine_cycle(g) {
                out.push(Diagnostic::NonCycleFace { face: FaceId(i) });
            }
            // Direction-free identity: canonical darts already fix rotation and reflection.
            match seen.get(&f.darts) {
                Some(&first) => out.push(Diagnostic::DuplicateFace { first, second: FaceId(i) }),
                None => {
                    seen.insert(f.darts.clone(), FaceId(i));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn skeleton(&self) -> Graph {
        self.graph.clone()
    }

    /// Corners at `v`: one per visit of a face walk to `v`, as
    /// `(face, arriving half-edge, leaving half-edge)`.
    pub fn corners_at(&self, v: VertexId) -> Vec<(FaceId, HalfEdge, HalfEdge)> {
        let mut out = Vec::new();
        for (fi, f) in self.faces.iter().enumerate() {
            let k = f.darts.len();
            for i in 0..k {
                let (a, b) = (f.darts[i], f.darts[(i + 1) % k]);
                if self.graph.head(a) == v {
                    out.push((FaceId(fi), a.head_half(), b.tail_half()));
                }
            }
        }
        out
    }

    pub fn link_graph(&self, v: VertexId) -> Result<LinkGraph, ComplexError> {
        if v.0 >= self.graph.vertex_count() {
            return Err(ComplexError::UnknownVertex(v));
        }
        let halves = self.graph.half_edges_at(v);
        let mut lg = Graph::new();
        let mut index = BTreeMap::new();
        for &h in &halves {
            let e = h.edge;
            let label = if self.graph.is_loop(e) {
                format!("{}#{}", self.graph.edge_label(e), h.end)
            } else {
                self.graph.edge_label(e).to_string()
            };
            index.insert(h, lg.add_vertex(label));
        }
        let mut faces = Vec::new();
        for (f, a, b) in self.corners_at(v) {
            lg.add_edge(self.faces[f.0].label.clone(), index[&a], index[&b]);
            faces.push(f);
        }
        Ok(LinkGraph { host: v, graph: lg, half_edges: halves, faces })
    }

    pub fn cone(&self) -> Result<TwoComplex, ComplexError> {
        let g = &self.graph;
        if let Some(e) = g.edges().find(|&e| g.is_loop(e)) {
            return Err(ComplexError::LoopInCone(g.edge_label(e).to_string()));
        }
        let mut top_label = "top".to_string();
        while g.find_vertex(&top_label).is_some() {
            top_label.push('_');
        }
        let mut h = g.clone();
        let top = h.add_vertex(top_label.clone());
        let spokes: Vec<EdgeId> = g
            .vertices()
            .map(|v| h.add_edge(format!("{}_{}", top_label, g.label(v)), top, v))
            .collect();
        let mut faces = self.faces.clone();
        for e in g.edges() {
            let [u, v] = g.endpoints(e);
            let darts = vec![
                Dart::new(spokes[u.0], 0),
                Dart::new(e, 0),
                Dart::new(spokes[v.0], 1),
            ];
            faces.push(Face::new(format!("{}_{}", top_label, g.edge_label(e)), darts));
        }
        TwoComplex::new(h, faces)
    }

    /// Contracts every edge of `path`, merging its vertices into one.
    pub fn contract_path(&self, path: &Path) -> Result<Contraction, ComplexError> {
        let g = &self.graph;
        path.check(g)?;
        let on_path: BTreeSet<VertexId> = path.vertices.iter().copied().collect();
        let contracted: BTreeSet<EdgeId> = path.edges.iter().copied().collect();
        let anchor = *on_path.iter().next().expect("paths are non-empty");

        let mut h = Graph::new();
        let mut vertex_map = vec![VertexId(usize::MAX); g.vertex_count()];
        let mut merged = None;
        for v in g.vertices() {
            if on_path.contains(&v) && v != anchor {
                continue;
            }
            let label = if v == anchor && path.vertices.len() > 1 {
                path.vertices.iter().map(|&w| g.label(w)).collect::<Vec<_>>().join("+")
            } else {
                g.label(v).to_string()
            };
            let id = h.add_vertex(label);
            if v == anchor {
                merged = Some(id);
            }
            vertex_map[v.0] = id;
        }
        let merged = merged.expect("anchor kept");
        for &v in &on_path {
            vertex_map[v.0] = merged;
        }
        let mut edge_map = vec![None; g.edge_count()];
        for e in g.edges() {
            if contracted.contains(&e) {
                continue;
            }
            let [a, b] = g.endpoints(e);
            edge_map[e.0] = Some(h.add_edge(g.edge_label(e), vertex_map[a.0], vertex_map[b.0]));
        }
        let faces = self
            .faces
            .iter()
            .map(|f| {
                let darts = f
                    .darts
                    .iter()
                    .filter_map(|d| edge_map[d.edge.0].map(|e| Dart::new(e, d.dir)))
                    .collect::<Vec<_>>();
                Face::new(f.label.clone(), darts)
            })
            .collect::<Vec<_>>();
        let complex = TwoComplex::new(h, faces)?;
        Ok(Contraction { complex, merged, vertex_map, edge_map })
    }

    /// Removes the given faces. The 1-skeleton is left intact.
    pub fn delete_faces(&self, faces: &BTreeSet<FaceId>) -> Result<TwoComplex, ComplexError> {
        if let Some(&f) = faces.iter().find(|f| f.0 >= self.faces.len()) {
            return Err(ComplexError::UnknownFace(f));
        }
        let kept = self
            .faces
            .iter()
            .enumerate()
            .filter(|(i, _)| !faces.contains(&FaceId(*i)))
            .map(|(_, f)| f.clone())
            .collect();
        Ok(TwoComplex { graph: self.graph.clone(), faces: kept })
    }

    /// The subcomplex made of the given faces and the vertices and edges on them.
    pub fn face_subcomplex(&self, faces: &[FaceId]) -> SubComplex {
        let g = &self.graph;
        let mut vset = BTreeSet::new();
        let mut eset = BTreeSet::new();
        for &f in faces {
            for d in self.faces[f.0].darts() {
                eset.insert(d.edge);
                vset.insert(g.tail(*d));
                vset.insert(g.head(*d));
            }
        }
        let mut h = Graph::new();
        let mut vmap = vec![None; g.vertex_count()];
        let mut vertex_origin = Vec::new();
        for &v in &vset {
            vmap[v.0] = Some(h.add_vertex(g.label(v)));
            vertex_origin.push(v);
        }
        let mut emap = vec![None; g.edge_count()];
        let mut edge_origin = Vec::new();
        for &e in &eset {
            let [a, b] = g.endpoints(e);
            emap[e.0] = Some(h.add_edge(
                g.edge_label(e),
                vmap[a.0].expect("endpoint kept"),
                vmap[b.0].expect("endpoint kept"),
            ));
            edge_origin.push(e);
        }
        let new_faces = faces
            .iter()
            .map(|&f| {
                let face = &self.faces[f.0];
                let darts = face
                    .darts
                    .iter()
                    .map(|d| Dart::new(emap[d.edge.0].expect("edge kept"), d.dir))
                    .collect();
                Face::new(face.label.clone(), darts)
            })
            .collect();
        let complex = TwoComplex::new(h, new_faces).expect("faces of a subcomplex stay closed walks");
        SubComplex { complex, vertex_origin, edge_origin, face_origin: faces.to_vec() }
    }

    /// Vertex sets of the connected components of the skeleton together with
    /// the faces lying in each component.
    pub fn components(&self) -> Vec<(Vec<VertexId>, Vec<FaceId>)> {
        let comps = self.graph.components();
        let mut which = vec![0; self.graph.vertex_count()];
        for (i, c) in comps.iter().enumerate() {
            for v in c {
                which[v.0] = i;
            }
        }
        let mut faces = vec![Vec::new(); comps.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            if let Some(d) = f.darts.first() {
                faces[which[self.graph.tail(*d).0]].push(FaceId(fi));
            }
        }
        comps.into_iter().zip(faces).collect()
    }
}

/// The result of contracting a path.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub complex: TwoComplex,
    /// The vertex the path was merged into.
    pub merged: VertexId,
    pub vertex_map: Vec<VertexId>,
    /// `None` for the contracted edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

#[derive(Clone, Debug)]
pub struct SubComplex {
    pub complex: TwoComplex,
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
    pub face_origin: Vec<FaceId>,
}

/// A path of distinct vertices with the edges joining consecutive ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { vertices: vec![v], edges: Vec::new() }
    }

    /// Picks the lowest-id edge between consecutive vertices.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::NotAPath("empty".into()));
        }
        let mut edges = Vec::new();
        for w in vertices.windows(2) {
            let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                ComplexError::NotAPath(format!("`{}` and `{}` are not adjacent", g.label(w[0]), g.label(w[1])))
            })?;
            edges.push(e);
        }
        let p = Path { vertices: vertices.to_vec(), edges };
        p.check(g)?;
        Ok(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    fn check(&self, g: &Graph) -> Result<(), ComplexError> {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return Err(ComplexError::NotAPath("length mismatch".into()));
        }
        if let Some(v) = self.vertices.iter().find(|v| v.0 >= g.vertex_count()) {
            return Err(ComplexError::UnknownVertex(*v));
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != self.vertices.len() {
            return Err(ComplexError::NotAPath("repeated vertex".into()));
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e.0 >= g.edge_count() {
                return Err(ComplexError::NotAPath(format!("unknown edge {e}")));
            }
            let [a, b] = g.endpoints(e);
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == u && b == v) || (a == v && b == u)) {
                return Err(ComplexError::NotAPath(format!(
                    "edge `{}` does not join `{}` and `{}`",
                    g.edge_label(e),
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        Ok(())
    }
}

/// The link graph at a vertex: one vertex per half-edge, one edge per face corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub host: VertexId,
    pub graph: Graph,
    /// Link vertex `i` is the half-edge `half_edges[i]` of the host complex.
    pub half_edges: Vec<HalfEdge>,
    /// Link edge `j` is a corner of face `faces[j]`.
    pub faces: Vec<FaceId>,
}

impl LinkGraph {
    pub fn vertex_of(&self, h: HalfEdge) -> Option<VertexId> {
        self.half_edges.iter().position(|&x| x == h).map(VertexId)
    }

    /// The link vertex for edge `e`; for a loop, its lower end.
    pub fn vertex_of_edge(&self, e: EdgeId) -> Option<VertexId> {
        self.half_edges.iter().position(|h| h.edge == e).map(VertexId)
    }

    pub fn edges_of_face(&self, f: FaceId) -> Vec<EdgeId> {
        self.faces.iter().enumerate().filter(|(_, &x)| x == f).map(|(i, _)| EdgeId(i)).collect()
    }
}

/// The vertex sum of two graphs at a shared vertex, with provenance maps.
#[derive(Clone, Debug)]
pub struct VertexSum {
    pub graph: Graph,
    /// New id of each vertex of the first graph (`None` for the summed vertex).
    pub left: Vec<Option<VertexId>>,
    pub right: Vec<Option<VertexId>>,
}

/// Deletes `v1` from `h1` and `v2` from `h2` and joins the far ends of each
/// pair of edges in `pairing`. Loops at the summed vertices are rejected.
pub fn vertex_sum(
    h1: &Graph,
    v1: VertexId,
    h2: &Graph,
    v2: VertexId,
    pairing: &[(EdgeId, EdgeId)],
) -> Result<VertexSum, ComplexError> {
    for (g, v) in [(h1, v1), (h2, v2)] {
        if v.0 >= g.vertex_count() {
            return Err(ComplexError::UnknownVertex(v));
        }
    }
    let inc = |g: &Graph, v: VertexId| -> Result<BTreeSet<EdgeId>, ComplexError> {
        let mut s = BTreeSet::new();
        for h in g.half_edges_at(v) {
            if g.is_loop(h.edge) {
                return Err(ComplexError::BadPairing);
            }
            s.insert(h.edge);
        }
        Ok(s)
    };
    let (i1, i2) = (inc(h1, v1)?, inc(h2, v2)?);
    let lhs: BTreeSet<EdgeId> = pairing.iter().map(|p| p.0).collect();
    let rhs: BTreeSet<EdgeId> = pairing.iter().map(|p| p.1).collect();
    if lhs != i1 || rhs != i2 || lhs.len() != pairing.len() || rhs.len() != pairing.len() {
        return Err(ComplexError::BadPairing);
    }
    let mut g = Graph::new();
    let mut left = vec![None; h1.vertex_count()];
    let mut right = vec![None; h2.vertex_count()];
    for v in h1.vertices().filter(|&v| v != v1) {
        left[v.0] = Some(g.add_vertex(format!("L:{}", h1.label(v))));
    }
    for v in h2.vertices().filter(|&v| v != v2) {
        right[v.0] = Some(g.add_vertex(format!("R:{}", h2.label(v))));
    }
    for e in h1.edges().filter(|e| !i1.contains(e)) {
        let [a, b] = h1.endpoints(e);
        g.add_edge(format!("L:{}", h1.edge_label(e)), left[a.0].unwrap(), left[b.0].unwrap());
    }
    for e in h2.edges().filter(|e| !i2.contains(e)) {
        let [a, b] = h2.endpoints(e);
        g.add_edge(format!("R:{}", h2.edge_label(e)), right[a.0].unwrap(), right[b.0].unwrap());
    }
    for &(a, b) in pairing {
        let x = left[h1.other_end(a, v1).0].unwrap();
        let y = right[h2.other_end(b, v2).0].unwrap();
        g.add_edge(format!("{}~{}", h1.edge_label(a), h2.edge_label(b)), x, y);
    }
    Ok(VertexSum { graph: g, left, right })
}

/// The 2-complex whose skeleton is `g` and whose faces are the given cycles.
pub fn associated_complex(g: &Graph, cycles: &[FaceSpec]) -> Result<TwoComplex, ComplexError> {
    let c = TwoComplex::from_specs(g.clone(), cycles)?;
    for (i, f) in c.faces().iter().enumerate() {
        if !f.is_genuine_cycle(g) {
            return Err(ComplexError::NotACycle { face: cycles[i].label.clone() });
        }
    }
    Ok(c)
}
