//! Rotation systems, face tracing, and cycles on the sphere.
//!
//! A rotation system fixes a cyclic order of half-edges at every vertex.
//! Tracing it (leave along a dart, turn to the rotation successor of the
//! arriving half-edge) yields the faces of a cellular embedding in an
//! orientable surface, whose genus follows from Euler's formula.
//!
//! On the sphere every cycle splits the traced faces into two sides. Two
//! cycles cross when no side of one lies inside a side of the other; a
//! family with no crossing pair is laminar for every choice of outer face.

mod connectivity;
mod minor;
mod planarity;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Dart, EdgeId, Graph, HalfEdge, VertexId};

pub use connectivity::{articulation_points, blocks, is_2_connected};
pub use minor::{exact_minor_search, outerplanarity_witness, MinorTarget, MinorWitness};
pub use planarity::{test_outerplanar, test_planar, OuterplaneStructure, Outerplanarity, Planarity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("malformed rotator at vertex {0}")]
    MalformedRotator(VertexId),
    #[error("rotation system has {got} rotators for {expected} vertices")]
    RotatorCount { expected: usize, got: usize },
    #[error("embedding has genus {0}, expected a sphere")]
    NotSpherical(usize),
    #[error("edge set is not a cycle")]
    NotACycle,
}

/// Cyclic order of the half-edges at every vertex.
///
/// Each rotator is stored starting from its smallest half-edge, so two
/// systems describing the same cyclic orders compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotators: Vec<Vec<HalfEdge>>,
    succ: Vec<HalfEdge>,
}

impl RotationSystem {
    pub fn new(g: &Graph, rotators: Vec<Vec<HalfEdge>>) -> Result<Self, EmbeddingError> {
        if rotators.len() != g.vertex_count() {
            return Err(EmbeddingError::RotatorCount { expected: g.vertex_count(), got: rotators.len() });
        }
        let inc = g.incidence();
        let mut succ = vec![HalfEdge::new(EdgeId(0), 0); 2 * g.edge_count()];
        let mut normalised = Vec::with_capacity(rotators.len());
        for (v, mut rot) in rotators.into_iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort();
            if sorted != inc[v] {
                return Err(EmbeddingError::MalformedRotator(VertexId(v)));
            }
            if let Some(pos) = rot.iter().enumerate().min_by_key(|(_, h)| **h).map(|(i, _)| i) {
                rot.rotate_left(pos);
            }
            for i in 0..rot.len() {
                succ[rot[i].index()] = rot[(i + 1) % rot.len()];
            }
            normalised.push(rot);
        }
        Ok(RotationSystem { rotators: normalised, succ })
    }

    /// Every rotator in `(edge, end)` order.
    pub fn sorted(g: &Graph) -> Self {
        Self::new(g, g.incidence()).expect("incidence lists form a rotation system")
    }

    pub fn rotator(&self, v: VertexId) -> &[HalfEdge] {
        &self.rotators[v.0]
    }

    pub fn rotators(&self) -> &[Vec<HalfEdge>] {
        &self.rotators
    }

    pub fn succ(&self, h: HalfEdge) -> HalfEdge {
        self.succ[h.index()]
    }

    /// The dart following `d` on its traced face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let h = self.succ(d.head_half());
        Dart::new(h.edge, h.end)
    }

    /// Reverses every rotator (the mirror embedding).
    pub fn mirrored(&self, g: &Graph) -> Self {
        let rots = self.rotators.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Self::new(g, rots).expect("mirror of a rotation system")
    }

    /// Restricts to an induced subgraph given its vertex and edge provenance.
    pub fn restrict(&self, sub: &crate::graph::Subgraph) -> Self {
        let mut emap = std::collections::BTreeMap::new();
        for (i, &e) in sub.edge_origin.iter().enumerate() {
            emap.insert(e, EdgeId(i));
        }
        let rots = sub
            .vertex_origin
            .iter()
            .map(|&v| {
                self.rotators[v.0]
                    .iter()
                    .filter_map(|h| emap.get(&h.edge).map(|&e| HalfEdge::new(e, h.end)))
                    .collect()
            })
            .collect();
        Self::new(&sub.graph, rots).expect("restriction to an induced subgraph")
    }
}

/// The face-tracing orbits of a rotation system on a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracedFaces {
    orbits: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    ends: Vec<[VertexId; 2]>,
    vertex_count: usize,
    genus: usize,
}

pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<TracedFaces, EmbeddingError> {
    if g.vertex_count() == 0 {
        return Err(EmbeddingError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if rot.rotators.len() != g.vertex_count() || rot.succ.len() != 2 * g.edge_count() {
        return Err(EmbeddingError::RotatorCount { expected: g.vertex_count(), got: rot.rotators.len() });
    }
    let n_darts = 2 * g.edge_count();
    let mut face_of = vec![usize::MAX; n_darts];
    let mut orbits = Vec::new();
    for start in 0..n_darts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut d = Dart::from_index(start);
        while face_of[d.index()] == usize::MAX {
            face_of[d.index()] = id;
            orbit.push(d);
            d = rot.next_dart(d);
        }
        orbits.push(orbit);
    }
    if orbits.is_empty() {
        // A lone vertex: the whole sphere is one face.
        orbits.push(Vec::new());
    }
    let twice_genus = 2 + g.edge_count() as isize - g.vertex_count() as isize - orbits.len() as isize;
    debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
    Ok(TracedFaces {
        orbits,
        face_of,
        ends: g.edges().map(|e| g.endpoints(e)).collect(),
        vertex_count: g.vertex_count(),
        genus: (twice_genus / 2) as usize,
    })
}

/// Partition of the traced faces by a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    /// The side holding the lowest-numbered face.
    pub first: FixedBitSet,
    pub second: FixedBitSet,
}

/// Result of asking whether a cycle family is laminar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nesting {
    Laminar(NestingForest),
    /// Indices of the lexicographically first crossing pair.
    Crossing(usize, usize),
}

/// Interiors of a cycle family relative to an outer face, with the
/// containment forest (`parent[i]` is the smallest interior strictly
/// containing interior `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestingForest {
    pub outer_face: usize,
    pub interiors: Vec<FixedBitSet>,
    pub parent: Vec<Option<usize>>,
}

impl NestingForest {
    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&i| self.parent[i].is_none()).collect()
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&j| self.parent[j] == Some(i)).collect()
    }

    /// Pairwise recheck that interiors are disjoint or nested.
    pub fn is_laminar(&self) -> bool {
        let k = self.interiors.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let (a, b) = (&self.interiors[i], &self.interiors[j]);
                a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a)
            })
        })
    }
}

impl TracedFaces {
    pub fn orbits(&self) -> &[Vec<Dart>] {
        &self.orbits
    }

    pub fn face_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count as isize - self.ends.len() as isize + self.orbits.len() as isize
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    fn check_cycle(&self, cycle: &[EdgeId]) -> Result<(), EmbeddingError> {
        if cycle.is_empty() || cycle.iter().any(|e| e.0 >= self.ends.len()) {
            return Err(EmbeddingError::NotACycle);
        }
        let mut sorted = cycle.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != cycle.len() {
            return Err(EmbeddingError::NotACycle);
        }
        let mut deg = vec![0usize; self.vertex_count];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for e in cycle {
            let [a, b] = self.ends[e.0];
            deg[a.0] += 1;
            deg[b.0] += 1;
            adj[a.0].push(b.0);
            adj[b.0].push(a.0);
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return Err(EmbeddingError::NotACycle);
        }
        let start = self.ends[cycle[0].0][0].0;
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if (0..self.vertex_count).any(|v| deg[v] > 0 && !seen[v]) {
            return Err(EmbeddingError::NotACycle);
        }
        Ok(())
    }

    /// Splits the traced faces into the two regions a cycle bounds.
    pub fn cycle_sides(&self, cycle: &[EdgeId]) -> Result<Sides, EmbeddingError> {
        if self.genus != 0 {
            return Err(EmbeddingError::NotSpherical(self.genus));
        }
        self.check_cycle(cycle)?;
        let nf = self.orbits.len();
        let mut on_cycle = vec![false; self.ends.len()];
        for e in cycle {
            on_cycle[e.0] = true;
        }
        let mut uf = UnionFind::new(nf);
        for e in 0..self.ends.len() {
            if !on_cycle[e] {
                uf.union(self.face_of[2 * e], self.face_of[2 * e + 1]);
            }
        }
        let root0 = uf.find(0);
        let mut first = FixedBitSet::with_capacity(nf);
        let mut second = FixedBitSet::with_capacity(nf);
        let mut other_root = None;
        for f in 0..nf {
            let r = uf.find(f);
            if r == root0 {
                first.insert(f);
            } else {
                debug_assert!(other_root.is_none_or(|o| o == r), "a sphere cycle has two sides");
                other_root = Some(r);
                second.insert(f);
            }
        }
        debug_assert!(!second.is_clear());
        Ok(Sides { first, second })
    }

    pub fn cycles_cross(&self, c1: &[EdgeId], c2: &[EdgeId]) -> Result<bool, EmbeddingError> {
        let s1 = self.cycle_sides(c1)?;
        let s2 = self.cycle_sides(c2)?;
        Ok(sides_cross(&s1, &s2))
    }

    /// Laminar forest with the first traced orbit as outer face, or the
    /// first crossing pair.
    pub fn nesting_forest(&self, cycles: &[Vec<EdgeId>]) -> Result<Nesting, EmbeddingError> {
        self.nesting_forest_with_outer(cycles, 0)
    }

    pub fn nesting_forest_with_outer(
        &self,
        cycles: &[Vec<EdgeId>],
        outer: usize,
    ) -> Result<Nesting, EmbeddingError> {
        let sides = cycles.iter().map(|c| self.cycle_sides(c)).collect::<Result<Vec<_>, _>>()?;
        for i in 0..sides.len() {
            for j in i + 1..sides.len() {
                if sides_cross(&sides[i], &sides[j]) {
                    return Ok(Nesting::Crossing(i, j));
                }
            }
        }
        let interiors: Vec<FixedBitSet> = sides
            .into_iter()
            .map(|s| if s.first.contains(outer) { s.second } else { s.first })
            .collect();
        let parent = containment_parents(&interiors);
        Ok(Nesting::Laminar(NestingForest { outer_face: outer, interiors, parent }))
    }
}

pub fn sides_cross(s1: &Sides, s2: &Sides) -> bool {
    let (a, a2) = (&s1.first, &s1.second);
    let (b, b2) = (&s2.first, &s2.second);
    !(a.is_subset(b) || a.is_subset(b2) || a2.is_subset(b) || a2.is_subset(b2))
}

/// Smallest strictly containing interior for each member of a laminar family.
pub fn containment_parents(interiors: &[FixedBitSet]) -> Vec<Option<usize>> {
    let k = interiors.len();
    (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i)
                .filter(|&j| {
                    interiors[i].is_subset(&interiors[j]) && (interiors[i] != interiors[j] || j < i)
                })
                .min_by_key(|&j| (interiors[j].count_ones(..), j))
        })
        .collect()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn he(e: usize, end: u8) -> HalfEdge {
        HalfEdge::new(EdgeId(e), end)
    }

    #[test]
    fn triangle_traces_two_faces() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let tf = trace_faces(&g, &RotationSystem::sorted(&g)).unwrap();
        assert_eq!(tf.face_count(), 2);
        assert_eq!(tf.genus(), 0);
    }

    fn planar_k4() -> RotationSystem {
        // Vertex 3 in the middle of triangle 0-1-2, all rotators counter-clockwise.
        // edges: 0:01 1:02 2:03 3:12 4:13 5:23
        RotationSystem::new(
            &k4(),
            vec![
                vec![he(0, 0), he(2, 0), he(1, 0)],
                vec![he(3, 0), he(4, 0), he(0, 1)],
                vec![he(1, 1), he(5, 0), he(3, 1)],
                vec![he(2, 1), he(4, 1), he(5, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn k4_planar_and_toroidal_rotators() {
        let g = k4();
        let rot = planar_k4();
        let tf = trace_faces(&g, &rot).unwrap();
        assert_eq!((tf.face_count(), tf.genus()), (4, 0));
        let mut rots = rot.rotators().to_vec();
        rots[0].swap(0, 1);
        let tf = trace_faces(&g, &RotationSystem::new(&g, rots).unwrap()).unwrap();
        assert_eq!((tf.face_count(), tf.genus()), (2, 1));
    }

    #[test]
    fn malformed_rotators_rejected() {
        let g = k4();
        let mut rots = planar_k4().rotators().to_vec();
        rots[0].pop();
        assert_eq!(RotationSystem::new(&g, rots), Err(EmbeddingError::MalformedRotator(VertexId(0))));
        let g2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(trace_faces(&g2, &RotationSystem::sorted(&g2)), Err(EmbeddingError::Disconnected));
    }

    #[test]
    fn face_cycle_sides() {
        let g = k4();
        let tf = trace_faces(&g, &planar_k4()).unwrap();
        for orbit in tf.orbits() {
            let cycle: Vec<EdgeId> = orbit.iter().map(|d| d.edge).collect();
            let s = tf.cycle_sides(&cycle).unwrap();
            let small = if s.first.count_ones(..) == 1 { &s.first } else { &s.second };
            assert_eq!(small.count_ones(..), 1);
            assert!(small.contains(tf.face_of(orbit[0])));
        }
    }

    #[test]
    fn genus_one_has_no_sides() {
        let g = k4();
        let mut rots = planar_k4().rotators().to_vec();
        rots[0].swap(0, 1);
        let tf = trace_faces(&g, &RotationSystem::new(&g, rots).unwrap()).unwrap();
        assert_eq!(tf.cycle_sides(&[EdgeId(0), EdgeId(1), EdgeId(3)]), Err(EmbeddingError::NotSpherical(1)));
    }

    #[test]
    fn not_a_cycle() {
        let g = k4();
        let tf = trace_faces(&g, &planar_k4()).unwrap();
        assert_eq!(tf.cycle_sides(&[EdgeId(0), EdgeId(1)]), Err(EmbeddingError::NotACycle));
        assert_eq!(
            tf.cycle_sides(&[EdgeId(0), EdgeId(3), EdgeId(1), EdgeId(5), EdgeId(2), EdgeId(4)]),
            Err(EmbeddingError::NotACycle)
        );
    }

    #[test]
    fn k4_triangles_nest_under_the_outer_triangle() {
        let g = k4();
        let tf = trace_faces(&g, &planar_k4()).unwrap();
        let triangles = vec![
            vec![EdgeId(0), EdgeId(3), EdgeId(1)],
            vec![EdgeId(0), EdgeId(4), EdgeId(2)],
            vec![EdgeId(1), EdgeId(5), EdgeId(2)],
            vec![EdgeId(3), EdgeId(5), EdgeId(4)],
        ];
        let Nesting::Laminar(forest) = tf.nesting_forest(&triangles).unwrap() else {
            panic!("triangles never cross");
        };
        assert!(forest.is_laminar());
        let roots = forest.roots();
        assert_eq!(roots.len(), 1);
        let root = roots[0];
        assert_eq!(forest.interiors[root].count_ones(..), 3);
        let kids = forest.children(root);
        assert_eq!(kids.len(), 3);
        for &a in &kids {
            assert_eq!(forest.interiors[a].count_ones(..), 1);
        }
        assert_eq!(tf.nesting_forest(&[]).unwrap(), Nesting::Laminar(NestingForest {
            outer_face: 0,
            interiors: vec![],
            parent: vec![],
        }));
    }

    #[test]
    fn equal_cycles_do_not_cross() {
        let g = k4();
        let tf = trace_faces(&g, &planar_k4()).unwrap();
        let c = [EdgeId(0), EdgeId(3), EdgeId(1)];
        assert!(!tf.cycles_cross(&c, &c).unwrap());
    }
}
