//! Planarity by path addition (Demoucron, Malgrange, Pertuiset), run block
//! by block, and outerplanarity via the apex cone.
//!
//! Quadratic, but the graphs here are link graphs and small skeletons.

use std::collections::{BTreeSet, VecDeque};

use super::{connectivity, is_2_connected, outerplanarity_witness, MinorWitness, RotationSystem};
use crate::graph::{Dart, EdgeId, Graph, HalfEdge, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    /// A rotation system tracing to genus 0 on every component.
    Planar(RotationSystem),
    /// Edges of a biconnected component with no plane embedding.
    NonPlanar { block: Vec<EdgeId> },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

fn dart_from(g: &Graph, e: EdgeId, from: VertexId) -> Dart {
    Dart::new(e, if g.endpoints(e)[0] == from { 0 } else { 1 })
}

struct Fragment {
    edges: Vec<EdgeId>,
    inner: Vec<bool>,
    attach: BTreeSet<VertexId>,
}

/// Plane embedding of a loopless 2-connected graph with at least two edges,
/// as a list of facial walks.
fn embed_block(h: &Graph) -> Option<Vec<Vec<Dart>>> {
    let n = h.vertex_count();
    let adj = h.adjacency();

    // Initial cycle: edge 0 plus a shortest path back avoiding it.
    let [a0, b0] = h.endpoints(EdgeId(0));
    let mut prev: Vec<Option<Dart>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[b0.0] = true;
    let mut queue = VecDeque::from([b0]);
    while let Some(x) = queue.pop_front() {
        if x == a0 {
            break;
        }
        for &(y, e) in &adj[x.0] {
            if e == EdgeId(0) || seen[y.0] {
                continue;
            }
            seen[y.0] = true;
            prev[y.0] = Some(dart_from(h, e, x));
            queue.push_back(y);
        }
    }
    let mut back = Vec::new();
    let mut x = a0;
    while x != b0 {
        let d = prev[x.0]?;
        back.push(d);
        x = h.tail(d);
    }
    back.reverse();
    let mut cycle = vec![dart_from(h, EdgeId(0), a0)];
    cycle.extend(back);

    let mut emb_v = vec![false; n];
    let mut emb_e = vec![false; h.edge_count()];
    for d in &cycle {
        emb_e[d.edge.0] = true;
        emb_v[h.tail(*d).0] = true;
    }
    let reversed: Vec<Dart> = cycle.iter().rev().map(|d| d.reversed()).collect();
    let mut faces = vec![cycle, reversed];

    loop {
        let frags = fragments(h, &adj, &emb_v, &emb_e);
        if frags.is_empty() {
            break;
        }
        let face_sets: Vec<BTreeSet<VertexId>> =
            faces.iter().map(|f| f.iter().map(|&d| h.tail(d)).collect()).collect();
        let mut choice = None;
        for (i, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&fi| fr.attach.is_subset(&face_sets[fi])).collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi_frag, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(h, &adj, &frags[fi_frag]);
        for d in &path {
            emb_e[d.edge.0] = true;
            emb_v[h.tail(*d).0] = true;
            emb_v[h.head(*d).0] = true;
        }
        let a = h.tail(path[0]);
        let b = h.head(*path.last().expect("non-empty path"));
        let face = &faces[face_idx];
        let ia = face.iter().position(|&d| h.tail(d) == a).expect("attachment on face");
        let mut rotated = face.clone();
        rotated.rotate_left(ia);
        let ib = rotated.iter().position(|&d| h.tail(d) == b).expect("attachment on face");
        let mut f1: Vec<Dart> = rotated[..ib].to_vec();
        f1.extend(path.iter().rev().map(|d| d.reversed()));
        let mut f2: Vec<Dart> = rotated[ib..].to_vec();
        f2.extend(path.iter().copied());
        faces[face_idx] = f1;
        faces.push(f2);
    }
    Some(faces)
}

fn fragments(h: &Graph, adj: &[Vec<(VertexId, EdgeId)>], emb_v: &[bool], emb_e: &[bool]) -> Vec<Fragment> {
    let n = h.vertex_count();
    let mut out = Vec::new();
    for e in h.edges() {
        let [a, b] = h.endpoints(e);
        if !emb_e[e.0] && emb_v[a.0] && emb_v[b.0] {
            out.push(Fragment { edges: vec![e], inner: vec![false; n], attach: [a, b].into_iter().collect() });
        }
    }
    let mut assigned = vec![false; n];
    for s in 0..n {
        if emb_v[s] || assigned[s] {
            continue;
        }
        let mut inner = vec![false; n];
        let mut edges = BTreeSet::new();
        let mut attach = BTreeSet::new();
        inner[s] = true;
        assigned[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                edges.insert(e);
                if emb_v[y.0] {
                    attach.insert(y);
                } else if !assigned[y.0] {
                    assigned[y.0] = true;
                    inner[y.0] = true;
                    queue.push_back(y.0);
                }
            }
        }
        out.push(Fragment { edges: edges.into_iter().collect(), inner, attach });
    }
    out.sort_by_key(|f| f.edges[0]);
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(h: &Graph, adj: &[Vec<(VertexId, EdgeId)>], fr: &Fragment) -> Vec<Dart> {
    let a = *fr.attach.iter().next().expect("fragment has attachments");
    if fr.edges.len() == 1 && !fr.inner.iter().any(|&x| x) {
        return vec![dart_from(h, fr.edges[0], a)];
    }
    let in_frag: BTreeSet<EdgeId> = fr.edges.iter().copied().collect();
    let mut prev: Vec<Option<Dart>> = vec![None; h.vertex_count()];
    let mut queue = VecDeque::new();
    for &(w, e) in &adj[a.0] {
        if in_frag.contains(&e) && fr.inner[w.0] && prev[w.0].is_none() {
            prev[w.0] = Some(dart_from(h, e, a));
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, e) in &adj[x.0] {
            if !in_frag.contains(&e) {
                continue;
            }
            if fr.inner[y.0] {
                if prev[y.0].is_none() {
                    prev[y.0] = Some(dart_from(h, e, x));
                    queue.push_back(y);
                }
            } else if y != a {
                let mut path = vec![dart_from(h, e, x)];
                let mut z = x;
                while let Some(d) = prev[z.0] {
                    path.push(d);
                    z = h.tail(d);
                    if z == a {
                        break;
                    }
                }
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("a fragment of a 2-connected graph has two attachments")
}

fn rotators_from_faces(h: &Graph, faces: &[Vec<Dart>]) -> Vec<Vec<HalfEdge>> {
    let mut succ = vec![None; 2 * h.edge_count()];
    for f in faces {
        for i in 0..f.len() {
            let (din, dout) = (f[i], f[(i + 1) % f.len()]);
            succ[din.head_half().index()] = Some(dout.tail_half());
        }
    }
    let inc = h.incidence();
    inc.iter()
        .map(|hs| {
            let Some(&start) = hs.first() else { return Vec::new() };
            let mut rot = vec![start];
            let mut x = succ[start.index()].expect("every half-edge has a successor");
            while x != start {
                rot.push(x);
                x = succ[x.index()].expect("every half-edge has a successor");
            }
            debug_assert_eq!(rot.len(), hs.len());
            rot
        })
        .collect()
}

/// Plane embedding if one exists, built block by block and glued at cutvertices.
pub fn test_planar(g: &Graph) -> Planarity {
    let mut rots: Vec<Vec<HalfEdge>> = vec![Vec::new(); g.vertex_count()];
    for block in connectivity::blocks(g) {
        if block.len() == 1 {
            let e = block[0];
            rots[g.endpoints(e)[0].0].push(HalfEdge::new(e, 0));
            rots[g.endpoints(e)[1].0].push(HalfEdge::new(e, 1));
            continue;
        }
        let verts: BTreeSet<VertexId> = block.iter().flat_map(|&e| g.endpoints(e)).collect();
        let verts: Vec<VertexId> = verts.into_iter().collect();
        let mut local = vec![usize::MAX; g.vertex_count()];
        let mut h = Graph::new();
        for (i, &v) in verts.iter().enumerate() {
            local[v.0] = i;
            h.add_vertex(g.label(v));
        }
        for &e in &block {
            let [a, b] = g.endpoints(e);
            h.add_edge(g.edge_label(e), VertexId(local[a.0]), VertexId(local[b.0]));
        }
        let Some(faces) = embed_block(&h) else {
            return Planarity::NonPlanar { block };
        };
        for (i, rot) in rotators_from_faces(&h, &faces).into_iter().enumerate() {
            rots[verts[i].0].extend(rot.into_iter().map(|x| HalfEdge::new(block[x.edge.0], x.end)));
        }
    }
    for e in g.edges().filter(|&e| g.is_loop(e)) {
        let v = g.endpoints(e)[0];
        rots[v.0].push(HalfEdge::new(e, 0));
        rots[v.0].push(HalfEdge::new(e, 1));
    }
    Planarity::Planar(RotationSystem::new(g, rots).expect("assembled rotators are well formed"))
}

/// Hamilton boundary cycle and chords of a 2-connected simple outerplanar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplaneStructure {
    pub boundary: Vec<VertexId>,
    pub boundary_edges: Vec<EdgeId>,
    pub chords: Vec<EdgeId>,
}

impl OuterplaneStructure {
    pub fn is_chord(&self, e: EdgeId) -> bool {
        self.chords.binary_search(&e).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outerplanarity {
    /// The structure is present exactly when the graph is 2-connected and simple.
    Outerplanar(Option<OuterplaneStructure>),
    NotOuterplanar(MinorWitness),
}

impl Outerplanarity {
    pub fn is_outerplanar(&self) -> bool {
        matches!(self, Outerplanarity::Outerplanar(_))
    }
}

pub(crate) fn cone_is_planar(g: &Graph) -> bool {
    let (cone, _) = g.with_apex();
    test_planar(&cone).is_planar()
}

pub fn test_outerplanar(g: &Graph) -> Outerplanarity {
    let (cone, apex) = g.with_apex();
    let rot = match test_planar(&cone) {
        Planarity::Planar(rot) => rot,
        Planarity::NonPlanar { .. } => {
            let w = outerplanarity_witness(g).expect("non-outerplanar graphs have a K4 or K2,3 minor");
            return Outerplanarity::NotOuterplanar(w);
        }
    };
    if !(is_2_connected(g) && g.is_simple()) {
        return Outerplanarity::Outerplanar(None);
    }
    let boundary: Vec<VertexId> = rot.rotator(apex).iter().map(|h| cone.half_edge_vertex(h.opposite())).collect();
    let k = boundary.len();
    let mut boundary_edges = Vec::with_capacity(k);
    for i in 0..k {
        let e = g
            .edge_between(boundary[i], boundary[(i + 1) % k])
            .expect("consecutive apex neighbours bound a common face");
        boundary_edges.push(e);
    }
    let on_boundary: BTreeSet<EdgeId> = boundary_edges.iter().copied().collect();
    let chords = g.edges().filter(|e| !on_boundary.contains(e)).collect();
    Outerplanarity::Outerplanar(Some(OuterplaneStructure { boundary, boundary_edges, chords }))
}

#[cfg(test)]
mod tests {
    use super::super::{trace_faces, MinorTarget};
    use super::*;

    fn genus_per_component(g: &Graph, rot: &RotationSystem) -> Vec<usize> {
        g.components()
            .iter()
            .map(|c| {
                let sub = g.induced(c);
                trace_faces(&sub.graph, &rot.restrict(&sub)).unwrap().genus()
            })
            .collect()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn k4_planar_k5_not() {
        let k4 = complete(4);
        let Planarity::Planar(rot) = test_planar(&k4) else { panic!() };
        assert_eq!(genus_per_component(&k4, &rot), vec![0]);
        assert!(!test_planar(&complete(5)).is_planar());
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(!test_planar(&k33).is_planar());
    }

    #[test]
    fn wheel_is_planar() {
        let (w, _) = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).with_apex();
        let Planarity::Planar(rot) = test_planar(&w) else { panic!() };
        assert_eq!(genus_per_component(&w, &rot), vec![0]);
        // K4 with an apex over every vertex is K5.
        let (k5, _) = complete(4).with_apex();
        assert!(!test_planar(&k5).is_planar());
    }

    #[test]
    fn multigraph_with_loops_and_cutvertices() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 1), (1, 2), (2, 0), (2, 2), (2, 3), (3, 4), (4, 2), (5, 5)]);
        let Planarity::Planar(rot) = test_planar(&g) else { panic!() };
        assert_eq!(genus_per_component(&g, &rot), vec![0, 0]);
    }

    #[test]
    fn chorded_square_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let Outerplanarity::Outerplanar(Some(s)) = test_outerplanar(&g) else { panic!() };
        assert_eq!(s.chords, vec![EdgeId(4)]);
        let mut b = s.boundary_edges.clone();
        b.sort();
        assert_eq!(b, vec![EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]);
    }

    #[test]
    fn outerplanar_obstructions() {
        let Outerplanarity::NotOuterplanar(w) = test_outerplanar(&complete(4)) else { panic!() };
        assert_eq!(w.target, MinorTarget::K4);
        assert!(w.verify(&complete(4)));
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let Outerplanarity::NotOuterplanar(w) = test_outerplanar(&k23) else { panic!() };
        assert_eq!(w.target, MinorTarget::K23);
        assert!(w.verify(&k23));
    }

    #[test]
    fn path_is_outerplanar_without_structure() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(test_outerplanar(&g), Outerplanarity::Outerplanar(None));
    }
}
