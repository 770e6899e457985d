//! Exhaustive ground truth: every rotation system of a small graph, nested
//! sphere embeddings by brute force, and aspherical subcomplexes by subset
//! scan.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::certificate::{component_views, face_boundaries, merge_rotations, nest_component, ComponentRejection};
use crate::certificate::NestedCertificate;
use crate::complex::{FaceId, TwoComplex};
use crate::embedding::{trace_faces, RotationSystem};
use crate::graph::{Dart, EdgeId, Graph, HalfEdge, VertexId};
use crate::surface::{classify_faces, SurfaceClass};

pub const DEFAULT_CAP: u128 = 10_000_000;
pub const MAX_SUBSET_FACES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{0} faces is beyond the subset scan limit of {MAX_SUBSET_FACES}")]
    TooManyFaces(usize),
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of rotation systems: the product of `(deg(v) - 1)!`.
pub fn enumeration_size(g: &Graph) -> u128 {
    g.vertices().fold(1u128, |acc, v| acc.saturating_mul(factorial(g.degree(v).saturating_sub(1))))
}

fn check_cap(g: &Graph, cap: u128) -> Result<(), OracleError> {
    let size = enumeration_size(g);
    if size > cap {
        return Err(OracleError::CapExceeded { size, cap });
    }
    Ok(())
}

/// All cyclic orders of `hs` starting with `hs[0]`, in lexicographic order
/// of the remainder.
fn cyclic_orders(hs: &[HalfEdge]) -> Vec<Vec<HalfEdge>> {
    if hs.len() <= 2 {
        return vec![hs.to_vec()];
    }
    let mut rest: Vec<HalfEdge> = hs[1..].to_vec();
    rest.sort();
    let mut out = Vec::new();
    loop {
        let mut r = vec![hs[0]];
        r.extend_from_slice(&rest);
        out.push(r);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

struct Search<'a, F> {
    g: &'a Graph,
    options: Vec<Vec<Vec<HalfEdge>>>,
    choice: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&RotationSystem) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, v: usize) -> ControlFlow<()> {
        if v == self.options.len() {
            let rots = (0..self.options.len()).map(|u| self.options[u][self.choice[u]].clone()).collect();
            let rot = RotationSystem::new(self.g, rots).expect("enumerated rotators are valid");
            return (self.visit)(&rot);
        }
        for k in 0..self.options[v].len() {
            self.choice[v] = k;
            self.run(v + 1)?;
        }
        ControlFlow::Continue(())
    }
}

/// Genus-0 search by edge insertion. Edges are added in breadth-first
/// order so the partial graph stays connected; each half-edge is placed in
/// every gap of its vertex's partial rotator, and a branch is cut as soon
/// as the partial embedding has positive genus (deleting edges never
/// raises genus). Every rotation system arises from exactly one sequence
/// of placements.
struct SphereSearch<'a> {
    g: &'a Graph,
    order: Vec<EdgeId>,
    rot: Vec<Vec<HalfEdge>>,
    out: Vec<RotationSystem>,
}

impl SphereSearch<'_> {
    fn new(g: &Graph) -> SphereSearch<'_> {
        let mut order = Vec::with_capacity(g.edge_count());
        let mut placed = vec![false; g.edge_count()];
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        if g.vertex_count() > 0 {
            seen[0] = true;
            queue.push_back(VertexId(0));
        }
        while let Some(v) = queue.pop_front() {
            for h in g.half_edges_at(v) {
                if !placed[h.edge.0] {
                    placed[h.edge.0] = true;
                    order.push(h.edge);
                }
                let w = g.endpoints(h.edge)[1 - h.end as usize];
                if !seen[w.0] {
                    seen[w.0] = true;
                    queue.push_back(w);
                }
            }
        }
        SphereSearch { g, order, rot: vec![Vec::new(); g.vertex_count()], out: Vec::new() }
    }

    fn planar_so_far(&self, placed: usize) -> bool {
        let mut succ = vec![None; 2 * self.g.edge_count()];
        let mut touched = 0;
        for r in &self.rot {
            if !r.is_empty() {
                touched += 1;
            }
            for i in 0..r.len() {
                succ[r[i].index()] = Some(r[(i + 1) % r.len()]);
            }
        }
        let mut seen = vec![false; succ.len()];
        let mut faces = 0;
        for &e in &self.order[..placed] {
            for dir in 0..2 {
                let start = Dart::new(e, dir);
                if seen[start.index()] {
                    continue;
                }
                faces += 1;
                let mut d = start;
                while !seen[d.index()] {
                    seen[d.index()] = true;
                    let h: HalfEdge = succ[d.head_half().index()].expect("placed half-edges are in rotators");
                    d = Dart::new(h.edge, h.end);
                }
            }
        }
        // Connected, so V - E + F = 2 exactly on the sphere.
        touched + faces == 2 + placed
    }

    /// Places half-edge `end` of the `i`-th edge in order.
    fn place(&mut self, i: usize, end: u8) {
        if i == self.order.len() {
            let rot = RotationSystem::new(self.g, self.rot.clone()).expect("every half-edge placed");
            self.out.push(rot);
            return;
        }
        let e = self.order[i];
        let v = self.g.endpoints(e)[end as usize].0;
        let h = HalfEdge::new(e, end);
        let gaps = self.rot[v].len().max(1);
        for gap in 0..gaps {
            let at = if self.rot[v].is_empty() { 0 } else { gap + 1 };
            self.rot[v].insert(at, h);
            if end == 0 {
                self.place(i, 1);
            } else if self.planar_so_far(i + 1) {
                self.place(i + 1, 0);
            }
            self.rot[v].retain(|x| *x != h);
        }
    }
}

/// Every genus-0 rotation system of a connected graph, sorted canonically.
fn sphere_systems(g: &Graph) -> Vec<RotationSystem> {
    let mut s = SphereSearch::new(g);
    if g.edge_count() == 0 {
        return vec![RotationSystem::sorted(g)];
    }
    s.place(0, 0);
    let mut out = s.out;
    out.sort_by(|a, b| a.rotators().cmp(b.rotators()));
    out
}

/// Simple planar graphs have at most 3V - 6 edges, so a denser one has no
/// sphere embedding whatever the cap.
fn too_dense(g: &Graph) -> bool {
    g.is_simple() && g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6
}

/// Visits rotation systems of a connected graph in canonical order (by
/// vertex, then lexicographic rank of the rotator). With `spherical_only`
/// only genus-0 systems are visited. Returns whether the visitor stopped early.
pub fn for_each_rotation_system(
    g: &Graph,
    cap: u128,
    spherical_only: bool,
    visit: impl FnMut(&RotationSystem) -> ControlFlow<()>,
) -> Result<bool, OracleError> {
    if g.vertex_count() > 0 && !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    if spherical_only && too_dense(g) {
        return Ok(false);
    }
    check_cap(g, cap)?;
    let mut visit = visit;
    if spherical_only {
        for rot in sphere_systems(g) {
            if visit(&rot).is_break() {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let options: Vec<Vec<Vec<HalfEdge>>> = g.incidence().iter().map(|hs| cyclic_orders(hs)).collect();
    let mut s = Search { g, options, choice: vec![0; g.vertex_count()], visit };
    Ok(s.run(0).is_break())
}

pub fn all_rotation_systems(g: &Graph, cap: u128) -> Result<Vec<RotationSystem>, OracleError> {
    let mut out = Vec::new();
    for_each_rotation_system(g, cap, false, |r| {
        out.push(r.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Every genus-0 rotation system of a connected graph, in canonical order.
pub fn enumerate_sphere_embeddings(g: &Graph, cap: u128) -> Result<Vec<RotationSystem>, OracleError> {
    let mut out = Vec::new();
    for_each_rotation_system(g, cap, true, |r| {
        debug_assert_eq!(trace_faces(g, r).map(|t| t.genus()), Ok(0));
        out.push(r.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Searches every sphere embedding of each component for one in which the
/// cycles are laminar. Components are searched independently and the first
/// success of each is kept.
pub fn brute_force_nested(
    g: &Graph,
    cycles: &[Vec<EdgeId>],
    cap: u128,
) -> Result<Option<NestedCertificate>, OracleError> {
    let views = component_views(g, cycles);
    if views.iter().any(|v| too_dense(&v.sub.graph)) {
        return Ok(None);
    }
    check_cap(g, cap)?;
    let mut parts = Vec::with_capacity(views.len());
    let mut outer_faces = Vec::with_capacity(views.len());
    let mut parent = vec![None; cycles.len()];
    for view in &views {
        let mut found = None;
        for_each_rotation_system(&view.sub.graph, cap, true, |rot| match nest_component(view, rot) {
            Ok(res) => {
                found = Some((rot.clone(), res));
                ControlFlow::Break(())
            }
            Err(ComponentRejection::Crossing(..)) | Err(ComponentRejection::Genus(_)) => ControlFlow::Continue(()),
        })?;
        let Some((rot, (outer, local_parent))) = found else { return Ok(None) };
        for (k, p) in local_parent.into_iter().enumerate() {
            parent[view.cycle_ids[k]] = p.map(|p| view.cycle_ids[p]);
        }
        parts.push(rot);
        outer_faces.push(outer);
    }
    let rotation = merge_rotations(g, &views, &parts);
    Ok(Some(NestedCertificate { rotation, outer_faces, parent }))
}

/// Outerspatial exactly when the skeleton has a sphere embedding in which
/// all face boundaries nest.
pub fn brute_force_outerspatial(c: &TwoComplex, cap: u128) -> Result<Option<NestedCertificate>, OracleError> {
    brute_force_nested(c.graph(), &face_boundaries(c), cap)
}

/// The first set of faces, by size and then lexicographically, that forms
/// a connected closed surface other than the sphere.
pub fn find_aspherical_subcomplex(c: &TwoComplex) -> Result<Option<SurfaceClass>, OracleError> {
    let nf = c.face_count();
    if nf > MAX_SUBSET_FACES {
        return Err(OracleError::TooManyFaces(nf));
    }
    let edges: Vec<Vec<EdgeId>> = c.face_ids().map(|f| c.face_edges(f)).collect();
    let mut count = vec![0u8; c.graph().edge_count()];
    let mut chosen = Vec::new();
    for k in 1..=nf {
        let mut found = None;
        let _ = combinations(nf, k, 0, &mut chosen, &mut |set| {
            // Cheap necessary condition: every used edge lies in exactly two faces.
            for &f in set {
                for e in &edges[f] {
                    count[e.0] += 1;
                }
            }
            let ok = set.iter().all(|&f| edges[f].iter().all(|e| count[e.0] == 2));
            for &f in set {
                for e in &edges[f] {
                    count[e.0] = 0;
                }
            }
            if !ok {
                return ControlFlow::Continue(());
            }
            let faces: Vec<FaceId> = set.iter().map(|&f| FaceId(f)).collect();
            match classify_faces(c, &faces) {
                Some(class) if class.euler != 2 => {
                    found = Some(class);
                    ControlFlow::Break(())
                }
                _ => ControlFlow::Continue(()),
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn combinations(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if chosen.len() == k {
        return visit(chosen);
    }
    for i in start..n {
        if n - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        let r = combinations(n, k, i + 1, chosen, visit);
        chosen.pop();
        r?;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_certificate, verify_nested};
    use crate::generate;

    #[test]
    fn triangle_has_one_system() {
        let g = generate::complete_graph(3);
        assert_eq!(all_rotation_systems(&g, DEFAULT_CAP).unwrap().len(), 1);
        assert_eq!(enumerate_sphere_embeddings(&g, DEFAULT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn k4_counts() {
        let g = generate::complete_graph(4);
        let all = all_rotation_systems(&g, DEFAULT_CAP).unwrap();
        assert_eq!(all.len(), 16);
        let spherical = all.iter().filter(|r| trace_faces(&g, r).unwrap().genus() == 0).count();
        // K4 is 3-connected: two mirror embeddings, each labelled in one way.
        assert_eq!(spherical, 2);
        assert_eq!(enumerate_sphere_embeddings(&g, DEFAULT_CAP).unwrap().len(), spherical);
    }

    #[test]
    fn k5_is_not_spherical() {
        let g = generate::complete_graph(5);
        assert!(enumerate_sphere_embeddings(&g, DEFAULT_CAP).unwrap().is_empty());
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]);
        let all = all_rotation_systems(&g, DEFAULT_CAP).unwrap();
        assert_eq!(all.len() as u128, enumeration_size(&g));
        let distinct: std::collections::BTreeSet<_> = all.iter().map(|r| r.rotators().to_vec()).collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate::complete_graph(6);
        assert!(matches!(all_rotation_systems(&g, 1000), Err(OracleError::CapExceeded { .. })));
    }

    #[test]
    fn named_brute_force() {
        let t = generate::tetrahedron();
        let cert = brute_force_outerspatial(&t, DEFAULT_CAP).unwrap().unwrap();
        assert!(verify_certificate(&t, &cert));
        assert!(brute_force_outerspatial(&generate::torus7(), DEFAULT_CAP).unwrap().is_none());
        let cone = generate::cone_over_graph(&generate::complete_graph(4));
        assert!(brute_force_outerspatial(&cone, DEFAULT_CAP).unwrap().is_none());
        let be = generate::bipyramid_with_equator(4);
        assert!(brute_force_outerspatial(&be, DEFAULT_CAP).unwrap().is_some());
    }

    #[test]
    fn crossing_four_cycles_fail() {
        let b = generate::bipyramid(4);
        let g = b.graph();
        let v = |l: &str| g.find_vertex(l).unwrap();
        let cyc = |ls: [&str; 4]| {
            (0..4).map(|i| g.edge_between(v(ls[i]), v(ls[(i + 1) % 4])).unwrap()).collect::<Vec<_>>()
        };
        let cycles = vec![cyc(["n", "a0", "s", "a2"]), cyc(["n", "a1", "s", "a3"])];
        assert!(brute_force_nested(g, &cycles, DEFAULT_CAP).unwrap().is_none());
    }

    #[test]
    fn empty_family_on_planar_graph() {
        let g = generate::random_planar_graph(&mut generate::rng(5), 7, 0.7);
        let cert = brute_force_nested(&g, &[], DEFAULT_CAP).unwrap().unwrap();
        assert!(cert.parent.is_empty());
        assert!(verify_nested(&g, &[], &cert));
    }

    #[test]
    fn aspherical_subsets() {
        assert!(find_aspherical_subcomplex(&generate::tetrahedron()).unwrap().is_none());
        let t = generate::torus7();
        let class = find_aspherical_subcomplex(&t).unwrap().unwrap();
        assert_eq!((class.faces.len(), class.euler), (14, 0));
    }

    #[test]
    fn torus_plus_disjoint_triangle() {
        let t = generate::torus7();
        let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        let mut faces: Vec<(String, Vec<usize>)> = t
            .face_ids()
            .map(|f| (t.face(f).label().to_string(), t.face_vertices(f).iter().map(|v| v.0).collect()))
            .collect();
        faces.push(("extra".into(), vec![7, 8, 9]));
        let c = generate::from_faces(&labels, &faces);
        let class = find_aspherical_subcomplex(&c).unwrap().unwrap();
        assert_eq!(class.faces.len(), 14);
        assert!(!class.faces.contains(&c.find_face("extra").unwrap()));
    }
}
