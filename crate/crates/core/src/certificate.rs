//! Nested sphere embeddings: building them from a rotation system and
//! checking them from scratch.

use fixedbitset::FixedBitSet;

use crate::complex::TwoComplex;
use crate::embedding::{containment_parents, trace_faces, Nesting, RotationSystem, TracedFaces};
use crate::graph::{Dart, EdgeId, Graph, HalfEdge, Subgraph, VertexId};

/// A sphere embedding of a graph (one sphere per component) together with
/// a designated outer face per component and the containment forest of a
/// cycle family, which must be laminar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedCertificate {
    pub rotation: RotationSystem,
    /// One traced orbit per component of the graph, in component order.
    pub outer_faces: Vec<Vec<Dart>>,
    /// `parent[i]` is the cycle whose interior is the smallest one strictly
    /// containing the interior of cycle `i`.
    pub parent: Vec<Option<usize>>,
}

/// Why a rotation system does not give a nested embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotSpherical { component: usize, genus: usize },
    /// The lexicographically first crossing pair.
    Crossing(usize, usize),
}

/// A component of a graph with the cycles lying in it, in local ids.
pub(crate) struct ComponentView {
    pub sub: Subgraph,
    /// Indices into the global cycle list.
    pub cycle_ids: Vec<usize>,
    pub local_cycles: Vec<Vec<EdgeId>>,
}

pub(crate) fn component_views(g: &Graph, cycles: &[Vec<EdgeId>]) -> Vec<ComponentView> {
    let comps = g.components();
    let mut which = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            which[v.0] = i;
        }
    }
    let mut views: Vec<ComponentView> = comps
        .iter()
        .map(|c| ComponentView { sub: g.induced(c), cycle_ids: Vec::new(), local_cycles: Vec::new() })
        .collect();
    let mut local_edge = vec![EdgeId(usize::MAX); g.edge_count()];
    for view in &views {
        for (i, &e) in view.sub.edge_origin.iter().enumerate() {
            local_edge[e.0] = EdgeId(i);
        }
    }
    for (i, cyc) in cycles.iter().enumerate() {
        let Some(e) = cyc.first() else { continue };
        let comp = which[g.endpoints(*e)[0].0];
        views[comp].cycle_ids.push(i);
        views[comp].local_cycles.push(cyc.iter().map(|e| local_edge[e.0]).collect());
    }
    views
}

pub(crate) fn lift_dart(sub: &Subgraph, d: Dart) -> Dart {
    Dart::new(sub.edge_origin[d.edge.0], d.dir)
}

/// Traces a component and checks its cycles for crossings. Returns the
/// outer orbit (first traced orbit) and local parents.
pub(crate) fn nest_component(
    view: &ComponentView,
    rot: &RotationSystem,
) -> Result<(Vec<Dart>, Vec<Option<usize>>), ComponentRejection> {
    let tf = trace_faces(&view.sub.graph, rot).expect("components are connected");
    nest_traced(view, &tf)
}

pub(crate) enum ComponentRejection {
    Genus(usize),
    Crossing(usize, usize),
}

pub(crate) fn nest_traced(
    view: &ComponentView,
    tf: &TracedFaces,
) -> Result<(Vec<Dart>, Vec<Option<usize>>), ComponentRejection> {
    if tf.genus() != 0 {
        return Err(ComponentRejection::Genus(tf.genus()));
    }
    match tf.nesting_forest(&view.local_cycles).expect("faces of the complex are cycles") {
        Nesting::Crossing(i, j) => Err(ComponentRejection::Crossing(i, j)),
        Nesting::Laminar(forest) => {
            let outer = tf.orbits()[forest.outer_face].iter().map(|&d| lift_dart(&view.sub, d)).collect();
            Ok((outer, forest.parent))
        }
    }
}

/// Builds the certificate for `rot` if it embeds every component in the
/// sphere with the cycles laminar.
pub fn certify(g: &Graph, cycles: &[Vec<EdgeId>], rot: &RotationSystem) -> Result<NestedCertificate, Rejection> {
    let views = component_views(g, cycles);
    let mut outer_faces = Vec::with_capacity(views.len());
    let mut parent = vec![None; cycles.len()];
    let mut crossing: Option<(usize, usize)> = None;
    for (ci, view) in views.iter().enumerate() {
        match nest_component(view, &rot.restrict(&view.sub)) {
            Ok((outer, local_parent)) => {
                outer_faces.push(outer);
                for (k, p) in local_parent.into_iter().enumerate() {
                    parent[view.cycle_ids[k]] = p.map(|p| view.cycle_ids[p]);
                }
            }
            Err(ComponentRejection::Genus(genus)) => return Err(Rejection::NotSpherical { component: ci, genus }),
            Err(ComponentRejection::Crossing(i, j)) => {
                let pair = (view.cycle_ids[i], view.cycle_ids[j]);
                crossing = Some(crossing.map_or(pair, |c| c.min(pair)));
            }
        }
    }
    if let Some((i, j)) = crossing {
        return Err(Rejection::Crossing(i, j));
    }
    Ok(NestedCertificate { rotation: rot.clone(), outer_faces, parent })
}

/// Merges per-component rotation systems (in component order) into one.
pub(crate) fn merge_rotations(g: &Graph, views: &[ComponentView], parts: &[RotationSystem]) -> RotationSystem {
    let mut rots = vec![Vec::new(); g.vertex_count()];
    for (view, rot) in views.iter().zip(parts) {
        for (i, &v) in view.sub.vertex_origin.iter().enumerate() {
            rots[v.0] = rot
                .rotator(VertexId(i))
                .iter()
                .map(|h| HalfEdge::new(view.sub.edge_origin[h.edge.0], h.end))
                .collect();
        }
    }
    RotationSystem::new(g, rots).expect("components partition the half-edges")
}

/// Rechecks a certificate against a graph and cycle family without
/// trusting anything in it beyond the rotation system itself.
pub fn verify_nested(g: &Graph, cycles: &[Vec<EdgeId>], cert: &NestedCertificate) -> bool {
    if cert.parent.len() != cycles.len() {
        return false;
    }
    if RotationSystem::new(g, cert.rotation.rotators().to_vec()).as_ref() != Ok(&cert.rotation) {
        return false;
    }
    let views = component_views(g, cycles);
    if views.len() != cert.outer_faces.len() {
        return false;
    }
    for (view, outer) in views.iter().zip(&cert.outer_faces) {
        let tf = match trace_faces(&view.sub.graph, &cert.rotation.restrict(&view.sub)) {
            Ok(tf) => tf,
            Err(_) => return false,
        };
        if tf.genus() != 0 {
            return false;
        }
        let Some(outer_id) = find_orbit(view, &tf, outer) else { return false };
        let mut interiors: Vec<FixedBitSet> = Vec::new();
        for cyc in &view.local_cycles {
            let Ok(sides) = tf.cycle_sides(cyc) else { return false };
            interiors.push(if sides.first.contains(outer_id) { sides.second } else { sides.first });
        }
        for i in 0..interiors.len() {
            for j in i + 1..interiors.len() {
                let (a, b) = (&interiors[i], &interiors[j]);
                if !(a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a)) {
                    return false;
                }
            }
        }
        let expected = containment_parents(&interiors);
        for (k, p) in expected.into_iter().enumerate() {
            if cert.parent[view.cycle_ids[k]] != p.map(|p| view.cycle_ids[p]) {
                return false;
            }
        }
    }
    true
}

fn find_orbit(view: &ComponentView, tf: &TracedFaces, outer: &[Dart]) -> Option<usize> {
    for (i, orbit) in tf.orbits().iter().enumerate() {
        let lifted: Vec<Dart> = orbit.iter().map(|&d| lift_dart(&view.sub, d)).collect();
        if lifted.len() != outer.len() {
            continue;
        }
        if lifted.is_empty() {
            return Some(i);
        }
        if let Some(p) = lifted.iter().position(|d| *d == outer[0]) {
            if (0..lifted.len()).all(|k| lifted[(p + k) % lifted.len()] == outer[k]) {
                return Some(i);
            }
        }
    }
    None
}

pub fn face_boundaries(c: &TwoComplex) -> Vec<Vec<EdgeId>> {
    c.face_ids().map(|f| c.face_edges(f)).collect()
}

/// Checks a certificate for a complex: the rotation system embeds the
/// skeleton in spheres and all face boundaries nest.
pub fn verify_certificate(c: &TwoComplex, cert: &NestedCertificate) -> bool {
    verify_nested(c.graph(), &face_boundaries(c), cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{test_planar, Planarity};
    use crate::generate;

    fn planar_rotation(g: &Graph) -> RotationSystem {
        match test_planar(g) {
            Planarity::Planar(r) => r,
            Planarity::NonPlanar { .. } => panic!("planar input"),
        }
    }

    #[test]
    fn tetrahedron_round_trip() {
        let t = generate::tetrahedron();
        let rot = planar_rotation(t.graph());
        let cert = certify(t.graph(), &face_boundaries(&t), &rot).unwrap();
        assert!(verify_certificate(&t, &cert));
    }

    #[test]
    fn transposed_rotator_fails() {
        let t = generate::tetrahedron();
        let rot = planar_rotation(t.graph());
        let cert = certify(t.graph(), &face_boundaries(&t), &rot).unwrap();
        let mut rots = cert.rotation.rotators().to_vec();
        rots[0].swap(0, 1);
        let bad = NestedCertificate { rotation: RotationSystem::new(t.graph(), rots).unwrap(), ..cert };
        assert!(!verify_certificate(&t, &bad));
    }

    #[test]
    fn omitted_boundary_fails() {
        let t = generate::tetrahedron();
        let rot = planar_rotation(t.graph());
        let mut cert = certify(t.graph(), &face_boundaries(&t), &rot).unwrap();
        cert.parent.pop();
        assert!(!verify_certificate(&t, &cert));
    }

    #[test]
    fn crossing_cycles_rejected() {
        let b = generate::bipyramid(4);
        let g = b.graph();
        let v = |l: &str| g.find_vertex(l).unwrap();
        let cyc = |ls: [&str; 4]| {
            (0..4).map(|i| g.edge_between(v(ls[i]), v(ls[(i + 1) % 4])).unwrap()).collect::<Vec<_>>()
        };
        let cycles = vec![cyc(["n", "a0", "s", "a2"]), cyc(["n", "a1", "s", "a3"])];
        let rot = planar_rotation(g);
        assert_eq!(certify(g, &cycles, &rot), Err(Rejection::Crossing(0, 1)));
    }

    #[test]
    fn disconnected_graph_certificate() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let cycles = vec![vec![EdgeId(0), EdgeId(1), EdgeId(2)], vec![EdgeId(3), EdgeId(4), EdgeId(5)]];
        let cert = certify(&g, &cycles, &RotationSystem::sorted(&g)).unwrap();
        assert_eq!(cert.outer_faces.len(), 2);
        assert!(verify_nested(&g, &cycles, &cert));
        let mut forged = cert.clone();
        forged.outer_faces[1] = vec![Dart::new(EdgeId(0), 0)];
        assert!(!verify_nested(&g, &cycles, &forged));
    }
}
