//! Closed-surface recognition and classification by Euler characteristic
//! and orientability.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::complex::{FaceId, TwoComplex};
use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("component {0} is not a closed surface")]
    NotASurface(usize),
    #[error("no component {0}")]
    UnknownComponent(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    NotASurface,
    Sphere,
    Orientable { genus: usize },
    NonOrientable { crosscaps: usize },
}

impl SurfaceKind {
    pub fn is_aspherical(self) -> bool {
        matches!(self, SurfaceKind::Orientable { .. } | SurfaceKind::NonOrientable { .. })
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::NotASurface => write!(f, "not a surface"),
            SurfaceKind::Sphere => write!(f, "sphere"),
            SurfaceKind::Orientable { genus } => write!(f, "orientable genus {genus}"),
            SurfaceKind::NonOrientable { crosscaps } => write!(f, "non-orientable with {crosscaps} crosscaps"),
        }
    }
}

/// Classification of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceClass {
    pub vertices: Vec<VertexId>,
    pub faces: Vec<FaceId>,
    /// V - E + F of the component.
    pub euler: isize,
    /// `None` when the component is not a surface.
    pub orientable: Option<bool>,
    pub kind: SurfaceKind,
}

/// Whether every link in the given vertex set is a single cycle.
pub fn links_are_cycles(c: &TwoComplex, vertices: &[VertexId]) -> bool {
    vertices.iter().all(|&v| {
        let l = c.link_graph(v).expect("vertex of the complex");
        let g = &l.graph;
        g.vertex_count() >= 2 && g.is_connected() && g.vertices().all(|x| g.degree(x) == 2)
    })
}

/// One entry per component, in the order of [`TwoComplex::components`].
pub fn is_closed_surface(c: &TwoComplex) -> Vec<bool> {
    c.components().iter().map(|(vs, _)| links_are_cycles(c, vs)).collect()
}

fn component_euler(c: &TwoComplex, vertices: &[VertexId], faces: &[FaceId]) -> isize {
    let g = c.graph();
    let mut inside = vec![false; g.vertex_count()];
    for v in vertices {
        inside[v.0] = true;
    }
    let edges = g.edges().filter(|&e| inside[g.endpoints(e)[0].0]).count();
    vertices.len() as isize - edges as isize + faces.len() as isize
}

/// Tries to orient the given faces so that each edge is traversed once in
/// each direction, propagating from `start`. Returns the face signs.
pub fn orient(c: &TwoComplex, faces: &[FaceId], start: usize) -> Option<Vec<bool>> {
    let g = c.graph();
    // Occurrences of each edge: (position in `faces`, direction).
    let mut on_edge: Vec<Vec<(usize, u8)>> = vec![Vec::new(); g.edge_count()];
    for (i, &f) in faces.iter().enumerate() {
        for d in c.face(f).darts() {
            on_edge[d.edge.0].push((i, d.dir));
        }
    }
    let mut sign: Vec<Option<bool>> = vec![None; faces.len()];
    let order = (start..faces.len()).chain(0..start);
    for s in order {
        if sign[s].is_some() {
            continue;
        }
        sign[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let si = sign[i].expect("queued faces are signed");
            for d in c.face(faces[i]).darts() {
                let mine = d.dir ^ u8::from(!si);
                for &(j, dir) in &on_edge[d.edge.0] {
                    if j == i && dir == d.dir {
                        continue;
                    }
                    // Face j must run along the edge the other way.
                    let sj = dir ^ 1 ^ mine == 0;
                    match sign[j] {
                        None => {
                            sign[j] = Some(sj);
                            queue.push_back(j);
                        }
                        Some(x) if x != sj => return None,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Some(sign.into_iter().map(|s| s.expect("every face signed")).collect())
}

fn classify(c: &TwoComplex, vertices: Vec<VertexId>, faces: Vec<FaceId>, start: usize) -> SurfaceClass {
    let euler = component_euler(c, &vertices, &faces);
    if !links_are_cycles(c, &vertices) {
        return SurfaceClass { vertices, faces, euler, orientable: None, kind: SurfaceKind::NotASurface };
    }
    let orientable = orient(c, &faces, start.min(faces.len().saturating_sub(1))).is_some();
    let kind = match (orientable, euler) {
        (_, 2) => SurfaceKind::Sphere,
        (true, x) => SurfaceKind::Orientable { genus: ((2 - x) / 2) as usize },
        (false, x) => SurfaceKind::NonOrientable { crosscaps: (2 - x) as usize },
    };
    SurfaceClass { vertices, faces, euler, orientable: Some(orientable), kind }
}

/// Per-component classification; components that are not closed surfaces
/// are reported as such.
pub fn classify_surface(c: &TwoComplex) -> Vec<SurfaceClass> {
    c.components().into_iter().map(|(vs, fs)| classify(c, vs, fs, 0)).collect()
}

/// Classifies component `index`, starting the orientation search at the
/// `start`-th face of the component.
pub fn classify_component(c: &TwoComplex, index: usize, start: usize) -> Result<SurfaceClass, SurfaceError> {
    let (vs, fs) = c.components().into_iter().nth(index).ok_or(SurfaceError::UnknownComponent(index))?;
    let class = classify(c, vs, fs, start);
    if class.kind == SurfaceKind::NotASurface {
        return Err(SurfaceError::NotASurface(index));
    }
    Ok(class)
}

/// Classifies the subcomplex spanned by `faces` as a single closed surface.
pub fn classify_faces(c: &TwoComplex, faces: &[FaceId]) -> Option<SurfaceClass> {
    let sub = c.face_subcomplex(faces);
    let s = &sub.complex;
    if s.graph().vertex_count() == 0 || !s.graph().is_connected() {
        return None;
    }
    let all: Vec<VertexId> = s.graph().vertices().collect();
    let class = classify(s, all, s.face_ids().collect(), 0);
    if class.kind == SurfaceKind::NotASurface {
        return None;
    }
    Some(SurfaceClass {
        vertices: class.vertices.iter().map(|v| sub.vertex_origin[v.0]).collect(),
        faces: faces.to_vec(),
        ..class
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::generate;

    #[test]
    fn tetrahedron_is_a_sphere() {
        let t = generate::tetrahedron();
        assert_eq!(is_closed_surface(&t), vec![true]);
        let c = &classify_surface(&t)[0];
        assert_eq!(c.euler, 2);
        assert_eq!(c.kind, SurfaceKind::Sphere);
    }

    #[test]
    fn punctured_tetrahedron_is_not_closed() {
        let t = generate::tetrahedron();
        let d = t.delete_faces(&BTreeSet::from([FaceId(0)])).unwrap();
        assert_eq!(is_closed_surface(&d), vec![false]);
        let paths = d
            .graph()
            .vertices()
            .filter(|&v| {
                let l = d.link_graph(v).unwrap().graph;
                l.edge_count() == 2 && l.is_connected()
            })
            .count();
        assert_eq!(paths, 3);
        assert_eq!(classify_component(&d, 0, 0), Err(SurfaceError::NotASurface(0)));
    }

    #[test]
    fn torus_and_projective_plane() {
        let t = generate::torus7();
        assert_eq!(is_closed_surface(&t), vec![true]);
        let c = &classify_surface(&t)[0];
        assert_eq!((c.euler, c.kind), (0, SurfaceKind::Orientable { genus: 1 }));
        let r = generate::rp2_6();
        let c = &classify_surface(&r)[0];
        assert_eq!((c.euler, c.orientable), (1, Some(false)));
        assert_eq!(c.kind, SurfaceKind::NonOrientable { crosscaps: 1 });
    }

    #[test]
    fn bipyramid_is_a_sphere() {
        let c = &classify_surface(&generate::bipyramid(4))[0];
        assert_eq!((c.euler, c.kind), (2, SurfaceKind::Sphere));
    }

    #[test]
    fn orientation_independent_of_start() {
        for c in [generate::torus7(), generate::rp2_6(), generate::bipyramid(5)] {
            let faces: Vec<FaceId> = c.face_ids().collect();
            let first = orient(&c, &faces, 0).is_some();
            for s in 0..faces.len() {
                assert_eq!(orient(&c, &faces, s).is_some(), first);
            }
        }
    }

    #[test]
    fn torus_inside_larger_complex() {
        let t = generate::torus7();
        let faces: Vec<FaceId> = t.face_ids().collect();
        let class = classify_faces(&t, &faces).unwrap();
        assert_eq!(class.euler, 0);
        assert!(classify_faces(&t, &faces[..3]).is_none());
    }
}
