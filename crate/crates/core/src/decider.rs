//! The decision pipeline.
//!
//! 0. All faces triangles and the skeleton planar: accept.
//! 1. Every link must be outerplanar; a non-outerplanar link is an
//!    obstruction on its own. Links that are not simple and 2-connected are
//!    recorded as hypothesis violations.
//! 2. A face that is a chord in one link must be a chord in the links of
//!    all its vertices; otherwise contracting the offending boundary edge
//!    gives a link with a K2,3 minor.
//! 3. Deleting the chordal faces leaves complex D whose links are cycles;
//!    a component of D that is not a sphere is an aspherical subcomplex.
//! 4. D fixes a sphere embedding of the skeleton. If two chordal boundaries
//!    cross in it, contracting their shared stretch gives a K4 link.
//! 5. Otherwise every boundary nests and the embedding is the certificate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::certificate::{certify, face_boundaries, Rejection};
use crate::complex::{associated_complex, ComplexError, FaceId, FaceSpec, LinkGraph, Path, TwoComplex};
use crate::embedding::{
    exact_minor_search, is_2_connected, test_outerplanar, test_planar, trace_faces, MinorTarget, MinorWitness,
    OuterplaneStructure, Outerplanarity, Planarity, RotationSystem,
};
use crate::graph::{Dart, EdgeId, Graph, HalfEdge, VertexId};
use crate::oracle::{brute_force_nested, enumeration_size, OracleError};
use crate::surface::{classify_faces, links_are_cycles, orient, SurfaceClass};

pub use crate::certificate::{verify_certificate, verify_nested, NestedCertificate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeciderError {
    #[error("input is not a simple complex: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("link at `{0}` has no outerplane structure")]
    NoOuterplaneStructure(String),
    #[error("face `{0}` is not chordal at any vertex")]
    NotChordal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The link at the vertex obtained by contracting `path` has a K4 or
    /// K2,3 minor.
    NonOuterplanarLink { path: Path, link: LinkGraph, witness: MinorWitness },
    /// These faces form a closed surface other than the sphere.
    AsphericalSubcomplex { faces: Vec<FaceId>, class: SurfaceClass },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    LinkNotSimple(VertexId),
    LinkNotTwoConnected(VertexId),
    /// A later step could not be carried out.
    Unresolved(String),
}

impl Violation {
    pub fn describe(&self, c: &TwoComplex) -> String {
        match self {
            Violation::LinkNotSimple(v) => format!("link at `{}` is not simple", c.graph().label(*v)),
            Violation::LinkNotTwoConnected(v) => format!("link at `{}` is not 2-connected", c.graph().label(*v)),
            Violation::Unresolved(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Outerspatial(NestedCertificate),
    NotOuterspatial(Obstruction),
    HypothesisViolated(Vec<Violation>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Outerspatial,
    NotOuterspatial,
    HypothesisViolated,
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Outerspatial(_) => VerdictKind::Outerspatial,
            Verdict::NotOuterspatial(_) => VerdictKind::NotOuterspatial,
            Verdict::HypothesisViolated(_) => VerdictKind::HypothesisViolated,
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Outerspatial => "outerspatial",
            VerdictKind::NotOuterspatial => "not outerspatial",
            VerdictKind::HypothesisViolated => "hypothesis violated",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeciderOptions {
    pub triangle_fast_path: bool,
}

impl Default for DeciderOptions {
    fn default() -> Self {
        DeciderOptions { triangle_fast_path: true }
    }
}

/// Every link simple and 2-connected.
pub fn is_locally_2_connected(c: &TwoComplex) -> bool {
    c.graph().vertices().all(|v| {
        let l = c.link_graph(v).expect("vertex of the complex");
        l.graph.is_simple() && is_2_connected(&l.graph)
    })
}

/// Faces that are chords of some link, with the vertices where they are.
pub type ChordalFaces = BTreeMap<FaceId, BTreeSet<VertexId>>;

fn chordal_from(c: &TwoComplex, links: &[LinkGraph], structures: &[Option<OuterplaneStructure>]) -> ChordalFaces {
    let mut out = ChordalFaces::new();
    for v in c.graph().vertices() {
        if let Some(s) = &structures[v.0] {
            for &e in &s.chords {
                out.entry(links[v.0].faces[e.0]).or_default().insert(v);
            }
        }
    }
    out
}

struct LinkInfo {
    links: Vec<LinkGraph>,
    structures: Vec<Option<OuterplaneStructure>>,
}

fn link_info(c: &TwoComplex) -> Result<LinkInfo, Obstruction> {
    let mut links = Vec::new();
    let mut structures = Vec::new();
    for v in c.graph().vertices() {
        let l = c.link_graph(v).expect("vertex of the complex");
        match test_outerplanar(&l.graph) {
            Outerplanarity::NotOuterplanar(witness) => {
                return Err(Obstruction::NonOuterplanarLink { path: Path::trivial(v), link: l, witness })
            }
            Outerplanarity::Outerplanar(s) => structures.push(s),
        }
        links.push(l);
    }
    Ok(LinkInfo { links, structures })
}

pub fn find_chordal_faces(c: &TwoComplex) -> Result<ChordalFaces, DeciderError> {
    let mut links = Vec::new();
    let mut structures = Vec::new();
    for v in c.graph().vertices() {
        let l = c.link_graph(v)?;
        match test_outerplanar(&l.graph) {
            Outerplanarity::Outerplanar(Some(s)) => structures.push(Some(s)),
            _ => return Err(DeciderError::NoOuterplaneStructure(c.graph().label(v).to_string())),
        }
        links.push(l);
    }
    Ok(chordal_from(c, &links, &structures))
}

/// A non-outerplanar link after contracting `path`, preferring a witness
/// for `prefer` when the link is small enough for exact search.
fn contracted_obstruction(c: &TwoComplex, path: Path, prefer: MinorTarget) -> Option<Obstruction> {
    let con = c.contract_path(&path).ok()?;
    let link = con.complex.link_graph(con.merged).ok()?;
    let generic = match test_outerplanar(&link.graph) {
        Outerplanarity::Outerplanar(_) => return None,
        Outerplanarity::NotOuterplanar(w) => w,
    };
    let witness = if generic.target != prefer && link.graph.vertex_count() <= 14 {
        exact_minor_search(&link.graph, prefer).unwrap_or(generic)
    } else {
        generic
    };
    Some(Obstruction::NonOuterplanarLink { path, link, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordCheck {
    Perfect,
    Bad(Obstruction),
    /// Chord at `u`, not at `x`, yet the contracted link is outerplanar.
    Unresolved { u: VertexId, x: VertexId },
}

fn check_chord_walk(c: &TwoComplex, f: FaceId, chord_at: &BTreeSet<VertexId>, known: &[bool]) -> ChordCheck {
    let vs = c.face_vertices(f);
    let k = vs.len();
    let mut unresolved = None;
    for i in 0..k {
        for step in [1, k - 1] {
            let (u, x) = (vs[i], vs[(i + step) % k]);
            if !chord_at.contains(&u) || chord_at.contains(&x) {
                continue;
            }
            let path = Path::from_vertices(c.graph(), &[u, x]).expect("boundary edge");
            if let Some(obs) = contracted_obstruction(c, path, MinorTarget::K23) {
                return ChordCheck::Bad(obs);
            }
            if known[x.0] && unresolved.is_none() {
                unresolved = Some((u, x));
            }
        }
    }
    match unresolved {
        Some((u, x)) => ChordCheck::Unresolved { u, x },
        None => ChordCheck::Perfect,
    }
}

/// Whether face `f` is a chord in the link of every vertex on it.
pub fn check_perfectly_chordal(c: &TwoComplex, f: FaceId) -> Result<ChordCheck, DeciderError> {
    let chordal = find_chordal_faces(c)?;
    let Some(at) = chordal.get(&f) else {
        return Err(DeciderError::NotChordal(c.face(f).label().to_string()));
    };
    Ok(check_chord_walk(c, f, at, &vec![true; c.graph().vertex_count()]))
}

pub fn decide_outerspatial(c: &TwoComplex) -> Result<Verdict, DeciderError> {
    decide_outerspatial_with(c, DeciderOptions::default())
}

pub fn decide_outerspatial_with(c: &TwoComplex, options: DeciderOptions) -> Result<Verdict, DeciderError> {
    let diagnostics = c.validate();
    if !diagnostics.is_empty() {
        return Err(DeciderError::Invalid(diagnostics.iter().map(|d| d.describe(c)).collect()));
    }
    if options.triangle_fast_path && c.faces().iter().all(|f| f.len() == 3) {
        if let Planarity::Planar(rot) = test_planar(c.graph()) {
            if let Ok(cert) = certify(c.graph(), &face_boundaries(c), &rot) {
                return Ok(Verdict::Outerspatial(cert));
            }
        }
    }
    Ok(pipeline(c))
}

fn pipeline(c: &TwoComplex) -> Verdict {
    let g = c.graph();
    let info = match link_info(c) {
        Ok(i) => i,
        Err(obs) => return Verdict::NotOuterspatial(obs),
    };
    let mut violations = Vec::new();
    for v in g.vertices() {
        let l = &info.links[v.0].graph;
        if !l.is_simple() {
            violations.push(Violation::LinkNotSimple(v));
        } else if !is_2_connected(l) {
            violations.push(Violation::LinkNotTwoConnected(v));
        }
    }
    let known: Vec<bool> = info.structures.iter().map(Option::is_some).collect();

    let chordal = chordal_from(c, &info.links, &info.structures);
    for (&f, at) in &chordal {
        match check_chord_walk(c, f, at, &known) {
            ChordCheck::Perfect => {}
            ChordCheck::Bad(obs) => return Verdict::NotOuterspatial(obs),
            ChordCheck::Unresolved { u, x } => violations.push(Violation::Unresolved(format!(
                "face `{}` is a chord at `{}` but not at `{}`, yet contracting the edge leaves an outerplanar link",
                c.face(f).label(),
                g.label(u),
                g.label(x)
            ))),
        }
    }

    let removed: BTreeSet<FaceId> = chordal.keys().copied().collect();
    let d = c.delete_faces(&removed).expect("chordal faces exist");
    let kept: Vec<FaceId> = c.face_ids().filter(|f| !removed.contains(f)).collect();
    let all: Vec<VertexId> = g.vertices().collect();
    for (_, dfaces) in d.components() {
        let faces: Vec<FaceId> = dfaces.iter().map(|f| kept[f.0]).collect();
        if let Some(class) = classify_faces(c, &faces) {
            if class.euler != 2 {
                return Verdict::NotOuterspatial(Obstruction::AsphericalSubcomplex { faces, class });
            }
        }
    }
    if !links_are_cycles(&d, &all) {
        // No embedding is forced; any plane embedding that happens to nest
        // every boundary is still a valid certificate.
        if let Planarity::Planar(rot) = test_planar(g) {
            if let Ok(cert) = certify(g, &face_boundaries(c), &rot) {
                return Verdict::Outerspatial(cert);
            }
        }
        violations.push(Violation::Unresolved("after deleting chordal faces not every link is a cycle".into()));
        return Verdict::HypothesisViolated(violations);
    }

    let Some(rot) = rotation_from_spheres(&d) else {
        violations.push(Violation::Unresolved("remaining surface could not be oriented".into()));
        return Verdict::HypothesisViolated(violations);
    };
    let cycles = face_boundaries(c);
    match certify(g, &cycles, &rot) {
        Ok(cert) => Verdict::Outerspatial(cert),
        Err(Rejection::Crossing(i, j)) => match crossing_obstruction(c, &rot, &cycles, i, j) {
            Some(obs) => Verdict::NotOuterspatial(obs),
            None => {
                violations.push(Violation::Unresolved(format!(
                    "faces `{}` and `{}` cross but no contracted link is non-outerplanar",
                    c.face(FaceId(i)).label(),
                    c.face(FaceId(j)).label()
                )));
                Verdict::HypothesisViolated(violations)
            }
        },
        Err(Rejection::NotSpherical { .. }) => {
            violations.push(Violation::Unresolved("remaining surface is not a sphere".into()));
            Verdict::HypothesisViolated(violations)
        }
    }
}

/// The rotation system whose traced faces are the faces of `d`, a union of
/// oriented spheres whose links are cycles.
fn rotation_from_spheres(d: &TwoComplex) -> Option<RotationSystem> {
    let g = d.graph();
    let mut succ: BTreeMap<HalfEdge, HalfEdge> = BTreeMap::new();
    for (_, faces) in d.components() {
        let signs = orient(d, &faces, 0)?;
        for (f, forward) in faces.iter().zip(signs) {
            let mut darts: Vec<Dart> = d.face(*f).darts().to_vec();
            if !forward {
                darts = darts.iter().rev().map(|x| x.reversed()).collect();
            }
            let k = darts.len();
            for i in 0..k {
                let (a, b) = (darts[i], darts[(i + 1) % k]);
                if succ.insert(a.head_half(), b.tail_half()).is_some() {
                    return None;
                }
            }
        }
    }
    let mut rots = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let hs = g.half_edges_at(v);
        let mut rot = Vec::with_capacity(hs.len());
        if let Some(&start) = hs.first() {
            let mut h = start;
            loop {
                rot.push(h);
                h = *succ.get(&h)?;
                if h == start || rot.len() > hs.len() {
                    break;
                }
            }
        }
        rots.push(rot);
    }
    RotationSystem::new(g, rots).ok()
}

/// For crossing boundaries `i` and `j`, contracts the stretch of one that
/// lies on the other between a step into one side and a step into the other.
fn crossing_obstruction(
    c: &TwoComplex,
    rot: &RotationSystem,
    cycles: &[Vec<EdgeId>],
    i: usize,
    j: usize,
) -> Option<Obstruction> {
    for (a, b) in [(i, j), (j, i)] {
        if let Some(obs) = transversal_obstruction(c, rot, cycles, a, b) {
            return Some(obs);
        }
    }
    // Fall back to every subpath shared by the two boundaries.
    let g = c.graph();
    let vs = c.face_vertices(FaceId(i));
    let other: BTreeSet<VertexId> = c.face_vertices(FaceId(j)).into_iter().collect();
    let k = vs.len();
    for len in 1..k {
        for s in 0..k {
            let p: Vec<VertexId> = (0..len).map(|t| vs[(s + t) % k]).collect();
            if !p.iter().all(|v| other.contains(v)) {
                continue;
            }
            let Ok(path) = Path::from_vertices(g, &p) else { continue };
            if let Some(obs) = contracted_obstruction(c, path, MinorTarget::K4) {
                return Some(obs);
            }
        }
    }
    None
}

fn transversal_obstruction(
    c: &TwoComplex,
    rot: &RotationSystem,
    cycles: &[Vec<EdgeId>],
    a: usize,
    b: usize,
) -> Option<Obstruction> {
    let g = c.graph();
    let comp = g.components().into_iter().find(|comp| comp.contains(&g.endpoints(cycles[a][0])[0]))?;
    let sub = g.induced(&comp);
    let tf = trace_faces(&sub.graph, &rot.restrict(&sub)).ok()?;
    let local: BTreeMap<EdgeId, EdgeId> = sub.edge_origin.iter().enumerate().map(|(i, &e)| (e, EdgeId(i))).collect();
    let sides = tf.cycle_sides(&cycles[b].iter().map(|e| local[e]).collect::<Vec<_>>()).ok()?;
    let on_b: BTreeSet<EdgeId> = cycles[b].iter().copied().collect();
    let darts = c.face(FaceId(a)).darts();
    let k = darts.len();
    // Side of each boundary edge of `a`: None when it runs along `b`.
    let side: Vec<Option<bool>> = darts
        .iter()
        .map(|d| {
            (!on_b.contains(&d.edge)).then(|| sides.first.contains(tf.face_of(Dart::new(local[&d.edge], 0))))
        })
        .collect();
    let start = (0..k).find(|&t| side[t].is_some())?;
    for off in 0..k {
        let s = (start + off) % k;
        let Some(here) = side[s] else { continue };
        let mut t = 1;
        while t < k && side[(s + t) % k].is_none() {
            t += 1;
        }
        if t >= k || side[(s + t) % k] == Some(here) {
            continue;
        }
        // Darts s+1 .. s+t-1 run along `b`; contract the path they form.
        let verts: Vec<VertexId> = (0..t).map(|q| g.head(darts[(s + q) % k])).collect();
        let path = Path::from_vertices(g, &verts).ok()?;
        if let Some(obs) = contracted_obstruction(c, path, MinorTarget::K4) {
            return Some(obs);
        }
    }
    None
}

/// Rechecks an obstruction against the complex it was found in.
pub fn verify_obstruction(c: &TwoComplex, obs: &Obstruction) -> bool {
    match obs {
        Obstruction::NonOuterplanarLink { path, link, witness } => {
            let Ok(con) = c.contract_path(path) else { return false };
            let Ok(fresh) = con.complex.link_graph(con.merged) else { return false };
            fresh == *link && witness.verify(&fresh.graph)
        }
        Obstruction::AsphericalSubcomplex { faces, class } => match classify_faces(c, faces) {
            Some(fresh) => fresh.euler != 2 && fresh == *class,
            None => false,
        },
    }
}

/// Outcome of deciding whether a graph has a plane embedding in which a
/// family of cycles is laminar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NestedPlane {
    /// The pipeline settled it.
    Decided(Verdict),
    /// The pipeline was inconclusive; exhaustive search found an embedding.
    OracleEmbedding { violations: Vec<Violation>, certificate: NestedCertificate },
    /// The pipeline was inconclusive; no sphere embedding nests the cycles.
    OracleNoEmbedding { violations: Vec<Violation> },
    /// The pipeline was inconclusive and the graph is beyond the search cap.
    CapExceeded { violations: Vec<Violation>, size: u128, cap: u128 },
}

impl NestedPlane {
    /// Whether a nested embedding exists, when known.
    pub fn answer(&self) -> Option<bool> {
        match self {
            NestedPlane::Decided(Verdict::Outerspatial(_)) | NestedPlane::OracleEmbedding { .. } => Some(true),
            NestedPlane::Decided(Verdict::NotOuterspatial(_)) | NestedPlane::OracleNoEmbedding { .. } => Some(false),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&NestedCertificate> {
        match self {
            NestedPlane::Decided(Verdict::Outerspatial(c)) => Some(c),
            NestedPlane::OracleEmbedding { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// Decides via the associated complex, falling back to exhaustive search
/// within `cap` when the pipeline cannot settle the instance.
pub fn decide_nested_plane(g: &Graph, cycles: &[FaceSpec], cap: u128) -> Result<(TwoComplex, NestedPlane), DeciderError> {
    let c = associated_complex(g, cycles)?;
    let verdict = decide_outerspatial(&c)?;
    let Verdict::HypothesisViolated(violations) = verdict else {
        return Ok((c, NestedPlane::Decided(verdict)));
    };
    let size = enumeration_size(g);
    let outcome = match brute_force_nested(g, &face_boundaries(&c), cap) {
        Ok(Some(certificate)) => NestedPlane::OracleEmbedding { violations, certificate },
        Ok(None) => NestedPlane::OracleNoEmbedding { violations },
        Err(OracleError::CapExceeded { .. }) => NestedPlane::CapExceeded { violations, size, cap },
        Err(e) => unreachable!("nested search on a valid graph: {e}"),
    };
    Ok((c, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::surface::SurfaceKind;

    #[test]
    fn tetrahedron_is_outerspatial() {
        let t = generate::tetrahedron();
        for fast in [true, false] {
            let v = decide_outerspatial_with(&t, DeciderOptions { triangle_fast_path: fast }).unwrap();
            let Verdict::Outerspatial(cert) = v else { panic!("{v:?}") };
            assert!(verify_certificate(&t, &cert));
        }
    }

    #[test]
    fn cone_over_k4_has_k4_link_at_top() {
        let c = generate::cone_over_graph(&generate::complete_graph(4));
        let v = decide_outerspatial(&c).unwrap();
        let Verdict::NotOuterspatial(obs) = &v else { panic!("{v:?}") };
        let Obstruction::NonOuterplanarLink { path, witness, .. } = obs else { panic!() };
        assert!(path.is_trivial());
        assert_eq!(c.graph().label(path.vertices[0]), "top");
        assert_eq!(witness.target, MinorTarget::K4);
        assert!(verify_obstruction(&c, obs));
    }

    #[test]
    fn cone_over_k23_has_k23_link() {
        let c = generate::cone_over_graph(&generate::complete_bipartite(2, 3));
        let Verdict::NotOuterspatial(obs) = decide_outerspatial(&c).unwrap() else { panic!() };
        let Obstruction::NonOuterplanarLink { witness, .. } = &obs else { panic!() };
        assert_eq!(witness.target, MinorTarget::K23);
        assert!(verify_obstruction(&c, &obs));
    }

    #[test]
    fn torus_is_aspherical() {
        let t = generate::torus7();
        let Verdict::NotOuterspatial(obs) = decide_outerspatial(&t).unwrap() else { panic!() };
        let Obstruction::AsphericalSubcomplex { class, faces } = &obs else { panic!() };
        assert_eq!(class.euler, 0);
        assert_eq!(class.kind, SurfaceKind::Orientable { genus: 1 });
        assert_eq!(faces.len(), 14);
        assert!(verify_obstruction(&t, &obs));
    }

    #[test]
    fn bipyramid_with_equator() {
        let c = generate::bipyramid_with_equator(4);
        let chordal = find_chordal_faces(&c).unwrap();
        let eq = c.find_face("equator").unwrap();
        assert_eq!(chordal.len(), 1);
        assert_eq!(chordal[&eq].len(), 4);
        assert_eq!(check_perfectly_chordal(&c, eq).unwrap(), ChordCheck::Perfect);
        let Verdict::Outerspatial(cert) = decide_outerspatial(&c).unwrap() else { panic!() };
        assert!(verify_certificate(&c, &cert));
        let inside: Vec<usize> = (0..cert.parent.len()).filter(|&i| cert.parent[i] == Some(eq.0)).collect();
        assert_eq!(inside.len(), 4);
    }

    #[test]
    fn no_chords_on_plain_spheres() {
        assert!(find_chordal_faces(&generate::tetrahedron()).unwrap().is_empty());
        assert!(find_chordal_faces(&generate::bipyramid(4)).unwrap().is_empty());
    }

    #[test]
    fn crossing_four_cycles() {
        let b = generate::bipyramid(4);
        let g = b.graph();
        let v = |l: &str| g.find_vertex(l).unwrap();
        let specs = [
            FaceSpec::new("c1", vec![v("n"), v("a0"), v("s"), v("a2")]),
            FaceSpec::new("c2", vec![v("n"), v("a1"), v("s"), v("a3")]),
        ];
        let (c, out) = decide_nested_plane(g, &specs, crate::oracle::DEFAULT_CAP).unwrap();
        assert_eq!(out.answer(), Some(false));
        if let NestedPlane::Decided(Verdict::NotOuterspatial(obs)) = &out {
            assert!(verify_obstruction(&c, obs));
        }
    }

    #[test]
    fn planar_triangles_nest() {
        let g = generate::complete_graph(4);
        let (c, out) = decide_nested_plane(&g, &generate::triangles(&g), crate::oracle::DEFAULT_CAP).unwrap();
        assert!(verify_certificate(&c, out.certificate().unwrap()));
    }

    #[test]
    fn rejects_invalid_input() {
        let mut g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        g.add_edge("p", VertexId(0), VertexId(1));
        let c = TwoComplex::new(g, Vec::new()).unwrap();
        assert!(matches!(decide_outerspatial(&c), Err(DeciderError::Invalid(_))));
    }
}
