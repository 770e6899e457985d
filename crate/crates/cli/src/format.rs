//! Line-oriented text format for complexes and cycle lists.
//!
//! ```text
//! # comment
//! vertex a
//! edge ab a b
//! face f a b c       # by vertices; edges are looked up
//! facee g ab bc ca   # by edges, for multigraphs
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use outerspatial::complex::Face;
use outerspatial::graph::Dart;
use outerspatial::{EdgeId, FaceId, FaceSpec, Graph, TwoComplex, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{directive}` expects {expected}")]
    Arity { directive: &'static str, expected: &'static str },
    #[error("`{0}` is not a valid id")]
    BadId(String),
    #[error("duplicate {kind} id `{id}`")]
    Duplicate { kind: &'static str, id: String },
    #[error("undeclared {kind} `{id}`")]
    Undeclared { kind: &'static str, id: String },
    #[error("no edge joins `{0}` and `{1}`")]
    MissingEdge(String, String),
    #[error("more than one edge joins `{0}` and `{1}`; use `facee`")]
    AmbiguousEdge(String, String),
    #[error("edges do not form a closed walk")]
    NotAWalk,
    #[error("{0}")]
    Invalid(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Ids are ASCII alphanumerics plus `_ - . +`.
pub fn is_valid_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '+'))
}

/// Non-empty lines with comments stripped, as `(line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn check_ids(line: usize, ids: &[&str]) -> Result<(), ParseError> {
    match ids.iter().find(|s| !is_valid_id(s)) {
        Some(bad) => Err(err(line, ParseErrorKind::BadId(bad.to_string()))),
        None => Ok(()),
    }
}

/// A parsed complex file with the source line of every item, so that
/// diagnostics can be positioned.
#[derive(Clone, Debug)]
pub struct ComplexFile {
    pub complex: TwoComplex,
    pub vertex_lines: Vec<usize>,
    pub edge_lines: Vec<usize>,
    pub face_lines: Vec<usize>,
}

impl ComplexFile {
    /// Validation diagnostics, each with the line of the offending item.
    pub fn diagnostics(&self) -> Vec<(usize, String)> {
        use outerspatial::complex::Diagnostic;
        let c = &self.complex;
        let mut out: Vec<(usize, String)> = c
            .validate()
            .iter()
            .map(|d| {
                let line = match *d {
                    Diagnostic::Loop { edge, .. } => self.edge_lines[edge.0],
                    Diagnostic::ParallelEdges { second, .. } => self.edge_lines[second.0],
                    Diagnostic::NonCycleFace { face } => self.face_lines[face.0],
                    Diagnostic::DuplicateFace { second, .. } => self.face_lines[second.0],
                };
                (line, d.describe(c))
            })
            .collect();
        out.sort();
        out
    }
}

fn walk_from_edges(g: &Graph, edges: &[EdgeId]) -> Option<Vec<Dart>> {
    // Try both directions for the first edge and follow heads greedily;
    // for each later edge pick the direction whose tail matches.
    'start: for dir in 0..2u8 {
        let mut darts = vec![Dart::new(edges[0], dir)];
        for &e in &edges[1..] {
            let head = g.head(*darts.last().expect("non-empty"));
            let next = [Dart::new(e, 0), Dart::new(e, 1)].into_iter().find(|&d| g.tail(d) == head);
            match next {
                Some(d) => darts.push(d),
                None => continue 'start,
            }
        }
        if g.head(*darts.last().expect("non-empty")) == g.tail(darts[0]) {
            return Some(darts);
        }
    }
    None
}

/// Parses a complex file without checking simplicity or duplicate faces.
pub fn parse_complex_file(text: &str) -> Result<ComplexFile, ParseError> {
    let mut g = Graph::new();
    let mut vertex_lines = Vec::new();
    let mut edge_lines = Vec::new();
    let mut face_lines = Vec::new();
    let mut vertex_ids: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut edge_ids: BTreeMap<String, EdgeId> = BTreeMap::new();
    let mut face_ids: BTreeMap<String, usize> = BTreeMap::new();
    let mut faces: Vec<Face> = Vec::new();
    let vertex = |ids: &BTreeMap<String, VertexId>, line: usize, id: &str| {
        ids.get(id).copied().ok_or_else(|| err(line, ParseErrorKind::Undeclared { kind: "vertex", id: id.into() }))
    };
    for (line, toks) in lines(text) {
        let (directive, args) = (toks[0], &toks[1..]);
        check_ids(line, args)?;
        match directive {
            "vertex" => {
                let [id] = args else {
                    return Err(err(line, ParseErrorKind::Arity { directive: "vertex", expected: "one id" }));
                };
                if vertex_ids.contains_key(*id) {
                    return Err(err(line, ParseErrorKind::Duplicate { kind: "vertex", id: id.to_string() }));
                }
                vertex_ids.insert(id.to_string(), g.add_vertex(*id));
                vertex_lines.push(line);
            }
            "edge" => {
                let [id, u, v] = args else {
                    return Err(err(line, ParseErrorKind::Arity { directive: "edge", expected: "an id and two vertices" }));
                };
                if edge_ids.contains_key(*id) {
                    return Err(err(line, ParseErrorKind::Duplicate { kind: "edge", id: id.to_string() }));
                }
                let (u, v) = (vertex(&vertex_ids, line, u)?, vertex(&vertex_ids, line, v)?);
                edge_ids.insert(id.to_string(), g.add_edge(*id, u, v));
                edge_lines.push(line);
            }
            "face" | "facee" => {
                let Some((id, rest)) = args.split_first().filter(|(_, r)| !r.is_empty()) else {
                    return Err(err(line, ParseErrorKind::Arity { directive: "face", expected: "an id and a boundary" }));
                };
                if face_ids.contains_key(*id) {
                    return Err(err(line, ParseErrorKind::Duplicate { kind: "face", id: id.to_string() }));
                }
                let darts = if directive == "face" {
                    let vs = rest.iter().map(|v| vertex(&vertex_ids, line, v)).collect::<Result<Vec<_>, _>>()?;
                    let k = vs.len();
                    let mut darts = Vec::with_capacity(k);
                    for i in 0..k {
                        let (a, b) = (vs[i], vs[(i + 1) % k]);
                        let mut joining = g.edges().filter(|&e| {
                            let [x, y] = g.endpoints(e);
                            (x, y) == (a, b) || (y, x) == (a, b)
                        });
                        let Some(e) = joining.next() else {
                            return Err(err(line, ParseErrorKind::MissingEdge(g.label(a).into(), g.label(b).into())));
                        };
                        if joining.next().is_some() {
                            return Err(err(line, ParseErrorKind::AmbiguousEdge(g.label(a).into(), g.label(b).into())));
                        }
                        darts.push(Dart::new(e, u8::from(g.endpoints(e)[0] != a)));
                    }
                    darts
                } else {
                    let es = rest
                        .iter()
                        .map(|e| {
                            edge_ids.get(*e).copied().ok_or_else(|| {
                                err(line, ParseErrorKind::Undeclared { kind: "edge", id: e.to_string() })
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    walk_from_edges(&g, &es).ok_or_else(|| err(line, ParseErrorKind::NotAWalk))?
                };
                face_ids.insert(id.to_string(), faces.len());
                faces.push(Face::new(*id, darts));
                face_lines.push(line);
            }
            other => return Err(err(line, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    let last = text.lines().count().max(1);
    let complex = TwoComplex::new(g, faces).map_err(|e| err(last, ParseErrorKind::Invalid(e.to_string())))?;
    Ok(ComplexFile { complex, vertex_lines, edge_lines, face_lines })
}

/// Parses and validates: the result is a simple complex whose faces are
/// distinct cycles, or the first problem with its line.
pub fn parse_complex(text: &str) -> Result<TwoComplex, ParseError> {
    let file = parse_complex_file(text)?;
    if let Some((line, msg)) = file.diagnostics().into_iter().next() {
        return Err(err(line, ParseErrorKind::Invalid(msg)));
    }
    Ok(file.complex)
}

/// Whether face `f` can be written with `face` and read back unchanged.
fn vertex_form_ok(c: &TwoComplex, f: FaceId) -> bool {
    let g = c.graph();
    let face = c.face(f);
    face.len() >= 3
        && face.darts().iter().all(|d| {
            let [a, b] = g.endpoints(d.edge);
            a != b && g.edges().filter(|&e| {
                let [x, y] = g.endpoints(e);
                (x, y) == (a, b) || (y, x) == (a, b)
            }).count() == 1
        })
}

pub fn print_complex(c: &TwoComplex) -> String {
    let g = c.graph();
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "vertex {}", g.label(v));
    }
    for e in g.edges() {
        let [a, b] = g.endpoints(e);
        let _ = writeln!(out, "edge {} {} {}", g.edge_label(e), g.label(a), g.label(b));
    }
    for f in c.face_ids() {
        let face = c.face(f);
        if vertex_form_ok(c, f) {
            let vs: Vec<&str> = c.face_vertices(f).into_iter().map(|v| g.label(v)).collect();
            let _ = writeln!(out, "face {} {}", face.label(), vs.join(" "));
        } else {
            let es: Vec<&str> = face.edges().map(|e| g.edge_label(e)).collect();
            let _ = writeln!(out, "facee {} {}", face.label(), es.join(" "));
        }
    }
    out
}

/// Reads `cycle <id> <v1> ... <vk>` lines against the vertices of `g`.
pub fn parse_cycles(g: &Graph, text: &str) -> Result<Vec<FaceSpec>, ParseError> {
    let mut out: Vec<FaceSpec> = Vec::new();
    for (line, toks) in lines(text) {
        if toks[0] != "cycle" {
            return Err(err(line, ParseErrorKind::UnknownDirective(toks[0].to_string())));
        }
        let args = &toks[1..];
        check_ids(line, args)?;
        let Some((id, rest)) = args.split_first().filter(|(_, r)| !r.is_empty()) else {
            return Err(err(line, ParseErrorKind::Arity { directive: "cycle", expected: "an id and vertices" }));
        };
        if out.iter().any(|s| s.label == *id) {
            return Err(err(line, ParseErrorKind::Duplicate { kind: "cycle", id: id.to_string() }));
        }
        let vs = rest
            .iter()
            .map(|v| {
                g.find_vertex(v)
                    .ok_or_else(|| err(line, ParseErrorKind::Undeclared { kind: "vertex", id: v.to_string() }))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let k = vs.len();
        for i in 0..k {
            if g.edge_between(vs[i], vs[(i + 1) % k]).is_none() {
                return Err(err(
                    line,
                    ParseErrorKind::MissingEdge(g.label(vs[i]).into(), g.label(vs[(i + 1) % k]).into()),
                ));
            }
        }
        out.push(FaceSpec::new(*id, vs));
    }
    Ok(out)
}

pub fn print_cycles(g: &Graph, cycles: &[FaceSpec]) -> String {
    let mut out = String::new();
    for c in cycles {
        let vs: Vec<&str> = c.vertices.iter().map(|&v| g.label(v)).collect();
        let _ = writeln!(out, "cycle {} {}", c.label, vs.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use outerspatial::generate;

    const TETRA: &str = "\
# tetrahedron
vertex a
vertex b
vertex c
vertex d
edge ab a b
edge ac a c
edge ad a d
edge bc b c
edge bd b d
edge cd c d
face abc a b c
face abd a b d
face acd a c d
face bcd b c d
";

    #[test]
    fn tetrahedron_file() {
        let c = parse_complex(TETRA).unwrap();
        assert_eq!(c.graph().vertex_count(), 4);
        assert_eq!(c.graph().edge_count(), 6);
        assert_eq!(c.face_count(), 4);
        assert!(c.is_valid());
    }

    #[test]
    fn undeclared_vertex_reports_line() {
        let text = "vertex a\nvertex b\nedge ab a b\nedge bc b c\n";
        let e = parse_complex(text).unwrap_err();
        assert_eq!(e.line, 4);
        assert_eq!(e.kind, ParseErrorKind::Undeclared { kind: "vertex", id: "c".into() });
    }

    #[test]
    fn rotated_duplicate_face_rejected() {
        let text = format!("{TETRA}face again c a b\n");
        let e = parse_complex(&text).unwrap_err();
        assert_eq!(e.line, 16);
        assert!(matches!(e.kind, ParseErrorKind::Invalid(_)));
    }

    #[test]
    fn unknown_directive_and_duplicates() {
        assert_eq!(parse_complex("vertex a\nloop a\n").unwrap_err().line, 2);
        let e = parse_complex("vertex a\nvertex a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Duplicate { kind: "vertex", id: "a".into() });
        assert!(matches!(parse_complex("vertex a!\n").unwrap_err().kind, ParseErrorKind::BadId(_)));
    }

    #[test]
    fn multigraph_faces_by_edges() {
        let text = "vertex a\nvertex b\nedge x a b\nedge y a b\nfacee digon x y\n";
        let file = parse_complex_file(text).unwrap();
        assert_eq!(file.complex.face(FaceId(0)).len(), 2);
        assert_eq!(file.diagnostics().first().map(|d| d.0), Some(4));
        let printed = print_complex(&file.complex);
        assert!(printed.contains("facee digon"));
        assert_eq!(parse_complex_file(&printed).unwrap().complex, file.complex);
        assert!(parse_complex_file("vertex a\nvertex b\nedge x a b\nedge y a b\nface f a b\n").is_err());
    }

    #[test]
    fn generated_complexes_round_trip() {
        for c in [
            generate::tetrahedron(),
            generate::bipyramid_with_equator(4),
            generate::torus7(),
            generate::cone_over_graph(&generate::complete_graph(4)),
        ] {
            assert_eq!(parse_complex(&print_complex(&c)).unwrap(), c);
        }
    }

    #[test]
    fn cycles_file() {
        let b = generate::bipyramid(4);
        let g = b.graph();
        let cycles = parse_cycles(g, "cycle p n a0 s a2\ncycle q n a1 s a3\n").unwrap();
        assert_eq!(cycles.len(), 2);
        assert_eq!(parse_cycles(g, &print_cycles(g, &cycles)).unwrap(), cycles);
        assert_eq!(parse_cycles(g, "cycle p n a0 a2\n").unwrap_err().line, 1);
    }
}
