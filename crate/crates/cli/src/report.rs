//! Text reports for verdicts, links and surfaces, and a reader for the
//! certificate part so that printed certificates can be re-verified.

use std::fmt::Write as _;

use outerspatial::complex::LinkGraph;
use outerspatial::decider::{NestedPlane, Violation};
use outerspatial::embedding::{is_2_connected, test_outerplanar, MinorWitness, Outerplanarity, RotationSystem};
use outerspatial::graph::{Dart, HalfEdge};
use outerspatial::surface::{classify_surface, SurfaceClass};
use outerspatial::{EdgeId, Graph, NestedCertificate, Obstruction, TwoComplex, Verdict, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("report line {line}: {msg}")]
pub struct ReportError {
    pub line: usize,
    pub msg: String,
}

fn kind_token(v: &Verdict) -> &'static str {
    match v {
        Verdict::Outerspatial(_) => "outerspatial",
        Verdict::NotOuterspatial(_) => "not-outerspatial",
        Verdict::HypothesisViolated(_) => "hypothesis-violated",
    }
}

fn half(g: &Graph, h: HalfEdge) -> String {
    format!("{}:{}", g.edge_label(h.edge), h.end)
}

fn dart(g: &Graph, d: Dart) -> String {
    format!("{}:{}", g.edge_label(d.edge), d.dir)
}

/// Rotators, outer orbits and the nesting forest; `labels[i]` names cycle `i`.
pub fn write_certificate(out: &mut String, g: &Graph, labels: &[String], cert: &NestedCertificate) {
    for v in g.vertices() {
        let hs: Vec<String> = cert.rotation.rotator(v).iter().map(|&h| half(g, h)).collect();
        let _ = writeln!(out, "rotator {} {}", g.label(v), hs.join(" "));
    }
    for orbit in &cert.outer_faces {
        let ds: Vec<String> = orbit.iter().map(|&d| dart(g, d)).collect();
        let _ = writeln!(out, "outer {}", ds.join(" "));
    }
    let _ = writeln!(out, "forest");
    fn walk(out: &mut String, labels: &[String], parent: &[Option<usize>], node: Option<usize>, depth: usize) {
        for i in (0..parent.len()).filter(|&i| parent[i] == node) {
            let _ = writeln!(out, "{}{}", "  ".repeat(depth + 1), labels[i]);
            walk(out, labels, parent, Some(i), depth + 1);
        }
    }
    walk(out, labels, &cert.parent, None, 0);
}

fn write_witness(out: &mut String, link: &Graph, w: &MinorWitness) {
    let _ = writeln!(out, "minor {}", w.target.name());
    for (i, set) in w.branch_sets.iter().enumerate() {
        let vs: Vec<&str> = set.iter().map(|&v| link.label(v)).collect();
        let _ = writeln!(out, "branch {i} {}", vs.join(" "));
    }
    for &(a, b, e) in &w.connections {
        let [x, y] = link.endpoints(e);
        let _ = writeln!(out, "connect {a} {b} {} {}", link.label(x), link.label(y));
    }
}

fn write_link_edges(out: &mut String, link: &Graph) {
    let vs: Vec<&str> = link.vertices().map(|v| link.label(v)).collect();
    let _ = writeln!(out, "link-vertices {}", vs.join(" "));
    for e in link.edges() {
        let [x, y] = link.endpoints(e);
        let _ = writeln!(out, "link-edge {} {} {}", link.edge_label(e), link.label(x), link.label(y));
    }
}

fn write_class(out: &mut String, g: &Graph, c: &TwoComplex, class: &SurfaceClass) {
    let fs: Vec<&str> = class.faces.iter().map(|&f| c.face(f).label()).collect();
    let vs: Vec<&str> = class.vertices.iter().map(|&v| g.label(v)).collect();
    let _ = writeln!(out, "vertices {}", vs.join(" "));
    let _ = writeln!(out, "faces {}", fs.join(" "));
    let _ = writeln!(out, "euler {}", class.euler);
    let orientable = match class.orientable {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    };
    let _ = writeln!(out, "orientable {orientable}");
    let _ = writeln!(out, "surface {}", class.kind);
}

fn write_obstruction(out: &mut String, c: &TwoComplex, obs: &Obstruction) {
    let g = c.graph();
    match obs {
        Obstruction::NonOuterplanarLink { path, link, witness } => {
            let _ = writeln!(out, "obstruction non-outerplanar-link");
            let vs: Vec<&str> = path.vertices.iter().map(|&v| g.label(v)).collect();
            let _ = writeln!(out, "path {}", vs.join(" "));
            write_link_edges(out, &link.graph);
            write_witness(out, &link.graph, witness);
        }
        Obstruction::AsphericalSubcomplex { class, .. } => {
            let _ = writeln!(out, "obstruction aspherical-subcomplex");
            write_class(out, g, c, class);
        }
    }
}

fn write_violations(out: &mut String, c: &TwoComplex, vs: &[Violation]) {
    for v in vs {
        let _ = writeln!(out, "violation {}", v.describe(c));
    }
}

fn face_labels(c: &TwoComplex) -> Vec<String> {
    c.faces().iter().map(|f| f.label().to_string()).collect()
}

pub fn verdict_report(c: &TwoComplex, v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict {}", kind_token(v));
    match v {
        Verdict::Outerspatial(cert) => write_certificate(&mut out, c.graph(), &face_labels(c), cert),
        Verdict::NotOuterspatial(obs) => write_obstruction(&mut out, c, obs),
        Verdict::HypothesisViolated(vs) => write_violations(&mut out, c, vs),
    }
    out
}

/// Report for the exhaustive oracle: a certificate or a plain "no".
pub fn oracle_report(c: &TwoComplex, cert: Option<&NestedCertificate>) -> String {
    let mut out = String::new();
    match cert {
        Some(cert) => {
            let _ = writeln!(out, "verdict outerspatial");
            write_certificate(&mut out, c.graph(), &face_labels(c), cert);
        }
        None => {
            let _ = writeln!(out, "verdict not-outerspatial");
            let _ = writeln!(out, "exhausted every sphere embedding");
        }
    }
    out
}

pub fn nested_report(c: &TwoComplex, outcome: &NestedPlane) -> String {
    let mut out = String::new();
    let answer = match outcome.answer() {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    let _ = writeln!(out, "nested {answer}");
    match outcome {
        NestedPlane::Decided(v) => out.push_str(&verdict_report(c, v)),
        NestedPlane::OracleEmbedding { violations, certificate } => {
            write_violations(&mut out, c, violations);
            let _ = writeln!(out, "by exhaustive search");
            write_certificate(&mut out, c.graph(), &face_labels(c), certificate);
        }
        NestedPlane::OracleNoEmbedding { violations } => {
            write_violations(&mut out, c, violations);
            let _ = writeln!(out, "by exhaustive search: no sphere embedding nests the cycles");
        }
        NestedPlane::CapExceeded { violations, size, cap } => {
            write_violations(&mut out, c, violations);
            let _ = writeln!(out, "cap exceeded: {size} rotation systems, cap {cap}");
        }
    }
    out
}

fn write_link(out: &mut String, c: &TwoComplex, v: VertexId, link: &LinkGraph) {
    let g = &link.graph;
    let _ = writeln!(out, "link {}", c.graph().label(v));
    write_link_edges(out, g);
    let _ = writeln!(out, "simple {}", if g.is_simple() { "yes" } else { "no" });
    let _ = writeln!(out, "2-connected {}", if is_2_connected(g) { "yes" } else { "no" });
    match test_outerplanar(g) {
        Outerplanarity::Outerplanar(structure) => {
            let _ = writeln!(out, "outerplanar yes");
            if let Some(s) = structure {
                let b: Vec<&str> = s.boundary.iter().map(|&x| g.label(x)).collect();
                let ch: Vec<&str> = s.chords.iter().map(|&e| g.edge_label(e)).collect();
                let _ = writeln!(out, "boundary {}", b.join(" "));
                let _ = writeln!(out, "chords {}", ch.join(" "));
            }
        }
        Outerplanarity::NotOuterplanar(w) => {
            let _ = writeln!(out, "outerplanar no");
            write_witness(out, g, &w);
        }
    }
}

/// Every link graph with its outerplanarity status. Also returns whether
/// all links are outerplanar.
pub fn links_report(c: &TwoComplex) -> (String, bool) {
    let mut out = String::new();
    let mut all = true;
    for v in c.graph().vertices() {
        let link = c.link_graph(v).expect("vertex of the complex");
        all &= test_outerplanar(&link.graph).is_outerplanar();
        write_link(&mut out, c, v, &link);
    }
    (out, all)
}

pub fn surface_report(c: &TwoComplex) -> String {
    let mut out = String::new();
    for (i, class) in classify_surface(c).iter().enumerate() {
        let _ = writeln!(out, "component {i}");
        write_class(&mut out, c.graph(), c, class);
    }
    out
}

fn parse_token<T>(line: usize, tok: &str, f: impl Fn(&str) -> Option<EdgeId>, make: impl Fn(EdgeId, u8) -> T) -> Result<T, ReportError> {
    let bad = || ReportError { line, msg: format!("bad half-edge `{tok}`") };
    let (e, end) = tok.rsplit_once(':').ok_or_else(bad)?;
    let end: u8 = end.parse().map_err(|_| bad())?;
    if end > 1 {
        return Err(bad());
    }
    Ok(make(f(e).ok_or_else(bad)?, end))
}

/// Reads the certificate part of a report (rotators, outer orbits, forest)
/// for the graph `g` and cycles named `labels`. Other lines are ignored.
pub fn parse_certificate(g: &Graph, labels: &[String], text: &str) -> Result<NestedCertificate, ReportError> {
    let mut rots: Vec<Option<Vec<HalfEdge>>> = vec![None; g.vertex_count()];
    let mut outer_faces = Vec::new();
    let mut parent = vec![None; labels.len()];
    let mut seen = vec![false; labels.len()];
    let mut in_forest = false;
    let mut stack: Vec<usize> = Vec::new();
    let find_edge = |s: &str| g.find_edge_by_label(s);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if in_forest && raw.starts_with("  ") {
            let indent = raw.len() - raw.trim_start().len();
            if indent % 2 != 0 || toks.len() != 1 {
                return Err(ReportError { line, msg: "malformed forest line".into() });
            }
            let depth = indent / 2 - 1;
            if depth > stack.len() {
                return Err(ReportError { line, msg: "forest indentation skips a level".into() });
            }
            stack.truncate(depth);
            let Some(k) = labels.iter().position(|l| l == toks[0]) else {
                return Err(ReportError { line, msg: format!("unknown face `{}`", toks[0]) });
            };
            if std::mem::replace(&mut seen[k], true) {
                return Err(ReportError { line, msg: format!("face `{}` listed twice", toks[0]) });
            }
            parent[k] = stack.last().copied();
            stack.push(k);
            continue;
        }
        in_forest = false;
        match toks[0] {
            "rotator" => {
                let Some(v) = toks.get(1).and_then(|l| g.find_vertex(l)) else {
                    return Err(ReportError { line, msg: "rotator for an unknown vertex".into() });
                };
                let hs = toks[2..]
                    .iter()
                    .map(|t| parse_token(line, t, find_edge, HalfEdge::new))
                    .collect::<Result<Vec<_>, _>>()?;
                rots[v.0] = Some(hs);
            }
            "outer" => {
                let ds = toks[1..]
                    .iter()
                    .map(|t| parse_token(line, t, find_edge, Dart::new))
                    .collect::<Result<Vec<_>, _>>()?;
                outer_faces.push(ds);
            }
            "forest" => in_forest = true,
            _ => {}
        }
    }
    let rotators = rots
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| ReportError { line: 0, msg: format!("no rotator for `{}`", g.label(VertexId(v))) }))
        .collect::<Result<Vec<_>, _>>()?;
    let rotation = RotationSystem::new(g, rotators).map_err(|e| ReportError { line: 0, msg: e.to_string() })?;
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(ReportError { line: 0, msg: format!("face `{}` missing from the forest", labels[k]) });
    }
    Ok(NestedCertificate { rotation, outer_faces, parent })
}

/// Convenience wrapper for a complex's own faces.
pub fn parse_complex_certificate(c: &TwoComplex, text: &str) -> Result<NestedCertificate, ReportError> {
    parse_certificate(c.graph(), &face_labels(c), text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use outerspatial::certificate::verify_certificate;
    use outerspatial::{decide_outerspatial, generate};

    #[test]
    fn certificate_report_round_trip() {
        for c in [generate::tetrahedron(), generate::bipyramid_with_equator(4), generate::bipyramid(6)] {
            let v = decide_outerspatial(&c).unwrap();
            let Verdict::Outerspatial(cert) = &v else { panic!("outerspatial") };
            let report = verdict_report(&c, &v);
            let back = parse_complex_certificate(&c, &report).unwrap();
            assert_eq!(&back, cert);
            assert!(verify_certificate(&c, &back));
        }
    }

    #[test]
    fn equator_contains_four_triangles() {
        let c = generate::bipyramid_with_equator(4);
        let Verdict::Outerspatial(cert) = decide_outerspatial(&c).unwrap() else { panic!("outerspatial") };
        let eq = c.face_count() - 1;
        assert_eq!(cert.parent.iter().filter(|p| **p == Some(eq)).count(), 4);
    }

    #[test]
    fn tampered_forest_rejected() {
        let c = generate::tetrahedron();
        let report = verdict_report(&c, &decide_outerspatial(&c).unwrap());
        let cut: String = report.lines().filter(|l| l.trim() != "f3").map(|l| format!("{l}\n")).collect();
        assert!(parse_complex_certificate(&c, &cut).is_err());
    }

    #[test]
    fn obstruction_reports() {
        let cone = generate::cone_over_graph(&generate::complete_graph(4));
        let r = verdict_report(&cone, &decide_outerspatial(&cone).unwrap());
        assert!(r.starts_with("verdict not-outerspatial\nobstruction non-outerplanar-link\n"));
        assert!(r.contains("minor K4"));
        let t = generate::torus7();
        let r = verdict_report(&t, &decide_outerspatial(&t).unwrap());
        assert!(r.contains("euler 0\norientable yes\nsurface orientable genus 1"));
    }
}
