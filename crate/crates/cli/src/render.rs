//! Graphviz dot and SVG output for certificate embeddings and link graphs.

use std::fmt::Write as _;

use outerspatial::{Graph, NestedCertificate, TwoComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Dot,
    Svg,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// A graph drawing. `rotation[v]` lists the edge labels around `v` when
/// an embedding is known; `notes` become comments.
pub struct Drawing<'a> {
    pub name: String,
    pub graph: &'a Graph,
    pub rotation: Option<Vec<Vec<String>>>,
    pub notes: Vec<String>,
}

impl Drawing<'_> {
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Dot => self.dot(),
            RenderFormat::Svg => self.svg(),
        }
    }

    fn dot(&self) -> String {
        let g = self.graph;
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", dot_escape(&self.name));
        for n in &self.notes {
            let _ = writeln!(out, "  // {n}");
        }
        let _ = writeln!(out, "  node [shape=circle];");
        for v in g.vertices() {
            match &self.rotation {
                Some(rot) => {
                    let r = dot_escape(&rot[v.0].join(" "));
                    let _ = writeln!(out, "  \"{}\" [rotation=\"{r}\"];", dot_escape(g.label(v)));
                }
                None => {
                    let _ = writeln!(out, "  \"{}\";", dot_escape(g.label(v)));
                }
            }
        }
        for e in g.edges() {
            let [a, b] = g.endpoints(e);
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                dot_escape(g.label(a)),
                dot_escape(g.label(b)),
                dot_escape(g.edge_label(e))
            );
        }
        out.push_str("}\n");
        out
    }

    /// Vertices evenly spaced on a circle in id order.
    fn svg(&self) -> String {
        let g = self.graph;
        let n = g.vertex_count().max(1);
        let (size, radius) = (400.0f64, 150.0f64);
        let pos: Vec<(f64, f64)> = g
            .vertices()
            .map(|v| {
                let t = std::f64::consts::TAU * v.0 as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
                (size / 2.0 + radius * t.cos(), size / 2.0 + radius * t.sin())
            })
            .collect();
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        );
        let _ = writeln!(out, "<title>{}</title>", xml_escape(&self.name));
        for note in &self.notes {
            let _ = writeln!(out, "<!-- {} -->", xml_escape(note).replace("--", "- -"));
        }
        for e in g.edges() {
            let [a, b] = g.endpoints(e);
            let ((x1, y1), (x2, y2)) = (pos[a.0], pos[b.0]);
            if a == b {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"12\" fill=\"none\" stroke=\"black\"><title>{}</title></circle>",
                    x1,
                    y1 - 12.0,
                    xml_escape(g.edge_label(e))
                );
                continue;
            }
            let _ = writeln!(
                out,
                "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"black\"><title>{}</title></line>",
                xml_escape(g.edge_label(e))
            );
        }
        for v in g.vertices() {
            let (x, y) = pos[v.0];
            let _ = writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"14\" fill=\"white\" stroke=\"black\"/>");
            let _ = writeln!(
                out,
                "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                y + 4.0,
                xml_escape(g.label(v))
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Drawing of the skeleton with the certificate's rotators and outer face.
pub fn certificate_drawing<'a>(c: &'a TwoComplex, cert: &NestedCertificate) -> Drawing<'a> {
    let g = c.graph();
    let rotation = g
        .vertices()
        .map(|v| cert.rotation.rotator(v).iter().map(|h| g.edge_label(h.edge).to_string()).collect())
        .collect();
    let notes = cert
        .outer_faces
        .iter()
        .map(|orbit| {
            let es: Vec<&str> = orbit.iter().map(|d| g.edge_label(d.edge)).collect();
            format!("outer face: {}", es.join(" "))
        })
        .collect();
    Drawing { name: "certificate".into(), graph: g, rotation: Some(rotation), notes }
}
