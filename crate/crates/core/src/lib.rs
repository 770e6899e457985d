//! Deciding outerspatiality of 2-complexes.
//!
//! A 2-complex is outerspatial when its cone embeds in 3-space. For simple,
//! locally 2-connected complexes this is decided combinatorially: every link
//! graph must be outerplanar, chordal faces must be chords in all their links,
//! and what remains after deleting them must be a union of spheres on which
//! the removed face boundaries nest. The answer comes with a certificate (a
//! sphere embedding of the 1-skeleton in which all face boundaries are
//! laminar) or an obstruction that can be re-checked on its own.

pub mod certificate;
pub mod complex;
pub mod decider;
pub mod embedding;

pub mod generate;
pub mod graph;
pub mod oracle;
pub mod surface;

pub use complex::{FaceId, FaceSpec, Path, TwoComplex};
pub use decider::{decide_nested_plane, decide_outerspatial, NestedCertificate, Obstruction, Verdict};
pub use graph::{EdgeId, Graph, VertexId};
