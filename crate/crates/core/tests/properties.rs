use std::collections::BTreeSet;

use outerspatial::certificate::{certify, face_boundaries, verify_certificate, verify_nested};
use outerspatial::complex::{canonical_walk, vertex_sum, Face};
use outerspatial::decider::{decide_outerspatial_with, DeciderOptions};
use outerspatial::embedding::{test_planar, trace_faces, Planarity, RotationSystem};
use outerspatial::generate::{self, RandomBase, RandomParams};
use outerspatial::oracle::{all_rotation_systems, brute_force_outerspatial, enumerate_sphere_embeddings, enumeration_size};
use outerspatial::surface::{classify_surface, orient};
use outerspatial::{EdgeId, FaceId, Graph, Path, TwoComplex, VertexId};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// A valid random complex; invalid draws are skipped.
fn random_complex(seed: u64) -> TwoComplex {
    let mut rng = generate::rng(seed);
    loop {
        let c = random_draw(&mut rng);
        if c.is_valid() && c.graph().edge_count() > 0 {
            return c;
        }
    }
}

fn random_draw(rng: &mut impl Rng) -> TwoComplex {
    let base = match rng.gen_range(0..6) {
        0 => RandomBase::Torus,
        1 => RandomBase::ProjectivePlane,
        2 => RandomBase::Cycles,
        _ => RandomBase::Sphere,
    };
    let p = RandomParams {
        base,
        vertices: rng.gen_range(4..=7),
        merges: rng.gen_range(0..3),
        extra_faces: rng.gen_range(0..3),
        max_cycle_len: rng.gen_range(3..6),
    };
    generate::random_complex(rng, &p)
}

/// Connected random graph on `n` vertices: a random tree plus extra edges.
fn random_connected_graph(seed: u64, n: usize, extra: usize) -> Graph {
    let mut rng = generate::rng(seed);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())
}

fn relabelled(c: &TwoComplex, seed: u64) -> TwoComplex {
    let g = c.graph();
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(&mut generate::rng(seed));
    let mut h = Graph::new();
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    for &old in &perm {
        h.add_vertex(g.label(VertexId(old)));
    }
    for e in g.edges() {
        let [a, b] = g.endpoints(e);
        h.add_edge(g.edge_label(e), VertexId(inv[a.0]), VertexId(inv[b.0]));
    }
    TwoComplex::new(h, c.faces().to_vec()).unwrap()
}

fn label_pairs(g: &Graph, strip: bool) -> Vec<(String, String)> {
    let name = |v: VertexId| {
        let l = g.label(v);
        if strip { l[2..].to_string() } else { l.to_string() }
    };
    let mut out: Vec<(String, String)> = g
        .edges()
        .map(|e| {
            let [a, b] = g.endpoints(e);
            let (x, y) = (name(a), name(b));
            if x <= y { (x, y) } else { (y, x) }
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_walk_is_idempotent_and_invariant(seed in any::<u64>(), shift in 0usize..8, flip in any::<bool>()) {
        let c = random_complex(seed);
        let g = c.graph();
        for f in c.faces() {
            let w = f.darts().to_vec();
            prop_assert_eq!(canonical_walk(g, &w), w.clone());
            let mut moved = w.clone();
            moved.rotate_left(shift % w.len());
            if flip {
                moved = moved.iter().rev().map(|d| d.reversed()).collect();
            }
            prop_assert_eq!(canonical_walk(g, &moved), w);
        }
    }

    #[test]
    fn link_degree_of_an_edge_is_the_same_at_both_ends(seed in any::<u64>()) {
        let c = random_complex(seed);
        let g = c.graph();
        let counts = c.edge_face_counts();
        for e in g.edges() {
            let [u, v] = g.endpoints(e);
            let deg_at = |x: VertexId| {
                let l = c.link_graph(x).unwrap();
                let lv = l.vertex_of_edge(e).unwrap();
                l.graph.degree(lv)
            };
            prop_assert_eq!(deg_at(u), deg_at(v));
            prop_assert_eq!(deg_at(u), counts[e.0]);
        }
    }

    #[test]
    fn apex_link_of_a_cone_is_the_skeleton(seed in any::<u64>()) {
        let c = random_complex(seed);
        let cone = c.cone().unwrap();
        let top = VertexId(c.graph().vertex_count());
        let l = cone.link_graph(top).unwrap();
        let g = c.graph();
        prop_assert_eq!(l.graph.vertex_count(), g.vertex_count());
        prop_assert_eq!(l.graph.edge_count(), g.edge_count());
        // Link vertex `top_v` stands for v; link edge `top_e` for e.
        for e in l.graph.edges() {
            let [a, b] = l.graph.endpoints(e);
            let strip = |s: &str| s.trim_start_matches("top_").to_string();
            let orig = g.find_edge_by_label(&strip(l.graph.edge_label(e))).unwrap();
            let mut ends: Vec<String> = g.endpoints(orig).iter().map(|&v| g.label(v).to_string()).collect();
            let mut got = vec![strip(l.graph.label(a)), strip(l.graph.label(b))];
            ends.sort();
            got.sort();
            prop_assert_eq!(got, ends);
        }
    }

    #[test]
    fn contracting_an_edge_sums_the_two_links(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let c = random_complex(seed);
        let g = c.graph();
        let e = EdgeId(pick.index(g.edge_count()));
        let [u, v] = g.endpoints(e);
        prop_assume!(u != v);
        // Faces must pass through e at most once for the pairing by face.
        let through: Vec<FaceId> = c.face_ids().filter(|&f| c.face_edges(f).contains(&e)).collect();
        prop_assume!(through.iter().all(|&f| c.face(f).edges().filter(|&x| x == e).count() == 1));
        let (lu, lv) = (c.link_graph(u).unwrap(), c.link_graph(v).unwrap());
        let (xu, xv) = (lu.vertex_of_edge(e).unwrap(), lv.vertex_of_edge(e).unwrap());
        let pairing: Vec<(EdgeId, EdgeId)> = through
            .iter()
            .map(|&f| (lu.edges_of_face(f).into_iter().find(|&k| lu.graph.endpoints(k).contains(&xu)).unwrap(),
                       lv.edges_of_face(f).into_iter().find(|&k| lv.graph.endpoints(k).contains(&xv)).unwrap()))
            .collect();
        let sum = vertex_sum(&lu.graph, xu, &lv.graph, xv, &pairing).unwrap();
        let con = c.contract_path(&Path::from_vertices(g, &[u, v]).unwrap()).unwrap();
        let merged = con.complex.link_graph(con.merged).unwrap();
        let mut expected: Vec<(String, String)> = label_pairs(&sum.graph, true);
        expected.sort();
        prop_assert_eq!(label_pairs(&merged.graph, false), expected);
    }

    #[test]
    fn deleting_faces_composes(seed in any::<u64>(), a in any::<u32>(), b in any::<u32>()) {
        let c = random_complex(seed);
        let n = c.face_count();
        let s: BTreeSet<FaceId> = (0..n).filter(|i| a >> (i % 32) & 1 == 1).map(FaceId).collect();
        let once = c.delete_faces(&s).unwrap();
        // T in the numbering of the remaining faces, and S ∪ T in the original one.
        let kept: Vec<usize> = (0..n).filter(|i| !s.contains(&FaceId(*i))).collect();
        let t: BTreeSet<FaceId> = (0..kept.len()).filter(|i| b >> (i % 32) & 1 == 1).map(FaceId).collect();
        let union: BTreeSet<FaceId> = s.iter().copied().chain(t.iter().map(|f| FaceId(kept[f.0]))).collect();
        prop_assert_eq!(once.delete_faces(&t).unwrap(), c.delete_faces(&union).unwrap());
    }

    #[test]
    fn traced_faces_satisfy_euler(seed in any::<u64>(), n in 2usize..7, extra in 0usize..8) {
        let g = random_connected_graph(seed, n, extra);
        let mut rng = generate::rng(seed ^ 1);
        let rots: Vec<_> = g.incidence().into_iter().map(|mut r| { r.shuffle(&mut rng); r }).collect();
        let rot = RotationSystem::new(&g, rots).unwrap();
        let tf = trace_faces(&g, &rot).unwrap();
        let chi = g.vertex_count() as isize - g.edge_count() as isize + tf.face_count() as isize;
        prop_assert_eq!(chi, tf.euler_characteristic());
        prop_assert_eq!(chi, 2 - 2 * tf.genus() as isize);
    }

    #[test]
    fn a_cycle_splits_the_faces_in_two(seed in any::<u64>()) {
        let c = random_complex(seed);
        let g = c.graph();
        prop_assume!(g.is_connected());
        let Planarity::Planar(rot) = test_planar(g) else { return Ok(()) };
        let tf = trace_faces(g, &rot).unwrap();
        for f in c.face_ids() {
            let s = tf.cycle_sides(&c.face_edges(f)).unwrap();
            prop_assert!(s.first.is_disjoint(&s.second));
            prop_assert_eq!(s.first.count_ones(..) + s.second.count_ones(..), tf.face_count());
            prop_assert!(s.first.count_ones(..) > 0 && s.second.count_ones(..) > 0);
        }
    }

    #[test]
    fn certificates_describe_laminar_families(seed in any::<u64>()) {
        let c = random_complex(seed);
        let g = c.graph();
        let Planarity::Planar(rot) = test_planar(g) else { return Ok(()) };
        if let Ok(cert) = certify(g, &face_boundaries(&c), &rot) {
            prop_assert!(verify_certificate(&c, &cert));
            // Parents form a forest: following them always terminates.
            for i in 0..cert.parent.len() {
                let mut steps = 0;
                let mut k = Some(i);
                while let Some(j) = k {
                    k = cert.parent[j];
                    steps += 1;
                    prop_assert!(steps <= cert.parent.len());
                }
            }
        }
    }

    #[test]
    fn surface_class_ignores_vertex_order(seed in any::<u64>(), perm in any::<u64>()) {
        let c = random_complex(seed);
        let a: Vec<_> = classify_surface(&c).iter().map(|k| (k.euler, k.orientable, k.kind)).collect();
        let r = relabelled(&c, perm);
        let mut b: Vec<_> = classify_surface(&r).iter().map(|k| (k.euler, k.orientable, k.kind)).collect();
        let mut a2 = a.clone();
        a2.sort_by_key(|x| format!("{x:?}"));
        b.sort_by_key(|x| format!("{x:?}"));
        prop_assert_eq!(a2, b);
        let faces: Vec<FaceId> = c.face_ids().collect();
        if !faces.is_empty() {
            let first = orient(&c, &faces, 0).is_some();
            for s in 0..faces.len() {
                prop_assert_eq!(orient(&c, &faces, s).is_some(), first);
            }
        }
    }

    #[test]
    fn enumeration_is_complete(seed in any::<u64>(), n in 1usize..6, extra in 0usize..6) {
        let g = random_connected_graph(seed, n, extra);
        prop_assume!(enumeration_size(&g) <= 20_000);
        let all = all_rotation_systems(&g, u128::MAX).unwrap();
        prop_assert_eq!(all.len() as u128, enumeration_size(&g));
        let distinct: BTreeSet<Vec<Vec<_>>> = all.iter().map(|r| r.rotators().to_vec()).collect();
        prop_assert_eq!(distinct.len(), all.len());
        let spherical: Vec<_> = all.into_iter().filter(|r| trace_faces(&g, r).unwrap().genus() == 0).collect();
        prop_assert_eq!(enumerate_sphere_embeddings(&g, u128::MAX).unwrap(), spherical);
    }

    #[test]
    fn adding_a_face_never_makes_a_complex_outerspatial(seed in any::<u64>()) {
        let c = random_complex(seed);
        prop_assume!(c.face_count() > 0 && c.graph().vertex_count() <= 7);
        let fewer: Vec<Face> = c.faces()[..c.face_count() - 1].to_vec();
        let smaller = TwoComplex::new(c.graph().clone(), fewer).unwrap();
        let big = brute_force_outerspatial(&c, u128::MAX).unwrap();
        let small = brute_force_outerspatial(&smaller, u128::MAX).unwrap();
        prop_assert!(big.is_none() || small.is_some());
        if let Some(cert) = big {
            prop_assert!(verify_nested(c.graph(), &face_boundaries(&c), &cert));
        }
    }

    #[test]
    fn fast_path_agrees_with_the_pipeline(seed in any::<u64>(), n in 4usize..10) {
        let mut rng = generate::rng(seed);
        let faces = generate::random_sphere_faces(&mut rng, n);
        let labelled: Vec<(String, Vec<usize>)> =
            faces.into_iter().enumerate().map(|(i, f)| (format!("f{i}"), f)).collect();
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let full = generate::from_faces(&names, &labelled);
        // Also a punctured variant, which is simplicial but not a closed surface.
        let punctured = TwoComplex::new(full.graph().clone(), full.faces()[1..].to_vec()).unwrap();
        for c in [full, punctured] {
            let fast = decide_outerspatial_with(&c, DeciderOptions { triangle_fast_path: true }).unwrap();
            let slow = decide_outerspatial_with(&c, DeciderOptions { triangle_fast_path: false }).unwrap();
            prop_assert_eq!(fast.kind(), slow.kind());
        }
    }
}

