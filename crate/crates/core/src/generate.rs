//! Named complexes and seeded random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{FaceSpec, TwoComplex};
use crate::graph::{Graph, VertexId};

/// Builds a complex from vertex labels and faces given as label cycles.
/// Edges are created on demand in order of first appearance, labelled `u-v`.
pub fn from_faces(vertices: &[String], faces: &[(String, Vec<usize>)]) -> TwoComplex {
    let mut g = Graph::new();
    for v in vertices {
        g.add_vertex(v.clone());
    }
    for (_, cyc) in faces {
        for i in 0..cyc.len() {
            let (u, v) = (VertexId(cyc[i]), VertexId(cyc[(i + 1) % cyc.len()]));
            if g.edge_between(u, v).is_none() {
                let label = format!("{}-{}", vertices[u.0], vertices[v.0]);
                g.add_edge(label, u, v);
            }
        }
    }
    let specs: Vec<FaceSpec> = faces
        .iter()
        .map(|(l, c)| FaceSpec::new(l.clone(), c.iter().copied().map(VertexId).collect()))
        .collect();
    TwoComplex::from_specs(g, &specs).expect("generated faces are walks")
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn tetrahedron() -> TwoComplex {
    let faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let faces: Vec<_> = faces.iter().enumerate().map(|(i, f)| (format!("f{i}"), f.to_vec())).collect();
    from_faces(&numbered(4), &faces)
}

fn bipyramid_parts(n: usize) -> (Vec<String>, Vec<(String, Vec<usize>)>) {
    assert!(n >= 3, "bipyramid needs at least three equator vertices");
    let mut labels = vec!["n".to_string(), "s".to_string()];
    labels.extend((0..n).map(|i| format!("a{i}")));
    let a = |i: usize| 2 + i % n;
    let mut faces = Vec::new();
    for i in 0..n {
        faces.push((format!("n{i}"), vec![0, a(i), a(i + 1)]));
    }
    for i in 0..n {
        faces.push((format!("s{i}"), vec![1, a(i), a(i + 1)]));
    }
    (labels, faces)
}

/// Suspension of an `n`-cycle: poles `n`, `s` and equator `a0..`.
pub fn bipyramid(n: usize) -> TwoComplex {
    let (labels, faces) = bipyramid_parts(n);
    from_faces(&labels, &faces)
}

/// The bipyramid with its equator added as a face.
pub fn bipyramid_with_equator(n: usize) -> TwoComplex {
    let (labels, mut faces) = bipyramid_parts(n);
    faces.push(("equator".to_string(), (2..2 + n).collect()));
    from_faces(&labels, &faces)
}

/// The seven-vertex triangulation of the torus.
pub fn torus7() -> TwoComplex {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push((format!("u{i}"), vec![i, (i + 1) % 7, (i + 3) % 7]));
        faces.push((format!("l{i}"), vec![i, (i + 2) % 7, (i + 3) % 7]));
    }
    from_faces(&numbered(7), &faces)
}

/// The six-vertex triangulation of the projective plane.
pub fn rp2_6() -> TwoComplex {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    let faces: Vec<_> = faces.iter().enumerate().map(|(i, f)| (format!("f{i}"), f.to_vec())).collect();
    from_faces(&numbered(6), &faces)
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// The 2-dimensional cone over the faceless complex on `g`.
pub fn cone_over_graph(g: &Graph) -> TwoComplex {
    TwoComplex::new(g.clone(), Vec::new())
        .and_then(|c| c.cone())
        .expect("cone over a loopless graph")
}

/// All 3-cycles of a graph as face specifications.
pub fn triangles(g: &Graph) -> Vec<FaceSpec> {
    let adj = g.adjacency();
    let mut out = BTreeSet::new();
    for u in g.vertices() {
        for &(v, _) in &adj[u.0] {
            for &(w, _) in &adj[v.0] {
                if u < v && v < w && g.edge_between(w, u).is_some() {
                    out.insert([u, v, w]);
                }
            }
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, t)| FaceSpec::new(format!("t{i}"), t.to_vec()))
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random simplicial 2-sphere on `n >= 4` vertices, grown from the
/// tetrahedron by stellar subdivision of random triangles.
pub fn random_sphere_faces(rng: &mut impl Rng, n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 4);
    let mut faces: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let t = faces.swap_remove(i);
        faces.push(vec![t[0], t[1], v]);
        faces.push(vec![t[1], t[2], v]);
        faces.push(vec![t[2], t[0], v]);
    }
    faces
}

/// Merges faces of a sphere across random edges while every vertex keeps
/// degree at least three and faces stay genuine cycles.
pub fn merge_faces(rng: &mut impl Rng, faces: &mut Vec<Vec<usize>>, n: usize, merges: usize) {
    for _ in 0..merges {
        let mut candidates = Vec::new();
        let mut degree = vec![BTreeSet::new(); n];
        for f in faces.iter() {
            for i in 0..f.len() {
                let (u, v) = (f[i], f[(i + 1) % f.len()]);
                degree[u].insert(v);
                degree[v].insert(u);
            }
        }
        for (a, fa) in faces.iter().enumerate() {
            for (b, fb) in faces.iter().enumerate().skip(a + 1) {
                for i in 0..fa.len() {
                    let (u, v) = (fa[i], fa[(i + 1) % fa.len()]);
                    if degree[u].len() <= 3 || degree[v].len() <= 3 {
                        continue;
                    }
                    let shared: BTreeSet<usize> = fa.iter().filter(|x| fb.contains(x)).copied().collect();
                    if shared.len() == 2 && shared.contains(&u) && shared.contains(&v) {
                        candidates.push((a, b, u, v));
                    }
                }
            }
        }
        let Some(&(a, b, u, v)) = candidates.choose(rng) else { return };
        let merged = splice(&faces[a], &faces[b], u, v);
        faces.remove(b);
        faces.remove(a);
        faces.push(merged);
    }
}

/// Joins two cycles sharing exactly the edge `uv` into one cycle without it.
fn splice(fa: &[usize], fb: &[usize], u: usize, v: usize) -> Vec<usize> {
    // Rotate fa so that it reads v .. u, i.e. the edge u->v closes it.
    let walk_from = |f: &[usize], start: usize| -> Vec<usize> {
        let p = f.iter().position(|&x| x == start).unwrap();
        (0..f.len()).map(|i| f[(p + i) % f.len()]).collect()
    };
    let mut a = walk_from(fa, v);
    if a[a.len() - 1] != u {
        a = walk_from(&fa.iter().rev().copied().collect::<Vec<_>>(), v);
    }
    let mut b = walk_from(fb, u);
    if b[b.len() - 1] != v {
        b = walk_from(&fb.iter().rev().copied().collect::<Vec<_>>(), u);
    }
    // a = v ... u, b = u ... v; concatenating without repeated ends.
    let mut out = a;
    out.extend_from_slice(&b[1..b.len() - 1]);
    out
}

/// A random cycle of `g` found by a self-avoiding walk, if one closes.
pub fn random_cycle(rng: &mut impl Rng, g: &Graph, max_len: usize) -> Option<Vec<usize>> {
    let adj = g.adjacency();
    for _ in 0..32 {
        let start = rng.gen_range(0..g.vertex_count());
        let mut walk = vec![start];
        loop {
            let cur = *walk.last().unwrap();
            let closes = walk.len() >= 3 && adj[cur].iter().any(|&(w, _)| w.0 == start);
            if closes && (walk.len() >= max_len || rng.gen_bool(0.5)) {
                return Some(walk);
            }
            if walk.len() >= max_len {
                break;
            }
            let next: Vec<usize> = adj[cur].iter().map(|&(w, _)| w.0).filter(|w| !walk.contains(w)).collect();
            match next.choose(rng) {
                Some(&w) => walk.push(w),
                None if closes => return Some(walk),
                None => break,
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomBase {
    Sphere,
    Torus,
    ProjectivePlane,
    /// Random cycles of a random dense graph, no surface underneath.
    Cycles,
}

#[derive(Clone, Debug)]
pub struct RandomParams {
    pub base: RandomBase,
    pub vertices: usize,
    pub merges: usize,
    pub extra_faces: usize,
    pub max_cycle_len: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { base: RandomBase::Sphere, vertices: 6, merges: 1, extra_faces: 1, max_cycle_len: 5 }
    }
}

/// A seeded random simple complex. Faces never repeat.
pub fn random_complex(rng: &mut impl Rng, p: &RandomParams) -> TwoComplex {
    let (n, mut faces) = match p.base {
        RandomBase::Sphere => {
            let n = p.vertices.max(4);
            let mut faces = random_sphere_faces(rng, n);
            merge_faces(rng, &mut faces, n, p.merges);
            (n, faces)
        }
        RandomBase::Torus => (7, face_cycles(&torus7())),
        RandomBase::ProjectivePlane => (6, face_cycles(&rp2_6())),
        RandomBase::Cycles => (p.vertices.max(3), Vec::new()),
    };
    let mut g = complete_graph(n);
    if p.base != RandomBase::Cycles {
        // Extra faces live on the skeleton plus a few random chords.
        let skeleton = from_faces(&numbered(n), &label_faces(&faces)).skeleton();
        let mut edges: Vec<(usize, usize)> =
            skeleton.edges().map(|e| skeleton.endpoints(e)).map(|[a, b]| (a.0, b.0)).collect();
        for _ in 0..p.extra_faces {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && skeleton.edge_between(VertexId(a), VertexId(b)).is_none() {
                edges.push((a, b));
            }
        }
        g = Graph::from_edges(n, &edges);
    } else {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .map(|e| g.endpoints(e))
            .map(|[a, b]| (a.0, b.0))
            .filter(|_| rng.gen_bool(0.7))
            .collect();
        g = Graph::from_edges(n, &edges);
    }
    let target = faces.len() + p.extra_faces;
    let mut seen: BTreeSet<Vec<usize>> = faces.iter().map(|f| cycle_key(f)).collect();
    for _ in 0..8 * p.extra_faces.max(1) {
        if faces.len() >= target {
            break;
        }
        if let Some(c) = random_cycle(rng, &g, p.max_cycle_len.max(3)) {
            if seen.insert(cycle_key(&c)) {
                faces.push(c);
            }
        }
    }
    from_faces(&numbered(n), &label_faces(&faces))
}

fn face_cycles(c: &TwoComplex) -> Vec<Vec<usize>> {
    c.face_ids().map(|f| c.face_vertices(f).into_iter().map(|v| v.0).collect()).collect()
}

fn label_faces(faces: &[Vec<usize>]) -> Vec<(String, Vec<usize>)> {
    faces.iter().enumerate().map(|(i, f)| (format!("f{i}"), f.clone())).collect()
}

/// Rotation- and reflection-invariant key of a vertex cycle.
pub fn cycle_key(c: &[usize]) -> Vec<usize> {
    let k = c.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..k {
        for dir in [1, k - 1] {
            let w: Vec<usize> = (0..k).map(|i| c[(s + i * dir) % k]).collect();
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
    }
    best.unwrap_or_default()
}

/// A random connected planar graph on `n >= 4` vertices: a random sphere
/// triangulation with some edges removed.
pub fn random_planar_graph(rng: &mut impl Rng, n: usize, keep: f64) -> Graph {
    let faces = random_sphere_faces(rng, n);
    let skeleton = from_faces(&numbered(n), &label_faces(&faces)).skeleton();
    let mut edges: Vec<(usize, usize)> =
        skeleton.edges().map(|e| skeleton.endpoints(e)).map(|[a, b]| (a.0, b.0)).collect();
    edges.shuffle(rng);
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for e in edges {
        if rng.gen_bool(keep) {
            kept.push(e);
        } else {
            dropped.push(e);
        }
    }
    // Put dropped edges back while the graph is disconnected.
    let mut g = Graph::from_edges(n, &kept);
    while !g.is_connected() {
        let e = dropped.pop().expect("the full triangulation is connected");
        kept.push(e);
        g = Graph::from_edges(n, &kept);
    }
    g
}

/// Every set of at most `max_faces` cycles of `K_n`, up to relabelling of
/// the vertices. The skeleton of each complex is the union of its faces.
///
/// Orderly generation: a set is kept when no relabelling maps it to a
/// smaller set (comparing by the least element of the symmetric
/// difference), and only kept sets are extended, by cycles beyond their
/// largest member.
pub fn small_complexes(n: usize, max_faces: usize) -> Vec<TwoComplex> {
    assert!(n <= 5, "exhaustive enumeration is for tiny vertex counts");
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    enumerate_cycles(n, &mut Vec::new(), &mut |c| {
        let key = cycle_key(c);
        if let std::collections::btree_map::Entry::Vacant(slot) = index.entry(key) {
            slot.insert(cycles.len());
            cycles.push(c.to_vec());
        }
    });
    assert!(cycles.len() <= 64);
    let perm_cycle: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| cycles.iter().map(|c| index[&cycle_key(&c.iter().map(|&v| p[v]).collect::<Vec<_>>())]).collect())
        .collect();
    let is_canonical = |set: u64| {
        perm_cycle.iter().all(|pc| {
            let mut image = 0u64;
            let mut r = set;
            while r != 0 {
                let c = r.trailing_zeros() as usize;
                r &= r - 1;
                image |= 1 << pc[c];
            }
            let diff = image ^ set;
            diff == 0 || set & (diff & diff.wrapping_neg()) != 0
        })
    };
    let mut kept: Vec<u64> = Vec::new();
    let mut stack: Vec<(u64, usize, usize)> = vec![(0, 0, 0)];
    while let Some((set, next, size)) = stack.pop() {
        kept.push(set);
        if size == max_faces {
            continue;
        }
        for c in (next..cycles.len()).rev() {
            let child = set | 1 << c;
            if is_canonical(child) {
                stack.push((child, c + 1, size + 1));
            }
        }
    }
    kept.sort_by_key(|&s| (s.count_ones(), s.reverse_bits()));
    kept.into_iter()
        .map(|set| {
            let members: Vec<usize> = (0..cycles.len()).filter(|&c| set >> c & 1 == 1).collect();
            let used: BTreeSet<usize> = members.iter().flat_map(|&c| cycles[c].iter().copied()).collect();
            let used: Vec<usize> = used.into_iter().collect();
            let relabel = |v: usize| used.iter().position(|&u| u == v).unwrap();
            let faces: Vec<(String, Vec<usize>)> = members
                .iter()
                .enumerate()
                .map(|(i, &c)| (format!("f{i}"), cycles[c].iter().map(|&v| relabel(v)).collect()))
                .collect();
            let labels: Vec<String> = used.iter().map(|v| v.to_string()).collect();
            from_faces(&labels, &faces)
        })
        .collect()
}

fn pair_bit(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

/// Least relabelled adjacency mask over orderings that list vertices by
/// non-decreasing degree. Isomorphic graphs get the same mask.
fn canonical_mask(n: usize, mask: u64) -> u64 {
    let adj = |i: usize, j: usize| i != j && mask >> pair_bit(i, j) & 1 == 1;
    let deg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| adj(v, w)).count()).collect();
    let mut sorted = deg.clone();
    sorted.sort_unstable();
    fn go(
        n: usize,
        adj: &dyn Fn(usize, usize) -> bool,
        deg: &[usize],
        sorted: &[usize],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let i = order.len();
        if i == n {
            let mut m = 0u64;
            for b in 1..n {
                for a in 0..b {
                    if adj(order[a], order[b]) {
                        m |= 1 << pair_bit(a, b);
                    }
                }
            }
            *best = (*best).min(m);
            return;
        }
        for v in 0..n {
            if !used[v] && deg[v] == sorted[i] {
                used[v] = true;
                order.push(v);
                go(n, adj, deg, sorted, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut best = u64::MAX;
    go(n, &adj, &deg, &sorted, &mut Vec::new(), &mut vec![false; n], &mut best);
    best
}

/// One graph per isomorphism class on `n <= 8` vertices, built by adding a
/// vertex with every neighbourhood to each class on `n - 1` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "class enumeration is for small vertex counts");
    let mut classes: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &m in &classes {
            for nb in 0u64..1 << k {
                let mut child = m;
                for v in 0..k {
                    if nb >> v & 1 == 1 {
                        child |= 1 << pair_bit(v, k);
                    }
                }
                next.insert(canonical_mask(k + 1, child));
            }
        }
        classes = next.into_iter().collect();
    }
    if n == 0 {
        return vec![Graph::new()];
    }
    classes
        .into_iter()
        .map(|m| {
            let mut edges = Vec::new();
            for b in 1..n {
                for a in 0..b {
                    if m >> pair_bit(a, b) & 1 == 1 {
                        edges.push((a, b));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        })
        .collect()
}

fn enumerate_cycles(n: usize, walk: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if walk.is_empty() {
        for s in 0..n {
            walk.push(s);
            enumerate_cycles(n, walk, visit);
            walk.pop();
        }
        return;
    }
    if walk.len() >= 3 {
        visit(walk);
    }
    for v in walk[0] + 1..n {
        if !walk.contains(&v) {
            walk.push(v);
            enumerate_cycles(n, walk, visit);
            walk.pop();
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_class_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn named_counts() {
        let t = torus7();
        assert_eq!((t.graph().vertex_count(), t.graph().edge_count(), t.face_count()), (7, 21, 14));
        assert!(t.validate().is_empty());
        let r = rp2_6();
        assert_eq!((r.graph().vertex_count(), r.graph().edge_count(), r.face_count()), (6, 15, 10));
        assert!(r.edge_face_counts().iter().all(|&c| c == 2));
        let c = cone_over_graph(&complete_graph(4));
        assert_eq!((c.graph().vertex_count(), c.graph().edge_count(), c.face_count()), (5, 10, 6));
        let b = bipyramid(4);
        assert_eq!((b.graph().vertex_count(), b.graph().edge_count(), b.face_count()), (6, 12, 8));
    }

    #[test]
    fn random_sphere_is_closed() {
        let mut r = rng(7);
        for n in 4..10 {
            let mut faces = random_sphere_faces(&mut r, n);
            merge_faces(&mut r, &mut faces, n, 2);
            let c = from_faces(&numbered(n), &label_faces(&faces));
            assert!(c.validate().is_empty());
            assert!(c.edge_face_counts().iter().all(|&k| k == 2));
            let chi = n as isize - c.graph().edge_count() as isize + c.face_count() as isize;
            assert_eq!(chi, 2);
        }
    }

    #[test]
    fn random_complexes_are_simple_and_reproducible() {
        for base in [RandomBase::Sphere, RandomBase::Torus, RandomBase::ProjectivePlane, RandomBase::Cycles] {
            let p = RandomParams { base, extra_faces: 2, ..RandomParams::default() };
            let a = random_complex(&mut rng(3), &p);
            let b = random_complex(&mut rng(3), &p);
            assert_eq!(a, b);
            assert!(a.validate().is_empty(), "{base:?}");
        }
    }

    #[test]
    fn planar_graphs_are_connected() {
        let mut r = rng(1);
        for _ in 0..20 {
            let g = random_planar_graph(&mut r, 8, 0.6);
            assert!(g.is_connected());
            assert!(g.edge_count() <= 3 * 8 - 6);
        }
    }

    #[test]
    fn cycle_counts_of_k4() {
        let mut count = 0;
        let mut seen = BTreeSet::new();
        enumerate_cycles(4, &mut Vec::new(), &mut |c| {
            if seen.insert(cycle_key(c)) {
                count += 1;
            }
        });
        // Four triangles and three 4-cycles.
        assert_eq!(count, 7);
    }

    #[test]
    fn small_complexes_up_to_isomorphism() {
        // On K3 there is one cycle: the empty set and the triangle.
        assert_eq!(small_complexes(3, 2).len(), 2);
        let k4 = small_complexes(4, 7);
        assert!(k4.iter().any(|c| c.face_count() == 4 && c.edge_face_counts().iter().all(|&k| k == 2)));
    }
}
