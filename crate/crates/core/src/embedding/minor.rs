//! K4 and K2,3 minors: structural witnesses, an exact branch-set search,
//! and witness extraction by greedy minor reduction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::planarity::cone_is_planar;
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinorTarget {
    K4,
    /// Branch sets 0 and 1 form the side of size two.
    K23,
}

impl MinorTarget {
    pub fn order(self) -> usize {
        match self {
            MinorTarget::K4 => 4,
            MinorTarget::K23 => 5,
        }
    }

    /// Adjacent pairs of branch-set indices.
    pub fn adjacencies(self) -> Vec<(usize, usize)> {
        match self {
            MinorTarget::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            MinorTarget::K23 => vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MinorTarget::K4 => "K4",
            MinorTarget::K23 => "K2,3",
        }
    }
}

/// Disjoint connected branch sets with one edge realising each target adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub target: MinorTarget,
    pub branch_sets: Vec<Vec<VertexId>>,
    /// `(i, j, e)`: edge `e` joins branch sets `i` and `j`.
    pub connections: Vec<(usize, usize, EdgeId)>,
}

impl MinorWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        if self.branch_sets.len() != self.target.order() {
            return false;
        }
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for v in set {
                if v.0 >= g.vertex_count() || owner[v.0] != usize::MAX {
                    return false;
                }
                owner[v.0] = i;
            }
        }
        let adj = g.adjacency();
        for (i, set) in self.branch_sets.iter().enumerate() {
            let mut seen = BTreeSet::from([set[0]]);
            let mut queue = VecDeque::from([set[0]]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x.0] {
                    if owner[y.0] == i && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            if seen.len() != set.len() {
                return false;
            }
        }
        let mut realised = BTreeSet::new();
        for &(i, j, e) in &self.connections {
            if e.0 >= g.edge_count() {
                return false;
            }
            let [a, b] = g.endpoints(e);
            let (oa, ob) = (owner[a.0], owner[b.0]);
            if !((oa == i && ob == j) || (oa == j && ob == i)) {
                return false;
            }
            realised.insert((i.min(j), i.max(j)));
        }
        self.target.adjacencies().into_iter().all(|p| realised.contains(&p))
    }
}

/// Exhaustive search over connected branch sets. Limited to 20 vertices.
pub fn exact_minor_search(g: &Graph, target: MinorTarget) -> Option<MinorWitness> {
    let n = g.vertex_count();
    assert!(n <= 20, "exact minor search is for small graphs");
    let mut nbr = vec![0u32; n];
    for e in g.edges() {
        let [a, b] = g.endpoints(e);
        if a != b {
            nbr[a.0] |= 1 << b.0;
            nbr[b.0] |= 1 << a.0;
        }
    }
    // Connected vertex sets with their open neighbourhoods, ordered by lowest vertex.
    let mut sets: Vec<(u32, u32)> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let start = mask.trailing_zeros() as usize;
        let mut reach = 1u32 << start;
        loop {
            let mut grow = reach;
            let mut r = reach;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                grow |= nbr[v] & mask;
            }
            if grow == reach {
                break;
            }
            reach = grow;
        }
        if reach == mask {
            let mut nb = 0;
            let mut r = mask;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                nb |= nbr[v];
            }
            sets.push((mask, nb & !mask));
        }
    }
    sets.sort_by_key(|&(m, _)| (m.trailing_zeros(), m));
    let adjacent = |x: usize, y: usize| sets[x].1 & sets[y].0 != 0;
    let chosen = match target {
        MinorTarget::K4 => {
            let mut pick = Vec::new();
            search_k4(&sets, &adjacent, 0, 0, &mut pick).then_some(pick)
        }
        MinorTarget::K23 => search_k23(&sets, &adjacent),
    }?;
    let branch_sets: Vec<Vec<VertexId>> = chosen
        .iter()
        .map(|&i| (0..n).filter(|v| sets[i].0 >> v & 1 == 1).map(VertexId).collect())
        .collect();
    Some(witness_from_sets(g, target, branch_sets))
}

fn search_k4(
    sets: &[(u32, u32)],
    adjacent: &dyn Fn(usize, usize) -> bool,
    from: usize,
    used: u32,
    pick: &mut Vec<usize>,
) -> bool {
    if pick.len() == 4 {
        return true;
    }
    for i in from..sets.len() {
        if sets[i].0 & used != 0 || !pick.iter().all(|&p| adjacent(p, i)) {
            continue;
        }
        pick.push(i);
        if search_k4(sets, adjacent, i + 1, used | sets[i].0, pick) {
            return true;
        }
        pick.pop();
    }
    false
}

fn search_k23(sets: &[(u32, u32)], adjacent: &dyn Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            let used = sets[a].0 | sets[b].0;
            if sets[a].0 & sets[b].0 != 0 {
                continue;
            }
            let mut picked = Vec::new();
            let mut mask = used;
            // Greedy is not enough in general, so backtrack over the three.
            if pick_three(sets, adjacent, a, b, 0, &mut mask, &mut picked) {
                let mut out = vec![a, b];
                out.extend(picked);
                return Some(out);
            }
        }
    }
    None
}

fn pick_three(
    sets: &[(u32, u32)],
    adjacent: &dyn Fn(usize, usize) -> bool,
    a: usize,
    b: usize,
    from: usize,
    used: &mut u32,
    picked: &mut Vec<usize>,
) -> bool {
    if picked.len() == 3 {
        return true;
    }
    for i in from..sets.len() {
        if sets[i].0 & *used != 0 || !adjacent(a, i) || !adjacent(b, i) {
            continue;
        }
        picked.push(i);
        *used |= sets[i].0;
        if pick_three(sets, adjacent, a, b, i + 1, used, picked) {
            return true;
        }
        *used &= !sets[i].0;
        picked.pop();
    }
    false
}

fn witness_from_sets(g: &Graph, target: MinorTarget, branch_sets: Vec<Vec<VertexId>>) -> MinorWitness {
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, s) in branch_sets.iter().enumerate() {
        for v in s {
            owner[v.0] = i;
        }
    }
    let connections = target
        .adjacencies()
        .into_iter()
        .map(|(i, j)| {
            let e = g
                .edges()
                .find(|&e| {
                    let [a, b] = g.endpoints(e);
                    (owner[a.0] == i && owner[b.0] == j) || (owner[a.0] == j && owner[b.0] == i)
                })
                .expect("branch sets are adjacent");
            (i, j, e)
        })
        .collect();
    MinorWitness { target, branch_sets, connections }
}

/// A minor of the input tracked as branch sets plus one representative edge
/// per adjacent pair.
#[derive(Clone)]
struct Reduced {
    sets: Vec<Vec<VertexId>>,
    edges: BTreeMap<(usize, usize), EdgeId>,
}

impl Reduced {
    fn graph(&self) -> Graph {
        let mut g = Graph::new();
        for i in 0..self.sets.len() {
            g.add_vertex(i.to_string());
        }
        for &(a, b) in self.edges.keys() {
            g.add_edge("", VertexId(a), VertexId(b));
        }
        g
    }

    fn contract(&self, a: usize, b: usize) -> Reduced {
        let mut sets = self.sets.clone();
        let moved = std::mem::take(&mut sets[b]);
        sets[a].extend(moved);
        sets[a].sort();
        let remap = |x: usize| {
            let x = if x == b { a } else { x };
            if x > b {
                x - 1
            } else {
                x
            }
        };
        sets.remove(b);
        let mut edges = BTreeMap::new();
        for (&(x, y), &e) in &self.edges {
            let (x, y) = (remap(x), remap(y));
            if x != y {
                edges.entry((x.min(y), x.max(y))).or_insert(e);
            }
        }
        Reduced { sets, edges }
    }
}

/// A K4 or K2,3 minor of a non-outerplanar graph, found by deleting and
/// contracting edges while the cone stays non-planar.
pub fn outerplanarity_witness(g: &Graph) -> Option<MinorWitness> {
    let mut cur = Reduced { sets: g.vertices().map(|v| vec![v]).collect(), edges: BTreeMap::new() };
    for e in g.edges() {
        let [a, b] = g.endpoints(e);
        if a != b {
            cur.edges.entry((a.0.min(b.0), a.0.max(b.0))).or_insert(e);
        }
    }
    let bad = |r: &Reduced| !cone_is_planar(&r.graph());
    if !bad(&cur) {
        return None;
    }
    loop {
        let mut changed = false;
        let keys: Vec<(usize, usize)> = cur.edges.keys().copied().collect();
        for k in keys {
            let mut trial = cur.clone();
            trial.edges.remove(&k);
            if bad(&trial) {
                cur = trial;
                changed = true;
            }
        }
        let mut i = 0;
        while i < cur.edges.len() {
            let (&(a, b), _) = cur.edges.iter().nth(i).expect("index in range");
            let trial = cur.contract(a, b);
            if bad(&trial) {
                cur = trial;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    // Drop isolated branch sets; what remains is K4 or K2,3.
    let mut degree = vec![0usize; cur.sets.len()];
    for &(a, b) in cur.edges.keys() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let live: Vec<usize> = (0..cur.sets.len()).filter(|&i| degree[i] > 0).collect();
    let target = match (live.len(), cur.edges.len()) {
        (4, 6) => MinorTarget::K4,
        (5, 6) => MinorTarget::K23,
        other => unreachable!("minor-minimal non-outerplanar graph with shape {other:?}"),
    };
    let order: Vec<usize> = match target {
        MinorTarget::K4 => live.clone(),
        MinorTarget::K23 => {
            let mut big: Vec<usize> = live.iter().copied().filter(|&i| degree[i] == 3).collect();
            big.extend(live.iter().copied().filter(|&i| degree[i] == 2));
            big
        }
    };
    let pos: BTreeMap<usize, usize> = order.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let branch_sets = order.iter().map(|&i| cur.sets[i].clone()).collect();
    let connections = cur
        .edges
        .iter()
        .map(|(&(a, b), &e)| {
            let (x, y) = (pos[&a], pos[&b]);
            (x.min(y), x.max(y), e)
        })
        .collect();
    Some(MinorWitness { target, branch_sets, connections })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_search_on_targets() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let w = exact_minor_search(&k4, MinorTarget::K4).unwrap();
        assert!(w.verify(&k4));
        assert!(exact_minor_search(&k4, MinorTarget::K23).is_none());
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(exact_minor_search(&k23, MinorTarget::K4).is_none());
        assert!(exact_minor_search(&k23, MinorTarget::K23).unwrap().verify(&k23));
    }

    #[test]
    fn subdivided_k4_witness() {
        // K4 with every edge subdivided once.
        let mut edges = Vec::new();
        let mut next = 4;
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            edges.push((a, next));
            edges.push((next, b));
            next += 1;
        }
        let g = Graph::from_edges(next, &edges);
        let w = outerplanarity_witness(&g).unwrap();
        assert!(w.verify(&g));
        assert!(exact_minor_search(&g, MinorTarget::K4).unwrap().verify(&g));
    }

    #[test]
    fn tampered_witness_fails() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut w = outerplanarity_witness(&k4).unwrap();
        assert!(w.verify(&k4));
        w.connections.pop();
        assert!(!w.verify(&k4));
        let mut w2 = outerplanarity_witness(&k4).unwrap();
        let shared = w2.branch_sets[0][0];
        w2.branch_sets[1].push(shared);
        assert!(!w2.verify(&k4));
    }

    #[test]
    fn outerplanar_has_no_witness() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]);
        assert!(outerplanarity_witness(&g).is_none());
    }
}
