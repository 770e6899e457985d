use crate::graph::{EdgeId, Graph, VertexId};

struct BlockSearch<'a> {
    adj: &'a [Vec<(VertexId, EdgeId)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<EdgeId>,
    blocks: Vec<Vec<EdgeId>>,
    cut: Vec<bool>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<EdgeId>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for i in 0..self.adj[u].len() {
            let (w, e) = self.adj[u][i];
            let w = w.0;
            if Some(e) == parent_edge || w == u {
                continue;
            }
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push(e);
                self.visit(w, Some(e));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent_edge.is_some() || children > 1 {
                        self.cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(x) = self.stack.pop() {
                        block.push(x);
                        if x == e {
                            break;
                        }
                    }
                    block.sort();
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(e);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent_edge.is_none() && children > 1 {
            self.cut[u] = true;
        }
    }
}

fn search(g: &Graph) -> (Vec<Vec<EdgeId>>, Vec<bool>) {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut s = BlockSearch {
        adj: &adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; n],
    };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            s.visit(v, None);
        }
    }
    let mut blocks = s.blocks;
    blocks.sort();
    (blocks, s.cut)
}

/// Biconnected components as sorted edge lists, loops excluded.
pub fn blocks(g: &Graph) -> Vec<Vec<EdgeId>> {
    search(g).0
}

pub fn articulation_points(g: &Graph) -> Vec<VertexId> {
    search(g).1.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| VertexId(i)).collect()
}

/// Connected, at least three vertices, loopless, and without a cutvertex.
pub fn is_2_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && !g.has_loops() && g.is_connected() && articulation_points(g).is_empty()
}
