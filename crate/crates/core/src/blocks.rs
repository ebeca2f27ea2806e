//! Block / cut-vertex decomposition of multigraphs.

use crate::graph::{EdgeId, Multigraph, Vertex};

/// A block together with the parent ids of its vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Multigraph,
    /// `vertices[local]` is the parent vertex id.
    pub vertices: Vec<Vertex>,
    /// Parent edge ids, in the order of `graph.edges()`.
    pub edges: Vec<EdgeId>,
}

impl Block {
    /// Nontrivial blocks are neither K1 nor K2.
    pub fn is_nontrivial(&self) -> bool {
        !(self.graph.edge_count() == 0 || (self.graph.vertex_count() == 2 && self.graph.edge_count() == 1))
    }

    pub fn is_bridge(&self) -> bool {
        self.graph.vertex_count() == 2 && self.graph.edge_count() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: Vec<Vertex>,
    pub blocks: Vec<Block>,
}

/// Biconnected components by Tarjan's edge-stack method, keyed on edge ids
/// so parallel edges are handled. Each loop forms a block on its own vertex,
/// and every isolated vertex forms a K1 block.
pub fn block_decomposition(g: &Multigraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut state = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        groups: Vec::new(),
        articulation: vec![false; n],
    };
    for root in g.vertices() {
        if state.disc[root] == usize::MAX {
            let children = state.visit(root, usize::MAX);
            // the root is a cut-vertex iff it has two DFS children
            state.articulation[root] = children >= 2;
        }
    }
    let cut_vertices: Vec<Vertex> = g.vertices().filter(|&v| state.articulation[v]).collect();
    let mut groups = state.groups;
    for v in g.vertices() {
        let loops: Vec<EdgeId> = g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .collect();
        if !loops.is_empty() {
            let mut loops = loops;
            loops.sort_unstable();
            loops.dedup();
            groups.push(loops);
        } else if g.degree(v) == 0 {
            groups.push(Vec::new());
        }
    }

    let mut blocks = Vec::with_capacity(groups.len());
    let mut isolated = g.vertices().filter(|&v| g.degree(v) == 0);
    for mut edge_ids in groups {
        edge_ids.sort_unstable();
        let mut vertices: Vec<Vertex> = if edge_ids.is_empty() {
            vec![isolated.next().expect("one K1 group per isolated vertex")]
        } else {
            edge_ids
                .iter()
                .flat_map(|&e| [g.edges()[e].0, g.edges()[e].1])
                .collect()
        };
        vertices.sort_unstable();
        vertices.dedup();
        let local = |x: Vertex| vertices.binary_search(&x).unwrap();
        let graph = Multigraph::new(
            vertices.len(),
            edge_ids.iter().map(|&e| (local(g.edges()[e].0), local(g.edges()[e].1))),
        )
        .expect("blocks inherit subcubicity");
        blocks.push(Block {
            graph,
            vertices: vertices.clone(),
            edges: edge_ids,
        });
    }
    blocks.sort_by(|a, b| (a.vertices[0], &a.edges).cmp(&(b.vertices[0], &b.edges)));

    BlockDecomposition { cut_vertices, blocks }
}

struct Tarjan<'a> {
    g: &'a Multigraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<EdgeId>,
    groups: Vec<Vec<EdgeId>>,
    articulation: Vec<bool>,
}

impl Tarjan<'_> {
    /// Returns the number of DFS tree children of `u`.
    fn visit(&mut self, u: Vertex, parent_edge: EdgeId) -> usize {
        let mut children = 0;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &(w, e) in self.g.incident(u) {
            if w == u || e == parent_edge {
                continue;
            }
            if self.disc[w] == usize::MAX {
                self.stack.push(e);
                children += 1;
                self.visit(w, e);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent_edge != usize::MAX {
                        self.articulation[u] = true;
                    }
                    let mut group = Vec::new();
                    while let Some(f) = self.stack.pop() {
                        group.push(f);
                        if f == e {
                            break;
                        }
                    }
                    self.groups.push(group);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(e);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        children
    }
}

/// Vertices whose deletion increases the number of components.
pub fn cut_vertices(g: &Multigraph) -> Vec<Vertex> {
    block_decomposition(g).cut_vertices
}

/// Edges whose deletion increases the number of components.
pub fn bridges(g: &Multigraph) -> Vec<EdgeId> {
    let mut out: Vec<EdgeId> = block_decomposition(g)
        .blocks
        .iter()
        .filter(|b| b.is_bridge())
        .map(|b| b.edges[0])
        .collect();
    out.sort_unstable();
    out
}

/// Connected, at least three vertices, and no cut-vertex.
pub fn is_2connected(g: &Multigraph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

/// The multigraph notion used by the `F^g` families: loopless, connected,
/// no cut-vertex, and not a single vertex or single edge (so a pair of
/// vertices joined by parallel edges qualifies).
pub fn is_nonseparable(g: &Multigraph) -> bool {
    g.vertex_count() >= 2 && g.edge_count() >= 2 && !g.has_loop() && g.is_connected() && cut_vertices(g).is_empty()
}

/// A graph with exactly one block: K1, a vertex with loops, K2, or a
/// loopless connected graph without cut-vertices.
pub fn is_block(g: &Multigraph) -> bool {
    g.vertex_count() >= 1 && g.is_connected() && block_decomposition(g).blocks.len() == 1
}

/// Components of `G` minus all of its bridges, as sorted vertex lists.
pub fn bridgeless_pieces(g: &Multigraph) -> Vec<Vec<Vertex>> {
    let without = g.delete_edges(&bridges(g)).expect("bridge ids are valid");
    without.components()
}
