//! Subcubic multigraphs stored as edge lists with dense vertex and edge ids.
//!
//! Loops and parallel edges are allowed. A loop contributes two to the degree
//! of its vertex. Every value is immutable once built; rewriting operations
//! return a fresh graph.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

/// Largest degree allowed anywhere in a [`Multigraph`].
pub const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} would have degree greater than three")]
    DegreeExceeded(Vertex),
    #[error("endpoint {endpoint} out of range for a graph on {n} vertices")]
    BadEndpoint { endpoint: Vertex, n: usize },
    #[error("edge {0} does not exist")]
    BadEdge(EdgeId),
    #[error("vertex {0} does not have degree two")]
    NotDegreeTwo(Vertex),
    #[error("vertex {0} carries a loop")]
    LoopAtVertex(Vertex),
    #[error("cannot suppress the only vertex of a graph")]
    TooFewVertices,
}

/// An undirected multigraph with maximum degree three.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// (neighbor, edge id) per vertex; a loop is listed twice.
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph({}, {:?})", self.n, self.edges)
    }
}

impl Multigraph {
    /// Builds a graph on `n` vertices, validating endpoints and degrees.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (id, (u, v)) in edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::BadEndpoint { endpoint: x, n });
                }
            }
            let (u, v) = if u <= v { (u, v) } else { (v, u) };
            adj[u].push((v, id));
            adj[v].push((u, id));
            if adj[u].len() > MAX_DEGREE {
                return Err(GraphError::DegreeExceeded(u));
            }
            if adj[v].len() > MAX_DEGREE {
                return Err(GraphError::DegreeExceeded(v));
            }
            list.push((u, v));
        }
        Ok(Multigraph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(Vertex, Vertex), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::BadEdge(e))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Number of edge endpoints at `v`; a loop counts twice.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Incident (neighbor, edge id) pairs. Loops appear twice.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    /// Distinct neighbors of `v` other than `v` itself, sorted.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.adj[v].iter().map(|&(w, _)| w).filter(|&w| w != v).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let count = self.adj[u].iter().filter(|&&(w, _)| w == v).count();
        if u == v {
            count / 2
        } else {
            count
        }
    }

    pub fn loop_count(&self, v: Vertex) -> usize {
        self.multiplicity(v, v)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// True when the graph has neither loops nor parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        let mut seen = self.edges.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    pub fn degree_count(&self, d: usize) -> usize {
        self.vertices().filter(|&v| self.degree(v) == d).count()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &(w, _) in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True when the graph has no cycle (loops and parallel pairs are cycles).
    pub fn is_forest(&self) -> bool {
        self.is_acyclic_without(&[])
    }

    /// True when deleting `removed` leaves an acyclic graph.
    pub fn is_acyclic_without(&self, removed: &[Vertex]) -> bool {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                gone[v] = true;
            }
        }
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            if gone[u] || gone[v] {
                continue;
            }
            if !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    /// Adds edges, returning a new graph.
    pub fn with_edges(&self, extra: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Multigraph::new(self.n, self.edges.iter().copied().chain(extra.iter().copied()))
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        self.edge(e)?;
        self.delete_edges(&[e])
    }

    pub fn delete_edges(&self, removed: &[EdgeId]) -> Result<Self, GraphError> {
        for &e in removed {
            self.edge(e)?;
        }
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !removed.contains(id))
            .map(|(_, &e)| e);
        Ok(Multigraph::new(self.n, kept).expect("deleting edges keeps invariants"))
    }

    /// Deletes a set of vertices and relabels the rest in increasing order.
    pub fn delete_vertices(&self, removed: &[Vertex]) -> Self {
        let keep: Vec<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    pub fn delete_vertex(&self, v: Vertex) -> Self {
        self.delete_vertices(&[v])
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Self {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]));
        Multigraph::new(keep.len(), edges).expect("induced subgraphs keep invariants")
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Multigraph::new(self.n, edges).expect("relabeling keeps invariants")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Self {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Multigraph::new(self.n + other.n, edges).expect("disjoint union keeps invariants")
    }

    /// Replaces edge `e = uv` by a path `u w v` through a new last vertex `w`.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        let (u, v) = self.edge(e)?;
        let w = self.n;
        let mut edges = self.edges.clone();
        edges[e] = (u, w);
        edges.push((w, v));
        Multigraph::new(self.n + 1, edges)
    }

    /// Inverse of subdivision at a degree-two vertex without a loop.
    ///
    /// The vertex is removed (higher ids shift down by one) and its two edges
    /// are replaced by a single edge between its neighbors, which becomes a
    /// loop when both edges lead to the same neighbor.
    pub fn suppress_vertex(&self, v: Vertex) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::BadEndpoint { endpoint: v, n: self.n });
        }
        if self.degree(v) != 2 {
            return Err(GraphError::NotDegreeTwo(v));
        }
        if self.loop_count(v) > 0 {
            return Err(GraphError::LoopAtVertex(v));
        }
        if self.n < 2 {
            return Err(GraphError::TooFewVertices);
        }
        let [(a, _), (b, _)] = [self.adj[v][0], self.adj[v][1]];
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        let mut edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter(|&&(x, y)| x != v && y != v)
            .map(|&(x, y)| (shift(x), shift(y)))
            .collect();
        edges.push((shift(a), shift(b)));
        Multigraph::new(self.n - 1, edges)
    }

    /// `G ∘ (e1, e2, a)`: subdivide `e1` and `e2` (the same edge twice when
    /// they coincide) and join a new vertex to `a` and both subdivision
    /// vertices. `a` must have degree two.
    ///
    /// The subdivision vertices get ids `n` and `n + 1`; the new hub is `n + 2`.
    pub fn circ_op(&self, e1: EdgeId, e2: EdgeId, a: Vertex) -> Result<Self, GraphError> {
        self.edge(e1)?;
        self.edge(e2)?;
        if a >= self.n {
            return Err(GraphError::BadEndpoint { endpoint: a, n: self.n });
        }
        if self.degree(a) != 2 {
            return Err(GraphError::NotDegreeTwo(a));
        }
        let n = self.n;
        let (v1, v2, hub) = (n, n + 1, n + 2);
        let mut edges = self.edges.clone();
        let (x, y) = edges[e1];
        edges[e1] = (x, v1);
        edges.push((v1, y));
        if e1 == e2 {
            // the tail v1-y of the first subdivision is split again
            let last = edges.len() - 1;
            edges[last] = (v1, v2);
            edges.push((v2, y));
        } else {
            let (x, y) = edges[e2];
            edges[e2] = (x, v2);
            edges.push((v2, y));
        }
        edges.extend([(hub, a), (hub, v1), (hub, v2)]);
        Multigraph::new(n + 3, edges)
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::catalog::{named, NamedGraph};

    fn c(n: usize) -> Multigraph {
        named(NamedGraph::Cycle(n))
    }

    #[test]
    fn builds_loop_and_theta() {
        let c1 = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(c1.degree(0), 2);
        let theta = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(theta.degree(0), 3);
        assert_eq!(theta.multiplicity(0, 1), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Multigraph::new(2, [(0, 2)]),
            Err(GraphError::BadEndpoint { endpoint: 2, n: 2 })
        );
        assert_eq!(Multigraph::new(1, [(0, 0), (0, 0)]), Err(GraphError::DegreeExceeded(0)));
        let star = [(0, 1), (0, 2), (0, 3), (0, 4)];
        assert_eq!(Multigraph::new(5, star), Err(GraphError::DegreeExceeded(0)));
    }

    #[test]
    fn degrees() {
        let k4 = named(NamedGraph::K4);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        let p3 = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degree(1), 2);
        assert_eq!(p3.degree(0), 1);
    }

    #[test]
    fn subdivide_examples() {
        let c2 = named(NamedGraph::C1).subdivide_edge(0).unwrap();
        assert_eq!(canonical_code(&c2), canonical_code(&c(2)));
        let k4p = named(NamedGraph::K4).subdivide_edge(3).unwrap();
        assert_eq!(canonical_code(&k4p), canonical_code(&named(NamedGraph::K4Plus)));
        let c5 = c(4).subdivide_edge(1).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&c(5)));
    }

    #[test]
    fn suppress_examples() {
        let c2 = c(3).suppress_vertex(1).unwrap();
        assert_eq!(canonical_code(&c2), canonical_code(&c(2)));
        let k4p = named(NamedGraph::K4Plus);
        let deg2 = k4p.vertices().find(|&v| k4p.degree(v) == 2).unwrap();
        let k4 = k4p.suppress_vertex(deg2).unwrap();
        assert_eq!(canonical_code(&k4), canonical_code(&named(NamedGraph::K4)));
        let c1 = c(2).suppress_vertex(0).unwrap();
        assert_eq!(c1.edges(), &[(0, 0)]);
    }

    #[test]
    fn suppress_errors() {
        let k4 = named(NamedGraph::K4);
        assert_eq!(k4.suppress_vertex(0), Err(GraphError::NotDegreeTwo(0)));
        let c1 = named(NamedGraph::C1);
        assert_eq!(c1.suppress_vertex(0), Err(GraphError::LoopAtVertex(0)));
    }

    #[test]
    fn circ_examples() {
        let k4 = named(NamedGraph::C1).circ_op(0, 0, 0).unwrap();
        assert_eq!(canonical_code(&k4), canonical_code(&named(NamedGraph::K4)));
        let g = c(2).circ_op(0, 1, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 7));
        assert_eq!(named(NamedGraph::K4).circ_op(0, 1, 0), Err(GraphError::NotDegreeTwo(0)));
    }

    #[test]
    fn acyclicity() {
        assert!(!named(NamedGraph::C1).is_forest());
        assert!(named(NamedGraph::C1).is_acyclic_without(&[0]));
        assert!(!c(2).is_forest());
        assert!(Multigraph::new(3, [(0, 1), (1, 2)]).unwrap().is_forest());
    }

    #[test]
    fn induced_and_union() {
        let k4 = named(NamedGraph::K4);
        let k3 = k4.delete_vertex(2);
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        let two = k4.disjoint_union(&k3);
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
    }
}
