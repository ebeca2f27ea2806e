//! Exact minimum feedback vertex sets for small subcubic multigraphs.
//!
//! Branch and bound over a reduced multigraph: vertices are either taken
//! into the set or marked forbidden (kept in the forest). Adjacent forbidden
//! vertices are merged, degree-one vertices dropped and degree-two vertices
//! bypassed. The cyclomatic number gives the lower bound, since deleting a
//! vertex of degree `d` lowers it by at most `d - 1`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, Vertex};

pub const DEFAULT_MAX_VERTICES: usize = 24;
/// Hard limit imposed by the bitmask representation.
pub const MAX_SUPPORTED_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FvsError {
    #[error("graph has {n} vertices, above the solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {0} is out of range")]
    BadVertex(Vertex),
    #[error("edge {0} is out of range")]
    BadEdge(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FvsCertificate {
    /// Sorted; the lexicographically least optimal set.
    pub vertices: Vec<Vertex>,
    pub size: usize,
    /// Search nodes visited across all solver calls for this certificate.
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct Solver {
    max_vertices: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Solver {
    /// Caps above [`MAX_SUPPORTED_VERTICES`] are clamped.
    pub fn with_cap(max_vertices: usize) -> Self {
        Solver {
            max_vertices: max_vertices.min(MAX_SUPPORTED_VERTICES),
        }
    }

    pub fn cap(&self) -> usize {
        self.max_vertices
    }

    pub fn min_fvs(&self, g: &Multigraph) -> Result<FvsCertificate, FvsError> {
        self.min_fvs_with_required(g, &[])
    }

    /// Minimum over feedback vertex sets containing every `required` vertex.
    pub fn min_fvs_with_required(&self, g: &Multigraph, required: &[Vertex]) -> Result<FvsCertificate, FvsError> {
        let n = g.vertex_count();
        if n > self.max_vertices {
            return Err(FvsError::TooLarge {
                n,
                cap: self.max_vertices,
            });
        }
        if let Some(&v) = required.iter().find(|&&v| v >= n) {
            return Err(FvsError::BadVertex(v));
        }
        let mut nodes = 0u64;
        let base = Work::from_graph(g);
        let mut req = required.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let mut forb = 0u64;
        let optimum = base
            .constrained(req, forb)
            .min_size(usize::MAX, &mut nodes)
            .expect("deleting every vertex is always feasible");
        // fix vertices in order, keeping an optimal completion available
        for v in 0..n {
            if req.count_ones() as usize == optimum {
                break;
            }
            if req & (1 << v) != 0 {
                continue;
            }
            let with_v = base.constrained(req | 1 << v, forb).min_size(optimum, &mut nodes);
            if with_v.is_some() {
                req |= 1 << v;
            } else {
                forb |= 1 << v;
            }
        }
        let vertices: Vec<Vertex> = (0..n).filter(|&v| req & (1 << v) != 0).collect();
        assert!(g.is_acyclic_without(&vertices), "solver produced a non-covering set");
        assert_eq!(vertices.len(), optimum);
        Ok(FvsCertificate {
            size: optimum,
            vertices,
            nodes_explored: nodes,
        })
    }

    /// Exact `φ(G - e)`; vertex ids are those of `g`.
    pub fn min_fvs_minus_edge(&self, g: &Multigraph, e: EdgeId) -> Result<FvsCertificate, FvsError> {
        let h = g.delete_edge(e).map_err(|_| FvsError::BadEdge(e))?;
        self.min_fvs(&h)
    }

    /// Vertex set of a maximum induced forest: the complement of [`Solver::min_fvs`].
    pub fn max_induced_forest(&self, g: &Multigraph) -> Result<Vec<Vertex>, FvsError> {
        let cert = self.min_fvs(g)?;
        let forest: Vec<Vertex> = g
            .vertices()
            .filter(|v| cert.vertices.binary_search(v).is_err())
            .collect();
        debug_assert!(g.induced_subgraph(&forest).is_forest());
        Ok(forest)
    }
}

pub fn min_fvs(g: &Multigraph) -> Result<FvsCertificate, FvsError> {
    Solver::default().min_fvs(g)
}

pub fn min_fvs_with_required(g: &Multigraph, required: &[Vertex]) -> Result<FvsCertificate, FvsError> {
    Solver::default().min_fvs_with_required(g, required)
}

pub fn min_fvs_minus_edge(g: &Multigraph, e: EdgeId) -> Result<FvsCertificate, FvsError> {
    Solver::default().min_fvs_minus_edge(g, e)
}

pub fn max_induced_forest(g: &Multigraph) -> Result<Vec<Vertex>, FvsError> {
    Solver::default().max_induced_forest(g)
}

/// `φ(G)` alone.
pub fn phi(g: &Multigraph) -> Result<usize, FvsError> {
    Ok(min_fvs(g)?.size)
}

/// True iff `g - s` has no cycle; loops and parallel pairs are cycles.
pub fn is_fvs(g: &Multigraph, s: &[Vertex]) -> bool {
    g.is_acyclic_without(s)
}

/// Residual multigraph: `mult[u][v]` edge multiplicities (`mult[v][v]`
/// counts loops), live vertices, and the forbidden subset.
#[derive(Clone)]
struct Work {
    n: usize,
    mult: Vec<Vec<u8>>,
    alive: u64,
    forbidden: u64,
    taken: usize,
}

enum Step {
    Changed,
    Stable,
    Infeasible,
}

impl Work {
    fn from_graph(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![vec![0u8; n]; n];
        for &(u, v) in g.edges() {
            if u == v {
                mult[u][u] += 1;
            } else {
                mult[u][v] += 1;
                mult[v][u] += 1;
            }
        }
        let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Work {
            n,
            mult,
            alive,
            forbidden: 0,
            taken: 0,
        }
    }

    fn constrained(&self, required: u64, forbidden: u64) -> Work {
        let mut w = self.clone();
        for v in bits(required) {
            w.remove(v);
            w.taken += 1;
        }
        w.forbidden = forbidden & w.alive;
        w
    }

    fn live(&self) -> impl Iterator<Item = Vertex> + '_ {
        bits(self.alive)
    }

    fn is_forbidden(&self, v: Vertex) -> bool {
        self.forbidden & (1 << v) != 0
    }

    fn degree(&self, v: Vertex) -> usize {
        let row = &self.mult[v];
        self.live().filter(|&w| w != v).map(|w| row[w] as usize).sum::<usize>() + 2 * row[v] as usize
    }

    fn remove(&mut self, v: Vertex) {
        self.alive &= !(1 << v);
        self.forbidden &= !(1 << v);
        for w in 0..self.n {
            self.mult[v][w] = 0;
            self.mult[w][v] = 0;
        }
    }

    fn add_edge(&mut self, a: Vertex, b: Vertex) {
        if a == b {
            self.mult[a][a] += 1;
        } else {
            self.mult[a][b] += 1;
            self.mult[b][a] += 1;
        }
    }

    /// Neighbors of `v` other than itself, each repeated by multiplicity.
    fn neighbor_list(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        for w in self.live() {
            if w != v {
                out.extend(std::iter::repeat_n(w, self.mult[v][w] as usize));
            }
        }
        out
    }

    /// Merges forbidden `w` into forbidden `v`.
    fn merge(&mut self, v: Vertex, w: Vertex) -> Step {
        if self.mult[v][w] >= 2 || self.mult[w][w] > 0 {
            return Step::Infeasible;
        }
        self.mult[v][w] = 0;
        self.mult[w][v] = 0;
        for x in 0..self.n {
            let k = self.mult[w][x];
            if k > 0 && x != w {
                self.mult[v][x] += k;
                self.mult[x][v] += k;
            }
        }
        self.remove(w);
        Step::Changed
    }

    fn reduce_once(&mut self) -> Step {
        let mut changed = false;
        for v in self.live().collect::<Vec<_>>() {
            if self.alive & (1 << v) == 0 {
                continue;
            }
            if self.mult[v][v] > 0 {
                if self.is_forbidden(v) {
                    return Step::Infeasible;
                }
                self.remove(v);
                self.taken += 1;
                changed = true;
                continue;
            }
            if self.is_forbidden(v) {
                let partner = self
                    .live()
                    .find(|&w| w != v && self.mult[v][w] > 0 && self.is_forbidden(w));
                if let Some(w) = partner {
                    if let Step::Infeasible = self.merge(v, w) {
                        return Step::Infeasible;
                    }
                    changed = true;
                    continue;
                }
            } else {
                // a double edge to a forbidden vertex is a 2-cycle only `v` can break
                if self
                    .live()
                    .any(|w| w != v && self.mult[v][w] >= 2 && self.is_forbidden(w))
                {
                    self.remove(v);
                    self.taken += 1;
                    changed = true;
                    continue;
                }
            }
            let nbrs = self.neighbor_list(v);
            match nbrs.len() {
                0 | 1 => {
                    self.remove(v);
                    changed = true;
                }
                2 => {
                    let (a, b) = (nbrs[0], nbrs[1]);
                    // taking a non-forbidden neighbor is never worse than taking v
                    if self.is_forbidden(v) || !self.is_forbidden(a) || !self.is_forbidden(b) {
                        self.remove(v);
                        self.add_edge(a, b);
                        changed = true;
                    }
                }
                _ => {}
            }
        }
        if changed {
            Step::Changed
        } else {
            Step::Stable
        }
    }

    fn reduce(&mut self) -> bool {
        loop {
            match self.reduce_once() {
                Step::Changed => {}
                Step::Stable => return true,
                Step::Infeasible => return false,
            }
        }
    }

    /// Edge count, live vertex count and component count.
    fn cyclomatic(&self) -> usize {
        let mut m = 0usize;
        let live: Vec<Vertex> = self.live().collect();
        for (idx, &u) in live.iter().enumerate() {
            m += self.mult[u][u] as usize;
            for &v in &live[idx + 1..] {
                m += self.mult[u][v] as usize;
            }
        }
        let c = self.components().len();
        m + c - live.len()
    }

    fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in self.live() {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.live() {
                    if comp & (1 << w) == 0 && self.mult[u][w] > 0 {
                        comp |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn lower_bound(&self) -> usize {
        let nu = self.cyclomatic();
        if nu == 0 {
            return 0;
        }
        let worst = self
            .live()
            .filter(|&v| !self.is_forbidden(v))
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0);
        if worst <= 1 {
            // nothing deletable can break a cycle
            return usize::MAX;
        }
        nu.div_ceil(worst - 1)
    }

    fn restrict(&self, comp: u64) -> Work {
        let mut w = self.clone();
        for v in bits(self.alive & !comp) {
            w.remove(v);
        }
        w.taken = 0;
        w
    }

    /// Minimum total number of taken vertices, if at most `limit`.
    fn min_size(mut self, limit: usize, nodes: &mut u64) -> Option<usize> {
        *nodes += 1;
        if !self.reduce() || self.taken > limit {
            return None;
        }
        let taken = self.taken;
        let budget = limit - taken;
        let lb = self.lower_bound();
        if lb == 0 {
            return Some(taken);
        }
        if lb > budget {
            return None;
        }
        let comps = self.components();
        if comps.len() > 1 {
            let parts: Vec<Work> = comps.into_iter().map(|c| self.restrict(c)).collect();
            let bounds: Vec<usize> = parts.iter().map(Work::lower_bound).collect();
            if bounds.contains(&usize::MAX) || bounds.iter().sum::<usize>() > budget {
                return None;
            }
            let mut used = 0usize;
            let mut rest: usize = bounds.iter().sum();
            for (part, lb) in parts.into_iter().zip(bounds) {
                rest -= lb;
                let size = part.min_size(budget - used - rest, nodes)?;
                used += size;
            }
            return Some(taken + used);
        }
        let v = self.branch_vertex()?;
        let mut best = None;
        let mut take = self.clone();
        take.remove(v);
        take.taken = 0;
        if budget >= 1 {
            if let Some(s) = take.min_size(budget - 1, nodes) {
                best = Some(s + 1);
            }
        }
        let cap = match best {
            Some(b) if b == lb => return Some(taken + b),
            Some(b) => b - 1,
            None => budget,
        };
        let mut keep = self;
        keep.forbidden |= 1 << v;
        keep.taken = 0;
        if let Some(s) = keep.min_size(cap, nodes) {
            best = Some(s);
        }
        best.map(|b| b + taken)
    }

    /// Highest-degree deletable vertex, preferring those touching forbidden ones.
    fn branch_vertex(&self) -> Option<Vertex> {
        self.live().filter(|&v| !self.is_forbidden(v)).max_by_key(|&v| {
            let touching = self
                .live()
                .filter(|&w| self.is_forbidden(w) && self.mult[v][w] > 0)
                .count();
            (self.degree(v), touching, std::cmp::Reverse(v))
        })
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(b)
        }
    })
}
