//! Exhaustive generation of connected simple subcubic graphs by canonical
//! augmentation: every graph on `n` vertices is grown from one on `n - 1`
//! by adding a vertex of degree 1 to 3, and a child survives only when the
//! new vertex is equivalent to the child's canonical deletion vertex.

use rayon::prelude::*;
use thiserror::Error;

use crate::blocks::cut_vertices;
use crate::canon::{canonical_code_colored, canonical_labeling, CanonicalCode};
use crate::graph::{Multigraph, Vertex};

pub const DEFAULT_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumeration up to {n} vertices exceeds the cap of {cap}")]
pub struct TooLarge {
    pub n: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    max_vertices: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Enumerator {
    pub fn with_cap(max_vertices: usize) -> Self {
        Enumerator { max_vertices }
    }

    /// All levels `0..=n_max`; `levels[n]` holds the graphs on `n` vertices
    /// in canonical form, sorted by canonical code. `keep` must be closed
    /// under deleting a vertex whose removal leaves the graph connected
    /// (girth bounds and "no two disjoint short cycles" qualify); graphs
    /// it rejects are dropped together with all their descendants.
    pub fn levels<F>(&self, n_max: usize, keep: F) -> Result<Vec<Vec<Multigraph>>, TooLarge>
    where
        F: Fn(&Multigraph) -> bool + Sync,
    {
        if n_max > self.max_vertices {
            return Err(TooLarge {
                n: n_max,
                cap: self.max_vertices,
            });
        }
        let mut levels = vec![Vec::new()];
        if n_max == 0 {
            return Ok(levels);
        }
        let k1 = Multigraph::empty(1);
        levels.push(if keep(&k1) { vec![k1] } else { Vec::new() });
        for _ in 2..=n_max {
            let parents = levels.last().unwrap();
            let mut next: Vec<(CanonicalCode, Multigraph)> =
                parents.par_iter().flat_map_iter(|p| children(p, &keep)).collect();
            next.sort_by(|a, b| a.0.cmp(&b.0));
            debug_assert!(next.windows(2).all(|w| w[0].0 != w[1].0));
            levels.push(next.into_iter().map(|(_, g)| g).collect());
        }
        Ok(levels)
    }

    /// Connected simple subcubic graphs on exactly `n` vertices.
    pub fn connected_subcubic(&self, n: usize) -> Result<Vec<Multigraph>, TooLarge> {
        Ok(self.levels(n, |_| true)?.pop().unwrap_or_default())
    }

    /// Connected simple subcubic graphs on `1..=n_max` vertices passing `keep`.
    pub fn up_to<F>(&self, n_max: usize, keep: F) -> Result<Vec<Multigraph>, TooLarge>
    where
        F: Fn(&Multigraph) -> bool + Sync,
    {
        Ok(self.levels(n_max, keep)?.into_iter().flatten().collect())
    }
}

pub fn enumerate_connected_subcubic(n: usize) -> Result<Vec<Multigraph>, TooLarge> {
    Enumerator::default().connected_subcubic(n)
}

/// Accepted children of `parent`, deduplicated, in canonical form.
fn children<F: Fn(&Multigraph) -> bool>(parent: &Multigraph, keep: &F) -> Vec<(CanonicalCode, Multigraph)> {
    let n = parent.vertex_count();
    let open: Vec<Vertex> = parent.vertices().filter(|&v| parent.degree(v) < 3).collect();
    let mut out: Vec<(CanonicalCode, Multigraph)> = Vec::new();
    let mut attach = |targets: &[Vertex]| {
        let extra: Vec<(Vertex, Vertex)> = targets.iter().map(|&t| (t, n)).collect();
        let child =
            Multigraph::new(n + 1, parent.edges().iter().copied().chain(extra)).expect("open vertices have room");
        if keep(&child) && is_canonical_extension(&child, n) {
            let (code, perm) = canonical_labeling(&child, None);
            out.push((code, child.relabel(&perm)));
        }
    };
    for (x, &a) in open.iter().enumerate() {
        attach(&[a]);
        for (y, &b) in open.iter().enumerate().skip(x + 1) {
            attach(&[a, b]);
            for &c in &open[y + 1..] {
                attach(&[a, b, c]);
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out
}

/// The canonical deletion vertex is the non-cut vertex of least degree that
/// comes last in the canonical order; `v` is accepted when an automorphism
/// maps it there.
fn is_canonical_extension(child: &Multigraph, v: Vertex) -> bool {
    let cuts = cut_vertices(child);
    let noncut: Vec<Vertex> = child.vertices().filter(|x| cuts.binary_search(x).is_err()).collect();
    let least = noncut
        .iter()
        .map(|&x| child.degree(x))
        .min()
        .expect("a connected graph has a non-cut vertex");
    if child.degree(v) != least {
        return false;
    }
    let candidates: Vec<Vertex> = noncut.into_iter().filter(|&x| child.degree(x) == least).collect();
    if candidates.len() == 1 {
        return true;
    }
    let (_, position) = canonical_labeling(child, None);
    let chosen = *candidates.iter().max_by_key(|&&x| position[x]).unwrap();
    if chosen == v {
        return true;
    }
    let marked = |x: Vertex| {
        let mut colors = vec![0u32; child.vertex_count()];
        colors[x] = 1;
        canonical_code_colored(child, &colors)
    };
    marked(v) == marked(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::girth;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|n| enumerate_connected_subcubic(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 10, 29, 64, 194]);
    }

    #[test]
    fn yielded_graphs_are_valid_and_sorted() {
        let graphs = enumerate_connected_subcubic(7).unwrap();
        assert!(graphs
            .iter()
            .all(|g| g.is_connected() && g.is_simple() && g.max_degree() <= 3));
        let codes: Vec<CanonicalCode> = graphs.iter().map(crate::canon::canonical_code).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            enumerate_connected_subcubic(8).unwrap(),
            enumerate_connected_subcubic(8).unwrap()
        );
    }

    #[test]
    fn girth_filter_finds_petersen() {
        let levels = Enumerator::with_cap(10)
            .levels(10, |g| girth(g).is_none_or(|x| x >= 5))
            .unwrap();
        let cubic: Vec<_> = levels[10].iter().filter(|g| g.is_cubic()).collect();
        assert_eq!(cubic.len(), 1);
        assert!(crate::canon::are_isomorphic(
            cubic[0],
            &crate::catalog::named(crate::catalog::NamedGraph::Petersen)
        ));
    }

    #[test]
    fn cap() {
        assert_eq!(enumerate_connected_subcubic(13), Err(TooLarge { n: 13, cap: 12 }));
        assert!(enumerate_connected_subcubic(0).unwrap().is_empty());
    }
}
