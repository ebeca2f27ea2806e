//! Canonical codes for vertex-colored multigraphs.
//!
//! Equitable partition refinement on multiplicity-weighted neighbor counts,
//! followed by an individualization search tree. Leaves are compared by the
//! relabeled edge list; automorphisms discovered at equal leaves prune
//! sibling subtrees that are images of ones already explored.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Multigraph, UnionFind, Vertex};

/// Isomorphism-invariant byte encoding with a total order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

pub fn canonical_code(g: &Multigraph) -> CanonicalCode {
    canonical_labeling(g, None).0
}

/// Code of a graph whose vertices carry colors; isomorphisms must preserve them.
pub fn canonical_code_colored(g: &Multigraph, colors: &[u32]) -> CanonicalCode {
    canonical_labeling(g, Some(colors)).0
}

pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// The graph relabeled into canonical order.
pub fn canonical_form(g: &Multigraph) -> Multigraph {
    let (_, perm) = canonical_labeling(g, None);
    g.relabel(&perm)
}

/// Returns the code and the canonical position of each vertex.
pub fn canonical_labeling(g: &Multigraph, colors: Option<&[u32]>) -> (CanonicalCode, Vec<Vertex>) {
    let n = g.vertex_count();
    let mut nbrs: Vec<Vec<(Vertex, u8)>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        for (a, b) in [(u, v), (v, u)] {
            match nbrs[a].iter_mut().find(|(w, _)| *w == b) {
                Some(entry) => entry.1 += 1,
                None => nbrs[a].push((b, 1)),
            }
        }
    }
    let key = |v: Vertex| (colors.map_or(0, |c| c[v]), g.loop_count(v), g.degree(v));
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (key(v), v));
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if key(cell[0]) == key(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut search = Search {
        g,
        colors,
        nbrs,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut fixed = Vec::new();
    search.explore(cells, &mut fixed);
    let (cert, perm) = search.best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(5 + cert.len() * 2);
    bytes.push(colors.is_some() as u8);
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    bytes.extend_from_slice(&(g.edge_count() as u16).to_le_bytes());
    for x in cert {
        bytes.extend_from_slice(&x.to_le_bytes());
    }
    (CanonicalCode(bytes), perm)
}

struct Search<'a> {
    g: &'a Multigraph,
    colors: Option<&'a [u32]>,
    nbrs: Vec<Vec<(Vertex, u8)>>,
    /// (certificate, vertex -> position)
    best: Option<(Vec<u16>, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<Vec<Vertex>>, fixed: &mut Vec<Vertex>) {
        let cells = self.refine(cells);
        if cells.len() == self.g.vertex_count() {
            self.leaf(&cells);
            return;
        }
        let target = {
            let size = cells.iter().map(Vec::len).filter(|&s| s > 1).min().unwrap();
            cells.iter().position(|c| c.len() == size).unwrap()
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<Vertex> = Vec::new();
        for w in candidates {
            if !explored.is_empty() && self.equivalent_to_explored(w, &explored, fixed) {
                continue;
            }
            explored.push(w);
            let mut next = cells.clone();
            let rest: Vec<Vertex> = next[target].iter().copied().filter(|&x| x != w).collect();
            next[target] = vec![w];
            next.insert(target + 1, rest);
            fixed.push(w);
            self.explore(next, fixed);
            fixed.pop();
        }
    }

    /// Whether a known automorphism fixing `fixed` pointwise maps `w` into
    /// the orbit of an explored sibling.
    fn equivalent_to_explored(&self, w: Vertex, explored: &[Vertex], fixed: &[Vertex]) -> bool {
        let n = self.g.vertex_count();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for aut in &self.automorphisms {
            if fixed.iter().all(|&f| aut[f] == f) {
                any = true;
                for (v, &image) in aut.iter().enumerate() {
                    uf.union(v, image);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(w);
        explored.iter().any(|&x| uf.find(x) == root)
    }

    fn leaf(&mut self, cells: &[Vec<Vertex>]) {
        let n = self.g.vertex_count();
        let mut perm = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut pairs: Vec<(u16, u16)> = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u] as u16, perm[v] as u16);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let mut cert: Vec<u16> = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
        if let Some(colors) = self.colors {
            let mut by_pos = vec![0u32; n];
            for v in 0..n {
                by_pos[perm[v]] = colors[v];
            }
            cert.extend(by_pos.iter().flat_map(|c| [(*c >> 16) as u16, *c as u16]));
        }
        match &self.best {
            None => self.best = Some((cert, perm)),
            Some((best, best_perm)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, perm)),
                std::cmp::Ordering::Equal => {
                    let mut inverse = vec![0; n];
                    for v in 0..n {
                        inverse[best_perm[v]] = v;
                    }
                    let aut: Vec<Vertex> = (0..n).map(|v| inverse[perm[v]]).collect();
                    if aut.iter().enumerate().any(|(v, &x)| v != x) {
                        self.automorphisms.push(aut);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Refines an ordered partition until it is equitable. Each cell splits by
    /// the multiplicity-weighted count of neighbors in every current cell;
    /// sub-cells are ordered by that signature.
    fn refine(&self, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
        let n = self.g.vertex_count();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u8)>, Vertex)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<(usize, u8)> = Vec::with_capacity(3);
                        for &(w, m) in &self.nbrs[v] {
                            let c = cell_of[w];
                            match sig.iter_mut().find(|(x, _)| *x == c) {
                                Some(entry) => entry.1 += m,
                                None => sig.push((c, m)),
                            }
                        }
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let before = next.len();
                for (i, (sig, v)) in keyed.iter().enumerate() {
                    if i == 0 || *sig != keyed[i - 1].0 {
                        next.push(Vec::new());
                    }
                    next.last_mut().unwrap().push(*v);
                }
                if next.len() - before > 1 {
                    changed = true;
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named, NamedGraph};

    fn shuffled(g: &Multigraph, seed: u64) -> Multigraph {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabel(&perm)
    }

    #[test]
    fn relabelings_agree() {
        for name in [
            NamedGraph::K4,
            NamedGraph::Cycle(5),
            NamedGraph::Petersen,
            NamedGraph::Dodecahedron,
            NamedGraph::R1,
        ] {
            let g = named(name);
            for seed in 0..5 {
                assert_eq!(canonical_code(&g), canonical_code(&shuffled(&g, seed)), "{name:?}");
            }
        }
    }

    #[test]
    fn distinguishes_cube_and_wagner() {
        assert_ne!(
            canonical_code(&named(NamedGraph::Q3)),
            canonical_code(&named(NamedGraph::V8))
        );
        assert_ne!(
            canonical_code(&named(NamedGraph::R1)),
            canonical_code(&named(NamedGraph::R2))
        );
    }

    #[test]
    fn multigraph_features_matter() {
        let theta = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let loopy = Multigraph::new(2, [(0, 0), (0, 1)]).unwrap();
        let c2 = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_ne!(canonical_code(&theta), canonical_code(&c2));
        assert_ne!(canonical_code(&loopy), canonical_code(&c2));
        assert_eq!(
            canonical_code(&loopy),
            canonical_code(&Multigraph::new(2, [(1, 1), (1, 0)]).unwrap())
        );
    }

    #[test]
    fn colors_are_respected() {
        let p3 = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let end = canonical_code_colored(&p3, &[1, 0, 0]);
        let other_end = canonical_code_colored(&p3, &[0, 0, 1]);
        let middle = canonical_code_colored(&p3, &[0, 1, 0]);
        assert_eq!(end, other_end);
        assert_ne!(end, middle);
    }

    #[test]
    fn canonical_form_is_fixed_point() {
        let g = shuffled(&named(NamedGraph::R2), 9);
        let f = canonical_form(&g);
        assert_eq!(canonical_form(&f).edges().len(), f.edges().len());
        assert_eq!(canonical_code(&f), canonical_code(&g));
    }

    #[test]
    fn disjoint_unions_of_symmetric_graphs() {
        let d = named(NamedGraph::Dodecahedron);
        let two = d.disjoint_union(&d);
        assert_eq!(canonical_code(&two), canonical_code(&shuffled(&two, 3)));
        let empty = Multigraph::empty(9);
        assert_eq!(canonical_code(&empty), canonical_code(&shuffled(&empty, 1)));
    }
}
