//! Girth, bounded-length cycle enumeration and small subgraph search.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Multigraph, Vertex};

/// Girth of a multigraph: `None` when it is a forest. Loops have length one
/// and a pair of parallel edges has length two.
pub fn girth(g: &Multigraph) -> Option<usize> {
    if g.has_loop() {
        return Some(1);
    }
    if !g.is_simple() {
        return Some(2);
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &(w, e) in g.incident(u) {
                if e == via[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        via.iter_mut().for_each(|x| *x = usize::MAX);
    }
    (best != usize::MAX).then_some(best)
}

/// Every cycle of length at most `max_len`, reported once per distinct vertex
/// set (a cycle's length equals the size of its vertex set). Sets are sorted
/// and the list is ordered by (length, vertices).
pub fn cycles_up_to(g: &Multigraph, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut found: BTreeSet<(usize, Vec<Vertex>)> = BTreeSet::new();
    if max_len == 0 {
        return Vec::new();
    }
    for v in g.vertices() {
        if g.loop_count(v) > 0 {
            found.insert((1, vec![v]));
        }
    }
    let mut path = Vec::new();
    let mut used_edges = Vec::new();
    for s in g.vertices() {
        path.clear();
        path.push(s);
        extend_paths(g, s, max_len, &mut path, &mut used_edges, &mut |cycle| {
            let mut set = cycle.to_vec();
            set.sort_unstable();
            found.insert((set.len(), set));
        });
    }
    found.into_iter().map(|(_, c)| c).collect()
}

/// Paths from `start` through vertices larger than it; `emit` receives each
/// closed walk that is a cycle.
fn extend_paths(
    g: &Multigraph,
    start: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    used_edges: &mut Vec<usize>,
    emit: &mut impl FnMut(&[Vertex]),
) {
    let last = *path.last().unwrap();
    for &(w, e) in g.incident(last) {
        if w == last || used_edges.contains(&e) {
            continue;
        }
        if w == start && path.len() >= 2 {
            emit(path);
            continue;
        }
        if w <= start || path.contains(&w) || path.len() >= max_len {
            continue;
        }
        path.push(w);
        used_edges.push(e);
        extend_paths(g, start, max_len, path, used_edges, emit);
        used_edges.pop();
        path.pop();
    }
}

/// All cycles of length exactly `len` that pass through `v`, as sorted vertex sets.
pub fn cycles_through(g: &Multigraph, v: Vertex, len: usize) -> Vec<Vec<Vertex>> {
    let mut found: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    if len == 1 {
        if g.loop_count(v) > 0 {
            found.insert(vec![v]);
        }
        return found.into_iter().collect();
    }
    fn walk(
        g: &Multigraph,
        v: Vertex,
        len: usize,
        path: &mut Vec<Vertex>,
        used: &mut Vec<usize>,
        found: &mut BTreeSet<Vec<Vertex>>,
    ) {
        let last = *path.last().unwrap();
        for &(w, e) in g.incident(last) {
            if w == last || used.contains(&e) {
                continue;
            }
            if w == v {
                if path.len() == len {
                    let mut set = path.clone();
                    set.sort_unstable();
                    found.insert(set);
                }
                continue;
            }
            if path.len() >= len || path.contains(&w) {
                continue;
            }
            path.push(w);
            used.push(e);
            walk(g, v, len, path, used, found);
            used.pop();
            path.pop();
        }
    }
    walk(g, v, len, &mut vec![v], &mut Vec::new(), &mut found);
    found.into_iter().collect()
}

/// Cycles of length less than `g` (lengths 1..g-1), one per vertex set.
pub fn short_cycles(graph: &Multigraph, g: usize) -> Vec<Vec<Vertex>> {
    cycles_up_to(graph, g.saturating_sub(1))
}

pub fn disjoint(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// True iff two vertex-disjoint cycles, each of length less than `g`, exist.
pub fn has_two_disjoint_short_cycles(graph: &Multigraph, g: usize) -> bool {
    let cycles = short_cycles(graph, g);
    cycles
        .iter()
        .enumerate()
        .any(|(i, a)| cycles[i + 1..].iter().any(|b| disjoint(a, b)))
}

/// Whether `pattern` occurs as a (not necessarily induced) subgraph of
/// `host`, respecting edge multiplicities and loops.
pub fn contains_subgraph(host: &Multigraph, pattern: &Multigraph) -> bool {
    let pn = pattern.vertex_count();
    if pn > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return pn == 0;
    }
    // order pattern vertices so each one after the first of its component
    // is adjacent to an earlier one
    let mut order = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    for root in pattern.vertices() {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in pattern.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; pn];
    let mut taken = vec![false; host.vertex_count()];
    embed(host, pattern, &order, 0, &mut image, &mut taken)
}

fn embed(
    host: &Multigraph,
    pattern: &Multigraph,
    order: &[Vertex],
    depth: usize,
    image: &mut [Vertex],
    taken: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in host.vertices() {
        if taken[h] || host.degree(h) < pattern.degree(p) || host.loop_count(h) < pattern.loop_count(p) {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .all(|&q| host.multiplicity(image[q], h) >= pattern.multiplicity(q, p));
        if !fits {
            continue;
        }
        image[p] = h;
        taken[h] = true;
        if embed(host, pattern, order, depth + 1, image, taken) {
            return true;
        }
        taken[h] = false;
        image[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named, NamedGraph};

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&named(NamedGraph::K4)), Some(3));
        assert_eq!(girth(&named(NamedGraph::Petersen)), Some(5));
        let p5 = Multigraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(girth(&p5), None);
        assert_eq!(girth(&named(NamedGraph::C1)), Some(1));
        assert_eq!(girth(&named(NamedGraph::Cycle(2))), Some(2));
        assert_eq!(girth(&named(NamedGraph::Q3)), Some(4));
        assert_eq!(girth(&named(NamedGraph::Dodecahedron)), Some(5));
        assert_eq!(girth(&named(NamedGraph::Cycle(9))), Some(9));
    }

    #[test]
    fn short_cycle_examples() {
        assert_eq!(short_cycles(&named(NamedGraph::K4), 4).len(), 4);
        assert!(short_cycles(&named(NamedGraph::Petersen), 5).is_empty());
        let q3 = short_cycles(&named(NamedGraph::Q3), 5);
        assert_eq!(q3.len(), 6);
        assert!(q3.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn disjoint_short_cycle_examples() {
        assert!(has_two_disjoint_short_cycles(&named(NamedGraph::Q3), 5));
        assert!(!has_two_disjoint_short_cycles(&named(NamedGraph::Petersen), 5));
        assert!(!has_two_disjoint_short_cycles(&named(NamedGraph::K4), 4));
        let two_loops = Multigraph::new(2, [(0, 0), (1, 1)]).unwrap();
        assert!(has_two_disjoint_short_cycles(&two_loops, 4));
    }

    #[test]
    fn cycles_through_vertex() {
        let dodeca = named(NamedGraph::Dodecahedron);
        // every vertex of the dodecahedron lies on three pentagonal faces
        assert_eq!(cycles_through(&dodeca, 0, 5).len(), 3);
        assert_eq!(cycles_through(&named(NamedGraph::K4), 0, 3).len(), 3);
        assert_eq!(cycles_through(&named(NamedGraph::Cycle(2)), 0, 2).len(), 1);
    }

    #[test]
    fn subgraph_search() {
        let k4p = named(NamedGraph::K4Plus);
        assert!(contains_subgraph(&k4p, &named(NamedGraph::K3)));
        assert!(!contains_subgraph(&named(NamedGraph::Petersen), &k4p));
        assert!(contains_subgraph(&named(NamedGraph::K4Plus), &k4p));
        assert!(!contains_subgraph(&named(NamedGraph::K4), &k4p));
        assert!(contains_subgraph(
            &named(NamedGraph::Petersen),
            &named(NamedGraph::Cycle(9))
        ));
    }
}
