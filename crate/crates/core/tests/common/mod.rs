//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here uses the library's canonical labeling or solver.
#![allow(dead_code)]

use proptest::prelude::*;
use subcubic::Multigraph;

/// Adds candidate edges in order, skipping any that would break the degree
/// bound (and, for simple graphs, loops and repeats).
pub fn build(n: usize, pairs: &[(usize, usize)], simple: bool) -> Multigraph {
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        let (u, v) = (a % n, b % n);
        let need = if u == v { 2 } else { 1 };
        if simple && (u == v || edges.iter().any(|&(x, y)| (x, y) == (u, v) || (x, y) == (v, u))) {
            continue;
        }
        if deg[u] + need > 3 || (u != v && deg[v] + 1 > 3) {
            continue;
        }
        deg[u] += if u == v { 2 } else { 1 };
        if u != v {
            deg[v] += 1;
        }
        edges.push((u, v));
    }
    Multigraph::new(n, edges).unwrap()
}

pub fn arb_graph(max_n: usize, simple: bool) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| build(n, &pairs, simple))
    })
}

pub fn arb_connected_simple(max_n: usize) -> impl Strategy<Value = Multigraph> {
    arb_graph(max_n, true).prop_filter("connected", |g| g.is_connected())
}

/// Minimum feedback vertex set size over all vertex subsets.
pub fn brute_phi(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut best = n;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if acyclic_without(g, mask) {
            best = size;
        }
    }
    best
}

/// Acyclicity of `g` minus the vertices in `mask`, by peeling leaves.
pub fn acyclic_without(g: &Multigraph, mask: u32) -> bool {
    let n = g.vertex_count();
    let alive = |v: usize| mask & (1 << v) == 0;
    let kept: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| alive(u) && alive(v))
        .collect();
    if kept.iter().any(|&(u, v)| u == v) {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &kept {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut removed = vec![false; kept.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for (idx, &(u, v)) in kept.iter().enumerate() {
            if !removed[idx] && (deg[u] == 1 || deg[v] == 1) {
                removed[idx] = true;
                deg[u] -= 1;
                deg[v] -= 1;
                changed = true;
            }
        }
    }
    removed.iter().all(|&r| r)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(idx);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Canonical form by exhaustive search: vertices are ordered by degree,
/// loop count and neighbor degrees, and within that every permutation is
/// tried; the form is the least multiplicity matrix found.
pub fn brute_form(g: &Multigraph) -> Vec<u8> {
    let n = g.vertex_count();
    let key = |v: usize| {
        let mut around: Vec<usize> = g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| w != v)
            .map(|&(w, _)| g.degree(w))
            .collect();
        around.sort_unstable();
        (g.degree(v), g.loop_count(v), around)
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| key(v));
    for v in order {
        match classes.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut header: Vec<u8> = vec![n as u8, g.edge_count() as u8];
    for c in &classes {
        let (d, l, around) = key(c[0]);
        header.extend([c.len() as u8, d as u8, l as u8]);
        header.extend(around.iter().map(|&x| x as u8));
    }
    let choices: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut pick = vec![0usize; classes.len()];
    loop {
        let layout: Vec<usize> = pick
            .iter()
            .zip(&choices)
            .flat_map(|(&k, c)| c[k].iter().copied())
            .collect();
        let mut form = header.clone();
        for a in 0..n {
            for b in a..n {
                form.push(g.multiplicity(layout[a], layout[b]) as u8);
            }
        }
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
        let mut level = 0;
        loop {
            if level == pick.len() {
                return best.unwrap();
            }
            pick[level] += 1;
            if pick[level] < choices[level].len() {
                break;
            }
            pick[level] = 0;
            level += 1;
        }
    }
}

pub fn brute_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && brute_form(a) == brute_form(b)
}

/// Isomorphism classes of connected simple subcubic graphs on `n` labeled
/// vertices, found by filtering all edge subsets.
pub fn labeled_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut forms = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut deg = [0u8; 16];
        let mut ok = true;
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                deg[a] += 1;
                deg[b] += 1;
                if deg[a] > 3 || deg[b] > 3 {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &p)| p)
            .collect();
        let g = Multigraph::new(n, edges).unwrap();
        if g.is_connected() {
            forms.insert(brute_form(&g));
        }
    }
    forms.len()
}

/// `copies` copies of L or R joined in a ring through their degree-two vertices.
pub fn ring_of_copies(piece: &Multigraph, copies: usize) -> Multigraph {
    let spare: Vec<usize> = piece.vertices().filter(|&v| piece.degree(v) == 2).collect();
    let size = piece.vertex_count();
    let mut g = piece.clone();
    for _ in 1..copies {
        g = g.disjoint_union(piece);
    }
    let extra: Vec<(usize, usize)> = (0..copies)
        .map(|c| (c * size + spare[1], ((c + 1) % copies) * size + spare[0]))
        .collect();
    g.with_edges(&extra).unwrap()
}

/// Whether the vertices of `g` can be ordered into a closed walk using
/// each vertex once, i.e. `g` has a spanning cycle.
pub fn has_spanning_cycle(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    match n {
        0 => false,
        1 => g.loop_count(0) > 0,
        2 => g.multiplicity(0, 1) >= 2,
        _ => {
            fn go(g: &Multigraph, path: &mut Vec<usize>, n: usize) -> bool {
                let last = *path.last().unwrap();
                if path.len() == n {
                    return g.multiplicity(last, path[0]) > 0;
                }
                for w in 0..n {
                    if !path.contains(&w) && g.multiplicity(last, w) > 0 {
                        path.push(w);
                        if go(g, path, n) {
                            return true;
                        }
                        path.pop();
                    }
                }
                false
            }
            go(g, &mut vec![0], n)
        }
    }
}

/// Vertex sets (as bitmasks) of cycles of length at most `len`.
pub fn cycle_masks(g: &Multigraph, len: usize) -> Vec<u32> {
    let n = g.vertex_count();
    (1u32..1 << n)
        .filter(|m| m.count_ones() as usize <= len)
        .filter(|&m| {
            let verts: Vec<usize> = (0..n).filter(|v| m & (1 << v) != 0).collect();
            has_spanning_cycle(&g.induced_subgraph(&verts))
        })
        .collect()
}

pub fn cycle_sets(g: &Multigraph, len: usize) -> Vec<std::collections::BTreeSet<usize>> {
    cycle_masks(g, len)
        .into_iter()
        .map(|m| (0..32).filter(|v| m & (1 << v) != 0).collect())
        .collect()
}
