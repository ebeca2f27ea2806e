//! The families `F_{i,j}` (built from the one-vertex loop by subdivisions and
//! the `∘` operation) and `F^g_{i,j,k}` (a member of `F_{i,j}` plus `k` copies
//! of L or R, joined by `k + 1` new edges into a 2-connected graph).
//!
//! Generation is memoized per index with canonical dedup. Membership is
//! decided structurally: since suppressing any degree-two vertex of a member
//! of `F_{i,j}` lands in `F_{i-1,j}`, a graph is reduced to its cubic core and
//! then peeled by undoing one `∘` at a time.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blocks::is_nonseparable;
use crate::canon::{canonical_code, canonical_labeling, CanonicalCode};
use crate::catalog::{named, NamedGraph};
use crate::graph::{Multigraph, Vertex};

/// Vertex cap applied to family generation unless configured otherwise.
pub const DEFAULT_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family members would have {vertices} vertices, above the cap of {cap}")]
    OutOfBudget { vertices: usize, cap: usize },
    #[error("girth class must be 4 or 5, got {0}")]
    BadGirthClass(usize),
    #[error("catalog graph {name} does not match the generated family: {detail}")]
    CatalogMismatch { name: &'static str, detail: String },
}

/// Coordinates of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind")]
pub enum FamilyIndex {
    F { i: usize, j: usize },
    Fg { g: usize, i: usize, j: usize, k: usize },
}

impl FamilyIndex {
    /// `(|V|, |E|)` shared by every member.
    pub fn size(&self) -> (usize, usize) {
        match *self {
            FamilyIndex::F { i, j } => (i + 3 * j, i + 5 * j),
            FamilyIndex::Fg { g, i, j, k } => {
                let (cv, ce) = copy_size(g);
                (i + 3 * j + k * cv, i + 5 * j + k * ce + k + 1)
            }
        }
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyIndex::F { i, j } => write!(f, "F({i},{j})"),
            FamilyIndex::Fg { g, i, j, k } => write!(f, "F{g}({i},{j},{k})"),
        }
    }
}

/// The graph whose copies pad `F^g`: L for girth class 4, R for class 5.
pub fn copy_graph(g: usize) -> Multigraph {
    if g == 4 {
        named(NamedGraph::L)
    } else {
        named(NamedGraph::R)
    }
}

fn copy_size(g: usize) -> (usize, usize) {
    if g == 4 {
        (6, 8)
    } else {
        (10, 14)
    }
}

fn check_class(g: usize) -> Result<(), FamilyError> {
    if g == 4 || g == 5 {
        Ok(())
    } else {
        Err(FamilyError::BadGirthClass(g))
    }
}

type Members = Arc<Vec<Multigraph>>;

/// Memoized family generator. Generated members are stored in canonical
/// form, sorted by canonical code.
pub struct Families {
    max_vertices: usize,
    plain: Mutex<HashMap<(usize, usize), Members>>,
    padded: Mutex<HashMap<(usize, usize, usize, usize), Members>>,
}

impl Default for Families {
    fn default() -> Self {
        Families::new(DEFAULT_MAX_VERTICES)
    }
}

impl Families {
    pub fn new(max_vertices: usize) -> Self {
        Families {
            max_vertices,
            plain: Mutex::default(),
            padded: Mutex::default(),
        }
    }

    /// Process-wide generator with the default vertex cap.
    pub fn global() -> &'static Families {
        static GLOBAL: OnceLock<Families> = OnceLock::new();
        GLOBAL.get_or_init(Families::default)
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    /// All of `F_{i,j}` up to isomorphism. Empty when `i = 0` or `j > i`.
    pub fn generate(&self, i: usize, j: usize) -> Result<Members, FamilyError> {
        if i == 0 || j > i {
            return Ok(Arc::default());
        }
        let vertices = i + 3 * j;
        if vertices > self.max_vertices {
            return Err(FamilyError::OutOfBudget {
                vertices,
                cap: self.max_vertices,
            });
        }
        if let Some(hit) = self.plain.lock().unwrap().get(&(i, j)) {
            return Ok(hit.clone());
        }
        let members = if (i, j) == (1, 0) {
            vec![named(NamedGraph::C1)]
        } else {
            let from_subdivision = self.generate(i - 1, j)?;
            let from_circ = if j >= 1 {
                self.generate(i, j - 1)?
            } else {
                Arc::default()
            };
            let subdivided = from_subdivision
                .par_iter()
                .flat_map_iter(|h| (0..h.edge_count()).map(move |e| h.subdivide_edge(e)));
            let circled = from_circ.par_iter().flat_map_iter(|h| {
                let m = h.edge_count();
                let hubs: Vec<Vertex> = h.vertices().filter(|&a| h.degree(a) == 2).collect();
                hubs.into_iter()
                    .flat_map(move |a| (0..m).flat_map(move |e1| (e1..m).map(move |e2| h.circ_op(e1, e2, a))))
            });
            subdivided
                .chain(circled)
                .filter_map(Result::ok)
                .fold(BTreeMap::new, |mut acc, g| {
                    let (code, g) = canonical_pair(&g);
                    acc.entry(code).or_insert(g);
                    acc
                })
                .reduce(BTreeMap::new, merge_maps)
                .into_values()
                .collect()
        };
        let members = Arc::new(members);
        self.plain.lock().unwrap().insert((i, j), members.clone());
        Ok(members)
    }

    /// All of `F^g_{i,j,k}` up to isomorphism; empty when `i - j < 2`.
    pub fn generate_g(&self, g: usize, i: usize, j: usize, k: usize) -> Result<Members, FamilyError> {
        check_class(g)?;
        if i == 0 || j > i || i - j < 2 {
            return Ok(Arc::default());
        }
        let (vertices, _) = FamilyIndex::Fg { g, i, j, k }.size();
        if vertices > self.max_vertices {
            return Err(FamilyError::OutOfBudget {
                vertices,
                cap: self.max_vertices,
            });
        }
        if let Some(hit) = self.padded.lock().unwrap().get(&(g, i, j, k)) {
            return Ok(hit.clone());
        }
        let copy = copy_graph(g);
        let bases = self.generate(i, j)?;
        let found = bases
            .par_iter()
            .fold(BTreeMap::new, |mut acc, h| {
                let mut union = h.clone();
                let mut part = vec![0usize; h.vertex_count()];
                for p in 1..=k {
                    union = union.disjoint_union(&copy);
                    part.resize(union.vertex_count(), p);
                }
                let spare: Vec<Vertex> = union.vertices().filter(|&v| union.degree(v) == 2).collect();
                let mut used = vec![false; spare.len()];
                join_spare(
                    &spare,
                    0,
                    k + 1,
                    &part,
                    k > 0,
                    &mut used,
                    &mut Vec::new(),
                    &mut |extra| {
                        if let Ok(candidate) = union.with_edges(extra) {
                            if is_nonseparable(&candidate) {
                                let (code, g) = canonical_pair(&candidate);
                                acc.entry(code).or_insert(g);
                            }
                        }
                    },
                );
                acc
            })
            .reduce(BTreeMap::new, merge_maps);
        let members = Arc::new(found.into_values().collect::<Vec<_>>());
        self.padded.lock().unwrap().insert((g, i, j, k), members.clone());
        Ok(members)
    }

    /// The two girth-five members of `F_{3,3}` matched against the
    /// transcribed R1 and R2, failing loudly on any mismatch.
    pub fn validate_r_pair(&self) -> Result<[Multigraph; 2], FamilyError> {
        let girth5: Vec<Multigraph> = self
            .generate(3, 3)?
            .iter()
            .filter(|g| crate::cycles::girth(g).is_some_and(|x| x >= 5))
            .cloned()
            .collect();
        if girth5.len() != 2 {
            return Err(FamilyError::CatalogMismatch {
                name: "R1/R2",
                detail: format!("expected two girth-5 members of F(3,3), found {}", girth5.len()),
            });
        }
        let codes: Vec<CanonicalCode> = girth5.iter().map(canonical_code).collect();
        let mut out = Vec::new();
        for (name, which) in [("R1", NamedGraph::R1), ("R2", NamedGraph::R2)] {
            let g = named(which);
            let code = canonical_code(&g);
            if !codes.contains(&code) {
                return Err(FamilyError::CatalogMismatch {
                    name,
                    detail: "not a girth-5 member of F(3,3)".into(),
                });
            }
            out.push(g);
        }
        if canonical_code(&out[0]) == canonical_code(&out[1]) {
            return Err(FamilyError::CatalogMismatch {
                name: "R1/R2",
                detail: "transcriptions are isomorphic".into(),
            });
        }
        Ok([out.remove(0), out.remove(0)])
    }
}

fn merge_maps(
    mut a: BTreeMap<CanonicalCode, Multigraph>,
    b: BTreeMap<CanonicalCode, Multigraph>,
) -> BTreeMap<CanonicalCode, Multigraph> {
    for (code, g) in b {
        a.entry(code).or_insert(g);
    }
    a
}

fn canonical_pair(g: &Multigraph) -> (CanonicalCode, Multigraph) {
    let (code, perm) = canonical_labeling(g, None);
    (code, g.relabel(&perm))
}

/// Enumerates sets of `need` new edges on distinct spare vertices; with
/// `cross_only`, both ends of every edge lie in different parts.
#[allow(clippy::too_many_arguments)]
fn join_spare(
    spare: &[Vertex],
    start: usize,
    need: usize,
    part: &[usize],
    cross_only: bool,
    used: &mut Vec<bool>,
    chosen: &mut Vec<(Vertex, Vertex)>,
    emit: &mut impl FnMut(&[(Vertex, Vertex)]),
) {
    if chosen.len() == need {
        emit(chosen);
        return;
    }
    let Some(first) = (start..spare.len()).find(|&x| !used[x]) else {
        return;
    };
    let free = (first..spare.len()).filter(|&x| !used[x]).count();
    if free < 2 * (need - chosen.len()) {
        return;
    }
    used[first] = true;
    for second in first + 1..spare.len() {
        if used[second] || (cross_only && part[spare[first]] == part[spare[second]]) {
            continue;
        }
        used[second] = true;
        chosen.push((spare[first], spare[second]));
        join_spare(spare, first + 1, need, part, cross_only, used, chosen, emit);
        chosen.pop();
        used[second] = false;
    }
    used[first] = false;
    // leave `first` unmatched
    join_spare(spare, first + 1, need, part, cross_only, used, chosen, emit);
}

/// `F_{i,j}` from the process-wide generator.
pub fn generate_family(i: usize, j: usize) -> Result<Members, FamilyError> {
    Families::global().generate(i, j)
}

/// `F^g_{i,j,k}` from the process-wide generator.
pub fn generate_family_g(g: usize, i: usize, j: usize, k: usize) -> Result<Members, FamilyError> {
    Families::global().generate_g(g, i, j, k)
}

/// The only index `(i, j)` compatible with `|V| = i + 3j` and `|E| = i + 5j`.
pub fn forced_index(g: &Multigraph) -> Option<(usize, usize)> {
    index_for(g.vertex_count(), g.edge_count())
}

fn index_for(n: usize, m: usize) -> Option<(usize, usize)> {
    if m < n || !(m - n).is_multiple_of(2) {
        return None;
    }
    let j = (m - n) / 2;
    let i = n.checked_sub(3 * j)?;
    (i >= 1 && j <= i).then_some((i, j))
}

/// Returns `(i, j)` iff `g ∈ F_{i,j}`.
pub fn member_of_f(g: &Multigraph) -> Option<(usize, usize)> {
    let (i, j) = forced_index(g)?;
    decide_f(g, i, j, &mut HashSet::new()).map(|_| (i, j))
}

/// Whether `g ∈ F_{i,j}` for the given index.
pub fn is_member_f(g: &Multigraph, i: usize, j: usize) -> bool {
    forced_index(g) == Some((i, j)) && decide_f(g, i, j, &mut HashSet::new()).is_some()
}

/// A derivation of `g` from C1: graphs `C1 = G_0, …, G_t ≅ g` where each
/// `G_{s+1}` is a subdivision of `G_s` or `G_s ∘ (e1, e2, a)` up to
/// isomorphism. `None` when `g` lies in no `F_{i,j}`.
pub fn derivation(g: &Multigraph) -> Option<Vec<Multigraph>> {
    let (i, j) = forced_index(g)?;
    let mut chain = decide_f(g, i, j, &mut HashSet::new())?;
    chain.reverse();
    Some(chain)
}

/// On success returns the chain from `g` down to C1.
fn decide_f(g: &Multigraph, i: usize, j: usize, failed: &mut HashSet<CanonicalCode>) -> Option<Vec<Multigraph>> {
    let n = g.vertex_count();
    if n != i + 3 * j || g.edge_count() != i + 5 * j || n == 0 {
        return None;
    }
    if g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    if n == 1 {
        return ((i, j) == (1, 0)).then(|| vec![g.clone()]);
    }
    let mut chain = if let Some(v) = g.vertices().find(|&v| g.degree(v) == 2) {
        // any degree-two vertex may be suppressed
        let h = g.suppress_vertex(v).ok()?;
        if i < 2 {
            return None;
        }
        decide_f(&h, i - 1, j, failed)?
    } else {
        if i != j {
            return None;
        }
        let code = canonical_code(g);
        if failed.contains(&code) {
            return None;
        }
        let found = undo_circ(g).into_iter().find_map(|h| decide_f(&h, i, j - 1, failed));
        if found.is_none() {
            failed.insert(code);
        }
        found?
    };
    chain.insert(0, g.clone());
    Some(chain)
}

/// Every graph `H` with `g = H ∘ (e1, e2, a)`, found by deleting a hub
/// vertex and suppressing two of its former neighbors. Duplicates up to
/// isomorphism are removed.
fn undo_circ(g: &Multigraph) -> Vec<Multigraph> {
    let mut seen: BTreeMap<CanonicalCode, Multigraph> = BTreeMap::new();
    for hub in g.vertices() {
        let nbrs = g.neighbors(hub);
        if nbrs.len() != 3 || g.degree(hub) != 3 {
            continue;
        }
        let without = g.delete_vertex(hub);
        let shift = |x: Vertex| if x > hub { x - 1 } else { x };
        for keep in 0..3 {
            let mut subdividers: Vec<Vertex> = (0..3).filter(|&t| t != keep).map(|t| shift(nbrs[t])).collect();
            subdividers.sort_unstable();
            // suppress the larger id first so the smaller id is unaffected
            let Ok(h) = without.suppress_vertex(subdividers[1]) else {
                continue;
            };
            let Ok(h) = h.suppress_vertex(subdividers[0]) else {
                continue;
            };
            seen.entry(canonical_code(&h)).or_insert(h);
        }
    }
    seen.into_values().collect()
}

/// Returns `(i, j, k)` iff `g ∈ F^g_{i,j,k}` for some `i ≤ 3`.
pub fn member_of_fg(g: &Multigraph, class: usize) -> Option<(usize, usize, usize)> {
    member_of_fg_bounded(g, class, 3)
}

/// As [`member_of_fg`] with an explicit bound on `i`.
pub fn member_of_fg_bounded(g: &Multigraph, class: usize, max_i: usize) -> Option<(usize, usize, usize)> {
    fg_candidates(g.vertex_count(), g.edge_count(), class, max_i)
        .into_iter()
        .find(|&(i, j, k)| is_member_fg(g, class, i, j, k))
}

/// Indices `(i, j, k)` with `i - j ≥ 2` and `i ≤ max_i` whose size law
/// matches `n` vertices and `m` edges, in increasing `k`.
pub fn fg_candidates(n: usize, m: usize, class: usize, max_i: usize) -> Vec<(usize, usize, usize)> {
    if check_class(class).is_err() {
        return Vec::new();
    }
    let (cv, ce) = copy_size(class);
    let mut out = Vec::new();
    for k in 0.. {
        if k * cv >= n {
            break;
        }
        let Some(rest_m) = m.checked_sub(k * ce + k + 1) else {
            break;
        };
        if let Some((i, j)) = index_for(n - k * cv, rest_m) {
            if i <= max_i && i >= j + 2 {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Whether `g ∈ F^g_{i,j,k}` for girth class `class`.
pub fn is_member_fg(g: &Multigraph, class: usize, i: usize, j: usize, k: usize) -> bool {
    if check_class(class).is_err() || i < j + 2 || !is_nonseparable(g) {
        return false;
    }
    if (g.vertex_count(), g.edge_count()) != (FamilyIndex::Fg { g: class, i, j, k }).size() {
        return false;
    }
    if k == 0 {
        return (0..g.edge_count()).any(|e| is_member_f(&g.delete_edge(e).unwrap(), i, j));
    }
    let (cv, ce) = copy_size(class);
    let pieces = copy_pieces(g, cv, ce, &canonical_code(&copy_graph(class)));
    pick_pieces(g, &pieces, 0, k, &mut Vec::new(), &mut |rest| is_member_f(rest, i, j))
}

/// Vertex sets inducing a copy of L or R that are attached to the rest of
/// the graph by exactly two edges.
fn copy_pieces(g: &Multigraph, cv: usize, ce: usize, copy_code: &CanonicalCode) -> Vec<Vec<Vertex>> {
    let m = g.edge_count();
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let cut = g.delete_edges(&[e, f]).unwrap();
            let comps = cut.components();
            if comps.len() != 2 {
                continue;
            }
            for comp in comps {
                if comp.len() != cv || found.contains(&comp) {
                    continue;
                }
                let sub = g.induced_subgraph(&comp);
                if sub.edge_count() == ce && canonical_code(&sub) == *copy_code {
                    found.push(comp);
                }
            }
        }
    }
    found.sort();
    found
}

fn pick_pieces(
    g: &Multigraph,
    pieces: &[Vec<Vertex>],
    start: usize,
    k: usize,
    picked: &mut Vec<usize>,
    accept: &mut impl FnMut(&Multigraph) -> bool,
) -> bool {
    if picked.len() == k {
        let mut taken = vec![false; g.vertex_count()];
        for &p in picked.iter() {
            for &v in &pieces[p] {
                taken[v] = true;
            }
        }
        let rest: Vec<Vertex> = g.vertices().filter(|&v| !taken[v]).collect();
        return accept(&g.induced_subgraph(&rest));
    }
    for p in start..pieces.len() {
        let clash = picked.iter().any(|&q| pieces[q].iter().any(|v| pieces[p].contains(v)));
        if clash {
            continue;
        }
        picked.push(p);
        if pick_pieces(g, pieces, p + 1, k, picked, accept) {
            return true;
        }
        picked.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::cycles::{girth, has_two_disjoint_short_cycles};

    #[test]
    fn small_families() {
        let f11 = generate_family(1, 1).unwrap();
        assert_eq!(f11.len(), 1);
        assert!(are_isomorphic(&f11[0], &named(NamedGraph::K4)));
        let f21 = generate_family(2, 1).unwrap();
        assert_eq!(f21.len(), 1);
        assert!(are_isomorphic(&f21[0], &named(NamedGraph::K4Plus)));
        let f40 = generate_family(4, 0).unwrap();
        assert_eq!(f40.len(), 1);
        assert!(are_isomorphic(&f40[0], &named(NamedGraph::Cycle(4))));
        let f10 = generate_family(1, 0).unwrap();
        assert_eq!(f10[0].edges(), &[(0, 0)]);
    }

    #[test]
    fn f31_has_three_members_and_l_is_the_triangle_free_one() {
        let f31 = generate_family(3, 1).unwrap();
        assert_eq!(f31.len(), 3);
        let triangle_free: Vec<_> = f31.iter().filter(|g| girth(g).unwrap() >= 4).collect();
        assert_eq!(triangle_free.len(), 1);
        assert!(are_isomorphic(triangle_free[0], &named(NamedGraph::L)));
        // each is a subdivision of K4+
        let k4p = named(NamedGraph::K4Plus);
        let subdivisions: Vec<CanonicalCode> = (0..k4p.edge_count())
            .map(|e| canonical_code(&k4p.subdivide_edge(e).unwrap()))
            .collect();
        assert!(f31.iter().all(|g| subdivisions.contains(&canonical_code(g))));
        for h in f31.iter() {
            for e in 0..h.edge_count() {
                assert!(girth(&h.delete_edge(e).unwrap()).is_some_and(|x| x <= 4));
            }
        }
    }

    #[test]
    fn invalid_indices_are_empty() {
        assert!(generate_family(0, 0).unwrap().is_empty());
        assert!(generate_family(2, 3).unwrap().is_empty());
        for k in 0..3 {
            assert!(generate_family_g(4, 1, 1, k).unwrap().is_empty());
        }
        assert!(matches!(
            generate_family(7, 5),
            Err(FamilyError::OutOfBudget { vertices: 22, cap: 20 })
        ));
    }

    #[test]
    fn f22_facts() {
        let f22 = generate_family(2, 2).unwrap();
        let q3 = canonical_code(&named(NamedGraph::Q3));
        let v8 = canonical_code(&named(NamedGraph::V8));
        let codes: Vec<_> = f22.iter().map(canonical_code).collect();
        assert!(codes.contains(&q3) && codes.contains(&v8));
        for g in f22.iter() {
            assert!(has_two_disjoint_short_cycles(g, 5));
            let code = canonical_code(g);
            if code != q3 && code != v8 {
                let tri = crate::cycles::short_cycles(g, 4);
                let short = crate::cycles::short_cycles(g, 5);
                assert!(tri.iter().any(|t| short.iter().any(|c| crate::cycles::disjoint(t, c))));
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert_eq!(member_of_f(&named(NamedGraph::L)), Some((3, 1)));
        assert_eq!(member_of_f(&named(NamedGraph::Q3)), Some((2, 2)));
        assert_eq!(member_of_f(&named(NamedGraph::V8)), Some((2, 2)));
        assert_eq!(member_of_f(&named(NamedGraph::Petersen)), None);
        assert_eq!(member_of_f(&named(NamedGraph::R)), Some((4, 2)));
        assert_eq!(member_of_f(&named(NamedGraph::R1)), Some((3, 3)));
        assert_eq!(member_of_f(&named(NamedGraph::R2)), Some((3, 3)));
        assert_eq!(member_of_f(&named(NamedGraph::C1)), Some((1, 0)));
        assert_eq!(member_of_f(&named(NamedGraph::Cycle(7))), Some((7, 0)));
        assert_eq!(member_of_f(&named(NamedGraph::K33)), None);
        // outside every index range the error functions consult
        assert_eq!(member_of_f(&named(NamedGraph::Dodecahedron)), Some((5, 5)));
    }

    fn one_step_extensions(h: &Multigraph) -> Vec<CanonicalCode> {
        let m = h.edge_count();
        let mut out: Vec<CanonicalCode> = (0..m).map(|e| canonical_code(&h.subdivide_edge(e).unwrap())).collect();
        for a in h.vertices().filter(|&a| h.degree(a) == 2) {
            for e1 in 0..m {
                for e2 in e1..m {
                    out.push(canonical_code(&h.circ_op(e1, e2, a).unwrap()));
                }
            }
        }
        out
    }

    #[test]
    fn derivations_replay_forward() {
        for name in [NamedGraph::Q3, NamedGraph::R, NamedGraph::R1, NamedGraph::Dodecahedron] {
            let g = named(name);
            let chain = derivation(&g).unwrap();
            assert_eq!(chain[0].edges(), &[(0, 0)]);
            assert!(are_isomorphic(chain.last().unwrap(), &g));
            for pair in chain.windows(2) {
                assert!(
                    one_step_extensions(&pair[0]).contains(&canonical_code(&pair[1])),
                    "{name}"
                );
            }
        }
        assert!(derivation(&named(NamedGraph::K33)).is_none());
    }

    #[test]
    fn fg_membership_examples() {
        assert_eq!(member_of_fg(&named(NamedGraph::K33), 4), Some((3, 1, 0)));
        assert_eq!(member_of_fg(&named(NamedGraph::K33), 5), Some((3, 1, 0)));
        assert_eq!(member_of_fg(&named(NamedGraph::Q3), 4), None);
        assert_eq!(member_of_fg(&named(NamedGraph::Cycle(5)), 5), None);
        let theta = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(member_of_fg(&theta, 4), Some((2, 0, 0)));
    }

    #[test]
    fn k33_is_generated() {
        let fg = generate_family_g(4, 3, 1, 0).unwrap();
        let k33 = canonical_code(&named(NamedGraph::K33));
        assert!(fg.iter().any(|g| canonical_code(g) == k33));
    }

    #[test]
    fn padded_family_sizes() {
        let fg = generate_family_g(5, 3, 0, 1).unwrap();
        assert!(!fg.is_empty());
        assert!(fg
            .iter()
            .all(|g| g.vertex_count() == 13 && g.edge_count() == 3 + 14 + 2));
    }

    #[test]
    fn r_pair_matches_transcription() {
        Families::global().validate_r_pair().unwrap();
    }
}
