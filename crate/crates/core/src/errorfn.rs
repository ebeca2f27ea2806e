//! Block-wise error values `ε_g`, their sums `r_g`, overlap checks between
//! the two family kinds, and structural classifiers for `r_4` and `r_5`.

use serde::Serialize;
use thiserror::Error;

use crate::blocks::{block_decomposition, bridgeless_pieces, is_block};
use crate::canon::{are_isomorphic, canonical_code};
use crate::catalog::{named, NamedGraph};
use crate::cycles::{contains_subgraph, has_two_disjoint_short_cycles};
use crate::families::{fg_candidates, forced_index, is_member_f, is_member_fg, Families, FamilyError};
use crate::graph::{Multigraph, Vertex};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErrorFnError {
    #[error("girth class must be 4 or 5, got {0}")]
    BadGirthClass(usize),
    #[error("graph is not a block")]
    NotABlock,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("no case of the classification applies (r = {0})")]
    Unclassified(Rational),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `t_4 = 2/9`, `t_5 = 1/5`.
pub fn t(g: usize) -> Result<Rational, ErrorFnError> {
    match g {
        4 => Ok(Rational::new(2, 9)),
        5 => Ok(Rational::new(1, 5)),
        _ => Err(ErrorFnError::BadGirthClass(g)),
    }
}

/// `1 - j(5t - 1) - i t`, before clamping at zero.
pub fn f_formula(g: usize, i: usize, j: usize) -> Result<Rational, ErrorFnError> {
    let t = t(g)?;
    Ok(Rational::ONE - j * (Rational::from(5usize) * t - Rational::ONE) - i * t)
}

/// `1 - t - j(5t - 1) - i t`, before clamping at zero.
pub fn fg_formula(g: usize, i: usize, j: usize) -> Result<Rational, ErrorFnError> {
    Ok(f_formula(g, i, j)? - t(g)?)
}

/// What a block was recognized as when computing its error value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockKind {
    K1,
    K2,
    F { i: usize, j: usize },
    Fg { i: usize, j: usize, k: usize },
    Other,
}

/// `ε_g` of a block together with the membership that produced it.
/// Memberships are only searched where the clamped formula is positive.
pub fn block_value(b: &Multigraph, g: usize) -> Result<(BlockKind, Rational), ErrorFnError> {
    let tg = t(g)?;
    if !is_block(b) {
        return Err(ErrorFnError::NotABlock);
    }
    let (n, m) = (b.vertex_count(), b.edge_count());
    if m == 0 {
        return Ok((BlockKind::K1, Rational::ZERO));
    }
    if n == 2 && m == 1 {
        return Ok((BlockKind::K2, -tg));
    }
    if let Some((i, j)) = forced_index(b) {
        let value = f_formula(g, i, j)?;
        if value > Rational::ZERO && is_member_f(b, i, j) {
            return Ok((BlockKind::F { i, j }, value));
        }
    }
    for (i, j, k) in fg_candidates(n, m, g, usize::MAX) {
        let value = fg_formula(g, i, j)?;
        if value > Rational::ZERO && is_member_fg(b, g, i, j, k) {
            return Ok((BlockKind::Fg { i, j, k }, value));
        }
    }
    Ok((BlockKind::Other, Rational::ZERO))
}

pub fn epsilon(b: &Multigraph, g: usize) -> Result<Rational, ErrorFnError> {
    Ok(block_value(b, g)?.1)
}

/// `r_g(G)`: the sum of `ε_g` over the blocks of `G`.
pub fn r(graph: &Multigraph, g: usize) -> Result<Rational, ErrorFnError> {
    t(g)?;
    block_decomposition(graph)
        .blocks
        .iter()
        .map(|b| epsilon(&b.graph, g))
        .sum()
}

/// `ε_g` evaluated without the positivity shortcut, by searching every
/// membership the size law permits. Used to confirm the shortcut changes
/// nothing.
pub fn epsilon_exhaustive(b: &Multigraph, g: usize) -> Result<Rational, ErrorFnError> {
    let tg = t(g)?;
    if !is_block(b) {
        return Err(ErrorFnError::NotABlock);
    }
    let (n, m) = (b.vertex_count(), b.edge_count());
    if n == 2 && m == 1 {
        return Ok(-tg);
    }
    let mut values = Vec::new();
    if let Some((i, j)) = forced_index(b) {
        if is_member_f(b, i, j) {
            values.push(f_formula(g, i, j)?.max(Rational::ZERO));
        }
    }
    for (i, j, k) in fg_candidates(n, m, g, usize::MAX) {
        if is_member_fg(b, g, i, j, k) {
            values.push(fg_formula(g, i, j)?.max(Rational::ZERO));
        }
    }
    Ok(values.into_iter().max().unwrap_or(Rational::ZERO))
}

/// A graph lying in both some `F^g_{i,j,k}` and some `F_{i',j'}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub g: usize,
    pub fg: (usize, usize, usize),
    pub f: (usize, usize),
    pub fg_value: Rational,
    pub f_value: Rational,
    pub graph: String,
}

impl Overlap {
    pub fn agrees(&self) -> bool {
        self.fg_value == self.f_value
    }
}

/// Which `F^g_{i,j,k}` to scan for overlaps with the plain families.
#[derive(Debug, Clone, Default)]
pub struct OverlapBudget {
    pub indices: Vec<(usize, usize, usize)>,
}

/// Generates every `F^g_{i,j,k}` in the budget and reports each member that
/// also lies in a plain family, with both clamped values.
pub fn check_well_defined(g: usize, budget: &OverlapBudget, families: &Families) -> Result<Vec<Overlap>, ErrorFnError> {
    t(g)?;
    let mut out = Vec::new();
    for &(i, j, k) in &budget.indices {
        for member in families.generate_g(g, i, j, k)?.iter() {
            let Some((fi, fj)) = forced_index(member) else {
                continue;
            };
            if !is_member_f(member, fi, fj) {
                continue;
            }
            out.push(Overlap {
                g,
                fg: (i, j, k),
                f: (fi, fj),
                fg_value: fg_formula(g, i, j)?.max(Rational::ZERO),
                f_value: f_formula(g, fi, fj)?.max(Rational::ZERO),
                graph: canonical_code(member).to_hex(),
            });
        }
    }
    Ok(out)
}

/// One piece left after deleting all cut-edges, and what it was recognized as.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub vertices: Vec<Vertex>,
    pub kind: PieceKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceKind {
    K1,
    K3,
    K4Plus,
    L,
    R,
    F { i: usize, j: usize },
    Fg { g: usize, i: usize, j: usize, k: usize },
    Other,
}

impl PieceKind {
    fn is_f(&self, i: usize, j_range: std::ops::RangeInclusive<usize>) -> bool {
        match *self {
            PieceKind::F { i: pi, j } => pi == i && j_range.contains(&j),
            PieceKind::K3 => i == 3 && j_range.contains(&0),
            PieceKind::K4Plus => i == 2 && j_range.contains(&1),
            PieceKind::L => i == 3 && j_range.contains(&1),
            PieceKind::R => i == 4 && j_range.contains(&2),
            _ => false,
        }
    }
}

fn piece_kind(piece: &Multigraph, g: usize) -> PieceKind {
    if piece.edge_count() == 0 {
        return PieceKind::K1;
    }
    for (name, kind) in [
        (NamedGraph::K3, PieceKind::K3),
        (NamedGraph::K4Plus, PieceKind::K4Plus),
        (NamedGraph::L, PieceKind::L),
        (NamedGraph::R, PieceKind::R),
    ] {
        let h = named(name);
        if h.vertex_count() == piece.vertex_count() && h.edge_count() == piece.edge_count() && are_isomorphic(&h, piece)
        {
            return kind;
        }
    }
    if let Some((i, j)) = forced_index(piece) {
        if is_member_f(piece, i, j) {
            return PieceKind::F { i, j };
        }
    }
    for (i, j, k) in fg_candidates(piece.vertex_count(), piece.edge_count(), g, 3) {
        if is_member_fg(piece, g, i, j, k) {
            return PieceKind::Fg { g, i, j, k };
        }
    }
    PieceKind::Other
}

/// Bridgeless pieces of `G` with their recognized kinds (relative to girth
/// class `g` for the padded families).
pub fn pieces(graph: &Multigraph, g: usize) -> Vec<Piece> {
    bridgeless_pieces(graph)
        .into_iter()
        .map(|vertices| {
            let kind = piece_kind(&graph.induced_subgraph(&vertices), g);
            Piece { vertices, kind }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RClassification {
    pub g: usize,
    /// `"1"`, `"2"`, `"3a"`, … naming the statement that holds.
    pub case_id: &'static str,
    /// The value of `r_g` the case asserts, when it asserts one exactly.
    pub implied: Option<Rational>,
    /// True for `r_g ≤ 0`.
    pub nonpositive: bool,
    pub r: Rational,
    pub pieces: Vec<Piece>,
    pub blocks: Vec<BlockKind>,
}

impl RClassification {
    /// The case's stated value agrees with the independently computed `r_g`.
    pub fn consistent(&self) -> bool {
        match self.implied {
            Some(v) => v == self.r,
            None => !self.nonpositive || self.r <= Rational::ZERO,
        }
    }
}

fn count(pieces: &[Piece], pred: impl Fn(&PieceKind) -> bool) -> usize {
    pieces.iter().filter(|p| pred(&p.kind)).count()
}

/// Pieces consist of exactly one piece satisfying `head` and any number
/// (at least `min_rest`) satisfying `rest`.
fn one_plus(
    pieces: &[Piece],
    head: impl Fn(&PieceKind) -> bool,
    rest: impl Fn(&PieceKind) -> bool,
    min_rest: usize,
) -> bool {
    (0..pieces.len()).any(|h| {
        head(&pieces[h].kind)
            && pieces.len() > min_rest
            && pieces.iter().enumerate().all(|(x, p)| x == h || rest(&p.kind))
    })
}

fn has_block(graph: &Multigraph, names: &[NamedGraph]) -> bool {
    block_decomposition(graph)
        .blocks
        .iter()
        .any(|b| names.iter().any(|&name| are_isomorphic(&b.graph, &named(name))))
}

/// Classifies a connected subcubic graph with no two disjoint triangles.
pub fn classify_r4(graph: &Multigraph) -> Result<RClassification, ErrorFnError> {
    if !graph.is_connected() || graph.vertex_count() == 0 {
        return Err(ErrorFnError::PreconditionViolated("graph must be connected"));
    }
    if has_two_disjoint_short_cycles(graph, 4) {
        return Err(ErrorFnError::PreconditionViolated("two disjoint triangles"));
    }
    let r = r(graph, 4)?;
    let pieces = pieces(graph, 4);
    let blocks = block_kinds(graph, 4)?;
    let ninths = |x: i64| Some(Rational::new(x, 9));
    let is_l = |k: &PieceKind| matches!(k, PieceKind::L);
    let is_k4p = |k: &PieceKind| matches!(k, PieceKind::K4Plus);
    let is_x = |k: &PieceKind| k.is_f(3, 2..=2) || k.is_f(4, 0..=0);
    let with_k = |case_id, implied: Option<Rational>, nonpositive| RClassification {
        g: 4,
        case_id,
        implied,
        nonpositive,
        r,
        pieces: pieces.clone(),
        blocks: blocks.clone(),
    };

    let special = [NamedGraph::K3, NamedGraph::K4, NamedGraph::K4Plus];
    if let Some(&name) = special.iter().find(|&&name| are_isomorphic(graph, &named(name))) {
        let value = match name {
            NamedGraph::K3 => 3,
            NamedGraph::K4 => 6,
            _ => 4,
        };
        return Ok(with_k("1", ninths(value), false));
    }
    if forced_index(graph) == Some((2, 2)) && is_member_f(graph, 2, 2) {
        return Ok(with_k("1", ninths(3), false));
    }
    if pieces.len() >= 2 && one_plus(&pieces, is_k4p, is_l, 1) {
        return Ok(with_k("2", ninths(4), false));
    }
    if pieces.len() >= 2
        && count(&pieces, is_k4p) == 1
        && count(&pieces, is_x) == 1
        && pieces.iter().all(|p| is_k4p(&p.kind) || is_x(&p.kind) || is_l(&p.kind))
    {
        return Ok(with_k("3a", ninths(3), false));
    }
    if pieces.len() >= 2 && one_plus(&pieces, |k| matches!(k, PieceKind::K3), is_l, 1) {
        return Ok(with_k("3b", ninths(3), false));
    }
    let small_block = has_block(graph, &[NamedGraph::K4Plus, NamedGraph::K3]);
    if r == Rational::new(2, 9) && small_block {
        return Ok(with_k("4a", ninths(2), false));
    }
    if pieces.iter().all(|p| p.kind.is_f(3, 1..=1)) {
        return Ok(with_k("4b", ninths(2), false));
    }
    if r == Rational::new(1, 9) && small_block {
        return Ok(with_k("5a", ninths(1), false));
    }
    let is_y = |k: &PieceKind| is_x(k) || matches!(k, PieceKind::Fg { i: 3, j: 0, k, .. } if *k >= 1);
    if one_plus(&pieces, is_y, |k| k.is_f(3, 1..=1), 0) {
        return Ok(with_k("5b", ninths(1), false));
    }
    if r <= Rational::ZERO {
        return Ok(with_k("6", None, true));
    }
    Err(ErrorFnError::Unclassified(r))
}

/// Classifies a connected subcubic graph with no two disjoint cycles of
/// length less than five.
pub fn classify_r5(graph: &Multigraph) -> Result<RClassification, ErrorFnError> {
    if !graph.is_connected() || graph.vertex_count() == 0 {
        return Err(ErrorFnError::PreconditionViolated("graph must be connected"));
    }
    if has_two_disjoint_short_cycles(graph, 5) {
        return Err(ErrorFnError::PreconditionViolated(
            "two disjoint cycles of length below five",
        ));
    }
    let r = r(graph, 5)?;
    let pieces = pieces(graph, 5);
    let blocks = block_kinds(graph, 5)?;
    let fifths = |x: i64| Some(Rational::new(x, 5));
    let with_k = |case_id, implied: Option<Rational>, nonpositive| RClassification {
        g: 5,
        case_id,
        implied,
        nonpositive,
        r,
        pieces: pieces.clone(),
        blocks: blocks.clone(),
    };

    if are_isomorphic(graph, &named(NamedGraph::K4)) || contains_subgraph(graph, &named(NamedGraph::K4Plus)) {
        return Ok(with_k("1", None, false));
    }
    if one_plus(&pieces, |k| k.is_f(3, 0..=3), |k| k.is_f(4, 0..=3), 0) {
        return Ok(with_k("2", fifths(2), false));
    }
    let f3_block = block_decomposition(graph)
        .blocks
        .iter()
        .any(|b| forced_index(&b.graph).is_some_and(|(i, j)| i == 3 && j <= 2 && is_member_f(&b.graph, i, j)));
    if r == Rational::new(1, 5) && f3_block {
        return Ok(with_k("3a", fifths(1), false));
    }
    let in_f31k = fg_candidates(graph.vertex_count(), graph.edge_count(), 5, 3)
        .into_iter()
        .any(|(i, j, k)| (i, j) == (3, 1) && is_member_fg(graph, 5, i, j, k));
    if in_f31k {
        return Ok(with_k("3b", fifths(1), false));
    }
    let is_z = |k: &PieceKind| k.is_f(4, 0..=4) || matches!(k, PieceKind::Fg { i: 3, j: 0, .. });
    if pieces.iter().all(|p| is_z(&p.kind)) {
        return Ok(with_k("3c", fifths(1), false));
    }
    if r <= Rational::ZERO {
        return Ok(with_k("4", None, true));
    }
    Err(ErrorFnError::Unclassified(r))
}

fn block_kinds(graph: &Multigraph, g: usize) -> Result<Vec<BlockKind>, ErrorFnError> {
    block_decomposition(graph)
        .blocks
        .iter()
        .map(|b| Ok(block_value(&b.graph, g)?.0))
        .collect()
}
