//! Fixed labelings of every special graph used by the library.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// One vertex with one loop.
    C1,
    /// `Cycle(1)` is C1 and `Cycle(2)` is a digon.
    Cycle(usize),
    K3,
    K4,
    /// K4 with one edge subdivided.
    K4Plus,
    /// K4 with a perfect matching subdivided.
    L,
    Q3,
    /// The Möbius ladder on eight vertices.
    V8,
    K33,
    Petersen,
    /// Petersen minus an edge.
    R,
    R1,
    R2,
    Dodecahedron,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown graph name `{0}`")]
pub struct UnknownName(pub String);

impl NamedGraph {
    pub const ALL: [NamedGraph; 13] = [
        NamedGraph::C1,
        NamedGraph::K3,
        NamedGraph::K4,
        NamedGraph::K4Plus,
        NamedGraph::L,
        NamedGraph::Q3,
        NamedGraph::V8,
        NamedGraph::K33,
        NamedGraph::Petersen,
        NamedGraph::R,
        NamedGraph::R1,
        NamedGraph::R2,
        NamedGraph::Dodecahedron,
    ];
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::C1 => f.write_str("C1"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::K3 => f.write_str("K3"),
            NamedGraph::K4 => f.write_str("K4"),
            NamedGraph::K4Plus => f.write_str("K4+"),
            NamedGraph::L => f.write_str("L"),
            NamedGraph::Q3 => f.write_str("Q3"),
            NamedGraph::V8 => f.write_str("V8"),
            NamedGraph::K33 => f.write_str("K33"),
            NamedGraph::Petersen => f.write_str("Petersen"),
            NamedGraph::R => f.write_str("R"),
            NamedGraph::R1 => f.write_str("R1"),
            NamedGraph::R2 => f.write_str("R2"),
            NamedGraph::Dodecahedron => f.write_str("Dodecahedron"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = UnknownName;

    /// Case-insensitive; `C<n>` and `cycle<n>` name cycles.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-', ' ', ','], "");
        let named = match key.as_str() {
            "c1" | "loop" => NamedGraph::C1,
            "k3" | "triangle" => NamedGraph::K3,
            "k4" => NamedGraph::K4,
            "k4+" | "k4plus" => NamedGraph::K4Plus,
            "l" => NamedGraph::L,
            "q3" | "cube" => NamedGraph::Q3,
            "v8" | "wagner" => NamedGraph::V8,
            "k33" => NamedGraph::K33,
            "petersen" => NamedGraph::Petersen,
            "r" => NamedGraph::R,
            "r1" => NamedGraph::R1,
            "r2" => NamedGraph::R2,
            "dodecahedron" | "dodeca" => NamedGraph::Dodecahedron,
            other => {
                let digits = other.strip_prefix("cycle").or_else(|| other.strip_prefix('c'));
                match digits.and_then(|d| d.parse::<usize>().ok()) {
                    Some(n) if n >= 1 => NamedGraph::Cycle(n),
                    _ => return Err(UnknownName(s.to_string())),
                }
            }
        };
        Ok(named)
    }
}

/// Looks up a graph by a case-insensitive catalog name.
pub fn named_by_str(name: &str) -> Result<Multigraph, UnknownName> {
    name.parse::<NamedGraph>().map(named)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.iter().copied()).expect("catalog graphs are subcubic")
}

fn cycle(n: usize) -> Multigraph {
    assert!(n >= 1, "cycles have at least one vertex");
    match n {
        1 => graph(1, &[(0, 0)]),
        2 => graph(2, &[(0, 1), (0, 1)]),
        _ => graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()),
    }
}

/// Generalized Petersen graph GP(n, k): outer cycle `0..n`, spokes `i - n+i`,
/// inner edges `n+i - n+(i+k mod n)`.
fn generalized_petersen(n: usize, k: usize) -> Multigraph {
    let mut edges = Vec::new();
    edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    edges.extend((0..n).map(|i| (n + i, n + (i + k) % n)));
    graph(2 * n, &edges)
}

pub fn named(name: NamedGraph) -> Multigraph {
    match name {
        NamedGraph::C1 => cycle(1),
        NamedGraph::Cycle(n) => cycle(n),
        NamedGraph::K3 => cycle(3),
        NamedGraph::K4 => graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        NamedGraph::K4Plus => graph(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        NamedGraph::L => graph(6, &[(0, 4), (4, 1), (2, 5), (5, 3), (0, 2), (0, 3), (1, 2), (1, 3)]),
        NamedGraph::Q3 => {
            let edges: Vec<(usize, usize)> = (0..8usize)
                .flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b)))
                .filter(|&(u, v)| u < v)
                .collect();
            graph(8, &edges)
        }
        NamedGraph::V8 => {
            let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
            edges.extend((0..4).map(|i| (i, i + 4)));
            graph(8, &edges)
        }
        NamedGraph::K33 => {
            let edges: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
            graph(6, &edges)
        }
        NamedGraph::Petersen => generalized_petersen(5, 2),
        NamedGraph::R => {
            let p = generalized_petersen(5, 2);
            // drop the spoke 0 - 5
            p.delete_edge(5).expect("spoke exists")
        }
        // Outer square 0-1-2-3, inner square 4-5-6-7, spokes i - i+4 (the cube);
        // 8 subdivides 3-7, 9 subdivides 5-6, 10 subdivides 0-1, hub 11.
        NamedGraph::R1 => graph(
            12,
            &[
                (0, 10),
                (10, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 9),
                (9, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 8),
                (8, 7),
                (11, 8),
                (11, 9),
                (11, 10),
            ],
        ),
        // Outer square 0-1-2-3, inner cycle 4-5-7-6, spokes i - i+4 (a drawing
        // of V8); 8 subdivides 3-2, 9 subdivides 4-5, 10 subdivides 0-1, hub 11.
        NamedGraph::R2 => graph(
            12,
            &[
                (0, 10),
                (10, 1),
                (1, 2),
                (2, 8),
                (8, 3),
                (3, 0),
                (4, 9),
                (9, 5),
                (5, 7),
                (7, 6),
                (6, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (11, 8),
                (11, 9),
                (11, 10),
            ],
        ),
        NamedGraph::Dodecahedron => generalized_petersen(10, 2),
    }
}
