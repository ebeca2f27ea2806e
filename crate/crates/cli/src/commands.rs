use std::collections::BTreeMap;
use std::io::{BufWriter, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use subcubic::cycles::{girth, has_two_disjoint_short_cycles};
use subcubic::enumerate::Enumerator;
use subcubic::families::{Families, FamilyIndex};
use subcubic::fvs::{is_fvs, Solver};
use subcubic::io::{encode_graph6, GraphFormat};
use subcubic::verify::{check_dodeca_theorem, check_main_bound, classify_explicit, Verdict};
use subcubic::{canonical_code, Multigraph};

use crate::input::{load, Labeled};
use crate::{Cli, Command};

type Outcome = Result<bool, String>;

fn emit<T: Serialize>(out: &mut impl Write, record: &T) -> Result<(), String> {
    serde_json::to_writer(&mut *out, record).map_err(|e| e.to_string())?;
    writeln!(out).map_err(|e| e.to_string())
}

pub fn run(cli: Cli) -> Outcome {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let solver = Solver::with_cap(cli.max_vertices);
    let result = match cli.command {
        Command::Solve {
            source,
            required,
            minus_edge,
        } => {
            let graphs = load(
                source.name.as_deref(),
                source.input.as_deref(),
                source.format.as_deref(),
            )?;
            solve(&mut out, &solver, &graphs, &required, minus_edge)
        }
        Command::Family {
            i,
            j,
            g,
            k,
            girth_min,
            format,
        } => {
            let format = format.parse::<GraphFormat>().map_err(|e| e.to_string())?;
            let index = match (g, k) {
                (Some(g), Some(k)) => FamilyIndex::Fg { g, i, j, k },
                _ => FamilyIndex::F { i, j },
            };
            let cap = cli.max_vertices.min(subcubic::families::DEFAULT_MAX_VERTICES);
            family(&mut out, &Families::new(cap), index, girth_min, format)
        }
        Command::Verify {
            n_max,
            g,
            source,
            workers,
            emit_all,
        } => {
            if g != 4 && g != 5 {
                return Err(format!("--g must be 4 or 5, got {g}"));
            }
            let graphs = match n_max {
                Some(n) => Enumerator::with_cap(cli.enum_max)
                    .up_to(n, |_| true)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|graph| Labeled {
                        label: canonical_code(&graph).to_hex(),
                        graph,
                    })
                    .collect(),
                None if source.name.is_none() && source.input.is_none() => {
                    return Err("verify needs --n-max, --name or --input".into());
                }
                None => load(
                    source.name.as_deref(),
                    source.input.as_deref(),
                    source.format.as_deref(),
                )?,
            };
            let emit_all = emit_all || n_max.is_none();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.unwrap_or(0))
                .build()
                .map_err(|e| e.to_string())?;
            verify(&mut out, &pool, &solver, &graphs, g, emit_all)
        }
        Command::Dodeca { source } => {
            let graphs = load(
                source.name.as_deref(),
                source.input.as_deref(),
                source.format.as_deref(),
            )?;
            dodeca(&mut out, &graphs)
        }
    };
    out.flush().map_err(|e| e.to_string())?;
    result
}

#[derive(Serialize)]
struct SolveRecord<'a> {
    command: &'static str,
    graph: &'a str,
    code: String,
    vertices: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    minus_edge: Option<usize>,
    required: &'a [usize],
    phi: usize,
    fvs: Vec<usize>,
    forest_size: usize,
    certificate_ok: bool,
    nodes_explored: u64,
}

fn solve(
    out: &mut impl Write,
    solver: &Solver,
    graphs: &[Labeled],
    required: &[usize],
    minus_edge: Option<usize>,
) -> Outcome {
    let mut all_ok = true;
    for item in graphs {
        let target = match minus_edge {
            Some(e) => item
                .graph
                .delete_edge(e)
                .map_err(|err| format!("{}: {err}", item.label))?,
            None => item.graph.clone(),
        };
        let cert = solver
            .min_fvs_with_required(&target, required)
            .map_err(|e| format!("{}: {e}", item.label))?;
        let forest: Vec<usize> = target
            .vertices()
            .filter(|v| cert.vertices.binary_search(v).is_err())
            .collect();
        let ok = is_fvs(&target, &cert.vertices)
            && required.iter().all(|v| cert.vertices.contains(v))
            && target.induced_subgraph(&forest).is_forest()
            && forest.len() + cert.size == target.vertex_count();
        all_ok &= ok;
        emit(
            out,
            &SolveRecord {
                command: "solve",
                graph: &item.label,
                code: canonical_code(&item.graph).to_hex(),
                vertices: item.graph.vertex_count(),
                edges: item.graph.edge_count(),
                minus_edge,
                required,
                phi: cert.size,
                forest_size: forest.len(),
                fvs: cert.vertices,
                certificate_ok: ok,
                nodes_explored: cert.nodes_explored,
            },
        )?;
    }
    Ok(all_ok)
}

#[derive(Serialize)]
struct MemberRecord {
    command: &'static str,
    family: String,
    member: usize,
    code: String,
    vertices: usize,
    edges: usize,
    girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    medge: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct FamilySummary {
    command: &'static str,
    summary: bool,
    family: String,
    count: usize,
    generated: usize,
    expected_vertices: usize,
    expected_edges: usize,
    size_law_holds: bool,
}

fn family(
    out: &mut impl Write,
    families: &Families,
    index: FamilyIndex,
    girth_min: Option<usize>,
    format: GraphFormat,
) -> Outcome {
    let members = match index {
        FamilyIndex::F { i, j } => families.generate(i, j),
        FamilyIndex::Fg { g, i, j, k } => families.generate_g(g, i, j, k),
    }
    .map_err(|e| e.to_string())?;
    let (n, m) = index.size();
    let size_law_holds = members.iter().all(|g| (g.vertex_count(), g.edge_count()) == (n, m));
    let kept: Vec<&Multigraph> = members
        .iter()
        .filter(|g| girth_min.is_none_or(|min| girth(g).is_none_or(|x| x >= min)))
        .collect();
    for (idx, g) in kept.iter().enumerate() {
        let (graph6, medge) = match format {
            GraphFormat::Graph6 => (
                Some(encode_graph6(g).map_err(|e| format!("{index} member {}: {e}", idx + 1))?),
                None,
            ),
            GraphFormat::Medge => (None, Some(g.edges().to_vec())),
        };
        emit(
            out,
            &MemberRecord {
                command: "family",
                family: index.to_string(),
                member: idx + 1,
                code: canonical_code(g).to_hex(),
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                girth: girth(g),
                graph6,
                medge,
            },
        )?;
    }
    emit(
        out,
        &FamilySummary {
            command: "family",
            summary: true,
            family: index.to_string(),
            count: kept.len(),
            generated: members.len(),
            expected_vertices: n,
            expected_edges: m,
            size_law_holds,
        },
    )?;
    Ok(size_law_holds)
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    command: &'static str,
    graph: &'a str,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

#[derive(Serialize)]
struct SkipRecord<'a> {
    command: &'static str,
    graph: &'a str,
    skipped: &'static str,
}

#[derive(Serialize)]
struct VerifySummary {
    command: &'static str,
    summary: bool,
    g: usize,
    graphs: usize,
    bound_checked: usize,
    explicit_checked: usize,
    skipped: usize,
    tight: usize,
    violations: usize,
    cases: BTreeMap<String, usize>,
    elapsed_ms: u128,
}

/// Per-graph results; `None` marks a graph outside both checks.
struct Checked {
    bound: Option<Verdict>,
    explicit: Option<Verdict>,
}

fn check_one(graph: &Multigraph, solver: &Solver, g: usize) -> Result<Checked, String> {
    if !graph.is_connected() || graph.vertex_count() == 0 {
        return Ok(Checked {
            bound: None,
            explicit: None,
        });
    }
    let bound = if has_two_disjoint_short_cycles(graph, g) {
        None
    } else {
        Some(check_main_bound(graph, g, solver).map_err(|e| e.to_string())?)
    };
    let explicit = if graph.is_simple() && girth(graph).is_none_or(|x| x >= g) {
        Some(classify_explicit(graph, g, solver).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(Checked { bound, explicit })
}

fn verify(
    out: &mut impl Write,
    pool: &rayon::ThreadPool,
    solver: &Solver,
    graphs: &[Labeled],
    g: usize,
    emit_all: bool,
) -> Outcome {
    let start = Instant::now();
    let results: Vec<Checked> = pool.install(|| {
        graphs
            .par_iter()
            .map(|item| check_one(&item.graph, solver, g))
            .collect::<Result<_, _>>()
    })?;
    let mut summary = VerifySummary {
        command: "verify",
        summary: true,
        g,
        graphs: graphs.len(),
        bound_checked: 0,
        explicit_checked: 0,
        skipped: 0,
        tight: 0,
        violations: 0,
        cases: BTreeMap::new(),
        elapsed_ms: 0,
    };
    for (item, checked) in graphs.iter().zip(&results) {
        if checked.bound.is_none() && checked.explicit.is_none() {
            summary.skipped += 1;
            if emit_all {
                emit(
                    out,
                    &SkipRecord {
                        command: "verify",
                        graph: &item.label,
                        skipped: "precondition not met",
                    },
                )?;
            }
            continue;
        }
        if let Some(v) = &checked.bound {
            summary.bound_checked += 1;
            summary.tight += usize::from(v.lhs == v.rhs);
        }
        if let Some(v) = &checked.explicit {
            summary.explicit_checked += 1;
            *summary.cases.entry(v.case.clone().unwrap_or_default()).or_default() += 1;
        }
        for v in checked.bound.iter().chain(&checked.explicit) {
            if !v.holds {
                summary.violations += 1;
            }
            if emit_all || !v.holds {
                emit(
                    out,
                    &VerdictRecord {
                        command: "verify",
                        graph: &item.label,
                        verdict: v,
                    },
                )?;
            }
        }
    }
    summary.elapsed_ms = start.elapsed().as_millis();
    emit(out, &summary)?;
    Ok(summary.violations == 0)
}

fn dodeca(out: &mut impl Write, graphs: &[Labeled]) -> Outcome {
    let mut all_hold = true;
    for item in graphs {
        let v = check_dodeca_theorem(&item.graph).map_err(|e| format!("{}: {e}", item.label))?;
        all_hold &= v.holds;
        emit(
            out,
            &VerdictRecord {
                command: "dodeca",
                graph: &item.label,
                verdict: &v,
            },
        )?;
    }
    Ok(all_hold)
}
