use std::io::Read;
use std::path::Path;

use subcubic::catalog::named_by_str;
use subcubic::io::{detect_format, read_graphs, GraphFormat};
use subcubic::Multigraph;

/// An input graph and the label its records carry.
pub struct Labeled {
    pub label: String,
    pub graph: Multigraph,
}

pub fn load(name: Option<&str>, path: Option<&Path>, format: Option<&str>) -> Result<Vec<Labeled>, String> {
    if let Some(name) = name {
        let graph = named_by_str(name).map_err(|e| e.to_string())?;
        return Ok(vec![Labeled {
            label: name.to_string(),
            graph,
        }]);
    }
    let path = path.ok_or("one of --name or --input is required")?;
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    let format = match format {
        Some(f) => f.parse::<GraphFormat>().map_err(|e| e.to_string())?,
        None => detect_format(&text),
    };
    let graphs = read_graphs(&text, format).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(idx, graph)| Labeled {
            label: format!("{}#{}", path.display(), idx + 1),
            graph,
        })
        .collect())
}
