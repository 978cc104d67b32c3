use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use repdim::embed::Embedding;
use repdim::graph::{parse_edge_list, parse_graph6};
use repdim::Graph;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
    Auto,
}

/// Graphs to process: either one graph or a graph6 stream.
pub enum Source {
    Single(Graph),
    /// One entry per non-blank input line, with its 1-based line number.
    Batch(Vec<(usize, String)>),
}

pub fn read_text(path: Option<&Path>, inline: Option<&str>) -> Result<String, CliError> {
    if let Some(s) = inline {
        return Ok(s.to_string());
    }
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn strip_header(line: &str) -> &str {
    line.strip_prefix(">>graph6<<").unwrap_or(line)
}

/// Decides the format and splits graph6 streams into lines. An edge list
/// starts with its vertex count, so a leading digit means edge list.
pub fn load(text: &str, format: InputFormat) -> Result<Source, CliError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    let Some(first) = first else {
        return Err(CliError::EmptyInput);
    };
    let format = match format {
        InputFormat::Auto if first.starts_with(|c: char| c.is_ascii_digit()) => InputFormat::Edgelist,
        InputFormat::Auto => InputFormat::Graph6,
        f => f,
    };
    if format == InputFormat::Edgelist {
        return Ok(Source::Single(parse_edge_list(text)?));
    }
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_header(l.trim()).to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if lines.len() == 1 {
        Ok(Source::Single(parse_graph6(&lines[0].1)?))
    } else {
        Ok(Source::Batch(lines))
    }
}

/// Coordinates for `verify`: CSV rows, a JSON array of points, or a JSON
/// object with `points` and optionally `dim`, `alpha`, `beta`.
pub fn load_coords(path: &Path, g: &Graph) -> Result<Embedding, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let trimmed = text.trim_start();
    let (points, dim, alpha, beta) = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| CliError::Parse(format!("coordinates: {e}")))?;
        let (pts, obj) = match &v {
            Value::Object(o) => (o.get("points").cloned().unwrap_or(Value::Null), Some(o)),
            _ => (v.clone(), None),
        };
        let points: Vec<Vec<f64>> =
            serde_json::from_value(pts).map_err(|e| CliError::Parse(format!("coordinates: {e}")))?;
        let field = |k: &str| obj.and_then(|o| o.get(k));
        let dim = field("dim").and_then(Value::as_u64).map(|d| d as usize);
        (points, dim, field("alpha").and_then(Value::as_f64), field("beta").and_then(Value::as_f64))
    } else {
        let mut points = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<f64>().map_err(|e| CliError::Parse(format!("coordinates line {}: {t:?}: {e}", i + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(row);
        }
        (points, None, None, None)
    };

    let dist = |i: usize, j: usize| -> Option<f64> {
        let (p, q) = (points.get(i)?, points.get(j)?);
        Some(p.iter().zip(q).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt())
    };
    let edges = g.edges();
    let non_edge = (0..g.n()).flat_map(|i| (i + 1..g.n()).map(move |j| (i, j))).find(|&(i, j)| !g.has_edge(i, j));
    let alpha = alpha.or_else(|| edges.first().and_then(|&(i, j)| dist(i, j))).unwrap_or(1.0);
    // with no non-edges the second distance is unconstrained
    let beta = beta.or_else(|| non_edge.and_then(|(i, j)| dist(i, j))).unwrap_or(2.0 * alpha);
    let dim = dim.unwrap_or_else(|| points.first().map_or(0, Vec::len));
    Ok(Embedding { dim, alpha, beta, b: (beta / alpha).powi(2), points })
}
