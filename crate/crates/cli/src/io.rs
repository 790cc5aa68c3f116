//! Input file formats.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use monocount_core::algebra::{parse_monomial, Grading, MultiDegree, VariableSet};
use monocount_core::boards::{IncompatibilityGraph, Piece};
use monocount_core::hilbert::MonomialIdeal;
use monocount_core::walks::StepSet;

use crate::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepFile {
    dimension: usize,
    steps: Vec<Vec<i64>>,
}

/// `{"dimension": m, "steps": [[a, b, ...], ...]}`
pub fn parse_step_set(text: &str) -> Result<StepSet, CliError> {
    let file: StepFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("step set: {e}")))?;
    StepSet::new(file.dimension, file.steps).map_err(|e| CliError::Input(format!("step set: {e}")))
}

pub fn read_step_set(path: &Path) -> Result<StepSet, CliError> {
    parse_step_set(&read(path)?).map_err(|e| prefix_path(path, e))
}

/// Named step sets.
pub fn preset(name: &str) -> Result<StepSet, CliError> {
    let (dim, steps): (usize, Vec<Vec<i64>>) = match name {
        "knight" => return Ok(StepSet::knight()),
        "king" => return Ok(StepSet::king()),
        "line" => (1, vec![vec![1], vec![-1]]),
        "leaper" => (2, vec![vec![2, 1]]),
        "axes3" => (
            3,
            vec![
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
                vec![0, 0, 1],
                vec![0, 0, -1],
            ],
        ),
        "tetra3" => (3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]]),
        other => {
            return Err(CliError::Input(format!(
                "unknown preset `{other}` (knight, king, line, leaper, axes3, tetra3)"
            )))
        }
    };
    StepSet::new(dim, steps).map_err(CliError::input)
}

/// Monomial ideal file: `#` starts a comment, an optional `vars a b c`
/// line names the variables, every other line is one generator such as
/// `x1^2*x3`. Without a `vars` line the variables are `x1..xN` for the
/// `default_vars` count given by the caller.
pub fn parse_ideal(text: &str, default_vars: Option<usize>) -> Result<MonomialIdeal, CliError> {
    let mut vars: Option<VariableSet> = default_vars.map(|n| VariableSet::indexed("x", n));
    let mut declared = false;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            if rest.starts_with(char::is_whitespace) || rest.is_empty() {
                if declared || !gens.is_empty() {
                    return Err(CliError::Input(format!(
                        "line {lineno}: `vars` must come first and once"
                    )));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let set = VariableSet::new(names).map_err(|e| CliError::Input(format!("line {lineno}: {e}")))?;
                vars = Some(set);
                declared = true;
                continue;
            }
        }
        let Some(v) = vars.as_ref() else {
            return Err(CliError::Input(format!(
                "line {lineno}: no `vars` line and no variable count given"
            )));
        };
        let m = parse_monomial(line, v).map_err(|e| CliError::Input(format!("line {lineno}: {e}")))?;
        gens.push(m);
    }
    let vars = vars.ok_or_else(|| CliError::Input("ideal file declares no variables".into()))?;
    MonomialIdeal::minimalize(vars, gens).map_err(CliError::input)
}

pub fn read_ideal(path: &Path, default_vars: Option<usize>) -> Result<MonomialIdeal, CliError> {
    parse_ideal(&read(path)?, default_vars).map_err(|e| prefix_path(path, e))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingFile {
    degrees: Vec<Vec<u32>>,
}

/// `{"degrees": [[1, 0], [0, 1], ...]}`, one degree per variable.
pub fn parse_grading(text: &str, nvars: usize) -> Result<Grading, CliError> {
    let file: GradingFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("grading: {e}")))?;
    if file.degrees.len() != nvars {
        return Err(CliError::Input(format!(
            "grading lists {} degrees for {nvars} variables",
            file.degrees.len()
        )));
    }
    let rank = file.degrees.first().map_or(1, Vec::len);
    let degrees = file.degrees.iter().map(|d| MultiDegree::from_slice(d)).collect();
    Grading::new(rank, degrees).map_err(|e| CliError::Input(format!("grading: {e}")))
}

pub fn read_grading(path: &Path, nvars: usize) -> Result<Grading, CliError> {
    parse_grading(&read(path)?, nvars).map_err(|e| prefix_path(path, e))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceFile {
    moves: Vec<(i32, i32)>,
    sliding: bool,
}

/// `{"moves": [[dx, dy], ...], "sliding": true}`
pub fn parse_piece(text: &str) -> Result<Piece, CliError> {
    let file: PieceFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("piece: {e}")))?;
    if file.moves.is_empty() {
        return Err(CliError::Input("piece: no moves".into()));
    }
    Ok(Piece::Custom {
        moves: file.moves,
        sliding: file.sliding,
    })
}

pub fn read_piece(path: &Path) -> Result<Piece, CliError> {
    parse_piece(&read(path)?).map_err(|e| prefix_path(path, e))
}

pub fn piece_by_name(name: &str) -> Result<Piece, CliError> {
    Ok(match name {
        "queen" => Piece::Queen,
        "rook" => Piece::Rook,
        "bishop" => Piece::Bishop,
        "knight" => Piece::Knight,
        "king" => Piece::King,
        other => {
            return Err(CliError::Input(format!(
                "unknown piece `{other}` (queen, rook, bishop, knight, king)"
            )))
        }
    })
}

/// Edge list: a `vertices N` line, then one `i j` pair per line with
/// 0-based vertex indices. Edges are undirected; `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<IncompatibilityGraph, CliError> {
    let mut count: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || CliError::Input(format!("line {lineno}: expected `vertices N` or `i j`, found `{line}`"));
        match fields.as_slice() {
            ["vertices", n] if count.is_none() && edges.is_empty() => {
                count = Some(n.parse().map_err(|_| bad())?);
            }
            [i, j] => {
                let n = count.ok_or_else(|| CliError::Input(format!("line {lineno}: edge before `vertices`")))?;
                let i: usize = i.parse().map_err(|_| bad())?;
                let j: usize = j.parse().map_err(|_| bad())?;
                if i >= n || j >= n {
                    return Err(CliError::Input(format!(
                        "line {lineno}: vertex out of range for {n} vertices"
                    )));
                }
                edges.push((i, j));
            }
            _ => return Err(bad()),
        }
    }
    let n = count.ok_or_else(|| CliError::Input("graph: missing `vertices N` line".into()))?;
    IncompatibilityGraph::from_undirected_edges(n, &edges).map_err(CliError::input)
}

pub fn read_graph(path: &Path) -> Result<IncompatibilityGraph, CliError> {
    parse_graph(&read(path)?).map_err(|e| prefix_path(path, e))
}

fn prefix_path(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_sets() {
        let w = parse_step_set(r#"{"dimension": 2, "steps": [[1, 0], [-1, 0]]}"#).unwrap();
        assert_eq!(w.len(), 2);
        assert!(parse_step_set(r#"{"dimension": 2, "steps": [[0, 0]]}"#).is_err());
        assert!(parse_step_set(r#"{"dimension": 2}"#).is_err());
        for name in ["knight", "king", "line", "leaper", "axes3", "tetra3"] {
            preset(name).unwrap();
        }
    }

    #[test]
    fn ideals() {
        let i = parse_ideal("# comment\nvars a b c\na*b\na^2*b # redundant\n\nc\n", None).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert_eq!(i.nvars(), 3);
        let i = parse_ideal("x1\n", Some(2)).unwrap();
        assert_eq!(i.nvars(), 2);
        let err = parse_ideal("vars a b\na*z\n", None).unwrap_err();
        assert!(err.message().starts_with("line 2:"), "{err}");
        assert!(parse_ideal("x1\n", None).is_err());
        assert!(parse_ideal("", Some(8)).unwrap().is_zero());
        assert!(parse_ideal("vars a\na\nvars b\n", None).is_err());
    }

    #[test]
    fn gradings() {
        let g = parse_grading(r#"{"degrees": [[1, 0], [0, 1]]}"#, 2).unwrap();
        assert_eq!(g.rank(), 2);
        assert!(parse_grading(r#"{"degrees": [[1]]}"#, 2).is_err());
        assert!(parse_grading(r#"{"degrees": [[1, 0], [1]]}"#, 2).is_err());
    }

    #[test]
    fn pieces_and_graphs() {
        assert_eq!(
            parse_piece(r#"{"moves": [[1, 2]], "sliding": false}"#).unwrap(),
            Piece::Custom {
                moves: vec![(1, 2)],
                sliding: false
            }
        );
        assert!(parse_piece(r#"{"moves": [], "sliding": false}"#).is_err());
        assert!(piece_by_name("dragon").is_err());
        let g = parse_graph("vertices 3\n0 1\n1 2 # path\n").unwrap();
        assert!(g.forbids(1, 0) && g.forbids(1, 2) && !g.forbids(0, 2));
        assert!(parse_graph("0 1\n").is_err());
        assert!(parse_graph("vertices 2\n0 5\n").is_err());
    }
}
