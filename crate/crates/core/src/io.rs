//! Edge-list and graph6 input, graph6 output.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("line {line}: {error}")]
    Graph { line: usize, error: GraphError },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// Parses `"n m"` followed by `m` lines `"i j"`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::Line {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let [n, m] = two_numbers(hline, header)?;
    let mut g = Graph::empty(n).map_err(|error| ParseError::Graph { line: hline, error })?;
    let mut count = 0;
    for (line, text) in lines {
        let [i, j] = two_numbers(line, text)?;
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(ParseError::Graph {
                    line,
                    error: GraphError::VertexOutOfRange { vertex: v, n },
                });
            }
        }
        if i == j {
            return Err(ParseError::Graph { line, error: GraphError::SelfLoop(i) });
        }
        if g.has_edge(i, j) {
            return Err(ParseError::Graph {
                line,
                error: GraphError::DuplicateEdge(i.min(j), i.max(j)),
            });
        }
        g.add_edge_unchecked(i, j);
        count += 1;
    }
    if count != m {
        return Err(ParseError::Line {
            line: hline,
            message: format!("header announces {m} edges, found {count}"),
        });
    }
    Ok(g)
}

fn two_numbers(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let bad = |message: String| ParseError::Line { line, message };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(bad(format!("expected two integers, got {text:?}")));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| bad(format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}

/// Decodes a short-form graph6 string (`n ≤ 62`).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim().strip_prefix(">>graph6<<").unwrap_or(text.trim());
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let Some((&first, payload)) = bytes.split_first() else {
        return Err(ParseError::Graph6("empty input".into()));
    };
    if first == 126 {
        return Err(ParseError::Graph6("only n ≤ 62 is supported".into()));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() != need {
        return Err(ParseError::Graph6(format!(
            "expected {need} payload bytes for n = {n}, found {}",
            payload.len()
        )));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n).map_err(|e| ParseError::Graph6(e.to_string()))?;
    let mut k = 0;
    for j in 2..=n {
        for i in 1..j {
            if bit(k) {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph with at most 62 vertices in short-form graph6.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "short-form graph6 holds at most 62 vertices");
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 2..=n {
        for i in 1..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk
            .iter()
            .enumerate()
            .fold(0u8, |a, (k, &b)| a | (b as u8) << (5 - k));
        out.push((v + 63) as char);
    }
    out
}

/// Edge-list text accepted by [`parse_edgelist`].
pub fn emit_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}
