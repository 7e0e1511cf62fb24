//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n=6
//! 0 1
//! 1 2
//! ```
//!
//! The optional `n=<count>` header must precede the edges and declares
//! vertices that no edge mentions. Without it the order is one more than
//! the largest id.

use std::collections::HashSet;
use std::fmt::Write as _;

use ctk::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses one document. Returns `None` when it holds neither a header nor
/// an edge.
pub fn parse(text: &str) -> Result<Option<Graph>, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_id: Option<usize> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if let Some(count) = body.strip_prefix("n=") {
            if order.is_some() {
                return Err(fail(line, "duplicate n= header"));
            }
            if !edges.is_empty() {
                return Err(fail(line, "n= header must precede the edges"));
            }
            let count = count
                .trim()
                .parse::<usize>()
                .map_err(|_| fail(line, format!("invalid vertex count {count:?}")))?;
            order = Some(count);
            continue;
        }
        let ids: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = ids[..] else {
            return Err(fail(line, format!("expected \"u v\", got {body:?}")));
        };
        let id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| fail(line, format!("invalid vertex id {s:?}")))
        };
        let (u, v) = (id(u)?, id(v)?);
        if u == v {
            return Err(fail(line, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = order {
            if u.max(v) >= n {
                return Err(fail(
                    line,
                    format!("vertex {} out of range for n={n}", u.max(v)),
                ));
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(line, format!("duplicate edge {u} {v}")));
        }
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        edges.push((u, v));
    }

    let n = match (order, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => return Ok(None),
    };
    Graph::from_edges(&edges, Some(n))
        .map(Some)
        .map_err(|e| fail(0, e.to_string()))
}

/// Canonical form: `n=<order>` header, then edges `u v` with `u < v` in
/// lexicographic order.
pub fn serialize(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
