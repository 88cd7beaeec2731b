//! Plain-text edge lists.
//!
//! ```text
//! # comments run to end of line
//! 4
//! 1 2
//! 2 3
//! 3 4
//! 1 4
//! ```
//!
//! The first data line is the vertex count; every later data line is one
//! edge `u v` (1-based). Edge labels follow order of appearance.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty edge list: missing vertex count")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let fields: Vec<&str> = data.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Syntax {
                line: line_no,
                msg: format!("expected a non-negative integer, found `{s}`"),
            })
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    msg: "first line must hold only the vertex count".into(),
                })
            }
            (Some(_), [u, v]) => pairs.push((num(u)?, num(v)?)),
            (Some(_), _) => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    msg: format!("expected `u v`, found `{data}`"),
                })
            }
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(n, &pairs)?)
}

pub fn serialize(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.vertex_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
