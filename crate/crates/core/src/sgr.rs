//! The `.sgr` text format.
//!
//! ```text
//! # K4 with one negative edge
//! n 4
//! e 0 1 -
//! e 0 2 +
//! ```
//!
//! The first directive is `n <N>`; each further `e <u> <v> <+|->` line adds
//! one edge on 0-indexed vertices. Everything after `#` is a comment and blank
//! lines are ignored. Serialization writes edges sorted by `(u, v)`, `u < v`,
//! with no comments, so parsing and re-serializing a canonical file is the
//! identity on bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub fn to_sgr(g: &SignedGraph) -> String {
    let mut out = String::with_capacity(8 + 10 * g.size());
    let _ = writeln!(out, "n {}", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.sign);
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn parse_index(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| err(line, col, format!("expected {what}, found `{tok}`")))
}

pub fn parse_sgr(text: &str) -> Result<SignedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    // (line, column) of each edge, for diagnostics raised by the graph builder
    let mut positions = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(col, directive)) = toks.first() else {
            continue;
        };
        match directive {
            "n" => {
                if n.is_some() {
                    return Err(err(line, col, "repeated `n` directive"));
                }
                if toks.len() != 2 {
                    return Err(err(line, col, "expected `n <vertex count>`"));
                }
                n = Some(parse_index(line, toks[1], "a vertex count")?);
            }
            "e" => {
                let Some(order) = n else {
                    return Err(err(line, col, "`e` before the `n` directive"));
                };
                if toks.len() != 4 {
                    return Err(err(line, col, "expected `e <u> <v> <+|->`"));
                }
                let u = parse_index(line, toks[1], "a vertex")?;
                let v = parse_index(line, toks[2], "a vertex")?;
                let sign = match toks[3].1 {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => {
                        return Err(err(
                            line,
                            toks[3].0,
                            format!("expected `+` or `-`, found `{other}`"),
                        ))
                    }
                };
                for (tok, x) in [(toks[1], u), (toks[2], v)] {
                    if x >= order {
                        return Err(err(
                            line,
                            tok.0,
                            format!("vertex {x} out of range for n = {order}"),
                        ));
                    }
                }
                edges.push((u, v, sign));
                positions.push((line, col));
            }
            other => return Err(err(line, col, format!("unknown directive `{other}`"))),
        }
    }

    let Some(n) = n else {
        return Err(err(1, 1, "missing `n` directive"));
    };
    SignedGraph::from_edge_list(n, edges.iter().copied()).map_err(|e| {
        // locate the offending edge for the diagnostic
        let at = match e {
            Error::DuplicateEdge { u, v } => edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b, _))| (a.min(b), a.max(b)) == (u, v))
                .nth(1)
                .map(|(i, _)| i),
            Error::SelfLoop { vertex } => edges
                .iter()
                .position(|&(a, b, _)| a == vertex && b == vertex),
            _ => None,
        };
        match at {
            Some(i) => err(positions[i].0, positions[i].1, e.to_string()),
            None => err(1, 1, e.to_string()),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_with_comments_and_blank_lines() {
        let text = "# triangle\n\nn 3   # three vertices\ne 1 0 -\ne 1 2 +\n  e 0 2 +\n";
        let g = parse_sgr(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.sign(0, 1), Some(Sign::Negative));
        assert_eq!(to_sgr(&g), "n 3\ne 0 1 -\ne 0 2 +\ne 1 2 +\n");
    }

    #[test]
    fn empty_graph_round_trip() {
        let g = parse_sgr("n 0\n").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(to_sgr(&g), "n 0\n");
    }

    fn location(text: &str) -> (usize, usize) {
        match parse_sgr(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics_carry_positions() {
        assert_eq!(location(""), (1, 1));
        assert_eq!(location("e 0 1 +\n"), (1, 1));
        assert_eq!(location("n 2\nx 0 1\n"), (2, 1));
        assert_eq!(location("n 2\ne 0 1 *\n"), (2, 7));
        assert_eq!(location("n 2\ne 0 5 +\n"), (2, 5));
        assert_eq!(location("n 2\n  e 0 q +\n"), (2, 7));
        assert_eq!(location("n 3\ne 0 1 +\ne 1 0 -\n"), (3, 1));
        assert_eq!(location("n 3\ne 0 1 +\ne 2 2 -\n"), (3, 1));
        assert_eq!(location("n 3\nn 3\n"), (2, 1));
        assert_eq!(location("n 3 4\n"), (1, 1));
        assert_eq!(location("n -1\n"), (1, 3));
    }

    fn arb_graph() -> impl Strategy<Value = SignedGraph> {
        (0usize..9).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(0u8..3, pairs).prop_map(move |cells| {
                let mut e = vec![];
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        match cells[k] {
                            1 => e.push((u, v, Sign::Positive)),
                            2 => e.push((u, v, Sign::Negative)),
                            _ => {}
                        }
                        k += 1;
                    }
                }
                SignedGraph::from_edge_list(n, e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(g in arb_graph()) {
            let text = to_sgr(&g);
            let back = parse_sgr(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_sgr(&back), text);
        }
    }
}
