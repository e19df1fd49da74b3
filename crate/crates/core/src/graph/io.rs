//! Edge-list text format.
//!
//! ```text
//! v 4
//! # layer 0 U0
//! # layer 3 U1
//! 0 1
//! 0 3
//! ```
//!
//! The first non-comment line is `v <count>`. Each following line is an
//! edge `u v` with 0-based endpoints and `u < v`. Lines of the form
//! `# layer <vertex> <tag>` attach a layer tag (`L0`, `U<i>`, `Dummy`);
//! all other `#` lines and blank lines are ignored.

use std::fmt::Write as _;

use super::{Graph, GraphError, Layer};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", g.order()).unwrap();
    for v in 0..g.order() {
        if let Some(layer) = g.tag(v).layer {
            writeln!(out, "# layer {v} {layer}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, msg: &str| GraphError::Parse {
        line,
        msg: msg.to_string(),
    };
    let mut order = None;
    let mut edges = Vec::new();
    let mut layers = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.split_whitespace();
            if parts.next() == Some("layer") {
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(line_no, "bad layer vertex"))?;
                let tag: Layer = parts
                    .next()
                    .ok_or_else(|| err(line_no, "missing layer tag"))?
                    .parse()
                    .map_err(|e: String| err(line_no, &e))?;
                layers.push((line_no, v, tag));
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        if order.is_none() {
            if parts.next() != Some("v") {
                return Err(err(line_no, "expected header `v <count>`"));
            }
            order = Some(
                parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, "bad vertex count"))?,
            );
            if parts.next().is_some() {
                return Err(err(line_no, "trailing tokens after vertex count"));
            }
            continue;
        }
        let nums: Vec<usize> = parts
            .map(|s| s.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(line_no, "edge endpoints must be integers"))?;
        match *nums.as_slice() {
            [u, v] if u < v => edges.push((u, v)),
            [_, _] => return Err(err(line_no, "edge endpoints must satisfy u < v")),
            _ => return Err(err(line_no, "expected `u v`")),
        }
    }
    let n = order.ok_or_else(|| err(0, "missing header `v <count>`"))?;
    let mut g = Graph::from_edges(n, edges)?;
    for (line_no, v, tag) in layers {
        if v >= n {
            return Err(err(line_no, "layer vertex out of range"));
        }
        g.set_layer(v, Some(tag));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn round_trip_with_layers() {
        let mut g = named::petersen();
        g.set_layer(0, Some(Layer::U(0)));
        g.set_layer(9, Some(Layer::Dummy));
        let text = write_edge_list(&g);
        assert!(text.starts_with("v 10\n# layer 0 U0\n# layer 9 Dummy\n0 1\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("0 1\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(
            parse_edge_list("v 3\n2 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("v 3\n0 1\n0 1\n"),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            parse_edge_list("v 2\n# layer 5 U0\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_edge_list("# hi\n\nv 2\n0 1\n").unwrap().edge_count(), 1);
    }
}
