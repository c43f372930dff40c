//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`
//! with 0-based vertices. `#` starts a comment. Several graphs may follow
//! one another in the same text.

use std::fmt::Write as _;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// A parsed graph with the number of duplicate edges that were collapsed.
#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub duplicates: usize,
    /// 1-based line number of the header.
    pub line: usize,
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// True when the first significant line looks like an edge-list header.
pub fn looks_like_edge_list(text: &str) -> bool {
    significant_lines(text)
        .next()
        .is_some_and(|(_, line)| two_numbers(line).is_some())
}

pub fn parse_edge_lists(text: &str) -> Result<Vec<ParsedEdgeList>> {
    let at = |line: usize, msg: String| GraphError::AtLine {
        path: "<edge list>".into(),
        line,
        source: Box::new(GraphError::MalformedEdgeList(msg)),
    };
    let mut lines = significant_lines(text);
    let mut out = Vec::new();
    while let Some((header_line, header)) = lines.next() {
        let (n, m) = two_numbers(header).ok_or_else(|| {
            at(
                header_line,
                format!("expected header \"n m\", got {header:?}"),
            )
        })?;
        let mut pairs = Vec::with_capacity(m);
        for k in 0..m {
            let (line_no, line) = lines
                .next()
                .ok_or_else(|| at(header_line, format!("expected {m} edges, found {k}")))?;
            let pair = two_numbers(line)
                .ok_or_else(|| at(line_no, format!("expected \"u v\", got {line:?}")))?;
            pairs.push(pair);
        }
        let (graph, duplicates) =
            Graph::from_edge_list(n, &pairs).map_err(|e| GraphError::AtLine {
                path: "<edge list>".into(),
                line: header_line,
                source: Box::new(e),
            })?;
        out.push(ParsedEdgeList {
            graph,
            duplicates,
            line: header_line,
        });
    }
    Ok(out)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# K4\n4 6\n0 1\n0 2 # spoke\n0 3\n1 2\n\n1 3\n2 3\n";
        let parsed = parse_edge_lists(text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].graph, Graph::complete(4));
        assert_eq!(parsed[0].duplicates, 0);
        assert!(looks_like_edge_list(text));
        assert!(!looks_like_edge_list("C~\n"));
    }

    #[test]
    fn several_graphs_and_duplicates() {
        let text = "2 1\n0 1\n3 3\n0 1\n1 0\n1 2\n";
        let parsed = parse_edge_lists(text).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[1].graph.size(), 2);
        assert_eq!(parsed[1].duplicates, 1);
        assert_eq!(parsed[1].line, 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_lists("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::AtLine { line: 3, .. }), "{err}");
        let err = parse_edge_lists("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, GraphError::AtLine { line: 1, .. }));
        let err = parse_edge_lists("3 1\n1 1\n").unwrap_err();
        assert!(err.is_parse());
    }

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        let parsed = parse_edge_lists(&to_edge_list(&g)).unwrap();
        assert_eq!(parsed[0].graph, g);
    }
}
