//! DIMACS `edge` format: `c` comment lines, one `p edge N M` header, then
//! `M` lines `e u v` with 1-based endpoints. Duplicate edge lines are
//! tolerated and collapsed.

use std::fmt;
use trifree_core::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    MissingHeader,
    DuplicateHeader { line: usize },
    EdgeBeforeHeader { line: usize },
    Malformed { line: usize },
    IndexOutOfRange { line: usize },
    SelfLoop { line: usize },
    EdgeCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing `p edge` header line"),
            ParseError::DuplicateHeader { line } => {
                write!(f, "second `p` header at line {line}")
            }
            ParseError::EdgeBeforeHeader { line } => {
                write!(f, "edge before the `p` header at line {line}")
            }
            ParseError::Malformed { line } => write!(f, "unparsable line {line}"),
            ParseError::IndexOutOfRange { line } => {
                write!(f, "vertex index out of range at line {line}")
            }
            ParseError::SelfLoop { line } => write!(f, "self-loop at line {line}"),
            ParseError::EdgeCountMismatch { expected, found } => {
                write!(f, "header promises {expected} edges but {found} appear")
            }
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let format = fields.next();
                let n = fields.next().and_then(|s| s.parse::<usize>().ok());
                let m = fields.next().and_then(|s| s.parse::<usize>().ok());
                match (format, n, m) {
                    (Some("edge"), Some(n), Some(m)) => header = Some((n, m)),
                    _ => return Err(ParseError::Malformed { line }),
                }
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(ParseError::EdgeBeforeHeader { line });
                };
                let u = fields.next().and_then(|s| s.parse::<usize>().ok());
                let v = fields.next().and_then(|s| s.parse::<usize>().ok());
                let (Some(u), Some(v)) = (u, v) else {
                    return Err(ParseError::Malformed { line });
                };
                if u < 1 || u > n || v < 1 || v > n {
                    return Err(ParseError::IndexOutOfRange { line });
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line });
                }
                edges.push((u as VertexId - 1, v as VertexId - 1));
                edge_lines += 1;
            }
            _ => return Err(ParseError::Malformed { line }),
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::MissingHeader);
    };
    if edge_lines != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found: edge_lines });
    }
    Graph::build(n, &edges).map_err(|_| ParseError::Malformed { line: 0 })
}

/// Writes a graph whose vertices densely fill `0..universe`; edges sorted,
/// 1-based.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.universe(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn comments_and_lone_vertex() {
        let g = parse_dimacs("c hi\np edge 1 0\n").unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn out_of_range_with_line_number() {
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(ParseError::IndexOutOfRange { line: 2 })
        );
    }

    #[test]
    fn edge_before_header() {
        assert_eq!(
            parse_dimacs("e 1 2\np edge 2 1\n"),
            Err(ParseError::EdgeBeforeHeader { line: 1 })
        );
    }

    #[test]
    fn self_loop_and_count_mismatch() {
        assert_eq!(parse_dimacs("p edge 2 1\ne 1 1\n"), Err(ParseError::SelfLoop { line: 2 }));
        assert_eq!(
            parse_dimacs("p edge 2 2\ne 1 2\n"),
            Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn duplicate_edges_tolerated() {
        let g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn round_trip() {
        let text = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
        let g = parse_dimacs(text).unwrap();
        let again = parse_dimacs(&write_dimacs(&g)).unwrap();
        assert_eq!(g, again);
    }
}
