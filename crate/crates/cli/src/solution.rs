//! Solution text: `s 3COLORABLE` plus `v <vertex> <color>` lines (1-based),
//! `s NOT3COLORABLE`, or `s OUTSIDECLASS` with a witness line.

use std::fmt;
use trifree_core::graph::WitnessKind;
use trifree_core::{Coloring, SolveOutcome};

pub fn write_outcome(outcome: &SolveOutcome) -> String {
    match outcome {
        SolveOutcome::Colored(c) => {
            let mut out = String::from("s 3COLORABLE\n");
            for (v, color) in c.iter() {
                out.push_str(&format!("v {} {}\n", v + 1, color));
            }
            out
        }
        SolveOutcome::NotColorable => String::from("s NOT3COLORABLE\n"),
        SolveOutcome::OutsideClass(w) => {
            let kind = match w.kind {
                WitnessKind::Path => "p7",
                _ => "triangle",
            };
            let ids: Vec<String> =
                w.vertices.iter().map(|&v| (v + 1).to_string()).collect();
            format!("s OUTSIDECLASS\nw {} {}\n", kind, ids.join(" "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSolution {
    Colored(Coloring),
    NotColorable,
    OutsideClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionError {
    MissingStatus,
    Malformed { line: usize },
}

impl fmt::Display for SolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionError::MissingStatus => write!(f, "missing `s` status line"),
            SolutionError::Malformed { line } => write!(f, "unparsable line {line}"),
        }
    }
}

impl std::error::Error for SolutionError {}

pub fn parse_solution(text: &str) -> Result<ParsedSolution, SolutionError> {
    let mut status: Option<&str> = None;
    let mut coloring = Coloring::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('w') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("s") => status = fields.next(),
            Some("v") => {
                let vertex = fields.next().and_then(|s| s.parse::<u32>().ok());
                let color = fields.next().and_then(|s| s.parse::<u8>().ok());
                match (vertex, color) {
                    (Some(vertex), Some(color)) if vertex >= 1 && (1..=3).contains(&color) => {
                        coloring.set(vertex - 1, color);
                    }
                    _ => return Err(SolutionError::Malformed { line }),
                }
            }
            _ => return Err(SolutionError::Malformed { line }),
        }
    }
    match status {
        Some("3COLORABLE") => Ok(ParsedSolution::Colored(coloring)),
        Some("NOT3COLORABLE") => Ok(ParsedSolution::NotColorable),
        Some("OUTSIDECLASS") => Ok(ParsedSolution::OutsideClass),
        _ => Err(SolutionError::MissingStatus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trifree_core::graph::InducedWitness;

    #[test]
    fn writes_coloring() {
        let mut c = Coloring::new();
        c.set(0, 1);
        c.set(1, 2);
        assert_eq!(
            write_outcome(&SolveOutcome::Colored(c)),
            "s 3COLORABLE\nv 1 1\nv 2 2\n"
        );
    }

    #[test]
    fn writes_verdict_and_witness() {
        assert_eq!(write_outcome(&SolveOutcome::NotColorable), "s NOT3COLORABLE\n");
        let w = InducedWitness { kind: WitnessKind::Cycle, vertices: vec![0, 1, 2] };
        assert_eq!(
            write_outcome(&SolveOutcome::OutsideClass(w)),
            "s OUTSIDECLASS\nw triangle 1 2 3\n"
        );
    }

    #[test]
    fn parse_round_trip() {
        let mut c = Coloring::new();
        c.set(0, 1);
        c.set(4, 3);
        let text = write_outcome(&SolveOutcome::Colored(c.clone()));
        assert_eq!(parse_solution(&text), Ok(ParsedSolution::Colored(c)));
    }
}
