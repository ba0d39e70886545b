//! Degree-chain structure of bipartite graphs whose complement has no
//! induced C4 restricted to opposite sides: neighborhoods on each side are
//! nested by degree, so one side splits into equal-neighborhood classes and
//! the other side orders into a chain.

use crate::graph::{Graph, VertexId};
use alloc::vec::Vec;
use core::fmt;

/// Partition of side A into equal-neighborhood classes (ascending degree)
/// together with an ordering of side B (ascending degree) such that a B
/// vertex complete to a class is complete to every later class, and every
/// later B vertex is too.
#[derive(Debug, Clone)]
pub struct ChainPartition {
    pub classes: Vec<Vec<VertexId>>,
    pub order: Vec<VertexId>,
}

/// Four vertices `a, b, a', b'` with edges `ab`, `a'b'` and non-edges
/// `ab'`, `a'b`: the nesting obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPair {
    pub vertices: [VertexId; 4],
}

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, a2, b2] = self.vertices;
        write!(f, "crossing private neighbors: {a}-{b} and {a2}-{b2}")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CrossingPair {}

/// Computes the chain partition of a bipartite graph given its sides, or
/// returns the crossing witness that certifies the nesting hypothesis fails.
pub fn chain_partition(
    h: &Graph,
    side_a: &[VertexId],
    side_b: &[VertexId],
) -> Result<ChainPartition, CrossingPair> {
    for side in [side_a, side_b] {
        if let Some(w) = nesting_violation(h, side) {
            return Err(w);
        }
    }
    let mut a_sorted = side_a.to_vec();
    a_sorted.sort_unstable_by_key(|&v| (h.degree(v), v));
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for &a in &a_sorted {
        match classes.last_mut() {
            Some(class) if h.degree(class[0]) == h.degree(a) => class.push(a),
            _ => classes.push(alloc::vec![a]),
        }
    }
    let mut order = side_b.to_vec();
    order.sort_unstable_by_key(|&v| (h.degree(v), v));
    Ok(ChainPartition { classes, order })
}

/// Finds `a, a'` on one side with `deg(a) <= deg(a')` but a private
/// neighbor each, which yields the four-vertex witness.
fn nesting_violation(h: &Graph, side: &[VertexId]) -> Option<CrossingPair> {
    for (i, &a) in side.iter().enumerate() {
        for &a2 in &side[i + 1..] {
            let (lo, hi) = if h.degree(a) <= h.degree(a2) { (a, a2) } else { (a2, a) };
            let private_lo = h.neighbors(lo).iter().find(|&&b| !h.adjacent(hi, b));
            if let Some(&b) = private_lo {
                let &b2 = h
                    .neighbors(hi)
                    .iter()
                    .find(|&&x| !h.adjacent(lo, x))
                    .expect("degree(hi) >= degree(lo) forces a private neighbor");
                return Some(CrossingPair { vertices: [lo, b, hi, b2] });
            }
        }
    }
    None
}

impl ChainPartition {
    /// Re-checks both chain conclusions; `true` on success. Used by tests
    /// and scene audits.
    pub fn check(&self, h: &Graph) -> bool {
        for class in &self.classes {
            let first = class[0];
            if class
                .iter()
                .any(|&a| h.neighbors(a) != h.neighbors(first))
            {
                return false;
            }
        }
        for (ci, class) in self.classes.iter().enumerate() {
            for (bi, &b) in self.order.iter().enumerate() {
                if class.iter().all(|&a| h.adjacent(a, b)) && !class.is_empty() {
                    let tail_a: Vec<VertexId> = self.classes[ci..]
                        .iter()
                        .flat_map(|c| c.iter().copied())
                        .collect();
                    for &b2 in &self.order[bi..] {
                        if tail_a.iter().any(|&a| !h.adjacent(a, b2)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_singleton_classes() {
        // a1-b2, a2-b1, a2-b2: degrees split A into {a1}, {a2}.
        let h = Graph::build(4, &[(0, 3), (1, 2), (1, 3)]).unwrap();
        let cp = chain_partition(&h, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(cp.classes, alloc::vec![alloc::vec![0], alloc::vec![1]]);
        assert_eq!(cp.order, alloc::vec![2, 3]);
        assert!(cp.check(&h));
        // b2 is complete to the first class, and indeed both A vertices are
        // complete to {b2}.
        assert!(h.adjacent(0, 3) && h.adjacent(1, 3));
    }

    #[test]
    fn complete_bipartite_single_class() {
        let h = Graph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let cp = chain_partition(&h, &[0, 1], &[2, 3, 4]).unwrap();
        assert_eq!(cp.classes.len(), 1);
        assert_eq!(cp.classes[0], alloc::vec![0, 1]);
        assert!(cp.check(&h));
    }

    #[test]
    fn single_edge() {
        let h = Graph::build(2, &[(0, 1)]).unwrap();
        let cp = chain_partition(&h, &[0], &[1]).unwrap();
        assert_eq!(cp.classes, alloc::vec![alloc::vec![0]]);
        assert!(cp.check(&h));
    }

    #[test]
    fn crossing_rejected_with_witness() {
        // Perfect matching on two pairs: a1-b1, a2-b2 cross.
        let h = Graph::build(4, &[(0, 2), (1, 3)]).unwrap();
        let err = chain_partition(&h, &[0, 1], &[2, 3]).unwrap_err();
        let [a, b, a2, b2] = err.vertices;
        assert!(h.adjacent(a, b) && h.adjacent(a2, b2));
        assert!(!h.adjacent(a, b2) && !h.adjacent(a2, b));
    }

    #[test]
    fn isolated_vertices_form_bottom_class() {
        let h = Graph::build(4, &[(1, 3)]).unwrap();
        let cp = chain_partition(&h, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(cp.classes, alloc::vec![alloc::vec![0], alloc::vec![1]]);
        assert!(cp.check(&h));
    }
}
