//! Immutable simple graphs with stable vertex identities, plus the induced
//! substructure searches the solvers dispatch on.
//!
//! Vertex ids are dense integers assigned at construction and are never
//! renumbered: an induced subgraph keeps the ids of the vertices it retains,
//! so journals and restriction elements can refer to vertices across
//! deletions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Stable vertex identifier.
pub type VertexId = u32;

/// Error raised by [`Graph::build`] on malformed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(VertexId),
    OutOfRange(VertexId),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::OutOfRange(v) => write!(f, "vertex id {v} out of range"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}

/// An immutable simple undirected graph.
///
/// `universe` is the id space the graph was built over; `present` marks which
/// ids are still alive (deletions produce a new `Graph` over the same
/// universe). Adjacency is stored both as sorted neighbor lists and as a bit
/// matrix, since the reduction lemmas perform a very large number of pair
/// queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    universe: u32,
    present: Vec<bool>,
    vertices: Vec<VertexId>,
    neighbors: Vec<Vec<VertexId>>,
    rows: Vec<BitRow>,
}

#[derive(Clone, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(universe: u32) -> Self {
        BitRow(vec![0u64; (universe as usize + 63) / 64])
    }

    fn set(&mut self, v: VertexId) {
        self.0[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    fn clear(&mut self, v: VertexId) {
        self.0[(v / 64) as usize] &= !(1u64 << (v % 64));
    }

    fn get(&self, v: VertexId) -> bool {
        self.0[(v / 64) as usize] >> (v % 64) & 1 == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Builds a graph on ids `0..n` from an edge list. Duplicate edges are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let universe = n as u32;
        let mut rows: Vec<BitRow> = (0..n).map(|_| BitRow::new(universe)).collect();
        for &(u, v) in edges {
            if u >= universe {
                return Err(GraphError::OutOfRange(u));
            }
            if v >= universe {
                return Err(GraphError::OutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u as usize].set(v);
            rows[v as usize].set(u);
        }
        let neighbors = (0..n)
            .map(|u| (0..universe).filter(|&v| rows[u].get(v)).collect())
            .collect();
        Ok(Graph {
            universe,
            present: vec![true; n],
            vertices: (0..universe).collect(),
            neighbors,
            rows,
        })
    }

    /// The id space this graph (and all graphs derived from it) lives in.
    pub fn universe(&self) -> u32 {
        self.universe
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.present.len() && self.present[v as usize]
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u as usize].get(v)
    }

    /// Live neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v as usize].len()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &u in &self.vertices {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `v` has at least one neighbor inside `set`.
    pub fn has_neighbor_in(&self, v: VertexId, set: &[VertexId]) -> bool {
        set.iter().any(|&s| self.adjacent(v, s))
    }

    /// `v` is adjacent to every vertex of `set`.
    pub fn complete_to(&self, v: VertexId, set: &[VertexId]) -> bool {
        set.iter().all(|&s| self.adjacent(v, s))
    }

    /// `v` is adjacent to no vertex of `set`.
    pub fn anticomplete_to(&self, v: VertexId, set: &[VertexId]) -> bool {
        !self.has_neighbor_in(v, set)
    }

    /// `v` has both a neighbor and a non-neighbor in `set`.
    pub fn mixed_on(&self, v: VertexId, set: &[VertexId]) -> bool {
        self.has_neighbor_in(v, set) && !self.complete_to(v, set)
    }

    /// `N(u) ⊆ N(v)`, by bit-row comparison.
    pub fn neighborhood_subset(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u as usize]
            .0
            .iter()
            .zip(self.rows[v as usize].0.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// `N(u) = N(v)` (false twins when also non-adjacent).
    pub fn same_neighborhood(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u as usize].0 == self.rows[v as usize].0
    }

    /// The induced subgraph on the live vertices not in `drop`. Ids are kept.
    pub fn delete(&self, drop: &[VertexId]) -> Graph {
        let mut g = self.clone();
        for &v in drop {
            if !g.contains(v) {
                continue;
            }
            g.present[v as usize] = false;
            for &u in &self.neighbors[v as usize].clone() {
                g.rows[u as usize].clear(v);
            }
            g.rows[v as usize] = BitRow::new(self.universe);
            g.neighbors[v as usize] = Vec::new();
        }
        g.vertices.retain(|&v| g.present[v as usize]);
        for &u in &g.vertices {
            g.neighbors[u as usize].retain(|&w| g.present[w as usize]);
        }
        g
    }

    /// The induced subgraph on `keep` (ids are kept).
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let keep_set: Vec<bool> = {
            let mut s = vec![false; self.universe as usize];
            for &v in keep {
                s[v as usize] = true;
            }
            s
        };
        let drop: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| !keep_set[v as usize])
            .collect();
        self.delete(&drop)
    }
}

/// Kind of induced substructure carried by an [`InducedWitness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Path,
    Cycle,
    Shell,
}

/// A certified induced substructure: an ordered vertex list whose induced
/// adjacency is re-checkable against the host graph.
///
/// For a shell the list holds the six ring vertices in cyclic order followed
/// by the peg vertex, whose only ring neighbors are an antipodal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<VertexId>,
}

impl InducedWitness {
    /// Re-checks that the listed vertices induce exactly the claimed
    /// structure in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| !g.contains(v)) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        match self.kind {
            WitnessKind::Path => {
                let k = vs.len();
                (0..k).all(|i| {
                    (i + 1..k).all(|j| g.adjacent(vs[i], vs[j]) == (j == i + 1))
                })
            }
            WitnessKind::Cycle => {
                let k = vs.len();
                if k < 3 {
                    return false;
                }
                (0..k).all(|i| {
                    (i + 1..k).all(|j| {
                        let cyclic = j == i + 1 || (i == 0 && j == k - 1);
                        g.adjacent(vs[i], vs[j]) == cyclic
                    })
                })
            }
            WitnessKind::Shell => {
                if vs.len() != 7 {
                    return false;
                }
                let ring = &vs[..6];
                let peg = vs[6];
                let ring_ok = (0..6).all(|i| {
                    (i + 1..6).all(|j| {
                        let cyclic = j == i + 1 || (i == 0 && j == 5);
                        g.adjacent(ring[i], ring[j]) == cyclic
                    })
                });
                if !ring_ok {
                    return false;
                }
                let anchors: Vec<usize> =
                    (0..6).filter(|&i| g.adjacent(peg, ring[i])).collect();
                matches!(anchors[..], [a, b] if b == a + 3)
            }
        }
    }
}

/// Three mutually adjacent vertices, or `None` if `g` is triangle-free.
/// Deterministic: the lexicographically least triple.
pub fn find_triangle(g: &Graph) -> Option<InducedWitness> {
    for &u in g.vertices() {
        for &v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for &w in g.neighbors(v) {
                if w > v && g.adjacent(u, w) {
                    return Some(InducedWitness {
                        kind: WitnessKind::Cycle,
                        vertices: vec![u, v, w],
                    });
                }
            }
        }
    }
    None
}

/// The lexicographically least induced path on `k` vertices, or `None` if
/// `g` is Pk-free.
///
/// False twins (equal neighborhoods) reach isomorphic search subtrees, so
/// at every branch point only the least untried member of each twin class
/// is explored; this keeps twin-heavy graphs tractable without changing
/// the found witness or the absence verdict.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<InducedWitness> {
    assert!(k >= 1);
    if k == 1 {
        return g.vertices().first().map(|&v| InducedWitness {
            kind: WitnessKind::Path,
            vertices: vec![v],
        });
    }
    let mut path = Vec::with_capacity(k);
    let mut tried: Vec<VertexId> = Vec::new();
    for &start in g.vertices() {
        if tried.iter().any(|&t| g.same_neighborhood(t, start)) {
            continue;
        }
        tried.push(start);
        path.clear();
        path.push(start);
        if extend_path(g, &mut path, k) {
            return Some(InducedWitness {
                kind: WitnessKind::Path,
                vertices: path,
            });
        }
    }
    None
}

/// Depth-first path extension: the next vertex must be adjacent to the last
/// path vertex and non-adjacent to all earlier ones; one candidate per twin
/// class.
fn extend_path(g: &Graph, path: &mut Vec<VertexId>, k: usize) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().unwrap();
    let mut tried: Vec<VertexId> = Vec::new();
    for &v in g.neighbors(last) {
        if path.contains(&v) {
            continue;
        }
        if path[..path.len() - 1].iter().any(|&p| g.adjacent(v, p)) {
            continue;
        }
        if tried.iter().any(|&t| g.same_neighborhood(t, v)) {
            continue;
        }
        tried.push(v);
        path.push(v);
        if extend_path(g, path, k) {
            return true;
        }
        path.pop();
    }
    false
}

/// The first induced k-cycle in canonical order, or `None` if `g` has none.
///
/// Canonical form: the least cycle vertex sits at position 0 and its
/// lower-id cycle neighbor at position 1.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Option<InducedWitness> {
    let mut found = None;
    for_each_induced_cycle(g, k, &mut |cycle| {
        found = Some(InducedWitness {
            kind: WitnessKind::Cycle,
            vertices: cycle.to_vec(),
        });
        false
    });
    found
}

/// Enumerates the induced k-cycles of `g` in canonical order, invoking `f`
/// on each; `f` returns `false` to stop early.
///
/// Every induced k-cycle is visited exactly once, rooted at its least vertex
/// with the lower-id neighbor second.
pub fn for_each_induced_cycle(g: &Graph, k: usize, f: &mut dyn FnMut(&[VertexId]) -> bool) {
    assert!(k >= 3);
    let mut path: Vec<VertexId> = Vec::with_capacity(k);
    for &root in g.vertices() {
        path.clear();
        path.push(root);
        if !extend_cycle(g, &mut path, k, f) {
            return;
        }
    }
}

/// Returns `false` when the callback asked to stop.
fn extend_cycle(g: &Graph, path: &mut Vec<VertexId>, k: usize, f: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
    let root = path[0];
    if path.len() == k {
        let last = *path.last().unwrap();
        // Direction tie-break: second vertex below last closes each cycle once.
        if g.adjacent(last, root) && path[1] < last {
            return f(path);
        }
        return true;
    }
    let last = *path.last().unwrap();
    for &v in g.neighbors(last) {
        if v <= root || path.contains(&v) {
            continue;
        }
        // Vertices strictly between the second and the closing position
        // must avoid the root; the second touches it by the cycle edge and
        // the closing one is required to.
        let filling_last = path.len() + 1 == k;
        if !filling_last && path.len() >= 2 && g.adjacent(v, root) {
            continue;
        }
        if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&p| g.adjacent(v, p)) {
            continue;
        }
        path.push(v);
        let keep_going = extend_cycle(g, path, k, f);
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// The first shell in canonical order: a 6-gon plus a vertex whose ring
/// anchors are exactly an antipodal pair.
pub fn find_shell(g: &Graph) -> Option<InducedWitness> {
    let mut found = None;
    for_each_induced_cycle(g, 6, &mut |ring| {
        for &p in g.vertices() {
            if ring.contains(&p) {
                continue;
            }
            let anchors: Vec<usize> = (0..6).filter(|&i| g.adjacent(p, ring[i])).collect();
            if let [a, b] = anchors[..] {
                if b == a + 3 {
                    let mut vs = ring.to_vec();
                    vs.push(p);
                    found = Some(InducedWitness {
                        kind: WitnessKind::Shell,
                        vertices: vs,
                    });
                    return false;
                }
            }
        }
        true
    });
    found
}

/// A proper 2-coloring via breadth-first layering, or the shortest induced
/// odd cycle as a non-bipartiteness witness.
pub fn bipartite_two_coloring(g: &Graph) -> Result<crate::palette::Coloring, InducedWitness> {
    let mut side = vec![u8::MAX; g.universe() as usize];
    let mut odd_edge = None;
    for &root in g.vertices() {
        if side[root as usize] != u8::MAX {
            continue;
        }
        side[root as usize] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in g.neighbors(u) {
                if side[v as usize] == u8::MAX {
                    side[v as usize] = 1 - side[u as usize];
                    queue.push(v);
                } else if side[v as usize] == side[u as usize] {
                    odd_edge = Some(());
                }
            }
        }
    }
    if odd_edge.is_none() {
        let mut c = crate::palette::Coloring::new();
        for &v in g.vertices() {
            c.set(v, side[v as usize] + 1);
        }
        return Ok(c);
    }
    // A shortest odd cycle is induced: any chord would split it into a
    // shorter odd cycle.
    let mut k = 3;
    while k <= g.order() {
        if let Some(w) = find_induced_cycle(g, k) {
            return Err(w);
        }
        k += 2;
    }
    unreachable!("graph with an odd closed walk has an induced odd cycle");
}

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.universe() as usize];
    let mut comps = Vec::new();
    for &root in g.vertices() {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut comp = vec![root];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((n as u32 - 1, 0));
        Graph::build(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    #[test]
    fn build_p3() {
        let g = path(3);
        let mut degs: Vec<_> = g.vertices().iter().map(|&v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 2]);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edges().len(), 0);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::OutOfRange(2))
        );
    }

    #[test]
    fn build_dedups_edges() {
        let g = Graph::build(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn triangle_absent_in_c5_and_petersen() {
        assert!(find_triangle(&cycle(5)).is_none());
        // Petersen has girth 5; confirmed against an exhaustive triple scan.
        let g = petersen();
        let n = g.order() as u32;
        let brute = (0..n).any(|u| {
            (u + 1..n).any(|v| {
                (v + 1..n)
                    .any(|w| g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w))
            })
        });
        assert!(!brute);
        assert!(find_triangle(&g).is_none());
    }

    #[test]
    fn triangle_in_k3() {
        let g = cycle(3);
        let w = find_triangle(&g).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(w.verify(&g));
    }

    #[test]
    fn induced_path_in_p7() {
        let g = path(7);
        let w = find_induced_path(&g, 7).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(w.verify(&g));
    }

    #[test]
    fn no_induced_p7_in_c7_or_c6() {
        assert!(find_induced_path(&cycle(7), 7).is_none());
        assert!(find_induced_path(&cycle(6), 7).is_none());
    }

    #[test]
    fn induced_cycle_in_c7() {
        let g = cycle(7);
        let w = find_induced_cycle(&g, 7).unwrap();
        assert!(w.verify(&g));
        assert_eq!(w.vertices[0], 0);
    }

    #[test]
    fn no_c5_in_c6() {
        assert!(find_induced_cycle(&cycle(6), 5).is_none());
    }

    #[test]
    fn two_disjoint_c5s_returns_lower_component() {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
        }
        let g = Graph::build(10, &edges).unwrap();
        let w = find_induced_cycle(&g, 5).unwrap();
        assert!(w.vertices.iter().all(|&v| v < 5));
        assert!(w.verify(&g));
    }

    /// Exhaustive oracle: `find_induced_path(g, k)` is absent iff no ordered
    /// k-subset induces a path, over all graphs on 5 vertices.
    #[test]
    fn induced_path_matches_exhaustive_enumeration() {
        let n = 5usize;
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            for k in 2..=4usize {
                let found = find_induced_path(&g, k);
                let brute = ordered_subsets(n as u32, k).into_iter().any(|seq| {
                    InducedWitness {
                        kind: WitnessKind::Path,
                        vertices: seq,
                    }
                    .verify(&g)
                });
                assert_eq!(found.is_some(), brute, "k={k} edges={edges:?}");
                if let Some(w) = found {
                    assert!(w.verify(&g));
                }
            }
        }
    }

    fn ordered_subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(n, k, cur, out);
                    cur.pop();
                }
            }
        }
        rec(n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn shell_found_in_figure_graph() {
        // Six-ring 0..5 plus peg 6 anchored at {0, 3}.
        let g = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3)],
        )
        .unwrap();
        let w = find_shell(&g).unwrap();
        assert!(w.verify(&g));
        assert_eq!(w.vertices[6], 6);
        assert!(g.adjacent(6, w.vertices[0]) && g.adjacent(6, w.vertices[3]));
    }

    #[test]
    fn no_shell_in_bare_c6() {
        assert!(find_shell(&cycle(6)).is_none());
    }

    #[test]
    fn no_shell_when_anchors_not_antipodal() {
        let g = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 1), (6, 3)],
        )
        .unwrap();
        assert!(find_shell(&g).is_none());
    }

    #[test]
    fn bipartite_c6() {
        let g = cycle(6);
        let c = bipartite_two_coloring(&g).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(c.get(u), c.get(v));
        }
    }

    #[test]
    fn bipartite_rejects_c5_with_witness() {
        let w = bipartite_two_coloring(&cycle(5)).unwrap_err();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.verify(&cycle(5)));
    }

    #[test]
    fn bipartite_empty_graph() {
        let g = Graph::build(3, &[]).unwrap();
        let c = bipartite_two_coloring(&g).unwrap();
        assert!(g.vertices().iter().all(|&v| c.get(v) == 1));
    }

    /// Bipartite 2-coloring succeeds iff no induced odd cycle exists, over
    /// all graphs on up to 5 vertices.
    #[test]
    fn bipartite_iff_no_induced_odd_cycle() {
        let n = 5usize;
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            let has_odd = (3..=n).step_by(2).any(|k| find_induced_cycle(&g, k).is_some());
            assert_eq!(bipartite_two_coloring(&g).is_ok(), !has_odd);
        }
    }

    #[test]
    fn components() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(connected_components(&path(7)).len(), 1);
        let single = Graph::build(1, &[]).unwrap();
        assert_eq!(connected_components(&single), vec![vec![0]]);
    }

    #[test]
    fn deletion_keeps_ids() {
        let g = cycle(5);
        let h = g.delete(&[2]);
        assert_eq!(h.vertices(), &[0, 1, 3, 4]);
        assert!(h.adjacent(3, 4) && h.adjacent(0, 1) && !h.adjacent(1, 3));
        assert!(!h.contains(2));
        // The original is untouched.
        assert!(g.contains(2) && g.adjacent(1, 2));
    }
}
