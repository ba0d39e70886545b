//! Classification of vertices by their anchors on a fixed induced 5-, 6-,
//! or 7-cycle or shell, and the five-set partition audit the case solvers
//! lean on.
//!
//! Index arithmetic is modulo the cycle length throughout; positions refer
//! to the cycle order handed in by the caller.

use crate::graph::{Graph, InducedWitness, VertexId};
use alloc::vec::Vec;
use core::fmt;

/// A vertex whose anchor set fits no case of the classification, certifying
/// the input lies outside the promised graph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnclassifiableVertex {
    pub vertex: VertexId,
    pub anchors: Vec<usize>,
}

impl fmt::Display for UnclassifiableVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} has anchor positions {:?}", self.vertex, self.anchors)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for UnclassifiableVertex {}

/// Vertex classes relative to a 7-gon: clones (two anchors two apart),
/// propellers (an antipodal-ish pair three apart), stars (an alternating
/// triple), and the cycle-free rest split by what they can reach.
#[derive(Debug, Clone)]
pub struct SevenGonPartition {
    pub cycle: [VertexId; 7],
    pub clones: [Vec<VertexId>; 7],
    pub propellers: [Vec<VertexId>; 7],
    pub stars: [Vec<VertexId>; 7],
    /// Cycle-free vertices with a propeller neighbor.
    pub outer_p: Vec<VertexId>,
    /// Remaining cycle-free vertices with a star neighbor.
    pub outer_s: Vec<VertexId>,
    /// Cycle-free vertices seeing neither.
    pub outer_rest: Vec<VertexId>,
}

impl SevenGonPartition {
    pub fn clone_union(&self) -> Vec<VertexId> {
        self.clones.iter().flatten().copied().collect()
    }

    pub fn propeller_union(&self) -> Vec<VertexId> {
        self.propellers.iter().flatten().copied().collect()
    }

    pub fn star_union(&self) -> Vec<VertexId> {
        self.stars.iter().flatten().copied().collect()
    }
}

/// Classifies every vertex outside a given induced 7-cycle.
pub fn classify_wrt_7gon(
    g: &Graph,
    cycle: &[VertexId; 7],
) -> Result<SevenGonPartition, UnclassifiableVertex> {
    let mut part = SevenGonPartition {
        cycle: *cycle,
        clones: Default::default(),
        propellers: Default::default(),
        stars: Default::default(),
        outer_p: Vec::new(),
        outer_s: Vec::new(),
        outer_rest: Vec::new(),
    };
    let mut outer = Vec::new();
    for &v in g.vertices() {
        if cycle.contains(&v) {
            continue;
        }
        let anchors: Vec<usize> = (0..7).filter(|&i| g.adjacent(v, cycle[i])).collect();
        match anchors.len() {
            0 => outer.push(v),
            2 => {
                let (a, b) = (anchors[0], anchors[1]);
                match b - a {
                    2 => part.clones[(a + 1) % 7].push(v),
                    5 => part.clones[(a + 6) % 7].push(v),
                    3 => part.propellers[a].push(v),
                    4 => part.propellers[b].push(v),
                    _ => return Err(UnclassifiableVertex { vertex: v, anchors }),
                }
            }
            3 => {
                let center = (0..3).find(|&c| {
                    let mid = anchors[c];
                    anchors
                        .iter()
                        .all(|&x| x == mid || (mid + 2) % 7 == x || (mid + 5) % 7 == x)
                });
                match center {
                    Some(c) => part.stars[anchors[c]].push(v),
                    None => return Err(UnclassifiableVertex { vertex: v, anchors }),
                }
            }
            _ => return Err(UnclassifiableVertex { vertex: v, anchors }),
        }
    }
    let props = part.propeller_union();
    let stars = part.star_union();
    for v in outer {
        if g.has_neighbor_in(v, &props) {
            part.outer_p.push(v);
        } else if g.has_neighbor_in(v, &stars) {
            part.outer_s.push(v);
        } else {
            part.outer_rest.push(v);
        }
    }
    Ok(part)
}

/// Vertex classes relative to a 6-gon: leaves, clones, propellers, the two
/// alternating stars, and the cycle-free rest.
#[derive(Debug, Clone)]
pub struct SixGonPartition {
    pub cycle: [VertexId; 6],
    pub leaves: [Vec<VertexId>; 6],
    pub clones: [Vec<VertexId>; 6],
    /// Propellers at {i, i+3}, indexed by i in 0..3.
    pub propellers: [Vec<VertexId>; 3],
    pub even_stars: Vec<VertexId>,
    pub odd_stars: Vec<VertexId>,
    /// Cycle-free vertices with a clone neighbor.
    pub outer_cl: Vec<VertexId>,
    /// Remaining cycle-free vertices with a propeller neighbor.
    pub outer_p: Vec<VertexId>,
    pub outer_rest: Vec<VertexId>,
}

impl SixGonPartition {
    pub fn leaf_union(&self) -> Vec<VertexId> {
        self.leaves.iter().flatten().copied().collect()
    }

    pub fn clone_union(&self) -> Vec<VertexId> {
        self.clones.iter().flatten().copied().collect()
    }

    pub fn propeller_union(&self) -> Vec<VertexId> {
        self.propellers.iter().flatten().copied().collect()
    }

    pub fn star_union(&self) -> Vec<VertexId> {
        let mut out = self.even_stars.clone();
        out.extend_from_slice(&self.odd_stars);
        out
    }
}

/// Classifies every vertex outside a given induced 6-cycle of a
/// triangle-free graph.
pub fn classify_wrt_6gon(
    g: &Graph,
    cycle: &[VertexId; 6],
) -> Result<SixGonPartition, UnclassifiableVertex> {
    let mut part = SixGonPartition {
        cycle: *cycle,
        leaves: Default::default(),
        clones: Default::default(),
        propellers: Default::default(),
        even_stars: Vec::new(),
        odd_stars: Vec::new(),
        outer_cl: Vec::new(),
        outer_p: Vec::new(),
        outer_rest: Vec::new(),
    };
    let mut outer = Vec::new();
    for &v in g.vertices() {
        if cycle.contains(&v) {
            continue;
        }
        let anchors: Vec<usize> = (0..6).filter(|&i| g.adjacent(v, cycle[i])).collect();
        match anchors[..] {
            [] => outer.push(v),
            [i] => part.leaves[i].push(v),
            [a, b] if b - a == 2 => part.clones[a + 1].push(v),
            [a, b] if b - a == 4 => part.clones[(a + 5) % 6].push(v),
            [a, b] if b - a == 3 => part.propellers[a].push(v),
            [0, 2, 4] => part.even_stars.push(v),
            [1, 3, 5] => part.odd_stars.push(v),
            _ => return Err(UnclassifiableVertex { vertex: v, anchors }),
        }
    }
    let clones = part.clone_union();
    let props = part.propeller_union();
    for v in outer {
        if g.has_neighbor_in(v, &clones) {
            part.outer_cl.push(v);
        } else if g.has_neighbor_in(v, &props) {
            part.outer_p.push(v);
        } else {
            part.outer_rest.push(v);
        }
    }
    Ok(part)
}

/// Vertex classes relative to a 5-gon: leaves and clones only, plus the
/// cycle-free rest and the per-position second-layer sets.
#[derive(Debug, Clone)]
pub struct FiveGonPartition {
    pub cycle: [VertexId; 5],
    pub leaves: [Vec<VertexId>; 5],
    pub clones: [Vec<VertexId>; 5],
    /// Cycle-free vertices with a leaf neighbor.
    pub outer_m: Vec<VertexId>,
    /// Remaining cycle-free vertices with a clone neighbor.
    pub outer_cl: Vec<VertexId>,
    pub outer_rest: Vec<VertexId>,
    /// outer_m vertices with a neighbor among the leaves at i.
    pub outer_m_at: [Vec<VertexId>; 5],
    /// outer_cl vertices with a neighbor among the clones at i.
    pub outer_cl_at: [Vec<VertexId>; 5],
    /// Leaves with a neighbor in `outer_m_at[i]`.
    pub leaf_core: [Vec<VertexId>; 5],
}

impl FiveGonPartition {
    pub fn leaf_union(&self) -> Vec<VertexId> {
        self.leaves.iter().flatten().copied().collect()
    }

    pub fn clone_union(&self) -> Vec<VertexId> {
        self.clones.iter().flatten().copied().collect()
    }
}

/// Classifies every vertex outside a given induced 5-cycle of a
/// triangle-free graph.
pub fn classify_wrt_5gon(
    g: &Graph,
    cycle: &[VertexId; 5],
) -> Result<FiveGonPartition, UnclassifiableVertex> {
    let mut part = FiveGonPartition {
        cycle: *cycle,
        leaves: Default::default(),
        clones: Default::default(),
        outer_m: Vec::new(),
        outer_cl: Vec::new(),
        outer_rest: Vec::new(),
        outer_m_at: Default::default(),
        outer_cl_at: Default::default(),
        leaf_core: Default::default(),
    };
    let mut outer = Vec::new();
    for &v in g.vertices() {
        if cycle.contains(&v) {
            continue;
        }
        let anchors: Vec<usize> = (0..5).filter(|&i| g.adjacent(v, cycle[i])).collect();
        match anchors[..] {
            [] => outer.push(v),
            [i] => part.leaves[i].push(v),
            [a, b] if b - a == 2 => part.clones[a + 1].push(v),
            [a, b] if b - a == 3 => part.clones[(a + 4) % 5].push(v),
            _ => return Err(UnclassifiableVertex { vertex: v, anchors }),
        }
    }
    let leaves = part.leaf_union();
    let clones = part.clone_union();
    for v in outer {
        if g.has_neighbor_in(v, &leaves) {
            part.outer_m.push(v);
        } else if g.has_neighbor_in(v, &clones) {
            part.outer_cl.push(v);
        } else {
            part.outer_rest.push(v);
        }
    }
    for i in 0..5 {
        for &x in &part.outer_m {
            if g.has_neighbor_in(x, &part.leaves[i]) {
                part.outer_m_at[i].push(x);
            }
        }
        for &y in &part.outer_cl {
            if g.has_neighbor_in(y, &part.clones[i]) {
                part.outer_cl_at[i].push(y);
            }
        }
        for &m in &part.leaf_union() {
            if g.has_neighbor_in(m, &part.outer_m_at[i]) {
                part.leaf_core[i].push(m);
            }
        }
    }
    Ok(part)
}

/// Breadth layers around a shell: `near` touches the ring or peg, `far`
/// touches `near`, `beyond` is the rest; `peg_leaves` hang off the peg
/// alone.
#[derive(Debug, Clone)]
pub struct ShellPartition {
    pub ring: [VertexId; 6],
    pub peg: VertexId,
    pub near: Vec<VertexId>,
    pub far: Vec<VertexId>,
    pub beyond: Vec<VertexId>,
    pub peg_leaves: Vec<VertexId>,
}

/// Computes the shell layers from a verified shell witness.
pub fn shell_partition(g: &Graph, shell: &InducedWitness) -> ShellPartition {
    let ring: [VertexId; 6] = shell.vertices[..6].try_into().expect("shell has six ring vertices");
    let peg = shell.vertices[6];
    let mut hub = ring.to_vec();
    hub.push(peg);
    let mut near = Vec::new();
    let mut rest = Vec::new();
    for &v in g.vertices() {
        if hub.contains(&v) {
            continue;
        }
        if g.has_neighbor_in(v, &hub) {
            near.push(v);
        } else {
            rest.push(v);
        }
    }
    let mut far = Vec::new();
    let mut beyond = Vec::new();
    for v in rest {
        if g.has_neighbor_in(v, &near) {
            far.push(v);
        } else {
            beyond.push(v);
        }
    }
    let peg_leaves = near
        .iter()
        .copied()
        .filter(|&v| g.adjacent(v, peg) && ring.iter().all(|&r| !g.adjacent(v, r)))
        .collect();
    ShellPartition { ring, peg, near, far, beyond, peg_leaves }
}

/// The five-set partition audit: hypotheses and conclusions of the
/// structural lemma the case solvers use to bound component sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreeEdgeReport {
    Pass,
    HypothesisBroken(&'static str),
    BeyondNotEmpty(VertexId),
    ComponentTooBig(VertexId),
    ComponentNotBipartite(VertexId),
    AnchorNotCompleteToSide(VertexId),
}

/// Checks the five-set partition hypotheses and verifies its conclusions on
/// the instance: the beyond set is empty, every `r`-component is bipartite,
/// components are small when every `q` has an all-`p` approach path, and
/// big components have `q0` complete to one side.
#[allow(clippy::too_many_arguments)]
pub fn assert_three_edge(
    g: &Graph,
    p: &[VertexId],
    q: &[VertexId],
    r: &[VertexId],
    s: &[VertexId],
    t: &[VertexId],
    q0: Option<VertexId>,
) -> ThreeEdgeReport {
    let mut all: Vec<VertexId> = Vec::new();
    for part in [p, q, r, s, t] {
        all.extend_from_slice(part);
    }
    all.sort_unstable();
    all.dedup();
    if all.len() != g.order() || !all.iter().all(|&v| g.contains(v)) {
        return ThreeEdgeReport::HypothesisBroken("parts do not partition the graph");
    }
    for &u in p.iter().chain(t.iter()) {
        for &v in r.iter().chain(s.iter()) {
            if g.adjacent(u, v) {
                return ThreeEdgeReport::HypothesisBroken("p or t touches r or s");
            }
        }
    }
    for &u in s {
        for &v in p.iter().chain(q.iter()) {
            if g.adjacent(u, v) {
                return ThreeEdgeReport::HypothesisBroken("s touches p or q");
            }
        }
    }
    for &v in r {
        if !g.has_neighbor_in(v, q) {
            return ThreeEdgeReport::HypothesisBroken("an r vertex misses q");
        }
    }
    let has_approach = |end: VertexId, first_from: &[VertexId]| -> bool {
        for &p3 in p {
            if !g.adjacent(p3, end) {
                continue;
            }
            for &p2 in p {
                if p2 == p3 || !g.adjacent(p2, p3) || g.adjacent(p2, end) {
                    continue;
                }
                for &p1 in first_from {
                    if p1 != p2
                        && p1 != p3
                        && g.adjacent(p1, p2)
                        && !g.adjacent(p1, p3)
                        && !g.adjacent(p1, end)
                    {
                        return true;
                    }
                }
            }
        }
        false
    };
    let q0 = match q0 {
        Some(v) => v,
        None => match q.iter().copied().find(|&v| has_approach(v, p)) {
            Some(v) => v,
            None if q.is_empty() && r.is_empty() && s.is_empty() => {
                return ThreeEdgeReport::Pass
            }
            None => return ThreeEdgeReport::HypothesisBroken("no anchored q vertex"),
        },
    };
    if !has_approach(q0, p) {
        return ThreeEdgeReport::HypothesisBroken("q0 has no all-p approach path");
    }
    let mut p_or_q0 = p.to_vec();
    p_or_q0.push(q0);
    for &v in q {
        if !has_approach(v, &p_or_q0) {
            return ThreeEdgeReport::HypothesisBroken("a q vertex has no approach path");
        }
    }

    if let Some(&v) = s.first() {
        return ThreeEdgeReport::BeyondNotEmpty(v);
    }
    let all_strict = q.iter().all(|&v| has_approach(v, p));
    for comp in sub_components(g, r) {
        let Some((side_a, side_b)) = bipartition(g, &comp) else {
            return ThreeEdgeReport::ComponentNotBipartite(comp[0]);
        };
        if comp.len() > 2 {
            if all_strict {
                return ThreeEdgeReport::ComponentTooBig(comp[0]);
            }
            let complete = |side: &[VertexId]| side.iter().all(|&v| g.adjacent(q0, v));
            if !complete(&side_a) && !complete(&side_b) {
                return ThreeEdgeReport::AnchorNotCompleteToSide(comp[0]);
            }
        }
    }
    ThreeEdgeReport::Pass
}

/// Partition invariants around a 7-gon on a clean connected in-class graph:
/// the outer layer avoids the cycle and its clones, reaches its anchors,
/// splits into stable or tiny pieces, and nothing is left unreachable.
pub fn audit_seven_gon(g: &Graph, part: &SevenGonPartition) -> Result<(), &'static str> {
    let outer: Vec<VertexId> = part
        .outer_p
        .iter()
        .chain(part.outer_s.iter())
        .chain(part.outer_rest.iter())
        .copied()
        .collect();
    let clones = part.clone_union();
    let props = part.propeller_union();
    for &v in &outer {
        if g.has_neighbor_in(v, &clones) {
            return Err("outer vertex adjacent to a clone");
        }
    }
    for &v in part.outer_s.iter().chain(part.outer_rest.iter()) {
        if g.has_neighbor_in(v, &props) {
            return Err("outer star-side vertex adjacent to a propeller");
        }
    }
    for (i, &x) in part.outer_p.iter().enumerate() {
        for &x2 in &part.outer_p[i + 1..] {
            if g.adjacent(x, x2) {
                return Err("propeller-side outer vertices adjacent");
            }
        }
        for &y in part.outer_s.iter().chain(part.outer_rest.iter()) {
            if g.adjacent(x, y) {
                return Err("propeller-side outer vertex touches the star side");
            }
        }
    }
    if !part.outer_rest.is_empty() {
        return Err("outer vertex reaches neither propellers nor stars");
    }
    for comp in sub_components(g, &part.outer_s) {
        if comp.len() > 2 {
            return Err("star-side outer component above two vertices");
        }
    }
    Ok(())
}

/// Partition invariants around a 6-gon of a {P7,C3,C7}-free graph.
pub fn audit_six_gon(g: &Graph, part: &SixGonPartition) -> Result<(), &'static str> {
    let outer: Vec<VertexId> = part
        .outer_cl
        .iter()
        .chain(part.outer_p.iter())
        .chain(part.outer_rest.iter())
        .copied()
        .collect();
    let leaves = part.leaf_union();
    let clones = part.clone_union();
    let props = part.propeller_union();
    for &v in &outer {
        if g.has_neighbor_in(v, &leaves) {
            return Err("outer vertex adjacent to a leaf");
        }
    }
    for &v in part.outer_p.iter().chain(part.outer_rest.iter()) {
        if g.has_neighbor_in(v, &clones) {
            return Err("outer propeller-side vertex adjacent to a clone");
        }
    }
    for &v in &part.outer_rest {
        if g.has_neighbor_in(v, &props) {
            return Err("unreached outer vertex adjacent to a propeller");
        }
    }
    for (i, &x) in part.outer_cl.iter().enumerate() {
        for &x2 in &part.outer_cl[i + 1..] {
            if g.adjacent(x, x2) {
                return Err("clone-side outer vertices adjacent");
            }
        }
        for &y in part.outer_p.iter().chain(part.outer_rest.iter()) {
            if g.adjacent(x, y) {
                return Err("clone-side outer vertex touches the propeller side");
            }
        }
    }
    for i in 0..6 {
        if !part.leaves[i].is_empty()
            && !(part.leaves[(i + 2) % 6].is_empty() && part.leaves[(i + 4) % 6].is_empty())
        {
            return Err("leaves at interleaved positions");
        }
    }
    for &v in &outer {
        let touched: Vec<usize> = (0..6)
            .filter(|&i| g.has_neighbor_in(v, &part.clones[i]))
            .collect();
        if touched.len() > 1 {
            return Err("outer vertex adjacent to clones at two positions");
        }
    }
    Ok(())
}

/// Shell layer invariants on a clean connected {P7,C3,C7}-free graph.
pub fn audit_shell(g: &Graph, part: &ShellPartition) -> Result<(), &'static str> {
    if !part.beyond.is_empty() {
        return Err("shell has vertices beyond the second layer");
    }
    for &q in &part.near {
        if !g.has_neighbor_in(q, &part.far) {
            continue;
        }
        let ring_anchors = part.ring.iter().filter(|&&r| g.adjacent(q, r)).count();
        if ring_anchors < 2 && !part.peg_leaves.contains(&q) {
            return Err("far-reaching near vertex with under two ring anchors");
        }
    }
    for comp in sub_components(g, &part.far) {
        if comp.len() > 2 {
            return Err("far component above two vertices");
        }
    }
    Ok(())
}

/// Partition invariants around a 5-gon on a clean connected
/// {P7,C3,C7,shell}-free graph, including the pairing of the second layer.
pub fn audit_five_gon(g: &Graph, part: &FiveGonPartition) -> Result<(), &'static str> {
    if !part.outer_rest.is_empty() {
        return Err("5-gon outer vertex reaches neither leaves nor clones");
    }
    for (i, &x) in part.outer_m.iter().enumerate() {
        for &x2 in &part.outer_m[i + 1..] {
            if g.adjacent(x, x2) {
                return Err("leaf-side outer vertices adjacent");
            }
        }
        for &y in &part.outer_cl {
            if g.adjacent(x, y) {
                return Err("leaf-side outer vertex touches the clone side");
            }
        }
        let homes = (0..5).filter(|&i| part.outer_m_at[i].contains(&x)).count();
        if homes != 1 {
            return Err("leaf-side outer vertex not at exactly one position");
        }
    }
    for i in 0..5 {
        for &x in &part.outer_m_at[i] {
            if !g.has_neighbor_in(x, &part.clones[i]) {
                return Err("leaf-side outer vertex missing its clone anchor");
            }
            for j in 0..5 {
                if j != i && g.has_neighbor_in(x, &part.clones[j]) {
                    return Err("leaf-side outer vertex anchored at two clone positions");
                }
            }
        }
        for &y in &part.outer_cl_at[i] {
            for j in [(i + 1) % 5, (i + 4) % 5] {
                if g.has_neighbor_in(y, &part.clones[j]) {
                    return Err("clone-side outer vertex touching adjacent positions");
                }
            }
        }
        for &m in &part.leaf_core[i] {
            if !part.leaves[i].contains(&m) {
                return Err("leaf core outside its own position");
            }
            for &u in g.neighbors(m) {
                let ok = u == part.cycle[i]
                    || part.clones[i].contains(&u)
                    || part.outer_m_at[i].contains(&u);
                if !ok {
                    return Err("leaf core vertex with a stray neighbor");
                }
            }
        }
        for j in i + 1..5 {
            for &y in &part.outer_cl_at[i] {
                if part.outer_cl_at[j].contains(&y) {
                    return Err("clone-side outer vertex at two positions");
                }
                for &y2 in &part.outer_cl_at[j] {
                    if g.adjacent(y, y2) {
                        return Err("clone-side outer vertices adjacent across positions");
                    }
                }
            }
        }
        let mut members = part.leaf_core[i].clone();
        members.extend_from_slice(&part.outer_m_at[i]);
        members.extend_from_slice(&part.outer_cl_at[i]);
        members.sort_unstable();
        members.dedup();
        for comp in sub_components(g, &members) {
            if comp.len() != 2 {
                return Err("second-layer component at a position is not a pair");
            }
        }
    }
    Ok(())
}

/// Connected components of the induced subgraph on `set`.
pub fn sub_components(g: &Graph, set: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut remaining: Vec<VertexId> = set.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut comps = Vec::new();
    while let Some(&root) = remaining.first() {
        let mut comp = alloc::vec![root];
        let mut head = 0;
        remaining.retain(|&v| v != root);
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            let next: Vec<VertexId> =
                remaining.iter().copied().filter(|&v| g.adjacent(u, v)).collect();
            for v in next {
                remaining.retain(|&x| x != v);
                comp.push(v);
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Two-sides split of a connected bipartite set, or `None` when odd.
fn bipartition(g: &Graph, comp: &[VertexId]) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut side: BTreeMapSide = BTreeMapSide::new();
    let root = comp[0];
    side.set(root, 0);
    let mut queue = alloc::vec![root];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in comp {
            if v != u && g.adjacent(u, v) {
                match side.get(v) {
                    None => {
                        side.set(v, 1 - side.get(u).unwrap());
                        queue.push(v);
                    }
                    Some(sv) if sv == side.get(u).unwrap() => return None,
                    _ => {}
                }
            }
        }
    }
    let a = comp.iter().copied().filter(|&v| side.get(v) == Some(0)).collect();
    let b = comp.iter().copied().filter(|&v| side.get(v) == Some(1)).collect();
    Some((a, b))
}

struct BTreeMapSide(alloc::collections::BTreeMap<VertexId, u8>);

impl BTreeMapSide {
    fn new() -> Self {
        BTreeMapSide(alloc::collections::BTreeMap::new())
    }

    fn set(&mut self, v: VertexId, s: u8) {
        self.0.insert(v, s);
    }

    fn get(&self, v: VertexId) -> Option<u8> {
        self.0.get(&v).copied()
    }
}
