//! The case solvers and the top-level exact 3-coloring algorithm.
//!
//! After verifying the class promise and cleaning, each connected component
//! is dispatched on the longest structure it contains: a 7-gon, else a
//! shell, else a 5-gon, else the graph is bipartite. Each case pins the
//! colors of a small dominating skeleton, reduces the remainder to two-color
//! lists via the restriction and matched-pair engines, and decides the
//! leaves with the 2-SAT backend.
//!
//! Structural assertions failing at runtime mean the input broke the class
//! promise or a reduction is wrong; either way the affected component falls
//! back to brute force and the report flags it.

use crate::anchors::{
    self, classify_wrt_5gon, classify_wrt_6gon, classify_wrt_7gon, shell_partition,
    sub_components, SixGonPartition, UnclassifiableVertex,
};
use crate::cleaning::{clean, extend_coloring, ExtendError};
use crate::graph::{
    bipartite_two_coloring, connected_components, find_induced_cycle, find_induced_path,
    find_shell, find_triangle, for_each_induced_cycle, Graph, InducedWitness, VertexId,
};
use crate::pair_reduction::{reduce_pairs, PairReductionError, PairScene};
use crate::palette::{
    validate, Color, ColorSet, Coloring, ColoringProblem, ConstraintFamily, ListTooWide, Palette,
};
use crate::restriction::{
    build_restriction, RestrictionScene, RestrictionViolation,
};
use alloc::vec::Vec;
use core::fmt;

/// Result of a solve call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Colored(Coloring),
    NotColorable,
    /// The input contains a triangle or an induced P7; the witness
    /// re-validates.
    OutsideClass(InducedWitness),
}

/// Outcome plus metadata: `fallback_used` marks that a structural assertion
/// failed somewhere and a component was answered by brute force instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    pub fallback_used: bool,
}

/// Knobs for [`solve_with`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Verify {P7, triangle}-freeness up front (on by default); disabling
    /// it is only sound for inputs already known to be in class.
    pub check_promise: bool,
    /// Worker count for the branch pool; values above one take effect when
    /// the `parallel` feature is enabled.
    pub parallelism: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_promise: true, parallelism: 1 }
    }
}

/// An internal structural assertion that failed; carries enough context to
/// name the broken hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralViolation {
    Classify(UnclassifiableVertex),
    Restriction(RestrictionViolation),
    Pairs(PairReductionError),
    TwoList(ListTooWide),
    Extend(ExtendError),
    Named(&'static str),
}

impl fmt::Display for StructuralViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuralViolation::Classify(e) => write!(f, "unclassifiable: {e}"),
            StructuralViolation::Restriction(e) => write!(f, "restriction: {e}"),
            StructuralViolation::Pairs(e) => write!(f, "pair reduction: {e}"),
            StructuralViolation::TwoList(e) => write!(f, "two-list backend: {e}"),
            StructuralViolation::Extend(e) => write!(f, "journal replay: {e}"),
            StructuralViolation::Named(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for StructuralViolation {}

impl From<UnclassifiableVertex> for StructuralViolation {
    fn from(e: UnclassifiableVertex) -> Self {
        StructuralViolation::Classify(e)
    }
}

impl From<RestrictionViolation> for StructuralViolation {
    fn from(e: RestrictionViolation) -> Self {
        StructuralViolation::Restriction(e)
    }
}

impl From<PairReductionError> for StructuralViolation {
    fn from(e: PairReductionError) -> Self {
        StructuralViolation::Pairs(e)
    }
}

impl From<ListTooWide> for StructuralViolation {
    fn from(e: ListTooWide) -> Self {
        StructuralViolation::TwoList(e)
    }
}

impl From<ExtendError> for StructuralViolation {
    fn from(e: ExtendError) -> Self {
        StructuralViolation::Extend(e)
    }
}

type CaseResult = Result<Option<Coloring>, StructuralViolation>;

/// Deterministic first-success scan over independent branches: under the
/// `parallel` feature and a multi-thread pool this fans out but still
/// returns the leftmost hit, so parallelism never changes the answer.
fn find_first_branch<T, R, F>(items: &[T], f: F) -> Result<Option<R>, StructuralViolation>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<Option<R>, StructuralViolation> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if rayon::current_num_threads() > 1 {
            use rayon::prelude::*;
            return items
                .par_iter()
                .find_map_first(|t| match f(t) {
                    Ok(None) => None,
                    other => Some(other),
                })
                .unwrap_or(Ok(None));
        }
    }
    for t in items {
        match f(t) {
            Ok(None) => continue,
            other => return other,
        }
    }
    Ok(None)
}

/// Solves with default options.
pub fn solve(g: &Graph) -> SolveReport {
    solve_with(g, &SolveOptions::default())
}

/// The full pipeline: promise check, cleaning, per-component dispatch,
/// journal replay.
pub fn solve_with(g: &Graph, opts: &SolveOptions) -> SolveReport {
    #[cfg(feature = "parallel")]
    {
        if opts.parallelism > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.parallelism)
                .build();
            if let Ok(pool) = pool {
                let inner = SolveOptions { parallelism: 1, ..opts.clone() };
                return pool.install(|| solve_with(g, &inner));
            }
        }
    }
    if opts.check_promise {
        if let Some(w) = find_triangle(g) {
            return SolveReport { outcome: SolveOutcome::OutsideClass(w), fallback_used: false };
        }
        if let Some(w) = find_induced_path(g, 7) {
            return SolveReport { outcome: SolveOutcome::OutsideClass(w), fallback_used: false };
        }
    }
    let (cleaned, journal) = clean(g);
    let mut total = Coloring::new();
    let mut fallback_used = false;
    for comp in connected_components(&cleaned) {
        let sub = cleaned.induced(&comp);
        let result = match solve_component(&sub) {
            Ok(r) => r,
            Err(_violation) => {
                fallback_used = true;
                exhaustive_3color(&sub)
            }
        };
        match result {
            Some(c) => total.absorb(&c),
            None => {
                return SolveReport { outcome: SolveOutcome::NotColorable, fallback_used };
            }
        }
    }
    match extend_coloring(g, &journal, total) {
        Ok(full) if validate(&ColoringProblem::plain(g.clone()), &full) => {
            SolveReport { outcome: SolveOutcome::Colored(full), fallback_used }
        }
        _ => {
            // The journal replay itself failed; answer the original graph
            // exhaustively rather than wrongly.
            let outcome = match exhaustive_3color(g) {
                Some(c) => SolveOutcome::Colored(c),
                None => SolveOutcome::NotColorable,
            };
            SolveReport { outcome, fallback_used: true }
        }
    }
}

/// Unbounded exact backtracking; the safety net behind structural
/// violations.
fn exhaustive_3color(g: &Graph) -> Option<Coloring> {
    crate::oracle::brute_force_3color_bounded(g, g.order())
        .expect("bound equals the order")
}

fn solve_component(g: &Graph) -> CaseResult {
    if let Some(w) = find_induced_cycle(g, 7) {
        let cycle: [VertexId; 7] = w.vertices[..].try_into().expect("seven vertices");
        return solve_7gon(g, &cycle);
    }
    if let Some(shell) = find_shell(g) {
        return solve_shell(g, &shell);
    }
    if let Some(w) = find_induced_cycle(g, 5) {
        let cycle: [VertexId; 5] = w.vertices[..].try_into().expect("five vertices");
        return solve_5gon(g, &cycle);
    }
    match bipartite_two_coloring(g) {
        Ok(c) => Ok(Some(c)),
        Err(_) => Err(StructuralViolation::Named(
            "odd cycle survived the 7-gon, shell, and 5-gon stages",
        )),
    }
}

/// All proper 3-colorings of the induced subgraph on `verts`, ordered
/// lexicographically along `verts`.
fn proper_colorings(g: &Graph, verts: &[VertexId]) -> Vec<Coloring> {
    let mut out = Vec::new();
    let mut current = Coloring::new();
    fn rec(
        g: &Graph,
        verts: &[VertexId],
        idx: usize,
        current: &mut Coloring,
        out: &mut Vec<Coloring>,
    ) {
        if idx == verts.len() {
            out.push(current.clone());
            return;
        }
        let v = verts[idx];
        'colors: for c in 1..=3u8 {
            for &u in &verts[..idx] {
                if g.adjacent(u, v) && current.get(u) == c {
                    continue 'colors;
                }
            }
            current.set(v, c);
            rec(g, verts, idx + 1, current, out);
            current.remove(v);
        }
    }
    rec(g, verts, 0, &mut current, &mut out);
    out
}

/// Boundary/shielded/free scene induced by a chosen free set: the boundary
/// is exactly the non-free vertices with a free neighbor.
fn scene_around(g: &Graph, free: Vec<VertexId>) -> RestrictionScene {
    let mut boundary = Vec::new();
    let mut shielded = Vec::new();
    for &v in g.vertices() {
        if free.contains(&v) {
            continue;
        }
        if g.has_neighbor_in(v, &free) {
            boundary.push(v);
        } else {
            shielded.push(v);
        }
    }
    RestrictionScene { boundary, shielded, free }
}

/// Runs the restriction for one pinned palette and scans its elements with
/// the 2-SAT backend; a hit is lifted back to the scene graph and checked.
fn solve_via_restriction(
    g: &Graph,
    palette: &Palette,
    scene: &RestrictionScene,
) -> CaseResult {
    let restriction =
        build_restriction(g, palette, &ConstraintFamily::empty(), scene)?;
    for element in &restriction.elements {
        if element.palette.flagged_on(&element.graph) {
            continue;
        }
        let Some(partial) = crate::palette::solve_two_list(&element.problem())? else {
            continue;
        };
        let full = extend_coloring(g, &element.rebuild, partial)?;
        let scene_problem =
            ColoringProblem::new(g.clone(), palette.clone(), ConstraintFamily::empty());
        if !validate(&scene_problem, &full) {
            return Err(StructuralViolation::Named("lifted coloring failed validation"));
        }
        return Ok(Some(full));
    }
    Ok(None)
}

/// 7-gon case: pin each proper cycle coloring, update the first layer, and
/// reduce the rest.
fn solve_7gon(g: &Graph, cycle: &[VertexId; 7]) -> CaseResult {
    let part = classify_wrt_7gon(g, cycle)?;
    anchors::audit_seven_gon(g, &part).map_err(StructuralViolation::Named)?;
    let first_layer: Vec<VertexId> = part
        .clone_union()
        .into_iter()
        .chain(part.propeller_union())
        .chain(part.star_union())
        .collect();
    let mut free = part.outer_p.clone();
    free.extend_from_slice(&part.outer_s);
    free.sort_unstable();
    let scene = scene_around(g, free);
    find_first_branch(&proper_colorings(g, cycle), |coloring| {
        let mut palette = Palette::full(g.universe());
        for &v in cycle {
            palette.set(v, ColorSet::singleton(coloring.get(v)));
        }
        let palette = palette.updated(g, cycle, &first_layer);
        if palette.flagged_on(g) {
            return Ok(None);
        }
        solve_via_restriction(g, &palette, &scene)
    })
}

/// Antipodal-equal coloring search over all 6-gons.
pub fn solve_type1_6gon(g: &Graph) -> CaseResult {
    for ring in all_six_gons(g) {
        let part = classify_wrt_6gon(g, &ring)?;
        anchors::audit_six_gon(g, &part).map_err(StructuralViolation::Named)?;
        if !part.even_stars.is_empty() || !part.odd_stars.is_empty() {
            // A star's anchors get three distinct colors in any
            // antipodal-equal coloring of this ring.
            continue;
        }
        if let Some(&z) = part.outer_rest.first() {
            return Err(StructuralViolation::Named(unreached_outer(z)));
        }
        let first_layer: Vec<VertexId> = part
            .leaf_union()
            .into_iter()
            .chain(part.clone_union())
            .chain(part.propeller_union())
            .collect();
        let mut free = part.outer_cl.clone();
        free.extend_from_slice(&part.outer_p);
        free.sort_unstable();
        let scene = scene_around(g, free);
        for perm in color_permutations() {
            let mut palette = Palette::full(g.universe());
            for i in 0..6 {
                palette.set(ring[i], ColorSet::singleton(perm[i % 3]));
            }
            let palette = palette.updated(g, &ring, &first_layer);
            if palette.flagged_on(g) {
                continue;
            }
            if let Some(c) = solve_via_restriction(g, &palette, &scene)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

fn unreached_outer(_z: VertexId) -> &'static str {
    "outer vertex reaches no second-layer anchor"
}

/// Colorings splitting an antipodal propeller pair, over all 6-gons; only
/// sound when no antipodal-equal coloring exists.
pub fn solve_type2_6gon(g: &Graph) -> CaseResult {
    for ring in all_six_gons(g) {
        let part = classify_wrt_6gon(g, &ring)?;
        anchors::audit_six_gon(g, &part).map_err(StructuralViolation::Named)?;
        for rot in 0..3usize {
            let props = &part.propellers[rot];
            for (ai, &p1) in props.iter().enumerate() {
                for &p2 in &props[ai + 1..] {
                    if g.adjacent(p1, p2) {
                        return Err(StructuralViolation::Named(
                            "adjacent propellers share a ring anchor",
                        ));
                    }
                    for swap in [false, true] {
                        if let Some(c) =
                            solve_type2_branch(g, &part, &ring, rot, p1, p2, swap)?
                        {
                            return Ok(Some(c));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// One (ring, antipodal pair, propeller pair, color order) branch of the
/// split-propeller search.
fn solve_type2_branch(
    g: &Graph,
    part: &SixGonPartition,
    ring: &[VertexId; 6],
    rot: usize,
    p1: VertexId,
    p2: VertexId,
    swap: bool,
) -> CaseResult {
    // Normalized coloring: the anchored antipodal pair takes color 1, its
    // ring neighbors 2, the remaining pair 3; the propellers split {2, 3}.
    let mut palette = Palette::full(g.universe());
    let pos_color = |offset: usize| -> Color {
        match offset {
            0 | 3 => 1,
            1 | 5 => 2,
            _ => 3,
        }
    };
    for offset in 0..6 {
        palette.set(ring[(rot + offset) % 6], ColorSet::singleton(pos_color(offset)));
    }
    let (c1, c2) = if swap { (3, 2) } else { (2, 3) };
    palette.set(p1, ColorSet::singleton(c1));
    palette.set(p2, ColorSet::singleton(c2));
    let mut pinned: Vec<VertexId> = ring.to_vec();
    pinned.push(p1);
    pinned.push(p2);
    let first_layer: Vec<VertexId> = part
        .leaf_union()
        .into_iter()
        .chain(part.clone_union())
        .chain(part.propeller_union())
        .chain(part.star_union())
        .filter(|&v| v != p1 && v != p2)
        .collect();
    let palette = palette.updated(g, &pinned, &first_layer);
    if palette.flagged_on(g) {
        return Ok(None);
    }
    let mut palette = palette;

    let stars = part.star_union();
    let mut reach: Vec<VertexId> = part.outer_cl.clone();
    reach.extend_from_slice(&part.outer_p);
    for &z in &part.outer_rest {
        if g.has_neighbor_in(z, &stars) {
            reach.push(z);
        } else {
            return Err(StructuralViolation::Named(
                "outer vertex beyond the star layer",
            ));
        }
    }
    reach.sort_unstable();

    // Split the second layer by how it meets the propeller pair.
    let mut free: Vec<VertexId> = Vec::new();
    for comp in sub_components(g, &reach) {
        let complete_witness = comp
            .iter()
            .copied()
            .find(|&v| g.adjacent(v, p1) && g.adjacent(v, p2));
        if let Some(u) = complete_witness {
            if comp.len() == 1 {
                palette.restrict(u, ColorSet::singleton(1));
                continue;
            }
            let (side_a, side_b) = split_sides(g, &comp, u)
                .ok_or(StructuralViolation::Named("second-layer component is odd"))?;
            for &v in &side_a {
                if !g.adjacent(v, p1) || !g.adjacent(v, p2) {
                    return Err(StructuralViolation::Named(
                        "cut side not complete to the propeller pair",
                    ));
                }
                palette.restrict(v, ColorSet::singleton(1));
            }
            for &v in &side_b {
                palette.restrict(v, ColorSet::pair(2, 3));
            }
        } else if comp.len() == 1 && (g.adjacent(comp[0], p1) || g.adjacent(comp[0], p2)) {
            let v = comp[0];
            let mut lost = ColorSet::EMPTY;
            if g.adjacent(v, p1) {
                lost = lost.plus(if swap { 3 } else { 2 });
            }
            if g.adjacent(v, p2) {
                lost = lost.plus(if swap { 2 } else { 3 });
            }
            palette.set(v, palette.get(v).minus(lost));
        } else if comp.len() > 2 {
            return Err(StructuralViolation::Named(
                "unsplit second-layer component above two vertices",
            ));
        } else {
            free.extend(comp);
        }
    }
    free.sort_unstable();
    if palette.flagged_on(g) {
        return Ok(None);
    }
    let scene = scene_around(g, free);
    solve_via_restriction(g, &palette, &scene)
}

/// The bipartition side of `comp` containing `witness`.
fn split_sides(
    g: &Graph,
    comp: &[VertexId],
    witness: VertexId,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut dist: alloc::collections::BTreeMap<VertexId, u8> = alloc::collections::BTreeMap::new();
    dist.insert(witness, 0);
    let mut queue = alloc::vec![witness];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in comp {
            if v != u && g.adjacent(u, v) {
                if let Some(&du) = dist.get(&u) {
                    match dist.get(&v) {
                        None => {
                            dist.insert(v, 1 - du);
                            queue.push(v);
                        }
                        Some(&dv) if dv == du => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    let a = comp.iter().copied().filter(|v| dist.get(v) == Some(&0)).collect();
    let b = comp.iter().copied().filter(|v| dist.get(v) == Some(&1)).collect();
    Some((a, b))
}

/// Shell case: antipodal-equal colorings first, then split propellers,
/// then the shell's own pinning loop.
fn solve_shell(g: &Graph, shell: &InducedWitness) -> CaseResult {
    if let Some(c) = solve_type1_6gon(g)? {
        return Ok(Some(c));
    }
    if let Some(c) = solve_type2_6gon(g)? {
        return Ok(Some(c));
    }
    let part = shell_partition(g, shell);
    anchors::audit_shell(g, &part).map_err(StructuralViolation::Named)?;
    let ring = part.ring;
    let peg = part.peg;
    let anchor_positions: Vec<usize> =
        (0..6).filter(|&i| g.adjacent(peg, ring[i])).collect();
    let peers: Vec<VertexId> = g
        .vertices()
        .iter()
        .copied()
        .filter(|&v| {
            v != peg
                && !ring.contains(&v)
                && (0..6).all(|i| g.adjacent(v, ring[i]) == anchor_positions.contains(&i))
        })
        .collect();
    let mut hub: Vec<VertexId> = ring.to_vec();
    hub.push(peg);
    let free = part.far.clone();
    let scene = scene_around(g, free);
    let colorings: Vec<Coloring> = proper_colorings(g, &hub)
        .into_iter()
        .filter(|coloring| {
            // Antipodal-equal colorings were handled by the first stage.
            !(0..3).all(|i| coloring.get(ring[i]) == coloring.get(ring[i + 3]))
        })
        .collect();
    find_first_branch(&colorings, |coloring| {
        let mut palette = Palette::full(g.universe());
        for &v in &hub {
            palette.set(v, ColorSet::singleton(coloring.get(v)));
        }
        for &v in &peers {
            palette.set(v, ColorSet::singleton(coloring.get(peg)));
        }
        let palette = palette.updated(g, &hub, &part.near);
        if palette.flagged_on(g) {
            return Ok(None);
        }
        solve_via_restriction(g, &palette, &scene)
    })
}

/// 5-gon case: pin each cycle coloring (one vertex's color unique, the
/// other two colors alternating), update two layers, then reduce the two
/// live clone classes with the matched-pair engine and finish with plain
/// two-list solving.
fn solve_5gon(g: &Graph, cycle: &[VertexId; 5]) -> CaseResult {
    let part = classify_wrt_5gon(g, cycle)?;
    anchors::audit_five_gon(g, &part).map_err(StructuralViolation::Named)?;
    let first_layer: Vec<VertexId> = part
        .leaf_union()
        .into_iter()
        .chain(part.clone_union())
        .collect();
    let mut second_layer: Vec<VertexId> = part.outer_m.clone();
    second_layer.extend_from_slice(&part.outer_cl);

    let mut branches: Vec<(usize, [Color; 3])> = Vec::new();
    for rot in 0..5usize {
        for perm in color_permutations() {
            branches.push((rot, perm));
        }
    }
    find_first_branch(&branches, |&(rot, perm)| {
        let pos_color = |offset: usize| -> Color {
            match offset {
                0 => perm[0],
                1 | 3 => perm[1],
                _ => perm[2],
            }
        };
        let mut palette = Palette::full(g.universe());
        for offset in 0..5 {
            palette.set(cycle[(rot + offset) % 5], ColorSet::singleton(pos_color(offset)));
        }
        let palette = palette.updated(g, cycle, &first_layer);
        let palette = palette.updated(g, &first_layer, &second_layer);
        if palette.flagged_on(g) {
            return Ok(None);
        }
        let scene_at = |offset: usize, hub_offset: usize| -> PairScene {
            let pos = (rot + offset) % 5;
            let mut core = part.clones[pos].clone();
            core.push(cycle[pos]);
            core.sort_unstable();
            let mut members: Vec<VertexId> = part.leaf_core[pos].clone();
            members.extend_from_slice(&part.outer_m_at[pos]);
            members.extend_from_slice(&part.outer_cl_at[pos]);
            members.sort_unstable();
            members.dedup();
            let pairs = paired_components(g, &members);
            PairScene {
                hub: Some(cycle[(rot + hub_offset) % 5]),
                core,
                pairs,
                core_colors: split_pair(ColorSet::ALL.without(pos_color(offset - 1))),
            }
        };
        let first = reduce_pairs(g, &palette, &scene_at(2, 1))?;
        for mid in first {
            if mid.flagged_on(g) {
                continue;
            }
            for fin in reduce_pairs(g, &mid, &scene_at(3, 4))? {
                if fin.flagged_on(g) {
                    continue;
                }
                let problem = ColoringProblem::new(g.clone(), fin, ConstraintFamily::empty());
                if let Some(c) = crate::palette::solve_two_list(&problem)? {
                    let base = ColoringProblem::new(
                        g.clone(),
                        palette.clone(),
                        ConstraintFamily::empty(),
                    );
                    if !validate(&base, &c) {
                        return Err(StructuralViolation::Named(
                            "5-gon coloring failed validation",
                        ));
                    }
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    })
}

fn split_pair(set: ColorSet) -> (Color, Color) {
    let mut it = set.iter();
    let a = it.next().expect("two-color set");
    let b = it.next().expect("two-color set");
    (a, b)
}

/// Two-vertex components of `members`, as (low, high) pairs; errors are the
/// caller's to detect, singletons and oversized components are skipped.
fn paired_components(g: &Graph, members: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    sub_components(g, members)
        .into_iter()
        .filter(|c| c.len() == 2)
        .map(|c| (c[0], c[1]))
        .collect()
}

fn color_permutations() -> [[Color; 3]; 6] {
    [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ]
}

/// All induced 6-cycles, canonically rooted.
fn all_six_gons(g: &Graph) -> Vec<[VertexId; 6]> {
    let mut out = Vec::new();
    for_each_induced_cycle(g, 6, &mut |ring| {
        out.push(ring.try_into().expect("six vertices"));
        true
    });
    out
}
