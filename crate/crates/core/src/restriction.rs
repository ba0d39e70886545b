//! The restriction engine: splits a coloring problem whose full-list
//! vertices (the free side) hang off a two-list boundary into polynomially
//! many smaller problems, each with two-color lists everywhere on the free
//! side, such that colorability of any element implies colorability of the
//! source and every source coloring survives into some element.
//!
//! Elements may delete free vertices via two reversible rules (a vertex
//! guaranteed at most two neighborhood colors, or an edge whose two-list
//! endpoint is list-disjoint from its other neighbors); the deletions are
//! journaled so element colorings lift back in linear time.

use crate::cleaning::{find_dominated_vertex, Journal, ReductionRecord};
use crate::graph::{Graph, VertexId};
use crate::pair_reduction::{reduce_pairs, PairReductionError, PairScene};
use crate::palette::{
    Color, ColorSet, Coloring, ColoringProblem, ConstraintFamily, Palette,
};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Scene for the restriction: `boundary` has lists of size at most two and
/// carries all edges into `free`; `shielded` is anticomplete to `free`;
/// `free` has full lists and components of size at most two.
#[derive(Debug, Clone)]
pub struct RestrictionScene {
    pub boundary: Vec<VertexId>,
    pub shielded: Vec<VertexId>,
    pub free: Vec<VertexId>,
}

/// One reduced problem plus the records to lift its colorings back.
#[derive(Debug, Clone)]
pub struct RestrictionElement {
    pub graph: Graph,
    pub palette: Palette,
    pub constraints: ConstraintFamily,
    pub rebuild: Journal,
}

impl RestrictionElement {
    pub fn problem(&self) -> ColoringProblem {
        ColoringProblem::new(self.graph.clone(), self.palette.clone(), self.constraints.clone())
    }
}

/// The family of reduced problems.
#[derive(Debug, Clone, Default)]
pub struct Restriction {
    pub elements: Vec<RestrictionElement>,
}

/// A hypothesis of the restriction scene that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RestrictionViolation {
    NotPartition { vertex: VertexId },
    ShieldTouchesFree { shielded: VertexId, free: VertexId },
    FreeComponentTooBig { vertex: VertexId },
    FreeWithoutBoundaryNeighbor { vertex: VertexId },
    BoundaryListTooWide { vertex: VertexId },
    FreeListNotFull { vertex: VertexId },
    DominatedVertex { removed: VertexId, dominator: VertexId },
    CrossConditionBroken { a: VertexId, b: VertexId },
    NoCompleteShieldVertex { colors: (Color, Color) },
    LonelyBoxedVertex { vertex: VertexId },
    RulePreconditionBroken { vertex: VertexId },
    ResidualWideList { vertex: VertexId },
    Pairs(PairReductionError),
}

impl fmt::Display for RestrictionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictionViolation::NotPartition { vertex } => {
                write!(f, "vertex {vertex} not covered exactly once by the scene")
            }
            RestrictionViolation::ShieldTouchesFree { shielded, free } => {
                write!(f, "shielded vertex {shielded} adjacent to free vertex {free}")
            }
            RestrictionViolation::FreeComponentTooBig { vertex } => {
                write!(f, "free component around {vertex} has more than two vertices")
            }
            RestrictionViolation::FreeWithoutBoundaryNeighbor { vertex } => {
                write!(f, "free vertex {vertex} sees no boundary vertex")
            }
            RestrictionViolation::BoundaryListTooWide { vertex } => {
                write!(f, "boundary vertex {vertex} has a bad list")
            }
            RestrictionViolation::FreeListNotFull { vertex } => {
                write!(f, "free vertex {vertex} does not have a full list")
            }
            RestrictionViolation::DominatedVertex { removed, dominator } => {
                write!(f, "vertex {removed} dominated by {dominator}")
            }
            RestrictionViolation::CrossConditionBroken { a, b } => {
                write!(f, "cross condition fails between free vertices {a} and {b}")
            }
            RestrictionViolation::NoCompleteShieldVertex { colors } => {
                write!(f, "no shielded vertex complete to the {{{},{}}} class", colors.0, colors.1)
            }
            RestrictionViolation::LonelyBoxedVertex { vertex } => {
                write!(f, "free vertex {vertex} boxed into one class has no free partner")
            }
            RestrictionViolation::RulePreconditionBroken { vertex } => {
                write!(f, "deletion rule precondition fails at {vertex}")
            }
            RestrictionViolation::ResidualWideList { vertex } => {
                write!(f, "free vertex {vertex} kept a full list after reduction")
            }
            RestrictionViolation::Pairs(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RestrictionViolation {}

impl From<PairReductionError> for RestrictionViolation {
    fn from(e: PairReductionError) -> Self {
        RestrictionViolation::Pairs(e)
    }
}

const COLOR_PAIRS: [(Color, Color); 3] = [(1, 2), (1, 3), (2, 3)];
const PERMUTATIONS: [(Color, Color, Color); 6] =
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)];

/// Boundary class data recomputed per scene: the vertices of each exact
/// list, plus a shielded vertex complete to each non-empty two-color class.
struct Classes {
    by_list: BTreeMap<ColorSet, Vec<VertexId>>,
    complete_shield: BTreeMap<(Color, Color), VertexId>,
}

impl Classes {
    fn of(&self, set: ColorSet) -> &[VertexId] {
        self.by_list.get(&set).map(Vec::as_slice).unwrap_or(&[])
    }

    fn pair_class(&self, a: Color, b: Color) -> &[VertexId] {
        self.of(ColorSet::pair(a, b))
    }

    fn hub_for(&self, a: Color, b: Color) -> Option<VertexId> {
        self.complete_shield.get(&(a.min(b), a.max(b))).copied()
    }

    fn singleton_union(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        for c in 1..=3 {
            out.extend_from_slice(self.of(ColorSet::singleton(c)));
        }
        out.sort_unstable();
        out
    }
}

/// Neighbors of `v` inside the {a,b} class.
fn class_neighbors(g: &Graph, classes: &Classes, v: VertexId, a: Color, b: Color) -> Vec<VertexId> {
    classes
        .pair_class(a, b)
        .iter()
        .copied()
        .filter(|&u| g.adjacent(v, u))
        .collect()
}

/// Class vertices missed by `v`.
fn class_non_neighbors(
    g: &Graph,
    classes: &Classes,
    v: VertexId,
    a: Color,
    b: Color,
) -> Vec<VertexId> {
    classes
        .pair_class(a, b)
        .iter()
        .copied()
        .filter(|&u| !g.adjacent(v, u))
        .collect()
}

/// Verifies every scene hypothesis.
pub fn check_restriction_scene(
    g: &Graph,
    palette: &Palette,
    scene: &RestrictionScene,
) -> Result<(), RestrictionViolation> {
    classify_scene(g, palette, scene).map(|_| ())
}

fn classify_scene(
    g: &Graph,
    palette: &Palette,
    scene: &RestrictionScene,
) -> Result<Classes, RestrictionViolation> {
    let mut count: BTreeMap<VertexId, usize> = BTreeMap::new();
    for part in [&scene.boundary, &scene.shielded, &scene.free] {
        for &v in part.iter() {
            if !g.contains(v) {
                return Err(RestrictionViolation::NotPartition { vertex: v });
            }
            *count.entry(v).or_insert(0) += 1;
        }
    }
    for &v in g.vertices() {
        if count.get(&v) != Some(&1) {
            return Err(RestrictionViolation::NotPartition { vertex: v });
        }
    }

    for &s in &scene.shielded {
        for &c in &scene.free {
            if g.adjacent(s, c) {
                return Err(RestrictionViolation::ShieldTouchesFree { shielded: s, free: c });
            }
        }
    }
    for &c in &scene.free {
        let free_nbrs = free_neighbors(g, scene, c);
        if free_nbrs.len() > 1 {
            return Err(RestrictionViolation::FreeComponentTooBig { vertex: c });
        }
        if !g.has_neighbor_in(c, &scene.boundary) {
            return Err(RestrictionViolation::FreeWithoutBoundaryNeighbor { vertex: c });
        }
        if palette.get(c) != ColorSet::ALL {
            return Err(RestrictionViolation::FreeListNotFull { vertex: c });
        }
    }
    for &a in &scene.boundary {
        if palette.get(a).len() > 2 || palette.get(a).is_empty() {
            return Err(RestrictionViolation::BoundaryListTooWide { vertex: a });
        }
    }
    if let Some((removed, dominator)) = find_dominated_vertex(g) {
        return Err(RestrictionViolation::DominatedVertex { removed, dominator });
    }

    let mut by_list: BTreeMap<ColorSet, Vec<VertexId>> = BTreeMap::new();
    for &a in &scene.boundary {
        by_list.entry(palette.get(a)).or_default().push(a);
    }
    for class in by_list.values_mut() {
        class.sort_unstable();
    }
    let mut complete_shield = BTreeMap::new();
    for &(a, b) in &COLOR_PAIRS {
        let class = by_list.get(&ColorSet::pair(a, b)).map(Vec::as_slice).unwrap_or(&[]);
        if class.is_empty() {
            continue;
        }
        match scene.shielded.iter().find(|&&s| g.complete_to(s, class)) {
            Some(&s) => {
                complete_shield.insert((a, b), s);
            }
            None => return Err(RestrictionViolation::NoCompleteShieldVertex { colors: (a, b) }),
        }
    }
    let classes = Classes { by_list, complete_shield };

    // Cross condition: for free c1, c2 and colors {i,j,k}, the {i,j}-class
    // neighbors of c1 missed by c2 are complete to the {i,k}-class
    // neighbors of c2 missed by c1.
    for &c1 in &scene.free {
        for &c2 in &scene.free {
            for &(i, j, k) in &PERMUTATIONS {
                let left: Vec<VertexId> = class_neighbors(g, &classes, c1, i, j)
                    .into_iter()
                    .filter(|&u| !g.adjacent(c2, u))
                    .collect();
                let right: Vec<VertexId> = class_neighbors(g, &classes, c2, i, k)
                    .into_iter()
                    .filter(|&u| !g.adjacent(c1, u))
                    .collect();
                for &u in &left {
                    for &w in &right {
                        if !g.adjacent(u, w) {
                            return Err(RestrictionViolation::CrossConditionBroken {
                                a: c1,
                                b: c2,
                            });
                        }
                    }
                }
            }
        }
    }

    // A free vertex whose boundary neighborhood sits inside one two-color
    // class must have a free partner.
    for &c in &scene.free {
        for &(a, b) in &COLOR_PAIRS {
            let nbrs: Vec<VertexId> = scene
                .boundary
                .iter()
                .copied()
                .filter(|&u| g.adjacent(c, u))
                .collect();
            if !nbrs.is_empty()
                && nbrs.iter().all(|&u| classes.pair_class(a, b).contains(&u))
                && free_neighbors(g, scene, c).is_empty()
            {
                return Err(RestrictionViolation::LonelyBoxedVertex { vertex: c });
            }
        }
    }
    Ok(classes)
}

fn free_neighbors(g: &Graph, scene: &RestrictionScene, v: VertexId) -> Vec<VertexId> {
    scene
        .free
        .iter()
        .copied()
        .filter(|&u| u != v && g.contains(u) && g.contains(v) && g.adjacent(u, v))
        .collect()
}

/// Deletes `v` under the guarantee that at most `k-1` colors appear on its
/// neighborhood in every coloring of the rest; the caller supplies the
/// structural reason. Rejected when `v` has a constrained or narrow list.
pub fn apply_nbrs_rule(
    problem: &ColoringProblem,
    v: VertexId,
    reason: &'static str,
) -> Result<(ColoringProblem, ReductionRecord), RestrictionViolation> {
    if problem.palette.get(v) != ColorSet::ALL {
        return Err(RestrictionViolation::FreeListNotFull { vertex: v });
    }
    if problem.constraints.mentions(v) {
        return Err(RestrictionViolation::RulePreconditionBroken { vertex: v });
    }
    let graph = problem.graph.delete(&[v]);
    let reduced = ColoringProblem::new(graph, problem.palette.clone(), problem.constraints.clone());
    Ok((reduced, ReductionRecord::NbrsDrop { removed: v, reason }))
}

/// Deletes the adjacent pair `narrow, wide` where `wide` has a full list
/// with at most two neighborhood colors guaranteed by the caller, and
/// `narrow` has a two-color list disjoint from all its other neighbors'
/// lists.
pub fn apply_edge_rule(
    problem: &ColoringProblem,
    narrow: VertexId,
    wide: VertexId,
) -> Result<(ColoringProblem, ReductionRecord), RestrictionViolation> {
    let g = &problem.graph;
    let narrow_list = problem.palette.get(narrow);
    if !g.adjacent(narrow, wide)
        || problem.palette.get(wide) != ColorSet::ALL
        || narrow_list.len() != 2
    {
        return Err(RestrictionViolation::RulePreconditionBroken { vertex: narrow });
    }
    for &y in g.neighbors(narrow) {
        if y != wide && !problem.palette.get(y).intersect(narrow_list).is_empty() {
            return Err(RestrictionViolation::RulePreconditionBroken { vertex: y });
        }
    }
    if problem.constraints.mentions(narrow) || problem.constraints.mentions(wide) {
        return Err(RestrictionViolation::RulePreconditionBroken { vertex: narrow });
    }
    let graph = g.delete(&[narrow, wide]);
    let reduced = ColoringProblem::new(graph, problem.palette.clone(), problem.constraints.clone());
    Ok((reduced, ReductionRecord::EdgeDrop { narrow, wide, narrow_list }))
}

/// Pins the colors of `fixed` under `c` and then updates `targets` with
/// respect to `fixed`.
pub fn specialize_palette(
    g: &Graph,
    palette: &Palette,
    c: &Coloring,
    fixed: &[VertexId],
    targets: &[VertexId],
) -> Result<Palette, RestrictionViolation> {
    let mut pinned = palette.clone();
    for &v in fixed {
        let color = c.get(v);
        if !palette.get(v).contains(color) {
            return Err(RestrictionViolation::FreeListNotFull { vertex: v });
        }
        pinned.set(v, ColorSet::singleton(color));
    }
    Ok(pinned.updated(g, fixed, targets))
}

/// Builds the full restriction family for a checked scene.
pub fn build_restriction(
    g: &Graph,
    palette: &Palette,
    constraints: &ConstraintFamily,
    scene: &RestrictionScene,
) -> Result<Restriction, RestrictionViolation> {
    let classes = classify_scene(g, palette, scene)?;
    let mut elements: Vec<RestrictionElement> = Vec::new();

    // Extended constraints: once the split-class stage has taken its
    // chance, every class neighborhood of a free vertex is monochromatic.
    let mut extended = constraints.clone();
    for &v in &scene.free {
        for &(a, b) in &COLOR_PAIRS {
            let nbrs = class_neighbors(g, &classes, v, a, b);
            if nbrs.len() >= 2 {
                extended.push(nbrs);
            }
        }
    }

    stage_split_class(g, palette, constraints, scene, &classes, &mut elements)?;

    let all_three = scene.free.iter().copied().find(|&w| {
        COLOR_PAIRS
            .iter()
            .all(|&(a, b)| !class_neighbors(g, &classes, w, a, b).is_empty())
    });
    match all_three {
        Some(w) => {
            stage_triple_anchor(g, palette, &extended, scene, &classes, w, &mut elements)?
        }
        None => stage_color_split(g, palette, &extended, scene, &classes, &mut elements)?,
    }

    stage_closing(g, palette, constraints, scene, &classes, &mut elements)?;
    Ok(Restriction { elements })
}

/// Stage one: guess a free vertex `z` with two differently-colored
/// neighbors `x`, `y` inside one class; their colors force the rest of
/// `z`'s anchor sets.
fn stage_split_class(
    g: &Graph,
    palette: &Palette,
    constraints: &ConstraintFamily,
    scene: &RestrictionScene,
    classes: &Classes,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    for &z in &scene.free {
        for &(i, j) in &COLOR_PAIRS {
            let k = 6 - i - j;
            let anchors = class_neighbors(g, classes, z, i, j);
            for &x in &anchors {
                for &y in &anchors {
                    if x == y {
                        continue;
                    }
                    let mut out = palette.clone();
                    out.restrict(x, ColorSet::singleton(i));
                    out.restrict(y, ColorSet::singleton(j));
                    out.restrict(z, ColorSet::singleton(k));
                    for &v in &class_neighbors(g, classes, z, i, k) {
                        out.restrict(v, ColorSet::singleton(i));
                    }
                    for &v in &class_neighbors(g, classes, z, j, k) {
                        out.restrict(v, ColorSet::singleton(j));
                    }
                    let missed: Vec<VertexId> = [
                        class_non_neighbors(g, classes, z, i, k),
                        class_non_neighbors(g, classes, z, j, k),
                    ]
                    .concat();
                    for &u in &missed {
                        let witnessed = scene.free.iter().any(|&c| {
                            g.adjacent(c, u) && !g.adjacent(c, x) && !g.adjacent(c, y)
                        });
                        if witnessed {
                            out.restrict(u, ColorSet::singleton(k));
                        }
                    }
                    let mut sources: Vec<VertexId> = scene
                        .boundary
                        .iter()
                        .copied()
                        .filter(|&v| !classes.pair_class(i, j).contains(&v))
                        .collect();
                    sources.push(x);
                    sources.push(y);
                    let out = out.updated(g, &sources, &scene.free);
                    if out.flagged_on(g) {
                        continue;
                    }
                    finish_branch(
                        g,
                        out,
                        constraints,
                        scene,
                        classes.pair_class(i, j),
                        classes.hub_for(i, j),
                        (i.min(j), i.max(j)),
                        DropRule::EdgePair,
                        elements,
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Stage two: a free vertex `w` anchored in all three classes pins one
/// color orientation per permutation whose outward set is empty.
fn stage_triple_anchor(
    g: &Graph,
    palette: &Palette,
    extended: &ConstraintFamily,
    scene: &RestrictionScene,
    classes: &Classes,
    w: VertexId,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    // Vertices of the {a,b} class missed by `w` with a free neighbor that
    // dodges both anchor sets of `w` outside that class.
    let outward = |a: Color, b: Color| -> Vec<VertexId> {
        let k = 6 - a - b;
        let shields: Vec<VertexId> = [
            class_neighbors(g, classes, w, k, a),
            class_neighbors(g, classes, w, k, b),
        ]
        .concat();
        class_non_neighbors(g, classes, w, a, b)
            .into_iter()
            .filter(|&v| {
                scene
                    .free
                    .iter()
                    .any(|&c| g.adjacent(c, v) && shields.iter().all(|&s| !g.adjacent(c, s)))
            })
            .collect()
    };
    for &(i, j, k) in &PERMUTATIONS {
        if !outward(j, k).is_empty() {
            continue;
        }
        let p_ij = outward(i, j);
        let mut out = palette.clone();
        out.restrict(w, ColorSet::singleton(i));
        for &v in &p_ij {
            out.restrict(v, ColorSet::singleton(i));
        }
        for &v in &class_neighbors(g, classes, w, i, j) {
            out.restrict(v, ColorSet::singleton(j));
        }
        for &v in &class_neighbors(g, classes, w, j, k) {
            out.restrict(v, ColorSet::singleton(j));
        }
        for &v in &class_neighbors(g, classes, w, i, k) {
            out.restrict(v, ColorSet::singleton(k));
        }
        let mut sources = classes.singleton_union();
        sources.extend(class_neighbors(g, classes, w, i, j));
        sources.extend(class_neighbors(g, classes, w, j, k));
        sources.extend(class_neighbors(g, classes, w, i, k));
        sources.extend(p_ij.iter().copied());
        sources.sort_unstable();
        sources.dedup();
        let out = out.updated(g, &sources, &scene.free);
        if out.flagged_on(g) {
            continue;
        }
        let core = class_non_neighbors(g, classes, w, i, k);
        finish_branch(
            g,
            out,
            extended,
            scene,
            &core,
            classes.hub_for(i, k),
            (i.min(k), i.max(k)),
            DropRule::SingleNbrs,
            elements,
        )?;
    }
    Ok(())
}

/// Stage three (no triple-anchored free vertex): guess the free vertex
/// whose class neighbors split into two colors, per orientation.
fn stage_color_split(
    g: &Graph,
    palette: &Palette,
    extended: &ConstraintFamily,
    scene: &RestrictionScene,
    classes: &Classes,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    for &(i, j, k) in &PERMUTATIONS {
        for &w in &scene.free {
            if g.has_neighbor_in(w, classes.of(ColorSet::singleton(k))) {
                continue;
            }
            let n_ik = class_neighbors(g, classes, w, i, k);
            let n_ij = class_neighbors(g, classes, w, i, j);
            let n_jk = class_neighbors(g, classes, w, j, k);
            if n_ik.is_empty() || (n_ij.is_empty() && n_jk.is_empty()) {
                continue;
            }
            let mut out = palette.clone();
            out.restrict(w, ColorSet::singleton(k));
            for &v in &n_ik {
                out.restrict(v, ColorSet::singleton(i));
            }
            for &v in n_ij.iter().chain(n_jk.iter()) {
                out.restrict(v, ColorSet::singleton(j));
            }
            let mut sources = classes.singleton_union();
            sources.extend(n_ij.iter().copied());
            sources.extend(n_ik.iter().copied());
            sources.extend(n_jk.iter().copied());
            sources.push(w);
            sources.sort_unstable();
            sources.dedup();
            let boundary_targets: Vec<VertexId> = scene
                .boundary
                .iter()
                .copied()
                .filter(|v| !sources.contains(v))
                .collect();
            let out = out.updated(g, &sources, &boundary_targets);
            let out = out.updated(g, &scene.boundary, &scene.free);
            if out.flagged_on(g) {
                continue;
            }

            let m_ik = class_non_neighbors(g, classes, w, i, k);
            let m_jk = class_non_neighbors(g, classes, w, j, k);
            let f_ik = both_anchored_members(g, scene, classes.pair_class(i, k));
            let f_jk = both_anchored_members(g, scene, classes.pair_class(j, k));
            let skip: Vec<VertexId> = [f_ik.clone(), f_jk.clone()].concat();
            let boxed_set: Vec<VertexId> = [m_ik.clone(), m_jk.clone()].concat();

            let mut working = g.clone();
            let mut current = out;
            let mut journal = Journal::new();
            for &c1 in &scene.free {
                if !working.contains(c1)
                    || skip.contains(&c1)
                    || current.get(c1).len() != 3
                    || !boxed_in(&working, scene, c1, &boxed_set)
                {
                    continue;
                }
                let partner = free_neighbors(&working, scene, c1);
                let reach_both = working.has_neighbor_in(c1, &m_ik)
                    && working.has_neighbor_in(c1, &m_jk);
                match partner.first() {
                    None => {
                        journal.push(ReductionRecord::NbrsDrop {
                            removed: c1,
                            reason: "both class neighborhoods monochromatic",
                        });
                        working = working.delete(&[c1]);
                    }
                    Some(_) if !reach_both => {
                        journal.push(ReductionRecord::NbrsDrop {
                            removed: c1,
                            reason: "one monochromatic class plus the free partner",
                        });
                        working = working.delete(&[c1]);
                    }
                    Some(&c2) => {
                        drop_or_shrink(&mut working, &mut current, &mut journal, c1, c2)?;
                    }
                }
            }

            let scene_ik = PairScene {
                hub: classes.hub_for(i, k),
                core: live_sorted(&working, classes.pair_class(i, k)),
                pairs: component_pairs(&working, scene, &f_ik),
                core_colors: (i.min(k), i.max(k)),
            };
            let first = reduce_pairs(&working, &current, &scene_ik)?;
            for mid in first {
                let scene_jk = PairScene {
                    hub: classes.hub_for(j, k),
                    core: live_sorted(&working, classes.pair_class(j, k)),
                    pairs: component_pairs(&working, scene, &f_jk),
                    core_colors: (j.min(k), j.max(k)),
                };
                for fin in reduce_pairs(&working, &mid, &scene_jk)? {
                    push_element(&working, fin, extended, scene, &journal, elements)?;
                }
            }
        }
    }
    Ok(())
}

/// Closing stage: free vertices anchored only in two-color classes are
/// deleted behind fresh monochromatic constraints; the rest are updated.
fn stage_closing(
    g: &Graph,
    palette: &Palette,
    constraints: &ConstraintFamily,
    scene: &RestrictionScene,
    classes: &Classes,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    let singles = classes.singleton_union();
    let dropped: Vec<VertexId> = scene
        .free
        .iter()
        .copied()
        .filter(|&v| !g.has_neighbor_in(v, &singles))
        .collect();
    let mut journal = Journal::new();
    let mut constraints = constraints.clone();
    for &v in &dropped {
        let nbrs: Vec<VertexId> = scene
            .boundary
            .iter()
            .copied()
            .filter(|&u| g.adjacent(u, v))
            .collect();
        if nbrs.len() >= 2 {
            constraints.push(nbrs);
        }
        journal.push(ReductionRecord::NbrsDrop {
            removed: v,
            reason: "boundary neighborhood constrained monochromatic",
        });
    }
    let kept: Vec<VertexId> = scene
        .free
        .iter()
        .copied()
        .filter(|v| !dropped.contains(v))
        .collect();
    let updated = palette.updated(g, &singles, &kept);
    let graph = g.delete(&dropped);
    for &v in &kept {
        if updated.get(v).len() > 2 {
            return Err(RestrictionViolation::ResidualWideList { vertex: v });
        }
    }
    elements.push(RestrictionElement { graph, palette: updated, constraints, rebuild: journal });
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DropRule {
    /// Boxed vertices leave together with their narrow partner.
    EdgePair,
    /// Boxed vertices leave alone; the class constraint bounds their
    /// neighborhood colors.
    SingleNbrs,
}

/// All boundary neighbors of `c` lie inside `boxed_set`.
fn boxed_in(g: &Graph, scene: &RestrictionScene, c: VertexId, boxed_set: &[VertexId]) -> bool {
    g.neighbors(c)
        .iter()
        .all(|&u| !scene.boundary.contains(&u) || boxed_set.contains(&u))
}

/// Shared tail of stages one and two: delete or shrink the free vertices
/// boxed into the stage core, then run the matched-pair reduction over the
/// core and emit one element per produced palette.
#[allow(clippy::too_many_arguments)]
fn finish_branch(
    g: &Graph,
    palette: Palette,
    constraints: &ConstraintFamily,
    scene: &RestrictionScene,
    core: &[VertexId],
    hub: Option<VertexId>,
    core_colors: (Color, Color),
    rule: DropRule,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    let f_members = both_anchored_members(g, scene, core);
    let mut working = g.clone();
    let mut current = palette;
    let mut journal = Journal::new();
    for &c1 in &scene.free {
        if !working.contains(c1) || f_members.contains(&c1) || current.get(c1).len() != 3 {
            continue;
        }
        if !boxed_in(&working, scene, c1, core) {
            continue;
        }
        match rule {
            DropRule::SingleNbrs => {
                journal.push(ReductionRecord::NbrsDrop {
                    removed: c1,
                    reason: "neighborhood inside one monochromatic set plus the partner",
                });
                working = working.delete(&[c1]);
            }
            DropRule::EdgePair => {
                let partner = free_neighbors(&working, scene, c1);
                let Some(&c2) = partner.first() else {
                    return Err(RestrictionViolation::LonelyBoxedVertex { vertex: c1 });
                };
                drop_or_shrink(&mut working, &mut current, &mut journal, c1, c2)?;
            }
        }
    }
    let pair_scene = PairScene {
        hub,
        core: live_sorted(&working, core),
        pairs: component_pairs(&working, scene, &f_members),
        core_colors,
    };
    for fin in reduce_pairs(&working, &current, &pair_scene)? {
        push_element(&working, fin, constraints, scene, &journal, elements)?;
    }
    Ok(())
}

/// The edge-style elimination of a boxed full-list vertex `c1` with partner
/// `c2`: a singleton partner just shrinks `c1`'s list, a two-list partner
/// whose list avoids all its other neighbors' lists leaves with `c1`.
fn drop_or_shrink(
    working: &mut Graph,
    current: &mut Palette,
    journal: &mut Journal,
    c1: VertexId,
    c2: VertexId,
) -> Result<(), RestrictionViolation> {
    match current.get(c2).len() {
        1 => {
            current.set(c1, current.get(c1).minus(current.get(c2)));
            Ok(())
        }
        2 => {
            let narrow_list = current.get(c2);
            for &y in working.neighbors(c2) {
                if y != c1 && !current.get(y).intersect(narrow_list).is_empty() {
                    return Err(RestrictionViolation::RulePreconditionBroken { vertex: y });
                }
            }
            journal.push(ReductionRecord::EdgeDrop { narrow: c2, wide: c1, narrow_list });
            *working = working.delete(&[c1, c2]);
            Ok(())
        }
        _ => Err(RestrictionViolation::ResidualWideList { vertex: c2 }),
    }
}

/// Free vertices lying in two-vertex free components both of whose
/// endpoints have a neighbor in `anchor_set`.
fn both_anchored_members(
    g: &Graph,
    scene: &RestrictionScene,
    anchor_set: &[VertexId],
) -> Vec<VertexId> {
    let mut out = Vec::new();
    for &c in &scene.free {
        if let Some(&c2) = free_neighbors(g, scene, c).first() {
            if g.has_neighbor_in(c, anchor_set) && g.has_neighbor_in(c2, anchor_set) {
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The two-vertex components among `members`, as (low, high) pairs,
/// restricted to the live vertices of `g`.
fn component_pairs(
    g: &Graph,
    scene: &RestrictionScene,
    members: &[VertexId],
) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for &c in members {
        if !g.contains(c) {
            continue;
        }
        if let Some(&c2) = free_neighbors(g, scene, c).first() {
            if c < c2 && members.contains(&c2) {
                out.push((c, c2));
            }
        }
    }
    out
}

fn live_sorted(g: &Graph, set: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = set.iter().copied().filter(|&v| g.contains(v)).collect();
    out.sort_unstable();
    out
}

/// Emits one element, verifying every live free vertex ended with a list of
/// size at most two (unless the palette is flagged dead anyway).
fn push_element(
    working: &Graph,
    palette: Palette,
    constraints: &ConstraintFamily,
    scene: &RestrictionScene,
    journal: &Journal,
    elements: &mut Vec<RestrictionElement>,
) -> Result<(), RestrictionViolation> {
    if !palette.flagged_on(working) {
        for &v in &scene.free {
            if working.contains(v) && palette.get(v).len() > 2 {
                return Err(RestrictionViolation::ResidualWideList { vertex: v });
            }
        }
    }
    elements.push(RestrictionElement {
        graph: working.clone(),
        palette,
        constraints: constraints.clone(),
        rebuild: journal.clone(),
    });
    Ok(())
}
