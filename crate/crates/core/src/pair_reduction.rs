//! Palette reduction around a matched family of pairs: given a hub vertex
//! complete to a stable core whose lists use only two colors, and a perfect
//! matching of pairs whose endpoints all see the core, produce a small
//! family of subpalettes with two-color lists on every pair vertex that is
//! colorable exactly when the input is.
//!
//! The construction classifies core vertices by which pairs they are mixed
//! on (a chain structure), ranks each pair by the highest chain class both
//! of its endpoints reach, and enumerates the three shapes a coloring can
//! take on the matching, emitting two color-swapped palettes per shape
//! index plus one closing palette.

use crate::chains::{chain_partition, ChainPartition, CrossingPair};
use crate::graph::{Graph, VertexId};
use crate::palette::{Color, ColorSet, Palette};
use alloc::vec::Vec;
use core::fmt;

/// Scene for the matched-pair reduction.
///
/// `hub` is complete to `core` and anticomplete to every pair vertex; the
/// two pair sides are stable; `pairs[i].0` is adjacent to `pairs[j].1`
/// exactly when `i == j`; every pair vertex has a neighbor in `core`; and
/// core lists are subsets of `{core_colors.0, core_colors.1}`.
#[derive(Debug, Clone)]
pub struct PairScene {
    pub hub: Option<VertexId>,
    pub core: Vec<VertexId>,
    pub pairs: Vec<(VertexId, VertexId)>,
    pub core_colors: (Color, Color),
}

/// A scene hypothesis that failed, with the offending vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SceneViolation {
    MissingHub,
    HubNotCompleteToCore { hub: VertexId, core: VertexId },
    HubTouchesPair { hub: VertexId, vertex: VertexId },
    SideNotStable { a: VertexId, b: VertexId },
    MatchingBroken { a: VertexId, b: VertexId },
    CoreNotStable { a: VertexId, b: VertexId },
    NoCoreNeighbor { vertex: VertexId },
    CoreListTooWide { vertex: VertexId },
    CrossingPairs(CrossingPair),
    NotLive { vertex: VertexId },
    Overlap { vertex: VertexId },
}

impl fmt::Display for SceneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneViolation::MissingHub => write!(f, "scene with pairs but no hub"),
            SceneViolation::HubNotCompleteToCore { hub, core } => {
                write!(f, "hub {hub} misses core vertex {core}")
            }
            SceneViolation::HubTouchesPair { hub, vertex } => {
                write!(f, "hub {hub} adjacent to pair vertex {vertex}")
            }
            SceneViolation::SideNotStable { a, b } => {
                write!(f, "matching side has edge {a}-{b}")
            }
            SceneViolation::MatchingBroken { a, b } => {
                write!(f, "pair adjacency wrong between {a} and {b}")
            }
            SceneViolation::CoreNotStable { a, b } => {
                write!(f, "core has edge {a}-{b}")
            }
            SceneViolation::NoCoreNeighbor { vertex } => {
                write!(f, "pair vertex {vertex} has no core neighbor")
            }
            SceneViolation::CoreListTooWide { vertex } => {
                write!(f, "core vertex {vertex} uses a color outside the core pair")
            }
            SceneViolation::CrossingPairs(w) => write!(f, "{w}"),
            SceneViolation::NotLive { vertex } => write!(f, "vertex {vertex} not in graph"),
            SceneViolation::Overlap { vertex } => {
                write!(f, "vertex {vertex} appears in two scene parts")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SceneViolation {}

/// Per-pair chain annotations: the height (last chain class both endpoints
/// reach), the small and large endpoints, and their neighbor sets inside
/// the suffix of classes from the height on.
#[derive(Debug, Clone)]
pub struct PairAnnotation {
    pub height: usize,
    pub small: VertexId,
    pub large: VertexId,
    /// Suffix-class neighbors of the large endpoint.
    pub large_side: Vec<VertexId>,
    /// Suffix-class neighbors of the small endpoint.
    pub small_side: Vec<VertexId>,
}

/// Verifies every scene hypothesis against the graph and palette.
pub fn check_scene(g: &Graph, palette: &Palette, scene: &PairScene) -> Result<(), SceneViolation> {
    let mut seen: Vec<VertexId> = Vec::new();
    let mut claim = |v: VertexId| -> Result<(), SceneViolation> {
        if !g.contains(v) {
            return Err(SceneViolation::NotLive { vertex: v });
        }
        if seen.contains(&v) {
            return Err(SceneViolation::Overlap { vertex: v });
        }
        seen.push(v);
        Ok(())
    };
    if let Some(h) = scene.hub {
        claim(h)?;
    }
    for &s in &scene.core {
        claim(s)?;
    }
    for &(a, b) in &scene.pairs {
        claim(a)?;
        claim(b)?;
    }
    if !scene.pairs.is_empty() {
        let hub = scene.hub.ok_or(SceneViolation::MissingHub)?;
        for &s in &scene.core {
            if !g.adjacent(hub, s) {
                return Err(SceneViolation::HubNotCompleteToCore { hub, core: s });
            }
        }
        for &(a, b) in &scene.pairs {
            for v in [a, b] {
                if g.adjacent(hub, v) {
                    return Err(SceneViolation::HubTouchesPair { hub, vertex: v });
                }
            }
        }
    } else if let Some(hub) = scene.hub {
        for &s in &scene.core {
            if !g.adjacent(hub, s) {
                return Err(SceneViolation::HubNotCompleteToCore { hub, core: s });
            }
        }
    }
    for (i, &(a, b)) in scene.pairs.iter().enumerate() {
        for (j, &(a2, b2)) in scene.pairs.iter().enumerate() {
            if i < j {
                if g.adjacent(a, a2) {
                    return Err(SceneViolation::SideNotStable { a, b: a2 });
                }
                if g.adjacent(b, b2) {
                    return Err(SceneViolation::SideNotStable { a: b, b: b2 });
                }
            }
            if i != j && (g.adjacent(a, b2) || g.adjacent(a2, b)) {
                return Err(SceneViolation::MatchingBroken { a, b: b2 });
            }
        }
        if !g.adjacent(a, b) {
            return Err(SceneViolation::MatchingBroken { a, b });
        }
        for v in [a, b] {
            if !g.has_neighbor_in(v, &scene.core) {
                return Err(SceneViolation::NoCoreNeighbor { vertex: v });
            }
        }
    }
    for (i, &s) in scene.core.iter().enumerate() {
        for &s2 in &scene.core[i + 1..] {
            if g.adjacent(s, s2) {
                return Err(SceneViolation::CoreNotStable { a: s, b: s2 });
            }
        }
        let budget = ColorSet::pair(scene.core_colors.0, scene.core_colors.1);
        if !palette.get(s).is_subset_of(budget) {
            return Err(SceneViolation::CoreListTooWide { vertex: s });
        }
    }
    Ok(())
}

/// The bipartite mixedness graph: one side is the core, the other has one
/// vertex per pair, adjacent when the core vertex is mixed on the pair.
///
/// Core vertex `core[i]` maps to id `i`; pair `j` maps to `core.len() + j`.
pub fn build_mixedness_graph(g: &Graph, scene: &PairScene) -> Graph {
    let ns = scene.core.len();
    let t = scene.pairs.len();
    let mut edges = Vec::new();
    for (si, &s) in scene.core.iter().enumerate() {
        for (pi, &(a, b)) in scene.pairs.iter().enumerate() {
            if g.mixed_on(s, &[a, b]) {
                edges.push((si as VertexId, (ns + pi) as VertexId));
            }
        }
    }
    Graph::build(ns + t, &edges).expect("mixedness edges are valid")
}

/// Chain classes of the core (as host-graph vertex lists) plus the pair
/// order induced by the chain.
fn core_chain(
    g: &Graph,
    scene: &PairScene,
) -> Result<(Vec<Vec<VertexId>>, Vec<usize>), CrossingPair> {
    let h = build_mixedness_graph(g, scene);
    let ns = scene.core.len();
    let side_a: Vec<VertexId> = (0..ns as VertexId).collect();
    let side_b: Vec<VertexId> = (ns as VertexId..(ns + scene.pairs.len()) as VertexId).collect();
    let ChainPartition { classes, order } = chain_partition(&h, &side_a, &side_b)?;
    let classes = classes
        .into_iter()
        .map(|class| class.into_iter().map(|i| scene.core[i as usize]).collect())
        .collect();
    let order = order.into_iter().map(|d| d as usize - ns).collect();
    Ok((classes, order))
}

/// Errors from [`reduce_pairs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairReductionError {
    Scene(SceneViolation),
    /// The mixedness graph failed the nesting hypothesis; the witness
    /// certifies the caller's input was outside the promised class.
    Crossing(CrossingPair),
    /// A pair endpoint lost all suffix-class neighbors, breaking the height
    /// bookkeeping.
    HeightBroken { vertex: VertexId },
}

impl fmt::Display for PairReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairReductionError::Scene(v) => write!(f, "scene violation: {v}"),
            PairReductionError::Crossing(w) => write!(f, "{w}"),
            PairReductionError::HeightBroken { vertex } => {
                write!(f, "height annotation broke at vertex {vertex}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PairReductionError {}

impl From<SceneViolation> for PairReductionError {
    fn from(v: SceneViolation) -> Self {
        PairReductionError::Scene(v)
    }
}

impl From<CrossingPair> for PairReductionError {
    fn from(w: CrossingPair) -> Self {
        PairReductionError::Crossing(w)
    }
}

/// Computes the chain classes and per-pair height annotations for a checked
/// scene. Pairs are returned in chain order.
pub fn annotate_heights(
    g: &Graph,
    scene: &PairScene,
) -> Result<(Vec<Vec<VertexId>>, Vec<(VertexId, VertexId)>, Vec<PairAnnotation>), PairReductionError>
{
    let (classes, order) = core_chain(g, scene)?;
    let pairs: Vec<(VertexId, VertexId)> =
        order.iter().map(|&idx| scene.pairs[idx]).collect();
    let q = classes.len();
    let mut annotations = Vec::with_capacity(pairs.len());
    for &(a, b) in &pairs {
        let reach = |v: VertexId| -> Option<usize> {
            // Highest class index containing a neighbor of v.
            (0..q).rev().find(|&i| g.has_neighbor_in(v, &classes[i]))
        };
        let (ra, rb) = match (reach(a), reach(b)) {
            (Some(ra), Some(rb)) => (ra, rb),
            (None, _) => return Err(PairReductionError::HeightBroken { vertex: a }),
            (_, None) => return Err(PairReductionError::HeightBroken { vertex: b }),
        };
        let height = ra.min(rb);
        let suffix: Vec<VertexId> = classes[height..]
            .iter()
            .flat_map(|c| c.iter().copied())
            .collect();
        let (small, large) = if height == q - 1 {
            // Both endpoints reach the top class; the assignment is free.
            // Fix it by fewer top-class neighbors, ties by id.
            let count = |v: VertexId| {
                classes[q - 1].iter().filter(|&&s| g.adjacent(v, s)).count()
            };
            let (ca, cb) = (count(a), count(b));
            if (ca, a) <= (cb, b) {
                (a, b)
            } else {
                (b, a)
            }
        } else if ra < rb {
            (a, b)
        } else {
            (b, a)
        };
        let large_side: Vec<VertexId> =
            suffix.iter().copied().filter(|&s| g.adjacent(large, s)).collect();
        let small_side: Vec<VertexId> =
            suffix.iter().copied().filter(|&s| g.adjacent(small, s)).collect();
        annotations.push(PairAnnotation { height, small, large, large_side, small_side });
    }
    Ok((classes, pairs, annotations))
}

/// The reduction: a family of subpalettes of `palette`, each agreeing with
/// `palette` off the pair vertices and two-colored on them, whose union is
/// colorable exactly when the input is. Palettes emptied at construction
/// are still emitted; callers skip them.
pub fn reduce_pairs(
    g: &Graph,
    palette: &Palette,
    scene: &PairScene,
) -> Result<Vec<Palette>, PairReductionError> {
    check_scene(g, palette, scene)?;
    let (one, two, three) = color_roles(scene.core_colors);
    if scene.pairs.is_empty() {
        return Ok(alloc::vec![palette.clone()]);
    }
    let (classes, pairs, notes) = annotate_heights(g, scene)?;
    if !annotation_invariants_hold(g, &classes, &notes) {
        return Err(PairReductionError::HeightBroken { vertex: pairs[0].0 });
    }
    let t = pairs.len();
    let mut family: Vec<Palette> = Vec::new();

    let suffix_of = |height: usize| -> Vec<VertexId> {
        classes[height..].iter().flat_map(|c| c.iter().copied()).collect()
    };

    // Shape one: some pair uses both core colors.
    for i in 0..t {
        for &(c2, c3) in &[(two, three), (three, two)] {
            let mut out = palette.clone();
            let suffix = suffix_of(notes[i].height);
            out.restrict(notes[i].large, ColorSet::singleton(c2));
            out.restrict(notes[i].small, ColorSet::singleton(c3));
            for j in 0..t {
                if j == i {
                    continue;
                }
                for y in [pairs[j].0, pairs[j].1] {
                    set_by_sides(g, &mut out, y, &suffix, &notes[i], one, c2, c3);
                }
            }
            family.push(out);
        }
    }

    // Shape two: two pairs of equal height, one colored hub-color plus a
    // core color, the other split across the core colors.
    for i in 0..t {
        for j in 0..t {
            if i == j || notes[i].height != notes[j].height {
                continue;
            }
            let suffix = suffix_of(notes[i].height);
            for &z in &[pairs[j].0, pairs[j].1] {
                let z_reach: Vec<VertexId> =
                    suffix.iter().copied().filter(|&s| g.adjacent(z, s)).collect();
                if proper_subset(&notes[i].large_side, &z_reach) {
                    continue;
                }
                let y = if z == pairs[j].0 { pairs[j].1 } else { pairs[j].0 };
                for &(c2, c3) in &[(two, three), (three, two)] {
                    let mut out = palette.clone();
                    out.restrict(notes[i].large, ColorSet::singleton(c2));
                    out.restrict(y, ColorSet::singleton(c3));
                    out.restrict(notes[i].small, ColorSet::singleton(one));
                    out.restrict(z, ColorSet::singleton(one));
                    for k in 0..t {
                        if k == i || k == j {
                            continue;
                        }
                        for w in [pairs[k].0, pairs[k].1] {
                            set_by_sides(g, &mut out, w, &suffix, &notes[i], one, c2, c3);
                        }
                    }
                    family.push(out);
                }
            }
        }
    }

    // Shape three: some pair takes the hub color on its small endpoint and
    // a core color on its large one, with deeper pairs pinned.
    for i in 0..t {
        let suffix = suffix_of(notes[i].height);
        for &(c2, c3) in &[(two, three), (three, two)] {
            let mut out = palette.clone();
            out.restrict(notes[i].large, ColorSet::singleton(c2));
            out.restrict(notes[i].small, ColorSet::singleton(one));
            for j in 0..t {
                if j == i {
                    continue;
                }
                for (y, z) in [(pairs[j].0, pairs[j].1), (pairs[j].1, pairs[j].0)] {
                    if g.has_neighbor_in(y, &notes[i].large_side) {
                        out.restrict(y, ColorSet::ALL.without(c3));
                    } else {
                        let z_reach: Vec<VertexId> =
                            suffix.iter().copied().filter(|&s| g.adjacent(z, s)).collect();
                        if proper_subset(&notes[i].large_side, &z_reach) {
                            out.restrict(y, ColorSet::ALL.without(one));
                        } else {
                            out.restrict(y, ColorSet::ALL.without(c3));
                        }
                    }
                }
            }
            family.push(out);
        }
    }

    // The closing palette: every large endpoint takes the hub color.
    let mut closing = palette.clone();
    for note in &notes {
        closing.restrict(note.large, ColorSet::singleton(one));
        closing.restrict(note.small, ColorSet::pair(two, three));
    }
    family.push(closing);

    Ok(family)
}

/// The three-case list restriction shared by shapes one and two: a pair
/// vertex leaning entirely on the large side loses `c3`, entirely on the
/// small side loses `c2`, straddling both is pinned to the hub color, and
/// one avoiding the suffix keeps both core colors.
fn set_by_sides(
    g: &Graph,
    out: &mut Palette,
    y: VertexId,
    suffix: &[VertexId],
    note: &PairAnnotation,
    one: Color,
    c2: Color,
    c3: Color,
) {
    let reach: Vec<VertexId> = suffix.iter().copied().filter(|&s| g.adjacent(y, s)).collect();
    if reach.is_empty() {
        out.restrict(y, ColorSet::pair(c2, c3));
    } else if subset(&reach, &note.large_side) {
        out.restrict(y, ColorSet::ALL.without(c3));
    } else if subset(&reach, &note.small_side) {
        out.restrict(y, ColorSet::ALL.without(c2));
    } else {
        out.restrict(y, ColorSet::singleton(one));
    }
}

fn color_roles(core_colors: (Color, Color)) -> (Color, Color, Color) {
    let (two, three) = core_colors;
    (6 - two - three, two, three)
}

fn subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|v| b.contains(v))
}

fn proper_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    subset(a, b) && !subset(b, a)
}

/// The structural facts the construction relies on: suffix classes split
/// exactly into the two endpoint sides, disjoint and non-empty, with the
/// small side inside the height class.
fn annotation_invariants_hold(
    g: &Graph,
    classes: &[Vec<VertexId>],
    notes: &[PairAnnotation],
) -> bool {
    for note in notes {
        let suffix: Vec<VertexId> = classes[note.height..]
            .iter()
            .flat_map(|c| c.iter().copied())
            .collect();
        if note.large_side.is_empty() || note.small_side.is_empty() {
            return false;
        }
        for &s in &suffix {
            let in_large = note.large_side.contains(&s);
            let in_small = note.small_side.contains(&s);
            if in_large == in_small {
                return false;
            }
        }
        if !note.small_side.iter().all(|v| classes[note.height].contains(v)) {
            return false;
        }
        if note.height + 1 < classes.len() {
            let above: Vec<VertexId> = classes[note.height + 1..]
                .iter()
                .flat_map(|c| c.iter().copied())
                .collect();
            if g.has_neighbor_in(note.small, &above) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_list_color;
    use crate::palette::{ColoringProblem, ConstraintFamily, validate};
    use alloc::vec;

    /// Hub 0, core {1, 2}, one pair (3, 4); 3 sees core vertex 1,
    /// 4 sees core vertex 2.
    fn one_pair_scene() -> (Graph, Palette, PairScene) {
        let g = Graph::build(
            5,
            &[(0, 1), (0, 2), (3, 4), (1, 3), (2, 4)],
        )
        .unwrap();
        let mut p = Palette::full(5);
        p.set(1, ColorSet::pair(2, 3));
        p.set(2, ColorSet::pair(2, 3));
        let scene = PairScene {
            hub: Some(0),
            core: vec![1, 2],
            pairs: vec![(3, 4)],
            core_colors: (2, 3),
        };
        (g, p, scene)
    }

    #[test]
    fn scene_checks_pass_and_fail() {
        let (g, p, scene) = one_pair_scene();
        assert!(check_scene(&g, &p, &scene).is_ok());

        let mut wide = p.clone();
        wide.set(1, ColorSet::ALL);
        assert_eq!(
            check_scene(&g, &wide, &scene),
            Err(SceneViolation::CoreListTooWide { vertex: 1 })
        );

        let mut bad = scene.clone();
        bad.hub = None;
        assert_eq!(check_scene(&g, &p, &bad), Err(SceneViolation::MissingHub));
    }

    #[test]
    fn mixedness_graph_edges() {
        let (g, _, scene) = one_pair_scene();
        let h = build_mixedness_graph(&g, &scene);
        // Core ids 0,1 map to vertices 1,2; the pair is vertex 2 in h.
        assert!(h.adjacent(0, 2));
        assert!(h.adjacent(1, 2));
    }

    #[test]
    fn empty_matching_returns_input() {
        let g = Graph::build(3, &[(0, 1), (0, 2)]).unwrap();
        let mut p = Palette::full(3);
        p.set(1, ColorSet::pair(2, 3));
        p.set(2, ColorSet::pair(2, 3));
        let scene = PairScene {
            hub: Some(0),
            core: vec![1, 2],
            pairs: vec![],
            core_colors: (2, 3),
        };
        let family = reduce_pairs(&g, &p, &scene).unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(family[0], p);
    }

    #[test]
    fn single_pair_family_size() {
        let (g, p, scene) = one_pair_scene();
        let family = reduce_pairs(&g, &p, &scene).unwrap();
        // Shape one contributes two palettes, shape two none (needs two
        // pairs), shape three two, plus the closing palette.
        assert_eq!(family.len(), 5);
        for out in &family {
            assert!(out.is_subpalette_of(&p, &g));
            for v in [3u32, 4] {
                assert!(out.get(v).len() <= 2);
            }
            for v in [0u32, 1, 2] {
                assert_eq!(out.get(v), p.get(v));
            }
        }
    }

    /// The family is colorable iff the input is, on the one-pair scene,
    /// checked by enumeration.
    #[test]
    fn one_pair_iff_by_enumeration() {
        let (g, p, scene) = one_pair_scene();
        let family = reduce_pairs(&g, &p, &scene).unwrap();
        let base = ColoringProblem::new(g.clone(), p, ConstraintFamily::empty());
        let base_colorable = brute_force_list_color(&base).unwrap().is_some();
        let family_colorable = family.iter().any(|out| {
            let prob = ColoringProblem::new(g.clone(), out.clone(), ConstraintFamily::empty());
            match brute_force_list_color(&prob).unwrap() {
                Some(c) => {
                    assert!(validate(&base, &c));
                    true
                }
                None => false,
            }
        });
        assert_eq!(base_colorable, family_colorable);
    }
}
