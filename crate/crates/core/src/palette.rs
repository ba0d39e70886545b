//! Palettes (per-vertex allowed-color sets over {1,2,3}), monochromatic
//! constraint families, and the exact list-coloring backend for lists of
//! size at most two.

use crate::graph::{Graph, VertexId};
use crate::twosat::{Lit, TwoSat};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// A color in {1, 2, 3}.
pub type Color = u8;

/// A subset of the colors {1, 2, 3}, as a 3-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b111);

    pub fn singleton(c: Color) -> ColorSet {
        debug_assert!((1..=3).contains(&c));
        ColorSet(1 << (c - 1))
    }

    pub fn of(colors: &[Color]) -> ColorSet {
        colors.iter().fold(ColorSet::EMPTY, |s, &c| s.plus(c))
    }

    pub fn pair(a: Color, b: Color) -> ColorSet {
        ColorSet::singleton(a).union(ColorSet::singleton(b))
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 >> (c - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn plus(self, c: Color) -> ColorSet {
        ColorSet(self.0 | ColorSet::singleton(c).0)
    }

    pub fn minus(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn without(self, c: Color) -> ColorSet {
        self.minus(ColorSet::singleton(c))
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        (1..=3).filter(move |&c| self.contains(c))
    }

    /// Least color in the set; panics on the empty set.
    pub fn min_color(self) -> Color {
        self.iter().next().expect("empty color set")
    }

    /// The single color of a singleton set.
    pub fn the_color(self) -> Option<Color> {
        if self.len() == 1 {
            Some(self.min_color())
        } else {
            None
        }
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for c in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Per-vertex allowed-color lists, indexed over a graph's id universe.
///
/// An entry may become empty during updating; a palette with an empty entry
/// on a live vertex is "flagged": the branch it represents is infeasible and
/// callers must treat it as uncolorable.
#[derive(Clone, PartialEq, Eq)]
pub struct Palette {
    lists: Vec<ColorSet>,
}

impl fmt::Debug for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.lists.iter().enumerate().map(|(v, s)| (v, s)))
            .finish()
    }
}

impl Palette {
    /// The full palette: every vertex of the universe gets {1,2,3}.
    pub fn full(universe: u32) -> Palette {
        Palette { lists: alloc::vec![ColorSet::ALL; universe as usize] }
    }

    pub fn get(&self, v: VertexId) -> ColorSet {
        self.lists[v as usize]
    }

    pub fn set(&mut self, v: VertexId, s: ColorSet) {
        self.lists[v as usize] = s;
    }

    pub fn restrict(&mut self, v: VertexId, s: ColorSet) {
        self.lists[v as usize] = self.lists[v as usize].intersect(s);
    }

    /// Some live vertex has an empty list.
    pub fn flagged_on(&self, g: &Graph) -> bool {
        g.vertices().iter().any(|&v| self.get(v).is_empty())
    }

    /// `self` restricts `other` on every live vertex of `g`.
    pub fn is_subpalette_of(&self, other: &Palette, g: &Graph) -> bool {
        g.vertices()
            .iter()
            .all(|&v| self.get(v).is_subset_of(other.get(v)))
    }

    /// Removes from each target's list the colors of its singleton-list
    /// neighbors among `sources`. The paper's updating step.
    pub fn updated(&self, g: &Graph, sources: &[VertexId], targets: &[VertexId]) -> Palette {
        let mut out = self.clone();
        for &y in targets {
            let mut forbidden = ColorSet::EMPTY;
            for &x in sources {
                if g.adjacent(x, y) {
                    if let Some(c) = self.get(x).the_color() {
                        forbidden = forbidden.plus(c);
                    }
                }
            }
            out.set(y, self.get(y).minus(forbidden));
        }
        out
    }
}

/// Error raised by [`update_palettes`] on a precondition violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpdateError {
    NonSingletonSource(VertexId),
    Overlap(VertexId),
}

impl fmt::Display for UpdateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpdateError::NonSingletonSource(v) => {
                write!(f, "source vertex {v} does not have a singleton list")
            }
            UpdateError::Overlap(v) => write!(f, "vertex {v} is both a source and a target"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for UpdateError {}

/// Updates the lists of `targets` with respect to `sources`, requiring every
/// source list to be a singleton and the two sets to be disjoint.
///
/// An emptied target list is returned as-is, flagging the palette as
/// infeasible rather than erroring.
pub fn update_palettes(
    g: &Graph,
    palette: &Palette,
    sources: &[VertexId],
    targets: &[VertexId],
) -> Result<Palette, UpdateError> {
    for &x in sources {
        if palette.get(x).len() != 1 {
            return Err(UpdateError::NonSingletonSource(x));
        }
        if targets.contains(&x) {
            return Err(UpdateError::Overlap(x));
        }
    }
    Ok(palette.updated(g, sources, targets))
}

/// A family of vertex sets, each forced monochromatic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstraintFamily {
    sets: Vec<Vec<VertexId>>,
}

impl ConstraintFamily {
    pub fn empty() -> Self {
        ConstraintFamily { sets: Vec::new() }
    }

    pub fn new(sets: Vec<Vec<VertexId>>) -> Self {
        let mut f = ConstraintFamily::empty();
        for s in sets {
            f.push(s);
        }
        f
    }

    /// Adds a set (sorted, deduplicated); duplicates of existing sets are
    /// dropped so the family size stays linear.
    pub fn push(&mut self, mut set: Vec<VertexId>) {
        set.sort_unstable();
        set.dedup();
        if !self.sets.contains(&set) {
            self.sets.push(set);
        }
    }

    pub fn sets(&self) -> &[Vec<VertexId>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn mentions(&self, v: VertexId) -> bool {
        self.sets.iter().any(|s| s.contains(&v))
    }
}

/// A list-coloring instance: graph, palette, and monochromatic constraints.
#[derive(Debug, Clone)]
pub struct ColoringProblem {
    pub graph: Graph,
    pub palette: Palette,
    pub constraints: ConstraintFamily,
}

impl ColoringProblem {
    pub fn new(graph: Graph, palette: Palette, constraints: ConstraintFamily) -> Self {
        ColoringProblem { graph, palette, constraints }
    }

    /// Plain 3-coloring of `graph`: full lists, no constraints.
    pub fn plain(graph: Graph) -> Self {
        let palette = Palette::full(graph.universe());
        ColoringProblem { graph, palette, constraints: ConstraintFamily::empty() }
    }
}

/// A (possibly partial) assignment of colors to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    colors: BTreeMap<VertexId, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Coloring::default()
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        self.colors.insert(v, c);
    }

    pub fn remove(&mut self, v: VertexId) {
        self.colors.remove(&v);
    }

    /// The color of `v`; panics if `v` is uncolored.
    pub fn get(&self, v: VertexId) -> Color {
        self.colors[&v]
    }

    pub fn try_get(&self, v: VertexId) -> Option<Color> {
        self.colors.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    /// Every live vertex of `g` is colored.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.vertices().iter().all(|&v| self.colors.contains_key(&v))
    }

    /// Merges `other` into `self` (later entries win on overlap).
    pub fn absorb(&mut self, other: &Coloring) {
        for (v, c) in other.iter() {
            self.colors.insert(v, c);
        }
    }
}

/// True iff `c` is total on the problem's graph, proper, list-respecting,
/// and makes every constraint set monochromatic.
pub fn validate(problem: &ColoringProblem, c: &Coloring) -> bool {
    let g = &problem.graph;
    if !c.is_total_on(g) {
        return false;
    }
    for &v in g.vertices() {
        if !problem.palette.get(v).contains(c.get(v)) {
            return false;
        }
    }
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return false;
        }
    }
    for set in problem.constraints.sets() {
        let live: Vec<_> = set.iter().copied().filter(|&v| g.contains(v)).collect();
        if let Some((&first, rest)) = live.split_first() {
            if rest.iter().any(|&v| c.get(v) != c.get(first)) {
                return false;
            }
        }
    }
    true
}

/// Error raised by [`solve_two_list`] when some list has three colors,
/// signalling a pipeline bug upstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListTooWide(pub VertexId);

impl fmt::Display for ListTooWide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} has a list of size 3", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ListTooWide {}

/// Decides a list-coloring instance with all lists of size at most two, by
/// reduction to 2-SAT; returns a coloring or `None` iff none exists.
///
/// Monochromatic sets are handled by first restricting every member to the
/// set's common color intersection (iterated to a fixpoint across
/// overlapping sets) and then tying equal-list members together with
/// equivalence clauses along a spanning star.
pub fn solve_two_list(problem: &ColoringProblem) -> Result<Option<Coloring>, ListTooWide> {
    let g = &problem.graph;
    let mut lists: BTreeMap<VertexId, ColorSet> = BTreeMap::new();
    for &v in g.vertices() {
        let l = problem.palette.get(v);
        if l.len() > 2 {
            return Err(ListTooWide(v));
        }
        if l.is_empty() {
            return Ok(None);
        }
        lists.insert(v, l);
    }

    let live_sets: Vec<Vec<VertexId>> = problem
        .constraints
        .sets()
        .iter()
        .map(|s| s.iter().copied().filter(|&v| g.contains(v)).collect())
        .filter(|s: &Vec<VertexId>| s.len() >= 2)
        .collect();

    // Fixpoint restriction: each constraint set can only use colors common
    // to all its members.
    loop {
        let mut changed = false;
        for set in &live_sets {
            let common = set
                .iter()
                .fold(ColorSet::ALL, |acc, &v| acc.intersect(lists[&v]));
            if common.is_empty() {
                return Ok(None);
            }
            for &v in set {
                if lists[&v] != common {
                    lists.insert(v, common);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    // One boolean per two-color vertex: true = the smaller color.
    let mut var_of: BTreeMap<VertexId, u32> = BTreeMap::new();
    for (&v, &l) in &lists {
        if l.len() == 2 {
            let idx = var_of.len() as u32;
            var_of.insert(v, idx);
        }
    }
    let mut sat = TwoSat::new(var_of.len());

    // Literal for "v is colored c"; None when impossible, Err(()) when forced.
    let lit_for = |v: VertexId, c: Color| -> Option<Result<Lit, bool>> {
        let l = lists[&v];
        if !l.contains(c) {
            return Some(Err(false));
        }
        match l.the_color() {
            Some(_) => Some(Err(true)),
            None => {
                let var = var_of[&v];
                Some(Ok(if c == l.min_color() { Lit::pos(var) } else { Lit::neg(var) }))
            }
        }
    };

    for (u, v) in g.edges() {
        for c in lists[&u].intersect(lists[&v]).iter() {
            // Forbid u and v both taking c.
            match (lit_for(u, c).unwrap(), lit_for(v, c).unwrap()) {
                (Err(true), Err(true)) => return Ok(None),
                (Err(true), Ok(lv)) => sat.add_unit(negate(lv)),
                (Ok(lu), Err(true)) => sat.add_unit(negate(lu)),
                (Ok(lu), Ok(lv)) => sat.add_clause(negate(lu), negate(lv)),
                (Err(false), _) | (_, Err(false)) => unreachable!(),
            }
        }
    }

    for set in &live_sets {
        let common = lists[&set[0]];
        if common.len() < 2 {
            continue;
        }
        // All members share the same two-color list; same color means same
        // truth value.
        let center = var_of[&set[0]];
        for &v in &set[1..] {
            sat.add_equiv(Lit::pos(center), Lit::pos(var_of[&v]));
        }
    }

    let Some(assignment) = sat.solve() else {
        return Ok(None);
    };
    let mut coloring = Coloring::new();
    for (&v, &l) in &lists {
        let c = match l.the_color() {
            Some(c) => c,
            None => {
                let colors: Vec<Color> = l.iter().collect();
                if assignment[var_of[&v] as usize] {
                    colors[0]
                } else {
                    colors[1]
                }
            }
        };
        coloring.set(v, c);
    }
    debug_assert!(validate(problem, &coloring));
    Ok(Some(coloring))
}

fn negate(l: Lit) -> Lit {
    Lit { var: l.var, positive: !l.positive }
}
