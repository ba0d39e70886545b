//! Shared test harness: seeded random scene generators for the two
//! reduction engines, honoring every scene hypothesis by construction plus
//! rejection sampling for the global class promise.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use trifree_core::graph::{self, Graph, VertexId};
use trifree_core::pair_reduction::PairScene;
use trifree_core::palette::{ColorSet, ConstraintFamily, Palette};
use trifree_core::restriction::{check_restriction_scene, RestrictionScene};

pub fn chance(rng: &mut ChaCha8Rng, p: f64) -> bool {
    (rng.next_u32() as f64) < p * (u32::MAX as f64)
}

pub fn pick(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u32() as usize) % n.max(1)
}

fn random_nonempty_list(rng: &mut ChaCha8Rng, within: ColorSet) -> ColorSet {
    loop {
        let mut set = ColorSet::EMPTY;
        for c in within.iter() {
            if chance(rng, 0.55) {
                set = set.plus(c);
            }
        }
        if !set.is_empty() {
            return set;
        }
    }
}

/// A random matched-pair scene on at most 10 vertices satisfying all scene
/// hypotheses, or `None` when this seed falls outside the class.
pub fn gen_pair_scene(
    seed: u64,
) -> Option<(Graph, Palette, ConstraintFamily, PairScene)> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let pairs_n = pick(rng, 4);
    let core_n = 1 + pick(rng, 3);
    let extra_max = 10usize.saturating_sub(1 + core_n + 2 * pairs_n);
    let extra_n = pick(rng, extra_max + 1);
    let n = 1 + core_n + 2 * pairs_n + extra_n;

    let hub: VertexId = 0;
    let core: Vec<VertexId> = (1..=core_n as u32).collect();
    let pair_base = 1 + core_n as u32;
    let pairs: Vec<(VertexId, VertexId)> = (0..pairs_n as u32)
        .map(|i| (pair_base + 2 * i, pair_base + 2 * i + 1))
        .collect();
    let rest_base = pair_base + 2 * pairs_n as u32;
    let rest: Vec<VertexId> = (rest_base..n as u32).collect();

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for &s in &core {
        edges.push((hub, s));
    }
    for &(a, b) in &pairs {
        edges.push((a, b));
        for v in [a, b] {
            edges.push((core[pick(rng, core.len())], v));
            for &s in &core {
                if chance(rng, 0.25) {
                    edges.push((s, v));
                }
            }
        }
    }
    let mut middle: Vec<VertexId> = core.clone();
    for &(a, b) in &pairs {
        middle.push(a);
        middle.push(b);
    }
    for &y in &rest {
        for &u in &middle {
            if chance(rng, 0.2) {
                edges.push((u, y));
            }
        }
        for &y2 in &rest {
            if y2 > y && chance(rng, 0.2) {
                edges.push((y, y2));
            }
        }
        if chance(rng, 0.2) {
            edges.push((hub, y));
        }
    }
    let g = Graph::build(n, &edges).ok()?;
    if graph::find_triangle(&g).is_some() || graph::find_induced_path(&g, 7).is_some() {
        return None;
    }

    let mut palette = Palette::full(n as u32);
    for &s in &core {
        palette.set(s, random_nonempty_list(rng, ColorSet::pair(2, 3)));
    }
    for &(a, b) in &pairs {
        palette.set(a, random_nonempty_list(rng, ColorSet::ALL));
        palette.set(b, random_nonempty_list(rng, ColorSet::ALL));
    }
    for &y in &rest {
        palette.set(y, random_nonempty_list(rng, ColorSet::ALL));
    }
    palette.set(hub, random_nonempty_list(rng, ColorSet::ALL));

    let mut constraints = ConstraintFamily::empty();
    for _ in 0..pick(rng, 3) {
        let size = 2 + pick(rng, 2);
        let mut set = Vec::new();
        for _ in 0..size {
            set.push(pick(rng, n) as VertexId);
        }
        constraints.push(set);
    }

    let scene = PairScene { hub: Some(hub), core, pairs, core_colors: (2, 3) };
    Some((g, palette, constraints, scene))
}

/// A random restriction scene on at most 12 vertices satisfying all scene
/// hypotheses (verified by the library's own checker), or `None` for seeds
/// that fall outside.
pub fn gen_restriction_scene(
    seed: u64,
) -> Option<(Graph, Palette, ConstraintFamily, RestrictionScene)> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let boundary_n = 2 + pick(rng, 4);
    let comp_count = 1 + pick(rng, 2);
    let comp_sizes: Vec<usize> = (0..comp_count).map(|_| 1 + pick(rng, 2)).collect();
    let free_n: usize = comp_sizes.iter().sum();

    let pair_lists = [ColorSet::pair(1, 2), ColorSet::pair(1, 3), ColorSet::pair(2, 3)];
    let mut boundary_lists: Vec<ColorSet> = Vec::new();
    for _ in 0..boundary_n {
        if chance(rng, 0.75) {
            boundary_lists.push(pair_lists[pick(rng, 3)]);
        } else {
            boundary_lists.push(ColorSet::singleton(1 + pick(rng, 3) as u8));
        }
    }
    let classes_present: Vec<ColorSet> = pair_lists
        .iter()
        .copied()
        .filter(|s| boundary_lists.contains(s))
        .collect();
    let shield_n = classes_present.len() + pick(rng, 2);
    let n = boundary_n + shield_n + free_n;
    if n > 12 || shield_n == 0 {
        return None;
    }

    let boundary: Vec<VertexId> = (0..boundary_n as u32).collect();
    let shielded: Vec<VertexId> =
        (boundary_n as u32..(boundary_n + shield_n) as u32).collect();
    let free_base = (boundary_n + shield_n) as u32;
    let free: Vec<VertexId> = (free_base..n as u32).collect();

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    // One shielded vertex complete to each present class.
    for (ci, &class) in classes_present.iter().enumerate() {
        let b = shielded[ci];
        for &a in &boundary {
            if boundary_lists[a as usize] == class {
                edges.push((a, b));
            } else if chance(rng, 0.15) {
                edges.push((a, b));
            }
        }
    }
    for &b in &shielded[classes_present.len()..] {
        for &a in &boundary {
            if chance(rng, 0.3) {
                edges.push((a, b));
            }
        }
        for &b2 in &shielded {
            if b2 < b && chance(rng, 0.2) {
                edges.push((b2, b));
            }
        }
    }
    // Free components and their boundary anchors.
    let mut next = free_base;
    for &size in &comp_sizes {
        let members: Vec<VertexId> = (next..next + size as u32).collect();
        next += size as u32;
        if size == 2 {
            edges.push((members[0], members[1]));
        }
        for &c in &members {
            let anchors = 1 + pick(rng, 3.min(boundary_n));
            let mut chosen: Vec<VertexId> = Vec::new();
            while chosen.len() < anchors {
                let a = boundary[pick(rng, boundary_n)];
                if !chosen.contains(&a) {
                    chosen.push(a);
                }
            }
            for a in chosen {
                edges.push((a, c));
            }
        }
    }
    for (i, &a) in boundary.iter().enumerate() {
        for &a2 in &boundary[i + 1..] {
            if chance(rng, 0.12) {
                edges.push((a, a2));
            }
        }
    }

    let g = Graph::build(n, &edges).ok()?;
    if graph::find_triangle(&g).is_some() || graph::find_induced_path(&g, 7).is_some() {
        return None;
    }
    let mut palette = Palette::full(n as u32);
    for &a in &boundary {
        palette.set(a, boundary_lists[a as usize]);
    }
    for &b in &shielded {
        palette.set(b, random_nonempty_list(rng, ColorSet::ALL));
    }
    let scene = RestrictionScene { boundary: boundary.clone(), shielded, free };
    if check_restriction_scene(&g, &palette, &scene).is_err() {
        return None;
    }

    let mut constraints = ConstraintFamily::empty();
    for _ in 0..pick(rng, 3) {
        let size = 2 + pick(rng, 2);
        let mut set = Vec::new();
        for _ in 0..size {
            set.push(boundary[pick(rng, boundary_n)]);
        }
        constraints.push(set);
    }
    Some((g, palette, constraints, scene))
}
