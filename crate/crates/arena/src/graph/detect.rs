//! Monochromatic (optionally induced) copy detection.
//!
//! The search maps target vertices onto the background graph one at a time,
//! following a precomputed order in which every vertex is adjacent to an
//! earlier one, so candidates always come from the neighborhood of an
//! already-placed vertex. Games add one edge per round, which means a brand
//! new copy must contain the newest edge; [`find_mono_copy_through`] exploits
//! that by anchoring some target edge onto it.

use super::{Color, ColoredGraph, TargetGraph, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How strictly "induced" is interpreted when validating a copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InducedMode {
    /// Plain subgraph containment; extra edges between image vertices are fine.
    Off,
    /// Extra edges in the copy's own color are forbidden; edges of the other
    /// color between image vertices are tolerated.
    OwnColor,
    /// No extra edge of any color may run between image vertices.
    Strict,
}

impl InducedMode {
    /// Map the engine-level `induced` switch to a mode (strict by default).
    pub fn from_flag(induced: bool) -> InducedMode {
        if induced {
            InducedMode::Strict
        } else {
            InducedMode::Off
        }
    }

    pub fn is_induced(self) -> bool {
        !matches!(self, InducedMode::Off)
    }
}

/// A concrete copy of a target inside the background graph: `map[t]` is the
/// background vertex playing target vertex `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<Vertex>,
    pub color: Color,
}

/// Violations reported by [`verify_embedding`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("embedding maps {got} vertices, target has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("embedding repeats background vertex {0}")]
    DuplicateImage(Vertex),
    #[error("embedding references vertex {0} outside the graph")]
    OutOfRange(Vertex),
    #[error("target edge {0}-{1} maps to a missing background edge")]
    MissingEdge(Vertex, Vertex),
    #[error("target edge {0}-{1} maps to an edge of the wrong color")]
    WrongColor(Vertex, Vertex),
    #[error("image has a forbidden extra edge between images of {0} and {1}")]
    ExtraEdge(Vertex, Vertex),
}

/// Re-checks an embedding from scratch against the background graph.
pub fn verify_embedding(
    g: &ColoredGraph,
    h: &TargetGraph,
    emb: &Embedding,
    mode: InducedMode,
) -> Result<(), EmbeddingError> {
    let n = h.vertex_count();
    if emb.map.len() != n {
        return Err(EmbeddingError::WrongLength {
            got: emb.map.len(),
            want: n,
        });
    }
    for &w in &emb.map {
        if w >= g.vertex_count() {
            return Err(EmbeddingError::OutOfRange(w));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if emb.map[i] == emb.map[j] {
                return Err(EmbeddingError::DuplicateImage(emb.map[i]));
            }
            let got = g.color_of(emb.map[i], emb.map[j]);
            if h.has_edge(i, j) {
                match got {
                    None => return Err(EmbeddingError::MissingEdge(i, j)),
                    Some(c) if c != emb.color => {
                        return Err(EmbeddingError::WrongColor(i, j))
                    }
                    Some(_) => {}
                }
            } else {
                let bad = match mode {
                    InducedMode::Off => false,
                    InducedMode::OwnColor => got == Some(emb.color),
                    InducedMode::Strict => got.is_some(),
                };
                if bad {
                    return Err(EmbeddingError::ExtraEdge(i, j));
                }
            }
        }
    }
    Ok(())
}

/// Finds a monochromatic copy of `h` in `g`, in the wanted color or either.
pub fn find_mono_copy(
    g: &ColoredGraph,
    h: &TargetGraph,
    want: Option<Color>,
    mode: InducedMode,
) -> Option<Embedding> {
    let colors = match want {
        Some(c) => vec![c],
        None => Color::BOTH.to_vec(),
    };
    for c in colors {
        if g.edge_count_of(c) < h.edge_count() || g.vertex_count() < h.vertex_count() {
            continue;
        }
        // Every copy maps target edge 0 onto some background edge of color c.
        let (ta, tb) = h.edges()[0];
        for (u, v, ec) in g.edges() {
            if ec != c {
                continue;
            }
            for (x, y) in [(u, v), (v, u)] {
                if let Some(map) = try_embed(g, h, c, mode, 0, &[(ta, x), (tb, y)]) {
                    return Some(Embedding { map, color: c });
                }
            }
        }
    }
    None
}

/// Finds a monochromatic copy of `h` that uses the background edge `{u, v}`.
///
/// During a game no copy exists before the latest round, so any copy present
/// afterwards must run through the newest edge; checking only those keeps the
/// per-round cost anchored.
pub fn find_mono_copy_through(
    g: &ColoredGraph,
    h: &TargetGraph,
    want: Option<Color>,
    mode: InducedMode,
    through: (Vertex, Vertex),
) -> Option<Embedding> {
    let c = g.color_of(through.0, through.1)?;
    if want.is_some_and(|w| w != c) {
        return None;
    }
    if g.edge_count_of(c) < h.edge_count() || g.vertex_count() < h.vertex_count() {
        return None;
    }
    if h.is_tree() && h.max_degree() <= 2 {
        return find_path_copy_through(g, h, c, mode, through);
    }
    for (e, &(ta, tb)) in h.edges().iter().enumerate() {
        for (x, y) in [through, (through.1, through.0)] {
            if let Some(map) = try_embed(g, h, c, mode, e, &[(ta, x), (tb, y)]) {
                return Some(Embedding { map, color: c });
            }
        }
    }
    None
}

/// Through-edge search specialized to path targets.
///
/// The generic anchor loop would re-run a full backtracking pass for each of
/// the n positions the newest edge can take along the path, re-walking the
/// same colored component every time. Instead, grow one arm outward from
/// `through.0` and, at every arm shape, try to finish the remaining edges
/// outward from `through.1`: each left/right split is visited exactly once,
/// and the mirror image of the path covers the reversed orientation.
fn find_path_copy_through(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    through: (Vertex, Vertex),
) -> Option<Embedding> {
    let vertices = h.vertex_count();
    let mut left = vec![through.0]; // grows outward from through.0
    let mut right = vec![through.1]; // grows outward from through.1
    let mut used = vec![false; g.vertex_count()];
    used[through.0] = true;
    used[through.1] = true;
    if !grow_arms(g, mode, c, vertices, &mut left, &mut right, &mut used) {
        return None;
    }
    // Walk the target from an endpoint and lay the image along it.
    let start = (0..vertices).find(|&v| h.degree(v) == 1)?;
    let mut order = Vec::with_capacity(vertices);
    let mut prev = usize::MAX;
    let mut at = start;
    loop {
        order.push(at);
        match h.neighbors(at).iter().find(|&&w| w != prev) {
            Some(&next) => {
                prev = at;
                at = next;
            }
            None => break,
        }
    }
    let mut map = vec![0; vertices];
    let image = left.iter().rev().chain(right.iter());
    for (&t, &w) in order.iter().zip(image) {
        map[t] = w;
    }
    Some(Embedding { map, color: c })
}

/// Tries every extension of the left arm, completing the right arm at each
/// shape. Arms list vertices outward from the through edge; `used` marks the
/// vertices of both arms.
fn grow_arms(
    g: &ColoredGraph,
    mode: InducedMode,
    c: Color,
    vertices: usize,
    left: &mut Vec<Vertex>,
    right: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
) -> bool {
    if finish_right(g, mode, c, vertices, left, right, used) {
        return true;
    }
    if left.len() + right.len() >= vertices {
        return false;
    }
    let end = *left.last().expect("left holds the through edge");
    for (w, ec) in g.neighbors(end) {
        if ec == c && placement_ok(g, mode, c, used, end, w) {
            left.push(w);
            used[w] = true;
            if grow_arms(g, mode, c, vertices, left, right, used) {
                return true;
            }
            used[w] = false;
            left.pop();
        }
    }
    false
}

/// Extends the right arm until the image reaches the target's vertex count.
fn finish_right(
    g: &ColoredGraph,
    mode: InducedMode,
    c: Color,
    vertices: usize,
    left: &[Vertex],
    right: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
) -> bool {
    if left.len() + right.len() == vertices {
        return true;
    }
    let end = *right.last().expect("right holds the through edge");
    for (w, ec) in g.neighbors(end) {
        if ec == c && placement_ok(g, mode, c, used, end, w) {
            right.push(w);
            used[w] = true;
            if finish_right(g, mode, c, vertices, left, right, used) {
                return true;
            }
            used[w] = false;
            right.pop();
        }
    }
    false
}

/// Whether `w` may join an arm whose tip is `prev`: it must be new, and no
/// vertex already on either arm except `prev` may be adjacent to it in a way
/// the induced mode forbids. Scanning `w`'s neighbor list instead of the
/// arms keeps this proportional to `w`'s degree.
fn placement_ok(
    g: &ColoredGraph,
    mode: InducedMode,
    c: Color,
    used: &[bool],
    prev: Vertex,
    w: Vertex,
) -> bool {
    if used[w] {
        return false;
    }
    match mode {
        InducedMode::Off => true,
        InducedMode::OwnColor => g.neighbors(w).all(|(z, ec)| ec != c || z == prev || !used[z]),
        InducedMode::Strict => g.neighbors(w).all(|(z, _)| z == prev || !used[z]),
    }
}

/// Backtracking extension of a seeded partial map. `order_edge` picks which
/// of the target's precomputed search orders to follow; `seeds` must cover
/// its first two entries.
fn try_embed(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    order_edge: usize,
    seeds: &[(Vertex, Vertex)],
) -> Option<Vec<Vertex>> {
    let n = h.vertex_count();
    let order = h.search_order(order_edge);
    let mut map: Vec<Option<Vertex>> = vec![None; n];
    let mut placed: Vec<Vertex> = Vec::with_capacity(n); // target ids in placement order
    for &(t, w) in seeds {
        if !check_placement(g, h, c, mode, &map, &placed, t, w) {
            return None;
        }
        map[t] = Some(w);
        placed.push(t);
    }
    if extend(g, h, c, mode, order, seeds.len(), &mut map, &mut placed) {
        Some(map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

fn extend(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    order: &[Vertex],
    pos: usize,
    map: &mut Vec<Option<Vertex>>,
    placed: &mut Vec<Vertex>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let t = order[pos];
    // Candidates come from the image of some already-placed target neighbor.
    let parent = h
        .neighbors(t)
        .iter()
        .find(|&&s| map[s].is_some())
        .copied()
        .expect("search order keeps the frontier connected");
    let around = map[parent].unwrap();
    let candidates: Vec<Vertex> = g
        .neighbors(around)
        .filter(|&(_, ec)| ec == c)
        .map(|(w, _)| w)
        .collect();
    for w in candidates {
        if check_placement(g, h, c, mode, map, placed, t, w) {
            map[t] = Some(w);
            placed.push(t);
            if extend(g, h, c, mode, order, pos + 1, map, placed) {
                return true;
            }
            placed.pop();
            map[t] = None;
        }
    }
    false
}

fn check_placement(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    map: &[Option<Vertex>],
    placed: &[Vertex],
    t: Vertex,
    w: Vertex,
) -> bool {
    if w >= g.vertex_count() || g.mono_degree(w, c) < h.degree(t) {
        return false;
    }
    // Interchangeable target vertices must take ascending images; any copy
    // can be relabeled to comply, and this prunes the factorially many
    // equivalent assignments of pendant leaves.
    for &s in h.twins(t) {
        if let Some(ws) = map[s] {
            if (s < t) != (ws < w) {
                return false;
            }
        }
    }
    for &s in placed {
        let ws = map[s].unwrap();
        if ws == w {
            return false;
        }
        let got = g.color_of(w, ws);
        if h.has_edge(t, s) {
            if got != Some(c) {
                return false;
            }
        } else {
            let bad = match mode {
                InducedMode::Off => false,
                InducedMode::OwnColor => got == Some(c),
                InducedMode::Strict => got.is_some(),
            };
            if bad {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TargetSpec;

    fn graph(edges: &[(Vertex, Vertex, Color)]) -> ColoredGraph {
        let mut g = ColoredGraph::new();
        for &(u, v, c) in edges {
            g.add_edge(u, v, c).unwrap();
        }
        g
    }

    fn target(s: &str) -> TargetGraph {
        s.parse::<TargetSpec>().unwrap().expand().unwrap()
    }

    use Color::{Blue, Red};

    #[test]
    fn finds_triangles_by_color() {
        let g = graph(&[
            (0, 1, Red),
            (1, 2, Red),
            (0, 2, Red),
            (2, 3, Blue),
            (3, 4, Blue),
            (2, 4, Blue),
        ]);
        let c3 = target("cycle:3");
        let red = find_mono_copy(&g, &c3, Some(Red), InducedMode::Off).unwrap();
        assert_eq!(red.color, Red);
        verify_embedding(&g, &c3, &red, InducedMode::Strict).unwrap();
        assert!(find_mono_copy(&g, &c3, Some(Blue), InducedMode::Off).is_some());
        assert!(find_mono_copy(&g, &target("cycle:4"), None, InducedMode::Off).is_none());
    }

    #[test]
    fn induced_modes_differ_on_extra_edges() {
        // Red path 0-1-2 with the closing edge 0-2 in each color in turn.
        let p2 = target("path:2");
        let closed_red = graph(&[(0, 1, Red), (1, 2, Red), (0, 2, Red)]);
        assert!(find_mono_copy(&closed_red, &p2, Some(Red), InducedMode::Off).is_some());
        assert!(find_mono_copy(&closed_red, &p2, Some(Red), InducedMode::OwnColor).is_none());
        assert!(find_mono_copy(&closed_red, &p2, Some(Red), InducedMode::Strict).is_none());

        let closed_blue = graph(&[(0, 1, Red), (1, 2, Red), (0, 2, Blue)]);
        assert!(find_mono_copy(&closed_blue, &p2, Some(Red), InducedMode::Off).is_some());
        assert!(find_mono_copy(&closed_blue, &p2, Some(Red), InducedMode::OwnColor).is_some());
        assert!(find_mono_copy(&closed_blue, &p2, Some(Red), InducedMode::Strict).is_none());
    }

    #[test]
    fn through_edge_restricts_the_search() {
        // Two disjoint red paths; only one contains the probe edge.
        let g = graph(&[(0, 1, Red), (1, 2, Red), (3, 4, Red), (4, 5, Red)]);
        let p2 = target("path:2");
        let emb = find_mono_copy_through(&g, &p2, None, InducedMode::Strict, (4, 5)).unwrap();
        assert!(emb.map.contains(&4) && emb.map.contains(&5));
        // A blue request through a red edge finds nothing.
        assert!(find_mono_copy_through(&g, &p2, Some(Blue), InducedMode::Off, (4, 5)).is_none());
    }

    #[test]
    fn spider_needs_disjoint_legs() {
        // A center with 3 red legs of length 2, but two legs share a tip.
        let shared = graph(&[
            (0, 1, Red),
            (1, 2, Red),
            (0, 3, Red),
            (3, 2, Red),
            (0, 4, Red),
            (4, 5, Red),
        ]);
        assert!(find_mono_copy(&shared, &target("spider:3,2"), None, InducedMode::Off).is_none());
        let ok = graph(&[
            (0, 1, Red),
            (1, 2, Red),
            (0, 3, Red),
            (3, 4, Red),
            (0, 5, Red),
            (5, 6, Red),
        ]);
        let emb = find_mono_copy(&ok, &target("spider:3,2"), None, InducedMode::Strict).unwrap();
        verify_embedding(&ok, &target("spider:3,2"), &emb, InducedMode::Strict).unwrap();
    }

    /// Independent reference for the specialized path search: enumerate all
    /// vertex sequences of the right length and test them directly.
    fn brute_path_through(
        g: &ColoredGraph,
        vertices: usize,
        mode: InducedMode,
        through: (Vertex, Vertex),
    ) -> bool {
        fn extend(
            g: &ColoredGraph,
            mode: InducedMode,
            c: Color,
            seq: &mut Vec<Vertex>,
            vertices: usize,
            through: (Vertex, Vertex),
        ) -> bool {
            if seq.len() == vertices {
                return seq.windows(2).any(|w| {
                    (w[0], w[1]) == through || (w[1], w[0]) == through
                });
            }
            for w in 0..g.vertex_count() {
                if seq.contains(&w) || g.color_of(*seq.last().unwrap(), w) != Some(c) {
                    continue;
                }
                let ok = seq[..seq.len() - 1].iter().all(|&z| match mode {
                    InducedMode::Off => true,
                    InducedMode::OwnColor => g.color_of(w, z) != Some(c),
                    InducedMode::Strict => g.color_of(w, z).is_none(),
                });
                if ok {
                    seq.push(w);
                    if extend(g, mode, c, seq, vertices, through) {
                        return true;
                    }
                    seq.pop();
                }
            }
            false
        }
        Color::BOTH.iter().any(|&c| {
            (0..g.vertex_count()).any(|s| extend(g, mode, c, &mut vec![s], vertices, through))
        })
    }

    #[test]
    fn path_through_search_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let targets: Vec<TargetGraph> = (1..=4).map(|n| target(&format!("path:{n}"))).collect();
        for _ in 0..150 {
            let nv = rng.gen_range(4..8);
            let mut g = ColoredGraph::with_vertices(nv);
            for u in 0..nv {
                for v in u + 1..nv {
                    match rng.gen_range(0..3) {
                        1 => g.add_edge(u, v, Red).unwrap(),
                        2 => g.add_edge(u, v, Blue).unwrap(),
                        _ => {}
                    }
                }
            }
            for h in &targets {
                for mode in [InducedMode::Off, InducedMode::OwnColor, InducedMode::Strict] {
                    for (u, v, _) in g.edges() {
                        let got = find_mono_copy_through(&g, h, None, mode, (u, v));
                        assert_eq!(
                            got.is_some(),
                            brute_path_through(&g, h.vertex_count(), mode, (u, v)),
                            "path:{} through {u}-{v} {mode:?} on {g:?}",
                            h.edge_count(),
                        );
                        if let Some(emb) = got {
                            verify_embedding(&g, h, &emb, mode).unwrap();
                            assert!(
                                h.edges().iter().any(|&(a, b)| {
                                    (emb.map[a], emb.map[b]) == (u, v)
                                        || (emb.map[b], emb.map[a]) == (u, v)
                                }),
                                "copy does not run through the probe edge"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn centipede_leaves_must_be_distinct() {
        // Spine 0-1 with one thorn each; thorns must be two distinct leaves.
        let s11 = target("centipede:1,1");
        let too_small = graph(&[(0, 1, Red), (0, 2, Red), (1, 2, Red)]);
        assert!(find_mono_copy(&too_small, &s11, None, InducedMode::Off).is_none());
        let ok = graph(&[(0, 1, Red), (0, 2, Red), (1, 3, Red)]);
        assert!(find_mono_copy(&ok, &s11, None, InducedMode::Strict).is_some());
    }
}
