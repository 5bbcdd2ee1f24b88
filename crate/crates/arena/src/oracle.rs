//! Deliberately naive reference implementations.
//!
//! Everything here trades speed for obviousness and shares no code with the
//! fast paths it is used to cross-check: copy detection enumerates raw
//! injective maps, vertex cover enumerates subsets, the bipartition weight
//! enumerates 2-labelings, and the game evaluator walks the full move tree
//! with no canonicalization or memoization. Only use these at toy sizes.

use crate::graph::{Color, ColoredGraph, Embedding, InducedMode, TargetGraph, Vertex};

/// Exhaustive monochromatic-copy search over all injective vertex maps.
pub fn find_mono_copy_exhaustive(
    g: &ColoredGraph,
    h: &TargetGraph,
    want: Option<Color>,
    mode: InducedMode,
) -> Option<Embedding> {
    let colors = match want {
        Some(c) => vec![c],
        None => Color::BOTH.to_vec(),
    };
    let n = h.vertex_count();
    let mut map = vec![usize::MAX; n];
    for c in colors {
        if pick(g, h, c, mode, 0, &mut map) {
            return Some(Embedding {
                map: map.clone(),
                color: c,
            });
        }
    }
    None
}

fn pick(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    t: Vertex,
    map: &mut Vec<Vertex>,
) -> bool {
    if t == h.vertex_count() {
        return check_map(g, h, c, mode, map);
    }
    for w in 0..g.vertex_count() {
        if map[..t].contains(&w) {
            continue;
        }
        map[t] = w;
        if pick(g, h, c, mode, t + 1, map) {
            return true;
        }
    }
    map[t] = usize::MAX;
    false
}

fn check_map(
    g: &ColoredGraph,
    h: &TargetGraph,
    c: Color,
    mode: InducedMode,
    map: &[Vertex],
) -> bool {
    let n = h.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            let got = g.color_of(map[i], map[j]);
            if h.has_edge(i, j) {
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
    }
    true
}

/// Minimum vertex cover by subset enumeration. Panics above 20 vertices.
pub fn vertex_cover_exhaustive(h: &TargetGraph) -> usize {
    let n = h.vertex_count();
    assert!(n <= 20, "subset enumeration is for toy instances only");
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let covered = h
            .edges()
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0);
        if covered {
            best = size;
        }
    }
    best
}

/// Bipartition weight by enumerating all 2-labelings with vertex 0 fixed.
/// Returns `None` when the graph has no proper 2-coloring or is not a tree.
pub fn beck_beta_exhaustive(h: &TargetGraph) -> Option<u64> {
    let n = h.vertex_count();
    assert!(n <= 20, "labeling enumeration is for toy instances only");
    if h.edge_count() + 1 != n {
        return None;
    }
    for mask in 0u32..(1 << (n - 1)) {
        let side = |v: usize| v > 0 && mask & (1 << (v - 1)) != 0;
        if h.edges().iter().all(|&(u, v)| side(u) != side(v)) {
            let mut count = [0u64; 2];
            let mut max_deg = [0u64; 2];
            for v in 0..n {
                let i = side(v) as usize;
                count[i] += 1;
                max_deg[i] = max_deg[i].max(h.degree(v) as u64);
            }
            return Some(count[0] * max_deg[0] + count[1] * max_deg[1]);
        }
    }
    None
}

/// Exact game value by full move-tree search: the minimum number of rounds in
/// which Builder can force a monochromatic (per `mode`) copy of `h`, using at
/// most `max_vertices` vertices and `max_rounds` rounds, against optimal
/// Painter play. `None` means Painter survives every line within the caps.
pub fn game_value_exhaustive(
    h: &TargetGraph,
    mode: InducedMode,
    max_vertices: usize,
    max_rounds: u32,
) -> Option<u32> {
    assert!(max_vertices <= 5 && max_rounds <= 6, "full tree search only");
    let g = ColoredGraph::new();
    value(&g, h, mode, max_vertices, max_rounds)
}

fn value(
    g: &ColoredGraph,
    h: &TargetGraph,
    mode: InducedMode,
    max_vertices: usize,
    rounds_left: u32,
) -> Option<u32> {
    if rounds_left == 0 {
        return None;
    }
    let n = g.vertex_count();
    let mut moves: Vec<(Vertex, Vertex)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                moves.push((u, v));
            }
        }
    }
    if n < max_vertices {
        for u in 0..n {
            moves.push((u, n));
        }
        if n + 2 <= max_vertices {
            moves.push((n, n + 1));
        }
    }
    let mut best: Option<u32> = None;
    for (u, v) in moves {
        // Painter answers with whichever color is worse for Builder.
        let mut worst: Option<u32> = Some(0);
        for c in Color::BOTH {
            let mut g2 = g.clone();
            g2.add_edge(u, v, c).unwrap();
            let this = if find_mono_copy_exhaustive(&g2, h, Some(c), mode).is_some() {
                Some(1)
            } else {
                value(&g2, h, mode, max_vertices, rounds_left - 1).map(|r| r + 1)
            };
            worst = match (worst, this) {
                (None, _) | (_, None) => None,
                (Some(a), Some(b)) => Some(a.max(b)),
            };
            if worst.is_none() {
                break;
            }
        }
        best = match (best, worst) {
            (None, w) => w,
            (b, None) => b,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        if best == Some(1) {
            break;
        }
    }
    best
}
