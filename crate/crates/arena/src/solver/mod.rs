//! Exhaustive game-tree search for exact values of small games.
//!
//! The solver answers "how many rounds does the builder need against perfect
//! play?" by minimaxing over every move and color reply. Positions are keyed
//! by a canonical form so that isomorphic boards share one table entry; that,
//! plus a hard cap on board vertices, is what keeps tiny instances tractable.
//! Anything beyond the caps comes back as [`GameValue::Unknown`] rather than
//! a guess.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{
    find_mono_copy, find_mono_copy_through, Color, ColoredGraph, InducedMode, TargetError,
    TargetGraph, TargetSpec, Vertex,
};

/// Largest board the canonical encoding supports: 55 vertex pairs at two bits
/// each still fit one `u128`.
pub const MAX_SOLVER_VERTICES: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error("solver boards are capped at {cap} vertices, asked for {requested}")]
    TooManyVertices { requested: usize, cap: usize },
}

/// Isomorphism-invariant fingerprint of a colored board.
///
/// Two boards get the same key exactly when some vertex relabeling turns one
/// into the other, colors included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: u8,
    bits: u128,
}

/// Canonical key of a board with at most [`MAX_SOLVER_VERTICES`] vertices.
pub fn canonical_key(g: &ColoredGraph) -> Result<CanonKey, SolveError> {
    let n = g.vertex_count();
    if n > MAX_SOLVER_VERTICES {
        return Err(SolveError::TooManyVertices {
            requested: n,
            cap: MAX_SOLVER_VERTICES,
        });
    }
    Ok(CanonKey {
        n: n as u8,
        bits: encode_min(g, n),
    })
}

/// Partitions vertices into classes that any isomorphism must preserve, by
/// iterating "how many neighbors of each class and color do I have?" until
/// the partition stops splitting. Class ids are ranks of the sorted
/// signatures, so they are themselves relabeling-invariant.
fn refine(g: &ColoredGraph, n: usize) -> Vec<usize> {
    let mut class = vec![0usize; n];
    let mut classes = 1usize;
    loop {
        let sig: Vec<(usize, Vec<(usize, Color)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, Color)> =
                    g.neighbors(v).map(|(w, c)| (class[w], c)).collect();
                nb.sort_unstable();
                (class[v], nb)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
        let mut next_class = vec![0usize; n];
        let mut next = 0usize;
        for i in 0..n {
            if i > 0 && sig[order[i]] != sig[order[i - 1]] {
                next += 1;
            }
            next_class[order[i]] = next;
        }
        if next + 1 == classes {
            return next_class;
        }
        classes = next + 1;
        class = next_class;
    }
}

fn pair_code(g: &ColoredGraph, u: Vertex, v: Vertex) -> u128 {
    match g.color_of(u, v) {
        None => 0,
        Some(Color::Red) => 1,
        Some(Color::Blue) => 2,
    }
}

/// Minimum edge encoding over all labelings that respect the refined vertex
/// classes. Earlier vertex pairs occupy more significant bits, so a partial
/// labeling's encoding can only grow as it is completed — which makes
/// "already worse than the best" an exact pruning rule.
fn encode_min(g: &ColoredGraph, n: usize) -> u128 {
    if n < 2 {
        return 0;
    }
    let class = refine(g, n);
    let mut slot_class = class.clone();
    slot_class.sort_unstable();
    let npairs = n * (n - 1) / 2;

    struct Dfs<'a> {
        g: &'a ColoredGraph,
        class: &'a [usize],
        slot_class: &'a [usize],
        n: usize,
        npairs: usize,
        perm: Vec<Vertex>,
        used: Vec<bool>,
        best: u128,
    }

    impl Dfs<'_> {
        fn go(&mut self, slot: usize, enc: u128) {
            if slot == self.n {
                self.best = enc;
                return;
            }
            for v in 0..self.n {
                if self.used[v] || self.class[v] != self.slot_class[slot] {
                    continue;
                }
                let mut e = enc;
                for i in 0..slot {
                    let p = slot * (slot - 1) / 2 + i;
                    let shift = 2 * (self.npairs - 1 - p);
                    e |= pair_code(self.g, self.perm[i], v) << shift;
                }
                if e <= self.best {
                    self.perm[slot] = v;
                    self.used[v] = true;
                    self.go(slot + 1, e);
                    self.used[v] = false;
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        class: &class,
        slot_class: &slot_class,
        n,
        npairs,
        perm: vec![0; n],
        used: vec![false; n],
        best: u128::MAX,
    };
    dfs.go(0, 0);
    dfs.best
}

/// Value of a position for the builder.
///
/// `Win(k)`: with best play the builder forces a monochromatic copy in
/// exactly `k` further rounds. `Unknown`: not achievable within the round
/// and vertex caps the solver was given. The derived order ranks quicker
/// wins first and `Unknown` last, matching the builder's preference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GameValue {
    Win(u32),
    Unknown,
}

impl GameValue {
    fn after_one_round(self) -> GameValue {
        match self {
            GameValue::Win(k) => GameValue::Win(k + 1),
            GameValue::Unknown => GameValue::Unknown,
        }
    }

    pub fn rounds(self) -> Option<u32> {
        match self {
            GameValue::Win(k) => Some(k),
            GameValue::Unknown => None,
        }
    }
}

/// Minimax solver for one target under one induced mode.
///
/// The memo table persists across queries, so interleaving [`Solver::value`],
/// [`Solver::best_move`], and [`Solver::painter_reply`] calls during a live
/// game reuses earlier work.
pub struct Solver {
    h: TargetGraph,
    mode: InducedMode,
    max_vertices: usize,
    memo: HashMap<(CanonKey, u32), GameValue>,
    memo_cap: usize,
}

impl Solver {
    pub fn new(
        target: &TargetSpec,
        mode: InducedMode,
        max_vertices: usize,
    ) -> Result<Self, SolveError> {
        if max_vertices > MAX_SOLVER_VERTICES {
            return Err(SolveError::TooManyVertices {
                requested: max_vertices,
                cap: MAX_SOLVER_VERTICES,
            });
        }
        Ok(Solver {
            h: target.expand()?,
            mode,
            max_vertices,
            memo: HashMap::new(),
            memo_cap: 1 << 20,
        })
    }

    /// Replaces the memo capacity (entries, not bytes). Once full, new
    /// positions are still solved, just not remembered.
    pub fn with_memo_cap(mut self, cap: usize) -> Self {
        self.memo_cap = cap;
        self
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    /// Exact value of the empty board with `rounds` rounds available.
    pub fn solve(&mut self, rounds: u32) -> GameValue {
        self.value(&ColoredGraph::new(), rounds)
    }

    /// Exact value of an arbitrary position with `rounds_left` rounds to go.
    pub fn value(&mut self, g: &ColoredGraph, rounds_left: u32) -> GameValue {
        if g.vertex_count() > self.max_vertices {
            return GameValue::Unknown;
        }
        if find_mono_copy(g, &self.h, None, self.mode).is_some() {
            return GameValue::Win(0);
        }
        self.search(g, rounds_left)
    }

    /// The move minimizing the builder's remaining cost, with that cost.
    /// Falls back to the first legal move when every line is `Unknown`;
    /// `None` only when the board has no legal move left under the caps.
    pub fn best_move(
        &mut self,
        g: &ColoredGraph,
        rounds_left: u32,
    ) -> Option<((Vertex, Vertex), GameValue)> {
        if g.vertex_count() > self.max_vertices {
            return None;
        }
        let mut best: Option<((Vertex, Vertex), GameValue)> = None;
        for (u, v) in self.candidate_moves(g) {
            let cost = self.move_cost(g, (u, v), rounds_left);
            let improves = match &best {
                None => true,
                Some((_, b)) => cost < *b,
            };
            if improves {
                best = Some(((u, v), cost));
                if cost == GameValue::Win(1) {
                    break;
                }
            }
        }
        best
    }

    /// The color that costs the builder the most, preferring red on ties.
    pub fn painter_reply(
        &mut self,
        g: &ColoredGraph,
        edge: (Vertex, Vertex),
        rounds_left: u32,
    ) -> Color {
        let mut best: Option<(GameValue, Color)> = None;
        for c in Color::BOTH {
            let value = self.child_value(g, edge, c, rounds_left);
            if best.as_ref().is_none_or(|&(bv, _)| value > bv) {
                best = Some((value, c));
            }
        }
        best.expect("both colors were evaluated").1
    }

    /// Builder cost of playing `edge` now: one round plus the value of the
    /// worst color reply.
    fn move_cost(
        &mut self,
        g: &ColoredGraph,
        edge: (Vertex, Vertex),
        rounds_left: u32,
    ) -> GameValue {
        let mut worst = GameValue::Win(0);
        for c in Color::BOTH {
            worst = worst.max(self.child_value(g, edge, c, rounds_left));
            if worst == GameValue::Unknown {
                break;
            }
        }
        worst.after_one_round()
    }

    /// Value after `edge` is drawn and colored `c`, spending one round.
    fn child_value(
        &mut self,
        g: &ColoredGraph,
        edge: (Vertex, Vertex),
        c: Color,
        rounds_left: u32,
    ) -> GameValue {
        let mut child = g.clone();
        if child.add_edge(edge.0, edge.1, c).is_err() {
            return GameValue::Unknown;
        }
        if child.vertex_count() > self.max_vertices {
            return GameValue::Unknown;
        }
        if find_mono_copy_through(&child, &self.h, Some(c), self.mode, edge).is_some() {
            return GameValue::Win(0);
        }
        self.search(&child, rounds_left.saturating_sub(1))
    }

    /// Core minimax over copy-free positions within the caps.
    fn search(&mut self, g: &ColoredGraph, r: u32) -> GameValue {
        if r == 0 {
            return GameValue::Unknown;
        }
        // The builder needs a full single-color copy; if even coloring every
        // remaining round the same way cannot supply enough edges, give up
        // before expanding the subtree.
        let richest = g
            .edge_count_of(Color::Red)
            .max(g.edge_count_of(Color::Blue));
        if richest + (r as usize) < self.h.edge_count() {
            return GameValue::Unknown;
        }
        let key = (
            canonical_key(g).expect("candidate moves respect the vertex cap"),
            r,
        );
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut best = GameValue::Unknown;
        for (u, v) in self.candidate_moves(g) {
            best = best.min(self.move_cost(g, (u, v), r));
            if best == GameValue::Win(1) {
                break;
            }
        }
        if self.memo.len() < self.memo_cap {
            self.memo.insert(key, best);
        }
        best
    }

    /// Legal moves in a fixed order: absent pairs among existing vertices,
    /// then one fresh endpoint, then a fully fresh edge.
    fn candidate_moves(&self, g: &ColoredGraph) -> Vec<(Vertex, Vertex)> {
        let n = g.vertex_count();
        let mut moves = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    moves.push((u, v));
                }
            }
        }
        if n < self.max_vertices {
            for u in 0..n {
                moves.push((u, n));
            }
        }
        if n + 2 <= self.max_vertices {
            moves.push((n, n + 1));
        }
        moves
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::game_value_exhaustive;

    fn graph(edges: &[(Vertex, Vertex, Color)]) -> ColoredGraph {
        let mut g = ColoredGraph::new();
        for &(u, v, c) in edges {
            g.add_edge(u, v, c).unwrap();
        }
        g
    }

    fn path(edges: usize) -> TargetSpec {
        TargetSpec::Path { edges }
    }

    use Color::{Blue, Red};

    #[test]
    fn canonical_key_ignores_labeling() {
        // Three drawings of the same two-edge path with one red and one
        // blue edge.
        let a = graph(&[(0, 1, Red), (1, 2, Blue)]);
        let b = graph(&[(0, 1, Blue), (1, 2, Red)]);
        let c = graph(&[(0, 1, Red), (0, 2, Blue)]);
        let ka = canonical_key(&a).unwrap();
        assert_eq!(ka, canonical_key(&b).unwrap());
        assert_eq!(ka, canonical_key(&c).unwrap());
        // A same-size board with a different shape gets a different key.
        let d = graph(&[(0, 1, Red), (1, 2, Red)]);
        assert_ne!(ka, canonical_key(&d).unwrap());
        // Colors are not interchangeable: an all-blue path is a different
        // position than an all-red one.
        let e = graph(&[(0, 1, Blue), (1, 2, Blue)]);
        assert_ne!(canonical_key(&d).unwrap(), canonical_key(&e).unwrap());
    }

    #[test]
    fn canonical_key_rejects_oversized_boards() {
        let mut g = ColoredGraph::new();
        for i in 0..MAX_SOLVER_VERTICES {
            g.add_edge(i, i + 1, Red).unwrap();
        }
        assert_eq!(
            canonical_key(&g),
            Err(SolveError::TooManyVertices {
                requested: MAX_SOLVER_VERTICES + 1,
                cap: MAX_SOLVER_VERTICES
            })
        );
    }

    #[test]
    fn four_vertex_boards_fall_into_66_classes() {
        // All 3^6 red/blue/absent assignments on four labeled vertices.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut keys = std::collections::BTreeSet::new();
        let mut sparse_keys = std::collections::BTreeSet::new();
        for mask in 0..3usize.pow(6) {
            let mut g = ColoredGraph::with_vertices(4);
            let mut m = mask;
            let mut edges = 0;
            for &(u, v) in &pairs {
                match m % 3 {
                    1 => {
                        g.add_edge(u, v, Red).unwrap();
                        edges += 1;
                    }
                    2 => {
                        g.add_edge(u, v, Blue).unwrap();
                        edges += 1;
                    }
                    _ => {}
                }
                m /= 3;
            }
            let key = canonical_key(&g).unwrap();
            keys.insert(key);
            if edges <= 3 {
                sparse_keys.insert(key);
            }
        }
        // Counted by hand via Burnside's lemma over the pair action of S4:
        // (729 + 6*81 + 8*9 + 3*81 + 6*9) / 24.
        assert_eq!(keys.len(), 66);
        // Direct case analysis for at most three edges on four vertices:
        // empty (1); one edge (2); two edges sharing or not sharing a vertex
        // (3 + 3); three edges forming a triangle, star, or path (4 + 4 + 6).
        assert_eq!(sparse_keys.len(), 23);
    }

    #[test]
    fn single_edge_needs_one_round() {
        let mut s = Solver::new(&path(1), InducedMode::Off, 4).unwrap();
        assert_eq!(s.solve(4), GameValue::Win(1));
        assert_eq!(s.solve(0), GameValue::Unknown);
    }

    #[test]
    fn two_edge_path_needs_three_rounds() {
        let mut s = Solver::new(&path(2), InducedMode::Off, 6).unwrap();
        assert_eq!(s.solve(6), GameValue::Win(3));
        assert_eq!(s.solve(3), GameValue::Win(3));
        assert_eq!(s.solve(2), GameValue::Unknown);
        // The induced game costs the same: the three-edge star argument
        // never creates a chord.
        let mut s = Solver::new(&path(2), InducedMode::Strict, 6).unwrap();
        assert_eq!(s.solve(6), GameValue::Win(3));
    }

    #[test]
    fn three_edge_path_needs_five_rounds() {
        let mut s = Solver::new(&path(3), InducedMode::Off, 8).unwrap();
        assert_eq!(s.solve(7), GameValue::Win(5));
        assert_eq!(s.solve(4), GameValue::Unknown);
    }

    #[test]
    fn matches_the_exhaustive_oracle_under_equal_caps() {
        for (spec, rounds, vertices) in [
            (path(1), 3u32, 3usize),
            (path(2), 4, 4),
            (TargetSpec::Cycle { vertices: 3 }, 4, 4),
        ] {
            let h = spec.expand().unwrap();
            for mode in [InducedMode::Off, InducedMode::Strict] {
                let oracle = game_value_exhaustive(&h, mode, vertices, rounds);
                let mut solver = Solver::new(&spec, mode, vertices).unwrap();
                let got = solver.solve(rounds).rounds();
                assert_eq!(got, oracle, "{spec} mode {mode:?}");
            }
        }
    }

    #[test]
    fn triangle_is_out_of_reach_in_four_rounds() {
        let mut s = Solver::new(&TargetSpec::Cycle { vertices: 3 }, InducedMode::Off, 5).unwrap();
        assert_eq!(s.solve(4), GameValue::Unknown);
    }

    #[test]
    fn best_move_and_reply_are_deterministic_and_consistent() {
        let mut s = Solver::new(&path(2), InducedMode::Off, 6).unwrap();
        let empty = ColoredGraph::new();
        let (mv, cost) = s.best_move(&empty, 6).unwrap();
        assert_eq!(mv, (0, 1));
        assert_eq!(cost, GameValue::Win(3));

        // Play out a full game: builder asks for best moves, painter for
        // best replies; the game must end in exactly three rounds.
        let mut g = ColoredGraph::new();
        let mut rounds = 0;
        loop {
            let (mv, _) = s.best_move(&g, 6 - rounds).unwrap();
            let c = s.painter_reply(&g, mv, 6 - rounds);
            g.add_edge(mv.0, mv.1, c).unwrap();
            rounds += 1;
            let h = path(2).expand().unwrap();
            if find_mono_copy(&g, &h, None, InducedMode::Off).is_some() {
                break;
            }
            assert!(rounds < 10, "game ran away");
        }
        assert_eq!(rounds, 3);
    }

    #[test]
    fn memo_cap_zero_still_solves() {
        let mut s = Solver::new(&path(2), InducedMode::Off, 5)
            .unwrap()
            .with_memo_cap(0);
        assert_eq!(s.solve(4), GameValue::Win(3));
        assert_eq!(s.memo.len(), 0);
    }

    #[test]
    fn value_on_a_won_board_is_zero() {
        let mut s = Solver::new(&path(2), InducedMode::Off, 6).unwrap();
        let g = graph(&[(0, 1, Red), (1, 2, Red)]);
        assert_eq!(s.value(&g, 0), GameValue::Win(0));
        // One red edge plus rounds to spare: two more rounds needed (the
        // painter will not cooperate on the second edge).
        let g = graph(&[(0, 1, Red)]);
        assert_eq!(s.value(&g, 5), GameValue::Win(2));
    }
}
