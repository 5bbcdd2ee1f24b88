//! Builder strategy for centipede targets: a spine path with `k` pendant
//! leaves on every spine vertex.
//!
//! The main phase grows two chains of "stars" — candidate spine vertices
//! that already own `k` pendants of one color:
//!
//! * each step opens with an edge `e` from the last red-chain center to a
//!   fresh vertex `x`; a blue answer is a free blue pendant for that center.
//! * a red `e` is a spine extension offer, tested by an edge `f` from the
//!   last blue-chain center to the same `x`; a red `f` is a red pendant for
//!   the blue center.
//! * red `e` plus blue `f` puts `x` up for grabs: fresh pendant edges are
//!   fanned at `x` until one color reaches `k`, and `x` joins that chain
//!   (the matching one of `e`/`f` is its spine link). An empty chain skips
//!   its edge and counts as conceded.
//!
//! A chain reaching `l + 1` centers is a finished centipede, which the game
//! engine spots on its own. The painter can stall chains only by conceding
//! opposite-color pendants; a center that collects `k` of those is promoted:
//! it now has `k` pendants of *both* colors and retires to its side's
//! reserve. Once a reserve holds `2P - 1` centers, where `P` is the path
//! machine's worst-case vertex appetite for an `l`-edge path, a
//! two-coloring of the chain-link forest yields `P` pairwise non-adjacent
//! promoted centers, and a pool-fed [`PathMachine`] forces a monochromatic
//! spine through them — pendants of whichever color it lands are already in
//! place.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::builders::path_machine::{path_machine_vertex_bound, MachineStep, PathMachine, VertexSource};
use crate::engine::{BuilderAction, BuilderStrategy, GameView};
use crate::graph::{Color, Vertex};

/// Pendant fan in progress at a candidate center `x`.
struct Fan {
    x: Vertex,
    /// Spine link if `x` ends up joining the red (blue) chain.
    red_via: Option<Vertex>,
    blue_via: Option<Vertex>,
    reds: usize,
    blues: usize,
    /// Fresh partner of the fan edge awaiting its color.
    pending: Option<Vertex>,
}

enum CState {
    Idle,
    AwaitE {
        u: Vertex,
        x: Vertex,
    },
    AwaitF {
        v: Vertex,
        x: Vertex,
        red_via: Option<Vertex>,
    },
    Fanning(Fan),
    Final(PathMachine),
    Spent,
}

pub struct CentipedeBuilder {
    thorns: usize,
    spine_len: usize,
    /// Pool size needed by the endgame path machine.
    pool_size: usize,
    red_chain: Vec<Vertex>,
    blue_chain: Vec<Vertex>,
    /// Opposite-color pendant counts per chain center.
    opp: HashMap<Vertex, usize>,
    q_red: Vec<Vertex>,
    q_blue: Vec<Vertex>,
    /// Every spine link ever drawn, for the promotion-forest coloring.
    links: Vec<(Vertex, Vertex)>,
    state: CState,
}

impl CentipedeBuilder {
    pub fn new(thorns: usize, spine_len: usize) -> Self {
        debug_assert!(thorns >= 1 && spine_len >= 1);
        CentipedeBuilder {
            thorns,
            spine_len,
            pool_size: path_machine_vertex_bound(spine_len),
            red_chain: Vec::new(),
            blue_chain: Vec::new(),
            opp: HashMap::new(),
            q_red: Vec::new(),
            q_blue: Vec::new(),
            links: Vec::new(),
            state: CState::Idle,
        }
    }

    /// Credits `w` (the last center of `chain`) with an opposite-color
    /// pendant, promoting it once it holds `k` of them.
    fn credit_opposite(
        chain: &mut Vec<Vertex>,
        q: &mut Vec<Vertex>,
        opp: &mut HashMap<Vertex, usize>,
        thorns: usize,
        w: Vertex,
    ) -> bool {
        debug_assert_eq!(chain.last(), Some(&w));
        let d = opp.entry(w).or_insert(0);
        *d += 1;
        if *d == thorns {
            chain.pop();
            q.push(w);
            true
        } else {
            false
        }
    }

    fn maybe_finish(&mut self, promoted_red: bool) {
        let q = if promoted_red { &self.q_red } else { &self.q_blue };
        if q.len() >= 2 * self.pool_size - 1 {
            let pool = independent_subset(q, &self.links, self.pool_size);
            self.state = CState::Final(PathMachine::new(
                self.spine_len,
                VertexSource::pool(pool),
            ));
        }
    }
}

/// Picks `want` pairwise non-adjacent members by two-coloring each component
/// of the link forest and keeping the larger side.
fn independent_subset(members: &[Vertex], links: &[(Vertex, Vertex)], want: usize) -> Vec<Vertex> {
    let set: HashSet<Vertex> = members.iter().copied().collect();
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in links {
        if set.contains(&a) && set.contains(&b) {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let mut side: HashMap<Vertex, bool> = HashMap::new();
    let mut chosen = Vec::new();
    for &root in members {
        if side.contains_key(&root) {
            continue;
        }
        let mut parts: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
        let mut queue = VecDeque::from([root]);
        side.insert(root, false);
        while let Some(v) = queue.pop_front() {
            let s = side[&v];
            parts[usize::from(s)].push(v);
            for &w in adj.get(&v).into_iter().flatten() {
                if !side.contains_key(&w) {
                    side.insert(w, !s);
                    queue.push_back(w);
                }
            }
        }
        let bigger = if parts[1].len() > parts[0].len() { 1 } else { 0 };
        chosen.append(&mut parts[bigger]);
    }
    chosen.sort_unstable();
    chosen.truncate(want);
    debug_assert_eq!(chosen.len(), want);
    chosen
}

impl BuilderStrategy for CentipedeBuilder {
    fn next_move(&mut self, view: &GameView) -> BuilderAction {
        let g = view.graph;
        let k = self.thorns;
        loop {
            match std::mem::replace(&mut self.state, CState::Idle) {
                CState::Spent => {
                    self.state = CState::Spent;
                    let n = g.vertex_count();
                    return BuilderAction::draw_noted(n, n + 1, "machine-done");
                }
                CState::Final(mut machine) => match machine.next(g) {
                    MachineStep::Draw { u, v, note } => {
                        self.state = CState::Final(machine);
                        return BuilderAction::Draw {
                            u,
                            v,
                            note: Some(format!("spine {note}")),
                        };
                    }
                    MachineStep::Done { .. } => {
                        self.state = CState::Spent;
                    }
                },
                CState::Idle => {
                    let x = g.vertex_count();
                    match (self.red_chain.last(), self.blue_chain.last()) {
                        (Some(&u), _) => {
                            self.state = CState::AwaitE { u, x };
                            return BuilderAction::draw_noted(u, x, "e");
                        }
                        (None, Some(&v)) => {
                            // No red chain: e is conceded, go straight to f.
                            self.state = CState::AwaitF {
                                v,
                                x,
                                red_via: None,
                            };
                            return BuilderAction::draw_noted(v, x, "f");
                        }
                        (None, None) => {
                            self.state = CState::Fanning(Fan {
                                x,
                                red_via: None,
                                blue_via: None,
                                reds: 0,
                                blues: 0,
                                pending: None,
                            });
                        }
                    }
                }
                CState::AwaitE { u, x } => {
                    match g.color_of(u, x).expect("e was played") {
                        Color::Blue => {
                            // Blue pendant for the red center.
                            if Self::credit_opposite(
                                &mut self.red_chain,
                                &mut self.q_red,
                                &mut self.opp,
                                k,
                                u,
                            ) {
                                self.maybe_finish(true);
                            }
                        }
                        Color::Red => {
                            if let Some(&v) = self.blue_chain.last() {
                                self.state = CState::AwaitF {
                                    v,
                                    x,
                                    red_via: Some(u),
                                };
                                return BuilderAction::draw_noted(v, x, "f");
                            }
                            // No blue chain: f is conceded, fan at x.
                            self.state = CState::Fanning(Fan {
                                x,
                                red_via: Some(u),
                                blue_via: None,
                                reds: 0,
                                blues: 0,
                                pending: None,
                            });
                        }
                    }
                }
                CState::AwaitF { v, x, red_via } => {
                    match g.color_of(v, x).expect("f was played") {
                        Color::Red => {
                            // Red pendant for the blue center; x is discarded.
                            if Self::credit_opposite(
                                &mut self.blue_chain,
                                &mut self.q_blue,
                                &mut self.opp,
                                k,
                                v,
                            ) {
                                self.maybe_finish(false);
                            }
                        }
                        Color::Blue => {
                            self.state = CState::Fanning(Fan {
                                x,
                                red_via,
                                blue_via: Some(v),
                                reds: 0,
                                blues: 0,
                                pending: None,
                            });
                        }
                    }
                }
                CState::Fanning(mut fan) => {
                    if let Some(p) = fan.pending.take() {
                        match g.color_of(fan.x, p).expect("fan edge was played") {
                            Color::Red => fan.reds += 1,
                            Color::Blue => fan.blues += 1,
                        }
                    }
                    if fan.reds == k {
                        if let Some(u) = fan.red_via {
                            self.links.push((u, fan.x));
                        }
                        self.red_chain.push(fan.x);
                        self.opp.insert(fan.x, fan.blues);
                    } else if fan.blues == k {
                        if let Some(v) = fan.blue_via {
                            self.links.push((v, fan.x));
                        }
                        self.blue_chain.push(fan.x);
                        self.opp.insert(fan.x, fan.reds);
                    } else {
                        let fresh = g.vertex_count().max(fan.x + 1);
                        let i = fan.reds + fan.blues + 1;
                        let x = fan.x;
                        fan.pending = Some(fresh);
                        self.state = CState::Fanning(fan);
                        return BuilderAction::draw_noted(x, fresh, &format!("fan {i}"));
                    }
                }
            }
        }
    }
}
