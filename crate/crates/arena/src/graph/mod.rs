//! Colored simple graphs, target families, copy detection, and bounds.

mod bounds;
mod detect;
mod target;

pub use bounds::{
    beck_beta, lower_bound_online, strategy_round_bound, vertex_cover_number, BoundError,
};
pub use detect::{
    find_mono_copy, find_mono_copy_through, verify_embedding, Embedding, EmbeddingError,
    InducedMode,
};
pub use target::{TargetError, TargetGraph, TargetSpec};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Vertex id. Vertices are dense: a graph with `n` vertices uses ids `0..n`.
pub type Vertex = usize;

/// Edge color chosen by Painter. Serialized as `"R"` / `"B"` in traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    /// The other color.
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// One-letter code used in traces, CSV output, and painter scripts.
    pub fn code(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_code(c: char) -> Option<Color> {
        match c.to_ascii_uppercase() {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }

    /// Both colors, in a fixed order (red first).
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Ways an edge insertion can be rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{0}, {1}}} already present")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {id} skips ahead; next unused id is {next}")]
    VertexOutOfRange { id: Vertex, next: Vertex },
}

/// A simple graph whose every edge carries a [`Color`].
///
/// The vertex set grows implicitly: an endpoint may be an existing id, the
/// next unused id, or (together with the next id) a fresh isolated pair.
/// Games only ever add edges, so there is no removal API.
#[derive(Debug, Clone, Default)]
pub struct ColoredGraph {
    adj: Vec<Vec<(Vertex, Color)>>,
    // Keyed by (min, max); ordered so edge iteration is deterministic.
    edges: BTreeMap<(Vertex, Vertex), Color>,
    red_count: usize,
}

impl ColoredGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with `n` pre-allocated isolated vertices. Games never need this
    /// (their vertices appear with their first edge), but fixed-size boards
    /// are convenient when enumerating positions.
    pub fn with_vertices(n: usize) -> Self {
        ColoredGraph {
            adj: vec![Vec::new(); n],
            ..Self::default()
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges of one color.
    pub fn edge_count_of(&self, c: Color) -> usize {
        match c {
            Color::Red => self.red_count,
            Color::Blue => self.edges.len() - self.red_count,
        }
    }

    /// Checks whether `{u, v}` could be inserted right now without
    /// inserting it. See [`ColoredGraph::add_edge`] for the rules.
    pub fn check_edge(&self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let n = self.adj.len();
        if hi >= n {
            let fresh_ok = hi == n || (hi == n + 1 && lo == n);
            if !fresh_ok {
                return Err(GraphError::VertexOutOfRange { id: hi, next: n });
            }
        }
        if self.edges.contains_key(&(lo, hi)) {
            return Err(GraphError::DuplicateEdge(lo, hi));
        }
        Ok(())
    }

    /// Inserts the edge `{u, v}` with color `c`.
    ///
    /// Endpoints may reference existing vertices, the next unused id
    /// (`vertex_count()`), or the next two ids for an edge between two fresh
    /// vertices. Anything further ahead is rejected, as are self-loops and
    /// duplicates.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GraphError> {
        self.check_edge(u, v)?;
        let (lo, hi) = (u.min(v), u.max(v));
        while self.adj.len() <= hi {
            self.adj.push(Vec::new());
        }
        self.edges.insert((lo, hi), c);
        if c == Color::Red {
            self.red_count += 1;
        }
        self.adj[u].push((v, c));
        self.adj[v].push((u, c));
        Ok(())
    }

    /// Color of the edge `{u, v}`, if present.
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.color_of(u, v).is_some()
    }

    /// Neighbors of `v` with the connecting edge's color, in insertion order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.adj.get(v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(v).map_or(0, Vec::len)
    }

    /// Number of `c`-colored edges at `v`.
    pub fn mono_degree(&self, v: Vertex, c: Color) -> usize {
        self.neighbors(v).filter(|&(_, ec)| ec == c).count()
    }

    /// All edges as `(min_endpoint, max_endpoint, color)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }
}
