//! Target graph families and their expansion into concrete adjacency lists.

use super::Vertex;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A target graph Builder tries to force a monochromatic copy of.
///
/// Conventions: `Path { edges: n }` is the path with `n` edges (n+1 vertices);
/// `Cycle { vertices: n }` is the cycle on `n` vertices; `Spider { legs: k,
/// leg_len: l }` glues `k` paths of length `l` at a common center; `Centipede
/// { thorns: k, spine_len: l }` is a path with `l` edges whose every vertex
/// carries `k` pendant leaves; `Explicit` is any connected edge list.
///
/// The token form used by the CLI and by traces is `path:5`, `cycle:9`,
/// `spider:3,2`, `centipede:2,3`, and `explicit:0-1,1-2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TargetSpec {
    Path { edges: usize },
    Cycle { vertices: usize },
    Spider { legs: usize, leg_len: usize },
    Centipede { thorns: usize, spine_len: usize },
    Explicit { edges: Vec<(Vertex, Vertex)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TargetError {
    #[error("path needs at least one edge")]
    PathTooShort,
    #[error("cycle needs at least three vertices, got {0}")]
    CycleTooShort(usize),
    #[error("spider needs at least 3 legs of length at least 2, got {legs} legs of length {leg_len}")]
    SpiderTooSmall { legs: usize, leg_len: usize },
    #[error("centipede needs at least 1 thorn per spine vertex and spine length at least 1")]
    CentipedeTooSmall,
    #[error("explicit edge list is invalid: {0}")]
    ExplicitInvalid(String),
    #[error("unknown target token `{0}`")]
    BadToken(String),
}

impl TargetSpec {
    /// Expands the spec into a concrete graph, validating parameters.
    pub fn expand(&self) -> Result<TargetGraph, TargetError> {
        let edges: Vec<(Vertex, Vertex)> = match *self {
            TargetSpec::Path { edges: n } => {
                if n == 0 {
                    return Err(TargetError::PathTooShort);
                }
                (0..n).map(|i| (i, i + 1)).collect()
            }
            TargetSpec::Cycle { vertices: n } => {
                if n < 3 {
                    return Err(TargetError::CycleTooShort(n));
                }
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            TargetSpec::Spider { legs, leg_len } => {
                if legs < 3 || leg_len < 2 {
                    return Err(TargetError::SpiderTooSmall { legs, leg_len });
                }
                // Vertex 0 is the center; leg j occupies 1 + j*leg_len ..= (j+1)*leg_len.
                let mut e = Vec::new();
                for j in 0..legs {
                    let base = 1 + j * leg_len;
                    e.push((0, base));
                    for i in 0..leg_len - 1 {
                        e.push((base + i, base + i + 1));
                    }
                }
                e
            }
            TargetSpec::Centipede { thorns, spine_len } => {
                if thorns < 1 || spine_len < 1 {
                    return Err(TargetError::CentipedeTooSmall);
                }
                // Spine is 0..=spine_len; leaves of spine vertex i follow.
                let mut e = Vec::new();
                for i in 0..spine_len {
                    e.push((i, i + 1));
                }
                for i in 0..=spine_len {
                    let base = spine_len + 1 + i * thorns;
                    for t in 0..thorns {
                        e.push((i, base + t));
                    }
                }
                e
            }
            TargetSpec::Explicit { ref edges } => {
                validate_explicit(edges)?;
                edges.clone()
            }
        };
        Ok(TargetGraph::from_edges(self.clone(), edges))
    }
}

fn validate_explicit(edges: &[(Vertex, Vertex)]) -> Result<(), TargetError> {
    use TargetError::ExplicitInvalid;
    if edges.is_empty() {
        return Err(ExplicitInvalid("no edges".into()));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in edges {
        if u == v {
            return Err(ExplicitInvalid(format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ExplicitInvalid(format!("duplicate edge {u}-{v}")));
        }
    }
    // Vertex ids must be dense and the graph connected.
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if let Some(lonely) = adj.iter().position(Vec::is_empty) {
        return Err(ExplicitInvalid(format!("vertex {lonely} has no edges")));
    }
    let mut reach = vec![false; n];
    let mut stack = vec![0];
    reach[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !reach[w] {
                reach[w] = true;
                stack.push(w);
            }
        }
    }
    if reach.iter().any(|r| !r) {
        return Err(ExplicitInvalid("graph is disconnected".into()));
    }
    Ok(())
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetSpec::Path { edges } => write!(f, "path:{edges}"),
            TargetSpec::Cycle { vertices } => write!(f, "cycle:{vertices}"),
            TargetSpec::Spider { legs, leg_len } => write!(f, "spider:{legs},{leg_len}"),
            TargetSpec::Centipede { thorns, spine_len } => {
                write!(f, "centipede:{thorns},{spine_len}")
            }
            TargetSpec::Explicit { edges } => {
                write!(f, "explicit:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for TargetSpec {
    type Err = TargetError;

    fn from_str(s: &str) -> Result<Self, TargetError> {
        let bad = || TargetError::BadToken(s.to_string());
        let (family, args) = s.split_once(':').ok_or_else(bad)?;
        let one = |a: &str| a.trim().parse::<usize>().map_err(|_| bad());
        let two = |a: &str| -> Result<(usize, usize), TargetError> {
            let (x, y) = a.split_once(',').ok_or_else(bad)?;
            Ok((one(x)?, one(y)?))
        };
        let spec = match family {
            "path" => TargetSpec::Path { edges: one(args)? },
            "cycle" => TargetSpec::Cycle {
                vertices: one(args)?,
            },
            "spider" => {
                let (legs, leg_len) = two(args)?;
                TargetSpec::Spider { legs, leg_len }
            }
            "centipede" => {
                let (thorns, spine_len) = two(args)?;
                TargetSpec::Centipede { thorns, spine_len }
            }
            "explicit" => {
                let mut edges = Vec::new();
                for part in args.split(',') {
                    let (u, v) = part.split_once('-').ok_or_else(bad)?;
                    edges.push((one(u)?, one(v)?));
                }
                TargetSpec::Explicit { edges }
            }
            _ => return Err(bad()),
        };
        // Surface parameter errors at parse time too.
        spec.expand()?;
        Ok(spec)
    }
}

impl Serialize for TargetSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TargetSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A [`TargetSpec`] expanded into adjacency lists, plus search orders used by
/// the copy detector.
#[derive(Debug, Clone)]
pub struct TargetGraph {
    spec: TargetSpec,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    // orders[e] lists all target vertices, starting with the endpoints of
    // edges[e], such that every later vertex is adjacent to an earlier one.
    orders: Vec<Vec<Vertex>>,
    // twins[v] lists the other vertices interchangeable with v (see
    // `interchangeable_classes`). The detector may insist their images appear
    // in ascending order — without this, backtracking through the k!
    // identical assignments of a star's leaves or a spider's legs makes
    // branch-heavy targets exponentially slow.
    twins: Vec<Vec<Vertex>>,
}

/// Groups target vertices the detector may freely exchange.
///
/// For tree targets, two neighbors of a common vertex whose branches are
/// isomorphic as rooted trees head one class: swapping the whole branches is
/// an automorphism, so any copy can be relabeled until every class's images
/// ascend. This covers a star's leaves, a spider's legs, and the mirror
/// halves around a path's midpoint. No vertex lands in two classes — its
/// branch away from one parent would have to fit inside the complement of
/// its branch away from the other, and the two demands contradict on size.
///
/// Targets with cycles keep the simpler rule: vertices with identical
/// neighborhoods, where the plain transposition is an automorphism.
fn interchangeable_classes(adj: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    let n = adj.len();
    let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    if edge_count + 1 != n {
        for v in 0..n {
            classes[v] = (0..n).filter(|&w| w != v && adj[w] == adj[v]).collect();
        }
        return classes;
    }

    // Canonical code for the branch that starts at `v` seen from its
    // neighbor `p`: intern the sorted child codes, so equal ids mean
    // isomorphic rooted branches.
    fn code(
        p: Vertex,
        v: Vertex,
        adj: &[Vec<Vertex>],
        interner: &mut HashMap<Vec<usize>, usize>,
        memo: &mut HashMap<(Vertex, Vertex), usize>,
    ) -> usize {
        if let Some(&c) = memo.get(&(p, v)) {
            return c;
        }
        let mut child_codes: Vec<usize> = adj[v]
            .iter()
            .filter(|&&w| w != p)
            .map(|&w| code(v, w, adj, interner, memo))
            .collect();
        child_codes.sort_unstable();
        let next = interner.len();
        let c = *interner.entry(child_codes).or_insert(next);
        memo.insert((p, v), c);
        c
    }

    let mut interner = HashMap::new();
    let mut memo = HashMap::new();
    for p in 0..n {
        let mut by_code: HashMap<usize, Vec<Vertex>> = HashMap::new();
        for &v in &adj[p] {
            by_code
                .entry(code(p, v, adj, &mut interner, &mut memo))
                .or_default()
                .push(v);
        }
        for group in by_code.into_values() {
            if group.len() > 1 {
                for &v in &group {
                    debug_assert!(classes[v].is_empty(), "tree twin classes overlap");
                    classes[v] = group.iter().copied().filter(|&w| w != v).collect();
                }
            }
        }
    }
    classes
}

impl TargetGraph {
    fn from_edges(spec: TargetSpec, edges: Vec<(Vertex, Vertex)>) -> Self {
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let twins = interchangeable_classes(&adj);
        let orders = edges
            .iter()
            .map(|&(u, v)| {
                let mut order = vec![u, v];
                let mut seen = vec![false; n];
                seen[u] = true;
                seen[v] = true;
                let mut i = 0;
                while i < order.len() {
                    for &w in &adj[order[i]] {
                        if !seen[w] {
                            seen[w] = true;
                            order.push(w);
                        }
                    }
                    i += 1;
                }
                debug_assert_eq!(order.len(), n, "target must be connected");
                order
            })
            .collect();
        TargetGraph {
            spec,
            adj,
            edges,
            orders,
            twins,
        }
    }

    pub fn spec(&self) -> &TargetSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    /// `true` when the target is a tree (connected with n-1 edges).
    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    pub(crate) fn search_order(&self, edge_index: usize) -> &[Vertex] {
        &self.orders[edge_index]
    }

    /// Vertices interchangeable with `v`: swapping them (with their whole
    /// branches, for tree targets) maps copies to copies, so a search may
    /// demand ascending images across each class without missing anything.
    pub(crate) fn twins(&self, v: Vertex) -> &[Vertex] {
        &self.twins[v]
    }
}
