//! Simple undirected graphs on vertices `0..order`, plus the vertex-splitting
//! and contraction constructions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// An unordered vertex pair, stored normalized as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(self, v: Vertex) -> Vertex {
        debug_assert!(self.contains(v));
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0}-{0} is a loop")]
    LoopEdge(Vertex),
    #[error("edge {0}-{1} given more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid partition of N({vertex}): {reason}")]
    InvalidPartition { vertex: Vertex, reason: String },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("{u} and {v} share neighbor {common}; contraction would create a parallel edge")]
    CommonNeighbor {
        u: Vertex,
        v: Vertex,
        common: Vertex,
    },
    #[error("vertex {vertex} has degree {degree}, need at least 2 to split")]
    DegreeTooSmall { vertex: Vertex, degree: usize },
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    /// `incident[v][i]` is the id of edge `{v, adj[v][i]}`.
    incident: Vec<Vec<EdgeId>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E=[", self.order())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "])")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max: usize,
    pub min: usize,
    pub regular: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates and loops are rejected.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            normalized.push(Edge::new(u, v));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(order, normalized))
    }

    /// `edges` must be sorted, normalized and free of duplicates and loops.
    fn from_sorted_edges(order: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        let mut incident = vec![Vec::new(); order];
        for v in 0..order {
            adj[v].sort_unstable();
            incident[v] = adj[v]
                .iter()
                .map(|&w| edges.binary_search(&Edge::new(v, w)).expect("edge present"))
                .collect();
        }
        Graph {
            adj,
            incident,
            edges,
        }
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order).flat_map(|u| (u + 1..order).map(move |v| Edge(u, v)));
        Self::from_sorted_edges(order, edges.collect())
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycle needs at least 3 vertices");
        Self::new(order, (0..order).map(|i| (i, (i + 1) % order))).expect("valid cycle")
    }

    pub fn path(order: usize) -> Self {
        Self::new(order, (1..order).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Neighbors of `v` paired with the connecting edge id.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, EdgeId)> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .zip(self.incident[v].iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let row = self.adj.get(u)?;
        row.binary_search(&v).ok().map(|i| self.incident[u][i])
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let max = self.max_degree();
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        Ok(DegreeProfile {
            max,
            min,
            regular: max == min,
        })
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// `|E| > Δ·⌊n/2⌋`.
    pub fn is_overfull(&self) -> bool {
        self.size() > self.max_degree() * (self.order() / 2)
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let id = self.edge_id(u, v).ok_or(GraphError::NotAnEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(id);
        Ok(Self::from_sorted_edges(self.order(), edges))
    }

    /// Splits `spec.vertex` into itself (keeping `part_a`) and a new vertex
    /// labeled `order` (taking `part_b`), joined by a new edge.
    pub fn split_vertex(&self, spec: &SplitSpec) -> Result<Graph, GraphError> {
        spec.validate(self)?;
        let v = spec.vertex;
        let w = self.order();
        let mut edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter(|e| !(e.contains(v) && spec.part_b.contains(&e.other(v))))
            .map(|e| e.endpoints())
            .collect();
        edges.extend(spec.part_b.iter().map(|&x| (x, w)));
        edges.push((v, w));
        Graph::new(w + 1, edges)
    }

    /// Merges the adjacent vertices `u` and `v` into one. The merged vertex
    /// takes label `min(u, v)`; labels above `max(u, v)` shift down by one.
    pub fn contract_pair(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        if let Some(&common) = self.adj[u]
            .iter()
            .find(|x| self.adj[v].binary_search(x).is_ok())
        {
            return Err(GraphError::CommonNeighbor { u, v, common });
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: Vertex| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .filter(|e| **e != Edge::new(u, v))
            .map(|e| (relabel(e.0), relabel(e.1)));
        Graph::new(self.order() - 1, edges)
    }

    /// All unordered partitions of `N(v)` into two nonempty parts, in
    /// canonical orientation (the smallest neighbor lies in `part_a`).
    pub fn enumerate_splittings(&self, v: Vertex) -> Result<Vec<SplitSpec>, GraphError> {
        let nbrs = &self.adj[v];
        let d = nbrs.len();
        if d < 2 {
            return Err(GraphError::DegreeTooSmall {
                vertex: v,
                degree: d,
            });
        }
        // Bit i of `mask` puts nbrs[i + 1] in part B; nbrs[0] always stays in A.
        let specs = (1u64..(1u64 << (d - 1)))
            .map(|mask| {
                let (mut a, mut b) = (vec![nbrs[0]], Vec::new());
                for (i, &x) in nbrs[1..].iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        b.push(x);
                    } else {
                        a.push(x);
                    }
                }
                SplitSpec {
                    vertex: v,
                    part_a: a,
                    part_b: b,
                }
            })
            .collect();
        Ok(specs)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let edges = self.edges.iter().map(|e| (perm[e.0], perm[e.1]));
        Graph::new(self.order(), edges).expect("permutation preserves simplicity")
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(n, edges).expect("complement is simple")
    }
}

/// A partition of `N(vertex)` into two nonempty sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitSpec {
    pub vertex: Vertex,
    pub part_a: Vec<Vertex>,
    pub part_b: Vec<Vertex>,
}

impl SplitSpec {
    /// Builds a spec from side A; side B is the rest of `N(vertex)`.
    /// Sides are swapped if needed to reach canonical orientation.
    pub fn from_part_a(g: &Graph, vertex: Vertex, part_a: &[Vertex]) -> Result<Self, GraphError> {
        if vertex >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: g.order(),
            });
        }
        let mut a = part_a.to_vec();
        a.sort_unstable();
        a.dedup();
        let b: Vec<Vertex> = g
            .neighbors(vertex)
            .iter()
            .copied()
            .filter(|x| a.binary_search(x).is_err())
            .collect();
        let spec = SplitSpec {
            vertex,
            part_a: a,
            part_b: b,
        }
        .canonical();
        spec.validate(g)?;
        Ok(spec)
    }

    pub fn canonical(mut self) -> Self {
        self.part_a.sort_unstable();
        self.part_b.sort_unstable();
        if let (Some(a), Some(b)) = (self.part_a.first(), self.part_b.first()) {
            if b < a {
                std::mem::swap(&mut self.part_a, &mut self.part_b);
            }
        }
        self
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let invalid = |reason: &str| GraphError::InvalidPartition {
            vertex: self.vertex,
            reason: reason.to_string(),
        };
        if self.vertex >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: self.vertex,
                order: g.order(),
            });
        }
        if self.part_a.is_empty() || self.part_b.is_empty() {
            return Err(invalid("empty side"));
        }
        let mut all: Vec<Vertex> = self.part_a.iter().chain(&self.part_b).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("sides overlap"));
        }
        if all != g.neighbors(self.vertex) {
            return Err(invalid("sides do not cover exactly the neighborhood"));
        }
        Ok(())
    }
}

impl fmt::Display for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Vertex]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{}:{{{}}}|{{{}}}",
            self.vertex,
            join(&self.part_a),
            join(&self.part_b)
        )
    }
}
