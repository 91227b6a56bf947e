//! Kempe chains: components of the subgraph spanned by two color classes.

use std::sync::Arc;

use crate::coloring::{Color, ColoringError, EdgeColoring};
use crate::graph::{Edge, EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainShape {
    Path,
    Cycle,
}

/// One `(α, β)`-chain of a coloring snapshot.
///
/// For a path, `vertices` runs from the smaller-labeled endvertex to the
/// other and `edges[i]` joins `vertices[i]` and `vertices[i + 1]`. For a
/// cycle, `vertices` starts at its smallest label and `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    alpha: Color,
    beta: Color,
    shape: ChainShape,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
    stamp: u64,
}

impl KempeChain {
    pub fn colors(&self) -> (Color, Color) {
        (self.alpha, self.beta)
    }

    pub fn shape(&self) -> ChainShape {
        self.shape
    }

    pub fn is_path(&self) -> bool {
        self.shape == ChainShape::Path
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edges.contains(&id)
    }

    /// Endvertices of a path chain (equal for a trivial chain).
    pub fn endvertices(&self) -> Option<(Vertex, Vertex)> {
        match self.shape {
            ChainShape::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainShape::Cycle => None,
        }
    }

    /// Checks alternation and the path/even-cycle shape against `c`.
    pub fn is_well_formed(&self, c: &EdgeColoring) -> bool {
        let g = c.host();
        let n = self.vertices.len();
        let expected_edges = match self.shape {
            ChainShape::Path => n - 1,
            ChainShape::Cycle => n,
        };
        if self.edges.len() != expected_edges {
            return false;
        }
        if self.shape == ChainShape::Cycle && (n < 4 || n % 2 == 1) {
            return false;
        }
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return false;
        }
        for (i, &id) in self.edges.iter().enumerate() {
            let e = g.edge(id);
            if e != Edge::new(self.vertices[i], self.vertices[(i + 1) % n]) {
                return false;
            }
            let col = c.color(id);
            if col != Some(self.alpha) && col != Some(self.beta) {
                return false;
            }
            if i > 0 && c.color(self.edges[i - 1]) == col {
                return false;
            }
        }
        // Maximality: path endvertices have no further α/β edge off the chain.
        if let Some((a, b)) = self.endvertices() {
            for v in [a, b] {
                let incident = [self.alpha, self.beta]
                    .into_iter()
                    .filter_map(|col| c.neighbor_by_color(v, col))
                    .filter(|(_, id)| !self.edges.contains(id))
                    .count();
                if incident > 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Walks from `start` along edges colored alternately `first`, `other`, ...
/// Returns visited vertices (excluding `start`), edges, and whether the walk
/// came back to `start`.
fn walk(
    c: &EdgeColoring,
    start: Vertex,
    first: Color,
    other: Color,
) -> (Vec<Vertex>, Vec<EdgeId>, bool) {
    let (mut verts, mut edges) = (Vec::new(), Vec::new());
    let (mut at, mut col) = (start, first);
    while let Some((next, id)) = c.neighbor_by_color(at, col) {
        edges.push(id);
        if next == start {
            return (verts, edges, true);
        }
        verts.push(next);
        at = next;
        col = if col == first { other } else { first };
    }
    (verts, edges, false)
}

impl EdgeColoring {
    fn check_pair(&self, alpha: Color, beta: Color) -> Result<(), ColoringError> {
        for c in [alpha, beta] {
            if c == 0 || c > self.palette() {
                return Err(ColoringError::ColorOutOfRange {
                    color: c,
                    palette: self.palette(),
                });
            }
        }
        if alpha == beta {
            return Err(ColoringError::SameColor(alpha));
        }
        Ok(())
    }

    /// `P_v(α, β)`: the chain through `v`.
    pub fn kempe_chain(
        &self,
        alpha: Color,
        beta: Color,
        v: Vertex,
    ) -> Result<KempeChain, ColoringError> {
        self.check_pair(alpha, beta)?;
        let (fwd_v, fwd_e, closed) = walk(self, v, alpha, beta);
        let (shape, mut vertices, mut edges) = if closed {
            let mut vs = vec![v];
            vs.extend(fwd_v);
            (ChainShape::Cycle, vs, fwd_e)
        } else {
            let (back_v, back_e, _) = walk(self, v, beta, alpha);
            let mut vs: Vec<Vertex> = back_v.into_iter().rev().collect();
            vs.push(v);
            vs.extend(fwd_v);
            let mut es: Vec<EdgeId> = back_e.into_iter().rev().collect();
            es.extend(fwd_e);
            (ChainShape::Path, vs, es)
        };
        match shape {
            ChainShape::Path => {
                if vertices.last() < vertices.first() {
                    vertices.reverse();
                    edges.reverse();
                }
            }
            ChainShape::Cycle => {
                let n = vertices.len();
                let lo = (0..n).min_by_key(|&i| vertices[i]).unwrap();
                vertices.rotate_left(lo);
                edges.rotate_left(lo);
                // Start along the α edge out of the smallest vertex.
                if self.color(edges[0]) != Some(alpha) {
                    vertices[1..].reverse();
                    edges.reverse();
                }
            }
        }
        Ok(KempeChain {
            alpha,
            beta,
            shape,
            vertices,
            edges,
            stamp: self.stamp(),
        })
    }

    fn check_fresh(&self, chain: &KempeChain) -> Result<(), ColoringError> {
        if chain.stamp != self.stamp() {
            Err(ColoringError::StaleChain)
        } else {
            Ok(())
        }
    }

    /// Kempe change: exchanges α and β on every edge of the chain.
    pub fn kempe_swap(&self, chain: &KempeChain) -> Result<EdgeColoring, ColoringError> {
        self.check_fresh(chain)?;
        let mut next = self.clone();
        next.swap_on_edges_mut(&chain.edges, chain.alpha, chain.beta);
        Ok(next.restamp())
    }

    /// Exchanges α and β on the segment of a path chain between `a` and `b`.
    /// The result is proper only when the segment is empty or spans the
    /// whole chain; otherwise it comes back quarantined as
    /// [`MaybeProper::Improper`].
    pub fn kempe_swap_subchain(
        &self,
        chain: &KempeChain,
        a: Vertex,
        b: Vertex,
    ) -> Result<MaybeProper, ColoringError> {
        self.check_fresh(chain)?;
        if chain.shape == ChainShape::Cycle {
            return Err(ColoringError::CycleChain);
        }
        let pos = |v: Vertex| {
            chain
                .vertices
                .iter()
                .position(|&w| w == v)
                .ok_or(ColoringError::NotOnChain(v))
        };
        let (pa, pb) = (pos(a)?, pos(b)?);
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        let segment = &chain.edges[lo..hi];
        let mut colors = self.raw_colors().to_vec();
        for &id in segment {
            colors[id] = if colors[id] == chain.alpha {
                chain.beta
            } else {
                chain.alpha
            };
        }
        Ok(MaybeProper::classify(
            self.host_arc().clone(),
            self.palette(),
            colors,
            &[a, b],
        ))
    }

    /// True iff the `(α, β)`-chain through `u` is a path with endvertices
    /// exactly `u` and `v`.
    pub fn linked(
        &self,
        alpha: Color,
        beta: Color,
        u: Vertex,
        v: Vertex,
    ) -> Result<bool, ColoringError> {
        let chain = self.kempe_chain(alpha, beta, u)?;
        Ok(u != v
            && chain
                .endvertices()
                .is_some_and(|(x, y)| (x, y) == (u, v) || (x, y) == (v, u)))
    }
}

/// Result of an operation that may leave an improper coloring behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaybeProper {
    Proper(EdgeColoring),
    Improper(ImproperColoring),
}

impl MaybeProper {
    /// Checks properness at `hint` vertices first; falls back to a full scan
    /// only if those are clean, so the tag is always exact.
    fn classify(host: Arc<Graph>, palette: u8, colors: Vec<Color>, hint: &[Vertex]) -> Self {
        let raw = ImproperColoring {
            host,
            palette,
            colors,
        };
        if hint.iter().any(|&v| raw.clashes_at(v).is_some()) || !raw.conflicts().is_empty() {
            return MaybeProper::Improper(raw);
        }
        let opt: Vec<Option<Color>> = raw.colors.iter().map(|&c| (c != 0).then_some(c)).collect();
        let c = EdgeColoring::from_colors(raw.host, palette as usize, &opt)
            .expect("conflict-free assignment is proper");
        MaybeProper::Proper(c)
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, MaybeProper::Proper(_))
    }

    pub fn proper(self) -> Option<EdgeColoring> {
        match self {
            MaybeProper::Proper(c) => Some(c),
            MaybeProper::Improper(_) => None,
        }
    }
}

/// An edge assignment that may have clashes. Read-only apart from the
/// repair operations, which re-tag the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImproperColoring {
    host: Arc<Graph>,
    palette: u8,
    colors: Vec<Color>,
}

impl ImproperColoring {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn color(&self, id: EdgeId) -> Option<Color> {
        match self.colors[id] {
            0 => None,
            c => Some(c),
        }
    }

    fn clashes_at(&self, v: Vertex) -> Option<Color> {
        let mut seen = 0u64;
        for (_, id) in self.host.incident(v) {
            let c = self.colors[id];
            if c == 0 {
                continue;
            }
            if seen >> c & 1 == 1 {
                return Some(c);
            }
            seen |= 1 << c;
        }
        None
    }

    /// Vertices carrying two edges of the same color, with that color.
    pub fn conflicts(&self) -> Vec<(Vertex, Color)> {
        (0..self.host.order())
            .filter_map(|v| self.clashes_at(v).map(|c| (v, c)))
            .collect()
    }

    /// Sets the color of a colored edge without any properness precondition.
    pub fn recolor_edge(&self, e: Edge, to: Color) -> Result<MaybeProper, ColoringError> {
        let id = self
            .host
            .edge_id(e.lo(), e.hi())
            .ok_or(ColoringError::NotAnEdge(e.lo(), e.hi()))?;
        if to == 0 || to > self.palette {
            return Err(ColoringError::ColorOutOfRange {
                color: to,
                palette: self.palette,
            });
        }
        if self.colors[id] == 0 {
            return Err(ColoringError::Unassigned(e));
        }
        let mut colors = self.colors.clone();
        colors[id] = to;
        Ok(MaybeProper::classify(
            self.host.clone(),
            self.palette,
            colors,
            &[e.lo(), e.hi()],
        ))
    }

    pub fn uncolor(&self, e: Edge) -> Result<MaybeProper, ColoringError> {
        let id = self
            .host
            .edge_id(e.lo(), e.hi())
            .ok_or(ColoringError::NotAnEdge(e.lo(), e.hi()))?;
        let mut colors = self.colors.clone();
        colors[id] = 0;
        Ok(MaybeProper::classify(
            self.host.clone(),
            self.palette,
            colors,
            &[],
        ))
    }
}
