//! Multi-fans and Kierstead paths, and the small-configuration scans used by
//! the lemma checkers.

use crate::coloring::{ColorSet, EdgeColoring};
use crate::graph::{Edge, EdgeId, Graph, Vertex};

use super::StructureError;

/// `F = (x, e1, y1, ..., ep, yp)` with `e_i = x y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiFan {
    center: Vertex,
    spokes: Vec<Vertex>,
}

impl MultiFan {
    /// A fan with center `x` and spoke ends `y1..yp` (in order).
    pub fn new(center: Vertex, spokes: Vec<Vertex>) -> Self {
        MultiFan { center, spokes }
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn spokes(&self) -> &[Vertex] {
        &self.spokes
    }

    pub fn len(&self) -> usize {
        self.spokes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spokes.is_empty()
    }

    pub fn base_edge(&self) -> Option<Edge> {
        self.spokes.first().map(|&y| Edge::new(self.center, y))
    }

    /// `V(F) = {x, y1, ..., yp}`, center first.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = Vec::with_capacity(self.spokes.len() + 1);
        v.push(self.center);
        v.extend(&self.spokes);
        v
    }

    /// The fan with one more spoke appended.
    pub fn extended(&self, y: Vertex) -> MultiFan {
        let mut f = self.clone();
        f.spokes.push(y);
        f
    }
}

/// `K = (y0, e1, y1, ..., ep, yp)` with `e_i = y_{i-1} y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KiersteadPath {
    vertices: Vec<Vertex>,
}

impl KiersteadPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        KiersteadPath { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges `p`.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn base_edge(&self) -> Option<Edge> {
        match self.vertices[..] {
            [y0, y1, ..] => Some(Edge::new(y0, y1)),
            _ => None,
        }
    }

    /// The prefix `(y0, e1, ..., y_len)`.
    pub fn prefix(&self, len: usize) -> KiersteadPath {
        KiersteadPath::new(self.vertices[..=len.min(self.len())].to_vec())
    }
}

fn edge_in(g: &Graph, u: Vertex, v: Vertex) -> Result<EdgeId, StructureError> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(StructureError::ForeignStructure(format!(
                "vertex {w} not in a graph of order {}",
                g.order()
            )));
        }
    }
    g.edge_id(u, v)
        .ok_or_else(|| StructureError::ForeignStructure(format!("{u}-{v} is not an edge")))
}

/// True iff `f` satisfies F1, F2 and its base edge is uncolored.
///
/// Spokes that are not edges of the host are an error, not `false`.
pub fn validate_multifan(c: &EdgeColoring, f: &MultiFan) -> Result<bool, StructureError> {
    let g = c.host();
    let ids = f
        .spokes
        .iter()
        .map(|&y| edge_in(g, f.center, y))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(&e1) = ids.first() else {
        return Ok(false);
    };
    if c.color(e1).is_some() {
        return Ok(false);
    }
    // Distinct edges at one center means distinct spoke ends.
    let mut ends = f.spokes.clone();
    ends.sort_unstable();
    ends.dedup();
    if ends.len() != f.spokes.len() {
        return Ok(false);
    }
    let mut seen = c.missing(f.spokes[0]);
    for (i, &id) in ids.iter().enumerate().skip(1) {
        match c.color(id) {
            Some(col) if seen.contains(col) => {}
            _ => return Ok(false),
        }
        seen = seen.union(c.missing(f.spokes[i]));
    }
    Ok(true)
}

/// Greedily grows a multi-fan at `x` rooted at the uncolored edge `e1`,
/// always taking the smallest-labeled neighbor that can extend it.
///
/// The vertex set of the result is the closure of every multi-fan at `x`
/// with respect to `e1`, so it contains every other such fan's vertices.
pub fn build_maximal_multifan(
    c: &EdgeColoring,
    e1: Edge,
    x: Vertex,
) -> Result<MultiFan, StructureError> {
    let g = c.host();
    let id = edge_in(g, e1.lo(), e1.hi())?;
    if !e1.contains(x) {
        return Err(StructureError::ForeignStructure(format!(
            "{x} is not an endpoint of {e1}"
        )));
    }
    if c.color(id).is_some() {
        return Err(StructureError::EdgeColoredAlready(e1));
    }
    let mut fan = MultiFan::new(x, vec![e1.other(x)]);
    let mut seen = c.missing(e1.other(x));
    loop {
        let next = g.incident(x).find(|&(w, eid)| {
            !fan.spokes.contains(&w) && c.color(eid).is_some_and(|col| seen.contains(col))
        });
        match next {
            Some((w, _)) => {
                fan.spokes.push(w);
                seen = seen.union(c.missing(w));
            }
            None => return Ok(fan),
        }
    }
}

/// True iff `k` satisfies K1, K2 and its first edge is uncolored.
pub fn validate_kierstead_path(
    c: &EdgeColoring,
    k: &KiersteadPath,
) -> Result<bool, StructureError> {
    let g = c.host();
    let vs = &k.vertices;
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(StructureError::ForeignStructure(format!(
            "vertex {v} not in a graph of order {}",
            g.order()
        )));
    }
    let ids = vs
        .windows(2)
        .map(|w| edge_in(g, w[0], w[1]))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(&e1) = ids.first() else {
        return Ok(false);
    };
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() || c.color(e1).is_some() {
        return Ok(false);
    }
    let mut seen = c.missing(vs[0]).union(c.missing(vs[1]));
    for (i, &id) in ids.iter().enumerate().skip(1) {
        match c.color(id) {
            Some(col) if seen.contains(col) => {}
            _ => return Ok(false),
        }
        seen = seen.union(c.missing(vs[i + 1]));
    }
    Ok(true)
}

/// Every Kierstead path `(y0, y1, y2, y3)` with `{y0, y1} = e1`, in either
/// orientation of `e1`, in lexicographic order of the vertex sequence.
pub fn kierstead_paths_of_length_three(c: &EdgeColoring, e1: Edge) -> Vec<KiersteadPath> {
    let g = c.host();
    let mut out = Vec::new();
    for (y0, y1) in [(e1.lo(), e1.hi()), (e1.hi(), e1.lo())] {
        let m01 = c.missing(y0).union(c.missing(y1));
        for (y2, id2) in g.incident(y1) {
            if y2 == y0 || !c.color(id2).is_some_and(|col| m01.contains(col)) {
                continue;
            }
            let m012 = m01.union(c.missing(y2));
            for (y3, id3) in g.incident(y2) {
                if y3 == y0 || y3 == y1 || !c.color(id3).is_some_and(|col| m012.contains(col)) {
                    continue;
                }
                out.push(KiersteadPath::new(vec![y0, y1, y2, y3]));
            }
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Adjacent pairs `(u, v)`, `u < v`, with `d(u) + d(v) = Δ + 2`.
pub fn full_deficiency_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let target = g.max_degree() + 2;
    g.edges()
        .iter()
        .filter(|e| g.degree(e.lo()) + g.degree(e.hi()) == target)
        .map(|e| (e.lo(), e.hi()))
        .collect()
}

/// Five distinct vertices `(a, b, u, x, y)` spanning the edges
/// `ab, bu, ux, uy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HConfiguration {
    pub a: Vertex,
    pub b: Vertex,
    pub u: Vertex,
    pub x: Vertex,
    pub y: Vertex,
}

impl HConfiguration {
    pub fn vertices(&self) -> [Vertex; 5] {
        [self.a, self.b, self.u, self.x, self.y]
    }

    /// `K = (a, b, u, x)`.
    pub fn first_path(&self) -> KiersteadPath {
        KiersteadPath::new(vec![self.a, self.b, self.u, self.x])
    }

    /// `K* = (a, b, u, y)`.
    pub fn second_path(&self) -> KiersteadPath {
        KiersteadPath::new(vec![self.a, self.b, self.u, self.y])
    }

    /// Checks distinctness and the four edges.
    pub fn validate(&self, g: &Graph) -> Result<(), StructureError> {
        let vs = self.vertices();
        let mut sorted = vs;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(StructureError::MissingHEdge(format!(
                "vertices {vs:?} are not distinct"
            )));
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
            return Err(StructureError::ForeignStructure(format!(
                "vertex {v} not in a graph of order {}",
                g.order()
            )));
        }
        for (p, q) in [
            (self.a, self.b),
            (self.b, self.u),
            (self.u, self.x),
            (self.u, self.y),
        ] {
            if !g.has_edge(p, q) {
                return Err(StructureError::MissingHEdge(format!(
                    "{p}-{q} is not an edge"
                )));
            }
        }
        Ok(())
    }
}

/// All H-configurations with `(a, b)` equal to `e` in either orientation,
/// with `x < y` to drop the `x <-> y` mirror image.
pub fn h_configurations_on(g: &Graph, e: Edge) -> Vec<HConfiguration> {
    let mut out = Vec::new();
    for (a, b) in [(e.lo(), e.hi()), (e.hi(), e.lo())] {
        for &u in g.neighbors(b) {
            if u == a {
                continue;
            }
            let tips: Vec<Vertex> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| w != a && w != b)
                .collect();
            for (i, &x) in tips.iter().enumerate() {
                for &y in &tips[i + 1..] {
                    out.push(HConfiguration { a, b, u, x, y });
                }
            }
        }
    }
    out
}

/// All H-configurations of `g`.
pub fn h_configurations(g: &Graph) -> Vec<HConfiguration> {
    let mut out: Vec<HConfiguration> = g
        .edges()
        .iter()
        .flat_map(|&e| h_configurations_on(g, e))
        .collect();
    out.sort_unstable();
    out
}

/// `|S ∩ T|` for color sets; small helper for the bound checks.
pub(crate) fn overlap(s: ColorSet, t: ColorSet) -> usize {
    s.intersection(t).len()
}
