//! Partial proper edge colorings with per-vertex present/missing indexes.
//!
//! Colors are `1..=k`. Every mutating operation returns a new value carrying
//! a fresh stamp, so a [`KempeChain`](crate::kempe::KempeChain) computed from
//! one snapshot cannot be applied to another.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Edge, EdgeId, Graph, Vertex};

pub type Color = u8;

/// Largest supported palette.
pub const MAX_PALETTE: u8 = 63;

/// A set of colors from `1..=63`, one bit per color.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: u8) -> Self {
        debug_assert!(k <= MAX_PALETTE);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1 << c)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as Color;
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    ZeroPalette,
    #[error("palette size {0} exceeds the supported maximum of 63")]
    PaletteTooLarge(usize),
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge {0} is already colored")]
    AlreadyAssigned(Edge),
    #[error("edge {0} is not colored")]
    Unassigned(Edge),
    #[error("color {color} is already present at vertex {vertex} (edge {edge})")]
    ColorClash {
        edge: Edge,
        color: Color,
        vertex: Vertex,
    },
    #[error("color {color} outside palette 1..={palette}")]
    ColorOutOfRange { color: Color, palette: u8 },
    #[error("chain colors must differ, got {0} twice")]
    SameColor(Color),
    #[error("chain was computed from a different coloring snapshot")]
    StaleChain,
    #[error("vertex {0} is not on the chain")]
    NotOnChain(Vertex),
    #[error("subchain swaps need a path chain, this one is a cycle")]
    CycleChain,
    #[error("coloring text line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

static NEXT_STAMP: AtomicU64 = AtomicU64::new(1);

fn fresh_stamp() -> u64 {
    NEXT_STAMP.fetch_add(1, Ordering::Relaxed)
}

/// A proper partial edge coloring of a host graph with palette `1..=k`.
#[derive(Clone)]
pub struct EdgeColoring {
    host: Arc<Graph>,
    palette: u8,
    /// Color per edge id; 0 means uncolored.
    colors: Vec<Color>,
    present: Vec<ColorSet>,
    stamp: u64,
}

impl PartialEq for EdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.palette == other.palette && self.colors == other.colors && self.host == other.host
    }
}

impl Eq for EdgeColoring {}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(k={}; ", self.palette)?;
        for (id, e) in self.host.edges().iter().enumerate() {
            match self.colors[id] {
                0 => write!(f, "{e}:- ")?,
                c => write!(f, "{e}:{c} ")?,
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn check_palette(k: usize) -> Result<u8, ColoringError> {
    match k {
        0 => Err(ColoringError::ZeroPalette),
        k if k > MAX_PALETTE as usize => Err(ColoringError::PaletteTooLarge(k)),
        k => Ok(k as u8),
    }
}

impl EdgeColoring {
    pub fn empty(host: impl Into<Arc<Graph>>, k: usize) -> Result<Self, ColoringError> {
        let host = host.into();
        let palette = check_palette(k)?;
        Ok(EdgeColoring {
            colors: vec![0; host.size()],
            present: vec![ColorSet::EMPTY; host.order()],
            host,
            palette,
            stamp: fresh_stamp(),
        })
    }

    /// Builds a coloring from per-edge colors (indexed by edge id), checking
    /// properness.
    pub fn from_colors(
        host: impl Into<Arc<Graph>>,
        k: usize,
        colors: &[Option<Color>],
    ) -> Result<Self, ColoringError> {
        let mut c = Self::empty(host, k)?;
        assert_eq!(colors.len(), c.host.size(), "one entry per edge");
        for (id, col) in colors.iter().enumerate() {
            if let Some(col) = *col {
                c.assign_mut(id, col)?;
            }
        }
        c.stamp = fresh_stamp();
        Ok(c)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<Graph> {
        &self.host
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    pub fn color(&self, id: EdgeId) -> Option<Color> {
        match self.colors[id] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.host.edge_id(u, v).and_then(|id| self.color(id))
    }

    pub fn present(&self, v: Vertex) -> ColorSet {
        self.present[v]
    }

    pub fn missing(&self, v: Vertex) -> ColorSet {
        ColorSet::full(self.palette).difference(self.present[v])
    }

    /// Union of the missing sets over `xs`.
    pub fn missing_union(&self, xs: &[Vertex]) -> ColorSet {
        xs.iter()
            .fold(ColorSet::EMPTY, |acc, &v| acc.union(self.missing(v)))
    }

    /// True iff the missing sets of `xs` are pairwise disjoint.
    pub fn is_elementary(&self, xs: &[Vertex]) -> bool {
        let mut seen = ColorSet::EMPTY;
        let mut verts: Vec<Vertex> = xs.to_vec();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            let m = self.missing(v);
            if !seen.is_disjoint(m) {
                return false;
            }
            seen = seen.union(m);
        }
        true
    }

    pub fn uncolored_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(id, _)| id)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    /// The neighbor of `v` joined by an edge of color `c`, if any.
    pub fn neighbor_by_color(&self, v: Vertex, c: Color) -> Option<(Vertex, EdgeId)> {
        if !self.present[v].contains(c) {
            return None;
        }
        self.host.incident(v).find(|&(_, id)| self.colors[id] == c)
    }

    /// Recomputes properness and the present index from scratch.
    pub fn check_invariants(&self) -> bool {
        let mut present = vec![ColorSet::EMPTY; self.host.order()];
        for (id, e) in self.host.edges().iter().enumerate() {
            let c = self.colors[id];
            if c == 0 {
                continue;
            }
            if c > self.palette {
                return false;
            }
            for v in [e.lo(), e.hi()] {
                if present[v].contains(c) {
                    return false;
                }
                present[v].insert(c);
            }
        }
        present == self.present
            && (0..self.host.order())
                .all(|v| self.present(v).len() + self.missing(v).len() == self.palette as usize)
    }

    fn edge_id_of(&self, e: Edge) -> Result<EdgeId, ColoringError> {
        self.host
            .edge_id(e.lo(), e.hi())
            .ok_or(ColoringError::NotAnEdge(e.lo(), e.hi()))
    }

    fn check_color(&self, c: Color) -> Result<(), ColoringError> {
        if c == 0 || c > self.palette {
            Err(ColoringError::ColorOutOfRange {
                color: c,
                palette: self.palette,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn assign_mut(&mut self, id: EdgeId, c: Color) -> Result<(), ColoringError> {
        self.check_color(c)?;
        let e = self.host.edge(id);
        if self.colors[id] != 0 {
            return Err(ColoringError::AlreadyAssigned(e));
        }
        for v in [e.lo(), e.hi()] {
            if self.present[v].contains(c) {
                return Err(ColoringError::ColorClash {
                    edge: e,
                    color: c,
                    vertex: v,
                });
            }
        }
        self.colors[id] = c;
        self.present[e.lo()].insert(c);
        self.present[e.hi()].insert(c);
        Ok(())
    }

    pub(crate) fn uncolor_mut(&mut self, id: EdgeId) -> Option<Color> {
        let c = self.colors[id];
        if c == 0 {
            return None;
        }
        let e = self.host.edge(id);
        self.colors[id] = 0;
        self.present[e.lo()].remove(c);
        self.present[e.hi()].remove(c);
        Some(c)
    }

    /// Exchanges `alpha` and `beta` on the given edges. The caller guarantees
    /// the result is proper.
    pub(crate) fn swap_on_edges_mut(&mut self, edges: &[EdgeId], alpha: Color, beta: Color) {
        for &id in edges {
            let c = self.colors[id];
            let e = self.host.edge(id);
            let to = if c == alpha { beta } else { alpha };
            debug_assert!(c == alpha || c == beta);
            self.present[e.lo()].remove(c);
            self.present[e.hi()].remove(c);
            self.colors[id] = to;
        }
        for &id in edges {
            let e = self.host.edge(id);
            let c = self.colors[id];
            self.present[e.lo()].insert(c);
            self.present[e.hi()].insert(c);
        }
    }

    pub(crate) fn restamp(mut self) -> Self {
        self.stamp = fresh_stamp();
        self
    }

    pub(crate) fn raw_colors(&self) -> &[Color] {
        &self.colors
    }

    /// Colors the uncolored edge `e`. The color must be missing at both ends.
    pub fn assign(&self, e: Edge, color: Color) -> Result<Self, ColoringError> {
        let id = self.edge_id_of(e)?;
        let mut next = self.clone();
        next.assign_mut(id, color)?;
        Ok(next.restamp())
    }

    pub fn uncolor(&self, e: Edge) -> Result<Self, ColoringError> {
        let id = self.edge_id_of(e)?;
        let mut next = self.clone();
        next.uncolor_mut(id).ok_or(ColoringError::Unassigned(e))?;
        Ok(next.restamp())
    }

    /// `uv: α → to`. The target color must be missing at both endpoints.
    pub fn recolor_edge(&self, e: Edge, to: Color) -> Result<Self, ColoringError> {
        let id = self.edge_id_of(e)?;
        self.check_color(to)?;
        let mut next = self.clone();
        let from = next.uncolor_mut(id).ok_or(ColoringError::Unassigned(e))?;
        if from == to {
            return Ok(self.clone());
        }
        next.assign_mut(id, to)?;
        Ok(next.restamp())
    }

    /// Serializes as a `k=<palette>` header followed by `u v c` for every
    /// colored edge, in ascending edge order.
    pub fn to_text(&self) -> String {
        let mut out = format!("k={}\n", self.palette);
        for (id, e) in self.host.edges().iter().enumerate() {
            if let Some(c) = self.color(id) {
                out.push_str(&format!("{} {} {}\n", e.lo(), e.hi(), c));
            }
        }
        out
    }

    pub fn from_text(host: impl Into<Arc<Graph>>, text: &str) -> Result<Self, ColoringError> {
        let host = host.into();
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let perr = |line: usize, reason: &str| ColoringError::Parse {
            line,
            reason: reason.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing k= header"))?;
        let k: usize = header
            .strip_prefix("k=")
            .and_then(|k| k.trim().parse().ok())
            .ok_or_else(|| perr(hline, "expected k=<palette>"))?;
        let mut c = Self::empty(host, k)?;
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let [u, v, col] = fields[..] else {
                return Err(perr(line, "expected `u v c`"));
            };
            let parse = |s: &str| s.parse::<usize>().map_err(|_| perr(line, "not an integer"));
            let (u, v, col) = (parse(u)?, parse(v)?, parse(col)?);
            let col = Color::try_from(col).map_err(|_| perr(line, "color too large"))?;
            let id = c.host.edge_id(u, v).ok_or(ColoringError::NotAnEdge(u, v))?;
            c.assign_mut(id, col)?;
        }
        Ok(c.restamp())
    }
}
