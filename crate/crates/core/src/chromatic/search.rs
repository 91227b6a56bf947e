//! Exact backtracking over edge colorings.
//!
//! The search colors the "active" edges of a host graph (all edges minus an
//! optional skip set) with colors `1..=k`. Edges are picked dynamically by
//! fewest available colors, ties broken by larger endpoint-degree sum and
//! then by edge id.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Color;
use crate::graph::{EdgeId, Graph, Vertex};

use super::ChromaticError;

/// Node budget for a search. `None` is unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Budget(pub Option<u64>);

/// Budget applied when none is configured on graphs with more than 64 edges.
pub const DEFAULT_LARGE_BUDGET: u64 = 100_000_000;

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    /// Unlimited for `|E| <= 64`, [`DEFAULT_LARGE_BUDGET`] above that.
    pub fn default_for(g: &Graph) -> Self {
        if g.size() <= 64 {
            Budget(None)
        } else {
            Budget(Some(DEFAULT_LARGE_BUDGET))
        }
    }
}

#[derive(Clone)]
pub struct ColoringSearch<'g> {
    g: &'g Graph,
    k: u8,
    active: Vec<bool>,
    static_rank: Vec<usize>,
    budget: Budget,
}

struct State {
    colors: Vec<Color>,
    used: Vec<u64>,
    nodes: u64,
}

impl State {
    fn set(&mut self, g: &Graph, id: EdgeId, c: Color) {
        let e = g.edge(id);
        self.colors[id] = c;
        self.used[e.lo()] |= 1 << c;
        self.used[e.hi()] |= 1 << c;
    }

    fn unset(&mut self, g: &Graph, id: EdgeId) {
        let e = g.edge(id);
        let c = self.colors[id];
        self.colors[id] = 0;
        self.used[e.lo()] &= !(1 << c);
        self.used[e.hi()] &= !(1 << c);
    }
}

impl<'g> ColoringSearch<'g> {
    pub fn new(g: &'g Graph, k: u8) -> Self {
        let static_rank = g
            .edges()
            .iter()
            .map(|e| g.degree(e.lo()) + g.degree(e.hi()))
            .collect();
        ColoringSearch {
            g,
            k,
            active: vec![true; g.size()],
            static_rank,
            budget: Budget::default_for(g),
        }
    }

    /// Leaves `id` uncolored (the search then colors `G - e`).
    pub fn skip_edge(mut self, id: EdgeId) -> Self {
        self.active[id] = false;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    fn full_mask(&self) -> u64 {
        ((1u64 << self.k) - 1) << 1
    }

    fn fresh_state(&self) -> State {
        State {
            colors: vec![0; self.g.size()],
            used: vec![0; self.g.order()],
            nodes: 0,
        }
    }

    fn tick(&self, st: &mut State) -> Result<(), ChromaticError> {
        st.nodes += 1;
        match self.budget.0 {
            Some(limit) if st.nodes > limit => Err(ChromaticError::SearchLimitExceeded {
                nodes: st.nodes - 1,
            }),
            _ => Ok(()),
        }
    }

    /// Most constrained uncolored active edge and its available colors.
    /// `Ok(None)` when everything is colored; `Err(())` on a dead end.
    fn pick(&self, st: &State) -> Result<Option<(EdgeId, u64)>, ()> {
        let full = self.full_mask();
        let mut best: Option<(EdgeId, u64, u32)> = None;
        for (id, e) in self.g.edges().iter().enumerate() {
            if !self.active[id] || st.colors[id] != 0 {
                continue;
            }
            let avail = full & !(st.used[e.lo()] | st.used[e.hi()]);
            let count = avail.count_ones();
            if count == 0 {
                return Err(());
            }
            let better = match best {
                None => true,
                Some((bid, _, bc)) => {
                    count < bc || (count == bc && self.static_rank[id] > self.static_rank[bid])
                }
            };
            if better {
                best = Some((id, avail, count));
            }
        }
        Ok(best.map(|(id, avail, _)| (id, avail)))
    }

    fn active_degree(&self, v: Vertex) -> usize {
        self.g
            .incident(v)
            .filter(|&(_, id)| self.active[id])
            .count()
    }

    /// Finds one proper coloring of the active edges, if any exists.
    ///
    /// The edges at a vertex of maximum active degree are pinned to colors
    /// `1..=d` in neighbor order, and colors never used so far are only
    /// tried in ascending order; both remove palette symmetry only.
    pub fn find_one(&self) -> Result<Option<Vec<Color>>, ChromaticError> {
        let mut st = self.fresh_state();
        let Some(pivot) =
            (0..self.g.order()).max_by_key(|&v| (self.active_degree(v), usize::MAX - v))
        else {
            return Ok(Some(st.colors));
        };
        let pinned: Vec<EdgeId> = self
            .g
            .incident(pivot)
            .filter(|&(_, id)| self.active[id])
            .map(|(_, id)| id)
            .collect();
        if pinned.len() > self.k as usize {
            return Ok(None);
        }
        for (i, &id) in pinned.iter().enumerate() {
            st.set(self.g, id, i as Color + 1);
        }
        let pinned_mask = match pinned.len() {
            d if d >= 63 => u64::MAX,
            d => (1u64 << (d + 1)) - 1,
        };
        let mut ever_used = self.full_mask() & pinned_mask;
        let found = self.find_rec(&mut st, &mut ever_used)?;
        Ok(found.then_some(st.colors))
    }

    fn find_rec(&self, st: &mut State, ever_used: &mut u64) -> Result<bool, ChromaticError> {
        self.tick(st)?;
        let (id, avail) = match self.pick(st) {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(true),
            Ok(Some(x)) => x,
        };
        let fresh = avail & !*ever_used;
        let mut candidates = avail & *ever_used;
        if fresh != 0 {
            candidates |= fresh & fresh.wrapping_neg();
        }
        while candidates != 0 {
            let c = candidates.trailing_zeros() as Color;
            candidates &= candidates - 1;
            let before = *ever_used;
            *ever_used |= 1 << c;
            st.set(self.g, id, c);
            if self.find_rec(st, ever_used)? {
                return Ok(true);
            }
            st.unset(self.g, id);
            *ever_used = before;
        }
        Ok(false)
    }

    /// Visits every proper coloring of the active edges (no symmetry
    /// reduction). Returns the number of search nodes used.
    pub fn for_each<F>(&self, mut visit: F) -> Result<u64, ChromaticError>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        let mut st = self.fresh_state();
        let _ = self.each_rec(&mut st, &mut visit)?;
        Ok(st.nodes)
    }

    fn each_rec<F>(&self, st: &mut State, visit: &mut F) -> Result<ControlFlow<()>, ChromaticError>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        self.tick(st)?;
        let (id, mut avail) = match self.pick(st) {
            Err(()) => return Ok(ControlFlow::Continue(())),
            Ok(None) => return Ok(visit(&st.colors)),
            Ok(Some(x)) => x,
        };
        while avail != 0 {
            let c = avail.trailing_zeros() as Color;
            avail &= avail - 1;
            st.set(self.g, id, c);
            let flow = self.each_rec(st, visit)?;
            st.unset(self.g, id);
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// One coloring found by backtracking with colors tried in random order.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Result<Option<Vec<Color>>, ChromaticError> {
        let mut st = self.fresh_state();
        let found = self.sample_rec(&mut st, rng)?;
        Ok(found.then_some(st.colors))
    }

    fn sample_rec<R: Rng>(&self, st: &mut State, rng: &mut R) -> Result<bool, ChromaticError> {
        self.tick(st)?;
        let (id, avail) = match self.pick(st) {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(true),
            Ok(Some(x)) => x,
        };
        let mut order: Vec<Color> = (1..=self.k).filter(|&c| avail >> c & 1 == 1).collect();
        order.shuffle(rng);
        for c in order {
            st.set(self.g, id, c);
            if self.sample_rec(st, rng)? {
                return Ok(true);
            }
            st.unset(self.g, id);
        }
        Ok(false)
    }
}
