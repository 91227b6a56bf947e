//! Regular graph enumeration and the Class 1 filter.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::chromatic::{chromatic_index_with, Budget, ChromaticError, EdgeClass};
use crate::graph::Graph;

use super::VerifyError;

/// Which regular graphs to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub order: usize,
    pub degree: usize,
    pub connected: bool,
    /// Keep one representative per isomorphism class.
    pub reject_isomorphs: bool,
    /// Backtracking node limit.
    pub node_budget: Option<u64>,
}

impl EnumerationSpec {
    /// Connected graphs up to isomorphism, no budget.
    pub fn new(order: usize, degree: usize) -> Self {
        EnumerationSpec {
            order,
            degree,
            connected: true,
            reject_isomorphs: true,
            node_budget: None,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let (m, d) = (self.order, self.degree);
        let bad = |why: String| Err(VerifyError::InfeasibleSpec(why));
        if m % 2 == 1 {
            return bad(format!("order {m} is odd"));
        }
        if m > 64 {
            return bad(format!("order {m} exceeds 64"));
        }
        if d < 2 || d + 1 > m {
            return bad(format!("degree {d} outside 2..={}", m.saturating_sub(1)));
        }
        if d * m % 2 == 1 {
            return bad(format!(
                "{d}-regular graph on {m} vertices has odd degree sum"
            ));
        }
        Ok(())
    }
}

struct Gen<'a, F> {
    m: usize,
    d: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    fix_first: bool,
    visit: &'a mut F,
}

impl<F: FnMut(&[u64])> Gen<'_, F> {
    fn tick(&mut self) -> Result<(), VerifyError> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(VerifyError::BudgetExceeded {
                what: format!("{}-regular graphs on {} vertices", self.d, self.m),
                nodes: b,
            }),
            _ => Ok(()),
        }
    }

    /// Completes vertex `i` by choosing its remaining neighbors among
    /// higher vertices, then moves on to `i + 1`.
    fn vertex(&mut self, i: usize) -> Result<(), VerifyError> {
        self.tick()?;
        if i == self.m {
            (self.visit)(&self.adj);
            return Ok(());
        }
        let need = self.d - self.deg[i];
        if i == 0 && self.fix_first {
            for j in 1..=need {
                self.link(0, j);
            }
            self.vertex(1)?;
            for j in 1..=need {
                self.unlink(0, j);
            }
            return Ok(());
        }
        let cands: Vec<usize> = (i + 1..self.m).filter(|&j| self.deg[j] < self.d).collect();
        if cands.len() < need {
            return Ok(());
        }
        self.choose(i, &cands, 0, need)
    }

    fn choose(
        &mut self,
        i: usize,
        cands: &[usize],
        from: usize,
        left: usize,
    ) -> Result<(), VerifyError> {
        if left == 0 {
            return self.vertex(i + 1);
        }
        for k in from..=cands.len() - left {
            let j = cands[k];
            self.link(i, j);
            self.choose(i, cands, k + 1, left - 1)?;
            self.unlink(i, j);
        }
        Ok(())
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.deg[a] += 1;
        self.deg[b] += 1;
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
    }
}

fn graph_from_masks(adj: &[u64], complement: bool) -> Graph {
    let m = adj.len();
    let mut edges = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for j in i + 1..m {
            if (row >> j & 1 == 1) != complement {
                edges.push((i, j));
            }
        }
    }
    Graph::new(m, edges).expect("masks encode a simple graph")
}

/// Connected (if requested) `Δ`-regular graphs on `m` vertices.
///
/// With isomorph rejection, the sparser of the graph and its complement is
/// generated with `N(0) = {1, ..., d}` fixed, and the result holds the
/// canonical representative of each class sorted by canonical form.
/// Without it, every labeled graph is returned in generation order.
pub fn enumerate_regular(spec: &EnumerationSpec) -> Result<Vec<Graph>, VerifyError> {
    spec.validate()?;
    let m = spec.order;
    let complement = spec.reject_isomorphs && 2 * spec.degree > m - 1;
    let d = if complement {
        m - 1 - spec.degree
    } else {
        spec.degree
    };
    let mut found = BTreeMap::new();
    let mut labeled = Vec::new();
    let mut visit = |adj: &[u64]| {
        let g = graph_from_masks(adj, complement);
        if spec.connected && !g.is_connected() {
            return;
        }
        if spec.reject_isomorphs {
            found.entry(canonical_form(&g)).or_insert(());
        } else {
            labeled.push(g);
        }
    };
    let mut gen = Gen {
        m,
        d,
        adj: vec![0; m],
        deg: vec![0; m],
        nodes: 0,
        budget: spec.node_budget,
        fix_first: spec.reject_isomorphs,
        visit: &mut visit,
    };
    gen.vertex(0)?;
    if spec.reject_isomorphs {
        Ok(found.into_keys().map(|f| f.to_graph()).collect())
    } else {
        Ok(labeled)
    }
}

/// Graphs sorted by chromatic class. Budget hits land in `undecided`.
#[derive(Clone, Debug, Default)]
pub struct ClassFilter {
    pub class1: Vec<Graph>,
    pub class2: Vec<Graph>,
    pub undecided: Vec<Graph>,
}

/// Keeps the graphs with `χ′ = Δ`; runs on the current rayon pool.
/// `budget_nodes` limits each search (`None`: [`Budget::default_for`]).
pub fn filter_class1(gs: Vec<Graph>, budget_nodes: Option<u64>) -> ClassFilter {
    let classes: Vec<Result<EdgeClass, ChromaticError>> = gs
        .par_iter()
        .map(|g| {
            let budget = budget_nodes.map_or_else(|| Budget::default_for(g), |n| Budget(Some(n)));
            chromatic_index_with(g, budget).map(|c| c.class)
        })
        .collect();
    let mut out = ClassFilter::default();
    for (g, class) in gs.into_iter().zip(classes) {
        match class {
            Ok(EdgeClass::One) => out.class1.push(g),
            Ok(EdgeClass::Two) => out.class2.push(g),
            Err(_) => out.undecided.push(g),
        }
    }
    out
}
