//! Executable checks of the classical adjacency and fan lemmas for
//! edge-chromatic critical graphs.
//!
//! Each check returns `Ok(None)` when the statement holds on the given
//! instance, `Ok(Some(violation))` when its conclusion fails, and an error
//! when the hypothesis does not hold.

use crate::chromatic::{self, Budget, EdgeClass};
use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Graph, Vertex};
use crate::io::to_graph6;

use super::fan::{
    build_maximal_multifan, overlap, validate_kierstead_path, HConfiguration, KiersteadPath,
};
use super::{Lemma, LemmaViolation, Preconditions, StructureError};

/// Checks lemmas on one graph after confirming it is Class 2.
pub struct LemmaChecker<'g> {
    g: &'g Graph,
    delta: usize,
    budget: Budget,
    mode: Preconditions,
}

fn failed(msg: impl Into<String>) -> StructureError {
    StructureError::PreconditionFailed(msg.into())
}

impl<'g> LemmaChecker<'g> {
    pub fn new(g: &'g Graph) -> Result<Self, StructureError> {
        Self::with_budget(g, Budget::default_for(g))
    }

    /// Verifies that `g` is Class 2 using the exact solver under `budget`.
    pub fn with_budget(g: &'g Graph, budget: Budget) -> Result<Self, StructureError> {
        if g.size() == 0 {
            return Err(failed("graph has no edges"));
        }
        let class = chromatic::chromatic_index_with(g, budget)?.class;
        if class != EdgeClass::Two {
            return Err(failed("graph is Class 1"));
        }
        Ok(LemmaChecker {
            g,
            delta: g.max_degree(),
            budget,
            mode: Preconditions::Verified,
        })
    }

    /// Skips every chromatic precondition (Class 2, criticality). The
    /// conclusions are then evaluated on arbitrary graphs, which is how the
    /// detectors themselves are tested.
    pub fn assuming_preconditions(g: &'g Graph) -> Self {
        LemmaChecker {
            g,
            delta: g.max_degree(),
            budget: Budget::default_for(g),
            mode: Preconditions::Assumed,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn preconditions(&self) -> Preconditions {
        self.mode
    }

    fn violation(
        &self,
        lemma: Lemma,
        c: Option<&EdgeColoring>,
        structure: Vec<Vertex>,
        predicate: String,
    ) -> LemmaViolation {
        LemmaViolation {
            lemma,
            graph6: to_graph6(self.g),
            coloring: c.map(EdgeColoring::to_text),
            structure,
            predicate,
            connected: self.g.is_connected(),
            preconditions: self.mode,
        }
    }

    fn require_edge(&self, u: Vertex, v: Vertex) -> Result<Edge, StructureError> {
        if u >= self.g.order() || v >= self.g.order() {
            return Err(StructureError::ForeignStructure(format!(
                "vertex out of range for order {}",
                self.g.order()
            )));
        }
        if !self.g.has_edge(u, v) {
            return Err(StructureError::ForeignStructure(format!(
                "{u}-{v} is not an edge"
            )));
        }
        Ok(Edge::new(u, v))
    }

    fn require_critical(&self, e: Edge) -> Result<(), StructureError> {
        if self.mode == Preconditions::Verified
            && !chromatic::is_critical_edge_with(self.g, e, self.budget)?
        {
            return Err(failed(format!(
                "edge {}-{} is not critical",
                e.lo(),
                e.hi()
            )));
        }
        Ok(())
    }

    /// `c` must be a complete `Δ`-coloring of `G − e1` on this graph. On a
    /// Class 2 graph its existence makes `e1` critical.
    fn require_coloring(&self, e1: Edge, c: &EdgeColoring) -> Result<(), StructureError> {
        if c.host() != self.g {
            return Err(failed("coloring belongs to a different graph"));
        }
        if c.palette() as usize != self.delta {
            return Err(failed(format!(
                "coloring uses {} colors, expected Δ = {}",
                c.palette(),
                self.delta
            )));
        }
        let id = self.g.edge_id(e1.lo(), e1.hi()).expect("checked by caller");
        let mut uncolored = c.uncolored_edges();
        if uncolored.next() != Some(id) || uncolored.next().is_some() {
            return Err(failed(format!(
                "coloring must leave exactly {}-{} uncolored",
                e1.lo(),
                e1.hi()
            )));
        }
        Ok(())
    }

    /// For a critical edge `xy`, `x` has at least `Δ − d(y) + 1`
    /// `Δ`-neighbors other than `y`, and symmetrically for `y`.
    pub fn adjacency(&self, e: Edge) -> Result<Option<LemmaViolation>, StructureError> {
        let e = self.require_edge(e.lo(), e.hi())?;
        self.require_critical(e)?;
        for (x, y) in [(e.lo(), e.hi()), (e.hi(), e.lo())] {
            let big = self
                .g
                .neighbors(x)
                .iter()
                .filter(|&&w| w != y && self.g.degree(w) == self.delta)
                .count();
            let need = self.delta + 1 - self.g.degree(y);
            if big < need {
                return Ok(Some(self.violation(
                    Lemma::Adjacency,
                    None,
                    vec![x, y],
                    format!("{x} has {big} Δ-neighbors besides {y}, needs {need}"),
                )));
            }
        }
        Ok(None)
    }

    /// Builds the maximal multi-fan at each end of `e1` and checks that its
    /// vertex set is elementary and that the center is `(α, β)`-linked to
    /// every spoke end for `α` missing at the center and `β` missing at the
    /// spoke end.
    ///
    /// Every multi-fan at `x` with respect to `e1` lies inside the maximal
    /// one, so this covers all of them.
    pub fn multifan(
        &self,
        e1: Edge,
        c: &EdgeColoring,
    ) -> Result<Option<LemmaViolation>, StructureError> {
        let e1 = self.require_edge(e1.lo(), e1.hi())?;
        self.require_coloring(e1, c)?;
        for x in [e1.lo(), e1.hi()] {
            let fan = build_maximal_multifan(c, e1, x)?;
            let vs = fan.vertices();
            if !c.is_elementary(&vs) {
                return Ok(Some(self.violation(
                    Lemma::MultiFan,
                    Some(c),
                    vs,
                    "fan vertex set is not elementary".into(),
                )));
            }
            for &y in fan.spokes() {
                for alpha in c.missing(x).iter() {
                    for beta in c.missing(y).iter() {
                        if !c.linked(alpha, beta, x, y)? {
                            return Ok(Some(self.violation(
                                Lemma::MultiFan,
                                Some(c),
                                vs,
                                format!("{x} and {y} are not ({alpha},{beta})-linked"),
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// For a Kierstead path `(y0, y1, y2, y3)`: if `min(d(y1), d(y2)) < Δ`
    /// its vertex set is elementary, and `y3` shares at most one missing
    /// color with `y0` and `y1` together.
    pub fn kierstead(
        &self,
        k: &KiersteadPath,
        c: &EdgeColoring,
    ) -> Result<Option<LemmaViolation>, StructureError> {
        let vs = k.vertices();
        let &[y0, y1, y2, y3] = vs else {
            return Err(StructureError::WrongLength {
                expected: 3,
                found: k.len(),
            });
        };
        let e1 = self.require_edge(y0, y1)?;
        self.require_coloring(e1, c)?;
        if !validate_kierstead_path(c, k)? {
            return Err(failed(format!("{vs:?} is not a Kierstead path")));
        }
        if self.g.degree(y1).min(self.g.degree(y2)) < self.delta && !c.is_elementary(vs) {
            return Ok(Some(self.violation(
                Lemma::KiersteadPath,
                Some(c),
                vs.to_vec(),
                "path has a vertex below Δ among y1, y2 but is not elementary".into(),
            )));
        }
        let shared = overlap(c.missing(y3), c.missing(y0).union(c.missing(y1)));
        if shared > 1 {
            return Ok(Some(self.violation(
                Lemma::KiersteadPath,
                Some(c),
                vs.to_vec(),
                format!("{y3} shares {shared} missing colors with {{{y0}, {y1}}}"),
            )));
        }
        Ok(None)
    }

    /// For a full-deficiency pair `(a, b)` with `ab` critical: every other
    /// neighbor of `a` or `b` has degree `Δ`; every other vertex of degree
    /// at least `n − |N(a) ∪ N(b)|` has degree at least `Δ − 1`, and exactly
    /// `Δ` when both `a` and `b` are below `Δ`.
    pub fn full_deficiency(
        &self,
        a: Vertex,
        b: Vertex,
    ) -> Result<Option<LemmaViolation>, StructureError> {
        let e = self.require_edge(a, b)?;
        let (da, db) = (self.g.degree(a), self.g.degree(b));
        if da + db != self.delta + 2 {
            return Err(failed(format!(
                "d({a}) + d({b}) = {} is not Δ + 2 = {}",
                da + db,
                self.delta + 2
            )));
        }
        self.require_critical(e)?;
        let mut union: Vec<Vertex> = self.g.neighbors(a).to_vec();
        union.extend(self.g.neighbors(b));
        union.sort_unstable();
        union.dedup();
        for &x in &union {
            if x != a && x != b && self.g.degree(x) != self.delta {
                return Ok(Some(self.violation(
                    Lemma::FullDeficiency,
                    None,
                    vec![a, b, x],
                    format!("neighbor {x} has degree {} < Δ", self.g.degree(x)),
                )));
            }
        }
        let threshold = self.g.order() - union.len();
        let both_low = da < self.delta && db < self.delta;
        for x in 0..self.g.order() {
            let dx = self.g.degree(x);
            if x == a || x == b || dx < threshold {
                continue;
            }
            if dx + 1 < self.delta || (both_low && dx != self.delta) {
                let need = if both_low { "Δ" } else { "Δ - 1" };
                return Ok(Some(self.violation(
                    Lemma::FullDeficiency,
                    None,
                    vec![a, b, x],
                    format!("{x} has degree {dx} >= {threshold} but below {need}"),
                )));
            }
        }
        Ok(None)
    }

    /// For an H-configuration whose paths `(a, b, u, x)` and `(a, b, u, y)`
    /// are both Kierstead paths, `x` and `y` together share at most one
    /// missing color with `{a, b}`.
    pub fn double_kierstead(
        &self,
        h: &HConfiguration,
        c: &EdgeColoring,
    ) -> Result<Option<LemmaViolation>, StructureError> {
        h.validate(self.g)?;
        self.require_coloring(Edge::new(h.a, h.b), c)?;
        for k in [h.first_path(), h.second_path()] {
            if !validate_kierstead_path(c, &k)? {
                return Err(failed(format!(
                    "{:?} is not a Kierstead path",
                    k.vertices()
                )));
            }
        }
        let ab = c.missing(h.a).union(c.missing(h.b));
        let total = overlap(c.missing(h.x), ab) + overlap(c.missing(h.y), ab);
        if total > 1 {
            return Ok(Some(self.violation(
                Lemma::DoubleKierstead,
                Some(c),
                h.vertices().to_vec(),
                format!(
                    "{} and {} share {total} missing colors with {{{}, {}}}",
                    h.x, h.y, h.a, h.b
                ),
            )));
        }
        Ok(None)
    }
}

pub fn check_adjacency_lemma(g: &Graph, e: Edge) -> Result<Option<LemmaViolation>, StructureError> {
    LemmaChecker::new(g)?.adjacency(e)
}

pub fn check_lemma_multifan(
    g: &Graph,
    e1: Edge,
    c: &EdgeColoring,
) -> Result<Option<LemmaViolation>, StructureError> {
    LemmaChecker::new(g)?.multifan(e1, c)
}

pub fn check_lemma_kierstead(
    g: &Graph,
    k: &KiersteadPath,
    c: &EdgeColoring,
) -> Result<Option<LemmaViolation>, StructureError> {
    if k.len() != 3 {
        return Err(StructureError::WrongLength {
            expected: 3,
            found: k.len(),
        });
    }
    LemmaChecker::new(g)?.kierstead(k, c)
}

pub fn check_full_deficiency(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<Option<LemmaViolation>, StructureError> {
    LemmaChecker::new(g)?.full_deficiency(a, b)
}

pub fn check_double_kierstead(
    g: &Graph,
    h: &HConfiguration,
    c: &EdgeColoring,
) -> Result<Option<LemmaViolation>, StructureError> {
    h.validate(g)?;
    LemmaChecker::new(g)?.double_kierstead(h, c)
}
