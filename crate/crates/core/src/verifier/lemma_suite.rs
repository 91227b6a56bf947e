//! Runs every lemma checker over the split graphs of the conjecture range.

use std::ops::ControlFlow;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::edge_orbits;
use crate::chromatic::{self, Budget, ChromaticError, ColoringSearch};
use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Graph};
use crate::io::to_graph6;
use crate::structures::{
    full_deficiency_pairs, h_configurations_on, kierstead_paths_of_length_three,
    validate_kierstead_path, HConfiguration, Lemma, LemmaChecker, LemmaViolation, StructureError,
};

use super::sweep::{build_universe, empty_report, SplitWork};
use super::{
    check_bound, pool, LemmaReport, LemmaRun, LemmaTally, Mode, Timings, VerificationReport,
    VerifyConfig, VerifyError, Violation,
};

/// Search nodes allowed for listing every coloring of `G − e` before the
/// suite falls back to sampling.
pub const EXHAUSTIVE_NODE_LIMIT: u64 = 1_000_000;

/// Stored violations per graph; the tallies keep counting past this.
const KEEP_VIOLATIONS: usize = 100;

#[derive(Default)]
struct GraphResult {
    runs: Vec<LemmaRun>,
    checks: [u64; 5],
    violation_counts: [u64; 5],
    violations: Vec<LemmaViolation>,
    undecided: Vec<String>,
}

impl GraphResult {
    fn record(
        &mut self,
        lemma: Lemma,
        outcome: Result<Option<LemmaViolation>, StructureError>,
        graph6: &str,
    ) {
        let i = Lemma::ALL.iter().position(|&l| l == lemma).unwrap();
        match outcome {
            Ok(None) => self.checks[i] += 1,
            Ok(Some(v)) => {
                self.checks[i] += 1;
                self.violation_counts[i] += 1;
                if self.violations.len() < KEEP_VIOLATIONS {
                    self.violations.push(v);
                }
            }
            Err(e) => self
                .undecided
                .push(format!("{graph6}: {lemma} check failed to run: {e}")),
        }
    }
}

struct EdgeContext<'a> {
    checker: &'a LemmaChecker<'a>,
    host: Arc<Graph>,
    edge: Edge,
    delta: usize,
    hs: Vec<HConfiguration>,
    graph6: &'a str,
}

impl EdgeContext<'_> {
    /// Runs the coloring-dependent checks on one coloring of `G − e`.
    fn check(&self, colors: &[Color], run: &mut LemmaRun, out: &mut GraphResult) {
        let opt: Vec<Option<Color>> = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
        let c = EdgeColoring::from_colors(self.host.clone(), self.delta, &opt)
            .expect("search produces proper colorings");
        run.colorings += 1;
        run.multi_fan_checks += 1;
        out.record(
            Lemma::MultiFan,
            self.checker.multifan(self.edge, &c),
            self.graph6,
        );
        for k in kierstead_paths_of_length_three(&c, self.edge) {
            run.kierstead_checks += 1;
            out.record(
                Lemma::KiersteadPath,
                self.checker.kierstead(&k, &c),
                self.graph6,
            );
        }
        for h in &self.hs {
            let applicable = [h.first_path(), h.second_path()]
                .iter()
                .all(|k| validate_kierstead_path(&c, k).unwrap_or(false));
            if applicable {
                run.double_kierstead_checks += 1;
                out.record(
                    Lemma::DoubleKierstead,
                    self.checker.double_kierstead(h, &c),
                    self.graph6,
                );
            }
        }
    }
}

fn run_graph(index: usize, w: &SplitWork, cfg: &VerifyConfig) -> GraphResult {
    let g = &w.graph;
    let graph6 = to_graph6(g);
    let budget = cfg.budget_for(g);
    let mut out = GraphResult::default();
    let checker = match LemmaChecker::with_budget(g, budget) {
        Ok(c) => c,
        Err(e) => {
            out.undecided.push(format!("{graph6}: {e}"));
            return out;
        }
    };
    let split_pair = Edge::new(w.spec.vertex, g.order() - 1);
    let delta = g.max_degree();
    let host = Arc::new(g.clone());
    let orbits = edge_orbits(g);
    let mut critical = vec![None; g.size()];

    for (orbit_index, orbit) in orbits.iter().enumerate() {
        let edge = g.edge(orbit[0]);
        let mut run = LemmaRun {
            split_graph6: graph6.clone(),
            edge,
            orbit: orbit.len(),
            split_pair: orbit.iter().any(|&id| g.edge(id) == split_pair),
            critical: None,
            exhaustive: false,
            colorings: 0,
            multi_fan_checks: 0,
            kierstead_checks: 0,
            double_kierstead_checks: 0,
        };
        match chromatic::is_critical_edge_with(g, edge, budget) {
            Ok(is) => run.critical = Some(is),
            Err(e) => out
                .undecided
                .push(format!("{graph6}: criticality of {edge:?} undecided ({e})")),
        }
        for &id in orbit {
            critical[id] = run.critical;
        }
        if run.critical != Some(true) {
            out.runs.push(run);
            continue;
        }
        out.record(Lemma::Adjacency, checker.adjacency(edge), &graph6);

        let ctx = EdgeContext {
            checker: &checker,
            host: host.clone(),
            edge,
            delta,
            hs: h_configurations_on(g, edge),
            graph6: &graph6,
        };
        let search = ColoringSearch::new(g, delta as Color).skip_edge(orbit[0]);
        let listed = search
            .clone()
            .budget(Budget(Some(EXHAUSTIVE_NODE_LIMIT)))
            .for_each(|colors| {
                ctx.check(colors, &mut run, &mut out);
                ControlFlow::Continue(())
            });
        match listed {
            Ok(_) => run.exhaustive = true,
            Err(ChromaticError::SearchLimitExceeded { .. }) => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(((index as u64) << 32) | orbit_index as u64);
                let sampler = search.clone().budget(budget);
                for _ in 0..cfg.samples {
                    match sampler.sample(&mut rng) {
                        Ok(Some(colors)) => ctx.check(&colors, &mut run, &mut out),
                        Ok(None) => {
                            out.undecided
                                .push(format!("{graph6}: no coloring of G - {edge:?} to sample"));
                            break;
                        }
                        Err(e) => {
                            out.undecided
                                .push(format!("{graph6}: sampling undecided ({e})"));
                            break;
                        }
                    }
                }
            }
            Err(e) => out.undecided.push(format!("{graph6}: {e}")),
        }
        out.runs.push(run);
    }

    for (a, b) in full_deficiency_pairs(g) {
        let id = g.edge_id(a, b).expect("pairs are edges");
        if critical[id] == Some(true) {
            out.record(
                Lemma::FullDeficiency,
                checker.full_deficiency(a, b),
                &graph6,
            );
        }
    }
    out
}

/// For each split graph of the conjecture range and each edge orbit, runs
/// the adjacency check, and over every coloring of `G − e` (or a seeded
/// sample when there are too many) the multi-fan, Kierstead-path and
/// H-configuration checks; then the full-deficiency check on every
/// critical full-deficiency pair.
pub fn run_lemma_suites(cfg: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    check_bound(cfg.m_max)?;
    let total = Instant::now();
    let mut report = empty_report(Mode::Lemmas, cfg);
    let mut timings = Timings::default();
    pool(cfg.workers)?.install(|| {
        let work = build_universe(
            cfg,
            |th| th.conjecture_base_order,
            &mut report,
            &mut timings,
        );
        let start = Instant::now();
        let results: Vec<GraphResult> = work
            .par_iter()
            .enumerate()
            .map(|(i, w)| run_graph(i, w, cfg))
            .collect();
        timings.check_ms = start.elapsed().as_millis() as u64;

        let mut lemmas = LemmaReport {
            graphs: work.len(),
            tallies: Lemma::ALL
                .iter()
                .map(|&lemma| LemmaTally {
                    lemma,
                    checks: 0,
                    violations: 0,
                })
                .collect(),
            runs: Vec::new(),
        };
        report.counts.split_graphs_tested = work.len();
        for r in results {
            for (i, t) in lemmas.tallies.iter_mut().enumerate() {
                t.checks += r.checks[i];
                t.violations += r.violation_counts[i];
            }
            lemmas.runs.extend(r.runs);
            report
                .violations
                .extend(r.violations.into_iter().map(Violation::Lemma));
            report.undecided.extend(r.undecided);
        }
        report.lemmas = Some(lemmas);
    });
    timings.total_ms = total.elapsed().as_millis() as u64;
    if cfg.timings {
        report.timings = Some(timings);
    }
    report.settle_verdict();
    Ok(report)
}
