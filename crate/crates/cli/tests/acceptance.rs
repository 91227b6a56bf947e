//! Acceptance run: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chromindex::canon::are_isomorphic;
use chromindex::chromatic::{chromatic_index, is_critical_edge, is_delta_critical};
use chromindex::io::{from_graph6, to_graph6};
use chromindex::kempe::ChainShape;
use chromindex::structures::Lemma;
use chromindex::verifier::{
    enumerate_regular, EnumerationSpec, Mode, RangeTag, Verdict, VerificationReport, Violation,
};
use chromindex::{EdgeColoring, Graph, SplitSpec};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs the binary's `verify` and loads the JSON report it wrote.
fn verify(dir: &Path, args: &[&str]) -> Result<(i32, VerificationReport), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_chromindex"))
        .arg("verify")
        .args(args)
        .arg("--output")
        .arg(dir)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    let json = std::fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .filter_map(Result::ok)
        .map(|e| e.path())
        .find(|p| p.extension().is_some_and(|x| x == "json"))
        .ok_or_else(|| {
            format!(
                "no JSON report; stderr: {}",
                String::from_utf8_lossy(&out.stderr)
            )
        })?;
    let text = std::fs::read_to_string(json).map_err(|e| e.to_string())?;
    let report = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Ok((code, report))
}

fn sweep(mode: &str, m: &str, extra: &[&str]) -> Result<(i32, VerificationReport), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut args = vec!["--mode", mode, "--m-max", m];
    args.extend_from_slice(extra);
    verify(dir.path(), &args)
}

fn oracle_equivalence() -> Check {
    let graphs = common::connected_graphs_up_to(7);
    ensure(graphs.len() == 1 + 2 + 6 + 21 + 112 + 853, || {
        format!("oracle enumerated {} connected graphs", graphs.len())
    })?;
    for g in &graphs {
        let ours = chromatic_index(g).map_err(|e| e.to_string())?.index;
        let oracle = common::oracle_chromatic_index(g);
        ensure(ours == oracle, || {
            format!("{}: solver {ours}, oracle {oracle}", to_graph6(g))
        })?;
    }
    Ok(format!(
        "{} connected graphs on 2..=7 vertices agree",
        graphs.len()
    ))
}

fn sweep_summary(r: &VerificationReport) -> String {
    let c = &r.counts;
    format!(
        "{} bases, {} split graphs, THEOREM {}/{}, BEYOND-THEOREM {}/{}",
        c.base_graphs,
        c.split_graphs_tested,
        c.theorem_passed,
        c.theorem_instances,
        c.beyond_theorem_passed,
        c.beyond_theorem_instances
    )
}

fn theorem_sweep() -> Check {
    let (code, r) = sweep("theorem1", "8", &[])?;
    ensure(code == 0 && r.verdict == Verdict::Pass, || {
        format!("exit {code}, verdict {}, {:?}", r.verdict, r.violations)
    })?;
    ensure(
        r.mode == Mode::Theorem1 && r.counts.split_graphs_tested > 0,
        || "empty sweep".into(),
    )?;
    let non_critical = r
        .violations
        .iter()
        .filter(|v| matches!(v, Violation::NotDeltaCritical { .. }))
        .count();
    ensure(non_critical == 0 && r.undecided.is_empty(), || {
        "non-critical or undecided".into()
    })?;
    ensure(
        r.instances.iter().all(|i| i.tag == RangeTag::Theorem),
        || "out-of-range instance".into(),
    )?;
    Ok(sweep_summary(&r))
}

fn conjecture_sweep() -> Check {
    let (code, r) = sweep("conjecture", "8", &[])?;
    ensure(code == 0 && r.verdict == Verdict::Pass, || {
        format!("exit {code}, verdict {}, {:?}", r.verdict, r.violations)
    })?;
    let beyond: Vec<_> = r
        .instances
        .iter()
        .filter(|i| i.tag == RangeTag::BeyondTheorem)
        .collect();
    ensure(
        !beyond.is_empty() && beyond.iter().all(|i| i.delta_critical == Some(true)),
        || "beyond-theorem instance not Δ-critical".into(),
    )?;
    let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
    let prism = Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap();
    for (name, base) in [("K3,3", &k33), ("prism", &prism)] {
        let covered = beyond
            .iter()
            .any(|i| from_graph6(&i.base_graph6).is_ok_and(|b| common::isomorphic(&b, base)));
        ensure(covered, || {
            format!("{name} missing from the beyond-theorem instances")
        })?;
    }
    let c = &r.counts;
    Ok(format!(
        "{}; base-order-only reading {}/{} (reported, outside the verdict)",
        sweep_summary(&r),
        c.base_order_only_passed,
        c.base_order_only_instances
    ))
}

fn overfull_class_two() -> Check {
    let mut total = 0;
    for mode in ["theorem1", "conjecture"] {
        let (_, r) = sweep(mode, "8", &[])?;
        for i in &r.instances {
            let g = from_graph6(&i.split_graph6).map_err(|e| e.to_string())?;
            ensure(g.is_overfull() && i.overfull, || {
                format!("{} not overfull", i.split_graph6)
            })?;
            ensure(i.class_two == Some(true), || {
                format!("{} not Class 2", i.split_graph6)
            })?;
        }
        total += r.instances.len();
    }
    Ok(format!("{total} split graphs overfull and Class 2"))
}

fn lemma_suites() -> Check {
    let (code, r) = sweep("lemmas", "6", &["--samples", "1000", "--seed", "1"])?;
    ensure(code == 0 && r.verdict == Verdict::Pass, || {
        format!(
            "exit {code}, verdict {}, {} violations",
            r.verdict,
            r.violations.len()
        )
    })?;
    let lemmas = r.lemmas.as_ref().ok_or("no lemma section")?;
    for l in Lemma::ALL {
        let t = lemmas
            .tallies
            .iter()
            .find(|t| t.lemma == l)
            .ok_or("missing tally")?;
        ensure(t.violations == 0 && t.checks > 0, || {
            format!("{l}: {} checks, {} violations", t.checks, t.violations)
        })?;
    }
    let k4 = Graph::complete(4);
    let split_k4 = k4
        .split_vertex(&SplitSpec::from_part_a(&k4, 3, &[0]).unwrap())
        .unwrap();
    let runs: Vec<_> = lemmas
        .runs
        .iter()
        .filter(|run| from_graph6(&run.split_graph6).is_ok_and(|g| are_isomorphic(&g, &split_k4)))
        .collect();
    ensure(!runs.is_empty(), || "split-K4 not in the suite".into())?;
    ensure(
        runs.iter()
            .all(|run| run.critical == Some(true) && run.exhaustive),
        || "split-K4 universe not exhaustive".into(),
    )?;
    ensure(runs.iter().any(|run| run.split_pair), || {
        "split pair of split-K4 not checked".into()
    })?;
    let summary: Vec<String> = lemmas
        .tallies
        .iter()
        .map(|t| format!("{} {}", t.lemma, t.checks))
        .collect();
    Ok(format!(
        "{} graphs, 0 violations ({})",
        lemmas.graphs,
        summary.join(", ")
    ))
}

fn spot_values() -> Check {
    let k4 = Graph::complete(4);
    let split_k4 = k4
        .split_vertex(&SplitSpec::from_part_a(&k4, 3, &[0]).unwrap())
        .unwrap();
    for (name, g, chi) in [
        ("C5", Graph::cycle(5), 3),
        ("K4", k4.clone(), 3),
        ("Petersen", Graph::petersen(), 4),
        ("split-K4", split_k4.clone(), 4),
    ] {
        let oracle = common::oracle_chromatic_index(&g);
        let ours = chromatic_index(&g).map_err(|e| e.to_string())?.index;
        ensure(oracle == chi && ours == chi, || {
            format!("{name}: oracle {oracle}, solver {ours}")
        })?;
    }
    ensure(split_k4.size() == 7, || "split-K4 edge count".into())?;
    for (id, &e) in split_k4.edges().iter().enumerate() {
        let oracle = common::oracle_colorable_without(&split_k4, id, 3);
        let ours = is_critical_edge(&split_k4, e).map_err(|err| err.to_string())?;
        ensure(oracle && ours, || {
            format!("split-K4 edge {e:?} not critical")
        })?;
    }
    ensure(is_delta_critical(&split_k4) == Ok(true), || {
        "split-K4 not 3-critical".into()
    })?;
    Ok("χ′(C5)=3, χ′(K4)=3, χ′(Petersen)=4, split-K4 3-critical with 7 edges".into())
}

fn construction_counts() -> Check {
    let count = |m, d| enumerate_regular(&EnumerationSpec::new(m, d)).map(|gs| gs.len());
    let (c4, c6) = (
        count(4, 3).map_err(|e| e.to_string())?,
        count(6, 3).map_err(|e| e.to_string())?,
    );
    ensure(c4 == 1 && c6 == 2, || {
        format!("enumerate_regular gave {c4} and {c6}")
    })?;
    for d in 2..=6 {
        let star = Graph::new(d + 1, (1..=d).map(|v| (0, v))).unwrap();
        let k = Graph::complete(d + 1);
        for g in [star, k] {
            let n = g.enumerate_splittings(0).map_err(|e| e.to_string())?.len();
            ensure(n == (1 << (d - 1)) - 1, || {
                format!("degree {d}: {n} splittings")
            })?;
        }
    }
    Ok("(4,3)=1, (6,3)=2, splittings 1, 3, 7, 15, 31 for d=2..6".into())
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=10);
    let p: f64 = rng.gen_range(0.2..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Greedy proper coloring in random edge order with random free colors;
/// edges with no free color stay uncolored.
fn random_coloring(g: &Graph, rng: &mut ChaCha8Rng) -> EdgeColoring {
    let k = g.max_degree().max(1) + rng.gen_range(0..=1);
    let mut c = EdgeColoring::empty(Arc::new(g.clone()), k).unwrap();
    let mut order: Vec<usize> = (0..g.size()).collect();
    order.shuffle(rng);
    for id in order {
        let e = g.edge(id);
        let free: Vec<_> = c
            .missing(e.lo())
            .intersection(c.missing(e.hi()))
            .iter()
            .collect();
        if let Some(&col) = free.choose(rng) {
            if rng.gen_bool(0.9) {
                c = c.assign(e, col).unwrap();
            }
        }
    }
    c
}

fn kempe_instance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let g = random_graph(rng);
    let c = random_coloring(&g, rng);
    let k = c.palette();
    if k < 2 {
        return Ok(());
    }
    let alpha = rng.gen_range(1..=k);
    let beta = loop {
        let b = rng.gen_range(1..=k);
        if b != alpha {
            break b;
        }
    };
    let v = rng.gen_range(0..g.order());
    let chain = c.kempe_chain(alpha, beta, v).map_err(|e| e.to_string())?;
    ensure(chain.is_well_formed(&c), || "malformed chain".into())?;
    if chain.shape() == ChainShape::Cycle {
        ensure(
            chain.edges().len() % 2 == 0 && chain.edges().len() >= 4,
            || "odd cycle chain".into(),
        )?;
    }
    let swapped = c.kempe_swap(&chain).map_err(|e| e.to_string())?;
    ensure(swapped.check_invariants(), || {
        "swap broke properness".into()
    })?;
    let again = swapped
        .kempe_chain(alpha, beta, v)
        .map_err(|e| e.to_string())?;
    let back = swapped.kempe_swap(&again).map_err(|e| e.to_string())?;
    ensure(back.to_text() == c.to_text(), || {
        "double swap is not the identity".into()
    })?;
    let chains: Vec<_> = (0..g.order())
        .map(|u| c.kempe_chain(alpha, beta, u).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for a in &chains {
        for b in &chains {
            let same = a.vertices() == b.vertices() && a.edges() == b.edges();
            let disjoint = a.vertices().iter().all(|x| !b.contains(*x));
            ensure(same || disjoint, || {
                "chains overlap without being identical".into()
            })?;
        }
    }
    Ok(())
}

fn kempe_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10_000 {
        kempe_instance(&mut rng).map_err(|e| format!("instance {i}: {e}"))?;
    }
    Ok("10000 seeded instances, 0 failures".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "solver agrees with the exhaustive oracle on connected graphs <= 7 vertices",
            oracle_equivalence,
        ),
        ("theorem sweep to m = 8 passes", theorem_sweep),
        ("conjecture sweep to m = 8 passes", conjecture_sweep),
        (
            "every split graph is overfull and Class 2",
            overfull_class_two,
        ),
        ("lemma suites to m = 6 report no violations", lemma_suites),
        ("spot values", spot_values),
        ("construction counts", construction_counts),
        ("Kempe-chain invariants", kempe_invariants),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
