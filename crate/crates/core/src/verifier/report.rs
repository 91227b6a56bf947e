//! Plain-text rendering of reports.

use std::fmt::{self, Write};

use super::{Mode, Outcome, RangeTag, Verdict, VerificationReport, Violation};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Incomplete => "INCOMPLETE",
        })
    }
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s).expect("writing to a String");
        s
    }

    fn write_text(&self, s: &mut String) -> fmt::Result {
        let c = &self.counts;
        writeln!(s, "mode: {}", self.mode.name())?;
        writeln!(s, "base orders: even m in 4..={}", self.m_max)?;
        if let (Some(seed), Some(samples)) = (self.seed, self.samples) {
            writeln!(s, "seed: {seed}  samples: {samples}")?;
        }
        if let Some(b) = self.budget_nodes {
            writeln!(s, "search budget: {b} nodes")?;
        }
        writeln!(s, "verdict: {}", self.verdict)?;
        writeln!(s)?;
        writeln!(
            s,
            "base graphs: {} generated, {} Class 1, {} Class 2, {} undecided",
            c.base_graphs, c.class1, c.class2, c.undecided_bases
        )?;
        writeln!(
            s,
            "splittings: {} enumerated, {} split graphs after isomorph rejection",
            c.splittings_enumerated, c.split_graphs_tested
        )?;
        if self.mode != Mode::Lemmas {
            let t = c.split_graphs_tested;
            writeln!(
                s,
                "overfull: {}/{t}  Class 2: {}/{t}  Δ-critical: {}/{t}",
                c.overfull, c.class_two, c.delta_critical
            )?;
            writeln!(
                s,
                "THEOREM: {}/{} passed  BEYOND-THEOREM: {}/{} passed",
                c.theorem_passed,
                c.theorem_instances,
                c.beyond_theorem_passed,
                c.beyond_theorem_instances
            )?;
            if c.base_order_only_instances > 0 {
                writeln!(
                    s,
                    "BASE-ORDER-ONLY (Δ > m/3 but not Δ > n/3, outside the verdict): {}/{} passed",
                    c.base_order_only_passed, c.base_order_only_instances
                )?;
            }
        }

        writeln!(s)?;
        writeln!(s, "degree classes (n = m + 1):")?;
        writeln!(
            s,
            "  {:>3} {:>3} {:>12} {:>10} {:>10} {:>9} {:>7} {:>7} {:>9}",
            "m", "Δ", "Δ>=(2n-4)/3", "Δ>n/3", "Δ>m/3", "generated", "class1", "class2", "undecided"
        )?;
        for d in &self.degree_classes {
            writeln!(
                s,
                "  {:>3} {:>3} {:>12} {:>10} {:>10} {:>9} {:>7} {:>7} {:>9}",
                d.order,
                d.delta,
                yes(d.thresholds.theorem),
                yes(d.thresholds.conjecture_split_order),
                yes(d.thresholds.conjecture_base_order),
                d.generated,
                d.class1,
                d.class2,
                d.undecided
            )?;
        }

        if !self.instances.is_empty() {
            writeln!(s)?;
            writeln!(s, "split graphs:")?;
            for i in &self.instances {
                let tag = match i.tag {
                    RangeTag::Theorem => "THEOREM",
                    RangeTag::BeyondTheorem => "BEYOND-THEOREM",
                    RangeTag::BaseOrderOnly => "BASE-ORDER-ONLY",
                };
                let outcome = match i.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Undecided => "undecided",
                };
                write!(
                    s,
                    "  m={} Δ={} base={} split={} x{} -> {} {tag} overfull={} class2={} critical={} {outcome}",
                    i.thresholds.base_order,
                    i.thresholds.delta,
                    i.base_graph6,
                    i.split,
                    i.multiplicity,
                    i.split_graph6,
                    yes(i.overfull),
                    opt(i.class_two),
                    opt(i.delta_critical),
                )?;
                if let Some(ms) = i.millis {
                    write!(s, " {ms}ms")?;
                }
                writeln!(s)?;
            }
        }

        if let Some(l) = &self.lemmas {
            writeln!(s)?;
            writeln!(s, "lemma checks over {} split graphs:", l.graphs)?;
            for t in &l.tallies {
                writeln!(
                    s,
                    "  {:<17} {:>10} checks {:>4} violations",
                    t.lemma.id(),
                    t.checks,
                    t.violations
                )?;
            }
            writeln!(s, "coloring universes:")?;
            for r in &l.runs {
                writeln!(
                    s,
                    "  {} edge {}-{} orbit={}{} critical={} {} colorings={} fan={} path={} h={}",
                    r.split_graph6,
                    r.edge.lo(),
                    r.edge.hi(),
                    r.orbit,
                    if r.split_pair { " split-pair" } else { "" },
                    opt(r.critical),
                    if r.exhaustive {
                        "exhaustive"
                    } else {
                        "sampled"
                    },
                    r.colorings,
                    r.multi_fan_checks,
                    r.kierstead_checks,
                    r.double_kierstead_checks
                )?;
            }
        }

        writeln!(s)?;
        if self.violations.is_empty() {
            writeln!(s, "violations: none")?;
        } else {
            writeln!(s, "violations: {}", self.violations.len())?;
            write_violations(s, &self.violations)?;
        }
        if !self.base_order_findings.is_empty() {
            writeln!(
                s,
                "base-order-only findings (not counted in the verdict): {}",
                self.base_order_findings.len()
            )?;
            write_violations(s, &self.base_order_findings)?;
        }
        if !self.undecided.is_empty() {
            writeln!(s, "undecided: {}", self.undecided.len())?;
            for u in &self.undecided {
                writeln!(s, "  {u}")?;
            }
        }
        if let Some(t) = &self.timings {
            writeln!(
                s,
                "timings: enumerate {}ms, split {}ms, check {}ms, total {}ms",
                t.enumerate_ms, t.split_ms, t.check_ms, t.total_ms
            )?;
        }
        Ok(())
    }
}

fn write_violations(s: &mut String, vs: &[Violation]) -> fmt::Result {
    for v in vs {
        match v {
            Violation::NotOverfull { split_graph6 } => {
                writeln!(s, "  {split_graph6}: not overfull")?
            }
            Violation::NotClassTwo { split_graph6 } => writeln!(s, "  {split_graph6}: Class 1")?,
            Violation::NotFullDeficiency { split_graph6, pair } => writeln!(
                s,
                "  {split_graph6}: split pair {}-{} is not full-deficiency",
                pair.0, pair.1
            )?,
            Violation::NotDeltaCritical {
                split_graph6,
                non_critical_edges,
            } => {
                let es: Vec<String> = non_critical_edges
                    .iter()
                    .map(|e| format!("{}-{}", e.lo(), e.hi()))
                    .collect();
                writeln!(s, "  {split_graph6}: non-critical edges {}", es.join(" "))?
            }
            Violation::Lemma(v) => writeln!(
                s,
                "  {}: {} on {:?}: {}",
                v.graph6, v.lemma, v.structure, v.predicate
            )?,
        }
    }
    Ok(())
}
