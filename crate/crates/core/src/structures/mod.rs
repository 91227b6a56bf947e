//! Multi-fans, Kierstead paths, full-deficiency pairs and lemma checkers.

mod fan;
mod lemmas;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chromatic::ChromaticError;
use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{Edge, Vertex};
use crate::io::{from_graph6, ParseError};

pub use fan::{
    build_maximal_multifan, full_deficiency_pairs, h_configurations, h_configurations_on,
    kierstead_paths_of_length_three, validate_kierstead_path, validate_multifan, HConfiguration,
    KiersteadPath, MultiFan,
};
pub use lemmas::{
    check_adjacency_lemma, check_double_kierstead, check_full_deficiency, check_lemma_kierstead,
    check_lemma_multifan, LemmaChecker,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("structure does not belong to the coloring's graph: {0}")]
    ForeignStructure(String),
    #[error("base edge {0} is already colored")]
    EdgeColoredAlready(Edge),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("expected a path with {expected} edges, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("not an H-configuration: {0}")]
    MissingHEdge(String),
    #[error(transparent)]
    Chromatic(#[from] ChromaticError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("bad replay file: {0}")]
    Replay(String),
}

impl From<ParseError> for StructureError {
    fn from(e: ParseError) -> Self {
        StructureError::Replay(e.to_string())
    }
}

/// The statements the checkers evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Critical edge endpoints have many `Δ`-neighbors.
    Adjacency,
    /// Multi-fans are elementary and their ends are linked to the center.
    MultiFan,
    /// Length-three Kierstead paths.
    KiersteadPath,
    /// Degrees around a critical full-deficiency pair.
    FullDeficiency,
    /// Two Kierstead paths sharing `a, b, u` in an H-configuration.
    DoubleKierstead,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::Adjacency,
        Lemma::MultiFan,
        Lemma::KiersteadPath,
        Lemma::FullDeficiency,
        Lemma::DoubleKierstead,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::Adjacency => "adjacency",
            Lemma::MultiFan => "multi-fan",
            Lemma::KiersteadPath => "kierstead-path",
            Lemma::FullDeficiency => "full-deficiency",
            Lemma::DoubleKierstead => "double-kierstead",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| StructureError::Replay(format!("unknown lemma `{s}`")))
    }
}

/// Whether a checker confirmed the chromatic hypotheses itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preconditions {
    Verified,
    Assumed,
}

/// A failed conclusion, with everything needed to re-run the check.
///
/// `structure` is the vertex sequence the check was run on: the edge
/// `[x, y]`, the fan `[x, y1, ..., yp]`, the path `[y0, y1, y2, y3]`, the
/// pair plus offending vertex `[a, b, x]`, or `[a, b, u, x, y]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    pub graph6: String,
    pub coloring: Option<String>,
    pub structure: Vec<Vertex>,
    pub predicate: String,
    pub connected: bool,
    pub preconditions: Preconditions,
}

impl LemmaViolation {
    /// Line-oriented replay file; the coloring, if any, comes last.
    pub fn to_replay_text(&self) -> String {
        let structure: Vec<String> = self.structure.iter().map(|v| v.to_string()).collect();
        let mut out = format!(
            "lemma: {}\ngraph6: {}\nstructure: {}\nconnected: {}\npreconditions: {}\npredicate: {}\n",
            self.lemma,
            self.graph6,
            structure.join(" "),
            self.connected,
            match self.preconditions {
                Preconditions::Verified => "verified",
                Preconditions::Assumed => "assumed",
            },
            self.predicate,
        );
        if let Some(c) = &self.coloring {
            out.push_str("coloring:\n");
            out.push_str(c);
        }
        out
    }

    pub fn from_replay_text(text: &str) -> Result<Self, StructureError> {
        let bad = |m: &str| StructureError::Replay(m.to_string());
        let (head, coloring) = match text.split_once("coloring:\n") {
            Some((h, c)) => (h, Some(c.to_string())),
            None => (text, None),
        };
        let field = |key: &str| -> Result<String, StructureError> {
            head.lines()
                .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("missing `{key}`")))
        };
        let lemma = field("lemma")?.parse()?;
        let graph6 = field("graph6")?;
        let structure = field("structure")?
            .split_whitespace()
            .map(|v| {
                v.parse()
                    .map_err(|_| bad("structure must be vertex numbers"))
            })
            .collect::<Result<_, _>>()?;
        let connected = field("connected")?
            .parse()
            .map_err(|_| bad("connected must be true or false"))?;
        let preconditions = match field("preconditions")?.as_str() {
            "verified" => Preconditions::Verified,
            "assumed" => Preconditions::Assumed,
            other => return Err(bad(&format!("unknown preconditions `{other}`"))),
        };
        let predicate = field("predicate")?;
        Ok(LemmaViolation {
            lemma,
            graph6,
            coloring,
            structure,
            predicate,
            connected,
            preconditions,
        })
    }

    /// Re-runs the recorded check. A faithful record yields `Ok(Some(_))`
    /// with the same predicate.
    pub fn replay(&self) -> Result<Option<LemmaViolation>, StructureError> {
        let g = from_graph6(&self.graph6)?;
        let checker = match self.preconditions {
            Preconditions::Verified => LemmaChecker::new(&g)?,
            Preconditions::Assumed => LemmaChecker::assuming_preconditions(&g),
        };
        let coloring = || -> Result<EdgeColoring, StructureError> {
            let text = self
                .coloring
                .as_deref()
                .ok_or_else(|| StructureError::Replay("missing coloring".into()))?;
            Ok(EdgeColoring::from_text(g.clone(), text)?)
        };
        let s = &self.structure;
        let need = |n: usize| {
            if s.len() < n {
                Err(StructureError::Replay(format!(
                    "structure needs at least {n} vertices"
                )))
            } else {
                Ok(())
            }
        };
        match self.lemma {
            Lemma::Adjacency => {
                need(2)?;
                checker.adjacency(Edge::new(s[0], s[1]))
            }
            Lemma::MultiFan => {
                need(2)?;
                checker.multifan(Edge::new(s[0], s[1]), &coloring()?)
            }
            Lemma::KiersteadPath => checker.kierstead(&KiersteadPath::new(s.clone()), &coloring()?),
            Lemma::FullDeficiency => {
                need(2)?;
                checker.full_deficiency(s[0], s[1])
            }
            Lemma::DoubleKierstead => {
                need(5)?;
                let h = HConfiguration {
                    a: s[0],
                    b: s[1],
                    u: s[2],
                    x: s[3],
                    y: s[4],
                };
                checker.double_kierstead(&h, &coloring()?)
            }
        }
    }
}
