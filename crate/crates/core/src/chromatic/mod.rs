//! Chromatic index, Class 1 / Class 2 classification and criticality.

mod search;
mod vizing;

use thiserror::Error;

pub use search::{Budget, ColoringSearch, DEFAULT_LARGE_BUDGET};
pub use vizing::vizing_color;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("search gave up after {nodes} nodes")]
    SearchLimitExceeded { nodes: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum EdgeClass {
    One,
    Two,
}

impl EdgeClass {
    pub fn number(self) -> u8 {
        match self {
            EdgeClass::One => 1,
            EdgeClass::Two => 2,
        }
    }
}

/// `χ′(G)` with its class and a witness coloring using exactly that many
/// colors.
#[derive(Clone, Debug)]
pub struct Classification {
    pub index: usize,
    pub class: EdgeClass,
    pub witness: EdgeColoring,
}

fn to_coloring(g: &Graph, k: usize, colors: &[Color]) -> EdgeColoring {
    let opt: Vec<Option<Color>> = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
    EdgeColoring::from_colors(g.clone(), k, &opt).expect("search returns proper colorings")
}

/// A proper `Δ(G)`-edge-coloring if one exists.
///
/// Overfull graphs are refuted without searching.
pub fn delta_colorable(g: &Graph) -> Result<Option<EdgeColoring>, ChromaticError> {
    delta_colorable_with(g, Budget::default_for(g))
}

pub fn delta_colorable_with(
    g: &Graph,
    budget: Budget,
) -> Result<Option<EdgeColoring>, ChromaticError> {
    if g.size() == 0 {
        return Err(ChromaticError::NoEdges);
    }
    if g.is_overfull() {
        return Ok(None);
    }
    let delta = g.max_degree();
    let found = ColoringSearch::new(g, delta as Color)
        .budget(budget)
        .find_one()?;
    Ok(found.map(|colors| to_coloring(g, delta, &colors)))
}

pub fn chromatic_index(g: &Graph) -> Result<Classification, ChromaticError> {
    chromatic_index_with(g, Budget::default_for(g))
}

pub fn chromatic_index_with(g: &Graph, budget: Budget) -> Result<Classification, ChromaticError> {
    let delta = g.max_degree();
    Ok(match delta_colorable_with(g, budget)? {
        Some(witness) => Classification {
            index: delta,
            class: EdgeClass::One,
            witness,
        },
        None => Classification {
            index: delta + 1,
            class: EdgeClass::Two,
            witness: vizing_color(g),
        },
    })
}

/// True iff `χ′(G − e) < χ′(G)`.
pub fn is_critical_edge(g: &Graph, e: Edge) -> Result<bool, ChromaticError> {
    is_critical_edge_with(g, e, Budget::default_for(g))
}

pub fn is_critical_edge_with(g: &Graph, e: Edge, budget: Budget) -> Result<bool, ChromaticError> {
    let id = g
        .edge_id(e.lo(), e.hi())
        .ok_or(ChromaticError::NotAnEdge(e.lo(), e.hi()))?;
    let full = chromatic_index_with(g, budget)?.index;
    if g.size() == 1 {
        return Ok(true);
    }
    // χ′(G − e) < χ′(G) iff G − e has a (χ′(G) − 1)-coloring.
    let k = full - 1;
    let reduced = g.without_edge(e.lo(), e.hi()).expect("edge exists");
    if k < reduced.max_degree() {
        return Ok(false);
    }
    let found = ColoringSearch::new(g, k as Color)
        .skip_edge(id)
        .budget(budget)
        .find_one()?;
    Ok(found.is_some())
}

/// Class 2 and every edge critical.
pub fn is_delta_critical(g: &Graph) -> Result<bool, ChromaticError> {
    is_delta_critical_with(g, Budget::default_for(g))
}

pub fn is_delta_critical_with(g: &Graph, budget: Budget) -> Result<bool, ChromaticError> {
    let class = chromatic_index_with(g, budget)?;
    if class.class == EdgeClass::One {
        return Ok(false);
    }
    let delta = g.max_degree() as Color;
    for id in 0..g.size() {
        // Class 2, so e is critical iff G − e is Δ(G)-colorable.
        let found = ColoringSearch::new(g, delta)
            .skip_edge(id)
            .budget(budget)
            .find_one()?;
        if found.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
