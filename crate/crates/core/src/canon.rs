//! Canonical forms of small graphs (order <= 64).
//!
//! Vertices are first partitioned by iterated degree refinement. The form is
//! the lexicographically smallest upper-triangle adjacency string over every
//! labeling that lays the cells out in refinement order; labelings are
//! explored by branch and bound on the string prefix.

use crate::graph::{EdgeId, Graph, Vertex};

/// Canonical adjacency string, one word per column `j` holding the bits
/// `adj(i, j)` for `i < j`, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    columns: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.order {
            for i in 0..j {
                if self.columns[j] >> (j - 1 - i) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.order, edges).expect("canonical string encodes a simple graph")
    }
}

/// Refines the degree partition until stable. Returns a color per vertex;
/// colors are ranks, so equal colors across isomorphic graphs mean the same.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        // Normalize degrees to ranks.
        color
            .iter_mut()
            .for_each(|x| *x = c.binary_search(x).unwrap());
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort_unstable();
        uniq.dedup();
        for v in 0..n {
            color[v] = uniq.binary_search(&sigs[v]).unwrap();
        }
        if uniq.len() == classes {
            return color;
        }
        classes = uniq.len();
    }
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    /// Vertex set allowed at each position.
    allowed: Vec<u64>,
    placed: Vec<Vertex>,
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
    best_labelings: Vec<Vec<Vertex>>,
    collect: bool,
}

impl Search {
    /// Returns true if the best string was replaced somewhere below.
    fn rec(&mut self, p: usize, used: u64, mut strictly_less: bool) -> bool {
        if p == self.n {
            if strictly_less || self.best.is_none() {
                self.best = Some(self.cols.clone());
                self.best_labelings.clear();
                self.best_labelings.push(self.placed.clone());
                return true;
            }
            if self.collect {
                self.best_labelings.push(self.placed.clone());
            }
            return false;
        }
        let mut updated = false;
        let mut cand = self.allowed[p] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut col = 0u64;
            for i in 0..p {
                col = (col << 1) | (self.adj[v] >> self.placed[i] & 1);
            }
            let mut child_less = strictly_less || self.best.is_none();
            if !child_less {
                let b = self.best.as_ref().unwrap()[p];
                if col > b {
                    continue;
                }
                child_less = col < b;
            }
            self.cols[p] = col;
            self.placed[p] = v;
            if self.rec(p + 1, used | 1 << v, child_less) {
                updated = true;
                // This node's prefix is now the best prefix.
                strictly_less = false;
            }
        }
        updated
    }
}

fn run(g: &Graph, collect: bool) -> Search {
    let n = g.order();
    assert!(n <= 64, "canonical forms support at most 64 vertices");
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let color = refined_colors(g);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    let allowed = order
        .iter()
        .map(|&v| {
            (0..n)
                .filter(|&w| color[w] == color[v])
                .fold(0u64, |m, w| m | 1 << w)
        })
        .collect();
    let mut s = Search {
        n,
        adj,
        allowed,
        placed: vec![0; n],
        cols: vec![0; n],
        best: None,
        best_labelings: Vec::new(),
        collect,
    };
    s.rec(0, 0, false);
    s
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let s = run(g, false);
    CanonicalForm {
        order: g.order(),
        columns: s.best.unwrap_or_default(),
    }
}

/// Canonical form plus a labeling realizing it: `labeling[p]` is the
/// original vertex placed at canonical position `p`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<Vertex>) {
    let s = run(g, false);
    let labeling = s.best_labelings.into_iter().next().unwrap_or_default();
    (
        CanonicalForm {
            order: g.order(),
            columns: s.best.unwrap_or_default(),
        },
        labeling,
    )
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Every automorphism, as a map `v -> image`.
pub fn automorphisms(g: &Graph) -> Vec<Vec<Vertex>> {
    let s = run(g, true);
    let Some(first) = s.best_labelings.first() else {
        return vec![vec![]];
    };
    s.best_labelings
        .iter()
        .map(|lab| {
            let mut image = vec![0; g.order()];
            for (p, &v) in first.iter().enumerate() {
                image[v] = lab[p];
            }
            image
        })
        .collect()
}

/// Edge orbits under the automorphism group, each sorted, ordered by their
/// smallest edge id.
pub fn edge_orbits(g: &Graph) -> Vec<Vec<EdgeId>> {
    let auts = automorphisms(g);
    let mut orbit_of = vec![usize::MAX; g.size()];
    let mut orbits: Vec<Vec<EdgeId>> = Vec::new();
    for id in 0..g.size() {
        if orbit_of[id] != usize::MAX {
            continue;
        }
        let e = g.edge(id);
        let mut members: Vec<EdgeId> = auts
            .iter()
            .map(|a| {
                g.edge_id(a[e.lo()], a[e.hi()])
                    .expect("automorphism maps edges")
            })
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            orbit_of[m] = orbits.len();
        }
        orbits.push(members);
    }
    orbits
}
