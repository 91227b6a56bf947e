//! Constructive `(Δ+1)`-edge-coloring by fan rotation (Misra–Gries).

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

/// Colors every edge of `g` with at most `Δ + 1` colors.
///
/// Edges are inserted in ascending order. Each insertion anchors a maximal
/// fan at the endpoint of larger degree (smaller label on ties), flips one
/// two-colored path at the anchor, and rotates a prefix of the fan.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let k = (g.max_degree() + 1).max(1);
    let mut c = EdgeColoring::empty(g.clone(), k).expect("palette within range");
    for id in 0..g.size() {
        insert_edge(&mut c, id);
    }
    debug_assert!(c.check_invariants());
    c.restamp()
}

fn fan_color(c: &EdgeColoring, x: Vertex, y: Vertex) -> Option<Color> {
    c.color_of(x, y)
}

fn insert_edge(c: &mut EdgeColoring, id: EdgeId) {
    let g = c.host_arc().clone();
    let e = g.edge(id);
    let (u, v) = e.endpoints();
    let (x, y) = if g.degree(v) > g.degree(u) {
        (v, u)
    } else {
        (u, v)
    };

    // Maximal fan at x starting from the uncolored edge xy.
    let mut fan = vec![y];
    loop {
        let last = *fan.last().unwrap();
        let free = c.missing(last);
        let next = g.neighbors(x).iter().copied().find(|w| {
            !fan.contains(w) && fan_color(c, x, *w).is_some_and(|col| free.contains(col))
        });
        match next {
            Some(w) => fan.push(w),
            None => break,
        }
    }

    let alpha = c.missing(x).min().expect("anchor has a free color");
    let beta = c
        .missing(*fan.last().unwrap())
        .min()
        .expect("fan tip has a free color");

    if alpha != beta {
        // alpha is free at x, so x ends its (beta, alpha)-chain.
        let chain = c.kempe_chain(beta, alpha, x).expect("distinct colors");
        c.swap_on_edges_mut(chain.edges(), beta, alpha);
    }

    // First fan vertex where beta is free and the prefix is still a fan.
    let prefix_ok = |c: &EdgeColoring, upto: usize| {
        (1..=upto)
            .all(|j| fan_color(c, x, fan[j]).is_some_and(|col| c.missing(fan[j - 1]).contains(col)))
    };
    let w = (0..fan.len())
        .find(|&i| c.missing(fan[i]).contains(beta) && prefix_ok(c, i))
        .expect("fan rotation target exists");

    let shifted: Vec<Color> = (1..=w)
        .map(|j| fan_color(c, x, fan[j]).expect("fan edge colored"))
        .collect();
    for &f in &fan[1..=w] {
        c.uncolor_mut(g.edge_id(x, f).unwrap());
    }
    for (j, &col) in shifted.iter().enumerate() {
        c.assign_mut(g.edge_id(x, fan[j]).unwrap(), col)
            .expect("rotation keeps the coloring proper");
    }
    c.assign_mut(g.edge_id(x, fan[w]).unwrap(), beta)
        .expect("beta free at both ends after the flip");
}
