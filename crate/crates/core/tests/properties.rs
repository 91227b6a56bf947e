mod common;

use proptest::prelude::*;

use chromindex::canon::{canonical_form, canonical_labeling};
use chromindex::chromatic::vizing_color;
use chromindex::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use chromindex::kempe::ChainShape;
use chromindex::{Graph, SplitSpec};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A graph with a splittable vertex and a choice of side A.
fn split_case() -> impl Strategy<Value = (Graph, SplitSpec)> {
    graph(9)
        .prop_filter("needs a vertex of degree >= 2", |g| {
            (0..g.order()).any(|v| g.degree(v) >= 2)
        })
        .prop_flat_map(|g| {
            let vs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
            (Just(g), proptest::sample::select(vs), any::<u64>())
        })
        .prop_map(|(g, v, bits)| {
            let specs = g.enumerate_splittings(v).unwrap();
            let spec = specs[bits as usize % specs.len()].clone();
            (g, spec)
        })
}

proptest! {
    #[test]
    fn handshake(g in graph(12)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn split_then_contract_is_identity((g, spec) in split_case()) {
        let h = g.split_vertex(&spec).unwrap();
        prop_assert_eq!(h.order(), g.order() + 1);
        prop_assert_eq!(h.size(), g.size() + 1);
        prop_assert_eq!(h.degree(spec.vertex) + h.degree(g.order()), g.degree(spec.vertex) + 2);
        let back = h.contract_pair(spec.vertex, g.order()).unwrap();
        prop_assert!(common::isomorphic(&back, &g));
        prop_assert_eq!(back, g);
    }

    #[test]
    fn splitting_count(g in graph(9)) {
        for v in 0..g.order() {
            let d = g.degree(v);
            if d >= 2 {
                let specs = g.enumerate_splittings(v).unwrap();
                prop_assert_eq!(specs.len(), (1 << (d - 1)) - 1);
                for s in &specs {
                    prop_assert!(s.validate(&g).is_ok());
                }
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph(9).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let (form, placed) = canonical_labeling(&g);
        let mut to_position = vec![0; placed.len()];
        for (p, &v) in placed.iter().enumerate() {
            to_position[v] = p;
        }
        prop_assert_eq!(form.to_graph(), g.relabel(&to_position));
    }

    #[test]
    fn canonical_forms_separate_non_isomorphic(a in graph(6), b in graph(6)) {
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), common::isomorphic(&a, &b));
    }

    #[test]
    fn vizing_coloring_is_proper(g in graph(10)) {
        let c = vizing_color(&g);
        prop_assert!(c.is_complete());
        prop_assert!(c.check_invariants());
        prop_assert_eq!(c.palette() as usize, g.max_degree() + 1);
    }

    #[test]
    fn kempe_chains(g in graph(10), pick in any::<(u8, u8, usize)>()) {
        let c = vizing_color(&g);
        let k = c.palette();
        let alpha = 1 + pick.0 % k;
        let beta = 1 + (alpha + pick.1 % (k - 1).max(1)) % k;
        prop_assume!(alpha != beta);
        let v = pick.2 % g.order();
        let chain = c.kempe_chain(alpha, beta, v).unwrap();
        prop_assert!(chain.is_well_formed(&c));
        if chain.shape() == ChainShape::Cycle {
            prop_assert!(chain.edges().len().is_multiple_of(2));
        }
        let swapped = c.kempe_swap(&chain).unwrap();
        prop_assert!(swapped.check_invariants());
        let again = swapped.kempe_chain(alpha, beta, v).unwrap();
        prop_assert_eq!(swapped.kempe_swap(&again).unwrap().to_text(), c.to_text());
        for u in 0..g.order() {
            let other = c.kempe_chain(alpha, beta, u).unwrap();
            let same = other.vertices() == chain.vertices();
            let disjoint = other.vertices().iter().all(|x| !chain.contains(*x));
            prop_assert!(same || disjoint);
        }
    }

    #[test]
    fn split_regular_even_graph_is_overfull(k in 1usize..4, v in 0usize..8, bits in any::<u64>()) {
        // Circulant with jumps 1..=k on 8 vertices: 2k-regular.
        let n = 8;
        let edges = (0..n).flat_map(|i| (1..=k).map(move |j| (i, (i + j) % n)));
        let mut es: Vec<(usize, usize)> = edges.map(|(a, b)| (a.min(b), a.max(b))).collect();
        es.sort_unstable();
        es.dedup();
        let g = Graph::new(n, es).unwrap();
        let specs = g.enumerate_splittings(v).unwrap();
        let h = g.split_vertex(&specs[bits as usize % specs.len()]).unwrap();
        prop_assert!(h.is_overfull());
    }
}
