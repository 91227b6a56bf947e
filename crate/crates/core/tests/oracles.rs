mod common;

use chromindex::canon::are_isomorphic;
use chromindex::chromatic::{chromatic_index, is_critical_edge, is_delta_critical, EdgeClass};
use chromindex::verifier::{enumerate_regular, EnumerationSpec};
use chromindex::{Graph, SplitSpec};

use common::*;

#[test]
fn graph_counts_match_known_values() {
    // Graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156.
    let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    // Connected ones with at least one edge on 2..=5 vertices: 1, 2, 6, 21.
    let connected: Vec<usize> = (2..=5)
        .map(|n| all_graphs(n).iter().filter(|g| connected(g)).count())
        .collect();
    assert_eq!(connected, [1, 2, 6, 21]);
}

#[test]
fn matching_cover_counts() {
    // C4 has 2 proper 2-edge-colorings; K3 has 3! = 6 proper 3-edge-colorings.
    assert_eq!(matching_covers(&Graph::cycle(4), 2), 2);
    assert_eq!(matching_covers(&Graph::complete(3), 3), 6);
    assert_eq!(matching_covers(&Graph::complete(3), 2), 0);
}

#[test]
fn chromatic_index_matches_oracle_up_to_six_vertices() {
    for g in connected_graphs_up_to(6) {
        let c = chromatic_index(&g).unwrap();
        assert_eq!(c.index, oracle_chromatic_index(&g), "{g:?}");
        assert!(c.witness.is_complete() && c.witness.check_invariants());
        assert!(c.witness.palette() as usize == c.index);
    }
}

#[test]
fn criticality_matches_oracle_up_to_five_vertices() {
    for g in connected_graphs_up_to(5) {
        let chi = oracle_chromatic_index(&g);
        let mut all = true;
        for (id, &e) in g.edges().iter().enumerate() {
            let expected = oracle_colorable_without(&g, id, chi - 1);
            all &= expected;
            assert_eq!(is_critical_edge(&g, e).unwrap(), expected, "{g:?} {e:?}");
        }
        let class2 = chi == g.max_degree() + 1;
        assert_eq!(is_delta_critical(&g).unwrap(), class2 && all, "{g:?}");
    }
}

#[test]
fn spot_values() {
    let c5 = Graph::cycle(5);
    let k4 = Graph::complete(4);
    let petersen = Graph::petersen();
    assert_eq!(oracle_chromatic_index(&c5), 3);
    assert_eq!(oracle_chromatic_index(&k4), 3);
    assert_eq!(oracle_chromatic_index(&petersen), 4);
    assert_eq!(chromatic_index(&c5).unwrap().index, 3);
    assert_eq!(chromatic_index(&k4).unwrap().class, EdgeClass::One);
    assert_eq!(chromatic_index(&petersen).unwrap().class, EdgeClass::Two);

    let split = k4
        .split_vertex(&SplitSpec::from_part_a(&k4, 3, &[0]).unwrap())
        .unwrap();
    assert_eq!(split.size(), 7);
    assert_eq!(oracle_chromatic_index(&split), 4);
    assert!((0..7).all(|id| oracle_colorable_without(&split, id, 3)));
    assert!(is_delta_critical(&split).unwrap());
}

#[test]
fn regular_enumeration_matches_oracle() {
    for m in [4, 6, 8] {
        for d in 2..m {
            if d * m % 2 == 1 {
                continue;
            }
            let oracle = regular_classes(m, d);
            let ours = enumerate_regular(&EnumerationSpec::new(m, d)).unwrap();
            assert_eq!(ours.len(), oracle.len(), "m={m} d={d}");
            for g in &ours {
                assert_eq!(oracle.iter().filter(|h| isomorphic(g, h)).count(), 1);
            }
            for (i, a) in ours.iter().enumerate() {
                for b in &ours[i + 1..] {
                    assert!(!are_isomorphic(a, b));
                }
            }
        }
    }
}

#[test]
fn known_regular_counts() {
    let count = |m, d| regular_classes(m, d).len();
    // Connected cubic graphs on 4, 6, 8 vertices.
    assert_eq!([count(4, 3), count(6, 3), count(8, 3)], [1, 2, 5]);
    // Connected 4-regular graphs on 8 vertices.
    assert_eq!(count(8, 4), 6);
}
