//! Brute-force oracles shared by the integration and acceptance tests.
//! Nothing here calls the library's solver or canonical forms.

#![allow(dead_code)]

use std::collections::HashMap;

use chromindex::Graph;

/// Adjacency matrix as bitmasks.
pub fn masks(g: &Graph) -> Vec<u32> {
    let mut m = vec![0u32; g.order()];
    for e in g.edges() {
        m[e.lo()] |= 1 << e.hi();
        m[e.hi()] |= 1 << e.lo();
    }
    m
}

fn from_masks(m: &[u32]) -> Graph {
    let n = m.len();
    let edges = (0..n).flat_map(|i| {
        (i + 1..n)
            .filter(move |&j| m[i] >> j & 1 == 1)
            .map(move |j| (i, j))
    });
    Graph::new(n, edges).unwrap()
}

/// Plain backtracking isomorphism test that maps vertices in order and
/// checks adjacency to every earlier vertex.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (ma, mb) = (masks(a), masks(b));
    let n = a.order();
    let da: Vec<u32> = ma.iter().map(|x| x.count_ones()).collect();
    let db: Vec<u32> = mb.iter().map(|x| x.count_ones()).collect();
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        ma: &[u32],
        mb: &[u32],
        da: &[u32],
        db: &[u32],
        map: &mut Vec<usize>,
        used: u32,
    ) -> bool {
        if i == n {
            return true;
        }
        for j in 0..n {
            if used >> j & 1 == 1 || da[i] != db[j] {
                continue;
            }
            if (0..i).all(|k| (ma[i] >> k & 1) == (mb[j] >> map[k] & 1)) {
                map.push(j);
                if rec(i + 1, n, ma, mb, da, db, map, used | 1 << j) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(0, n, &ma, &mb, &da, &db, &mut Vec::new(), 0)
}

/// Cheap isomorphism invariant: sorted (degree, sorted neighbor degrees).
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

type Key = (usize, usize, Vec<(usize, Vec<usize>)>);

/// Isomorphism classes, one stored representative each.
#[derive(Default)]
pub struct Classes {
    buckets: HashMap<Key, Vec<Graph>>,
}

impl Classes {
    /// Returns true if `g` opened a new class.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = (g.order(), g.size(), invariant(&g));
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|h| isomorphic(h, &g)) {
            return false;
        }
        bucket.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.buckets.into_values().flatten().collect()
    }
}

/// Every graph on `n` vertices up to isomorphism, built by attaching a new
/// vertex in every possible way to every graph on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(1, []).unwrap()];
    for k in 2..=n {
        let mut classes = Classes::default();
        for g in &level {
            let base = masks(g);
            for attach in 0u32..1 << (k - 1) {
                let mut m = base.clone();
                m.push(attach);
                for (i, row) in m.iter_mut().enumerate().take(k - 1) {
                    if attach >> i & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                classes.insert(from_masks(&m));
            }
        }
        level = classes.into_graphs();
    }
    level
}

/// Connected graphs with `1 <= |E|` on at most `n` vertices, up to isomorphism.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (2..=n)
        .flat_map(all_graphs)
        .filter(|g| g.size() > 0 && connected(g))
        .collect()
}

pub fn connected(g: &Graph) -> bool {
    let m = masks(g);
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = m[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == g.order()
}

/// Inclusion–exclusion table for counting edge colorings: entry `X` is
/// the number of matchings inside edge subset `X`, signed by the parity of
/// the complement.
pub struct MatchingCovers {
    signed: Vec<(i128, bool)>,
}

impl MatchingCovers {
    /// Exact for up to 24 edges.
    pub fn new(g: &Graph) -> Self {
        let m = g.size();
        assert!(m <= 24);
        let es = g.edges();
        let mut a = vec![0i128; 1 << m];
        let mut cover = vec![0u32; 1 << m];
        a[0] = 1;
        for x in 1usize..1 << m {
            let low = x.trailing_zeros() as usize;
            let rest = x & (x - 1);
            let e = es[low];
            let bits = 1u32 << e.lo() | 1u32 << e.hi();
            cover[x] = cover[rest] | bits;
            a[x] = (a[rest] == 1 && cover[rest] & bits == 0) as i128;
        }
        // Zeta transform: sum over subsets.
        for bit in 0..m {
            for x in 0..1usize << m {
                if x >> bit & 1 == 1 {
                    a[x] += a[x ^ 1 << bit];
                }
            }
        }
        let full = (1usize << m) - 1;
        let signed = a
            .into_iter()
            .enumerate()
            .map(|(x, ax)| (ax, (full ^ x).count_ones() % 2 == 1))
            .collect();
        MatchingCovers { signed }
    }

    /// Ordered `k`-tuples of matchings whose union is `E(G)`; positive iff
    /// `G` is `k`-edge-colorable.
    pub fn count(&self, k: u32) -> i128 {
        self.signed
            .iter()
            .map(|&(ax, neg)| if neg { -ax.pow(k) } else { ax.pow(k) })
            .sum()
    }
}

pub fn matching_covers(g: &Graph, k: u32) -> i128 {
    MatchingCovers::new(g).count(k)
}

/// Least `k` with a `k`-edge-coloring. The search starts at `Δ`, since the
/// edges at a vertex of maximum degree need distinct colors.
pub fn oracle_chromatic_index(g: &Graph) -> usize {
    let t = MatchingCovers::new(g);
    (g.max_degree()..).find(|&k| t.count(k as u32) > 0).unwrap()
}

/// True iff `G` minus the edge at index `id` has a `k`-edge-coloring.
pub fn oracle_colorable_without(g: &Graph, id: usize, k: usize) -> bool {
    let keep = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != id)
        .map(|(_, e)| (e.lo(), e.hi()));
    let h = Graph::new(g.order(), keep).unwrap();
    h.size() == 0 || matching_covers(&h, k as u32) > 0
}

/// Every labeled `d`-regular graph on `m` vertices, edge by edge.
pub fn labeled_regular(m: usize, d: usize, each: &mut impl FnMut(&[u32])) {
    fn rec(
        pair: usize,
        pairs: &[(usize, usize)],
        d: usize,
        deg: &mut [usize],
        adj: &mut [u32],
        each: &mut impl FnMut(&[u32]),
    ) {
        if pair == pairs.len() {
            if deg.iter().all(|&x| x == d) {
                each(adj);
            }
            return;
        }
        let (i, j) = pairs[pair];
        // Vertex i is finished once all its pairs are decided.
        let last_for_i = pairs.get(pair + 1).is_none_or(|&(a, _)| a != i);
        if deg[i] < d && deg[j] < d {
            deg[i] += 1;
            deg[j] += 1;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            if !last_for_i || deg[i] == d {
                rec(pair + 1, pairs, d, deg, adj, each);
            }
            deg[i] -= 1;
            deg[j] -= 1;
            adj[i] &= !(1 << j);
            adj[j] &= !(1 << i);
        }
        if !last_for_i || deg[i] == d {
            rec(pair + 1, pairs, d, deg, adj, each);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    rec(0, &pairs, d, &mut vec![0; m], &mut vec![0; m], each);
}

/// Connected `d`-regular graphs on `m` vertices up to isomorphism.
pub fn regular_classes(m: usize, d: usize) -> Vec<Graph> {
    let mut classes = Classes::default();
    labeled_regular(m, d, &mut |adj| {
        let g = from_masks(adj);
        if connected(&g) {
            classes.insert(g);
        }
    });
    classes.into_graphs()
}
