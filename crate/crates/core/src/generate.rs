//! Seeded random relations and exhaustive enumeration of small ones.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::relation::{Relation, UndirectedGraph};

/// Each ordered pair `(i, j)`, `i ≠ j`, is an arc with probability `p`;
/// with `loops`, each `(i, i)` as well.
pub fn random_relation(n: usize, p: f64, loops: bool, seed: u64) -> Relation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Relation::empty(n);
    for i in 0..n {
        for j in 0..n {
            if (i != j || loops) && rng.gen_bool(p) {
                r.insert(i, j);
            }
        }
    }
    r
}

/// Exactly `m` distinct loop-free arcs chosen uniformly.
///
/// Panics if `m > n(n-1)`.
pub fn random_relation_with_arcs(n: usize, m: usize, seed: u64) -> Relation {
    let slots = n * (n - 1);
    assert!(m <= slots, "{m} arcs do not fit in {n} vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Relation::empty(n);
    for idx in index::sample(&mut rng, slots, m) {
        let i = idx / (n - 1);
        let mut j = idx % (n - 1);
        if j >= i {
            j += 1;
        }
        r.insert(i, j);
    }
    r
}

/// Each pair `{u, v}` is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = UndirectedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every relation on `n` points, loop-free or not. There are `2^(n(n-1))`
/// respectively `2^(n²)` of them; `n` must keep that below `2^32`.
pub fn all_relations(n: usize, loops: bool) -> impl Iterator<Item = Relation> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| loops || i != j)
        .collect();
    assert!(cells.len() <= 32, "too many relations to enumerate");
    (0..1u64 << cells.len()).map(move |bits| {
        Relation::from_arcs(
            n,
            cells
                .iter()
                .enumerate()
                .filter(|(b, _)| bits >> b & 1 == 1)
                .map(|(_, &c)| c),
        )
    })
}
