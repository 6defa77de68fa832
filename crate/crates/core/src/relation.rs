//! Binary relations on `{0, .., n-1}` stored as dense bit matrices, plus the
//! underlying undirected graph and the basic predicates over both.
//!
//! Vertices are 0-based throughout the Rust API; the text formats in
//! [`crate::format`] use 1-based labels.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

pub type Arc = (usize, usize);

/// A binary relation on `n` points. Row `i` holds the successors of `i`.
/// Loops are allowed and count towards [`Relation::arc_count`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words: usize,
    data: Vec<u64>,
    m: usize,
}

impl Relation {
    /// The empty relation on `n` points.
    ///
    /// Panics if `n == 0`.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "a relation needs at least one vertex");
        let words = bits::words_for(n);
        Relation {
            n,
            words,
            data: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a relation from 0-based arcs; duplicates collapse.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_arcs<I: IntoIterator<Item = Arc>>(n: usize, arcs: I) -> Self {
        let mut r = Relation::empty(n);
        for (i, j) in arcs {
            r.insert(i, j);
        }
        r
    }

    /// The relation containing every pair, loops included.
    pub fn full(n: usize) -> Self {
        Relation::from_arcs(n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs, loops included.
    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Number of arcs `(i, i)`.
    pub fn loop_count(&self) -> usize {
        (0..self.n).filter(|&i| bits::get(self.row(i), i)).count()
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        assert!(j < self.n, "vertex {j} out of range for n = {}", self.n);
        bits::get(self.row(i), j)
    }

    /// Adds `(i, j)`; returns whether it was absent.
    pub fn insert(&mut self, i: usize, j: usize) -> bool {
        assert!(j < self.n, "vertex {j} out of range for n = {}", self.n);
        if bits::get(self.row(i), j) {
            return false;
        }
        bits::set(self.row_mut(i), j);
        self.m += 1;
        true
    }

    /// Removes `(i, j)`; returns whether it was present.
    pub fn remove(&mut self, i: usize, j: usize) -> bool {
        assert!(j < self.n, "vertex {j} out of range for n = {}", self.n);
        if !bits::get(self.row(i), j) {
            return false;
        }
        bits::clear(self.row_mut(i), j);
        self.m -= 1;
        true
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    /// Successors of `i` in ascending order.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(i))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        bits::count(self.row(i))
    }

    /// Arcs in row-major order.
    pub fn iter_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    pub fn arcs(&self) -> ArcList {
        ArcList(self.iter_arcs().collect())
    }

    /// The transpose, as row bitsets: `columns()[j]` has bit `i` set iff `(i, j)` is an arc.
    pub(crate) fn column_rows(&self) -> Vec<Vec<u64>> {
        let mut cols = vec![vec![0u64; self.words]; self.n];
        for (i, j) in self.iter_arcs() {
            bits::set(&mut cols[j], i);
        }
        cols
    }

    /// `(a,b), (b,c) ∈ ρ ⇒ (a,c) ∈ ρ` for all `a, b, c`, not necessarily distinct.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|a| {
            self.successors(a)
                .all(|b| bits::is_subset(self.row(b), self.row(a)))
        })
    }

    /// Smallest transitive relation containing `self` (reachability by
    /// nonempty paths; `(i, i)` appears only for `i` on a cycle).
    pub fn transitive_closure(&self) -> Relation {
        let mut c = self.clone();
        let mut pivot = vec![0u64; self.words];
        for k in 0..self.n {
            pivot.copy_from_slice(c.row(k));
            for i in 0..self.n {
                if bits::get(c.row(i), k) {
                    for (dst, src) in c.row_mut(i).iter_mut().zip(&pivot) {
                        *dst |= src;
                    }
                }
            }
        }
        c.recount();
        c
    }

    /// Every arc of `self` is an arc of `other`.
    pub fn is_subrelation(&self, other: &Relation) -> Result<bool> {
        self.check_same_size(other)?;
        Ok(bits::is_subset(&self.data, &other.data))
    }

    pub(crate) fn check_same_size(&self, other: &Relation) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Arcs of `self` that are not arcs of `other`, row-major.
    pub fn difference(&self, other: &Relation) -> Result<ArcList> {
        self.check_same_size(other)?;
        Ok(ArcList(
            self.iter_arcs()
                .filter(|&(i, j)| !other.contains(i, j))
                .collect(),
        ))
    }

    /// Forgets directions and drops loops.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.n);
        for (i, j) in self.iter_arcs() {
            if i != j {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Some `a, b, c` (not necessarily distinct) with `(a,b)` and `(b,c)` both arcs.
    pub fn has_path_length_two(&self) -> bool {
        let mut has_in = vec![0u64; self.words];
        for i in 0..self.n {
            for (acc, w) in has_in.iter_mut().zip(self.row(i)) {
                *acc |= w;
            }
        }
        (0..self.n).any(|b| bits::get(&has_in, b) && bits::any(self.row(b)))
    }

    fn recount(&mut self) {
        self.m = bits::count(&self.data);
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, ", self.n)?;
        f.debug_set().entries(self.iter_arcs()).finish()?;
        write!(f, ")")
    }
}

/// Ordered arc sequence, the interchange form for files and tests.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArcList(pub Vec<Arc>);

impl ArcList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Arc> {
        self.0.iter()
    }

    pub fn to_relation(&self, n: usize) -> Relation {
        Relation::from_arcs(n, self.0.iter().copied())
    }
}

impl From<Vec<Arc>> for ArcList {
    fn from(arcs: Vec<Arc>) -> Self {
        ArcList(arcs)
    }
}

/// Simple undirected graph: no loops, each edge stored once as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        UndirectedGraph {
            n,
            words,
            adj: vec![0; n * words],
            m: 0,
        }
    }

    /// Panics on loops or endpoints out of range; duplicates collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete bipartite graph with sides `{0..left}` and `{left..left+right}`.
    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        UndirectedGraph::from_edges(
            left + right,
            (0..left).flat_map(|u| (left..left + right).map(move |v| (u, v))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "undirected graphs carry no loops");
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if self.has_edge(u, v) {
            return false;
        }
        bits::set(&mut self.adj[u * self.words..(u + 1) * self.words], v);
        bits::set(&mut self.adj[v * self.words..(v + 1) * self.words], u);
        self.m += 1;
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.neighbor_row(u), v)
    }

    fn neighbor_row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.neighbor_row(u))
    }

    /// Edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Lexicographically first triangle `(a, b, c)` with `a < b < c`.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        self.edges().find_map(|(a, b)| {
            self.neighbors(b)
                .find(|&c| c > b && self.has_edge(a, c))
                .map(|c| (a, b, c))
        })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(a, b)| !bits::intersects(self.neighbor_row(a), self.neighbor_row(b)))
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UndirectedGraph(n={}, ", self.n)?;
        f.debug_set().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
