//! Maximum transitive sub-relations and directed cuts.
//!
//! Exact answers come from enumeration and are guarded by budgets. The
//! polynomial side is the quarter approximation: a greedy bipartition of the
//! underlying graph keeps at least half the edges, and the majority direction
//! across it keeps at least a quarter of the non-loop arcs. One direction of a cut has
//! no directed path of length two, so it is transitive.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::relation::{Relation, UndirectedGraph};

pub const DEFAULT_ARC_BUDGET: usize = 22;
pub const DEFAULT_VERTEX_BUDGET: usize = 20;

/// Hard ceiling for the cut enumerators, which pack a partition into a `u64`.
pub(crate) const MAX_ENUMERATED_VERTICES: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

/// Ordered bipartition `(U, V)` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPartition {
    sides: Vec<Side>,
}

impl VertexPartition {
    pub fn new(sides: Vec<Side>) -> Self {
        VertexPartition { sides }
    }

    /// Partition of `n` vertices with the listed vertices in `U`, the rest in `V`.
    pub fn with_u(n: usize, u: &[usize]) -> Self {
        let mut sides = vec![Side::V; n];
        for &x in u {
            sides[x] = Side::U;
        }
        VertexPartition { sides }
    }

    /// Bit `v` of `mask` set means vertex `v` is in `V`.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        VertexPartition {
            sides: (0..n)
                .map(|v| if mask >> v & 1 == 1 { Side::V } else { Side::U })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn flip(&mut self, v: usize) {
        self.sides[v] = self.sides[v].flipped();
    }

    pub fn u_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.sides[v] == Side::U)
    }

    pub fn v_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.sides[v] == Side::V)
    }

    /// Edges of `g` with endpoints on opposite sides.
    pub fn cut_size(&self, g: &UndirectedGraph) -> usize {
        g.edges()
            .filter(|&(a, b)| self.sides[a] != self.sides[b])
            .count()
    }

    fn check_covers(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: self.n(),
            });
        }
        Ok(())
    }
}

/// A partition with its arc counts `e(U, V)` and `e(V, U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicutResult {
    pub partition: VertexPartition,
    pub forward: usize,
    pub backward: usize,
}

impl DicutResult {
    pub fn cut_total(&self) -> usize {
        self.forward + self.backward
    }
}

/// `e(U, V)` and `e(V, U)`. Loops and same-side arcs count in neither.
pub fn dicut_size(r: &Relation, p: &VertexPartition) -> Result<DicutResult> {
    p.check_covers(r.n())?;
    let (mut forward, mut backward) = (0, 0);
    for (i, j) in r.iter_arcs() {
        match (p.side(i), p.side(j)) {
            (Side::U, Side::V) => forward += 1,
            (Side::V, Side::U) => backward += 1,
            _ => {}
        }
    }
    Ok(DicutResult {
        partition: p.clone(),
        forward,
        backward,
    })
}

/// One pass in ascending vertex order; each vertex joins the side opposite
/// the majority of its already-placed neighbours, ties to `U`. Cuts at least
/// half the edges.
pub fn greedy_bipartition(g: &UndirectedGraph) -> VertexPartition {
    let n = g.n();
    let mut sides: Vec<Option<Side>> = vec![None; n];
    for v in 0..n {
        let (mut in_u, mut in_v) = (0usize, 0usize);
        for w in g.neighbors(v) {
            match sides[w] {
                Some(Side::U) => in_u += 1,
                Some(Side::V) => in_v += 1,
                None => {}
            }
        }
        sides[v] = Some(if in_v >= in_u { Side::U } else { Side::V });
    }
    VertexPartition::new(
        sides
            .into_iter()
            .map(|s| s.expect("every vertex placed"))
            .collect(),
    )
}

/// Majority direction across [`greedy_bipartition`] of the underlying graph;
/// ties keep the `U → V` arcs. No path of length two, and at least a quarter
/// of the non-loop arcs (loops never cross a cut).
pub fn quarter_approx(r: &Relation) -> Relation {
    let p = greedy_bipartition(&r.underlying_graph());
    let cut = dicut_size(r, &p).expect("partition built from r");
    let keep = if cut.forward >= cut.backward {
        (Side::U, Side::V)
    } else {
        (Side::V, Side::U)
    };
    Relation::from_arcs(
        r.n(),
        r.iter_arcs()
            .filter(|&(i, j)| (p.side(i), p.side(j)) == keep),
    )
}

/// The `U → V` arcs as a relation. Requires a triangle-free underlying graph,
/// where these arcs are exactly the candidates for a maximum transitive
/// sub-relation.
pub fn dicut_as_transitive(r: &Relation, p: &VertexPartition) -> Result<Relation> {
    p.check_covers(r.n())?;
    if let Some((a, b, c)) = r.underlying_graph().find_triangle() {
        return Err(Error::TriangleFound(a + 1, b + 1, c + 1));
    }
    Ok(Relation::from_arcs(
        r.n(),
        r.iter_arcs()
            .filter(|&(i, j)| p.side(i) == Side::U && p.side(j) == Side::V),
    ))
}

/// Largest transitive sub-relation by branch and bound over the arcs in
/// row-major order. Arcs are tried "in" before "out" and only strict
/// improvements replace the incumbent, so among optima the lexicographically
/// smallest arc set wins.
pub fn brute_force_mts(r: &Relation, arc_budget: usize) -> Result<Relation> {
    if r.arc_count() > arc_budget {
        return Err(Error::BudgetExceeded {
            what: "arc count",
            budget: arc_budget,
            actual: r.arc_count(),
        });
    }
    let arcs: Vec<(usize, usize)> = r.iter_arcs().collect();
    let mut search = MtsSearch {
        arcs: &arcs,
        chosen: Relation::empty(r.n()),
        allowed: r.clone(),
        best: None,
    };
    search.run(0);
    Ok(search.best.expect("the empty relation is always feasible"))
}

struct MtsSearch<'a> {
    arcs: &'a [(usize, usize)],
    chosen: Relation,
    /// `chosen` plus undecided arcs.
    allowed: Relation,
    best: Option<Relation>,
}

impl MtsSearch<'_> {
    fn run(&mut self, idx: usize) {
        let remaining = self.arcs.len() - idx;
        if let Some(best) = &self.best {
            if self.chosen.arc_count() + remaining <= best.arc_count() {
                return;
            }
        }
        if idx == self.arcs.len() {
            debug_assert!(self.chosen.is_transitive());
            self.best = Some(self.chosen.clone());
            return;
        }
        let (a, b) = self.arcs[idx];

        if self.can_include(a, b) {
            self.chosen.insert(a, b);
            self.run(idx + 1);
            self.chosen.remove(a, b);
        }
        if self.can_exclude(a, b) {
            self.allowed.remove(a, b);
            self.run(idx + 1);
            self.allowed.insert(a, b);
        }
    }

    /// Every path through the new arc must still be closable.
    fn can_include(&self, a: usize, b: usize) -> bool {
        let n = self.chosen.n();
        let after = |x: usize, y: usize| self.chosen.contains(x, y) || (x, y) == (a, b);
        // (a,b),(b,c) ⇒ (a,c)
        let forward_ok = (0..n).all(|c| !after(b, c) || self.allowed.contains(a, c));
        // (c,a),(a,b) ⇒ (c,b)
        let backward_ok = (0..n).all(|c| !after(c, a) || self.allowed.contains(c, b));
        forward_ok && backward_ok
    }

    /// No chosen path `a → x → c` may need `(a, c)`.
    fn can_exclude(&self, a: usize, c: usize) -> bool {
        !self
            .chosen
            .successors(a)
            .any(|x| self.chosen.contains(x, c))
    }
}

/// Calls `visit(mask, forward, backward)` for every partition in Gray-code
/// order; bit `v` of `mask` set means vertex `v ∈ V`. Vertices
/// `0..fixed` stay in `U`.
pub(crate) fn for_each_cut<F: FnMut(u64, usize, usize)>(r: &Relation, fixed: usize, mut visit: F) {
    let n = r.n();
    assert!(n <= MAX_ENUMERATED_VERTICES);
    let mut out = vec![0u64; n];
    let mut inc = vec![0u64; n];
    for (i, j) in r.iter_arcs() {
        if i != j {
            out[i] |= 1 << j;
            inc[j] |= 1 << i;
        }
    }
    let all: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let free = n - fixed.min(n);
    let (mut mask, mut forward, mut backward) = (0u64, 0usize, 0usize);
    visit(mask, forward, backward);
    for step in 1u64..(1u64 << free) {
        let v = fixed + step.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let in_v = mask & !bit;
        let in_u = all & !mask & !bit;
        // contributions of v's arcs while v sits in U ...
        let fwd_as_u = (out[v] & in_v).count_ones() as usize;
        let bwd_as_u = (inc[v] & in_v).count_ones() as usize;
        // ... and while it sits in V
        let fwd_as_v = (inc[v] & in_u).count_ones() as usize;
        let bwd_as_v = (out[v] & in_u).count_ones() as usize;
        if mask & bit == 0 {
            forward = forward + fwd_as_v - fwd_as_u;
            backward = backward + bwd_as_v - bwd_as_u;
        } else {
            forward = forward + fwd_as_u - fwd_as_v;
            backward = backward + bwd_as_u - bwd_as_v;
        }
        mask ^= bit;
        visit(mask, forward, backward);
    }
}

/// Maps a mask to the integer whose binary digits, most significant first,
/// are the side vector of vertices `0, 1, ..` (`U = 0`).
fn lex_key(mask: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - n)
    }
}

/// Exact maximum directed cut over all `2^n` partitions; ties go to the
/// lexicographically smallest side vector.
pub fn brute_force_max_dicut(r: &Relation, vertex_budget: usize) -> Result<DicutResult> {
    let n = r.n();
    let budget = vertex_budget.min(MAX_ENUMERATED_VERTICES);
    if n > budget {
        return Err(Error::BudgetExceeded {
            what: "vertex count",
            budget,
            actual: n,
        });
    }
    let mut best = (0usize, u64::MAX, 0u64, 0usize);
    for_each_cut(r, 0, |mask, forward, backward| {
        let key = lex_key(mask, n);
        if forward > best.0 || (forward == best.0 && key < best.1) {
            best = (forward, key, mask, backward);
        }
    });
    Ok(DicutResult {
        partition: VertexPartition::from_mask(n, best.2),
        forward: best.0,
        backward: best.3,
    })
}

/// Hill climbing on `e(U, V)` from a seeded uniform partition.
///
/// Each round applies the single-vertex flip with the largest gain (lowest
/// index on ties). When no single flip gains, the best two-vertex flip is
/// tried, which escapes the zero-gain plateaus single flips cannot leave
/// (an arc `(a, b)` with `a ∈ V`, `b ∈ U`, for instance). Stops when nothing
/// gains or after `max_rounds` moves.
pub fn local_search_dicut(r: &Relation, seed: u64, max_rounds: usize) -> Result<DicutResult> {
    if max_rounds == 0 {
        return Err(Error::InvalidParameter(
            "max_rounds must be at least 1".into(),
        ));
    }
    let n = r.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = VertexPartition::new(
        (0..n)
            .map(|_| if rng.gen_bool(0.5) { Side::V } else { Side::U })
            .collect(),
    );
    let out: Vec<Vec<usize>> = (0..n)
        .map(|v| r.successors(v).filter(|&w| w != v).collect())
        .collect();
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, succ) in out.iter().enumerate() {
        for &w in succ {
            inc[w].push(v);
        }
    }

    let gain = |p: &VertexPartition, v: usize| -> i64 {
        let to_v = |w: &usize| p.side(*w) == Side::V;
        let to_u = |w: &usize| p.side(*w) == Side::U;
        let as_u = out[v].iter().filter(|w| to_v(w)).count() as i64;
        let as_v = inc[v].iter().filter(|w| to_u(w)).count() as i64;
        match p.side(v) {
            Side::U => as_v - as_u,
            Side::V => as_u - as_v,
        }
    };

    for _ in 0..max_rounds {
        let gains: Vec<i64> = (0..n).map(|v| gain(&p, v)).collect();
        let (best_v, best_gain) =
            gains
                .iter()
                .copied()
                .enumerate()
                .fold(
                    (0, i64::MIN),
                    |acc, (v, g)| if g > acc.1 { (v, g) } else { acc },
                );
        if n > 0 && best_gain > 0 {
            p.flip(best_v);
            continue;
        }
        match best_pair(r, &p, &gains) {
            Some((a, b)) => {
                p.flip(a);
                p.flip(b);
            }
            None => break,
        }
    }
    dicut_size(r, &p)
}

/// First pair `(a, b)`, `a < b`, whose joint flip has the largest positive gain.
fn best_pair(r: &Relation, p: &VertexPartition, gains: &[i64]) -> Option<(usize, usize)> {
    let n = r.n();
    let counts = |sa: Side, sb: Side| (sa == Side::U && sb == Side::V) as i64;
    let mut best: Option<((usize, usize), i64)> = None;
    for a in 0..n {
        for b in a + 1..n {
            // single-flip gains already account for arcs between a and b as if
            // the other endpoint stayed put; correct those terms
            let (sa, sb) = (p.side(a), p.side(b));
            let (fa, fb) = (sa.flipped(), sb.flipped());
            let mut correction = 0i64;
            if r.contains(a, b) {
                correction += counts(fa, fb) - counts(fa, sb) - counts(sa, fb) + counts(sa, sb);
            }
            if r.contains(b, a) {
                correction += counts(fb, fa) - counts(fb, sa) - counts(sb, fa) + counts(sb, sa);
            }
            let g = gains[a] + gains[b] + correction;
            if g > 0 && best.is_none_or(|(_, bg)| g > bg) {
                best = Some(((a, b), g));
            }
        }
    }
    best.map(|(pair, _)| pair)
}
