//! Maximal transitive sub-relations.
//!
//! Both algorithms visit arcs `(i, j)` with `i` ascending, then `j`
//! ascending, and for each arc that is still present run the `k` loop
//!
//! ```text
//! if k != j and a[i][k] == 0 { a[j][k] = 0 }
//! if k != i and a[k][j] == 0 { a[k][i] = 0 }
//! ```
//!
//! [`maximal_transitive_v1`] is the literal triple loop over a boolean
//! matrix. [`maximal_transitive_v2`] collects the successors of `i` once per
//! row and runs the `k` loop as word-wide operations on row and column
//! bitsets. Row `i` never changes while `i` is the current row, so the
//! snapshot is exact and both produce the same output and the same trace.

use crate::bits;
use crate::error::{Error, Result};
use crate::relation::{Arc, Relation};

/// Receives visit and deletion events from the maximal algorithms.
///
/// `()` discards everything and compiles to nothing, which is what the
/// benchmark path uses.
pub trait TraceSink {
    fn visit(&mut self, arc: Arc);
    fn delete(&mut self, arc: Arc, iteration: usize);
}

impl TraceSink for () {
    #[inline(always)]
    fn visit(&mut self, _: Arc) {}
    #[inline(always)]
    fn delete(&mut self, _: Arc, _: usize) {}
}

/// A deletion performed while the outer loop was on row `iteration`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub arc: Arc,
    pub iteration: usize,
}

/// Event log of one run.
///
/// An arc `(i, j)` is visited when the outer loops reach it and it is still
/// present. Loops `(i, i)` are recorded at position `j = i`: the `j != i`
/// guard skips them, but the skipped body would be a no-op and loops are never
/// deleted, so every surviving arc is visited exactly once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MaximalTrace {
    pub visited: Vec<Arc>,
    pub deleted: Vec<Deletion>,
}

impl TraceSink for MaximalTrace {
    fn visit(&mut self, arc: Arc) {
        self.visited.push(arc);
    }

    fn delete(&mut self, arc: Arc, iteration: usize) {
        self.deleted.push(Deletion { arc, iteration });
    }
}

impl MaximalTrace {
    /// Arcs that are both visited and deleted. Always empty for a correct run.
    pub fn visited_and_deleted(&self) -> Vec<Arc> {
        let deleted: std::collections::HashSet<Arc> = self.deleted.iter().map(|d| d.arc).collect();
        self.visited
            .iter()
            .copied()
            .filter(|a| deleted.contains(a))
            .collect()
    }

    /// Deletions of an arc leaving the current row. Always empty for a correct run.
    pub fn deletions_from_current_row(&self) -> Vec<Deletion> {
        self.deleted
            .iter()
            .copied()
            .filter(|d| d.arc.0 == d.iteration)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    V1,
    V2,
}

impl Algorithm {
    pub fn run(self, r: &Relation) -> (Relation, MaximalTrace) {
        match self {
            Algorithm::V1 => maximal_transitive_v1(r),
            Algorithm::V2 => maximal_transitive_v2(r),
        }
    }

    pub fn run_untraced(self, r: &Relation) -> Relation {
        match self {
            Algorithm::V1 => maximal_transitive_v1_with(r, &mut ()),
            Algorithm::V2 => maximal_transitive_v2_with(r, &mut ()),
        }
    }
}

pub fn maximal_transitive_v1(r: &Relation) -> (Relation, MaximalTrace) {
    let mut trace = MaximalTrace::default();
    let t = maximal_transitive_v1_with(r, &mut trace);
    (t, trace)
}

/// Triple loop on an `n × n` boolean matrix.
pub fn maximal_transitive_v1_with<S: TraceSink>(r: &Relation, sink: &mut S) -> Relation {
    let n = r.n();
    let mut a = vec![false; n * n];
    for (i, j) in r.iter_arcs() {
        a[i * n + j] = true;
    }

    for i in 0..n {
        for j in 0..n {
            if j == i {
                if a[i * n + i] {
                    sink.visit((i, i));
                }
                continue;
            }
            if !a[i * n + j] {
                continue;
            }
            sink.visit((i, j));
            for k in 0..n {
                if k != j && !a[i * n + k] && a[j * n + k] {
                    a[j * n + k] = false;
                    sink.delete((j, k), i);
                }
                if k != i && !a[k * n + j] && a[k * n + i] {
                    a[k * n + i] = false;
                    sink.delete((k, i), i);
                }
            }
        }
    }

    let mut t = Relation::empty(n);
    for (idx, _) in a.iter().enumerate().filter(|(_, &b)| b) {
        t.insert(idx / n, idx % n);
    }
    t
}

pub fn maximal_transitive_v2(r: &Relation) -> (Relation, MaximalTrace) {
    let mut trace = MaximalTrace::default();
    let t = maximal_transitive_v2_with(r, &mut trace);
    (t, trace)
}

/// Row-snapshot variant with word-parallel `k` loops.
///
/// For a visited arc `(i, j)` the two `k`-loop statements are
/// `row[j] &= row[i]` and `col[i] &= col[j]` (bit `i` of `col[i]` exempt).
/// Neither statement reads an entry the other writes, so each can be applied
/// as one bulk operation; the only entry both can clear is `(j, i)`.
pub fn maximal_transitive_v2_with<S: TraceSink>(r: &Relation, sink: &mut S) -> Relation {
    let n = r.n();
    let words = r.words_per_row();
    let mut rows: Vec<u64> = (0..n).flat_map(|i| r.row(i).iter().copied()).collect();
    let mut cols: Vec<u64> = r.column_rows().concat();
    let mut successors: Vec<usize> = Vec::with_capacity(n);
    let mut drop_row = vec![0u64; words];
    let mut drop_col = vec![0u64; words];

    for i in 0..n {
        successors.clear();
        successors.extend(bits::ones(&rows[i * words..(i + 1) * words]));
        let has_loop = bits::get(&rows[i * words..(i + 1) * words], i);
        let mut loop_pending = has_loop;

        for &j in &successors {
            if j == i {
                continue;
            }
            if loop_pending && j > i {
                sink.visit((i, i));
                loop_pending = false;
            }
            sink.visit((i, j));

            // Line 6: row j loses every k with a[i][k] == 0.
            for w in 0..words {
                drop_row[w] = rows[j * words + w] & !rows[i * words + w];
            }
            // Line 9: column i loses every k != i with a[k][j] == 0.
            for w in 0..words {
                drop_col[w] = cols[i * words + w] & !cols[j * words + w];
            }
            bits::clear(&mut drop_col, i);

            if bits::any(&drop_row) || bits::any(&drop_col) {
                emit_deletions(sink, i, j, &drop_row, &drop_col);
                for k in bits::ones(&drop_row) {
                    bits::clear(&mut rows[j * words..(j + 1) * words], k);
                    bits::clear(&mut cols[k * words..(k + 1) * words], j);
                }
                for k in bits::ones(&drop_col) {
                    bits::clear(&mut cols[i * words..(i + 1) * words], k);
                    bits::clear(&mut rows[k * words..(k + 1) * words], i);
                }
            }
        }
        if loop_pending {
            sink.visit((i, i));
        }
    }

    let mut t = Relation::empty(n);
    for i in 0..n {
        for k in bits::ones(&rows[i * words..(i + 1) * words]) {
            t.insert(i, k);
        }
    }
    t
}

/// Replays the bulk deletions for `(i, j)` in the order the scalar `k` loop
/// performs them. `(j, i)` can be in both masks; it is reported once, at the
/// smaller of the two `k` values that clear it.
fn emit_deletions<S: TraceSink>(
    sink: &mut S,
    i: usize,
    j: usize,
    drop_row: &[u64],
    drop_col: &[u64],
) {
    let mut ji_reported = false;
    for w in 0..drop_row.len() {
        let mut both = drop_row[w] | drop_col[w];
        while both != 0 {
            let t = both.trailing_zeros() as usize;
            both &= both - 1;
            let k = w * bits::WORD_BITS + t;
            if drop_row[w] >> t & 1 == 1 && !(k == i && ji_reported) {
                if k == i {
                    ji_reported = true;
                }
                sink.delete((j, k), i);
            }
            if drop_col[w] >> t & 1 == 1 && !(k == j && ji_reported) {
                if k == j {
                    ji_reported = true;
                }
                sink.delete((k, i), i);
            }
        }
    }
}

/// Checks the preconditions shared by the maximality oracle and
/// [`extend_to_maximal`].
fn check_candidate(host: &Relation, t: &Relation) -> Result<()> {
    if !t.is_subrelation(host)? {
        return Err(Error::NotContained);
    }
    if !t.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(())
}

/// Transitive closure of `t ∪ {(a, b)}` for transitive `t`.
///
/// Every new path runs `x ⇝ a → b ⇝ y`, so the closure adds exactly
/// `({a} ∪ pred(a)) × ({b} ∪ succ(b))`.
pub fn closure_with_arc(t: &Relation, (a, b): Arc) -> Relation {
    debug_assert!(t.is_transitive());
    let n = t.n();
    let mut out = t.clone();
    let mut targets: Vec<usize> = t.successors(b).collect();
    if !t.contains(b, b) {
        targets.push(b);
    }
    let sources = (0..n).filter(|&x| x == a || t.contains(x, a));
    for x in sources {
        for &y in &targets {
            out.insert(x, y);
        }
    }
    out
}

/// `t` is a transitive sub-relation of `host` that no arc of `host` can
/// extend: for each `e ∈ host \ t`, the closure of `t ∪ {e}` leaves `host`.
pub fn is_maximal_transitive(host: &Relation, t: &Relation) -> Result<bool> {
    check_candidate(host, t)?;
    Ok(host
        .iter_arcs()
        .filter(|&(i, j)| !t.contains(i, j))
        .all(|e| {
            !closure_with_arc(t, e)
                .is_subrelation(host)
                .expect("same size")
        }))
}

/// Grows a transitive `t ⊆ host` to a maximal one. Arcs of `host \ t` are
/// tried in row-major order; an arc is taken, together with the whole closure
/// it induces, whenever that closure stays inside `host`.
pub fn extend_to_maximal(host: &Relation, t: &Relation) -> Result<Relation> {
    check_candidate(host, t)?;
    let mut current = t.clone();
    for e in host.iter_arcs() {
        if current.contains(e.0, e.1) {
            continue;
        }
        let grown = closure_with_arc(&current, e);
        if grown.is_subrelation(host)? {
            current = grown;
        }
    }
    Ok(current)
}
