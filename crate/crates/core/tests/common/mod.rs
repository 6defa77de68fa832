//! Reference implementations used only by tests. Each one follows the
//! definition directly and shares no code path with the library routine it
//! checks.
#![allow(dead_code)]

use maxtrans::cnf::CnfFormula;
use maxtrans::Relation;

/// Relation from 1-based arcs.
pub fn rel(n: usize, arcs: &[(usize, usize)]) -> Relation {
    Relation::from_arcs(n, arcs.iter().map(|&(i, j)| (i - 1, j - 1)))
}

pub fn matrix(r: &Relation) -> Vec<Vec<bool>> {
    let n = r.n();
    (0..n)
        .map(|i| (0..n).map(|j| r.contains(i, j)).collect())
        .collect()
}

pub fn from_matrix(a: &[Vec<bool>]) -> Relation {
    let n = a.len();
    Relation::from_arcs(
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j]),
    )
}

pub fn naive_is_transitive(r: &Relation) -> bool {
    let a = matrix(r);
    let n = a.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a[x][y] && a[y][z] && !a[x][z] {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure by repeated squaring `A ← A ∨ A·A` until nothing changes.
pub fn naive_closure(r: &Relation) -> Relation {
    let mut a = matrix(r);
    let n = a.len();
    loop {
        let mut next = a.clone();
        for i in 0..n {
            for j in 0..n {
                if !next[i][j] {
                    next[i][j] = (0..n).any(|k| a[i][k] && a[k][j]);
                }
            }
        }
        if next == a {
            return from_matrix(&a);
        }
        a = next;
    }
}

fn subset_of(r: &Relation, arcs: &[(usize, usize)], mask: u64) -> Relation {
    Relation::from_arcs(
        r.n(),
        arcs.iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &a)| a),
    )
}

/// Maximum transitive sub-relation by trying every subset of arcs; ties go to
/// the lexicographically smallest sorted arc list.
pub fn naive_mts(r: &Relation) -> Relation {
    let arcs: Vec<(usize, usize)> = r.iter_arcs().collect();
    assert!(arcs.len() <= 20);
    let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
    for mask in 0..1u64 << arcs.len() {
        let s = subset_of(r, &arcs, mask);
        if !naive_is_transitive(&s) {
            continue;
        }
        let list: Vec<(usize, usize)> = s.iter_arcs().collect();
        let better = match &best {
            None => true,
            Some((size, l)) => list.len() > *size || (list.len() == *size && list < *l),
        };
        if better {
            best = Some((list.len(), list));
        }
    }
    let (_, list) = best.unwrap();
    Relation::from_arcs(r.n(), list)
}

/// No transitive relation strictly between `t` and `host`, by enumerating
/// every superset of `t` inside `host`.
pub fn naive_is_maximal(host: &Relation, t: &Relation) -> bool {
    let extra: Vec<(usize, usize)> = host
        .iter_arcs()
        .filter(|&(i, j)| !t.contains(i, j))
        .collect();
    assert!(extra.len() <= 16);
    for mask in 1..1u64 << extra.len() {
        let mut b = t.clone();
        for (bit, &(i, j)) in extra.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                b.insert(i, j);
            }
        }
        if naive_is_transitive(&b) {
            return false;
        }
    }
    true
}

/// Largest `e(U, V)` by counting arcs for every side vector.
pub fn naive_max_dicut(r: &Relation) -> usize {
    let n = r.n();
    (0..1u64 << n)
        .map(|mask| {
            r.iter_arcs()
                .filter(|&(i, j)| mask >> i & 1 == 0 && mask >> j & 1 == 1)
                .count()
        })
        .max()
        .unwrap()
}

pub fn satisfies(f: &CnfFormula, values: &[bool]) -> bool {
    f.clauses.iter().all(|c| {
        c.iter().any(|&lit| {
            let v = lit.unsigned_abs() as usize - 1;
            values[v] == (lit > 0)
        })
    })
}

/// Every satisfying assignment of `f`.
pub fn all_models(f: &CnfFormula) -> Vec<Vec<bool>> {
    let nv = f.num_vars;
    (0..1u64 << nv)
        .map(|w| (0..nv).map(|v| w >> v & 1 == 1).collect::<Vec<bool>>())
        .filter(|vals| satisfies(f, vals))
        .collect()
}

pub fn loop_count(r: &Relation) -> usize {
    (0..r.n()).filter(|&i| r.contains(i, i)).count()
}
