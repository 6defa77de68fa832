//! Randomized experiments around balanced directed cuts.
//!
//! A uniformly random orientation of a graph has, for any fixed cut of size
//! `s`, about `s/2` arcs in each direction; with high probability every large
//! cut is close to balanced, which caps the maximum directed cut near `m/4`.
//! The functions here orient triangle-free graphs at random, measure exact
//! maximum dicuts and the fraction of large cuts that are balanced, and report
//! them next to the `m/4` floor and a configurable `m/2 + c'·m^{4/5}` ceiling.
//! Nothing here asserts the ceiling; it is reported only.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maximum::{dicut_size, for_each_cut, VertexPartition, DEFAULT_VERTEX_BUDGET};
use crate::relation::{Relation, UndirectedGraph};

pub const DEFAULT_BALANCE_VERTEX_BUDGET: usize = 18;

/// SplitMix64 finalizer.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of trial `trial` under master seed `master`:
/// `splitmix64(master ^ splitmix64(trial))`.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    splitmix64(master ^ splitmix64(trial))
}

/// Orients every edge `{u, v}` (`u < v`, lexicographic order) as `(u, v)` or
/// `(v, u)` by one fair coin each from a ChaCha8 stream seeded with `seed`.
pub fn random_orientation(g: &UndirectedGraph, seed: u64) -> Relation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Relation::empty(g.n().max(1));
    for (u, v) in g.edges() {
        if rng.gen::<bool>() {
            r.insert(u, v);
        } else {
            r.insert(v, u);
        }
    }
    r
}

/// Random bipartite graph with sides `{0..⌈n/2⌉}` and the rest, and `m`
/// distinct cross edges sampled without replacement.
pub fn random_triangle_free_graph(n: usize, m: usize, seed: u64) -> Result<UndirectedGraph> {
    let left = n.div_ceil(2);
    let right = n / 2;
    let capacity = left * right;
    if m > capacity {
        return Err(Error::InvalidParameter(format!(
            "{m} edges exceed the bipartite capacity {capacity} of {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = index::sample(&mut rng, capacity, m);
    Ok(UndirectedGraph::from_edges(
        n,
        picks.iter().map(|idx| (idx / right, left + idx % right)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BalanceVerdict {
    pub cut_total: usize,
    pub imbalance: usize,
    pub delta: f64,
    pub balanced: bool,
}

impl BalanceVerdict {
    /// `|e(U,V) − e(V,U)| ≤ δ · (e(U,V) + e(V,U)) / 2`.
    pub fn evaluate(forward: usize, backward: usize, delta: f64) -> Result<Self> {
        if delta.is_nan() || delta < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "delta must be non-negative, got {delta}"
            )));
        }
        let cut_total = forward + backward;
        let imbalance = forward.abs_diff(backward);
        Ok(BalanceVerdict {
            cut_total,
            imbalance,
            delta,
            balanced: imbalance as f64 <= delta * cut_total as f64 / 2.0,
        })
    }
}

pub fn check_delta_balanced(
    r: &Relation,
    p: &VertexPartition,
    delta: f64,
) -> Result<BalanceVerdict> {
    let cut = dicut_size(r, p)?;
    BalanceVerdict::evaluate(cut.forward, cut.backward, delta)
}

fn check_budget(n: usize, budget: usize) -> Result<()> {
    let budget = budget.min(crate::maximum::MAX_ENUMERATED_VERTICES);
    if n > budget {
        return Err(Error::BudgetExceeded {
            what: "vertex count",
            budget,
            actual: n,
        });
    }
    Ok(())
}

/// Every cut with `e(U,V) + e(V,U) ≥ k` is δ-balanced. Enumerates the
/// `2^(n-1)` unordered bipartitions (vertex 0 pinned to `U`).
pub fn check_k_delta_balanced(
    r: &Relation,
    k: usize,
    delta: f64,
    vertex_budget: usize,
) -> Result<bool> {
    BalanceVerdict::evaluate(0, 0, delta)?;
    check_budget(r.n(), vertex_budget)?;
    let mut ok = true;
    for_each_cut(r, 1, |_, f, b| {
        if ok && f + b >= k {
            ok = BalanceVerdict::evaluate(f, b, delta)
                .expect("delta checked")
                .balanced;
        }
    });
    Ok(ok)
}

/// One random orientation and what was measured on it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub max_dicut: usize,
    pub bound_m4: f64,
    pub bound_alon: f64,
    /// Fraction of cuts of total size at least `k` that are δ-balanced; 1 if
    /// there are none.
    pub balanced_fraction: f64,
}

impl TrialReport {
    pub fn has_unbalanced_cut(&self) -> bool {
        self.balanced_fraction < 1.0
    }

    pub fn within_bounds(&self) -> bool {
        self.max_dicut as f64 >= self.bound_m4 && self.max_dicut as f64 <= self.bound_alon
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub delta: f64,
    pub cprime: f64,
    pub seed: u64,
    pub min_max_dicut: usize,
    pub max_max_dicut: usize,
    pub mean_max_dicut: f64,
    pub bound_m4: f64,
    pub bound_alon: f64,
    pub all_within_bounds: bool,
    /// `2^n · 2·exp(−δ²k/6)`, the union-bound estimate of the chance that
    /// some cut of size `k` is unbalanced.
    pub chernoff_prediction: f64,
    pub observed_unbalanced_fraction: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Experiment {
    pub reports: Vec<TrialReport>,
    pub summary: ExperimentSummary,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentParams {
    pub trials: usize,
    pub k: usize,
    pub delta: f64,
    pub seed: u64,
    pub cprime: f64,
}

pub fn bound_m4(m: usize) -> f64 {
    m as f64 / 4.0
}

pub fn bound_alon(m: usize, cprime: f64) -> f64 {
    m as f64 / 2.0 + cprime * (m as f64).powf(0.8)
}

pub fn chernoff_prediction(n: usize, k: usize, delta: f64) -> f64 {
    2f64.powi(n as i32) * 2.0 * (-(delta * delta) * k as f64 / 6.0).exp()
}

/// Orients `g` once per trial (seed from [`trial_seed`]), computes the exact
/// maximum dicut and the balanced fraction of size-`k` cuts, and summarizes.
pub fn run_balance_experiment(g: &UndirectedGraph, params: ExperimentParams) -> Result<Experiment> {
    let ExperimentParams {
        trials,
        k,
        delta,
        seed,
        cprime,
    } = params;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "graph needs at least one vertex".into(),
        ));
    }
    BalanceVerdict::evaluate(0, 0, delta)?;
    if let Some((a, b, c)) = g.find_triangle() {
        return Err(Error::TriangleFound(a + 1, b + 1, c + 1));
    }
    check_budget(g.n(), DEFAULT_VERTEX_BUDGET)?;

    let (n, m) = (g.n(), g.edge_count());
    let reports: Vec<TrialReport> = (0..trials as u64)
        .map(|t| {
            let s = trial_seed(seed, t);
            let r = random_orientation(g, s);
            let (mut max_dicut, mut large, mut balanced) = (0usize, 0u64, 0u64);
            // Vertex 0 pinned to U: each unordered cut is seen once, and its
            // reverse is accounted for by taking max(forward, backward).
            for_each_cut(&r, 1, |_, f, b| {
                max_dicut = max_dicut.max(f).max(b);
                if f + b >= k {
                    large += 1;
                    if BalanceVerdict::evaluate(f, b, delta)
                        .expect("delta checked")
                        .balanced
                    {
                        balanced += 1;
                    }
                }
            });
            TrialReport {
                seed: s,
                n,
                m,
                max_dicut,
                bound_m4: bound_m4(m),
                bound_alon: bound_alon(m, cprime),
                balanced_fraction: if large == 0 {
                    1.0
                } else {
                    balanced as f64 / large as f64
                },
            }
        })
        .collect();

    let dicuts = reports.iter().map(|r| r.max_dicut);
    let summary = ExperimentSummary {
        trials,
        n,
        m,
        k,
        delta,
        cprime,
        seed,
        min_max_dicut: dicuts.clone().min().unwrap_or(0),
        max_max_dicut: dicuts.clone().max().unwrap_or(0),
        mean_max_dicut: dicuts.sum::<usize>() as f64 / trials as f64,
        bound_m4: bound_m4(m),
        bound_alon: bound_alon(m, cprime),
        all_within_bounds: reports.iter().all(TrialReport::within_bounds),
        chernoff_prediction: chernoff_prediction(n, k, delta),
        observed_unbalanced_fraction: reports.iter().filter(|r| r.has_unbalanced_cut()).count()
            as f64
            / trials as f64,
    };
    Ok(Experiment { reports, summary })
}
