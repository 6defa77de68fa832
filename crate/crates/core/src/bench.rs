//! Wall-clock scaling of the two maximal algorithms.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::extremal::trial_seed;
use crate::generate::random_relation_with_arcs;
use crate::maximal::Algorithm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Density {
    /// `m = 4n`
    Sparse,
    /// `m = n²/4`
    Dense,
}

impl Density {
    pub fn arcs(self, n: usize) -> usize {
        match self {
            Density::Sparse => (4 * n).min(n * (n - 1)),
            Density::Dense => n * n / 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub v1_median_ns: u128,
    pub v2_median_ns: u128,
    /// `t(n) / t(n/2)` when the previous size is exactly half of this one.
    pub v1_doubling: Option<f64>,
    pub v2_doubling: Option<f64>,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.v1_median_ns as f64 / self.v2_median_ns.max(1) as f64
    }
}

fn median(samples: &mut [Duration]) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn time_once(alg: Algorithm, r: &crate::relation::Relation) -> Duration {
    let start = Instant::now();
    black_box(alg.run_untraced(black_box(r)));
    start.elapsed()
}

/// Times v1 and v2 serially on one seeded relation per size. Sizes must be
/// ascending and at least 2; `repetitions` at least 1.
pub fn run_bench(
    sizes: &[usize],
    density: Density,
    repetitions: usize,
    seed: u64,
) -> Vec<BenchRow> {
    assert!(repetitions >= 1);
    assert!(
        sizes.windows(2).all(|w| w[0] < w[1]),
        "sizes must be ascending"
    );
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        assert!(n >= 2, "benchmark sizes start at 2");
        let m = density.arcs(n);
        let r = random_relation_with_arcs(n, m, trial_seed(seed, n as u64));
        let mut v1 = Vec::with_capacity(repetitions);
        let mut v2 = Vec::with_capacity(repetitions);
        for _ in 0..repetitions {
            v1.push(time_once(Algorithm::V1, &r));
            v2.push(time_once(Algorithm::V2, &r));
        }
        let (t1, t2) = (median(&mut v1).as_nanos(), median(&mut v2).as_nanos());
        let prev = rows.last().filter(|p| p.n * 2 == n);
        rows.push(BenchRow {
            n,
            m,
            v1_median_ns: t1,
            v2_median_ns: t2,
            v1_doubling: prev.map(|p| t1 as f64 / p.v1_median_ns.max(1) as f64),
            v2_doubling: prev.map(|p| t2 as f64 / p.v2_median_ns.max(1) as f64),
        });
    }
    rows
}
