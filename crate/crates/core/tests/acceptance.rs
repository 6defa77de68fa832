//! Acceptance criteria, one line per criterion. Runs as a plain binary so the
//! verdict lines are always printed; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use common::naive_is_transitive;
use maxtrans::bench::{run_bench, Density};
use maxtrans::cli::{execute, Cli};
use maxtrans::cnf::{encode_mts_to_cnf, max_ones_brute_force};
use maxtrans::extremal::{
    bound_alon, bound_m4, check_k_delta_balanced, random_orientation, random_triangle_free_graph,
    trial_seed, BalanceVerdict,
};
use maxtrans::generate::{all_relations, random_graph, random_relation};
use maxtrans::maximal::{is_maximal_transitive, maximal_transitive_v1, maximal_transitive_v2};
use maxtrans::maximum::{
    brute_force_max_dicut, brute_force_mts, greedy_bipartition, quarter_approx,
};
use maxtrans::Relation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All 4096 loop-free digraphs on 4 vertices and all 512 relations on 3.
fn exhaustive_suite() -> Vec<Relation> {
    all_relations(4, false)
        .chain(all_relations(3, true))
        .collect()
}

/// Loop-free digraphs on 1..=4 vertices.
fn loop_free_upto_4() -> Vec<Relation> {
    (1..=4).flat_map(|n| all_relations(n, false)).collect()
}

/// 1000 seeded digraphs, n uniform in 1..=30, arc probability 0.2.
fn random_suite() -> Vec<Relation> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0001);
    (0..1000u64)
        .map(|t| random_relation(rng.gen_range(1..=30), 0.2, false, trial_seed(17, t)))
        .collect()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let suite = exhaustive_suite();
    for r in &suite {
        let (t, _) = maximal_transitive_v2(r);
        ensure(t.is_transitive(), || {
            format!("not transitive: {r:?} -> {t:?}")
        })?;
        ensure(t.is_subrelation(r).unwrap(), || {
            format!("not contained: {r:?}")
        })?;
        ensure(is_maximal_transitive(r, &t).unwrap(), || {
            format!("not maximal: {r:?} -> {t:?}")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2}s, limit 10s"))?;
    Ok(format!("{} relations, {secs:.2}s", suite.len()))
}

fn criterion_2() -> Verdict {
    let suite: Vec<Relation> = exhaustive_suite()
        .into_iter()
        .chain(random_suite())
        .collect();
    for r in &suite {
        let (t1, tr1) = maximal_transitive_v1(r);
        let (t2, tr2) = maximal_transitive_v2(r);
        ensure(t1 == t2, || format!("outputs differ on {r:?}"))?;
        let (mut v1, mut v2) = (tr1.visited.clone(), tr2.visited.clone());
        v1.sort();
        v2.sort();
        ensure(v1 == v2, || format!("visited sets differ on {r:?}"))?;
    }
    Ok(format!("{} relations", suite.len()))
}

fn criterion_3() -> Verdict {
    let suite: Vec<Relation> = exhaustive_suite()
        .into_iter()
        .chain(random_suite())
        .collect();
    let mut deletions = 0;
    for r in &suite {
        for (t, trace) in [maximal_transitive_v1(r), maximal_transitive_v2(r)] {
            ensure(trace.visited_and_deleted().is_empty(), || {
                format!("visited arc deleted on {r:?}")
            })?;
            let mut visited = trace.visited.clone();
            visited.sort();
            ensure(visited == t.arcs().0, || {
                format!("visited set != output on {r:?}")
            })?;
            deletions += trace.deleted.len();
        }
    }
    Ok(format!(
        "{} relations, {deletions} deletion events",
        suite.len()
    ))
}

fn criterion_4() -> Verdict {
    let suite: Vec<Relation> = all_relations(4, false).chain(random_suite()).collect();
    for r in &suite {
        let q = quarter_approx(r);
        ensure(naive_is_transitive(&q), || format!("not transitive: {r:?}"))?;
        ensure(q.is_subrelation(r).unwrap(), || {
            format!("not contained: {r:?}")
        })?;
        ensure(4 * q.arc_count() >= r.arc_count(), || {
            format!("{} < m/4 = {}/4 on {r:?}", q.arc_count(), r.arc_count())
        })?;
    }
    Ok(format!("{} digraphs", suite.len()))
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0005);
    let mut edges = 0;
    for t in 0..1000u64 {
        let n = rng.gen_range(1..=50);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(n, p, trial_seed(5, t));
        let cut = greedy_bipartition(&g).cut_size(&g);
        ensure(2 * cut >= g.edge_count(), || {
            format!("cut {cut} < {}/2 (trial {t})", g.edge_count())
        })?;
        edges += g.edge_count();
    }
    Ok(format!("1000 graphs, {edges} edges"))
}

/// Random bipartite digraph: sampled cross edges, each oriented one way or,
/// with probability 1/5, both ways. At most 20 arcs.
fn random_bipartite_digraph(rng: &mut ChaCha8Rng, t: u64) -> Relation {
    let n: usize = rng.gen_range(2..=8);
    let cap = n.div_ceil(2) * (n / 2);
    let edges = rng.gen_range(0..=cap.min(16));
    let g = random_triangle_free_graph(n, edges, trial_seed(6, t)).unwrap();
    let mut r = random_orientation(&g, trial_seed(66, t));
    for (u, v) in g.edges() {
        if r.arc_count() < 20 && rng.gen_bool(0.2) {
            r.insert(u, v);
            r.insert(v, u);
        }
    }
    r
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0006);
    for t in 0..250u64 {
        let r = random_bipartite_digraph(&mut rng, t);
        ensure(
            r.underlying_graph().is_triangle_free() && r.arc_count() <= 20,
            || "bad instance".into(),
        )?;
        let mts = brute_force_mts(&r, 22).unwrap().arc_count();
        let dicut = brute_force_max_dicut(&r, 20).unwrap().forward;
        ensure(mts == dicut, || {
            format!("|mts| = {mts} but max dicut = {dicut} on {r:?}")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.2}s, limit 60s"))?;
    Ok(format!("250 digraphs, {secs:.2}s"))
}

fn criterion_7() -> Verdict {
    let suite = loop_free_upto_4();
    for r in &suite {
        let (_, ones) = max_ones_brute_force(&encode_mts_to_cnf(r), 24).unwrap();
        let mts = brute_force_mts(r, 22).unwrap().arc_count();
        ensure(ones == mts, || {
            format!("max-ones {ones} != |mts| {mts} on {r:?}")
        })?;
    }
    Ok(format!("{} digraphs", suite.len()))
}

fn criterion_8() -> Verdict {
    let suite = loop_free_upto_4();
    for r in &suite {
        let d = brute_force_max_dicut(r, 20).unwrap().forward;
        ensure(4 * d >= r.arc_count(), || {
            format!("max dicut {d} < m/4 on {r:?}")
        })?;
    }
    // every orientation the K10,10 experiment draws
    let g = random_triangle_free_graph(20, 100, EXPERIMENT_SEED).unwrap();
    for t in 0..100 {
        let r = random_orientation(&g, trial_seed(EXPERIMENT_SEED, t));
        let d = brute_force_max_dicut(&r, 20).unwrap().forward;
        ensure(4 * d >= r.arc_count(), || {
            format!("max dicut {d} < 25 on trial {t}")
        })?;
    }
    Ok(format!(
        "{} digraphs + 100 orientations of K10,10",
        suite.len()
    ))
}

fn criterion_9() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0009);
    for _ in 0..10_000 {
        let f = rng.gen_range(0..200usize);
        let b = rng.gen_range(0..200usize);
        let delta = if rng.gen_bool(0.1) {
            0.0
        } else {
            rng.gen_range(0.0..3.0)
        };
        let v = BalanceVerdict::evaluate(f, b, delta).unwrap();
        let direct = (f as f64 - b as f64).abs() <= delta * (f + b) as f64 / 2.0;
        ensure(v.balanced == direct, || {
            format!("({f}, {b}, {delta}) disagrees")
        })?;
        ensure(v.cut_total == f + b && v.imbalance == f.abs_diff(b), || {
            "fields".into()
        })?;
        let wider = BalanceVerdict::evaluate(f, b, delta + rng.gen_range(0.0..1.0)).unwrap();
        ensure(!v.balanced || wider.balanced, || {
            format!("δ-monotonicity fails at ({f}, {b}, {delta})")
        })?;
    }
    for t in 0..200u64 {
        let r = random_relation(rng.gen_range(1..=8), 0.3, false, trial_seed(9, t));
        let delta = rng.gen_range(0.0..2.0);
        let by_k: Vec<bool> = (0..=r.arc_count() + 1)
            .map(|k| check_k_delta_balanced(&r, k, delta, 18).unwrap())
            .collect();
        ensure(by_k.windows(2).all(|w| !w[0] || w[1]), || {
            format!("k-monotonicity fails on {r:?}")
        })?;
        let k = r.arc_count() / 3;
        ensure(
            !check_k_delta_balanced(&r, k, delta, 18).unwrap()
                || check_k_delta_balanced(&r, k, delta + 0.5, 18).unwrap(),
            || format!("δ-monotonicity of (k,δ)-balance fails on {r:?}"),
        )?;
    }
    Ok("10^4 triples, 200 relations".into())
}

fn criterion_10() -> Verdict {
    let rows = run_bench(&[500, 1000, 2000], Density::Sparse, 5, 10);
    let last = rows.last().unwrap();
    let detail = rows
        .iter()
        .map(|r| {
            format!(
                "n={} v1={:.2}ms v2={:.2}ms (doubling v1={} v2={})",
                r.n,
                r.v1_median_ns as f64 / 1e6,
                r.v2_median_ns as f64 / 1e6,
                r.v1_doubling.map_or("-".into(), |x| format!("{x:.2}")),
                r.v2_doubling.map_or("-".into(), |x| format!("{x:.2}")),
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    ensure(2 * last.v2_median_ns <= last.v1_median_ns, || {
        format!("v2 not 2x faster at n=2000: {detail}")
    })?;
    Ok(format!(
        "speedup {:.1}x at n=2000; {detail}",
        last.speedup()
    ))
}

const EXPERIMENT_SEED: u64 = 2015;

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let cli = Cli::parse_from(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(&cli, &mut out, &mut err);
    (code, out)
}

fn criterion_11() -> Verdict {
    let seed = EXPERIMENT_SEED.to_string();
    let args = [
        "maxtrans",
        "experiment",
        "--n",
        "20",
        "--m",
        "100",
        "--trials",
        "100",
        "--cprime",
        "1",
        "--seed",
        &seed,
    ];
    let (code, first) = run_cli(&args);
    let (code2, second) = run_cli(&args);
    ensure(code == 0 && code2 == 0, || {
        format!("exit statuses {code}, {code2}")
    })?;
    ensure(first == second, || "output differs between runs".into())?;

    let text = String::from_utf8(first).unwrap();
    let (lo, hi) = (bound_m4(100), bound_alon(100, 1.0));
    let mut trials = 0;
    for line in text.lines().filter(|l| l.starts_with("seed=")) {
        let max_dicut: f64 = line
            .split_whitespace()
            .find_map(|f| f.strip_prefix("max_dicut="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| format!("malformed line {line}"))?;
        ensure(lo <= max_dicut && max_dicut <= hi, || {
            format!("{max_dicut} outside [{lo}, {hi:.3}]")
        })?;
        trials += 1;
    }
    ensure(trials == 100, || format!("{trials} trial lines"))?;
    ensure(
        text.lines().filter(|l| l.starts_with("summary ")).count() == 1,
        || "no summary".into(),
    )?;
    Ok(format!(
        "100 orientations within [{lo}, {hi:.3}], byte-identical rerun"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("exhaustive maximality", criterion_1),
        ("v1/v2 equivalence", criterion_2),
        ("visited persistence", criterion_3),
        ("quarter approximation", criterion_4),
        ("bipartition bound", criterion_5),
        ("triangle-free equivalence", criterion_6),
        ("CNF equivalence", criterion_7),
        ("dicut floor", criterion_8),
        ("balance definitions", criterion_9),
        ("runtime scaling", criterion_10),
        ("experiment bounds and determinism", criterion_11),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let label = format!("criterion {:>2} {name}", idx + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        match check() {
            Ok(detail) => println!("{label}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("{label}: FAIL ({why})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
