mod common;

use modfair_core::bench::{mask_time_columns, run_sweep, write_csv, BenchConfig, BenchInstance, BenchStatus};
use modfair_core::fairness::FairnessScale;
use modfair_core::io::{sample_subgraph, SampleSpec};
use modfair_core::solvers::{solve, SolveConfig};
use modfair_core::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instances() -> Vec<BenchInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let source = common::random_graph(&mut rng, 30, 0.15);
    (0..6u64)
        .map(|seed| BenchInstance {
            name: format!("s{seed}"),
            graph: sample_subgraph(&source, SampleSpec::bfs(5 + seed as usize % 3, seed)).unwrap(),
        })
        .collect()
}

fn sweep() -> Vec<Rational> {
    (0..=5)
        .map(|i| Rational::new(i, 100))
        .chain([Rational::new(1, 2)])
        .collect()
}

#[test]
fn rows_are_minimal_within_their_bound_and_monotone() {
    let insts = instances();
    let result = run_sweep(&insts, &BenchConfig::new(sweep(), 100));
    for inst in &insts {
        let rows: Vec<_> = result.records.iter().filter(|r| r.instance == inst.name).collect();
        if rows.is_empty() {
            continue;
        }
        let mut by_cap: Vec<_> = rows.iter().collect();
        by_cap.sort_by_key(|r| r.delta_norm_cap);
        for w in by_cap.windows(2) {
            if let (Some(a), Some(b)) = (w[0].k, w[1].k) {
                assert!(b <= a, "{}", inst.name);
            }
        }
        let scale = FairnessScale::of(&inst.graph).unwrap();
        let k_opt = rows[0].k.unwrap();
        for r in &rows[1..] {
            assert_eq!(r.status, BenchStatus::Opt, "{}", inst.name);
            assert!(r.delta_norm.unwrap() <= r.delta_norm_cap);
            let delta = scale.delta_from_norm(r.delta_norm_cap, k_opt as u64);
            let all = inst.graph.n() * (inst.graph.n() - 1) / 2;
            let brute = solve(&inst.graph, &SolveConfig::brute(all, delta)).unwrap();
            assert_eq!(brute.size(), r.k, "{} cap {}", inst.name, r.delta_norm_cap);
            assert!(r.k_ratio.unwrap() >= Rational::ONE);
        }
    }
}

#[test]
fn csv_is_identical_across_runs_and_thread_counts() {
    let insts = instances();
    let mut outputs = Vec::new();
    for threads in [1, 4, 1] {
        let mut cfg = BenchConfig::new(sweep(), 100);
        cfg.threads = Some(threads);
        outputs.push(mask_time_columns(&write_csv(&run_sweep(&insts, &cfg).records)));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}
