//! Randomized stress of the completion rebuild: for every graph in a seeded
//! corpus and every admissible t, the output must be a canonical
//! representation of an interval supergraph and must meet both tradeoff
//! bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use widthfill::ic::{check_tradeoff, run_ic};
use widthfill::solvers::iwid_exact;
use widthfill::{Graph, Limits};

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density_pct: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_range(0..100) < density_pct {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn rebuild_meets_both_bounds_on_a_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1C0FFEE);
    let limits = Limits::default();
    let mut checked = 0;
    for round in 0..120 {
        let n = 4 + round % 8; // 4..=11
        let density = 15 + (round * 7) % 70;
        let g = random_graph(&mut rng, n, density as u32);
        let k = iwid_exact(&g, &limits).unwrap().value;
        for t in 1..=k {
            let (out, trace) = run_ic(&g, t, &limits).unwrap();
            assert!(
                out.canonical_violations().is_empty(),
                "n={} t={} g=[{}]",
                n,
                t,
                g
            );
            assert!(
                out.to_interval_graph().is_supergraph_of(&g),
                "n={} t={} g=[{}]",
                n,
                t,
                g
            );
            let mut last_q = 0;
            for it in &trace.iterations {
                assert!(it.scan_from > last_q);
                last_q = it.scan_from;
            }
            let report = check_tradeoff(&g, t, &out, &limits).unwrap();
            assert!(report.satisfied(), "n={} t={} g=[{}]: {}", n, t, g, report);
            checked += 1;
        }
    }
    assert!(checked > 200, "corpus too small: {} runs", checked);
}
