use std::time::Instant;

use lexgreedy::graph::Graph;
use lexgreedy::priority::{PrefixSchedule, Priority};
use lexgreedy::{matching, mis};

fn main() {
    // Criterion 9 trend probe: delta sweep on gnm + rmat at n=2^14.
    let n = 1u32 << 14;
    let m = 5 * n as u64;
    let gnm = Graph::generate_gnm(n, m, 1001).unwrap();
    let rmat = Graph::generate_rmat(14, m, 0.5, 0.1, 0.1, 1002).unwrap().graph;
    for (name, g) in [("gnm", &gnm), ("rmat", &rmat)] {
        for algo in ["mis", "mm"] {
            for delta in [1e-4, 1e-3, 1e-2, 1e-1, 1.0] {
                let mut touches = Vec::new();
                let mut rounds = Vec::new();
                for rep in 0..5u64 {
                    let sched = PrefixSchedule::FixedFraction(delta);
                    let (t, r) = if algo == "mis" {
                        let p = Priority::random(g.n(), 7 + rep);
                        let res = mis::prefix_greedy(g, &p, &sched, 1);
                        (res.stats.edge_touches, res.stats.rounds)
                    } else {
                        let p = Priority::random(g.m(), 7 + rep);
                        let res = matching::prefix_greedy(g, &p, &sched, 1);
                        (res.stats.edge_touches, res.stats.rounds)
                    };
                    touches.push(t);
                    rounds.push(r);
                }
                touches.sort();
                rounds.sort();
                println!(
                    "{name} {algo} delta={delta:>7}: med_touches={} med_rounds={}",
                    touches[2], rounds[2]
                );
            }
        }
    }

    // Criterion 4/5 scaling probe + criterion 9 timing sanity.
    for exp in 12..=17u32 {
        let n = 1u32 << exp;
        let g = Graph::generate_gnm(n, 5 * n as u64, 2000 + exp as u64).unwrap();
        let mut mis_rounds = Vec::new();
        let mut mm_rounds = Vec::new();
        for rep in 0..11u64 {
            let pv = Priority::random(g.n(), 31 * exp as u64 + rep);
            mis_rounds.push(mis::parallel_rootset(&g, &pv, 1).stats.rounds);
            let pe = Priority::random(g.m(), 77 * exp as u64 + rep);
            mm_rounds.push(matching::parallel_rootset(&g, &pe, 1).stats.rounds);
        }
        mis_rounds.sort();
        mm_rounds.sort();
        let ln_n = (n as f64).ln();
        let ln_m = (g.m() as f64).ln();
        println!(
            "n=2^{exp}: mis med={} ratio={:.3} | mm med={} ratio={:.3}",
            mis_rounds[5],
            mis_rounds[5] as f64 / (ln_n * ln_n),
            mm_rounds[5],
            mm_rounds[5] as f64 / (ln_m * ln_m)
        );
        if exp == 17 {
            let p = Priority::random(g.n(), 5);
            let mut seq_times = Vec::new();
            let mut par_times = Vec::new();
            for _ in 0..3 {
                let t0 = Instant::now();
                let seq = mis::sequential_greedy(&g, &p);
                seq_times.push(t0.elapsed().as_micros());
                let t1 = Instant::now();
                let par = mis::parallel_rootset(&g, &p, 1);
                par_times.push(t1.elapsed().as_micros());
                assert_eq!(seq.in_mis, par.in_mis);
            }
            seq_times.sort();
            par_times.sort();
            println!("timing n=2^17: seq={}us par={}us ratio={:.2}",
                seq_times[1], par_times[1], par_times[1] as f64 / seq_times[1] as f64);
        }
    }
}
