use std::time::Instant;

use lexgreedy::graph::Graph;
use lexgreedy::mis::{self, MisState};
use lexgreedy::priority::Priority;

fn main() {
    let n = 1u32 << 17;
    let g = Graph::generate_gnm(n, 5 * n as u64, 2017).unwrap();
    let p = Priority::random(g.n(), 5);
    for _ in 0..3 {
        let t = Instant::now();
        let state = MisState::new(&g, &p);
        let setup = t.elapsed().as_micros();
        std::hint::black_box(&state);
        let t = Instant::now();
        let seq = mis::sequential_greedy(&g, &p);
        let seq_us = t.elapsed().as_micros();
        let t = Instant::now();
        let par = mis::parallel_rootset(&g, &p, 1);
        let par_us = t.elapsed().as_micros();
        assert_eq!(seq.in_mis, par.in_mis);
        println!("setup={setup}us seq={seq_us}us par={par_us}us steps={}", par.stats.rounds);
    }
}
