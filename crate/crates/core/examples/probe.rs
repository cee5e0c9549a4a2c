use ineq_core::prover::{self, ProverConfig};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let id = args.get(1).map(|s| s.as_str()).unwrap_or("scale_tanh");
    let depth: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(40);
    let cfg = ProverConfig { max_depth: depth, ..Default::default() };
    let t0 = Instant::now();
    let run = prover::verify(id, &cfg).unwrap();
    println!("{id}: {:?} in {:?}", run.outcome, t0.elapsed());
}
