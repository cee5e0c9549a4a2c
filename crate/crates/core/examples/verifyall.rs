use ineq_core::prover::{self, ProverConfig};
use std::time::Instant;

fn main() {
    let cfg = ProverConfig::default();
    let t0 = Instant::now();
    let runs = prover::verify_all(&cfg);
    let total = t0.elapsed();
    let mut worst_ms = 0;
    for run in &runs {
        println!(
            "{:16} {:12} {:8} ms  {:?}",
            run.id,
            run.outcome.label(),
            run.elapsed_ms,
            match &run.outcome {
                prover::ProofOutcome::Proven { boxes, max_depth_used, min_gap_lower_bound } =>
                    format!("boxes={boxes} depth={max_depth_used} min_gap={min_gap_lower_bound:.3e}"),
                o => format!("{o:?}"),
            }
        );
        worst_ms = worst_ms.max(run.elapsed_ms);
    }
    let proven = runs.iter().filter(|r| r.outcome.is_proven()).count();
    println!("== {proven}/{} proven, total {total:?}, worst {worst_ms} ms", runs.len());
}
