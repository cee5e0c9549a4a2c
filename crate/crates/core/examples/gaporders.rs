use ineq_core::catalog::{self, Side};
use ineq_core::oracle;

fn main() {
    for rec in catalog::entries() {
        for flag in &rec.degenerate_endpoints {
            match oracle::gap_order(rec, flag.side) {
                Ok(fit) => println!(
                    "{:16} {:?} -> order {} slope {:.4} residual {:.2e} (expected {})",
                    rec.id, flag.side, fit.order, fit.slope, fit.residual, flag.expected_gap_order
                ),
                Err(e) => println!("{:16} {:?} -> ERROR {e}", rec.id, flag.side),
            }
        }
    }
}
