use ineq_core::catalog::{self, gap_expr, Var};
use ineq_core::functions::FnId;
use ineq_core::oracle;

fn main() {
    for id in ["inv_ii", "inv_iv"] {
        let rec = catalog::lookup(id).unwrap();
        let gap = gap_expr(rec);
        for i in [16, 19, 20] {
            let x = (2.0f64).powi(-i);
            let g = oracle::eval_expr(&gap, &[(Var::X, x)]).unwrap();
            println!("{id} x=2^-{i}: gap={:e} err={:e}", g.to_f64(), g.err_bound);
        }
    }
    let x = (2.0f64).powi(-20);
    for f in [FnId::Arctanh, FnId::Arcsinh, FnId::Tanh, FnId::Sinh] {
        let v = oracle::eval_fn(f, x).unwrap();
        println!("{f}(2^-20) = {:e} err={:e}", v.to_f64(), v.err_bound);
    }
}
