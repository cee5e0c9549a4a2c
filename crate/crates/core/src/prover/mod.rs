//! Adaptive-bisection positivity prover over interval enclosures.
//!
//! `verify` shrinks every open domain endpoint inward by δ, then proves the
//! record's gap expression positive on the remaining box by breadth-first
//! bisection: a box counts as proven when its interval evaluation (plain,
//! or refined by the Taylor form when the plain one is too loose) has a
//! strictly positive lower bound. Midpoints of undecided boxes are checked
//! against the oracle, so a false inequality is refuted by a confirmed
//! witness instead of burning the depth budget. Everything is
//! deterministic: boxes are processed in queue order, splits bisect the
//! variable that is widest relative to its original domain, and summary
//! statistics are order-independent folds.

mod taylor;

use crate::catalog::{self, gap_expr, Constant, Expr, InequalityRecord, MonotoneFamily, Var};
use crate::error::{Error, Result};
use crate::functions::{self, enclose, FnId};
use crate::interval::{Interval, PI_ENCLOSURE};
use crate::oracle;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

/// Prover knobs; the defaults are the certified configuration.
#[derive(Debug, Clone, Copy)]
pub struct ProverConfig {
    /// Absolute inward shrink applied at every open domain endpoint.
    pub delta: f64,
    /// Bisection depth budget per proof attempt.
    pub max_depth: u32,
    /// Series order for all interval evaluations.
    pub order: u32,
    /// Keep the per-leaf minimum gap statistic in text output.
    pub min_gap_report: bool,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            delta: 1e-2,
            max_depth: 40,
            order: 24,
            min_gap_report: true,
        }
    }
}

/// Result of one proof attempt.
#[derive(Debug, Clone, PartialEq)]
pub enum ProofOutcome {
    Proven {
        boxes: u64,
        max_depth_used: u32,
        min_gap_lower_bound: f64,
    },
    Refuted {
        witness: Vec<(Var, f64)>,
        oracle_margin: f64,
    },
    Inconclusive {
        stuck_box: Vec<(Var, Interval)>,
    },
}

impl ProofOutcome {
    pub fn is_proven(&self) -> bool {
        matches!(self, ProofOutcome::Proven { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, ProofOutcome::Refuted { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ProofOutcome::Proven { .. } => "proven",
            ProofOutcome::Refuted { .. } => "refuted",
            ProofOutcome::Inconclusive { .. } => "inconclusive",
        }
    }
}

// ---------------------------------------------------------------------------
// Interval evaluation of expressions
// ---------------------------------------------------------------------------

/// Plain recursive interval evaluation: the result contains the exact image
/// of `e` over the box. Errors propagate (division by a zero-straddling
/// interval, domain violations, overflow).
pub fn eval_expr_interval(e: &Expr, env: &[(Var, Interval)], order: u32) -> Result<Interval> {
    match e {
        Expr::Const(Constant::Rational(n, d)) => Ok(Interval::from_rational(*n, *d)),
        Expr::Const(Constant::Pi) => Ok(PI_ENCLOSURE),
        Expr::Var(v) => env
            .iter()
            .find(|(ev, _)| ev == v)
            .map(|(_, iv)| *iv)
            .ok_or_else(|| Error::BindingError(v.name().to_string())),
        Expr::Add(a, b) => eval_expr_interval(a, env, order)?.add(&eval_expr_interval(b, env, order)?),
        Expr::Sub(a, b) => eval_expr_interval(a, env, order)?.sub(&eval_expr_interval(b, env, order)?),
        Expr::Mul(a, b) => eval_expr_interval(a, env, order)?.mul(&eval_expr_interval(b, env, order)?),
        Expr::Div(a, b) => {
            if let Some(iv) = ratio_pattern_interval(a, b, env, order)? {
                return Ok(iv);
            }
            eval_expr_interval(a, env, order)?.div(&eval_expr_interval(b, env, order)?)
        }
        Expr::PowInt(a, n) => eval_expr_interval(a, env, order)?.pow_int(*n),
        Expr::PowReal(a, (n, d)) => {
            let base = eval_expr_interval(a, env, order)?;
            let p = Interval::from_rational(*n, *d);
            let exponent = p.mul(&enclose(FnId::Log, &base, order)?)?;
            enclose(FnId::Exp, &exponent, order)
        }
        Expr::Apply(f, a) => enclose(*f, &eval_expr_interval(a, env, order)?, order),
    }
}

/// Evaluate a constant expression (domain endpoints) to an interval.
pub fn eval_const(e: &Expr, order: u32) -> Result<Interval> {
    eval_expr_interval(e, &[], order)
}

/// Quotients of the form `f(g)/g` (and `g/f(g)`) for f in {sin, sinh, tan,
/// tanh} are the catalog's sinc-type ratios. Evaluated as literal quotients
/// they suffer the classic numerator/denominator dependency blow-up, so they
/// are routed through the even ratio series instead whenever the shared
/// subexpression is bounded away from zero (otherwise the plain quotient and
/// its division-by-zero error semantics stand).
fn ratio_pattern_interval(
    num: &Expr,
    den: &Expr,
    env: &[(Var, Interval)],
    order: u32,
) -> Result<Option<Interval>> {
    if let Expr::Apply(f, g) = num {
        if **g == *den {
            let u = eval_expr_interval(g, env, order)?;
            if u.mig() > 0.0 {
                match f {
                    FnId::Sin => return Ok(Some(functions::sinc_iv(&u, order)?)),
                    FnId::Sinh => return Ok(Some(functions::sinch_iv(&u, order)?)),
                    FnId::Tan => {
                        let c = enclose(FnId::Cos, &u, order)?;
                        if c.lo > 0.0 {
                            return Ok(Some(functions::sinc_iv(&u, order)?.div(&c)?));
                        }
                    }
                    FnId::Tanh => {
                        let c = enclose(FnId::Cosh, &u, order)?;
                        return Ok(Some(functions::sinch_iv(&u, order)?.div(&c)?));
                    }
                    _ => {}
                }
            }
        }
    }
    if let Expr::Apply(f, g) = den {
        if **g == *num {
            let u = eval_expr_interval(g, env, order)?;
            if u.mig() > 0.0 {
                let ratio = match f {
                    FnId::Sin => Some(functions::sinc_iv(&u, order)?),
                    FnId::Sinh => Some(functions::sinch_iv(&u, order)?),
                    _ => None,
                };
                if let Some(r) = ratio {
                    if r.lo > 0.0 {
                        return Ok(Some(Interval::point(1.0).div(&r)?));
                    }
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Positivity proving
// ---------------------------------------------------------------------------

type SearchBox = Vec<(Var, Interval)>;

fn widest_relative_var(bx: &SearchBox, domain_widths: &[(Var, f64)]) -> usize {
    let mut best = 0;
    let mut best_ratio = -1.0;
    for (i, (var, iv)) in bx.iter().enumerate() {
        let dw = domain_widths
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, w)| *w)
            .unwrap_or(1.0);
        let ratio = iv.width() / dw.max(f64::MIN_POSITIVE);
        if ratio > best_ratio {
            best_ratio = ratio;
            best = i;
        }
    }
    best
}

/// Lower bound of the gap over one box if it can be proven positive.
fn proven_lower_bound(e: &Expr, bx: &SearchBox, active_idx: usize, order: u32) -> Option<f64> {
    let plain = eval_expr_interval(e, bx, order);
    if let Ok(iv) = plain {
        if iv.lo > 0.0 {
            return Some(iv.lo);
        }
    }
    let refined = taylor::refine_range(e, bx, bx[active_idx].0, order).ok()?;
    let combined = match plain {
        Ok(iv) => iv.intersect(&refined).unwrap_or(refined),
        Err(_) => refined,
    };
    (combined.lo > 0.0).then_some(combined.lo)
}

/// Prove `e > 0` over the box by adaptive bisection.
///
/// Proven requires every leaf box's interval evaluation to have `lo > 0`;
/// Refuted requires an oracle-confirmed negative midpoint; otherwise the
/// first box that exhausts the depth budget (or cannot be split or
/// evaluated) is reported as Inconclusive.
pub fn prove_positive(e: &Expr, initial: &SearchBox, cfg: &ProverConfig) -> ProofOutcome {
    let domain_widths: Vec<(Var, f64)> = initial.iter().map(|(v, iv)| (*v, iv.width())).collect();
    let mut queue: VecDeque<(SearchBox, u32)> = VecDeque::new();
    queue.push_back((initial.clone(), 0));

    let mut boxes = 0u64;
    let mut max_depth_used = 0u32;
    let mut min_gap = f64::INFINITY;

    while let Some((bx, depth)) = queue.pop_front() {
        let active_idx = widest_relative_var(&bx, &domain_widths);
        if let Some(lo) = proven_lower_bound(e, &bx, active_idx, cfg.order) {
            boxes += 1;
            max_depth_used = max_depth_used.max(depth);
            min_gap = min_gap.min(lo);
            continue;
        }

        // refutation probe at the midpoint before spending depth
        let mids: Vec<(Var, f64)> = bx.iter().map(|(v, iv)| (*v, iv.midpoint())).collect();
        if let Ok(g) = oracle::eval_expr(e, &mids) {
            let gv = g.to_f64();
            if gv < -g.err_bound {
                return ProofOutcome::Refuted {
                    witness: mids,
                    oracle_margin: gv.abs(),
                };
            }
        }

        if depth >= cfg.max_depth {
            return ProofOutcome::Inconclusive { stuck_box: bx };
        }
        match bx[active_idx].1.split() {
            Ok((left, right)) => {
                let mut lbox = bx.clone();
                lbox[active_idx].1 = left;
                let mut rbox = bx;
                rbox[active_idx].1 = right;
                queue.push_back((lbox, depth + 1));
                queue.push_back((rbox, depth + 1));
            }
            Err(_) => return ProofOutcome::Inconclusive { stuck_box: bx },
        }
    }

    ProofOutcome::Proven {
        boxes,
        max_depth_used,
        min_gap_lower_bound: min_gap,
    }
}

// ---------------------------------------------------------------------------
// Record verification
// ---------------------------------------------------------------------------

/// Outcome of verifying one record, with the box it was verified on.
#[derive(Debug, Clone)]
pub struct VerifyRun {
    pub id: String,
    pub citation: String,
    pub domain_verified: Vec<(Var, Interval)>,
    pub outcome: ProofOutcome,
    pub elapsed_ms: u128,
}

/// δ-shrunk verification box of a record.
fn shrunk_box(rec: &InequalityRecord, cfg: &ProverConfig) -> Result<SearchBox> {
    let mut bx = Vec::new();
    for dom in &rec.domains {
        let lo_iv = eval_const(&dom.lo, cfg.order)?;
        let hi_iv = eval_const(&dom.hi, cfg.order)?;
        let width = hi_iv.lo - lo_iv.hi;
        if !(cfg.delta > 0.0) || cfg.delta >= width / 2.0 {
            return Err(Error::InvalidConfig(format!(
                "delta {} must be positive and below half the {}-domain width {width}",
                cfg.delta,
                dom.var.name(),
            )));
        }
        let lo = (lo_iv.hi + cfg.delta).next_up();
        let hi = (hi_iv.lo - cfg.delta).next_down();
        bx.push((dom.var, Interval::new(lo, hi)?));
    }
    Ok(bx)
}

fn run_record(rec: &InequalityRecord, cfg: &ProverConfig) -> Result<VerifyRun> {
    let bx = shrunk_box(rec, cfg)?;
    let gap = gap_expr(rec);
    let start = Instant::now();
    let outcome = prove_positive(&gap, &bx, cfg);
    Ok(VerifyRun {
        id: rec.id.to_string(),
        citation: rec.citation.to_string(),
        domain_verified: bx,
        outcome,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Verify one catalog record on its δ-shrunk domain.
pub fn verify(id: &str, cfg: &ProverConfig) -> Result<VerifyRun> {
    run_record(catalog::lookup(id)?, cfg)
}

/// Verify the reversed (mutated) form of a record; a healthy prover
/// refutes every one of these.
pub fn verify_reversed(id: &str, cfg: &ProverConfig) -> Result<VerifyRun> {
    let flipped = catalog::reversed(catalog::lookup(id)?);
    let mut run = run_record(&flipped, cfg)?;
    run.id = format!("{id}:reversed");
    Ok(run)
}

/// Verify the whole catalog; records are independent and may be processed
/// in parallel, the summary order is the (stable) catalog order.
pub fn verify_all(cfg: &ProverConfig) -> Vec<VerifyRun> {
    use rayon::prelude::*;
    catalog::entries()
        .par_iter()
        .map(|rec| run_record(rec, cfg).expect("catalog records always have valid domains"))
        .collect()
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Machine-checkable certificate for one record. Contains only
/// deterministic fields; wall-clock timing lives in the text output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub outcome: String,
    pub domain_verified: BTreeMap<String, [f64; 2]>,
    pub delta: f64,
    pub order: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boxes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_depth_used: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap_lower_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_margin: Option<f64>,
    pub citation: String,
}

impl Certificate {
    pub fn from_run(run: &VerifyRun, cfg: &ProverConfig) -> Self {
        let domain_verified = run
            .domain_verified
            .iter()
            .map(|(v, iv)| (v.name().to_string(), [iv.lo, iv.hi]))
            .collect();
        let mut cert = Certificate {
            id: run.id.clone(),
            outcome: run.outcome.label().to_string(),
            domain_verified,
            delta: cfg.delta,
            order: cfg.order,
            boxes: None,
            max_depth_used: None,
            min_gap_lower_bound: None,
            witness: None,
            oracle_margin: None,
            citation: run.citation.clone(),
        };
        match &run.outcome {
            ProofOutcome::Proven {
                boxes,
                max_depth_used,
                min_gap_lower_bound,
            } => {
                cert.boxes = Some(*boxes);
                cert.max_depth_used = Some(*max_depth_used);
                cert.min_gap_lower_bound = Some(*min_gap_lower_bound);
            }
            ProofOutcome::Refuted {
                witness,
                oracle_margin,
            } => {
                cert.witness = Some(
                    witness
                        .iter()
                        .map(|(v, x)| (v.name().to_string(), *x))
                        .collect(),
                );
                cert.oracle_margin = Some(*oracle_margin);
            }
            ProofOutcome::Inconclusive { .. } => {}
        }
        cert
    }
}

// ---------------------------------------------------------------------------
// Gap tables
// ---------------------------------------------------------------------------

/// Sampled tightness table for one record over a uniform grid.
#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub id: String,
    pub points: Vec<f64>,
    pub gaps: Vec<f64>,
    pub min_gap: f64,
    pub max_gap: f64,
    pub mean_gap: f64,
}

impl GapReport {
    /// CSV with 17 significant digits per value (round-trips f64 exactly).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,gap\n");
        for (x, g) in self.points.iter().zip(&self.gaps) {
            out.push_str(&format!("{x:.16e},{g:.16e}\n"));
        }
        out
    }
}

/// Oracle gap table on a uniform grid over the δ-shrunk domain (two-variable
/// records are sampled along x with k = 1/2).
pub fn gap_table(id: &str, n_points: usize, cfg: &ProverConfig) -> Result<GapReport> {
    if n_points < 2 {
        return Err(Error::InvalidConfig(
            "a gap table needs at least two grid points".into(),
        ));
    }
    let rec = catalog::lookup(id)?;
    let bx = shrunk_box(rec, cfg)?;
    let (_, x_iv) = bx
        .iter()
        .find(|(v, _)| *v == Var::X)
        .expect("every record has an x domain");
    let gap = gap_expr(rec);
    let two_var = rec.domain_of(Var::K).is_some();

    let mut points = Vec::with_capacity(n_points);
    let mut gaps = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let frac = i as f64 / (n_points - 1) as f64;
        let x = x_iv.lo + frac * (x_iv.hi - x_iv.lo);
        let mut bindings = vec![(Var::X, x)];
        if two_var {
            bindings.push((Var::K, 0.5));
        }
        let g = oracle::eval_expr(&gap, &bindings)?;
        points.push(x);
        gaps.push(g.to_f64());
    }
    let min_gap = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    let max_gap = gaps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean_gap = gaps.iter().sum::<f64>() / gaps.len() as f64;
    Ok(GapReport {
        id: id.to_string(),
        points,
        gaps,
        min_gap,
        max_gap,
        mean_gap,
    })
}

// ---------------------------------------------------------------------------
// Monotone families
// ---------------------------------------------------------------------------

/// Grid-based monotonicity verdict for one family (oracle-evaluated; the
/// analytic statements are not interval-proved, by design).
#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityReport {
    pub family: String,
    pub x: f64,
    pub t_grid: Vec<f64>,
    pub values: Vec<f64>,
    pub direction: catalog::Direction,
    pub monotone: bool,
}

pub fn monotone_check(
    family: &MonotoneFamily,
    x: f64,
    t_grid: &[f64],
) -> Result<MonotonicityReport> {
    let x_lo = eval_const(&family.x_domain.lo, 24)?.hi;
    let x_hi = eval_const(&family.x_domain.hi, 24)?.lo;
    if !(x_lo < x && x < x_hi) {
        return Err(Error::DomainError(format!(
            "x = {x} outside the family domain ({x_lo}, {x_hi})"
        )));
    }
    for pair in t_grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::InvalidConfig("t grid must be strictly increasing".into()));
        }
    }
    if let Some(first) = t_grid.first() {
        if *first <= family.t_lo {
            return Err(Error::DomainError(format!(
                "t = {first} at or below the domain edge {}",
                family.t_lo
            )));
        }
    }
    if let (Some(last), Some(hi)) = (t_grid.last(), family.t_hi) {
        if *last >= hi {
            return Err(Error::DomainError(format!("t = {last} beyond {hi}")));
        }
    }

    let mut values = Vec::with_capacity(t_grid.len());
    let mut errs = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let ev = oracle::eval_expr(&family.value, &[(Var::X, x), (Var::T, t)])?;
        values.push(ev.to_f64());
        errs.push(ev.err_bound);
    }
    let monotone = values.windows(2).zip(errs.windows(2)).all(|(v, e)| {
        let slack = e[0] + e[1];
        match family.direction {
            catalog::Direction::Increasing => v[1] - v[0] >= -slack,
            catalog::Direction::Decreasing => v[0] - v[1] >= -slack,
        }
    });
    Ok(MonotonicityReport {
        family: family.id.to_string(),
        x,
        t_grid: t_grid.to_vec(),
        values,
        direction: family.direction,
        monotone,
    })
}

// ---------------------------------------------------------------------------
// Catalog self-check
// ---------------------------------------------------------------------------

/// Load-time validation: every record's sides interval-evaluate cleanly on
/// a 16-box cover of the δ-shrunk domain (this is also what proves each
/// pow_real base positive), and every degeneracy flag matches the oracle's
/// fitted order.
pub fn validate_catalog(cfg: &ProverConfig) -> Result<()> {
    for rec in catalog::entries() {
        let bx = shrunk_box(rec, cfg)?;
        let covers: Vec<Vec<(Var, Interval)>> = {
            let mut covers = vec![bx.clone()];
            for (i, (_, iv)) in bx.iter().enumerate() {
                let mut next = Vec::new();
                for cell in &covers {
                    for j in 0..16 {
                        let lo = iv.lo + iv.width() * j as f64 / 16.0;
                        let hi = iv.lo + iv.width() * (j + 1) as f64 / 16.0;
                        let mut sub = cell.clone();
                        sub[i].1 = Interval::new(lo, hi.min(iv.hi))?;
                        next.push(sub);
                    }
                }
                covers = next;
            }
            covers
        };
        for cell in &covers {
            for side in [&rec.lhs, &rec.rhs] {
                eval_expr_interval(side, cell, cfg.order).map_err(|e| {
                    Error::DomainError(format!("{}: {e} on cover cell", rec.id))
                })?;
            }
        }
        for flag in &rec.degenerate_endpoints {
            let fit = oracle::gap_order(rec, flag.side)?;
            if fit.order != flag.expected_gap_order || fit.residual > 0.05 {
                return Err(Error::DomainError(format!(
                    "{}: fitted gap order {} (residual {:.3}) disagrees with expected {}",
                    rec.id, fit.order, fit.residual, flag.expected_gap_order
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xenv(lo: f64, hi: f64) -> SearchBox {
        vec![(Var::X, Interval::new(lo, hi).unwrap())]
    }

    #[test]
    fn eval_examples() {
        // (2 + cos x)/3 at the point 1
        let rec = catalog::lookup("baricz_hi").unwrap();
        let r = eval_expr_interval(&rec.rhs, &xenv(1.0, 1.0), 24).unwrap();
        assert!(r.contains(0.8467674352893799));
        assert!(r.width() <= 1e-12);

        let ident = Expr::Var(Var::X);
        let r = eval_expr_interval(&ident, &xenv(0.0, 0.0), 24).unwrap();
        assert_eq!((r.lo, r.hi), (0.0, 0.0));

        let inv = Expr::Div(
            Box::new(Expr::Const(Constant::Rational(1, 1))),
            Box::new(Expr::Var(Var::X)),
        );
        assert!(matches!(
            eval_expr_interval(&inv, &xenv(-1.0, 1.0), 24),
            Err(Error::DivisionByZeroInterval)
        ));
    }

    #[test]
    fn prove_thm36_hi_gap() {
        let rec = catalog::lookup("thm36_hi").unwrap();
        let gap = gap_expr(rec);
        let hi = std::f64::consts::FRAC_PI_4 - 0.01;
        let outcome = prove_positive(&gap, &xenv(0.01, hi), &ProverConfig::default());
        assert!(outcome.is_proven(), "{outcome:?}");
    }

    #[test]
    fn refute_reversed_sandwich() {
        // sin x/x - cos(x/2) is negative on the whole interval
        let rec = catalog::reversed(catalog::lookup("rem_sandwich_hi").unwrap());
        let gap = gap_expr(&rec);
        let hi = std::f64::consts::FRAC_PI_2 - 0.01;
        match prove_positive(&gap, &xenv(0.01, hi), &ProverConfig::default()) {
            ProofOutcome::Refuted {
                witness,
                oracle_margin,
            } => {
                assert_eq!(witness.len(), 1);
                let (v, x) = witness[0];
                assert_eq!(v, Var::X);
                // first probe is the domain midpoint
                assert!((x - 0.5 * (0.01 + hi)).abs() < 1e-12);
                assert!((oracle_margin - 0.023563216354180687).abs() < 1e-9);
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn zero_gap_is_inconclusive() {
        let zero = Expr::Const(Constant::Rational(0, 1));
        let bx = xenv(0.5, 0.5);
        let outcome = prove_positive(&zero, &bx, &ProverConfig::default());
        assert!(matches!(outcome, ProofOutcome::Inconclusive { .. }));
    }

    #[test]
    fn depth_one_leaves_hard_records_inconclusive() {
        let cfg = ProverConfig {
            max_depth: 1,
            ..Default::default()
        };
        let run = verify("baricz_hi", &cfg).unwrap();
        assert!(matches!(run.outcome, ProofOutcome::Inconclusive { .. }));
    }

    #[test]
    fn verify_thm21_hi() {
        let run = verify("thm21_hi", &ProverConfig::default()).unwrap();
        assert!(run.outcome.is_proven(), "{:?}", run.outcome);
    }

    #[test]
    fn verify_scale_tanh_two_variables() {
        let run = verify("scale_tanh", &ProverConfig::default()).unwrap();
        assert!(run.outcome.is_proven(), "{:?}", run.outcome);
        assert_eq!(run.domain_verified.len(), 2);
    }

    #[test]
    fn unknown_id_errors() {
        assert!(matches!(
            verify("nope", &ProverConfig::default()),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn delta_guard() {
        let cfg = ProverConfig {
            delta: 0.6, // half of (0,1) is 0.5
            ..Default::default()
        };
        assert!(matches!(verify("lem33_i", &cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn certificate_roundtrip_is_byte_identical() {
        let cfg = ProverConfig::default();
        let run = verify("lem33_ii", &cfg).unwrap();
        let cert = Certificate::from_run(&run, &cfg);
        let json = serde_json::to_string_pretty(&cert).unwrap();
        let parsed: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), json);
    }

    #[test]
    fn gap_table_baricz_hi() {
        let cfg = ProverConfig::default();
        let rep = gap_table("baricz_hi", 101, &cfg).unwrap();
        assert_eq!(rep.points.len(), 101);
        assert!(rep.points.windows(2).all(|w| w[1] > w[0]));
        // gap at x = 1 (frozen from an independent computation)
        let idx = rep
            .points
            .iter()
            .position(|&x| (x - 1.0).abs() < 2e-2)
            .unwrap();
        assert!((rep.gaps[idx] - 0.0052964504814834).abs() < 1e-3);
        assert!(rep.min_gap >= 0.0);
        let csv = rep.to_csv();
        assert!(csv.starts_with("x,gap\n"));
        assert_eq!(csv.lines().count(), 102);
    }

    #[test]
    fn gap_table_rejects_tiny_grid() {
        assert!(matches!(
            gap_table("baricz_hi", 1, &ProverConfig::default()),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn monotone_families_on_small_grids() {
        let cos_t = catalog::lookup_family("mono_cos_t").unwrap();
        let rep = monotone_check(cos_t, 1.0, &[1.1, 2.0, 5.0, 10.0, 50.0]).unwrap();
        assert!(rep.monotone);
        assert_eq!(rep.direction, catalog::Direction::Increasing);

        let sinh_t = catalog::lookup_family("mono_sinh_t").unwrap();
        let rep = monotone_check(sinh_t, 1.0, &[0.5, 1.0, 2.0, 5.0]).unwrap();
        assert!(rep.monotone);

        // single-point grid is vacuously monotone
        let rep = monotone_check(sinh_t, 1.0, &[2.0]).unwrap();
        assert!(rep.monotone);
    }

    #[test]
    fn monotone_check_domain_guards() {
        let cos_t = catalog::lookup_family("mono_cos_t").unwrap();
        assert!(monotone_check(cos_t, 2.0, &[1.5, 2.0]).is_err()); // x beyond pi/2
        assert!(monotone_check(cos_t, 1.0, &[0.5, 2.0]).is_err()); // t below 1
        assert!(monotone_check(cos_t, 1.0, &[2.0, 1.5]).is_err()); // not increasing
    }

    #[test]
    fn catalog_validates() {
        validate_catalog(&ProverConfig::default()).unwrap();
    }
}
