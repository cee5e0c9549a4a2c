//! Machine-readable catalog of the inequality records, auxiliary bounds and
//! monotone families, with domains, strictness, degeneracy metadata and
//! citation labels.
//!
//! Records store only the positive half of symmetric domains (every entry is
//! even or odd in x; parity is a tested invariant of the enclosures).
//! `sin x / x` at 0 is excluded by the open domains; no removable-singularity
//! node exists. Endpoints like `2π/3` and `√(27/5)` are constant expressions
//! evaluated as certified intervals, never pre-rounded doubles.

use crate::error::{Error, Result};
use crate::functions::FnId;
use once_cell::sync::Lazy;

/// Variables an expression may reference. Inequality records use `x` (and
/// `k` for the two-parameter scaling records); monotone families use `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    K,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::K => "k",
            Var::T => "t",
        }
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Constant {
    /// Exact rational n/d with d > 0.
    Rational(i64, u64),
    /// π, evaluated as a certified one-ULP interval.
    Pi,
}

/// Expression tree over variables, rational constants, π, arithmetic,
/// integer and real powers, and the elementary functions. Real powers
/// `x^p` evaluate as `exp(p·log x)` and require a provably positive base.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Constant),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    PowInt(Box<Expr>, u32),
    PowReal(Box<Expr>, (i64, u64)),
    Apply(FnId, Box<Expr>),
}

impl Expr {
    pub fn variables(&self) -> Vec<Var> {
        let mut vars = Vec::new();
        self.collect_vars(&mut vars);
        vars.sort();
        vars.dedup();
        vars
    }

    fn collect_vars(&self, out: &mut Vec<Var>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => out.push(*v),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::PowInt(a, _) | Expr::PowReal(a, _) => a.collect_vars(out),
            Expr::Apply(_, a) => a.collect_vars(out),
        }
    }

    /// Prefix s-expression rendering used by the JSON catalog export.
    pub fn to_sexpr(&self) -> String {
        match self {
            Expr::Const(Constant::Rational(n, 1)) => format!("{n}"),
            Expr::Const(Constant::Rational(n, d)) => format!("{n}/{d}"),
            Expr::Const(Constant::Pi) => "pi".into(),
            Expr::Var(v) => format!("(var {v})"),
            Expr::Add(a, b) => format!("(add {} {})", a.to_sexpr(), b.to_sexpr()),
            Expr::Sub(a, b) => format!("(sub {} {})", a.to_sexpr(), b.to_sexpr()),
            Expr::Mul(a, b) => format!("(mul {} {})", a.to_sexpr(), b.to_sexpr()),
            Expr::Div(a, b) => format!("(div {} {})", a.to_sexpr(), b.to_sexpr()),
            Expr::PowInt(a, n) => format!("(powi {} {n})", a.to_sexpr()),
            Expr::PowReal(a, (n, d)) => format!("(powr {} {n}/{d})", a.to_sexpr()),
            Expr::Apply(f, a) => format!("(apply {f} {})", a.to_sexpr()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Relation {
    pub fn reversed(self) -> Relation {
        match self {
            Relation::Lt => Relation::Gt,
            Relation::Le => Relation::Ge,
            Relation::Gt => Relation::Lt,
            Relation::Ge => Relation::Le,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone)]
pub struct DegenerateEndpoint {
    pub var: Var,
    pub side: Side,
    /// Integer k with gap ~ c·(x − endpoint)^k, frozen from series expansion
    /// and cross-checked by the oracle's log-log fit.
    pub expected_gap_order: u32,
}

/// Open domain of one variable; endpoints are constant expressions.
#[derive(Debug, Clone)]
pub struct VarDomain {
    pub var: Var,
    pub lo: Expr,
    pub hi: Expr,
}

/// One inequality: `lhs REL rhs` over the product of the per-variable open
/// domains. Proving positivity of [`gap_expr`] establishes the strict form.
#[derive(Debug, Clone)]
pub struct InequalityRecord {
    pub id: &'static str,
    pub relation: Relation,
    pub lhs: Expr,
    pub rhs: Expr,
    pub domains: Vec<VarDomain>,
    pub degenerate_endpoints: Vec<DegenerateEndpoint>,
    pub citation: &'static str,
}

impl InequalityRecord {
    pub fn domain_of(&self, var: Var) -> Option<&VarDomain> {
        self.domains.iter().find(|d| d.var == var)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// One `f(t) = g(x/t)^t` family, stored as `exp(t·log g(x/t))`.
#[derive(Debug, Clone)]
pub struct MonotoneFamily {
    pub id: &'static str,
    pub direction: Direction,
    /// Open t-domain; `None` upper endpoint means unbounded.
    pub t_lo: f64,
    pub t_hi: Option<f64>,
    pub x_domain: VarDomain,
    pub value: Expr,
    pub citation: &'static str,
}

// ---------------------------------------------------------------------------
// Expression shorthand
// ---------------------------------------------------------------------------

fn c(n: i64) -> Expr {
    Expr::Const(Constant::Rational(n, 1))
}

fn cr(n: i64, d: u64) -> Expr {
    Expr::Const(Constant::Rational(n, d))
}

fn pi() -> Expr {
    Expr::Const(Constant::Pi)
}

fn x() -> Expr {
    Expr::Var(Var::X)
}

fn k() -> Expr {
    Expr::Var(Var::K)
}

fn t() -> Expr {
    Expr::Var(Var::T)
}

fn add(a: Expr, b: Expr) -> Expr {
    Expr::Add(Box::new(a), Box::new(b))
}

fn sub(a: Expr, b: Expr) -> Expr {
    Expr::Sub(Box::new(a), Box::new(b))
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::Mul(Box::new(a), Box::new(b))
}

fn div(a: Expr, b: Expr) -> Expr {
    Expr::Div(Box::new(a), Box::new(b))
}

fn powi(a: Expr, n: u32) -> Expr {
    Expr::PowInt(Box::new(a), n)
}

fn powr(a: Expr, n: i64, d: u64) -> Expr {
    Expr::PowReal(Box::new(a), (n, d))
}

fn ap(f: FnId, a: Expr) -> Expr {
    Expr::Apply(f, Box::new(a))
}

fn sinc(a: Expr) -> Expr {
    div(ap(FnId::Sin, a.clone()), a)
}

fn half_pi() -> Expr {
    div(pi(), c(2))
}

fn quarter_pi() -> Expr {
    div(pi(), c(4))
}

fn two_thirds_pi() -> Expr {
    div(mul(c(2), pi()), c(3))
}

/// √(27/5), the half-width of the cos³ chain's domain.
fn sqrt_27_over_5() -> Expr {
    powr(cr(27, 5), 1, 2)
}

/// `p(x) = 1/√(1 + 3(x/π)⁴)` from the quartic sinc refinement.
fn li_li_p() -> Expr {
    powr(add(c(1), mul(c(3), powi(div(x(), pi()), 4))), -1, 2)
}

fn deg(var: Var, side: Side, order: u32) -> DegenerateEndpoint {
    DegenerateEndpoint {
        var,
        side,
        expected_gap_order: order,
    }
}

fn dom_x(lo: Expr, hi: Expr) -> Vec<VarDomain> {
    vec![VarDomain {
        var: Var::X,
        lo,
        hi,
    }]
}

fn dom_xk(x_lo: Expr, x_hi: Expr) -> Vec<VarDomain> {
    vec![
        VarDomain {
            var: Var::X,
            lo: x_lo,
            hi: x_hi,
        },
        VarDomain {
            var: Var::K,
            lo: c(0),
            hi: c(1),
        },
    ]
}

struct Rec {
    id: &'static str,
    relation: Relation,
    lhs: Expr,
    rhs: Expr,
    domains: Vec<VarDomain>,
    degenerate: Vec<DegenerateEndpoint>,
    citation: &'static str,
}

fn build_records() -> Vec<InequalityRecord> {
    use FnId::*;
    use Relation::*;
    use Side::*;
    use Var::X;

    let lower = |o| deg(X, Lower, o);
    let upper = |o| deg(X, Upper, o);

    let recs = vec![
        // -- sinc bounds ----------------------------------------------------
        Rec {
            id: "jordan_lo",
            relation: Le,
            lhs: mul(div(c(2), pi()), x()),
            rhs: ap(Sin, x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(1), upper(1)],
            citation: "Jordan's classical linear lower bound for sine",
        },
        Rec {
            id: "jordan_hi",
            relation: Le,
            lhs: ap(Sin, x()),
            rhs: x(),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(3)],
            citation: "sine below its argument",
        },
        Rec {
            id: "baricz_lo",
            relation: Le,
            lhs: div(add(c(1), ap(Cos, x())), c(2)),
            rhs: sinc(x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "half-angle squared cosine lower bound for sinc",
        },
        Rec {
            id: "baricz_hi",
            relation: Le,
            lhs: sinc(x()),
            rhs: div(add(c(2), ap(Cos, x())), c(3)),
            domains: dom_x(c(0), pi()),
            degenerate: vec![lower(4)],
            citation: "Cusa-Huygens upper bound for sinc",
        },
        Rec {
            id: "qcx_lo",
            relation: Le,
            lhs: add(
                div(add(c(1), mul(c(2), ap(Cos, x()))), c(3)),
                div(mul(x(), ap(Sin, x())), c(6)),
            ),
            rhs: sinc(x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(4)],
            citation: "refined sinc lower bound with the x sin x correction",
        },
        Rec {
            id: "rem_g1g2",
            relation: Gt,
            lhs: add(
                div(add(c(1), mul(c(2), ap(Cos, x()))), c(3)),
                div(mul(x(), ap(Sin, x())), c(6)),
            ),
            rhs: div(add(c(1), ap(Cos, x())), c(2)),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "the refined lower bound dominates the half-angle one",
        },
        Rec {
            id: "rem_coshalf",
            relation: Le,
            lhs: div(add(c(2), ap(Cos, x())), c(3)),
            rhs: ap(Cos, div(x(), c(2))),
            domains: dom_x(c(0), two_thirds_pi()),
            degenerate: vec![lower(2), upper(1)],
            citation: "Cusa-Huygens bound below the half-angle cosine, equality at 2*pi/3",
        },
        Rec {
            id: "rem_cossq_cos",
            relation: Gt,
            lhs: powi(ap(Cos, div(x(), c(2))), 2),
            rhs: ap(Cos, x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "squared half-angle cosine above the cosine",
        },
        Rec {
            id: "rem_sandwich_hi",
            relation: Lt,
            lhs: sinc(x()),
            rhs: ap(Cos, div(x(), c(2))),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "sinc below the half-angle cosine",
        },
        Rec {
            id: "thm21_lo",
            relation: Lt,
            lhs: div(c(1), ap(Cosh, x())),
            rhs: sinc(x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "hyperbolic secant lower bound for sinc",
        },
        Rec {
            id: "thm21_hi",
            relation: Lt,
            lhs: sinc(x()),
            rhs: div(x(), ap(Sinh, x())),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(4)],
            citation: "hyperbolic sinc upper bound for sinc",
        },
        Rec {
            id: "thm11_lo",
            relation: Lt,
            lhs: div(powi(x(), 2), powi(ap(Sinh, x()), 2)),
            rhs: sinc(x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "squared hyperbolic sinc lower bound for sinc",
        },
        Rec {
            id: "thm25_c1",
            relation: Le,
            lhs: powi(ap(Cos, div(x(), c(2))), 2),
            rhs: sinc(x()),
            domains: dom_x(c(0), sqrt_27_over_5()),
            degenerate: vec![lower(2)],
            citation: "half-angle link of the cos-cube chain",
        },
        Rec {
            id: "thm25_c2",
            relation: Le,
            lhs: sinc(x()),
            rhs: powi(ap(Cos, div(x(), c(3))), 3),
            domains: dom_x(c(0), sqrt_27_over_5()),
            degenerate: vec![lower(4)],
            citation: "third-angle cubed cosine above sinc",
        },
        Rec {
            id: "thm25_c3",
            relation: Le,
            lhs: powi(ap(Cos, div(x(), c(3))), 3),
            rhs: div(add(c(2), ap(Cos, x())), c(3)),
            domains: dom_x(c(0), sqrt_27_over_5()),
            degenerate: vec![lower(4)],
            citation: "cos-cube link below Cusa-Huygens",
        },
        Rec {
            id: "thm31_lo",
            relation: Le,
            lhs: sub(c(1), div(powi(x(), 2), c(6))),
            rhs: sinc(x()),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(4)],
            citation: "quadratic series lower envelope of sinc",
        },
        Rec {
            id: "thm31_hi",
            relation: Le,
            lhs: sinc(x()),
            rhs: sub(c(1), div(mul(c(2), powi(x(), 2)), mul(c(3), powi(pi(), 2)))),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "quadratic upper envelope of sinc through the endpoint",
        },
        Rec {
            id: "lili_1",
            relation: Lt,
            lhs: sinc(x()),
            rhs: mul(li_li_p(), sub(c(1), div(powi(x(), 2), powi(pi(), 2)))),
            domains: dom_x(c(0), pi()),
            degenerate: vec![lower(2), upper(3)],
            citation: "Li-Li quartic refinement, sinc side",
        },
        Rec {
            id: "lili_2",
            relation: Lt,
            lhs: mul(li_li_p(), sub(c(1), div(powi(x(), 2), powi(pi(), 2)))),
            rhs: sub(c(1), div(powi(x(), 2), powi(pi(), 2))),
            domains: dom_x(c(0), pi()),
            degenerate: vec![lower(4), upper(1)],
            citation: "Li-Li quartic refinement, envelope side",
        },
        // -- hyperbolic bounds ----------------------------------------------
        Rec {
            id: "thm12_lo",
            relation: Lt,
            lhs: powr(div(c(1), ap(Cosh, x())), 1, 2),
            rhs: div(x(), ap(Sinh, x())),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(2)],
            citation: "square-root secant lower bound for x/sinh x",
        },
        Rec {
            id: "thm12_hi",
            relation: Lt,
            lhs: div(x(), ap(Sinh, x())),
            rhs: powr(div(c(1), ap(Cosh, x())), 1, 4),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(2)],
            citation: "fourth-root secant upper bound for x/sinh x",
        },
        Rec {
            id: "thm23_i",
            relation: Le,
            lhs: div(add(c(2), ap(Cos, x())), c(3)),
            rhs: div(x(), ap(Sinh, x())),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(4)],
            citation: "Cusa-Huygens expression below the hyperbolic sinc",
        },
        Rec {
            id: "thm23_ii",
            relation: Le,
            lhs: div(c(1), ap(Cosh, x())),
            rhs: div(add(c(1), ap(Cos, x())), c(2)),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2)],
            citation: "hyperbolic secant below the half-angle square",
        },
        Rec {
            id: "thm23_iii_a",
            relation: Le,
            lhs: div(c(1), add(c(1), powi(ap(Sin, x()), 2))),
            rhs: div(add(c(1), powi(ap(Cos, x()), 2)), c(2)),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2), upper(2)],
            citation: "reciprocal sine-square bound against the cosine-square mean",
        },
        Rec {
            id: "thm23_iii_b",
            relation: Le,
            lhs: div(add(c(1), powi(ap(Cos, x()), 2)), c(2)),
            rhs: div(add(c(1), ap(Cos, x())), c(2)),
            domains: dom_x(c(0), half_pi()),
            degenerate: vec![lower(2), upper(1)],
            citation: "cosine-square mean below the cosine mean",
        },
        Rec {
            id: "aux_sin_tanh",
            relation: Le,
            lhs: ap(Tanh, x()),
            rhs: ap(Sin, x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(3)],
            citation: "sine dominates the hyperbolic tangent near zero",
        },
        Rec {
            id: "lem33_i",
            relation: Lt,
            lhs: ap(Sinh, x()),
            rhs: add(x(), div(powi(x(), 3), c(5))),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(3)],
            citation: "cubic upper envelope of sinh on the unit interval",
        },
        Rec {
            id: "lem33_ii",
            relation: Lt,
            lhs: ap(Cosh, x()),
            rhs: add(c(1), div(mul(c(5), powi(x(), 2)), c(9))),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(2)],
            citation: "quadratic upper envelope of cosh on the unit interval",
        },
        Rec {
            id: "lem33_iii",
            relation: Lt,
            lhs: div(c(1), ap(Cosh, x())),
            rhs: sub(c(1), div(powi(x(), 2), c(3))),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(2)],
            citation: "quadratic upper envelope of sech on the unit interval",
        },
        Rec {
            id: "aux_lbsinh",
            relation: Lt,
            lhs: add(x(), div(powi(x(), 3), c(6))),
            rhs: ap(Sinh, x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(5)],
            citation: "cubic series lower bound of sinh",
        },
        Rec {
            id: "thm35",
            relation: Lt,
            lhs: ap(Cosh, x()),
            rhs: div(
                ap(Cos, x()),
                powr(sub(powi(ap(Cos, x()), 2), powi(ap(Sin, x()), 2)), 1, 2),
            ),
            domains: dom_x(c(0), quarter_pi()),
            degenerate: vec![lower(4)],
            citation: "cosh below cos x over the square root of cos 2x",
        },
        Rec {
            id: "thm36_lo",
            relation: Lt,
            lhs: powr(ap(Cos, x()), -2, 3),
            rhs: ap(Cosh, x()),
            domains: dom_x(c(0), quarter_pi()),
            degenerate: vec![lower(2)],
            citation: "two-thirds-power secant lower bound of cosh",
        },
        Rec {
            id: "thm36_hi",
            relation: Lt,
            lhs: ap(Cosh, x()),
            rhs: div(c(1), ap(Cos, x())),
            domains: dom_x(c(0), quarter_pi()),
            degenerate: vec![lower(4)],
            citation: "secant upper bound of cosh",
        },
        Rec {
            id: "note_cmp",
            relation: Le,
            lhs: div(c(1), ap(Cos, x())),
            rhs: div(
                ap(Cos, x()),
                powr(sub(powi(ap(Cos, x()), 2), powi(ap(Sin, x()), 2)), 1, 2),
            ),
            domains: dom_x(c(0), quarter_pi()),
            degenerate: vec![lower(4)],
            citation: "the secant bound is the sharper of the two cosh bounds",
        },
        // -- inverse-function bounds -----------------------------------------
        Rec {
            id: "inv_i",
            relation: Le,
            lhs: div(x(), ap(Arcsin, x())),
            rhs: sinc(x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(4)],
            citation: "arcsine ratio below sinc",
        },
        Rec {
            id: "inv_ii",
            relation: Le,
            lhs: div(x(), ap(Arcsinh, x())),
            rhs: div(ap(Sinh, x()), x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(4)],
            citation: "inverse hyperbolic sine ratio below the sinh ratio",
        },
        Rec {
            id: "inv_iii",
            relation: Le,
            lhs: div(x(), ap(Arctan, x())),
            rhs: div(ap(Tan, x()), x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(4)],
            citation: "arctangent ratio below the tangent ratio",
        },
        Rec {
            id: "inv_iv",
            relation: Le,
            lhs: div(x(), ap(Arctanh, x())),
            rhs: div(ap(Tanh, x()), x()),
            domains: dom_x(c(0), c(1)),
            degenerate: vec![lower(4)],
            citation: "inverse hyperbolic tangent ratio below the tanh ratio",
        },
        // -- two-parameter scaling bounds ------------------------------------
        Rec {
            id: "scale_sin",
            relation: Le,
            lhs: sinc(x()),
            rhs: sinc(mul(k(), x())),
            domains: dom_xk(c(0), pi()),
            degenerate: vec![lower(2)],
            citation: "sinc decreases under upscaling of the argument",
        },
        Rec {
            id: "scale_sinh",
            relation: Ge,
            lhs: div(ap(Sinh, x()), x()),
            rhs: div(ap(Sinh, mul(k(), x())), mul(k(), x())),
            domains: dom_xk(c(0), c(10)),
            degenerate: vec![lower(2)],
            citation: "sinh ratio increases under upscaling of the argument",
        },
        Rec {
            id: "scale_tanh",
            relation: Le,
            lhs: div(ap(Tanh, x()), x()),
            rhs: div(ap(Tanh, mul(k(), x())), mul(k(), x())),
            domains: dom_xk(c(0), c(1)),
            degenerate: vec![lower(2)],
            citation: "tanh ratio decreases under upscaling of the argument",
        },
    ];

    let mut records: Vec<InequalityRecord> = recs
        .into_iter()
        .map(|r| InequalityRecord {
            id: r.id,
            relation: r.relation,
            lhs: r.lhs,
            rhs: r.rhs,
            domains: r.domains,
            degenerate_endpoints: r.degenerate,
            citation: r.citation,
        })
        .collect();
    records.sort_by_key(|r| r.id);
    records
}

fn build_families() -> Vec<MonotoneFamily> {
    use FnId::*;
    let value_of = |f: FnId| ap(Exp, mul(t(), ap(Log, ap(f, div(x(), t())))));
    let x_dom = || VarDomain {
        var: Var::X,
        lo: c(0),
        hi: half_pi(),
    };
    vec![
        MonotoneFamily {
            id: "mono_cos_t",
            direction: Direction::Increasing,
            t_lo: 1.0,
            t_hi: None,
            x_domain: x_dom(),
            value: value_of(Cos),
            citation: "cos(x/t)^t grows with the power",
        },
        MonotoneFamily {
            id: "mono_cosh_t",
            direction: Direction::Decreasing,
            t_lo: 0.0,
            t_hi: None,
            x_domain: x_dom(),
            value: value_of(Cosh),
            citation: "cosh(x/t)^t shrinks with the power",
        },
        MonotoneFamily {
            id: "mono_sin_t",
            direction: Direction::Decreasing,
            t_lo: 1.0,
            t_hi: None,
            x_domain: x_dom(),
            value: value_of(Sin),
            citation: "sin(x/t)^t shrinks with the power",
        },
        MonotoneFamily {
            id: "mono_sinh_t",
            direction: Direction::Decreasing,
            t_lo: 0.0,
            t_hi: None,
            x_domain: x_dom(),
            value: value_of(Sinh),
            citation: "sinh(x/t)^t shrinks with the power",
        },
    ]
}

static RECORDS: Lazy<Vec<InequalityRecord>> = Lazy::new(build_records);
static FAMILIES: Lazy<Vec<MonotoneFamily>> = Lazy::new(build_families);

/// All inequality records, sorted by id.
pub fn entries() -> &'static [InequalityRecord] {
    &RECORDS
}

/// The four monotone families, sorted by id.
pub fn families() -> &'static [MonotoneFamily] {
    &FAMILIES
}

pub fn lookup(id: &str) -> Result<&'static InequalityRecord> {
    RECORDS
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn lookup_family(id: &str) -> Result<&'static MonotoneFamily> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// The expression whose positivity over the record's domain establishes the
/// strict inequality: `rhs − lhs` for lt/le, `lhs − rhs` for gt/ge.
pub fn gap_expr(rec: &InequalityRecord) -> Expr {
    match rec.relation {
        Relation::Lt | Relation::Le => sub(rec.rhs.clone(), rec.lhs.clone()),
        Relation::Gt | Relation::Ge => sub(rec.lhs.clone(), rec.rhs.clone()),
    }
}

/// The record with its relation reversed (used by the mutation suite).
pub fn reversed(rec: &InequalityRecord) -> InequalityRecord {
    let mut flipped = rec.clone();
    flipped.relation = rec.relation.reversed();
    flipped
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_and_family_counts() {
        assert_eq!(entries().len(), 41);
        assert_eq!(families().len(), 4);
    }

    #[test]
    fn sorted_and_unique_ids() {
        let ids: Vec<_> = entries().iter().map(|r| r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn baricz_hi_domain_is_zero_to_pi() {
        let rec = lookup("baricz_hi").unwrap();
        let d = rec.domain_of(Var::X).unwrap();
        assert_eq!(d.lo, c(0));
        assert_eq!(d.hi, pi());
    }

    #[test]
    fn thm35_domain_is_quarter_pi() {
        let rec = lookup("thm35").unwrap();
        assert_eq!(rec.domain_of(Var::X).unwrap().hi, quarter_pi());
    }

    #[test]
    fn scale_tanh_has_x_and_k() {
        let rec = lookup("scale_tanh").unwrap();
        assert!(rec.domain_of(Var::K).is_some());
        let vars = gap_expr(rec).variables();
        assert_eq!(vars, vec![Var::X, Var::K]);
        let kd = rec.domain_of(Var::K).unwrap();
        assert_eq!((kd.lo.clone(), kd.hi.clone()), (c(0), c(1)));
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(lookup("nope"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn citations_nonempty() {
        for r in entries() {
            assert!(!r.citation.is_empty(), "{} lacks a citation", r.id);
        }
        for f in families() {
            assert!(!f.citation.is_empty());
        }
    }

    #[test]
    fn gap_expr_orientation() {
        let rec = lookup("baricz_hi").unwrap(); // le: gap = rhs - lhs
        assert_eq!(gap_expr(rec), sub(rec.rhs.clone(), rec.lhs.clone()));
        let rec = lookup("scale_sinh").unwrap(); // ge: gap = lhs - rhs
        assert_eq!(gap_expr(rec), sub(rec.lhs.clone(), rec.rhs.clone()));
        let rec = lookup("rem_g1g2").unwrap(); // gt: gap = lhs - rhs
        assert_eq!(gap_expr(rec), sub(rec.lhs.clone(), rec.rhs.clone()));
    }

    #[test]
    fn chain_domains_agree() {
        let c1 = lookup("thm25_c1").unwrap();
        let c2 = lookup("thm25_c2").unwrap();
        let c3 = lookup("thm25_c3").unwrap();
        for pair in [(c1, c2), (c2, c3)] {
            let (a, b) = pair;
            let (da, db) = (a.domain_of(Var::X).unwrap(), b.domain_of(Var::X).unwrap());
            assert_eq!((da.lo.clone(), da.hi.clone()), (db.lo.clone(), db.hi.clone()));
        }
        let l1 = lookup("lili_1").unwrap();
        let l2 = lookup("lili_2").unwrap();
        assert_eq!(l1.domain_of(Var::X).unwrap().hi, pi());
        assert_eq!(l2.domain_of(Var::X).unwrap().hi, pi());
    }

    #[test]
    fn degenerate_metadata_expectations() {
        let expect = [
            ("baricz_lo", Side::Lower, 2),
            ("jordan_hi", Side::Lower, 3),
            ("baricz_hi", Side::Lower, 4),
            ("thm25_c2", Side::Lower, 4),
            ("aux_lbsinh", Side::Lower, 5),
            ("lili_1", Side::Upper, 3),
            ("rem_coshalf", Side::Upper, 1),
        ];
        for (id, side, order) in expect {
            let rec = lookup(id).unwrap();
            let hit = rec
                .degenerate_endpoints
                .iter()
                .find(|d| d.var == Var::X && d.side == side)
                .unwrap_or_else(|| panic!("{id} missing {side:?} flag"));
            assert_eq!(hit.expected_gap_order, order, "{id} {side:?}");
        }
    }

    #[test]
    fn sexpr_rendering() {
        let rec = lookup("baricz_hi").unwrap();
        assert_eq!(rec.lhs.to_sexpr(), "(div (apply sin (var x)) (var x))");
        assert_eq!(rec.rhs.to_sexpr(), "(div (add 2 (apply cos (var x))) 3)");
        assert_eq!(sqrt_27_over_5().to_sexpr(), "(powr 27/5 1/2)");
    }

    #[test]
    fn reversed_flips_relation() {
        let rec = lookup("jordan_hi").unwrap();
        assert_eq!(reversed(rec).relation, Relation::Ge);
        assert_eq!(Relation::Lt.reversed(), Relation::Gt);
    }
}
