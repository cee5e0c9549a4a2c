//! Rigorous interval enclosures of the elementary functions, built from
//! truncated Maclaurin series plus explicit remainder bounds.
//!
//! Only sin/cos/sinh/cosh/exp/log/arctan are series-backed; the rest are
//! composition identities on top of them:
//!
//! * `tan = sin / cos`, `tanh = sinh / cosh`
//! * `log y = 2 · artanh((y−1)/(y+1))` with a geometric tail
//! * `arctanh x` by its own (all-positive) series
//! * `arcsinh x = log(x + sqrt(1 + x²))`
//! * `arcsin x = arctan(x / sqrt(1 − x²))`
//! * `arctan x` by the alternating series for |x| ≤ 1 and
//!   `arctan x = ±π/2 − arctan(1/x)` outside, with π a hard-coded enclosure
//!
//! Remainders: sin/cos use the first-omitted-term bound (the derivative
//! bound makes it valid even when the Leibniz monotonicity fails);
//! sinh/cosh/exp use Lagrange `mag^M/M!` times a rigid bound on `e^mag`;
//! the artanh-type series use geometric domination. For sign-definite
//! arguments the remainder of an alternating or all-positive series is
//! one-sided, which halves the enclosure width.
//!
//! Supported domains: |x| ≤ 4 for sin/cos/tan/tanh, |x| ≤ 10.5 for
//! sinh/cosh/exp (the catalog's sinh scaling record reaches x = 10),
//! x > 0 for log, |x| < 1 for arcsin/arctanh, any finite x for
//! arctan/arcsinh.

mod bernoulli;

pub use bernoulli::{bernoulli, tanh_coeff, Rational};

use crate::error::{Error, Result};
use crate::interval::{Interval, PI_ENCLOSURE};
use once_cell::sync::Lazy;

/// Default series order (number of series terms); tail < 1e-18 for |x| ≤ π
/// on the sin/cos class.
pub const DEFAULT_ORDER: u32 = 24;

/// Largest supported series order; coefficient tables are precomputed to here.
pub const MAX_ORDER: u32 = 64;

/// Identifiers for the functions appearing in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FnId {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tan,
    Tanh,
    Exp,
    Log,
    Arcsin,
    Arctan,
    Arcsinh,
    Arctanh,
}

impl FnId {
    pub const ALL: [FnId; 12] = [
        FnId::Sin,
        FnId::Cos,
        FnId::Sinh,
        FnId::Cosh,
        FnId::Tan,
        FnId::Tanh,
        FnId::Exp,
        FnId::Log,
        FnId::Arcsin,
        FnId::Arctan,
        FnId::Arcsinh,
        FnId::Arctanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FnId::Sin => "sin",
            FnId::Cos => "cos",
            FnId::Sinh => "sinh",
            FnId::Cosh => "cosh",
            FnId::Tan => "tan",
            FnId::Tanh => "tanh",
            FnId::Exp => "exp",
            FnId::Log => "log",
            FnId::Arcsin => "arcsin",
            FnId::Arctan => "arctan",
            FnId::Arcsinh => "arcsinh",
            FnId::Arctanh => "arctanh",
        }
    }
}

impl std::str::FromStr for FnId {
    type Err = Error;
    fn from_str(s: &str) -> Result<FnId> {
        FnId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown function '{s}'")))
    }
}

impl std::fmt::Display for FnId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Coefficient tables (interval enclosures of the exact rationals)
// ---------------------------------------------------------------------------

/// `FACTORIALS[k]` encloses k! for k ≤ 2·MAX_ORDER + 2 (fits in f64 range).
static FACTORIALS: Lazy<Vec<Interval>> = Lazy::new(|| {
    let n = (2 * MAX_ORDER + 3) as usize;
    let mut v = Vec::with_capacity(n);
    v.push(Interval::point(1.0));
    for k in 1..n {
        let prev = v[k - 1];
        v.push(prev.mul(&Interval::from_int(k as i64)).expect("factorial overflow"));
    }
    v
});

pub(crate) fn recip_factorial(k: u32) -> Interval {
    Interval::point(1.0)
        .div(&FACTORIALS[k as usize])
        .expect("factorial is positive")
}

fn signed(c: Interval, negative: bool) -> Interval {
    if negative {
        c.neg()
    } else {
        c
    }
}

static SIN_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER).map(|n| signed(recip_factorial(2 * n + 1), n % 2 == 1)).collect()
});
static COS_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER).map(|n| signed(recip_factorial(2 * n), n % 2 == 1)).collect()
});
static SINH_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER).map(|n| recip_factorial(2 * n + 1)).collect()
});
static COSH_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER).map(|n| recip_factorial(2 * n)).collect()
});
static EXP_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER).map(recip_factorial).collect()
});
/// Alternating 1/(2n+1) for arctan.
static ATAN_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER)
        .map(|n| {
            signed(
                Interval::point(1.0)
                    .div(&Interval::from_int((2 * n + 1) as i64))
                    .expect("positive divisor"),
                n % 2 == 1,
            )
        })
        .collect()
});
/// All-positive 1/(2n+1) for artanh (and the log core).
static ATANH_COEFFS: Lazy<Vec<Interval>> = Lazy::new(|| {
    (0..MAX_ORDER)
        .map(|n| {
            Interval::point(1.0)
                .div(&Interval::from_int((2 * n + 1) as i64))
                .expect("positive divisor")
        })
        .collect()
});

// ---------------------------------------------------------------------------
// Series evaluation
// ---------------------------------------------------------------------------

fn horner(coeffs: &[Interval], u: &Interval) -> Result<Interval> {
    let mut s = coeffs[coeffs.len() - 1];
    for c in coeffs.iter().rev().skip(1) {
        s = s.mul(u)?.add(c)?;
    }
    Ok(s)
}

/// Upper bound for `mag^degree / degree!` (interval-computed).
pub(crate) fn power_over_factorial(mag: f64, degree: u32) -> Result<f64> {
    let p = Interval::point(mag).pow_int(degree)?;
    Ok(p.div(&FACTORIALS[degree as usize])?.hi)
}

/// Rigid e^|x| bound reused by the Taylor-form remainders.
pub(crate) fn exp_rigid(mag: f64) -> Result<f64> {
    exp_rigid_bound(mag)
}

/// n-th coefficient of the sin series (also the sinc series in x²).
pub(crate) fn sin_series_coeff(n: u32) -> Interval {
    SIN_COEFFS[n as usize]
}

/// n-th coefficient of the sinh series (also the sinh-ratio series in x²).
pub(crate) fn sinh_series_coeff(n: u32) -> Interval {
    SINH_COEFFS[n as usize]
}

/// `sin(a)/a` by its even series. Evaluating the ratio this way removes the
/// numerator/denominator dependency that makes the plain quotient collapse
/// on boxes with large relative width; the enclosure is valid wherever the
/// division is (the series also extends it continuously through 0, which
/// callers rule out by domain).
pub(crate) fn sinc_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    if a.mag() > 4.0 {
        return Err(Error::DomainError(format!(
            "sin ratio over {a} exceeds the supported |x| <= 4"
        )));
    }
    let u = a.pow_int(2)?;
    let p = horner(&SIN_COEFFS[..n], &u)?;
    // first omitted term: x^{2N} / (2N+1)!
    let tau = power_over_factorial(a.mag(), 2 * order)? / (2.0 * order as f64 + 1.0);
    let sign = if terms_decreasing(a.mag(), 2 * order) {
        alternating_tail_sign(order, false, arg_sign(a))
    } else {
        None
    };
    p.add(&tail_interval(tau, sign))
}

/// `sinh(a)/a` by its even, all-positive series.
pub(crate) fn sinch_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    if a.mag() > 10.5 {
        return Err(Error::DomainError(format!(
            "sinh ratio over {a} exceeds the supported |x| <= 10.5"
        )));
    }
    let u = a.pow_int(2)?;
    let p = horner(&SINH_COEFFS[..n], &u)?;
    let tau = power_over_factorial(a.mag(), 2 * order)? / (2.0 * order as f64 + 1.0)
        * exp_rigid_bound(a.mag())?;
    p.add(&tail_interval(tau, Some(true)))
}

#[derive(Clone, Copy, PartialEq)]
enum ArgSign {
    NonNegative,
    NonPositive,
    Mixed,
}

fn arg_sign(a: &Interval) -> ArgSign {
    if a.lo >= 0.0 {
        ArgSign::NonNegative
    } else if a.hi <= 0.0 {
        ArgSign::NonPositive
    } else {
        ArgSign::Mixed
    }
}

/// Remainder interval given its magnitude bound `tau` and, when the sign of
/// the omitted tail is known for the whole argument interval, its direction.
fn tail_interval(tau: f64, sign: Option<bool>) -> Interval {
    let tau = tau.next_up();
    match sign {
        Some(true) => Interval { lo: 0.0, hi: tau },
        Some(false) => Interval { lo: -tau, hi: 0.0 },
        None => Interval { lo: -tau, hi: tau },
    }
}

/// Tail sign for an alternating series in x^d (odd d) or x^d (even d) whose
/// first omitted term is `(-1)^order * x^degree / …`: known when the argument
/// does not straddle zero (or the degree is even).
fn alternating_tail_sign(order: u32, degree_odd: bool, sign: ArgSign) -> Option<bool> {
    let positive_if_x_positive = order % 2 == 0;
    match (degree_odd, sign) {
        (false, _) => Some(positive_if_x_positive),
        (true, ArgSign::NonNegative) => Some(positive_if_x_positive),
        (true, ArgSign::NonPositive) => Some(!positive_if_x_positive),
        (true, ArgSign::Mixed) => None,
    }
}

/// Leibniz monotonicity of sin/cos-type terms from the cut: |x|² ≤ d(d+1)
/// where d is the first omitted degree.
fn terms_decreasing(mag: f64, first_omitted_degree: u32) -> bool {
    let d = first_omitted_degree as f64;
    mag * mag <= d * (d + 1.0)
}

/// Rigid bound for e^|x| used in Lagrange remainders.
fn exp_rigid_bound(mag: f64) -> Result<f64> {
    if mag <= 4.0 {
        Ok(81.0)
    } else if mag <= 10.5 {
        Ok(40000.0)
    } else {
        Err(Error::DomainError(format!(
            "|x| = {mag} beyond the supported range of the hyperbolic series"
        )))
    }
}

fn check_order(order: u32) -> Result<usize> {
    if order == 0 {
        return Err(Error::Unsupported("series order must be positive".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "series order {order} exceeds the precomputed maximum {MAX_ORDER}"
        )));
    }
    Ok(order as usize)
}

fn sin_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = a.pow_int(2)?;
    let p = horner(&SIN_COEFFS[..n], &u)?;
    let degree = 2 * order + 1;
    let tau = power_over_factorial(a.mag(), degree)?;
    let sign = if terms_decreasing(a.mag(), degree) {
        alternating_tail_sign(order, true, arg_sign(a))
    } else {
        None
    };
    let r = a.mul(&p)?.add(&tail_interval(tau, sign))?;
    Ok(r.intersect(&Interval { lo: -1.0, hi: 1.0 }).unwrap_or(r))
}

fn cos_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = a.pow_int(2)?;
    let p = horner(&COS_COEFFS[..n], &u)?;
    let degree = 2 * order;
    let tau = power_over_factorial(a.mag(), degree)?;
    let sign = if terms_decreasing(a.mag(), degree) {
        alternating_tail_sign(order, false, arg_sign(a))
    } else {
        None
    };
    let r = p.add(&tail_interval(tau, sign))?;
    Ok(r.intersect(&Interval { lo: -1.0, hi: 1.0 }).unwrap_or(r))
}

fn sinh_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = a.pow_int(2)?;
    let p = horner(&SINH_COEFFS[..n], &u)?;
    let degree = 2 * order + 1;
    let tau = power_over_factorial(a.mag(), degree)? * exp_rigid_bound(a.mag())?;
    // All series terms are positive: the omitted tail has the sign of x.
    let sign = match arg_sign(a) {
        ArgSign::NonNegative => Some(true),
        ArgSign::NonPositive => Some(false),
        ArgSign::Mixed => None,
    };
    a.mul(&p)?.add(&tail_interval(tau, sign))
}

fn cosh_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = a.pow_int(2)?;
    let p = horner(&COSH_COEFFS[..n], &u)?;
    let degree = 2 * order;
    let tau = power_over_factorial(a.mag(), degree)? * exp_rigid_bound(a.mag())?;
    p.add(&tail_interval(tau, Some(true)))
}

fn exp_iv(a: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let p = horner(&EXP_COEFFS[..n], a)?;
    let rigid = if a.hi <= 0.0 { 1.0 } else { exp_rigid_bound(a.mag())? };
    let tau = power_over_factorial(a.mag(), order)? * rigid;
    let sign = if a.lo >= 0.0 { Some(true) } else { None };
    p.add(&tail_interval(tau, sign))
}

/// Geometric tail bound `t^degree / (degree (1 − t²))` for the artanh-type
/// series; requires |t| < 1.
fn artanh_tail(t_mag: f64, degree: u32) -> Result<f64> {
    let tm = Interval::point(t_mag);
    let denom_core = Interval::point(1.0).sub(&tm.pow_int(2)?)?;
    if denom_core.lo <= 0.0 {
        return Err(Error::DomainError(format!(
            "artanh-type series needs |t| < 1, got |t| = {t_mag}"
        )));
    }
    let num = tm.pow_int(degree)?;
    let denom = Interval::from_int(degree as i64).mul(&denom_core)?;
    Ok(num.div(&denom)?.hi)
}

/// Core of log and artanh: `t + t³/3 + t⁵/5 + …` with geometric tail.
fn artanh_series(t: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = t.pow_int(2)?;
    let p = horner(&ATANH_COEFFS[..n], &u)?;
    let degree = 2 * order + 1;
    let tau = artanh_tail(t.mag(), degree)?;
    let sign = match arg_sign(t) {
        ArgSign::NonNegative => Some(true),
        ArgSign::NonPositive => Some(false),
        ArgSign::Mixed => None,
    };
    t.mul(&p)?.add(&tail_interval(tau, sign))
}

fn log_iv(a: &Interval, order: u32) -> Result<Interval> {
    if a.lo <= 0.0 {
        return Err(Error::DomainError(format!(
            "log over an interval reaching {} <= 0",
            a.lo
        )));
    }
    let one = Interval::point(1.0);
    let t = a.sub(&one)?.div(&a.add(&one)?)?;
    artanh_series(&t, order)?.mul(&Interval::from_int(2))
}

/// Alternating arctan series for |t| ≤ 1.
fn arctan_series(t: &Interval, order: u32) -> Result<Interval> {
    let n = check_order(order)?;
    let u = t.pow_int(2)?;
    let p = horner(&ATAN_COEFFS[..n], &u)?;
    let degree = 2 * order + 1;
    let tau = Interval::point(t.mag())
        .pow_int(degree)?
        .div(&Interval::from_int(degree as i64))?
        .hi;
    // terms 1/(2n+1)·t^{2n+1} decrease for |t| ≤ 1, so Leibniz applies
    let sign = alternating_tail_sign(order, true, arg_sign(t));
    t.mul(&p)?.add(&tail_interval(tau, sign))
}

fn arctan_iv(a: &Interval, order: u32) -> Result<Interval> {
    let half_pi = PI_ENCLOSURE.div(&Interval::from_int(2))?;
    let mut pieces: Vec<Interval> = Vec::new();
    if let Some(inner) = a.intersect(&Interval { lo: -1.0, hi: 1.0 }) {
        pieces.push(arctan_series(&inner, order)?);
    }
    if a.hi > 1.0 {
        let piece = Interval {
            lo: a.lo.max(1.0),
            hi: a.hi,
        };
        let recip = Interval::point(1.0).div(&piece)?;
        pieces.push(half_pi.sub(&arctan_series(&recip, order)?)?);
    }
    if a.lo < -1.0 {
        let piece = Interval {
            lo: a.lo,
            hi: a.hi.min(-1.0),
        };
        let recip = Interval::point(1.0).div(&piece)?;
        pieces.push(half_pi.neg().sub(&arctan_series(&recip, order)?)?);
    }
    let mut it = pieces.into_iter();
    let first = it.next().expect("arctan argument interval is nonempty");
    Ok(it.fold(first, |acc, p| acc.hull(&p)))
}

fn require_mag(fn_id: FnId, a: &Interval, limit: f64) -> Result<()> {
    if a.mag() > limit {
        return Err(Error::DomainError(format!(
            "{fn_id} over {a} exceeds the supported |x| <= {limit}"
        )));
    }
    Ok(())
}

/// Endpoint evaluation for a (truly) monotone increasing function: series
/// enclosures at the endpoint points bracket the image regardless of the
/// interval's width, sidestepping the Horner width blow-up of wide boxes.
fn endpoint_increasing(
    a: &Interval,
    f: impl Fn(&Interval) -> Result<Interval>,
) -> Result<Interval> {
    if a.lo == a.hi {
        return f(a);
    }
    let lo = f(&Interval::point(a.lo))?;
    let hi = f(&Interval::point(a.hi))?;
    Interval::new(lo.lo, hi.hi)
}

fn endpoint_decreasing(
    a: &Interval,
    f: impl Fn(&Interval) -> Result<Interval>,
) -> Result<Interval> {
    if a.lo == a.hi {
        return f(a);
    }
    let lo = f(&Interval::point(a.hi))?;
    let hi = f(&Interval::point(a.lo))?;
    Interval::new(lo.lo, hi.hi)
}

fn tan_point(a: &Interval, order: u32) -> Result<Interval> {
    sin_iv(a, order)?.div(&cos_iv(a, order)?)
}

fn tanh_point(a: &Interval, order: u32) -> Result<Interval> {
    sinh_iv(a, order)?.div(&cosh_iv(a, order)?)
}

fn arcsin_point(a: &Interval, order: u32) -> Result<Interval> {
    let one = Interval::point(1.0);
    let denom = one.sub(&a.pow_int(2)?)?.sqrt_iv()?;
    arctan_iv(&a.div(&denom)?, order)
}

fn arcsinh_point(a: &Interval, order: u32) -> Result<Interval> {
    let one = Interval::point(1.0);
    let root = one.add(&a.pow_int(2)?)?.sqrt_iv()?;
    log_iv(&a.add(&root)?, order)
}

/// Interval enclosure of `fn(x)` over `a` with the given series order.
///
/// Monotone functions (and the monotone stretches of sin/cos that the
/// catalog actually visits) are evaluated at their endpoints; everything
/// else falls back to interval Horner over the whole box.
pub fn enclose(fn_id: FnId, a: &Interval, order: u32) -> Result<Interval> {
    check_order(order)?;
    let half_pi_lo = PI_ENCLOSURE.lo / 2.0;
    match fn_id {
        FnId::Sin => {
            require_mag(fn_id, a, 4.0)?;
            if -half_pi_lo <= a.lo && a.hi <= half_pi_lo {
                endpoint_increasing(a, |p| sin_iv(p, order))
            } else {
                sin_iv(a, order)
            }
        }
        FnId::Cos => {
            require_mag(fn_id, a, 4.0)?;
            if 0.0 <= a.lo && a.hi <= PI_ENCLOSURE.lo {
                endpoint_decreasing(a, |p| cos_iv(p, order))
            } else if a.hi <= 0.0 && -PI_ENCLOSURE.lo <= a.lo {
                endpoint_increasing(a, |p| cos_iv(p, order))
            } else {
                cos_iv(a, order)
            }
        }
        FnId::Sinh => {
            require_mag(fn_id, a, 10.5)?;
            endpoint_increasing(a, |p| sinh_iv(p, order))
        }
        FnId::Cosh => {
            require_mag(fn_id, a, 10.5)?;
            // even and monotone on each half: image is [cosh(mig), cosh(mag)]
            let lo = cosh_iv(&Interval::point(a.mig()), order)?;
            let hi = cosh_iv(&Interval::point(a.mag()), order)?;
            Interval::new(lo.lo.max(1.0), hi.hi)
        }
        FnId::Exp => {
            require_mag(fn_id, a, 10.5)?;
            endpoint_increasing(a, |p| exp_iv(p, order))
        }
        FnId::Tan => {
            require_mag(fn_id, a, 4.0)?;
            let c = enclose(FnId::Cos, a, order)?;
            if c.lo <= 0.0 {
                return Err(Error::DomainError(
                    "tan over an interval where cos may change sign".into(),
                ));
            }
            // within one branch tan is increasing
            endpoint_increasing(a, |p| tan_point(p, order))
        }
        FnId::Tanh => {
            require_mag(fn_id, a, 4.0)?;
            endpoint_increasing(a, |p| tanh_point(p, order))
        }
        FnId::Log => {
            if a.lo <= 0.0 {
                return Err(Error::DomainError(format!(
                    "log over an interval reaching {} <= 0",
                    a.lo
                )));
            }
            endpoint_increasing(a, |p| log_iv(p, order))
        }
        FnId::Arctan => endpoint_increasing(a, |p| arctan_iv(p, order)),
        FnId::Arctanh => {
            if a.mag() >= 1.0 {
                return Err(Error::DomainError(format!(
                    "arctanh needs the interval strictly inside (-1, 1), got {a}"
                )));
            }
            endpoint_increasing(a, |p| artanh_series(p, order))
        }
        FnId::Arcsin => {
            if a.mag() >= 1.0 {
                return Err(Error::DomainError(format!(
                    "arcsin needs the interval strictly inside (-1, 1), got {a}"
                )));
            }
            endpoint_increasing(a, |p| arcsin_point(p, order))
        }
        FnId::Arcsinh => endpoint_increasing(a, |p| arcsinh_point(p, order)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64) -> Interval {
        Interval::point(x)
    }

    #[test]
    fn cos_zero_contains_one() {
        let r = enclose(FnId::Cos, &pt(0.0), 8).unwrap();
        assert!(r.contains(1.0));
        assert!(r.width() < 1e-15);
    }

    #[test]
    fn sin_one_tight_at_order_20() {
        let r = enclose(FnId::Sin, &pt(1.0), 20).unwrap();
        assert!(r.contains(0.8414709848078965066525023216302989996_f64));
        assert!(r.width() <= 1e-12, "width = {}", r.width());
    }

    #[test]
    fn log_rejects_nonpositive() {
        let a = Interval::new(-1.0, 2.0).unwrap();
        assert!(matches!(enclose(FnId::Log, &a, 24), Err(Error::DomainError(_))));
    }

    #[test]
    fn tan_rejects_cos_sign_change() {
        let a = Interval::new(1.0, 2.0).unwrap(); // contains pi/2
        assert!(matches!(enclose(FnId::Tan, &a, 24), Err(Error::DomainError(_))));
    }

    #[test]
    fn known_point_values() {
        // frozen from an independent 40-digit computation
        let cases: [(FnId, f64, f64); 8] = [
            (FnId::Sinh, 1.0, 1.175201193643801456882381850595600815156),
            (FnId::Cosh, 1.0, 1.543080634815243778477905620757061682602),
            (FnId::Tanh, 0.5, 0.4621171572600097585023184836436725487303),
            (FnId::Log, 3.0, 1.0986122886681096913952452369225257046475),
            (FnId::Arcsin, 0.5, 0.5235987755982988730771072305465838140329),
            (FnId::Arctan, 1.0, 0.7853981633974483096156608458198757210493),
            (FnId::Arcsinh, 1.0, 0.8813735870195430252326093249797923090282),
            (FnId::Arctanh, 0.5, 0.5493061443340548456976226184612628523237),
        ];
        for (f, x, want) in cases {
            let r = enclose(f, &pt(x), DEFAULT_ORDER).unwrap();
            assert!(r.contains(want), "{f}({x}) = {want} not in {r}");
        }
    }

    #[test]
    fn arctan_reciprocal_branch() {
        // arctan(7.02...) exercises the pi/2 identity
        let x = 7.0178546196033174_f64;
        let want = 1.4292554741885322_f64; // f64-rounded true value
        let r = enclose(FnId::Arctan, &pt(x), DEFAULT_ORDER).unwrap();
        assert!(r.lo <= want && want <= r.hi);
        assert!(r.width() < 1e-13);
    }

    #[test]
    fn arctan_straddles_the_identity_boundary() {
        let a = Interval::new(0.9, 1.2).unwrap();
        let r = enclose(FnId::Arctan, &a, DEFAULT_ORDER).unwrap();
        assert!(r.contains(0.9f64.atan()) && r.contains(1.2f64.atan()));
    }

    #[test]
    fn sinh_supported_to_ten_and_a_half() {
        let r = enclose(FnId::Sinh, &pt(10.0), 40).unwrap();
        assert!(r.contains(11013.232874703393377_f64));
        assert!(enclose(FnId::Sinh, &pt(11.0), 40).is_err());
        assert!(enclose(FnId::Sin, &pt(5.0), 24).is_err());
    }

    #[test]
    fn width_weakly_decreases_with_order_while_tail_dominates() {
        let mut prev = f64::INFINITY;
        for order in 4..=24u32 {
            let w = enclose(FnId::Sin, &pt(1.0), order).unwrap().width();
            assert!(
                w <= prev + 64.0 * f64::EPSILON,
                "width grew from {prev} to {w} at order {order}"
            );
            prev = w;
        }
    }

    #[test]
    fn parity_symmetry() {
        for x in [0.3, 1.1, 2.7, 3.9] {
            let plus = enclose(FnId::Sin, &pt(x), 24).unwrap();
            let minus = enclose(FnId::Sin, &pt(-x), 24).unwrap();
            assert_eq!(minus.lo, -plus.hi);
            assert_eq!(minus.hi, -plus.lo);
            let cp = enclose(FnId::Cos, &pt(x), 24).unwrap();
            let cm = enclose(FnId::Cos, &pt(-x), 24).unwrap();
            assert_eq!(cp, cm);
        }
    }

    #[test]
    fn ratio_series_match_quotients() {
        // against f64 quotients at comfortable points
        for x in [0.3_f64, 1.0, 2.5] {
            let r = sinc_iv(&pt(x), 24).unwrap();
            assert!(r.contains(x.sin() / x), "sinc({x}): {r}");
            assert!(r.width() < 1e-13);
            let r = sinch_iv(&pt(x), 24).unwrap();
            assert!(r.contains(x.sinh() / x), "sinch({x}): {r}");
        }
        // tiny arguments with large relative width stay tight
        let u = Interval::new(1e-4, 6.4e-4).unwrap();
        let r = sinc_iv(&u, 24).unwrap();
        assert!(r.lo > 0.999_999_8 && r.hi <= 1.0 + 1e-14, "{r}");
    }

    #[test]
    fn order_limits() {
        assert!(matches!(enclose(FnId::Sin, &pt(1.0), 0), Err(Error::Unsupported(_))));
        assert!(matches!(
            enclose(FnId::Sin, &pt(1.0), MAX_ORDER + 1),
            Err(Error::Unsupported(_))
        ));
    }
}
