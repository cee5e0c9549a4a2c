//! Outward-rounded interval arithmetic kernel.
//!
//! Every operation guarantees containment: if `a ∈ A` and `b ∈ B` then
//! `op(a, b) ∈ op(A, B)`. Outward rounding is done by one-ULP widening of
//! each natively rounded endpoint instead of switching the FPU rounding
//! mode, so all operations stay pure and thread-safe. Endpoints are always
//! finite; overflow surfaces as [`Error::NonFinite`] and aborts the
//! enclosing proof attempt.

use crate::error::{Error, Result};

/// Closed floating-point interval `[lo, hi]` with `lo <= hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

/// π is irrational, so `[PI, next_up(PI)]` is a genuine enclosure:
/// the f64 constant is the correctly rounded value and rounds down.
pub const PI_ENCLOSURE: Interval = Interval {
    lo: std::f64::consts::PI,
    hi: std::f64::consts::PI.next_up(),
};

#[inline]
fn widen_lo(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn widen_hi(x: f64) -> f64 {
    x.next_up()
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite);
        }
        if lo > hi {
            return Err(Error::DomainError(format!("inverted interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// Degenerate point interval `[c, c]`.
    pub fn point(c: f64) -> Self {
        debug_assert!(c.is_finite());
        Self { lo: c, hi: c }
    }

    pub fn from_int(n: i64) -> Self {
        // i64 up to 2^53 is exact in f64; catalog constants are tiny.
        Self::point(n as f64)
    }

    /// Enclosure of the rational n/d (d > 0), widened outward.
    pub fn from_rational(n: i64, d: u64) -> Self {
        debug_assert!(d > 0);
        let q = n as f64 / d as f64;
        Self {
            lo: widen_lo(q),
            hi: widen_hi(q),
        }
    }

    fn check(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite);
        }
        debug_assert!(lo <= hi, "kernel produced inverted interval [{lo}, {hi}]");
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() {
            m
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Magnitude: max |x| over the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Mignitude: min |x| over the interval (0 if it straddles zero).
    pub fn mig(&self) -> f64 {
        if self.lo <= 0.0 && 0.0 <= self.hi {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn neg(&self) -> Interval {
        // Negation is exact; no widening.
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn add(&self, other: &Interval) -> Result<Interval> {
        Self::check(widen_lo(self.lo + other.lo), widen_hi(self.hi + other.hi))
    }

    pub fn sub(&self, other: &Interval) -> Result<Interval> {
        Self::check(widen_lo(self.lo - other.hi), widen_hi(self.hi - other.lo))
    }

    pub fn mul(&self, other: &Interval) -> Result<Interval> {
        let (a, b, c, d) = (self.lo, self.hi, other.lo, other.hi);
        let products = [a * c, a * d, b * c, b * d];
        let mut lo = products[0];
        let mut hi = products[0];
        for &p in &products[1..] {
            lo = lo.min(p);
            hi = hi.max(p);
        }
        Self::check(widen_lo(lo), widen_hi(hi))
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.lo <= 0.0 && 0.0 <= other.hi {
            return Err(Error::DivisionByZeroInterval);
        }
        let (a, b, c, d) = (self.lo, self.hi, other.lo, other.hi);
        let quotients = [a / c, a / d, b / c, b / d];
        let mut lo = quotients[0];
        let mut hi = quotients[0];
        for &q in &quotients[1..] {
            lo = lo.min(q);
            hi = hi.max(q);
        }
        Self::check(widen_lo(lo), widen_hi(hi))
    }

    /// Enclosure of `x^n` over the interval. Even powers of zero-straddling
    /// intervals keep `lo = 0` instead of the naive product's negative slop.
    pub fn pow_int(&self, n: u32) -> Result<Interval> {
        match n {
            0 => Ok(Interval {
                lo: widen_lo(1.0),
                hi: widen_hi(1.0),
            }),
            1 => Ok(*self),
            _ if n % 2 == 1 => {
                // Odd power is monotone: endpoint powers bracket the image.
                let lo = pow_scalar(self.lo, n)?;
                let hi = pow_scalar(self.hi, n)?;
                Self::check(lo.lo, hi.hi)
            }
            _ => {
                // Even power: image is [mig^n, mag^n].
                let lo = if self.mig() == 0.0 {
                    Interval::point(0.0)
                } else {
                    pow_scalar(self.mig(), n)?
                };
                let hi = pow_scalar(self.mag(), n)?;
                Self::check(lo.lo.max(0.0), hi.hi)
            }
        }
    }

    /// Square root; requires `lo >= 0`. f64 sqrt is correctly rounded but the
    /// endpoints are widened anyway, consistent with the rest of the kernel.
    /// Zero endpoints stay exact (sqrt(0) = 0 has no rounding to cover).
    pub fn sqrt_iv(&self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::DomainError(format!(
                "sqrt of interval with negative lower bound {}",
                self.lo
            )));
        }
        let lo = if self.lo == 0.0 { 0.0 } else { widen_lo(self.lo.sqrt()).max(0.0) };
        let hi = if self.hi == 0.0 { 0.0 } else { widen_hi(self.hi.sqrt()) };
        Self::check(lo, hi)
    }

    /// Bisect at a representable interior point; both halves share the
    /// midpoint so the union equals the input.
    pub fn split(&self) -> Result<(Interval, Interval)> {
        let m = self.midpoint();
        if !(self.lo < m && m < self.hi) {
            return Err(Error::DegenerateSplit);
        }
        Ok((
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        ))
    }
}

/// Enclosure of `c^n` for a scalar, via binary exponentiation in interval
/// arithmetic (f64 powi makes no rounding promise, so it is not used).
fn pow_scalar(c: f64, n: u32) -> Result<Interval> {
    let mut base = Interval::point(c);
    let mut acc = Interval::point(1.0);
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&base)?;
        }
        k >>= 1;
        if k > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(acc)
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure_is_one_ulp_wide() {
        // True-π containment is cross-checked against the oracle's Machin
        // computation in the oracle tests; here only the shape.
        assert!(PI_ENCLOSURE.lo < PI_ENCLOSURE.hi);
        assert_eq!(PI_ENCLOSURE.lo, std::f64::consts::PI);
        assert_eq!(PI_ENCLOSURE.hi, std::f64::consts::PI.next_up());
    }

    #[test]
    fn add_contains_exact_integers() {
        let a = Interval::new(1.0, 2.0).unwrap();
        let b = Interval::new(3.0, 4.0).unwrap();
        let s = a.add(&b).unwrap();
        assert!(s.lo <= 4.0 && 6.0 <= s.hi);
    }

    #[test]
    fn mul_sign_cases() {
        let a = Interval::new(-1.0, 2.0).unwrap();
        let b = Interval::new(3.0, 4.0).unwrap();
        let p = a.mul(&b).unwrap();
        assert!(p.lo <= -4.0 && 8.0 <= p.hi);
    }

    #[test]
    fn div_by_zero_straddling_interval() {
        let a = Interval::point(1.0);
        let b = Interval::new(-1.0, 1.0).unwrap();
        assert_eq!(a.div(&b), Err(Error::DivisionByZeroInterval));
    }

    #[test]
    fn even_power_of_straddling_interval_has_zero_lo() {
        let a = Interval::new(-2.0, 1.0).unwrap();
        let p = a.pow_int(2).unwrap();
        assert_eq!(p.lo, 0.0);
        assert!(p.hi >= 4.0);
    }

    #[test]
    fn cube_of_positive_interval() {
        let a = Interval::new(2.0, 3.0).unwrap();
        let p = a.pow_int(3).unwrap();
        assert!(p.lo <= 8.0 && 27.0 <= p.hi);
        assert!(p.lo > 7.9 && p.hi < 27.1);
    }

    #[test]
    fn zeroth_power_is_widened_one() {
        let a = Interval::new(-5.0, 9.0).unwrap();
        let p = a.pow_int(0).unwrap();
        assert!(p.contains(1.0));
        assert!(p.width() < 1e-15);
    }

    #[test]
    fn sqrt_cases() {
        let a = Interval::new(4.0, 9.0).unwrap();
        let r = a.sqrt_iv().unwrap();
        assert!(r.lo <= 2.0 && 3.0 <= r.hi);
        assert_eq!(Interval::point(0.0).sqrt_iv().unwrap(), Interval::point(0.0));
        assert!(matches!(
            Interval::new(-1.0, 1.0).unwrap().sqrt_iv(),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn split_shares_midpoint() {
        let a = Interval::new(0.0, 2.0).unwrap();
        let (l, r) = a.split().unwrap();
        assert_eq!(l.hi, r.lo);
        assert_eq!(l.lo, 0.0);
        assert_eq!(r.hi, 2.0);
    }

    #[test]
    fn split_degenerate() {
        assert_eq!(Interval::point(1.0).split(), Err(Error::DegenerateSplit));
    }

    #[test]
    fn split_denormal_width() {
        let a = Interval::new(0.0, 1e-300).unwrap();
        let (l, r) = a.split().unwrap();
        assert!(l.lo < l.hi && r.lo < r.hi);
        assert!(l.hi > 0.0 && l.hi < 1e-300);
    }

    #[test]
    fn overflow_is_an_error_not_a_clamp() {
        let big = Interval::point(1e308);
        assert_eq!(big.mul(&big), Err(Error::NonFinite));
        assert_eq!(big.add(&big), Err(Error::NonFinite));
    }

    #[test]
    fn point_interval_ops_still_widen() {
        let a = Interval::point(0.1);
        let s = a.add(&a).unwrap();
        assert!(s.lo < 0.2 && 0.2 < s.hi);
        assert!(s.width() > 0.0);
    }
}
