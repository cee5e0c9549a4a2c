//! Double-double arithmetic from error-free transforms.
//!
//! A value is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 32 significant decimal digits. Products use an FMA (`mul_add`) so
//! `two_prod` is exact. This backs the high-precision oracle; no bignum
//! dependency is needed at the precision the acceptance tolerances ask for.

/// Conservative per-operation relative rounding bound for double-double
/// add/sub/mul/div/sqrt (literature bounds are a few units of 2^-105).
pub const DD_EPS: f64 = 2.5e-30; // ~ 2^-98.3, generous headroom

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles as a normalized pair.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s0, e0) = two_sum(self.hi, other.hi);
        let (s1, e1) = two_sum(self.lo, other.lo);
        let t = e0 + s1;
        let (r0, r1) = quick_two_sum(s0, t);
        let t = e1 + r1;
        let (hi, lo) = quick_two_sum(r0, t);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = self.hi.mul_add(other.lo, e);
        let e = self.lo.mul_add(other.hi, e);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let e = self.lo.mul_add(other, e);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q0 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q0));
        let q1 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q0, q1);
        Dd { hi, lo }.add(Dd::from_f64(q2))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        // One Newton step on the f64 estimate doubles its precision.
        let s = self.hi.sqrt();
        let e = Dd::from_f64(s);
        let diff = self.sub(e.mul(e));
        e.add(Dd {
            hi: diff.hi / (2.0 * s),
            lo: diff.lo / (2.0 * s),
        })
    }

    /// Compare by value; pairs are normalized so (hi, lo) orders lexicographically.
    pub fn lt(self, other: Dd) -> bool {
        self.hi < other.hi || (self.hi == other.hi && self.lo < other.lo)
    }

    pub fn abs_f64(self) -> f64 {
        self.to_f64().abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_prod_is_exact() {
        let a = 1.0 + 2f64.powi(-30);
        let b = 1.0 + 2f64.powi(-29);
        let (p, e) = two_prod(a, b);
        // reconstruct in 128-bit-ish by splitting: p + e must equal a*b exactly
        assert_eq!(p, a * b);
        assert_eq!(e, a.mul_add(b, -p));
    }

    #[test]
    fn add_tracks_tiny_terms() {
        let one = Dd::ONE;
        let tiny = Dd::from_f64(1e-25);
        let s = one.add(tiny).sub(one);
        assert!((s.to_f64() - 1e-25).abs() < 1e-40);
    }

    #[test]
    fn div_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::E);
        let b = Dd::from_f64(std::f64::consts::PI);
        let q = a.div(b);
        let back = q.mul(b);
        let err = back.sub(a).abs_f64();
        assert!(err < 1e-30, "err = {err}");
    }

    #[test]
    fn sqrt_squares_back() {
        let a = Dd::from_f64(2.0);
        let r = a.sqrt();
        let err = r.mul(r).sub(a).abs_f64();
        assert!(err < 1e-31, "err = {err}");
    }

    #[test]
    fn sqrt_of_zero() {
        assert_eq!(Dd::ZERO.sqrt(), Dd::ZERO);
    }
}
