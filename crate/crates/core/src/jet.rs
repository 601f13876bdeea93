//! Approximate complex 1-jets on the tri-disk.
//!
//! A [`Jet`] `(f, f0, f1, f2, e)` stands for every function `g` on
//! `A = { (z0, z1, z2) : |zk| <= 1 }` with
//! `|g(z) - (f + f0 z0 + f1 z1 + f2 z2)| < e` for all `z` in `A`.
//!
//! A jet with `e = +inf` is the failure sentinel returned when a divisor or
//! square root argument cannot be kept away from zero. It contains every
//! function, so any bound derived from it is vacuous.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::complex::{BallComplex, ExactComplex};
use crate::roundoff::{infinity, record_value, EPS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    f: ExactComplex,
    f0: ExactComplex,
    f1: ExactComplex,
    f2: ExactComplex,
    e: f64,
    size: f64,
}

impl Jet {
    /// Builds a jet and caches `size`, an upper bound on `|f0|+|f1|+|f2|`.
    ///
    /// A NaN error (from `inf * 0` while propagating a sentinel) is stored
    /// as `+inf`.
    pub fn new(f: ExactComplex, f0: ExactComplex, f1: ExactComplex, f2: ExactComplex, e: f64) -> Self {
        let size = (1.0 + 2.0 * EPS) * (f0.abs_ub() + (f1.abs_ub() + f2.abs_ub()));
        let e = if e.is_nan() { infinity() } else { e };
        record_value(size);
        record_value(e);
        Jet { f, f0, f1, f2, e, size }
    }

    pub fn constant(f: ExactComplex) -> Self {
        Jet::with_error(f, 0.0)
    }

    pub fn with_error(f: ExactComplex, e: f64) -> Self {
        let z = ExactComplex::ZERO;
        Jet::new(f, z, z, z, e)
    }

    pub fn real(x: f64) -> Self {
        Jet::constant(ExactComplex::real(x))
    }

    pub fn zero() -> Self {
        Jet::real(0.0)
    }

    pub fn one() -> Self {
        Jet::real(1.0)
    }

    pub fn sentinel() -> Self {
        Jet::with_error(ExactComplex::ZERO, infinity())
    }

    pub fn is_sentinel(&self) -> bool {
        self.e == infinity()
    }

    pub fn f(&self) -> ExactComplex {
        self.f
    }

    pub fn f0(&self) -> ExactComplex {
        self.f0
    }

    pub fn f1(&self) -> ExactComplex {
        self.f1
    }

    pub fn f2(&self) -> ExactComplex {
        self.f2
    }

    /// The linear coefficients `[f0, f1, f2]`.
    pub fn linear(&self) -> [ExactComplex; 3] {
        [self.f0, self.f1, self.f2]
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn size(&self) -> f64 {
        self.size
    }

    /// Upper bound on `|g(z)|` over the class and the tri-disk.
    pub fn abs_ub(&self) -> f64 {
        (1.0 + 2.0 * EPS) * (self.f.abs_ub() + (self.size + self.e))
    }

    /// Lower bound on `|g(z)|` over the class and the tri-disk, clamped at 0.
    pub fn abs_lb(&self) -> f64 {
        let v = (1.0 - EPS) * (self.f.abs_lb() - (1.0 + EPS) * (self.size + self.e));
        if v > 0.0 {
            v
        } else {
            0.0
        }
    }

    pub fn sqrt(&self) -> Jet {
        let xdist = self.size;
        let ax = self.f.abs_ub();
        let d = ax - (1.0 + EPS) * (xdist + self.e);
        if d.is_nan() || d <= 0.0 {
            return Jet::with_error(
                ExactComplex::ZERO,
                (1.0 + 2.0 * EPS) * (ax + (xdist + self.e)).sqrt(),
            );
        }
        let r_f = self.f.sqrt();
        let t = r_f + r_f;
        let r_f0 = BallComplex::exact(self.f0) / t;
        let r_f1 = BallComplex::exact(self.f1) / t;
        let r_f2 = BallComplex::exact(self.f2) / t;
        let e = (1.0 + 3.0 * EPS)
            * (((1.0 + EPS) * ax.sqrt()
                - (1.0 - 3.0 * EPS) * (xdist / (2.0 * ax.sqrt()) + d.sqrt()))
                + ((r_f.e + r_f0.e) + (r_f1.e + r_f2.e)));
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl From<ExactComplex> for Jet {
    fn from(f: ExactComplex) -> Self {
        Jet::constant(f)
    }
}

impl From<f64> for Jet {
    fn from(x: f64) -> Self {
        Jet::real(x)
    }
}

#[inline]
fn rounding(r_f: BallComplex, r_f0: BallComplex, r_f1: BallComplex, r_f2: BallComplex) -> f64 {
    (r_f.e + r_f0.e) + (r_f1.e + r_f2.e)
}

#[inline]
fn from_balls(r_f: BallComplex, r_f0: BallComplex, r_f1: BallComplex, r_f2: BallComplex, e: f64) -> Jet {
    Jet::new(r_f.z, r_f0.z, r_f1.z, r_f2.z, e)
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet::new(-self.f, -self.f0, -self.f1, -self.f2, self.e)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, y: Jet) -> Jet {
        let r_f = self.f + y.f;
        let r_f0 = self.f0 + y.f0;
        let r_f1 = self.f1 + y.f1;
        let r_f2 = self.f2 + y.f2;
        let e = (1.0 + 3.0 * EPS) * ((self.e + y.e) + rounding(r_f, r_f0, r_f1, r_f2));
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, y: Jet) -> Jet {
        let r_f = self.f - y.f;
        let r_f0 = self.f0 - y.f0;
        let r_f1 = self.f1 - y.f1;
        let r_f2 = self.f2 - y.f2;
        let e = (1.0 + 3.0 * EPS) * ((self.e + y.e) + rounding(r_f, r_f0, r_f1, r_f2));
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, y: f64) -> Jet {
        let r_f = self.f + y;
        Jet::new(r_f.z, self.f0, self.f1, self.f2, (1.0 + EPS) * (self.e + r_f.e))
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(self, y: f64) -> Jet {
        let r_f = self.f - y;
        Jet::new(r_f.z, self.f0, self.f1, self.f2, (1.0 + EPS) * (self.e + r_f.e))
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, y: Jet) -> Jet {
        let xdist = self.size;
        let ydist = y.size;
        let ax = self.f.abs_ub();
        let ay = y.f.abs_ub();
        let r_f = self.f * y.f;
        let r_f0 = self.f * y.f0 + self.f0 * y.f;
        let r_f1 = self.f * y.f1 + self.f1 * y.f;
        let r_f2 = self.f * y.f2 + self.f2 * y.f;
        let a = (xdist + self.e) * (ydist + y.e);
        let b = ax * y.e + ay * self.e;
        let c = rounding(r_f, r_f0, r_f1, r_f2);
        from_balls(r_f, r_f0, r_f1, r_f2, (1.0 + 3.0 * EPS) * (a + (b + c)))
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, y: f64) -> Jet {
        let r_f = self.f * y;
        let r_f0 = self.f0 * y;
        let r_f1 = self.f1 * y;
        let r_f2 = self.f2 * y;
        let e = (1.0 + 3.0 * EPS) * ((self.e * y.abs()) + rounding(r_f, r_f0, r_f1, r_f2));
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    fn div(self, y: f64) -> Jet {
        let r_f = self.f / y;
        let r_f0 = self.f0 / y;
        let r_f1 = self.f1 / y;
        let r_f2 = self.f2 / y;
        let e = (1.0 + 3.0 * EPS) * ((self.e / y.abs()) + rounding(r_f, r_f0, r_f1, r_f2));
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, y: Jet) -> Jet {
        let xdist = self.size;
        let ydist = y.size;
        let ax = self.f.abs_ub();
        let ay = y.f.abs_lb();
        let d = ay - (1.0 + EPS) * (y.e + ydist);
        if d.is_nan() || d <= 0.0 {
            return Jet::sentinel();
        }
        let den = y.f * y.f;
        let r_f = self.f / y.f;
        let r_f0 = (self.f0 * y.f - self.f * y.f0) / den;
        let r_f1 = (self.f1 * y.f - self.f * y.f1) / den;
        let r_f2 = (self.f2 * y.f - self.f * y.f2) / den;
        let a = (ax + (xdist + self.e)) / d;
        let b = (ax / ay + xdist / ay) + (ydist * ax) / (ay * ay);
        let c = rounding(r_f, r_f0, r_f1, r_f2);
        let e = (1.0 + 3.0 * EPS) * (((1.0 + 3.0 * EPS) * a - (1.0 - 3.0 * EPS) * b) + c);
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}

impl Div<Jet> for f64 {
    type Output = Jet;
    fn div(self, y: Jet) -> Jet {
        let ydist = y.size;
        let ax = self.abs();
        let ay = y.f.abs_lb();
        let d = ay - (1.0 + EPS) * (y.e + ydist);
        if d.is_nan() || d <= 0.0 {
            return Jet::sentinel();
        }
        let den = y.f * y.f;
        let r_f = self / y.f;
        let r_f0 = (-self * y.f0) / den;
        let r_f1 = (-self * y.f1) / den;
        let r_f2 = (-self * y.f2) / den;
        let b = ax / ay + (ydist * ax) / (ay * ay);
        let c = rounding(r_f, r_f0, r_f1, r_f2);
        let e = (1.0 + 3.0 * EPS) * (((1.0 + 2.0 * EPS) * (ax / d) - (1.0 - 3.0 * EPS) * b) + c);
        from_balls(r_f, r_f0, r_f1, r_f2, e)
    }
}
