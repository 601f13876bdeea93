//! Exact complex numbers and complex balls.
//!
//! An [`ExactComplex`] is held exactly. A [`BallComplex`] stands for every
//! complex number within distance `e` of its center. Each operation returns a
//! ball whose radius covers the rounding committed while computing the
//! center, so `x op y` contains the exact result for every member of the
//! operands.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::roundoff::{self, record_result, record_value, EPS, HALF_EPS};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExactComplex {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BallComplex {
    pub z: ExactComplex,
    pub e: f64,
}

impl ExactComplex {
    pub const ZERO: ExactComplex = ExactComplex { re: 0.0, im: 0.0 };
    pub const ONE: ExactComplex = ExactComplex { re: 1.0, im: 0.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        ExactComplex { re, im }
    }

    pub const fn real(re: f64) -> Self {
        ExactComplex { re, im: 0.0 }
    }

    /// Upper bound on the modulus.
    pub fn abs_ub(self) -> f64 {
        roundoff::hypot_up_factor() * roundoff::hypot(self.re, self.im)
    }

    /// Lower bound on the modulus.
    pub fn abs_lb(self) -> f64 {
        roundoff::hypot_down_factor() * roundoff::hypot(self.re, self.im)
    }

    /// Square root with the branch cut on the positive real axis when
    /// `re <= 0`: the result then lies in the closed upper half plane.
    ///
    /// `self` must not be zero.
    pub fn sqrt(self) -> BallComplex {
        let s = ((self.re.abs() + roundoff::hypot(self.re, self.im)) * 0.5).sqrt();
        let d = (self.im / s) * 0.5;
        let e = EPS * ((1.0 + 4.0 * EPS) * (1.25 * s + 1.75 * d.abs()));
        if self.re > 0.0 {
            ball(s, d, e)
        } else {
            ball(d, s, e)
        }
    }
}

impl BallComplex {
    pub const fn new(re: f64, im: f64, e: f64) -> Self {
        BallComplex { z: ExactComplex { re, im }, e }
    }

    pub const fn exact(z: ExactComplex) -> Self {
        BallComplex { z, e: 0.0 }
    }
}

impl From<ExactComplex> for BallComplex {
    fn from(z: ExactComplex) -> Self {
        BallComplex::exact(z)
    }
}

#[inline]
fn ball(re: f64, im: f64, e: f64) -> BallComplex {
    record_value(re);
    record_value(im);
    record_value(e);
    BallComplex::new(re, im, e)
}

fn record_partials(p: [f64; 4], x: ExactComplex, y: ExactComplex) {
    record_result(p[0], x.re, y.re);
    record_result(p[1], x.im, y.im);
    record_result(p[2], x.im, y.re);
    record_result(p[3], x.re, y.im);
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re, -self.im)
    }
}

impl Add<f64> for ExactComplex {
    type Output = BallComplex;
    fn add(self, y: f64) -> BallComplex {
        let re = self.re + y;
        let e = HALF_EPS * re.abs();
        ball(re, self.im, e)
    }
}

impl Sub<f64> for ExactComplex {
    type Output = BallComplex;
    fn sub(self, y: f64) -> BallComplex {
        let re = self.re - y;
        let e = HALF_EPS * re.abs();
        ball(re, self.im, e)
    }
}

impl Add for ExactComplex {
    type Output = BallComplex;
    fn add(self, y: ExactComplex) -> BallComplex {
        let re = self.re + y.re;
        let im = self.im + y.im;
        let e = HALF_EPS * ((1.0 + EPS) * (re.abs() + im.abs()));
        ball(re, im, e)
    }
}

impl Sub for ExactComplex {
    type Output = BallComplex;
    fn sub(self, y: ExactComplex) -> BallComplex {
        let re = self.re - y.re;
        let im = self.im - y.im;
        let e = HALF_EPS * ((1.0 + EPS) * (re.abs() + im.abs()));
        ball(re, im, e)
    }
}

impl Add for BallComplex {
    type Output = BallComplex;
    fn add(self, y: BallComplex) -> BallComplex {
        let re = self.z.re + y.z.re;
        let im = self.z.im + y.z.im;
        let e = (1.0 + 2.0 * EPS) * (HALF_EPS * (re.abs() + im.abs()) + (self.e + y.e));
        ball(re, im, e)
    }
}

impl Sub for BallComplex {
    type Output = BallComplex;
    fn sub(self, y: BallComplex) -> BallComplex {
        let re = self.z.re - y.z.re;
        let im = self.z.im - y.z.im;
        let e = (1.0 + 2.0 * EPS) * (HALF_EPS * (re.abs() + im.abs()) + (self.e + y.e));
        ball(re, im, e)
    }
}

impl Mul<f64> for ExactComplex {
    type Output = BallComplex;
    fn mul(self, y: f64) -> BallComplex {
        let re = self.re * y;
        let im = self.im * y;
        record_result(re, self.re, y);
        record_result(im, self.im, y);
        ball(re, im, HALF_EPS * ((1.0 + EPS) * (re.abs() + im.abs())))
    }
}

impl Mul<ExactComplex> for f64 {
    type Output = BallComplex;
    fn mul(self, y: ExactComplex) -> BallComplex {
        y * self
    }
}

impl Div<f64> for ExactComplex {
    type Output = BallComplex;
    fn div(self, y: f64) -> BallComplex {
        let re = self.re / y;
        let im = self.im / y;
        record_result(re, self.re, y);
        record_result(im, self.im, y);
        ball(re, im, HALF_EPS * ((1.0 + EPS) * (re.abs() + im.abs())))
    }
}

impl Mul for ExactComplex {
    type Output = BallComplex;
    fn mul(self, y: ExactComplex) -> BallComplex {
        let re1 = self.re * y.re;
        let re2 = self.im * y.im;
        let im1 = self.re * y.im;
        let im2 = self.im * y.re;
        record_result(re1, self.re, y.re);
        record_result(re2, self.im, y.im);
        record_result(im1, self.re, y.im);
        record_result(im2, self.im, y.re);
        let e = EPS * ((1.0 + 2.0 * EPS) * ((re1.abs() + re2.abs()) + (im1.abs() + im2.abs())));
        ball(re1 - re2, im1 + im2, e)
    }
}

impl Div<ExactComplex> for f64 {
    type Output = BallComplex;
    fn div(self, y: ExactComplex) -> BallComplex {
        let nrm = y.re * y.re + y.im * y.im;
        record_result(nrm, y.re.abs() + y.im.abs(), 1.0);
        let re = (self * y.re) / nrm;
        let im = -(self * y.im) / nrm;
        let e = (2.0 * EPS) * ((1.0 + 2.0 * EPS) * (re.abs() + im.abs()));
        ball(re, im, e)
    }
}

impl Div for ExactComplex {
    type Output = BallComplex;
    fn div(self, y: ExactComplex) -> BallComplex {
        let nrm = y.re * y.re + y.im * y.im;
        let xryr = self.re * y.re;
        let xiyi = self.im * y.im;
        let xiyr = self.im * y.re;
        let xryi = self.re * y.im;
        record_result(nrm, y.re.abs() + y.im.abs(), 1.0);
        record_partials([xryr, xiyi, xiyr, xryi], self, y);
        let re = (xryr + xiyi) / nrm;
        let im = (xiyr - xryi) / nrm;
        let a = ((xryr.abs() + xiyi.abs()) + (xiyr.abs() + xryi.abs())) / nrm;
        let e = (5.0 * HALF_EPS) * ((1.0 + 3.0 * EPS) * a);
        ball(re, im, e)
    }
}

impl Div for BallComplex {
    type Output = BallComplex;

    /// Panics unless `y.e^2 < 10000 eps^2 |y.z|^2`.
    fn div(self, y: BallComplex) -> BallComplex {
        let (x, yz) = (self.z, y.z);
        let nrm = yz.re * yz.re + yz.im * yz.im;
        let xryr = x.re * yz.re;
        let xiyi = x.im * yz.im;
        let xiyr = x.im * yz.re;
        let xryi = x.re * yz.im;
        record_result(nrm, yz.re.abs() + yz.im.abs(), 1.0);
        record_partials([xryr, xiyi, xiyr, xryi], x, yz);
        assert!(
            y.e * y.e < (10000.0 * EPS * EPS) * nrm,
            "ball division: divisor radius too large"
        );
        let a = (xryr.abs() + xiyi.abs()) + (xiyr.abs() + xryi.abs());
        let b = self.e * (yz.re.abs() + yz.im.abs()) + y.e * (x.re.abs() + x.im.abs());
        let e = (1.0 + 4.0 * EPS) * (((5.0 * HALF_EPS) * a + (1.0 + 103.0 * EPS) * b) / nrm);
        ball((xryr + xiyi) / nrm, (xiyr - xryi) / nrm, e)
    }
}
