//! 2x2 matrices of jets, standing for classes of PSL(2,C)-valued functions
//! on the tri-disk.

use std::ops::Mul;

use crate::jet::Jet;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JetMatrix {
    pub a: Jet,
    pub b: Jet,
    pub c: Jet,
    pub d: Jet,
}

impl Default for JetMatrix {
    fn default() -> Self {
        JetMatrix::identity()
    }
}

impl JetMatrix {
    pub fn new(a: Jet, b: Jet, c: Jet, d: Jet) -> Self {
        JetMatrix { a, b, c, d }
    }

    pub fn identity() -> Self {
        JetMatrix::new(Jet::one(), Jet::zero(), Jet::zero(), Jet::one())
    }

    pub fn inverse(&self) -> JetMatrix {
        JetMatrix::new(self.d, -self.b, -self.c, self.a)
    }

    /// Exponential of the complex distance between the axis of the matrix
    /// and its image, on the branch of modulus at least 1.
    pub fn orthodist(&self) -> Jet {
        let t = self.a * self.d + self.b * self.c;
        let r = (t * t - 1.0).sqrt();
        if on_large_branch(t + r) {
            t + r
        } else {
            t - r
        }
    }

    /// Square of the larger eigenvalue, `exp` of the complex translation
    /// length.
    pub fn length(&self) -> Jet {
        let t = (self.a + self.d) * 0.5;
        let r = (t * t - 1.0).sqrt();
        if on_large_branch(t + r) {
            (t + r) * (t + r)
        } else {
            (t - r) * (t - r)
        }
    }

    /// True only if neither `I` nor `-I` belongs to the class.
    pub fn not_identity(&self) -> bool {
        self.b.abs_lb() > 0.0
            || self.c.abs_lb() > 0.0
            || ((self.a - 1.0).abs_lb() > 0.0 && (self.a + 1.0).abs_lb() > 0.0)
            || ((self.d - 1.0).abs_lb() > 0.0 && (self.d + 1.0).abs_lb() > 0.0)
    }

    /// True only if the class contains no diagonal matrix, hence no power of
    /// a short generator.
    pub fn not_f_power(&self) -> bool {
        self.b.abs_lb() > 0.0 || self.c.abs_lb() > 0.0
    }

    pub fn short_generator(z: Jet) -> JetMatrix {
        let sz = z.sqrt();
        let zero = Jet::zero();
        JetMatrix::new(sz, zero, zero, 1.0 / sz)
    }

    pub fn close_generator(x: Jet, z: Jet) -> JetMatrix {
        let sx = x.sqrt();
        let sz = z.sqrt();
        let sh = (sx - 1.0 / sx) * 0.5;
        let ch = (sx + 1.0 / sx) * 0.5;
        JetMatrix::new(ch * sz, sh / sz, sh * sz, ch / sz)
    }
}

fn on_large_branch(r1: Jet) -> bool {
    let f = r1.f();
    f.re * f.re + f.im * f.im >= 1.0
}

impl Mul for JetMatrix {
    type Output = JetMatrix;
    fn mul(self, y: JetMatrix) -> JetMatrix {
        let x = self;
        JetMatrix::new(
            x.a * y.a + x.b * y.c,
            x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d,
        )
    }
}
