//! High-precision reference arithmetic for checking that the rigorous
//! binary64 kernels of `hyperverify` contain the true results.
//!
//! Values are complex numbers with 128-bit binary significands. Members of
//! ball and jet classes are sampled as concrete evaluators and compared with
//! the classes returned by the kernels.

use dashu_float::ops::SquareRoot;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use rand::Rng;

use hyperverify::conditions::{BoxAddress, SCALE};
use hyperverify::{BallComplex, ExactComplex, Jet, JetMatrix};

/// Significand bits of every oracle value.
pub const PRECISION: usize = 128;

/// Sampled perturbations stay below `(1 - MARGIN)` times the class radius.
pub const MARGIN: f64 = 1.0 / (1u64 << 20) as f64;

/// Denominators closer than this to zero are rejected.
pub const DENOMINATOR_FLOOR: f64 = 1.0 / (1u64 << 40) as f64;

pub type Hp = FBig<HalfEven, 2>;

/// The exact value of `x` at oracle precision.
pub fn hp(x: f64) -> Hp {
    Hp::try_from(x).expect("finite binary64").with_precision(PRECISION).value()
}

fn hp_abs(x: &Hp) -> Hp {
    if *x < Hp::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HpComplex {
    pub re: Hp,
    pub im: Hp,
}

impl HpComplex {
    pub fn new(re: f64, im: f64) -> Self {
        HpComplex { re: hp(re), im: hp(im) }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    pub fn add(&self, o: &Self) -> Self {
        HpComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        HpComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Self {
        HpComplex { re: -self.re.clone(), im: -self.im.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        HpComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, k: &Hp) -> Self {
        HpComplex { re: &self.re * k, im: &self.im * k }
    }

    /// `self / o`; `None` when `|o|` is below [`DENOMINATOR_FLOOR`].
    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sq();
        let floor = hp(DENOMINATOR_FLOOR);
        if n < &floor * &floor {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) / &n;
        let im = (&self.im * &o.re - &self.re * &o.im) / &n;
        Some(HpComplex { re, im })
    }

    pub fn norm_sq(&self) -> Hp {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Hp {
        self.norm_sq().sqrt()
    }

    /// Square root with the kernels' branch: principal when the real part
    /// is positive, otherwise the root with nonnegative imaginary part.
    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        let zero = Hp::ZERO;
        if r == zero {
            return Self::zero();
        }
        let two = hp(2.0);
        let s = ((&r + &hp_abs(&self.re)) / &two).sqrt();
        let d = &self.im / &(&two * &s);
        if self.re > zero {
            HpComplex { re: s, im: d }
        } else {
            HpComplex { re: d, im: s }
        }
    }

    /// The square root closest to `near`.
    pub fn sqrt_near(&self, near: ExactComplex) -> Self {
        let r = self.sqrt();
        let n = HpComplex::from(near);
        let other = r.neg();
        if other.sub(&n).norm_sq() < r.sub(&n).norm_sq() {
            other
        } else {
            r
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().value(), self.im.to_f64().value())
    }
}

impl From<ExactComplex> for HpComplex {
    fn from(x: ExactComplex) -> Self {
        HpComplex::new(x.re, x.im)
    }
}

/// Operations understood by [`hp_eval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Op {
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    /// Square root on the branch closest to the given value.
    SqrtNear(ExactComplex),
}

/// The exact result of `op` on `args`; `None` when a denominator is too
/// close to zero and the caller should resample.
pub fn hp_eval(op: Op, args: &[HpComplex]) -> Option<HpComplex> {
    Some(match op {
        Op::Neg => args[0].neg(),
        Op::Add => args[0].add(&args[1]),
        Op::Sub => args[0].sub(&args[1]),
        Op::Mul => args[0].mul(&args[1]),
        Op::Div => args[0].div(&args[1])?,
        Op::Sqrt => args[0].sqrt(),
        Op::SqrtNear(near) => args[0].sqrt_near(near),
    })
}

/// A point of the closed tri-disk.
pub type TriDiskPoint = [ExactComplex; 3];

/// A uniform point of the closed unit disk, on the boundary a quarter of
/// the time.
pub fn disk_point<R: Rng + ?Sized>(rng: &mut R) -> ExactComplex {
    let t = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = if rng.gen_bool(0.25) { 1.0 - 1e-12 } else { rng.gen::<f64>().sqrt() };
    ExactComplex::new(r * t.cos(), r * t.sin())
}

pub fn tri_disk_point<R: Rng + ?Sized>(rng: &mut R) -> TriDiskPoint {
    [disk_point(rng), disk_point(rng), disk_point(rng)]
}

/// `f + f0 z0 + f1 z1 + f2 z2` at oracle precision.
pub fn affine_value(x: &Jet, z: &TriDiskPoint) -> HpComplex {
    let mut v = HpComplex::from(x.f());
    for (c, zk) in x.linear().iter().zip(z) {
        v = v.add(&HpComplex::from(*c).mul(&HpComplex::from(*zk)));
    }
    v
}

/// The shape of a sampled perturbation `delta(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Perturbation {
    Zero,
    /// A constant of modulus `radius * scale`, direction `unit`.
    Constant { unit: ExactComplex, scale: f64 },
    /// `radius * unit * (t + (1 - t) z_k)`.
    Affine { unit: ExactComplex, t: f64, k: usize },
    /// `radius * unit * z_j * z_k`.
    Quadratic { unit: ExactComplex, j: usize, k: usize },
}

impl Perturbation {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let a = rng.gen_range(0.0..std::f64::consts::TAU);
        let unit = ExactComplex::new(a.cos(), a.sin());
        match rng.gen_range(0..5) {
            0 => Perturbation::Zero,
            1 => Perturbation::Constant { unit, scale: 1.0 },
            2 => Perturbation::Constant { unit, scale: rng.gen() },
            3 => Perturbation::Affine { unit, t: rng.gen(), k: rng.gen_range(0..3) },
            _ => Perturbation::Quadratic { unit, j: rng.gen_range(0..3), k: rng.gen_range(0..3) },
        }
    }

    /// `delta(z)` for a class of radius `e`.
    pub fn eval(&self, e: f64, z: &TriDiskPoint) -> HpComplex {
        let r = hp(e) * hp(1.0 - MARGIN);
        let point = |k: usize| HpComplex::from(z[k]);
        match *self {
            Perturbation::Zero => HpComplex::zero(),
            Perturbation::Constant { unit, scale } => HpComplex::from(unit).scale(&(r * hp(scale))),
            Perturbation::Affine { unit, t, k } => {
                let w = HpComplex::new(t, 0.0).add(&point(k).scale(&hp(1.0 - t)));
                HpComplex::from(unit).mul(&w).scale(&r)
            }
            Perturbation::Quadratic { unit, j, k } => {
                HpComplex::from(unit).mul(&point(j)).mul(&point(k)).scale(&r)
            }
        }
    }
}

/// A concrete member of a jet class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JetMember {
    pub jet: Jet,
    pub delta: Perturbation,
}

impl JetMember {
    pub fn eval(&self, z: &TriDiskPoint) -> HpComplex {
        affine_value(&self.jet, z).add(&self.delta.eval(self.jet.e(), z))
    }
}

/// A random member of `x`; `None` for the sentinel.
pub fn sample_member<R: Rng + ?Sized>(x: &Jet, rng: &mut R) -> Option<JetMember> {
    if !x.e().is_finite() {
        return None;
    }
    Some(JetMember { jet: *x, delta: Perturbation::random(rng) })
}

/// A random point of the ball `x`.
pub fn sample_ball<R: Rng + ?Sized>(x: &BallComplex, rng: &mut R) -> HpComplex {
    let origin = [ExactComplex::ZERO; 3];
    let delta = match Perturbation::random(rng) {
        p @ (Perturbation::Zero | Perturbation::Constant { .. }) => p,
        Perturbation::Affine { unit, .. } | Perturbation::Quadratic { unit, .. } => {
            Perturbation::Constant { unit, scale: rng.gen() }
        }
    };
    HpComplex::from(x.z).add(&delta.eval(x.e, &origin))
}

/// Whether `value` lies in the class of `result` at `z`: strictly inside
/// radius `e`, or equal to the affine part when `e` is zero. The sentinel
/// contains everything.
pub fn assert_contained(value: &HpComplex, result: &Jet, z: &TriDiskPoint) -> bool {
    if !result.e().is_finite() {
        return true;
    }
    let d = value.sub(&affine_value(result, z)).norm_sq();
    let e = hp(result.e());
    d < &e * &e || d == Hp::ZERO
}

/// Whether `value` lies in the closed ball `result`.
pub fn ball_contains(result: &BallComplex, value: &HpComplex) -> bool {
    if !result.e.is_finite() {
        return true;
    }
    let d = value.sub(&HpComplex::from(result.z)).norm_sq();
    let e = hp(result.e);
    d <= &e * &e
}

/// A 2x2 complex matrix `[a b; c d]` at oracle precision.
#[derive(Debug, Clone, PartialEq)]
pub struct HpMatrix {
    pub a: HpComplex,
    pub b: HpComplex,
    pub c: HpComplex,
    pub d: HpComplex,
}

impl HpMatrix {
    pub fn identity() -> Self {
        HpMatrix { a: HpComplex::one(), b: HpComplex::zero(), c: HpComplex::zero(), d: HpComplex::one() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        HpMatrix {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        }
    }

    /// The adjugate, which is the inverse on SL(2).
    pub fn inverse(&self) -> Self {
        HpMatrix { a: self.d.clone(), b: self.b.neg(), c: self.c.neg(), d: self.a.clone() }
    }

    /// The two candidate squared eigenvalues `lambda^2` and `lambda^-2`,
    /// with `lambda` a root of `x^2 - tr x + 1`.
    pub fn lengths(&self) -> [HpComplex; 2] {
        let t = self.a.add(&self.d).scale(&hp(0.5));
        let r = t.mul(&t).sub(&HpComplex::one()).sqrt();
        let u = t.add(&r);
        let v = t.sub(&r);
        [u.mul(&u), v.mul(&v)]
    }

    /// `diag(sqrt z, 1/sqrt z)`, with the root nearest `near`.
    pub fn short_generator(z: &HpComplex, near: ExactComplex) -> Option<Self> {
        let s = z.sqrt_near(near);
        let inv = HpComplex::one().div(&s)?;
        Some(HpMatrix { a: s, b: HpComplex::zero(), c: HpComplex::zero(), d: inv })
    }

    /// The close generator for ortho `x` and whirle `z`, with roots nearest
    /// `near_x` and `near_z`.
    pub fn close_generator(x: &HpComplex, z: &HpComplex, near_x: ExactComplex, near_z: ExactComplex) -> Option<Self> {
        let sx = x.sqrt_near(near_x);
        let sz = z.sqrt_near(near_z);
        let inv = HpComplex::one().div(&sx)?;
        let half = hp(0.5);
        let sh = sx.sub(&inv).scale(&half);
        let ch = sx.add(&inv).scale(&half);
        Some(HpMatrix { a: ch.mul(&sz), b: sh.div(&sz)?, c: sh.mul(&sz), d: ch.div(&sz)? })
    }

    /// The product of the generators spelled by `symbols`.
    pub fn word(symbols: &str, f: &HpMatrix, w: &HpMatrix) -> Self {
        let (big_f, big_w) = (f.inverse(), w.inverse());
        symbols.bytes().fold(HpMatrix::identity(), |g, s| {
            g.mul(match s {
                b'f' => f,
                b'w' => w,
                b'F' => &big_f,
                _ => &big_w,
            })
        })
    }
}

/// A member of each entry of a jet matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixMember {
    pub entries: [JetMember; 4],
}

impl MatrixMember {
    pub fn eval(&self, z: &TriDiskPoint) -> HpMatrix {
        let [a, b, c, d] = self.entries.map(|m| m.eval(z));
        HpMatrix { a, b, c, d }
    }
}

pub fn sample_matrix<R: Rng + ?Sized>(m: &JetMatrix, rng: &mut R) -> Option<MatrixMember> {
    Some(MatrixMember {
        entries: [
            sample_member(&m.a, rng)?,
            sample_member(&m.b, rng)?,
            sample_member(&m.c, rng)?,
            sample_member(&m.d, rng)?,
        ],
    })
}

/// Whether each entry of `value` lies in the matching class of `m`.
pub fn matrix_contained(value: &HpMatrix, m: &JetMatrix, z: &TriDiskPoint) -> bool {
    assert_contained(&value.a, &m.a, z)
        && assert_contained(&value.b, &m.b, z)
        && assert_contained(&value.c, &m.c, z)
        && assert_contained(&value.d, &m.d, z)
}

/// The exact `along`, `ortho`, `whirle` at a point of the box, given as
/// coordinates `u` in `[-1, 1]^6` relative to the box.
pub fn box_point(addr: &BoxAddress, u: &[f64; 6]) -> [HpComplex; 3] {
    let mut pos = [0.0f64; 6];
    let mut size = [4.0f64; 6];
    for (d, bit) in addr.as_str().bytes().enumerate() {
        let k = d % 6;
        size[k] /= 2.0;
        if bit == b'0' {
            pos[k] -= size[k];
        } else {
            pos[k] += size[k];
        }
    }
    let coord = |i: usize| (hp(pos[i]) + hp(size[i]) * hp(u[i])) * hp(SCALE[i]);
    [
        HpComplex { re: coord(0), im: coord(3) },
        HpComplex { re: coord(1), im: coord(4) },
        HpComplex { re: coord(2), im: coord(5) },
    ]
}

/// A random point of the box, including its corners now and then.
pub fn sample_box_point<R: Rng + ?Sized>(addr: &BoxAddress, rng: &mut R) -> [HpComplex; 3] {
    let corner = rng.gen_bool(0.1);
    let u: [f64; 6] = std::array::from_fn(|_| {
        if corner {
            if rng.gen() {
                1.0
            } else {
                -1.0
            }
        } else {
            rng.gen_range(-1.0..=1.0)
        }
    });
    box_point(addr, &u)
}

/// Random finite binary64 values spanning many binades, kept far from
/// underflow and overflow.
pub fn random_f64<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    match rng.gen_range(0..8) {
        0 => 0.0,
        1 => rng.gen_range(-4i32..=4) as f64,
        _ => {
            let m: f64 = rng.gen_range(-1.0..1.0);
            m * 2f64.powi(rng.gen_range(-30..30))
        }
    }
}

pub fn random_exact<R: Rng + ?Sized>(rng: &mut R) -> ExactComplex {
    ExactComplex::new(random_f64(rng), random_f64(rng))
}

/// A ball with a radius that is zero, tiny or comparable to its center.
pub fn random_ball<R: Rng + ?Sized>(rng: &mut R) -> BallComplex {
    let z = random_exact(rng);
    let mag = z.re.abs() + z.im.abs();
    let e = match rng.gen_range(0..4) {
        0 => 0.0,
        1 => mag * 1e-15 * rng.gen::<f64>(),
        2 => mag * 1e-3 * rng.gen::<f64>(),
        _ => (mag + 1.0) * rng.gen::<f64>(),
    };
    BallComplex::new(z.re, z.im, e)
}

/// A jet whose linear part and error are small relative to its center
/// about half of the time.
pub fn random_jet<R: Rng + ?Sized>(rng: &mut R) -> Jet {
    let f = random_exact(rng);
    let rel = if rng.gen() { 1e-3 } else { 1.0 };
    let mag = (f.re.abs() + f.im.abs()).max(1e-9);
    let mut small = || {
        if rng.gen_bool(0.2) {
            ExactComplex::ZERO
        } else {
            let k = mag * rel;
            ExactComplex::new(k * rng.gen_range(-1.0..1.0), k * rng.gen_range(-1.0..1.0))
        }
    };
    let (f0, f1, f2) = (small(), small(), small());
    let e = if rng.gen_bool(0.3) { 0.0 } else { mag * rel * rng.gen::<f64>() };
    Jet::new(f, f0, f1, f2, e)
}
