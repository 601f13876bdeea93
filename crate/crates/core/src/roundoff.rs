//! The floating-point environment every error bound in this crate relies on.
//!
//! All bounds assume IEEE-754 binary64 with round-to-nearest-even and no
//! underflow. Rounding is checked once with arithmetic probes; underflow is
//! tracked by a sticky flag that the arithmetic kernels feed after each
//! operation (nonzero subnormal results set it).
//!
//! The flag is per thread, like a hardware FPU status register. A thread
//! reports into whichever [`FpEnvironment`] was last armed on it; worker
//! threads can share one environment by calling [`FpEnvironment::arm`].

use std::cell::RefCell;
use std::hint::black_box;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Distance from 1.0 to the next representable binary64 (2^-52).
pub const EPS: f64 = f64::EPSILON;

/// Half of [`EPS`]: the relative error bound of one correctly rounded operation.
pub const HALF_EPS: f64 = EPS / 2.0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RoundoffError {
    #[error("rounding self-test failed: {0}")]
    RoundingMode(&'static str),
}

/// Handle on the verified floating-point environment of a run.
#[derive(Debug, Clone)]
pub struct FpEnvironment {
    eps: f64,
    half_eps: f64,
    rounding_verified: bool,
    hypot_faithful: bool,
    underflow: Arc<AtomicBool>,
}

thread_local! {
    static ARMED: RefCell<Option<Arc<AtomicBool>>> = const { RefCell::new(None) };
}

static HYPOT_FAITHFUL: OnceLock<bool> = OnceLock::new();

/// Runs the rounding probes and arms underflow monitoring on this thread.
pub fn initialize_roundoff() -> Result<FpEnvironment, RoundoffError> {
    check_rounding()?;
    let env = FpEnvironment {
        eps: EPS,
        half_eps: HALF_EPS,
        rounding_verified: true,
        hypot_faithful: hypot_is_faithful(),
        underflow: Arc::new(AtomicBool::new(false)),
    };
    env.arm();
    Ok(env)
}

impl FpEnvironment {
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn half_eps(&self) -> f64 {
        self.half_eps
    }

    pub fn rounding_verified(&self) -> bool {
        self.rounding_verified
    }

    pub fn hypot_faithful(&self) -> bool {
        self.hypot_faithful
    }

    /// Routes kernel underflow reports from the current thread into this
    /// environment.
    pub fn arm(&self) {
        ARMED.with(|slot| *slot.borrow_mut() = Some(Arc::clone(&self.underflow)));
    }

    /// True iff no monitored value has been a nonzero subnormal.
    pub fn roundoff_ok(&self) -> bool {
        !self.underflow.load(Ordering::Relaxed)
    }

    pub fn record_value(&self, v: f64) {
        if is_underflow(v) {
            self.underflow.store(true, Ordering::Relaxed);
        }
    }
}

#[inline]
fn is_underflow(v: f64) -> bool {
    v != 0.0 && v.abs() < f64::MIN_POSITIVE
}

/// Reports a kernel result to the environment armed on this thread.
#[inline]
pub fn record_value(v: f64) {
    if is_underflow(v) {
        ARMED.with(|slot| {
            if let Some(flag) = slot.borrow().as_ref() {
                flag.store(true, Ordering::Relaxed);
            }
        });
    }
}

/// Reports a product or quotient `r` of the nonzero finite operands
/// `a`, `b`; a zero result means the exact value was lost to underflow.
#[inline]
pub fn record_result(r: f64, a: f64, b: f64) {
    if r == 0.0 && a != 0.0 && b != 0.0 && b.is_finite() {
        record_value(f64::MIN_POSITIVE / 2.0);
    } else {
        record_value(r);
    }
}

/// Positive infinity, the failure sentinel of the jet layer.
#[inline]
pub fn infinity() -> f64 {
    f64::INFINITY
}

fn next_up(x: f64) -> f64 {
    f64::from_bits(x.to_bits() + 1)
}

/// Probes that distinguish round-to-nearest-even from the directed modes.
///
/// Operands pass through `black_box` so the sums are evaluated at run time
/// under whatever mode the FPU is actually in.
pub fn check_rounding() -> Result<(), RoundoffError> {
    let one = black_box(1.0_f64);
    let eps = black_box(EPS);
    let half = black_box(HALF_EPS);

    if one + eps != next_up(1.0) {
        return Err(RoundoffError::RoundingMode("1 + eps is not the successor of 1"));
    }
    // 1 + 2^-53 is a tie; the even neighbour is 1.
    if one + half != 1.0 {
        return Err(RoundoffError::RoundingMode("1 + eps/2 did not round to 1"));
    }
    // 1 + 1.5 eps is a tie between 1 + eps and 1 + 2 eps; the even one wins.
    if one + black_box(1.5 * EPS) != 1.0 + 2.0 * EPS {
        return Err(RoundoffError::RoundingMode("ties are not broken to even"));
    }
    if one + black_box(0.75 * EPS) != next_up(1.0) {
        return Err(RoundoffError::RoundingMode("1 + 0.75 eps did not round up"));
    }
    if one - black_box(0.25 * EPS) != 1.0 {
        return Err(RoundoffError::RoundingMode("1 - eps/4 did not round to 1"));
    }
    if -one - half != -1.0 {
        return Err(RoundoffError::RoundingMode("-1 - eps/2 did not round to -1"));
    }
    if (one / black_box(3.0)) * black_box(3.0) != 1.0 {
        return Err(RoundoffError::RoundingMode("(1/3)*3 is not 1"));
    }
    Ok(())
}

/// Whether the platform `hypot` is faithful on the probe set (no representable
/// number strictly between the result and the true root).
pub fn hypot_is_faithful() -> bool {
    *HYPOT_FAITHFUL.get_or_init(probe_hypot)
}

// Probe inputs are integers below 2^26, so x^2 + y^2 and the squares of
// candidate results compare exactly in u128.
fn probe_hypot() -> bool {
    const PROBES: [(u64, u64); 12] = [
        (3, 4),
        (1, 1),
        (1, 2),
        (5, 12),
        (7, 9),
        (1, 0),
        (12_345, 67_891),
        (33_554_431, 33_554_429),
        (1, 33_554_431),
        (20_000_001, 3),
        (9_999_991, 9_999_973),
        (65_537, 65_521),
    ];
    PROBES.iter().all(|&(x, y)| hypot_faithful_at(x, y))
}

/// Compares r^2 against the integer `t` exactly, for 1 <= r < 2^52.
fn cmp_square(r: f64, t: u128) -> std::cmp::Ordering {
    let bits = r.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i32 - 1075;
    let mant = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let sq = mant as u128 * mant as u128;
    debug_assert!(exp < 0);
    sq.cmp(&(t << (-2 * exp) as u32))
}

fn hypot_faithful_at(x: u64, y: u64) -> bool {
    use std::cmp::Ordering::*;
    let r = black_box(x as f64).hypot(black_box(y as f64));
    let t = x as u128 * x as u128 + y as u128 * y as u128;
    if !(1.0..4.0e15).contains(&r) {
        return false;
    }
    match cmp_square(r, t) {
        Equal => true,
        Less => cmp_square(next_up(r), t) == Greater,
        Greater => cmp_square(f64::from_bits(r.to_bits() - 1), t) == Less,
    }
}

/// `hypot` as used by the complex kernels, with the fallback route taken
/// when the platform function fails its probes.
#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    if hypot_is_faithful() {
        x.hypot(y)
    } else {
        (x * x + y * y).sqrt()
    }
}

/// Inflation factor for an upper bound on |x| from [`hypot`].
#[inline]
pub(crate) fn hypot_up_factor() -> f64 {
    if hypot_is_faithful() {
        1.0 + 2.0 * EPS
    } else {
        1.0 + 3.0 * EPS
    }
}

#[inline]
pub(crate) fn hypot_down_factor() -> f64 {
    if hypot_is_faithful() {
        1.0 - 2.0 * EPS
    } else {
        1.0 - 3.0 * EPS
    }
}
