//! Box addresses and the six-real-dimensional box they name.

use std::fmt;

use crate::complex::ExactComplex;
use crate::jet::Jet;
use crate::roundoff::{EPS, HALF_EPS};

use super::ConditionError;

/// Longest address the verifier will descend to.
pub const MAX_DEPTH: usize = 200;

/// `2^((5-i)/6)` for each coordinate, correctly rounded.
pub const SCALE: [f64; 6] = [
    f64::from_bits(0x3ffc823e074ec129),
    f64::from_bits(0x3ff965fea53d6e3c),
    f64::from_bits(0x3ff6a09e667f3bcd),
    f64::from_bits(0x3ff428a2f98d728b),
    f64::from_bits(0x3ff1f59ac3c7d6c0),
    1.0,
];

/// A path of binary subdivisions from the root box, at most [`MAX_DEPTH`]
/// long. Bit `d` splits coordinate `d mod 6`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BoxAddress(String);

impl BoxAddress {
    pub fn root() -> Self {
        BoxAddress(String::new())
    }

    pub fn parse(s: &str) -> Result<Self, ConditionError> {
        if let Some(c) = s.chars().find(|c| *c != '0' && *c != '1') {
            return Err(ConditionError::BadAddress(format!("symbol {c:?} in {s:?}")));
        }
        if s.len() > MAX_DEPTH {
            return Err(ConditionError::BadAddress(format!(
                "depth {} exceeds {MAX_DEPTH}",
                s.len()
            )));
        }
        Ok(BoxAddress(s.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The child obtained by appending `bit`.
    ///
    /// Panics if `bit` is not 0 or 1, or if `self` is already at
    /// [`MAX_DEPTH`].
    pub fn child(&self, bit: u8) -> BoxAddress {
        assert!(bit <= 1, "address bit must be 0 or 1");
        assert!(self.len() < MAX_DEPTH, "address deeper than {MAX_DEPTH}");
        let mut s = String::with_capacity(self.len() + 1);
        s.push_str(&self.0);
        s.push(if bit == 0 { '0' } else { '1' });
        BoxAddress(s)
    }
}

impl fmt::Display for BoxAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for BoxAddress {
    type Err = ConditionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoxAddress::parse(s)
    }
}

/// Centers and rigorous half-widths of a box, already scaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxGeometry {
    pub pos: [f64; 6],
    pub size: [f64; 6],
}

/// The three complex parameters of a box as jets in the tri-disk variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxParams {
    pub along: Jet,
    pub ortho: Jet,
    pub whirle: Jet,
}

pub fn box_geometry(addr: &BoxAddress) -> BoxGeometry {
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
    for i in 0..6 {
        pos[i] *= SCALE[i];
        size[i] = (1.0 + 2.0 * EPS) * (size[i] * SCALE[i] + HALF_EPS * pos[i].abs());
    }
    BoxGeometry { pos, size }
}

pub fn make_params(g: &BoxGeometry) -> BoxParams {
    let (pos, size) = (g.pos, g.size);
    let z = ExactComplex::ZERO;
    let c = ExactComplex::new;
    BoxParams {
        along: Jet::new(c(pos[0], pos[3]), c(size[0], size[3]), z, z, 0.0),
        ortho: Jet::new(c(pos[1], pos[4]), z, c(size[1], size[4]), z, 0.0),
        whirle: Jet::new(c(pos[2], pos[5]), z, z, c(size[2], size[5]), 0.0),
    }
}

pub fn box_params(addr: &BoxAddress) -> BoxParams {
    make_params(&box_geometry(addr))
}
