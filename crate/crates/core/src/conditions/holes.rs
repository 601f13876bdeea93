//! The exceptional boxes of the main search and the test for whether a box
//! could contain images of them.

use std::sync::OnceLock;

use crate::complex::ExactComplex;
use crate::jet::Jet;
use crate::roundoff::EPS;

use super::angle::larger_angle;
use super::geometry::{box_params, BoxAddress};

/// Visual-angle bound attached to a hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleAngle {
    Quarter,
    Third,
    Vol3,
}

impl HoleAngle {
    pub fn jet(self) -> Jet {
        match self {
            HoleAngle::Quarter => quarter(),
            HoleAngle::Third => third(),
            HoleAngle::Vol3 => vol3(),
        }
    }
}

pub fn quarter() -> Jet {
    Jet::constant(ExactComplex::new(0.0, 1.0))
}

pub fn third() -> Jet {
    Jet::with_error(ExactComplex::new(-0.5, 0.75f64.sqrt()), EPS)
}

pub fn vol3() -> Jet {
    Jet::with_error(ExactComplex::new(-0.3933, 0.91942), 1.415 * EPS)
}

/// Addresses and angle bounds of the exceptional boxes.
pub const HOLE_TABLE: [(&str, HoleAngle); 11] = [
    ("001000110001110110011101000110111110100010110000100011101101001101001000110101011000000100000", HoleAngle::Third),
    ("001000110101010010101010110001100101110111100001101010111100100000010001111100", HoleAngle::Third),
    ("1110000000010001100110111011010110001111010111100011001111111001101100000000100010100010", HoleAngle::Third),
    ("11100000000100011001100100111110101001111011011011110110001111111011011010000111101", HoleAngle::Third),
    ("11100000000100011001100100111110101011111001011001110100001101111001011000000101101", HoleAngle::Third),
    ("0010001101111100011010010101010110010110110101111011011000011011010001110100011101011001011101110111110100", HoleAngle::Vol3),
    ("0010011101101100001010000101000110000110100101101011001000001011000001100100001101001001001101100111100100", HoleAngle::Vol3),
    ("0010001100011101110011110001011111111011111001110011110000011110111101111", HoleAngle::Third),
    ("0010011100001101100011100001001111101011101001100011100000001110101101101", HoleAngle::Third),
    ("1110000000010001111111111101010011110111110101111111111100010010110001110", HoleAngle::Third),
    ("1110010000000001101111101101000011100111100101101111101100000010100001100", HoleAngle::Third),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Hole {
    pub address: &'static str,
    /// Lower bound on `|ortho|` over the hole's own box.
    pub min_d: f64,
    pub angle: HoleAngle,
}

impl Hole {
    pub fn max_angle(&self) -> Jet {
        self.angle.jet()
    }
}

fn compute_min_d(address: &str) -> f64 {
    let addr = BoxAddress::parse(address).expect("hole table addresses are valid");
    box_params(&addr).ortho.abs_lb()
}

/// The hole table with every `min_d` filled in.
pub fn holes() -> &'static [Hole] {
    static HOLES: OnceLock<Vec<Hole>> = OnceLock::new();
    HOLES.get_or_init(|| {
        HOLE_TABLE
            .iter()
            .map(|&(address, angle)| Hole { address, min_d: compute_min_d(address), angle })
            .collect()
    })
}

/// Outcome of [`covers_hole`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoleCover {
    pub matched: bool,
    pub min_d: f64,
    pub max_angle: Jet,
}

/// Whether the box could hold an image of an exceptional box, with the
/// smallest `min_d` and widest angle over the holes it agrees with.
///
/// Agreement compares only address positions 0, 3, 6, ...
pub fn covers_hole(addr: &BoxAddress) -> HoleCover {
    let mut min_d = 4.0;
    let mut max_angle = quarter();
    let here = addr.as_str().as_bytes();
    for hole in holes() {
        let there = hole.address.as_bytes();
        if hole.angle == HoleAngle::Vol3 && here == there {
            return HoleCover { matched: false, min_d, max_angle };
        }
        let max_j = there.len().min(here.len());
        let agrees = (0..max_j).step_by(3).all(|j| here[j] == there[j]);
        if agrees {
            if hole.min_d < min_d {
                min_d = hole.min_d;
            }
            let candidate = hole.max_angle();
            if larger_angle(&candidate, &max_angle) {
                max_angle = candidate;
            }
        }
    }
    HoleCover { matched: min_d <= 3.0, min_d, max_angle }
}
