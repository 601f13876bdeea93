//! Conditions that certify a box: parsing of condition text and the
//! dispatcher that evaluates one on a box.

mod angle;
mod geometry;
mod holes;
mod word;

use std::fmt;

pub use angle::{horizon, larger_angle};
pub use geometry::{box_geometry, box_params, make_params, BoxAddress, BoxGeometry, BoxParams, MAX_DEPTH, SCALE};
pub use holes::{covers_hole, holes, quarter, third, vol3, Hole, HoleAngle, HoleCover, HOLE_TABLE};
pub use word::{evaluate_word, word_implies_commuting, Word};

use crate::roundoff::EPS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionError {
    #[error("bad address: {0}")]
    BadAddress(String),
    #[error("cannot parse condition {text:?}: {reason}")]
    Parse { text: String, reason: &'static str },
    #[error("unsupported condition kind {0:?}")]
    Unsupported(char),
}

/// The inequality a condition asserts about a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionKind {
    /// `|along| < 1.10274`
    Short,
    /// `|along| > 3.63201`
    Long,
    /// `|ortho|` below the hole's minimum distance.
    Near,
    /// The hole's angle exceeds the visual angle of `ortho`.
    Far,
    /// `|whirle| < 1`
    WhirleSmall,
    /// `|whirle|^2 > |along|`
    WhirleBig,
    /// The word is nontrivial and shorter than `f`.
    Length,
    /// The word forces commutation and is shorter than `f`.
    Commuting,
    Ortho,
}

impl ConditionKind {
    pub fn symbol(self) -> char {
        match self {
            ConditionKind::Short => 's',
            ConditionKind::Long => 'l',
            ConditionKind::Near => 'n',
            ConditionKind::Far => 'f',
            ConditionKind::WhirleSmall => 'W',
            ConditionKind::WhirleBig => 'w',
            ConditionKind::Length => 'L',
            ConditionKind::Commuting => '2',
            ConditionKind::Ortho => 'O',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        Some(match c {
            's' => ConditionKind::Short,
            'l' => ConditionKind::Long,
            'n' => ConditionKind::Near,
            'f' => ConditionKind::Far,
            'W' => ConditionKind::WhirleSmall,
            'w' => ConditionKind::WhirleBig,
            'L' => ConditionKind::Length,
            '2' => ConditionKind::Commuting,
            'O' => ConditionKind::Ortho,
            _ => return None,
        })
    }

    pub fn takes_word(self) -> bool {
        matches!(self, ConditionKind::Length | ConditionKind::Commuting | ConditionKind::Ortho)
    }
}

/// One line of a condition list, e.g. `s` or `L(fwFW)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Condition {
    pub kind: ConditionKind,
    pub word: Option<Word>,
}

impl Condition {
    /// Parses a condition, ignoring trailing whitespace.
    pub fn parse(text: &str) -> Result<Self, ConditionError> {
        let t = text.trim_end();
        let err = |reason| ConditionError::Parse { text: text.to_owned(), reason };
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(|| err("empty condition"))?;
        let kind = ConditionKind::from_symbol(head).ok_or_else(|| err("unknown condition kind"))?;
        let rest = chars.as_str();
        if kind.takes_word() {
            let word = Word::parse(rest).map_err(|e| match e {
                ConditionError::Parse { reason, .. } => err(reason),
                other => other,
            })?;
            Ok(Condition { kind, word: Some(word) })
        } else if rest.is_empty() {
            Ok(Condition { kind, word: None })
        } else {
            Err(err("this condition kind takes no word"))
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.symbol())?;
        match &self.word {
            Some(w) => write!(f, "{w}"),
            None => Ok(()),
        }
    }
}

impl std::str::FromStr for Condition {
    type Err = ConditionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::parse(s)
    }
}

/// Whether `cond` certifies the box at `addr`.
///
/// Boxes that cannot hold an image of a hole are accepted outright.
pub fn inequality_holds(cond: &Condition, addr: &BoxAddress) -> Result<bool, ConditionError> {
    let cover = covers_hole(addr);
    if !cover.matched {
        return Ok(true);
    }
    let BoxParams { along, ortho, whirle } = box_params(addr);
    let holds = match cond.kind {
        ConditionKind::Short => along.abs_ub() < 1.10274,
        ConditionKind::Long => along.abs_lb() > 3.63201,
        ConditionKind::Near => ortho.abs_ub() < cover.min_d,
        ConditionKind::Far => larger_angle(&cover.max_angle, &horizon(ortho)),
        ConditionKind::WhirleSmall => whirle.abs_ub() < 1.0,
        ConditionKind::WhirleBig => {
            let wh = whirle.abs_lb();
            (1.0 - EPS) * wh * wh > along.abs_ub()
        }
        ConditionKind::Length | ConditionKind::Commuting | ConditionKind::Ortho => {
            let word = cond.word.as_ref().ok_or(ConditionError::Parse {
                text: cond.kind.symbol().to_string(),
                reason: "missing word",
            })?;
            if cond.kind == ConditionKind::Ortho {
                return Err(ConditionError::Unsupported('O'));
            }
            let g = word.evaluate(along, ortho, whirle);
            let l = g.length();
            let shorter = (l / along).abs_ub() < 1.0 && (l * along).abs_lb() > 1.0;
            if cond.kind == ConditionKind::Length {
                g.not_identity() && shorter
            } else {
                word.implies_commuting() && shorter
            }
        }
    };
    Ok(holds)
}
