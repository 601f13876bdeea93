//! Words in the generators `f`, `w` and their inverses `F`, `W`.

use std::fmt;

use crate::jet::Jet;
use crate::sl2::JetMatrix;

use super::ConditionError;

/// A group word, written `(` symbols `)` with symbols from `f w F W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(String);

impl Word {
    /// Parses the delimited form, e.g. `"(fwF)"`.
    pub fn parse(text: &str) -> Result<Self, ConditionError> {
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ConditionError::Parse {
                text: text.to_owned(),
                reason: "word must be enclosed in parentheses",
            })?;
        Word::from_symbols(inner).map_err(|_| ConditionError::Parse {
            text: text.to_owned(),
            reason: "word symbols must be f, w, F or W",
        })
    }

    /// Builds a word from its undelimited symbols.
    pub fn from_symbols(symbols: &str) -> Result<Self, ConditionError> {
        if symbols.bytes().all(|b| matches!(b, b'f' | b'w' | b'F' | b'W')) {
            Ok(Word(symbols.to_owned()))
        } else {
            Err(ConditionError::Parse {
                text: symbols.to_owned(),
                reason: "word symbols must be f, w, F or W",
            })
        }
    }

    pub fn symbols(&self) -> &str {
        &self.0
    }

    /// True when the word has the form `f^k w^l`, so that the word being
    /// the identity forces `f` and `w` to commute.
    pub fn implies_commuting(&self) -> bool {
        self.0.as_bytes().windows(2).all(|p| {
            matches!(
                (p[0], p[1]),
                (b'f', b'f')
                    | (b'F', b'F')
                    | (b'w', b'w')
                    | (b'W', b'W')
                    | (b'f', b'w')
                    | (b'f', b'W')
                    | (b'F', b'w')
                    | (b'F', b'W')
            )
        })
    }

    /// The product of the generators, left to right, starting from the
    /// identity.
    pub fn evaluate(&self, along: Jet, ortho: Jet, whirle: Jet) -> JetMatrix {
        let f = JetMatrix::short_generator(along);
        let w = JetMatrix::close_generator(ortho, whirle);
        let big_f = f.inverse();
        let big_w = w.inverse();
        let mut g = JetMatrix::identity();
        for s in self.0.bytes() {
            g = g * match s {
                b'f' => f,
                b'w' => w,
                b'F' => big_f,
                _ => big_w,
            };
        }
        g
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

pub fn evaluate_word(word: &Word, along: Jet, ortho: Jet, whirle: Jet) -> JetMatrix {
    word.evaluate(along, ortho, whirle)
}

pub fn word_implies_commuting(word: &Word) -> bool {
    word.implies_commuting()
}
