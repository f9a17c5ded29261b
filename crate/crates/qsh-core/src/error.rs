//! Error type shared by every fallible operation of the crate.

use core::fmt;

use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A word evaluation left the domain of a table-backed map or window.
    OutOfWindow { word: Word },
    /// The empty word was passed to an operation that rejects it.
    EmptyWord,
    /// A contraction composition does not sum to the word length.
    CompositionMismatch { word_len: usize, composition_sum: usize },
    /// The word is too short for the requested operation.
    WordTooShort { len: usize, required: usize },
    /// Two characters given to `transfer_between` disagree on a non-singular word.
    RestrictionMismatch { word: Word },
    /// The truncated character-fitting system has no solution; carries the
    /// constraint word that failed.
    InfeasibleWithinWindow { word: Word },
    /// The homogeneous transfer constraints have a zero kernel at this window.
    DegenerateWindow,
    /// A scheme table has no entry for the requested word.
    MissingEntry { word: Word },
    /// Window construction invariants violated.
    InvalidWindow(&'static str),
    /// Binary operation on maps with different windows.
    WindowMismatch,
    /// A map of the wrong kind (plain/character/infinitesimal) was supplied.
    KindMismatch { expected: &'static str },
    /// A map table does not cover exactly the window enumeration.
    IncompleteTable { word: Word },
    /// A constraint was prescribed on a singular word.
    SingularConstraint { word: Word },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfWindow { word } => write!(f, "word {word} is outside the window"),
            Error::EmptyWord => write!(f, "the empty word is not accepted here"),
            Error::CompositionMismatch {
                word_len,
                composition_sum,
            } => write!(
                f,
                "composition sums to {composition_sum} but the word has length {word_len}"
            ),
            Error::WordTooShort { len, required } => {
                write!(f, "word of length {len} is shorter than required {required}")
            }
            Error::RestrictionMismatch { word } => {
                write!(f, "characters disagree on the non-singular word {word}")
            }
            Error::InfeasibleWithinWindow { word } => {
                write!(f, "no character satisfies the constraint at {word} within this window")
            }
            Error::DegenerateWindow => {
                write!(f, "the transfer constraints leave no free direction at this window")
            }
            Error::MissingEntry { word } => write!(f, "no table entry for {word}"),
            Error::InvalidWindow(msg) => write!(f, "invalid window: {msg}"),
            Error::WindowMismatch => write!(f, "maps live on different windows"),
            Error::KindMismatch { expected } => write!(f, "expected a {expected} map"),
            Error::IncompleteTable { word } => {
                write!(f, "table does not match the window enumeration at {word}")
            }
            Error::SingularConstraint { word } => {
                write!(f, "constraint word {word} is singular; only non-singular words carry forced values")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
