use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Everything that can go wrong in a computation or a verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    ZeroParameter,
    /// `[n]_q` vanishes for this `n`.
    DegenerateParameter(usize),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    RankMismatch {
        expected: usize,
        found: usize,
    },
    /// Murphy eigenvalues failed to separate the tableaux of degree `n`.
    BlockSeparationFailure(usize),
    NotInvertible,
    YangBaxterFails,
    HeckeEquationFails,
    /// `R#` is singular.
    NotClosed,
    ParameterMismatch,
    NonIntegralMultiplicity {
        rank: usize,
        d: usize,
    },
    BirankUndetermined {
        candidates: Vec<(usize, usize)>,
    },
    KoszulDefect(usize),
    IdentityViolation {
        what: String,
        degree: usize,
        lhs: usize,
        rhs: usize,
    },
    NotInComponent,
    BiidealViolation,
    EmptyGenerator,
    MultiplicityTooHigh,
    BadIndexLists,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroParameter => write!(f, "parameter q must be nonzero"),
            Error::DegenerateParameter(n) => write!(f, "quantum integer [{n}]_q vanishes"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected degree {expected}, found {found}")
            }
            Error::BlockSeparationFailure(n) => {
                write!(f, "Murphy eigenvalues do not separate tableaux in degree {n}")
            }
            Error::NotInvertible => write!(f, "operator is not invertible"),
            Error::YangBaxterFails => write!(f, "Yang-Baxter equation fails"),
            Error::HeckeEquationFails => write!(f, "Hecke equation (R+1)(R-q)=0 fails"),
            Error::NotClosed => write!(f, "closure operator R# is singular"),
            Error::ParameterMismatch => write!(f, "operators have different parameters q"),
            Error::NonIntegralMultiplicity { rank, d } => {
                write!(f, "rank {rank} is not divisible by tableau count {d}")
            }
            Error::BirankUndetermined { candidates } => {
                write!(f, "birank undetermined; consistent minimal candidates: {candidates:?}")
            }
            Error::KoszulDefect(n) => write!(f, "Koszul numeric identity fails in degree {n}"),
            Error::IdentityViolation { what, degree, lhs, rhs } => {
                write!(f, "{what} fails in degree {degree}: {lhs} vs {rhs}")
            }
            Error::NotInComponent => write!(f, "vector is not in the graded component"),
            Error::BiidealViolation => write!(f, "relation ideal is not a bi-ideal"),
            Error::EmptyGenerator => write!(f, "generating block is zero"),
            Error::MultiplicityTooHigh => write!(f, "a Littlewood-Richardson coefficient exceeds one"),
            Error::BadIndexLists => write!(f, "row and column lists must be strictly increasing and of equal length"),
        }
    }
}

impl core::error::Error for Error {}
