use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix had the wrong shape.
    Dimension {
        expected: usize,
        found: usize,
    },
    /// A square matrix was required.
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// Symbolic expansion was refused because the matrix is too large.
    TooLarge {
        size: usize,
        max: usize,
    },
    InvalidFan(String),
    InvalidFlag(String),
    /// The degree with the given index is not ample.
    NotAmple(usize),
    /// A polynomial has a monomial outside the graded piece it should live in.
    SupportViolation(String),
    /// The section polytope of a divisor is unbounded.
    Unbounded,
    /// The supports do not span a full-rank lattice.
    DegenerateSpan,
    /// Some monomial is divisible by none of the flag monomials.
    NotDecomposable,
    /// A specialization made a required matrix singular.
    NonGeneric(String),
    RootNotSimple,
    NotARoot,
    /// A monomial is not a member of the relevant basis.
    NotInBasis(String),
    /// An atom has no value in the specialization.
    MissingAtom(String),
    Internal(String),
}

impl Error {
    /// True for failures caused by an unlucky specialization rather than bad input.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Error::NonGeneric(_) | Error::RootNotSimple)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { expected, found } => {
                write!(f, "dimension error: expected {}, found {}", expected, found)
            }
            Error::NotSquare { rows, cols } => {
                write!(
                    f,
                    "matrix is not square: {} rows and {} columns",
                    rows, cols
                )
            }
            Error::TooLarge { size, max } => write!(
                f,
                "refusing symbolic expansion of a {0}x{0} matrix (limit {1})",
                size, max
            ),
            Error::InvalidFan(msg) => write!(f, "invalid fan: {}", msg),
            Error::InvalidFlag(msg) => write!(f, "invalid flag: {}", msg),
            Error::NotAmple(i) => write!(f, "degree {} is not ample", i),
            Error::SupportViolation(msg) => write!(f, "support violation: {}", msg),
            Error::Unbounded => write!(f, "section polytope is unbounded (fan is not complete)"),
            Error::DegenerateSpan => write!(f, "supports do not span"),
            Error::NotDecomposable => write!(f, "degree not ample or invalid flag"),
            Error::NonGeneric(msg) => write!(
                f,
                "non-generic specialization; resultant may vanish ({})",
                msg
            ),
            Error::RootNotSimple => write!(f, "root not simple"),
            Error::NotARoot => write!(f, "supplied point is not a common root in the torus"),
            Error::NotInBasis(msg) => write!(f, "monomial not in basis: {}", msg),
            Error::MissingAtom(name) => write!(f, "no value for coefficient atom {}", name),
            Error::Internal(msg) => write!(f, "internal error: {}", msg),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
