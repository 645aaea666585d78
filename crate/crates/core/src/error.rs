use thiserror::Error;

use crate::geometry::Defect;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("effect label is empty")]
    EmptyLabel,
    #[error("invalid character {0:?} in effect label")]
    InvalidLetter(char),
    #[error("letter {letter} is out of range for n = {n}")]
    LetterOutOfRange { letter: char, n: usize },
    #[error("letters of an effect label must be strictly ascending: {0:?}")]
    UnsortedLabel(String),
    #[error("the zero vector is not a point of the geometry")]
    ZeroVector,
    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::gf2::MAX_DIM)]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular over GF(2)")]
    Singular,
    #[error("points are linearly dependent")]
    DependentBasis,
    #[error("t = {t} does not divide n = {n}")]
    TDoesNotDivideN { n: usize, t: usize },
    #[error("polynomial is not primitive: order of its root is {order}, expected {expected}")]
    NotPrimitive { order: u64, expected: u64 },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("nucleus basis meets the embedded subspace")]
    NucleusMeetsSubspace,
    #[error("flats have an empty common intersection")]
    EmptyIntersection,
    #[error("point set is not a flat")]
    NotAFlat,
    #[error("not a spread: {0}")]
    InvalidSpread(Defect),
    #[error("not a star: {0}")]
    InvalidStar(Defect),
    #[error("permutation is not a bijection on the points")]
    NotABijection,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("l0 = {l0} with t = {t} does not cover n = {n}")]
    BadSubsetSize { l0: usize, t: usize, n: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}
