use thiserror::Error;

/// Everything that can go wrong while building or combining invariant records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has {rows}x{cols} shape but {len} entries")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid torsion coefficients {0}: must be positive and form a divisor chain")]
    InvalidDivisorChain(String),

    #[error("quotient term {0} has torsion; only free quotients are split")]
    NonFreeQuotient(String),

    #[error("cannot split off {right} from {middle}")]
    NotASplitSummand { middle: String, right: String },

    #[error("form matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("form matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("form matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    #[error("stored spin flag {stored} disagrees with form parity (even = {even})")]
    SpinParityMismatch { stored: bool, even: bool },

    #[error("no simply connected non-spin 5-manifold with torsion-free H2 has b2 = 0")]
    NonSpinRankZero,

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("spin orbit form has signature {signature}, not divisible by 16 (Rokhlin)")]
    RokhlinViolation { signature: i64 },

    #[error("fixed-point count must be at least {min}, got {n}")]
    TooFewFixedPoints { n: u32, min: u32 },

    #[error("b2(H2) = {b2} but b3(H3) = {b3}; a closed simply connected 5-manifold has b2 = b3")]
    BettiMismatch { b2: usize, b3: usize },

    #[error("euler characteristic {stated} contradicts the Betti numbers (expected {expected})")]
    EulerCharacteristicMismatch { stated: i64, expected: i64 },

    #[error("the Euler class annotation only applies to an admissible report")]
    InapplicableOnObstructed,

    #[error("subcircle ({a}, {b}) does not act freely in {family}")]
    NotFree {
        family: &'static str,
        a: i64,
        b: i64,
    },

    #[error("({a}, {b}) does not define a circle subgroup of the torus")]
    NotACircleSubgroup { a: i64, b: i64 },

    #[error("{0} cannot be determined from vanishing flags alone")]
    Indeterminate(&'static str),

    #[error("invalid descriptor: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
