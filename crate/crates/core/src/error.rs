use crate::lattice::LatticePoint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice points need at least one coordinate")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("integer overflow while computing with {0}")]
    Overflow(LatticePoint),
    #[error("points {0} and {1} are comparable, input is not an antichain")]
    NotAntichain(LatticePoint, LatticePoint),
    #[error("empty antichain")]
    EmptyAntichain,
    #[error("upset is not cofinite: no generator bounds axis {axis}")]
    NotCofinite { axis: usize },
    #[error("downset is not corner-bounded: no generator bounds axis {axis}")]
    NotCornerBounded { axis: usize },
    #[error("augmentation bound violated: {0}")]
    InvalidBounds(String),
    #[error("negative coordinate in {0}; a monomial exponent vector is required")]
    NegativeCoordinate(LatticePoint),
    #[error("antichain is not order-generic")]
    NotOrderGeneric,
    #[error("expected an antichain of {expected} points, found {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("empty index subset")]
    EmptySubset,
    #[error("index {0} is not a member of the subset")]
    IndexNotInSubset(usize),
    #[error("class sizes sum to {sum}, dimension is {dim}")]
    InconsistentSizes { sum: usize, dim: usize },
    #[error("search box: {0}")]
    Box(String),
    #[error("enumeration guard: {0}")]
    ScaleGuard(String),
    #[error("count overflow for k = {0}")]
    CountOverflow(usize),
}
