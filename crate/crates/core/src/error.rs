use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
///
/// Most of the `*Integer*` variants guard divisibility facts that hold by
/// theory; seeing one means a formula was fed inputs outside its domain or
/// was transcribed wrongly.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("surface degree {0} is outside the supported range 4..=1000000")]
    SurfaceDegree(i128),
    #[error("adjunction numerator {numerator} is odd; genus is not an integer")]
    HalfIntegerGenus { numerator: i128 },
    #[error("Riemann-Roch numerator {numerator} is odd; Euler characteristic is not an integer")]
    HalfIntegerChi { numerator: i128 },
    #[error("maximum-genus numerator {numerator} is not divisible by {divisor}")]
    NonIntegerG { numerator: i128, divisor: i128 },
    #[error("unknown fixture key {0:?}")]
    UnknownFixture(String),
    #[error("invalid 7-tuple {0:?}: need delta >= m1 >= ... >= m6 >= 0 and delta >= m1 + m2 + m3")]
    InvalidTuple([i128; 7]),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate linkage: linked degree {0} is not positive")]
    DegenerateLinkage(i128),
    #[error("linked genus numerator {numerator} is odd")]
    NonIntegralLinkedGenus { numerator: i128 },
    #[error("null-correlation numerator {numerator} is not divisible by 3")]
    NonIntegralBundleChi { numerator: i128 },
}

pub type Result<T> = std::result::Result<T, Error>;
