use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is outside 2 <= p < 2^31")]
    ModulusOutOfRange(u64),

    #[error("exponent must be positive")]
    ZeroExponent,

    #[error("degree {degree} is outside 0..={max}")]
    DegreeOutOfRange { degree: u64, max: u64 },

    #[error("matrix has {len} entries, expected {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("entry {entry} is not a residue mod {p}")]
    EntryOutOfRange { entry: u64, p: u64 },

    #[error(
        "({d1}, {d2}, {d3}) in characteristic {p} is degenerate: the three forms do not minimally generate the ideal"
    )]
    Degenerate { d1: u64, d2: u64, d3: u64, p: u64 },

    #[error("triple ({0}, {1}, {2}) must satisfy v1 <= v2 <= v3 < v1 + v2")]
    HanPrecondition(u64, u64, u64),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),
}
