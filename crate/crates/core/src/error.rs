use thiserror::Error;

/// Errors raised by the algebra and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("not a permutation in one-line form: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("degree {n} outside [{lo}, {hi}]")]
    EmptyDomain { n: usize, lo: usize, hi: usize },
    #[error("basis mismatch: expected {expected}, got {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("alphabet sizes differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("letter {letter} outside alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("unbounded alphabet: {0} needs a truncation level")]
    Unbounded(&'static str),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
