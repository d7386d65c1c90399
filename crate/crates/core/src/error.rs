use thiserror::Error;

/// Every failure the library reports.
///
/// [`Error::kind`] gives a stable snake_case tag used by the command line
/// front end for machine-parsable error lines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i64, strands: usize },
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("bad strand count {0}")]
    BadStrandCount(usize),
    #[error("strand set is not invariant under the braid permutation")]
    KeepNotInvariant,
    #[error("strand set is empty")]
    EmptyKeepSet,
    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("strands {0} and {1} are not both fixed by the permutation")]
    StrandsNotFixed(usize, usize),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("expected a 3-strand braid, got {0} strands")]
    NotThreeStrands(usize),
    #[error("determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("matrix is not parabolic")]
    NotParabolic,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("exact invariants unsupported for {0} strands")]
    UnsupportedStrandCount(usize),
    #[error("search length bound {0} outside 1..=12")]
    LengthBoundExceeded(usize),
    #[error("invalid component tree: {0}")]
    InvalidTree(String),
    #[error("cycle length must be at least 1, got {0}")]
    BadCycleLength(i64),
    #[error("node with {0} strands has no exact invariants")]
    UnsupportedNodeArity(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degenerate surface: {0}")]
    DegenerateSurface(String),
    #[error("polynomial degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("invalid polynomial loop: {0}")]
    InvalidLoop(String),
    #[error("argument jump {jump:.6} at sample {index} is not below pi")]
    InsufficientSampling { index: usize, jump: f64 },
    #[error("discriminant vanishes at sample {0}")]
    DiscriminantVanishes(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedToken(_) => "malformed_token",
            Error::ZeroLetter => "zero_letter",
            Error::GeneratorOutOfRange { .. } => "generator_out_of_range",
            Error::StrandMismatch(..) => "strand_mismatch",
            Error::BadStrandCount(_) => "bad_strand_count",
            Error::KeepNotInvariant => "keep_not_invariant",
            Error::EmptyKeepSet => "empty_keep_set",
            Error::StrandOutOfRange { .. } => "strand_out_of_range",
            Error::StrandsNotFixed(..) => "strands_not_fixed",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::NotThreeStrands(_) => "not_three_strands",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::NotParabolic => "not_parabolic",
            Error::InternalInconsistency(_) => "internal_inconsistency",
            Error::UnsupportedStrandCount(_) => "unsupported_strand_count",
            Error::LengthBoundExceeded(_) => "length_bound_exceeded",
            Error::InvalidTree(_) => "invalid_tree",
            Error::BadCycleLength(_) => "bad_cycle_length",
            Error::UnsupportedNodeArity(_) => "unsupported_node_arity",
            Error::NotPrime(_) => "not_prime",
            Error::DegenerateSurface(_) => "degenerate_surface",
            Error::DegreeTooSmall(_) => "degree_too_small",
            Error::InvalidLoop(_) => "invalid_loop",
            Error::InsufficientSampling { .. } => "insufficient_sampling",
            Error::DiscriminantVanishes(_) => "discriminant_vanishes",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
