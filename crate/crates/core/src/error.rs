use thiserror::Error;

/// Errors raised while building graphs and instances or running the
/// reductions on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge weight {0} outside the supported range |w| < 2^61")]
    WeightOutOfRange(i64),
    #[error("expected {expected} vertex colors, got {got}")]
    ColorCount { expected: usize, got: usize },
    #[error("vertex {0} has color 0; colors are 1-based")]
    ZeroColor(usize),
    #[error("coloring is not surjective onto [1, {f}]: color {missing} unused")]
    NonSurjectiveColoring { f: u32, missing: u32 },
    #[error("problem requires edge weights but the graph has none")]
    MissingWeights,
    #[error("problem requires vertex colors but the graph has none")]
    MissingColors,
    #[error("edge weights are only allowed for negative weight triangle instances")]
    UnexpectedWeights,
    #[error("vertex colors are only allowed for triangle collection instances")]
    UnexpectedColors,
    #[error("pattern must be connected")]
    DisconnectedPattern,
    #[error("pattern must have at least 2 vertices, got {0}")]
    PatternTooSmall(usize),
    #[error("pattern order {0} exceeds the supported maximum of {max}", max = crate::instance::MAX_PATTERN_ORDER)]
    PatternTooLarge(usize),
    #[error("pattern graph must not carry weights or colors")]
    AnnotatedPattern,
    #[error("diminisher for {expected} applied to an instance parameterized by {got}")]
    WrongParameter {
        expected: &'static str,
        got: &'static str,
    },
    #[error("construction would emit {parts} parts, above the limit of {limit}")]
    BlowUpTooLarge { parts: u128, limit: u128 },
    #[error("invalid generator parameter: {0}")]
    InvalidGenerator(String),
    #[error("invalid epsilon {0:?}: expected a positive rational such as 2, 3/2 or 0.5")]
    InvalidEpsilon(String),
}

pub type Result<T> = std::result::Result<T, Error>;
