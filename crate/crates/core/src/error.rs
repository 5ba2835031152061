use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("slope {0} outside (1, 2]")]
    SlopeOutOfRange(f64),

    #[error("star must occupy the last position of the period")]
    MalformedStarPeriod,

    #[error("not a kneading sequence: shift {shift} exceeds it in parity-lex order")]
    NotKneading { shift: usize },

    #[error("kneading sequence is only known to depth {available}, {requested} symbols requested")]
    InsufficientDepth { available: usize, requested: usize },

    #[error("identification is undecidable at depth {0}; deepen the window")]
    AmbiguousAtDepth(usize),

    #[error("tail {0} is not admissible for the kneading sequence")]
    InadmissibleTail(String),

    #[error("depth {0} exceeds the supported maximum of {max}", max = crate::scene::MAX_DEPTH)]
    DepthTooLarge(usize),

    #[error("orbit points T^{0}(c) and T^{1}(c) cannot be ordered from the known part of the kneading sequence")]
    RankTie(usize, usize),

    #[error("g({a}, {x}) is outside [0,2] x [-1,1]")]
    Domain { a: f64, x: f64 },

    #[error("chart for level {level} escapes its glue region")]
    ChartOverflow { level: usize },

    #[error("probe tail {probe} is not the scene's distinguished tail {scene}")]
    WrongContext { probe: String, scene: String },

    #[error("no segment with tail {0}")]
    UnknownSegment(String),

    #[error("invalid scene document: {0}")]
    Scene(String),

    #[error("config line {line}, column {column}: {message}")]
    Config { line: usize, column: usize, message: String },

    #[error("`slope` and `nu` are mutually exclusive")]
    Conflict,
}
