use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("path is not composable at position {0}")]
    NotComposable(usize),
    #[error("path is not closed")]
    NotClosed,
    #[error("elements live over different quivers")]
    QuiverMismatch,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid cut specification: {0}")]
    InvalidCut(String),
    #[error("invalid ribbon graph: {0}")]
    InvalidGraph(String),
    #[error("ribbon graph is disconnected")]
    Disconnected,
    #[error("cannot contract a loop")]
    LoopContraction,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("length/valence mismatch: {0}")]
    ValenceMismatch(String),
    #[error("invalid A-infinity data: {0}")]
    InvalidData(String),
    #[error("missing product tensor of arity {0}")]
    MissingArity(usize),
    #[error("label mismatch: {0}")]
    LabelMismatch(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
