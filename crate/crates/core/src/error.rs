use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),

    #[error("edge `{edge}` references undeclared vertex `{vertex}`")]
    UndeclaredVertex { edge: String, vertex: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("edges `{0}` and `{1}` are not admissible in sequence")]
    NotAdmissible(String, String),

    #[error("operands belong to different graphs")]
    MixedGraph,

    #[error("`{0}` is not a loop")]
    NotALoop(String),

    #[error("vertex word `{0}` is not allowed here")]
    VertexWord(String),

    #[error("`{0}` and `{1}` are not diagram-distinct")]
    NotDiagramDistinct(String, String),

    #[error("fock depth {depth} is insufficient, {required} is required")]
    DepthInsufficient { required: usize, depth: usize },

    #[error("basis vector of length {length} exceeds fock depth {depth}")]
    BasisExceedsDepth { length: usize, depth: usize },

    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(String, String),

    #[error("empty generator word")]
    EmptyWord,

    #[error("monomial L[{0}]L*[{1}] is not composable")]
    InvalidMonomial(String, String),

    #[error("arity {n} exceeds the bound {bound}")]
    ArityBound { n: usize, bound: usize },

    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("element is not self-adjoint")]
    NotSelfAdjoint,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed json: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::DuplicateIdentifier(_) => "duplicate_identifier",
            Error::UndeclaredVertex { .. } => "undeclared_vertex",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::UnknownEdge(_) => "unknown_edge",
            Error::NotAdmissible(..) => "not_admissible",
            Error::MixedGraph => "mixed_graph",
            Error::NotALoop(_) => "not_a_loop",
            Error::VertexWord(_) => "vertex_word",
            Error::NotDiagramDistinct(..) => "not_diagram_distinct",
            Error::DepthInsufficient { .. } => "depth_insufficient",
            Error::BasisExceedsDepth { .. } => "basis_exceeds_depth",
            Error::BackendMismatch(..) => "backend_mismatch",
            Error::EmptyWord => "empty_word",
            Error::InvalidMonomial(..) => "invalid_monomial",
            Error::ArityBound { .. } => "arity_bound",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::NotSelfAdjoint => "not_self_adjoint",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Json(_) => "json",
        }
    }
}
