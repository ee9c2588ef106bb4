use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("relation {0} mixes paths with different endpoints")]
    RelationNotParallel(usize),
    #[error("relation {0} mixes paths of different lengths")]
    RelationNotHomogeneous(usize),
    #[error("quiver has a directed cycle")]
    CyclicQuiver,
    #[error("vertex map invalid: {0}")]
    VertexMapInvalid(String),
    #[error("index tuple kinds do not match")]
    KindMismatch,
    #[error("root finding failed: {0}")]
    RootFindingFailure(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("index tuple starts with 1; that summand is projective")]
    FirstEntryOne,
    #[error("summand {0} is not a brick: {1}")]
    DecomposableSummand(usize, String),
    #[error("algebra is not directed: {0}")]
    NotDirected(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("collection is not exceptional: {0}")]
    NotExceptional(String),
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("not tilting: {0}")]
    NotTilting(String),
    #[error("arcs {0} and {1} intersect")]
    ArcsIntersect(usize, usize),
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("collection is not tame: {0}")]
    NotTame(String),
    #[error("background arcs are not disjoint from the triangle: {0}")]
    NotDisjoint(String),
    #[error("unknown target: {0}")]
    UnknownTarget(String),
    #[error("resolution check failed: {0}")]
    NotExact(String),
    #[error("cohomology not concentrated: {0}")]
    NotConcentrated(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
