use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("structure maps do not commute: {0}")]
    MapsDoNotCommute(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("subspace is not a two-sided ideal stable under both structure maps")]
    NotAnIdeal,
    #[error("negative power requested on a singular structure map")]
    NegativePowerOnSingularMap,
    #[error("operator is not a centroid element")]
    NotCentroid,
    #[error("image condition fails: {0}")]
    ImageConditionFails(String),
    #[error("the two products differ; an algebra with a single product is required")]
    ProductsDiffer,
    #[error("not a bimodule: {0}")]
    NotABimodule(String),
    #[error("not a bimodule morphism: {0}")]
    NotAModuleMorphism(String),
    #[error("operator does not commute with the structure maps")]
    DoesNotCommuteWithStructureMaps,
    #[error("operator is not Rota-Baxter of weight 0")]
    NotRotaBaxter,
    #[error("operator is not Nijenhuis")]
    NotNijenhuis,
    #[error("operator is not injective")]
    NotInjective,
    #[error("operator is not averaging")]
    NotAveraging,
    #[error("algebra is not regular (structure maps must be invertible and multiplicative)")]
    NotRegular,
    #[error("map is not an isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("operator is not a derivation at the stated exponents")]
    NotADerivation,
    #[error("cochain pair is not a 2-cocycle")]
    NotCocycles,
    #[error("action axiom {equation} fails at {witness:?}")]
    ActionAxiomFails { equation: String, witness: Vec<usize> },
    #[error("{construction} produced an algebra failing {axiom} at {witness:?}")]
    ResultFailsAxioms {
        construction: String,
        axiom: String,
        witness: Vec<usize>,
    },
    #[error("unknown corpus entry {0}")]
    UnknownEntry(String),
    #[error("missing parameter {0}")]
    MissingParameter(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
