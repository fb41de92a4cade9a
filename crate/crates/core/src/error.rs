use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base set size {got} is too small (need at least {min})")]
    InvalidSize { got: usize, min: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("transformation {0:?} is a bijection, expected a singular map")]
    NotSingular(Vec<u8>),

    #[error("invalid cross-section: {0}")]
    InvalidCrossSection(String),

    #[error("{0} is not a subobject of {1}")]
    NotASubobject(String, String),

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("category is not normal: {0}")]
    NotNormal(String),

    #[error("malformed cone: {0}")]
    MalformedCone(String),

    #[error("not an epimorphism: {0}")]
    NotEpimorphism(String),

    #[error("{what} needs {needed} steps, above the bound of {bound}")]
    BoundExceeded {
        what: String,
        needed: u128,
        bound: u64,
    },

    #[error("carrier {carrier:?} does not define a morphism: {reason}")]
    Membership { carrier: Vec<u8>, reason: String },

    #[error("invalid block map: {0}")]
    InvalidBlockMap(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_same_size(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left, right })
    }
}

pub(crate) fn ensure_min_size(n: usize, min: usize) -> Result<()> {
    if n >= min {
        Ok(())
    } else {
        Err(Error::InvalidSize { got: n, min })
    }
}
