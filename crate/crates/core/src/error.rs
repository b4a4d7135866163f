use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    /// `pos` is a byte offset; messages report it as a 1-based column.
    #[error("parse error at column {}: {msg}", pos + 1)]
    Parse { pos: usize, msg: String },

    /// The decomposition lemma does not apply to `B_t ⊗ R(A)`; the product is opaque.
    #[error("lemma not applicable to B:{reflection} * R{set}: {reason}")]
    LemmaNotApplicable {
        set: String,
        reflection: String,
        reason: String,
    },

    #[error("{0} is not a basis class of the {1} ring")]
    InvalidClass(String, &'static str),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
