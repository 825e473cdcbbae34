use thiserror::Error;

/// Errors surfaced by parsing and by the desk-scale resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter '{0}' in word")]
    BadLetter(char),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}
