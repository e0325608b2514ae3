use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial has no leading monomial")]
    ZeroLeadingMonomial,
    #[error("the zero module element has no signature")]
    ZeroSignature,
    #[error("generator index {index} out of range ({count} generators)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("no multiple of a known element has signature {0}")]
    NoMultiplier(String),
    #[error("reconstruction at signature {0} produced a different leading monomial")]
    LeadingMonomialMismatch(String),
    #[error("syzygy with signature {0} did not reduce to zero")]
    SyzygyNotRecovered(String),
    #[error("certificate does not evaluate to the target")]
    CertificateMismatch,
}
