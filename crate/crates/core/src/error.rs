use thiserror::Error;

use crate::catalog::CaseId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoebiusError {
    #[error("singular matrix: determinant is zero")]
    Singular,
    #[error("element order exceeds cap {cap}")]
    OrderExceedsCap { cap: u32 },
    #[error("group closure exceeds cap {cap}")]
    GroupExceedsCap { cap: usize },
    #[error("invalid point or homography literal: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("points {a} and {b} lie in the same orbit")]
    SameOrbit { a: String, b: String },
    #[error("the orbit of the base point does not contain infinity")]
    InfinityNotInBaseOrbit,
    #[error("the orbit of a contains infinity")]
    InfinityInNumeratorOrbit,
    #[error("orbit identity failed: {0}")]
    IdentityFailed(String),
    #[error("group has no rotation of order at least 3")]
    NoRotation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelmerError {
    #[error("no residue t makes the curve integral for {0}")]
    NoAdmissibleResidue(CaseId),
    #[error("orbit contains duplicate or infinite points")]
    DegenerateOrbit,
    #[error("function has a pole at a root of the polynomial")]
    PoleAtRoot,
    #[error("condition ({condition}) fails for {case}: {detail}")]
    ConditionFailed {
        case: CaseId,
        condition: String,
        detail: String,
    },
    #[error("polynomial must be monic and squarefree")]
    BadPolynomial,
    #[error("specialization of {0} does not have integer coefficients")]
    NotIntegral(CaseId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("Galois signature dichotomy violated: r1 = {r1} for degree {degree}")]
    GaloisDichotomy { r1: usize, degree: usize },
}

#[derive(Debug, Error)]
pub enum CasError {
    #[error("no CAS binary configured (set PGL2_CAS or pass a config file)")]
    NotConfigured,
    #[error("CAS binary not found or not executable: {0}")]
    Missing(String),
    #[error("CAS timed out after {seconds} s")]
    Timeout { seconds: u64 },
    #[error("CAS exited with {status}: {stderr}")]
    Failed { status: String, stderr: String },
    #[error("could not parse CAS reply: {0}")]
    Parse(String),
    #[error("CAS config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum FieldError {
    #[error(transparent)]
    Selmer(#[from] SelmerError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Cas(#[from] CasError),
    #[error("specialization of {case} at y = {y}, n = {n} is not integral")]
    NotIntegral { case: CaseId, y: u64, n: u32 },
    #[error("subfield polynomials are only available for D2 and D3, not {0}")]
    UnsupportedCase(CaseId),
}
