use thiserror::Error;

use crate::ratlin::Rational;

/// Errors raised by the algebraic layers and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("subspace not contained: rank of union {union} exceeds rank of ambient {big}")]
    SubspaceNotContained { big: usize, union: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("Jacobi identity fails on ({i},{j},{k}): residual {}", fmt_vec(residual))]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Rational>,
    },

    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),

    #[error("module axiom fails for ({i},{j}): residual has {nonzero} nonzero entries")]
    ModuleAxiomViolation { i: usize, j: usize, nonzero: usize },

    #[error("modules live over different Lie algebras")]
    MixedAlgebras,

    #[error("Lie algebra is not semisimple (Killing form is degenerate)")]
    NotSemisimple,

    #[error("r_basis does not span an abelian subalgebra: [r{0}, r{1}] != 0")]
    RNotAbelian(usize, usize),

    #[error("r_basis vector {r} does not commute with h basis vector {h}")]
    RNotCommutingWithH { h: usize, r: usize },

    #[error("mixing matrix is rank deficient (rank {rank}, expected {expected})")]
    MixingRankDeficient { rank: usize, expected: usize },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("invalid slope parameter: {0}")]
    InvalidSlope(String),

    #[error("Euler number must be nonzero")]
    ZeroEuler,

    #[error("unknown module specification `{0}`")]
    UnknownModuleSpec(String),

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("relative complex is not closed under the differential in degree {0}")]
    RelativeClosureViolated(usize),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
