use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,
    #[error("operands live on different model spaces (n = {left} vs n = {right})")]
    MismatchedModelSpace { left: usize, right: usize },
    #[error("expected a form of degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: String },
    #[error("form has a coefficient with non-zero imaginary part")]
    NonRealForm,
    #[error("form is not of pure type ({0},0)")]
    WrongType(usize),
    #[error("half-dimension n = {n} is too small (need n >= {min})")]
    DimensionTooSmall { n: usize, min: usize },
    #[error("half-dimension n = {n} exceeds the limit {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("total volume must be positive, got {0}")]
    NonPositiveVolume(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("volume polynomial vanishes inside the admissible domain: {0}")]
    DomainViolation(String),
    #[error("{}field `{field}`: {message}", location(*line))]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            field: field.into(),
            message: message.into(),
        }
    }
}

fn location(line: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!("line {line}: ")
    }
}
