use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lambda must satisfy lambda > -1/2, got {0}")]
    LambdaOutOfDomain(f64),

    #[error("degree must be at least 1, got {0}")]
    DegreeOutOfDomain(usize),

    #[error("index {index} is outside the domain of {what}")]
    IndexOutOfDomain { what: &'static str, index: usize },

    #[error("h_0 has a pole at lambda = 0; use the combined alpha~_1 form")]
    RemovablePole,

    #[error("{0}")]
    Domain(String),

    #[error("a1^2 < 2 a2 ({a1_sq} < {two_a2}): polynomial is not real-rooted")]
    NotRealRooted { a1_sq: f64, two_a2: f64 },

    #[error("lambda = {0} has no exact rational form with a small denominator")]
    NonRationalLambda(f64),

    #[error("degree {n} exceeds the oracle cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("mass matrix is numerically singular (condition estimate {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("bisection stalled at relative width {achieved:e} (requested {requested:e}) after {iterations} iterations")]
    NonConvergence {
        achieved: f64,
        requested: f64,
        iterations: usize,
    },

    #[error("dense eigensolver did not converge in {0} sweeps")]
    JacobiNoConvergence(usize),
}

impl Error {
    /// Usage and domain errors, as opposed to numeric failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::LambdaOutOfDomain(_)
                | Error::DegreeOutOfDomain(_)
                | Error::IndexOutOfDomain { .. }
                | Error::RemovablePole
                | Error::Domain(_)
                | Error::NonRationalLambda(_)
                | Error::OracleCapExceeded { .. }
        )
    }
}
