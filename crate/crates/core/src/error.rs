use alloc::boxed::Box;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{what} = {value} is outside its domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid quadrature spec: {0}")]
    InvalidQuadrature(&'static str),

    /// Adaptive refinement hit the depth limit on `[lo, hi]` with the local
    /// error estimate still above its share of the tolerance.
    #[error("quadrature did not converge on [{lo}, {hi}] (error estimate {error_estimate:e})")]
    NotConverged {
        lo: f64,
        hi: f64,
        error_estimate: f64,
    },

    #[error("at apex a = {apex}: {source}")]
    AtApex { apex: f64, source: Box<Error> },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }

    pub(crate) fn at_apex(self, apex: f64) -> Self {
        Error::AtApex {
            apex,
            source: Box::new(self),
        }
    }
}
