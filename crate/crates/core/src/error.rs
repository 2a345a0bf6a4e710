use std::fmt;

use thiserror::Error;

/// Errors raised by the operators, meshes and experiment drivers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the set on which the operation is defined.
    #[error("{what} = {value} is outside {expected}")]
    Domain {
        what: &'static str,
        value: f64,
        expected: String,
    },

    /// An evaluation point is not in the operator's domain.
    #[error("point ({x}, {y}) is outside {domain}")]
    PointOutside { x: f64, y: f64, domain: String },

    /// An integer parameter is out of range (basis index, degree, sample count).
    #[error("invalid parameter {name} = {value}: {reason}")]
    Parameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("invalid interval [{alpha}, {beta}]")]
    Interval { alpha: f64, beta: f64 },

    #[error("invalid curvilinear domain: {0}")]
    CurvilinearDomain(String),

    #[error("transform rejected: {0}")]
    Transform(String),

    /// A requested combination is outside the operation's contract.
    #[error("unsupported: {0}")]
    Contract(String),

    /// An operator failed at a specific mesh point.
    #[error("evaluation failed at mesh point {index}: {source}")]
    AtPoint {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, expected: impl fmt::Display) -> Self {
        Error::Domain {
            what,
            value,
            expected: expected.to_string(),
        }
    }

    pub(crate) fn outside(x: f64, y: f64, domain: impl fmt::Display) -> Self {
        Error::PointOutside {
            x,
            y,
            domain: domain.to_string(),
        }
    }

    pub(crate) fn at_point(index: usize, source: Error) -> Self {
        Error::AtPoint {
            index,
            source: Box::new(source),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
