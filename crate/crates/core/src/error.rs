use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// A series hit its term budget before its terms fell below tolerance.
    NonConvergence { series: &'static str, terms: usize },
    /// No sign change of Ai(-lambda) near the guess for the nth zero.
    BracketFailure { n: usize },
    /// Root refinement for the nth zero ran out of iterations.
    MaxIterations { n: usize, iterations: usize },
    /// Adaptive quadrature could not meet its tolerance.
    QuadratureFailure { estimate: f64, error: f64 },
    /// Bisection or inverse iteration in the finite-difference solver stalled.
    ConvergenceFailure(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergence { series, terms } => {
                write!(f, "{series} did not converge within {terms} terms")
            }
            Error::BracketFailure { n } => {
                write!(f, "no sign change of Ai(-lambda) bracketing zero n={n}")
            }
            Error::MaxIterations { n, iterations } => {
                write!(f, "zero n={n} not converged after {iterations} iterations")
            }
            Error::QuadratureFailure { estimate, error } => {
                write!(
                    f,
                    "quadrature failed: estimate {estimate:e} with error {error:e}"
                )
            }
            Error::ConvergenceFailure(what) => write!(f, "{what} failed to converge"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
