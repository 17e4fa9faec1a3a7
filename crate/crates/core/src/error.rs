use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a = {0} is outside a > -1; the integral diverges")]
    DivergentIntegral(String),

    #[error("{route}: a = {a} is outside the supported range ({reason})")]
    OutOfDomain {
        route: &'static str,
        a: String,
        reason: &'static str,
    },

    #[error("polynomial variables differ: '{0}' vs '{1}'")]
    VariableMismatch(char, char),

    #[error("beta function has a pole at B({0}, {1})")]
    BetaPole(u64, u64),

    #[error("pole at z = -1")]
    PoleAtMinusOne,

    #[error("quadrature did not converge after {levels} levels (last difference {last_diff:e})")]
    QuadratureNonConvergence { levels: usize, last_diff: f64 },

    #[error("integrand returned a non-finite value at x = {0:e}")]
    NonFiniteIntegrand(f64),

    #[error("series did not converge within {0} terms")]
    SeriesNonConvergence(usize),

    #[error("series diverges: {0}")]
    DivergentSeries(String),

    #[error("imaginary residue {residue:e} exceeds tolerance {tol:e}")]
    ImaginaryResidue { residue: f64, tol: f64 },

    #[error("w is inconsistent with a: w^2 + w^-2 = {got}, expected {expected}")]
    InconsistentW { got: f64, expected: f64 },

    #[error("root finder did not converge after {0} iterations")]
    RootFinderNonConvergence(usize),

    #[error("root y = {0} has no reciprocal partner within tolerance")]
    ReciprocalPairing(String),

    #[error("root y = {0} is real and non-negative; the integrand has a real pole")]
    RealNonNegativeRoot(String),

    #[error("coefficient list is not palindromic")]
    NotPalindromic,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("exactness violated: {0}")]
    ExactnessViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
