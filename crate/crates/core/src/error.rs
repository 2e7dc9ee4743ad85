use core::fmt;

/// Failure modes of the point-wise evaluators.
///
/// Every variant is a plain tag so errors can be copied into per-cell status
/// arrays during grid scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Error {
    /// A finite-difference stencil produced NaN or an infinity.
    NonFiniteField,
    /// The real part of the mass is not positive at the point.
    MassPositivityViolation,
    /// An exponential left the representable range.
    Overflow,
    /// `m_r (a_r^2 - a_i^2) + 2 m_i a_r a_i` vanishes.
    DegenerateDenominator,
    /// The radicand of the beta3 square root is negative.
    NegativeRadicand,
    /// alpha1 or beta1 is not positive.
    NotNormalizable,
    /// A special-case formula was asked for a profile of the wrong kind.
    CaseMismatch,
    /// The reality quadratic has a negative discriminant.
    NoRealRoots,
    /// E_i vanishes for every beta3.
    DegenerateIdentically,
    /// lambda2 vanishes, so the printed closed-form roots are undefined.
    DegenerateLambda2,
    /// The radicand under gamma is negative.
    NegativeUnderRoot,
    DivisionByZero,
    /// A constructor argument violates a type invariant.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteField => f.write_str("non-finite value in finite-difference stencil"),
            Error::MassPositivityViolation => f.write_str("real part of mass is not positive"),
            Error::Overflow => f.write_str("value exceeds representable range"),
            Error::DegenerateDenominator => f.write_str("degenerate beta3 denominator"),
            Error::NegativeRadicand => f.write_str("beta3 radicand is negative"),
            Error::NotNormalizable => f.write_str("alpha1 and beta1 must both be positive"),
            Error::CaseMismatch => f.write_str("mass profile does not match the requested case"),
            Error::NoRealRoots => f.write_str("reality condition has no real roots"),
            Error::DegenerateIdentically => f.write_str("imaginary energy vanishes identically"),
            Error::DegenerateLambda2 => f.write_str("lambda2 vanishes"),
            Error::NegativeUnderRoot => f.write_str("gamma radicand is negative"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
