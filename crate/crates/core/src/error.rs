use core::fmt;

/// Errors reported by the polynomial generators and series routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `(n, k)` lies outside the index range the operation is defined on.
    IndexRange { what: &'static str, n: u32, k: u32 },
    /// The zero polynomial has no degree.
    ZeroPolynomial,
    /// A substitution or evaluation point does not cover `X{var}`.
    MissingValue { var: usize },
    /// The composition recurrence degenerates to `S(n,1) = S(n,1)` for `k = 1`.
    VacuousIdentity { n: u32 },
    /// Reversion needs a nonzero linear coefficient.
    NotInvertible,
    /// A partition type whose recovered `k` is below 1.
    NotFirstKindType,
    /// A series needs at least one coefficient.
    EmptySeries,
    /// A Laurent value still carries a negative power of `X1`.
    NotAPolynomial,
    /// Division by a zero value while evaluating a Laurent polynomial.
    DivisionByZero,
    /// A sum that must be an integer came out fractional.
    NotIntegral,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexRange { what, n, k } => {
                write!(f, "index ({n},{k}) out of range for {what}")
            }
            Error::ZeroPolynomial => f.write_str("the zero polynomial has no degree"),
            Error::MissingValue { var } => write!(f, "no value supplied for X{var}"),
            Error::VacuousIdentity { n } => write!(
                f,
                "vacuous identity: k = 1 gives S({n},1) in terms of itself"
            ),
            Error::NotInvertible => f.write_str("not invertible: first coefficient is zero"),
            Error::NotFirstKindType => {
                f.write_str("partition type does not index a first-kind coefficient (k < 1)")
            }
            Error::EmptySeries => f.write_str("series must have at least one coefficient"),
            Error::NotAPolynomial => f.write_str("value has a negative power of X1"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotIntegral => f.write_str("sum is not an integer"),
        }
    }
}

impl core::error::Error for Error {}
