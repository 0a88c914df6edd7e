//! Crate-wide error type.

use std::fmt;

/// Errors raised by the exact-arithmetic and criterion machinery.
///
/// `BudgetExceeded` is the one "resource" error: a Groebner run that hits
/// its pair or basis cap stops with this instead of returning a wrong
/// answer. Everything else is an input error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials with different variable lists were combined.
    VarMismatch,
    /// Rational and prime-field scalars were mixed, or moduli differ.
    ScalarKindMismatch,
    /// A prime-field modulus that is not prime.
    NotPrime(u64),
    /// Division by zero in a scalar field.
    DivisionByZero,
    /// Variable index out of range.
    IndexOutOfRange(usize),
    /// Groebner computation exceeded its explicit resource budget.
    BudgetExceeded { pairs: usize, basis: usize },
    /// A presentation whose ideal is the unit ideal (the quotient would be 0).
    UnitIdealQuotient,
    /// Generator set with gcd != 1 cannot define a numerical semigroup
    /// with finitely many gaps.
    NotCoprime(u64),
    /// Semigroup generators must be positive.
    NonPositiveGenerator,
    /// Membership bound blown while computing gaps (pathological input).
    SemigroupBoundExceeded,
    /// An ideal exponent that does not lie in the semigroup, or is zero
    /// where a proper ideal is required.
    BadIdealExponent(u64),
    /// The zero operator where a nonzero one is required.
    ZeroOperator,
    /// A graded-ring operation that needs a homogeneous operator.
    NotHomogeneous,
    /// An operator that does not map the semigroup algebra into itself.
    NotAMember,
    /// A minor whose normal form is not a single monomial (diagnostic;
    /// not expected for monomial curves).
    NonMonomialMinor(String),
    /// Exponentiation of a non-invertible operator by a negative power.
    NotInvertible,
    /// Text that does not parse; `offset` is a byte position into the input.
    Parse { offset: usize, message: String },
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// True for the resource-budget error (CLI exit code 3); everything
    /// else is treated as an input error (exit code 2).
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarMismatch => write!(f, "polynomials have different variable lists"),
            Error::ScalarKindMismatch => write!(f, "mixed rational and prime-field scalars"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::IndexOutOfRange(j) => write!(f, "variable index {j} out of range"),
            Error::BudgetExceeded { pairs, basis } => write!(
                f,
                "Groebner budget exceeded (max pairs {pairs}, max basis {basis})"
            ),
            Error::UnitIdealQuotient => {
                write!(f, "ideal is the unit ideal; the quotient algebra is zero")
            }
            Error::NotCoprime(g) => write!(
                f,
                "generators have gcd {g} != 1; the gap set would be infinite"
            ),
            Error::NonPositiveGenerator => write!(f, "semigroup generators must be positive"),
            Error::SemigroupBoundExceeded => {
                write!(f, "membership bound exceeded while computing gaps")
            }
            Error::BadIdealExponent(e) => write!(
                f,
                "exponent {e} is not a valid generator for a proper monomial ideal"
            ),
            Error::ZeroOperator => write!(f, "the zero operator is not allowed here"),
            Error::NotHomogeneous => write!(f, "operator is not homogeneous"),
            Error::NotAMember => write!(f, "operator does not preserve the algebra"),
            Error::NonMonomialMinor(s) => write!(
                f,
                "minor reduces to a non-monomial normal form: {s}"
            ),
            Error::NotInvertible => write!(f, "operator is not invertible"),
            Error::Parse { offset, message } => write!(f, "parse error at byte {offset}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
