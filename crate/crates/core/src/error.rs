use thiserror::Error;

/// Errors raised by the tetration kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact value would need more decimal digits than the budget allows.
    #[error("exact value exceeds the digit budget of {budget} decimal digits")]
    BudgetExceeded { budget: u64 },

    /// A residue window wider than the window budget was requested, or the
    /// first mismatching digit could not be located inside the budget.
    #[error("digit window of {requested} digits exceeds the window budget of {budget}")]
    WindowBudgetExceeded { requested: u64, budget: u64 },

    /// Valuation or trailing-zero count of zero.
    #[error("zero has unbounded valuation")]
    ZeroInput,

    /// Two equal values share unboundedly many trailing digits.
    #[error("values are equal; their common trailing digit count is unbounded")]
    EqualValues,

    /// The exponent was reported only as "exceeds cap", but the cap is too small
    /// to guarantee that the exponent reaches log2 of the modulus.
    #[error("cannot lift exponent: cap {cap} is below the {modulus_bits}-bit modulus size")]
    InvalidLift { cap: String, modulus_bits: u64 },

    /// Argument outside the domain of the operation.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// The constant congruence speed does not exist for this base.
    #[error("the constant congruence speed of {0} is undefined (positive multiple of 10)")]
    UndefinedSpeed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
