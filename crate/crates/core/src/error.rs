use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field size {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic of positive degree")]
    NotMonic,
    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("extension of degree {0} is too large to tabulate")]
    ExtensionTooLarge(usize),
    #[error("sieve table of degree {degree} over F_{q} is too large")]
    TableTooLarge { q: u32, degree: usize },
    #[error("curve polynomial has degree {0}; genus >= 1 needs degree >= 3")]
    GenusZero(usize),
    #[error("curve polynomial is not squarefree: gcd(Q, Q') = {gcd}")]
    NotSquarefree { gcd: String },
    #[error("contexts disagree: {0}")]
    ContextMismatch(&'static str),
    #[error("Newton identity step {step} is not divisible by {step}")]
    NewtonNotExact { step: usize },
    #[error("traces violate the functional equation at power {power}")]
    FunctionalEquation { power: usize },
    #[error("need at least {needed} traces, got {got}")]
    TooFewTraces { needed: usize, got: usize },
    #[error("f is not a prime power")]
    NotPrimePower,
    #[error("family would enumerate {requested} curves, budget is {budget}")]
    BudgetExceeded { requested: u128, budget: u64 },
    #[error("beta = {beta} is outside the range allowed for n = {n}")]
    BetaOutOfRange { beta: usize, n: usize },
    #[error("trace routes disagree at power {power}: character sum {charsum}, point count {count}")]
    RouteMismatch { power: usize, charsum: i128, count: i128 },
}
