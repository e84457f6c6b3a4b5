//! Exact coefficient and polynomial arithmetic over the integers and prime fields.

mod coeff;
mod parse;
mod poly;
mod units;

pub use coeff::{is_prime, Coeff, CoeffRing};
pub use parse::{parse_integer_poly, ParseError};
pub use poly::{Degree, Poly};
pub use units::{sn_witness_search, SearchLimits, SnWitness};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: CoeffRing, right: CoeffRing },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division requires field coefficients, got {0}")]
    NotAField(CoeffRing),
    #[error("expected integer coefficients, got {0}")]
    ExpectedIntegers(CoeffRing),
    #[error("search bound exceeded: {0}")]
    SearchCap(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
