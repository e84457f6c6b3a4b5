//! Graded `F_p`-homology bookkeeping at a polynomial-degree truncation `d`.
//!
//! Polynomial groups such as `t·F_p[t]` have infinite rank; every table here
//! takes a truncation degree `d` meaning "basis powers of `t` up to `t^d`".
//! Homology of the truncated group is then the finite exterior ⊗ divided
//! power count, and tables grow monotonically in `d`.

mod dims;
mod wedge;

pub use dims::{
    abelian_dims, binomial, class_order_lower_bound, coinvariant_dims, coinvariant_dims_by_enumeration,
    dim_divided_power, dim_exterior, h_dims, h_table, multiset_count, mv_ledger_check, order_bound_for_degree,
    weighted_monomials, CoinvBasis, CoinvOptions, CoinvPart, Dimension, GradedDimTable, GroupId, MvLedgerEntry,
    WeightedMonomial,
};
pub use wedge::{phi_star_class, wedge_product, WedgeClass, WedgeMonomial};

use crate::ring::{CoeffRing, RingError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{group} over F_{p} is not supported: {reason}")]
    Unsupported {
        group: GroupId,
        p: u64,
        reason: &'static str,
    },
    #[error("wedge classes over different rings: {0} vs {1}")]
    RingMismatch(CoeffRing, CoeffRing),
    #[error("invalid wedge monomial {0:?}: exponents must be strictly increasing and positive")]
    InvalidMonomial(Vec<u32>),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("dimension count overflows 64 bits")]
    Overflow,
}
