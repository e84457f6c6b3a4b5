//! Exact normal forms in the amalgams
//! `SL2(F_p[t]) = SL2(F_p) *_{B(F_p)} B(F_p[t])` and
//! `E2(Z[t]) = SL2(Z) *_{B(Z)} B(Z[t])`, graded `F_p`-homology dimension
//! bookkeeping along them, and verification of explicit witness matrices.

pub mod amalgam;
pub mod gl2;
pub mod homology;
pub mod json;
pub mod nagao;
pub mod ring;
pub mod sample;
pub mod witnesses;
