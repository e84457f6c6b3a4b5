use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::amalgam::{AmalgamError, AmalgamStructure, Factor, StructureKey};
use crate::gl2::{Generator, Gl2Error, Mat2};
use crate::ring::{Coeff, CoeffRing, Poly, RingError};

/// `SL2(F_p[t]) = SL2(F_p) *_{B(F_p)} B(F_p[t])`.
///
/// Factor one has representatives `I` and `[[0, -1], [1, e]]` for `e ∈ F_p`;
/// factor two has representatives `E12(f)` with `f(0) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NagaoFp {
    p: u64,
}

impl NagaoFp {
    pub fn new(p: u64) -> Result<Self, RingError> {
        CoeffRing::modulo(p)?;
        Ok(NagaoFp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// `E2(Z[t]) = SL2(Z) *_{B(Z)} B(Z[t])`.
///
/// Factor one has representatives `I` and the completions `[[x, y], [c, d]]`
/// of coprime bottom rows with `c > 0` and `0 ≤ x < c`; factor two has
/// representatives `E12(f)` with `f(0) = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct E2Zt;

fn is_borel(g: &Mat2) -> bool {
    g.is_upper_triangular() && g.has_unit_det()
}

/// `[[0, -1], [1, e]]`
pub(crate) fn swap_rep(ring: CoeffRing, e: Poly) -> Mat2 {
    Mat2::new(Poly::zero(ring), Poly::constant_i64(ring, -1), Poly::one(ring), e).expect("entries share a ring")
}

/// Split an upper triangular `[[u, f], [0, u^-1]]` as
/// `[[u, f(0)], [0, u^-1]] · E12(u^-1 (f - f(0)))`.
fn borel_transversal(g: &Mat2) -> (Mat2, Option<Mat2>) {
    let ring = g.ring();
    let u_inv = g.d().constant_term();
    let f = g.b().without_constant();
    if f.is_zero() {
        return (g.clone(), None);
    }
    let rep = f.scale(&u_inv).expect("same ring");
    let a = Mat2::new(
        g.a().clone(),
        Poly::constant(&g.b().constant_term()),
        Poly::zero(ring),
        g.d().clone(),
    )
    .expect("same ring");
    let s = Generator::E12(rep).matrix(ring).expect("same ring");
    (a, Some(s))
}

fn not_in_factor<S: AmalgamStructure>(s: &S, factor: Factor, g: &Mat2) -> AmalgamError {
    AmalgamError::InvalidLetter {
        factor,
        element: g.to_string(),
        structure: s.key().to_string(),
    }
}

impl AmalgamStructure for NagaoFp {
    fn key(&self) -> StructureKey {
        StructureKey {
            kind: "SL2(F_p) *_B(F_p) B(F_p[t])",
            ring: CoeffRing::Mod(self.p),
        }
    }

    fn in_common(&self, g: &Mat2) -> bool {
        g.is_constant() && is_borel(g)
    }

    fn in_factor(&self, factor: Factor, g: &Mat2) -> bool {
        match factor {
            Factor::One => g.is_constant() && g.has_unit_det(),
            Factor::Two => is_borel(g),
        }
    }

    fn transversal(&self, factor: Factor, g: &Mat2) -> Result<(Mat2, Option<Mat2>), AmalgamError> {
        if !self.in_factor(factor, g) {
            return Err(not_in_factor(self, factor, g));
        }
        match factor {
            Factor::Two => Ok(borel_transversal(g)),
            Factor::One => {
                if g.c().is_zero() {
                    return Ok((g.clone(), None));
                }
                let ring = g.ring();
                let c_inv = g.c().constant_term().inverse().expect("nonzero residue");
                let e = g.d().scale(&c_inv).map_err(Gl2Error::from)?;
                let s = swap_rep(ring, e);
                let a = g.checked_mul(&s.adjugate())?;
                Ok((a, Some(s)))
            }
        }
    }
}

/// Canonical completion of a coprime integer bottom row `(c, d)`, `c ≠ 0`,
/// to a determinant-one matrix `[[x, y], [c', d']]` with `(c', d') = ±(c, d)`,
/// `c' > 0` and `0 ≤ x < c'`.
pub(crate) fn complete_bottom_row(c: &BigInt, d: &BigInt) -> [[BigInt; 2]; 2] {
    let (c, d) = if c.is_negative() {
        (-c, -d)
    } else {
        (c.clone(), d.clone())
    };
    // x·d ≡ 1 (mod c)
    let g = d.extended_gcd(&c);
    debug_assert!(g.gcd.is_one(), "bottom row not coprime");
    let x = g.x.mod_floor(&c);
    let y = (&x * &d - BigInt::one()) / &c;
    [[x, y], [c, d]]
}

impl AmalgamStructure for E2Zt {
    fn key(&self) -> StructureKey {
        StructureKey {
            kind: "SL2(Z) *_B(Z) B(Z[t])",
            ring: CoeffRing::Integers,
        }
    }

    fn in_common(&self, g: &Mat2) -> bool {
        g.is_constant() && is_borel(g)
    }

    fn in_factor(&self, factor: Factor, g: &Mat2) -> bool {
        match factor {
            Factor::One => g.is_constant() && g.has_unit_det(),
            Factor::Two => is_borel(g),
        }
    }

    fn transversal(&self, factor: Factor, g: &Mat2) -> Result<(Mat2, Option<Mat2>), AmalgamError> {
        if !self.in_factor(factor, g) {
            return Err(not_in_factor(self, factor, g));
        }
        match factor {
            Factor::Two => Ok(borel_transversal(g)),
            Factor::One => {
                if g.c().is_zero() {
                    return Ok((g.clone(), None));
                }
                let c = g.c().constant_term().to_bigint();
                let d = g.d().constant_term().to_bigint();
                let rows = complete_bottom_row(&c, &d);
                let s = Mat2::new(
                    Poly::constant(&Coeff::Int(rows[0][0].clone())),
                    Poly::constant(&Coeff::Int(rows[0][1].clone())),
                    Poly::constant(&Coeff::Int(rows[1][0].clone())),
                    Poly::constant(&Coeff::Int(rows[1][1].clone())),
                )?;
                let a = g.checked_mul(&s.adjugate())?;
                Ok((a, Some(s)))
            }
        }
    }
}
