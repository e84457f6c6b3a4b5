//! Concrete amalgams and constructive decompositions:
//! `SL2(F_p[t]) = SL2(F_p) *_{B(F_p)} B(F_p[t])` for matrices, and
//! `E2(Z[t]) = SL2(Z) *_{B(Z)} B(Z[t])` for words, plus the reduction maps
//! `φ_p: E2(Z[t]) → SL2(F_p[t])`.

mod factor;
mod structures;

pub use factor::{sl2fpt_elementary_factor, sl2z_factor};
pub use structures::{E2Zt, NagaoFp};

use std::collections::VecDeque;

use crate::amalgam::{self, decompose, evaluate_word, AmalgamError, AmalgamStructure, Factor, Letter, NormalForm};
use crate::gl2::{Generator, Gl2Error, Mat2};
use crate::ring::{Coeff, CoeffRing, Poly, RingError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NagaoError {
    #[error(transparent)]
    Amalgam(#[from] AmalgamError),
    #[error(transparent)]
    Matrix(#[from] Gl2Error),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("expected a matrix over F_{expected}[t], got one over {found}")]
    WrongRing { expected: u64, found: CoeffRing },
    #[error("normal-form algorithms disagree on {matrix}: {via_factorization} vs {via_degree_reduction}")]
    CrossValidation {
        matrix: String,
        via_factorization: String,
        via_degree_reduction: String,
    },
}

/// Turn elementary generators into amalgam letters.
///
/// `E12(f)` goes to factor two, `W` and `D(u)` to factor one, a constant
/// `E21(n)` to factor one, and a non-constant `E21(f)` expands to
/// `W^-1 · E12(-f) · W`.
pub fn letters_from_generators<S: AmalgamStructure + ?Sized>(
    s: &S,
    word: &[Generator],
) -> Result<Vec<Letter>, NagaoError> {
    let ring = s.ring();
    let mut out = Vec::with_capacity(word.len());
    for g in word {
        match g {
            Generator::E12(_) => out.push(Letter::new(s, Factor::Two, g.matrix(ring)?)?),
            Generator::E21(f) if !f.is_constant() => {
                let w = Generator::W.matrix(ring)?;
                out.push(Letter::new(s, Factor::One, w.adjugate())?);
                out.push(Letter::new(s, Factor::Two, Generator::E12(-f).matrix(ring)?)?);
                out.push(Letter::new(s, Factor::One, w)?);
            }
            Generator::E21(_) | Generator::W | Generator::Diag(_) => {
                out.push(Letter::new(s, Factor::One, g.matrix(ring)?)?)
            }
        }
    }
    Ok(out)
}

fn check_fp_matrix(s: &NagaoFp, m: &Mat2) -> Result<(), NagaoError> {
    if m.ring() != CoeffRing::Mod(s.p()) {
        return Err(NagaoError::WrongRing {
            expected: s.p(),
            found: m.ring(),
        });
    }
    m.require_sl2()?;
    Ok(())
}

/// Normal form via elementary factorization followed by word rewriting.
pub fn nagao_nf_via_factorization(s: &NagaoFp, m: &Mat2) -> Result<NormalForm, NagaoError> {
    check_fp_matrix(s, m)?;
    let gens = sl2fpt_elementary_factor(m)?;
    let letters = letters_from_generators(s, &gens)?;
    Ok(amalgam::normalize(s, &letters)?)
}

/// Normal form read directly off the matrix by peeling letters from the right.
///
/// Writing `m = [[a, b], [c, d]]` with `c ≠ 0`: when `deg d > deg c` the last
/// letter is `E12(q - q(0))` with `q = d div c`; otherwise it is
/// `[[0, -1], [1, e]]` with `e` the leading-coefficient quotient when
/// `deg d = deg c` and `0` when `deg d < deg c`. Peeling strictly lowers
/// `deg c` every two steps; once `c = 0` the remainder lies in `B(F_p[t])`.
pub fn nagao_nf_via_degree_reduction(s: &NagaoFp, m: &Mat2) -> Result<NormalForm, NagaoError> {
    check_fp_matrix(s, m)?;
    let ring = m.ring();
    let mut cur = m.clone();
    let mut tail: VecDeque<Letter> = VecDeque::new();
    while !cur.c().is_zero() {
        let (c, d) = (cur.c(), cur.d());
        let (factor, rep) = if d.degree() > c.degree() {
            let (q, _) = d.divmod(c)?;
            (Factor::Two, Generator::E12(q.without_constant()).matrix(ring)?)
        } else {
            let e = if d.degree() == c.degree() {
                let lc_d = d.leading_coeff().expect("d is nonzero");
                let lc_c_inv = c.leading_coeff().expect("c is nonzero").inverse().expect("field");
                lc_d.checked_mul(&lc_c_inv)?
            } else {
                Coeff::zero(ring)
            };
            (Factor::One, structures::swap_rep(ring, Poly::constant(&e)))
        };
        cur = cur.checked_mul(&rep.adjugate())?;
        tail.push_front(Letter::new(s, factor, rep)?);
    }
    let (head, rep) = decompose(s, Factor::Two, &cur)?;
    if let Some(r) = rep {
        tail.push_front(Letter::new(s, Factor::Two, r)?);
    }
    Ok(NormalForm::from_parts(s, head, tail.into())?)
}

/// Nagao normal form of a determinant-one matrix over `F_p[t]`, computed by
/// both algorithms; any disagreement is an error.
pub fn nagao_normal_form(p: u64, m: &Mat2) -> Result<NormalForm, NagaoError> {
    let s = NagaoFp::new(p)?;
    let via_factorization = nagao_nf_via_factorization(&s, m)?;
    let via_degree_reduction = nagao_nf_via_degree_reduction(&s, m)?;
    if via_factorization != via_degree_reduction {
        return Err(NagaoError::CrossValidation {
            matrix: m.to_string(),
            via_factorization: via_factorization.to_string(),
            via_degree_reduction: via_degree_reduction.to_string(),
        });
    }
    Ok(via_factorization)
}

/// Normal form of an `E2(Z[t])` word.
pub fn e2zt_normal_form(word: &[Letter]) -> Result<NormalForm, NagaoError> {
    Ok(amalgam::normalize(&E2Zt, word)?)
}

/// Reduce an `E2(Z[t])` letter modulo `p`; the factor tag is preserved.
pub fn reduce_letter(s: &NagaoFp, l: &Letter) -> Result<Letter, NagaoError> {
    Ok(Letter::new(s, l.factor(), l.element().reduce_mod_p(s.p())?)?)
}

/// `φ_p` on an `E2(Z[t])` word: the reduced matrix and its Nagao normal form.
pub fn phi_p(word: &[Letter], p: u64) -> Result<(Mat2, NormalForm), NagaoError> {
    for l in word {
        if l.element().ring() != CoeffRing::Integers || !E2Zt.in_factor(l.factor(), l.element()) {
            return Err(AmalgamError::InvalidLetter {
                factor: l.factor(),
                element: l.element().to_string(),
                structure: E2Zt.key().to_string(),
            }
            .into());
        }
    }
    let m = evaluate_word(CoeffRing::Integers, word).reduce_mod_p(p)?;
    let nf = nagao_normal_form(p, &m)?;
    Ok((m, nf))
}

/// `φ_p` computed letter by letter: reduce each letter, then rewrite in the
/// `F_p` amalgam. Agrees with [`phi_p`] because reduction is a homomorphism
/// compatible with both factors.
pub fn phi_p_letterwise(word: &[Letter], p: u64) -> Result<NormalForm, NagaoError> {
    let s = NagaoFp::new(p)?;
    let reduced = word
        .iter()
        .map(|l| reduce_letter(&s, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(amalgam::normalize(&s, &reduced)?)
}

/// True when `m` lies in the constant Borel subgroup `B(F_p)`.
pub fn in_constant_borel(m: &Mat2) -> bool {
    m.is_constant() && m.is_upper_triangular() && m.has_unit_det()
}

#[cfg(test)]
mod tests;
