//! Normal forms in an amalgamated free product `G1 *_A G2` of matrix groups.
//!
//! Every element has a unique expression `a · s_1 ⋯ s_n` with `a ∈ A` and
//! the `s_j` canonical right-coset representatives (`g = a·s`) drawn from
//! alternating factors, none lying in `A`. Words are rewritten right to
//! left: each letter is multiplied onto the normal form of the suffix,
//! merged with the leading tail letter when both come from the same factor,
//! and split by the factor's transversal so that the `A`-part moves into
//! the head.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gl2::{Gl2Error, Mat2};
use crate::ring::CoeffRing;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AmalgamError {
    #[error("letter {element} is not in factor {factor} of {structure}")]
    InvalidLetter {
        factor: Factor,
        element: String,
        structure: String,
    },
    #[error("transversal for factor {factor} is not exact on {element}")]
    InexactTransversal { factor: Factor, element: String },
    #[error("normal forms belong to different structures: {0} vs {1}")]
    StructureMismatch(String, String),
    #[error("malformed normal form: {0}")]
    Malformed(String),
    #[error(transparent)]
    Matrix(#[from] Gl2Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    One,
    Two,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::One => Factor::Two,
            Factor::Two => Factor::One,
        }
    }

    /// Numeric tag used in serialized forms.
    pub fn tag(self) -> u8 {
        match self {
            Factor::One => 1,
            Factor::Two => 2,
        }
    }

    pub fn from_tag(tag: u64) -> Option<Factor> {
        match tag {
            1 => Some(Factor::One),
            2 => Some(Factor::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// Identifies the amalgam a normal form was computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureKey {
    pub kind: &'static str,
    pub ring: CoeffRing,
}

impl fmt::Display for StructureKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.kind, self.ring)
    }
}

/// Description of an amalgam `G1 *_A G2` whose elements are 2×2 matrices.
///
/// Implementations supply membership predicates and, per factor, a
/// transversal `g ↦ (a, s)` with `g = a·s`, `a ∈ A`, and `s` a canonical
/// representative of the right coset `A·g`, or `None` exactly when `g ∈ A`.
/// Group operations are matrix operations.
pub trait AmalgamStructure {
    fn key(&self) -> StructureKey;

    fn in_common(&self, g: &Mat2) -> bool;

    fn in_factor(&self, factor: Factor, g: &Mat2) -> bool;

    fn transversal(&self, factor: Factor, g: &Mat2) -> Result<(Mat2, Option<Mat2>), AmalgamError>;

    fn ring(&self) -> CoeffRing {
        self.key().ring
    }
}

/// An element of one of the two factors, tagged with the factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    factor: Factor,
    element: Mat2,
}

impl Letter {
    pub fn new<S: AmalgamStructure + ?Sized>(s: &S, factor: Factor, element: Mat2) -> Result<Letter, AmalgamError> {
        if element.ring() != s.ring() || !s.in_factor(factor, &element) {
            return Err(AmalgamError::InvalidLetter {
                factor,
                element: element.to_string(),
                structure: s.key().to_string(),
            });
        }
        Ok(Letter { factor, element })
    }

    pub(crate) fn new_unchecked(factor: Factor, element: Mat2) -> Letter {
        Letter { factor, element }
    }

    pub fn factor(&self) -> Factor {
        self.factor
    }

    pub fn element(&self) -> &Mat2 {
        &self.element
    }
}

/// Evaluate a word as the product of its letters.
pub fn evaluate_word(ring: CoeffRing, word: &[Letter]) -> Mat2 {
    word.iter().fold(Mat2::identity(ring), |acc, l| &acc * &l.element)
}

/// Reduced form `head · tail[0] ⋯ tail[n-1]`.
///
/// Equality is structural; by uniqueness of normal forms it coincides with
/// equality of the represented group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    key: StructureKey,
    head: Mat2,
    tail: Vec<Letter>,
}

impl NormalForm {
    pub fn identity<S: AmalgamStructure + ?Sized>(s: &S) -> NormalForm {
        NormalForm {
            key: s.key(),
            head: Mat2::identity(s.ring()),
            tail: Vec::new(),
        }
    }

    /// Rebuild a normal form from parts, checking every invariant.
    pub fn from_parts<S: AmalgamStructure + ?Sized>(
        s: &S,
        head: Mat2,
        tail: Vec<Letter>,
    ) -> Result<NormalForm, AmalgamError> {
        let nf = NormalForm {
            key: s.key(),
            head,
            tail,
        };
        check_invariants(s, &nf)?;
        Ok(nf)
    }

    pub fn key(&self) -> StructureKey {
        self.key
    }

    pub fn head(&self) -> &Mat2 {
        &self.head
    }

    pub fn tail(&self) -> &[Letter] {
        &self.tail
    }

    pub fn tags(&self) -> Vec<u8> {
        self.tail.iter().map(|l| l.factor.tag()).collect()
    }

    /// Bass–Serre length: zero exactly for elements of `A`.
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.tail.is_empty() && self.head.is_identity()
    }

    /// The head as a factor-one letter followed by the tail.
    pub fn to_word(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.tail.len() + 1);
        if !self.head.is_identity() {
            w.push(Letter::new_unchecked(Factor::One, self.head.clone()));
        }
        w.extend(self.tail.iter().cloned());
        w
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        for l in &self.tail {
            write!(f, " ·{} {}", l.factor, l.element)?;
        }
        Ok(())
    }
}

/// Split `g` by the factor's transversal, checking exactness in debug builds.
pub fn decompose<S: AmalgamStructure + ?Sized>(
    s: &S,
    factor: Factor,
    g: &Mat2,
) -> Result<(Mat2, Option<Mat2>), AmalgamError> {
    let (a, rep) = s.transversal(factor, g)?;
    if cfg!(debug_assertions) {
        let rebuilt = match &rep {
            Some(r) => &a * r,
            None => a.clone(),
        };
        let rep_ok = rep.as_ref().is_none_or(|r| s.in_factor(factor, r) && !s.in_common(r));
        if rebuilt != *g || !s.in_common(&a) || !rep_ok {
            return Err(AmalgamError::InexactTransversal {
                factor,
                element: g.to_string(),
            });
        }
    }
    Ok((a, rep))
}

/// Normal form of `letter · nf`.
pub fn left_multiply<S: AmalgamStructure + ?Sized>(
    s: &S,
    letter: &Letter,
    nf: NormalForm,
) -> Result<NormalForm, AmalgamError> {
    let f = letter.factor;
    let NormalForm { key, head, mut tail } = nf;
    let mut x = &letter.element * &head;
    if tail.first().is_some_and(|l| l.factor == f) {
        let first = tail.remove(0);
        x = &x * &first.element;
    }
    let (a, rep) = decompose(s, f, &x)?;
    if let Some(r) = rep {
        tail.insert(0, Letter::new_unchecked(f, r));
    }
    Ok(NormalForm { key, head: a, tail })
}

fn validate_letter<S: AmalgamStructure + ?Sized>(s: &S, l: &Letter) -> Result<(), AmalgamError> {
    if l.element.ring() != s.ring() || !s.in_factor(l.factor, &l.element) {
        return Err(AmalgamError::InvalidLetter {
            factor: l.factor,
            element: l.element.to_string(),
            structure: s.key().to_string(),
        });
    }
    Ok(())
}

/// Reduce a word to its normal form.
pub fn normalize<S: AmalgamStructure + ?Sized>(s: &S, word: &[Letter]) -> Result<NormalForm, AmalgamError> {
    for l in word {
        validate_letter(s, l)?;
    }
    let mut nf = NormalForm::identity(s);
    for l in word.iter().rev() {
        nf = left_multiply(s, l, nf)?;
    }
    if cfg!(debug_assertions) {
        check_invariants(s, &nf)?;
    }
    Ok(nf)
}

fn check_key<S: AmalgamStructure + ?Sized>(s: &S, x: &NormalForm) -> Result<(), AmalgamError> {
    if x.key != s.key() {
        return Err(AmalgamError::StructureMismatch(x.key.to_string(), s.key().to_string()));
    }
    Ok(())
}

/// Group law on normal forms.
pub fn nf_multiply<S: AmalgamStructure + ?Sized>(
    s: &S,
    x: &NormalForm,
    y: &NormalForm,
) -> Result<NormalForm, AmalgamError> {
    check_key(s, x)?;
    check_key(s, y)?;
    let mut nf = y.clone();
    for l in x.to_word().iter().rev() {
        nf = left_multiply(s, l, nf)?;
    }
    Ok(nf)
}

pub fn nf_invert<S: AmalgamStructure + ?Sized>(s: &S, x: &NormalForm) -> Result<NormalForm, AmalgamError> {
    check_key(s, x)?;
    let mut word: Vec<Letter> = x
        .tail
        .iter()
        .rev()
        .map(|l| Letter::new_unchecked(l.factor, l.element.adjugate()))
        .collect();
    word.push(Letter::new_unchecked(Factor::One, x.head.adjugate()));
    normalize(s, &word)
}

/// The matrix represented by a normal form.
pub fn nf_evaluate(x: &NormalForm) -> Mat2 {
    x.tail.iter().fold(x.head.clone(), |acc, l| &acc * &l.element)
}

pub fn nf_length(x: &NormalForm) -> usize {
    x.len()
}

/// Check head ∈ A, tail letters in their factors and outside A, alternating
/// factors, and every tail letter a fixed point of its transversal.
pub fn check_invariants<S: AmalgamStructure + ?Sized>(s: &S, x: &NormalForm) -> Result<(), AmalgamError> {
    check_key(s, x)?;
    if !s.in_common(&x.head) {
        return Err(AmalgamError::Malformed(format!(
            "head {} is not in the common subgroup",
            x.head
        )));
    }
    for (j, l) in x.tail.iter().enumerate() {
        validate_letter(s, l)?;
        if s.in_common(&l.element) {
            return Err(AmalgamError::Malformed(format!(
                "tail letter {j} lies in the common subgroup"
            )));
        }
        if j > 0 && x.tail[j - 1].factor == l.factor {
            return Err(AmalgamError::Malformed(format!(
                "tail letters {} and {j} come from the same factor",
                j - 1
            )));
        }
        let (a, rep) = s.transversal(l.factor, &l.element)?;
        if !a.is_identity() || rep.as_ref() != Some(&l.element) {
            return Err(AmalgamError::Malformed(format!(
                "tail letter {j} is not a canonical coset representative"
            )));
        }
    }
    Ok(())
}
