//! 2×2 matrices over `Z[t]` and `F_p[t]`, the elementary generators, and
//! reduction mod `p`.

use std::fmt;
use std::ops::Mul;

use crate::ring::{Coeff, CoeffRing, ParseError, Poly, RingError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Gl2Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("determinant is {0}, expected 1")]
    DetNotOne(String),
    #[error("{0} is not a constant integer matrix")]
    NotConstant(String),
    #[error("{0} is not a unit of the coefficient ring")]
    NotAUnit(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A 2×2 matrix `[[a, b], [c, d]]` with entries in a single polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: Poly,
    b: Poly,
    c: Poly,
    d: Poly,
}

impl Mat2 {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> Result<Self, Gl2Error> {
        let r = a.ring();
        for e in [&b, &c, &d] {
            r.check_same(&e.ring())?;
        }
        Ok(Mat2 { a, b, c, d })
    }

    /// Integer-constant matrix, reduced into `ring`.
    pub fn from_i64(ring: CoeffRing, m: [[i64; 2]; 2]) -> Self {
        Mat2 {
            a: Poly::constant_i64(ring, m[0][0]),
            b: Poly::constant_i64(ring, m[0][1]),
            c: Poly::constant_i64(ring, m[1][0]),
            d: Poly::constant_i64(ring, m[1][1]),
        }
    }

    pub fn identity(ring: CoeffRing) -> Self {
        Self::from_i64(ring, [[1, 0], [0, 1]])
    }

    pub fn ring(&self) -> CoeffRing {
        self.a.ring()
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }
    pub fn b(&self) -> &Poly {
        &self.b
    }
    pub fn c(&self) -> &Poly {
        &self.c
    }
    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn entries(&self) -> [&Poly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn checked_mul(&self, o: &Mat2) -> Result<Mat2, Gl2Error> {
        self.ring().check_same(&o.ring())?;
        Ok(Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        })
    }

    pub fn det(&self) -> Poly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> Poly {
        &self.a + &self.d
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn sub(&self, o: &Mat2) -> Result<Mat2, Gl2Error> {
        Ok(Mat2 {
            a: self.a.checked_sub(&o.a)?,
            b: self.b.checked_sub(&o.b)?,
            c: self.c.checked_sub(&o.c)?,
            d: self.d.checked_sub(&o.d)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    pub fn has_unit_det(&self) -> bool {
        self.det().is_one()
    }

    pub fn require_sl2(&self) -> Result<(), Gl2Error> {
        let det = self.det();
        if det.is_one() {
            Ok(())
        } else {
            Err(Gl2Error::DetNotOne(det.to_string()))
        }
    }

    /// Inverse of a determinant-one matrix: `[[d, -b], [-c, a]]`.
    pub fn inv_sl2(&self) -> Result<Mat2, Gl2Error> {
        self.require_sl2()?;
        Ok(self.adjugate())
    }

    /// `[[d, -b], [-c, a]]`, the inverse when the determinant is one.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Lower-left entry vanishes.
    pub fn is_upper_triangular(&self) -> bool {
        self.c.is_zero()
    }

    /// All entries have degree ≤ 0.
    pub fn is_constant(&self) -> bool {
        self.entries().iter().all(|e| e.is_constant())
    }

    /// Trace exactly 2, cross-checked against `(m - I)^2 = 0`.
    ///
    /// Panics if the two criteria disagree, which cannot happen for a
    /// determinant-one matrix over an integral domain.
    pub fn is_unipotent(&self) -> Result<bool, Gl2Error> {
        self.require_sl2()?;
        let two = Poly::constant_i64(self.ring(), 2);
        let by_trace = self.trace() == two;
        let n = self.sub(&Mat2::identity(self.ring()))?;
        let by_square = (&n * &n).is_zero();
        assert_eq!(by_trace, by_square, "unipotence criteria disagree for {self}");
        Ok(by_trace)
    }

    /// Trace ±2: unipotent up to the central sign.
    pub fn is_plus_minus_unipotent(&self) -> Result<bool, Gl2Error> {
        self.require_sl2()?;
        let two = Poly::constant_i64(self.ring(), 2);
        let tr = self.trace();
        Ok(tr == two || tr == -&two)
    }

    /// Entrywise reduction of an integer matrix modulo the prime `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Mat2, Gl2Error> {
        Ok(Mat2 {
            a: self.a.reduce_mod_p(p)?,
            b: self.b.reduce_mod_p(p)?,
            c: self.c.reduce_mod_p(p)?,
            d: self.d.reduce_mod_p(p)?,
        })
    }

    /// Parse `[[p11, p12], [p21, p22]]` with entries in the polynomial grammar.
    pub fn parse(text: &str, ring: CoeffRing) -> Result<Mat2, Gl2Error> {
        let err = |pos: usize, msg: &str| {
            Gl2Error::Parse(ParseError {
                pos,
                message: msg.to_string(),
            })
        };
        let trimmed = text.trim();
        let offset = text.len() - text.trim_start().len();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err(offset, "matrix must be written [[a, b], [c, d]]"))?;
        let mut entries = Vec::with_capacity(4);
        let mut pos = offset + 1;
        let mut rest = inner;
        for row in 0..2 {
            let lead = rest.len() - rest.trim_start().len();
            rest = rest.trim_start();
            pos += lead;
            let body = rest.strip_prefix('[').ok_or_else(|| err(pos, "expected '['"))?;
            let close = body.find(']').ok_or_else(|| err(pos, "unclosed row"))?;
            let cells: Vec<&str> = body[..close].split(',').collect();
            if cells.len() != 2 {
                return Err(err(pos, "each row needs exactly two entries"));
            }
            let mut cell_pos = pos + 1;
            for cell in cells {
                let p = Poly::parse(cell, ring).map_err(|e| match e {
                    RingError::Parse(pe) => Gl2Error::Parse(ParseError {
                        pos: cell_pos + pe.pos,
                        message: pe.message,
                    }),
                    other => other.into(),
                })?;
                entries.push(p);
                cell_pos += cell.len() + 1;
            }
            pos += close + 2;
            rest = &body[close + 1..];
            if row == 0 {
                let lead = rest.len() - rest.trim_start().len();
                rest = rest.trim_start();
                pos += lead;
                rest = rest
                    .strip_prefix(',')
                    .ok_or_else(|| err(pos, "expected ',' between rows"))?;
                pos += 1;
            }
        }
        if !rest.trim().is_empty() {
            return Err(err(pos, "trailing input after matrix"));
        }
        let mut it = entries.into_iter();
        let (a, b, c, d) = (
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        );
        Mat2::new(a, b, c, d)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.checked_mul(rhs).expect("matrix ring mismatch")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2[{}]{}", self.ring(), self)
    }
}

/// Elementary generators of `SL_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `[[1, f], [0, 1]]`
    E12(Poly),
    /// `[[1, 0], [f, 1]]`
    E21(Poly),
    /// `[[u, 0], [0, u^-1]]` for a unit `u`
    Diag(Coeff),
    /// `[[0, -1], [1, 0]]`
    W,
}

impl Generator {
    pub fn matrix(&self, ring: CoeffRing) -> Result<Mat2, Gl2Error> {
        let zero = Poly::zero(ring);
        let one = Poly::one(ring);
        match self {
            Generator::E12(f) => Mat2::new(one.clone(), f.clone(), zero, one),
            Generator::E21(f) => Mat2::new(one.clone(), zero, f.clone(), one),
            Generator::Diag(u) => {
                ring.check_same(&u.ring())?;
                let inv = u.inverse().ok_or_else(|| Gl2Error::NotAUnit(u.to_string()))?;
                Mat2::new(Poly::constant(u), zero.clone(), zero, Poly::constant(&inv))
            }
            Generator::W => Ok(Mat2::from_i64(ring, [[0, -1], [1, 0]])),
        }
    }

    pub fn inverse(&self) -> Generator {
        match self {
            Generator::E12(f) => Generator::E12(-f),
            Generator::E21(f) => Generator::E21(-f),
            Generator::Diag(u) => Generator::Diag(u.inverse().expect("Diag holds a unit")),
            // W^-1 = -W has no single-generator form; callers expand it
            Generator::W => panic!("W^-1 is not a single generator; use D(-1)·W"),
        }
    }

    /// Parse the shorthand `E12(<poly>)`, `E21(<poly>)`, `D(<int>)` or `W`.
    pub fn parse(text: &str, ring: CoeffRing) -> Result<Generator, Gl2Error> {
        let s = text.trim();
        let arg = |prefix: &str| -> Option<&str> {
            s.strip_prefix(prefix)
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        if s == "W" {
            Ok(Generator::W)
        } else if let Some(f) = arg("E12") {
            Ok(Generator::E12(Poly::parse(f, ring)?))
        } else if let Some(f) = arg("E21") {
            Ok(Generator::E21(Poly::parse(f, ring)?))
        } else if let Some(u) = arg("D") {
            let p = Poly::parse(u, ring)?;
            let c = p.as_constant().ok_or_else(|| Gl2Error::NotAUnit(p.to_string()))?;
            if !c.is_unit() {
                return Err(Gl2Error::NotAUnit(c.to_string()));
            }
            Ok(Generator::Diag(c))
        } else {
            Err(Gl2Error::Parse(ParseError {
                pos: 0,
                message: format!("unknown generator `{s}`; expected E12(f), E21(f), D(u) or W"),
            }))
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E12(p) => write!(f, "E12({p})"),
            Generator::E21(p) => write!(f, "E21({p})"),
            Generator::Diag(u) => write!(f, "D({u})"),
            Generator::W => write!(f, "W"),
        }
    }
}

/// Product of generator matrices, left to right.
pub fn evaluate_generators(word: &[Generator], ring: CoeffRing) -> Result<Mat2, Gl2Error> {
    word.iter()
        .try_fold(Mat2::identity(ring), |acc, g| acc.checked_mul(&g.matrix(ring)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Z: CoeffRing = CoeffRing::Integers;

    fn zt(s: &str) -> Poly {
        Poly::parse(s, Z).unwrap()
    }

    fn m(s: &str) -> Mat2 {
        Mat2::parse(s, Z).unwrap()
    }

    #[test]
    fn products() {
        let e12 = Generator::E12(Poly::one(Z)).matrix(Z).unwrap();
        let e21 = Generator::E21(Poly::one(Z)).matrix(Z).unwrap();
        assert_eq!(&e12 * &e21, Mat2::from_i64(Z, [[2, 1], [1, 1]]));
        let w = Generator::W.matrix(Z).unwrap();
        assert_eq!(&w * &w, Mat2::from_i64(Z, [[-1, 0], [0, -1]]));
        let x = m("[[1 + t, t^2], [3, 2 - t]]");
        assert_eq!(&Mat2::identity(Z) * &x, x);
    }

    #[test]
    fn sl2_inverse() {
        let f = zt("3 - t^2");
        let e = Generator::E12(f.clone()).matrix(Z).unwrap();
        assert_eq!(e.inv_sl2().unwrap(), Generator::E12(-&f).matrix(Z).unwrap());
        let w = Generator::W.matrix(Z).unwrap();
        assert_eq!(w.inv_sl2().unwrap(), Mat2::from_i64(Z, [[0, 1], [-1, 0]]));
        assert!(matches!(m("[[2, 0], [0, 1]]").inv_sl2(), Err(Gl2Error::DetNotOne(_))));
    }

    #[test]
    fn determinants() {
        assert!(Mat2::identity(Z).det().is_one());
        assert_eq!(m("[[0, -t], [-2, 2*t]]").det(), zt("-2*t"));
    }

    #[test]
    fn unipotence() {
        assert!(m("[[1, t^3], [0, 1]]").is_unipotent().unwrap());
        assert!(!m("[[-1, 0], [0, -1]]").is_unipotent().unwrap());
        assert!(m("[[-1, 0], [0, -1]]").is_plus_minus_unipotent().unwrap());
        // g_{2,1}: trace 2 + 2t
        assert!(!m("[[1, -t], [-2, 1 + 2*t]]").is_unipotent().unwrap());
        assert!(m("[[0, -t], [-2, 2*t]]").is_unipotent().is_err());
    }

    #[test]
    fn reduction() {
        let h = m("[[1 + 2*t, t^3], [8, 1 - 2*t + 4*t^2]]");
        let f2 = CoeffRing::Mod(2);
        assert_eq!(
            h.reduce_mod_p(2).unwrap(),
            Mat2::parse("[[1, t^3], [0, 1]]", f2).unwrap()
        );
        assert_eq!(
            Mat2::identity(Z).reduce_mod_p(7).unwrap(),
            Mat2::identity(CoeffRing::Mod(7))
        );
        assert!(h.reduce_mod_p(6).is_err());
    }

    #[test]
    fn parse_and_display() {
        let x = m(" [[1, 0] , [ t , 1]] ");
        assert_eq!(x.c(), &Poly::t(Z));
        assert_eq!(Mat2::parse(&x.to_string(), Z).unwrap(), x);
        let e = Mat2::parse("[[1, 0], [t^-1, 1]]", Z).unwrap_err();
        assert!(matches!(e, Gl2Error::Parse(ParseError { ref message, .. }) if message == "negative exponent"));
        assert!(Mat2::parse("[[1, 0, 0], [0, 1]]", Z).is_err());
        assert!(Mat2::parse("[[1, 0]]", Z).is_err());
    }

    #[test]
    fn generator_shorthand() {
        assert_eq!(
            Generator::parse("E12(t^2 + 1)", Z).unwrap(),
            Generator::E12(zt("1 + t^2"))
        );
        assert_eq!(Generator::parse("W", Z).unwrap(), Generator::W);
        assert_eq!(Generator::parse("D(-1)", Z).unwrap(), Generator::Diag(Coeff::int(-1)));
        assert!(matches!(Generator::parse("D(2)", Z), Err(Gl2Error::NotAUnit(_))));
        assert!(Generator::parse("D(2)", CoeffRing::Mod(5)).is_ok());
        assert!(Generator::parse("E13(t)", Z).is_err());
        assert!(Generator::Diag(Coeff::int(2)).matrix(Z).is_err());
    }

    fn generator(ring: CoeffRing) -> impl Strategy<Value = Generator> {
        let poly = proptest::collection::vec(-4i64..5, 0..4).prop_map(move |c| Poly::from_i64s(ring, &c));
        prop_oneof![
            poly.clone().prop_map(Generator::E12),
            poly.prop_map(Generator::E21),
            Just(Generator::W),
            Just(Generator::Diag(Coeff::one(ring).neg())),
        ]
    }

    fn sl2_element(ring: CoeffRing) -> impl Strategy<Value = Mat2> {
        proptest::collection::vec(generator(ring), 0..6).prop_map(move |w| evaluate_generators(&w, ring).unwrap())
    }

    fn any_matrix() -> impl Strategy<Value = Mat2> {
        proptest::collection::vec(proptest::collection::vec(-5i64..5, 0..3), 4).prop_map(|v| {
            let e: Vec<Poly> = v.iter().map(|c| Poly::from_i64s(Z, c)).collect();
            Mat2::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn det_is_multiplicative(x in any_matrix(), y in any_matrix()) {
            prop_assert_eq!((&x * &y).det(), &x.det() * &y.det());
        }

        #[test]
        fn inverse_is_two_sided(x in sl2_element(Z)) {
            let inv = x.inv_sl2().unwrap();
            prop_assert!((&x * &inv).is_identity());
            prop_assert!((&inv * &x).is_identity());
        }

        #[test]
        fn reduction_is_multiplicative(p in prop_oneof![Just(2u64), Just(3), Just(5)],
                                       x in any_matrix(), y in any_matrix()) {
            let lhs = (&x * &y).reduce_mod_p(p).unwrap();
            let rhs = &x.reduce_mod_p(p).unwrap() * &y.reduce_mod_p(p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn unipotence_criteria_agree(x in sl2_element(Z), y in sl2_element(CoeffRing::Mod(3))) {
            // is_unipotent asserts internally that both criteria match
            x.is_unipotent().unwrap();
            y.is_unipotent().unwrap();
        }

        #[test]
        fn borel_closed_under_products(f in proptest::collection::vec(-5i64..5, 0..4),
                                       g in proptest::collection::vec(-5i64..5, 0..4),
                                       s in prop_oneof![Just(1i64), Just(-1)]) {
            let x = Mat2::new(Poly::constant_i64(Z, s), Poly::from_i64s(Z, &f), Poly::zero(Z), Poly::constant_i64(Z, s)).unwrap();
            let y = Generator::E12(Poly::from_i64s(Z, &g)).matrix(Z).unwrap();
            prop_assert!((&x * &y).is_upper_triangular());
        }
    }
}
