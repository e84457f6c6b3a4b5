//! Factorization of `SL2(Z)` and `SL2(F_p[t])` matrices into elementary generators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::gl2::{evaluate_generators, Generator, Gl2Error, Mat2};
use crate::ring::{Coeff, CoeffRing, Poly};

/// Integer entries of a constant matrix.
fn int_entries(m: &Mat2) -> Option<[BigInt; 4]> {
    if m.ring() != CoeffRing::Integers || !m.is_constant() {
        return None;
    }
    let e = m.entries().map(|p| p.constant_term().to_bigint());
    Some(e)
}

/// Factor a determinant-one integer matrix over `{E12(n), E21(n), W}`.
///
/// Euclidean algorithm on the first column: while `c ≠ 0`, reduce `a` by a
/// multiple of `c` when `|a| ≥ |c|`, otherwise swap rows with `W^-1`. The
/// remaining upper triangular `±E12(b)` is emitted as `E12(b)` or
/// `W·W·E12(-b)`.
pub fn sl2z_factor(m: &Mat2) -> Result<Vec<Generator>, Gl2Error> {
    m.require_sl2()?;
    let [mut a, mut b, mut c, mut d] = int_entries(m).ok_or_else(|| Gl2Error::NotConstant(m.to_string()))?;
    let z = CoeffRing::Integers;
    let mut word = Vec::new();
    while !c.is_zero() {
        if a.abs() >= c.abs() {
            let q = &a / &c;
            a -= &q * &c;
            b -= &q * &d;
            word.push(Generator::E12(Poly::constant(&Coeff::Int(q))));
        } else {
            // W^-1 · [[a, b], [c, d]] = [[c, d], [-a, -b]]
            (a, b, c, d) = (c, d, -a, -b);
            word.push(Generator::W);
        }
    }
    if a.is_negative() {
        word.push(Generator::W);
        word.push(Generator::W);
        b = -b;
    }
    if !b.is_zero() {
        word.push(Generator::E12(Poly::constant(&Coeff::Int(b))));
    }
    debug_assert_eq!(evaluate_generators(&word, z).as_ref(), Ok(m));
    Ok(word)
}

/// Factor a determinant-one matrix over `F_p[t]` as elementary matrices
/// times a diagonal `D(u)`.
///
/// Polynomial Euclidean algorithm on the first column; the gcd is a unit
/// because the determinant is one. The resulting upper triangular matrix
/// `[[u, b], [0, u^-1]]` is emitted as `D(u)·E12(u^-1 b)`.
pub fn sl2fpt_elementary_factor(m: &Mat2) -> Result<Vec<Generator>, Gl2Error> {
    let ring = m.ring();
    if !ring.is_field() {
        return Err(crate::ring::RingError::NotAField(ring).into());
    }
    m.require_sl2()?;
    let (mut a, mut b, mut c, mut d) = (m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone());
    let mut word = Vec::new();
    while !c.is_zero() {
        if a.is_zero() {
            // c is a unit: row1 += c^-1·row2 gives a = 1, then clear c
            let c_inv = c.constant_term().inverse().expect("c is a unit");
            let q = Poly::constant(&c_inv);
            a = &a + &(&q * &c);
            b = &b + &(&q * &d);
            word.push(Generator::E12(-&q));
            let c0 = c.clone();
            c = &c - &(&c0 * &a);
            d = &d - &(&c0 * &b);
            word.push(Generator::E21(c0));
            continue;
        }
        if a.degree() >= c.degree() {
            let (q, r) = a.divmod(&c)?;
            b = &b - &(&q * &d);
            a = r;
            word.push(Generator::E12(q));
        } else {
            let (q, r) = c.divmod(&a)?;
            d = &d - &(&q * &b);
            c = r;
            word.push(Generator::E21(q));
        }
    }
    let u = a.constant_term();
    if !a.is_one() {
        word.push(Generator::Diag(u.clone()));
    }
    let tail = b.scale(&u.inverse().expect("diagonal entry is a unit"))?;
    if !tail.is_zero() {
        word.push(Generator::E12(tail));
    }
    debug_assert_eq!(evaluate_generators(&word, ring).as_ref(), Ok(m));
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn sl2z_examples() {
        let m = Mat2::from_i64(Z, [[1, 5], [0, 1]]);
        assert_eq!(sl2z_factor(&m).unwrap(), vec![Generator::E12(Poly::constant_i64(Z, 5))]);
        let w = Mat2::from_i64(Z, [[0, -1], [1, 0]]);
        assert_eq!(sl2z_factor(&w).unwrap(), vec![Generator::W]);
        let m = Mat2::from_i64(Z, [[2, 1], [1, 1]]);
        let word = sl2z_factor(&m).unwrap();
        assert_eq!(evaluate_generators(&word, Z).unwrap(), m);
        assert!(sl2z_factor(&Mat2::from_i64(Z, [[2, 0], [0, 1]])).is_err());
        let minus = Mat2::from_i64(Z, [[-1, 4], [0, -1]]);
        assert_eq!(evaluate_generators(&sl2z_factor(&minus).unwrap(), Z).unwrap(), minus);
    }

    #[test]
    fn fpt_example() {
        let f3 = CoeffRing::Mod(3);
        let m = Mat2::parse("[[1 + t^2, t], [t, 1]]", f3).unwrap();
        let t = Poly::t(f3);
        assert_eq!(
            sl2fpt_elementary_factor(&m).unwrap(),
            vec![Generator::E12(t.clone()), Generator::E21(t)]
        );
        let e = Mat2::parse("[[1, 2 + t^4], [0, 1]]", f3).unwrap();
        assert_eq!(
            sl2fpt_elementary_factor(&e).unwrap(),
            vec![Generator::E12(Poly::parse("2 + t^4", f3).unwrap())]
        );
        assert!(sl2fpt_elementary_factor(&Mat2::parse("[[t, 0], [0, 1]]", f3).unwrap()).is_err());
        assert!(sl2fpt_elementary_factor(&Mat2::identity(Z)).is_err());
    }

    fn int_generator() -> impl Strategy<Value = Generator> {
        prop_oneof![
            (-20i64..20).prop_map(|n| Generator::E12(Poly::constant_i64(Z, n))),
            (-20i64..20).prop_map(|n| Generator::E21(Poly::constant_i64(Z, n))),
            Just(Generator::W),
        ]
    }

    fn fpt_generator(p: u64) -> impl Strategy<Value = Generator> {
        let ring = CoeffRing::Mod(p);
        let poly = proptest::collection::vec(0i64..p as i64, 0..7).prop_map(move |c| Poly::from_i64s(ring, &c));
        prop_oneof![
            poly.clone().prop_map(Generator::E12),
            poly.prop_map(Generator::E21),
            (1i64..p as i64).prop_map(move |u| Generator::Diag(Coeff::residue(&BigInt::from(u), p).unwrap())),
        ]
    }

    proptest! {
        #[test]
        fn sl2z_round_trip(word in proptest::collection::vec(int_generator(), 0..10)) {
            let m = evaluate_generators(&word, Z).unwrap();
            let f = sl2z_factor(&m).unwrap();
            prop_assert_eq!(evaluate_generators(&f, Z).unwrap(), m);
        }

        #[test]
        fn fpt_round_trip((p, word) in prop_oneof![Just(2u64), Just(3), Just(5)]
                              .prop_flat_map(|p| (Just(p), proptest::collection::vec(fpt_generator(p), 0..7)))) {
            let ring = CoeffRing::Mod(p);
            let m = evaluate_generators(&word, ring).unwrap();
            let f = sl2fpt_elementary_factor(&m).unwrap();
            prop_assert_eq!(evaluate_generators(&f, ring).unwrap(), m);
        }
    }
}
