//! JSON and CSV encodings of polynomials, matrices, words, normal forms,
//! wedge classes and dimension tables.
//!
//! Polynomials encode as `{"coeffs": [c0, c1, ...], "mod": p}` (ascending,
//! `"mod"` omitted over `Z`); integers that fit in `i64` are JSON numbers,
//! larger ones are decimal strings. On input a polynomial may also be a bare
//! coefficient array, a number, or a string in the polynomial grammar.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::amalgam::{AmalgamError, AmalgamStructure, Factor, Letter, NormalForm};
use crate::gl2::{Generator, Gl2Error, Mat2};
use crate::homology::{GradedDimTable, HomologyError, WedgeClass, WedgeMonomial};
use crate::nagao::{letters_from_generators, NagaoError};
use crate::ring::{CoeffRing, Poly, RingError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("unexpected JSON shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] Gl2Error),
    #[error(transparent)]
    Amalgam(#[from] AmalgamError),
    #[error(transparent)]
    Nagao(#[from] NagaoError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

fn shape(msg: impl Into<String>) -> JsonError {
    JsonError::Shape(msg.into())
}

pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))
}

fn int_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(x) => json!(x),
        Err(_) => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| shape(format!("{n} is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| shape(format!("{s:?} is not an integer"))),
        other => Err(shape(format!("expected an integer, got {other}"))),
    }
}

fn ring_to_json(ring: CoeffRing) -> Option<Value> {
    ring.modulus().map(|p| json!(p))
}

fn check_mod(v: Option<&Value>, ring: CoeffRing) -> Result<(), JsonError> {
    let given = match v {
        None | Some(Value::Null) => None,
        Some(m) => Some(
            m.as_u64()
                .ok_or_else(|| shape(format!("\"mod\" must be a positive integer, got {m}")))?,
        ),
    };
    if given.is_some() && given != ring.modulus() {
        return Err(shape(format!(
            "\"mod\": {} does not match the requested ring {ring}",
            given.unwrap_or(0)
        )));
    }
    Ok(())
}

pub fn poly_to_json(f: &Poly) -> Value {
    let coeffs: Vec<Value> = f.to_bigints().iter().map(int_to_json).collect();
    let mut obj = Map::new();
    obj.insert("coeffs".into(), Value::Array(coeffs));
    if let Some(m) = ring_to_json(f.ring()) {
        obj.insert("mod".into(), m);
    }
    Value::Object(obj)
}

pub fn poly_from_json(v: &Value, ring: CoeffRing) -> Result<Poly, JsonError> {
    match v {
        Value::Number(_) => Ok(Poly::from_bigints(ring, vec![int_from_json(v)?])),
        Value::String(s) => Ok(Poly::parse(s, ring)?),
        Value::Array(cs) => {
            let coeffs = cs.iter().map(int_from_json).collect::<Result<Vec<_>, _>>()?;
            Ok(Poly::from_bigints(ring, coeffs))
        }
        Value::Object(obj) => {
            check_mod(obj.get("mod"), ring)?;
            let cs = obj
                .get("coeffs")
                .ok_or_else(|| shape("polynomial object needs \"coeffs\""))?;
            match cs {
                Value::Array(_) => poly_from_json(cs, ring),
                _ => Err(shape("\"coeffs\" must be an array")),
            }
        }
        other => Err(shape(format!("expected a polynomial, got {other}"))),
    }
}

/// `[[a, b], [c, d]]` with entries as polynomial strings.
pub fn mat_to_json(m: &Mat2) -> Value {
    let [a, b, c, d] = m.entries();
    json!([[a.to_string(), b.to_string()], [c.to_string(), d.to_string()]])
}

/// A 2×2 array of polynomials, or a string `"[[a, b], [c, d]]"`.
pub fn mat_from_json(v: &Value, ring: CoeffRing) -> Result<Mat2, JsonError> {
    if let Value::String(s) = v {
        return Ok(Mat2::parse(s, ring)?);
    }
    let rows = v
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| shape("a matrix is a 2×2 array"))?;
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let row = row
            .as_array()
            .filter(|r| r.len() == 2)
            .ok_or_else(|| shape("a matrix is a 2×2 array"))?;
        for e in row {
            entries.push(poly_from_json(e, ring)?);
        }
    }
    let [a, b, c, d]: [Poly; 4] = entries.try_into().expect("four entries");
    Ok(Mat2::new(a, b, c, d)?)
}

/// `{"structure", "ring", "head", "tail", "tags", "length"}`.
pub fn nf_to_json(nf: &NormalForm) -> Value {
    let mut obj = Map::new();
    obj.insert("structure".into(), json!(nf.key().kind));
    obj.insert("ring".into(), json!(nf.key().ring.to_string()));
    obj.insert("head".into(), mat_to_json(nf.head()));
    obj.insert(
        "tail".into(),
        Value::Array(nf.tail().iter().map(|l| mat_to_json(l.element())).collect()),
    );
    obj.insert("tags".into(), json!(nf.tags()));
    obj.insert("length".into(), json!(nf.len()));
    Value::Object(obj)
}

fn letter_from_json<S: AmalgamStructure + ?Sized>(s: &S, v: &Value, out: &mut Vec<Letter>) -> Result<(), JsonError> {
    match v {
        Value::String(g) => {
            let g = Generator::parse(g, s.ring())?;
            out.extend(letters_from_generators(s, &[g])?);
        }
        Value::Object(obj) => {
            let tag = obj
                .get("factor")
                .and_then(Value::as_u64)
                .and_then(Factor::from_tag)
                .ok_or_else(|| shape("a letter object needs \"factor\": 1 or 2"))?;
            let m = obj
                .get("matrix")
                .ok_or_else(|| shape("a letter object needs \"matrix\""))?;
            out.push(Letter::new(s, tag, mat_from_json(m, s.ring())?)?);
        }
        other => return Err(shape(format!("expected a generator or letter, got {other}"))),
    }
    Ok(())
}

/// A word in the amalgam: an array of generator shorthands (`"W"`,
/// `"E12(t^2)"`, `"D(2)"`) and `{"factor": 1|2, "matrix": ...}` letters, or
/// a normal-form object as produced by [`nf_to_json`].
pub fn word_from_json<S: AmalgamStructure + ?Sized>(s: &S, v: &Value) -> Result<Vec<Letter>, JsonError> {
    let mut out = Vec::new();
    match v {
        Value::Array(items) => {
            for item in items {
                letter_from_json(s, item, &mut out)?;
            }
        }
        Value::Object(obj) if obj.contains_key("tail") => {
            let ring = s.ring();
            if let Some(head) = obj.get("head") {
                // the head lies in the common subgroup, inside factor one
                out.push(Letter::new(s, Factor::One, mat_from_json(head, ring)?)?);
            }
            let tail = obj["tail"]
                .as_array()
                .ok_or_else(|| shape("\"tail\" must be an array"))?;
            let tags = obj
                .get("tags")
                .and_then(Value::as_array)
                .ok_or_else(|| shape("a normal form needs \"tags\""))?;
            if tags.len() != tail.len() {
                return Err(shape("\"tags\" and \"tail\" differ in length"));
            }
            for (m, tag) in tail.iter().zip(tags) {
                let f = tag
                    .as_u64()
                    .and_then(Factor::from_tag)
                    .ok_or_else(|| shape(format!("bad tag {tag}")))?;
                out.push(Letter::new(s, f, mat_from_json(m, ring)?)?);
            }
        }
        Value::String(_) | Value::Object(_) => letter_from_json(s, v, &mut out)?,
        other => return Err(shape(format!("expected a word, got {other}"))),
    }
    Ok(out)
}

pub fn wedge_to_json(x: &WedgeClass) -> Value {
    let (monos, coeffs): (Vec<Value>, Vec<Value>) =
        x.terms().map(|(m, c)| (json!(m.exponents()), int_to_json(c))).unzip();
    let mut obj = Map::new();
    obj.insert("monomials".into(), Value::Array(monos));
    obj.insert("coeffs".into(), Value::Array(coeffs));
    if let Some(m) = ring_to_json(x.ring()) {
        obj.insert("mod".into(), m);
    }
    Value::Object(obj)
}

/// Monomials may be given in any order; each is sorted with the sign of
/// the sorting permutation, and those with a repeated exponent vanish.
pub fn wedge_from_json(v: &Value) -> Result<WedgeClass, JsonError> {
    let obj = v.as_object().ok_or_else(|| shape("a wedge class is an object"))?;
    let ring = match obj.get("mod") {
        None | Some(Value::Null) => CoeffRing::Integers,
        Some(m) => CoeffRing::modulo(m.as_u64().ok_or_else(|| shape("\"mod\" must be a prime"))?)?,
    };
    let monos = obj
        .get("monomials")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("a wedge class needs \"monomials\""))?;
    let coeffs = match obj.get("coeffs") {
        None => vec![Value::from(1); monos.len()],
        Some(Value::Array(c)) => c.clone(),
        Some(_) => return Err(shape("\"coeffs\" must be an array")),
    };
    if coeffs.len() != monos.len() {
        return Err(shape("\"coeffs\" and \"monomials\" differ in length"));
    }
    let mut terms = Vec::with_capacity(monos.len());
    for (m, c) in monos.iter().zip(&coeffs) {
        let exps = m
            .as_array()
            .ok_or_else(|| shape("a monomial is an array of exponents"))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| shape(format!("bad exponent {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some((odd, mono)) = WedgeMonomial::from_unsorted(&exps)? {
            let c = int_from_json(c)?;
            terms.push((mono, if odd { -c } else { c }));
        }
    }
    Ok(WedgeClass::from_terms(ring, terms))
}

pub const TABLE_CSV_HEADER: &str = "group,p,d,i,dim,flags";

/// One row of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub group: String,
    pub p: u64,
    pub d: u64,
    pub i: u64,
    pub dim: u64,
    pub flags: String,
}

pub fn table_rows(t: &GradedDimTable) -> Vec<DimRow> {
    t.dims
        .iter()
        .enumerate()
        .map(|(i, dim)| DimRow {
            group: t.group.to_string(),
            p: t.p,
            d: t.d,
            i: i as u64,
            dim: dim.value,
            flags: dim.flags().to_string(),
        })
        .collect()
}

/// Header plus one line per row.
pub fn rows_to_csv(rows: &[DimRow]) -> String {
    let mut out = String::from(TABLE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{},{},{}\n", r.group, r.p, r.d, r.i, r.dim, r.flags));
    }
    out
}

/// The same rows as an array of objects.
pub fn rows_to_json(rows: &[DimRow]) -> Value {
    serde_json::to_value(rows).expect("rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{evaluate_word, normalize};
    use crate::homology::{h_table, GroupId};
    use crate::nagao::{E2Zt, NagaoFp};

    #[test]
    fn poly_round_trip_and_inputs() {
        let f3 = CoeffRing::Mod(3);
        let f = Poly::parse("2 + t^3", f3).unwrap();
        let v = poly_to_json(&f);
        assert_eq!(v, json!({"coeffs": [2, 0, 0, 1], "mod": 3}));
        assert_eq!(poly_from_json(&v, f3).unwrap(), f);
        assert_eq!(poly_from_json(&json!([2, 0, 0, 1]), f3).unwrap(), f);
        assert_eq!(poly_from_json(&json!("2 + t^3"), f3).unwrap(), f);
        assert_eq!(poly_from_json(&json!(5), f3).unwrap(), Poly::constant_i64(f3, 2));
        assert!(poly_from_json(&v, CoeffRing::Mod(5)).is_err());
        assert!(poly_from_json(&v, CoeffRing::Integers).is_err());
        let big = Poly::from_bigints(
            CoeffRing::Integers,
            vec!["123456789012345678901234567890".parse().unwrap()],
        );
        let v = poly_to_json(&big);
        assert_eq!(v, json!({"coeffs": ["123456789012345678901234567890"]}));
        assert_eq!(poly_from_json(&v, CoeffRing::Integers).unwrap(), big);
    }

    #[test]
    fn matrix_round_trip() {
        let f2 = CoeffRing::Mod(2);
        let m = Mat2::parse("[[1, 0], [t, 1]]", f2).unwrap();
        let v = mat_to_json(&m);
        assert_eq!(v, json!([["1", "0"], ["t", "1"]]));
        assert_eq!(mat_from_json(&v, f2).unwrap(), m);
        assert_eq!(mat_from_json(&json!("[[1, 0], [t, 1]]"), f2).unwrap(), m);
        assert_eq!(mat_from_json(&json!([[1, 0], [[0, 1], 1]]), f2).unwrap(), m);
        assert!(mat_from_json(&json!([[1, 0]]), f2).is_err());
    }

    #[test]
    fn words_and_normal_forms() {
        let ww = word_from_json(&E2Zt, &json!(["W", "W"])).unwrap();
        let nf = normalize(&E2Zt, &ww).unwrap();
        assert_eq!(nf.head(), &Mat2::from_i64(CoeffRing::Integers, [[-1, 0], [0, -1]]));
        assert!(nf.is_empty());

        let s = NagaoFp::new(2).unwrap();
        let word = word_from_json(
            &s,
            &json!(["E21(t)", {"factor": 2, "matrix": [["1", "t^2"], ["0", "1"]]}]),
        )
        .unwrap();
        assert_eq!(word.len(), 4);
        let nf = normalize(&s, &word).unwrap();
        let v = nf_to_json(&nf);
        assert_eq!(v["tags"], json!([1, 2, 1, 2]));
        let again = word_from_json(&s, &v).unwrap();
        assert_eq!(normalize(&s, &again).unwrap(), nf);
        assert_eq!(evaluate_word(s.ring(), &again), evaluate_word(s.ring(), &word));
        assert!(word_from_json(&s, &json!([{"factor": 2, "matrix": [["1", "0"], ["t", "1"]]}])).is_err());
        assert!(word_from_json(&s, &json!([{"factor": 3, "matrix": [["1", "0"], ["0", "1"]]}])).is_err());
    }

    #[test]
    fn wedge_round_trip() {
        let v = json!({"monomials": [[3, 1], [1, 4], [2, 2]], "coeffs": [1, 2, 5]});
        let x = wedge_from_json(&v).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(
            wedge_to_json(&x),
            json!({"monomials": [[1, 3], [1, 4]], "coeffs": [-1, 2]})
        );
        let y = wedge_from_json(&json!({"monomials": [[1]], "coeffs": [4], "mod": 3})).unwrap();
        assert_eq!(wedge_to_json(&y), json!({"monomials": [[1]], "coeffs": [1], "mod": 3}));
        assert!(wedge_from_json(&json!({"monomials": [[0]]})).is_err());
        assert!(wedge_from_json(&json!({"monomials": [[1]], "mod": 4})).is_err());
    }

    #[test]
    fn table_encodings() {
        let t = h_table(GroupId::E2zt, 3, 2, 4).unwrap();
        let rows = table_rows(&t);
        let csv = rows_to_csv(&rows);
        assert_eq!(
            csv,
            "group,p,d,i,dim,flags\ne2zt,3,4,0,1,\ne2zt,3,4,1,5,\ne2zt,3,4,2,11,\n"
        );
        let js = rows_to_json(&rows);
        assert_eq!(
            js[1],
            json!({"group": "e2zt", "p": 3, "d": 4, "i": 1, "dim": 5, "flags": ""})
        );
    }
}
