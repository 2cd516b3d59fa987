//! Rationals on the wire: strings `"p/q"` or `"p"`, integers accepted on input.

use std::fmt;

use frobsep_core::exactlin::{rat, RatMatrix, Rational};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct QVisitor;

impl Visitor<'_> for QVisitor {
    type Value = Q;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational written \"p/q\" or an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
        Ok(Q(rat(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Q, E> {
        i64::try_from(v).map(|v| Q(rat(v))).map_err(|_| E::custom("integer out of range; write it as a string"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Q, E> {
        parse_rational(v).map(Q).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        d.deserialize_any(QVisitor)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let bad = || format!("`{s}` is not a rational (expected p or p/q)");
    let ok = !t.is_empty() && t.split('/').count() <= 2 && t.split('/').all(|p| {
        let p = p.strip_prefix('-').unwrap_or(p);
        !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit())
    });
    if !ok {
        return Err(bad());
    }
    if t.split('/').nth(1).is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return Err(format!("`{s}` has a zero denominator"));
    }
    t.parse::<Rational>().map_err(|_| bad())
}

pub fn to_q(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

pub fn from_q(v: &[Q]) -> Vec<Rational> {
    v.iter().map(|q| q.0.clone()).collect()
}

pub fn matrix_to_rows(m: &RatMatrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| to_q(m.row(i))).collect()
}

/// Rows must be non-empty and rectangular; `what` names the field in errors.
pub fn rows_to_matrix(rows: &[Vec<Q>], what: &str) -> Result<RatMatrix, String> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(format!("`{what}`: row {i} has {} entries, row 0 has {cols}", rows[i].len()));
    }
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| from_q(r)).collect();
    Ok(RatMatrix::from_rows(&rows))
}
