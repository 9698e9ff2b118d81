//! Rationals travel as `"p/q"` strings so JSON consumers never round them.

use serde::Serializer;

use crate::numerics::Rational;

pub fn serialize<S: Serializer>(q: &Rational, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&q.to_string())
}

pub fn serialize_vec<S: Serializer>(qs: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(qs.iter().map(|q| q.to_string()))
}
