//! Serialization helpers: exact rationals are rendered as strings so that no
//! precision is lost in JSON output.

use serde::Serializer;

use crate::rational::{format_rational, Q};

/// Serializes a rational as `"n"` or `"n/d"`.
pub fn rational<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// Serializes a list of rationals as a list of strings.
pub fn rationals<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}
