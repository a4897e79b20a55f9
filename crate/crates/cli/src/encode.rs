//! Exact JSON and text encodings of library values.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qsl2::modrep::{BasisLabel, Scalar};
use qsl2::qarith::{format_rational, LaurentPoly, Rational, RationalFunction};
use serde_json::{json, Map, Value};

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn integer(b: &BigInt) -> Value {
    b.to_i64()
        .map(Value::from)
        .unwrap_or_else(|| Value::String(b.to_string()))
}

/// Integer, or `"a/b"`.
pub fn rational(r: &Rational) -> Value {
    if r.is_integer() {
        integer(r.numer())
    } else {
        Value::String(format_rational(r))
    }
}

/// `[[exp, num, den], ...]` ascending by exponent.
pub fn laurent(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e, integer(c.numer()), integer(c.denom())]))
            .collect(),
    )
}

pub fn ratfunc(f: &RationalFunction) -> Value {
    json!({ "numerator": laurent(f.numerator()), "denominator": laurent(f.denominator()) })
}

pub fn scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Classical(r) => rational(r),
        Scalar::Quantum(p) => laurent(p),
    }
}

pub fn label_map<'a, I>(entries: I) -> Value
where
    I: IntoIterator<Item = (&'a BasisLabel, Value)>,
{
    Value::Object(
        entries
            .into_iter()
            .map(|(l, v)| (l.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

/// Text form for CSV cells and pretty output: `"a/b"` or `"v + v^-1"`.
pub fn scalar_text(s: &Scalar) -> String {
    s.to_string()
}
