use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

/// JSON number when the value fits in `i64`, decimal string otherwise.
pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn bigvec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(bigint_json).collect())
}
