//! JSON form of a polynomial: a list of `{"coeff": "<decimal>", "exps":
//! [ex, ep, eq, ea, eb, et]}` objects in canonical term order.

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactnum::Integer;

use super::poly::{Monomial, Polynomial, NVARS};

impl Polynomial {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| json!({ "coeff": c.to_string(), "exps": m.0.to_vec() }))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Polynomial, Error> {
        let bad = |msg: &str| Error::InvalidJson {
            kind: "polynomial",
            msg: msg.to_string(),
        };
        let items = value.as_array().ok_or_else(|| bad("expected array"))?;
        let mut poly = Polynomial::zero();
        for item in items {
            let coeff: Integer = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coeff"))?
                .parse()
                .map_err(|_| bad("coeff is not an integer"))?;
            let exps = item
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exps"))?;
            if exps.len() != NVARS {
                return Err(bad("exps must have 6 entries"));
            }
            let mut e = [0u32; NVARS];
            for (i, x) in exps.iter().enumerate() {
                e[i] = x
                    .as_u64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| bad("exponent out of range"))?;
            }
            poly.add_term(Monomial(e), coeff);
        }
        Ok(poly)
    }
}
