//! Exact scalar literals.
//!
//! Accepted forms: JSON integers, `"p/q"`, coefficient tuples `"(c0, c1, …)"`
//! in the ζ-power basis, and sums like `"1/2 - 3*z + z^4"` with `z = ζ_N`.
//! Output always uses the canonical `Display` form of [`Scalar`].

use std::str::FromStr;

use qhoch_core::exactnum::{CyclotomicField, Rational, Scalar};
use serde_json::Value;

pub fn parse_str(field: &CyclotomicField, s: &str) -> Result<Scalar, String> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let coeffs = inner.split(',').map(|c| Rational::from_str(c).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() > field.degree() {
            return Err(format!("{t:?} has {} coefficients, the field has degree {}", coeffs.len(), field.degree()));
        }
        return Ok(field.from_coeffs(&coeffs));
    }
    if let Ok(r) = Rational::from_str(t) {
        return Ok(field.from_rational(r));
    }
    parse_polynomial(field, t)
}

fn parse_polynomial(field: &CyclotomicField, t: &str) -> Result<Scalar, String> {
    let bad = || format!("invalid scalar literal {t:?}");
    let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    // split into signed terms
    let mut terms = Vec::new();
    let mut start = 0;
    for (k, ch) in compact.char_indices() {
        if k > 0 && (ch == '+' || ch == '-') && !compact[..k].ends_with('^') {
            terms.push(&compact[start..k]);
            start = k;
        }
    }
    terms.push(&compact[start..]);
    let mut total = field.zero();
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-1, &term[1..]),
            Some(b'+') => (1, &term[1..]),
            _ => (1, term),
        };
        let (coeff, power) = match body.find('z') {
            None => (body, None),
            Some(p) => {
                let coeff = body[..p].strip_suffix('*').unwrap_or(&body[..p]);
                let exp = match &body[p + 1..] {
                    "" => 1,
                    rest => rest.strip_prefix('^').and_then(|e| e.parse::<i64>().ok()).ok_or_else(bad)?,
                };
                (coeff, Some(exp))
            }
        };
        let c = if coeff.is_empty() { Rational::one() } else { Rational::from_str(coeff).map_err(|_| bad())? };
        let c = if sign < 0 { c.neg() } else { c };
        let value = match power {
            None => field.from_rational(c),
            Some(e) => field.zeta_pow(e).scale_rational(&c),
        };
        total = total.add(&value);
    }
    Ok(total)
}

pub fn parse_value(field: &CyclotomicField, v: &Value) -> Result<Scalar, String> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| field.from_int(i)).ok_or_else(|| format!("non-integer number {n}; write fractions as \"p/q\"")),
        Value::String(s) => parse_str(field, s),
        other => Err(format!("expected a scalar, found {other}")),
    }
}

pub fn to_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}
