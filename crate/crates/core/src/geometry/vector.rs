//! Exact rationals and dense rational vectors.

use std::fmt;
use std::ops::{Deref, DerefMut, Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small literals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses an integer (`-3`), a decimal (`0.25`, `-1.5e-2` is not accepted) or a
/// fraction (`3/4`) exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not an exact number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn format_decimal(value: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = value * Rational::from_integer(scale.clone());
    let magnitude = scaled.abs();
    let (q, r) = magnitude.numer().div_rem(magnitude.denom());
    let rounded = if r * BigInt::from(2) >= *magnitude.denom() { q + 1 } else { q };
    let negative = value.is_negative() && !rounded.is_zero();
    let digits = rounded.to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (head, tail) = padded.split_at(padded.len() - places);
        format!("{head}.{tail}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Serde adapter: rationals travel as canonical strings and are accepted as
/// JSON integers, decimal strings or `p/q` strings.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = serde_json::Value::deserialize(d)?;
        from_json(&raw).map_err(serde::de::Error::custom)
    }

    pub fn from_json(raw: &serde_json::Value) -> Result<Rational> {
        match raw {
            serde_json::Value::String(s) => parse_rational(s),
            serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
            other => Err(Error::Parse(format!(
                "numbers must be integers or strings (\"0.2\", \"1/5\"), got {other}"
            ))),
        }
    }
}

/// Dense vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// Unit vector `e_index`; as a point of the simplex this is the
    /// degenerate distribution on one state.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&v| int(v)).collect())
    }

    /// Builds a vector from text entries; panics on malformed literals, so
    /// only meant for constants and tests.
    pub fn parse(values: &[&str]) -> Self {
        Vector(values.iter().map(|v| parse_rational(v).expect("valid rational literal")).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    /// True for nonnegative vectors whose entries sum to exactly one.
    pub fn is_distribution(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|a| !a.is_negative()) && self.sum().is_one()
    }

    /// `Σ weights[k] * points[k]`.
    pub fn combination(weights: &[Rational], points: &[Vector]) -> Vector {
        assert_eq!(weights.len(), points.len());
        let dim = points.first().map_or(0, Vector::dim);
        let mut out = Vector::zeros(dim);
        for (w, p) in weights.iter().zip(points) {
            if w.is_zero() {
                continue;
            }
            for (o, x) in out.0.iter_mut().zip(&p.0) {
                *o += w * x;
            }
        }
        out
    }

    /// `t·a + (1−t)·b`.
    pub fn lerp(a: &Vector, b: &Vector, t: &Rational) -> Vector {
        let one_minus = Rational::one() - t;
        Vector(a.0.iter().zip(&b.0).map(|(x, y)| x * t + y * &one_minus).collect())
    }
}

impl Deref for Vector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl DerefMut for Vector {
    fn deref_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&format_rational(x))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter()
            .map(serde_rational::from_json)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
            .map_err(serde::de::Error::custom)
    }
}

/// Row-reduces `rows` in place (Gauss-Jordan) and returns the pivot column of
/// each nonzero row, in order. Rows that become zero are removed.
pub fn rref(rows: &mut Vec<Vec<Rational>>, columns: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut lead = 0;
    for &col in columns {
        if lead == rows.len() {
            break;
        }
        let Some(found) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(lead, found);
        let inv = rows[lead][col].recip();
        for x in rows[lead].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != lead && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let (pivot_row, other) = if r < lead {
                    let (a, b) = rows.split_at_mut(lead);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[lead], &mut b[0])
                };
                for (o, p) in other.iter_mut().zip(pivot_row) {
                    *o -= &factor * p;
                }
            }
        }
        pivots.push(col);
        lead += 1;
    }
    rows.truncate(lead);
    pivots
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vector]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
    let cols: Vec<usize> = (0..first.dim()).collect();
    rref(&mut rows, &cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_accepted_form() {
        assert_eq!(parse_rational("0.2").unwrap(), rat(1, 5));
        assert_eq!(parse_rational("-70").unwrap(), int(-70));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn decimal_rendering_rounds_half_away_from_zero() {
        assert_eq!(format_decimal(&rat(1, 3), 3), "0.333");
        assert_eq!(format_decimal(&rat(2, 3), 3), "0.667");
        assert_eq!(format_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&int(10), 2), "10.00");
        assert_eq!(format_decimal(&rat(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&int(-50), 0), "-50");
    }

    #[test]
    fn rank_of_dependent_rows() {
        let v = [Vector::from_ints(&[1, 2]), Vector::from_ints(&[2, 4])];
        assert_eq!(rank(&v), 1);
        let w = [Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
        assert_eq!(rank(&w), 2);
    }

    #[test]
    fn combination_and_lerp() {
        let a = Vector::parse(&["0.2", "0.8"]);
        let b = Vector::parse(&["0.8", "0.2"]);
        assert_eq!(Vector::lerp(&a, &b, &rat(1, 2)), Vector::parse(&["0.5", "0.5"]));
        assert_eq!(Vector::combination(&[rat(1, 2), rat(1, 2)], &[a, b]), Vector::parse(&["1/2", "1/2"]));
    }
}
