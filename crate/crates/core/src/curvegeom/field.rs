//! Simple number fields `Q(θ) = Q[x]/(m)` and their elements.
//!
//! The minimal polynomial is trusted to be irreducible. If it is not, an
//! inversion may hit a zero divisor, which is reported as a domain error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub const MAX_DEGREE: usize = 6;

/// `Q[x]/(minpoly)`, with `minpoly` monic and stored low degree first.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct NumberField {
    minpoly: Vec<Q>,
}

pub type Field = Arc<NumberField>;

impl NumberField {
    /// The rationals, presented as `Q[x]/(x)`.
    pub fn rationals() -> Field {
        Arc::new(NumberField {
            minpoly: vec![Q::zero(), Q::one()],
        })
    }

    pub fn new(minpoly: Vec<Q>) -> Result<Field> {
        let mut m = minpoly;
        trim(&mut m);
        let deg = m.len().saturating_sub(1);
        if deg == 0 || deg > MAX_DEGREE {
            return Err(Error::Domain(format!(
                "minimal polynomial degree must be in 1..={MAX_DEGREE}, got {deg}"
            )));
        }
        let lc = m[deg].clone();
        if !lc.is_one() {
            return Err(Error::Domain("minimal polynomial must be monic".into()));
        }
        if m.iter().any(|c| !c.is_integer()) {
            return Err(Error::Domain(
                "minimal polynomial must have integer coefficients".into(),
            ));
        }
        Ok(Arc::new(NumberField { minpoly: m }))
    }

    /// Parses `x^3+4`, `t^2 + t + 1` or a coefficient list `[4,0,0,1]`.
    pub fn parse(text: &str) -> Result<Field> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .map(|c| parse_rational(c.trim()))
                .collect::<Result<Vec<_>>>()?;
            return NumberField::new(coeffs);
        }
        NumberField::new(parse_univariate(text)?)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1 && self.minpoly[0].is_zero()
    }

    pub fn minpoly(&self) -> &[Q] {
        &self.minpoly
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_univariate(&self.minpoly, "x"))
    }
}

fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            let y = b.get(i).cloned().unwrap_or_else(Q::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lc = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![Q::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lc;
        for (j, bj) in b.iter().enumerate() {
            let v = &c * bj;
            r[k + j] -= v;
        }
        quo[k] = c;
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

/// An element of a number field, as a coefficient vector in `θ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fe {
    field: Field,
    coeffs: Vec<Q>,
}

impl Fe {
    fn reduced(field: &Field, mut c: Vec<Q>) -> Fe {
        trim(&mut c);
        if c.len() > field.degree() {
            c = poly_divrem(&c, &field.minpoly).1;
        }
        c.resize(field.degree(), Q::zero());
        Fe {
            field: field.clone(),
            coeffs: c,
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Q>) -> Fe {
        Fe::reduced(field, coeffs)
    }

    pub fn rational(field: &Field, x: Q) -> Fe {
        Fe::reduced(field, vec![x])
    }

    pub fn int(field: &Field, n: i64) -> Fe {
        Fe::rational(field, qi(n))
    }

    pub fn frac(field: &Field, n: i64, d: i64) -> Fe {
        Fe::rational(field, q(n, d))
    }

    pub fn zero(field: &Field) -> Fe {
        Fe::reduced(field, Vec::new())
    }

    pub fn one(field: &Field) -> Fe {
        Fe::int(field, 1)
    }

    /// The generator `θ` (for `Q` itself this is `0`).
    pub fn theta(field: &Field) -> Fe {
        Fe::reduced(field, vec![Q::zero(), Q::one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Same value in another field; only rationals can move between fields.
    pub fn lift(&self, field: &Field) -> Result<Fe> {
        if self.field == *field {
            return Ok(Fe {
                field: field.clone(),
                coeffs: self.coeffs.clone(),
            });
        }
        match self.as_rational() {
            Some(x) => Ok(Fe::rational(field, x)),
            None => Err(Error::Domain(format!(
                "element {self} does not lie in Q[x]/({field})"
            ))),
        }
    }

    fn check(&self, other: &Fe) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn inv(&self) -> Result<Fe> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero in number field".into()));
        }
        let m = &self.field.minpoly;
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let (mut r0, mut r1) = (m.clone(), a);
        let (mut s0, mut s1) = (Vec::<Q>::new(), vec![Q::one()]);
        while !r1.is_empty() {
            let (quo, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quo, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(Error::Domain(format!(
                "zero divisor: minimal polynomial {} is reducible",
                self.field
            )));
        }
        let c = r0[0].recip();
        Ok(Fe::reduced(
            &self.field,
            s0.into_iter().map(|x| x * &c).collect(),
        ))
    }

    pub fn div(&self, other: &Fe) -> Result<Fe> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Fe> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Fe::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Parses `p/q`, an integer, or `[c0,c1,…]/minpoly`.
    pub fn parse(text: &str) -> Result<Fe> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix('[') {
            let (inner, mp) = rest.split_once("]/").ok_or_else(|| {
                Error::Parse(format!("expected `[c0,c1,...]/minpoly`, got `{text}`"))
            })?;
            let field = NumberField::parse(mp)?;
            let coeffs = inner
                .split(',')
                .map(|c| parse_rational(c.trim()))
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() > field.degree() {
                return Err(Error::Parse(format!(
                    "`{text}` has more coefficients than the field degree {}",
                    field.degree()
                )));
            }
            return Ok(Fe::from_coeffs(&field, coeffs));
        }
        Ok(Fe::rational(
            &NumberField::rationals(),
            parse_rational(text)?,
        ))
    }
}

pub fn parse_rational(text: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational `{text}`"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Parses a univariate polynomial such as `x^3 - 2x + 1/2` (any single
/// letter or word as the variable).
pub fn parse_univariate(text: &str) -> Result<Vec<Q>> {
    let bad = |m: &str| Error::Parse(format!("bad polynomial `{text}`: {m}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out: Vec<Q> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-Q::one(), b),
            None => (Q::one(), term.strip_prefix('+').unwrap_or(term)),
        };
        let split = body.find(|c: char| c.is_ascii_alphabetic());
        let (coef, power) = match split {
            None => (parse_rational(body)?, 0usize),
            Some(k) => {
                let coef_txt = body[..k].trim_end_matches('*');
                let coef = if coef_txt.is_empty() {
                    Q::one()
                } else {
                    parse_rational(coef_txt)?
                };
                let var = &body[k..];
                let power = match var.split_once('^') {
                    None => 1,
                    Some((_, e)) => e.parse::<usize>().map_err(|_| bad("exponent"))?,
                };
                (coef, power)
            }
        };
        if out.len() <= power {
            out.resize(power + 1, Q::zero());
        }
        out[power] += sign * coef;
    }
    trim(&mut out);
    Ok(out)
}

fn format_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Formats coefficients (low degree first) as `x^3+4`.
pub fn format_univariate(coeffs: &[Q], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", format_rational(&a)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_rational() {
            return f.write_str(&format_rational(&self.coeffs[0]));
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]/{}", parts.join(","), self.field)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Fe {
    type Output = Fe;
    fn add(self, o: &Fe) -> Fe {
        self.check(o);
        Fe {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Fe {
    type Output = Fe;
    fn sub(self, o: &Fe) -> Fe {
        self.check(o);
        Fe {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Fe {
    type Output = Fe;
    fn mul(self, o: &Fe) -> Fe {
        self.check(o);
        Fe::reduced(&self.field, poly_mul(&self.coeffs, &o.coeffs))
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Fe {
            type Output = Fe;
            fn $m(self, o: Fe) -> Fe {
                (&self).$m(&o)
            }
        }
        impl $tr<&Fe> for Fe {
            type Output = Fe;
            fn $m(self, o: &Fe) -> Fe {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> Field {
        NumberField::parse("x^3+4").unwrap()
    }

    #[test]
    fn theta_cubed() {
        let k = cubic();
        let t = Fe::theta(&k);
        assert_eq!(t.pow(3).unwrap(), Fe::int(&k, -4));
    }

    #[test]
    fn inverse_of_theta() {
        let k = cubic();
        let t = Fe::theta(&k);
        let inv = t.inv().unwrap();
        assert!((&t * &inv).is_one());
        // θ⁻¹ = -θ²/4
        assert_eq!(inv, Fe::from_coeffs(&k, vec![qi(0), qi(0), q(-1, 4)]));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let e = Fe::parse("[1/2,0,-3]/x^3+4").unwrap();
        assert_eq!(e.to_string(), "[1/2,0,-3]/x^3+4");
        assert_eq!(Fe::parse(&e.to_string()).unwrap(), e);
        assert_eq!(Fe::parse("-5/10").unwrap().to_string(), "-1/2");
        assert!(Fe::parse("1/0").is_err());
        assert!(Fe::parse("[1,2,3,4]/x^3+4").is_err());
    }

    #[test]
    fn minpoly_validation() {
        assert!(NumberField::parse("2x^2+1").is_err());
        assert!(NumberField::parse("x^7+1").is_err());
        assert!(NumberField::parse("x^2+1/2").is_err());
        assert_eq!(
            NumberField::parse("[1,1,1]").unwrap().to_string(),
            "x^2+x+1"
        );
    }

    #[test]
    fn reducible_minpoly_detects_zero_divisor() {
        let k = NumberField::parse("x^2-1").unwrap();
        let e = Fe::from_coeffs(&k, vec![qi(1), qi(1)]);
        assert!(e.inv().is_err());
    }

    #[test]
    fn lifting() {
        let k = cubic();
        let half = Fe::parse("1/2").unwrap();
        assert_eq!(half.lift(&k).unwrap(), Fe::frac(&k, 1, 2));
        assert!(Fe::theta(&k).lift(&NumberField::rationals()).is_err());
    }
}
