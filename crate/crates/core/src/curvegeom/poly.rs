//! Dense univariate polynomials over a number field.

use std::fmt;

use super::field::{format_univariate, Fe, Field, Q};
use crate::error::{Error, Result};

/// Coefficients low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl UPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_rationals(field: &Field, coeffs: &[Q]) -> UPoly {
        UPoly::new(
            field,
            coeffs
                .iter()
                .map(|c| Fe::rational(field, c.clone()))
                .collect(),
        )
    }

    /// From `(numerator, denominator)` pairs, low degree first.
    pub fn from_fracs(field: &Field, coeffs: &[(i64, i64)]) -> UPoly {
        UPoly::new(
            field,
            coeffs.iter().map(|&(n, d)| Fe::frac(field, n, d)).collect(),
        )
    }

    pub fn zero(field: &Field) -> UPoly {
        UPoly::new(field, Vec::new())
    }

    pub fn constant(c: Fe) -> UPoly {
        let field = c.field().clone();
        UPoly::new(&field, vec![c])
    }

    pub fn one(field: &Field) -> UPoly {
        UPoly::constant(Fe::one(field))
    }

    pub fn x(field: &Field) -> UPoly {
        UPoly::new(field, vec![Fe::zero(field), Fe::one(field)])
    }

    /// `x - x0`.
    pub fn linear_root(x0: &Fe) -> UPoly {
        let field = x0.field().clone();
        UPoly::new(&field, vec![-x0, Fe::one(&field)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Fe::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Fe> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new(
            &self.field,
            (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new(
            &self.field,
            (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.field);
        }
        let mut out = vec![Fe::zero(&self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &Fe) -> UPoly {
        UPoly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::one(&self.field);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UPoly::zero(&self.field), |acc, c| {
                acc.mul(inner).add(&UPoly::constant(c.clone()))
            })
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Fe::int(&self.field, k as i64))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::Domain("polynomial division by zero".into()));
        };
        let lc_inv = d.lc().expect("nonzero").inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UPoly::zero(&self.field), self.clone()));
        }
        let mut quo = vec![Fe::zero(&self.field); r.len() - dd];
        for k in (0..r.len() - dd).rev() {
            let c = &r[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * b);
            }
            quo[k] = c;
        }
        Ok((UPoly::new(&self.field, quo), UPoly::new(&self.field, r)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Domain("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Result<UPoly> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.inv()?)),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> Result<UPoly> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Synthetic division by `x - x0`: quotient and remainder `self(x0)`.
    pub fn div_linear(&self, x0: &Fe) -> (UPoly, Fe) {
        let n = self.coeffs.len();
        if n == 0 {
            return (self.clone(), Fe::zero(&self.field));
        }
        let mut quo = vec![Fe::zero(&self.field); n - 1];
        let mut acc = Fe::zero(&self.field);
        for k in (0..n).rev() {
            acc = &(&acc * x0) + &self.coeffs[k];
            if k > 0 {
                quo[k - 1] = acc.clone();
            }
        }
        (UPoly::new(&self.field, quo), acc)
    }

    /// Squarefree decomposition `self = lc · Π Pₘ^m` (Yun), as `(m, Pₘ)`
    /// pairs with monic nonconstant `Pₘ`, increasing in `m`.
    pub fn squarefree(&self) -> Result<Vec<(usize, UPoly)>> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        let f = self.monic()?;
        let df = f.derivative();
        let mut a = f.gcd(&df)?;
        let mut b = f.exact_div(&a)?;
        let mut c = df.exact_div(&a)?;
        let mut d = c.sub(&b.derivative());
        let mut m = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((m, a.clone()));
            }
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = c.sub(&b.derivative());
            m += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_rational() {
            let qs: Vec<Q> = self
                .coeffs
                .iter()
                .map(|c| c.as_rational().expect("rational field"))
                .collect();
            return f.write_str(&format_univariate(&qs, "x"));
        }
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let inner: Vec<Q> = c.coeffs().to_vec();
                let c = format!("({})", format_univariate(&inner, "θ"));
                match k {
                    0 => c,
                    1 => format!("{c}*x"),
                    _ => format!("{c}*x^{k}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{q, NumberField};
    use super::*;

    fn qp(c: &[(i64, i64)]) -> UPoly {
        UPoly::from_fracs(&NumberField::rationals(), c)
    }

    #[test]
    fn divrem_and_gcd() {
        // (x-1)(x+2) and (x-1)^2
        let a = qp(&[(-2, 1), (1, 1), (1, 1)]);
        let b = qp(&[(1, 1), (-2, 1), (1, 1)]);
        assert_eq!(a.gcd(&b).unwrap(), qp(&[(-1, 1), (1, 1)]));
        let (quo, r) = a.divrem(&b).unwrap();
        assert_eq!(quo.add(&UPoly::zero(a.field())), qp(&[(1, 1)]));
        assert_eq!(r, qp(&[(-3, 1), (3, 1)]));
    }

    #[test]
    fn squarefree_profile() {
        let k = NumberField::rationals();
        let l1 = UPoly::linear_root(&Fe::rational(&k, q(1, 4)));
        let l2 = UPoly::linear_root(&Fe::rational(&k, q(9, 4)));
        let f = l1.pow(3).mul(&l2).scale(&Fe::int(&k, 7));
        let sf = f.squarefree().unwrap();
        assert_eq!(sf, vec![(1, l2), (3, l1)]);
    }

    #[test]
    fn synthetic_division() {
        let f = qp(&[(-1, 1), (0, 1), (1, 1)]);
        let (quo, r) = f.div_linear(&Fe::int(f.field(), 1));
        assert_eq!(quo, qp(&[(1, 1), (1, 1)]));
        assert!(r.is_zero());
    }

    #[test]
    fn compose_and_display() {
        let f = qp(&[(0, 1), (0, 1), (1, 1)]);
        let g = qp(&[(1, 1), (1, 1)]);
        assert_eq!(f.compose(&g).to_string(), "x^2+2*x+1");
        assert_eq!(UPoly::zero(f.field()).to_string(), "0");
    }
}
