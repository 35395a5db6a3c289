//! Polynomials in `x` and `y`, stored as polynomials in `y` whose
//! coefficients are polynomials in `x`.

use std::fmt;

use super::field::{Fe, Field, Q};
use super::poly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BPoly {
    field: Field,
    /// `ys[j]` is the coefficient of `y^j`.
    ys: Vec<UPoly>,
}

impl BPoly {
    pub fn new(field: &Field, mut ys: Vec<UPoly>) -> BPoly {
        while ys.last().is_some_and(|c| c.is_zero()) {
            ys.pop();
        }
        BPoly {
            field: field.clone(),
            ys,
        }
    }

    /// From terms `c·x^i·y^j` given as `(c, i, j)`.
    pub fn from_terms(field: &Field, terms: &[(Q, usize, usize)]) -> BPoly {
        let mut out = BPoly::zero(field);
        for (c, i, j) in terms {
            let mut xs = vec![Fe::zero(field); i + 1];
            xs[*i] = Fe::rational(field, c.clone());
            let mut ys = vec![UPoly::zero(field); j + 1];
            ys[*j] = UPoly::new(field, xs);
            out = out.add(&BPoly::new(field, ys));
        }
        out
    }

    pub fn zero(field: &Field) -> BPoly {
        BPoly::new(field, Vec::new())
    }

    pub fn from_x(p: &UPoly) -> BPoly {
        BPoly::new(p.field(), vec![p.clone()])
    }

    pub fn y(field: &Field) -> BPoly {
        BPoly::new(field, vec![UPoly::zero(field), UPoly::one(field)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn y_coeffs(&self) -> &[UPoly] {
        &self.ys
    }

    pub fn y_coeff(&self, j: usize) -> UPoly {
        self.ys
            .get(j)
            .cloned()
            .unwrap_or_else(|| UPoly::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.ys.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.ys.iter().filter_map(|c| c.degree()).max()
    }

    pub fn add(&self, o: &BPoly) -> BPoly {
        let n = self.ys.len().max(o.ys.len());
        BPoly::new(
            &self.field,
            (0..n).map(|j| self.y_coeff(j).add(&o.y_coeff(j))).collect(),
        )
    }

    pub fn sub(&self, o: &BPoly) -> BPoly {
        let n = self.ys.len().max(o.ys.len());
        BPoly::new(
            &self.field,
            (0..n).map(|j| self.y_coeff(j).sub(&o.y_coeff(j))).collect(),
        )
    }

    pub fn mul(&self, o: &BPoly) -> BPoly {
        if self.is_zero() || o.is_zero() {
            return BPoly::zero(&self.field);
        }
        let mut out = vec![UPoly::zero(&self.field); self.ys.len() + o.ys.len() - 1];
        for (i, a) in self.ys.iter().enumerate() {
            for (j, b) in o.ys.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &Fe) -> BPoly {
        BPoly::new(&self.field, self.ys.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, n: u32) -> BPoly {
        let mut acc = BPoly::from_x(&UPoly::one(&self.field));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative_y(&self) -> BPoly {
        BPoly::new(
            &self.field,
            self.ys
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&Fe::int(&self.field, j as i64)))
                .collect(),
        )
    }

    /// `f(x, s(x))`.
    pub fn substitute_y(&self, s: &UPoly) -> UPoly {
        self.ys
            .iter()
            .rev()
            .fold(UPoly::zero(&self.field), |acc, c| acc.mul(s).add(c))
    }

    /// `f(x, q(x, y))`.
    pub fn substitute_y_poly(&self, q: &BPoly) -> BPoly {
        self.ys
            .iter()
            .rev()
            .fold(BPoly::zero(&self.field), |acc, c| {
                acc.mul(q).add(&BPoly::from_x(c))
            })
    }

    /// `f(λx, μy)`.
    pub fn scale_vars(&self, lambda: &Fe, mu: &Fe) -> BPoly {
        let xs = UPoly::x(&self.field).scale(lambda);
        let mut mu_j = Fe::one(&self.field);
        let mut ys = Vec::with_capacity(self.ys.len());
        for c in &self.ys {
            ys.push(c.compose(&xs).scale(&mu_j));
            mu_j = &mu_j * mu;
        }
        BPoly::new(&self.field, ys)
    }

    /// Numerator of `f(px/qx, py/qy)` after multiplying through by
    /// `qx^dx · qy^dy`, where `dx`, `dy` are the partial degrees of `f`.
    /// It vanishes iff the rational point lies on the curve.
    pub fn substitute_rational(&self, px: &UPoly, qx: &UPoly, py: &UPoly, qy: &UPoly) -> UPoly {
        let dx = self.x_degree().unwrap_or(0);
        let dy = self.y_degree().unwrap_or(0);
        let mut total = UPoly::zero(&self.field);
        for (j, c) in self.ys.iter().enumerate() {
            let yfac = py.pow(j as u32).mul(&qy.pow((dy - j) as u32));
            for (i, a) in c.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let xfac = px.pow(i as u32).mul(&qx.pow((dx - i) as u32));
                total = total.add(&xfac.mul(&yfac).scale(a));
            }
        }
        total
    }

    /// True when only even powers of `y` occur.
    pub fn is_even_in_y(&self) -> bool {
        self.ys.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }
}

/// Determinant of a square matrix over `K[x]` by fraction-free (Bareiss)
/// elimination.
pub fn determinant(mut m: Vec<Vec<UPoly>>, field: &Field) -> Result<UPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(UPoly::one(field));
    }
    let mut sign = false;
    let mut prev = UPoly::one(field);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(UPoly::zero(field)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Resultant with respect to `y`, via the Sylvester matrix.
pub fn resultant_y(f: &BPoly, g: &BPoly) -> Result<UPoly> {
    let (Some(m), Some(n)) = (f.y_degree(), g.y_degree()) else {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    };
    let size = m + n;
    let field = f.field();
    let mut rows = Vec::with_capacity(size);
    for (src, deg, count) in [(f, m, n), (g, n, m)] {
        for r in 0..count {
            let mut row = vec![UPoly::zero(field); size];
            for k in 0..=deg {
                row[r + k] = src.y_coeff(deg - k);
            }
            rows.push(row);
        }
    }
    determinant(rows, field)
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ys.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .ys
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("({c})"),
                1 => format!("({c})*y"),
                _ => format!("({c})*y^{j}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{qi, NumberField};
    use super::*;

    #[test]
    fn resultant_of_linear_forms() {
        // Res_y(y - x, y + x) = -2x up to the Sylvester sign convention
        let k = NumberField::rationals();
        let f = BPoly::from_terms(&k, &[(qi(1), 0, 1), (qi(-1), 1, 0)]);
        let g = BPoly::from_terms(&k, &[(qi(1), 0, 1), (qi(1), 1, 0)]);
        let r = resultant_y(&f, &g).unwrap();
        assert_eq!(r.to_string(), "2*x");
    }

    #[test]
    fn determinant_needs_pivoting() {
        let k = NumberField::rationals();
        let c = |n: i64| UPoly::constant(Fe::int(&k, n));
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(determinant(m, &k).unwrap(), c(-1));
    }

    #[test]
    fn scale_and_parity() {
        let k = NumberField::rationals();
        let f = BPoly::from_terms(&k, &[(qi(1), 0, 2), (qi(-1), 1, 0)]);
        assert!(f.is_even_in_y());
        let g = f.scale_vars(&Fe::int(&k, 9), &Fe::int(&k, -3));
        assert_eq!(g, f.scale(&Fe::int(&k, 9)));
    }
}
