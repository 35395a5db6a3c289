//! Exact verification of trigonal curves, their special sections, and the
//! algebraic identities behind them.
//!
//! Discriminants with respect to `y` are normalized as
//! `(-1)^(n(n-1)/2) · Res_y(f, ∂f/∂y) / lc(f)`, so `y³ + c` has discriminant
//! `-27c²`.

pub mod bivariate;
pub mod families;
pub mod field;
pub mod poly;

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use bivariate::{resultant_y, BPoly};
pub use families::{
    cube_root_field, family_section, sample_params, verify_family, Family, FamilyReport, Params,
    FAMILIES,
};
pub use field::{Fe, Field, NumberField, Q};
pub use poly::UPoly;

use crate::error::{Error, Result};
use field::{q, qi};

/// The section `y = a x² + b x + c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectionCoeffs {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
}

impl SectionCoeffs {
    pub fn new(a: Fe, b: Fe, c: Fe) -> Self {
        SectionCoeffs { a, b, c }
    }

    pub fn rational(field: &Field, a: Q, b: Q, c: Q) -> Self {
        SectionCoeffs {
            a: Fe::rational(field, a),
            b: Fe::rational(field, b),
            c: Fe::rational(field, c),
        }
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn poly(&self) -> UPoly {
        UPoly::new(
            self.field(),
            vec![self.c.clone(), self.b.clone(), self.a.clone()],
        )
    }
}

impl fmt::Display for SectionCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `f₁ = -y³ + y² - x³(2y - x³)`.
pub fn f1(field: &Field) -> BPoly {
    BPoly::from_terms(
        field,
        &[(qi(-1), 0, 3), (qi(1), 0, 2), (qi(-2), 3, 1), (qi(1), 6, 0)],
    )
}

/// `l(x) = -x² + 3x/2 + 3/16`.
pub fn l_poly(field: &Field) -> UPoly {
    UPoly::from_fracs(field, &[(3, 16), (3, 2), (-1, 1)])
}

/// `y² - x`.
pub fn conic(field: &Field) -> BPoly {
    BPoly::from_terms(field, &[(qi(1), 0, 2), (qi(-1), 1, 0)])
}

/// `f₂ = (y² - x)(y - l(x))`.
pub fn f2(field: &Field) -> BPoly {
    let line = BPoly::y(field).sub(&BPoly::from_x(&l_poly(field)));
    conic(field).mul(&line)
}

/// The curve with the given id: `B1`, `B2`, `conic` or `line`.
pub fn curve(id: &str, field: &Field) -> Result<BPoly> {
    match id {
        "B1" => Ok(f1(field)),
        "B2" => Ok(f2(field)),
        "conic" => Ok(conic(field)),
        "line" => Ok(BPoly::y(field).sub(&BPoly::from_x(&l_poly(field)))),
        other => Err(Error::UnknownId {
            kind: "curve",
            id: other.to_string(),
            valid: "B1, B2, conic, line".into(),
        }),
    }
}

/// Discriminant of a cubic in `y` whose leading coefficient is a nonzero
/// constant.
pub fn discriminant_y(f: &BPoly) -> Result<UPoly> {
    if f.y_degree() != Some(3) {
        return Err(Error::Domain(format!(
            "discriminant_y expects y-degree 3, got {:?}",
            f.y_degree()
        )));
    }
    let lc = f.y_coeff(3);
    if lc.degree() != Some(0) {
        return Err(Error::Domain(
            "leading coefficient in y must be a nonzero constant".into(),
        ));
    }
    let res = resultant_y(f, &f.derivative_y())?;
    // n = 3: (-1)^(n(n-1)/2) = -1
    Ok(res.scale(&lc.coeff(0).inv()?).neg())
}

/// `f(x, s(x))`.
pub fn restrict_to_section(f: &BPoly, s: &SectionCoeffs) -> Result<UPoly> {
    let g = f.substitute_y(&s.poly());
    if g.is_zero() {
        return Err(Error::SectionIsComponent);
    }
    Ok(g)
}

/// Largest `m` with `(x - x0)^m | g`.
pub fn multiplicity_at(g: &UPoly, x0: &Fe) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::Precondition(
            "multiplicity of the zero polynomial".into(),
        ));
    }
    let mut m = 0;
    let mut cur = g.clone();
    loop {
        let (quo, r) = cur.div_linear(x0);
        if !r.is_zero() {
            return Ok(m);
        }
        m += 1;
        cur = quo;
    }
}

/// Multiplicity profile: `(multiplicity, degree of the squarefree factor)`.
pub fn multiplicity_profile(g: &UPoly) -> Result<Vec<(usize, usize)>> {
    Ok(g.squarefree()?
        .into_iter()
        .map(|(m, p)| (m, p.degree().unwrap_or(0)))
        .collect())
}

pub const IDENTITIES: [&str; 8] = [
    "f1-torus",
    "f2-torus",
    "f1-param",
    "b2-iso",
    "sextic-even",
    "f1-disc",
    "f2-disc",
    "l-factor",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub holds: bool,
    pub detail: String,
}

fn report(id: &str, holds: bool, detail: String) -> IdentityReport {
    IdentityReport {
        id: id.to_string(),
        holds,
        detail,
    }
}

/// Checks one of the named identities exactly. `seed` drives the random
/// sections of `sextic-even`.
pub fn verify_identity(id: &str, seed: u64) -> Result<IdentityReport> {
    let k = NumberField::rationals();
    let x = || UPoly::x(&k);
    let c = |n: i64, d: i64| Fe::frac(&k, n, d);
    Ok(match id {
        "f1-torus" => {
            // (-y)³ + (y - x³)²
            let y = BPoly::y(&k);
            let x3 = BPoly::from_x(&x().pow(3));
            let rhs = y.scale(&c(-1, 1)).pow(3).add(&y.sub(&x3).pow(2));
            report(id, rhs == f1(&k), "f1 = (-y)^3 + (y - x^3)^2".into())
        }
        "f2-torus" => {
            let t = |terms: &[(Q, usize, usize)]| BPoly::from_terms(&k, terms);
            let p = t(&[(qi(4), 0, 1), (qi(-4), 1, 0), (qi(-1), 0, 0)]);
            let qq = t(&[
                (qi(8), 1, 1),
                (qi(6), 0, 1),
                (qi(-12), 1, 0),
                (qi(-1), 0, 0),
            ]);
            let rhs = p.pow(3).add(&qq.pow(2));
            report(
                id,
                f2(&k).scale(&c(64, 1)) == rhs,
                "64 f2 = (4y-4x-1)^3 + (8xy+6y-12x-1)^2".into(),
            )
        }
        "f1-param" => {
            // x = t/(t³+1), y = 1/(t³+1)²
            let t = x();
            let den = UPoly::from_fracs(&k, &[(1, 1), (0, 1), (0, 1), (1, 1)]);
            let num = f1(&k).substitute_rational(&t, &den, &UPoly::one(&k), &den.pow(2));
            report(
                id,
                num.is_zero(),
                "f1(t/(t^3+1), 1/(t^3+1)^2) = 0 after clearing denominators".into(),
            )
        }
        "b2-iso" => {
            let s = SectionCoeffs::rational(&k, qi(27), q(-9, 2), q(-1, 16));
            let lhs = f2(&k).scale_vars(&c(9, 1), &c(-3, 1));
            let line = BPoly::y(&k).sub(&BPoly::from_x(&s.poly()));
            let rhs = conic(&k).mul(&line).scale(&c(-27, 1));
            report(
                id,
                lhs == rhs,
                "f2(9x, -3y) = -27 (y^2 - x)(y - s), s = (27, -9/2, -1/16)".into(),
            )
        }
        "sextic-even" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut all = true;
            let mut shown = Vec::new();
            for _ in 0..5 {
                let mut r = || Fe::frac(&k, rng.gen_range(-9..=9), rng.gen_range(1..=9));
                let s = SectionCoeffs::new(r(), r(), r());
                let q = BPoly::y(&k).pow(2).add(&BPoly::from_x(&s.poly()));
                for f in [f1(&k), f2(&k)] {
                    all &= f.substitute_y_poly(&q).is_even_in_y();
                }
                shown.push(s.to_string());
            }
            report(
                id,
                all,
                format!("f(x, y^2 + s(x)) even in y for s in {}", shown.join(", ")),
            )
        }
        "f1-disc" => {
            // -x⁹(27x³ - 4)
            let expected = x()
                .pow(9)
                .mul(&UPoly::from_fracs(&k, &[(-4, 1), (0, 1), (0, 1), (27, 1)]))
                .neg();
            let d = discriminant_y(&f1(&k))?;
            report(id, d == expected, format!("disc_y(f1) = {d}"))
        }
        "f2-disc" => {
            // 4x(l² - x)²
            let l = l_poly(&k);
            let expected = x().scale(&c(4, 1)).mul(&l.mul(&l).sub(&x()).pow(2));
            let d = discriminant_y(&f2(&k))?;
            report(id, d == expected, format!("disc_y(f2) = {d}"))
        }
        "l-factor" => {
            let l = l_poly(&k);
            let lhs = l.mul(&l).sub(&x());
            let r1 = UPoly::linear_root(&c(1, 4));
            let r2 = UPoly::linear_root(&c(9, 4));
            report(
                id,
                lhs == r1.pow(3).mul(&r2),
                "l(x)^2 - x = (x - 1/4)^3 (x - 9/4)".into(),
            )
        }
        other => {
            return Err(Error::UnknownId {
                kind: "identity",
                id: other.to_string(),
                valid: IDENTITIES.join(", "),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depressed_cubic_discriminant() {
        let k = NumberField::rationals();
        // y³ + x
        let f = BPoly::from_terms(&k, &[(qi(1), 0, 3), (qi(1), 1, 0)]);
        let d = discriminant_y(&f).unwrap();
        assert_eq!(d, UPoly::from_fracs(&k, &[(0, 1), (0, 1), (-27, 1)]));
    }

    #[test]
    fn discriminant_rejects_wrong_degree() {
        let k = NumberField::rationals();
        assert!(discriminant_y(&conic(&k)).is_err());
    }

    #[test]
    fn all_identities_hold() {
        for id in IDENTITIES {
            let r = verify_identity(id, 0).unwrap();
            assert!(r.holds, "{id}: {}", r.detail);
        }
        assert!(verify_identity("nope", 0).is_err());
    }

    #[test]
    fn horizontal_section() {
        let k = NumberField::rationals();
        let s = SectionCoeffs::rational(&k, qi(0), qi(0), qi(1));
        let g = restrict_to_section(&f1(&k), &s).unwrap();
        assert_eq!(g.to_string(), "x^6-2*x^3");
        assert_eq!(multiplicity_at(&g, &Fe::int(&k, 0)).unwrap(), 3);
        assert_eq!(multiplicity_at(&g, &Fe::int(&k, 5)).unwrap(), 0);
    }

    #[test]
    fn component_section_is_an_error() {
        let k = NumberField::rationals();
        let s = SectionCoeffs::rational(&k, qi(-1), q(3, 2), q(3, 16));
        assert!(matches!(
            restrict_to_section(&f2(&k), &s),
            Err(Error::SectionIsComponent)
        ));
    }
}
