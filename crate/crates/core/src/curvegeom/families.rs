//! Special-section families of `B̄₁` and `B̄₂`, each checked by building the
//! section from its coefficient formulas and measuring the intersection
//! multiplicities of the restricted curve equation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use super::field::{Fe, Field, NumberField};
use super::{f1, f2, multiplicity_at, multiplicity_profile, restrict_to_section, SectionCoeffs};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Tangent,
    Inflection,
    Quadruple,
    DoubleTangent,
    B2Inflection,
    B2Tangent,
    B2ConicTangent,
    B2Bitangent,
}

pub const FAMILIES: [Family; 8] = [
    Family::Tangent,
    Family::Inflection,
    Family::Quadruple,
    Family::DoubleTangent,
    Family::B2Inflection,
    Family::B2Tangent,
    Family::B2ConicTangent,
    Family::B2Bitangent,
];

pub type Params = BTreeMap<String, Fe>;

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::Tangent => "tangent",
            Family::Inflection => "inflection",
            Family::Quadruple => "quadruple",
            Family::DoubleTangent => "double-tangent",
            Family::B2Inflection => "b2-inflection",
            Family::B2Tangent => "b2-tangent",
            Family::B2ConicTangent => "b2-conic-tangent",
            Family::B2Bitangent => "b2-bitangent",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Tangent | Family::B2Tangent => &["t", "a"],
            Family::Inflection | Family::B2Inflection | Family::B2Bitangent => &["t"],
            Family::Quadruple => &["delta"],
            Family::DoubleTangent => &["t1", "t2"],
            Family::B2ConicTangent => &["a", "b"],
        }
    }

    pub fn curve_id(self) -> &'static str {
        match self {
            Family::Tangent | Family::Inflection | Family::Quadruple | Family::DoubleTangent => {
                "B1"
            }
            _ => "B2",
        }
    }

    /// Families sampled at random parameter points; the others are
    /// zero-dimensional and checked at their defining point.
    pub fn is_sampled(self) -> bool {
        !matches!(self, Family::Quadruple)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FAMILIES
            .iter()
            .copied()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownId {
                kind: "family",
                id: s.to_string(),
                valid: FAMILIES.map(|f| f.id()).join(", "),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub label: String,
    pub x: String,
    /// `>=m` or `=m`.
    pub expected: String,
    pub found: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub params: Vec<(String, String)>,
    pub section: String,
    pub restricted: String,
    pub degree: usize,
    /// Intersection lost at `x = ∞`, `6 - degree`.
    pub at_infinity: usize,
    pub points: Vec<PointCheck>,
    /// Squarefree profile `(multiplicity, factor degree)`.
    pub profile: Vec<(usize, usize)>,
    /// Extra algebraic conditions the family asserts, with outcomes.
    pub conditions: Vec<(String, bool)>,
    /// `Σ m·deg` over the profile equals the degree.
    pub bookkeeping: bool,
    pub pass: bool,
}

struct Expected {
    label: String,
    x: Fe,
    mult: usize,
    exact: bool,
}

fn xt(t: &Fe) -> Result<Fe> {
    let k = t.field();
    t.div(&(&t.pow(3)? + &Fe::one(k)))
}

fn excl(cond: bool, what: &str) -> Result<()> {
    if cond {
        Err(Error::Precondition(format!("excluded parameter: {what}")))
    } else {
        Ok(())
    }
}

/// Brings every parameter into a common field.
fn unify(params: &Params) -> Result<(Field, Params)> {
    let mut field: Option<Field> = None;
    for v in params.values() {
        if !v.field().is_rational() {
            match &field {
                None => field = Some(v.field().clone()),
                Some(f) if f == v.field() => {}
                Some(f) => {
                    return Err(Error::Domain(format!(
                        "parameters over different fields: {f} and {}",
                        v.field()
                    )))
                }
            }
        }
    }
    let field = field.unwrap_or_else(NumberField::rationals);
    let lifted = params
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.lift(&field)?)))
        .collect::<Result<_>>()?;
    Ok((field, lifted))
}

fn get<'a>(family: Family, params: &'a Params, name: &str) -> Result<&'a Fe> {
    params.get(name).ok_or_else(|| {
        Error::Precondition(format!(
            "family {family} needs parameters {}",
            family.param_names().join(", ")
        ))
    })
}

/// `b(t, a) = β₁(t)·a + β₀(t)` from the tangent family.
fn tangent_b_parts(t: &Fe) -> Result<(Fe, Fe)> {
    let k = t.field();
    let one = Fe::one(k);
    let t3 = t.pow(3)?;
    let u = &(&t3 * &Fe::int(k, 2)) - &one;
    let den = &u * &(&t3 + &one);
    let beta1 = (-&(&(t * &Fe::int(k, 2)) * &u)).div(&den)?;
    let beta0 = (&t.pow(2)? * &Fe::int(k, 6)).div(&den)?;
    Ok((beta1, beta0))
}

fn tangent_section(t: &Fe, a: &Fe) -> Result<SectionCoeffs> {
    let k = t.field();
    let one = Fe::one(k);
    let t3 = t.pow(3)?;
    let u = &(&t3 * &Fe::int(k, 2)) - &one;
    let v = &t3 + &one;
    let (beta1, beta0) = tangent_b_parts(t)?;
    let b = &(&beta1 * a) + &beta0;
    let cnum = &(&(&t.pow(2)? * &u) * a) - &(&(&t3 * &Fe::int(k, 4)) + &one);
    let c = cnum.div(&(&u * &v.pow(2)?))?;
    Ok(SectionCoeffs::new(a.clone(), b, c))
}

fn check_params(family: Family, params: &Params) -> Result<()> {
    let p = |n: &str| get(family, params, n);
    match family {
        Family::Tangent | Family::Inflection => {
            let t = p("t")?;
            let k = t.field();
            let t3 = t.pow(3)?;
            excl((&t3 * &Fe::int(k, 2)).is_one(), "2t^3 = 1")?;
            excl((&t3 + &Fe::one(k)).is_zero(), "t^3 = -1")?;
        }
        Family::Quadruple => {
            let d = p("delta")?;
            excl(d.pow(3)? != Fe::frac(d.field(), -1, 2), "delta^3 != -1/2")?;
        }
        Family::DoubleTangent => {
            let (t1, t2) = (p("t1")?, p("t2")?);
            let k = t1.field();
            excl(t1 == t2, "t1 = t2")?;
            for t in [t1, t2] {
                let t3 = t.pow(3)?;
                excl((&t3 * &Fe::int(k, 2)).is_one(), "2t_i^3 = 1")?;
                excl((&t3 + &Fe::one(k)).is_zero(), "t_i^3 = -1")?;
            }
            let s = (t1 + t2).pow(3)?;
            excl(
                !(&(&s * &Fe::int(k, 2)) + &Fe::one(k)).is_zero(),
                "2(t1 + t2)^3 != -1",
            )?;
        }
        Family::B2Inflection | Family::B2Tangent => {
            let t = p("t")?;
            let k = t.field();
            excl(t.is_zero(), "t = 0")?;
            // (t, a) = (1/2, -1) reproduces the line component
            let half = (&(t * &Fe::int(k, 2)) - &Fe::one(k)).is_zero();
            let a_is_minus_one = match family {
                Family::B2Tangent => (p("a")? + &Fe::one(k)).is_zero(),
                _ => true,
            };
            excl(half && a_is_minus_one, "section equals the line component")?;
        }
        Family::B2ConicTangent => {
            let a = p("a")?;
            excl((a + &Fe::one(a.field())).is_zero(), "a = -1")?;
            p("b")?;
        }
        Family::B2Bitangent => {
            let t = p("t")?;
            let k = t.field();
            excl(t.is_zero(), "t = 0")?;
            excl(
                (&(t * &Fe::int(k, 2)) + &Fe::int(k, 3)).is_zero(),
                "2t + 3 = 0",
            )?;
            excl((t + &Fe::one(k)).is_zero(), "t = -1")?;
            excl((&(t * &Fe::int(k, 2)) - &Fe::one(k)).is_zero(), "t = 1/2")?;
        }
    }
    for name in family.param_names() {
        p(name)?;
    }
    Ok(())
}

/// Section, required multiplicities and extra conditions.
type Built = (SectionCoeffs, Vec<Expected>, Vec<(String, bool)>);

fn build(
    family: Family,
    params: &Params,
) -> Result<Built> {
    let p = |n: &str| get(family, params, n);
    let exp = |label: &str, x: Fe, mult: usize, exact: bool| Expected {
        label: label.to_string(),
        x,
        mult,
        exact,
    };
    let mut conditions = Vec::new();
    let out = match family {
        Family::Tangent => {
            let (t, a) = (p("t")?, p("a")?);
            let s = tangent_section(t, a)?;
            (s, vec![exp("tangency at x_t(t)", xt(t)?, 2, false)])
        }
        Family::Inflection => {
            let t = p("t")?;
            let k = t.field();
            let t3 = t.pow(3)?;
            let u3 = (&(&t3 * &Fe::int(k, 2)) - &Fe::one(k)).pow(3)?;
            let a = (&(t * &Fe::int(k, 3))
                * &(&(&(&t.pow(6)? * &Fe::int(k, 8)) + &t3) + &Fe::int(k, 2)))
                .div(&u3)?;
            let b = (-&(&(&t.pow(2)? * &Fe::int(k, 6)) * &(&(&t3 * &Fe::int(k, 4)) + &Fe::one(k))))
                .div(&u3)?;
            let c = (&(&t3 * &Fe::int(k, 8)) - &Fe::one(k)).div(&u3)?;
            (
                SectionCoeffs::new(a, b, c),
                vec![exp("inflection tangency at x_t(t)", xt(t)?, 3, false)],
            )
        }
        Family::Quadruple => {
            let d = p("delta")?;
            let k = d.field();
            let s = SectionCoeffs::new(
                &(d * &Fe::int(k, -56)) * &Fe::frac(k, 1, 27),
                &(&d.pow(2)? * &Fe::int(k, 64)) * &Fe::frac(k, 1, 81),
                Fe::frac(k, 256, 243),
            );
            let t = d * &Fe::frac(k, 1, 2);
            (
                s,
                vec![exp("quadruple contact at x_t(delta/2)", xt(&t)?, 4, true)],
            )
        }
        Family::DoubleTangent => {
            let (t1, t2) = (p("t1")?, p("t2")?);
            let (b1, b0) = tangent_b_parts(t1)?;
            let (c1, c0) = tangent_b_parts(t2)?;
            let den = &b1 - &c1;
            if den.is_zero() {
                return Err(Error::Domain("double-tangent system is degenerate".into()));
            }
            let a = (&c0 - &b0).div(&den)?;
            let s1 = tangent_section(t1, &a)?;
            let s2 = tangent_section(t2, &a)?;
            conditions.push(("tangent formulas agree at t1 and t2".to_string(), s1 == s2));
            (
                s1,
                vec![
                    exp("tangency at x_t(t1)", xt(t1)?, 2, false),
                    exp("tangency at x_t(t2)", xt(t2)?, 2, false),
                ],
            )
        }
        Family::B2Inflection => {
            let t = p("t")?;
            let k = t.field();
            let s = SectionCoeffs::new(
                (-&Fe::one(k)).div(&(&t.pow(3)? * &Fe::int(k, 8)))?,
                Fe::int(k, 3).div(&(t * &Fe::int(k, 4)))?,
                &(t * &Fe::int(k, 3)) * &Fe::frac(k, 1, 8),
            );
            (
                s,
                vec![exp(
                    "inflection tangency to the conic at t^2",
                    t.pow(2)?,
                    3,
                    false,
                )],
            )
        }
        Family::B2Tangent => {
            let (t, a) = (p("t")?, p("a")?);
            let k = t.field();
            let b = (-&(&(&(a * &t.pow(3)?) * &Fe::int(k, 4)) - &Fe::one(k)))
                .div(&(t * &Fe::int(k, 2)))?;
            let c = &(a * &t.pow(4)?) + &(t * &Fe::frac(k, 1, 2));
            (
                SectionCoeffs::new(a.clone(), b, c),
                vec![exp("tangency to the conic at t^2", t.pow(2)?, 2, false)],
            )
        }
        Family::B2ConicTangent => {
            let (a, b) = (p("a")?, p("b")?);
            let k = a.field();
            let a1 = a + &Fe::one(k);
            let num = &(&(&(a * &Fe::int(k, 3)) + &(&b.pow(2)? * &Fe::int(k, 4)))
                - &(b * &Fe::int(k, 12)))
                + &Fe::int(k, 12);
            let c = num.div(&(&a1 * &Fe::int(k, 16)))?;
            let x0 = (-&(b - &Fe::frac(k, 3, 2))).div(&(&a1 * &Fe::int(k, 2)))?;
            let s = SectionCoeffs::new(a.clone(), b.clone(), c);
            conditions.push((
                "-16ac+3a+4b^2-12b-16c+12 = 0".to_string(),
                conic_tangent_eq(&s).is_zero(),
            ));
            (s, vec![exp("tangency to the line component", x0, 2, false)])
        }
        Family::B2Bitangent => {
            let t = p("t")?;
            let k = t.field();
            let w = &(t * &Fe::int(k, 2)) + &Fe::int(k, 3);
            let a = (-&Fe::one(k)).div(&(&t.pow(2)? * &w))?;
            let b = (&(&(t * &Fe::int(k, 2)) + &Fe::one(k)) * &Fe::int(k, 3))
                .div(&(&(t * &Fe::int(k, 2)) * &w))?;
            let c = (t * &Fe::int(k, 3)).div(&(&w * &Fe::int(k, 2)))?;
            let a1 = &a + &Fe::one(k);
            let x0 = (-&(&b - &Fe::frac(k, 3, 2))).div(&(&a1 * &Fe::int(k, 2)))?;
            let s = SectionCoeffs::new(a, b, c);
            conditions.push((
                "-16ac+3a+4b^2-12b-16c+12 = 0".to_string(),
                conic_tangent_eq(&s).is_zero(),
            ));
            (
                s,
                vec![
                    exp("tangency to the conic at t^2", t.pow(2)?, 2, false),
                    exp("tangency to the line component", x0, 2, false),
                ],
            )
        }
    };
    Ok((out.0, out.1, conditions))
}

/// `-16ac + 3a + 4b² - 12b - 16c + 12`.
pub fn conic_tangent_eq(s: &SectionCoeffs) -> Fe {
    let k = s.field();
    let i = |n| Fe::int(k, n);
    let terms = [
        &(&s.a * &s.c) * &i(-16),
        &s.a * &i(3),
        &(&s.b * &s.b) * &i(4),
        &s.b * &i(-12),
        &s.c * &i(-16),
        i(12),
    ];
    terms.iter().fold(Fe::zero(k), |acc, t| &acc + t)
}

/// Builds the family's section and checks its multiplicity profile.
pub fn verify_family(family: Family, params: &Params) -> Result<FamilyReport> {
    let (field, params) = unify(params)?;
    check_params(family, &params)?;
    let (section, expected, conditions) = build(family, &params)?;
    let curve = if family.curve_id() == "B1" {
        f1(&field)
    } else {
        f2(&field)
    };
    let g = restrict_to_section(&curve, &section)?;
    let degree = g.degree().unwrap_or(0);

    // points with equal x are merged, their requirements added
    let mut merged: Vec<Expected> = Vec::new();
    for e in expected {
        match merged.iter_mut().find(|m| m.x == e.x) {
            Some(m) => {
                m.mult += e.mult;
                m.exact = false;
                m.label = format!("{} + {}", m.label, e.label);
            }
            None => merged.push(e),
        }
    }
    let mut points = Vec::new();
    for e in merged {
        let found = multiplicity_at(&g, &e.x)?;
        let pass = if e.exact {
            found == e.mult
        } else {
            found >= e.mult
        };
        points.push(PointCheck {
            label: e.label,
            x: e.x.to_string(),
            expected: format!("{}{}", if e.exact { "=" } else { ">=" }, e.mult),
            found,
            pass,
        });
    }
    let profile = multiplicity_profile(&g)?;
    let bookkeeping = profile.iter().map(|(m, d)| m * d).sum::<usize>() == degree && degree <= 6;
    let pass = bookkeeping && points.iter().all(|p| p.pass) && conditions.iter().all(|c| c.1);
    Ok(FamilyReport {
        family: family.id().to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
        section: section.to_string(),
        restricted: g.to_string(),
        degree,
        at_infinity: 6usize.saturating_sub(degree),
        points,
        profile,
        conditions,
        bookkeeping,
        pass,
    })
}

/// The section a family produces at the given parameters.
pub fn family_section(family: Family, params: &Params) -> Result<SectionCoeffs> {
    let (_, params) = unify(params)?;
    check_params(family, &params)?;
    Ok(build(family, &params)?.0)
}

fn random_rational<R: Rng>(rng: &mut R, field: &Field) -> Fe {
    Fe::frac(field, rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// `Q(θ)` with `θ³ = -4`.
pub fn cube_root_field() -> Field {
    NumberField::parse("x^3+4").expect("valid minimal polynomial")
}

/// A random admissible parameter point. `quadruple` always returns
/// `delta = θ/2`; `double-tangent` returns a rational `t1` and
/// `t2 = θ/2 - t1` over `Q(θ)`.
pub fn sample_params<R: Rng>(family: Family, rng: &mut R) -> Params {
    let q = NumberField::rationals();
    let k = cube_root_field();
    loop {
        let mut p = Params::new();
        match family {
            Family::Quadruple => {
                p.insert("delta".into(), &Fe::theta(&k) * &Fe::frac(&k, 1, 2));
            }
            Family::DoubleTangent => {
                let t1 = random_rational(rng, &q).lift(&k).expect("rational");
                let t2 = &(&Fe::theta(&k) * &Fe::frac(&k, 1, 2)) - &t1;
                p.insert("t1".into(), t1);
                p.insert("t2".into(), t2);
            }
            _ => {
                for name in family.param_names() {
                    p.insert(name.to_string(), random_rational(rng, &q));
                }
            }
        }
        if check_params(family, &p).is_ok() {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params(pairs: &[(&str, &str)]) -> Params {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Fe::parse(v).unwrap()))
            .collect()
    }

    #[test]
    fn tangent_at_t1_a0() {
        let p = params(&[("t", "1"), ("a", "0")]);
        let s = family_section(Family::Tangent, &p).unwrap();
        assert_eq!(s.to_string(), "(0, 3, -5/4)");
        let r = verify_family(Family::Tangent, &p).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.points[0].x, "1/2");
        assert_eq!(r.points[0].found, 2);
    }

    #[test]
    fn inflection_at_half() {
        let r = verify_family(Family::Inflection, &params(&[("t", "1/2")])).unwrap();
        assert_eq!(r.section, "(-8, 16/3, 0)");
        assert_eq!(r.points[0].x, "4/9");
        assert_eq!(r.points[0].found, 3);
        assert!(r.pass);
    }

    #[test]
    fn exclusions_are_named() {
        let e = verify_family(Family::Tangent, &params(&[("t", "-1"), ("a", "0")])).unwrap_err();
        assert!(e.to_string().contains("t^3 = -1"), "{e}");
        let e = verify_family(Family::B2Tangent, &params(&[("t", "0"), ("a", "1")])).unwrap_err();
        assert!(e.to_string().contains("t = 0"), "{e}");
        assert!(verify_family(Family::Inflection, &params(&[])).is_err());
    }

    #[test]
    fn sampled_points_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for f in FAMILIES {
            for _ in 0..3 {
                let p = sample_params(f, &mut rng);
                let r = verify_family(f, &p).unwrap();
                assert!(r.pass, "{f}: {r:?}");
            }
        }
    }

    #[test]
    fn family_ids_round_trip() {
        for f in FAMILIES {
            assert_eq!(f.id().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
