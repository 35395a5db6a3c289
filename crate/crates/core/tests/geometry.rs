use proptest::prelude::*;
use sextic_groups::curvegeom::{
    cube_root_field, f1, family_section, multiplicity_at, restrict_to_section, verify_family,
    Family, Fe, Params,
};

fn fe_strategy() -> impl Strategy<Value = Fe> {
    prop::collection::vec((-20i64..=20, 1i64..=9), 3).prop_map(|cs| {
        let k = cube_root_field();
        cs.iter()
            .enumerate()
            .fold(Fe::zero(&k), |acc, (i, &(n, d))| {
                &acc + &(&Fe::frac(&k, n, d) * &Fe::theta(&k).pow(i as i64).unwrap())
            })
    })
}

proptest! {
    #[test]
    fn field_axioms(a in fe_strategy(), b in fe_strategy(), c in fe_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn tangent_family_is_tangent(tn in -9i64..=9, td in 1i64..=9, an in -9i64..=9, ad in 1i64..=9) {
        let q = sextic_groups::curvegeom::NumberField::rationals();
        let p: Params = [("t".to_string(), Fe::frac(&q, tn, td)), ("a".to_string(), Fe::frac(&q, an, ad))].into_iter().collect();
        if let Ok(r) = verify_family(Family::Tangent, &p) {
            prop_assert!(r.pass, "{:?}", r);
        }
    }

    #[test]
    fn b2_families_hold(tn in -9i64..=9, td in 1i64..=9) {
        let q = sextic_groups::curvegeom::NumberField::rationals();
        let p: Params = [("t".to_string(), Fe::frac(&q, tn, td))].into_iter().collect();
        for f in [Family::B2Inflection, Family::B2Bitangent] {
            if let Ok(r) = verify_family(f, &p) {
                prop_assert!(r.pass, "{:?}", r);
            }
        }
    }
}

#[test]
fn quadruple_residual_roots() {
    let k = cube_root_field();
    let theta = Fe::theta(&k);
    let delta = &theta * &Fe::frac(&k, 1, 2);
    let p: Params = [("delta".to_string(), delta)].into_iter().collect();
    let s = family_section(Family::Quadruple, &p).unwrap();
    let g = restrict_to_section(&f1(&k), &s).unwrap();
    let x0 = &theta * &Fe::frac(&k, 4, 15);
    assert_eq!(multiplicity_at(&g, &x0).unwrap(), 4);
    let mut rest = g;
    for _ in 0..4 {
        let (quot, rem) = rest.div_linear(&x0);
        assert!(rem.is_zero());
        rest = quot;
    }
    assert_eq!(rest.degree(), Some(2));
    let (c0, c1, c2) = (rest.coeff(0), rest.coeff(1), rest.coeff(2));
    // roots -(44/327 ± 48/109 i)∛4 with ∛4 = -θ
    assert_eq!((-&c1).div(&c2).unwrap(), &theta * &Fe::frac(&k, 88, 327));
    assert_eq!(
        c0.div(&c2).unwrap(),
        &theta.pow(2).unwrap() * &Fe::frac(&k, 208, 981)
    );
}

#[test]
fn bad_parameters_are_named() {
    let q = sextic_groups::curvegeom::NumberField::rationals();
    let p: Params = [("t".to_string(), Fe::frac(&q, 1, 2))]
        .into_iter()
        .collect();
    let e = verify_family(Family::B2Inflection, &p).unwrap_err();
    assert!(e.to_string().contains("line component"), "{e}");
    let e = verify_family(Family::B2Bitangent, &p).unwrap_err();
    assert!(e.to_string().contains("t = 1/2"), "{e}");
}
