use sextic_groups::invariants::{abelianization, battery, hom_spectrum};
use sextic_groups::registry::{
    bindings_for, case_ids, compare_relators, derived_pi1, export_json, get_case, import_json,
    pi1_presentation, registry, DerivedMatch,
};

#[test]
fn export_is_stable_and_round_trips() {
    let a = export_json().unwrap();
    assert_eq!(a, export_json().unwrap());
    assert_eq!(&import_json(&a).unwrap(), registry());
}

#[test]
fn every_case_is_listed_once() {
    let ids = case_ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    assert!(ids.contains(&"a17+a2") && ids.contains(&"2a8+a3"));
}

#[test]
fn derived_groups_agree_with_printed_ones() {
    for c in &registry().cases {
        let Some(derived) = derived_pi1(c).unwrap() else {
            continue;
        };
        let printed = pi1_presentation(c).unwrap();
        match c.derived_match {
            DerivedMatch::Exact => {
                assert!(compare_relators(&printed, &derived).exact(), "{}", c.id)
            }
            _ => {
                assert_eq!(
                    abelianization(&printed),
                    abelianization(&derived),
                    "{}",
                    c.id
                );
                assert_eq!(
                    hom_spectrum(&printed, &battery()),
                    hom_spectrum(&derived, &battery()),
                    "{}",
                    c.id
                );
            }
        }
    }
}

#[test]
fn perturbations_only_add_relators() {
    for c in &registry().cases {
        for (rule, b) in bindings_for(&c.id) {
            let q = sextic_groups::registry::apply_perturbation(c, &rule.id, &b.id).unwrap();
            let p = pi1_presentation(c).unwrap();
            assert_eq!(q.generators(), p.generators());
            assert!(q.relators().len() >= p.relators().len());
        }
    }
}

#[test]
fn unknown_case_lists_valid_ids() {
    let e = get_case("a99").unwrap_err().to_string();
    assert!(e.contains("a17+a2"), "{e}");
}
