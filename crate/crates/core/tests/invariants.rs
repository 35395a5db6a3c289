mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use sextic_groups::invariants::finite_group::{cyclic, dihedral, symmetric};
use sextic_groups::invariants::{
    abelianization, battery_group, epi_exists, group_order, hom_count, rb3_verify, smith_diagonal,
    todd_coxeter, Z2Z3Word, BATTERY,
};
use sextic_groups::notation::parse_relators;
use sextic_groups::presentation::Presentation;
use sextic_groups::word::{gen, Letter, Word};

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=5usize, 1..=5usize)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (1..=3usize)
        .prop_flat_map(|n| {
            let word = prop::collection::vec((0..n, any::<bool>()), 0..8);
            (Just(n), prop::collection::vec(word, 0..4))
        })
        .prop_map(|(n, rels)| {
            let names = ["x", "y", "z"];
            let words = rels
                .into_iter()
                .map(|ls| {
                    Word::from_letters(
                        ls.into_iter()
                            .map(|(i, inv)| Letter::new(gen(names[i]), inv)),
                    )
                })
                .collect();
            Presentation::from_relators(&names[..n], words).unwrap()
        })
}

proptest! {
    #[test]
    fn snf_matches_minor_oracle(m in matrix_strategy()) {
        let cols = m[0].len();
        prop_assert_eq!(smith_diagonal(&big(&m), cols), common::smith_by_minors(&m, cols));
    }

    #[test]
    fn snf_is_invariant_under_row_and_column_shuffles(m in matrix_strategy(), seed in any::<u64>()) {
        let cols = m[0].len();
        let mut rows: Vec<usize> = (0..m.len()).collect();
        let mut cs: Vec<usize> = (0..cols).collect();
        rows.rotate_left((seed % m.len() as u64) as usize);
        cs.reverse();
        let shuffled: Vec<Vec<i64>> = rows.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
        prop_assert_eq!(smith_diagonal(&big(&m), cols), smith_diagonal(&big(&shuffled), cols));
    }

    #[test]
    fn abelianization_counts_cyclic_homs(m in matrix_strategy()) {
        let cols = m[0].len();
        let d = smith_diagonal(&big(&m), cols);
        for q in [2, 3, 5] {
            prop_assert_eq!(common::hom_count_to_cyclic(&m, cols, q), common::predicted_cyclic_count(&d, cols, q));
        }
    }

    #[test]
    fn hom_search_matches_brute_force(p in presentation_strategy()) {
        for g in [symmetric(3), battery_group("A4").unwrap()] {
            let (homs, epis) = common::brute_hom_count(&p, &g);
            prop_assert_eq!(hom_count(&p, &g), homs);
            prop_assert_eq!(epi_exists(&p, &g), epis > 0);
        }
    }

    #[test]
    fn z2z3_inverse(a in prop::collection::vec(prop_oneof![Just("u"), Just("v"), Just("v^-1")], 0..10)) {
        let w = Z2Z3Word::parse(&a.join(" ")).unwrap();
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert!(w.inverse().mul(&w).is_identity());
    }
}

fn rels(text: &str) -> Vec<Word> {
    text.split(';')
        .flat_map(|c| parse_relators(c).unwrap())
        .collect()
}

#[test]
fn coset_enumeration_recovers_table_orders() {
    let cases = [
        ("Z6", vec!["a"], "a a a a a a"),
        ("S3", vec!["a", "b"], "a a a; b b; a b a b"),
        ("D8", vec!["a", "b"], "a a a a; b b; a b a b"),
        ("D10", vec!["a", "b"], "a a a a a; b b; a b a b"),
        ("D12", vec!["a", "b"], "a a a a a a; b b; a b a b"),
        ("A4", vec!["a", "b"], "a a; b b b; a b a b a b"),
        ("S4", vec!["a", "b"], "a a; b b b; a b a b a b a b"),
    ];
    assert_eq!(cases.len(), BATTERY.len());
    for (name, gens, text) in cases {
        let p = Presentation::from_relators(&gens, rels(text)).unwrap();
        assert_eq!(
            todd_coxeter(&p, &[], 100_000).unwrap(),
            battery_group(name).unwrap().order(),
            "{name}"
        );
    }
}

#[test]
fn coset_index_of_subgroups() {
    let s3 = Presentation::from_relators(&["a", "b"], rels("a a a; b b; a b a b")).unwrap();
    assert_eq!(
        todd_coxeter(&s3, &[Word::parse("a").unwrap()], 1000).unwrap(),
        2
    );
    assert_eq!(
        todd_coxeter(&s3, &[Word::parse("b").unwrap()], 1000).unwrap(),
        3
    );
}

#[test]
fn coset_overflow_is_reported() {
    let free = Presentation::from_relators(&["a", "b"], vec![]).unwrap();
    assert_eq!(group_order(&free, 500).unwrap(), None);
}

#[test]
fn table_constructors() {
    assert_eq!(cyclic(6).order(), 6);
    assert_eq!(dihedral(5).order(), 10);
    assert!(!symmetric(4).is_abelian());
}

#[test]
fn rb3_on_the_modular_group() {
    let b3 = Presentation::from_relators(&["s", "t"], rels("s t s = t s t; (s t)^3")).unwrap();
    let assignment = [
        (gen("s"), Z2Z3Word::sigma1()),
        (gen("t"), Z2Z3Word::sigma2()),
    ]
    .into_iter()
    .collect();
    assert!(rb3_verify(&b3, &assignment).unwrap().certified());
    assert_eq!(abelianization(&b3).to_string(), "Z6");
}
