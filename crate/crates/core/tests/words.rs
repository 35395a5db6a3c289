use proptest::prelude::*;
use sextic_groups::braid::{conj_star, Braid};
use sextic_groups::word::{gen, Generator, Letter, Word};

fn basis() -> Vec<Generator> {
    ["e1", "e2", "e3", "e4"].iter().map(|s| gen(s)).collect()
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..4usize, any::<bool>()), 0..16).prop_map(|ls| {
        let b = basis();
        Word::from_letters(
            ls.into_iter()
                .map(|(i, inv)| Letter::new(b[i].clone(), inv)),
        )
    })
}

fn braid_strategy() -> impl Strategy<Value = Braid> {
    prop::collection::vec((1..=3usize, prop_oneof![Just(-1i64), Just(1i64)]), 0..10).prop_map(
        |ls| {
            let text = ls
                .iter()
                .map(|(i, e)| {
                    if *e < 0 {
                        format!("s{i}^-1")
                    } else {
                        format!("s{i}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            Braid::parse(4, &text).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn free_group_laws(x in word_strategy(), y in word_strategy(), z in word_strategy()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(x.mul(&y).inverse(), y.inverse().mul(&x.inverse()));
        prop_assert_eq!(Word::parse(&x.to_string()).unwrap(), x.clone());
    }

    #[test]
    fn cyclic_canonical_is_conjugacy_invariant(x in word_strategy(), c in word_strategy()) {
        prop_assert_eq!(x.conjugate_by(&c).cyclic_canonical(), x.cyclic_canonical());
        prop_assert_eq!(x.inverse().cyclic_canonical(), x.cyclic_canonical());
    }

    #[test]
    fn braid_action_is_a_right_action(a in braid_strategy(), b in braid_strategy(), x in word_strategy()) {
        let basis = basis();
        let ab = a.then(&b).unwrap();
        prop_assert_eq!(ab.act(&x, &basis).unwrap(), b.act(&a.act(&x, &basis).unwrap(), &basis).unwrap());
        let back = a.inverse().act(&a.act(&x, &basis).unwrap(), &basis).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn braids_fix_the_boundary(a in braid_strategy()) {
        let boundary = Word::parse("e1 e2 e3 e4").unwrap();
        prop_assert_eq!(a.act(&boundary, &basis()).unwrap(), boundary);
    }

    #[test]
    fn conj_star_is_an_involutive_homomorphism(x in word_strategy(), y in word_strategy()) {
        let b = basis();
        prop_assert_eq!(conj_star(&conj_star(&x, &b).unwrap(), &b).unwrap(), x.clone());
        prop_assert_eq!(
            conj_star(&x.mul(&y), &b).unwrap(),
            conj_star(&x, &b).unwrap().mul(&conj_star(&y, &b).unwrap())
        );
    }
}

#[test]
fn braid_relations_hold_in_the_action() {
    let b = basis();
    let x = Word::parse("e1 e3^-1 e2 e4").unwrap();
    let lhs = Braid::parse(4, "s1 s2 s1").unwrap().act(&x, &b).unwrap();
    let rhs = Braid::parse(4, "s2 s1 s2").unwrap().act(&x, &b).unwrap();
    assert_eq!(lhs, rhs);
    let far1 = Braid::parse(4, "s1 s3").unwrap().act(&x, &b).unwrap();
    let far2 = Braid::parse(4, "s3 s1").unwrap().act(&x, &b).unwrap();
    assert_eq!(far1, far2);
}

#[test]
fn word_syntax_rejects_powers() {
    assert!(Word::parse("a^2").is_err());
    assert!(Word::parse("a^-1 b").is_ok());
}
