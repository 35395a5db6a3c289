//! The free product `Z₂ * Z₃ = ⟨u, v | u², v³⟩ ≅ B₃/(σ₁σ₂)³` in normal form,
//! and certification of epimorphisms onto it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Generator, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Syllable {
    U,
    /// `v^e` with `e ∈ {1, 2}`.
    V(u8),
}

/// Alternating normal form; the empty sequence is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z2Z3Word {
    syllables: Vec<Syllable>,
}

impl Z2Z3Word {
    pub fn identity() -> Self {
        Z2Z3Word::default()
    }

    pub fn u() -> Self {
        Z2Z3Word {
            syllables: vec![Syllable::U],
        }
    }

    pub fn v() -> Self {
        Z2Z3Word {
            syllables: vec![Syllable::V(1)],
        }
    }

    /// `σ₁ = v²u`.
    pub fn sigma1() -> Self {
        Z2Z3Word {
            syllables: vec![Syllable::V(2), Syllable::U],
        }
    }

    /// `σ₂ = uv⁻¹ = uv²`.
    pub fn sigma2() -> Self {
        Z2Z3Word {
            syllables: vec![Syllable::U, Syllable::V(2)],
        }
    }

    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(raw: I) -> Self {
        let mut w = Z2Z3Word::identity();
        for s in raw {
            w.push(s);
        }
        w
    }

    fn push(&mut self, s: Syllable) {
        let s = match s {
            Syllable::V(e) if e % 3 == 0 => return,
            Syllable::V(e) => Syllable::V(e % 3),
            Syllable::U => Syllable::U,
        };
        match (self.syllables.last().copied(), s) {
            (Some(Syllable::U), Syllable::U) => {
                self.syllables.pop();
            }
            (Some(Syllable::V(a)), Syllable::V(b)) => {
                self.syllables.pop();
                let e = (a + b) % 3;
                if e != 0 {
                    self.syllables.push(Syllable::V(e));
                }
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn mul(&self, other: &Z2Z3Word) -> Z2Z3Word {
        let mut w = self.clone();
        for &s in &other.syllables {
            w.push(s);
        }
        w
    }

    pub fn inverse(&self) -> Z2Z3Word {
        Z2Z3Word::from_syllables(self.syllables.iter().rev().map(|s| match s {
            Syllable::U => Syllable::U,
            Syllable::V(e) => Syllable::V(3 - e),
        }))
    }

    /// Parses `u`, `v`, `v^2`, `v^-1`, … separated by whitespace; `1` is the
    /// identity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = Z2Z3Word::identity();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (head, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((h, e)) => (
                    h,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
                ),
            };
            let s = match head {
                "u" => {
                    if exp.rem_euclid(2) == 1 {
                        Syllable::U
                    } else {
                        continue;
                    }
                }
                "v" => Syllable::V(exp.rem_euclid(3) as u8),
                _ => return Err(Error::Parse(format!("bad Z2*Z3 token `{tok}`"))),
            };
            w.push(s);
        }
        Ok(w)
    }
}

impl fmt::Display for Z2Z3Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self
            .syllables
            .iter()
            .map(|s| match s {
                Syllable::U => "u",
                Syllable::V(1) => "v",
                Syllable::V(_) => "v^2",
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub type Z2Z3Assignment = BTreeMap<Generator, Z2Z3Word>;

/// Image of a word under an assignment.
pub fn evaluate(w: &Word, assignment: &Z2Z3Assignment) -> Result<Z2Z3Word> {
    let mut acc = Z2Z3Word::identity();
    for l in w.letters() {
        let img = assignment
            .get(&l.generator)
            .ok_or_else(|| Error::UnknownGenerator {
                generator: l.generator.name().to_string(),
                context: "Z2*Z3 assignment".into(),
            })?;
        acc = acc.mul(&if l.inverse {
            img.inverse()
        } else {
            img.clone()
        });
    }
    Ok(acc)
}

/// Syllable-length bound for the closure search in [`rb3_verify`].
pub const CLOSURE_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rb3Report {
    /// Relators whose image is not the identity, with that image.
    pub failing_relators: Vec<(Word, Z2Z3Word)>,
    pub contains_u: bool,
    pub contains_v: bool,
}

impl Rb3Report {
    /// A well-defined homomorphism whose image contains `u` and `v`.
    pub fn certified(&self) -> bool {
        self.failing_relators.is_empty() && self.contains_u && self.contains_v
    }
}

/// Checks that `assignment` defines an epimorphism `p ↠ Z₂ * Z₃`.
///
/// Surjectivity is certified by finding `u` and `v` among the products of
/// generator images, exploring only elements of syllable length at most
/// [`CLOSURE_BOUND`]. Failing to find them is not a proof of non-surjectivity.
pub fn rb3_verify(p: &Presentation, assignment: &Z2Z3Assignment) -> Result<Rb3Report> {
    if let Some(g) = p.generators().iter().find(|g| !assignment.contains_key(*g)) {
        return Err(Error::Precondition(format!(
            "assignment does not cover generator {g}"
        )));
    }
    let mut failing = Vec::new();
    for r in p.relators() {
        let img = evaluate(&r, assignment)?;
        if !img.is_identity() {
            failing.push((r, img));
        }
    }
    let mut steps: Vec<Z2Z3Word> = Vec::new();
    for g in p.generators() {
        let x = &assignment[g];
        steps.push(x.clone());
        steps.push(x.inverse());
    }
    let (u, v) = (Z2Z3Word::u(), Z2Z3Word::v());
    let mut seen: BTreeSet<Z2Z3Word> = BTreeSet::from([Z2Z3Word::identity()]);
    let mut queue = VecDeque::from([Z2Z3Word::identity()]);
    while let Some(x) = queue.pop_front() {
        if seen.contains(&u) && seen.contains(&v) {
            break;
        }
        for s in &steps {
            let y = x.mul(s);
            if y.syllable_len() <= CLOSURE_BOUND && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(Rb3Report {
        failing_relators: failing,
        contains_u: seen.contains(&u),
        contains_v: seen.contains(&v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_relators;
    use crate::word::gen;

    fn braid_images() -> Z2Z3Assignment {
        [("s1", Z2Z3Word::sigma1()), ("s2", Z2Z3Word::sigma2())]
            .into_iter()
            .map(|(n, w)| (gen(n), w))
            .collect()
    }

    fn image(text: &str) -> Z2Z3Word {
        let r = parse_relators(text).unwrap();
        assert_eq!(r.len(), 1);
        evaluate(&r[0], &braid_images()).unwrap()
    }

    #[test]
    fn normal_form_reduction() {
        let w = Z2Z3Word::parse("u u v v v u v^-1 v^2").unwrap();
        assert_eq!(w.to_string(), "u v");
        assert_eq!(Z2Z3Word::parse("v^4").unwrap(), Z2Z3Word::v());
        assert!(Z2Z3Word::parse("x").is_err());
    }

    #[test]
    fn braid_relation_is_trivial() {
        assert_eq!(image("s1 s2").to_string(), "v");
        assert!(image("s1 s2 s1 = s2 s1 s2").is_identity());
        assert!(image("(s1 s2)^3").is_identity());
        assert!(image("(s1^2 s2)^2").is_identity());
        assert_eq!(image("s1 s2 s1").to_string(), "u");
    }

    #[test]
    fn certifies_b3_bar() {
        let p = Presentation::from_relators(
            &["s1", "s2"],
            vec![
                parse_relators("s1 s2 s1 = s2 s1 s2").unwrap().remove(0),
                parse_relators("(s1 s2)^3").unwrap().remove(0),
            ],
        )
        .unwrap();
        let r = rb3_verify(&p, &braid_images()).unwrap();
        assert!(r.certified(), "{r:?}");
    }

    #[test]
    fn rejects_bad_assignment() {
        let p = Presentation::from_relators(
            &["s1", "s2"],
            vec![Word::commutator(
                &Word::parse("s1").unwrap(),
                &Word::parse("s2").unwrap(),
            )],
        )
        .unwrap();
        let r = rb3_verify(&p, &braid_images()).unwrap();
        assert!(!r.certified());
        assert_eq!(r.failing_relators.len(), 1);

        let mut partial = braid_images();
        partial.remove(&gen("s2"));
        assert!(rb3_verify(&p, &partial).is_err());
    }

    #[test]
    fn image_not_surjective() {
        let p = Presentation::from_relators(&["s1"], vec![]).unwrap();
        let a: Z2Z3Assignment = [(gen("s1"), Z2Z3Word::u())].into_iter().collect();
        let r = rb3_verify(&p, &a).unwrap();
        assert!(r.contains_u && !r.contains_v);
    }
}
