//! Freely reduced words in a free group on named generators.
//!
//! Letters carry an exponent of `+1` or `-1`; powers are always expanded.
//! The textual syntax is a whitespace separated list of tokens, each a
//! generator name optionally followed by `^-1`, e.g. `a b^-1 g`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A generator name matching `[A-Za-z][A-Za-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(Error::InvalidGenerator(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// The barred companion used by the double-cover passage: `a` -> `ab`.
    pub fn barred(&self) -> Generator {
        Generator(Arc::from(format!("{}b", self.0).as_str()))
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Generator::new(&s).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building a generator from a name known to be valid.
///
/// Panics on an invalid name; meant for literals.
pub fn gen(name: &str) -> Generator {
    Generator::new(name).expect("valid generator literal")
}

/// A generator raised to `+1` (`inverse == false`) or `-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            generator: self.generator.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// A homomorphism from a free group, given on generators.
pub type Assignment = BTreeMap<Generator, Word>;

/// Freely reduces a raw sequence of letters.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in raw {
        match out.last() {
            Some(last) if last.cancels(&l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: &Generator) -> Self {
        Word {
            letters: vec![Letter::new(g.clone(), false)],
        }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        reduce(raw)
    }

    /// Parses the strict textual syntax (`a b^-1 g`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            let (name, inverse) = match tok.split_once('^') {
                None => (tok, false),
                Some((name, "-1")) => (name, true),
                Some((_, exp)) => {
                    return Err(Error::Parse(format!(
                        "unsupported exponent `^{exp}` in token `{tok}` (only ^-1 is allowed)"
                    )))
                }
            };
            let g = Generator::new(name)
                .map_err(|_| Error::Parse(format!("invalid generator token `{tok}`")))?;
            raw.push(Letter::new(g, inverse));
        }
        Ok(reduce(raw))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.letters.iter().map(|l| l.generator.clone()).collect()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut raw = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            raw.extend(base.letters.iter().cloned());
        }
        reduce(raw)
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.inverse().mul(self).mul(c)
    }

    /// The commutator `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.inverse().mul(&y.inverse()).mul(x).mul(y)
    }

    /// Sum of exponents of `g` in the word.
    pub fn exponent_sum(&self, g: &Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.generator == g)
            .map(Letter::exponent)
            .sum()
    }

    /// Removes matching letter pairs from the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let n = self.letters.len();
        let mut i = 0;
        while i + 1 < n - i && self.letters[i].cancels(&self.letters[n - 1 - i]) {
            i += 1;
        }
        if n == 0 {
            return Word::identity();
        }
        Word {
            letters: self.letters[i..n - i].to_vec(),
        }
    }

    /// Rotates a cyclically reduced word left by `k` letters.
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// Smallest representative among all cyclic rotations of the cyclic
    /// reduction of the word and of its inverse. Two relators define the same
    /// normal closure generator up to rotation/inversion iff their canonical
    /// forms agree.
    pub fn cyclic_canonical(&self) -> Word {
        let c = self.cyclically_reduced();
        let inv = c.inverse();
        let n = c.len();
        let mut best = c.clone();
        for k in 0..n.max(1) {
            for cand in [c.rotated(k), inv.rotated(k)] {
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }

    /// Applies the homomorphism given by `assignment` and freely reduces.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Word> {
        let mut raw = Vec::new();
        for l in &self.letters {
            let image = assignment
                .get(&l.generator)
                .ok_or_else(|| Error::UnknownGenerator {
                    generator: l.generator.to_string(),
                    context: "domain of the assignment".into(),
                })?;
            if l.inverse {
                raw.extend(image.letters.iter().rev().map(Letter::inverted));
            } else {
                raw.extend(image.letters.iter().cloned());
            }
        }
        Ok(reduce(raw))
    }

    /// Checks that every generator of the word lies in `allowed`.
    pub fn check_over(&self, allowed: &[Generator], context: &str) -> Result<()> {
        for l in &self.letters {
            if !allowed.contains(&l.generator) {
                return Err(Error::UnknownGenerator {
                    generator: l.generator.to_string(),
                    context: context.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Renames generators; letters not in the map are kept.
    pub fn rename(&self, map: &BTreeMap<Generator, Generator>) -> Word {
        reduce(self.letters.iter().map(|l| {
            Letter::new(
                map.get(&l.generator)
                    .cloned()
                    .unwrap_or_else(|| l.generator.clone()),
                l.inverse,
            )
        }))
    }
}

/// The identity assignment on `gens`.
pub fn identity_assignment(gens: &[Generator]) -> Assignment {
    gens.iter()
        .map(|g| (g.clone(), Word::generator(g)))
        .collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            f.write_str("1")
        } else {
            write!(f, "{self}")
        }
    }
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn l(name: &str, inverse: bool) -> Letter {
        Letter::new(gen(name), inverse)
    }

    #[test]
    fn inverse_pair_cancels() {
        assert!(reduce([l("a", false), l("a", true)]).is_identity());
    }

    #[test]
    fn inner_cancellation() {
        let r = reduce([l("a", false), l("b", false), l("b", true), l("c", false)]);
        assert_eq!(r, w("a c"));
    }

    #[test]
    fn parse_rejects_other_exponents() {
        assert!(Word::parse("a^2").is_err());
        assert!(Word::parse("a^-2").is_err());
        assert!(Word::parse("1a").is_err());
        assert_eq!(w("a^-1 b").to_string(), "a^-1 b");
        assert!(w("").is_identity());
    }

    #[test]
    fn substitute_cancels() {
        let mut f = Assignment::new();
        f.insert(gen("e1"), w("a"));
        f.insert(gen("e2"), w("a^-1 b"));
        assert_eq!(w("e1 e2").substitute(&f).unwrap(), w("b"));
    }

    #[test]
    fn substitute_reports_unmapped_generator() {
        let f: Assignment = [(gen("a"), w("b"))].into_iter().collect();
        match w("a c").substitute(&f) {
            Err(Error::UnknownGenerator { generator, .. }) => assert_eq!(generator, "c"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn braid_relator_image_under_b3_map() {
        // γβγ(βγα)⁻¹ with α,β ↦ s1, γ ↦ s2
        let rel = w("g b g").mul(&w("b g a").inverse());
        let f: Assignment = [
            (gen("a"), w("s1")),
            (gen("b"), w("s1")),
            (gen("g"), w("s2")),
        ]
        .into_iter()
        .collect();
        assert_eq!(rel.substitute(&f).unwrap(), w("s2 s1 s2 s1^-1 s2^-1 s1^-1"));
    }

    #[test]
    fn cyclic_reduction_and_canonical_form() {
        assert_eq!(w("a b c a^-1").cyclically_reduced(), w("b c"));
        assert_eq!(w("a b c").cyclic_canonical(), w("b c a").cyclic_canonical());
        assert_eq!(
            w("a b").cyclic_canonical(),
            w("b^-1 a^-1").cyclic_canonical()
        );
        assert_ne!(w("a b").cyclic_canonical(), w("a b^-1").cyclic_canonical());
        assert!(w("a a^-1").cyclic_canonical().is_identity());
    }

    #[test]
    fn barred_names() {
        assert_eq!(gen("a").barred(), gen("ab"));
        assert_eq!(gen("b").barred(), gen("bb"));
    }
}
