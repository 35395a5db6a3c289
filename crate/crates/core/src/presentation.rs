//! Finitely presented groups: normalization, quotients, Tietze elimination
//! and the index-2 double-cover passage.
//!
//! File format (line oriented):
//!
//! ```text
//! gens: a ab b bb g gb
//! g b g = b g a          # r1
//! a ab a ab^-1 a^-1 ab^-1
//! ```
//!
//! The first non-comment line lists the generators. Every further line is a
//! relator or a chain of equalities in the strict word syntax; an empty side
//! is not allowed, use `1` for the identity. A trailing `# text` becomes the
//! relation's label. Blank lines and whole-line comments are skipped.
//! [`Presentation::to_text`] emits exactly this form, and parsing its output
//! reproduces the same bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::notation::chain_relators;
use crate::word::{Assignment, Generator, Letter, Word};

/// A relation `sides[0] = sides[1] = …`; one side means `sides[0] = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub sides: Vec<Word>,
    pub label: Option<String>,
}

impl Relation {
    pub fn relator(w: Word) -> Self {
        Relation {
            sides: vec![w],
            label: None,
        }
    }

    pub fn labelled(w: Word, label: &str) -> Self {
        Relation {
            sides: vec![w],
            label: Some(label.to_string()),
        }
    }

    pub fn equation(lhs: Word, rhs: Word) -> Self {
        Relation {
            sides: vec![lhs, rhs],
            label: None,
        }
    }

    pub fn relators(&self) -> Vec<Word> {
        chain_relators(&self.sides)
    }

    fn side_text(w: &Word) -> String {
        if w.is_identity() {
            "1".to_string()
        } else {
            w.to_string()
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.sides.iter().map(Relation::side_text).collect();
        f.write_str(&body.join(" = "))?;
        if let Some(l) = &self.label {
            write!(f, "  # {l}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Presentation {
    generators: Vec<Generator>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(Error::Domain(format!("duplicate generator `{g}`")));
            }
        }
        for r in &relations {
            for s in &r.sides {
                s.check_over(&generators, "presentation's generators")?;
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    /// Builds a presentation from generator names and relators.
    pub fn from_relators(generators: &[&str], relators: Vec<Word>) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Generator::new(g))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, relators.into_iter().map(Relation::relator).collect())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// All relators (equations converted to `w₁·w₂⁻¹`).
    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().flat_map(Relation::relators).collect()
    }

    /// Relators paired with the label of the relation they came from.
    pub fn labelled_relators(&self) -> Vec<(Word, Option<String>)> {
        self.relations
            .iter()
            .flat_map(|r| r.relators().into_iter().map(move |w| (w, r.label.clone())))
            .collect()
    }

    pub fn generator_index(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    /// Relators as `(generator index, inverse)` sequences.
    pub fn indexed_relators(&self) -> Vec<Vec<(usize, bool)>> {
        let idx: BTreeMap<&Generator, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        self.relators()
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|l| (idx[&l.generator], l.inverse))
                    .collect()
            })
            .collect()
    }

    /// Parses the line-oriented file format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<Generator>> = None;
        let mut relations = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let (body, label) = match raw.split_once('#') {
                Some((b, l)) => (b, Some(l.trim().to_string())),
                None => (raw, None),
            };
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            if gens.is_none() {
                let rest = body.strip_prefix("gens:").ok_or_else(|| {
                    Error::Parse(format!("line {}: expected `gens:` header", lineno + 1))
                })?;
                gens = Some(
                    rest.split_whitespace()
                        .map(Generator::new)
                        .collect::<Result<Vec<_>>>()?,
                );
                continue;
            }
            let mut sides = Vec::new();
            for side in body.split('=') {
                let side = side.trim();
                if side.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {}: empty side in relation",
                        lineno + 1
                    )));
                }
                if side == "1" {
                    sides.push(Word::identity());
                } else {
                    sides.push(
                        Word::parse(side)
                            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?,
                    );
                }
            }
            relations.push(Relation {
                sides,
                label: label.filter(|l| !l.is_empty()),
            });
        }
        let gens = gens.ok_or_else(|| Error::Parse("missing `gens:` header".into()))?;
        Presentation::new(gens, relations)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("gens:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g.name());
        }
        out.push('\n');
        for r in &self.relations {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Relators freely and cyclically reduced, trivial ones dropped and
    /// duplicates up to rotation and inversion removed. The first occurrence
    /// (and its label) is kept.
    pub fn normalize(&self) -> Presentation {
        let mut seen = BTreeSet::new();
        let mut relations = Vec::new();
        for (w, label) in self.labelled_relators() {
            let c = w.cyclically_reduced();
            if c.is_identity() {
                continue;
            }
            if seen.insert(c.cyclic_canonical()) {
                relations.push(Relation {
                    sides: vec![c],
                    label,
                });
            }
        }
        Presentation {
            generators: self.generators.clone(),
            relations,
        }
    }

    /// Quotient by extra relations (equations become `w₁·w₂⁻¹`), normalized.
    pub fn quotient(&self, extra: &[Relation]) -> Result<Presentation> {
        let mut relations = self.relations.clone();
        for r in extra {
            for s in &r.sides {
                s.check_over(&self.generators, "presentation's generators")?;
            }
            relations.push(r.clone());
        }
        Ok(Presentation {
            generators: self.generators.clone(),
            relations,
        }
        .normalize())
    }

    /// Quotient by plain relators.
    pub fn quotient_add_relators(&self, extra: &[Word]) -> Result<Presentation> {
        let rels: Vec<Relation> = extra.iter().cloned().map(Relation::relator).collect();
        self.quotient(&rels)
    }

    /// The index-2 kernel of `p/⟨⟨d²⟩⟩ → Z₂` (`d ↦ 1`, other generators `↦ 0`),
    /// before normalization.
    ///
    /// Coset representatives are `{1, d}`. The Schreier generator for coset
    /// `1` and `x ≠ d` is `x`; for coset `d` it is `d x d⁻¹ = x̄` (named
    /// `x` + `b`); the pairs involving `d` itself give `1` and `d² = 1`.
    /// Each relator contributes its rewrite from coset `1` and from coset
    /// `d`, so the output has `2(n−1)` generators and `2r` relators.
    pub fn double_cover_raw(&self, d: &Generator) -> Result<Presentation> {
        if !self.generators.contains(d) {
            return Err(Error::UnknownGenerator {
                generator: d.to_string(),
                context: "presentation's generators".into(),
            });
        }
        let mut gens = Vec::new();
        let mut bar = BTreeMap::new();
        for g in &self.generators {
            if g == d {
                continue;
            }
            let b = g.barred();
            if self.generators.contains(&b) {
                return Err(Error::Domain(format!(
                    "barred name `{b}` of `{g}` clashes with an existing generator"
                )));
            }
            gens.push(g.clone());
            gens.push(b.clone());
            bar.insert(g.clone(), b);
        }
        let mut relations = Vec::new();
        for (w, label) in self.labelled_relators() {
            if w.exponent_sum(d).rem_euclid(2) != 0 {
                return Err(Error::Domain(format!(
                    "relator `{w}` has odd exponent sum in `{d}`; the map to Z2 is not defined"
                )));
            }
            for start in [false, true] {
                let mut coset = start;
                let mut raw = Vec::with_capacity(w.len());
                for l in w.letters() {
                    if &l.generator == d {
                        coset = !coset;
                        continue;
                    }
                    let g = if coset {
                        bar[&l.generator].clone()
                    } else {
                        l.generator.clone()
                    };
                    raw.push(Letter::new(g, l.inverse));
                }
                let lab = match (&label, start) {
                    (Some(l), false) => Some(l.clone()),
                    (Some(l), true) => Some(format!("{l} (bar)")),
                    (None, _) => None,
                };
                relations.push(Relation {
                    sides: vec![Word::from_letters(raw)],
                    label: lab,
                });
            }
        }
        Ok(Presentation {
            generators: gens,
            relations,
        })
    }

    /// [`Presentation::double_cover_raw`] followed by normalization.
    pub fn double_cover(&self, d: &Generator) -> Result<Presentation> {
        Ok(self.double_cover_raw(d)?.normalize())
    }

    /// Tietze elimination of `g` via `g = defining`.
    ///
    /// The definition relator is added first, so when it is already a
    /// consequence of the relators the group is unchanged; otherwise the
    /// result presents the quotient by that definition. Every relator is
    /// rewritten by substituting `defining` for `g`.
    pub fn eliminate_generator(&self, g: &Generator, defining: &Word) -> Result<Presentation> {
        let pos = self
            .generator_index(g)
            .ok_or_else(|| Error::UnknownGenerator {
                generator: g.to_string(),
                context: "presentation's generators".into(),
            })?;
        if defining.generators().contains(g) {
            return Err(Error::Domain(format!(
                "definition of `{g}` mentions `{g}` itself"
            )));
        }
        defining.check_over(&self.generators, "presentation's generators")?;
        let mut assignment: Assignment = crate::word::identity_assignment(&self.generators);
        assignment.insert(g.clone(), defining.clone());
        let mut generators = self.generators.clone();
        generators.remove(pos);
        let mut relations = Vec::new();
        for (w, label) in self.labelled_relators() {
            relations.push(Relation {
                sides: vec![w.substitute(&assignment)?],
                label,
            });
        }
        Ok(Presentation {
            generators,
            relations,
        }
        .normalize())
    }

    /// Whether some relator equals `w` up to rotation and inversion.
    pub fn contains_relator(&self, w: &Word) -> bool {
        let c = w.cyclic_canonical();
        self.relators().iter().any(|r| r.cyclic_canonical() == c)
    }

    /// Relabels generators; used to move between naming schemes.
    pub fn rename(&self, map: &BTreeMap<Generator, Generator>) -> Result<Presentation> {
        let gens = self
            .generators
            .iter()
            .map(|g| map.get(g).cloned().unwrap_or_else(|| g.clone()))
            .collect();
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                sides: r.sides.iter().map(|s| s.rename(map)).collect(),
                label: r.label.clone(),
            })
            .collect();
        Presentation::new(gens, rels)
    }

    /// Substitutes an expression for each generator, producing a presentation
    /// on `new_generators`.
    pub fn change_generators(
        &self,
        new_generators: Vec<Generator>,
        assignment: &Assignment,
    ) -> Result<Presentation> {
        let mut relations = Vec::new();
        for (w, label) in self.labelled_relators() {
            relations.push(Relation {
                sides: vec![w.substitute(assignment)?],
                label,
            });
        }
        Presentation::new(new_generators, relations)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_relators;
    use crate::word::gen;

    fn w(s: &str) -> Word {
        crate::notation::parse_word(s).unwrap()
    }

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let mut rs = Vec::new();
        for r in rels {
            rs.extend(parse_relators(r).unwrap());
        }
        Presentation::from_relators(gens, rs).unwrap()
    }

    #[test]
    fn normalize_drops_trivial_and_duplicates() {
        let p = Presentation::from_relators(
            &["a", "b", "c"],
            vec![
                w("a a^-1"),
                w("a b c"),
                w("b c a"),
                w("a b"),
                w("b^-1 a^-1"),
            ],
        )
        .unwrap();
        let n = p.normalize();
        assert_eq!(n.relators(), vec![w("a b c"), w("a b")]);
    }

    #[test]
    fn quotient_of_free_cyclic() {
        let p = pres(&["d"], &[]);
        let q = p.quotient_add_relators(&[w("d^2")]).unwrap();
        assert_eq!(q.relators(), vec![w("d d")]);
    }

    #[test]
    fn quotient_equation_then_eliminate() {
        let p = pres(&["a", "b"], &[]);
        let q = p.quotient(&[Relation::equation(w("a"), w("b"))]).unwrap();
        assert_eq!(q.relators(), vec![w("a b^-1")]);
        let e = q.eliminate_generator(&gen("b"), &w("a")).unwrap();
        assert_eq!(e.generators(), &[gen("a")]);
        assert!(e.relators().is_empty());
    }

    #[test]
    fn eliminate_simple() {
        let p = pres(&["a", "b"], &["b a^-2"]);
        let e = p.eliminate_generator(&gen("b"), &w("a^2")).unwrap();
        assert_eq!(e.generators(), &[gen("a")]);
        assert!(e.relators().is_empty());
    }

    #[test]
    fn eliminate_rejects_self_reference() {
        let p = pres(&["a", "b"], &[]);
        assert!(p.eliminate_generator(&gen("b"), &w("a b")).is_err());
        assert!(p.eliminate_generator(&gen("x"), &w("a")).is_err());
    }

    #[test]
    fn double_cover_commuting_pair() {
        let p = pres(&["a", "d"], &["[a, d]"]);
        let dc = p.double_cover(&gen("d")).unwrap();
        assert_eq!(dc.generators(), &[gen("a"), gen("ab")]);
        // a^-1 ab  and its bar: both say ab = a
        for r in dc.relators() {
            assert_eq!(r.cyclic_canonical(), w("a^-1 ab").cyclic_canonical());
        }
    }

    #[test]
    fn double_cover_braid_relation_of_cusp() {
        let p = pres(&["a", "d"], &["(a d)^3 = (d a)^3"]);
        let raw = p.double_cover_raw(&gen("d")).unwrap();
        assert_eq!(raw.generators().len(), 2);
        assert_eq!(raw.relators().len(), 2);
        let dc = raw.normalize();
        assert_eq!(dc.relators().len(), 1);
        let target = parse_relators("a ab a = ab a ab").unwrap().remove(0);
        assert!(dc.contains_relator(&target));
    }

    #[test]
    fn double_cover_free() {
        let p = pres(&["a", "d"], &[]);
        let dc = p.double_cover(&gen("d")).unwrap();
        assert_eq!(dc.generators().len(), 2);
        assert!(dc.relators().is_empty());
    }

    #[test]
    fn double_cover_errors() {
        let p = pres(&["a", "d"], &["a d"]);
        assert!(p.double_cover(&gen("d")).is_err());
        assert!(p.double_cover(&gen("x")).is_err());
    }

    #[test]
    fn unknown_generator_in_relator() {
        let r = Presentation::from_relators(&["a"], vec![w("a b")]);
        assert!(matches!(r, Err(Error::UnknownGenerator { .. })));
    }

    #[test]
    fn text_round_trip() {
        let text =
            "gens: a ab b bb g gb d\ng b g = b g a  # r1\na ab a ab^-1 a^-1 ab^-1\nd d = 1\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.to_text(), text);
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn parse_skips_comments_and_rejects_garbage() {
        let p = Presentation::parse("# header\n\ngens: u v\nu u\n# c\nv v v\n").unwrap();
        assert_eq!(p.relators().len(), 2);
        assert!(Presentation::parse("u u\n").is_err());
        assert!(Presentation::parse("gens: u\nu^2\n").is_err());
        assert!(Presentation::parse("gens: u\nu = \n").is_err());
    }
}
