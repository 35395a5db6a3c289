//! Transcribed case data: curves, sections, generator orderings, relation
//! sets, perturbation rules and the invariants expected of each case.
//!
//! Relations are stored as text in the extended notation of
//! [`crate::notation`]; barred generators carry a `b` suffix (`ab` is ᾱ,
//! `gb` is γ̄). The registry is built once and never mutated.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braid::Braid;
use crate::error::{Error, Result};
use crate::invariants::{Z2Z3Assignment, Z2Z3Word};
use crate::notation::{parse_chain, parse_word};
use crate::presentation::{Presentation, Relation};
use crate::word::{Generator, Word};

/// Claimed isomorphism type of a fundamental group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupTag {
    /// The reduced braid group `B₃/(σ₁σ₂)³ ≅ Z₂*Z₃`.
    #[serde(rename = "RB3")]
    Rb3,
    #[serde(rename = "Z6")]
    Z6,
    /// Abelian, hence `Z₆` for an irreducible sextic.
    #[serde(rename = "ABELIAN")]
    Abelian,
    /// `⟨α,β | (αβ)³=(βα)³, (αβα)²=1⟩`.
    #[serde(rename = "D4P")]
    D4P,
    /// `⟨α,ᾱ,δ | αᾱα=ᾱαᾱ, [α,δ]=[ᾱ,δ]=1, α²ᾱ²δ²=1⟩`.
    #[serde(rename = "MINIMAL")]
    Minimal,
    #[serde(rename = "OTHER")]
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationGroup {
    pub label: String,
    pub relations: Vec<String>,
}

/// Coefficients `(a, b, c)` of `y = ax² + bx + c`, as field-element text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionRecord {
    pub coeffs: [String; 3],
    /// Minimal polynomial of the coefficient field, `x` for `Q`.
    pub field: String,
    /// For `B2'+L`: the section `L̄` that joins `B̄₂'` in the trigonal curve.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub component: Option<[String; 3]>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidRecord {
    pub name: String,
    /// Braid syntax; `m·k⁻¹` products are written out token by token.
    pub word: String,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub printed_relation: Option<String>,
    pub anchor: String,
}

/// Steps turning the printed `π̄₁` into the presentation whose double cover
/// is compared with the printed `π₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum PreStep {
    /// Tietze elimination `generator = by`.
    Eliminate { generator: String, by: String },
    /// Replace `generator` by `image`, written over `new_generator`.
    Substitute {
        generator: String,
        new_generator: String,
        image: String,
    },
    /// Quotient by `generator = 1`.
    Kill { generator: String },
}

/// How the derived `π₁` is expected to compare with the printed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedMatch {
    /// Relator sets agree up to cyclic reduction and inversion.
    Exact,
    /// The printed set was simplified by hand; only invariants agree.
    Invariants,
    /// No complete `π̄₁` is printed.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub tag: GroupTag,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub abelianization: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s3_epi: Option<bool>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    /// Set of singularities of the sextic.
    pub singularities: String,
    /// `B1`, `B2` or `B2'+L`.
    pub curve_id: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub section: Option<SectionRecord>,
    /// The basis `(η₁, η₂, η₃, η₄)`.
    pub generator_ordering: Vec<String>,
    pub pibar_relations: Vec<RelationGroup>,
    /// Case whose `π̄₁` is reused, when not printed again.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pibar_source: Option<String>,
    pub preprocessing: Vec<PreStep>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distinguished_generator: Option<String>,
    pub pi1_generators: Vec<String>,
    pub pi1_relations: Vec<RelationGroup>,
    pub derived_match: DerivedMatch,
    pub braids: Vec<BraidRecord>,
    /// Generator images in `Z₂*Z₃`; `s1`, `s2` denote `σ₁`, `σ₂`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rb3_assignment: Option<BTreeMap<String, String>>,
    pub expected: Expected,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub id: String,
    pub case: String,
    /// Set of singularities after the perturbation.
    pub result: String,
    /// Each instance maps slots `g1..g4` to words and instantiates the
    /// selected templates once.
    pub instances: Vec<BTreeMap<String, String>>,
    /// Indices of the templates used; all when absent.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub templates: Option<Vec<usize>>,
    pub expected: Expected,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rb3_assignment: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationRule {
    pub id: String,
    /// Relation templates over the slots `g1..g4`.
    pub local_relators: Vec<String>,
    pub slot_bindings: Vec<Binding>,
    pub anchor: String,
    pub notes: Vec<String>,
}

/// A named presentation that is not itself a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub id: String,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Registry {
    pub cases: Vec<CaseRecord>,
    pub rules: Vec<PerturbationRule>,
    pub groups: Vec<GroupRecord>,
}

fn s(x: &str) -> String {
    x.to_string()
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| s(x)).collect()
}

fn groups(gs: &[&[&str]]) -> Vec<RelationGroup> {
    gs.iter()
        .enumerate()
        .map(|(i, rs)| RelationGroup {
            label: format!("r{}", i + 1),
            relations: strs(rs),
        })
        .collect()
}

fn rb3(s1: &[&str], s2: &[&str]) -> BTreeMap<String, String> {
    s1.iter()
        .map(|g| (s(g), s("s1")))
        .chain(s2.iter().map(|g| (s(g), s("s2"))))
        .collect()
}

fn slots(words: &[&str]) -> BTreeMap<String, String> {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| (format!("g{}", i + 1), s(w)))
        .collect()
}

fn expected(tag: GroupTag, ab: Option<&str>, s3: Option<bool>, anchor: &str) -> Expected {
    Expected {
        tag,
        abelianization: ab.map(s),
        s3_epi: s3,
        anchor: s(anchor),
    }
}

fn section(a: &str, b: &str, c: &str, anchor: &str) -> Option<SectionRecord> {
    Some(SectionRecord {
        coeffs: [s(a), s(b), s(c)],
        field: s("x"),
        component: None,
        anchor: s(anchor),
    })
}

/// The ramification section `L̄' = {y = l(x)}` with `L̄` joining `B̄₂'`.
fn swapped(a: &str, b: &str, c: &str) -> Option<SectionRecord> {
    Some(SectionRecord {
        coeffs: [s("-1"), s("3/2"), s("3/16")],
        field: s("x"),
        component: Some([s(a), s(b), s(c)]),
        anchor: s("B = Dbl((B2' + L), L')"),
    })
}

struct CaseBuilder(CaseRecord);

impl CaseBuilder {
    fn new(id: &str, singularities: &str, curve_id: &str, tag: Expected) -> Self {
        CaseBuilder(CaseRecord {
            id: s(id),
            singularities: s(singularities),
            curve_id: s(curve_id),
            section: None,
            generator_ordering: Vec::new(),
            pibar_relations: Vec::new(),
            pibar_source: None,
            preprocessing: Vec::new(),
            distinguished_generator: None,
            pi1_generators: Vec::new(),
            pi1_relations: Vec::new(),
            derived_match: DerivedMatch::Unchecked,
            braids: Vec::new(),
            rb3_assignment: None,
            expected: tag,
            notes: Vec::new(),
        })
    }

    fn section(mut self, sec: Option<SectionRecord>) -> Self {
        self.0.section = sec;
        self
    }

    fn ordering(mut self, o: &[&str]) -> Self {
        self.0.generator_ordering = strs(o);
        self
    }

    fn pibar(mut self, gs: &[&[&str]]) -> Self {
        self.0.pibar_relations = groups(gs);
        self
    }

    fn pibar_from(mut self, id: &str) -> Self {
        self.0.pibar_source = Some(s(id));
        self
    }

    fn pre(mut self, steps: Vec<PreStep>) -> Self {
        self.0.preprocessing = steps;
        self
    }

    fn cover(mut self, d: &str, m: DerivedMatch) -> Self {
        self.0.distinguished_generator = Some(s(d));
        self.0.derived_match = m;
        self
    }

    fn derived(mut self, m: DerivedMatch) -> Self {
        self.0.derived_match = m;
        self
    }

    fn pi1(mut self, gens: &[&str], gs: &[&[&str]]) -> Self {
        self.0.pi1_generators = strs(gens);
        self.0.pi1_relations = groups(gs);
        self
    }

    fn rb3(mut self, a: BTreeMap<String, String>) -> Self {
        self.0.rb3_assignment = Some(a);
        self
    }

    fn braid(mut self, name: &str, word: &str, printed: Option<&str>, anchor: &str) -> Self {
        self.0.braids.push(BraidRecord {
            name: s(name),
            word: s(word),
            basis: self.0.generator_ordering.clone(),
            printed_relation: printed.map(s),
            anchor: s(anchor),
        });
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.0.notes.push(s(n));
        self
    }

    fn build(self) -> CaseRecord {
        self.0
    }
}

const TORUS_REDUCIBLE: &str = "reducible sextic of torus type";

/// Relations of the group of `Σ₂ ∖ (B̄ ∪ L̄ ∪ E)` shared by two cases on
/// horizontal sections through `R₁`.
const E6_A3_RELATIONS: [&[&str]; 5] = [
    &["(a b)^3 = (b a)^3"],
    &["(a b) a (a b)^-1 = g"],
    &["[d, a b a^-1]"],
    &["[g d, b]", "[b g d, g]", "[b g, d]"],
    &["(a b g d)^2"],
];

fn cases() -> Vec<CaseRecord> {
    use DerivedMatch::*;
    use GroupTag::*;
    vec![
        CaseBuilder::new(
            "a17+a2",
            "(A17) + A2",
            "B1",
            expected(Rb3, Some("Z6"), Some(true), "π₁(ℂp²∖B) = B̄₃ for (A17) + A2"),
        )
        .section(section("-8", "16/3", "0", "inflection section, t = 1/2"))
        .ordering(&["a", "d", "b", "g"])
        .pibar(&[
            &["(b g)^-1 g (b g) = a"],
            &["(d b g b) g (d b g b)^-1 = a"],
            &["(a d)^3 = (d a)^3"],
            &["(d a d)^-1 a (d a d) = b"],
            &["[(a d)^-1 d (a d), b g b^-1]"],
            &["(a d b g)^2"],
        ])
        .cover("d", Exact)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["g b g = b g a", "gb bb gb = bb gb ab"],
                &["b g b g = ab b g b", "bb gb bb gb = a bb gb bb"],
                &["a ab a = ab a ab"],
                &["ab^-1 a ab = b", "a^-1 ab a = bb"],
                &["(a bb) gb (a bb)^-1 = (ab b) g (ab b)^-1"],
                &["a bb gb ab b g"],
            ],
        )
        .braid(
            "m+",
            "s3^3 s2 s1 s2^-1 s3^-3",
            None,
            "monodromy about P+ for the inflection section",
        )
        .rb3(rb3(&["a", "ab", "b", "bb"], &["g", "gb"]))
        .build(),
        CaseBuilder::new(
            "2a8+a3",
            "(2A8) + A3",
            "B1",
            expected(Rb3, Some("Z6"), Some(true), "π₁(ℂp²∖B) = B̄₃ for (2A8) + A3"),
        )
        .section(Some(SectionRecord {
            coeffs: [s("[0,-28/27]/x^3+4"), s("[0,0,16/81]/x^3+4"), s("256/243")],
            field: s("x^3+4"),
            component: None,
            anchor: s("quadruple section, δ = θ/2, θ³ = -4"),
        }))
        .ordering(&["d", "a", "b", "g"])
        .pibar(&[
            &["(b g)^-1 g (b g) = (d a)^-1 a (d a)"],
            &["(b g b) g (b g b)^-1 = d a d^-1"],
            &["a = b"],
            &["(a d)^4 = (d a)^4"],
            &["[a^-1 d a, g^-1 b g]"],
            &["[b^-1 d b, g b g^-1]"],
            &["(d a b g)^2"],
        ])
        .pre(vec![
            PreStep::Eliminate {
                generator: s("a"),
                by: s("b"),
            },
            PreStep::Substitute {
                generator: s("d"),
                new_generator: s("d1"),
                image: s("b d1 b^-1"),
            },
        ])
        .cover("d1", Invariants)
        .pi1(
            &["b", "bb", "g", "gb"],
            &[
                &["g b g = b g bb", "gb bb gb = bb gb b"],
                &["g b g = bb g b", "gb bb gb = b gb bb"],
                &["(b bb)^2 = (bb b)^2"],
                &["g bb gb = b g b", "gb b g = bb gb bb"],
                &["gb bb g = b g b", "g b gb = bb gb bb"],
                &["b g b bb gb bb"],
            ],
        )
        .braid(
            "m",
            "s2^-1 s3^-1 s2 FULLTWIST s1^-4 s3^-4",
            None,
            "monodromy along the loop around the upper half-plane",
        )
        .braid(
            "m+",
            "s3^3 s1^2 s2 s1^-2 s3^-3",
            None,
            "monodromy about P+ for the quadruple section",
        )
        .braid(
            "n+",
            "s2^-1 s3^-1 s2 FULLTWIST s1^-4 s3^-4 s3^3 s1^2 s2^-1 s1^-2 s3^-3",
            Some("d a g^-1 b g a^-1 d a g^-1 b g a^-1 d^-1 = d"),
            "n+ = m m+^-1, monodromy about Q+",
        )
        .rb3(rb3(&["b", "bb"], &["g", "gb"]))
        .note("the printed relations were simplified by hand; compared through invariants")
        .build(),
        CaseBuilder::new(
            "a11+3a2",
            "(A11 + 2A2) + A2 + 2A1",
            "B2",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(section("27", "-9/2", "-1/16", "inflection tangent to B2' and through R5"))
        .ordering(&["a", "b", "d", "g"])
        .pibar(&[
            &["d (a b)^3 = (b a b) d (a b a)"],
            &["[d, a b]"],
            &["[(b a b d)^-1 a (b a b d), g]"],
            &["(g d)^3 = (d g)^3"],
            &["b = (d g d) g (d g d)^-1"],
            &["[b^-1 a b, (d g) d (d g)^-1]"],
            &["(a b d g)^2"],
        ])
        .cover("d", Exact)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["(a b)^3 = bb ab bb a b a", "(ab bb)^3 = b a b ab bb ab"],
                &["a b = ab bb"],
                &[
                    "[(b a b)^-1 a (b a b), gb]",
                    "[(bb ab bb)^-1 ab (bb ab bb), g]",
                ],
                &["g gb g = gb g gb"],
                &["b = gb g gb^-1", "bb = g gb g^-1"],
                &["(bb g)^-1 ab bb g = (b gb)^-1 a b gb"],
                &["a b gb ab bb g"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "2a5+2a2+d5",
            "(2A5 + 2A2) + D5",
            "B2'+L",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(swapped("27", "-9/2", "-1/16"))
        .ordering(&["a", "b", "d", "g"])
        .pibar_from("a11+3a2")
        .cover("a", Invariants)
        .pi1(
            &["b", "bb", "d", "db", "g", "gb"],
            &[
                &["db b bb b = d bb b bb"],
                &["db b = b d", "d bb = bb db"],
                &["(b bb db) gb (b bb db)^-1 = (bb b d) g (bb b d)^-1"],
                &["(g d)^3 = (d g)^3", "(gb db)^3 = (db gb)^3"],
                &[
                    "b = (d g d) g (d g d)^-1",
                    "bb = (db gb db) gb (db gb db)^-1",
                ],
                &["(b d g) d (b d g)^-1 = (bb db gb) db (bb db gb)^-1"],
                &["bb db gb b d g"],
            ],
        )
        .note("the double cover is taken over α, so x̄ = α x α")
        .note("the first printed relation was simplified by hand using the second; compared through invariants")
        .build(),
        CaseBuilder::new(
            "a11+2a2+d4",
            "(A11 + 2A2) + D4",
            "B2",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(section("1/3", "-11/6", "15/16", "through R5 and tangent to B2' at R1"))
        .ordering(&["a", "b", "d", "g"])
        .pibar(&[
            &["d (a b)^3 = (b a b) d (a b a)"],
            &["[d, a b]"],
            &["b (d g)^2 = g b d g d"],
            &["[b, d g]"],
            &["(b a b d)^-1 a (b a b d) = g"],
            &["[a, g^-1 d g]"],
            &["(a b d g)^2"],
        ])
        .cover("d", Exact)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["(a b)^3 = bb ab bb a b a", "(ab bb)^3 = b a b ab bb ab"],
                &["a b = ab bb"],
                &["b gb g = g b gb", "bb g gb = gb bb g"],
                &["b gb = gb bb", "bb g = g b"],
                &[
                    "(b a b)^-1 a (b a b) = gb",
                    "(bb ab bb)^-1 ab (bb ab bb) = g",
                ],
                &["a g^-1 gb = g^-1 gb ab", "ab gb^-1 g = gb^-1 g a"],
                &["a b gb ab bb g"],
            ],
        )
        .note("the D4 point may be perturbed to A3 along any subdiagram A3 of D4; only the choice making β and γ equal is stored")
        .build(),
        CaseBuilder::new(
            "a11+e6",
            "(E6 + A11) + 2A1",
            "B2",
            expected(
                D4P,
                Some("Z + Z2"),
                Some(true),
                "π₁ is obtained from the central extension by letting δ = 1",
            ),
        )
        .section(section("0", "0", "1/2", "y = 1/2, through R5 and tangent at R∞"))
        .ordering(&["a", "b", "d", "g"])
        .pibar(&[
            &["(a b)^3 = (b a)^3"],
            &["[a, d]", "[b, d]"],
            &["(a b a)^2 d^2"],
        ])
        .pre(vec![PreStep::Kill { generator: s("d") }])
        .derived(Exact)
        .pi1(&["a", "b"], &[&["(a b)^3 = (b a)^3"], &["(a b a)^2"]])
        .note("π̄₁ is stored after eliminating γ = (βα)⁻¹α(βα); the printed fiber relations are [δ,β] and [δ,αβ]")
        .build(),
        CaseBuilder::new(
            "2a5+e6+a3",
            "(E6 + 2A5) + A3",
            "B2",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(section("0", "0", "-3/2", "y = -3/2, through R1 and tangent at R∞"))
        .ordering(&["a", "b", "g", "d"])
        .pibar(&E6_A3_RELATIONS)
        .cover("d", Invariants)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["(a b)^3 = (b a)^3", "(ab bb)^3 = (bb ab)^3"],
                &["(a b) a (a b)^-1 = g", "(ab bb) ab (ab bb)^-1 = gb"],
                &["a b a^-1 = ab bb ab^-1"],
                &["g bb = b g = bb gb = gb b"],
                &["a b g ab bb gb"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "3a5+d4",
            "(3A5) + D4",
            "B2",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(section("0", "-1/3", "-3/4", "through R∞ and tangent to B2' at R1"))
        .ordering(&["a", "b", "g", "d"])
        .pibar(&[
            E6_A3_RELATIONS[0],
            E6_A3_RELATIONS[1],
            E6_A3_RELATIONS[2],
            &["[b, g d]", "d b g d g = b g d g d"],
            E6_A3_RELATIONS[4],
        ])
        .cover("d", Exact)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["(a b)^3 = (b a)^3", "(ab bb)^3 = (bb ab)^3"],
                &["(a b) a (a b)^-1 = g", "(ab bb) ab (ab bb)^-1 = gb"],
                &["a b a^-1 = ab bb ab^-1"],
                &["b g = g bb", "bb gb = gb b", "bb gb g = b g gb"],
                &["a b g ab bb gb"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "a11+a5+a3",
            "(A11 + A5) + A3",
            "B2",
            expected(Other, None, Some(true), TORUS_REDUCIBLE),
        )
        .section(section("0", "-1", "3/4", "through P1, P5 and R∞"))
        .ordering(&["a", "b", "d", "g"])
        .pibar(&[
            &["[b, d g]", "[d, g b]", "[g, b d]"],
            &["[d, a b]"],
            &["d (a b)^3 = b a b d a b a"],
            &["(b a b d)^-1 a (b a b d) = g"],
            &["(a b d g)^2"],
        ])
        .cover("d", Invariants)
        .pi1(
            &["a", "ab", "b", "bb", "g", "gb"],
            &[
                &["bb g = g b = gb bb = b gb"],
                &["a b = ab bb"],
                &["(a b)^3 = bb ab bb a b a = b a b ab bb ab"],
                &["(b a)^-1 a (b a) = g", "(bb ab)^-1 ab (bb ab) = gb"],
                &["g a b gb ab bb"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "2e7+d5",
            "2E7 + D5",
            "B2'+L",
            expected(
                Minimal,
                Some("Z + Z2"),
                Some(true),
                "α²ᾱ²δ² = 1; central extension of A4 by ⟨δ⟩",
            ),
        )
        .section(swapped("0", "0", "1/2"))
        .ordering(&["a", "b", "d", "g"])
        .pibar_from("a11+e6")
        .cover("b", Invariants)
        .pi1(
            &["a", "ab", "d"],
            &[
                &["a ab a = ab a ab"],
                &["[a, d]", "[ab, d]"],
                &["a^2 ab^2 d^2"],
            ],
        )
        .note("the cover yields δ̄ = δ, which the printed presentation has already eliminated")
        .build(),
        CaseBuilder::new(
            "2e7+a3+a2",
            "2E7 + A3 + A2",
            "B2'+L",
            expected(Other, None, Some(true), "factors to the minimal group"),
        )
        .section(swapped("0", "0", "-3/2"))
        .ordering(&["a", "b", "g", "d"])
        .pibar_from("2a5+e6+a3")
        .cover("b", Invariants)
        .pi1(
            &["a", "ab", "g", "gb", "d", "db"],
            &[
                &["a ab a = ab a ab"],
                &["a ab a^-1 = g", "ab a ab^-1 = gb"],
                &["a^-1 d a = ab^-1 db ab"],
                &["d gb = g d = gb db = db g"],
                &["g d a gb db ab"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "2e7+a2+3a1",
            "2E7 + A2 + 3A1",
            "B2'+L",
            expected(Other, None, None, "only the symmetric perturbation E7 → A6 is considered"),
        )
        .section(swapped("0", "0", "3/4"))
        .ordering(&["a", "d", "b", "g"])
        .note("no relations are printed; perturbing both E7 points to A6 gives α = δ = β and the monodromy about R1 gives [β, γ] = 1, so the group of 2A6 + A2 + 3A1 is abelian")
        .build(),
        CaseBuilder::new(
            "2d5+a7+a2",
            "2D5 + A7 + A2",
            "B2'+L",
            expected(Other, None, Some(true), "factors to the minimal group"),
        )
        .section(swapped("0", "-1/3", "-3/4"))
        .ordering(&["a", "b", "g", "d"])
        .pibar_from("3a5+d4")
        .cover("b", Exact)
        .pi1(
            &["a", "ab", "g", "gb", "d", "db"],
            &[
                &["a ab a = ab a ab"],
                &["a ab a^-1 = g", "ab a ab^-1 = gb"],
                &["a^-1 d a = ab^-1 db ab"],
                &["g d = gb db", "db g d g = (g d)^2", "d gb db gb = (gb db)^2"],
                &["g d a gb db ab"],
            ],
        )
        .build(),
        CaseBuilder::new(
            "3d5+a3",
            "3D5 + A3",
            "B2'+L",
            expected(Other, None, Some(true), "factors to the minimal group"),
        )
        .section(swapped("0", "-1", "3/4"))
        .ordering(&["a", "b", "d", "g"])
        .pibar_from("a11+a5+a3")
        .cover("b", Invariants)
        .pi1(
            &["a", "ab", "g", "gb", "d", "db"],
            &[
                &["d g = db gb = g db = gb d"],
                &["d a = a db", "db ab = ab d"],
                &["d a ab a = db ab a ab"],
                &["a^-1 ab a = g", "ab^-1 a ab = gb"],
                &["d g a db gb ab"],
            ],
        )
        .build(),
    ]
}

struct RuleBuilder(PerturbationRule);

impl RuleBuilder {
    fn new(id: &str, templates: &[&str], anchor: &str) -> Self {
        RuleBuilder(PerturbationRule {
            id: s(id),
            local_relators: strs(templates),
            slot_bindings: Vec::new(),
            anchor: s(anchor),
            notes: Vec::new(),
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn bind(
        mut self,
        id: &str,
        case: &str,
        result: &str,
        instances: Vec<BTreeMap<String, String>>,
        templates: Option<Vec<usize>>,
        expected: Expected,
        rb3_assignment: Option<BTreeMap<String, String>>,
    ) -> Self {
        self.0.slot_bindings.push(Binding {
            id: s(id),
            case: s(case),
            result: s(result),
            instances,
            templates,
            expected,
            rb3_assignment,
        });
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.0.notes.push(s(n));
        self
    }

    fn build(self) -> PerturbationRule {
        self.0
    }
}

const CYCLIC: [&str; 1] = ["g1 = g2 = g3 = g4"];

fn rules() -> Vec<PerturbationRule> {
    use GroupTag::*;
    let torus = |anchor: &str| expected(Rb3, Some("Z6"), Some(true), anchor);
    let abelian = |anchor: &str| expected(Abelian, Some("Z6"), Some(false), anchor);
    let a_s1_rest_s2 = || rb3(&["a", "ab"], &["b", "bb", "g", "gb"]);
    vec![
        RuleBuilder::new(
            "A11→A8+A2",
            &["g1 g2 g1 = g2 g1 g2"],
            "A11 perturbs to A8 + A2 (torus type) with local group B̄₃",
        )
        .bind(
            "default",
            "a11+3a2",
            "(A8 + 3A2) + A2 + 2A1",
            vec![slots(&["a", "b"])],
            None,
            torus("adds the braid relation αβα = βαβ"),
            Some(a_s1_rest_s2()),
        )
        .bind(
            "default",
            "a11+2a2+d4",
            "(A8 + 3A2) + D4",
            vec![slots(&["a", "b"])],
            None,
            torus("adds a braid relation αβα = βαβ"),
            Some(a_s1_rest_s2()),
        )
        .bind(
            "default",
            "a11+e6",
            "(E6 + A8 + A2) + 2A1",
            vec![slots(&["a", "b"])],
            None,
            torus("the additional relation is αβα = βαβ"),
            Some(rb3(&["a"], &["b"])),
        )
        .build(),
        RuleBuilder::new(
            "A11→A10",
            &CYCLIC,
            "A11 perturbs to A10 or A6 + A4 with cyclic local group",
        )
        .bind(
            "default",
            "a11+3a2",
            "A10 + 3A2 + 2A1",
            vec![slots(&["a", "ab", "b", "bb"])],
            None,
            abelian("introduces α = ᾱ = β = β̄"),
            None,
        )
        .bind(
            "default",
            "a11+2a2+d4",
            "D4 + A10 + 2A2",
            vec![slots(&["a", "ab", "b", "bb"])],
            None,
            abelian("adding the relation α = ᾱ = β = β̄"),
            None,
        )
        .bind(
            "default",
            "a11+e6",
            "E6 + A10 + 2A1",
            vec![slots(&["a", "b", "a", "b"])],
            None,
            abelian("adding the relation α = β"),
            None,
        )
        .bind(
            "default",
            "a11+a5+a3",
            "A10 + A5 + A3",
            vec![slots(&["a", "ab", "b", "bb"])],
            None,
            abelian("add the relations α = ᾱ = β = β̄"),
            None,
        )
        .build(),
        RuleBuilder::new(
            "A5→A4",
            &CYCLIC,
            "A5 perturbs to 2A2 (torus type) or A4 with cyclic local group",
        )
        .bind(
            "default",
            "2a5+2a2+d5",
            "D5 + A5 + A4 + 2A2",
            vec![slots(&["d", "g", "d", "g"])],
            None,
            abelian("introduces the relation δ = γ"),
            None,
        )
        .bind(
            "default",
            "2a5+e6+a3",
            "E6 + A5 + A4 + A3",
            vec![slots(&["a", "b", "a", "b"])],
            None,
            abelian("adds the relation α = β"),
            None,
        )
        .bind(
            "twice",
            "3a5+d4",
            "D4 + A5 + 2A4",
            vec![
                slots(&["a", "b", "a", "b"]),
                slots(&["ab", "bb", "ab", "bb"]),
            ],
            None,
            abelian("the extra relations are α = β and ᾱ = β̄"),
            None,
        )
        .bind(
            "default",
            "a11+a5+a3",
            "A11 + A4 + A3",
            vec![slots(&["a", "g^-1 gb ab gb^-1 g", "g", "g^-1 gb g"])],
            None,
            abelian("adding the relations α = γ⁻¹γ̄ᾱγ̄⁻¹γ = γ = γ⁻¹γ̄γ"),
            None,
        )
        .build(),
        RuleBuilder::new(
            "A7→A6",
            &CYCLIC,
            "A7 perturbs to A6 or A4 + A2 with cyclic local group",
        )
        .bind(
            "default",
            "2d5+a7+a2",
            "2D5 + A6 + A2",
            vec![slots(&["g", "gb", "d", "db"])],
            None,
            abelian("add the relations γ = γ̄ = δ = δ̄"),
            None,
        )
        .build(),
        RuleBuilder::new(
            "A3→A2",
            &CYCLIC,
            "A3 perturbs to A2 with cyclic local group",
        )
        .bind(
            "default",
            "2e7+a3+a2",
            "2E7 + 2A2",
            vec![slots(&["g", "gb", "d", "db"])],
            None,
            abelian("adds the relation γ = γ̄ = δ = δ̄"),
            None,
        )
        .bind(
            "default",
            "3d5+a3",
            "3D5 + A2",
            vec![slots(&["g", "gb", "d", "db"])],
            None,
            abelian("adding the relation γ = γ̄ = δ = δ̄"),
            None,
        )
        .build(),
        RuleBuilder::new(
            "D5→A4",
            &CYCLIC,
            "the only maximal irreducible perturbation of D5 is A4, with cyclic local group",
        )
        .bind(
            "default",
            "2a5+2a2+d5",
            "(2A5 + 2A2) + A4",
            vec![slots(&["b", "bb", "d", "db"])],
            None,
            torus("introduces the relation β = β̄ = δ = δ̄"),
            Some(rb3(&["b", "bb", "d", "db"], &["g", "gb"])),
        )
        .bind(
            "default",
            "2e7+d5",
            "2E7 + A4",
            vec![slots(&["a", "ab", "d", "d"])],
            None,
            abelian("adds the relation α = ᾱ = δ"),
            None,
        )
        .bind(
            "default",
            "2d5+a7+a2",
            "D5 + A7 + A4 + A2",
            vec![slots(&["a", "(gb db) gb (gb db)^-1", "gb db gb^-1", "a"])],
            None,
            abelian("α = (γ̄δ̄)γ̄(γ̄δ̄)⁻¹ = γ̄δ̄γ̄⁻¹"),
            None,
        )
        .bind(
            "default",
            "3d5+a3",
            "2D5 + A4 + A3",
            vec![slots(&["a", "ab", "d", "db"])],
            None,
            abelian("adding the relation α = ᾱ = δ = δ̄"),
            None,
        )
        .build(),
        RuleBuilder::new(
            "D4→abelianize-local",
            &[
                "[g1, g2]", "[g1, g3]", "[g1, g4]", "[g2, g3]", "[g2, g4]", "[g3, g4]",
            ],
            "for any nontrivial perturbation of D4 the local group is abelian",
        )
        .bind(
            "default",
            "a11+2a2+d4",
            "(A11 + 2A2) + 3A1",
            vec![slots(&["b", "bb", "g", "gb"])],
            None,
            expected(
                D4P,
                Some("Z + Z2"),
                Some(true),
                "β, β̄, γ, γ̄ pairwise commute",
            ),
            None,
        )
        .build(),
        RuleBuilder::new(
            "D4→A3-conic",
            &["g1 = g2"],
            "a triple of lines perturbed to a conic and a tangent line",
        )
        .bind(
            "default",
            "a11+2a2+d4",
            "(A11 + 2A2) + A3",
            vec![slots(&["b", "g"])],
            None,
            torus("the generators β and γ become conjugate, hence equal"),
            Some(a_s1_rest_s2()),
        )
        .note("other subdiagrams A3 ⊂ D4 give other bindings; their outcome is not recorded")
        .build(),
        RuleBuilder::new(
            "A1→A0",
            &["g1 = g2"],
            "smoothing a node identifies its two local generators",
        )
        .bind(
            "default",
            "a11+3a2",
            "(A11 + 2A2) + A2 + A1",
            vec![slots(&["gb", "(ab bb) ab (ab bb)^-1"])],
            None,
            torus("γ̄ = (ᾱβ̄)ᾱ(ᾱβ̄)⁻¹"),
            Some(a_s1_rest_s2()),
        )
        .bind(
            "default",
            "a11+e6",
            "(E6 + A11) + A1",
            vec![slots(&["b", "(b a)^-1 a (b a)"])],
            None,
            torus("the additional relation is β = γ"),
            Some(rb3(&["a"], &["b"])),
        )
        .build(),
        RuleBuilder::new(
            "E7→A4+A2",
            &[
                "g1 g2 g1 = g2 g1 g2",
                "g1 g3 g1 = g3 g1 g2",
                "g3 g1 g3 = g2 g3 g1",
            ],
            "local relations of the perturbation E7 → A4 + A2 in the standard generators (α, β, γ)",
        )
        .bind(
            "first",
            "2e7+d5",
            "E7 + D5 + A4 + A2",
            vec![slots(&["a", "d"])],
            Some(vec![0]),
            abelian("adding at least the relation αδα = δαδ"),
            None,
        )
        .bind(
            "third",
            "2e7+a3+a2",
            "E7 + A4 + A3 + 2A2",
            vec![slots(&["a", "d", "gb"])],
            Some(vec![2]),
            abelian("adds at least the relation γ̄αγ̄ = δγ̄α"),
            None,
        )
        .note("the local group of E7 → A4 + A2 is Z × SL(2, F5); recorded, not verified")
        .note("E7 → E6 and E7 → A6 have cyclic local groups and add at least the same relation")
        .build(),
    ]
}

fn named_groups() -> Vec<GroupRecord> {
    let g = |id: &str, gens: &[&str], rels: &[&str], anchor: &str| GroupRecord {
        id: s(id),
        generators: strs(gens),
        relations: strs(rels),
        anchor: s(anchor),
    };
    vec![
        g("rb3", &["u", "v"], &["u^2", "v^3"], "B̄₃ ≅ Z2 * Z3"),
        g(
            "d4-perturbed",
            &["a", "b"],
            &["(a b)^3 = (b a)^3", "(a b a)^2"],
            "group after perturbing the D4 point",
        ),
        g(
            "2e7-central",
            &["a", "b", "d"],
            &["(a b)^3 = (b a)^3", "[a, d]", "[b, d]", "(a b a)^2 d^2"],
            "δ is central",
        ),
        g(
            "minimal",
            &["a", "ab", "d"],
            &["a ab a = ab a ab", "[a, d]", "[ab, d]", "a^2 ab^2 d^2"],
            "the 'minimal' group, a central extension of A4 by ⟨δ⟩",
        ),
        g(
            "simplest",
            &["g", "d"],
            &["(g d)^2 = (d g)^2", "(g d g)^2"],
            "the simplest group for D5 + A3",
        ),
        g(
            "simplest-uv",
            &["u", "v"],
            &["v^2", "[v, u^2]"],
            "G = ⟨u, v | v² = [v, u²] = 1⟩",
        ),
        g(
            "e7-local",
            &["a", "b", "g"],
            &["a b a = b a b", "a g a = g a b", "g a g = b g a"],
            "αβα = βαβ, αγα = γαβ, γαγ = βγα",
        ),
    ]
}

/// The embedded registry.
pub fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Registry {
        cases: cases(),
        rules: rules(),
        groups: named_groups(),
    })
}

pub fn case_ids() -> Vec<&'static str> {
    registry().cases.iter().map(|c| c.id.as_str()).collect()
}

pub fn get_case(id: &str) -> Result<&'static CaseRecord> {
    registry()
        .cases
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownId {
            kind: "case",
            id: id.to_string(),
            valid: case_ids().join(", "),
        })
}

pub fn get_rule(id: &str) -> Result<&'static PerturbationRule> {
    let reg = registry();
    reg.rules
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownId {
            kind: "perturbation rule",
            id: id.to_string(),
            valid: reg
                .rules
                .iter()
                .map(|r| r.id.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })
}

pub fn get_group(id: &str) -> Result<&'static GroupRecord> {
    let reg = registry();
    reg.groups
        .iter()
        .find(|g| g.id == id)
        .ok_or_else(|| Error::UnknownId {
            kind: "group",
            id: id.to_string(),
            valid: reg
                .groups
                .iter()
                .map(|g| g.id.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })
}

/// All `(rule, binding)` pairs stored for a case.
pub fn bindings_for(case: &str) -> Vec<(&'static PerturbationRule, &'static Binding)> {
    registry()
        .rules
        .iter()
        .flat_map(|r| r.slot_bindings.iter().map(move |b| (r, b)))
        .filter(|(_, b)| b.case == case)
        .collect()
}

fn gens_of(names: &[String]) -> Result<Vec<Generator>> {
    names.iter().map(|n| Generator::new(n)).collect()
}

fn relations_of(groups: &[RelationGroup]) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for g in groups {
        for text in &g.relations {
            let sides = parse_chain(text)?;
            out.push(Relation {
                sides,
                label: Some(g.label.clone()),
            });
        }
    }
    Ok(out)
}

/// Presentation from a generator list and relation texts.
pub fn presentation_from_texts(
    generators: &[String],
    relations: &[String],
) -> Result<Presentation> {
    let rels = relations
        .iter()
        .map(|t| {
            Ok(Relation {
                sides: parse_chain(t)?,
                label: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(gens_of(generators)?, rels)
}

pub fn group_presentation(g: &GroupRecord) -> Result<Presentation> {
    presentation_from_texts(&g.generators, &g.relations)
}

/// The printed `π₁` presentation, relations labelled by group.
pub fn pi1_presentation(case: &CaseRecord) -> Result<Presentation> {
    if case.pi1_relations.is_empty() {
        return Err(Error::Precondition(format!(
            "case `{}` has no printed π₁ relations",
            case.id
        )));
    }
    Presentation::new(
        gens_of(&case.pi1_generators)?,
        relations_of(&case.pi1_relations)?,
    )
}

/// The `π̄₁` presentation over the generator ordering, following
/// `pibar_source` when the relations are shared with another case.
pub fn pibar_presentation(case: &CaseRecord) -> Result<Presentation> {
    let source = match &case.pibar_source {
        Some(id) => get_case(id)?,
        None => case,
    };
    if source.pibar_relations.is_empty() {
        return Err(Error::Precondition(format!(
            "case `{}` has no printed π̄₁ relations",
            case.id
        )));
    }
    let gens: Vec<Generator> = gens_of(&source.generator_ordering)?;
    let rels = relations_of(&source.pibar_relations)?;
    let used: Vec<Generator> = gens
        .iter()
        .filter(|g| {
            rels.iter()
                .any(|r| r.sides.iter().any(|w| w.generators().contains(g)))
        })
        .cloned()
        .collect();
    Presentation::new(used, rels)
}

/// Runs the preprocessing script.
pub fn preprocess(p: &Presentation, steps: &[PreStep]) -> Result<Presentation> {
    let mut cur = p.clone();
    for step in steps {
        cur = match step {
            PreStep::Eliminate { generator, by } => {
                cur.eliminate_generator(&Generator::new(generator)?, &parse_word(by)?)?
            }
            PreStep::Kill { generator } => {
                cur.eliminate_generator(&Generator::new(generator)?, &Word::identity())?
            }
            PreStep::Substitute {
                generator,
                new_generator,
                image,
            } => {
                let old = Generator::new(generator)?;
                let new = Generator::new(new_generator)?;
                let pos = cur
                    .generator_index(&old)
                    .ok_or_else(|| Error::UnknownGenerator {
                        generator: generator.clone(),
                        context: "presentation's generators".into(),
                    })?;
                let mut gens = cur.generators().to_vec();
                gens[pos] = new;
                let mut assignment = crate::word::identity_assignment(cur.generators());
                let img = parse_word(image)?;
                img.check_over(&gens, "substituted generators")?;
                assignment.insert(old, img);
                cur.change_generators(gens, &assignment)?.normalize()
            }
        };
    }
    Ok(cur)
}

/// `π₁` computed from `π̄₁`: preprocessing, then the double cover over the
/// distinguished generator when there is one. `None` when the case has no
/// complete `π̄₁`.
pub fn derived_pi1(case: &CaseRecord) -> Result<Option<Presentation>> {
    if case.derived_match == DerivedMatch::Unchecked {
        return Ok(None);
    }
    let p = preprocess(&pibar_presentation(case)?, &case.preprocessing)?;
    Ok(Some(match &case.distinguished_generator {
        Some(d) => p.double_cover(&Generator::new(d)?)?,
        None => p.normalize(),
    }))
}

/// Relator-by-relator comparison up to cyclic reduction and inversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorComparison {
    pub matched: usize,
    pub only_printed: Vec<Word>,
    pub only_computed: Vec<Word>,
}

impl RelatorComparison {
    pub fn exact(&self) -> bool {
        self.only_printed.is_empty() && self.only_computed.is_empty()
    }
}

pub fn compare_relators(printed: &Presentation, computed: &Presentation) -> RelatorComparison {
    let canon = |p: &Presentation| -> Vec<Word> {
        p.normalize()
            .relators()
            .iter()
            .map(|w| w.cyclic_canonical())
            .collect()
    };
    let a = canon(printed);
    let b = canon(computed);
    RelatorComparison {
        matched: a.iter().filter(|w| b.contains(w)).count(),
        only_printed: a.iter().filter(|w| !b.contains(w)).cloned().collect(),
        only_computed: b.iter().filter(|w| !a.contains(w)).cloned().collect(),
    }
}

/// Instantiates the rule's templates under a binding.
pub fn instantiate(rule: &PerturbationRule, binding: &Binding) -> Result<Vec<Word>> {
    let indices: Vec<usize> = match &binding.templates {
        Some(ix) => ix.clone(),
        None => (0..rule.local_relators.len()).collect(),
    };
    let mut out = Vec::new();
    for inst in &binding.instances {
        let mut assignment = BTreeMap::new();
        for (slot, text) in inst {
            assignment.insert(Generator::new(slot)?, parse_word(text)?);
        }
        for &i in &indices {
            let template = rule.local_relators.get(i).ok_or_else(|| {
                Error::Precondition(format!("rule `{}` has no template {i}", rule.id))
            })?;
            for side_rel in crate::notation::parse_relators(template)? {
                out.push(side_rel.substitute(&assignment).map_err(|e| match e {
                    Error::UnknownGenerator { generator, .. } => Error::Precondition(format!(
                        "binding `{}` of rule `{}` leaves slot `{generator}` unbound",
                        binding.id, rule.id
                    )),
                    other => other,
                })?);
            }
        }
    }
    Ok(out)
}

pub fn find_binding<'a>(
    rule: &'a PerturbationRule,
    case: &str,
    binding: &str,
) -> Result<&'a Binding> {
    rule.slot_bindings
        .iter()
        .find(|b| b.case == case && b.id == binding)
        .ok_or_else(|| {
            let valid: Vec<&str> = rule
                .slot_bindings
                .iter()
                .filter(|b| b.case == case)
                .map(|b| b.id.as_str())
                .collect();
            Error::UnknownId {
                kind: "binding",
                id: format!("{case}/{}/{binding}", rule.id),
                valid: if valid.is_empty() {
                    "none for this case".into()
                } else {
                    valid.join(", ")
                },
            }
        })
}

/// The case's `π₁` with the rule's local relators added.
pub fn apply_perturbation(case: &CaseRecord, rule: &str, binding: &str) -> Result<Presentation> {
    let rule = get_rule(rule)?;
    let b = find_binding(rule, &case.id, binding)?;
    let extra = instantiate(rule, b)?;
    pi1_presentation(case)?.quotient_add_relators(&extra)
}

/// Parses an assignment whose values are `s1`, `s2` or `Z₂*Z₃` words.
pub fn rb3_assignment(map: &BTreeMap<String, String>) -> Result<Z2Z3Assignment> {
    map.iter()
        .map(|(g, v)| {
            let w = match v.as_str() {
                "s1" => Z2Z3Word::sigma1(),
                "s2" => Z2Z3Word::sigma2(),
                other => Z2Z3Word::parse(other)?,
            };
            Ok((Generator::new(g)?, w))
        })
        .collect()
}

/// Braids stored for a case, parsed over their basis.
pub fn case_braid(case: &CaseRecord, name: &str) -> Result<(Braid, Vec<Generator>)> {
    let rec = case
        .braids
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| Error::UnknownId {
            kind: "braid",
            id: name.to_string(),
            valid: case
                .braids
                .iter()
                .map(|b| b.name.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })?;
    let basis = gens_of(&rec.basis)?;
    Ok((Braid::parse(basis.len(), &rec.word)?, basis))
}

/// Pretty JSON of the whole registry; byte-stable for a given build.
pub fn export_json() -> Result<String> {
    let mut out = serde_json::to_string_pretty(registry())?;
    out.push('\n');
    Ok(out)
}

pub fn import_json(text: &str) -> Result<Registry> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_relation_parses() {
        for c in &registry().cases {
            if !c.pi1_relations.is_empty() {
                pi1_presentation(c).unwrap();
            }
            if !c.pibar_relations.is_empty() || c.pibar_source.is_some() {
                pibar_presentation(c).unwrap();
            }
        }
        for gr in &registry().groups {
            group_presentation(gr).unwrap();
        }
    }

    #[test]
    fn bindings_instantiate() {
        for r in &registry().rules {
            for b in &r.slot_bindings {
                let c = get_case(&b.case).unwrap();
                let p = apply_perturbation(c, &r.id, &b.id).unwrap();
                assert!(
                    p.relations().len()
                        >= pi1_presentation(c).unwrap().normalize().relations().len()
                );
            }
        }
    }

    #[test]
    fn unknown_ids() {
        let e = get_case("nosuchcase").unwrap_err();
        assert!(e.to_string().contains("a17+a2"));
        let c = get_case("a11+3a2").unwrap();
        assert!(apply_perturbation(c, "D5→A4", "default").is_err());
        assert!(get_rule("X→Y").is_err());
    }

    #[test]
    fn a17_double_cover_matches() {
        let c = get_case("a17+a2").unwrap();
        let cmp = compare_relators(
            &pi1_presentation(c).unwrap(),
            &derived_pi1(c).unwrap().unwrap(),
        );
        assert!(cmp.exact(), "{cmp:?}");
    }

    #[test]
    fn export_round_trip() {
        let text = export_json().unwrap();
        assert_eq!(&import_json(&text).unwrap(), registry());
        assert_eq!(text, export_json().unwrap());
    }
}
