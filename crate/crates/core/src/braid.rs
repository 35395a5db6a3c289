//! Braid words and their right Hurwitz action on a free group.
//!
//! `σᵢ` sends `ηᵢ ↦ ηᵢ ηᵢ₊₁ ηᵢ⁻¹`, `ηᵢ₊₁ ↦ ηᵢ` and fixes the other basis
//! elements. A braid word acts letter by letter from left to right, so
//! `act(b₁b₂, w) = act(b₂, act(b₁, w))`. With this orientation the monodromy
//! braids transcribed in the registry reproduce the vertical-tangent relations
//! they are paired with.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{reduce, Assignment, Generator, Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct BraidLetter {
    /// Artin generator index, `1..strands`.
    pub index: usize,
    pub inverse: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Braid {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl Braid {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Domain(format!(
                "braid needs at least 2 strands, got {strands}"
            )));
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::Domain(format!(
                "generator s{} out of range for {strands} strands",
                bad.index
            )));
        }
        Ok(Braid { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Braid::new(strands, Vec::new())
    }

    /// `σᵢ^e`.
    pub fn sigma(strands: usize, index: usize, exponent: i64) -> Result<Self> {
        let l = BraidLetter {
            index,
            inverse: exponent < 0,
        };
        Braid::new(strands, vec![l; exponent.unsigned_abs() as usize])
    }

    /// The full twist `Δ² = (σ₁σ₂⋯σₙ₋₁)ⁿ`.
    pub fn full_twist(strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for _ in 0..strands {
            letters.extend((1..strands).map(|index| BraidLetter {
                index,
                inverse: false,
            }));
        }
        Braid::new(strands, letters)
    }

    /// Parses `s2^-1 s3^-1 s2 FULLTWIST s1^-4 s3^-4`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "FULLTWIST" {
                letters.extend(Braid::full_twist(strands)?.letters);
                continue;
            }
            let (head, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((h, e)) => (
                    h,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad braid exponent in `{tok}`")))?,
                ),
            };
            let index = head
                .strip_prefix('s')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad braid token `{tok}`")))?;
            letters.extend(Braid::sigma(strands, index, exp)?.letters);
        }
        Braid::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Braid) -> Result<Braid> {
        if self.strands != other.strands {
            return Err(Error::Domain(
                "braids on different numbers of strands".into(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Braid::new(self.strands, letters)
    }

    pub fn inverse(&self) -> Braid {
        Braid {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    fn check_basis(&self, basis: &[Generator]) -> Result<()> {
        if basis.len() != self.strands {
            return Err(Error::Domain(format!(
                "basis has {} generators but the braid has {} strands",
                basis.len(),
                self.strands
            )));
        }
        Ok(())
    }

    /// Images of the basis elements under the braid automorphism.
    pub fn basis_images(&self, basis: &[Generator]) -> Result<Vec<Word>> {
        self.check_basis(basis)?;
        let n = self.strands;
        // letters as (basis index, inverse)
        let mut images: Vec<Vec<(usize, bool)>> = (0..n).map(|j| vec![(j, false)]).collect();
        for bl in &self.letters {
            let i = bl.index - 1;
            for img in images.iter_mut() {
                *img = apply_sigma(img, i, bl.inverse);
            }
        }
        Ok(images
            .into_iter()
            .map(|img| {
                reduce(
                    img.into_iter()
                        .map(|(j, inv)| Letter::new(basis[j].clone(), inv)),
                )
            })
            .collect())
    }

    /// The image of `w` under the braid.
    pub fn act(&self, w: &Word, basis: &[Generator]) -> Result<Word> {
        w.check_over(basis, "braid basis")?;
        let images = self.basis_images(basis)?;
        let assignment: Assignment = basis.iter().cloned().zip(images).collect();
        w.substitute(&assignment)
    }

    /// Braid relations `b(ηⱼ)·ηⱼ⁻¹`, empty ones dropped.
    pub fn relations_of(&self, basis: &[Generator]) -> Result<Vec<Word>> {
        let images = self.basis_images(basis)?;
        Ok(images
            .into_iter()
            .zip(basis)
            .map(|(img, g)| img.mul(&Word::generator(g).inverse()))
            .filter(|r| !r.is_identity())
            .collect())
    }
}

// σᵢ (or σᵢ⁻¹) substitution on an index word, freely reduced.
fn apply_sigma(w: &[(usize, bool)], i: usize, inverse: bool) -> Vec<(usize, bool)> {
    let mut out: Vec<(usize, bool)> = Vec::with_capacity(w.len() + 2);
    let mut push = |l: (usize, bool)| match out.last() {
        Some(&(g, inv)) if g == l.0 && inv != l.1 => {
            out.pop();
        }
        _ => out.push(l),
    };
    for &(g, inv) in w {
        // image of the generator g (positive)
        let image: &[(usize, bool)] = match (g == i, g == i + 1, inverse) {
            (true, _, false) => &[(i, false), (i + 1, false), (i, true)],
            (_, true, false) => &[(i, false)],
            (true, _, true) => &[(i + 1, false)],
            (_, true, true) => &[(i + 1, true), (i, false), (i + 1, false)],
            _ => {
                push((g, inv));
                continue;
            }
        };
        if inv {
            for &(h, hi) in image.iter().rev() {
                push((h, !hi));
            }
        } else {
            for &l in image {
                push(l);
            }
        }
    }
    out
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.inverse {
                write!(f, "s{}^-1", l.index)?;
            } else {
                write!(f, "s{}", l.index)?;
            }
        }
        Ok(())
    }
}

/// The complex-conjugation automorphism of the fiber group:
/// `ηₖ ↦ (η₁⋯ηₖ₋₁) ηₖ⁻¹ (η₁⋯ηₖ₋₁)⁻¹`. It is an involution.
pub fn conj_star(w: &Word, basis: &[Generator]) -> Result<Word> {
    w.check_over(basis, "conj_* basis")?;
    let mut assignment = Assignment::new();
    let mut prefix = Word::identity();
    for g in basis {
        let eta = Word::generator(g);
        assignment.insert(g.clone(), eta.inverse().conjugate_by(&prefix.inverse()));
        prefix = prefix.mul(&eta);
    }
    w.substitute(&assignment)
}
