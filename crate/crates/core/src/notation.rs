//! Extended relation notation used to transcribe presentations.
//!
//! On top of the strict word syntax this accepts parenthesised groups,
//! integer powers (`(a d)^3`, `s1^-4`), commutators `[x, y] = x⁻¹y⁻¹xy`,
//! the literal `1`, and chains of equalities `x = y = z`. Everything is
//! expanded to plain [`Word`]s immediately.

use crate::error::{Error, Result};
use crate::word::{Generator, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Caret,
    Eq,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '[' => {
                out.push(Tok::LBrack);
                i += 1
            }
            ']' => {
                out.push(Tok::RBrack);
                i += 1
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '=' => {
                out.push(Tok::Eq);
                i += 1
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.toks.get(self.pos) {
            Some(x) if *x == t => {
                self.pos += 1;
                Ok(())
            }
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        while let Some(t) = self.peek() {
            match t {
                Tok::Name(_) | Tok::LParen | Tok::LBrack | Tok::Int(1) => {
                    let term = self.term()?;
                    acc = acc.mul(&term);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Int(n)) => {
                    let n = *n;
                    self.pos += 1;
                    Ok(base.pow(n))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Name(n)) => {
                self.pos += 1;
                Ok(Word::generator(&Generator::new(&n)?))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(w)
            }
            Some(Tok::LBrack) => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(Tok::Comma)?;
                let y = self.expr()?;
                self.expect(Tok::RBrack)?;
                Ok(Word::commutator(&x, &y))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a single expression into a word.
pub fn parse_word(text: &str) -> Result<Word> {
    let sides = parse_chain(text)?;
    if sides.len() != 1 {
        return Err(Error::Parse(format!(
            "expected a word, found an equation: `{text}`"
        )));
    }
    Ok(sides.into_iter().next().unwrap())
}

/// Parses `x = y = …` into its sides (a single side means `x = 1`).
pub fn parse_chain(text: &str) -> Result<Vec<Word>> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut sides = vec![p.expr()?];
    while p.peek() == Some(&Tok::Eq) {
        p.pos += 1;
        sides.push(p.expr()?);
    }
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input in `{text}` at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(sides)
}

/// Relators `sides[i] · sides[i+1]⁻¹` of an equality chain.
pub fn chain_relators(sides: &[Word]) -> Vec<Word> {
    if sides.len() == 1 {
        return vec![sides[0].clone()];
    }
    sides
        .windows(2)
        .map(|p| p[0].mul(&p[1].inverse()))
        .collect()
}

/// Parses a chain and returns its relators.
pub fn parse_relators(text: &str) -> Result<Vec<Word>> {
    Ok(chain_relators(&parse_chain(text)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn powers_and_groups() {
        assert_eq!(parse_word("(a d)^3").unwrap(), w("a d a d a d"));
        assert_eq!(parse_word("s1^-2").unwrap(), w("s1^-1 s1^-1"));
        assert_eq!(
            parse_word("(b g)^-1 g (b g)").unwrap(),
            w("g^-1 b^-1 g b g")
        );
        assert!(parse_word("1").unwrap().is_identity());
    }

    #[test]
    fn commutator_convention() {
        assert_eq!(parse_word("[a, b]").unwrap(), w("a^-1 b^-1 a b"));
    }

    #[test]
    fn chains() {
        let r = parse_relators("a = b = c").unwrap();
        assert_eq!(r, vec![w("a b^-1"), w("b c^-1")]);
        let r = parse_relators("(a b)^2").unwrap();
        assert_eq!(r, vec![w("a b a b")]);
    }

    #[test]
    fn errors() {
        assert!(parse_word("(a b").is_err());
        assert!(parse_word("a = b").is_err());
        assert!(parse_chain("a $").is_err());
    }
}
