//! Todd–Coxeter coset enumeration, HLT strategy without lookahead.
//!
//! Cosets are processed in definition order. For each live coset every
//! relator is scanned and filled, then the row is completed. Coincidences
//! are resolved with a queue and a union–find forest, always keeping the
//! smaller coset number. The limit bounds the total number of cosets ever
//! defined, so a run is fully determined by the input.

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::Word;

pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// A completed coset table, renumbered so live cosets are `0..index` in
/// order of first appearance and coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub index: usize,
    /// `action[g][c]` is the coset `c·g` for generator number `g`.
    pub action: Vec<Vec<u32>>,
    /// Total cosets defined during the enumeration.
    pub defined: usize,
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    queue: Vec<u32>,
}

#[inline]
fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Enumerator {
    fn new(gens: usize, limit: usize) -> Self {
        let cols = 2 * gens;
        Enumerator {
            cols,
            table: vec![NONE; cols],
            parent: vec![0],
            live: 1,
            limit,
            queue: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        if self.n() >= self.limit {
            return Err(Error::CosetOverflow { limit: self.limit });
        }
        let d = self.n() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != r {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, inv_col(x)) == e {
                    self.set(f, inv_col(x), NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, inv_col(x));
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, inv_col(x), e1);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != NONE {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, inv_col(w[j as usize])) != NONE {
                b = self.get(b, inv_col(w[j as usize]));
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, inv_col(x), f);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }
}

fn columns(p: &Presentation, w: &Word) -> Result<Vec<usize>> {
    w.check_over(p.generators(), "coset enumeration")?;
    Ok(w.letters()
        .iter()
        .map(|l| {
            let g = p.generator_index(&l.generator).expect("checked");
            2 * g + usize::from(l.inverse)
        })
        .collect())
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
pub fn coset_table(p: &Presentation, subgroup: &[Word], limit: usize) -> Result<CosetTable> {
    if limit == 0 {
        return Err(Error::Precondition("coset limit must be at least 1".into()));
    }
    let mut rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| columns(p, &r.cyclically_reduced()))
        .collect::<Result<_>>()?;
    rels.sort_by_key(|r| r.len());
    let sub: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|w| columns(p, w))
        .collect::<Result<_>>()?;

    let gens = p.generators().len();
    let mut e = Enumerator::new(gens, limit);
    for w in &sub {
        e.scan_and_fill(0, w)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.n() {
        if e.alive(c) {
            for r in &rels {
                if !e.alive(c) {
                    break;
                }
                e.scan_and_fill(c, r)?;
            }
            for x in 0..e.cols {
                if !e.alive(c) {
                    break;
                }
                if e.get(c, x) == NONE {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }

    let mut number = vec![NONE; e.n()];
    let mut next = 0u32;
    for k in 0..e.n() as u32 {
        if e.alive(k) {
            number[k as usize] = next;
            next += 1;
        }
    }
    let action = (0..gens)
        .map(|g| {
            (0..e.n() as u32)
                .filter(|&k| e.alive(k))
                .map(|k| number[e.get(k, 2 * g) as usize])
                .collect()
        })
        .collect();
    Ok(CosetTable {
        index: e.live,
        action,
        defined: e.n(),
    })
}

/// Index of `⟨subgroup⟩`; with an empty subgroup this is the group order.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], limit: usize) -> Result<usize> {
    coset_table(p, subgroup, limit).map(|t| t.index)
}

/// Group order, `None` when the enumeration overflows `limit`.
pub fn group_order(p: &Presentation, limit: usize) -> Result<Option<usize>> {
    match todd_coxeter(p, &[], limit) {
        Ok(n) => Ok(Some(n)),
        Err(Error::CosetOverflow { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_relators;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let mut rs = Vec::new();
        for r in rels {
            rs.extend(parse_relators(r).unwrap());
        }
        Presentation::from_relators(gens, rs).unwrap()
    }

    #[test]
    fn cyclic_six() {
        assert_eq!(todd_coxeter(&pres(&["a"], &["a^6"]), &[], 100).unwrap(), 6);
    }

    #[test]
    fn symmetric_three() {
        let p = pres(&["a", "b"], &["a^2", "b^2", "(a b)^3"]);
        assert_eq!(todd_coxeter(&p, &[], 1000).unwrap(), 6);
        let a = Word::parse("a").unwrap();
        assert_eq!(todd_coxeter(&p, &[a], 1000).unwrap(), 3);
    }

    #[test]
    fn binary_tetrahedral() {
        let p = pres(&["a", "ab"], &["a ab a = ab a ab", "a^2 ab^2"]);
        assert_eq!(todd_coxeter(&p, &[], DEFAULT_COSET_LIMIT).unwrap(), 12);
    }

    #[test]
    fn trivial_and_free() {
        assert_eq!(todd_coxeter(&pres(&["a"], &["a"]), &[], 10).unwrap(), 1);
        assert!(matches!(
            todd_coxeter(&pres(&["a"], &[]), &[], 50),
            Err(Error::CosetOverflow { limit: 50 })
        ));
        assert_eq!(
            group_order(&pres(&["a", "b"], &["a^2"]), 200).unwrap(),
            None
        );
    }

    #[test]
    fn table_is_a_permutation_action() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a b)^4"]);
        let t = coset_table(&p, &[], 10_000).unwrap();
        assert_eq!(t.index, 24);
        for col in &t.action {
            let mut seen = col.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), t.index);
        }
    }
}
