//! Homomorphisms from a finitely presented group into a finite group.
//!
//! Generator images are chosen by depth-first search. Generators are ordered
//! greedily so that relators become fully determined as early as possible,
//! and each relator is checked at the first depth where all of its
//! generators have images. The first level is split across rayon workers.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use super::finite_group::FiniteGroupTable;
use crate::presentation::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomMode {
    Count,
    EpiExists,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomResult {
    Count(u64),
    EpiExists(bool),
}

struct Plan {
    /// Search order: `order[depth]` is a generator number.
    order: Vec<usize>,
    /// Relators, in search-position letters, grouped by the depth at which
    /// they become checkable.
    checks: Vec<Vec<Vec<(usize, bool)>>>,
}

fn plan(p: &Presentation) -> Plan {
    let k = p.generators().len();
    let rels = p.indexed_relators();
    let supports: Vec<Vec<usize>> = rels
        .iter()
        .map(|r| {
            let mut s: Vec<usize> = r.iter().map(|&(g, _)| g).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        // prefer the generator completing the most relators, then the one
        // occurring in the most short relators, then the lowest number
        let best = (0..k)
            .filter(|&g| !placed[g])
            .max_by_key(|&g| {
                let completes = supports
                    .iter()
                    .filter(|s| s.contains(&g) && s.iter().all(|&h| h == g || placed[h]))
                    .count();
                let weight: usize = rels
                    .iter()
                    .zip(&supports)
                    .filter(|(_, s)| s.contains(&g))
                    .map(|(r, _)| 1000 / (r.len() + 1))
                    .sum();
                (completes, weight, std::cmp::Reverse(g))
            })
            .expect("unplaced generator");
        placed[best] = true;
        order.push(best);
    }
    let mut position = vec![0usize; k];
    for (d, &g) in order.iter().enumerate() {
        position[g] = d;
    }
    let mut checks = vec![Vec::new(); k.max(1)];
    for (r, s) in rels.iter().zip(&supports) {
        let depth = s.iter().map(|&g| position[g]).max().unwrap_or(0);
        checks[depth].push(r.iter().map(|&(g, inv)| (position[g], inv)).collect());
    }
    Plan { order, checks }
}

fn evaluate(
    g: &FiniteGroupTable,
    images: &[usize],
    inverses: &[usize],
    w: &[(usize, bool)],
) -> usize {
    w.iter().fold(0, |acc, &(x, inv)| {
        g.mul(acc, if inv { inverses[x] } else { images[x] })
    })
}

struct Search<'a> {
    g: &'a FiniteGroupTable,
    plan: &'a Plan,
    mode: HomMode,
    stop: &'a AtomicBool,
}

impl Search<'_> {
    fn passes(&self, depth: usize, images: &[usize], inverses: &[usize]) -> bool {
        self.plan.checks[depth]
            .iter()
            .all(|r| evaluate(self.g, images, inverses, r) == 0)
    }

    fn run(&self, depth: usize, images: &mut Vec<usize>, inverses: &mut Vec<usize>) -> u64 {
        if self.mode == HomMode::EpiExists && self.stop.load(Ordering::Relaxed) {
            return 0;
        }
        if depth == self.plan.order.len() {
            return match self.mode {
                HomMode::Count => 1,
                HomMode::EpiExists => {
                    if self.g.generated_subgroup_order(images) == self.g.order() {
                        self.stop.store(true, Ordering::Relaxed);
                        1
                    } else {
                        0
                    }
                }
            };
        }
        let mut total = 0;
        for x in 0..self.g.order() {
            images.push(x);
            inverses.push(self.g.inv(x));
            if self.passes(depth, images, inverses) {
                total += self.run(depth + 1, images, inverses);
            }
            images.pop();
            inverses.pop();
        }
        total
    }
}

/// Counts homomorphisms, or decides whether a surjective one exists.
pub fn hom_search(p: &Presentation, g: &FiniteGroupTable, mode: HomMode) -> HomResult {
    let plan = plan(p);
    let stop = AtomicBool::new(false);
    let search = Search {
        g,
        plan: &plan,
        mode,
        stop: &stop,
    };
    let total: u64 = if plan.order.is_empty() {
        search.run(0, &mut Vec::new(), &mut Vec::new())
    } else {
        (0..g.order())
            .into_par_iter()
            .map(|x| {
                let mut images = vec![x];
                let mut inverses = vec![g.inv(x)];
                if search.passes(0, &images, &inverses) {
                    search.run(1, &mut images, &mut inverses)
                } else {
                    0
                }
            })
            .sum()
    };
    match mode {
        HomMode::Count => HomResult::Count(total),
        HomMode::EpiExists => HomResult::EpiExists(total > 0),
    }
}

pub fn hom_count(p: &Presentation, g: &FiniteGroupTable) -> u64 {
    match hom_search(p, g, HomMode::Count) {
        HomResult::Count(n) => n,
        HomResult::EpiExists(_) => unreachable!(),
    }
}

pub fn epi_exists(p: &Presentation, g: &FiniteGroupTable) -> bool {
    match hom_search(p, g, HomMode::EpiExists) {
        HomResult::EpiExists(b) => b,
        HomResult::Count(_) => unreachable!(),
    }
}

/// Hom counts into each group, in the given order.
pub fn hom_spectrum(p: &Presentation, groups: &[FiniteGroupTable]) -> Vec<(String, u64)> {
    groups
        .iter()
        .map(|g| (g.name().to_string(), hom_count(p, g)))
        .collect()
}
