//! Decidable invariants of finitely presented groups.

pub mod abelian;
pub mod coset;
pub mod finite_group;
pub mod homsearch;
pub mod z2z3;

pub use abelian::{abelianization, smith_diagonal, AbelianInvariants};
pub use coset::{coset_table, group_order, todd_coxeter, CosetTable, DEFAULT_COSET_LIMIT};
pub use finite_group::{battery, battery_group, FiniteGroupTable, GroupTableJson, BATTERY};
pub use homsearch::{epi_exists, hom_count, hom_search, hom_spectrum, HomMode, HomResult};
pub use z2z3::{rb3_verify, Rb3Report, Z2Z3Assignment, Z2Z3Word};

use crate::error::Result;
use crate::presentation::Presentation;
use crate::word::Word;

/// Outcome of the finite-abelian check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbelianCheck {
    /// The group and its abelianization both enumerate to this order.
    Abelian { order: usize },
    /// Both enumerations completed with different orders.
    NotAbelian { order: usize, abelian_order: usize },
    /// An enumeration overflowed the coset limit.
    Inconclusive,
}

/// `p` with every generator commutator added.
pub fn abelianized_presentation(p: &Presentation) -> Result<Presentation> {
    let gens = p.generators();
    let mut extra = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            extra.push(Word::commutator(&Word::generator(x), &Word::generator(y)));
        }
    }
    p.quotient_add_relators(&extra)
}

/// Compares the order of `p` with the order of its abelianization.
pub fn check_abelian(p: &Presentation, limit: usize) -> Result<AbelianCheck> {
    let Some(order) = group_order(p, limit)? else {
        return Ok(AbelianCheck::Inconclusive);
    };
    let Some(abelian_order) = group_order(&abelianized_presentation(p)?, limit)? else {
        return Ok(AbelianCheck::Inconclusive);
    };
    Ok(if order == abelian_order {
        AbelianCheck::Abelian { order }
    } else {
        AbelianCheck::NotAbelian {
            order,
            abelian_order,
        }
    })
}
