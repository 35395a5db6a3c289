//! Abelianization through the Smith normal form of the relation matrix.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::presentation::Presentation;

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/dₖ` with `d₁ | d₂ | … | dₖ`, every `dᵢ ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigUint>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn new(torsion: &[u64], free_rank: usize) -> Self {
        AbelianInvariants {
            torsion: torsion.iter().map(|&d| BigUint::from(d)).collect(),
            free_rank,
        }
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
            .collect()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().fold(BigUint::one(), |a, d| a * d))
        }
    }

    pub fn is_cyclic_of_order(&self, n: u64) -> bool {
        self.free_rank == 0
            && match n {
                1 => self.torsion.is_empty(),
                _ => self.torsion == vec![BigUint::from(n)],
            }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix (absolute values,
/// divisibility chain, zeros last). Its length is `min(rows, cols)`.
pub fn smith_diagonal(matrix: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // smallest nonzero entry of the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), n - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            // clear column t
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold a row holding a non-multiple into row t
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<BigInt>> {
    let n = p.generators().len();
    p.indexed_relators()
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); n];
            for &(g, inv) in r {
                if inv {
                    row[g] -= 1;
                } else {
                    row[g] += 1;
                }
            }
            row
        })
        .collect()
}

/// Invariants of `Z^cols / rowspace(matrix)`.
pub fn invariants_of_matrix(matrix: &[Vec<BigInt>], cols: usize) -> AbelianInvariants {
    let diag = smith_diagonal(matrix, cols);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.magnitude().clone())
        .collect();
    AbelianInvariants {
        torsion,
        free_rank: cols - rank,
    }
}

/// The abelianization `G/[G,G]` of a finitely presented group.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    invariants_of_matrix(&relation_matrix(p), p.generators().len())
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

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn z2_free_product_z3() {
        let a = abelianization(&pres(&["u", "v"], &["u^2", "v^3"]));
        assert_eq!(a, AbelianInvariants::new(&[6], 0));
        assert_eq!(a.to_string(), "Z6");
    }

    #[test]
    fn minimal_group_rows() {
        let a = invariants_of_matrix(&m(&[&[1, -1, 0], &[2, 2, 2]]), 3);
        assert_eq!(a, AbelianInvariants::new(&[2], 1));
        assert_eq!(a.to_string(), "Z + Z2");
    }

    #[test]
    fn free_and_trivial() {
        assert_eq!(abelianization(&pres(&["a", "b"], &[])).to_string(), "Z^2");
        assert_eq!(abelianization(&pres(&["a"], &["a"])).to_string(), "0");
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // diag(4, 6) ~ diag(2, 12)
        let a = invariants_of_matrix(&m(&[&[4, 0], &[0, 6]]), 2);
        assert_eq!(a.torsion_u64(), vec![2, 12]);
    }
}
