//! Finite groups given by multiplication tables, and the fixed battery used
//! for homomorphism counting.
//!
//! Battery groups are built from permutation generators. Elements are the
//! permutations in the closure, sorted lexicographically by their image
//! vectors; the identity therefore always has index 0. The product `i·j`
//! means "apply `i`, then `j`", matching the left-to-right reading of words.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Perm = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    table: Vec<Vec<u16>>,
    inverses: Vec<u16>,
    orders: Vec<u32>,
    perms: Option<Vec<Perm>>,
}

/// JSON form of a group table.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupTableJson {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<u16>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Perm>>,
}

fn compose(p: &[u8], q: &[u8]) -> Perm {
    // apply p, then q
    p.iter().map(|&i| q[i as usize]).collect()
}

impl FiniteGroupTable {
    /// Validates and builds a table. Element 0 must be the identity.
    pub fn from_table(name: &str, table: Vec<Vec<u16>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x as usize >= n))
        {
            return Err(Error::InvalidTable("table is not n x n over 0..n".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row[0] as usize != i || table[0][i] as usize != i {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut inverses = vec![0u16; n];
        for i in 0..n {
            let inv = (0..n).find(|&j| table[i][j] == 0 && table[j][i] == 0);
            match inv {
                Some(j) => inverses[i] = j as u16,
                None => return Err(Error::InvalidTable(format!("element {i} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b] as usize;
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c] as usize] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let orders = (0..n)
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != 0 {
                    x = table[x][i] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        Ok(FiniteGroupTable {
            name: name.to_string(),
            table,
            inverses,
            orders,
            perms: None,
        })
    }

    /// Closure of permutation generators on `degree` points.
    pub fn from_permutations(name: &str, degree: usize, generators: &[Perm]) -> Result<Self> {
        let id: Perm = (0..degree as u8).collect();
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                if g.len() != degree {
                    return Err(Error::InvalidTable("generator of wrong degree".into()));
                }
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        let index = |p: &Perm| elements.binary_search(p).expect("closed") as u16;
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        let mut g = FiniteGroupTable::from_table(name, table)?;
        g.perms = Some(elements);
        Ok(g)
    }

    pub fn from_json(j: &GroupTableJson) -> Result<Self> {
        if j.order != j.table.len() {
            return Err(Error::InvalidTable(
                "order does not match table size".into(),
            ));
        }
        let mut g = FiniteGroupTable::from_table(&j.name, j.table.clone())?;
        g.perms = j.elements.clone();
        Ok(g)
    }

    pub fn to_json(&self) -> GroupTableJson {
        GroupTableJson {
            name: self.name.clone(),
            order: self.order(),
            table: self.table.clone(),
            elements: self.perms.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn table(&self) -> &[Vec<u16>] {
        &self.table
    }

    /// Size of the subgroup generated by `gens`.
    pub fn generated_subgroup_order(&self, gens: &[usize]) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

fn cycle(n: usize) -> Perm {
    (0..n).map(|i| ((i + 1) % n) as u8).collect()
}

fn reflection(n: usize) -> Perm {
    (0..n).map(|i| ((n - i) % n) as u8).collect()
}

fn transposition(n: usize, a: usize, b: usize) -> Perm {
    let mut p: Perm = (0..n as u8).collect();
    p.swap(a, b);
    p
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroupTable {
    FiniteGroupTable::from_permutations(&format!("D{}", 2 * n), n, &[cycle(n), reflection(n)])
        .expect("dihedral group")
}

pub fn cyclic(n: usize) -> FiniteGroupTable {
    FiniteGroupTable::from_permutations(&format!("Z{n}"), n, &[cycle(n)]).expect("cyclic group")
}

pub fn symmetric(n: usize) -> FiniteGroupTable {
    FiniteGroupTable::from_permutations(&format!("S{n}"), n, &[transposition(n, 0, 1), cycle(n)])
        .expect("symmetric group")
}

pub fn alternating4() -> FiniteGroupTable {
    FiniteGroupTable::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
        .expect("alternating group")
}

/// Battery names in their canonical order.
pub const BATTERY: [&str; 7] = ["Z6", "S3", "D8", "D10", "D12", "A4", "S4"];

pub fn battery_group(name: &str) -> Result<FiniteGroupTable> {
    Ok(match name {
        "Z6" => cyclic(6),
        "S3" | "D6" => {
            let mut g = symmetric(3);
            g.name = name.to_string();
            g
        }
        "D8" => dihedral(4),
        "D10" => dihedral(5),
        "D12" => dihedral(6),
        "A4" => alternating4(),
        "S4" => symmetric(4),
        other => {
            return Err(Error::UnknownId {
                kind: "battery group",
                id: other.to_string(),
                valid: BATTERY.join(", "),
            })
        }
    })
}

/// The full battery `{Z6, S3, D8, D10, D12, A4, S4}`.
pub fn battery() -> Vec<FiniteGroupTable> {
    BATTERY
        .iter()
        .map(|n| battery_group(n).expect("battery name"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_orders() {
        let orders: Vec<usize> = battery().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![6, 6, 8, 10, 12, 12, 24]);
    }

    #[test]
    fn identity_first_and_abelian_flags() {
        for g in battery() {
            assert_eq!(g.element_orders()[0], 1);
            assert_eq!(g.is_abelian(), g.name() == "Z6", "{}", g.name());
        }
    }

    #[test]
    fn element_order_profiles() {
        let s3 = battery_group("S3").unwrap();
        let mut o = s3.element_orders().to_vec();
        o.sort();
        assert_eq!(o, vec![1, 2, 2, 2, 3, 3]);
        let a4 = alternating4();
        assert_eq!(a4.element_orders().iter().filter(|&&k| k == 3).count(), 8);
    }

    #[test]
    fn rejects_non_group() {
        assert!(FiniteGroupTable::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroupTable::from_table("bad", vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroupTable::from_table(
            "bad",
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]]
        )
        .is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = dihedral(4);
        let j = serde_json::to_string(&g.to_json()).unwrap();
        let back: GroupTableJson = serde_json::from_str(&j).unwrap();
        assert_eq!(FiniteGroupTable::from_json(&back).unwrap(), g);
    }

    #[test]
    fn unknown_battery_name() {
        assert!(battery_group("Q8").is_err());
    }
}
