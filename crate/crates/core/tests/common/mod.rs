//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use sextic_groups::invariants::FiniteGroupTable;
use sextic_groups::presentation::Presentation;

/// Exact determinant of a small integer matrix by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][j]) * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith invariants from determinantal divisors: `d_k` is the gcd of all
/// `k×k` minors and the `k`-th invariant factor is `d_k / d_{k-1}`.
/// Returns `min(rows, cols)` entries, zeros last.
pub fn smith_by_minors(m: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let n = rows.min(cols);
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat_n(BigInt::zero(), n - out.len()));
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Number of `x ∈ (Z/q)^cols` with `m·x ≡ 0`, i.e. `|Hom(Z^cols/rowspace, Z/q)|`.
pub fn hom_count_to_cyclic(m: &[Vec<i64>], cols: usize, q: i64) -> u64 {
    let mut x = vec![0i64; cols];
    let mut count = 0;
    loop {
        if m.iter().all(|row| {
            row.iter()
                .zip(&x)
                .map(|(a, b)| a * b)
                .sum::<i64>()
                .rem_euclid(q)
                == 0
        }) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == cols {
                return count;
            }
            x[i] += 1;
            if x[i] < q {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// The same count predicted by a list of Smith invariants.
pub fn predicted_cyclic_count(diag: &[BigInt], cols: usize, q: i64) -> u64 {
    let mut c: u64 = 1;
    for d in diag {
        c *= if d.is_zero() {
            q as u64
        } else {
            d.gcd(&BigInt::from(q)).try_into().unwrap_or(0u64)
        };
    }
    c * (q as u64).pow((cols - diag.len()) as u32)
}

/// Homomorphisms `p → g` by enumerating every generator tuple.
pub fn brute_hom_count(p: &Presentation, g: &FiniteGroupTable) -> (u64, u64) {
    let n = p.generators().len();
    let rels = p.indexed_relators();
    let order = g.order();
    let mut tuple = vec![0usize; n];
    let (mut homs, mut epis) = (0, 0);
    loop {
        let ok = rels.iter().all(|r| {
            r.iter().fold(0usize, |acc, &(i, inv)| {
                let x = if inv { g.inv(tuple[i]) } else { tuple[i] };
                g.mul(acc, x)
            }) == 0
        });
        if ok {
            homs += 1;
            if g.generated_subgroup_order(&tuple) == order {
                epis += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return (homs, epis);
            }
            tuple[i] += 1;
            if tuple[i] < order {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}
