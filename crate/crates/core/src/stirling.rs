//! Integer specialisations: Stirling numbers of both kinds, unsigned cycle
//! numbers, associated Stirling numbers, Lah numbers and Bell numbers.
//!
//! Tables come from the defining recurrences. The closed formulas below are
//! independent routes to the same values.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, sign, FactorialTable};
use crate::ptypes;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NumberKind {
    /// Signed Stirling numbers of the first kind `s1(n,k)`.
    S1,
    /// Stirling numbers of the second kind `s2(n,k)`.
    S2,
    /// Unsigned cycle numbers `c(n,k) = |s1(n,k)|`.
    Cycle,
    /// Associated Stirling numbers (partitions with no singleton block).
    AssocS2,
    /// Signed Lah numbers `l(n,k) = (-1)^n l+(n,k)`.
    Lah,
    /// Unsigned Lah numbers `l+(n,k)`.
    LahUnsigned,
}

impl fmt::Display for NumberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NumberKind::S1 => "s1",
            NumberKind::S2 => "s2",
            NumberKind::Cycle => "c",
            NumberKind::AssocS2 => "assoc",
            NumberKind::Lah => "lah",
            NumberKind::LahUnsigned => "lah+",
        })
    }
}

/// Triangle of values `(n,k)` for `0 <= k <= n <= N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumberTable {
    kind: NumberKind,
    rows: Vec<Vec<BigInt>>,
}

impl NumberTable {
    /// Builds the table for `kind` up to row `n_max`.
    pub fn new(kind: NumberKind, n_max: u32) -> Self {
        let rows = match kind {
            NumberKind::S1 => triangle(n_max, |n, k, prev| {
                at(prev, k.wrapping_sub(1)) - BigInt::from(n) * at(prev, k)
            }),
            NumberKind::S2 => triangle(n_max, |_, k, prev| {
                at(prev, k.wrapping_sub(1)) + BigInt::from(k) * at(prev, k)
            }),
            NumberKind::Cycle => triangle(n_max, |n, k, prev| {
                at(prev, k.wrapping_sub(1)) + BigInt::from(n) * at(prev, k)
            }),
            NumberKind::LahUnsigned => triangle(n_max, |n, k, prev| {
                at(prev, k.wrapping_sub(1)) + BigInt::from(n + k) * at(prev, k)
            }),
            NumberKind::Lah => {
                let plus = NumberTable::new(NumberKind::LahUnsigned, n_max);
                plus.rows
                    .into_iter()
                    .enumerate()
                    .map(|(n, row)| {
                        let s = sign(n as i64);
                        row.into_iter().map(|v| &s * v).collect()
                    })
                    .collect()
            }
            NumberKind::AssocS2 => assoc_rows(n_max),
        };
        NumberTable { kind, rows }
    }

    pub fn kind(&self) -> NumberKind {
        self.kind
    }

    /// Largest row index.
    pub fn size(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// Value at `(n,k)`, zero outside the triangle.
    pub fn get(&self, n: u32, k: u32) -> BigInt {
        self.rows
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: u32) -> &[BigInt] {
        &self.rows[n as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

fn at(row: &[BigInt], k: usize) -> BigInt {
    row.get(k).cloned().unwrap_or_default()
}

/// Rows `0..=n_max` from `t(n+1,k) = step(n, k, row n)` and `t(0,0) = 1`.
fn triangle(n_max: u32, step: impl Fn(usize, usize, &[BigInt]) -> BigInt) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..n_max as usize {
        let row = (0..=n + 1).map(|k| step(n, k, &rows[n])).collect();
        rows.push(row);
    }
    rows
}

/// `S~(n,k) = sum_{j>=2} C(n-1,j-1) S~(n-j,k-1)`.
fn assoc_rows(n_max: u32) -> Vec<Vec<BigInt>> {
    let n_max = n_max as usize;
    let mut rows: Vec<Vec<BigInt>> = (0..=n_max).map(|n| vec![BigInt::zero(); n + 1]).collect();
    rows[0][0] = BigInt::one();
    for n in 1..=n_max {
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 2..=n - k + 1 {
                acc += binomial((n - 1) as u64, (j - 1) as u64) * &rows[n - j][k - 1];
            }
            rows[n][k] = acc;
        }
    }
    rows
}

pub fn s1_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::S1, n_max)
}

pub fn s2_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::S2, n_max)
}

pub fn cycle_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::Cycle, n_max)
}

pub fn assoc_s2_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::AssocS2, n_max)
}

pub fn lah_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::Lah, n_max)
}

pub fn lah_unsigned_table(n_max: u32) -> NumberTable {
    NumberTable::new(NumberKind::LahUnsigned, n_max)
}

/// Bell numbers `B(0..=n_max)`, the row sums of `s2`.
pub fn bell_numbers(n_max: u32) -> Vec<BigInt> {
    s2_table(n_max)
        .rows
        .iter()
        .map(|r| r.iter().sum())
        .collect()
}

fn check_range(n: u32, k: u32) -> Result<()> {
    if 1 <= k && k <= n {
        Ok(())
    } else {
        Err(Error::IndexRange {
            what: "stirling",
            n,
            k,
        })
    }
}

/// `s2(n,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n`.
pub fn s2_bertrand(n: u32, k: u32) -> Result<BigInt> {
    check_range(n, k)?;
    let sum: BigInt = (0..=k)
        .map(|j| {
            sign(i64::from(k - j))
                * binomial(u64::from(k), u64::from(j))
                * num_traits::pow(BigInt::from(j), n as usize)
        })
        .sum();
    let (q, r) = sum.div_rem(&factorial(k));
    if !r.is_zero() {
        return Err(Error::NotIntegral);
    }
    Ok(q)
}

/// Closed form `l+(n,k) = (n!/k!) C(n-1,k-1)`.
pub fn lah_unsigned_closed(n: u32, k: u32) -> Result<BigInt> {
    check_range(n, k)?;
    Ok(factorial(n) / factorial(k) * binomial(u64::from(n - 1), u64::from(k - 1)))
}

/// Paired factors `(a_r, b_r)` with `s1(n,k) = sum_r a_r * b_r`, where
/// `a_r = (-1)^(n-1-r) C(2n-2-r, k-1)` and
/// `b_r = C(2n-k, r+1-k) s2(2n-1-k-r, n-1-r)`, for `r = k-1..n-1`.
pub fn s1_schloemilch_terms(n: u32, k: u32) -> Result<Vec<(BigInt, BigInt)>> {
    check_range(n, k)?;
    let s2 = s2_table(2 * n);
    Ok((k - 1..n)
        .map(|r| {
            let a =
                sign(i64::from(n - 1 - r)) * binomial(u64::from(2 * n - 2 - r), u64::from(k - 1));
            let b = binomial(u64::from(2 * n - k), u64::from(r + 1 - k))
                * s2.get(2 * n - 1 - k - r, n - 1 - r);
            (a, b)
        })
        .collect())
}

pub fn s1_schloemilch(n: u32, k: u32) -> Result<BigInt> {
    Ok(s1_schloemilch_terms(n, k)?.iter().map(|(a, b)| a * b).sum())
}

/// Paired factors `(a_r, b_r)` with `a_r` as in [`s1_schloemilch_terms`] and
/// `b_r = S~(2n-1-k-r, n-1-r)`.
pub fn s1_via_assoc_terms(n: u32, k: u32) -> Result<Vec<(BigInt, BigInt)>> {
    check_range(n, k)?;
    let assoc = assoc_s2_table(2 * n);
    Ok((k - 1..n)
        .map(|r| {
            let a =
                sign(i64::from(n - 1 - r)) * binomial(u64::from(2 * n - 2 - r), u64::from(k - 1));
            (a, assoc.get(2 * n - 1 - k - r, n - 1 - r))
        })
        .collect())
}

pub fn s1_via_assoc(n: u32, k: u32) -> Result<BigInt> {
    Ok(s1_via_assoc_terms(n, k)?.iter().map(|(a, b)| a * b).sum())
}

/// `s2(n,k)` from cycle-function values over `P(2n-1-k, n-1)`, summed in
/// exact rationals. Fails with [`Error::NotIntegral`] if the total is not an
/// integer.
pub fn s2_via_cycle(n: u32, k: u32) -> Result<BigInt> {
    check_range(n, k)?;
    let facts = FactorialTable::with_limit(2 * n);
    let top = binomial(u64::from(2 * n - 2), u64::from(k - 1));
    let mut acc = BigRational::zero();
    for r in ptypes::enumerate(2 * n - 1 - k, n - 1) {
        let r1 = r.r(1);
        let s = sign(i64::from(r1) - i64::from(k - 1));
        let ratio = BigRational::new(top.clone(), binomial(u64::from(2 * n - 2), u64::from(r1)));
        acc += ratio * BigRational::from_integer(s * ptypes::cycle_fn_with(&r, &facts));
    }
    if !acc.is_integer() {
        return Err(Error::NotIntegral);
    }
    Ok(acc.to_integer())
}

/// First `(n,k)` with `sum_j s1(n,j) s2(j,k) != [n == k]`, `1 <= k <= n <= N`.
pub fn orthogonality_failure(n_max: u32) -> Option<(u32, u32)> {
    let s1 = s1_table(n_max);
    let s2 = s2_table(n_max);
    product_failure(n_max, 1, |n, j, k| s1.get(n, j) * s2.get(j, k))
}

pub fn orthogonality_check(n_max: u32) -> bool {
    orthogonality_failure(n_max).is_none()
}

/// First `(n,k)` with `sum_j l(n,j) l(j,k) != [n == k]`.
pub fn lah_self_inverse_failure(n_max: u32) -> Option<(u32, u32)> {
    let l = lah_table(n_max);
    product_failure(n_max, 1, |n, j, k| l.get(n, j) * l.get(j, k))
}

pub fn lah_self_inverse_check(n_max: u32) -> bool {
    lah_self_inverse_failure(n_max).is_none()
}

fn product_failure(
    n_max: u32,
    lo: u32,
    term: impl Fn(u32, u32, u32) -> BigInt,
) -> Option<(u32, u32)> {
    for n in lo..=n_max {
        for k in lo..=n {
            let sum: BigInt = (k..=n).map(|j| term(n, j, k)).sum();
            let want = if n == k {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if sum != want {
                return Some((n, k));
            }
        }
    }
    None
}

/// First `(n,k)` violating `c(n+1,k+1) = sum_j (n!/j!) c(j,k)` or
/// `s2(n+1,k+1) = sum_j C(n,j) s2(j,k)`, for `0 <= k <= n <= N`.
pub fn summation_identities_failure(n_max: u32) -> Option<(u32, u32)> {
    let c = cycle_table(n_max + 1);
    let s2 = s2_table(n_max + 1);
    let facts = FactorialTable::with_limit(n_max);
    for n in 0..=n_max {
        for k in 0..=n {
            let cyc: BigInt = (k..=n)
                .map(|j| facts.get(n) / facts.get(j) * c.get(j, k))
                .sum();
            let sub: BigInt = (k..=n)
                .map(|j| binomial(u64::from(n), u64::from(j)) * s2.get(j, k))
                .sum();
            if cyc != c.get(n + 1, k + 1) || sub != s2.get(n + 1, k + 1) {
                return Some((n, k));
            }
        }
    }
    None
}

pub fn summation_identities_check(n_max: u32) -> bool {
    summation_identities_failure(n_max).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn first_kind_values() {
        let t = s1_table(10);
        for n in 1..=10u32 {
            assert_eq!(t.get(n, 1), sign(i64::from(n) - 1) * factorial(n - 1));
            assert_eq!(t.get(n, n), b(1));
        }
        assert_eq!(t.get(7, 4), b(-735));
        assert_eq!(t.get(3, 5), b(0));
    }

    #[test]
    fn second_kind_values() {
        let t = s2_table(9);
        assert_eq!(t.get(4, 2), b(7));
        assert_eq!(t.get(6, 1), b(1));
        assert_eq!(s2_bertrand(4, 2), Ok(b(7)));
        assert_eq!(s2_bertrand(5, 5), Ok(b(1)));
        assert_eq!(s2_bertrand(9, 4), Ok(t.get(9, 4)));
    }

    #[test]
    fn schloemilch_products() {
        let terms = s1_schloemilch_terms(7, 4).unwrap();
        let want = [(-84, 90), (56, 150), (-35, 45), (20, 0)];
        assert_eq!(terms.len(), want.len());
        for ((a, bb), (wa, wb)) in terms.iter().zip(want) {
            assert_eq!((a.clone(), bb.clone()), (b(wa), b(wb)));
        }
        assert_eq!(s1_schloemilch(7, 4), Ok(b(-735)));
        let terms = s1_via_assoc_terms(7, 4).unwrap();
        let want = [(-84, 15), (56, 10), (-35, 1), (20, 0)];
        for ((a, bb), (wa, wb)) in terms.iter().zip(want) {
            assert_eq!((a.clone(), bb.clone()), (b(wa), b(wb)));
        }
        assert_eq!(s1_via_assoc(7, 4), Ok(b(-735)));
        assert_eq!(s1_schloemilch(5, 5), Ok(b(1)));
        assert_eq!(s1_via_assoc(5, 5), Ok(b(1)));
    }

    #[test]
    fn associated_values() {
        let t = assoc_s2_table(12);
        assert_eq!(t.get(6, 3), b(15));
        assert_eq!(t.get(5, 2), b(10));
        for n in 1..=12 {
            assert_eq!(t.get(n, n), b(0));
        }
    }

    #[test]
    fn lah_values() {
        let plus = lah_unsigned_table(10);
        let signed = lah_table(10);
        assert_eq!(plus.get(4, 2), b(36));
        assert_eq!(lah_unsigned_closed(4, 2), Ok(b(36)));
        for n in 0..=10u32 {
            assert_eq!(signed.get(n, n), sign(i64::from(n)));
        }
        assert!(lah_self_inverse_check(10));
    }

    #[test]
    fn cycle_route() {
        assert_eq!(s2_via_cycle(3, 2), Ok(b(3)));
        assert_eq!(s2_via_cycle(6, 3), Ok(b(90)));
        assert_eq!(s2_via_cycle(4, 4), Ok(b(1)));
    }

    #[test]
    fn orthogonality_rows() {
        let s1 = s1_table(4);
        let s2 = s2_table(4);
        let row: Vec<BigInt> = (2..=4).map(|j| s1.get(4, j) * s2.get(j, 2)).collect();
        assert_eq!(row, vec![b(11), b(-18), b(7)]);
        assert!(orthogonality_check(1));
        assert!(orthogonality_check(12));
    }

    #[test]
    fn summation_identities() {
        let c = cycle_table(4);
        let sum: BigInt = (1..=3u32)
            .map(|j| factorial(3) / factorial(j) * c.get(j, 1))
            .sum();
        assert_eq!(sum, b(11));
        assert!(summation_identities_check(12));
    }

    #[test]
    fn bell_number_values() {
        assert_eq!(bell_numbers(8)[8], b(4140));
    }
}
