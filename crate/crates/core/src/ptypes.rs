//! Partition types and their coefficient functions.
//!
//! A partition type `r = (r1, r2, ...)` records how many blocks of each size a
//! set partition has. `P(n,k)` is the set of types with `sum r_j = k` blocks
//! covering `sum j*r_j = n` elements.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::{sign, FactorialTable};
use crate::poly::Monomial;
use crate::{Error, Result};

/// Multiplicity vector `(r1, r2, ..., rL)` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PartitionType(Vec<u32>);

impl PartitionType {
    pub fn new(mut r: Vec<u32>) -> Self {
        while r.last() == Some(&0) {
            r.pop();
        }
        PartitionType(r)
    }

    /// `r_j`, 1-based; zero past the stored length.
    pub fn r(&self, j: usize) -> u32 {
        assert!(j >= 1, "block sizes start at 1");
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.0
    }

    /// Number of elements, `sum j*r_j`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| (i as u32 + 1) * r)
            .sum()
    }

    /// Number of blocks, `sum r_j`.
    pub fn length(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest block size that occurs (0 for the empty type).
    pub fn max_part(&self) -> usize {
        self.0.len()
    }

    /// The monomial `X1^r1 * X2^r2 * ...`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All of `P(n,k)`, sorted lexicographically on the trimmed vectors.
pub fn enumerate(n: u32, k: u32) -> Vec<PartitionType> {
    let mut out = Vec::new();
    if k > n || (k == 0 && n > 0) {
        return out;
    }
    if n == 0 {
        out.push(PartitionType::default());
        return out;
    }
    let top = (n - k + 1) as usize;
    let mut r = vec![0u32; top];
    descend(top, n, k, &mut r, &mut out);
    out.sort();
    out
}

/// Chooses `r_j` for `j = part, part-1, ..., 1`, keeping the remaining
/// `(weight, length)` reachable with parts no larger than `part - 1`.
fn descend(part: usize, weight: u32, length: u32, r: &mut [u32], out: &mut Vec<PartitionType>) {
    if part == 1 {
        if weight == length {
            r[0] = weight;
            out.push(PartitionType::new(r.to_vec()));
            r[0] = 0;
        }
        return;
    }
    let j = part as u32;
    let most = length.min(weight / j);
    for m in 0..=most {
        let w = weight - j * m;
        let l = length - m;
        if l <= w && w <= (j - 1) * l {
            r[part - 1] = m;
            descend(part - 1, w, l, r, out);
        }
    }
    r[part - 1] = 0;
}

fn table_for(r: &PartitionType) -> FactorialTable {
    let top = r
        .weight()
        .max(r.length() * 2 + 1)
        .max(r.multiplicities().iter().copied().max().unwrap_or(0))
        .max(r.max_part() as u32);
    FactorialTable::with_limit(top)
}

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "coefficient {num}/{den} is not an integer");
    q
}

fn prod_r_factorials(r: &PartitionType, facts: &FactorialTable) -> BigInt {
    r.multiplicities()
        .iter()
        .map(|&m| facts.get(m).clone())
        .product()
}

/// Order function `n! / prod r_j!`.
pub fn order_fn(r: &PartitionType) -> BigInt {
    order_fn_with(r, &table_for(r))
}

pub fn order_fn_with(r: &PartitionType, facts: &FactorialTable) -> BigInt {
    exact_div(facts.get(r.weight()), &prod_r_factorials(r, facts))
}

/// Cycle function `n! / prod (r_j! * j^r_j)`.
pub fn cycle_fn(r: &PartitionType) -> BigInt {
    cycle_fn_with(r, &table_for(r))
}

pub fn cycle_fn_with(r: &PartitionType, facts: &FactorialTable) -> BigInt {
    let den: BigInt = r
        .multiplicities()
        .iter()
        .enumerate()
        .map(|(i, &m)| facts.get(m) * num_traits::pow(BigInt::from(i + 1), m as usize))
        .product();
    exact_div(facts.get(r.weight()), &den)
}

/// Subset function `n! / prod (r_j! * (j!)^r_j)`.
pub fn subset_fn(r: &PartitionType) -> BigInt {
    subset_fn_with(r, &table_for(r))
}

pub fn subset_fn_with(r: &PartitionType, facts: &FactorialTable) -> BigInt {
    let den: BigInt = r
        .multiplicities()
        .iter()
        .enumerate()
        .map(|(i, &m)| facts.get(m) * num_traits::pow(facts.get(i as u32 + 1).clone(), m as usize))
        .product();
    exact_div(facts.get(r.weight()), &den)
}

/// The first-kind indices `(n, k)` a type in `P(2n-1-k, n-1)` belongs to.
pub fn first_kind_indices(r: &PartitionType) -> Result<(u32, u32)> {
    let len = i64::from(r.length());
    let k = 2 * len + 1 - i64::from(r.weight());
    if k < 1 {
        return Err(Error::NotFirstKindType);
    }
    Ok((len as u32 + 1, k as u32))
}

/// Stirling function: the coefficient of `X^r` in `S(n,k)`, with `(n,k)`
/// recovered from `r` itself.
pub fn stirling_fn(r: &PartitionType) -> Result<BigInt> {
    stirling_fn_with(r, &table_for(r))
}

pub fn stirling_fn_with(r: &PartitionType, facts: &FactorialTable) -> Result<BigInt> {
    let (n, k) = first_kind_indices(r)?;
    let r1 = r.r(1);
    let top = facts.get(2 * n - 2 - r1);
    let den: BigInt = facts.get(k - 1)
        * r.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| {
                facts.get(m) * num_traits::pow(facts.get(i as u32 + 1).clone(), m as usize)
            })
            .product::<BigInt>();
    let s = sign(i64::from(n) - 1 - i64::from(r1));
    Ok(s * exact_div(top, &den))
}

/// `sum f(r)` over `P(n,k)`.
pub fn sum_over<F: Fn(&PartitionType) -> BigInt>(n: u32, k: u32, f: F) -> BigInt {
    enumerate(n, k).iter().map(f).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> PartitionType {
        PartitionType::new(v.to_vec())
    }

    #[test]
    fn enumerate_small_sets() {
        assert_eq!(enumerate(4, 2), vec![t(&[0, 2]), t(&[1, 0, 1])]);
        assert!(enumerate(3, 0).is_empty());
        assert_eq!(enumerate(0, 0), vec![PartitionType::default()]);
        assert_eq!(enumerate(8, 3).len(), 5);
        assert_eq!(enumerate(5, 5), vec![t(&[5])]);
        assert!(enumerate(2, 3).is_empty());
    }

    #[test]
    fn members_have_requested_weight_and_length() {
        for n in 0..=14 {
            for k in 0..=n {
                for r in enumerate(n, k) {
                    assert_eq!((r.weight(), r.length()), (n, k));
                    if k >= 1 {
                        assert!(r.max_part() as u32 <= n - k + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn coefficient_function_values() {
        assert_eq!(order_fn(&t(&[2, 1])), BigInt::from(12));
        assert_eq!(order_fn(&PartitionType::default()), BigInt::from(1));
        let lah: BigInt = enumerate(4, 2).iter().map(order_fn).sum();
        assert_eq!(lah, BigInt::from(36));
        assert_eq!(cycle_fn(&t(&[0, 0, 1])), BigInt::from(2));
        assert_eq!(sum_over(4, 2, cycle_fn), BigInt::from(11));
        assert_eq!(cycle_fn(&PartitionType::default()), BigInt::from(1));
        assert_eq!(subset_fn(&t(&[1, 0, 1])), BigInt::from(4));
        assert_eq!(subset_fn(&t(&[0, 2])), BigInt::from(3));
        assert_eq!(subset_fn(&t(&[6])), BigInt::from(1));
    }

    #[test]
    fn stirling_function_values() {
        assert_eq!(stirling_fn(&t(&[1, 0, 1])), Ok(BigInt::from(-1)));
        assert_eq!(stirling_fn(&t(&[0, 2])), Ok(BigInt::from(3)));
        for n in 1..8 {
            assert_eq!(stirling_fn(&t(&[n - 1])), Ok(BigInt::from(1)));
        }
        // weight 5, length 1 gives k = -2
        assert_eq!(
            stirling_fn(&t(&[0, 0, 0, 0, 1])),
            Err(Error::NotFirstKindType)
        );
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(t(&[1, 0, 1]).to_string(), "1,0,1");
        assert_eq!(PartitionType::default().to_string(), "0");
    }
}
