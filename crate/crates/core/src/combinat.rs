//! Factorials and binomial coefficients over `BigInt`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Append-only table of factorials `0!, 1!, ..., m!`.
///
/// Lookups take `&self`; size the table with [`FactorialTable::ensure`]
/// before handing out shared references.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    facts: Vec<BigInt>,
}

impl Default for FactorialTable {
    fn default() -> Self {
        Self::new()
    }
}

impl FactorialTable {
    pub fn new() -> Self {
        FactorialTable {
            facts: vec![BigInt::one()],
        }
    }

    pub fn with_limit(m: u32) -> Self {
        let mut t = Self::new();
        t.ensure(m);
        t
    }

    /// Extends the table so that `get(m)` is valid.
    pub fn ensure(&mut self, m: u32) {
        while self.facts.len() <= m as usize {
            let i = self.facts.len();
            let next = &self.facts[i - 1] * BigInt::from(i);
            self.facts.push(next);
        }
    }

    pub fn limit(&self) -> u32 {
        (self.facts.len() - 1) as u32
    }

    /// `m!`. Panics if the table has not been extended to `m`.
    pub fn get(&self, m: u32) -> &BigInt {
        &self.facts[m as usize]
    }
}

pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` for signed arguments; zero whenever `k < 0` or `k > n` with `n >= 0`.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(n as u64, k as u64)
}

/// `(-1)^e` as a `BigInt`.
pub fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `1 * 3 * 5 * ... * (2n-1)`, with the empty product for `n = 0`.
pub fn odd_double_factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(9, 3), BigInt::from(84));
        assert_eq!(binomial(10, 2), BigInt::from(45));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial_i(-1, 0), BigInt::zero());
    }

    #[test]
    fn factorial_table_grows() {
        let mut t = FactorialTable::new();
        t.ensure(6);
        assert_eq!(t.get(6), &BigInt::from(720));
        assert_eq!(t.get(0), &BigInt::one());
        assert_eq!(t.limit(), 6);
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn double_factorial() {
        assert_eq!(odd_double_factorial(3), BigInt::from(15));
        assert_eq!(odd_double_factorial(0), BigInt::one());
    }
}
