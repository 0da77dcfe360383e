//! Truncated exponential generating functions over the rationals.
//!
//! A series `phi(x) = sum_n f_n x^n / n!` with `f_0 = 0` is stored as
//! `f_1..f_N`. Reversion has three independent routes: the Laurent family
//! `A(n,1)`, the associated-Bell sum with powers of `1/f_1`, and a direct
//! solve by ordinary power-series substitution.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, FactorialTable};
use crate::msp::{MspCache, MspKind};
use crate::{Error, Result};

/// Coefficients `f_1..f_N` of an EGF with zero constant term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EgfCoeffs {
    coeffs: Vec<BigRational>,
}

impl EgfCoeffs {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(EgfCoeffs { coeffs })
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Result<Self> {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The series `x` to order `n`.
    pub fn identity(n: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); n.max(1) as usize];
        coeffs[0] = BigRational::one();
        EgfCoeffs { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// `f_n`, 1-based; zero for `n = 0` and past the truncation order.
    pub fn get(&self, n: u32) -> BigRational {
        if n == 0 {
            return BigRational::zero();
        }
        self.coeffs
            .get(n as usize - 1)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, n: u32) -> EgfCoeffs {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n.max(1) as usize, BigRational::zero());
        EgfCoeffs { coeffs }
    }

    fn first(&self) -> Result<&BigRational> {
        let f1 = &self.coeffs[0];
        if f1.is_zero() {
            Err(Error::NotInvertible)
        } else {
            Ok(f1)
        }
    }
}

/// Polynomial in a formal parameter `t`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TPoly {
    coeffs: Vec<BigRational>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// EGF product: `h_n = sum_j C(n,j) f_j g_(n-j)` for `n = 0..=order`, with
/// the slices holding `f_0, f_1, ...`; missing entries count as zero.
pub fn egf_product(f: &[BigRational], g: &[BigRational], order: u32) -> Vec<BigRational> {
    let at = |s: &[BigRational], i: usize| s.get(i).cloned().unwrap_or_else(BigRational::zero);
    (0..=order as usize)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    BigRational::from_integer(binomial(n as u64, j as u64))
                        * at(f, j)
                        * at(g, n - j)
                })
                .sum()
        })
        .collect()
}

fn bell_at(cache: &mut MspCache, n: u32, k: u32, g: &[BigRational]) -> Result<BigRational> {
    cache.poly(MspKind::SecondKind, n, k)?.eval_rat(g)
}

/// `f(g(x))` to the smaller of the two orders: `h_n = sum_k B(n,k)(g) f_k`.
pub fn egf_compose(f: &EgfCoeffs, g: &EgfCoeffs) -> Result<EgfCoeffs> {
    egf_compose_with(&mut MspCache::new(), f, g)
}

pub fn egf_compose_with(cache: &mut MspCache, f: &EgfCoeffs, g: &EgfCoeffs) -> Result<EgfCoeffs> {
    let order = f.order().min(g.order());
    let gs = g.as_slice();
    let mut out = Vec::with_capacity(order as usize);
    for n in 1..=order {
        let mut h = BigRational::zero();
        for k in 1..=n {
            let fk = f.get(k);
            if fk.is_zero() {
                continue;
            }
            h += bell_at(cache, n, k, &gs[..(n - k + 1) as usize])? * fk;
        }
        out.push(h);
    }
    EgfCoeffs::new(out)
}

/// Ordinary-form coefficients `a_n = f_n / n!`, index 0 holding `a_0 = 0`.
fn to_ordinary(f: &EgfCoeffs, facts: &FactorialTable) -> Vec<BigRational> {
    let mut a = vec![BigRational::zero()];
    for n in 1..=f.order() {
        a.push(f.get(n) / BigRational::from_integer(facts.get(n).clone()));
    }
    a
}

fn from_ordinary(a: &[BigRational], facts: &FactorialTable) -> Result<EgfCoeffs> {
    EgfCoeffs::new(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigRational::from_integer(facts.get(n as u32).clone()))
            .collect(),
    )
}

/// Truncated product of ordinary series with zero-based indices.
fn ogf_mul(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f(g(x))` by substituting ordinary power series directly; independent of
/// the Bell polynomial machinery.
pub fn compose_direct(f: &EgfCoeffs, g: &EgfCoeffs) -> Result<EgfCoeffs> {
    let order = f.order().min(g.order());
    let len = order as usize + 1;
    let facts = FactorialTable::with_limit(f.order().max(g.order()));
    let a = to_ordinary(f, &facts);
    let b = to_ordinary(g, &facts);
    let mut acc = vec![BigRational::zero(); len];
    let mut power = b.clone();
    power.truncate(len);
    for ak in a.iter().take(len).skip(1) {
        for (i, p) in power.iter().enumerate() {
            acc[i] += ak * p;
        }
        power = ogf_mul(&power, &b, len);
    }
    from_ordinary(&acc, &facts)
}

/// Compositional inverse via `fbar_n = A(n,1)(f_1, ..., f_n)`.
pub fn revert_msp(f: &EgfCoeffs) -> Result<EgfCoeffs> {
    revert_msp_with(&mut MspCache::new(), f)
}

pub fn revert_msp_with(cache: &mut MspCache, f: &EgfCoeffs) -> Result<EgfCoeffs> {
    f.first()?;
    let fs = f.as_slice();
    let out = (1..=f.order())
        .map(|n| {
            cache
                .get(MspKind::LieFirst, n, 1)?
                .eval_rat(&fs[..n as usize])
        })
        .collect::<Result<Vec<_>>>()?;
    EgfCoeffs::new(out)
}

/// Compositional inverse via
/// `fbar_n = sum_{k=1}^{n-1} (-1)^k f_1^(-n-k) Bt(n+k-1,k)(0, f_2, ..., f_n)`
/// and `fbar_1 = 1/f_1`.
pub fn revert_comtet(f: &EgfCoeffs) -> Result<EgfCoeffs> {
    revert_comtet_with(&mut MspCache::new(), f)
}

pub fn revert_comtet_with(cache: &mut MspCache, f: &EgfCoeffs) -> Result<EgfCoeffs> {
    let inv = f.first()?.recip();
    let mut point = f.as_slice().to_vec();
    point[0] = BigRational::zero();
    let mut out = vec![inv.clone()];
    for n in 2..=f.order() {
        let mut acc = BigRational::zero();
        for k in 1..n {
            let bt = cache.poly(MspKind::AssociatedSecond, n + k - 1, k)?;
            let v = bt.eval_rat(&point[..n as usize])?;
            let term = v * num_traits::pow(inv.clone(), (n + k) as usize);
            if k % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push(acc);
    }
    EgfCoeffs::new(out)
}

/// Compositional inverse by solving `f(g(x)) = x` one coefficient at a time
/// in ordinary form. The coefficient of `x^n` in `sum_k a_k g^k` is
/// `a_1 g_n` plus terms in `g_1..g_(n-1)` only.
pub fn revert_oracle(f: &EgfCoeffs) -> Result<EgfCoeffs> {
    let a1 = f.first()?.clone();
    let order = f.order() as usize;
    let facts = FactorialTable::with_limit(order as u32);
    let a = to_ordinary(f, &facts);
    let len = order + 1;
    let mut g = vec![BigRational::zero(); len];
    g[1] = a1.recip();
    for n in 2..=order {
        let mut rest = BigRational::zero();
        let mut power = ogf_mul(&g, &g, n + 1);
        for ak in a.iter().take(n + 1).skip(2) {
            rest += ak * &power[n];
            power = ogf_mul(&power, &g, n + 1);
        }
        g[n] = -rest / &a1;
    }
    from_ordinary(&g, &facts)
}

/// Total-partition triangle `b(n,k)`, rows `0..=n_max`, from
/// `b(n,k) = (2n-k) b(n-1,k-1) + 2k b(n-1,k)` with `b(0,0) = 1`.
pub fn total_partitions_triangle(n_max: u32) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=n_max as usize {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row = (0..=n)
            .map(|k| {
                let left = if k >= 1 {
                    BigInt::from(2 * n - k) * at(k - 1)
                } else {
                    BigInt::zero()
                };
                left + BigInt::from(2 * k) * at(k)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `t(1..=n_max)` with `t(n) = sum_k b(n-1,k)`.
pub fn total_partitions(n_max: u32) -> Vec<BigInt> {
    if n_max == 0 {
        return Vec::new();
    }
    total_partitions_triangle(n_max - 1)
        .iter()
        .map(|row| row.iter().sum())
        .collect()
}

/// Rows `0..=order` of `exp(t*phi)`: row `n` is `sum_k B(n,k)(f) t^k`.
pub fn exp_transform(f: &EgfCoeffs, order: u32) -> Result<Vec<TPoly>> {
    exp_transform_with(&mut MspCache::new(), f, order)
}

pub fn exp_transform_with(cache: &mut MspCache, f: &EgfCoeffs, order: u32) -> Result<Vec<TPoly>> {
    let point = f.truncate(order.max(f.order())).as_slice().to_vec();
    let mut rows = vec![TPoly::new(vec![BigRational::one()])];
    for n in 1..=order {
        let mut row = vec![BigRational::zero()];
        for k in 1..=n {
            row.push(bell_at(cache, n, k, &point[..(n - k + 1) as usize])?);
        }
        rows.push(TPoly::new(row));
    }
    Ok(rows)
}

/// Rows `0..=order` of `exp(t*phibar)` written through `phi` itself: row `n`
/// is `sum_k A(n,k)(f) t^k`.
pub fn exp_transform_inverse(f: &EgfCoeffs, order: u32) -> Result<Vec<TPoly>> {
    exp_transform_inverse_with(&mut MspCache::new(), f, order)
}

pub fn exp_transform_inverse_with(
    cache: &mut MspCache,
    f: &EgfCoeffs,
    order: u32,
) -> Result<Vec<TPoly>> {
    f.first()?;
    let point = f.truncate(order.max(f.order())).as_slice().to_vec();
    let mut rows = vec![TPoly::new(vec![BigRational::one()])];
    for n in 1..=order {
        let mut row = vec![BigRational::zero()];
        for k in 1..=n {
            let a = cache.get(MspKind::LieFirst, n, k)?;
            row.push(a.eval_rat(&point[..(n - k + 1) as usize])?);
        }
        rows.push(TPoly::new(row));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn products() {
        let ones = ints(&[1; 8]);
        let h = egf_product(&ones, &ones, 7);
        for (n, v) in h.iter().enumerate() {
            assert_eq!(v, &q(1 << n));
        }
        let f = ints(&[0, 3, -1, 4]);
        assert_eq!(egf_product(&f, &ints(&[1]), 3), f);
        let em1 = ints(&[0, 1, 1, 1, 1, 1, 1]);
        let h = egf_product(&em1, &em1, 6);
        assert_eq!(h[1], q(0));
        for (n, v) in h.iter().enumerate().skip(1) {
            assert_eq!(v, &q((1 << n) - 2));
        }
    }

    #[test]
    fn composition() {
        let f = EgfCoeffs::from_ints([2, -1, 5, 7]).unwrap();
        assert_eq!(egf_compose(&f, &EgfCoeffs::identity(4)).unwrap(), f);
        let em1 = EgfCoeffs::from_ints([1; 6]).unwrap();
        let h = egf_compose(&em1, &em1).unwrap();
        assert_eq!(h.get(3), q(5));
        assert_eq!(h, compose_direct(&em1, &em1).unwrap());
    }

    fn rooted() -> EgfCoeffs {
        EgfCoeffs::from_ints((1..=6).map(|j| if j % 2 == 1 { j } else { -j })).unwrap()
    }

    #[test]
    fn reversion_named_series() {
        let trees = ints(&[1, 2, 9, 64, 625, 7776]);
        for revert in [revert_msp, revert_comtet, revert_oracle] {
            assert_eq!(revert(&rooted()).unwrap().as_slice(), &trees[..]);
            let id = EgfCoeffs::identity(5);
            assert_eq!(revert(&id).unwrap(), id);
            let log = revert(&EgfCoeffs::from_ints([1; 6]).unwrap()).unwrap();
            assert_eq!(log.as_slice(), &ints(&[1, -1, 2, -6, 24, -120])[..]);
            let tp = revert(&EgfCoeffs::from_ints([1, -1, -1, -1]).unwrap()).unwrap();
            assert_eq!(tp.as_slice(), &ints(&[1, 1, 4, 26])[..]);
            let half = revert(&EgfCoeffs::from_ints([2, 0, 0]).unwrap()).unwrap();
            assert_eq!(half.get(1), BigRational::new(1.into(), 2.into()));
            assert_eq!(half.get(2), q(0));
            let zero = EgfCoeffs::from_ints([0, 1]).unwrap();
            assert_eq!(revert(&zero), Err(Error::NotInvertible));
        }
    }

    #[test]
    fn total_partition_values() {
        let b = total_partitions_triangle(8);
        for (n, row) in b.iter().enumerate().skip(1) {
            assert_eq!(row[1], BigInt::from(1u64 << (n - 1)));
            let nf: BigInt = (1..=n as u64).map(BigInt::from).product();
            assert_eq!(row[n], nf);
            let want = (1i64 << (n - 1)) * ((1i64 << n) - n as i64 - 1);
            assert_eq!(row.get(2).cloned().unwrap_or_default(), BigInt::from(want));
        }
        let t: Vec<BigInt> = total_partitions(4);
        assert_eq!(t, [1, 1, 4, 26].map(BigInt::from).to_vec());
    }

    #[test]
    fn exp_transform_rows() {
        let em1 = EgfCoeffs::from_ints([1; 5]).unwrap();
        let rows = exp_transform(&em1, 5).unwrap();
        assert_eq!(rows[3].to_string(), "t + 3*t^2 + t^3");
        let inv = exp_transform_inverse(&em1, 5).unwrap();
        assert_eq!(inv[3].to_string(), "2*t - 3*t^2 + t^3");
        assert_eq!(rows[4].eval(&q(1)), q(15));
    }
}
