//! Generators for the Stirling polynomial families and the transforms that
//! relate them.
//!
//! * `S(n,k)`: first kind, homogeneous of degree `n-1`, isobaric of weight `2n-1-k`.
//! * `B(n,k)`: partial exponential Bell polynomials (second kind).
//! * `Bt(n,k)`: associated Bell polynomials, `B(n,k)` with `X1 = 0`.
//! * `L(n,k)`: Lah polynomials, weighted by the order function.
//! * `A(n,k) = S(n,k) / X1^(2n-1)`, a Laurent polynomial in `X1`.
//!
//! Each family has a closed form summing over partition types and at least
//! one recurrence. The functions taking a [`MspCache`] evaluate identities on
//! top of cached closed-form values.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::combinat::{binomial, sign, FactorialTable};
use crate::poly::{LaurentX1, MPoly};
use crate::ptypes::{self, PartitionType};
use crate::{Error, Result};

/// The polynomial families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MspKind {
    FirstKind,
    SecondKind,
    AssociatedSecond,
    Lah,
    LieFirst,
    CompleteBell,
}

impl MspKind {
    pub const ALL: [MspKind; 6] = [
        MspKind::FirstKind,
        MspKind::SecondKind,
        MspKind::AssociatedSecond,
        MspKind::Lah,
        MspKind::LieFirst,
        MspKind::CompleteBell,
    ];

    /// Short name used in output: `S`, `B`, `Bt`, `L`, `A`, `Bn`.
    pub fn symbol(self) -> &'static str {
        match self {
            MspKind::FirstKind => "S",
            MspKind::SecondKind => "B",
            MspKind::AssociatedSecond => "Bt",
            MspKind::Lah => "L",
            MspKind::LieFirst => "A",
            MspKind::CompleteBell => "Bn",
        }
    }

    pub fn from_symbol(s: &str) -> Option<MspKind> {
        MspKind::ALL.into_iter().find(|k| k.symbol() == s)
    }
}

impl fmt::Display for MspKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn check_range(what: &'static str, n: u32, k: u32, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::IndexRange { what, n, k })
    }
}

fn type_sum<F>(n: u32, k: u32, keep: impl Fn(&PartitionType) -> bool, coeff: F) -> MPoly
where
    F: Fn(&PartitionType) -> BigInt,
{
    MPoly::from_terms(
        ptypes::enumerate(n, k)
            .into_iter()
            .filter(|r| keep(r))
            .map(|r| (r.monomial(), coeff(&r))),
    )
}

/// `B(n,k)` as the subset-function sum over `P(n,k)`. Accepts `k = 0`
/// (`B(0,0) = 1`, `B(n,0) = 0`).
pub fn bell_explicit(n: u32, k: u32) -> Result<MPoly> {
    check_range("B", n, k, k <= n)?;
    let facts = FactorialTable::with_limit(n);
    Ok(type_sum(
        n,
        k,
        |_| true,
        |r| ptypes::subset_fn_with(r, &facts),
    ))
}

/// Rows `0..=n_max` of the Bell triangle from
/// `B(n+1,k) = X1*B(n,k-1) + sum_j X_{j+1} dB(n,k)/dX_j`.
pub fn bell_recursive_triangle(n_max: u32) -> Vec<Vec<MPoly>> {
    let mut rows = vec![vec![MPoly::one()]];
    for n in 0..n_max as usize {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let mut v = if k <= n {
                    prev[k].shift_derivative()
                } else {
                    MPoly::zero()
                };
                if k >= 1 {
                    v += &prev[k - 1].mul_x1_pow(1);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn bell_recursive(n: u32, k: u32) -> Result<MPoly> {
    check_range("B", n, k, k <= n)?;
    let mut rows = bell_recursive_triangle(n);
    Ok(core::mem::take(&mut rows[n as usize][k as usize]))
}

/// Complete Bell polynomial `sum_k B(n,k)`.
pub fn complete_bell(n: u32) -> Result<MPoly> {
    check_range("Bn", n, 0, n >= 1)?;
    let facts = FactorialTable::with_limit(n);
    Ok((1..=n)
        .map(|k| type_sum(n, k, |_| true, |r| ptypes::subset_fn_with(r, &facts)))
        .sum())
}

/// `Bt(n,k)`: the terms of `B(n,k)` free of `X1`.
pub fn assoc_bell(n: u32, k: u32) -> Result<MPoly> {
    check_range("Bt", n, k, k <= n)?;
    let facts = FactorialTable::with_limit(n);
    Ok(type_sum(
        n,
        k,
        |r| r.r(1) == 0,
        |r| ptypes::subset_fn_with(r, &facts),
    ))
}

/// `L(n,k)`: the order-function sum over `P(n,k)`.
pub fn lah_poly(n: u32, k: u32) -> Result<MPoly> {
    check_range("L", n, k, k <= n)?;
    let facts = FactorialTable::with_limit(n);
    Ok(type_sum(
        n,
        k,
        |_| true,
        |r| ptypes::order_fn_with(r, &facts),
    ))
}

fn check_first(what: &'static str, n: u32, k: u32) -> Result<()> {
    check_range(what, n, k, 1 <= k && k <= n)
}

/// `S(n,k)` expanded in associated Bell polynomials:
/// `sum_r (-1)^(n-1-r) C(2n-2-r, k-1) X1^r Bt(2n-1-k-r, n-1-r)`.
pub fn stirling_first_explicit(n: u32, k: u32) -> Result<MPoly> {
    check_first("S", n, k)?;
    let mut acc = MPoly::zero();
    for r in k - 1..n {
        let c = sign(i64::from(n - 1 - r)) * binomial(u64::from(2 * n - 2 - r), u64::from(k - 1));
        let bt = assoc_bell(2 * n - 1 - k - r, n - 1 - r)?;
        acc += &bt.mul_x1_pow(r).scale(&c);
    }
    Ok(acc)
}

/// `S(n,k)` as the Stirling-function sum over `P(2n-1-k, n-1)`.
pub fn stirling_first_from_types(n: u32, k: u32) -> Result<MPoly> {
    check_first("S", n, k)?;
    let facts = FactorialTable::with_limit(2 * n);
    let terms = ptypes::enumerate(2 * n - 1 - k, n - 1)
        .into_iter()
        .map(|r| Ok((r.monomial(), ptypes::stirling_fn_with(&r, &facts)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MPoly::from_terms(terms))
}

/// Rows `0..=n_max` of the first-kind triangle from
/// `S(n+1,k) = -(2n-1) X2 S(n,k) + X1 (S(n,k-1) + sum_j X_{j+1} dS(n,k)/dX_j)`,
/// seeded by `S(1,1) = 1`. Row 0 holds a zero placeholder.
pub fn stirling_first_triangle(n_max: u32) -> Vec<Vec<MPoly>> {
    let mut rows = vec![vec![MPoly::zero()]];
    if n_max == 0 {
        return rows;
    }
    rows.push(vec![MPoly::zero(), MPoly::one()]);
    let x2 = MPoly::var(2);
    for n in 1..n_max as usize {
        let prev = &rows[n];
        let lead = BigInt::from(-(2 * n as i64 - 1));
        let row = (0..=n + 1)
            .map(|k| {
                let mut inner = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    MPoly::zero()
                };
                let mut v = MPoly::zero();
                if k <= n {
                    inner += &prev[k].shift_derivative();
                    v = (&x2 * &prev[k]).scale(&lead);
                }
                v += &inner.mul_x1_pow(1);
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn stirling_first_recursive(n: u32, k: u32) -> Result<MPoly> {
    check_first("S", n, k)?;
    let mut rows = stirling_first_triangle(n);
    Ok(core::mem::take(&mut rows[n as usize][k as usize]))
}

/// `A(n,k) = S(n,k) / X1^(2n-1)`.
pub fn lie_first(n: u32, k: u32) -> Result<LaurentX1> {
    check_first("A", n, k)?;
    Ok(LaurentX1::new(stirling_first_from_types(n, k)?, 2 * n - 1))
}

/// Closed-form value of any family at `(n,k)`; complete Bell ignores `k`.
pub fn generate(kind: MspKind, n: u32, k: u32) -> Result<LaurentX1> {
    let p = match kind {
        MspKind::FirstKind => stirling_first_from_types(n, k)?,
        MspKind::SecondKind => bell_explicit(n, k)?,
        MspKind::AssociatedSecond => assoc_bell(n, k)?,
        MspKind::Lah => lah_poly(n, k)?,
        MspKind::LieFirst => return lie_first(n, k),
        MspKind::CompleteBell => complete_bell(n)?,
    };
    Ok(LaurentX1::from_poly(p))
}

/// Memo table of closed-form values keyed by `(kind, n, k)`.
///
/// Values are computed on first access. [`MspCache::overwrite`] replaces an
/// entry, which lets tests check that the identity suite notices a wrong value.
#[derive(Clone, Debug, Default)]
pub struct MspCache {
    entries: BTreeMap<(MspKind, u32, u32), LaurentX1>,
}

impl MspCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(kind: MspKind, n: u32, k: u32) -> (MspKind, u32, u32) {
        match kind {
            MspKind::CompleteBell => (kind, n, 0),
            _ => (kind, n, k),
        }
    }

    pub fn get(&mut self, kind: MspKind, n: u32, k: u32) -> Result<&LaurentX1> {
        let key = Self::key(kind, n, k);
        Ok(match self.entries.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(generate(kind, n, k)?),
        })
    }

    /// Polynomial-valued entry; fails with [`Error::NotAPolynomial`] for `A`.
    pub fn poly(&mut self, kind: MspKind, n: u32, k: u32) -> Result<MPoly> {
        self.get(kind, n, k)?.to_poly()
    }

    pub fn overwrite(&mut self, kind: MspKind, n: u32, k: u32, value: LaurentX1) {
        self.entries.insert(Self::key(kind, n, k), value);
    }

    pub fn contains(&self, kind: MspKind, n: u32, k: u32) -> bool {
        self.entries.contains_key(&Self::key(kind, n, k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `B(n,k)` extended by zero outside `0 <= k <= n`.
    pub fn bell_or_zero(&mut self, n: u32, k: u32) -> Result<MPoly> {
        if k > n {
            return Ok(MPoly::zero());
        }
        self.poly(MspKind::SecondKind, n, k)
    }

    /// `A(n,k)` extended by `A(0,0) = 1`, `A(n,0) = 0` and zero for `k > n`.
    pub fn lie_or_boundary(&mut self, n: u32, k: u32) -> Result<LaurentX1> {
        if k == 0 {
            return Ok(if n == 0 {
                LaurentX1::one()
            } else {
                LaurentX1::zero()
            });
        }
        if k > n {
            return Ok(LaurentX1::zero());
        }
        self.get(MspKind::LieFirst, n, k).cloned()
    }

    /// `[S(1,1), ..., S(m,1)]`.
    pub fn first_column(&mut self, m: u32) -> Result<Vec<MPoly>> {
        (1..=m)
            .map(|j| self.poly(MspKind::FirstKind, j, 1))
            .collect()
    }

    /// `[A(1,1), ..., A(m,1)]`.
    pub fn lie_column(&mut self, m: u32) -> Result<Vec<LaurentX1>> {
        (1..=m)
            .map(|j| self.get(MspKind::LieFirst, j, 1).cloned())
            .collect()
    }
}

/// Binomial weight shared by the two Schloemilch-type sums.
fn schloemilch_weight(n: u32, k: u32, r: u32) -> BigInt {
    sign(i64::from(n - 1 - r))
        * binomial(u64::from(2 * n - 2 - r), u64::from(k - 1))
        * binomial(u64::from(2 * n - k), u64::from(r + 1 - k))
}

/// `A(n,k)` from Bell polynomials:
/// `sum_r w(n,k,r) X1^(r-2n+1) B(2n-1-k-r, n-1-r)`.
pub fn lie_first_schloemilch(cache: &mut MspCache, n: u32, k: u32) -> Result<LaurentX1> {
    check_first("A", n, k)?;
    let mut acc = LaurentX1::zero();
    for r in k - 1..n {
        let b = cache.bell_or_zero(2 * n - 1 - k - r, n - 1 - r)?;
        let term = LaurentX1::from_poly(b.scale(&schloemilch_weight(n, k, r)))
            .mul_x1_pow(i64::from(r) - 2 * i64::from(n) + 1);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `B(n,k)` from the Laurent family:
/// `sum_r w(n,k,r) X1^(2n-1-r) A(2n-1-k-r, n-1-r)`.
pub fn bell_schloemilch(cache: &mut MspCache, n: u32, k: u32) -> Result<MPoly> {
    check_first("B", n, k)?;
    let mut acc = LaurentX1::zero();
    for r in k - 1..n {
        let a = cache.lie_or_boundary(2 * n - 1 - k - r, n - 1 - r)?;
        let term = a
            .scale(&schloemilch_weight(n, k, r))
            .mul_x1_pow(2 * i64::from(n) - 1 - i64::from(r));
        acc = &acc + &term;
    }
    acc.to_poly()
}

fn check_composable(what: &'static str, n: u32, k: u32) -> Result<()> {
    check_first(what, n, k)?;
    if k == 1 {
        return Err(Error::VacuousIdentity { n });
    }
    Ok(())
}

/// `X1^(k-1) * B(n,k)(S(1,1), ..., S(n-k+1,1))`, equal to `S(n,k)` for `k >= 2`.
pub fn compose_first(cache: &mut MspCache, n: u32, k: u32) -> Result<MPoly> {
    check_composable("S", n, k)?;
    let subs = cache.first_column(n - k + 1)?;
    let b = cache.poly(MspKind::SecondKind, n, k)?;
    Ok(b.substitute(&subs)?.mul_x1_pow(k - 1))
}

/// `X1^(2k-n) * S(n,k)(S(1,1), ..., S(n-k+1,1))`, equal to `B(n,k)`.
pub fn compose_second(cache: &mut MspCache, n: u32, k: u32) -> Result<LaurentX1> {
    check_first("B", n, k)?;
    let subs = cache.first_column(n - k + 1)?;
    let s = cache.poly(MspKind::FirstKind, n, k)?;
    Ok(LaurentX1::from_poly(s.substitute(&subs)?).mul_x1_pow(2 * i64::from(k) - i64::from(n)))
}

/// `B(n,k)(A(1,1), ..., A(n-k+1,1))`, equal to `A(n,k)` for `k >= 2`.
pub fn lie_compose_first(cache: &mut MspCache, n: u32, k: u32) -> Result<LaurentX1> {
    check_composable("A", n, k)?;
    let subs = cache.lie_column(n - k + 1)?;
    cache.poly(MspKind::SecondKind, n, k)?.eval_in(&subs)
}

/// `A(n,k)(A(1,1), ..., A(n-k+1,1))`, equal to `B(n,k)`.
pub fn lie_compose_second(cache: &mut MspCache, n: u32, k: u32) -> Result<LaurentX1> {
    check_first("B", n, k)?;
    let subs = cache.lie_column(n - k + 1)?;
    cache
        .get(MspKind::LieFirst, n, k)?
        .substitute_laurent(&subs)
}

/// Families with a convolution recurrence in `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convolution {
    /// `B(n,k) = sum_j C(n-1,j-1) X_j B(n-j,k-1)`.
    Bell,
    /// `S(n,k) = X1 sum_j C(n-1,j-1) S(j,1) S(n-j,k-1)`, `k >= 2`.
    FirstKind,
    /// `Bt(n,k) = sum_{j>=2} C(n-1,j-1) X_j Bt(n-j,k-1)`.
    Associated,
    /// `A(n,k) = sum_j C(n-1,j-1) A(j,1) A(n-j,k-1)`, `k >= 2`.
    LieFirst,
}

impl Convolution {
    fn kind(self) -> MspKind {
        match self {
            Convolution::Bell => MspKind::SecondKind,
            Convolution::FirstKind => MspKind::FirstKind,
            Convolution::Associated => MspKind::AssociatedSecond,
            Convolution::LieFirst => MspKind::LieFirst,
        }
    }

    fn needs_column(self) -> bool {
        matches!(self, Convolution::FirstKind | Convolution::LieFirst)
    }
}

/// Triangle `t[n][k]`, `0 <= k <= n <= n_max`, built column by column with the
/// convolution recurrence. Column 1 of the first-kind families comes from the
/// cache; every later column only uses earlier columns of the triangle.
pub fn convolution_triangle(
    cache: &mut MspCache,
    conv: Convolution,
    n_max: u32,
) -> Result<Vec<Vec<LaurentX1>>> {
    let n_max = n_max as usize;
    let mut t: Vec<Vec<LaurentX1>> = (0..=n_max)
        .map(|n| vec![LaurentX1::zero(); n + 1])
        .collect();
    t[0][0] = LaurentX1::one();
    let first_col = if conv.needs_column() && n_max >= 1 {
        match conv {
            Convolution::FirstKind => cache
                .first_column(n_max as u32)?
                .into_iter()
                .map(LaurentX1::from_poly)
                .collect(),
            _ => cache.lie_column(n_max as u32)?,
        }
    } else {
        Vec::new()
    };
    for k in 1..=n_max {
        for n in k..=n_max {
            if conv.needs_column() && k == 1 {
                t[n][1] = first_col[n - 1].clone();
                continue;
            }
            let lo = if conv == Convolution::Associated {
                2
            } else {
                1
            };
            let mut acc = LaurentX1::zero();
            for j in lo..=n - k + 1 {
                let prev = &t[n - j][k - 1];
                if prev.is_zero() {
                    continue;
                }
                let c = binomial((n - 1) as u64, (j - 1) as u64);
                let factor = if conv.needs_column() {
                    first_col[j - 1].clone()
                } else {
                    LaurentX1::from_poly(MPoly::var(j))
                };
                acc = &acc + &(&factor * prev).scale(&c);
            }
            if conv == Convolution::FirstKind {
                acc = acc.mul_x1_pow(1);
            }
            t[n][k] = acc;
        }
    }
    Ok(t)
}

/// One entry of [`convolution_triangle`].
pub fn convolution_recurrence(
    cache: &mut MspCache,
    n: u32,
    k: u32,
    conv: Convolution,
) -> Result<LaurentX1> {
    check_first(conv.kind().symbol(), n, k)?;
    if conv.needs_column() && k == 1 {
        return Err(Error::VacuousIdentity { n });
    }
    let mut t = convolution_triangle(cache, conv, n)?;
    Ok(core::mem::take(&mut t[n as usize][k as usize]))
}

/// `B(n,k) = sum_r C(n,r) X1^r Bt(n-r, k-r)`.
pub fn bell_from_associated(cache: &mut MspCache, n: u32, k: u32) -> Result<MPoly> {
    check_range("B", n, k, k <= n)?;
    let mut acc = MPoly::zero();
    for r in 0..=k {
        let bt = cache.poly(MspKind::AssociatedSecond, n - r, k - r)?;
        acc += &bt
            .mul_x1_pow(r)
            .scale(&binomial(u64::from(n), u64::from(r)));
    }
    Ok(acc)
}

/// `Bt(n,k) = sum_j (-1)^j C(n,j) X1^j B(n-j, k-j)`.
pub fn associated_from_bell(cache: &mut MspCache, n: u32, k: u32) -> Result<MPoly> {
    check_range("Bt", n, k, k <= n)?;
    let mut acc = MPoly::zero();
    for j in 0..=k {
        let b = cache.poly(MspKind::SecondKind, n - j, k - j)?;
        let c = sign(i64::from(j)) * binomial(u64::from(n), u64::from(j));
        acc += &b.mul_x1_pow(j).scale(&c);
    }
    Ok(acc)
}

/// `S(n,1)` as the alternating sum over chains `n > j_r > ... > j_1 > 1` of
/// `X1^(n-2-sum j) B(n,j_r) B(j_r,j_(r-1)) ... B(j_1,1)`.
///
/// Chains are grouped by their top element: `G(1) = 1` and
/// `G(m) = B(m,1) - sum_{1<j<m} X1^-j B(m,j) G(j)`, so that
/// `S(n,1) = -X1^(n-2) G(n)`.
pub fn first_column_nested(cache: &mut MspCache, n: u32) -> Result<MPoly> {
    check_range("S", n, 1, n >= 2)?;
    let mut g: Vec<LaurentX1> = vec![LaurentX1::zero(), LaurentX1::one()];
    for m in 2..=n {
        let mut acc = LaurentX1::from_poly(cache.poly(MspKind::SecondKind, m, 1)?);
        for j in 2..m {
            let b = LaurentX1::from_poly(cache.poly(MspKind::SecondKind, m, j)?);
            let term = (&b * &g[j as usize]).mul_x1_pow(-i64::from(j));
            acc = &acc - &term;
        }
        g.push(acc);
    }
    (-g[n as usize].mul_x1_pow(i64::from(n) - 2)).to_poly()
}

/// `P(n) = sum_k B(n,k) Q(k)` for `n = 0..q.len()-1`.
pub fn bell_transform(cache: &mut MspCache, q: &[MPoly]) -> Result<Vec<MPoly>> {
    let mut out = Vec::with_capacity(q.len());
    for n in 0..q.len() as u32 {
        let mut acc = MPoly::zero();
        for k in 0..=n {
            acc += &(&cache.bell_or_zero(n, k)? * &q[k as usize]);
        }
        out.push(acc);
    }
    Ok(out)
}

/// `Q(n) = sum_k A(n,k) P(k)` for `n = 0..p.len()-1`, the inverse of
/// [`bell_transform`].
pub fn lie_transform(cache: &mut MspCache, p: &[MPoly]) -> Result<Vec<LaurentX1>> {
    let mut out = Vec::with_capacity(p.len());
    for n in 0..p.len() as u32 {
        let mut acc = LaurentX1::zero();
        for k in 0..=n {
            let a = cache.lie_or_boundary(n, k)?;
            acc = &acc + &(&a * &LaurentX1::from_poly(p[k as usize].clone()));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Entry `(n,k)` of the matrix product `A * B` (or `B * A` when `reversed`).
pub fn inversion_entry(cache: &mut MspCache, n: u32, k: u32, reversed: bool) -> Result<LaurentX1> {
    let mut acc = LaurentX1::zero();
    for j in k..=n {
        let a = if reversed {
            cache.lie_or_boundary(j, k)?
        } else {
            cache.lie_or_boundary(n, j)?
        };
        let b = if reversed {
            cache.bell_or_zero(n, j)?
        } else {
            cache.bell_or_zero(j, k)?
        };
        acc = &acc + &(&a * &LaurentX1::from_poly(b));
    }
    Ok(acc)
}
