//! Sparse multivariate polynomials in `X1, X2, ...` with big-integer
//! coefficients, and the Laurent extension in `X1` alone.
//!
//! Terms are kept in a `BTreeMap` keyed by trimmed exponent vectors, so the
//! canonical form is unique and iteration follows graded lexicographic order
//! (total degree first, then ascending lexicographic on `(e1, e2, ...)`).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponent vector `(e1, e2, ...)` with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    /// `X_j`, 1-based.
    pub fn var(j: usize) -> Self {
        assert!(j >= 1, "indeterminates are numbered from 1");
        let mut e = vec![0; j];
        e[j - 1] = 1;
        Monomial(e)
    }

    /// `X1^e`.
    pub fn x1_pow(e: u32) -> Self {
        Monomial::new(vec![e])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `X_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        assert!(j >= 1, "indeterminates are numbered from 1");
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of indeterminates up to the last one that occurs.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Degree when `X_j` has weight `j`.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u64 + 1) * u64::from(e))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    fn with_exponent(&self, j: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < j {
            v.resize(j, 0);
        }
        v[j - 1] = e;
        Monomial::new(v)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trimmed vectors compare like their zero-padded versions.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{}", i + 1)?;
            } else {
                write!(f, "X{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Values a polynomial can be evaluated in.
pub trait EvalRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn from_int(c: &BigInt) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
}

impl EvalRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn from_int(c: &BigInt) -> Self {
        c.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl EvalRing for BigRational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn from_int(c: &BigInt) -> Self {
        BigRational::from_integer(c.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl EvalRing for MPoly {
    fn ring_zero() -> Self {
        MPoly::zero()
    }
    fn ring_one() -> Self {
        MPoly::one()
    }
    fn from_int(c: &BigInt) -> Self {
        MPoly::constant(c.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl EvalRing for LaurentX1 {
    fn ring_zero() -> Self {
        LaurentX1::zero()
    }
    fn ring_one() -> Self {
        LaurentX1::one()
    }
    fn from_int(c: &BigInt) -> Self {
        LaurentX1::from_poly(MPoly::constant(c.clone()))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Sparse polynomial in `X1, X2, ...` over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, Monomial::one())
    }

    /// `X_j`, 1-based.
    pub fn var(j: usize) -> Self {
        MPoly::term(1, Monomial::var(j))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Highest indeterminate index that occurs.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    /// Re-trims exponent vectors and drops zero coefficients.
    pub fn canonicalize(&self) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.0.clone()), c.clone())),
        )
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal `d/dX_j` (1-based).
    pub fn partial_derivative(&self, j: usize) -> MPoly {
        assert!(j >= 1, "indeterminates are numbered from 1");
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(j);
            (e > 0).then(|| (m.with_exponent(j, e - 1), c * BigInt::from(e)))
        }))
    }

    /// `sum_j X_{j+1} * dP/dX_j`, the operator driving the differential recurrences.
    pub fn shift_derivative(&self) -> MPoly {
        let mut out = MPoly::zero();
        for j in 1..=self.width() {
            let d = self.partial_derivative(j);
            out += &d.mul_monomial(&Monomial::var(j + 1));
        }
        out
    }

    /// Evaluates with `X_{i+1} := values[i]` in any [`EvalRing`].
    pub fn eval_in<R: EvalRing>(&self, values: &[R]) -> Result<R> {
        let width = self.width();
        if values.len() < width {
            // Report the first occurring indeterminate that has no value.
            for j in values.len() + 1..=width {
                if self.terms.keys().any(|m| m.exponent(j) > 0) {
                    return Err(Error::MissingValue { var: j });
                }
            }
        }
        let mut powers: Vec<Vec<R>> = vec![vec![R::ring_one()]; width];
        let mut acc = R::ring_zero();
        for (m, c) in &self.terms {
            let mut t = R::from_int(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache[cache.len() - 1].mul_ref(&values[i]);
                    cache.push(next);
                }
                t = t.mul_ref(&cache[e as usize]);
            }
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// Simultaneous substitution `X_{i+1} := subs[i]`, fully expanded.
    pub fn substitute(&self, subs: &[MPoly]) -> Result<MPoly> {
        self.eval_in(subs)
    }

    pub fn eval_rat(&self, point: &[BigRational]) -> Result<BigRational> {
        self.eval_in(point)
    }

    pub fn eval_int(&self, point: &[BigInt]) -> Result<BigInt> {
        self.eval_in(point)
    }

    /// Sum of all coefficients, i.e. the value at `(1, 1, ...)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn uniform_degree(&self, f: impl Fn(&Monomial) -> u64) -> Result<Option<u64>> {
        let mut it = self.terms.keys().map(f);
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.all(|d| d == first).then_some(first))
    }

    /// Common total degree of all terms, `None` if the terms disagree.
    pub fn homogeneous_degree(&self) -> Result<Option<u64>> {
        self.uniform_degree(Monomial::degree)
    }

    /// Common weighted degree (`X_j` has weight `j`), `None` if not isobaric.
    pub fn isobaric_degree(&self) -> Result<Option<u64>> {
        self.uniform_degree(Monomial::weight)
    }

    /// Smallest exponent of `X_j` over all terms; `None` for the zero polynomial.
    pub fn min_exponent(&self, j: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(j)).min()
    }

    /// The polynomial with `X_j` set to zero.
    pub fn without_var(&self, j: usize) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(j) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `X_j := factors[j-1] * X_j`. Indeterminates past the end of
    /// `factors` are left alone.
    pub fn scale_vars(&self, factors: &[BigInt]) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut c = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(f) = factors.get(i) {
                    c *= num_traits::pow(f.clone(), e as usize);
                }
            }
            (m.clone(), c)
        }))
    }

    /// Multiplies by `X1^e`.
    pub fn mul_x1_pow(&self, e: u32) -> MPoly {
        if e == 0 {
            return self.clone();
        }
        self.mul_monomial(&Monomial::x1_pow(e))
    }

    /// Divides by `X1^e`; every term must carry at least that power.
    fn div_x1_pow(&self, e: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let x1 = m.exponent(1);
                    debug_assert!(x1 >= e);
                    (m.with_exponent(1, x1 - e), c.clone())
                })
                .collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == Sign::Minus;
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        let mut acc = MPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// `num / X1^x1_den`, kept with no common factor of `X1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentX1 {
    num: MPoly,
    x1_den: u32,
}

impl LaurentX1 {
    pub fn new(num: MPoly, x1_den: u32) -> Self {
        if num.is_zero() {
            return LaurentX1::zero();
        }
        let common = num.min_exponent(1).unwrap_or(0).min(x1_den);
        if common == 0 {
            return LaurentX1 { num, x1_den };
        }
        LaurentX1 {
            num: num.div_x1_pow(common),
            x1_den: x1_den - common,
        }
    }

    pub fn zero() -> Self {
        LaurentX1 {
            num: MPoly::zero(),
            x1_den: 0,
        }
    }

    pub fn one() -> Self {
        LaurentX1::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> Self {
        LaurentX1 { num: p, x1_den: 0 }
    }

    /// `X1^e` for any integer `e`.
    pub fn x1_pow(e: i64) -> Self {
        if e >= 0 {
            LaurentX1::from_poly(MPoly::term(1, Monomial::x1_pow(e as u32)))
        } else {
            LaurentX1 {
                num: MPoly::one(),
                x1_den: (-e) as u32,
            }
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn x1_den(&self) -> u32 {
        self.x1_den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.x1_den == 0
    }

    pub fn to_poly(&self) -> Result<MPoly> {
        if self.x1_den == 0 {
            Ok(self.num.clone())
        } else {
            Err(Error::NotAPolynomial)
        }
    }

    pub fn mul_x1_pow(&self, e: i64) -> LaurentX1 {
        self * &LaurentX1::x1_pow(e)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentX1 {
        LaurentX1::new(self.num.scale(c), self.x1_den)
    }

    /// Inverse of a unit `+-X1^e`; `None` for anything else.
    pub fn unit_inverse(&self) -> Option<LaurentX1> {
        if self.num.len() != 1 {
            return None;
        }
        let (m, c) = self.num.terms().next()?;
        if m.width() > 1 || !c.abs().is_one() {
            return None;
        }
        let e = i64::from(m.exponent(1)) - i64::from(self.x1_den);
        Some(LaurentX1::x1_pow(-e).scale(c))
    }

    /// Substitutes `X_{i+1} := values[i]`; `values[0]` must be a unit when
    /// this value has a denominator.
    pub fn substitute_laurent(&self, values: &[LaurentX1]) -> Result<LaurentX1> {
        let num = self.num.eval_in(values)?;
        if self.x1_den == 0 {
            return Ok(num);
        }
        let x1 = values.first().ok_or(Error::MissingValue { var: 1 })?;
        let inv = x1.unit_inverse().ok_or(Error::DivisionByZero)?;
        let mut acc = num;
        for _ in 0..self.x1_den {
            acc = &acc * &inv;
        }
        Ok(acc)
    }

    pub fn eval_rat(&self, point: &[BigRational]) -> Result<BigRational> {
        let num = self.num.eval_rat(point)?;
        if self.x1_den == 0 {
            return Ok(num);
        }
        let x1 = point.first().ok_or(Error::MissingValue { var: 1 })?;
        if x1.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(num / num_traits::pow(x1.clone(), self.x1_den as usize))
    }
}

impl fmt::Display for LaurentX1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.x1_den {
            0 => write!(f, "{}", self.num),
            d => {
                if self.num.is_one() {
                    f.write_str("1")?;
                } else {
                    write!(f, "({})", self.num)?;
                }
                if d == 1 {
                    f.write_str("/X1")
                } else {
                    write!(f, "/X1^{d}")
                }
            }
        }
    }
}

impl MPoly {
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }
}

impl<'a> Add<&'a LaurentX1> for &'a LaurentX1 {
    type Output = LaurentX1;
    fn add(self, rhs: &'a LaurentX1) -> LaurentX1 {
        let d = self.x1_den.max(rhs.x1_den);
        let a = self.num.mul_x1_pow(d - self.x1_den);
        let b = rhs.num.mul_x1_pow(d - rhs.x1_den);
        LaurentX1::new(a + b, d)
    }
}

impl Add for LaurentX1 {
    type Output = LaurentX1;
    fn add(self, rhs: LaurentX1) -> LaurentX1 {
        &self + &rhs
    }
}

impl<'a> Sub<&'a LaurentX1> for &'a LaurentX1 {
    type Output = LaurentX1;
    fn sub(self, rhs: &'a LaurentX1) -> LaurentX1 {
        self + &(-rhs)
    }
}

impl Sub for LaurentX1 {
    type Output = LaurentX1;
    fn sub(self, rhs: LaurentX1) -> LaurentX1 {
        &self - &rhs
    }
}

impl Neg for &LaurentX1 {
    type Output = LaurentX1;
    fn neg(self) -> LaurentX1 {
        LaurentX1 {
            num: -&self.num,
            x1_den: self.x1_den,
        }
    }
}

impl Neg for LaurentX1 {
    type Output = LaurentX1;
    fn neg(self) -> LaurentX1 {
        -&self
    }
}

impl<'a> Mul<&'a LaurentX1> for &'a LaurentX1 {
    type Output = LaurentX1;
    fn mul(self, rhs: &'a LaurentX1) -> LaurentX1 {
        LaurentX1::new(&self.num * &rhs.num, self.x1_den + rhs.x1_den)
    }
}

impl Mul for LaurentX1 {
    type Output = LaurentX1;
    fn mul(self, rhs: LaurentX1) -> LaurentX1 {
        &self * &rhs
    }
}

impl core::iter::Sum for LaurentX1 {
    fn sum<I: Iterator<Item = LaurentX1>>(iter: I) -> LaurentX1 {
        iter.fold(LaurentX1::zero(), |acc, x| &acc + &x)
    }
}

impl From<MPoly> for LaurentX1 {
    fn from(p: MPoly) -> Self {
        LaurentX1::from_poly(p)
    }
}
