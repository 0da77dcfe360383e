//! Identities between the polynomial families at moderate depth. The CLI's
//! verification suite runs the same relations further out.

use mspkit_core::combinat::{binomial, factorial, sign};
use mspkit_core::msp::{self, Convolution, MspCache, MspKind};
use mspkit_core::ptypes;
use mspkit_core::stirling;
use mspkit_core::{BigInt, LaurentX1, MPoly};

fn delta(n: u32, k: u32) -> LaurentX1 {
    if n == k {
        LaurentX1::one()
    } else {
        LaurentX1::zero()
    }
}

#[test]
fn explicit_and_recursive_paths_agree() {
    let b_rows = msp::bell_recursive_triangle(9);
    let s_rows = msp::stirling_first_triangle(9);
    for n in 1..=9u32 {
        for k in 1..=n {
            let b = msp::bell_explicit(n, k).unwrap();
            assert_eq!(b, b_rows[n as usize][k as usize], "B({n},{k})");
            let s = msp::stirling_first_explicit(n, k).unwrap();
            assert_eq!(s, s_rows[n as usize][k as usize], "S({n},{k})");
            assert_eq!(
                s,
                msp::stirling_first_from_types(n, k).unwrap(),
                "S({n},{k})"
            );
        }
    }
}

#[test]
fn inversion_law() {
    let mut c = MspCache::new();
    for n in 1..=7 {
        for k in 1..=n {
            assert_eq!(
                msp::inversion_entry(&mut c, n, k, false).unwrap(),
                delta(n, k)
            );
            assert_eq!(
                msp::inversion_entry(&mut c, n, k, true).unwrap(),
                delta(n, k)
            );
        }
    }
}

#[test]
fn composition_identities() {
    let mut c = MspCache::new();
    for n in 1..=7u32 {
        for k in 1..=n {
            let s = c.poly(MspKind::FirstKind, n, k).unwrap();
            let b = c.poly(MspKind::SecondKind, n, k).unwrap();
            let a = c.get(MspKind::LieFirst, n, k).unwrap().clone();
            if k >= 2 {
                assert_eq!(msp::compose_first(&mut c, n, k).unwrap(), s);
                assert_eq!(msp::lie_compose_first(&mut c, n, k).unwrap(), a);
            }
            let lb = LaurentX1::from_poly(b);
            assert_eq!(msp::compose_second(&mut c, n, k).unwrap(), lb);
            assert_eq!(msp::lie_compose_second(&mut c, n, k).unwrap(), lb);
        }
    }
}

#[test]
fn convolution_recurrences() {
    let mut c = MspCache::new();
    let n_max = 8;
    for conv in [
        Convolution::Bell,
        Convolution::FirstKind,
        Convolution::Associated,
        Convolution::LieFirst,
    ] {
        let t = msp::convolution_triangle(&mut c, conv, n_max).unwrap();
        let kind = match conv {
            Convolution::Bell => MspKind::SecondKind,
            Convolution::FirstKind => MspKind::FirstKind,
            Convolution::Associated => MspKind::AssociatedSecond,
            Convolution::LieFirst => MspKind::LieFirst,
        };
        for n in 1..=n_max {
            for k in 1..=n {
                assert_eq!(
                    &t[n as usize][k as usize],
                    c.get(kind, n, k).unwrap(),
                    "{conv:?} ({n},{k})"
                );
            }
        }
    }
    assert!(msp::convolution_recurrence(&mut c, 4, 1, Convolution::FirstKind).is_err());
}

#[test]
fn associated_expansion_round_trip() {
    let mut c = MspCache::new();
    for n in 1..=8u32 {
        for k in 1..=n {
            let b = c.poly(MspKind::SecondKind, n, k).unwrap();
            let bt = c.poly(MspKind::AssociatedSecond, n, k).unwrap();
            assert_eq!(msp::bell_from_associated(&mut c, n, k).unwrap(), b);
            assert_eq!(msp::associated_from_bell(&mut c, n, k).unwrap(), bt);
            assert_eq!(b.without_var(1), bt);
        }
    }
}

#[test]
fn nested_first_column() {
    let mut c = MspCache::new();
    for n in 2..=9 {
        assert_eq!(
            msp::first_column_nested(&mut c, n).unwrap(),
            c.poly(MspKind::FirstKind, n, 1).unwrap()
        );
    }
}

#[test]
fn schloemilch_type_sums() {
    let mut c = MspCache::new();
    for n in 1..=7u32 {
        for k in 1..=n {
            let a = c.get(MspKind::LieFirst, n, k).unwrap().clone();
            assert_eq!(msp::lie_first_schloemilch(&mut c, n, k).unwrap(), a);
            let b = c.poly(MspKind::SecondKind, n, k).unwrap();
            assert_eq!(msp::bell_schloemilch(&mut c, n, k).unwrap(), b);
        }
    }
}

#[test]
fn derivative_and_lah_laws() {
    for n in 1..=8u32 {
        for k in 1..=n {
            let b = msp::bell_explicit(n, k).unwrap();
            for j in 1..=n {
                let want = if j <= n && k >= 1 && n - j >= k - 1 {
                    msp::bell_explicit(n - j, k - 1)
                        .unwrap()
                        .scale(&binomial(u64::from(n), u64::from(j)))
                } else {
                    MPoly::zero()
                };
                assert_eq!(
                    b.partial_derivative(j as usize),
                    want,
                    "d B({n},{k}) / dX{j}"
                );
            }
            let facts: Vec<BigInt> = (1..=n).map(factorial).collect();
            assert_eq!(b.scale_vars(&facts), msp::lah_poly(n, k).unwrap());
        }
    }
}

#[test]
fn degree_and_support_laws() {
    for n in 1..=9u32 {
        for k in 1..=n {
            let b = msp::bell_explicit(n, k).unwrap();
            let s = msp::stirling_first_explicit(n, k).unwrap();
            assert_eq!(b.homogeneous_degree(), Ok(Some(u64::from(k))));
            assert_eq!(b.isobaric_degree(), Ok(Some(u64::from(n))));
            assert_eq!(s.homogeneous_degree(), Ok(Some(u64::from(n - 1))));
            assert_eq!(s.isobaric_degree(), Ok(Some(u64::from(2 * n - 1 - k))));
            assert!(s.min_exponent(1).unwrap() >= k - 1);
            assert!(
                i64::from(b.min_exponent(1).unwrap()) >= (2 * i64::from(k) - i64::from(n)).max(0)
            );
        }
    }
}

#[test]
fn per_type_first_kind_coefficients() {
    for n in 1..=9u32 {
        for k in 1..=n {
            let big_n = 2 * n - 1 - k;
            for r in ptypes::enumerate(big_n, n - 1) {
                let r1 = r.r(1);
                assert!(r1 >= k - 1);
                let lhs =
                    binomial(u64::from(big_n), u64::from(r1)) * ptypes::stirling_fn(&r).unwrap();
                let rhs = sign(i64::from(n - 1 - r1))
                    * binomial(u64::from(2 * n - 2 - r1), u64::from(k - 1))
                    * ptypes::subset_fn(&r);
                assert_eq!(lhs, rhs, "type {r}");
            }
        }
    }
}

#[test]
fn coefficient_sums_and_type_sums() {
    let s1 = stirling::s1_table(10);
    let s2 = stirling::s2_table(10);
    let c = stirling::cycle_table(10);
    for n in 1..=10u32 {
        for k in 1..=n {
            let s = msp::stirling_first_from_types(n, k).unwrap();
            let b = msp::bell_explicit(n, k).unwrap();
            assert_eq!(s.coefficient_sum(), s1.get(n, k));
            assert_eq!(b.coefficient_sum(), s2.get(n, k));
            assert_eq!(ptypes::sum_over(n, k, ptypes::subset_fn), s2.get(n, k));
            assert_eq!(ptypes::sum_over(n, k, ptypes::cycle_fn), c.get(n, k));
            assert_eq!(stirling::s2_via_cycle(n, k), Ok(s2.get(n, k)));
            assert_eq!(stirling::s2_bertrand(n, k), Ok(s2.get(n, k)));
            assert_eq!(stirling::s1_schloemilch(n, k), Ok(s1.get(n, k)));
            assert_eq!(stirling::s1_via_assoc(n, k), Ok(s1.get(n, k)));
        }
    }
}

#[test]
fn associated_special_values() {
    for n in 1..=6u32 {
        let bt = msp::assoc_bell(2 * n, n).unwrap();
        let want = MPoly::var(2)
            .pow(n)
            .scale(&mspkit_core::combinat::odd_double_factorial(n));
        assert_eq!(bt, want);
        for l in 1..=n {
            assert!(msp::assoc_bell(2 * n - l, n).unwrap().is_zero());
        }
    }
}

#[test]
fn sequence_inversion() {
    let mut c = MspCache::new();
    let q: Vec<MPoly> = (0..7)
        .map(|i| {
            &MPoly::var(1 + i % 3).scale(&BigInt::from(i as i64 - 3))
                + &MPoly::constant(i as i64 * 7 - 11)
        })
        .collect();
    let p = msp::bell_transform(&mut c, &q).unwrap();
    let back = msp::lie_transform(&mut c, &p).unwrap();
    let want: Vec<LaurentX1> = q.into_iter().map(LaurentX1::from_poly).collect();
    assert_eq!(back, want);
}
