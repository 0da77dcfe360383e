use mspkit_core::combinat::{binomial, odd_double_factorial, sign};
use mspkit_core::{msp, ptypes, BigInt, BigRational, MPoly, MspKind};
use proptest::prelude::*;

fn nk(max: u32) -> impl Strategy<Value = (u32, u32)> {
    (1..=max).prop_flat_map(|n| (Just(n), 1..=n))
}

fn point(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), len).prop_map(|v| {
        v.into_iter()
            .map(|(p, q)| BigRational::new(p.into(), q.into()))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_laws((n, k) in nk(11)) {
        let s = msp::stirling_first_from_types(n, k).unwrap();
        let b = msp::bell_explicit(n, k).unwrap();
        prop_assert_eq!(s.homogeneous_degree().unwrap(), Some(u64::from(n - 1)));
        prop_assert_eq!(s.isobaric_degree().unwrap(), Some(u64::from(2 * n - 1 - k)));
        prop_assert_eq!(b.homogeneous_degree().unwrap(), Some(u64::from(k)));
        prop_assert_eq!(b.isobaric_degree().unwrap(), Some(u64::from(n)));
    }

    #[test]
    fn x1_support((n, k) in nk(11)) {
        let s = msp::stirling_first_from_types(n, k).unwrap();
        let b = msp::bell_explicit(n, k).unwrap();
        prop_assert!(s.min_exponent(1).unwrap() + 1 >= k);
        prop_assert!(i64::from(b.min_exponent(1).unwrap()) >= 2 * i64::from(k) - i64::from(n));
    }

    #[test]
    fn bell_derivative((n, k) in nk(10), j in 1u32..=10) {
        prop_assume!(j <= n);
        let d = msp::bell_explicit(n, k).unwrap().partial_derivative(j as usize);
        let want = if k == 1 {
            if n == j { MPoly::one() } else { MPoly::zero() }
        } else if n - j >= k - 1 {
            msp::bell_explicit(n - j, k - 1).unwrap().scale(&binomial(u64::from(n), u64::from(j)))
        } else {
            MPoly::zero()
        };
        prop_assert_eq!(d, want);
    }

    #[test]
    fn per_type_identity((n, k) in nk(10)) {
        let s = msp::stirling_first_from_types(n, k).unwrap();
        let big_n = 2 * n - 1 - k;
        for r in ptypes::enumerate(big_n, n - 1) {
            let r1 = r.r(1);
            let sigma = s.coefficient(&r.monomial());
            prop_assert_eq!(
                binomial(u64::from(big_n), u64::from(r1)) * sigma,
                sign(i64::from(n - 1 - r1)) * binomial(u64::from(2 * n - 2 - r1), u64::from(k - 1)) * ptypes::subset_fn(&r)
            );
        }
    }

    #[test]
    fn associated_values(n in 1u32..=7, l in 0u32..=7) {
        prop_assume!(l < n);
        let bt = msp::assoc_bell(2 * n - l, n).unwrap();
        if l == 0 {
            prop_assert_eq!(bt, MPoly::var(2).pow(n).scale(&odd_double_factorial(n)));
        } else {
            prop_assert!(bt.is_zero());
        }
    }

    #[test]
    fn inversion_holds_at_random_points((n, k) in nk(7), x in point(7)) {
        prop_assume!(x[0] != BigRational::from_integer(BigInt::from(0)));
        let mut acc = BigRational::from_integer(BigInt::from(0));
        for j in k..=n {
            let a = msp::generate(MspKind::LieFirst, n, j).unwrap().eval_rat(&x).unwrap();
            let b = msp::bell_explicit(j, k).unwrap().eval_rat(&x).unwrap();
            acc += a * b;
        }
        prop_assert_eq!(acc, BigRational::from_integer(BigInt::from(u8::from(n == k))));
    }
}
