use mspkit_core::poly::{LaurentX1, MPoly, Monomial};
use mspkit_core::{BigInt, BigRational};
use proptest::prelude::*;

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, 0..=6), -99i64..=99), 0..6).prop_map(
        |terms| {
            MPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::new(e), BigInt::from(c))),
            )
        },
    )
}

fn point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-20i64..=20, 1i64..=9), 6).prop_map(|v| {
        v.into_iter()
            .map(|(p, q)| BigRational::new(p.into(), q.into()))
            .collect()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in mpoly(), b in mpoly(), x in point()) {
        let ab = (&a * &b).eval_rat(&x).unwrap();
        prop_assert_eq!(ab, a.eval_rat(&x).unwrap() * b.eval_rat(&x).unwrap());
        let s = (&a + &b).eval_rat(&x).unwrap();
        prop_assert_eq!(s, a.eval_rat(&x).unwrap() + b.eval_rat(&x).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(a in mpoly(), b in mpoly()) {
        for p in [&a * &b, &a + &b, a.partial_derivative(2), a.pow(2)] {
            prop_assert_eq!(p.canonicalize(), p.clone());
            prop_assert!(p.terms().all(|(_, c)| c != &BigInt::from(0)));
        }
    }

    #[test]
    fn mixed_partials_commute(a in mpoly(), i in 1usize..=6, j in 1usize..=6) {
        prop_assert_eq!(
            a.partial_derivative(i).partial_derivative(j),
            a.partial_derivative(j).partial_derivative(i)
        );
    }

    #[test]
    fn identity_substitution(a in mpoly()) {
        let ident: Vec<MPoly> = (1..=6).map(MPoly::var).collect();
        prop_assert_eq!(a.substitute(&ident).unwrap(), a);
    }

    #[test]
    fn laurent_ring_axioms(a in mpoly(), b in mpoly(), da in 0u32..5, db in 0u32..5) {
        let x = LaurentX1::new(a, da);
        let y = LaurentX1::new(b, db);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        let z = &x * &LaurentX1::x1_pow(i64::from(db));
        prop_assert_eq!(z.mul_x1_pow(-i64::from(db)), x);
    }
}
