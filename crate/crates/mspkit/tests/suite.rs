use mspkit::format::{laurent_from_json, laurent_to_json, poly_from_json, poly_to_json};
use mspkit::verify::{self, golden_table_check, run_suite, VerifyError};
use mspkit_core::{msp, LaurentX1, MPoly, MspCache, MspKind};

#[test]
fn json_round_trip_for_generated_polynomials() {
    let mut cache = MspCache::new();
    for kind in MspKind::ALL {
        for n in 1..=8 {
            let ks = if kind == MspKind::CompleteBell {
                0..=0
            } else {
                1..=n
            };
            for k in ks {
                let l = cache.get(kind, n, k).unwrap().clone();
                assert_eq!(
                    laurent_from_json(&laurent_to_json(&l)).unwrap(),
                    l,
                    "{kind}({n},{k})"
                );
                if let Ok(p) = l.to_poly() {
                    assert_eq!(
                        poly_from_json(&poly_to_json(&p)).unwrap(),
                        p,
                        "{kind}({n},{k})"
                    );
                }
            }
        }
    }
}

#[test]
fn suite_passes_at_small_depths() {
    for max_n in [1, 6] {
        let r = run_suite(max_n, None, 1, &mut MspCache::new()).unwrap();
        assert!(r.passed(), "{}", r.to_text(false));
        assert_eq!(r.results.len(), verify::check_ids().len());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite(7, None, 99, &mut MspCache::new()).unwrap();
    let b = run_suite(7, None, 99, &mut MspCache::new()).unwrap();
    assert_eq!(a.to_json(false).to_string(), b.to_json(false).to_string());
    assert_eq!(a.to_text(false), b.to_text(false));
    assert_eq!(a.to_json(false)["seed"], 99);
}

#[test]
fn corrupted_cache_entry_is_named() {
    let mut cache = MspCache::new();
    let wrong =
        msp::generate(MspKind::SecondKind, 4, 2).unwrap() + LaurentX1::from_poly(MPoly::var(4));
    cache.overwrite(MspKind::SecondKind, 4, 2, wrong);
    let r = golden_table_check(&mut cache);
    assert!(!r.passed);
    let msg = r.counterexample.unwrap();
    assert!(
        msg.starts_with("B(4,2): expected 3*X2^2 + 4*X1*X3, got"),
        "{msg}"
    );
}

#[test]
fn corrupted_entry_breaks_dependent_identities() {
    let mut cache = MspCache::new();
    let wrong = msp::generate(MspKind::SecondKind, 5, 3)
        .unwrap()
        .scale(&2.into());
    cache.overwrite(MspKind::SecondKind, 5, 3, wrong);
    let r = run_suite(6, None, 1, &mut cache).unwrap();
    for id in [
        "table-golden",
        "inversion-law",
        "bell-cross-path",
        "coefficient-sums",
    ] {
        let c = r.results.iter().find(|c| c.id == id).unwrap();
        assert!(!c.passed, "{id} missed the corrupted entry");
    }
}

#[test]
fn selection_errors() {
    let err = run_suite(4, Some(&["bogus".into()]), 1, &mut MspCache::new()).unwrap_err();
    assert!(matches!(err, VerifyError::UnknownCheck { .. }));
    assert_eq!(
        run_suite(0, None, 1, &mut MspCache::new()).unwrap_err(),
        VerifyError::MaxN
    );
}
