//! Acceptance criteria 1 to 9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails or exceeds its time bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mspkit::verify::{self, DEFAULT_SEED, REVERSION_SAMPLES};
use mspkit_core::MspCache;

struct Criterion {
    number: u32,
    name: &'static str,
    /// `(check id, depth)` pairs, all run against one fresh cache.
    checks: &'static [(&'static str, u32)],
    bound: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        name: "table reproduction, n <= 6",
        checks: &[("table-golden", 6)],
        bound: secs(1),
    },
    Criterion {
        number: 2,
        name: "inversion law, n <= 10",
        checks: &[("inversion-law", 10)],
        bound: secs(60),
    },
    Criterion {
        number: 3,
        name: "explicit vs recursive generators, n <= 12",
        checks: &[("bell-cross-path", 12), ("first-kind-cross-path", 12)],
        bound: secs(120),
    },
    Criterion {
        number: 4,
        name: "Schloemilch-type polynomial identities, n <= 9",
        checks: &[("schloemilch-polynomials", 9)],
        bound: secs(60),
    },
    Criterion {
        number: 5,
        name: "Stirling numbers: s1(7,4) products, coefficient sums, orthogonality, Lah, n <= 15",
        checks: &[
            ("stirling-closed-forms", 15),
            ("coefficient-sums", 15),
            ("orthogonality", 15),
            ("lah-self-inverse", 15),
        ],
        bound: secs(10),
    },
    Criterion {
        number: 6,
        name: "reversion of named series and total partitions, n <= 12",
        checks: &[("reversion-named-series", 12), ("total-partitions", 12)],
        bound: secs(10),
    },
    Criterion {
        number: 7,
        name: "three-path reversion on random inputs, N <= 10",
        checks: &[("reversion-three-path", 10)],
        bound: secs(120),
    },
    Criterion {
        number: 8,
        name: "exp transform rows of e^x - 1, n <= 10",
        checks: &[("exp-transform-rows", 10)],
        bound: secs(10),
    },
    Criterion {
        number: 9,
        name: "degree laws, X1 support, derivative law, per-type identity, associated values",
        checks: &[
            ("degree-laws", 12),
            ("x1-support-bounds", 12),
            ("bell-derivative", 12),
            ("stirling-fn-identity", 12),
            ("associated-values", 8),
        ],
        bound: secs(60),
    },
];

fn main() -> ExitCode {
    assert_eq!(REVERSION_SAMPLES, 200);
    let mut all_ok = true;
    for c in CRITERIA {
        let mut cache = MspCache::new();
        let start = Instant::now();
        let mut failures = Vec::new();
        for &(id, depth) in c.checks {
            let r = verify::run_check(id, depth, DEFAULT_SEED, &mut cache).expect("registered id");
            if !r.passed {
                failures.push(format!("{id}: {}", r.counterexample.unwrap_or_default()));
            }
        }
        let elapsed = start.elapsed();
        let in_time = elapsed < c.bound;
        let ok = failures.is_empty() && in_time;
        all_ok &= ok;
        println!(
            "{} criterion {}: {} ({:.3}s, bound {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.name,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        for f in &failures {
            println!("    {f}");
        }
        if !in_time {
            println!("    exceeded time bound");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
