//! The identity suite: every relation between the families as a named check.
//!
//! Each check runs to `min(max_n, cap)`, where the cap reflects its cost.
//! Checks read closed-form values through a shared [`MspCache`], so a wrong
//! cache entry surfaces as a failing check whose counterexample names the
//! entry.

use std::fmt::Display;
use std::time::{Duration, Instant};

use mspkit_core::combinat::{binomial, factorial, odd_double_factorial, sign};
use mspkit_core::msp::{self, Convolution, MspCache, MspKind};
use mspkit_core::poly::{LaurentX1, MPoly};
use mspkit_core::series::{self, EgfCoeffs};
use mspkit_core::stirling::{self, NumberKind, NumberTable};
use mspkit_core::{ptypes, BigInt, BigRational};
use serde_json::json;
use thiserror::Error;

use crate::format::parse_poly;
use crate::golden;
use crate::random::Gen;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Random inputs used by `reversion-three-path`.
pub const REVERSION_SAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub id: &'static str,
    /// Parameter range actually covered, e.g. `n<=10`.
    pub params: String,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub wall_time: Duration,
}

impl CheckResult {
    pub fn to_json(&self, timings: bool) -> serde_json::Value {
        let mut v = json!({
            "id": self.id,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
        });
        if timings {
            v["wall_time_ms"] = json!(self.wall_time.as_secs_f64() * 1e3);
        }
        v
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown check id `{id}`; valid ids: {valid}")]
    UnknownCheck { id: String, valid: String },
    #[error("--max-n must be at least 1")]
    MaxN,
}

/// Counterexample text of a failing check.
#[derive(Debug)]
pub struct Fail(pub String);

impl From<mspkit_core::Error> for Fail {
    fn from(e: mspkit_core::Error) -> Self {
        Fail(format!("error: {e}"))
    }
}

type Outcome = Result<(), Fail>;

fn ensure_eq<T: PartialEq + Display>(label: impl Display, want: &T, got: &T) -> Outcome {
    if want == got {
        Ok(())
    } else {
        Err(Fail(format!("{label}: expected {want}, got {got}")))
    }
}

fn ensure(cond: bool, label: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Fail(label()))
    }
}

pub struct Ctx<'a> {
    pub cache: &'a mut MspCache,
    pub seed: u64,
}

struct Check {
    id: &'static str,
    cap: u32,
    run: fn(&mut Ctx, u32) -> Outcome,
}

const CHECKS: &[Check] = &[
    Check {
        id: "table-golden",
        cap: 6,
        run: table_golden,
    },
    Check {
        id: "inversion-law",
        cap: 10,
        run: inversion_law,
    },
    Check {
        id: "bell-cross-path",
        cap: 12,
        run: bell_cross_path,
    },
    Check {
        id: "first-kind-cross-path",
        cap: 12,
        run: first_kind_cross_path,
    },
    Check {
        id: "sequence-inversion",
        cap: 8,
        run: sequence_inversion,
    },
    Check {
        id: "composition-identities",
        cap: 9,
        run: composition_identities,
    },
    Check {
        id: "convolution-recurrences",
        cap: 10,
        run: convolution_recurrences,
    },
    Check {
        id: "bell-derivative",
        cap: 12,
        run: bell_derivative,
    },
    Check {
        id: "associated-expansion",
        cap: 12,
        run: associated_expansion,
    },
    Check {
        id: "lah-substitution",
        cap: 12,
        run: lah_substitution,
    },
    Check {
        id: "complete-bell",
        cap: 12,
        run: complete_bell,
    },
    Check {
        id: "first-column-nested",
        cap: 12,
        run: first_column_nested,
    },
    Check {
        id: "stirling-fn-identity",
        cap: 12,
        run: stirling_fn_identity,
    },
    Check {
        id: "schloemilch-polynomials",
        cap: 9,
        run: schloemilch_polynomials,
    },
    Check {
        id: "coefficient-sums",
        cap: 15,
        run: coefficient_sums,
    },
    Check {
        id: "degree-laws",
        cap: 12,
        run: degree_laws,
    },
    Check {
        id: "x1-support-bounds",
        cap: 12,
        run: x1_support_bounds,
    },
    Check {
        id: "associated-values",
        cap: 8,
        run: associated_values,
    },
    Check {
        id: "stirling-closed-forms",
        cap: 15,
        run: stirling_closed_forms,
    },
    Check {
        id: "orthogonality",
        cap: 15,
        run: orthogonality,
    },
    Check {
        id: "lah-self-inverse",
        cap: 15,
        run: lah_self_inverse,
    },
    Check {
        id: "summation-identities",
        cap: 15,
        run: summation_identities,
    },
    Check {
        id: "reversion-named-series",
        cap: 12,
        run: reversion_named_series,
    },
    Check {
        id: "reversion-three-path",
        cap: 10,
        run: reversion_three_path,
    },
    Check {
        id: "total-partitions",
        cap: 12,
        run: total_partitions,
    },
    Check {
        id: "egf-composition",
        cap: 10,
        run: egf_composition,
    },
    Check {
        id: "exp-transform-rows",
        cap: 10,
        run: exp_transform_rows,
    },
    Check {
        id: "ptypes-counts",
        cap: 25,
        run: ptypes_counts,
    },
];

/// All check ids in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn find(id: &str) -> Result<&'static Check, VerifyError> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownCheck {
            id: id.to_string(),
            valid: check_ids().join(", "),
        })
}

fn execute(check: &Check, ctx: &mut Ctx, depth: u32) -> CheckResult {
    let start = Instant::now();
    let outcome = (check.run)(ctx, depth);
    let wall_time = start.elapsed();
    let (passed, counterexample) = match outcome {
        Ok(()) => (true, None),
        Err(Fail(msg)) => (false, Some(msg)),
    };
    CheckResult {
        id: check.id,
        params: format!("n<={depth}"),
        passed,
        counterexample,
        wall_time,
    }
}

/// Runs one check to exactly `depth`, ignoring its cap.
pub fn run_check(
    id: &str,
    depth: u32,
    seed: u64,
    cache: &mut MspCache,
) -> Result<CheckResult, VerifyError> {
    let check = find(id)?;
    Ok(execute(check, &mut Ctx { cache, seed }, depth))
}

/// Runs the selected checks (all when `selection` is `None`) in registry order.
pub fn run_suite(
    max_n: u32,
    selection: Option<&[String]>,
    seed: u64,
    cache: &mut MspCache,
) -> Result<Report, VerifyError> {
    if max_n < 1 {
        return Err(VerifyError::MaxN);
    }
    if let Some(sel) = selection {
        for id in sel {
            find(id)?;
        }
    }
    let mut ctx = Ctx { cache, seed };
    let results = CHECKS
        .iter()
        .filter(|c| selection.is_none_or(|s| s.iter().any(|id| id == c.id)))
        .map(|c| execute(c, &mut ctx, max_n.min(c.cap)))
        .collect();
    Ok(Report {
        seed,
        max_n,
        results,
    })
}

/// Generated `S(n,k)` and `B(n,k)`, `n <= 6`, against the transcribed table.
pub fn golden_table_check(cache: &mut MspCache) -> CheckResult {
    execute(
        find("table-golden").expect("registered"),
        &mut Ctx { cache, seed: 0 },
        6,
    )
}

#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub max_n: u32,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.passed).count()
    }

    /// Wall times are included only when `timings` is set, so that reports
    /// for the same seed compare byte for byte.
    pub fn to_json(&self, timings: bool) -> serde_json::Value {
        json!({
            "seed": self.seed,
            "max_n": self.max_n,
            "failures": self.failures(),
            "checks": self.results.iter().map(|r| r.to_json(timings)).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = format!("seed {} max-n {}\n", self.seed, self.max_n);
        for r in &self.results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} {}", r.id, r.params));
            if timings {
                out.push_str(&format!(" {:.1}ms", r.wall_time.as_secs_f64() * 1e3));
            }
            out.push('\n');
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("  counterexample: {c}\n"));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.results.len(),
            self.failures()
        ));
        out
    }
}

fn delta(n: u32, k: u32) -> LaurentX1 {
    if n == k {
        LaurentX1::one()
    } else {
        LaurentX1::zero()
    }
}

fn ones(n: u32) -> Vec<BigRational> {
    vec![BigRational::from_integer(BigInt::from(1)); n as usize]
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn lie(ctx: &mut Ctx, n: u32, k: u32) -> Result<LaurentX1, Fail> {
    Ok(ctx.cache.get(MspKind::LieFirst, n, k)?.clone())
}

fn table_golden(ctx: &mut Ctx, d: u32) -> Outcome {
    for &(n, k, s, b) in golden::TABLE.iter().filter(|e| e.0 <= d) {
        for (kind, text) in [(MspKind::FirstKind, s), (MspKind::SecondKind, b)] {
            let want =
                parse_poly(text).map_err(|e| Fail(format!("table entry {kind}({n},{k}): {e}")))?;
            let got = ctx.cache.poly(kind, n, k)?;
            ensure_eq(format!("{kind}({n},{k})"), &want, &got)?;
        }
    }
    Ok(())
}

fn inversion_law(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let ab = msp::inversion_entry(ctx.cache, n, k, false)?;
            ensure_eq(format!("sum_j A({n},j) B(j,{k})"), &delta(n, k), &ab)?;
            let ba = msp::inversion_entry(ctx.cache, n, k, true)?;
            ensure_eq(format!("sum_j B({n},j) A(j,{k})"), &delta(n, k), &ba)?;
        }
    }
    Ok(())
}

fn bell_cross_path(ctx: &mut Ctx, d: u32) -> Outcome {
    let rows = msp::bell_recursive_triangle(d);
    for n in 1..=d {
        for k in 1..=n {
            let explicit = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            ensure_eq(
                format!("B({n},{k}) recursive"),
                &explicit,
                &rows[n as usize][k as usize],
            )?;
        }
    }
    Ok(())
}

fn first_kind_cross_path(ctx: &mut Ctx, d: u32) -> Outcome {
    let rows = msp::stirling_first_triangle(d);
    for n in 1..=d {
        for k in 1..=n {
            let cached = ctx.cache.poly(MspKind::FirstKind, n, k)?;
            ensure_eq(
                format!("S({n},{k}) recursive"),
                &cached,
                &rows[n as usize][k as usize],
            )?;
            let assoc = msp::stirling_first_explicit(n, k)?;
            ensure_eq(format!("S({n},{k}) associated-Bell sum"), &cached, &assoc)?;
        }
    }
    Ok(())
}

fn sequence_inversion(ctx: &mut Ctx, d: u32) -> Outcome {
    let mut g = Gen::new(ctx.seed, "sequence-inversion");
    for trial in 0..3 {
        let q: Vec<MPoly> = (0..=d).map(|_| g.poly(3, 2)).collect();
        let p = msp::bell_transform(ctx.cache, &q)?;
        let back = msp::lie_transform(ctx.cache, &p)?;
        for (n, (want, got)) in q.iter().zip(&back).enumerate() {
            let want = LaurentX1::from_poly(want.clone());
            ensure_eq(format!("trial {trial} Q({n})"), &want, got)?;
        }
    }
    Ok(())
}

fn composition_identities(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let b = LaurentX1::from_poly(ctx.cache.poly(MspKind::SecondKind, n, k)?);
            if k >= 2 {
                let s = ctx.cache.poly(MspKind::FirstKind, n, k)?;
                ensure_eq(
                    format!("S({n},{k}) from B(S(.,1))"),
                    &s,
                    &msp::compose_first(ctx.cache, n, k)?,
                )?;
                let a = lie(ctx, n, k)?;
                ensure_eq(
                    format!("A({n},{k}) from B(A(.,1))"),
                    &a,
                    &msp::lie_compose_first(ctx.cache, n, k)?,
                )?;
            }
            ensure_eq(
                format!("B({n},{k}) from S(S(.,1))"),
                &b,
                &msp::compose_second(ctx.cache, n, k)?,
            )?;
            ensure_eq(
                format!("B({n},{k}) from A(A(.,1))"),
                &b,
                &msp::lie_compose_second(ctx.cache, n, k)?,
            )?;
        }
    }
    if d >= 2 {
        ensure(
            msp::compose_first(ctx.cache, d, 1)
                == Err(mspkit_core::Error::VacuousIdentity { n: d }),
            || format!("compose_first({d},1) was not rejected as vacuous"),
        )?;
    }
    Ok(())
}

fn convolution_recurrences(ctx: &mut Ctx, d: u32) -> Outcome {
    for (conv, kind) in [
        (Convolution::Bell, MspKind::SecondKind),
        (Convolution::FirstKind, MspKind::FirstKind),
        (Convolution::Associated, MspKind::AssociatedSecond),
        (Convolution::LieFirst, MspKind::LieFirst),
    ] {
        let t = msp::convolution_triangle(ctx.cache, conv, d)?;
        for n in 1..=d {
            for k in 1..=n {
                let want = ctx.cache.get(kind, n, k)?.clone();
                ensure_eq(
                    format!("{kind}({n},{k}) by convolution"),
                    &want,
                    &t[n as usize][k as usize],
                )?;
            }
        }
    }
    Ok(())
}

fn bell_derivative(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            for j in 1..=n {
                let want = ctx
                    .cache
                    .bell_or_zero(n - j, k - 1)?
                    .scale(&binomial(u64::from(n), u64::from(j)));
                ensure_eq(
                    format!("dB({n},{k})/dX{j}"),
                    &want,
                    &b.partial_derivative(j as usize),
                )?;
            }
        }
    }
    Ok(())
}

fn associated_expansion(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            let bt = ctx.cache.poly(MspKind::AssociatedSecond, n, k)?;
            ensure_eq(
                format!("Bt({n},{k}) = B({n},{k})|X1=0"),
                &b.without_var(1),
                &bt,
            )?;
            ensure_eq(
                format!("B({n},{k}) from Bt"),
                &b,
                &msp::bell_from_associated(ctx.cache, n, k)?,
            )?;
            ensure_eq(
                format!("Bt({n},{k}) from B"),
                &bt,
                &msp::associated_from_bell(ctx.cache, n, k)?,
            )?;
        }
    }
    Ok(())
}

fn lah_substitution(ctx: &mut Ctx, d: u32) -> Outcome {
    let plus = NumberTable::new(NumberKind::LahUnsigned, d);
    let signed = NumberTable::new(NumberKind::Lah, d);
    let facts: Vec<BigInt> = (1..=d).map(factorial).collect();
    let alt: Vec<BigRational> = (1..=d).map(|j| rat(sign(i64::from(j)))).collect();
    for n in 1..=d {
        for k in 1..=n {
            let l = ctx.cache.poly(MspKind::Lah, n, k)?;
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            ensure_eq(
                format!("L({n},{k}) = B({n},{k})(j! X_j)"),
                &b.scale_vars(&facts),
                &l,
            )?;
            ensure_eq(
                format!("L({n},{k})(1,...)"),
                &rat(plus.get(n, k)),
                &l.eval_rat(&ones(n))?,
            )?;
            ensure_eq(
                format!("L({n},{k})(-1,1,...)"),
                &rat(signed.get(n, k)),
                &l.eval_rat(&alt)?,
            )?;
        }
    }
    Ok(())
}

fn complete_bell(ctx: &mut Ctx, d: u32) -> Outcome {
    let bell = stirling::bell_numbers(d);
    for n in 1..=d {
        let c = ctx.cache.poly(MspKind::CompleteBell, n, 0)?;
        let mut sum = MPoly::zero();
        for k in 1..=n {
            sum += &ctx.cache.poly(MspKind::SecondKind, n, k)?;
        }
        ensure_eq(format!("Bn({n})"), &sum, &c)?;
        ensure_eq(
            format!("Bn({n})(1,...)"),
            &rat(bell[n as usize].clone()),
            &c.eval_rat(&ones(n))?,
        )?;
    }
    Ok(())
}

fn first_column_nested(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 2..=d {
        let s = ctx.cache.poly(MspKind::FirstKind, n, 1)?;
        ensure_eq(
            format!("S({n},1) nested sum"),
            &s,
            &msp::first_column_nested(ctx.cache, n)?,
        )?;
    }
    Ok(())
}

fn stirling_fn_identity(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let s = ctx.cache.poly(MspKind::FirstKind, n, k)?;
            let big_n = 2 * n - 1 - k;
            let types = ptypes::enumerate(big_n, n - 1);
            ensure_eq(format!("term count of S({n},{k})"), &types.len(), &s.len())?;
            for r in types {
                let r1 = r.r(1);
                ensure(r1 + 1 >= k, || {
                    format!("type ({r}) of S({n},{k}) has r1 < k-1")
                })?;
                let sigma = ptypes::stirling_fn(&r)?;
                ensure_eq(
                    format!("S({n},{k}) coefficient at ({r})"),
                    &sigma,
                    &s.coefficient(&r.monomial()),
                )?;
                let lhs = binomial(u64::from(big_n), u64::from(r1)) * &sigma;
                let rhs = sign(i64::from(n - 1 - r1))
                    * binomial(u64::from(2 * n - 2 - r1), u64::from(k - 1))
                    * ptypes::subset_fn(&r);
                ensure_eq(format!("binomial-weighted sigma at ({r})"), &rhs, &lhs)?;
            }
        }
    }
    Ok(())
}

fn schloemilch_polynomials(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let a = lie(ctx, n, k)?;
            ensure_eq(
                format!("A({n},{k}) from B"),
                &a,
                &msp::lie_first_schloemilch(ctx.cache, n, k)?,
            )?;
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            ensure_eq(
                format!("B({n},{k}) from A"),
                &b,
                &msp::bell_schloemilch(ctx.cache, n, k)?,
            )?;
        }
    }
    Ok(())
}

fn coefficient_sums(ctx: &mut Ctx, d: u32) -> Outcome {
    let s1 = stirling::s1_table(d);
    let s2 = stirling::s2_table(d);
    let c = stirling::cycle_table(d);
    for n in 1..=d {
        for k in 1..=n {
            let s = ctx.cache.poly(MspKind::FirstKind, n, k)?;
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            ensure_eq(
                format!("S({n},{k})(1,...)"),
                &s1.get(n, k),
                &s.coefficient_sum(),
            )?;
            ensure_eq(
                format!("B({n},{k})(1,...)"),
                &s2.get(n, k),
                &b.coefficient_sum(),
            )?;
            ensure_eq(
                format!("subset sum P({n},{k})"),
                &s2.get(n, k),
                &ptypes::sum_over(n, k, ptypes::subset_fn),
            )?;
            let cyc = ptypes::sum_over(n, k, ptypes::cycle_fn);
            ensure_eq(format!("cycle sum P({n},{k})"), &c.get(n, k), &cyc)?;
            ensure_eq(
                format!("s1({n},{k}) sign"),
                &s1.get(n, k),
                &(sign(i64::from(n - k)) * cyc),
            )?;
        }
    }
    Ok(())
}

fn degree_laws(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let s = ctx.cache.poly(MspKind::FirstKind, n, k)?;
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            let got = (s.homogeneous_degree()?, s.isobaric_degree()?);
            let want = (Some(u64::from(n - 1)), Some(u64::from(2 * n - 1 - k)));
            ensure(got == want, || {
                format!("S({n},{k}) degrees {got:?}, expected {want:?}")
            })?;
            let got = (b.homogeneous_degree()?, b.isobaric_degree()?);
            let want = (Some(u64::from(k)), Some(u64::from(n)));
            ensure(got == want, || {
                format!("B({n},{k}) degrees {got:?}, expected {want:?}")
            })?;
        }
    }
    Ok(())
}

fn x1_support_bounds(ctx: &mut Ctx, d: u32) -> Outcome {
    for n in 1..=d {
        for k in 1..=n {
            let s = ctx.cache.poly(MspKind::FirstKind, n, k)?;
            let b = ctx.cache.poly(MspKind::SecondKind, n, k)?;
            let ms = s
                .min_exponent(1)
                .ok_or_else(|| Fail(format!("S({n},{k}) is zero")))?;
            ensure(ms + 1 >= k, || {
                format!("S({n},{k}) has an X1 exponent {ms} < k-1")
            })?;
            let mb = b
                .min_exponent(1)
                .ok_or_else(|| Fail(format!("B({n},{k}) is zero")))?;
            let floor = (2 * i64::from(k) - i64::from(n)).max(0);
            ensure(i64::from(mb) >= floor, || {
                format!("B({n},{k}) has an X1 exponent {mb} < {floor}")
            })?;
        }
    }
    Ok(())
}

fn associated_values(ctx: &mut Ctx, d: u32) -> Outcome {
    let table = stirling::assoc_s2_table(2 * d);
    for n in 1..=d {
        let want = MPoly::var(2).pow(n).scale(&odd_double_factorial(n));
        ensure_eq(
            format!("Bt({},{n})", 2 * n),
            &want,
            &ctx.cache.poly(MspKind::AssociatedSecond, 2 * n, n)?,
        )?;
        ensure_eq(
            format!("S~({},{n})", 2 * n),
            &odd_double_factorial(n),
            &table.get(2 * n, n),
        )?;
        for l in 1..=n {
            let bt = ctx.cache.poly(MspKind::AssociatedSecond, 2 * n - l, n)?;
            ensure(bt.is_zero(), || {
                format!("Bt({},{n}) = {bt}, expected 0", 2 * n - l)
            })?;
            ensure_eq(
                format!("S~({},{n})", 2 * n - l),
                &BigInt::from(0),
                &table.get(2 * n - l, n),
            )?;
        }
    }
    for n in 1..=2 * d {
        for k in 1..=n {
            let bt = ctx.cache.poly(MspKind::AssociatedSecond, n, k)?;
            ensure_eq(
                format!("Bt({n},{k})(1,...)"),
                &table.get(n, k),
                &bt.coefficient_sum(),
            )?;
        }
    }
    Ok(())
}

fn stirling_closed_forms(_: &mut Ctx, d: u32) -> Outcome {
    let s1 = stirling::s1_table(d);
    let s2 = stirling::s2_table(d);
    for n in 1..=d {
        for k in 1..=n {
            ensure_eq(
                format!("Bertrand s2({n},{k})"),
                &s2.get(n, k),
                &stirling::s2_bertrand(n, k)?,
            )?;
            ensure_eq(
                format!("cycle route s2({n},{k})"),
                &s2.get(n, k),
                &stirling::s2_via_cycle(n, k)?,
            )?;
            ensure_eq(
                format!("Schloemilch s1({n},{k})"),
                &s1.get(n, k),
                &stirling::s1_schloemilch(n, k)?,
            )?;
            ensure_eq(
                format!("associated route s1({n},{k})"),
                &s1.get(n, k),
                &stirling::s1_via_assoc(n, k)?,
            )?;
        }
    }
    if d >= 7 {
        let want_s2 = [(-84, 90), (56, 150), (-35, 45), (20, 0)];
        let want_assoc = [(-84, 15), (56, 10), (-35, 1), (20, 0)];
        for (name, got, want) in [
            (
                "Schloemilch",
                stirling::s1_schloemilch_terms(7, 4)?,
                want_s2,
            ),
            (
                "associated",
                stirling::s1_via_assoc_terms(7, 4)?,
                want_assoc,
            ),
        ] {
            let want: Vec<(BigInt, BigInt)> =
                want.iter().map(|&(a, b)| (a.into(), b.into())).collect();
            ensure(got == want, || {
                format!("{name} terms of s1(7,4): {got:?}, expected {want:?}")
            })?;
        }
        ensure_eq("s1(7,4)", &BigInt::from(-735), &s1.get(7, 4))?;
    }
    Ok(())
}

fn orthogonality(_: &mut Ctx, d: u32) -> Outcome {
    match stirling::orthogonality_failure(d) {
        None => Ok(()),
        Some((n, k)) => Err(Fail(format!("sum_j s1({n},j) s2(j,{k}) != delta"))),
    }
}

fn lah_self_inverse(_: &mut Ctx, d: u32) -> Outcome {
    let plus = NumberTable::new(NumberKind::LahUnsigned, d);
    for n in 1..=d {
        for k in 1..=n {
            ensure_eq(
                format!("l+({n},{k}) closed form"),
                &plus.get(n, k),
                &stirling::lah_unsigned_closed(n, k)?,
            )?;
        }
    }
    match stirling::lah_self_inverse_failure(d) {
        None => Ok(()),
        Some((n, k)) => Err(Fail(format!("sum_j l({n},j) l(j,{k}) != delta"))),
    }
}

fn summation_identities(_: &mut Ctx, d: u32) -> Outcome {
    match stirling::summation_identities_failure(d) {
        None => Ok(()),
        Some((n, k)) => Err(Fail(format!(
            "summation identity fails at (n,k) = ({n},{k})"
        ))),
    }
}

type Revert = fn(&mut MspCache, &EgfCoeffs) -> mspkit_core::Result<EgfCoeffs>;

fn paths() -> [(&'static str, Revert); 3] {
    [
        ("msp", series::revert_msp_with),
        ("comtet", series::revert_comtet_with),
        ("oracle", |_, f| series::revert_oracle(f)),
    ]
}

fn show(v: &[BigRational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

fn ensure_series(label: impl Display, want: &[BigRational], got: &[BigRational]) -> Outcome {
    ensure(want == got, || {
        format!("{label}: expected {}, got {}", show(want), show(got))
    })
}

fn reversion_named_series(ctx: &mut Ctx, d: u32) -> Outcome {
    let trees = EgfCoeffs::from_ints((1..=i64::from(d)).map(|j| if j % 2 == 1 { j } else { -j }))?;
    let trees_inv: Vec<BigRational> = (1..=d)
        .map(|n| rat(num_traits::pow(BigInt::from(n), n as usize - 1)))
        .collect();
    let exp_m1 = EgfCoeffs::from_ints(vec![1; d as usize])?;
    let log: Vec<BigRational> = (1..=d)
        .map(|n| rat(sign(i64::from(n) - 1) * factorial(n - 1)))
        .collect();
    let total = EgfCoeffs::from_ints((1..=d).map(|j| if j == 1 { 1 } else { -1 }))?;
    let t: Vec<BigRational> = series::total_partitions(d).into_iter().map(rat).collect();
    let first_four = [1, 1, 4, 26].map(|v| rat(BigInt::from(v)));
    let m = (d as usize).min(4);
    ensure_series("t(1..4)", &first_four[..m], &t[..m])?;
    for (name, revert) in paths() {
        for (label, f, want) in [
            ("rooted trees", &trees, &trees_inv),
            ("logarithm", &exp_m1, &log),
            ("total partitions", &total, &t),
        ] {
            let got = revert(ctx.cache, f)?;
            ensure_series(format!("{label} via {name}"), want, got.as_slice())?;
        }
    }
    Ok(())
}

/// Three reversion paths on seeded random inputs, plus involution and
/// composition back to the identity in both orders.
fn reversion_three_path(ctx: &mut Ctx, d: u32) -> Outcome {
    let mut g = Gen::new(ctx.seed, "reversion-three-path");
    for sample in 0..REVERSION_SAMPLES {
        let order = 1 + g.below(d);
        let f = g.series(order);
        let base = series::revert_msp_with(ctx.cache, &f)?;
        for (name, revert) in paths().into_iter().skip(1) {
            let got = revert(ctx.cache, &f)?;
            ensure_series(
                format!("sample {sample} f={} via {name}", show(f.as_slice())),
                base.as_slice(),
                got.as_slice(),
            )?;
        }
        let twice = series::revert_msp_with(ctx.cache, &base)?;
        ensure_series(
            format!("sample {sample} involution"),
            f.as_slice(),
            twice.as_slice(),
        )?;
        let id = EgfCoeffs::identity(order);
        let fg = series::egf_compose_with(ctx.cache, &f, &base)?;
        ensure_series(
            format!("sample {sample} f(fbar)"),
            id.as_slice(),
            fg.as_slice(),
        )?;
        let gf = series::egf_compose_with(ctx.cache, &base, &f)?;
        ensure_series(
            format!("sample {sample} fbar(f)"),
            id.as_slice(),
            gf.as_slice(),
        )?;
    }
    Ok(())
}

fn total_partitions(ctx: &mut Ctx, d: u32) -> Outcome {
    let b = series::total_partitions_triangle(d);
    for (n, row) in b.iter().enumerate().skip(1) {
        let p = BigInt::from(2).pow(n as u32 - 1);
        ensure_eq(format!("b({n},1)"), &p, &row[1])?;
        ensure_eq(format!("b({n},{n})"), &factorial(n as u32), &row[n])?;
        let two = &p * (BigInt::from(2).pow(n as u32) - BigInt::from(n + 1));
        ensure_eq(
            format!("b({n},2)"),
            &two,
            &row.get(2).cloned().unwrap_or_default(),
        )?;
    }
    let total = EgfCoeffs::from_ints((1..=d).map(|j| if j == 1 { 1 } else { -1 }))?;
    let t: Vec<BigRational> = series::total_partitions(d).into_iter().map(rat).collect();
    let got = series::revert_msp_with(ctx.cache, &total)?;
    ensure_series("t(n) by reversion", &t, got.as_slice())
}

fn egf_composition(ctx: &mut Ctx, d: u32) -> Outcome {
    let one = rat(BigInt::from(1));
    let zero = rat(BigInt::from(0));
    let exp: Vec<BigRational> = vec![one.clone(); d as usize + 1];
    let want: Vec<BigRational> = (0..=d).map(|n| rat(BigInt::from(2).pow(n))).collect();
    ensure_series("e^x e^x", &want, &series::egf_product(&exp, &exp, d))?;
    let mut em1 = exp.clone();
    em1[0] = zero.clone();
    let want: Vec<BigRational> = (0..=d)
        .map(|n| {
            if n == 0 {
                zero.clone()
            } else {
                rat(BigInt::from(2).pow(n) - 2)
            }
        })
        .collect();
    ensure_series("(e^x-1)^2", &want, &series::egf_product(&em1, &em1, d))?;
    let mut g = Gen::new(ctx.seed, "egf-composition");
    for sample in 0..50 {
        let order = 1 + g.below(d);
        let f = g.series(order);
        let h = g.series(order);
        let bell = series::egf_compose_with(ctx.cache, &f, &h)?;
        let direct = series::compose_direct(&f, &h)?;
        ensure_series(
            format!("sample {sample} composition"),
            direct.as_slice(),
            bell.as_slice(),
        )?;
        let idf = series::egf_compose_with(ctx.cache, &f, &EgfCoeffs::identity(order))?;
        ensure_series(
            format!("sample {sample} f(x)"),
            f.as_slice(),
            idf.as_slice(),
        )?;
    }
    Ok(())
}

fn exp_transform_rows(ctx: &mut Ctx, d: u32) -> Outcome {
    let s1 = stirling::s1_table(d);
    let s2 = stirling::s2_table(d);
    let bell = stirling::bell_numbers(d);
    let em1 = EgfCoeffs::from_ints(vec![1; d as usize])?;
    let rows = series::exp_transform_with(ctx.cache, &em1, d)?;
    let inv = series::exp_transform_inverse_with(ctx.cache, &em1, d)?;
    let one = rat(BigInt::from(1));
    for n in 1..=d {
        for k in 0..=n {
            let (r, i) = (
                rows[n as usize].coeff(k as usize),
                inv[n as usize].coeff(k as usize),
            );
            ensure_eq(format!("row {n} t^{k}"), &rat(s2.get(n, k)), &r)?;
            ensure_eq(format!("inverse row {n} t^{k}"), &rat(s1.get(n, k)), &i)?;
        }
        ensure_eq(
            format!("row {n} at t=1"),
            &rat(bell[n as usize].clone()),
            &rows[n as usize].eval(&one),
        )?;
    }
    let mut g = Gen::new(ctx.seed, "exp-transform-rows");
    for sample in 0..5 {
        let f = g.series(d);
        let fbar = series::revert_msp_with(ctx.cache, &f)?;
        let direct = series::exp_transform_with(ctx.cache, &fbar, d)?;
        let via = series::exp_transform_inverse_with(ctx.cache, &f, d)?;
        ensure(direct == via, || {
            format!("sample {sample}: exp rows of fbar differ from A rows of f")
        })?;
        let a = g.nonzero_rational();
        let scaled = EgfCoeffs::new(f.as_slice().iter().map(|c| c * &a).collect())?;
        let base = series::exp_transform_with(ctx.cache, &f, d)?;
        let srows = series::exp_transform_with(ctx.cache, &scaled, d)?;
        for n in 0..=d as usize {
            for k in 0..=n {
                let want = base[n].coeff(k) * num_traits::pow(a.clone(), k);
                ensure_eq(
                    format!("sample {sample} scaled row {n} t^{k}"),
                    &want,
                    &srows[n].coeff(k),
                )?;
            }
        }
    }
    Ok(())
}

/// Partitions of `n` into exactly `k` parts, `p(n,k) = p(n-1,k-1) + p(n-k,k)`.
fn restricted_partitions(n_max: usize) -> Vec<Vec<u64>> {
    let mut p = vec![vec![0u64; n_max + 1]; n_max + 1];
    p[0][0] = 1;
    for n in 1..=n_max {
        for k in 1..=n {
            p[n][k] = p[n - 1][k - 1] + p[n - k][k];
        }
    }
    p
}

fn ptypes_counts(_: &mut Ctx, d: u32) -> Outcome {
    let p = restricted_partitions(d as usize);
    for n in 0..=d {
        for k in 0..=n {
            let types = ptypes::enumerate(n, k);
            ensure_eq(
                format!("|P({n},{k})|"),
                &p[n as usize][k as usize],
                &(types.len() as u64),
            )?;
            for r in &types {
                ensure(r.weight() == n && r.length() == k, || {
                    format!("type ({r}) not in P({n},{k})")
                })?;
                ensure(k == 0 || r.max_part() as u32 <= n - k + 1, || {
                    format!("type ({r}) has a part larger than {}", n - k + 1)
                })?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids = check_ids();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CHECKS.len());
    }

    #[test]
    fn unknown_id_lists_valid_ids() {
        let err = run_suite(3, Some(&["nope".to_string()]), 1, &mut MspCache::new()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("nope") && msg.contains("table-golden"));
    }

    #[test]
    fn minimal_suite_passes() {
        let r = run_suite(1, None, 1, &mut MspCache::new()).unwrap();
        assert!(r.passed(), "{}", r.to_text(false));
    }
}
