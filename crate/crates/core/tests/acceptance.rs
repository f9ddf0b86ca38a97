//! Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any fails or runs over its time budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use symfrob::frobenius::{fsur, integral_output, CoeffKind, CoeffQuery};
use symfrob::lyndon::{pi_of_word, Word};
use symfrob::oracles::frobenius_via_roots;
use symfrob::partition::partitions_up_to;
use symfrob::symfunc::{standard_series, StandardSeries};
use symfrob::verify::{
    corollary_checks, direct_checks, durfee_suite, expansion_checks, generating_function_checks,
    inverse_checks, kronecker_suite, lyndon_checks, oracle_suite, stabilization_checks,
    stable_matrix_checks, vanishing_suite, Checker, DurfeeBounds, GenfuncBounds, KroneckerBounds,
    VanishingBounds,
};
use symfrob::{Basis, Partition, SymFunc};

fn p(v: &[usize]) -> Partition {
    Partition::from_composition(v)
}

fn prod(basis: Basis, v: &[usize]) -> SymFunc {
    SymFunc::from_composition(basis, v).unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

struct Run {
    failed: Vec<usize>,
    integrality: Vec<String>,
}

impl Run {
    fn criterion(
        &mut self,
        n: usize,
        name: &str,
        budget: Duration,
        body: impl FnOnce() -> Checker,
    ) {
        let start = Instant::now();
        let mut outcome = body();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = outcome.passed() && in_time;
        println!(
            "criterion {n:>2} {}: {name} ({} checks, {:.2?} of {:?})",
            if ok { "PASS" } else { "FAIL" },
            outcome.checks,
            elapsed,
            budget
        );
        for msg in outcome.failures.iter().take(10) {
            println!("    {msg}");
        }
        if !in_time {
            println!("    over time budget");
        }
        self.integrality.append(&mut outcome.integrality);
        if !ok {
            self.failed.push(n);
        }
    }
}

/// `F_Sur{f}` recomputed from the roots-of-unity oracle: `F{f} · (1/H)`.
fn fsur_via_roots(f: &SymFunc) -> SymFunc {
    let d = f.degree();
    frobenius_via_roots(f, d)
        .mul(&standard_series(StandardSeries::EMinus, d))
        .truncated()
}

fn golden_values() -> Checker {
    let mut c = Checker::default();
    let h = |v: &[usize]| prod(Basis::H, v);
    let e = |v: &[usize]| prod(Basis::E, v);
    let h22 = h(&[1])
        + h(&[2])
        + h(&[1, 1]).scale(&int(3))
        + h(&[2, 1]).scale(&int(2))
        + h(&[1, 1, 1])
        + h(&[2, 2]);
    let e53 = e(&[5, 3]) + &h(&[1]) * &e(&[4, 2]) + &h(&[2]) * &e(&[3, 1]) + &h(&[3]) * &e(&[2]);
    for (f, expected, name) in [(h(&[2, 2]), h22, "h22"), (e(&[5, 3]), e53, "e53")] {
        let got = fsur(&f);
        c.integral(&got, || format!("F_Sur{{{name}}}"));
        c.check(got == expected, || format!("F_Sur{{{name}}} = {got}"));
        c.check(fsur_via_roots(&f) == expected, || {
            format!("roots oracle for {name}")
        });
    }
    for n in 0..=10 {
        let en = SymFunc::e(n);
        c.check(fsur(&en) == en, || format!("F_Sur{{e{n}}}"));
    }
    for n in 1..=12 {
        let expected: SymFunc = (1..=n).filter(|d| n % d == 0).map(SymFunc::p).sum();
        let got = fsur(&SymFunc::p(n));
        c.integral(&got, || format!("F_Sur{{p{n}}}"));
        c.check(got == expected, || format!("F_Sur{{p{n}}} = {got}"));
    }
    c
}

fn lyndon_suite() -> Checker {
    let mut c = Checker::default();
    let w = Word::parse("21212121111", None).unwrap();
    c.check(w.pi() == p(&[4, 3, 1]), || {
        format!("pi(21212121111) = {}", w.pi())
    });
    let factors: Vec<String> = w.factorize().iter().map(|f| f.to_string()).collect();
    c.check(
        factors == ["2", "12", "12", "12", "1", "1", "1", "1"],
        || format!("factors {factors:?}"),
    );
    c.check(
        pi_of_word(&[2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1]) == p(&[4, 3, 1]),
        || "pi on slices".into(),
    );
    c = c.merge(lyndon_checks(8));
    c.merge(generating_function_checks(&[(1, 4), (2, 4)], &[(1, 6)]))
}

fn coefficient_spot_checks(c: &mut Checker) {
    let r = symfrob::frobenius::coeff(&CoeffQuery::new(CoeffKind::R, p(&[2]), p(&[2]))).unwrap();
    c.check(r == BigInt::from(2), || format!("r_(2)^(2) = {r}"));
}

fn integrality_sweep() -> Checker {
    let mut c = Checker::default();
    for lam in partitions_up_to(6) {
        for basis in Basis::ALL {
            let f = SymFunc::from_basis(basis, &lam);
            let g = fsur(&f);
            for b in [Basis::M, Basis::E, Basis::H, Basis::S] {
                c.check(integral_output(&g, b).is_ok(), || {
                    format!("F_Sur{{{}{lam}}} in {b}", basis.tag())
                });
            }
        }
    }
    c
}

fn main() {
    let mut run = Run {
        failed: Vec::new(),
        integrality: Vec::new(),
    };
    let secs = Duration::from_secs;

    run.criterion(1, "golden values", secs(1), golden_values);
    run.criterion(2, "route equivalence", secs(60), || {
        expansion_checks(6).merge(direct_checks(7, 10, 7))
    });
    run.criterion(3, "inverse contract", secs(60), || inverse_checks(7));
    run.criterion(4, "Kronecker identity", secs(60), || {
        kronecker_suite(&KroneckerBounds {
            factor_deg: 4,
            series_deg: 6,
            coeff_factor_deg: 3,
            coeff_target_deg: 6,
        })
    });
    run.criterion(5, "roots-of-unity oracle", secs(30), || oracle_suite(6));
    run.criterion(6, "stable coefficients", secs(120), || {
        let mut c = stable_matrix_checks(6).merge(stabilization_checks(5));
        coefficient_spot_checks(&mut c);
        c
    });
    run.criterion(7, "vanishing sweeps", secs(120), || {
        vanishing_suite(&VanishingBounds {
            rt_deg: 7,
            a_deg: 6,
        })
    });
    run.criterion(8, "Durfee criterion", secs(120), || {
        durfee_suite(&DurfeeBounds {
            max_size: 9,
            ks: vec![1, 2],
            confirm_deg: 8,
        })
    });
    run.criterion(
        9,
        "Lyndon words and generating functions",
        secs(60),
        lyndon_suite,
    );
    run.criterion(10, "inverse corollaries", secs(120), || {
        corollary_checks(&GenfuncBounds {
            reciprocal: vec![],
            product: vec![],
            word_len: 0,
            falling_deg: 7,
            h_deg: 10,
            eprod_deg: 6,
            divisibility_k: 3,
        })
    });
    let mut integrality = std::mem::take(&mut run.integrality);
    run.criterion(11, "integrality", secs(60), || {
        let mut c = integrality_sweep();
        c.checks += 1;
        c.integrality.append(&mut integrality);
        c
    });

    if run.failed.is_empty() {
        println!("all acceptance criteria passed");
    } else {
        println!("failed criteria: {:?}", run.failed);
        std::process::exit(1);
    }
}
