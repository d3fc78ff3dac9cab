//! The twelve acceptance criteria, one status line each.
//!
//! A criterion passes when none of its checks fails. Checks whose failure is
//! caused by a misprinted closed form are listed as known; they are reported
//! but do not fail the run as long as the corrected form passes.

use std::process::ExitCode;
use std::time::Instant;

use qlink_core::cert::suites::*;
use qlink_core::cert::{Status, VerificationReport};
use qlink_core::par::Exec;

struct Criterion {
    title: &'static str,
    /// Substrings of check names that are expected to fail.
    known: &'static [&'static str],
    run: fn(Exec) -> Vec<VerificationReport>,
}

const SMALL: [i64; 2] = [10, 10];

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            title: "Hopf annihilation on 1 <= m, n <= 25",
            known: &[],
            run: |x| hopf_annihilation(HOPF_GRID, x),
        },
        Criterion { title: "Hopf division identities", known: &[], run: |_| hopf_division() },
        Criterion {
            title: "Whitehead certificate chain",
            known: &[],
            run: |x| {
                let mut r = whitehead_symbolic();
                r.extend(whitehead_relations(SMALL, x));
                r.extend(whitehead_summand(SMALL, x));
                r
            },
        },
        Criterion {
            title: "Telescoping to G(m,n,0)",
            known: &["G(m,n,0) displayed closed form = sum"],
            run: |x| telescoping(SMALL, x),
        },
        Criterion {
            title: "Main evaluation and Af_m_W annihilation on m <= 10, n <= 12",
            known: &[],
            run: |x| main_evaluation([10, 12], x),
        },
        Criterion {
            title: "Bivariate operators and s = 1 roots",
            known: &[],
            run: |x| {
                let mut r = bivariate(SMALL, x);
                r.extend(hopf_roots());
                r
            },
        },
        Criterion { title: "Abi2_W factors through Abi_tilde_W", known: &[], run: |_| awalt2() },
        Criterion { title: "Combination of Af_m_W and Af_n_W reduces to 0", known: &[], run: |_| annwrel() },
        Criterion { title: "Five-step reduction", known: &[], run: |x| appendix(APPENDIX_GRID, x) },
        Criterion {
            title: "Ore closure and skew division on 200 instances",
            known: &[],
            run: |x| closure_properties(RANDOM_INSTANCES, SEED, x),
        },
        Criterion { title: "Normalized invariant operators", known: &[], run: |x| remarks(SMALL, x) },
        Criterion {
            title: "R-matrix shift ratios",
            known: &["E R+/R+ matches the displayed closed form"],
            run: |x| rmatrix(RMATRIX_SAMPLES, SEED, x),
        },
    ]
}

fn main() -> ExitCode {
    let exec = Exec::default();
    let mut unexpected = 0;
    for (i, c) in criteria().iter().enumerate() {
        let start = Instant::now();
        let reports = (c.run)(exec);
        let failed: Vec<&VerificationReport> = reports.iter().filter(|r| r.status == Status::Fail).collect();
        let none_failed = failed.is_empty();
        let (known, other): (Vec<&VerificationReport>, Vec<&VerificationReport>) =
            failed.into_iter().partition(|r| c.known.iter().any(|k| r.check.contains(k)));
        let secs = start.elapsed().as_secs_f64();
        let status = if none_failed {
            "PASS".to_string()
        } else if other.is_empty() {
            format!("FAIL (known: {})", known.iter().map(|r| r.check.as_str()).collect::<Vec<_>>().join("; "))
        } else {
            unexpected += 1;
            "FAIL".to_string()
        };
        println!("criterion {:>2}: {} [{} checks, {:.1} s] {}", i + 1, status, reports.len(), secs, c.title);
        for r in other {
            println!("{}", r);
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed unexpectedly", unexpected);
        ExitCode::FAILURE
    }
}
