//! Acceptance run: one line per criterion, exact equality throughout.
//!
//! Runs without the libtest harness so the summary is always printed; the
//! process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use macdo::suites::{cases, run_cases, Case, Context, RunConfig, Suite};
use macdo_core::algebra::{Frac, VarUniverse};
use macdo_core::partitions::MultiIndex;
use macdo_core::qbinomial::{gen_qbinom, q_binomial, qbinom_theorem_check};
use macdo_core::report::IdentityReport;

fn grid() -> RunConfig {
    RunConfig {
        n: 3,
        m: 3,
        max_weight: 4,
        ..RunConfig::default()
    }
}

fn select(suite: Suite, cfg: &RunConfig, identities: &[&str]) -> Vec<Case> {
    cases(suite, cfg)
        .into_iter()
        .filter(|c| identities.contains(&c.identity))
        .collect()
}

/// At one variable the generalized coefficients are Gaussian binomials and
/// the theorem is the ordinary q-binomial theorem.
fn one_variable_qbinom() -> Vec<IdentityReport> {
    let uni = VarUniverse::new(1, 0).expect("one variable");
    let mut out = Vec::new();
    for l in 0..=6u32 {
        let alpha = MultiIndex::new(vec![l]);
        out.push(qbinom_theorem_check(&alpha));
        for k in 0..=l {
            let mut r = IdentityReport::new("gaussian").param("l", l).param("k", k);
            match gen_qbinom(uni, &alpha, &MultiIndex::new(vec![k])) {
                Ok(c) => {
                    r.expect_eq(&c, &Frac::from_poly(q_binomial(uni, l, k)));
                }
                Err(e) => r.fail(e.to_string()),
            }
            out.push(r);
        }
    }
    out
}

struct Criterion {
    number: u32,
    title: &'static str,
    cases: Vec<Case>,
    extra: fn() -> Vec<IdentityReport>,
}

fn none() -> Vec<IdentityReport> {
    Vec::new()
}

fn main() -> ExitCode {
    let cfg = grid();
    let iterated = RunConfig { m: 4, ..grid() };
    let criteria = vec![
        Criterion {
            number: 1,
            title: "raising property B_m J_lambda",
            cases: select(Suite::Raising, &cfg, &["raising"]),
            extra: none,
        },
        Criterion {
            number: 2,
            title: "iterated build B_l1...B_ln 1 = J_lambda",
            cases: select(Suite::Raising, &iterated, &["iterated_build"]),
            extra: none,
        },
        Criterion {
            number: 3,
            title: "generalized q-binomial theorem",
            cases: select(Suite::Qbinom, &cfg, &["qbinom_theorem"]),
            extra: one_variable_qbinom,
        },
        Criterion {
            number: 4,
            title: "both Chu-Vandermonde generalizations",
            cases: select(Suite::Chu, &cfg, &["chu_vandermonde", "chu_vandermonde2"]),
            extra: none,
        },
        Criterion {
            number: 5,
            title: "oracle agreement for phi and b",
            cases: select(Suite::Oracles, &cfg, &["phi_oracle", "b_oracle"]),
            extra: none,
        },
        Criterion {
            number: 6,
            title: "matrix inverse f~ g = delta",
            cases: select(Suite::Oracles, &cfg, &["f_matrix"]),
            extra: none,
        },
        Criterion {
            number: 7,
            title: "key identity and degree condition",
            cases: select(Suite::Keyid, &cfg, &["key_identity", "phi_degree"]),
            extra: none,
        },
        Criterion {
            number: 8,
            title: "Macdonald infrastructure",
            cases: select(
                Suite::Cauchy,
                &cfg,
                &["j_integrality", "eigen", "determinantal", "cauchy", "dual_lowering"],
            ),
            extra: none,
        },
        Criterion {
            number: 9,
            title: "Hall-Littlewood specialization",
            cases: select(Suite::Hl, &cfg, &["hall_littlewood"]),
            extra: none,
        },
        Criterion {
            number: 10,
            title: "S_n-equivariance and order bound",
            cases: select(Suite::Raising, &cfg, &["equivariance", "order_bound"]),
            extra: none,
        },
    ];
    let ctx = Context::new(cfg.max_weight + cfg.m);
    let mut all_passed = true;
    for c in &criteria {
        let start = Instant::now();
        let mut reports = run_cases(&c.cases, &ctx, 0);
        reports.extend((c.extra)());
        let failed: Vec<&IdentityReport> = reports.iter().filter(|r| !r.passed).collect();
        let ok = !reports.is_empty() && failed.is_empty();
        all_passed &= ok;
        println!(
            "criterion {:>2} {}: {} ({} cases, {} failed, {:.1}s)",
            c.number,
            c.title,
            if ok { "PASS" } else { "FAIL" },
            reports.len(),
            failed.len(),
            start.elapsed().as_secs_f64()
        );
        for r in failed.iter().take(3) {
            println!("    {} {}: {}", r.identity, r.params_text(), r.detail.as_deref().unwrap_or(""));
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
