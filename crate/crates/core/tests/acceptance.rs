//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion.
//!
//! Every check is exact; the only tolerances are the wall-clock budgets below.
//! A criterion listed in `KNOWN_OPEN` is printed as FAIL but does not fail the
//! target; it fails the target if it starts passing, so the list stays honest.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use krlab::cartan::{AffineType, Family};
use krlab::demazure::{compare_characters, verify_closure};
use krlab::hwpaths::{path_bd_family, path_c_family, verify_paths};
use krlab::kr::{scan_instances, KrCrystal, DEFAULT_CAP};
use krlab::report::{Status, VerificationReport};
use krlab::suites;

const BUDGET_WTILDE: Duration = Duration::from_secs(60);
const BUDGET_SIGMA: Duration = Duration::from_secs(10);
const BUDGET_SCAN: Duration = Duration::from_secs(300);
const BUDGET_RMATRIX: Duration = Duration::from_secs(300);

/// Criteria that fail for a recorded reason: 7 executes the C-family path
/// formula as printed, which is undefined on A_2n^(2) for partitions with
/// distinct parts.
const KNOWN_OPEN: &[u32] = &[7];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn summarize(rep: &VerificationReport, elapsed: Duration, budget: Duration) -> (bool, String) {
    let in_time = elapsed <= budget;
    let mut detail = format!("{} assertions, {} failed, {:.2?} (budget {:?})", rep.assertions.len(), rep.failed, elapsed, budget);
    if let Some(a) = rep.assertions.iter().find(|a| a.status == Status::Fail) {
        detail.push_str(&format!("; first failure: {}: {}", a.name, a.detail));
    }
    (rep.all_passed() && in_time && rep.passed > 0, detail)
}

fn timed<F: FnOnce() -> VerificationReport>(budget: Duration, f: F) -> (bool, String) {
    let t = Instant::now();
    let rep = f();
    summarize(&rep, t.elapsed(), budget)
}

fn scope() -> Vec<KrCrystal> {
    scan_instances(3, 3, 3, 2).into_iter().map(|(t, r, s)| KrCrystal::new(t, r, s).unwrap()).collect()
}

fn criterion_1() -> (bool, String) {
    timed(BUDGET_WTILDE, || suites::verify_wtilde(6).unwrap())
}

fn criterion_2() -> (bool, String) {
    timed(BUDGET_SIGMA, || suites::verify_sigma(8).unwrap())
}

fn criterion_3() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("u");
        for kr in scope() {
            let g = kr.graph(DEFAULT_CAP).unwrap();
            rep.check(format!("{}: u unique", kr.label()), "kr::find_u", suites::check_u(&kr, &g.nodes).unwrap());
        }
        rep
    })
}

fn criterion_4() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("demazure");
        for kr in scope() {
            let sub = verify_closure(&kr, DEFAULT_CAP).unwrap();
            for a in sub.assertions.into_iter().filter(|a| a.invariant != "demazure::weights") {
                rep.push(a.name, &a.invariant, a.status, a.detail);
            }
        }
        rep
    })
}

fn criterion_5() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("characters");
        for kr in scope() {
            rep.check(format!("{}: character", kr.label()), "demazure::character", compare_characters(&kr, DEFAULT_CAP).unwrap().map(|_| ()));
        }
        rep
    })
}

fn criterion_6() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("y_witness");
        for (n, s) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            for r in 1..=n {
                rep.merge(suites::verify_y_rows(n, r, s).unwrap());
            }
        }
        rep
    })
}

fn criterion_7() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("paths");
        let d7 = path_bd_family(5, 4, &[4, 2, 2, 1, 1]).unwrap().to_string();
        let want = "(f₀f₂f₃f₄f₁f₂f₃)(f₀²f₂²f₁²)";
        rep.check("D7~1 example", "hwpaths::bd", if d7 == want { Ok(()) } else { Err(d7) });
        let c3 = path_c_family(2, 3, &[3, 1], 2).unwrap().to_string();
        let want = "(f₀²f₁²)(f₀⁶)";
        rep.check("C3~1 example", "hwpaths::c", if c3 == want { Ok(()) } else { Err(c3) });
        for kr in scope().into_iter().filter(|k| k.affine_type().family == Family::A2Even) {
            let sub = verify_paths(&kr, DEFAULT_CAP).unwrap();
            for a in sub.assertions.into_iter().filter(|a| a.invariant != "hwpaths::mirrored") {
                rep.push(a.name, &a.invariant, a.status, a.detail);
            }
        }
        rep
    })
}

fn criterion_8() -> (bool, String) {
    timed(BUDGET_RMATRIX, || {
        let mut rep = VerificationReport::new("rmatrix");
        let mut pairs = suites::rmatrix_instances(2, 2, 0, 0);
        let a4: AffineType = "A4~2".parse().unwrap();
        pairs.extend(suites::rmatrix_instances(0, 0, 2, 1).into_iter().filter(|p| p.0 == a4));
        for (t, (r1, s1), (r2, s2)) in pairs {
            let b1 = KrCrystal::new(t, r1, s1).unwrap();
            let b2 = KrCrystal::new(t, r2, s2).unwrap();
            rep.merge(suites::verify_rmatrix(&b1, &b2, DEFAULT_CAP, None).unwrap());
        }
        rep
    })
}

fn criterion_9() -> (bool, String) {
    timed(BUDGET_SCAN, || {
        let mut rep = VerificationReport::new("axioms");
        for kr in scope() {
            rep.merge(suites::verify_axioms(&kr, DEFAULT_CAP).unwrap());
        }
        rep
    })
}

fn main() -> ExitCode {
    let criteria: [(u32, &'static str, fn() -> (bool, String)); 9] = [
        (1, "wtilde words are reduced minimal coset representatives, rank <= 6", criterion_1),
        (2, "I0, Sigma and Aut(X) -> Aut(X0) tables, rank <= 8", criterion_2),
        (3, "unique u in every implemented KR crystal", criterion_3),
        (4, "f_w2-closure stays on the left factor and classically closes to B", criterion_4),
        (5, "Demazure characters equal KR weight multisets", criterion_5),
        (6, "A_2n^(2) tableau identities for b, y, f0^s y", criterion_6),
        (7, "highest weight path examples and their execution on A_2n^(2)", criterion_7),
        (8, "twofold products connected, recipe R = oracle R, R21 R12 = id", criterion_8),
        (9, "axioms, regularity and convex hull on every KR crystal", criterion_9),
    ];
    let mut outcomes = Vec::new();
    for (id, title, f) in criteria {
        let (pass, detail) = f();
        let o = Outcome { id, title, pass, detail };
        println!("criterion {}: {} - {} ({})", o.id, if o.pass { "PASS" } else { "FAIL" }, o.title, o.detail);
        outcomes.push(o);
    }
    let mut ok = true;
    for o in &outcomes {
        let known = KNOWN_OPEN.contains(&o.id);
        if !o.pass && known {
            println!("criterion {}: known open finding, reported as FAIL", o.id);
        } else if !o.pass {
            ok = false;
        } else if known {
            println!("criterion {}: passes but is listed as known open; update KNOWN_OPEN", o.id);
            ok = false;
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/9 criteria pass");
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
