//! Acceptance criteria 1-8. Each test prints one `criterion N: PASS|FAIL` line.
//! Run with `cargo test -p qtorus --test acceptance -- --nocapture --test-threads 1`.

use std::time::{Duration, Instant};

use qtorus::random;
use qtorus::serialize::{torus_from_text, torus_to_json, torus_to_text};
use qtorus::verify::{self, SuiteConfig, VerifyReport};

fn seed() -> u64 {
    SuiteConfig::default().seed
}

/// Prints the criterion line and fails the test if any report failed, the
/// case count is off, or the time limit was exceeded.
fn conclude(criterion: u32, reports: &[VerifyReport], expected_cases: &[Option<u64>], limit: Duration, elapsed: Duration) {
    let mut problems = Vec::new();
    for (r, expected) in reports.iter().zip(expected_cases) {
        if !r.passed {
            let ce = r.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default();
            problems.push(format!("{} failed: {ce}", r.name));
        }
        if let Some(n) = expected {
            if r.cases != *n {
                problems.push(format!("{} ran {} cases, expected {n}", r.name, r.cases));
            }
        }
    }
    if elapsed > limit {
        problems.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    let summary: Vec<String> = reports.iter().map(|r| format!("{} cases={}", r.name, r.cases)).collect();
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} ({}; {} ms, limit {} s)",
        summary.join(", "),
        elapsed.as_millis(),
        limit.as_secs()
    );
    for p in &problems {
        println!("  {p}");
    }
    assert!(problems.is_empty(), "criterion {criterion} failed");
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

#[test]
fn criterion_1_presentations() {
    let (r, t) = timed(|| verify::verify_presentations(6));
    conclude(1, &[r], &[Some(3 * 13 * 13 + 9)], Duration::from_secs(5), t);
}

#[test]
fn criterion_2_closed_forms() {
    let (r, t) = timed(|| verify::verify_closed_forms_with(2, 500, 4, seed()));
    conclude(2, &[r], &[Some(5u64.pow(6) + 500)], Duration::from_secs(60), t);
}

#[test]
fn criterion_3_certificates() {
    let (r, t) = timed(|| verify::verify_certificates(3));
    conclude(3, &[r], &[Some(336)], Duration::from_secs(30), t);
}

#[test]
fn criterion_4_casimir_gradation() {
    let (r, t) = timed(|| verify::verify_casimir_gradation(4));
    conclude(4, &[r], &[None], Duration::from_secs(60), t);
}

#[test]
fn criterion_5_not_lie() {
    let (r, t) = timed(|| verify::verify_not_lie_random(25, 3, seed()));
    conclude(5, &[r], &[Some(7 + 25)], Duration::from_secs(120), t);
}

#[test]
fn criterion_6_centrality_and_phi() {
    let (reports, t) = timed(|| vec![verify::verify_phi_and_center(200, seed()), verify::verify_phi_g_cycle()]);
    conclude(6, &reports, &[None, Some(3)], Duration::from_secs(120), t);
}

#[test]
fn criterion_7_confluence() {
    let (r, t) = timed(|| verify::verify_confluence(5));
    // every word of length 1..=5, which includes all 243 of length 5
    conclude(7, &[r], &[Some(3 + 9 + 27 + 81 + 243)], Duration::from_secs(120), t);
}

#[test]
fn criterion_8_round_trip() {
    let start = Instant::now();
    let draw = || {
        let mut rng = random::rng(seed());
        (0..500).map(|_| random::torus_elem(&mut rng, 4, 4)).collect::<Vec<_>>()
    };
    let first = draw();
    let second = draw();
    let mut problems = Vec::new();
    for (i, (x, y)) in first.iter().zip(&second).enumerate() {
        let text = torus_to_text(x);
        if text != torus_to_text(y) || torus_to_json(x) != torus_to_json(y) {
            problems.push(format!("sample {i}: serialization differs between runs"));
        }
        match torus_from_text(&text) {
            Ok(back) if &back == x => {}
            Ok(back) => problems.push(format!("sample {i}: {text} read back as {back}")),
            Err(e) => problems.push(format!("sample {i}: {text} failed to parse: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion 8: {verdict} (round-trip cases=500; {} ms)", elapsed.as_millis());
    for p in problems.iter().take(5) {
        println!("  {p}");
    }
    assert!(problems.is_empty(), "criterion 8 failed");
}
