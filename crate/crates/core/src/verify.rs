//! Replays the structural identities of `A_q`, `U_q'(so_3)` and `L_q` at
//! bounded size and reports pass/fail per check.
//!
//! Checks never panic on a mathematical failure. They record the first
//! failing case as a JSON counterexample (embedding full elements) and keep
//! counting. All randomness is seeded.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::ScalarRat;
use crate::error::{Error, Result};
use crate::fo::{self, FoWord, Strategy};
use crate::liecert;
use crate::random;
use crate::serialize::{fo_to_value, torus_to_value};
use crate::torus::{mono_bracket, mono_mul, Monomial, TorusElem};

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub elapsed: Duration,
    pub counterexample: Option<Value>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    name: &'a str,
    passed: bool,
    cases: u64,
    elapsed_ms: u64,
    counterexample: &'a Option<Value>,
}

impl VerifyReport {
    pub fn to_value(&self) -> Value {
        serde_json::to_value(ReportJson {
            name: &self.name,
            passed: self.passed,
            cases: self.cases,
            elapsed_ms: self.elapsed.as_millis() as u64,
            counterexample: &self.counterexample,
        })
        .expect("plain data")
    }

    /// One line: `PASS name (cases=N, T ms)`, plus the counterexample on failure.
    pub fn to_text(&self) -> String {
        let mut line = format!(
            "{} {} (cases={}, {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.elapsed.as_millis()
        );
        if let Some(c) = &self.counterexample {
            line.push_str("\n  counterexample: ");
            line.push_str(&c.to_string());
        }
        line
    }
}

/// `{"checks":[...]}` for a list of reports.
pub fn reports_to_json(reports: &[VerifyReport]) -> String {
    json!({ "checks": reports.iter().map(VerifyReport::to_value).collect::<Vec<_>>() }).to_string()
}

struct Tally {
    name: &'static str,
    cases: u64,
    first_failure: Option<Value>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            first_failure: None,
            start: Instant::now(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        self.require(ok, witness);
    }

    /// A sub-check that does not count as a separate case.
    fn require(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(witness());
        }
    }

    fn finish(self) -> VerifyReport {
        VerifyReport {
            name: self.name.to_string(),
            passed: self.first_failure.is_none(),
            cases: self.cases,
            elapsed: self.start.elapsed(),
            counterexample: self.first_failure,
        }
    }
}

fn mono_json(m: Monomial) -> Value {
    json!([m.h, m.m, m.n])
}

fn residual_witness(what: &str, lhs: &TorusElem, rhs: &TorusElem) -> Value {
    json!({
        "identity": what,
        "lhs": torus_to_value(lhs),
        "rhs": torus_to_value(rhs),
    })
}

/// Product rule on basis monomials; swappable so a corrupted rule can be
/// shown to be caught.
pub type MonoMul = fn(Monomial, Monomial) -> (ScalarRat, Monomial);

fn mul_with(mul: MonoMul, x: &TorusElem, y: &TorusElem) -> TorusElem {
    let mut out = TorusElem::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (c, m) = mul(*a, *b);
            out.add_term(m, &(&(ca * cb) * &c));
        }
    }
    out
}

/// `z_axis^e`, built as an `|e|`-fold product of generators with `mul`.
fn power_with(mul: MonoMul, axis: u8, e: i64) -> TorusElem {
    let g = TorusElem::generator(axis, e < 0);
    (0..e.unsigned_abs()).fold(TorusElem::one(), |acc, _| mul_with(mul, &acc, &g))
}

/// Defining relations of `A_q`, the reordering laws
/// `z1^m z2^n = q^(mn) z2^n z1^m`, `z2^m z3^n = q^(mn) z3^n z2^m`,
/// `z1^m z3^n = q^(-mn) z3^n z1^m` for `|m|, |n| <= bound`, and the three
/// relations of `U_q'(so_3)` under the embedding.
pub fn verify_presentations(bound: i64) -> VerifyReport {
    verify_presentations_with(bound, mono_mul)
}

pub fn verify_presentations_with(bound: i64, mul: MonoMul) -> VerifyReport {
    let mut t = Tally::new("presentations");
    let z = |axis: u8, inverse: bool| TorusElem::generator(axis, inverse);
    let q = ScalarRat::q();

    for (a, b) in [(1u8, 2u8), (2, 3), (3, 1)] {
        let lhs = mul_with(mul, &z(a, false), &z(b, false));
        let rhs = mul_with(mul, &z(b, false), &z(a, false)).scale(&q);
        t.record(lhs == rhs, || {
            residual_witness(&format!("z{a} z{b} = q z{b} z{a}"), &lhs, &rhs)
        });
    }
    for k in 1..=3u8 {
        let left = mul_with(mul, &z(k, false), &z(k, true));
        let right = mul_with(mul, &z(k, true), &z(k, false));
        let one = TorusElem::one();
        t.record(left == one && right == one, || {
            json!({
                "identity": format!("z{k} z{k}^-1 = 1 = z{k}^-1 z{k}"),
                "z_zinv": torus_to_value(&left),
                "zinv_z": torus_to_value(&right),
            })
        });
    }

    for (a, b, sign) in [(1u8, 2u8, 1i64), (2, 3, 1), (1, 3, -1)] {
        for m in -bound..=bound {
            for n in -bound..=bound {
                let lhs = mul_with(mul, &power_with(mul, a, m), &power_with(mul, b, n));
                let swapped = mul_with(mul, &power_with(mul, b, n), &power_with(mul, a, m));
                let rhs = swapped.scale(&ScalarRat::qpow(2 * sign * m * n));
                t.record(lhs == rhs, || {
                    let law = format!("z{a}^m z{b}^n = q^({}mn) z{b}^n z{a}^m", if sign < 0 { "-" } else { "" });
                    let mut w = residual_witness(&law, &lhs, &rhs);
                    w["m"] = json!(m);
                    w["n"] = json!(n);
                    w
                });
            }
        }
    }

    let gens: Vec<TorusElem> = (1..=3).map(|k| fo::gen_i(k).expect("index in range")).collect();
    for (a, b, c) in [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)] {
        let ab = mul_with(mul, &gens[a], &gens[b]).scale(&ScalarRat::qpow(1));
        let ba = mul_with(mul, &gens[b], &gens[a]).scale(&ScalarRat::qpow(-1));
        let lhs = &ab - &ba;
        t.record(lhs == gens[c], || {
            residual_witness(
                &format!("q^(1/2) I{0} I{1} - q^(-1/2) I{1} I{0} = I{2}", a + 1, b + 1, c + 1),
                &lhs,
                &gens[c],
            )
        });
    }
    t.finish()
}

/// `H = h(v-w) + m(w-u) + n(u-v)` for `a = (h,m,n)`, `b = (u,v,w)`.
pub fn h_exponent(a: Monomial, b: Monomial) -> i64 {
    a.h * (b.m - b.n) + a.m * (b.n - b.h) + a.n * (b.h - b.m)
}

fn closed_form_case(t: &mut Tally, a: Monomial, b: Monomial) {
    let x = TorusElem::monomial(a);
    let y = TorusElem::monomial(b);
    let oracle = &x.mul(&y) - &y.mul(&x);
    let closed = TorusElem::term(mono_bracket(a, b), a + b);
    let h_form = x.mul(&y).scale(&ScalarRat::one_minus_q_pow(h_exponent(a, b)));
    let witness = |what: &str, lhs: &TorusElem, rhs: &TorusElem| {
        let mut w = residual_witness(what, lhs, rhs);
        w["a"] = mono_json(a);
        w["b"] = mono_json(b);
        w
    };
    t.record(closed == oracle, || witness("closed-form bracket = xy - yx", &closed, &oracle));
    t.require(h_form == oracle, || witness("(1 - q^H) xy = [x,y]", &h_form, &oracle));
    if (a + b).is_diagonal() {
        t.require(oracle.is_zero(), || witness("[x,y] = 0 on opposite-sum pairs", &oracle, &TorusElem::zero()));
    }
}

/// The bracket closed form against `xy - yx`, the `(1 - q^H)` identity and the
/// vanishing of `[x,y]` when `x y` is diagonal, over every pair with exponents in
/// `[-bound, bound]`.
pub fn verify_closed_forms(bound: i64) -> VerifyReport {
    verify_closed_forms_with(bound, 0, 0, 0)
}

/// As [`verify_closed_forms`], plus `random_cases` seeded pairs with exponents
/// in `[-random_bound, random_bound]`.
pub fn verify_closed_forms_with(bound: i64, random_cases: usize, random_bound: i64, seed: u64) -> VerifyReport {
    let mut t = Tally::new("closed-forms");
    let mut monos = Vec::new();
    for h in -bound..=bound {
        for m in -bound..=bound {
            for n in -bound..=bound {
                monos.push(Monomial::new(h, m, n));
            }
        }
    }
    for &a in &monos {
        for &b in &monos {
            closed_form_case(&mut t, a, b);
        }
    }
    let mut rng = random::rng(seed);
    for _ in 0..random_cases {
        let a = random::monomial(&mut rng, random_bound);
        let b = random::monomial(&mut rng, random_bound);
        closed_form_case(&mut t, a, b);
    }
    t.finish()
}

/// Every non-diagonal `(h,m,n)` in `[-bound, bound]^3` gets a certificate that
/// evaluates to exactly `z3^h z2^m z1^n`, lies in the kernel of `pi`, and
/// commutes with `phi`. Diagonal triples must be rejected; they are checked
/// but not counted.
pub fn verify_certificates(bound: i64) -> VerifyReport {
    let mut t = Tally::new("certificates");
    for h in -bound..=bound {
        for m in -bound..=bound {
            for n in -bound..=bound {
                let target = Monomial::new(h, m, n);
                let result = liecert::cert_monomial(h, m, n);
                if target.is_diagonal() {
                    let rejected = matches!(result, Err(Error::DiagonalNotInLq(d)) if d == target);
                    t.require(rejected, || json!({ "triple": mono_json(target), "error": "diagonal triple was not rejected" }));
                    continue;
                }
                let cert = match result {
                    Ok(c) => c,
                    Err(e) => {
                        t.record(false, || json!({ "triple": mono_json(target), "error": e.to_string() }));
                        continue;
                    }
                };
                let value = cert.eval();
                let expected = TorusElem::monomial(target);
                let projected = value.pi_project();
                let natural = cert.phi().eval() == value.phi();
                t.record(value == expected && projected.is_zero() && natural, || {
                    json!({
                        "triple": mono_json(target),
                        "certificate": cert.to_string(),
                        "value": torus_to_value(&value),
                        "pi": torus_to_value(&projected),
                        "phi_natural": natural,
                    })
                });
            }
        }
    }
    t.finish()
}

fn q2_minus_1() -> ScalarRat {
    &ScalarRat::qpow(4) - &ScalarRat::one()
}

/// The leading coefficient as stated for the Casimir-power lemma:
/// `(-1)^n q^(2(n^2 - n + 2)) (q^2 - 1)^(-2n)`.
pub fn stated_casimir_leading(n: u32) -> ScalarRat {
    let n = n as i64;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = ScalarRat::from_int(sign).mul_qpow(4 * (n * n - n + 2));
    &c * &q2_minus_1().pow(-2 * n).expect("q^2 - 1 is nonzero")
}

/// `(-1)^n q^(2n^2 + 2n) (q^2 - 1)^(-2n)`, the `n`-th power of the top term
/// `-q^4 (q^2 - 1)^-2 z3^2 z2^2 z1^2` of `C` in `A_q`.
pub fn computed_casimir_leading(n: u32) -> ScalarRat {
    let n = n as i64;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = ScalarRat::from_int(sign).mul_qpow(4 * (n * n + n));
    &c * &q2_minus_1().pow(-2 * n).expect("q^2 - 1 is nonzero")
}

/// For `n = 1..=n_max`: the `(2n,2n,2n)` component of `C^n` equals the stated
/// leading coefficient, and `C^n` minus that leading term is supported in even
/// total degrees `-6n, -6n+2, ..., 6n-2`.
pub fn verify_casimir_gradation(n_max: u32) -> VerifyReport {
    verify_casimir_gradation_with("casimir", n_max, stated_casimir_leading)
}

/// Same gradation check with the leading coefficient `(-1)^n q^(2n^2+2n) (q^2-1)^(-2n)`.
pub fn verify_casimir_gradation_corrected(n_max: u32) -> VerifyReport {
    verify_casimir_gradation_with("casimir-corrected", n_max, computed_casimir_leading)
}

fn verify_casimir_gradation_with(name: &'static str, n_max: u32, leading: fn(u32) -> ScalarRat) -> VerifyReport {
    let mut t = Tally::new(name);
    for n in 1..=n_max {
        let power = fo::casimir_power(n);
        let k = 2 * n as i64;
        let top = Monomial::new(k, k, k);
        let expected = leading(n);
        let actual = power.component(top);
        let rest = &power - &TorusElem::term(expected.clone(), top);
        let lo = -6 * n as i64;
        let hi = 6 * n as i64 - 2;
        let stray: Vec<Monomial> = rest
            .support()
            .filter(|m| {
                let d = m.total_degree();
                d % 2 != 0 || d < lo || d > hi
            })
            .collect();
        t.record(actual == expected && stray.is_empty(), || {
            let stray_part = TorusElem::from_terms(stray.iter().map(|&m| (m, rest.component(m))));
            json!({
                "n": n,
                "stated_leading": expected.to_canonical_string(),
                "computed_leading": actual.to_canonical_string(),
                "allowed_degrees": [lo, hi],
                "terms_outside": torus_to_value(&stray_part),
            })
        });
    }
    t.finish()
}

/// The seven fixed polynomials `1, C, C^2, C^3, C + 1, C^2 - qC, q^(1/2) C^3 + C`,
/// as coefficient lists in ascending degree.
pub fn fixed_casimir_polynomials() -> Vec<Vec<ScalarRat>> {
    let i = |c: i64| ScalarRat::from_int(c);
    let z = ScalarRat::zero;
    vec![
        vec![i(1)],
        vec![z(), i(1)],
        vec![z(), z(), i(1)],
        vec![z(), z(), z(), i(1)],
        vec![i(1), i(1)],
        vec![z(), -ScalarRat::q(), i(1)],
        vec![z(), i(1), z(), ScalarRat::s()],
    ]
}

/// `pi(p(C)) != 0` for each coefficient list `p`.
pub fn verify_not_lie(polynomials: &[Vec<ScalarRat>]) -> Result<VerifyReport> {
    if polynomials.iter().any(|p| p.iter().all(ScalarRat::is_zero)) {
        return Err(Error::ZeroPolynomial);
    }
    let mut t = Tally::new("not-lie");
    for p in polynomials {
        let projected = fo::poly_in_casimir(p).pi_project();
        t.record(!projected.is_zero(), || {
            json!({ "polynomial": p.iter().map(ScalarRat::to_canonical_string).collect::<Vec<_>>() })
        });
    }
    Ok(t.finish())
}

/// The fixed polynomials followed by `count` seeded random ones of degree
/// `<= degree` (see [`random::polynomial`]).
pub fn verify_not_lie_random(count: usize, degree: usize, seed: u64) -> VerifyReport {
    let mut polys = fixed_casimir_polynomials();
    let mut rng = random::rng(seed);
    polys.extend((0..count).map(|_| random::polynomial(&mut rng, degree)));
    verify_not_lie(&polys).expect("generated polynomials are nonzero")
}

/// `phi^3 = id` and `phi(xy) = phi(x) phi(y)` on `samples` seeded random
/// elements, `[C, I_k] = 0`, and `[C, embed(x)] = 0` on seeded random small
/// elements of `U_q'(so_3)`.
pub fn verify_phi_and_center(samples: usize, seed: u64) -> VerifyReport {
    let mut t = Tally::new("phi-center");
    let mut rng = random::rng(seed);
    for _ in 0..samples {
        let x = random::torus_elem(&mut rng, 3, 3);
        let y = random::torus_elem(&mut rng, 3, 3);
        let cube = x.phi().phi().phi();
        t.record(cube == x, || residual_witness("phi^3(x) = x", &cube, &x));
        let lhs = x.mul(&y).phi();
        let rhs = x.phi().mul(&y.phi());
        t.record(lhs == rhs, || {
            let mut w = residual_witness("phi(xy) = phi(x) phi(y)", &lhs, &rhs);
            w["x"] = torus_to_value(&x);
            w["y"] = torus_to_value(&y);
            w
        });
    }
    let c = fo::casimir();
    for k in 1..=3 {
        let br = c.bracket(&fo::gen_i(k).expect("index in range"));
        t.record(br.is_zero(), || residual_witness(&format!("[C, I{k}] = 0"), &br, &TorusElem::zero()));
    }
    for _ in 0..samples.min(20) {
        let x = random::fo_elem(&mut rng, 2, 2);
        let br = c.bracket(&fo::embed(&x));
        t.record(br.is_zero(), || {
            let mut w = residual_witness("[C, x] = 0", &br, &TorusElem::zero());
            w["x"] = fo_to_value(&x);
            w
        });
    }
    t.finish()
}

/// The cycle `phi(G1) = G2`, `phi(G2) = G3`, `phi(G3) = G1`.
pub fn verify_phi_g_cycle() -> VerifyReport {
    let mut t = Tally::new("phi-g-cycle");
    let g: Vec<TorusElem> = (1..=3).map(|k| fo::gen_g(k).expect("index in range")).collect();
    for k in 0..3 {
        let image = g[k].phi();
        let target = &g[(k + 1) % 3];
        t.record(&image == target, || {
            let mut w = residual_witness(&format!("phi(G{}) = G{}", k + 1, (k + 1) % 3 + 1), &image, target);
            let actual = (0..3).find(|&j| g[j] == image).map(|j| format!("G{}", j + 1));
            w["image_is"] = json!(actual);
            w
        });
    }
    t.finish()
}

/// Every word of length `1..=max_len` over `I1, I2, I3` has the same normal
/// form under leftmost and rightmost rewriting, and that normal form embeds to
/// the letter-by-letter product in `A_q`.
pub fn verify_confluence(max_len: usize) -> VerifyReport {
    let mut t = Tally::new("confluence");
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        words = words
            .iter()
            .flat_map(|w| {
                (1..=3u8).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        for w in &words {
            let left = fo::fo_normalize([FoWord::new(w.clone())], Strategy::Leftmost);
            let right = fo::fo_normalize([FoWord::new(w.clone())], Strategy::Rightmost);
            let embedded = fo::embed(&left);
            let direct = fo::embed_word(&FoWord::new(w.clone()));
            t.record(left == right && embedded == direct, || {
                json!({
                    "word": w,
                    "leftmost": fo_to_value(&left),
                    "rightmost": fo_to_value(&right),
                    "embedded_normal_form": torus_to_value(&embedded),
                    "embedded_word": torus_to_value(&direct),
                })
            });
        }
    }
    t.finish()
}

/// Parameters of a full run. [`SuiteConfig::default`] is the standard
/// desk-scale configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub presentation_bound: i64,
    pub closed_form_bound: i64,
    pub closed_form_random: usize,
    pub closed_form_random_bound: i64,
    pub certificate_bound: i64,
    pub casimir_n_max: u32,
    pub not_lie_random: usize,
    pub not_lie_degree: usize,
    pub phi_samples: usize,
    pub confluence_len: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            presentation_bound: 6,
            closed_form_bound: 2,
            closed_form_random: 500,
            closed_form_random_bound: 4,
            certificate_bound: 3,
            casimir_n_max: 4,
            not_lie_random: 25,
            not_lie_degree: 3,
            phi_samples: 200,
            confluence_len: 5,
            seed: 20240611,
        }
    }
}

/// Names accepted by [`run_suite`], in report order.
pub const SUITES: &[&str] = &[
    "casimir",
    "casimir-corrected",
    "certificates",
    "closed-forms",
    "confluence",
    "not-lie",
    "phi-center",
    "phi-g-cycle",
    "presentations",
];

fn run_one(name: &str, cfg: &SuiteConfig) -> VerifyReport {
    match name {
        "presentations" => verify_presentations(cfg.presentation_bound),
        "closed-forms" => verify_closed_forms_with(
            cfg.closed_form_bound,
            cfg.closed_form_random,
            cfg.closed_form_random_bound,
            cfg.seed,
        ),
        "certificates" => verify_certificates(cfg.certificate_bound),
        "casimir" => verify_casimir_gradation(cfg.casimir_n_max),
        "casimir-corrected" => verify_casimir_gradation_corrected(cfg.casimir_n_max),
        "not-lie" => verify_not_lie_random(cfg.not_lie_random, cfg.not_lie_degree, cfg.seed),
        "phi-center" => verify_phi_and_center(cfg.phi_samples, cfg.seed),
        "phi-g-cycle" => verify_phi_g_cycle(),
        "confluence" => verify_confluence(cfg.confluence_len),
        _ => unreachable!("suite names are validated by run_suite"),
    }
}

/// Runs the named suites (all of [`SUITES`] for `None`) on separate threads.
/// Reports come back sorted by name whatever order the threads finish in.
pub fn run_suite(names: Option<&[&str]>, cfg: &SuiteConfig) -> Result<Vec<VerifyReport>> {
    let names: Vec<&str> = names.map(<[&str]>::to_vec).unwrap_or_else(|| SUITES.to_vec());
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(n)) {
        return Err(Error::Domain(format!(
            "unknown suite {bad:?}; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let mut reports: Vec<VerifyReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|&name| scope.spawn(move || run_one(name, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corrupted_mul(a: Monomial, b: Monomial) -> (ScalarRat, Monomial) {
        (ScalarRat::qpow(-2 * a.twist(b)), a + b)
    }

    #[test]
    fn presentations_small_bound() {
        let r = verify_presentations(1);
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.cases, 3 * 9 + 9);
    }

    #[test]
    fn corrupted_product_is_caught() {
        let r = verify_presentations_with(1, corrupted_mul);
        assert!(!r.passed);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn closed_forms_bound_one() {
        let r = verify_closed_forms(1);
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.cases, 27 * 27);
    }

    #[test]
    fn opposite_and_near_opposite_pairs() {
        let a = Monomial::new(1, 2, 1);
        assert!(mono_bracket(a, Monomial::new(-1, -2, -1)).is_zero());
        let c = mono_bracket(a, Monomial::new(-1, -2, 1));
        assert_eq!(c, &ScalarRat::qpow(-6) - &ScalarRat::qpow(-2));
    }

    #[test]
    fn certificates_bound_one() {
        let r = verify_certificates(1);
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.cases, 24);
    }

    #[test]
    fn casimir_first_power_matches_statement() {
        assert_eq!(stated_casimir_leading(1), computed_casimir_leading(1));
        assert!(verify_casimir_gradation(1).passed);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let polys = vec![vec![ScalarRat::one()], vec![ScalarRat::zero(), ScalarRat::zero()]];
        assert_eq!(verify_not_lie(&polys), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn constant_and_linear_not_lie() {
        let r = verify_not_lie(&fixed_casimir_polynomials()[..2]).unwrap();
        assert!(r.passed);
        let pi_c = fo::casimir().pi_project();
        let expected = -(&ScalarRat::qpow(8) * &q2_minus_1().pow(-2).unwrap());
        assert_eq!(pi_c.component(fo::CASIMIR_TOP), expected);
    }

    #[test]
    fn unknown_suite_is_domain_error() {
        assert!(matches!(
            run_suite(Some(&["nope"]), &SuiteConfig::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reports_sorted_and_serialized() {
        let cfg = SuiteConfig {
            presentation_bound: 1,
            confluence_len: 2,
            ..SuiteConfig::default()
        };
        let reports = run_suite(Some(&["presentations", "confluence"]), &cfg).unwrap();
        assert_eq!(reports[0].name, "confluence");
        assert_eq!(reports[0].cases, 3 + 9);
        let text = reports_to_json(&reports);
        assert!(text.starts_with(r#"{"checks":[{"name":"confluence","passed":true,"cases":12,"elapsed_ms":"#));
    }
}
