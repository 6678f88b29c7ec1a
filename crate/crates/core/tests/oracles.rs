//! Products and the cyclic automorphism recomputed from the defining relations
//! alone, by sorting generator words one adjacent swap at a time.

use qtorus::coeff::ScalarRat;
use qtorus::fo;
use qtorus::torus::{mono_bracket, mono_mul, Monomial, TorusElem};

/// A letter is `(axis, +-1)`.
type Letter = (u8, i64);

fn word_of(m: Monomial) -> Vec<Letter> {
    let mut w = Vec::new();
    for (axis, e) in [(3u8, m.h), (2, m.m), (1, m.n)] {
        w.extend(std::iter::repeat_n((axis, e.signum()), e.unsigned_abs() as usize));
    }
    w
}

/// `q`-exponent picked up when `x y` is rewritten as `y x`, for `x` of larger
/// index than `y` in the normal order `z3 z2 z1`.
fn swap_exponent(x: Letter, y: Letter) -> i64 {
    let base = match (x.0, y.0) {
        // z1 z2 = q z2 z1
        (1, 2) => 1,
        // z2 z3 = q z3 z2
        (2, 3) => 1,
        // z1 z3 = q^-1 z3 z1
        (1, 3) => -1,
        _ => unreachable!(),
    };
    base * x.1 * y.1
}

/// Bubble-sorts a word into `z3 z2 z1` order and cancels `z z^-1`.
/// Returns the `q`-exponent and the resulting monomial.
fn normal_order(mut w: Vec<Letter>) -> (i64, Monomial) {
    let mut q_exp = 0;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..w.len().saturating_sub(1) {
            if w[i].0 < w[i + 1].0 {
                q_exp += swap_exponent(w[i], w[i + 1]);
                w.swap(i, i + 1);
                swapped = true;
            }
        }
    }
    let exp = |axis: u8| w.iter().filter(|l| l.0 == axis).map(|l| l.1).sum::<i64>();
    (q_exp, Monomial::new(exp(3), exp(2), exp(1)))
}

fn oracle_mul(a: Monomial, b: Monomial) -> (ScalarRat, Monomial) {
    let mut w = word_of(a);
    w.extend(word_of(b));
    let (e, m) = normal_order(w);
    (ScalarRat::qpow(2 * e), m)
}

fn oracle_phi(a: Monomial) -> (ScalarRat, Monomial) {
    let rotated = word_of(a)
        .into_iter()
        .map(|(axis, s)| (axis % 3 + 1, s))
        .collect();
    let (e, m) = normal_order(rotated);
    (ScalarRat::qpow(2 * e), m)
}

fn cube(bound: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for h in -bound..=bound {
        for m in -bound..=bound {
            for n in -bound..=bound {
                out.push(Monomial::new(h, m, n));
            }
        }
    }
    out
}

#[test]
fn product_matches_word_rewriting() {
    let monos = cube(2);
    for &a in &monos {
        for &b in &monos {
            assert_eq!(mono_mul(a, b), oracle_mul(a, b), "{a} * {b}");
        }
    }
}

#[test]
fn bracket_matches_word_rewriting() {
    let monos = cube(1);
    for &a in &monos {
        for &b in &monos {
            let (c1, _) = oracle_mul(a, b);
            let (c2, _) = oracle_mul(b, a);
            assert_eq!(mono_bracket(a, b), &c1 - &c2, "[{a}, {b}]");
        }
    }
}

#[test]
fn phi_matches_word_rewriting() {
    for a in cube(3) {
        let (c, m) = oracle_phi(a);
        assert_eq!(TorusElem::monomial(a).phi(), TorusElem::term(c, m), "phi{a}");
    }
}

#[test]
fn frozen_products() {
    // z1^2 z2^3 = q^6 z2^3 z1^2
    assert_eq!(
        mono_mul(Monomial::new(0, 0, 2), Monomial::new(0, 3, 0)),
        (ScalarRat::qpow(12), Monomial::new(0, 3, 2))
    );
    // z1 z3 = q^-1 z3 z1
    assert_eq!(
        mono_mul(Monomial::new(0, 0, 1), Monomial::new(1, 0, 0)),
        (ScalarRat::qpow(-2), Monomial::new(1, 0, 1))
    );
    // (z3^2 z2^2 z1^2)^2 = q^4 z3^4 z2^4 z1^4
    assert_eq!(
        mono_mul(Monomial::new(2, 2, 2), Monomial::new(2, 2, 2)),
        (ScalarRat::qpow(8), Monomial::new(4, 4, 4))
    );
    // [z3 z2^2 z1, z3^-1 z2^-2 z1] = (q^-3 - q^-1) z1^2
    assert_eq!(
        mono_bracket(Monomial::new(1, 2, 1), Monomial::new(-1, -2, 1)),
        &ScalarRat::qpow(-6) - &ScalarRat::qpow(-2)
    );
}

#[test]
fn frozen_phi_images() {
    // phi(z3^-1 z1) = z1^-1 z2 = q^-1 z2 z1^-1
    let x = TorusElem::monomial(Monomial::new(-1, 0, 1)).phi();
    assert_eq!(x, TorusElem::term(ScalarRat::qpow(-2), Monomial::new(0, 1, -1)));
}

/// `G_k` multiplied out word by word with the oracle product.
fn oracle_g(k: usize) -> TorusElem {
    let (first, second) = [(3u8, 1u8), (2, 3), (1, 2)][k - 1];
    let gen = |axis: u8, e: i64| Monomial::axis_power(axis, e);
    let mut out = TorusElem::zero();
    for (c, a, b) in [(-1, -1, -1), (1, -1, 1), (-1, 1, 1)] {
        let (coeff, m) = oracle_mul(gen(first, a), gen(second, b));
        out.add_term(m, &coeff.mul_qpow(c));
    }
    out
}

#[test]
fn g_elements_match_word_rewriting() {
    for k in 1..=3 {
        assert_eq!(fo::gen_g(k).unwrap(), oracle_g(k), "G{k}");
    }
}

#[test]
fn g_normal_forms_frozen() {
    let s = ScalarRat::qpow;
    let g2 = TorusElem::from_terms([
        (Monomial::new(1, 1, 0), s(1)),
        (Monomial::new(1, -1, 0), s(-1)),
        (Monomial::new(-1, -1, 0), s(1)),
    ]);
    let g3 = TorusElem::from_terms([
        (Monomial::new(0, 1, 1), s(1)),
        (Monomial::new(0, 1, -1), s(-1)),
        (Monomial::new(0, -1, -1), s(1)),
    ]);
    assert_eq!(fo::gen_g(2).unwrap(), g2);
    assert_eq!(fo::gen_g(3).unwrap(), g3);
}

#[test]
fn casimir_is_diagonal_and_frozen() {
    let q2m1_sq_inv = (&ScalarRat::qpow(4) - &ScalarRat::one()).pow(-2).unwrap();
    let top = -(&ScalarRat::qpow(8) * &q2m1_sq_inv);
    let middle = &(&ScalarRat::qpow(6) + &ScalarRat::qpow(2)) * &q2m1_sq_inv;
    let expected = TorusElem::from_terms([
        (Monomial::new(2, 2, 2), top.clone()),
        (Monomial::UNIT, middle),
        (Monomial::new(-2, -2, -2), top),
    ]);
    assert_eq!(fo::casimir(), expected);
}

#[test]
fn casimir_powers_leading_terms() {
    // top term of C is t = c z3^2 z2^2 z1^2 with c = -q^4 (q^2-1)^-2, and
    // t^n = c^n q^(2n(n-1)) z3^2n z2^2n z1^2n
    let c = fo::casimir().component(fo::CASIMIR_TOP);
    for n in 1..=4u32 {
        let k = 2 * n as i64;
        let expected = c.pow(n as i64).unwrap().mul_qpow(4 * n as i64 * (n as i64 - 1));
        assert_eq!(fo::casimir_power(n).component(Monomial::new(k, k, k)), expected, "n = {n}");
    }
}
