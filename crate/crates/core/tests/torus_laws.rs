use qtorus::coeff::ScalarRat;
use qtorus::torus::{mono_bracket, mono_mul, Monomial, TorusElem};
use qtorus::verify::h_exponent;

fn cube(bound: i64) -> Vec<Monomial> {
    let r = -bound..=bound;
    r.clone()
        .flat_map(|h| {
            let r = r.clone();
            r.clone().flat_map(move |m| r.clone().map(move |n| Monomial::new(h, m, n)))
        })
        .collect()
}

#[test]
fn bracket_product_identity_on_cube_three() {
    let monos = cube(3);
    for &a in &monos {
        for &b in &monos {
            let (c, m) = mono_mul(a, b);
            assert_eq!(m, a + b);
            let expected = &ScalarRat::one_minus_q_pow(h_exponent(a, b)) * &c;
            assert_eq!(mono_bracket(a, b), expected, "[{a}, {b}]");
        }
    }
}

#[test]
fn vanishing_law_on_cube_four() {
    let mut checked = 0;
    for a in cube(4) {
        for d in -8..=8 {
            let b = Monomial::new(d - a.h, d - a.m, d - a.n);
            if [b.h, b.m, b.n].iter().all(|e| e.abs() <= 4) {
                assert!(mono_bracket(a, b).is_zero(), "[{a}, {b}]");
                checked += 1;
            }
        }
    }
    assert!(checked > 729);
}

#[test]
fn projection_is_idempotent_and_complementary() {
    let x = TorusElem::from_terms(cube(1).into_iter().map(|m| (m, ScalarRat::from_int(m.h - 2 * m.n + 5))));
    let p = x.pi_project();
    assert_eq!(p.pi_project(), p);
    let rest = &x - &p;
    assert!(rest.support().all(|m| !m.is_diagonal()));
    assert!(rest.in_lq().0);
    assert_eq!(p.len(), 3);
}

#[test]
fn empty_element_behaves_as_zero() {
    let zero = TorusElem::from_terms(Vec::new());
    let x = TorusElem::generator(2, true);
    assert!(zero.mul(&x).is_zero());
    assert!(x.bracket(&zero).is_zero());
    assert!(zero.phi().is_zero() && zero.pi_project().is_zero());
    assert!(zero.lambda_decompose().is_empty());
    assert_eq!(zero.to_string(), "0");
}
