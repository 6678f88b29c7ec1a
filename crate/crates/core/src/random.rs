//! Seeded generators for scalars and elements.
//!
//! Every draw goes through a [`ChaCha8Rng`] built from an explicit `u64` seed,
//! so any sample can be replayed.
//!
//! Scalars are `c * s^k * (1 - q^j)^e` with `c` uniform in `{-3..=3} \ {0}`,
//! `k` uniform in `-4..=4`, and with probability 1/3 an extra factor where
//! `j` is uniform in `1..=2` and `e` uniform in `{-1, 1}`. They are therefore
//! never zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::ScalarRat;
use crate::fo::{FoElem, FoMonomial};
use crate::torus::{Monomial, TorusElem};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(rng: &mut impl Rng) -> ScalarRat {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    let k = rng.gen_range(-4..=4);
    let mut x = ScalarRat::from_int(c).mul_qpow(k);
    if rng.gen_ratio(1, 3) {
        let j = rng.gen_range(1..=2);
        let factor = ScalarRat::one_minus_q_pow(j);
        x = if rng.gen_bool(0.5) {
            &x * &factor
        } else {
            x.div(&factor).expect("1 - q^j is nonzero")
        };
    }
    x
}

/// Exponent triple with entries uniform in `-bound..=bound`.
pub fn monomial(rng: &mut impl Rng, bound: i64) -> Monomial {
    Monomial::new(
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

/// Sum of `terms` draws of `scalar * monomial`. Colliding monomials merge, so
/// the result may have fewer terms (or be zero).
pub fn torus_elem(rng: &mut impl Rng, terms: usize, bound: i64) -> TorusElem {
    let mut out = TorusElem::zero();
    for _ in 0..terms {
        let m = monomial(rng, bound);
        let c = scalar(rng);
        out.add_term(m, &c);
    }
    out
}

/// Sum of `terms` draws of `scalar * I1^h I2^m I3^n` with exponents uniform in
/// `0..=max_exp`.
pub fn fo_elem(rng: &mut impl Rng, terms: usize, max_exp: u32) -> FoElem {
    let mut out = FoElem::zero();
    for _ in 0..terms {
        let m = FoMonomial::new(
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
        );
        let c = scalar(rng);
        out.add_term(m, &c);
    }
    out
}

/// Coefficient list of a random polynomial of degree `<= degree` in which
/// every coefficient is zero with probability 1/2 (independently) and
/// otherwise drawn by [`scalar`]. The top coefficient is redrawn as nonzero if
/// the whole list came out zero.
pub fn polynomial(rng: &mut impl Rng, degree: usize) -> Vec<ScalarRat> {
    let mut coeffs: Vec<ScalarRat> = (0..=degree)
        .map(|_| if rng.gen_bool(0.5) { scalar(rng) } else { ScalarRat::zero() })
        .collect();
    if coeffs.iter().all(ScalarRat::is_zero) {
        coeffs[degree] = scalar(rng);
    }
    coeffs
}
