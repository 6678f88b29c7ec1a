//! The quantum torus `A_q`: invertible generators `z1, z2, z3` with
//! `z1 z2 = q z2 z1`, `z2 z3 = q z3 z2`, `z3 z1 = q z1 z3`.
//!
//! Elements are expanded in the normal-order basis `z3^h z2^m z1^n`, `(h,m,n)`
//! ranging over all of `Z^3`. Products of basis monomials have the closed form
//!
//! ```text
//! z3^h z2^m z1^n * z3^u z2^v z1^w = q^(mu + nv - nu) z3^(h+u) z2^(m+v) z1^(n+w)
//! ```
//!
//! so multiplication never rewrites words step by step.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::coeff::{IntPoly, ScalarRat};

/// Exponent triple of the basis monomial `z3^h z2^m z1^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub h: i64,
    pub m: i64,
    pub n: i64,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { h: 0, m: 0, n: 0 };

    pub const fn new(h: i64, m: i64, n: i64) -> Self {
        Monomial { h, m, n }
    }

    /// `z_axis^e` for axis 1, 2 or 3.
    pub fn axis_power(axis: u8, e: i64) -> Self {
        match axis {
            1 => Monomial::new(0, 0, e),
            2 => Monomial::new(0, e, 0),
            3 => Monomial::new(e, 0, 0),
            _ => panic!("axis {axis} out of range"),
        }
    }

    pub fn total_degree(self) -> i64 {
        self.h + self.m + self.n
    }

    pub fn is_diagonal(self) -> bool {
        self.h == self.m && self.m == self.n
    }

    pub fn inverse(self) -> Self {
        Monomial::new(-self.h, -self.m, -self.n)
    }

    /// Exponent `e` of `q` in `self * other = q^e (self + other)`.
    pub fn twist(self, other: Monomial) -> i64 {
        self.m * other.h + self.n * other.m - self.n * other.h
    }

    /// Exponent `H` in `[a, b] = (1 - q^H) a b`.
    pub fn bracket_exponent(self, other: Monomial) -> i64 {
        self.h * (other.m - other.n) + self.m * (other.n - other.h) + self.n * (other.h - other.m)
    }

    /// Renders as `z3^h z2^m z1^n`, omitting zero exponents and `^1`; `1` for the unit.
    pub fn to_word(self) -> String {
        let parts: Vec<String> = [(3, self.h), (2, self.m), (1, self.n)]
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(k, e)| if e == 1 { format!("z{k}") } else { format!("z{k}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.h + rhs.h, self.m + rhs.m, self.n + rhs.n)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.h, self.m, self.n)
    }
}

/// Product of two basis monomials in normal form.
pub fn mono_mul(a: Monomial, b: Monomial) -> (ScalarRat, Monomial) {
    (ScalarRat::qpow(2 * a.twist(b)), a + b)
}

/// Coefficient of `[a, b]` on the basis monomial `a + b`.
pub fn mono_bracket(a: Monomial, b: Monomial) -> ScalarRat {
    let forward = a.twist(b);
    let backward = b.twist(a);
    if forward == backward {
        return ScalarRat::zero();
    }
    &ScalarRat::qpow(2 * forward) - &ScalarRat::qpow(2 * backward)
}

/// An element of `A_q` as a sparse map from basis monomials to coefficients.
///
/// Zero coefficients are never stored, so the zero element is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TorusElem {
    terms: BTreeMap<Monomial, ScalarRat>,
}

impl TorusElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unity `I`.
    pub fn one() -> Self {
        Self::monomial(Monomial::UNIT)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(ScalarRat::one(), m)
    }

    pub fn term(c: ScalarRat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TorusElem { terms }
    }

    pub fn scalar(c: ScalarRat) -> Self {
        Self::term(c, Monomial::UNIT)
    }

    /// Generator `z_axis` (axis 1..=3), or its inverse.
    pub fn generator(axis: u8, inverse: bool) -> Self {
        Self::monomial(Monomial::axis_power(axis, if inverse { -1 } else { 1 }))
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Monomial, ScalarRat)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in items {
            out.add_term(m, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of `(h, m, n)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ScalarRat)> {
        self.terms.iter()
    }

    /// Terms in the canonical output order: descending lexicographic `(h, m, n)`.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &ScalarRat)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    /// `self += c * m`.
    pub fn add_term(&mut self, m: Monomial, c: &ScalarRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// The coefficient of `t`, i.e. the `A_(h,m,n)` component.
    pub fn component(&self, t: Monomial) -> ScalarRat {
        self.terms.get(&t).cloned().unwrap_or_default()
    }

    /// If `self` is `c * m` with `c != 0`, returns `(c, m)`.
    pub fn as_single_term(&self) -> Option<(&ScalarRat, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(m, c)| (c, *m))
    }

    /// If `self` is a scalar multiple of the unity, returns the scalar.
    pub fn as_scalar(&self) -> Option<ScalarRat> {
        match self.terms.len() {
            0 => Some(ScalarRat::zero()),
            1 => self.terms.get(&Monomial::UNIT).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ScalarRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        TorusElem {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `c * x + y`.
    pub fn add_scale(c: &ScalarRat, x: &TorusElem, y: &TorusElem) -> TorusElem {
        let mut out = y.clone();
        if c.is_zero() {
            return out;
        }
        for (m, a) in &x.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    pub fn mul(&self, other: &TorusElem) -> TorusElem {
        combine(self, other, false)
    }

    /// `[x, y] = xy - yx`, computed from the closed-form structure constants.
    pub fn bracket(&self, other: &TorusElem) -> TorusElem {
        combine(self, other, true)
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> TorusElem {
        let mut acc = TorusElem::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a single nonzero term `c * m`; `None` for anything else.
    pub fn inverse_of_term(&self) -> Option<TorusElem> {
        let (c, m) = self.as_single_term()?;
        // (c m)^-1 = c^-1 m^-1 / q^twist(m, m^-1)
        let twist = m.twist(m.inverse());
        let c = c.inv().ok()?.mul_qpow(-2 * twist);
        Some(TorusElem::term(c, m.inverse()))
    }

    /// The automorphism `z1 -> z2 -> z3 -> z1`. On a basis monomial,
    /// `z3^h z2^m z1^n` maps to `q^(h(n-m)) z3^m z2^n z1^h`.
    pub fn phi(&self) -> TorusElem {
        TorusElem {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (Monomial::new(t.m, t.n, t.h), c.mul_qpow(2 * t.h * (t.n - t.m))))
                .collect(),
        }
    }

    /// Splits `self` into its homogeneous components `Lambda_N`, `N = h + m + n`.
    pub fn lambda_decompose(&self) -> BTreeMap<i64, TorusElem> {
        let mut parts: BTreeMap<i64, TorusElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.total_degree())
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        parts
    }

    /// Projection onto the span of the diagonal monomials `z3^h z2^h z1^h`,
    /// along the Lie subalgebra `L_q`.
    pub fn pi_project(&self) -> TorusElem {
        TorusElem {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_diagonal())
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Membership in `L_q`, the Lie subalgebra generated by `z_k^(+-1)`:
    /// `x` lies in `L_q` iff its diagonal projection vanishes. On failure the
    /// projection is returned as the obstruction.
    pub fn in_lq(&self) -> (bool, TorusElem) {
        let witness = self.pi_project();
        (witness.is_zero(), witness)
    }
}

/// Bilinear extension of the monomial product (or bracket) over a common
/// denominator, so each output coefficient is canonicalized exactly once.
fn combine(x: &TorusElem, y: &TorusElem, bracket: bool) -> TorusElem {
    if x.is_zero() || y.is_zero() {
        return TorusElem::zero();
    }
    if let (Some((a, ma)), Some((b, mb))) = (x.as_single_term(), y.as_single_term()) {
        let c = if bracket {
            &mono_bracket(ma, mb) * &(a * b)
        } else {
            (a * b).mul_qpow(2 * ma.twist(mb))
        };
        return TorusElem::term(c, ma + mb);
    }

    let (lx, xs) = over_common_denominator(x);
    let (ly, ys) = over_common_denominator(y);

    let contributions = |a: Monomial, b: Monomial| -> [(i64, i64); 2] {
        let fwd = 2 * a.twist(b);
        if bracket {
            let bwd = 2 * b.twist(a);
            if fwd == bwd {
                [(0, 0), (0, 0)]
            } else {
                [(fwd, 1), (bwd, -1)]
            }
        } else {
            [(fwd, 1), (0, 0)]
        }
    };

    let mut low = i64::MAX;
    for (a, _) in &xs {
        for (b, _) in &ys {
            for (e, sign) in contributions(*a, *b) {
                if sign != 0 {
                    low = low.min(e);
                }
            }
        }
    }
    if low == i64::MAX {
        return TorusElem::zero();
    }

    let mut acc: BTreeMap<Monomial, IntPoly> = BTreeMap::new();
    let plus = BigInt::one();
    let minus = -BigInt::one();
    for (a, pa) in &xs {
        for (b, pb) in &ys {
            let parts = contributions(*a, *b);
            if parts[0].1 == 0 {
                continue;
            }
            let prod = pa * pb;
            let slot = acc.entry(*a + *b).or_default();
            for (e, sign) in parts {
                if sign != 0 {
                    let c = if sign > 0 { &plus } else { &minus };
                    slot.add_scaled_shifted(&prod, c, (e - low) as usize);
                }
            }
        }
    }

    let den = &lx * &ly;
    let (shift_num, shift_den) = if low >= 0 {
        (low as usize, 0)
    } else {
        (0, low.unsigned_abs() as usize)
    };
    let den = den.shift_up(shift_den);
    let mut out = TorusElem::zero();
    for (m, p) in acc {
        if p.is_zero() {
            continue;
        }
        let c = ScalarRat::new(p.shift_up(shift_num), den.clone()).expect("nonzero denominator");
        out.terms.insert(m, c);
    }
    out
}

/// Returns `L` and the numerators `c * L` for every term, `L` the lcm of denominators.
fn over_common_denominator(x: &TorusElem) -> (IntPoly, Vec<(Monomial, IntPoly)>) {
    let mut lcm = IntPoly::one();
    for c in x.terms.values() {
        if c.denom() != &lcm {
            lcm = IntPoly::lcm(&lcm, c.denom());
        }
    }
    let terms = x
        .terms
        .iter()
        .map(|(m, c)| {
            let num = if c.denom() == &lcm {
                c.numer().clone()
            } else {
                let factor = lcm.div_exact(c.denom()).expect("lcm is a multiple");
                c.numer() * &factor
            };
            (*m, num)
        })
        .collect();
    (lcm, terms)
}

impl Add for &TorusElem {
    type Output = TorusElem;
    fn add(self, rhs: &TorusElem) -> TorusElem {
        TorusElem::add_scale(&ScalarRat::one(), rhs, self)
    }
}

impl Sub for &TorusElem {
    type Output = TorusElem;
    fn sub(self, rhs: &TorusElem) -> TorusElem {
        TorusElem::add_scale(&ScalarRat::from_int(-1), rhs, self)
    }
}

impl Neg for &TorusElem {
    type Output = TorusElem;
    fn neg(self) -> TorusElem {
        self.scale(&ScalarRat::from_int(-1))
    }
}

impl Mul for &TorusElem {
    type Output = TorusElem;
    fn mul(self, rhs: &TorusElem) -> TorusElem {
        TorusElem::mul(self, rhs)
    }
}

impl fmt::Debug for TorusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms_desc().map(|(m, c)| (m.to_string(), c.to_string())))
            .finish()
    }
}

/// Text form `coeff*z3^h z2^m z1^n + ...` in descending monomial order; `0` if empty.
impl fmt::Display for TorusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms_desc()
            .map(|(m, c)| render_term(&c.to_pretty_string(), &m.to_word()))
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

/// Joins a rendered coefficient and monomial word, dropping unit factors.
pub(crate) fn render_term(coeff: &str, word: &str) -> String {
    match (coeff, word) {
        (c, "1") => c.to_string(),
        ("1", w) => w.to_string(),
        ("-1", w) => format!("-{w}"),
        (c, w) => format!("{c}*{w}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(h: i64, m: i64, n: i64) -> TorusElem {
        TorusElem::monomial(Monomial::new(h, m, n))
    }

    fn q(k: i64) -> ScalarRat {
        ScalarRat::qpow(2 * k)
    }

    #[test]
    fn mono_mul_examples() {
        let z1 = Monomial::new(0, 0, 1);
        let z2 = Monomial::new(0, 1, 0);
        assert_eq!(mono_mul(z1, z2), (q(1), Monomial::new(0, 1, 1)));
        assert_eq!(mono_mul(z2, z1), (ScalarRat::one(), Monomial::new(0, 1, 1)));
        assert_eq!(
            mono_mul(Monomial::new(1, 2, 1), Monomial::new(-1, -2, 1)),
            (q(-3), Monomial::new(0, 0, 2))
        );
    }

    #[test]
    fn mul_examples() {
        let x = TorusElem::from_terms([
            (Monomial::new(1, -2, 0), ScalarRat::s()),
            (Monomial::new(0, 0, 3), ScalarRat::from_int(-4)),
        ]);
        assert_eq!(TorusElem::one().mul(&x), x);
        assert_eq!(mono(-1, 0, 0).mul(&mono(1, 0, 0)), TorusElem::one());
    }

    #[test]
    fn bracket_examples() {
        let z3 = mono(1, 0, 0);
        let z2 = mono(0, 1, 0);
        assert_eq!(z3.bracket(&z2), TorusElem::term(ScalarRat::one_minus_q_pow(1), Monomial::new(1, 1, 0)));
        let lhs = mono(1, 2, 1).bracket(&mono(-1, -2, 1));
        assert_eq!(lhs, TorusElem::term(&q(-3) - &q(-1), Monomial::new(0, 0, 2)));
        // zinL cross-check: q^3 (1-q^2)^-1 (q^-3 - q^-1) = 1
        let k = &(&q(3) * &ScalarRat::one_minus_q_pow(2).inv().unwrap()) * &(&q(-3) - &q(-1));
        assert!(k.is_one());
    }

    #[test]
    fn add_scale_examples() {
        let x = mono(2, -1, 0);
        assert_eq!(TorusElem::add_scale(&ScalarRat::one(), &x, &TorusElem::zero()), x);
        assert!(TorusElem::add_scale(&ScalarRat::from_int(-1), &x, &x).is_zero());
        let y = TorusElem::add_scale(&q(1), &mono(0, 1, 1), &mono(1, 0, 0));
        assert_eq!(
            y,
            TorusElem::from_terms([
                (Monomial::new(0, 1, 1), q(1)),
                (Monomial::new(1, 0, 0), ScalarRat::one())
            ])
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(mono(0, 0, 1).phi(), mono(0, 1, 0));
        assert_eq!(mono(1, 2, 1).phi(), TorusElem::term(q(-1), Monomial::new(2, 1, 1)));
    }

    #[test]
    fn pi_and_membership() {
        assert_eq!(mono(2, 2, 2).pi_project(), mono(2, 2, 2));
        let x = &TorusElem::one() + &mono(1, 1, 0);
        assert_eq!(x.pi_project(), TorusElem::one());
        assert_eq!(mono(1, 2, 1).in_lq(), (true, TorusElem::zero()));
        assert_eq!(mono(2, 2, 2).in_lq(), (false, mono(2, 2, 2)));
        assert_eq!(TorusElem::one().in_lq(), (false, TorusElem::one()));
    }

    #[test]
    fn lambda_of_unity() {
        let parts = TorusElem::one().lambda_decompose();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&0], TorusElem::one());
    }

    #[test]
    fn components() {
        assert!(TorusElem::one().component(Monomial::UNIT).is_one());
        assert!(TorusElem::one().component(Monomial::new(1, 0, 0)).is_zero());
    }

    #[test]
    fn term_inverse() {
        let x = TorusElem::term(ScalarRat::from_int(3), Monomial::new(1, -2, 4));
        let inv = x.inverse_of_term().unwrap();
        assert_eq!(x.mul(&inv), TorusElem::one());
        assert_eq!(inv.mul(&x), TorusElem::one());
        assert!(mono(1, 0, 0).bracket(&mono(1, 0, 0)).is_zero());
    }

    #[test]
    fn display_text_form() {
        assert_eq!(TorusElem::zero().to_string(), "0");
        let x = TorusElem::from_terms([
            (Monomial::new(-1, 0, 1), ScalarRat::s()),
            (Monomial::new(1, 0, 1), ScalarRat::qpow(-1)),
            (Monomial::UNIT, ScalarRat::from_int(-1)),
        ]);
        assert_eq!(x.to_string(), "q^(-1/2)*z3 z1 + -1 + q^(1/2)*z3^-1 z1");
    }
}
