//! The Fairlie–Odesskii algebra `U_q'(so_3)` and its embedding into `A_q`.
//!
//! The abstract algebra has generators `I1, I2, I3` with
//!
//! ```text
//! q^(1/2) I1 I2 - q^(-1/2) I2 I1 = I3
//! q^(1/2) I2 I3 - q^(-1/2) I3 I2 = I1
//! q^(1/2) I3 I1 - q^(-1/2) I1 I3 = I2
//! ```
//!
//! and PBW basis `I1^h I2^m I3^n`. Normal forms are computed by rewriting every
//! out-of-order adjacent pair with the relation solved for it:
//!
//! ```text
//! I2 I1 -> q I1 I2 - q^(1/2) I3
//! I3 I2 -> q I2 I3 - q^(1/2) I1
//! I3 I1 -> q^-1 I1 I3 + q^(-1/2) I2
//! ```
//!
//! Each step either removes an inversion or shortens the word, so rewriting
//! terminates. Confluence is checked empirically in the tests.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coeff::ScalarRat;
use crate::error::{Error, Result};
use crate::torus::{render_term, Monomial, TorusElem};

/// Exponents of the PBW monomial `I1^h I2^m I3^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct FoMonomial {
    pub h: u32,
    pub m: u32,
    pub n: u32,
}

impl FoMonomial {
    pub const UNIT: FoMonomial = FoMonomial { h: 0, m: 0, n: 0 };

    pub const fn new(h: u32, m: u32, n: u32) -> Self {
        FoMonomial { h, m, n }
    }

    /// The word `1^h 2^m 3^n` over generator indices.
    pub fn word(self) -> Vec<u8> {
        let mut w = Vec::with_capacity((self.h + self.m + self.n) as usize);
        w.extend(std::iter::repeat_n(1, self.h as usize));
        w.extend(std::iter::repeat_n(2, self.m as usize));
        w.extend(std::iter::repeat_n(3, self.n as usize));
        w
    }

    pub fn to_word(self) -> String {
        let parts: Vec<String> = [(1, self.h), (2, self.m), (3, self.n)]
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(k, e)| if e == 1 { format!("I{k}") } else { format!("I{k}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// A coefficient times a word in `I1, I2, I3` (letters are indices 1..=3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoWord {
    pub letters: Vec<u8>,
    pub coefficient: ScalarRat,
}

impl FoWord {
    pub fn new(letters: Vec<u8>) -> Self {
        FoWord {
            letters,
            coefficient: ScalarRat::one(),
        }
    }
}

/// Which out-of-order pair the rewriter reduces first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// An element of `U_q'(so_3)` in the PBW basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FoElem {
    terms: BTreeMap<FoMonomial, ScalarRat>,
}

impl FoElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(FoMonomial::UNIT)
    }

    pub fn monomial(m: FoMonomial) -> Self {
        Self::term(ScalarRat::one(), m)
    }

    pub fn term(c: ScalarRat, m: FoMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &c);
        out
    }

    /// Generator `I_k` for `k` in 1..=3.
    pub fn generator(k: usize) -> Result<Self> {
        let m = match k {
            1 => FoMonomial::new(1, 0, 0),
            2 => FoMonomial::new(0, 1, 0),
            3 => FoMonomial::new(0, 0, 1),
            _ => return Err(Error::IndexOutOfRange(k)),
        };
        Ok(Self::monomial(m))
    }

    pub fn from_terms(items: impl IntoIterator<Item = (FoMonomial, ScalarRat)>) -> Self {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&FoMonomial, &ScalarRat)> {
        self.terms.iter()
    }

    pub fn terms_desc(&self) -> impl Iterator<Item = (&FoMonomial, &ScalarRat)> {
        self.terms.iter().rev()
    }

    pub fn component(&self, m: FoMonomial) -> ScalarRat {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: FoMonomial, c: &ScalarRat) {
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

    pub fn scale(&self, c: &ScalarRat) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    /// `c * x + y`
    pub fn add_scale(c: &ScalarRat, x: &FoElem, y: &FoElem) -> FoElem {
        let mut out = y.clone();
        for (m, a) in &x.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    pub fn mul(&self, other: &FoElem) -> FoElem {
        let words = self.terms.iter().flat_map(|(a, ca)| {
            other.terms.iter().map(move |(b, cb)| {
                let mut letters = a.word();
                letters.extend(b.word());
                FoWord {
                    letters,
                    coefficient: ca * cb,
                }
            })
        });
        fo_normalize(words, Strategy::Leftmost)
    }

    pub fn pow(&self, e: u32) -> FoElem {
        let mut acc = FoElem::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn bracket(&self, other: &FoElem) -> FoElem {
        FoElem::add_scale(&ScalarRat::from_int(-1), &other.mul(self), &self.mul(other))
    }
}

impl fmt::Debug for FoElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms_desc().map(|(m, c)| (m.to_word(), c.to_string())))
            .finish()
    }
}

impl fmt::Display for FoElem {
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

/// Replacement for the out-of-order pair `(hi, lo)`: `(c1, reordered pair, c2, single letter)`.
fn rule(hi: u8, lo: u8) -> (ScalarRat, ScalarRat, u8) {
    match (hi, lo) {
        (2, 1) => (ScalarRat::q(), -ScalarRat::qpow(1), 3),
        (3, 2) => (ScalarRat::q(), -ScalarRat::qpow(1), 1),
        (3, 1) => (ScalarRat::qpow(-2), ScalarRat::qpow(-1), 2),
        _ => unreachable!("({hi},{lo}) is not an inversion"),
    }
}

fn find_redex(word: &[u8], strategy: Strategy) -> Option<usize> {
    let mut descents = (0..word.len().saturating_sub(1)).filter(|&i| word[i] > word[i + 1]);
    match strategy {
        Strategy::Leftmost => descents.next(),
        Strategy::Rightmost => descents.next_back(),
    }
}

fn sorted_monomial(word: &[u8]) -> FoMonomial {
    let count = |k| word.iter().filter(|&&l| l == k).count() as u32;
    FoMonomial::new(count(1), count(2), count(3))
}

/// Rewrites a linear combination of words to PBW normal form.
pub fn fo_normalize(words: impl IntoIterator<Item = FoWord>, strategy: Strategy) -> FoElem {
    let mut pending: BTreeMap<Vec<u8>, ScalarRat> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<Vec<u8>, ScalarRat>, w: Vec<u8>, c: ScalarRat| {
        if c.is_zero() {
            return;
        }
        match pending.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    pending.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                pending.insert(w, c);
            }
        }
    };
    for w in words {
        push(&mut pending, w.letters, w.coefficient);
    }

    let mut out = FoElem::zero();
    // Longest words first, so shorter words produced by rewriting get merged
    // with existing entries before they are processed.
    while let Some(key) = pending
        .keys()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .cloned()
    {
        let c = pending.remove(&key).expect("key present");
        match find_redex(&key, strategy) {
            None => out.add_term(sorted_monomial(&key), &c),
            Some(i) => {
                let (c_swap, c_letter, letter) = rule(key[i], key[i + 1]);
                let mut swapped = key.clone();
                swapped.swap(i, i + 1);
                let mut shorter = key[..i].to_vec();
                shorter.push(letter);
                shorter.extend_from_slice(&key[i + 2..]);
                push(&mut pending, swapped, &c * &c_swap);
                push(&mut pending, shorter, &c * &c_letter);
            }
        }
    }
    out
}

/// `G_1, G_2, G_3` in the normal-order basis of `A_q`.
pub fn gen_g(k: usize) -> Result<TorusElem> {
    static CACHE: OnceLock<[TorusElem; 3]> = OnceLock::new();
    if !(1..=3).contains(&k) {
        return Err(Error::IndexOutOfRange(k));
    }
    let all = CACHE.get_or_init(|| [g_from_definition(1), g_from_definition(2), g_from_definition(3)]);
    Ok(all[k - 1].clone())
}

/// Builds `G_k` from its defining words, e.g.
/// `G_1 = q^(-1/2) z3^-1 z1^-1 + q^(1/2) z3^-1 z1 + q^(-1/2) z3 z1`,
/// with `G_2`, `G_3` using the pairs `(z2, z3)` and `(z1, z2)`.
fn g_from_definition(k: usize) -> TorusElem {
    let (first, second) = match k {
        1 => (3, 1),
        2 => (2, 3),
        3 => (1, 2),
        _ => unreachable!(),
    };
    let z = |axis: u8, inverse: bool| TorusElem::generator(axis, inverse);
    let word = |a: bool, b: bool| z(first, a).mul(&z(second, b));
    let mut g = word(true, true).scale(&ScalarRat::qpow(-1));
    g = TorusElem::add_scale(&ScalarRat::qpow(1), &word(true, false), &g);
    TorusElem::add_scale(&ScalarRat::qpow(-1), &word(false, false), &g)
}

/// `1 / (q - q^-1)`, the scale of the embedding `I_k -> G_k / (q - q^-1)`.
fn embedding_scale() -> ScalarRat {
    (&ScalarRat::q() - &ScalarRat::qpow(-2))
        .inv()
        .expect("q - q^-1 is nonzero")
}

/// Image of `I_k` in `A_q`.
pub fn gen_i(k: usize) -> Result<TorusElem> {
    Ok(gen_g(k)?.scale(&embedding_scale()))
}

/// The injective homomorphism `U_q'(so_3) -> A_q`.
pub fn embed(x: &FoElem) -> TorusElem {
    let gens: Vec<TorusElem> = (1..=3).map(|k| gen_i(k).expect("index in range")).collect();
    let mut powers: HashMap<(usize, u32), TorusElem> = HashMap::new();
    let mut power = |k: usize, e: u32| -> TorusElem {
        if let Some(p) = powers.get(&(k, e)) {
            return p.clone();
        }
        let p = gens[k].pow(e);
        powers.insert((k, e), p.clone());
        p
    };
    let mut out = TorusElem::zero();
    for (m, c) in x.terms() {
        let img = power(0, m.h).mul(&power(1, m.m)).mul(&power(2, m.n));
        out = TorusElem::add_scale(c, &img, &out);
    }
    out
}

/// Image of a single word, multiplied letter by letter in `A_q`.
pub fn embed_word(w: &FoWord) -> TorusElem {
    let gens: Vec<TorusElem> = (1..=3).map(|k| gen_i(k).expect("index in range")).collect();
    let mut acc = TorusElem::scalar(w.coefficient.clone());
    for &l in &w.letters {
        acc = acc.mul(&gens[l as usize - 1]);
    }
    acc
}

/// The Casimir element as a PBW combination:
/// `C = -q^(1/2)(q - q^-1) I1 I2 I3 + q I1^2 + q^-1 I2^2 + q I3^2`.
pub fn casimir_fo() -> FoElem {
    let q = ScalarRat::q();
    let q_minus_inv = &q - &ScalarRat::qpow(-2);
    FoElem::from_terms([
        (FoMonomial::new(1, 1, 1), -(&ScalarRat::qpow(1) * &q_minus_inv)),
        (FoMonomial::new(2, 0, 0), q.clone()),
        (FoMonomial::new(0, 2, 0), ScalarRat::qpow(-2)),
        (FoMonomial::new(0, 0, 2), q),
    ])
}

/// The Casimir element rebuilt from the `G_k`:
/// `C = q^(5/2) (q^2 - 1)^-2 (-G1 G2 G3 + q^(1/2) G1^2 + q^(-3/2) G2^2 + q^(1/2) G3^2)`.
pub fn casimir_from_g() -> TorusElem {
    let g: Vec<TorusElem> = (1..=3).map(|k| gen_g(k).expect("index in range")).collect();
    let triple = g[0].mul(&g[1]).mul(&g[2]);
    let mut inner = -&triple;
    inner = TorusElem::add_scale(&ScalarRat::qpow(1), &g[0].mul(&g[0]), &inner);
    inner = TorusElem::add_scale(&ScalarRat::qpow(-3), &g[1].mul(&g[1]), &inner);
    inner = TorusElem::add_scale(&ScalarRat::qpow(1), &g[2].mul(&g[2]), &inner);
    let q2_minus_1 = &ScalarRat::qpow(4) - &ScalarRat::one();
    let scale = &ScalarRat::qpow(5) * &q2_minus_1.pow(-2).expect("nonzero");
    inner.scale(&scale)
}

/// The Casimir element of `U_q'(so_3)` inside `A_q`.
pub fn casimir() -> TorusElem {
    static C: OnceLock<TorusElem> = OnceLock::new();
    C.get_or_init(|| {
        let c = embed(&casimir_fo());
        assert_eq!(c, casimir_from_g(), "Casimir constructions disagree");
        c
    })
    .clone()
}

/// `C^n`, computed along the chain `C, C^2, ...` and memoized process-wide.
pub fn casimir_power(n: u32) -> TorusElem {
    static POWERS: Mutex<Vec<TorusElem>> = Mutex::new(Vec::new());
    let mut powers = POWERS.lock().unwrap_or_else(|e| e.into_inner());
    if powers.is_empty() {
        powers.push(TorusElem::one());
    }
    while powers.len() <= n as usize {
        let next = powers.last().unwrap().mul(&casimir());
        powers.push(next);
    }
    powers[n as usize].clone()
}

/// `sum_j coeffs[j] C^j`.
pub fn poly_in_casimir(coeffs: &[ScalarRat]) -> TorusElem {
    let mut out = TorusElem::zero();
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = TorusElem::add_scale(c, &casimir_power(j as u32), &out);
        }
    }
    out
}

/// The diagonal monomial `z3^2 z2^2 z1^2` that carries the top-degree part of `C`.
pub const CASIMIR_TOP: Monomial = Monomial::new(2, 2, 2);

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[u8]) -> FoWord {
        FoWord::new(letters.to_vec())
    }

    fn qh(k: i64) -> ScalarRat {
        ScalarRat::qpow(k)
    }

    #[test]
    fn rewrite_i2_i1() {
        let nf = fo_normalize([word(&[2, 1])], Strategy::Leftmost);
        let expected = FoElem::from_terms([
            (FoMonomial::new(1, 1, 0), ScalarRat::q()),
            (FoMonomial::new(0, 0, 1), -qh(1)),
        ]);
        assert_eq!(nf, expected);
        let via_mul = FoElem::generator(2).unwrap().mul(&FoElem::generator(1).unwrap());
        assert_eq!(via_mul, expected);
    }

    #[test]
    fn normal_words_are_fixed() {
        let nf = fo_normalize([word(&[1, 2])], Strategy::Rightmost);
        assert_eq!(nf, FoElem::monomial(FoMonomial::new(1, 1, 0)));
    }

    #[test]
    fn strategies_agree_on_i3_i2_i1() {
        let a = fo_normalize([word(&[3, 2, 1])], Strategy::Leftmost);
        let b = fo_normalize([word(&[3, 2, 1])], Strategy::Rightmost);
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }

    #[test]
    fn unity_is_neutral() {
        let x = FoElem::from_terms([
            (FoMonomial::new(0, 2, 1), qh(3)),
            (FoMonomial::new(1, 0, 0), ScalarRat::from_int(2)),
        ]);
        assert_eq!(FoElem::one().mul(&x), x);
        assert_eq!(x.mul(&FoElem::one()), x);
    }

    #[test]
    fn g_normal_forms() {
        let g1 = TorusElem::from_terms([
            (Monomial::new(-1, 0, -1), qh(-1)),
            (Monomial::new(-1, 0, 1), qh(1)),
            (Monomial::new(1, 0, 1), qh(-1)),
        ]);
        assert_eq!(gen_g(1).unwrap(), g1);
        // Reordering z2^-1 z3 = q^-1 z3 z2^-1 puts the middle term on (1,-1,0).
        let g2 = TorusElem::from_terms([
            (Monomial::new(-1, -1, 0), qh(1)),
            (Monomial::new(1, -1, 0), qh(-1)),
            (Monomial::new(1, 1, 0), qh(1)),
        ]);
        assert_eq!(gen_g(2).unwrap(), g2);
        let g3 = TorusElem::from_terms([
            (Monomial::new(0, -1, -1), qh(1)),
            (Monomial::new(0, 1, -1), qh(-1)),
            (Monomial::new(0, 1, 1), qh(1)),
        ]);
        assert_eq!(gen_g(3).unwrap(), g3);
        assert_eq!(gen_g(4), Err(Error::IndexOutOfRange(4)));
        assert_eq!(gen_i(0), Err(Error::IndexOutOfRange(0)));
    }

    #[test]
    fn phi_cycles_the_g_elements() {
        let g = |k| gen_g(k).unwrap();
        assert_eq!(g(1).phi(), g(3));
        assert_eq!(g(3).phi(), g(2));
        assert_eq!(g(2).phi(), g(1));
    }

    #[test]
    fn g1_g2_head_term() {
        let p = gen_g(1).unwrap().mul(&gen_g(2).unwrap());
        assert!(p.component(Monomial::new(2, 1, 1)).is_one());
    }

    #[test]
    fn gen_i_support_and_projection() {
        let i1 = gen_i(1).unwrap();
        let support: Vec<Monomial> = i1.support().collect();
        assert_eq!(
            support,
            vec![Monomial::new(-1, 0, -1), Monomial::new(-1, 0, 1), Monomial::new(1, 0, 1)]
        );
        for k in 1..=3 {
            assert!(gen_i(k).unwrap().pi_project().is_zero());
        }
    }

    #[test]
    fn first_relation_in_torus() {
        let i = |k| gen_i(k).unwrap();
        let lhs = TorusElem::add_scale(&qh(1), &i(1).mul(&i(2)), &i(2).mul(&i(1)).scale(&-qh(-1)));
        assert_eq!(lhs, i(3));
    }

    #[test]
    fn second_relation_embeds_to_zero() {
        let i = |k| FoElem::generator(k).unwrap();
        let residual = FoElem::add_scale(
            &qh(1),
            &i(2).mul(&i(3)),
            &FoElem::add_scale(&-qh(-1), &i(3).mul(&i(2)), &i(1).scale(&ScalarRat::from_int(-1))),
        );
        assert!(residual.is_zero());
        assert!(embed(&residual).is_zero());
    }

    #[test]
    fn embed_basics() {
        assert_eq!(embed(&FoElem::one()), TorusElem::one());
        assert_eq!(embed(&FoElem::generator(1).unwrap()), gen_i(1).unwrap());
    }

    #[test]
    fn casimir_top_component() {
        let c = casimir();
        let q2_minus_1 = &ScalarRat::qpow(4) - &ScalarRat::one();
        let expected = -(&ScalarRat::qpow(8) * &q2_minus_1.pow(-2).unwrap());
        assert_eq!(c.component(CASIMIR_TOP), expected);
        let degrees: Vec<i64> = c.lambda_decompose().into_keys().collect();
        assert!(degrees.iter().all(|d| [-6, -4, -2, 0, 2, 4, 6].contains(d)));
        assert_eq!(casimir_from_g(), c);
    }

    #[test]
    fn casimir_is_central_on_generators() {
        let c = casimir();
        for k in 1..=3 {
            assert!(c.bracket(&gen_i(k).unwrap()).is_zero(), "[C, I{k}] != 0");
        }
    }

    #[test]
    fn casimir_polynomials() {
        assert_eq!(poly_in_casimir(&[ScalarRat::one()]), TorusElem::one());
        assert_eq!(poly_in_casimir(&[ScalarRat::zero(), ScalarRat::one()]), casimir());
    }
}
