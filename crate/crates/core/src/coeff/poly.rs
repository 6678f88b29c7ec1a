//! Dense univariate polynomials over the integers, in the variable `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `s` with arbitrary-precision integer coefficients.
///
/// `coeffs[d]` is the coefficient of `s^d`. The top coefficient is never
/// zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * s^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros at the top.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Exponent of the largest power of `s` dividing `self` (0 for the zero polynomial).
    pub fn low_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Returns the single `(coefficient, degree)` pair if `self` is `c * s^d`.
    pub fn as_monomial(&self) -> Option<(&BigInt, usize)> {
        let low = self.low_degree();
        let top = self.degree()?;
        (low == top).then(|| (&self.coeffs[top], top))
    }

    /// Multiplies by `s^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `s^k`; the caller guarantees `k <= low_degree()`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || k <= self.low_degree());
        if self.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    /// `self += c * other * s^shift`, accumulating in place.
    pub fn add_scaled_shifted(&mut self, other: &IntPoly, c: &BigInt, shift: usize) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            if !a.is_zero() {
                self.coeffs[i + shift] += a * c;
            }
        }
        self.trim();
    }

    /// `self += other * s^shift`.
    pub fn add_shifted(&mut self, other: &IntPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += a;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, or `None` if
    /// `divisor` does not divide `self` in `Z[s]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let dd = divisor.degree().unwrap();
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + i] -= &q * b;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `divisor`: `lc(divisor)^k * self mod divisor`.
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lc = divisor.leading();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let top = rem.leading();
            // rem <- lc * rem - top * s^(dr-dd) * divisor
            let mut next = rem.scale(&lc);
            next.add_scaled_shifted(divisor, &(-top), dr - dd);
            rem = next;
        }
        rem
    }

    /// Greatest common divisor of the primitive parts, normalized to a
    /// positive leading coefficient. Contents are ignored.
    pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        // Powers of s are the common case; split them off before the PRS.
        let la = a.low_degree();
        let lb = b.low_degree();
        let shift = la.min(lb);
        let mut x = a.shift_down(la).primitive_part();
        let mut y = b.shift_down(lb).primitive_part();
        if x.degree() == Some(0) || y.degree() == Some(0) {
            return IntPoly::monomial(BigInt::one(), shift);
        }
        if x == y {
            return x.shift_up(shift);
        }
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = x.pseudo_rem(&y);
            if r.is_zero() {
                return y.shift_up(shift);
            }
            if r.degree() == Some(0) {
                return IntPoly::monomial(BigInt::one(), shift);
            }
            x = y;
            y = r.primitive_part();
        }
    }

    /// Full gcd in `Z[s]` (content included), positive leading coefficient.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let c = a.content().gcd(&b.content());
        let p = Self::gcd_primitive(a, b);
        if c.is_zero() {
            p
        } else {
            p.scale(&c)
        }
    }

    pub fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a == b {
            return a.clone();
        }
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        let g = Self::gcd(a, b);
        let prod = if g.is_one() {
            a * b
        } else {
            &a.div_exact(&g).expect("gcd divides") * b
        };
        if prod.leading().is_negative() {
            -prod
        } else {
            prod
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &-BigInt::one(), 0);
        out
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Descending-degree rendering, e.g. `-s^6+3*s^4-3*s^2+1`; zero renders as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("s")?,
                (1, false) => write!(f, "{mag}*s")?,
                (_, true) => write!(f, "s^{d}")?,
                (_, false) => write!(f, "{mag}*s^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, 0, -3, 0, 3, 0, -1]).to_string(), "-s^6+3*s^4-3*s^2+1");
        assert_eq!(p(&[0, 1]).to_string(), "s");
        assert_eq!(p(&[-2, -1]).to_string(), "-s-2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn zero_is_empty() {
        assert!(p(&[0, 0, 0]).is_zero());
        assert!(p(&[0, 0, 0]).coeffs().is_empty());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (s^2-1)(s+2) and (s^2-1)(s-3)
        let a = &p(&[-1, 0, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 0, 1]) * &p(&[-3, 1]);
        assert_eq!(IntPoly::gcd_primitive(&a, &b), p(&[-1, 0, 1]));
        let a = a.shift_up(3).scale(&BigInt::from(6));
        let b = b.shift_up(1).scale(&BigInt::from(-4));
        assert_eq!(IntPoly::gcd(&a, &b), p(&[0, -2, 0, 2]));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[-1, 0, 1]) * &p(&[1, 3]);
        assert_eq!(a.div_exact(&p(&[1, 3])), Some(p(&[-1, 0, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn lcm_is_positive() {
        let l = IntPoly::lcm(&p(&[1, -1]), &p(&[-1, 0, 1]));
        assert_eq!(l, p(&[-1, 0, 1]));
        assert_eq!(IntPoly::lcm(&p(&[2]), &p(&[3])), p(&[6]));
    }
}
