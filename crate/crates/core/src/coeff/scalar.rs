use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// An element of the rational function field `Q(s)`, where `s = q^(1/2)`.
///
/// Stored in canonical form: `num` and `den` are coprime in `Q[s]`, their
/// coefficients share no common integer factor, and `den` has a positive
/// leading coefficient. Zero is `0/1`. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarRat {
    num: IntPoly,
    den: IntPoly,
}

impl ScalarRat {
    pub fn zero() -> Self {
        ScalarRat {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    /// Any integer polynomial is already canonical over denominator 1.
    pub fn from_poly(num: IntPoly) -> Self {
        ScalarRat {
            num,
            den: IntPoly::one(),
        }
    }

    /// `p / r` as a rational number.
    pub fn from_ratio(p: i64, r: i64) -> Result<Self> {
        Self::from_int(p).div(&Self::from_int(r))
    }

    /// The half-power `q^(k/2) = s^k`.
    pub fn qpow(k: i64) -> Self {
        let mag = k.unsigned_abs() as usize;
        let mono = IntPoly::monomial(BigInt::one(), mag);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            ScalarRat {
                num: IntPoly::one(),
                den: mono,
            }
        }
    }

    /// The deformation parameter `q = s^2`.
    pub fn q() -> Self {
        Self::qpow(2)
    }

    pub fn s() -> Self {
        Self::qpow(1)
    }

    /// `1 - q^k`, the scalar inverted throughout the membership certificates.
    pub fn one_minus_q_pow(k: i64) -> Self {
        &Self::one() - &Self::qpow(2 * k)
    }

    /// Canonicalizes an arbitrary fraction.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If `self = c * s^k` with integer `c`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        let (c, dn) = self.num.as_monomial()?;
        let (dc, dd) = self.den.as_monomial()?;
        dc.is_one().then(|| (c.clone(), dn as i64 - dd as i64))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return ScalarRat { num, den };
        }
        let g = IntPoly::gcd_primitive(&num, &den);
        if g.is_one() {
            Self::fix_content(num, den)
        } else {
            let num = num.div_exact(&g).expect("gcd divides numerator");
            let den = den.div_exact(&g).expect("gcd divides denominator");
            Self::fix_content(num, den)
        }
    }

    /// Normalizes integer content and sign of an already coprime pair.
    fn fix_content(mut num: IntPoly, mut den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = den.content().gcd(&num.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        ScalarRat { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
        Ok(ScalarRat {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Multiplies by `s^k`; cheaper than a general product.
    pub fn mul_qpow(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mag = k.unsigned_abs() as usize;
        let (top, bottom) = if k > 0 {
            (&self.num, &self.den)
        } else {
            (&self.den, &self.num)
        };
        let cancel = bottom.low_degree().min(mag);
        let top = top.shift_up(mag - cancel);
        let bottom = bottom.shift_down(cancel);
        if k > 0 {
            ScalarRat {
                num: top,
                den: bottom,
            }
        } else {
            Self::fix_content(bottom, top)
        }
    }

    /// Textual coefficient format: `(num)/(den)`, both in descending powers of `s`.
    pub fn to_canonical_string(&self) -> String {
        format!("({})/({})", self.num, self.den)
    }

    /// Human-oriented rendering in powers of `q`, e.g. `-q^(1/2)` or `3*q^-2`.
    /// Falls back to the canonical `(num)/(den)` form when `self` is not `c * s^k`.
    pub fn to_pretty_string(&self) -> String {
        let Some((c, k)) = self.as_monomial() else {
            if self.is_zero() {
                return "0".to_string();
            }
            return self.to_canonical_string();
        };
        let qpart = match k {
            0 => String::new(),
            2 => "q".to_string(),
            k if k % 2 == 0 => format!("q^{}", k / 2),
            k => format!("q^({k}/2)"),
        };
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "" };
        match (mag.is_one(), qpart.is_empty()) {
            (_, true) => format!("{sign}{mag}"),
            (true, false) => format!("{sign}{qpart}"),
            (false, false) => format!("{sign}{mag}*{qpart}"),
        }
    }
}

impl Default for ScalarRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &ScalarRat {
    type Output = ScalarRat;
    fn add(self, rhs: &ScalarRat) -> ScalarRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return ScalarRat::reduce(num, self.den.clone());
        }
        // Only factors of gcd(b, d) can survive in gcd(ad + cb, bd).
        let g = IntPoly::gcd_primitive(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return ScalarRat::fix_content(num, den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return ScalarRat::zero();
        }
        let g2 = IntPoly::gcd_primitive(&t, &g);
        let (t, g) = if g2.is_one() {
            (t, g)
        } else {
            (
                t.div_exact(&g2).expect("gcd divides"),
                g.div_exact(&g2).expect("gcd divides"),
            )
        };
        ScalarRat::fix_content(t, &(&b1 * &d1) * &g)
    }
}

impl Sub for &ScalarRat {
    type Output = ScalarRat;
    fn sub(self, rhs: &ScalarRat) -> ScalarRat {
        self + &(-rhs)
    }
}

impl Neg for &ScalarRat {
    type Output = ScalarRat;
    fn neg(self) -> ScalarRat {
        ScalarRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ScalarRat {
    type Output = ScalarRat;
    fn neg(self) -> ScalarRat {
        ScalarRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for &ScalarRat {
    type Output = ScalarRat;
    fn mul(self, rhs: &ScalarRat) -> ScalarRat {
        if self.is_zero() || rhs.is_zero() {
            return ScalarRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarRat::from_poly(&self.num * &rhs.num);
        }
        let g1 = IntPoly::gcd_primitive(&self.num, &rhs.den);
        let g2 = IntPoly::gcd_primitive(&rhs.num, &self.den);
        let split = |p: &IntPoly, g: &IntPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &split(&self.num, &g1) * &split(&rhs.num, &g2);
        let den = &split(&self.den, &g2) * &split(&rhs.den, &g1);
        ScalarRat::fix_content(num, den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ScalarRat {
            type Output = ScalarRat;
            fn $method(self, rhs: ScalarRat) -> ScalarRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ScalarRat> for ScalarRat {
            type Output = ScalarRat;
            fn $method(self, rhs: &ScalarRat) -> ScalarRat {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ScalarRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for ScalarRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl From<i64> for ScalarRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}
