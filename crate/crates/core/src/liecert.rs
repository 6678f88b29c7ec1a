//! Lie polynomials in the torus generators and constructive membership
//! certificates for the Lie subalgebra `L_q`.
//!
//! A certificate for a basis monomial `z3^h z2^m z1^n` is a [`LieExpr`] built
//! only from the six generators `z_k^(+-1)`, brackets, sums and nonzero scalar
//! multiples, whose evaluation is exactly that monomial with coefficient 1.

use std::fmt;

use crate::coeff::ScalarRat;
use crate::error::{Error, Result};
use crate::torus::{Monomial, TorusElem};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Axis {
    Z1,
    Z2,
    Z3,
}

impl Axis {
    pub fn from_index(k: u8) -> Result<Axis> {
        match k {
            1 => Ok(Axis::Z1),
            2 => Ok(Axis::Z2),
            3 => Ok(Axis::Z3),
            _ => Err(Error::IndexOutOfRange(k as usize)),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Axis::Z1 => 1,
            Axis::Z2 => 2,
            Axis::Z3 => 3,
        }
    }

    /// Image under `z1 -> z2 -> z3 -> z1`.
    pub fn rotate(self) -> Axis {
        match self {
            Axis::Z1 => Axis::Z2,
            Axis::Z2 => Axis::Z3,
            Axis::Z3 => Axis::Z1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LieExpr {
    Leaf { axis: Axis, inverse: bool },
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Scale(ScalarRat, Box<LieExpr>),
    Sum(Vec<LieExpr>),
}

impl LieExpr {
    pub fn leaf(axis: Axis, inverse: bool) -> Self {
        LieExpr::Leaf { axis, inverse }
    }

    pub fn bracket(left: LieExpr, right: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(left), Box::new(right))
    }

    /// Panics on a zero coefficient: a scaled certificate must stay invertible.
    pub fn scale(c: ScalarRat, body: LieExpr) -> Self {
        assert!(!c.is_zero(), "Scale coefficient must be nonzero");
        LieExpr::Scale(c, Box::new(body))
    }

    /// `(ad x)^times (body)` as a right-nested bracket chain `[x,[x,...[x,body]]]`.
    pub fn ad_power(x: &LieExpr, times: u32, body: LieExpr) -> Self {
        (0..times).fold(body, |acc, _| LieExpr::bracket(x.clone(), acc))
    }

    /// Evaluates the expression in `A_q`.
    pub fn eval(&self) -> TorusElem {
        match self {
            LieExpr::Leaf { axis, inverse } => TorusElem::generator(axis.index(), *inverse),
            LieExpr::Bracket(a, b) => a.eval().bracket(&b.eval()),
            LieExpr::Scale(c, body) => body.eval().scale(c),
            LieExpr::Sum(parts) => parts
                .iter()
                .fold(TorusElem::zero(), |acc, p| &acc + &p.eval()),
        }
    }

    /// Relabels leaves by `z1 -> z2 -> z3 -> z1`, so that
    /// `lie_phi(e).eval() == e.eval().phi()`.
    pub fn phi(&self) -> LieExpr {
        match self {
            LieExpr::Leaf { axis, inverse } => LieExpr::leaf(axis.rotate(), *inverse),
            LieExpr::Bracket(a, b) => LieExpr::bracket(a.phi(), b.phi()),
            LieExpr::Scale(c, body) => LieExpr::Scale(c.clone(), Box::new(body.phi())),
            LieExpr::Sum(parts) => LieExpr::Sum(parts.iter().map(LieExpr::phi).collect()),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            LieExpr::Leaf { .. } => 1,
            LieExpr::Bracket(a, b) => 1 + a.size() + b.size(),
            LieExpr::Scale(_, body) => 1 + body.size(),
            LieExpr::Sum(parts) => 1 + parts.iter().map(LieExpr::size).sum::<usize>(),
        }
    }

    /// Every scalar used in a `Scale` node, in pre-order.
    pub fn scalars(&self) -> Vec<&ScalarRat> {
        let mut out = Vec::new();
        self.collect_scalars(&mut out);
        out
    }

    fn collect_scalars<'a>(&'a self, out: &mut Vec<&'a ScalarRat>) {
        match self {
            LieExpr::Leaf { .. } => {}
            LieExpr::Bracket(a, b) => {
                a.collect_scalars(out);
                b.collect_scalars(out);
            }
            LieExpr::Scale(c, body) => {
                out.push(c);
                body.collect_scalars(out);
            }
            LieExpr::Sum(parts) => parts.iter().for_each(|p| p.collect_scalars(out)),
        }
    }
}

pub fn lie_eval(e: &LieExpr) -> TorusElem {
    e.eval()
}

pub fn lie_phi(e: &LieExpr) -> LieExpr {
    e.phi()
}

/// Text form: `[a,b]` brackets, `c * expr` scaling, `+` sums and leaves
/// `z1 z2 z3 z1^-1 z2^-1 z3^-1`. The output parses back with the expression parser.
impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Leaf { axis, inverse } => {
                write!(f, "z{}", axis.index())?;
                if *inverse {
                    f.write_str("^-1")?;
                }
                Ok(())
            }
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            LieExpr::Scale(c, body) => {
                write!(f, "{} * ", c.to_pretty_string())?;
                match **body {
                    LieExpr::Scale(..) | LieExpr::Sum(_) => write!(f, "({body})"),
                    _ => write!(f, "{body}"),
                }
            }
            LieExpr::Sum(parts) => {
                if parts.is_empty() {
                    return f.write_str("0");
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    match p {
                        LieExpr::Sum(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn z(axis: Axis) -> LieExpr {
    LieExpr::leaf(axis, false)
}

fn z_inv(axis: Axis) -> LieExpr {
    LieExpr::leaf(axis, true)
}

fn inv(c: &ScalarRat) -> ScalarRat {
    c.inv().expect("1 - q^k is nonzero for k != 0")
}

/// `(1 - q)^e` for any integer `e`.
fn one_minus_q_to(e: i64) -> ScalarRat {
    ScalarRat::one_minus_q_pow(1).pow(e).expect("1 - q is nonzero")
}

/// `z3 z2^2 z1 = (1 - q)^-3 [z3,[z2,[z2,z1]]]`.
pub fn cert_comm0() -> LieExpr {
    let chain = LieExpr::bracket(
        z(Axis::Z3),
        LieExpr::bracket(z(Axis::Z2), LieExpr::bracket(z(Axis::Z2), z(Axis::Z1))),
    );
    LieExpr::scale(one_minus_q_to(-3), chain)
}

/// The core `[[z3^-1, z2^-1], z2^-1] = (1 - q)^2 z3^-1 z2^-2`.
pub fn double_bracket_core() -> LieExpr {
    LieExpr::bracket(
        LieExpr::bracket(z_inv(Axis::Z3), z_inv(Axis::Z2)),
        z_inv(Axis::Z2),
    )
}

/// Certificate for `z3^-1 z2^-2 z1^t`:
///
/// ```text
/// t >= 0:  q^t (1-q)^(-t-2)      (ad z1)^t    ([[z3^-1,z2^-1],z2^-1])
/// t <  0:  (-1)^t (1-q)^(t-2)    (ad z1^-1)^-t ([[z3^-1,z2^-1],z2^-1])
/// ```
pub fn cert_comm_t(t: i64) -> LieExpr {
    let times = u32::try_from(t.unsigned_abs()).expect("exponent fits in u32");
    if t >= 0 {
        let c = &ScalarRat::qpow(2 * t) * &one_minus_q_to(-t - 2);
        LieExpr::scale(c, LieExpr::ad_power(&z(Axis::Z1), times, double_bracket_core()))
    } else {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let c = &ScalarRat::from_int(sign) * &one_minus_q_to(t - 2);
        LieExpr::scale(c, LieExpr::ad_power(&z_inv(Axis::Z1), times, double_bracket_core()))
    }
}

/// Certificate for a single generator power `z_axis^h`, `h != 0`.
///
/// For `z1^h` this is `q^3 (1-q^h)^-1 [z3 z2^2 z1, z3^-1 z2^-2 z1^(h-1)]`; the
/// `z2` and `z3` cases are the images of that tree under one and two
/// applications of the cyclic automorphism.
pub fn cert_single_power(axis: Axis, h: i64) -> Result<LieExpr> {
    if h == 0 {
        return Err(Error::DiagonalNotInLq(Monomial::UNIT));
    }
    if h.abs() == 1 {
        return Ok(LieExpr::leaf(axis, h < 0));
    }
    let c = &ScalarRat::qpow(6) * &inv(&ScalarRat::one_minus_q_pow(h));
    let tree = LieExpr::scale(c, LieExpr::bracket(cert_comm0(), cert_comm_t(h - 1)));
    Ok(match axis {
        Axis::Z1 => tree,
        Axis::Z2 => tree.phi(),
        Axis::Z3 => tree.phi().phi(),
    })
}

/// The generator pairs whose two-factor monomials get their own certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pair {
    /// `z3^a z2^b`
    Z3Z2,
    /// `z3^a z1^b`
    Z3Z1,
    /// `z2^a z1^b`
    Z2Z1,
}

impl Pair {
    pub fn from_indices(first: u8, second: u8) -> Result<Pair> {
        match (first, second) {
            (3, 2) => Ok(Pair::Z3Z2),
            (3, 1) => Ok(Pair::Z3Z1),
            (2, 1) => Ok(Pair::Z2Z1),
            _ => Err(Error::InvalidPair(first, second)),
        }
    }

    fn axes(self) -> (Axis, Axis) {
        match self {
            Pair::Z3Z2 => (Axis::Z3, Axis::Z2),
            Pair::Z3Z1 => (Axis::Z3, Axis::Z1),
            Pair::Z2Z1 => (Axis::Z2, Axis::Z1),
        }
    }

    fn monomial(self, a: i64, b: i64) -> Monomial {
        match self {
            Pair::Z3Z2 => Monomial::new(a, b, 0),
            Pair::Z3Z1 => Monomial::new(a, 0, b),
            Pair::Z2Z1 => Monomial::new(0, a, b),
        }
    }
}

/// Certificate for the two-generator monomial `z_first^a z_second^b`, `a, b != 0`:
/// `(1 - q^E)^-1 [z_first^a, z_second^b]` with `E = ab`, or `E = -ab` for `(z3, z1)`.
pub fn cert_pair(pair: Pair, a: i64, b: i64) -> Result<LieExpr> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!(
            "pair certificate needs nonzero exponents, got {}",
            pair.monomial(a, b)
        )));
    }
    let (first, second) = pair.axes();
    let e = match pair {
        Pair::Z3Z1 => -a * b,
        Pair::Z3Z2 | Pair::Z2Z1 => a * b,
    };
    Ok(LieExpr::scale(
        inv(&ScalarRat::one_minus_q_pow(e)),
        LieExpr::bracket(cert_single_power(first, a)?, cert_single_power(second, b)?),
    ))
}

/// Certificate for `z3^h z2^m z1^n` whenever the exponents are not all equal.
pub fn cert_monomial(h: i64, m: i64, n: i64) -> Result<LieExpr> {
    let target = Monomial::new(h, m, n);
    if target.is_diagonal() {
        return Err(Error::DiagonalNotInLq(target));
    }
    match (h != 0, m != 0, n != 0) {
        (true, false, false) => cert_single_power(Axis::Z3, h),
        (false, true, false) => cert_single_power(Axis::Z2, m),
        (false, false, true) => cert_single_power(Axis::Z1, n),
        (true, true, false) => cert_pair(Pair::Z3Z2, h, m),
        (true, false, true) => cert_pair(Pair::Z3Z1, h, n),
        (false, true, true) => cert_pair(Pair::Z2Z1, m, n),
        (true, true, true) if h != m => {
            // [z3^h z2^m, z1^n] = (1 - q^(n(m-h))) z3^h z2^m z1^n
            let c = inv(&ScalarRat::one_minus_q_pow(n * (m - h)));
            Ok(LieExpr::scale(
                c,
                LieExpr::bracket(cert_pair(Pair::Z3Z2, h, m)?, cert_single_power(Axis::Z1, n)?),
            ))
        }
        (true, true, true) => {
            // h == m != n: [z3^h, z2^h z1^n] = (1 - q^(h(h-n))) z3^h z2^h z1^n
            let c = inv(&ScalarRat::one_minus_q_pow(h * (h - n)));
            Ok(LieExpr::scale(
                c,
                LieExpr::bracket(cert_single_power(Axis::Z3, h)?, cert_pair(Pair::Z2Z1, h, n)?),
            ))
        }
        (false, false, false) => unreachable!("the unit monomial is diagonal"),
    }
}
