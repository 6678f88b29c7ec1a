//! Exact computations in the quantum torus `A_q`, the Fairlie–Odesskii algebra
//! `U_q'(so_3)` embedded in it, and the Lie subalgebra `L_q` generated by
//! `z1^(+-1), z2^(+-1), z3^(+-1)`.
//!
//! All scalars live in `Q(s)` with `s = q^(1/2)`, which models a `q` that is not
//! a root of unity. Every identity is checked exactly, never numerically.
//!
//! ```
//! use qtorus::{fo, TorusElem};
//!
//! let c = fo::casimir();
//! let (inside, witness) = c.in_lq();
//! assert!(!inside);
//! assert_eq!(witness.component(fo::CASIMIR_TOP).to_pretty_string(), "(-s^8)/(s^8-2*s^4+1)");
//! # let _ = TorusElem::zero();
//! ```

pub mod coeff;
pub mod error;
pub mod expr;
pub mod fo;
pub mod liecert;
pub mod random;
pub mod serialize;
pub mod torus;
pub mod verify;

pub use coeff::{IntPoly, ScalarRat};
pub use error::{Error, ParseError, Result};
pub use expr::{eval_expr, parse_expr, ExprAst};
pub use fo::{FoElem, FoMonomial, FoWord, Strategy};
pub use liecert::{cert_monomial, Axis, LieExpr, Pair};
pub use torus::{Monomial, TorusElem};
pub use verify::{SuiteConfig, VerifyReport};
