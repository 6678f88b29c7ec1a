//! JSON and text encodings of algebra elements.
//!
//! ```text
//! torus: {"terms":[{"e":[h,m,n],"c":"(num)/(den)"}, ...]}
//! fo:    {"terms":[{"e":[h,m,n],"c":"(num)/(den)"}, ...],"algebra":"fo"}
//! ```
//!
//! Terms are listed in descending lexicographic order of the exponent triple
//! and coefficients use the canonical `(num)/(den)` form, so equal elements
//! always serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::coeff::ScalarRat;
use crate::error::{Error, Result};
use crate::fo::{FoElem, FoMonomial};
use crate::torus::{Monomial, TorusElem};

#[derive(Serialize, Deserialize)]
struct TermJson<E> {
    e: [E; 3],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct TorusJson {
    terms: Vec<TermJson<i64>>,
}

#[derive(Serialize, Deserialize)]
struct FoJson {
    terms: Vec<TermJson<u32>>,
    algebra: String,
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::Domain(format!("malformed element JSON: {e}"))
}

pub fn torus_to_value(x: &TorusElem) -> serde_json::Value {
    let doc = TorusJson {
        terms: x
            .terms_desc()
            .map(|(m, c)| TermJson {
                e: [m.h, m.m, m.n],
                c: c.to_canonical_string(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn torus_to_json(x: &TorusElem) -> String {
    torus_to_value(x).to_string()
}

pub fn torus_from_json(text: &str) -> Result<TorusElem> {
    let doc: TorusJson = serde_json::from_str(text).map_err(bad_json)?;
    let mut out = TorusElem::zero();
    for t in doc.terms {
        let c: ScalarRat = t.c.parse()?;
        out.add_term(Monomial::new(t.e[0], t.e[1], t.e[2]), &c);
    }
    Ok(out)
}

pub fn fo_to_value(x: &FoElem) -> serde_json::Value {
    let doc = FoJson {
        terms: x
            .terms_desc()
            .map(|(m, c)| TermJson {
                e: [m.h, m.m, m.n],
                c: c.to_canonical_string(),
            })
            .collect(),
        algebra: "fo".to_string(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn fo_to_json(x: &FoElem) -> String {
    fo_to_value(x).to_string()
}

pub fn fo_from_json(text: &str) -> Result<FoElem> {
    let doc: FoJson = serde_json::from_str(text).map_err(bad_json)?;
    if doc.algebra != "fo" {
        return Err(Error::Domain(format!("expected algebra \"fo\", got {:?}", doc.algebra)));
    }
    let mut out = FoElem::zero();
    for t in doc.terms {
        let c: ScalarRat = t.c.parse()?;
        out.add_term(FoMonomial::new(t.e[0], t.e[1], t.e[2]), &c);
    }
    Ok(out)
}

/// Text form, `coeff*z3^h z2^m z1^n` terms joined by ` + `; parses back with
/// [`crate::expr::parse_expr`].
pub fn torus_to_text(x: &TorusElem) -> String {
    x.to_string()
}

/// Parses and evaluates the text form.
pub fn torus_from_text(text: &str) -> Result<TorusElem> {
    crate::expr::eval_expr(&crate::expr::parse_expr(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fo;

    #[test]
    fn g1_text_and_json() {
        let g1 = fo::gen_g(1).unwrap();
        assert_eq!(
            torus_to_text(&g1),
            "q^(-1/2)*z3 z1 + q^(1/2)*z3^-1 z1 + q^(-1/2)*z3^-1 z1^-1"
        );
        assert_eq!(
            torus_to_json(&g1),
            r#"{"terms":[{"e":[1,0,1],"c":"(1)/(s)"},{"e":[-1,0,1],"c":"(s)/(1)"},{"e":[-1,0,-1],"c":"(1)/(s)"}]}"#
        );
        assert_eq!(torus_from_json(&torus_to_json(&g1)).unwrap(), g1);
        assert_eq!(torus_from_text(&torus_to_text(&g1)).unwrap(), g1);
    }

    #[test]
    fn zero_forms() {
        assert_eq!(torus_to_text(&TorusElem::zero()), "0");
        assert_eq!(torus_to_json(&TorusElem::zero()), r#"{"terms":[]}"#);
        assert_eq!(fo_to_json(&FoElem::zero()), r#"{"terms":[],"algebra":"fo"}"#);
    }

    #[test]
    fn fo_round_trip() {
        let c = fo::casimir_fo();
        let text = fo_to_json(&c);
        assert!(text.ends_with(r#""algebra":"fo"}"#));
        assert_eq!(fo_from_json(&text).unwrap(), c);
        assert!(fo_from_json(r#"{"terms":[],"algebra":"torus"}"#).is_err());
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(torus_from_json("{"), Err(Error::Domain(_))));
        assert!(torus_from_json(r#"{"terms":[{"e":[0,0,0],"c":"z1"}]}"#).is_err());
    }
}
