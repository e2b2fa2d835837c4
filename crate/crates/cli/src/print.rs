//! Text, LaTeX and JSON renderings of elements.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use uqsl2_core::algebra::{Element, Generator, Monomial};
use uqsl2_core::coeff::{LaurentPoly, RatFunc};

use crate::eval::{eval_str, EvalContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

pub fn print_element(e: &Element, format: Format) -> String {
    match format {
        Format::Text => e.to_string(),
        Format::Latex => to_latex(e),
        Format::Json => to_json(e),
    }
}

fn negative_lead(c: &RatFunc) -> bool {
    c.num().len() == 1 && c.num().leading().is_some_and(|(_, x)| x < &0.into())
}

fn generator_latex(g: &Generator) -> String {
    match g {
        Generator::XPlus(k) => format!("x^{{+}}_{{{k}}}"),
        Generator::XMinus(k) => format!("x^{{-}}_{{{k}}}"),
        Generator::A(n) => format!("a_{{{n}}}"),
    }
}

fn monomial_latex(m: &Monomial) -> String {
    let mut parts: Vec<String> = m.word.iter().map(generator_latex).collect();
    match m.kexp {
        0 => {}
        1 => parts.push("K".into()),
        e => parts.push(format!("K^{{{e}}}")),
    }
    parts.join(" ")
}

pub fn to_latex(e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.terms().enumerate() {
        let negative = negative_lead(c);
        let shown = if negative { -c } else { c.clone() };
        out.push_str(match (i, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let coeff = if shown.den().is_one() && shown.num().len() > 1 {
            format!("\\left({}\\right)", shown.to_latex())
        } else {
            shown.to_latex()
        };
        match (m.is_unit(), shown.is_one()) {
            (true, _) => out.push_str(&coeff),
            (false, true) => out.push_str(&monomial_latex(m)),
            (false, false) => {
                out.push_str(&coeff);
                out.push(' ');
                out.push_str(&monomial_latex(m));
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonElement {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    coeff: JsonCoeff,
    word: Vec<JsonGen>,
    kexp: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonCoeff {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGen {
    g: String,
    k: i64,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed element JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("term {term}: {reason}")]
    Term { term: usize, reason: String },
}

pub fn to_json(e: &Element) -> String {
    let doc = JsonElement {
        terms: e
            .terms()
            .map(|(m, c)| JsonTerm {
                coeff: JsonCoeff { num: c.num().to_text(), den: c.den().to_text() },
                word: m
                    .word
                    .iter()
                    .map(|g| {
                        let name = match g {
                            Generator::XPlus(_) => "x+",
                            Generator::XMinus(_) => "x-",
                            Generator::A(_) => "a",
                        };
                        JsonGen { g: name.into(), k: g.index() }
                    })
                    .collect(),
                kexp: m.kexp,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("element JSON is always serializable")
}

fn poly_from_text(text: &str) -> Result<LaurentPoly, String> {
    let value = eval_str(text, &EvalContext::default()).map_err(|e| e.to_string())?;
    value.as_scalar().and_then(|c| c.as_poly().cloned()).ok_or_else(|| format!("`{text}` is not a Laurent polynomial"))
}

pub fn from_json(text: &str) -> Result<Element, JsonError> {
    let doc: JsonElement = serde_json::from_str(text)?;
    let mut out = Element::zero();
    for (i, t) in doc.terms.into_iter().enumerate() {
        let err = |reason: String| JsonError::Term { term: i, reason };
        let num = poly_from_text(&t.coeff.num).map_err(err)?;
        let den = poly_from_text(&t.coeff.den).map_err(err)?;
        let coeff = RatFunc::new(num, den).map_err(|e| err(e.to_string()))?;
        let word = t
            .word
            .iter()
            .map(|jg| match jg.g.as_str() {
                "x+" => Ok(Generator::XPlus(jg.k)),
                "x-" => Ok(Generator::XMinus(jg.k)),
                "a" => Generator::a(jg.k).map_err(|e| e.to_string()),
                other => Err(format!("unknown generator `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        out.add_term(Monomial::new(word, t.kexp), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use uqsl2_core::drinfeld::psi;

    #[test]
    fn renderings() {
        assert_eq!(print_element(&psi(1), Format::Text), "(q - q^-1)*a[1]*K");
        assert_eq!(print_element(&psi(1), Format::Latex), "\\left(q - q^{-1}\\right) a_{1} K");
        assert_eq!(print_element(&Element::k_pow(-1), Format::Text), "K^-1");
        assert_eq!(print_element(&Element::zero(), Format::Text), "0");
        assert_eq!(print_element(&Element::zero(), Format::Json), r#"{"terms":[]}"#);
    }

    #[test]
    fn json_shape() {
        let e = Element::x_plus(-2).scale(&RatFunc::from_ratio(-3, 2).unwrap());
        let json = to_json(&e);
        assert_eq!(json, r#"{"terms":[{"coeff":{"num":"-3","den":"2"},"word":[{"g":"x+","k":-2}],"kexp":0}]}"#);
        assert_eq!(from_json(&json).unwrap(), e);
    }

    #[test]
    fn json_errors() {
        assert!(from_json("{").is_err());
        assert!(from_json(r#"{"terms":[{"coeff":{"num":"1","den":"0"},"word":[],"kexp":0}]}"#).is_err());
        assert!(from_json(r#"{"terms":[{"coeff":{"num":"1","den":"1"},"word":[{"g":"a","k":0}],"kexp":0}]}"#).is_err());
        assert!(from_json(r#"{"terms":[{"coeff":{"num":"x+[0]","den":"1"},"word":[],"kexp":0}]}"#).is_err());
    }
}
