//! Evaluation of parsed expressions to algebra elements.
//!
//! Products are plain concatenation with `K` passed to the right, so an
//! expression denotes exactly the element it spells out. Call `nf` (or the
//! `nf` command) to normal-order.

use num_bigint::BigInt;
use thiserror::Error;
use uqsl2_core::algebra::{
    commutator, deformed_commutator, el_mul, normal_form, omega, Element, Generator, Monomial, RelationMode,
};
use uqsl2_core::coeff::RatFunc;
use uqsl2_core::drinfeld::{central_c, family_e, phi, psi, FamilyParams, Sign};

use crate::parse::{parse, Ast, GenKind, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a[0] is not a generator")]
    ZeroHeisenbergIndex,
    #[error("{name} takes {expected} argument(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("argument {position} of {name} must be an integer")]
    NotAnInteger { name: String, position: usize },
    #[error("argument {position} of {name} must be `+` or `-`")]
    NotASign { name: String, position: usize },
    #[error("a sign is only allowed as an argument of E or c")]
    StraySign,
    #[error("negative power of a non-monomial element")]
    NonInvertible,
    #[error("division by a non-scalar or zero element")]
    BadDivisor,
    #[error("{0}")]
    Domain(String),
}

/// Settings shared by every evaluation.
#[derive(Clone, Copy, Debug, Default)]
pub struct EvalContext {
    /// Relation mode used by `nf`, `comm` and `dcomm`.
    pub mode: RelationMode,
}

pub fn eval_str(text: &str, ctx: &EvalContext) -> Result<Element, EvalError> {
    eval_ast(&parse(text)?, ctx)
}

pub fn eval_ast(ast: &Ast, ctx: &EvalContext) -> Result<Element, EvalError> {
    Ok(match ast {
        Ast::Sum(terms) => {
            let mut acc = Element::zero();
            for (negative, t) in terms {
                let v = eval_ast(t, ctx)?;
                acc = if *negative { &acc - &v } else { &acc + &v };
            }
            acc
        }
        Ast::Product(factors) => {
            let mut acc = Element::one();
            for f in factors {
                acc = el_mul(&acc, &eval_ast(f, ctx)?);
            }
            acc
        }
        Ast::Quotient(a, b) => {
            let divisor = eval_ast(b, ctx)?.as_scalar().and_then(|c| c.inv().ok()).ok_or(EvalError::BadDivisor)?;
            eval_ast(a, ctx)?.scale(&divisor)
        }
        Ast::Power(base, e) => power(&eval_ast(base, ctx)?, *e)?,
        Ast::GenAtom(kind, k) => Element::generator(match kind {
            GenKind::XPlus => Generator::XPlus(*k),
            GenKind::XMinus => Generator::XMinus(*k),
            GenKind::A => Generator::a(*k).map_err(|_| EvalError::ZeroHeisenbergIndex)?,
        }),
        Ast::KAtom => Element::k_pow(1),
        Ast::GammaAtom => Element::scalar(RatFunc::gamma_pow(1)),
        Ast::UAtom => Element::scalar(RatFunc::u_pow(1)),
        Ast::QAtom => Element::scalar(RatFunc::q_pow(1)),
        Ast::RationalLiteral(n) => Element::scalar(RatFunc::from_int(n.clone())),
        Ast::SignArg(_) => return Err(EvalError::StraySign),
        Ast::Call(name, args) => call(name, args, ctx)?,
    })
}

fn power(base: &Element, e: i64) -> Result<Element, EvalError> {
    if e < 0 {
        let mut terms = base.terms();
        let (m, c) = match (terms.next(), terms.next()) {
            (Some(t), None) if t.0.word.is_empty() => t,
            _ => return Err(EvalError::NonInvertible),
        };
        let inv = c.inv().map_err(|_| EvalError::NonInvertible)?;
        return power(&Element::term(Monomial::k_pow(-m.kexp), inv), -e);
    }
    let mut acc = Element::one();
    for _ in 0..e {
        acc = el_mul(&acc, base);
    }
    Ok(acc)
}

fn arity(name: &str, args: &[Ast], expected: usize) -> Result<(), EvalError> {
    if args.len() == expected {
        Ok(())
    } else {
        Err(EvalError::Arity { name: name.to_string(), expected, got: args.len() })
    }
}

fn int_arg(name: &str, args: &[Ast], position: usize, ctx: &EvalContext) -> Result<i64, EvalError> {
    let err = || EvalError::NotAnInteger { name: name.to_string(), position: position + 1 };
    let value = eval_ast(&args[position], ctx).map_err(|e| match e {
        EvalError::StraySign => err(),
        other => other,
    })?;
    let n: BigInt = value.as_scalar().and_then(|c| c.as_poly().and_then(|p| p.as_constant())).ok_or_else(err)?;
    i64::try_from(n).map_err(|_| err())
}

fn sign_arg(name: &str, args: &[Ast], position: usize) -> Result<Sign, EvalError> {
    match &args[position] {
        Ast::SignArg(s) => Ok(*s),
        _ => Err(EvalError::NotASign { name: name.to_string(), position: position + 1 }),
    }
}

fn call(name: &str, args: &[Ast], ctx: &EvalContext) -> Result<Element, EvalError> {
    let el = |i: usize| eval_ast(&args[i], ctx);
    let int = |i: usize| int_arg(name, args, i, ctx);
    Ok(match name {
        "nf" => {
            arity(name, args, 1)?;
            normal_form(&el(0)?, ctx.mode)
        }
        "omega" => {
            arity(name, args, 1)?;
            omega(&el(0)?)
        }
        "comm" => {
            arity(name, args, 2)?;
            commutator(&el(0)?, &el(1)?, ctx.mode)
        }
        "dcomm" => {
            arity(name, args, 3)?;
            deformed_commutator(&el(0)?, &el(1)?, int(2)?, ctx.mode)
        }
        "psi" => {
            arity(name, args, 1)?;
            psi(int(0)?)
        }
        "phi" => {
            arity(name, args, 1)?;
            phi(int(0)?)
        }
        "E" => {
            arity(name, args, 4)?;
            let sign = sign_arg(name, args, 0)?;
            family_e(FamilyParams::new(sign, int(1)?, int(2)?, int(3)?))
        }
        "c" => {
            arity(name, args, 3)?;
            let sign = sign_arg(name, args, 0)?;
            central_c(int(1)?, int(2)?, sign).map_err(|e| EvalError::Domain(e.to_string()))?
        }
        other => unreachable!("parser only accepts built-in names, got {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(text: &str) -> Result<Element, EvalError> {
        eval_str(text, &EvalContext::default())
    }

    #[test]
    fn builtins() {
        assert_eq!(ev("psi(0)").unwrap(), Element::k_pow(1));
        assert_eq!(ev("phi(0)").unwrap(), Element::k_pow(-1));
        assert!(ev("nf(q^2*x+[0]*K - K*x+[0])").unwrap().is_zero());
        assert!(ev("comm(K, K^-1)").unwrap().is_zero());
        let e = ev("E(+, 0, 1, 0)").unwrap();
        assert_eq!(e, family_e(FamilyParams::new(Sign::Plus, 0, 1, 0)));
        assert!(ev("nf(dcomm(E(+,1,0,0), E(+,1,0,-2), 1))").unwrap().project_x_free().is_zero());
    }

    #[test]
    fn scalars() {
        assert_eq!(ev("gamma").unwrap(), ev("u^2").unwrap());
        assert_eq!(ev("(q^2 - q^-2)/(q - q^-1)").unwrap(), ev("q + q^-1").unwrap());
        assert_eq!(ev("(2*K)^-2").unwrap(), Element::term(Monomial::k_pow(-2), RatFunc::from_ratio(1, 4).unwrap()));
    }

    #[test]
    fn errors() {
        assert_eq!(ev("a[0]").unwrap_err(), EvalError::ZeroHeisenbergIndex);
        assert!(matches!(ev("psi(1, 2)").unwrap_err(), EvalError::Arity { expected: 1, got: 2, .. }));
        assert!(matches!(ev("psi(q)").unwrap_err(), EvalError::NotAnInteger { .. }));
        assert!(matches!(ev("E(1, 0, 0, 0)").unwrap_err(), EvalError::NotASign { .. }));
        assert_eq!(ev("x+[0]^-1").unwrap_err(), EvalError::NonInvertible);
        assert_eq!(ev("K/x+[1]").unwrap_err(), EvalError::BadDivisor);
        assert!(matches!(ev("c(+, -1, 0)").unwrap_err(), EvalError::Domain(_)));
    }
}
