use std::fmt;

use crate::algebra::{Element, Generator, Monomial};
use crate::coeff::RatFunc;

use super::DrinfeldError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("expected `+` or `-`, got `{other}`")),
        }
    }
}

/// Selects `E^sign_{p,index}(m)`. Indices `n ≥ 0` pick the positive branch,
/// indices `-n-1 ≤ -1` the negative one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyParams {
    pub sign: Sign,
    pub p: i64,
    pub m: i64,
    pub index: i64,
}

impl FamilyParams {
    pub fn new(sign: Sign, p: i64, m: i64, index: i64) -> Self {
        FamilyParams { sign, p, m, index }
    }

    /// The common `K`-exponent `-m - 2p` of the second term.
    pub fn eta(&self) -> i64 {
        -self.m - 2 * self.p
    }
}

fn term(g: Generator, kexp: i64, c: RatFunc) -> Element {
    Element::term(Monomial::new(vec![g], kexp), c)
}

/// `E^±_n(m, η) = γ^{±(n+½)} x⁺_n K^m + x⁻_{n+1} K^η`.
pub fn family_e_pos(n: i64, m: i64, eta: i64, sign: Sign) -> Result<Element, DrinfeldError> {
    if n < 0 {
        return Err(DrinfeldError::NegativeIndex(n));
    }
    let gamma = RatFunc::u_pow(sign.factor() * (2 * n + 1));
    Ok(&term(Generator::XPlus(n), m, gamma) + &term(Generator::XMinus(n + 1), eta, RatFunc::one()))
}

/// `E^±_{-n-1}(l, θ) = x⁺_{-n-1} K^l + γ^{±(n+½)} x⁻_{-n} K^θ`.
pub fn family_e_neg(n: i64, l: i64, theta: i64, sign: Sign) -> Result<Element, DrinfeldError> {
    if n < 0 {
        return Err(DrinfeldError::NegativeIndex(n));
    }
    let gamma = RatFunc::u_pow(sign.factor() * (2 * n + 1));
    Ok(&term(Generator::XPlus(-n - 1), l, RatFunc::one()) + &term(Generator::XMinus(-n), theta, gamma))
}

/// `E^±_{p,n}(m) = E^±_n(m, -m-2p)` and `E^±_{p,-n-1}(m) = E^±_{-n-1}(m, -m-2p)`.
pub fn family_e(fp: FamilyParams) -> Element {
    let result = if fp.index >= 0 {
        family_e_pos(fp.index, fp.m, fp.eta(), fp.sign)
    } else {
        family_e_neg(-fp.index - 1, fp.m, fp.eta(), fp.sign)
    };
    result.expect("branch index is nonnegative")
}

/// The claimed central values, exactly as printed:
///
/// * `c⁺_n(m) = q^{-2(m-1)}/(q - q⁻¹) · γ^{2n+1}(γ^n - γ^{-n-1})`
/// * `c⁻_n(m) = q^{-2(m+1)}/(q - q⁻¹) · γ^{-n-1}(γ^{2n+2} - γ^{-n})`
///
/// They are comparison fixtures, not derived values.
pub fn central_c(n: i64, m: i64, sign: Sign) -> Result<Element, DrinfeldError> {
    if n < 0 {
        return Err(DrinfeldError::NegativeIndex(n));
    }
    let g = RatFunc::gamma_pow;
    let value = match sign {
        Sign::Plus => &(&RatFunc::q_pow(-2 * (m - 1)) * &g(2 * n + 1)) * &(g(n) - g(-n - 1)),
        Sign::Minus => &(&RatFunc::q_pow(-2 * (m + 1)) * &g(-n - 1)) * &(g(2 * n + 2) - g(-n)),
    };
    Ok(Element::scalar(&value / &RatFunc::q_minus_q_inv()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(g: Generator, kexp: i64, upow: i64) -> Element {
        term(g, kexp, RatFunc::u_pow(upow))
    }

    use Generator::{XMinus, XPlus};

    #[test]
    fn positive_branch() {
        assert_eq!(family_e_pos(0, 0, 0, Sign::Plus).unwrap(), &e(XPlus(0), 0, 1) + &e(XMinus(1), 0, 0));
        assert_eq!(family_e_pos(1, 2, -4, Sign::Minus).unwrap(), &e(XPlus(1), 2, -3) + &e(XMinus(2), -4, 0));
        assert_eq!(family_e_pos(0, 0, 0, Sign::Minus).unwrap(), &e(XPlus(0), 0, -1) + &e(XMinus(1), 0, 0));
        assert_eq!(family_e_pos(-1, 0, 0, Sign::Plus), Err(DrinfeldError::NegativeIndex(-1)));
    }

    #[test]
    fn negative_branch() {
        assert_eq!(family_e_neg(0, 0, -2, Sign::Plus).unwrap(), &e(XPlus(-1), 0, 0) + &e(XMinus(0), -2, 1));
        assert_eq!(family_e_neg(2, 1, 1, Sign::Minus).unwrap(), &e(XPlus(-3), 1, 0) + &e(XMinus(-2), 1, -5));
        assert!(family_e_neg(-2, 0, 0, Sign::Minus).is_err());
    }

    #[test]
    fn family_dispatch() {
        let fp = |sign, p, m, index| family_e(FamilyParams::new(sign, p, m, index));
        assert_eq!(fp(Sign::Plus, 0, 0, 0), &e(XPlus(0), 0, 1) + &e(XMinus(1), 0, 0));
        assert_eq!(fp(Sign::Plus, 1, 0, -1), &e(XPlus(-1), 0, 0) + &e(XMinus(0), -2, 1));
        assert_eq!(fp(Sign::Minus, -1, 2, 0), &e(XPlus(0), 2, -1) + &e(XMinus(1), 0, 0));
    }

    #[test]
    fn central_fixtures() {
        let qm_inv = RatFunc::q_minus_q_inv().inv().unwrap();
        let c = central_c(0, 1, Sign::Plus).unwrap();
        assert_eq!(c, Element::scalar(&(RatFunc::u_pow(2) - RatFunc::one()) * &qm_inv));
        let c = central_c(0, 0, Sign::Minus).unwrap();
        let expected = &(&RatFunc::q_pow(-2) * &RatFunc::u_pow(-2)) * &(RatFunc::u_pow(4) - RatFunc::one());
        assert_eq!(c, Element::scalar(&expected * &qm_inv));
        assert!(central_c(-1, 0, Sign::Plus).is_err());
    }
}
