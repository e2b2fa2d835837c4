//! Coefficients of the Cartan currents
//! `Σ ψ_m z^{-m} = K exp((q - q⁻¹) Σ_{k≥1} a_k z^{-k})` and
//! `Σ φ_{-m} z^m = K⁻¹ exp(-(q - q⁻¹) Σ_{k≥1} a_{-k} z^k)`.
//!
//! Positive modes commute among themselves (and so do negative ones), so the
//! exponential expands as a sum over partitions with multinomial weights.

use num_bigint::BigInt;

use crate::algebra::{Element, Generator, Monomial};
use crate::coeff::RatFunc;

/// Partitions of `n` as `(part, multiplicity)` lists, ascending in part.
pub fn partitions(n: u32) -> Vec<Vec<(u32, u32)>> {
    fn go(rest: u32, min_part: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in min_part..=rest {
            for mult in 1..=rest / part {
                acc.push((part, mult));
                go(rest - part * mult, part + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Σ_λ t^{ℓ(λ)} / Π m_j! · Π a_{sign·j}^{m_j} · K^{kexp}` over partitions of
/// `level`, with a-factors in ascending index order.
fn current_coefficient(level: u32, t: &RatFunc, mode_sign: i64, kexp: i64) -> Element {
    let mut out = Element::zero();
    for lambda in partitions(level) {
        let length: u32 = lambda.iter().map(|&(_, m)| m).sum();
        let denom: BigInt = lambda.iter().map(|&(_, m)| factorial(m)).product();
        let mut coeff = t.pow(length as i64).expect("positive power");
        coeff = &coeff * &RatFunc::from_ratio(1, denom).expect("factorials are nonzero");
        let mut word: Vec<Generator> = lambda
            .iter()
            .flat_map(|&(part, mult)| {
                let g = Generator::a(mode_sign * part as i64).expect("parts are positive");
                std::iter::repeat_n(g, mult as usize)
            })
            .collect();
        word.sort_by_key(|g| g.index());
        out.add_term(Monomial::new(word, kexp), coeff);
    }
    out
}

/// `ψ_m`; zero for `m < 0`.
pub fn psi(m: i64) -> Element {
    if m < 0 {
        return Element::zero();
    }
    current_coefficient(m as u32, &RatFunc::q_minus_q_inv(), 1, 1)
}

/// `φ_m`; zero for `m > 0`.
pub fn phi(m: i64) -> Element {
    if m > 0 {
        return Element::zero();
    }
    current_coefficient((-m) as u32, &-RatFunc::q_minus_q_inv(), -1, -1)
}
