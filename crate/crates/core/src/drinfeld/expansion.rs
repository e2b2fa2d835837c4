//! Term-group expansions of `[E^±_n(m, η), E^±_{-k-1}(l, θ)]_{K^p}`.

use crate::algebra::{normal_form, Element, Generator, Monomial, RelationMode};
use crate::coeff::RatFunc;

use super::currents::{phi, psi};
use super::family::Sign;

/// Parameters of the general two-family bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketParams {
    pub n: i64,
    pub k: i64,
    pub m: i64,
    pub l: i64,
    pub eta: i64,
    pub theta: i64,
    pub p: i64,
    pub sign: Sign,
}

impl BracketParams {
    /// The family specialisation `l = m`, `θ = η = -m - 2p`.
    pub fn family(n: i64, k: i64, m: i64, p: i64, sign: Sign) -> Self {
        let eta = -m - 2 * p;
        BracketParams { n, k, m, l: m, eta, theta: eta, p, sign }
    }
}

/// A factor `c · g · K^kexp` of one of the two-term family elements.
struct Piece {
    gen: Generator,
    kexp: i64,
    coeff: RatFunc,
}

/// `X K^a K^p Y K^b - Y K^b K^p X K^a` for single generators, written out
/// with the K-passing factor `K^e g = q^{2e·wt(g)} g K^e` applied by hand.
fn group(x: &Piece, y: &Piece, p: i64) -> Element {
    let kexp = x.kexp + y.kexp + p;
    let coeff = &x.coeff * &y.coeff;
    let forward = RatFunc::q_pow(2 * (x.kexp + p) * y.gen.weight());
    let backward = RatFunc::q_pow(2 * (y.kexp + p) * x.gen.weight());
    Element::from_terms([
        (Monomial::new(vec![x.gen, y.gen], kexp), &coeff * &forward),
        (Monomial::new(vec![y.gen, x.gen], kexp), -(&coeff * &backward)),
    ])
}

/// The four term groups, the printed display, and their difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralExpansion {
    /// `x⁺_n x⁻_{-k}` cross terms.
    pub cross_plus_first: Element,
    /// `x⁻_{n+1} x⁺_{-k-1}` cross terms.
    pub cross_minus_first: Element,
    /// `x⁺_n x⁺_{-k-1}` same-sign terms.
    pub same_plus: Element,
    /// `x⁻_{n+1} x⁻_{-k}` same-sign terms.
    pub same_minus: Element,
    /// Sum of the four groups.
    pub engine: Element,
    /// The expansion with its printed exponents.
    pub fixture: Element,
    /// `normal_form(engine - fixture)`.
    pub discrepancy: Element,
}

impl GeneralExpansion {
    pub fn groups(&self) -> [&Element; 4] {
        [&self.cross_plus_first, &self.cross_minus_first, &self.same_plus, &self.same_minus]
    }
}

fn two(g1: Generator, g2: Generator, qexp: i64, kexp: i64, c: &RatFunc) -> (Monomial, RatFunc) {
    (Monomial::new(vec![g1, g2], kexp), c * &RatFunc::q_pow(qexp))
}

/// The expansion as printed: cross groups with `K^{m+θ+p}`, `K^{η+l+p}` and
/// both same-sign groups with `K^{η+θ+p}`.
pub fn general_display_fixture(bp: &BracketParams) -> Element {
    use Generator::{XMinus, XPlus};
    let BracketParams { n, k, m, l, eta, theta, p, sign } = *bp;
    let s = sign.factor();
    let one = RatFunc::one();
    let g_nk = RatFunc::u_pow(s * (2 * (n + k + 1)));
    let g_n = RatFunc::u_pow(s * (2 * n + 1));
    let g_k = RatFunc::u_pow(s * (2 * k + 1));
    Element::from_terms([
        two(XPlus(n), XMinus(-k), -2 * m - 2 * p, m + theta + p, &g_nk),
        two(XMinus(-k), XPlus(n), 2 * theta + 2 * p, m + theta + p, &-&g_nk),
        two(XMinus(n + 1), XPlus(-k - 1), 2 * eta + 2 * p, eta + l + p, &one),
        two(XPlus(-k - 1), XMinus(n + 1), -2 * l - 2 * p, eta + l + p, &-&one),
        two(XPlus(n), XPlus(-k - 1), 2 * m + 2 * p, eta + theta + p, &g_n),
        two(XPlus(-k - 1), XPlus(n), 2 * l + 2 * p, eta + theta + p, &-&g_n),
        two(XMinus(n + 1), XMinus(-k), -2 * eta - 2 * p, eta + theta + p, &g_k),
        two(XMinus(-k), XMinus(n + 1), -2 * theta - 2 * p, eta + theta + p, &-&g_k),
    ])
}

/// Distributes the deformed bracket over the two-term factors and passes the
/// `K`-powers, without any `x`-reordering.
pub fn expand_general_commutator(bp: &BracketParams, mode: RelationMode) -> GeneralExpansion {
    use Generator::{XMinus, XPlus};
    let BracketParams { n, k, m, l, eta, theta, p, sign } = *bp;
    let s = sign.factor();
    let a_plus = Piece { gen: XPlus(n), kexp: m, coeff: RatFunc::u_pow(s * (2 * n + 1)) };
    let a_minus = Piece { gen: XMinus(n + 1), kexp: eta, coeff: RatFunc::one() };
    let b_plus = Piece { gen: XPlus(-k - 1), kexp: l, coeff: RatFunc::one() };
    let b_minus = Piece { gen: XMinus(-k), kexp: theta, coeff: RatFunc::u_pow(s * (2 * k + 1)) };

    let cross_plus_first = group(&a_plus, &b_minus, p);
    let cross_minus_first = group(&a_minus, &b_plus, p);
    let same_plus = group(&a_plus, &b_plus, p);
    let same_minus = group(&a_minus, &b_minus, p);
    let engine = &(&cross_plus_first + &cross_minus_first) + &(&same_plus + &same_minus);
    let fixture = general_display_fixture(bp);
    let discrepancy = normal_form(&(&engine - &fixture), mode);
    GeneralExpansion { cross_plus_first, cross_minus_first, same_plus, same_minus, engine, fixture, discrepancy }
}

/// The printed closed form for `l = m`, `θ = η = -m - 2p`:
///
/// `q^{-2(m+p)}/(q - q⁻¹) [γ^{±(n+k+1)}(γ^{(n+k)/2} ψ_{n-k} - γ^{-(n+k)/2} φ_{n-k})
///   - (γ^{-(n+k+2)/2} ψ_{n-k} - γ^{(n+k+2)/2} φ_{n-k})] K^p`
pub fn expand_specialized_commutator(n: i64, k: i64, m: i64, p: i64, sign: Sign) -> Element {
    let s = sign.factor();
    let (psi_nk, phi_nk) = (psi(n - k), phi(n - k));
    let u = RatFunc::u_pow;
    let outer = u(s * 2 * (n + k + 1));
    let mut bracket = Element::zero();
    bracket.add_scaled(&psi_nk, &(&outer * &u(n + k)));
    bracket.add_scaled(&phi_nk, &-(&outer * &u(-(n + k))));
    bracket.add_scaled(&psi_nk, &-u(-(n + k + 2)));
    bracket.add_scaled(&phi_nk, &u(n + k + 2));
    let prefactor = &RatFunc::q_pow(-2 * (m + p)) / &RatFunc::q_minus_q_inv();
    &bracket.scale(&prefactor) * &Element::k_pow(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{deformed_commutator, equals};
    use crate::drinfeld::family::{family_e_neg, family_e_pos};

    #[test]
    fn same_sign_group_balanced_when_m_equals_l() {
        let bp = BracketParams { n: 1, k: 2, m: 1, l: 1, eta: 0, theta: 2, p: -1, sign: Sign::Plus };
        let exp = expand_general_commutator(&bp, RelationMode::Strict);
        let coeffs: Vec<_> = exp.same_plus.terms().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[0], -&coeffs[1]);
    }

    #[test]
    fn cross_group_k_exponent() {
        let bp = BracketParams { n: 0, k: 1, m: 2, l: -1, eta: 1, theta: -2, p: 1, sign: Sign::Minus };
        let exp = expand_general_commutator(&bp, RelationMode::Strict);
        assert!(exp.cross_plus_first.terms().all(|(mono, _)| mono.kexp == bp.m + bp.theta + bp.p));
        // the printed same-sign exponent η+θ+p differs from m+l+p here
        assert!(!exp.discrepancy.is_zero());
    }

    #[test]
    fn expansion_matches_direct_bracket() {
        let bp = BracketParams { n: 1, k: 0, m: -1, l: 2, eta: 0, theta: 1, p: 2, sign: Sign::Plus };
        let a = family_e_pos(bp.n, bp.m, bp.eta, bp.sign).unwrap();
        let b = family_e_neg(bp.k, bp.l, bp.theta, bp.sign).unwrap();
        let direct = deformed_commutator(&a, &b, bp.p, RelationMode::Strict);
        let exp = expand_general_commutator(&bp, RelationMode::Strict);
        assert!(equals(&direct, &exp.engine, RelationMode::Strict));
    }

    #[test]
    fn specialized_fixture_vanishes_in_claimed_regimes() {
        for (n, k) in [(0, 1), (1, 3), (2, 4)] {
            assert!(expand_specialized_commutator(n, k, 1, -1, Sign::Plus).is_zero());
            assert!(expand_specialized_commutator(k, n, 0, 2, Sign::Minus).is_zero());
        }
        assert!(!expand_specialized_commutator(0, 0, 0, 1, Sign::Plus).is_zero());
    }
}
