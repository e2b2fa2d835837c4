use uqsl2_core::algebra::{
    commutator, deformed_commutator, equals, is_central, is_normal, normal_form, Element,
    RelationMode::{self, AbelianX, Strict},
};
use uqsl2_core::coeff::{qint, RatFunc};
use uqsl2_core::drinfeld::{phi, psi};

fn qm_inv() -> RatFunc {
    RatFunc::q_minus_q_inv().inv().unwrap()
}

fn prod(factors: &[Element]) -> Element {
    factors.iter().fold(Element::one(), |acc, f| &acc * f)
}

#[test]
fn heisenberg_mode_passes_x_plus() {
    let lhs = &Element::a(1) * &Element::x_plus(0);
    let rhs = &(&Element::x_plus(0) * &Element::a(1)) + &Element::x_plus(1).scale(&(&qint(2) * &RatFunc::u_pow(-1)));
    for mode in [Strict, AbelianX] {
        assert_eq!(normal_form(&lhs, mode), rhs);
    }
}

#[test]
fn heisenberg_mode_passes_x_minus() {
    // a_{-2} x⁻_1 = x⁻_1 a_{-2} - [-4]/(-2) γ^{1} x⁻_{-1}
    let lhs = &Element::a(-2) * &Element::x_minus(1);
    let c = &(&qint(4) * &RatFunc::from_ratio(1, 2).unwrap()) * &RatFunc::u_pow(2);
    let rhs = &(&Element::x_minus(1) * &Element::a(-2)) - &Element::x_minus(-1).scale(&c);
    assert_eq!(normal_form(&lhs, Strict), rhs);
}

#[test]
fn heisenberg_pair_central_correction() {
    let lhs = &Element::a(1) * &Element::a(-1);
    let central = &(&qint(2) * &(RatFunc::u_pow(2) - RatFunc::u_pow(-2))) * &qm_inv();
    let rhs = &(&Element::a(-1) * &Element::a(1)) + &Element::scalar(central.clone());
    assert_eq!(normal_form(&lhs, Strict), rhs);
    assert_eq!(commutator(&Element::a(1), &Element::a(-1), Strict), Element::scalar(central));
    // non-opposite modes commute without correction
    assert_eq!(normal_form(&(&Element::a(2) * &Element::a(-1)), Strict), &Element::a(-1) * &Element::a(2));
}

#[test]
fn cross_relation_at_zero_modes() {
    let lhs = &Element::x_minus(0) * &Element::x_plus(0);
    let correction = (&Element::k_pow(1) - &Element::k_pow(-1)).scale(&qm_inv());
    let rhs = &(&Element::x_plus(0) * &Element::x_minus(0)) - &correction;
    assert_eq!(normal_form(&lhs, Strict), rhs);
    assert_eq!(normal_form(&lhs, Strict).project_x_free(), -&correction);
    assert!(equals(&(&lhs + &correction), &(&Element::x_plus(0) * &Element::x_minus(0)), Strict));
}

#[test]
fn cross_relation_uses_currents() {
    // x⁻_1 x⁺_2 = x⁺_2 x⁻_1 - (γ^{1/2} ψ_3 - γ^{-1/2} φ_3)/(q - q⁻¹), φ_3 = 0
    let lhs = &Element::x_minus(1) * &Element::x_plus(2);
    let expected = &(&Element::x_plus(2) * &Element::x_minus(1)) - &psi(3).scale(&(&RatFunc::u_pow(1) * &qm_inv()));
    assert_eq!(normal_form(&lhs, Strict), expected);
    let lhs = &Element::x_minus(-1) * &Element::x_plus(-2);
    let expected = &(&Element::x_plus(-2) * &Element::x_minus(-1)) + &phi(-3).scale(&(&RatFunc::u_pow(1) * &qm_inv()));
    assert_eq!(normal_form(&lhs, Strict), expected);
}

#[test]
fn normal_input_is_fixed() {
    let e = &prod(&[Element::x_plus(2), Element::x_plus(-1), Element::x_minus(0), Element::a(-1), Element::a(3)])
        + &Element::k_pow(-2).scale(&RatFunc::q_pow(5));
    assert!(is_normal(&e, Strict));
    assert_eq!(normal_form(&e, Strict), e);
}

#[test]
fn normal_form_is_idempotent_on_long_words() {
    let w = prod(&[
        Element::a(2),
        Element::x_minus(1),
        Element::k_pow(1),
        Element::x_plus(-1),
        Element::a(-1),
        Element::x_plus(0),
    ]);
    for mode in [Strict, AbelianX] {
        let nf = normal_form(&w, mode);
        assert!(is_normal(&nf, mode));
        assert_eq!(normal_form(&nf, mode), nf);
    }
}

#[test]
fn commutator_examples() {
    assert!(commutator(&Element::k_pow(1), &Element::a(5), Strict).is_zero());
    let x = &Element::x_plus(1) + &Element::a(-2);
    assert!(commutator(&x, &x, Strict).is_zero());
}

#[test]
fn deformed_commutator_examples() {
    let a = &Element::x_plus(1) + &Element::x_minus(-2);
    let b = &Element::a(2) + &Element::k_pow(1);
    for mode in [Strict, AbelianX] {
        assert_eq!(deformed_commutator(&a, &b, 0, mode), commutator(&a, &b, mode));
        for p in -2..=2 {
            assert!(deformed_commutator(&a, &a, p, mode).is_zero());
        }
    }
    // [K, x⁺_0]_{K^p} = (q^{2(p+1)} - 1) x⁺_0 K^{p+1}
    for p in -3..=3 {
        let lhs = deformed_commutator(&Element::k_pow(1), &Element::x_plus(0), p, Strict);
        let rhs = (&Element::x_plus(0) * &Element::k_pow(p + 1)).scale(&(RatFunc::q_pow(2 * (p + 1)) - RatFunc::one()));
        assert_eq!(lhs, rhs, "p = {p}");
    }
}

#[test]
fn centrality() {
    let gamma_poly = Element::scalar(RatFunc::u_pow(6) - RatFunc::u_pow(-2));
    assert!(is_central(&gamma_poly, Strict));
    assert!(!is_central(&Element::k_pow(1), Strict));
    assert!(!is_central(&Element::x_plus(0), Strict));
}

#[test]
fn mode_distinguishes_same_sign_order() {
    let a = &Element::x_plus(0) * &Element::x_plus(1);
    let b = &Element::x_plus(1) * &Element::x_plus(0);
    assert!(!equals(&a, &b, Strict));
    assert!(equals(&a, &b, AbelianX));
}

#[test]
fn equality_is_reflexive() {
    let a = prod(&[Element::x_minus(3), Element::a(1), Element::x_plus(-3)]);
    for mode in [RelationMode::Strict, RelationMode::AbelianX] {
        assert!(equals(&a, &a, mode));
    }
}
