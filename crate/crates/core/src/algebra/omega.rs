use super::element::Element;
use super::word::{Generator, Monomial};

/// Image of a single generator under ω, with the sign it contributes.
///
/// `a_n ↦ -a_{-n}`: without the sign ω would send the relation
/// `[a_n, x±_k] = ±[2n]/n γ^{∓|n|/2} x±_{n+k}` to its negative, and would not
/// carry ψ_m to φ_{-m}.
fn omega_generator(g: Generator) -> (Generator, bool) {
    match g {
        Generator::XPlus(k) => (Generator::XMinus(-k), false),
        Generator::XMinus(k) => (Generator::XPlus(-k), false),
        Generator::A(n) => (Generator::A(-n), true),
    }
}

/// The involution `K ↦ K⁻¹, γ ↦ γ⁻¹, x±_n ↦ x∓_{-n}, a_n ↦ -a_{-n}`,
/// applied generator by generator with word order preserved. `q` is fixed.
pub fn omega(a: &Element) -> Element {
    Element::from_terms(a.terms().map(|(m, c)| {
        let mut negate = false;
        let word = m
            .word
            .iter()
            .map(|&g| {
                let (image, flips) = omega_generator(g);
                negate ^= flips;
                image
            })
            .collect();
        let c = c.invert_u();
        let c = if negate { -&c } else { c };
        (Monomial::new(word, -m.kexp), c)
    }))
}
