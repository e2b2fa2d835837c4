#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;
use uqsl2_core::algebra::{Element, Generator, Monomial, RedexSelector};
use uqsl2_core::coeff::{LaurentPoly, RatFunc};

pub fn random_poly(rng: &mut StdRng, max_terms: usize) -> LaurentPoly {
    let n = rng.gen_range(1..=max_terms);
    LaurentPoly::from_terms(
        (0..n).map(|_| ((rng.gen_range(-2..=2), rng.gen_range(-2..=2)), BigInt::from(rng.gen_range(-5..=5)))),
    )
}

pub fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
    loop {
        let den = random_poly(rng, 2);
        if !den.is_zero() {
            return RatFunc::new(random_poly(rng, 3), den).unwrap();
        }
    }
}

pub fn random_generator(rng: &mut StdRng, max_index: i64) -> Generator {
    match rng.gen_range(0..3) {
        0 => Generator::XPlus(rng.gen_range(-max_index..=max_index)),
        1 => Generator::XMinus(rng.gen_range(-max_index..=max_index)),
        _ => loop {
            if let Ok(g) = Generator::a(rng.gen_range(-max_index..=max_index)) {
                break g;
            }
        },
    }
}

pub fn random_monomial(rng: &mut StdRng, max_len: usize, max_index: i64) -> Monomial {
    let len = rng.gen_range(0..=max_len);
    Monomial::new((0..len).map(|_| random_generator(rng, max_index)).collect(), rng.gen_range(-2..=2))
}

/// A sum of up to `max_terms` random words with small polynomial coefficients.
pub fn random_element(rng: &mut StdRng, max_terms: usize, max_len: usize, max_index: i64) -> Element {
    let n = rng.gen_range(1..=max_terms);
    Element::from_terms((0..n).map(|_| {
        let c = RatFunc::from_poly(random_poly(rng, 2));
        (random_monomial(rng, max_len, max_index), c)
    }))
}

/// Picks a uniformly random redex at each step.
pub struct RandomSelector(pub StdRng);

impl RedexSelector for RandomSelector {
    fn select(&mut self, _: &Monomial, positions: &[usize]) -> usize {
        positions[self.0.gen_range(0..positions.len())]
    }
}
