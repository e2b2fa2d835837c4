#![allow(dead_code)]

use std::process::{Command, Output};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;
use uqsl2_core::algebra::{Element, Generator, Monomial};
use uqsl2_core::coeff::{LaurentPoly, RatFunc};

fn random_poly(rng: &mut StdRng, max_terms: usize) -> LaurentPoly {
    let n = rng.gen_range(1..=max_terms);
    LaurentPoly::from_terms(
        (0..n).map(|_| ((rng.gen_range(-3..=3), rng.gen_range(-3..=3)), BigInt::from(rng.gen_range(-30..=30)))),
    )
}

/// Polynomial or proper ratio, with odd and even `u`-powers.
fn random_coeff(rng: &mut StdRng) -> RatFunc {
    loop {
        let den = if rng.gen_bool(0.5) { LaurentPoly::one() } else { random_poly(rng, 2) };
        if let Ok(c) = RatFunc::new(random_poly(rng, 3), den) {
            if !c.is_zero() {
                return c;
            }
        }
    }
}

fn random_generator(rng: &mut StdRng) -> Generator {
    match rng.gen_range(0..3) {
        0 => Generator::XPlus(rng.gen_range(-4..=4)),
        1 => Generator::XMinus(rng.gen_range(-4..=4)),
        _ => loop {
            if let Ok(g) = Generator::a(rng.gen_range(-4..=4)) {
                break g;
            }
        },
    }
}

/// Arbitrary (not necessarily normal) elements.
pub fn random_element(rng: &mut StdRng) -> Element {
    let n = rng.gen_range(0..=4);
    Element::from_terms((0..n).map(|_| {
        let len = rng.gen_range(0..=4);
        let word = (0..len).map(|_| random_generator(rng)).collect();
        (Monomial::new(word, rng.gen_range(-3..=3)), random_coeff(rng))
    }))
}

pub fn uqsl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqsl2")).args(args).env_remove("UQSL2_MODE").output().expect("binary runs")
}
