//! Fixed workloads shared by the criterion benches.

use uqsl2_core::{family_e, Element, FamilyParams, Sign};

/// A length-`len` word alternating `x⁻`, `a` and `x⁺` generators, the
/// slowest shape to normal-order.
pub fn alternating_word(len: usize) -> Element {
    (0..len)
        .map(|i| match i % 3 {
            0 => Element::x_minus(i as i64 % 3),
            1 => Element::a(1 + i as i64 % 2),
            _ => Element::x_plus(-(i as i64 % 3)),
        })
        .fold(Element::one(), |acc, g| &acc * &g)
}

/// The pair of family elements entering the `(n, k)` bracket.
pub fn family_pair(sign: Sign, n: i64, k: i64, m: i64, p: i64) -> (Element, Element) {
    (family_e(FamilyParams::new(sign, p, m, n)), family_e(FamilyParams::new(sign, p, m, -k - 1)))
}
