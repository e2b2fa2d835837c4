mod common;

use rand::rngs::StdRng;
use rand::SeedableRng;
use uqsl2_cli::{eval_str, from_json, print_element, to_json, EvalContext, Format};
use uqsl2_core::algebra::{normal_form, Element, RelationMode};
use uqsl2_core::drinfeld::{central_c, phi, psi, Sign};

use common::random_element;

#[test]
fn text_round_trip_on_random_elements() {
    let mut rng = StdRng::seed_from_u64(0xc1);
    for case in 0..400 {
        let e = random_element(&mut rng);
        let text = print_element(&e, Format::Text);
        let back = eval_str(&text, &EvalContext::default()).unwrap_or_else(|err| panic!("case {case}: {text}: {err}"));
        assert_eq!(back, e, "case {case}: {text}");
    }
}

#[test]
fn json_round_trip_is_bit_exact() {
    let mut rng = StdRng::seed_from_u64(0xc2);
    for _ in 0..400 {
        let e = random_element(&mut rng);
        let json = to_json(&e);
        let back = from_json(&json).unwrap();
        assert_eq!(back, e);
        assert_eq!(to_json(&back), json);
    }
}

#[test]
fn round_trip_on_engine_output() {
    let mut samples = vec![psi(4), phi(-3), central_c(2, -1, Sign::Minus).unwrap()];
    let bracket = eval_str("dcomm(E(+,1,0,0), E(+,1,0,-1), -1)", &EvalContext::default()).unwrap();
    samples.push(bracket);
    samples.push(normal_form(&eval_str("x-[1]*x+[-2]*a[2]", &EvalContext::default()).unwrap(), RelationMode::Strict));
    for e in samples {
        assert_eq!(eval_str(&e.to_string(), &EvalContext::default()).unwrap(), e);
        assert_eq!(from_json(&to_json(&e)).unwrap(), e);
    }
}

#[test]
fn printing_is_deterministic() {
    let mut a = StdRng::seed_from_u64(9);
    let mut b = StdRng::seed_from_u64(9);
    for _ in 0..50 {
        let (x, y) = (random_element(&mut a), random_element(&mut b));
        for f in [Format::Text, Format::Latex, Format::Json] {
            assert_eq!(print_element(&x, f), print_element(&y, f));
        }
    }
    assert_eq!(to_json(&Element::zero()), r#"{"terms":[]}"#);
}
