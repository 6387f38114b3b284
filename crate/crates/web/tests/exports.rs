use serde_json::Value;

use qfib_web::{explore_word, qfib_polynomial, verify};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn polynomial_with_profile() {
    let v = parse(qfib_polynomial("I", 4, "oracle"));
    assert_eq!(v["text"], "x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4");
    assert_eq!(v["count"], "5");
    let profile: Vec<(i32, String)> = serde_json::from_value(v["q_profile"].clone()).unwrap();
    assert_eq!(profile, vec![(4, "1".into()), (5, "3".into()), (6, "1".into())]);
    let v = parse(qfib_polynomial("D'", 5, "oracle"));
    assert!(v["text"].as_str().unwrap().contains("z1"));
}

#[test]
fn polynomial_errors_are_json() {
    assert!(parse(qfib_polynomial("Q", 4, "oracle"))["error"].is_string());
    assert!(parse(qfib_polynomial("I", 40, "oracle"))["error"].is_string());
    assert!(parse(qfib_polynomial("RB", 4, "recursion"))["error"].is_string());
}

#[test]
fn word_explorer() {
    let v = parse(explore_word("DSDSS"));
    assert_eq!(v["reverse_layered"], "6753421");
    assert_eq!(v["layered"], "2135467");
    assert_eq!(v["weight_inv"], "x^3*y^2*q^19");
    let v = parse(explore_word("SDSDSD"));
    assert_eq!(v["interleaved"], "SDDSSD");
    let kinds: Vec<&str> = v["prefixes"].as_array().unwrap().iter().map(|p| p["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["SD^2S", "RESIDUAL"]);
    assert!(parse(explore_word("SXD"))["error"].is_string());
}

#[test]
fn verify_report() {
    let v = parse(verify("T4.3a", 6));
    assert_eq!(v["instances"].as_array().unwrap().len(), 7);
    assert_eq!(v["holding_readings"][0], "as printed");
    assert!(parse(verify("T4.2", 6))["error"].is_string());
}
