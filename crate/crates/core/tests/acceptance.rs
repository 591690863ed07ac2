//! The acceptance suite: one test per criterion plus a summary run that
//! prints a pass/fail line for each. Run with `--nocapture` to see the
//! lines on success.

use tournalink::rules::Classifier;
use tournalink::verify;

fn assert_pass(result: verify::CriterionResult) {
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion1_enumeration_counts() {
    assert_pass(verify::criterion1_enumeration_counts());
}

#[test]
fn criterion2_table8() {
    assert_pass(verify::criterion2_table8(&mut Classifier::default()));
}

#[test]
fn criterion3_larger_tables() {
    assert_pass(verify::criterion3_larger_tables(&mut Classifier::default()));
}

#[test]
fn criterion4_cg_data() {
    assert_pass(verify::criterion4_cg_data());
}

#[test]
fn criterion5_certificate_engine() {
    assert_pass(verify::criterion5_certificate_engine());
}

#[test]
fn criterion6_constructions() {
    assert_pass(verify::criterion6_constructions());
}

#[test]
fn criterion7_two_sided_sequence() {
    assert_pass(verify::criterion7_two_sided_sequence(
        &mut Classifier::default(),
    ));
}

#[test]
fn criterion8_property_suites() {
    assert_pass(verify::criterion8_property_suites(
        &mut Classifier::default(),
    ));
}

#[test]
fn criterion9_lower_bound() {
    assert_pass(verify::criterion9_lower_bound(&mut Classifier::default()));
}

#[test]
fn full_suite_in_order() {
    let results = verify::run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<&verify::CriterionResult> = results.iter().filter(|r| !r.passed).collect();
    assert!(
        failed.is_empty(),
        "{} criteria failed:\n{}",
        failed.len(),
        failed
            .iter()
            .map(|r| r.line())
            .collect::<Vec<_>>()
            .join("\n")
    );
}
