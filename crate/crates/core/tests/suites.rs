use qsharm::verify::{run_suite, Suite, DEFAULT_TWO_L_MAX};

#[test]
fn every_suite_passes_at_default_bound() {
    for suite in Suite::ALL {
        let report = run_suite(suite, DEFAULT_TWO_L_MAX);
        assert!(report.passed(), "{}:\n{}", suite.name(), report.to_text());
        assert!(report.pass_count > 0);
    }
}
