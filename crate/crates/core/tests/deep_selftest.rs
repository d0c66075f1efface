use dplane_core::selftest::{run_criterion, Config};

/// Deep genus scans for the formula-only criteria.
#[test]
fn deep_formula_criteria() {
    let cfg = Config { deep: true };
    for id in [2, 3, 4, 5, 6] {
        let outcome = run_criterion(id, cfg).expect("known criterion");
        println!("{outcome}");
        assert!(outcome.correct, "{outcome}");
    }
}

#[test]
fn unknown_criterion() {
    assert!(run_criterion(0, Config::default()).is_none());
    assert!(run_criterion(11, Config::default()).is_none());
}
