//! Randomized verification suite: every registered check at desk scale.
//!
//! Assertive checks (trivial channel, forward data processing, pure/mixed
//! pointer equivalence, separable reduction) must pass; the reverse-claims
//! check is exploratory and only records how large the reverse-direction
//! gaps get.

use qmi::verifier::{default_suite_configs, run_suite};

fn main() -> qmi::error::Result<()> {
    let suite = run_suite(7, &default_suite_configs())?;
    println!(
        "{:<24} {:>6} {:>6} {:>14} {:>12}",
        "check", "run", "fail", "max violation", "kind"
    );
    for r in &suite.reports {
        println!(
            "{:<24} {:>6} {:>6} {:>14.3e} {:>12}",
            r.check,
            r.instances_run,
            r.fail_count,
            r.max_violation,
            if r.exploratory { "exploratory" } else { "assertive" }
        );
    }
    println!(
        "all assertive checks passed: {}",
        suite.all_assertive_passed
    );
    Ok(())
}
