//! Programmatic access to the verification suite (the same checks the
//! `reproduce-paper` CLI command runs), here with a reduced corpus so the
//! example finishes quickly.
//!
//! ```bash
//! cargo run --example full_report
//! ```

use bisectrix::report::{run_report, ReportOptions};

fn main() {
    let opts = ReportOptions {
        corpus: 100,
        ..ReportOptions::default()
    };
    let report = run_report(&opts);
    print!("{}", report.render_table());
    println!(
        "\nseed {}, prime bound {}, corpus {} -> passed: {}",
        report.seed, report.prime_bound, report.corpus, report.passed
    );
}
