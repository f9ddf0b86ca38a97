//! Runs every verification suite at a small degree.

use symfrob::verify::{run_suite, Suite};

fn main() {
    let maxdeg = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let mut ok = true;
    for suite in Suite::ALL {
        let report = run_suite(suite, maxdeg);
        ok &= report.passed();
        print!("{report}");
    }
    std::process::exit(if ok { 0 } else { 1 });
}
