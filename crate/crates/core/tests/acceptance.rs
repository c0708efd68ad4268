//! Full acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Tolerances live in `dyadgen::verify`.

use std::process::ExitCode;

use dyadgen::verify::{Level, Suite};

fn main() -> ExitCode {
    // `cargo test -- --list` and filters are not meaningful here.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let suite = Suite::new(Level::Full).expect("composition table");
    println!("acceptance suite (full level)");
    let report = suite.run(&[], |outcome| println!("{outcome}"));
    let passed = report.outcomes.iter().filter(|o| o.passed).count();
    println!("{passed} of {} criteria passed", report.outcomes.len());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
