//! Runs every acceptance criterion and prints one line per criterion.

use nonrep::suite::{criteria, outcome_line, run_criterion};

fn main() {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for c in criteria() {
        if filter
            .as_deref()
            .is_some_and(|f| !nonrep::suite::selects(Some(f), &c))
        {
            continue;
        }
        let outcome = run_criterion(&c);
        println!("criterion {}", outcome_line(&outcome));
        if !outcome.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
