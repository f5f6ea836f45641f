//! One line per acceptance criterion; exits nonzero if any fails.

use graham::oracle::SweepOptions;
use graham::verify::{run_all, Expectations};

fn main() {
    let results = run_all(&Expectations::published(), &SweepOptions::default());
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
