//! Runs all twelve acceptance criteria and prints one line for each. Built
//! without the test harness so the lines always reach the output.

use airframe::acceptance::{run_all, DEFAULT_SEED};

fn main() {
    let results = run_all(DEFAULT_SEED);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.number).collect();
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    if results.len() != 12 || !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
