//! The self-verification suite as a library call: every closed form in the
//! crate is re-derived through an independent path (exact big-integer
//! recurrences, brute-force word products, direct longitude evaluation,
//! Alexander sections) and compared under named tolerances. This example
//! runs the full suite on one elliptic and one hyperbolic knot and prints
//! the per-check report.
//!
//! Run with `cargo run --example oracle_suite`.

use twistlocus::checks::{default_knot_grid, verify_knot, Tolerances};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    let tols = Tolerances::default();
    println!("named tolerances:");
    for (name, value) in tols.as_map() {
        println!("  {name:20} {value:.1e}");
    }
    println!("\ncanonical parameter grid: {:?}\n", default_knot_grid().map(|k| k.to_string()));

    for k in [KnotParams::new(2, 2)?, KnotParams::new(-2, 2)?] {
        println!("{k}:");
        let results = verify_knot(k, &tols, 128, None);
        for r in &results {
            println!(
                "  {} {:32} {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            );
        }
        let failed = results.iter().filter(|r| !r.passed).count();
        println!("  -> {} checks, {failed} failed\n", results.len());
        assert_eq!(failed, 0);
    }
    Ok(())
}
